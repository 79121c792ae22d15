"""Free-space optical link budgets and entanglement-distribution rates."""

from ._qlink import *  # noqa: F401,F403
from ._qlink import __version__  # noqa: F401
