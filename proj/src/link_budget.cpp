#include "qlink/link_budget.hpp"

#include "qlink/errors.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace qlink {

namespace {

void validate_chain(const OpticalChain& chain) {
    if (!(chain.tx_aperture_m > 0.0 && chain.rx_aperture_m > 0.0))
        throw std::invalid_argument("apertures must be > 0");
    if (!(chain.trans_tx > 0.0 && chain.trans_tx <= 1.0))
        throw std::invalid_argument("trans_tx must be in (0,1]");
    if (!(chain.trans_rx > 0.0 && chain.trans_rx <= 1.0))
        throw std::invalid_argument("trans_rx must be in (0,1]");
    if (!(chain.pointing_loss >= 0.0 && chain.pointing_loss < 1.0))
        throw std::invalid_argument("pointing_loss must be in [0,1)");
    if (!(chain.additional_loss_db >= 0.0))
        throw std::invalid_argument("additional_loss_db must be >= 0");
}

} // namespace

LinkBudget attenuation_db(LinkKind kind, const OpticalChain& chain, double wavelength_m,
                          const LinkGeometry& geometry, double r0_m,
                          const AbsorptionTable& absorption, bool clamp_absorption) {
    validate_chain(chain);
    if (!(wavelength_m > 0.0)) throw std::invalid_argument("wavelength must be > 0");
    if (!(geometry.slant_range_m > 0.0)) throw std::invalid_argument("slant range must be > 0");

    const double range = geometry.slant_range_m;
    const double theta_tx = wavelength_m / chain.tx_aperture_m;
    double theta_atm = 0.0;
    if (kind == LinkKind::Uplink) {
        if (!(r0_m > 0.0)) throw std::invalid_argument("uplink requires r0 > 0");
        theta_atm = wavelength_m / r0_m;
    }

    LinkBudget budget;
    budget.far_field_ok = range >= 10.0 * chain.tx_aperture_m * chain.tx_aperture_m / wavelength_m;

    const double divergence_sq = theta_tx * theta_tx + theta_atm * theta_atm;
    const double geometric_ratio =
        range * range * divergence_sq / (chain.rx_aperture_m * chain.rx_aperture_m);
    // a beam smaller than the receive aperture collects fully; no negative
    // diffraction loss
    budget.geometric_clamped = geometric_ratio < 1.0;
    budget.geometric_db = 10.0 * std::log10(std::max(geometric_ratio, 1.0));

    budget.optics_db =
        10.0 * std::log10(1.0 / (chain.trans_tx * (1.0 - chain.pointing_loss) * chain.trans_rx));

    if (kind == LinkKind::Intersatellite) {
        budget.atmosphere_db = 0.0;
    } else {
        double zenith = geometry.zenith_angle_rad;
        if (clamp_absorption && (zenith > absorption.max_slant_zenith_rad || zenith < 0.0)) {
            zenith = std::clamp(zenith, 0.0, absorption.max_slant_zenith_rad);
            budget.absorption_clamped = true;
        }
        budget.atmosphere_db = slant_absorption_db(absorption, wavelength_m, zenith);
    }

    budget.additional_db = chain.additional_loss_db;
    budget.total_db =
        budget.geometric_db + budget.optics_db + budget.atmosphere_db + budget.additional_db;
    return budget;
}

double transmission_probability(double total_db) {
    if (!(total_db >= 0.0)) throw std::invalid_argument("attenuation must be >= 0 dB");
    return std::pow(10.0, -total_db / 10.0);
}

double transmission_probability(const LinkBudget& budget) {
    return transmission_probability(budget.total_db);
}

double double_link_probability(double per_link_db) {
    if (!(per_link_db >= 0.0)) throw std::invalid_argument("attenuation must be >= 0 dB");
    return std::pow(10.0, -2.0 * per_link_db / 10.0);
}

double double_link_probability(const LinkBudget& per_link_budget) {
    return double_link_probability(per_link_budget.total_db);
}

double solve_min_aperture(LinkKind kind, FixedSide fixed_side, double fixed_aperture_m,
                          double target_db, double wavelength_m, const LinkGeometry& geometry,
                          double r0_m, const AbsorptionTable& absorption, ApertureBounds bounds,
                          const OpticalChain& base_chain) {
    if (!(fixed_aperture_m > 0.0)) throw std::invalid_argument("fixed aperture must be > 0");
    if (!(bounds.min_m > 0.0 && bounds.max_m >= bounds.min_m))
        throw std::invalid_argument("aperture bounds must satisfy max >= min > 0");

    const auto total_at = [&](double free_aperture) {
        OpticalChain chain = base_chain;
        if (fixed_side == FixedSide::TxFixed) {
            chain.tx_aperture_m = fixed_aperture_m;
            chain.rx_aperture_m = free_aperture;
        } else {
            chain.rx_aperture_m = fixed_aperture_m;
            chain.tx_aperture_m = free_aperture;
        }
        return attenuation_db(kind, chain, wavelength_m, geometry, r0_m, absorption).total_db;
    };

    if (total_at(bounds.max_m) > target_db)
        throw UnachievableError("target attenuation unreachable within the aperture bound");
    if (total_at(bounds.min_m) <= target_db) return bounds.min_m;

    double lo = bounds.min_m; // above target
    double hi = bounds.max_m; // at or below target
    while (hi - lo > 1e-3) {
        const double mid = 0.5 * (lo + hi);
        if (total_at(mid) <= target_db)
            hi = mid;
        else
            lo = mid;
    }
    return hi;
}

} // namespace qlink
