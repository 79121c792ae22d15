#pragma once

#include "qlink/constants.hpp"

#include <cstdint>

namespace qlink {

struct HardwareParams {
    double rep_rate_hz = 1e9;
    double eta_eps = 1.0; // pair probability per pulse
    double eta_sps = 0.75;
    double eta_det = 0.90;
    double eta_store = 0.70710678118654752440;    // sqrt(0.50)
    double eta_retrieve = 0.70710678118654752440; // sqrt(0.50)
    double eta_qnd = 0.90;
    double t1_s = 0.100;
    int multiplex_factor = 1;

    static HardwareParams from_defaults(const DefaultParams& p, double eta_eps = 1.0);
};

void validate(const HardwareParams& hw);

/// Classical signalling between the two end stations travels the
/// straight-line ground distance at c: dt0 = dt1 = L0/c.
struct ClassicalComms {
    double ground_distance_m = 0.0;

    double dt0_s(const PhysicalConstants& c = kEarth) const;
    double dt1_s(const PhysicalConstants& c = kEarth) const;
};

enum class SchemeKind { Memoryless, OneMemoryAlice, OneMemoryBob, TwoMemory, TwoLinkRepeater };

/// Linear-optics Bell measurement success eta_sps eta_d^2 / 2, halved
/// again for the one-memory-Alice arrangement.
double bsm_probability(const HardwareParams& hw, bool halved = false);

/// Event rate for the Memoryless / OneMemoryAlice / OneMemoryBob /
/// TwoMemory schemes given the double-link survival probability p_ave.
/// Throws SchemeMismatchError for TwoLinkRepeater (see
/// repeater_rate_bounds).
double teleportation_rate(SchemeKind scheme, const HardwareParams& hw, double p_ave,
                          const ClassicalComms& comms, const PhysicalConstants& c = kEarth);

/// Distribution of the attempt-count difference between two independent
/// geometric(p) links: P(0) = p/(2-p), P(n>=1) = 2 p (1-p)^n / (2-p).
double ndif_pmf(double p, std::int64_t n);

/// <exp(-2 n_dif T0/T1)> in closed form with per-step factor
/// q = exp(-2 T0/T1):  p/(2-p) + 2 p (1-p) q / ((2-p)(1 - (1-p) q)).
double decay_expectation(double p, double t0_s, double t1_s);

/// Same expectation by direct summation over ndif_pmf, truncated at
/// relative tail rel_tail. Kept as an independent route for cross-checks.
double decay_expectation_by_summation(double p, double t0_s, double t1_s,
                                      double rel_tail = 1e-12);

/// Average entanglement-swap success
/// (1/2) eta_d^2 eta_st^4 eta_r^2 eta_qnd^4 <exp(-2 n_dif T0/T1)>.
double swap_probability(const HardwareParams& hw, double p, double t0_s);

struct RepeaterRate {
    double n_min_mean = 0.0; // 1 / (1 - (1-p)^2)
    double n_max_mean = 0.0; // 2/p - n_min_mean
    double swap_prob = 0.0;
    double t_lower_s = 0.0; // T0 <n_min> / <p_s>
    double t_upper_s = 0.0; // T0 <n_max> / <p_s>
    double t_mid_s = 0.0;
    double rate_lower_per_s = 0.0; // 1 / t_upper
    double rate_upper_per_s = 0.0; // 1 / t_lower
    double rate_mid_per_s = 0.0;   // 1 / t_mid
    double teleport_rate_per_s = 0.0;
};

/// Two-link repeater over elementary links of half the end-to-end ground
/// distance; p is the per-attempt pair-delivery probability of one
/// elementary link. Throws DegenerateRateError when p = 0.
RepeaterRate repeater_rate_bounds(const HardwareParams& hw, double p, const ClassicalComms& comms,
                                  const PhysicalConstants& c = kEarth);

/// Throws InfeasibleRateError when the rate is zero.
double time_for_events(double rate_per_s, std::int64_t n_events);

enum class QkdProtocol { DecoyWCP, EPSorSPS };

double qkd_detections_required(QkdProtocol protocol); // 1e5 / 1e4

/// Noise-free accumulation time N_req / (R_s * multiplex * 10^(-dB/10)).
/// total_link_db is the end-to-end loss (double-link callers pass the
/// summed dB).
double qkd_time_required(double total_link_db, QkdProtocol protocol, const HardwareParams& hw);

} // namespace qlink
