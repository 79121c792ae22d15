#pragma once

#include "qlink/rates.hpp"

#include <cstdint>
#include <vector>

namespace qlink {

// Monte Carlo cross-checks for the closed forms in rates. The generator
// is std::mt19937_64; uniforms take the top 53 bits, geometric draws use
// the inverse CDF. Results are bit-identical for a given (seed, trials)
// on any conforming platform.

struct TrialConfig {
    std::int64_t trials = 1'000'000;
    std::uint64_t seed = 0;
    double p = 0.5;    // per-attempt success probability
    double t0_s = 1e-9; // attempt period, 1/R_s
    double t1_s = 0.1;  // memory lifetime
};

struct Estimate {
    double mean = 0.0;
    double std_error = 0.0;
};

struct NdifSimResult {
    std::vector<double> pmf; // empirical P(n_dif = k) for k < pmf.size()
    double tail_prob = 0.0;  // mass at or beyond pmf.size()
    Estimate decay;          // mean of exp(-2 n_dif T0/T1)
    std::uint64_t seed = 0;
    std::int64_t trials = 0;
};

NdifSimResult simulate_ndif(const TrialConfig& cfg);

struct OrderStatsResult {
    Estimate n_min;
    Estimate n_max;
    std::uint64_t seed = 0;
    std::int64_t trials = 0;
};

OrderStatsResult simulate_order_stats(const TrialConfig& cfg);

struct RepeaterSimResult {
    Estimate t_r_s;          // entanglement distribution time
    double rate_per_s = 0.0; // 1 / mean
    std::uint64_t seed = 0;
    std::int64_t trials = 0;
};

/// Renewal simulation of the two-link repeater: per round draw both
/// attempt counts, pay max(n_a, n_b) * T0, then Bernoulli-swap with
/// (1/2) eta_d^2 eta_st^4 eta_r^2 eta_qnd^4 exp(-2 |n_a-n_b| T0/T1);
/// repeat until success.
RepeaterSimResult simulate_two_link_repeater(const TrialConfig& cfg, const HardwareParams& hw);

} // namespace qlink
