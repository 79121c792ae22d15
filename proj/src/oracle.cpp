#include "qlink/oracle.hpp"

#include <cmath>
#include <random>
#include <stdexcept>

namespace qlink {

namespace {

constexpr std::size_t kHistogramBins = 1024;

double uniform01(std::mt19937_64& rng) {
    // top 53 bits, [0, 1)
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

// Geometric(p) on {1, 2, ...} by inverse CDF.
std::int64_t draw_geometric(std::mt19937_64& rng, double p, double log1m_p) {
    if (p >= 1.0) return 1;
    const double u = uniform01(rng);
    return 1 + static_cast<std::int64_t>(std::floor(std::log1p(-u) / log1m_p));
}

void validate(const TrialConfig& cfg) {
    if (cfg.trials < 1) throw std::invalid_argument("trials must be >= 1");
    if (!(cfg.p > 0.0 && cfg.p <= 1.0)) throw std::invalid_argument("p must be in (0,1]");
    if (!(cfg.t0_s > 0.0 && cfg.t1_s > 0.0))
        throw std::invalid_argument("t0 and t1 must be > 0");
}

Estimate estimate_from_sums(double sum, double sum_sq, std::int64_t n) {
    Estimate e;
    e.mean = sum / static_cast<double>(n);
    const double var = std::max(0.0, sum_sq / static_cast<double>(n) - e.mean * e.mean);
    e.std_error = std::sqrt(var / static_cast<double>(n));
    return e;
}

} // namespace

NdifSimResult simulate_ndif(const TrialConfig& cfg) {
    validate(cfg);
    std::mt19937_64 rng(cfg.seed);
    const double log1m_p = std::log1p(-cfg.p);
    const double decay_per_step = -2.0 * cfg.t0_s / cfg.t1_s;

    std::vector<std::int64_t> histogram(kHistogramBins, 0);
    std::int64_t tail = 0;
    double sum = 0.0;
    double sum_sq = 0.0;
    for (std::int64_t i = 0; i < cfg.trials; ++i) {
        const std::int64_t na = draw_geometric(rng, cfg.p, log1m_p);
        const std::int64_t nb = draw_geometric(rng, cfg.p, log1m_p);
        const std::int64_t dif = na > nb ? na - nb : nb - na;
        if (static_cast<std::size_t>(dif) < kHistogramBins)
            ++histogram[static_cast<std::size_t>(dif)];
        else
            ++tail;
        const double w = std::exp(decay_per_step * static_cast<double>(dif));
        sum += w;
        sum_sq += w * w;
    }

    NdifSimResult result;
    result.pmf.resize(kHistogramBins);
    const double inv_trials = 1.0 / static_cast<double>(cfg.trials);
    for (std::size_t k = 0; k < kHistogramBins; ++k)
        result.pmf[k] = static_cast<double>(histogram[k]) * inv_trials;
    result.tail_prob = static_cast<double>(tail) * inv_trials;
    result.decay = estimate_from_sums(sum, sum_sq, cfg.trials);
    result.seed = cfg.seed;
    result.trials = cfg.trials;
    return result;
}

OrderStatsResult simulate_order_stats(const TrialConfig& cfg) {
    validate(cfg);
    std::mt19937_64 rng(cfg.seed);
    const double log1m_p = std::log1p(-cfg.p);

    double sum_min = 0.0, sum_sq_min = 0.0;
    double sum_max = 0.0, sum_sq_max = 0.0;
    for (std::int64_t i = 0; i < cfg.trials; ++i) {
        const std::int64_t na = draw_geometric(rng, cfg.p, log1m_p);
        const std::int64_t nb = draw_geometric(rng, cfg.p, log1m_p);
        const double lo = static_cast<double>(na < nb ? na : nb);
        const double hi = static_cast<double>(na < nb ? nb : na);
        sum_min += lo;
        sum_sq_min += lo * lo;
        sum_max += hi;
        sum_sq_max += hi * hi;
    }

    OrderStatsResult result;
    result.n_min = estimate_from_sums(sum_min, sum_sq_min, cfg.trials);
    result.n_max = estimate_from_sums(sum_max, sum_sq_max, cfg.trials);
    result.seed = cfg.seed;
    result.trials = cfg.trials;
    return result;
}

RepeaterSimResult simulate_two_link_repeater(const TrialConfig& cfg, const HardwareParams& hw) {
    validate(cfg);
    validate(hw);
    std::mt19937_64 rng(cfg.seed);
    const double log1m_p = std::log1p(-cfg.p);
    const double st2 = hw.eta_store * hw.eta_store;
    const double prefactor = 0.5 * hw.eta_det * hw.eta_det * st2 * st2 * hw.eta_retrieve *
                             hw.eta_retrieve * std::pow(hw.eta_qnd, 4.0);
    const double decay_per_step = -2.0 * cfg.t0_s / cfg.t1_s;

    double sum = 0.0;
    double sum_sq = 0.0;
    for (std::int64_t i = 0; i < cfg.trials; ++i) {
        double elapsed = 0.0;
        for (;;) {
            const std::int64_t na = draw_geometric(rng, cfg.p, log1m_p);
            const std::int64_t nb = draw_geometric(rng, cfg.p, log1m_p);
            const std::int64_t n_max = na > nb ? na : nb;
            const std::int64_t n_dif = na > nb ? na - nb : nb - na;
            elapsed += static_cast<double>(n_max) * cfg.t0_s;
            const double p_swap =
                prefactor * std::exp(decay_per_step * static_cast<double>(n_dif));
            if (uniform01(rng) < p_swap) break;
        }
        sum += elapsed;
        sum_sq += elapsed * elapsed;
    }

    RepeaterSimResult result;
    result.t_r_s = estimate_from_sums(sum, sum_sq, cfg.trials);
    result.rate_per_s = 1.0 / result.t_r_s.mean;
    result.seed = cfg.seed;
    result.trials = cfg.trials;
    return result;
}

} // namespace qlink
