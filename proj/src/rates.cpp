#include "qlink/rates.hpp"

#include "qlink/errors.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace qlink {

namespace {

void check_efficiency(double value, const char* name) {
    if (!(value > 0.0 && value <= 1.0))
        throw std::invalid_argument(std::string(name) + " must be in (0,1]");
}

void check_probability(double value, const char* name) {
    if (!(value >= 0.0 && value <= 1.0))
        throw std::invalid_argument(std::string(name) + " must be in [0,1]");
}

} // namespace

HardwareParams HardwareParams::from_defaults(const DefaultParams& p, double eta_eps) {
    HardwareParams hw;
    hw.rep_rate_hz = p.rep_rate_hz;
    hw.eta_eps = eta_eps;
    hw.eta_sps = p.eta_sps;
    hw.eta_det = p.eta_det;
    hw.eta_store = memory_split_efficiency(p);
    hw.eta_retrieve = memory_split_efficiency(p);
    hw.eta_qnd = p.eta_qnd;
    hw.t1_s = p.t1_s;
    return hw;
}

void validate(const HardwareParams& hw) {
    if (!(hw.rep_rate_hz > 0.0)) throw std::invalid_argument("rep_rate_hz must be > 0");
    check_efficiency(hw.eta_eps, "eta_eps");
    check_efficiency(hw.eta_sps, "eta_sps");
    check_efficiency(hw.eta_det, "eta_det");
    check_efficiency(hw.eta_store, "eta_store");
    check_efficiency(hw.eta_retrieve, "eta_retrieve");
    check_efficiency(hw.eta_qnd, "eta_qnd");
    if (!(hw.t1_s > 0.0)) throw std::invalid_argument("t1_s must be > 0");
    if (hw.multiplex_factor < 1) throw std::invalid_argument("multiplex_factor must be >= 1");
}

double ClassicalComms::dt0_s(const PhysicalConstants& c) const {
    if (!(ground_distance_m >= 0.0)) throw std::invalid_argument("ground distance must be >= 0");
    return ground_distance_m / c.light_speed_ms;
}

double ClassicalComms::dt1_s(const PhysicalConstants& c) const {
    return dt0_s(c);
}

double bsm_probability(const HardwareParams& hw, bool halved) {
    validate(hw);
    const double p_b = hw.eta_sps * hw.eta_det * hw.eta_det / 2.0;
    return halved ? p_b / 2.0 : p_b;
}

double teleportation_rate(SchemeKind scheme, const HardwareParams& hw, double p_ave,
                          const ClassicalComms& comms, const PhysicalConstants& c) {
    validate(hw);
    check_probability(p_ave, "p_ave");
    const double base = p_ave * hw.rep_rate_hz * hw.eta_eps * hw.multiplex_factor;
    const double mem = hw.eta_store * hw.eta_retrieve * hw.eta_qnd;
    const double decay0 = std::exp(-comms.dt0_s(c) / hw.t1_s);
    const double decay1 = std::exp(-comms.dt1_s(c) / hw.t1_s);
    switch (scheme) {
    case SchemeKind::Memoryless:
        return base * bsm_probability(hw);
    case SchemeKind::OneMemoryAlice:
        return base * bsm_probability(hw, true) * mem * decay0;
    case SchemeKind::OneMemoryBob:
        return base * bsm_probability(hw) * mem * decay0 * decay1;
    case SchemeKind::TwoMemory:
        return base * bsm_probability(hw) * mem * mem * decay0 * decay0 * decay1;
    case SchemeKind::TwoLinkRepeater:
        throw SchemeMismatchError("two-link repeater rates come from repeater_rate_bounds");
    }
    throw std::invalid_argument("unknown scheme");
}

double ndif_pmf(double p, std::int64_t n) {
    if (!(p > 0.0 && p <= 1.0)) throw std::invalid_argument("p must be in (0,1]");
    if (n < 0) throw std::invalid_argument("n must be >= 0");
    if (n == 0) return p / (2.0 - p);
    return 2.0 * p * std::pow(1.0 - p, static_cast<double>(n)) / (2.0 - p);
}

double decay_expectation(double p, double t0_s, double t1_s) {
    if (!(p > 0.0 && p <= 1.0)) throw std::invalid_argument("p must be in (0,1]");
    if (!(t0_s >= 0.0 && t1_s > 0.0)) throw std::invalid_argument("need t0 >= 0 and t1 > 0");
    const double q = std::exp(-2.0 * t0_s / t1_s);
    return p / (2.0 - p) +
           2.0 * p * (1.0 - p) * q / ((2.0 - p) * (1.0 - (1.0 - p) * q));
}

double decay_expectation_by_summation(double p, double t0_s, double t1_s, double rel_tail) {
    if (!(p > 0.0 && p <= 1.0)) throw std::invalid_argument("p must be in (0,1]");
    if (!(t0_s >= 0.0 && t1_s > 0.0)) throw std::invalid_argument("need t0 >= 0 and t1 > 0");
    const double q = std::exp(-2.0 * t0_s / t1_s);
    double sum = p / (2.0 - p);
    double term = 2.0 * p * (1.0 - p) * q / (2.0 - p); // n = 1
    const double ratio = (1.0 - p) * q;
    std::int64_t n = 1;
    while (term > 0.0) {
        sum += term;
        // geometric tail bound: remaining mass <= term * ratio / (1 - ratio)
        if (ratio < 1.0 && term * ratio / (1.0 - ratio) < rel_tail * sum) break;
        term *= ratio;
        if (++n > 100'000'000)
            throw std::runtime_error("decay summation failed to converge");
    }
    return sum;
}

double swap_probability(const HardwareParams& hw, double p, double t0_s) {
    validate(hw);
    const double st2 = hw.eta_store * hw.eta_store;
    const double prefactor = 0.5 * hw.eta_det * hw.eta_det * st2 * st2 * hw.eta_retrieve *
                             hw.eta_retrieve * std::pow(hw.eta_qnd, 4.0);
    return prefactor * decay_expectation(p, t0_s, hw.t1_s);
}

RepeaterRate repeater_rate_bounds(const HardwareParams& hw, double p, const ClassicalComms& comms,
                                  const PhysicalConstants& c) {
    validate(hw);
    check_probability(p, "p");
    if (p == 0.0) throw DegenerateRateError("elementary link probability is zero");

    RepeaterRate r;
    const double miss = 1.0 - p;
    r.n_min_mean = 1.0 / (1.0 - miss * miss);
    r.n_max_mean = 2.0 / p - r.n_min_mean;

    const double t0 = 1.0 / hw.rep_rate_hz; // attempt period set by the source clock
    r.swap_prob = swap_probability(hw, p, t0);
    r.t_lower_s = t0 * r.n_min_mean / r.swap_prob;
    r.t_upper_s = t0 * r.n_max_mean / r.swap_prob;
    r.t_mid_s = 0.5 * (r.t_lower_s + r.t_upper_s);
    r.rate_lower_per_s = 1.0 / r.t_upper_s;
    r.rate_upper_per_s = 1.0 / r.t_lower_s;
    r.rate_mid_per_s = 1.0 / r.t_mid_s;

    const double decay0 = std::exp(-2.0 * comms.dt0_s(c) / hw.t1_s);
    const double decay1 = std::exp(-comms.dt1_s(c) / hw.t1_s);
    r.teleport_rate_per_s = r.rate_mid_per_s * hw.eta_retrieve * hw.eta_retrieve *
                            bsm_probability(hw) * decay0 * decay1 * hw.multiplex_factor;
    return r;
}

double time_for_events(double rate_per_s, std::int64_t n_events) {
    if (n_events < 0) throw std::invalid_argument("event count must be >= 0");
    if (!(rate_per_s > 0.0)) throw InfeasibleRateError("rate must be > 0");
    return static_cast<double>(n_events) / rate_per_s;
}

double qkd_detections_required(QkdProtocol protocol) {
    return protocol == QkdProtocol::DecoyWCP ? 1e5 : 1e4;
}

double qkd_time_required(double total_link_db, QkdProtocol protocol, const HardwareParams& hw) {
    validate(hw);
    if (!(total_link_db >= 0.0)) throw std::invalid_argument("attenuation must be >= 0 dB");
    const double detected_rate = hw.rep_rate_hz * hw.multiplex_factor *
                                 std::pow(10.0, -total_link_db / 10.0);
    return qkd_detections_required(protocol) / detected_rate;
}

} // namespace qlink
