#include "qlink/constants.hpp"

#include <cmath>
#include <string>

namespace qlink {

double wavelength_m(Wavelength w) {
    return w == Wavelength::NM785 ? 785e-9 : 1550e-9;
}

DefaultParams defaults(Wavelength w) {
    DefaultParams p;
    p.wavelength_m = wavelength_m(w);
    p.a_atm_vertical_db = w == Wavelength::NM785 ? 1.0 : 0.5;
    return p;
}

double memory_split_efficiency(const DefaultParams& p) {
    return std::sqrt(p.eta_mem);
}

namespace {

void check_efficiency(double value, const char* name) {
    if (!(value > 0.0 && value <= 1.0))
        throw std::invalid_argument(std::string(name) + " must be in (0,1]");
}

void check_nonnegative(double value, const char* name) {
    if (!(value >= 0.0))
        throw std::invalid_argument(std::string(name) + " must be >= 0");
}

void check_positive(double value, const char* name) {
    if (!(value > 0.0))
        throw std::invalid_argument(std::string(name) + " must be > 0");
}

} // namespace

void validate(const DefaultParams& p) {
    check_positive(p.wavelength_m, "wavelength_m");
    check_positive(p.rep_rate_hz, "rep_rate_hz");
    check_efficiency(p.eta_sps, "eta_sps");
    check_efficiency(p.eta_det, "eta_det");
    check_efficiency(p.eta_mem, "eta_mem");
    check_efficiency(p.eta_qnd, "eta_qnd");
    check_positive(p.t1_s, "t1_s");
    check_efficiency(p.trans_tx, "trans_tx");
    check_efficiency(p.trans_rx, "trans_rx");
    if (!(p.pointing_loss >= 0.0 && p.pointing_loss < 1.0))
        throw std::invalid_argument("pointing_loss must be in [0,1)");
    if (!(p.pointing_loss_intersat >= 0.0 && p.pointing_loss_intersat < 1.0))
        throw std::invalid_argument("pointing_loss_intersat must be in [0,1)");
    check_nonnegative(p.optical_loss_db, "optical_loss_db");
    check_nonnegative(p.a_atm_vertical_db, "a_atm_vertical_db");
    check_positive(p.fried_r0_m, "fried_r0_m");
    check_positive(p.hap_alt_min_m, "hap_alt_min_m");
    check_positive(p.hap_alt_max_m, "hap_alt_max_m");
    check_positive(p.leo_alt_m, "leo_alt_m");
    check_positive(p.meo_alt_m, "meo_alt_m");
    check_positive(p.geo_alt_m, "geo_alt_m");
    check_positive(p.heo_perigee_m, "heo_perigee_m");
    check_positive(p.heo_apogee_m, "heo_apogee_m");
}

} // namespace qlink
