#include <doctest.h>

#include "qlink/atmosphere.hpp"
#include "qlink/errors.hpp"

#include <cmath>
#include <numbers>

using namespace qlink;

namespace {
constexpr double kDeg = std::numbers::pi / 180.0;

// fine-grid trapezoid reference for the profile integral; dumb on purpose
double mu0_trapezoid(const HVProfile& profile, double h0, double h_top) {
    struct Segment {
        double lo, hi;
        int points;
    };
    const Segment segments[] = {{0.0, 1000.0, 500000},
                                {1000.0, 5000.0, 400000},
                                {5000.0, 30000.0, 500000},
                                {30000.0, 100000.0, 140000}};
    double total = 0.0;
    for (const Segment& seg : segments) {
        const double lo = std::max(seg.lo, h0);
        const double hi = std::min(seg.hi, h_top);
        if (hi <= lo) continue;
        const double step = (hi - lo) / seg.points;
        double sum = 0.5 * (cn2(profile, lo) + cn2(profile, hi));
        for (int i = 1; i < seg.points; ++i) sum += cn2(profile, lo + i * step);
        total += sum * step;
    }
    return total;
}
} // namespace

TEST_CASE("turbulence profile") {
    const HVProfile profile;
    // the wind term vanishes on the ground
    CHECK(cn2(profile, 0.0) == doctest::Approx(1.727e-14).epsilon(1e-14));
    // frozen value in the high-altitude wind band
    CHECK(cn2(profile, 10e3) == doctest::Approx(1.6657319221014648e-17).epsilon(1e-12));
    // decays to nothing
    CHECK(cn2(profile, 1e6) < 1e-40);

    SUBCASE("nonnegative and continuous") {
        double prev = cn2(profile, 0.0);
        for (double h = 10.0; h <= 60e3; h += 10.0) {
            const double v = cn2(profile, h);
            CHECK(v >= 0.0);
            CHECK(std::abs(v - prev) < 0.15 * (prev + 1e-18));
            prev = v;
        }
    }
}

TEST_CASE("integrated turbulence") {
    const HVProfile profile;
    CHECK(mu0(profile, 1000.0, 1000.0) == 0.0);

    const double integrated = mu0(profile, 0.0, 100e3);
    CHECK(integrated == doctest::Approx(2.23539488e-12).epsilon(1e-9));

    SUBCASE("agrees with the trapezoid reference to 1e-8") {
        const double reference = mu0_trapezoid(profile, 0.0, 100e3);
        CHECK(std::abs(integrated - reference) / reference < 1e-8);
    }
    SUBCASE("monotone in the upper bound up to quadrature noise") {
        double prev = 0.0;
        for (double top : {1e3, 5e3, 2e4, 5e4, 1e5}) {
            const double v = mu0(profile, 0.0, top);
            CHECK(v >= prev * (1.0 - 1e-9));
            prev = v;
        }
    }
    CHECK_THROWS_AS(mu0(profile, 1000.0, 100.0), std::invalid_argument);
}

TEST_CASE("atmospheric coherence diameter") {
    const HVProfile profile;
    const double r0 = fried_r0(profile, 785e-9, 0.0);
    // lands near the table's working value of 7.5 cm
    CHECK(r0 == doctest::Approx(0.08523362795601712).epsilon(1e-9));
    CHECK(std::abs(r0 - 0.075) / 0.075 < 0.40);

    SUBCASE("secant scaling law is exact") {
        for (double zenith_deg : {15.0, 30.0, 45.0, 60.0, 69.0}) {
            const double z = zenith_deg * kDeg;
            const double ratio = fried_r0(profile, 785e-9, z) / fried_r0(profile, 785e-9, 0.0);
            CHECK(std::abs(ratio - std::pow(1.0 / std::cos(z), -0.6)) < 1e-9);
        }
    }
    SUBCASE("wavelength exponent 6/5 is exact") {
        const double ratio = fried_r0(profile, 1550e-9, 0.0) / fried_r0(profile, 785e-9, 0.0);
        CHECK(std::abs(ratio - std::pow(1550.0 / 785.0, 1.2)) < 1e-9);
    }
    CHECK_THROWS_AS(fried_r0(profile, 785e-9, 71.0 * kDeg), std::invalid_argument);
}

TEST_CASE("slant absorption") {
    const AbsorptionTable table = AbsorptionTable::standard();
    CHECK(slant_absorption_db(table, 785e-9, 0.0) == 1.0);
    CHECK(slant_absorption_db(table, 1550e-9, 0.0) == 0.5);
    CHECK(slant_absorption_db(table, 785e-9, 60.0 * kDeg) == doctest::Approx(2.0).epsilon(1e-12));

    CHECK_THROWS_AS(slant_absorption_db(table, 633e-9, 0.0), UnknownWavelengthError);
    CHECK_THROWS_AS(slant_absorption_db(table, 785e-9, 71.0 * kDeg), std::invalid_argument);
}
