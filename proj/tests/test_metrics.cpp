#include <cmath>
#include <vector>

#include "doctest.h"
#include "hapsris/error.hpp"
#include "hapsris/metrics.hpp"

using namespace hapsris;

TEST_CASE("Shannon rate") {
    CHECK(shannon_rate(1.0, 1e8) == doctest::Approx(1e8));
    CHECK(shannon_rate(0.0, 1e8) == 0.0);
    CHECK(shannon_rate(1023.0, 1e8) == doctest::Approx(1e9).epsilon(1e-14));
    CHECK_THROWS_AS(shannon_rate(-0.1, 1e8), DomainError);
    CHECK_THROWS_AS(shannon_rate(1.0, 0.0), DomainError);
}

TEST_CASE("Shannon rate per-dB gain is bounded by B log2(10^0.1)") {
    const double bound = 1e8 * std::log2(std::pow(10.0, 0.1));
    CHECK(bound / 1e6 == doctest::Approx(33.2193).epsilon(1e-5));
    double prev_gain = 0.0;
    for (double snr_db = -30.0; snr_db <= 60.0; snr_db += 0.5) {
        const double snr = std::pow(10.0, snr_db / 10);
        const double gain = shannon_rate(snr * std::pow(10.0, 0.1), 1e8) - shannon_rate(snr, 1e8);
        CHECK(gain > 0.0);
        CHECK(gain < bound);
        CHECK(gain >= prev_gain);  // approaches the bound from below
        prev_gain = gain;
        // concavity
        const double mid = shannon_rate(snr * 1.5, 1e8);
        CHECK(mid >= 0.5 * (shannon_rate(snr, 1e8) + shannon_rate(snr * 2.0, 1e8)));
    }
    CHECK(prev_gain / bound > 0.999);
}

TEST_CASE("RIS power consumption") {
    const RisPowerParams p;
    CHECK(p.p_dc_w == doctest::Approx(std::pow(10.0, -0.5) * 1e-3).epsilon(1e-15));
    CHECK(ris_power_consumption(30000, RisMode::SubConnectedActive, 500, p) ==
          doctest::Approx(363.48683298050514).epsilon(1e-12));
    CHECK(ris_power_consumption(30000, RisMode::Passive, 0, p) == doctest::Approx(243.48683298050514).epsilon(1e-12));
    CHECK(ris_power_consumption(30000, RisMode::SubConnectedActive, 2000, p) ==
          doctest::Approx(273.48683298050514).epsilon(1e-12));
    CHECK(ris_power_consumption(30000, RisMode::SubConnectedActive, 1000, p) ==
          doctest::Approx(303.48683298050514).epsilon(1e-12));
    CHECK_THROWS_AS(ris_power_consumption(30000, RisMode::SubConnectedActive, 700, p), ConfigError);

    const double passive = ris_power_consumption(30000, RisMode::Passive, 0, p);
    double prev = 1e300;
    for (int L : {1, 2, 3, 5, 10, 30, 100, 500, 1000, 2000, 3000, 10000, 30000}) {
        const double w = ris_power_consumption(30000, RisMode::SubConnectedActive, L, p);
        CHECK(w <= prev);
        CHECK(w >= passive);
        prev = w;
    }
}

TEST_CASE("energy efficiency") {
    CHECK(energy_efficiency(70e6, 10.0, 243.48683298050514) == doctest::Approx(276148.465689275).epsilon(1e-12));
    CHECK(energy_efficiency(0.0, 10.0, 243.0) == 0.0);
    const double ee = energy_efficiency(123.4e6, 0.5, 300.0);
    CHECK(ee * (0.5 + 300.0) == doctest::Approx(123.4e6).epsilon(1e-15));
    CHECK_THROWS_AS(energy_efficiency(1.0, 0.0, 0.0), DomainError);
}

TEST_CASE("feasibility report") {
    const FeasibilityParams fp;
    const auto r = feasibility_report(30000, 2.4, 0.2, 363.48683298050514, fp);
    CHECK(r.mass_kg == doctest::Approx(300.0).epsilon(1e-15));
    CHECK(r.wavelength_m == doctest::Approx(0.12491352416666666).epsilon(1e-12));
    CHECK(r.area_m2 == doctest::Approx(18.724066223683703).epsilon(1e-12));
    CHECK(r.solar_area_m2 == doctest::Approx(0.9898878893804605).epsilon(1e-12));

    // linear in N, quadratic in wavelength
    const auto doubled = feasibility_report(60000, 2.4, 0.2, 1.0, fp);
    CHECK(doubled.area_m2 == doctest::Approx(2.0 * r.area_m2));
    const auto half_f = feasibility_report(30000, 1.2, 0.2, 1.0, fp);
    CHECK(half_f.area_m2 == doctest::Approx(4.0 * r.area_m2));

    FeasibilityParams bad;
    bad.solar_efficiency = 1.5;
    CHECK_THROWS_AS(feasibility_report(30000, 2.4, 0.2, 1.0, bad), ConfigError);
}

TEST_CASE("empirical CDF") {
    const std::vector<double> four{4, 2, 3, 1};
    const auto c = empirical_cdf(four);
    CHECK(c.evaluate(2.0) == 0.5);
    CHECK(c.evaluate(0.0) == 0.0);
    CHECK(c.evaluate(4.0) == 1.0);
    CHECK(c.sum() == 10.0);

    const std::vector<double> single{5};
    const auto s = empirical_cdf(single);
    CHECK(s.evaluate(4.9) == 0.0);
    CHECK(s.evaluate(5.0) == 1.0);

    const std::vector<double> three{30, 10, 20};
    const auto t = empirical_cdf(three);
    CHECK(t.percentile(0.5) == 20.0);
    CHECK(t.percentile(0.0) == 10.0);
    CHECK(t.percentile(1.0) == 30.0);
    CHECK(t.percentile(1.0 / 3.0) == 10.0);

    CHECK_THROWS_AS(empirical_cdf(std::vector<double>{}), DomainError);
    CHECK_THROWS_AS(empirical_cdf(std::vector<double>{1.0, NAN}), DomainError);
}

TEST_CASE("empirical CDF properties") {
    RandomStream rng = substream(5, 5);
    std::normal_distribution<double> gauss(0.0, 10.0);
    for (int trial = 0; trial < 50; ++trial) {
        std::vector<double> v(1 + trial * 7);
        for (auto& x : v) x = std::round(gauss(rng));  // ties on purpose
        const auto c = empirical_cdf(v);
        double prev = 0.0;
        for (double x = -60.0; x <= 60.0; x += 0.25) {
            const double f = c.evaluate(x);
            CHECK(f >= prev);
            CHECK(f >= 0.0);
            CHECK(f <= 1.0);
            prev = f;
        }
        CHECK(c.evaluate(c.max()) == 1.0);
        const double med = c.percentile(0.5);
        CHECK(med >= c.min());
        CHECK(med <= c.max());
        for (double p : {0.1, 0.25, 0.5, 0.7, 0.9}) {
            const double q = c.percentile(p);
            CHECK(c.evaluate(q) >= p);
            // nothing smaller in the sample reaches p
            const auto& sv = c.sorted_values();
            for (double x : sv)
                if (x < q) CHECK(c.evaluate(x) < p);
        }
    }
}
