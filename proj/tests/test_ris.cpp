#include <cmath>
#include <limits>
#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "hapsris/error.hpp"
#include "hapsris/ris.hpp"
#include "oracle/complex_baseband.hpp"

using namespace hapsris;

namespace {

CascadeLink link_of(double g1, double g2) {
    CascadeLink l;
    l.hop1 = HopGain::from_linear(g1);
    l.hop2 = HopGain::from_linear(g2);
    return l;
}

}  // namespace

TEST_CASE("architecture validation") {
    CHECK_NOTHROW(RisArchitecture::active(30000, 500).validate());
    CHECK_NOTHROW(RisArchitecture::passive(30000).validate());
    CHECK_THROWS_AS(RisArchitecture::active(30000, 700).validate(), ConfigError);
    CHECK_THROWS_AS(RisArchitecture::active(30000, 0).validate(), ConfigError);
    CHECK_THROWS_AS(RisArchitecture::active(100, 200).validate(), ConfigError);
    CHECK_THROWS_AS(RisArchitecture::passive(0).validate(), ConfigError);
    auto a = RisArchitecture::active(1000, 10);
    a.amp_gain_floor = 0.5;
    CHECK_THROWS_AS(a.validate(), ConfigError);
    a = RisArchitecture::active(1000, 10);
    a.amp_gain_cap = 0.9;
    CHECK_THROWS_AS(a.validate(), ConfigError);
    CHECK(RisArchitecture::active(30000, 2000).amplifier_count() == 15);
    CHECK(RisArchitecture::active(30000, 500).amplifier_count() == 60);
    CHECK(RisArchitecture::passive(30000).amplifier_count() == 0);
    CHECK(RisArchitecture::active(30000, 500).label() == "L500");
}

TEST_CASE("element gain from the unit-cell aperture") {
    CHECK(element_gain_from_aperture_dbi(0.2) == doctest::Approx(-2.9873014464994134).epsilon(1e-12));
    CHECK(RisArchitecture{}.element_gain_dbi == doctest::Approx(-2.9873014464994134).epsilon(1e-12));
}

TEST_CASE("amplification factor") {
    auto arch = RisArchitecture::active(30000, 500);
    SUBCASE("output-power budget at equality") {
        const auto s = amplification_factor(arch, 1.0, HopGain::from_linear(4e-12), 0.0);
        CHECK(s.rho == doctest::Approx(31622.776601683792).epsilon(1e-12));
        CHECK(20.0 * std::log10(s.rho) == doctest::Approx(90.0));
        CHECK(s.input_power_per_element_w == doctest::Approx(4e-12));
    }
    SUBCASE("tiny budget clamps to the floor") {
        arch.pa_output_power_w = 1e-30;
        CHECK(amplification_factor(arch, 1.0, HopGain::from_linear(4e-12), 0.0).rho == 1.0);
    }
    SUBCASE("budget exactly met at unity") {
        auto one = RisArchitecture::active(10, 1);
        const auto s = amplification_factor(one, 1.5, HopGain::from_linear(1.0), 0.5);
        CHECK(s.rho == doctest::Approx(1.0));
        CHECK(s.dynamic_noise_power_w == 0.5);
    }
    SUBCASE("cap") {
        arch.amp_gain_cap = 100.0;
        CHECK(amplification_factor(arch, 1.0, HopGain::from_linear(4e-12), 0.0).rho == 100.0);
    }
    SUBCASE("passive has no amplifier") {
        CHECK_THROWS_AS(amplification_factor(RisArchitecture::passive(10), 1.0, HopGain::from_linear(1.0), 0.0),
                        std::logic_error);
    }
    CHECK_THROWS_AS(amplification_factor(arch, 0.0, HopGain::from_linear(1.0), 0.0), DomainError);
}

TEST_CASE("dynamic noise power") {
    // -174 dBm/Hz, 100 MHz, 5 dB
    CHECK(dynamic_noise_power_w(3.981071705534973e-21, 1e8, 5.0) ==
          doctest::Approx(1.2589254117941673e-12).epsilon(1e-12));
}

TEST_CASE("end-to-end SNR examples") {
    const auto passive = RisArchitecture::passive(1000);
    CHECK(end_to_end_snr(link_of(1e-10, 1e-10), passive, 1.0, 4e-13, 1e-12) == doctest::Approx(0.025).epsilon(1e-12));

    const auto single = RisArchitecture::passive(1);
    CHECK(end_to_end_snr(link_of(3e-5, 2e-6), single, 2.0, 1e-12, 0.0) ==
          doctest::Approx(2.0 * 3e-5 * 2e-6 / 1e-12).epsilon(1e-12));

    // rho -> infinity approaches the dynamic-noise ceiling P N g1 / sigma_v^2
    AmplifierState amp{1e12, 0.0, 1e-12};
    const double snr = cascade_snr(link_of(1e-8, 1e-9), 100, amp, 1.0, 4e-13);
    CHECK(snr == doctest::Approx(1.0 * 100 * 1e-8 / 1e-12).epsilon(1e-9));

    CHECK_THROWS_AS(end_to_end_snr(link_of(1e-10, 1e-10), passive, 0.0, 4e-13, 0.0), DomainError);
    CHECK_THROWS_AS(end_to_end_snr(link_of(1e-10, 1e-10), passive, 1.0, 0.0, 0.0), DomainError);
}

TEST_CASE("passive SNR shows double fading") {
    const auto link = link_of(2e-9, 5e-13);
    const double base = end_to_end_snr(link, RisArchitecture::passive(1000), 10.0, 4e-13, 0.0);
    CHECK(end_to_end_snr(link, RisArchitecture::passive(2000), 10.0, 4e-13, 0.0) == doctest::Approx(4.0 * base));
    CHECK(end_to_end_snr(link_of(4e-9, 5e-13), RisArchitecture::passive(1000), 10.0, 4e-13, 0.0) ==
          doctest::Approx(2.0 * base));
    CHECK(end_to_end_snr(link_of(2e-9, 1.5e-12), RisArchitecture::passive(1000), 10.0, 4e-13, 0.0) ==
          doctest::Approx(3.0 * base));
    // passive injects no dynamic noise whatever sigma_v^2 is passed
    CHECK(end_to_end_snr(link, RisArchitecture::passive(1000), 10.0, 4e-13, 1.0) == base);
}

TEST_CASE("grouping, power and ceiling properties") {
    RandomStream rng = substream(2024, 0);
    std::uniform_real_distribution<double> g1db(-140.0, -80.0), g2db(-160.0, -80.0), pdbm(10.0, 60.0);
    const double n0 = 3.981071705534973e-13;
    const double sv = 1.2589254117941673e-12;
    for (int i = 0; i < 2000; ++i) {
        const auto link = link_of(std::pow(10.0, g1db(rng) / 10), std::pow(10.0, g2db(rng) / 10));
        const double p = std::pow(10.0, (pdbm(rng) - 30.0) / 10.0);
        double prev = 0.0;
        for (int L : {2000, 1000, 500}) {
            const double snr = end_to_end_snr(link, RisArchitecture::active(30000, L), p, n0, sv);
            CHECK(snr >= prev);
            CHECK(snr <= p * 30000 * link.hop1.power_gain_linear / sv * (1 + 1e-12));
            prev = snr;
            // tx-power monotonicity with rho recomputed
            CHECK(end_to_end_snr(link, RisArchitecture::active(30000, L), p * 1.05, n0, sv) > snr);
        }
        // the floor binds only when input power is enormous; in this range rho >> 1
        const double passive = end_to_end_snr(link, RisArchitecture::passive(30000), p, n0, sv);
        const double l2000 = end_to_end_snr(link, RisArchitecture::active(30000, 2000), p, n0, sv);
        const auto amp = amplification_factor(RisArchitecture::active(30000, 2000), p, link.hop1, sv);
        if (amp.rho > 2.0) CHECK(l2000 >= passive);
        CHECK(end_to_end_snr(link, RisArchitecture::passive(30000), p * 1.05, n0, sv) > passive);
    }
}

TEST_CASE("elementwise oracle basics") {
    const std::vector<double> h1{2e-5, 2e-5, 2e-5, 2e-5}, h2{3e-6, 3e-6, 3e-6, 3e-6};
    const std::vector<int> groups{0, 0, 0, 0};
    const std::vector<double> rho{7.5};
    const double oracle = elementwise_oracle_snr(h1, h2, groups, rho, 2.0, 1e-12, 4e-13);
    const double closed = cascade_snr(link_of(4e-10, 9e-12), 4, AmplifierState{7.5, 0.0, 1e-12}, 2.0, 4e-13);
    CHECK(std::abs(oracle - closed) <= 1e-12 * closed);

    const std::vector<double> a{1e-4}, b{2e-4};
    const std::vector<int> g{0};
    const std::vector<double> r{1.0};
    CHECK(elementwise_oracle_snr(a, b, g, r, 3.0, 0.0, 1e-15) ==
          doctest::Approx(3.0 * 1e-8 * 4e-8 / 1e-15).epsilon(1e-12));

    const std::vector<double> shorter{1e-4};
    CHECK_THROWS_AS(elementwise_oracle_snr(h1, shorter, groups, rho, 1.0, 0.0, 1.0), DomainError);
    const std::vector<int> bad_groups{0, 0, 1, 0};
    CHECK_THROWS_AS(elementwise_oracle_snr(h1, h2, bad_groups, rho, 1.0, 0.0, 1.0), DomainError);
}

TEST_CASE("elementwise oracle matches a complex-baseband simulation") {
    RandomStream rng = substream(77, 0);
    std::uniform_real_distribution<double> amp(1e-6, 1e-4), phase(-3.14159, 3.14159), rho_d(1.0, 1e4);
    std::vector<oracle::cplx> c1(8), c2(8);
    std::vector<double> a1(8), a2(8);
    const std::vector<int> groups{0, 0, 0, 0, 1, 1, 1, 1};
    for (int trial = 0; trial < 200; ++trial) {
        for (int n = 0; n < 8; ++n) {
            a1[n] = amp(rng);
            a2[n] = amp(rng);
            c1[n] = std::polar(a1[n], phase(rng));
            c2[n] = std::polar(a2[n], phase(rng));
        }
        const std::vector<double> rho{rho_d(rng), rho_d(rng)};
        const auto theta = oracle::aligned_phases(c1, c2);
        const double sim = oracle::baseband_snr(c1, c2, groups, rho, theta, 0.5, 1e-12, 4e-13);
        const double ew = elementwise_oracle_snr(a1, a2, groups, rho, 0.5, 1e-12, 4e-13);
        CHECK(std::abs(sim - ew) <= 1e-9 * ew);

        // any other phase choice does no better
        std::vector<double> other(theta);
        for (auto& t : other) t += 0.3 * phase(rng);
        CHECK(oracle::baseband_snr(c1, c2, groups, rho, other, 0.5, 1e-12, 4e-13) <= sim * (1 + 1e-12));
    }
}
