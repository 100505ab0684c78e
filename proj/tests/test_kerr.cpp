#include <doctest.h>

#include <cmath>

#include "oracles.hpp"
#include "tomolight/fock_core.hpp"
#include "tomolight/kerr_dynamics.hpp"
#include "tomolight/states.hpp"

using namespace tomolight;

namespace {

const cplx kI(0.0, 1.0);

cplx alpha_of(double nbar, double delta = kPi / 4) { return std::polar(std::sqrt(nbar), delta); }

}  // namespace

TEST_SUITE("kerr_dynamics") {

TEST_CASE("evolution is a pure phase map") {
    const FockVector v = coherent_amps(alpha_of(20.0));
    CHECK((evolve_kerr(v, KerrParams::at_fraction(1.0, 0.0)).amps - v.amps).norm() == 0.0);
    const FockVector full = evolve_kerr(v, KerrParams::at_fraction(1.0, 1.0));
    CHECK((full.amps - v.amps).norm() == 0.0);
    CHECK(autocorrelation(v, full) == doctest::Approx(1.0).epsilon(1e-14));

    const FockVector a = evolve_kerr(v, KerrParams::at_fraction(1.0, 0.137));
    const FockVector b = evolve_kerr(v, KerrParams::at_fraction(1.0, 1.137));
    CHECK((a.amps - b.amps).cwiseAbs().maxCoeff() < 1e-12);
    CHECK(a.norm_sq() == doctest::Approx(v.norm_sq()).epsilon(1e-15));
}

TEST_CASE("time conversions") {
    const KerrParams p = KerrParams::from_time(2.0, kPi / 8.0);
    CHECK(p.t_rev() == doctest::Approx(kPi / 2.0));
    CHECK(p.t_over_trev == doctest::Approx(0.25));
    CHECK(p.t() == doctest::Approx(kPi / 8.0));
    CHECK_THROWS_AS(KerrParams::from_time(0.0, 1.0), InvalidArgument);
    CHECK_THROWS_AS(KerrParams::at_fraction(1.0, -0.1), InvalidArgument);
}

TEST_CASE("chi only rescales time") {
    const FockVector v = coherent_amps(alpha_of(5.0));
    const FockVector a = evolve_kerr(v, KerrParams::from_time(1.0, 0.4));
    const FockVector b = evolve_kerr(v, KerrParams::from_time(4.0, 0.1));
    CHECK((a.amps - b.amps).cwiseAbs().maxCoeff() < 1e-12);
}

TEST_CASE("Fourier coefficients") {
    const auto c2 = fractional_revival_coeffs(2);
    CHECK(std::abs(c2[0] - (1.0 - kI) / 2.0) < 1e-15);
    CHECK(std::abs(c2[1] - (1.0 + kI) / 2.0) < 1e-15);

    const auto c4 = fractional_revival_coeffs(4);
    const double r8 = std::sqrt(8.0);
    CHECK(std::abs(c4[0] - (1.0 - kI) / r8) < 1e-15);
    CHECK(std::abs(c4[1] - std::sqrt(2.0) / r8) < 1e-15);
    CHECK(std::abs(c4[2] + (1.0 - kI) / r8) < 1e-15);
    CHECK(std::abs(c4[3] - std::sqrt(2.0) / r8) < 1e-15);

    for (int k = 1; k <= 12; ++k) {
        double s = 0.0;
        for (cplx c : fractional_revival_coeffs(k)) {
            CHECK(std::abs(c) == doctest::Approx(1.0 / std::sqrt(static_cast<double>(k))));
            s += std::norm(c);
        }
        CHECK(s == doctest::Approx(1.0).epsilon(1e-14));
    }
}

TEST_CASE("fractional-revival labels") {
    const cplx alpha = alpha_of(20.0);
    const auto one = fractional_revival_state(alpha, 1);
    REQUIRE(one.terms.size() == 1);
    CHECK(std::abs(one.terms[0].coeff - 1.0) < 1e-15);
    CHECK(std::abs(one.terms[0].label - alpha) < 1e-15);

    const auto two = fractional_revival_state(alpha, 2);
    CHECK(std::abs(two.terms[0].label - kI * alpha) < 1e-13);
    CHECK(std::abs(two.terms[1].label + kI * alpha) < 1e-13);

    const auto four = fractional_revival_state(alpha, 4);
    CHECK(std::abs(four.terms[0].label - alpha * std::polar(1.0, kPi / 4)) < 1e-13);
    CHECK(std::abs(four.terms[3].label - alpha * std::polar(1.0, 3 * kPi / 4)) < 1e-13);
}

TEST_CASE("k-subpacket revivals match the evolved state") {
    for (double nbar : {5.0, 20.0}) {
        const cplx alpha = alpha_of(nbar);
        const FockVector v = coherent_amps(alpha);
        for (int k = 1; k <= 8; ++k) {
            const FockVector vt = evolve_kerr(v, KerrParams::at_fraction(1.0, 1.0 / k));
            const FockVector form = to_fock_at(fractional_revival_state(alpha, k), v.cutoff());
            CAPTURE(k);
            CHECK(std::norm(vt.amps.dot(form.amps)) >= 1.0 - 1e-9);
        }
    }
}

TEST_CASE("general j/k decomposition and gcd reduction") {
    const cplx alpha = alpha_of(10.0, 0.3);
    const FockVector v = coherent_amps(alpha);
    for (auto [j, k] : std::vector<std::pair<int, int>>{{1, 3}, {2, 3}, {1, 4}, {3, 4}, {2, 5}, {5, 7}, {1, 6}, {3, 8}}) {
        const auto dec = fractional_revival_state(alpha, j, k);
        CHECK_FALSE(dec.canonical.gcd_reduced);
        const FockVector vt = evolve_kerr(v, KerrParams::at_fraction(1.0, static_cast<double>(j) / k));
        CHECK(std::norm(vt.amps.dot(to_fock_at(dec.state, v.cutoff()).amps)) >= 1.0 - 1e-9);
    }
    const auto red = fractional_revival_state(alpha, 2, 4);
    CHECK(red.canonical.gcd_reduced);
    CHECK(red.canonical.spec.j == 1);
    CHECK(red.canonical.spec.k == 2);
}

TEST_CASE("even cat at T_rev/8 is two even cats") {
    const cplx alpha = alpha_of(20.0);
    const CatSpec spec{2, 0, alpha};
    const FockVector v = make_cat(spec);
    const FockVector vt = evolve_kerr(v, KerrParams::at_fraction(1.0, 1.0 / 8.0));
    const cplx w = std::polar(1.0, kPi / 8);
    const FockVector c1 = make_cat_at(CatSpec{2, 0, alpha * w}, v.cutoff());
    const FockVector c2 = make_cat_at(CatSpec{2, 0, kI * alpha * w}, v.cutoff());
    const Eigen::VectorXcd target = (1.0 - kI) / 2.0 * c1.amps + (1.0 + kI) / 2.0 * c2.amps;
    CHECK(std::norm(vt.amps.dot(target)) >= 1.0 - 1e-9);
}

TEST_CASE("cat revivals at T_rev/k") {
    const cplx alpha = alpha_of(20.0);
    for (int l : {1, 2, 3})
        for (int k : {2, 3, 9}) {
            const CatSpec spec{l, 0, alpha};
            const FockVector v = make_cat(spec);
            const FockVector vt = evolve_kerr(v, KerrParams::at_fraction(1.0, 1.0 / k));
            const FockVector form = to_fock_at(cat_fractional_revival_state(spec, k), v.cutoff());
            CAPTURE(l);
            CAPTURE(k);
            CHECK(std::norm(vt.amps.dot(form.amps)) >= 1.0 - 1e-9);
        }
    // single component reduces to the coherent decomposition
    const auto a = cat_fractional_revival_state(CatSpec{1, 0, alpha}, 5);
    const auto b = fractional_revival_state(alpha, 5);
    for (std::size_t i = 0; i < 5; ++i) CHECK(std::abs(a.terms[i].label - b.terms[i].label) < 1e-13);
}

TEST_CASE("cat rotations") {
    CHECK(cat_rotation_angle(2, 0, 1) == doctest::Approx(-kPi / 4));
    CHECK(cat_rotation_angle(3, 0, 1) == doctest::Approx(-2 * kPi / 9));
    const cplx alpha = alpha_of(20.0);
    for (int l : {2, 3, 4})
        for (int h = 0; h < l; ++h)
            for (int j = 1; j < l * l; ++j) {
                const CatSpec spec{l, h, alpha};
                const FockVector v = make_cat(spec);
                const FockVector vt = evolve_kerr(v, KerrParams::at_fraction(1.0, static_cast<double>(j) / (l * l)));
                const FockVector rot = to_fock_at(cat_rotation_form(spec, j), v.cutoff());
                CAPTURE(l);
                CAPTURE(h);
                CAPTURE(j);
                CHECK(std::norm(vt.amps.dot(rot.amps)) >= 1.0 - 1e-9);
                CHECK((vt.amps - rot.amps).cwiseAbs().maxCoeff() < 1e-8);
            }
}

TEST_CASE("autocorrelation") {
    const FockVector v = coherent_amps(alpha_of(20.0));
    CHECK(autocorrelation(v, v) == doctest::Approx(1.0));
    CHECK_THROWS_AS(autocorrelation(v, resized(v, v.cutoff() + 1)), CutoffMismatch);
    for (double f : {0.1, 1.0 / std::sqrt(2.0), 1.0 / kPi}) {
        const FockVector c = evolve_kerr(v, KerrParams::at_fraction(1.0, f));
        cplx direct = 0.0;
        for (int n = 0; n <= 200; ++n)
            direct += oracle::poisson_pmf(n, 20.0) * std::polar(1.0, -kPi * f * n * (n - 1.0));
        CHECK(autocorrelation(v, c) == doctest::Approx(std::norm(direct)).epsilon(1e-9));
    }
}

TEST_CASE("ladder moments") {
    const cplx alpha = alpha_of(7.0, 0.4);
    const FockVector v = coherent_amps(alpha);
    CHECK(std::abs(moment_a_power(v, 1) - alpha) < 1e-12);
    CHECK(std::abs(moment_a_power(v, 3) - alpha * alpha * alpha) < 1e-10);

    const FockVector even = make_cat(CatSpec{2, 0, alpha_of(20.0)});
    for (double f : {0.0, 0.1, 0.33}) {
        const FockVector vt = evolve_kerr(even, KerrParams::at_fraction(1.0, f));
        for (int m : {1, 3, 5}) CHECK(moment_a_power(vt, m) == cplx(0.0));
    }
    const FockVector c3 = make_cat(CatSpec{3, 1, alpha_of(10.0)});
    CHECK(moment_a_power(c3, 1) == cplx(0.0));
    CHECK(moment_a_power(c3, 2) == cplx(0.0));
    CHECK(std::abs(moment_a_power(c3, 3)) > 1.0);
}

TEST_CASE("2k and 3k moments of evolving cats follow their closed forms") {
    const cplx alpha = alpha_of(100.0, 0.3);
    const double n20 = cat_normalization(2, 0, 100.0);
    const double n30 = cat_normalization(3, 0, 100.0);
    const FockVector v2 = make_cat_at(CatSpec{2, 0, alpha}, 260);
    const FockVector v3 = make_cat_at(CatSpec{3, 0, alpha}, 260);
    for (double ct : {0.1, 0.3, 0.77, 1.3}) {
        const KerrParams p = KerrParams::from_time(1.0, ct);
        const FockVector e2 = evolve_kerr(v2, p);
        const FockVector e3 = evolve_kerr(v3, p);
        const cplx ref = oracle::even_cat_a2k(alpha, n20, 1, ct);
        CHECK(std::abs(moment_a_power(e2, 2) - ref) <= 1e-8 * std::max(1.0, std::abs(ref)));
        // higher orders cancel terms of size |alpha|^m in the Fock sum
        const cplx ref4 = oracle::even_cat_a2k(alpha, n20, 2, ct);
        CHECK(std::abs(moment_a_power(e2, 4) - ref4) <= 1e-12 * std::pow(100.0, 2));
        for (int k : {1, 2}) {
            const cplx ref3 = oracle::cat_moment_a_closed(3, alpha, n30, 3 * k, ct);
            CHECK(std::abs(moment_a_power(e3, 3 * k) - ref3) <= 1e-12 * std::pow(10.0, 3 * k));
        }
        CHECK(std::abs(oracle::cat_moment_a_closed(2, alpha, n20, 2, ct) - ref) < 1e-9 * std::max(1.0, std::abs(ref)));
        const double x2 = oracle::even_cat_x2(alpha, n20, ct);
        CHECK(std::abs(moment_x_power(e2, 2) - x2) <= 1e-6 * std::abs(x2));
        const double x3 = oracle::even_3cat_x3(alpha, n30, ct);
        CHECK(std::abs(moment_x_power(e3, 3) - x3) <= 1e-6 * std::max(1.0, std::abs(x3)));
    }
}

TEST_CASE("quadrature moments") {
    const FockVector vac = coherent_amps(0.0);
    CHECK(moment_x_power(vac, 2) == doctest::Approx(0.5));
    CHECK(moment_p_power(vac, 2) == doctest::Approx(0.5));
    CHECK(moment_x_power(vac, 4) == doctest::Approx(0.75));
    const double nbar = 9.0;
    const FockVector v = coherent_amps(std::sqrt(nbar));
    CHECK(moment_x_power(v, 1) == doctest::Approx(std::sqrt(2.0 * nbar)));
    CHECK(std::abs(moment_p_power(v, 1)) < 1e-12);
    CHECK_THROWS_AS(moment_x_power(v, 13), InvalidArgument);
    CHECK_THROWS_AS(moment_x_power(v, 0), InvalidArgument);
}

}

TEST_SUITE("kerr_collapse") {

// Stated expectation for the collapse epoch. The direct Poisson sum gives
// |A|^2 = 0.1131 here, so this check is known to fail.
TEST_CASE("coherent autocorrelation at T_rev/sqrt(2) is below 0.01") {
    const FockVector v = coherent_amps(alpha_of(20.0));
    const FockVector c = evolve_kerr(v, KerrParams::at_fraction(1.0, 1.0 / std::sqrt(2.0)));
    CHECK(autocorrelation(v, c) < 0.01);
}

}
