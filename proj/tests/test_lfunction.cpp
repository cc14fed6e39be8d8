#include "test_util.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "lprog/errors.hpp"
#include "lprog/lfunction.hpp"
#include "oracles.hpp"

using namespace lprog;
using cplx = std::complex<double>;

namespace {

constexpr double kPi = std::numbers::pi;

// L(1/2, chi) for the quadratic character mod 5, cross-checked below against a
// long truncated series and frozen here.
constexpr double kLHalfChi5 = 0.23175094750401499;

} // namespace

TEST_CASE("Hurwitz zeta special values")
{
    const auto z1 = hurwitzZeta({2.0, 0.0}, 1.0);
    CHECK(std::abs(z1.value - cplx{kPi * kPi / 6.0, 0.0}) <= 1e-10);
    CHECK(z1.errorRadius <= 1e-10);
    CHECK((z1.method == EvalMethod::HurwitzOracle));

    const auto zh = hurwitzZeta({2.0, 0.0}, 0.5);
    CHECK(std::abs(zh.value - cplx{kPi * kPi / 2.0, 0.0}) <= 1e-10);
}

TEST_CASE("Hurwitz zeta against a long direct sum with tail")
{
    const cplx s{0.5, 10.0};
    const auto z = hurwitzZeta({0.5, 10.0}, 1.0 / 3.0);
    const auto brute = oracle::hurwitzBrute(s, 1.0 / 3.0, 1000000);
    CHECK(std::abs(z.value - brute) <= 1e-9);
    CHECK(std::abs(z.value - brute) <= z.errorRadius + 1e-10);

    const auto z2 = hurwitzZeta({0.75, -3.0}, 0.9);
    CHECK(std::abs(z2.value - oracle::hurwitzBrute({0.75, -3.0}, 0.9, 200000)) <= 1e-9);
}

TEST_CASE("Hurwitz zeta error radius stays below 1e-10 up to |t| = 200")
{
    for (double t : {0.0, 1.0, 37.5, -80.0, 150.0, 200.0, -200.0})
        for (double sigma : {0.1, 0.5, 0.9, 2.0})
            for (double alpha : {0.05, 0.5, 1.0}) {
                const auto z = hurwitzZeta({sigma, t}, alpha);
                REQUIRE(std::isfinite(z.errorRadius));
                REQUIRE(z.errorRadius <= 1e-10);
            }
}

TEST_CASE("Hurwitz zeta argument errors")
{
    CHECK_THROWS_AS(hurwitzZeta({1.0, 0.0}, 0.5), PoleError);
    CHECK_THROWS_AS(hurwitzZeta({2.0, 0.0}, 0.0), std::invalid_argument);
    CHECK_THROWS_AS(hurwitzZeta({2.0, 0.0}, 1.5), std::invalid_argument);
    CHECK_NOTHROW(hurwitzZetaRegularized({1.0, 0.0}, 0.5));
}

TEST_CASE("L-values through Hurwitz zeta")
{
    const auto chi4 = DirichletCharacter::fromConrey(4, 3);
    SUBCASE("Leibniz series at s = 1")
    {
        const auto v = lViaHurwitz({1.0, 0.0}, chi4);
        CHECK(std::abs(v.value - cplx{kPi / 4.0, 0.0}) <= 1e-10);
        CHECK(v.errorRadius <= 1e-10);
    }
    SUBCASE("Catalan's constant at s = 2")
    {
        const double G = oracle::catalan();
        CHECK(std::fabs(G - 0.91596559417721901505) <= 1e-15);
        CHECK(std::abs(lViaHurwitz({2.0, 0.0}, chi4).value - cplx{G, 0.0}) <= 1e-10);
    }
    SUBCASE("quadratic character mod 5 at s = 1/2")
    {
        const auto chi5 = DirichletCharacter::fromConrey(5, 4);
        const auto v = lViaHurwitz({0.5, 0.0}, chi5);
        CHECK(std::fabs(v.value.imag()) <= 1e-12);
        CHECK(v.value.real() > 0.1);
        CHECK(std::fabs(v.value.real() - kLHalfChi5) <= 1e-10);
        const auto tr = lTruncated({0.5, 0.0}, chi5, {2.0, 2.0e6, 8.0});
        CHECK(std::abs(tr.value - v.value) <= tr.errorRadius);
        CHECK(std::abs(tr.value - v.value) <= 1e-3);
    }
    SUBCASE("principal characters and sigma <= 0 are rejected")
    {
        CHECK_THROWS_AS(lViaHurwitz({0.5, 1.0}, DirichletCharacter::fromConrey(5, 1)), std::invalid_argument);
        CHECK_THROWS(lViaHurwitz({0.0, 1.0}, chi4));
    }
}

TEST_CASE("truncated series")
{
    const auto chi4 = DirichletCharacter::fromConrey(4, 3);
    const auto chi3 = DirichletCharacter::fromConrey(3, 2);
    SUBCASE("s = 1/2, x = 10^4 agrees with the oracle")
    {
        const auto tr = lTruncated({0.5, 0.0}, chi4, {2.0, 1e4, 8.0});
        const auto or_ = lViaHurwitz({0.5, 0.0}, chi4);
        CHECK(tr.termsUsed == 40000);
        CHECK((tr.method == EvalMethod::TruncatedSeries));
        CHECK(std::abs(tr.value - or_.value) <= tr.errorRadius);
    }
    SUBCASE("s = 1/2 + 30i, C = 2, x = 40")
    {
        const auto tr = lTruncated({0.5, 30.0}, chi3, {2.0, 40.0, 8.0});
        const auto or_ = lViaHurwitz({0.5, 30.0}, chi3);
        CHECK(std::abs(tr.value - or_.value) <= tr.errorRadius);
    }
    SUBCASE("empty sum when qx < 1")
    {
        const auto tr = lTruncated({0.5, 0.0}, chi4, {2.0, 0.2, 8.0});
        CHECK(tr.value == cplx{});
        CHECK(tr.termsUsed == 0);
        CHECK(tr.errorRadius == doctest::Approx(truncationErrorRadius({0.5, 0.0}, 4, {2.0, 0.2, 8.0})));
    }
    SUBCASE("precondition violations name the bound")
    {
        CHECK_THROWS_AS(lTruncated({0.5, 100.0}, chi4, {2.0, 10.0, 8.0}), std::domain_error);
        CHECK_THROWS_AS(lTruncated({0.0, 1.0}, chi4, {2.0, 10.0, 8.0}), std::domain_error);
        CHECK_THROWS_AS(lTruncated({0.5, 1.0}, chi4, {1.0, 10.0, 8.0}), std::domain_error);
        try {
            lTruncated({0.5, 100.0}, chi4, {2.0, 10.0, 8.0});
        } catch (const std::domain_error& e) {
            CHECK(std::string(e.what()).find("x > C|t|/2pi") != std::string::npos);
        }
        CHECK_THROWS_AS(lTruncated({0.5, 1.0}, DirichletCharacter::fromConrey(4, 1), {2.0, 10.0, 8.0}),
                        std::invalid_argument);
    }
    SUBCASE("doubling x scales the radius by at most 2^-sigma")
    {
        for (double sigma : {0.25, 0.5, 0.8})
            for (double t : {0.0, 3.0, 40.0})
                for (double x : {20.0, 100.0, 1000.0}) {
                    const TruncationPlan a{2.0, x, 8.0};
                    const TruncationPlan b{2.0, 2.0 * x, 8.0};
                    const double ra = truncationErrorRadius({sigma, t}, 7, a);
                    const double rb = truncationErrorRadius({sigma, t}, 7, b);
                    REQUIRE(rb <= std::pow(2.0, -sigma) * ra * (1.0 + 1e-12));
                }
    }
    SUBCASE("series values match a direct loop")
    {
        const TruncatedSeries ser(chi3, 0.5, 3000);
        cplx direct{};
        cplx deriv{};
        for (std::int64_t n = 3000; n >= 1; --n) {
            const cplx term = chi3(n) * oracle::powNeg(static_cast<double>(n), {0.5, 17.0});
            direct += term;
            deriv += -std::log(static_cast<double>(n)) * term;
        }
        CHECK(std::abs(ser.value(17.0) - direct) <= 1e-11);
        CHECK(std::abs(ser.derivative(17.0) - deriv) <= 1e-10);
    }
}

TEST_CASE("conjugation symmetry")
{
    for (const auto& chi : enumerateCharacters(7)) {
        if (chi.isPrincipal()) continue;
        for (double t : {-12.0, 0.0, 4.5, 33.0}) {
            const auto a = lViaHurwitz({0.5, t}, chi);
            const auto b = lViaHurwitz({0.5, -t}, chi.conjugate());
            REQUIRE(std::abs(a.value - std::conj(b.value)) <= a.errorRadius + b.errorRadius + 1e-13);
        }
    }
}

TEST_CASE("fractional-part identity")
{
    SUBCASE("x = 0")
    {
        for (const auto& chi : enumerateCharacters(9)) {
            if (chi.isPrincipal()) continue;
            cplx w{};
            for (std::int64_t a = 1; a <= 9; ++a) w += static_cast<double>(a) * chi(a);
            const auto [lhs, rhs] = fractionalPartIdentity(chi, 0.0);
            CHECK(std::abs(rhs + w / 9.0) <= 1e-13);
            CHECK(std::abs(lhs - rhs) <= 1e-12);
        }
    }
    SUBCASE("mod 4 at x = 0.6")
    {
        const auto [lhs, rhs] = fractionalPartIdentity(DirichletCharacter::fromConrey(4, 3), 0.6);
        CHECK(std::abs(lhs - rhs) <= 1e-12);
    }
    SUBCASE("mod 7 on a 100-point grid")
    {
        for (const auto& chi : enumerateCharacters(7)) {
            if (chi.isPrincipal()) continue;
            for (int i = 0; i < 100; ++i) {
                const auto [lhs, rhs] = fractionalPartIdentity(chi, i / 100.0);
                REQUIRE(std::abs(lhs - rhs) <= 1e-12);
            }
        }
    }
    SUBCASE("argument checks")
    {
        const auto chi = DirichletCharacter::fromConrey(4, 3);
        CHECK_THROWS_AS(fractionalPartIdentity(chi, 1.0), std::invalid_argument);
        CHECK_THROWS_AS(fractionalPartIdentity(DirichletCharacter::fromConrey(4, 1), 0.5), std::invalid_argument);
    }
}

TEST_CASE("partial-summation form of Hurwitz zeta")
{
    SUBCASE("s = 2, alpha = 1/2, x = 10, N = 10^4")
    {
        const auto r = hurwitzPartialResidual({2.0, 0.0}, 0.5, 10.0, 1e4);
        CHECK(r.bound == doctest::Approx(2e-8).epsilon(1e-12));
        CHECK(r.residual <= r.bound);
    }
    SUBCASE("s = 1/2 + 5i, alpha = 1/3, x = 20, N = 10^6")
    {
        const auto r = hurwitzPartialResidual({0.5, 5.0}, 1.0 / 3.0, 20.0, 1e6);
        CHECK(r.bound == doctest::Approx(2.0 * std::abs(cplx{0.5, 5.0}) / 0.5 * 1e-3));
        CHECK(r.residual <= r.bound);
    }
    SUBCASE("multiplying N by 10 scales the bound by 10^-sigma")
    {
        const auto a = hurwitzPartialResidual({0.7, 2.0}, 0.25, 5.0, 100.0);
        const auto b = hurwitzPartialResidual({0.7, 2.0}, 0.25, 5.0, 1000.0);
        CHECK(b.bound / a.bound == doctest::Approx(std::pow(10.0, -0.7)));
        CHECK(a.residual <= a.bound);
        CHECK(b.residual <= b.bound);
    }
}
