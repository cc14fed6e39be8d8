#include "test_util.hpp"

#include <cmath>
#include <stdexcept>

#include "lprog/mollifier.hpp"
#include "lprog/sieve.hpp"
#include "oracles.hpp"

using namespace lprog;
using cplx = std::complex<double>;

TEST_CASE("polynomial basics")
{
    const Polynomial p{1.0, -2.0, 3.0, 0.0};
    CHECK(p.degree() == 2);
    CHECK(p(2.0) == 9.0);
    CHECK(p.derivative().coeffs() == std::vector<double>{-2.0, 6.0});
    CHECK(p.integral01() == doctest::Approx(1.0 - 1.0 + 1.0));
    CHECK((p * Polynomial{0.0, 1.0})(2.0) == 18.0);
    CHECK(Polynomial{}.isZero());
    CHECK(Polynomial{0.0, 0.0}.isZero());
    CHECK_THROWS_AS(Polynomial({1.0, std::nan("")}), std::invalid_argument);
}

TEST_CASE("short mollifiers reduce to P(1)")
{
    const auto chi = DirichletCharacter::fromConrey(4, 3);
    CHECK(evalMollifier({0.5, 3.0}, chi, MollifierSpec::p1(1.5)) == cplx{1.0, 0.0});
    CHECK(evalMollifier({0.5, 3.0}, chi, MollifierSpec::p2(1.5)) == cplx{1.0, 0.0});
    CHECK(evalMollifier({0.5, 3.0}, chi, MollifierSpec::custom(1.0, Polynomial{0.5, 0.25})) == cplx{0.75, 0.0});
    CHECK_THROWS_AS(evalMollifier({0.5, 0.0}, chi, MollifierSpec::p1(0.5)), std::invalid_argument);
}

TEST_CASE("mollifier against an independent direct loop")
{
    const auto chi4 = DirichletCharacter::fromConrey(4, 3);
    cplx direct{};
    for (int m = 1; m <= 100; ++m) {
        const int mu = oracle::mobius(m);
        if (mu == 0 || m % 2 == 0) continue;
        const double chim = m % 4 == 1 ? 1.0 : -1.0;
        direct += mu * chim / std::sqrt(static_cast<double>(m));
    }
    CHECK(std::abs(evalMollifier({0.5, 0.0}, chi4, MollifierSpec::p2(100.0)) - direct) <= 1e-13);

    const auto chi7 = DirichletCharacter::fromConrey(7, 3);
    const double X = 250.5;
    cplx weighted{};
    cplx deriv{};
    for (int m = 1; m <= 250; ++m) {
        const int mu = oracle::mobius(m);
        if (mu == 0) continue;
        const double y = 1.0 - std::log(static_cast<double>(m)) / std::log(X);
        const cplx term = static_cast<double>(mu) * chi7(m) * oracle::powNeg(m, {0.5, 9.0}) * y;
        weighted += term;
        deriv += -std::log(static_cast<double>(m)) * term;
    }
    const Mollifier M(chi7, MollifierSpec::p1(X));
    CHECK(std::abs(M.value({0.5, 9.0}) - weighted) <= 1e-12);
    CHECK(std::abs(M.derivative({0.5, 9.0}) - deriv) <= 1e-11);
}

TEST_CASE("trivial bound on the critical line")
{
    const auto chi = DirichletCharacter::fromConrey(5, 2);
    for (const auto& spec : {MollifierSpec::p1(300.0), MollifierSpec::p2(300.0)}) {
        const Mollifier M(chi, spec);
        double cap = 0.0;
        for (int m = 1; m <= 300; ++m) cap += 1.0 / std::sqrt(static_cast<double>(m));
        CHECK(M.trivialBound(0.5) <= cap);
        for (double t = -50.0; t <= 50.0; t += 0.37) REQUIRE(std::abs(M.value({0.5, t})) <= M.trivialBound(0.5));
    }
}

TEST_CASE("convolution coefficients: small-n identities")
{
    // The identities need every divisor pair (l, m) of n <= X, i.e. qU >= X.
    const double X = 1000.0;
    const std::int64_t q = 3;
    const double U = 334.0;
    const auto sieve = buildSieve(static_cast<std::int64_t>(q * U * X));
    const auto a = buildCoeffs(CoeffKind::A, q, U, X, sieve);
    const auto b = buildCoeffs(CoeffKind::B, q, U, X, sieve);
    CHECK(a[1] == 1.0);
    CHECK(b[1] == 1.0);
    CHECK(a[7] == doctest::Approx(std::log(7.0) / std::log(X)).epsilon(1e-14));
    CHECK(std::fabs(a[6]) <= 1e-15);
    for (std::int64_t n = 2; n <= 1000; ++n) {
        REQUIRE(std::fabs(a[n] - oracle::vonMangoldt(n) / std::log(X)) <= 1e-12);
        REQUIRE(b[n] == 0.0);
    }
}

TEST_CASE("convolution coefficients match a brute-force double loop")
{
    const std::int64_t q = 4;
    const double U = 25.0;
    const double X = 60.0;
    const auto sieve = buildSieve(6000);
    for (bool weighted : {true, false}) {
        const auto c = buildCoeffs(weighted ? CoeffKind::A : CoeffKind::B, q, U, X, sieve);
        const auto brute = oracle::bruteConvolution(weighted, q, U, X);
        REQUIRE(c.size() == 6000);
        for (std::int64_t n = 1; n <= c.size(); ++n) {
            REQUIRE(std::fabs(c[n] - brute[n]) <= 1e-12);
            REQUIRE(std::fabs(c[n]) <= std::ldexp(1.0, sieve.omegaCount[n]) + 1e-12);
        }
    }
}

TEST_CASE("convolution coefficient argument checks")
{
    const auto sieve = buildSieve(100);
    CHECK_THROWS_AS(buildCoeffs(CoeffKind::A, 3, 10.0, 10.0, sieve), std::invalid_argument);
    CHECK_THROWS_AS(buildCoeffs(CoeffKind::A, 0, 1.0, 1.0, sieve), std::invalid_argument);
    CHECK_NOTHROW(buildCoeffs(CoeffKind::B, 1, 10.0, 10.0, sieve));
}

TEST_CASE("mollified Dirichlet polynomial factors as a product")
{
    const auto chi = DirichletCharacter::fromConrey(5, 2);
    const std::int64_t q = 5;
    const double U = 40.0;
    const double X = 30.0;
    const auto sieve = buildSieve(static_cast<std::int64_t>(q * U * X));
    const auto a = buildCoeffs(CoeffKind::A, q, U, X, sieve);
    const TruncatedSeries L(chi, 0.5, static_cast<std::int64_t>(q * U));
    const Mollifier M(chi, MollifierSpec::p1(X), sieve);
    for (double t : {0.0, 2.5, 19.0, -40.0}) {
        const ComplexPoint s{0.5, t};
        const auto lhs = convolvedDirichletPolynomial(a, chi, s);
        const auto rhs = L.value(t) * M.value(s);
        REQUIRE(std::abs(lhs - rhs) <= 1e-9);
    }
}
