#include "test_util.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "lprog/characters.hpp"
#include "oracles.hpp"

using namespace lprog;
using cplx = std::complex<double>;

namespace {

bool near(cplx a, cplx b, double tol) { return std::abs(a - b) <= tol; }

bool sameTable(const std::vector<cplx>& a, const std::vector<cplx>& b, double tol)
{
    if (a.size() != b.size()) return false;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (!near(a[i], b[i], tol)) return false;
    return true;
}

} // namespace

TEST_CASE("character counts and labels")
{
    for (std::int64_t q = 1; q <= 60; ++q) {
        const auto chars = enumerateCharacters(q);
        REQUIRE(static_cast<std::int64_t>(chars.size()) == eulerPhi(q));
        REQUIRE(chars.front().isPrincipal());
        REQUIRE(chars.front().label() == 1);
        for (std::size_t i = 1; i < chars.size(); ++i) {
            REQUIRE(chars[i - 1].label() < chars[i].label());
            REQUIRE_FALSE(chars[i].isPrincipal());
        }
    }
}

TEST_CASE("modulus 1 has one trivial character")
{
    const auto chars = enumerateCharacters(1);
    REQUIRE(chars.size() == 1);
    CHECK(chars[0].isPrincipal());
    CHECK(chars[0](0) == cplx{1.0, 0.0});
    CHECK(chars[0](17) == cplx{1.0, 0.0});
}

TEST_CASE("the non-principal character mod 4")
{
    const auto chars = enumerateCharacters(4);
    REQUIRE(chars.size() == 2);
    const auto& chi = chars[1];
    CHECK(chi.label() == 3);
    CHECK(chi(3) == cplx{-1.0, 0.0});
    CHECK(chi(7) == cplx{-1.0, 0.0});
    CHECK(chi(4) == cplx{0.0, 0.0});
    CHECK((chi.parity() == Parity::Odd));
    CHECK(chi.isPrimitive());
}

TEST_CASE("characters mod 5 are all homomorphisms from the generator 2")
{
    const auto brute = oracle::cyclicCharacters(5, 2);
    const auto chars = enumerateCharacters(5);
    REQUIRE(chars.size() == brute.size());
    for (const auto& chi : chars) {
        const bool found = std::any_of(brute.begin(), brute.end(),
                                       [&](const auto& v) { return sameTable(chi.values(), v, 1e-15); });
        CHECK(found);
    }
    for (const auto& v : brute) {
        const bool found = std::any_of(chars.begin(), chars.end(),
                                       [&](const auto& chi) { return sameTable(chi.values(), v, 1e-15); });
        CHECK(found);
    }
}

TEST_CASE("quadratic character mod 5")
{
    // Squares mod 5 are {1, 4}, so 2 and 3 are non-residues.
    const auto chi = DirichletCharacter::fromConrey(5, 4);
    CHECK(chi.order() == 2);
    CHECK(chi(2) == cplx{-1.0, 0.0});
    CHECK(chi(4) == cplx{1.0, 0.0});
    // chi(1) + chi(2) + chi(3) = 1 - 1 - 1.
    CHECK(near(partialCharSum(chi, 3.0).value, {-1.0, 0.0}, 0.0));
    const auto tau = gaussSum(chi);
    CHECK(std::fabs(tau.real() - std::sqrt(5.0)) <= 1e-12);
    CHECK(std::fabs(tau.imag()) <= 1e-12);
}

TEST_CASE("Gauss sum of the character mod 4")
{
    const auto chi = DirichletCharacter::fromConrey(4, 3);
    CHECK(near(gaussSum(chi), {0.0, 2.0}, 1e-14));
}

TEST_CASE("value invariants: zeros, unit modulus, periodicity, multiplicativity")
{
    for (std::int64_t q : {1, 2, 3, 8, 9, 12, 16, 25, 27, 32, 45, 60, 64, 97, 100}) {
        for (const auto& chi : enumerateCharacters(q)) {
            for (std::int64_t n = -q; n <= 2 * q; ++n) {
                const bool coprime = oracle::gcd(n, q) == 1;
                if (coprime)
                    REQUIRE(std::fabs(std::abs(chi(n)) - 1.0) <= 1e-12);
                else
                    REQUIRE(chi(n) == cplx{0.0, 0.0});
                REQUIRE(chi(n + q) == chi(n));
            }
            for (std::int64_t m = 1; m <= q; ++m)
                for (std::int64_t n = 1; n <= q; ++n) REQUIRE(near(chi(m * n), chi(m) * chi(n), 1e-12));
        }
    }
}

TEST_CASE("orthogonality relations for all q <= 100")
{
    for (std::int64_t q = 1; q <= 100; ++q) {
        const auto chars = enumerateCharacters(q);
        for (const auto& chi : chars) {
            cplx row{0.0, 0.0};
            for (std::int64_t a = 1; a <= q; ++a) row += chi(a);
            REQUIRE(near(row, chi.isPrincipal() ? cplx(static_cast<double>(eulerPhi(q)), 0.0) : cplx{}, 1e-10));
        }
        for (std::int64_t n = 1; n <= q; ++n) {
            if (oracle::gcd(n, q) != 1) continue;
            cplx col{0.0, 0.0};
            for (const auto& chi : chars) col += chi(n);
            const double want = n % q == 1 % q ? static_cast<double>(eulerPhi(q)) : 0.0;
            REQUIRE(near(col, {want, 0.0}, 1e-10));
        }
    }
}

TEST_CASE("Conrey label round trip")
{
    for (std::int64_t q : {7, 15, 24, 49, 81, 128}) {
        for (const auto& chi : enumerateCharacters(q)) {
            const auto again = DirichletCharacter::fromConrey(q, chi.label());
            REQUIRE(again.exponents() == chi.exponents());
            REQUIRE(again.order() == chi.order());
        }
    }
}

TEST_CASE("conjugate character")
{
    for (const auto& chi : enumerateCharacters(35)) {
        const auto c = chi.conjugate();
        for (std::int64_t n = 0; n < 35; ++n) REQUIRE(near(c(n), std::conj(chi(n)), 1e-15));
    }
}

TEST_CASE("fromConrey rejects bad input")
{
    CHECK_THROWS_AS(DirichletCharacter::fromConrey(0, 1), std::invalid_argument);
    CHECK_THROWS_AS(DirichletCharacter::fromConrey(10, 4), std::invalid_argument);
}

TEST_CASE("conductor, primitivity and induction")
{
    SUBCASE("primitive characters induce themselves")
    {
        const auto chi = DirichletCharacter::fromConrey(7, 3);
        REQUIRE(chi.isPrimitive());
        const auto star = inducedPrimitive(chi);
        CHECK(star.modulus() == 7);
        CHECK(star.exponents() == chi.exponents());
    }
    SUBCASE("mod 8 character induced from mod 4")
    {
        const auto chi4 = DirichletCharacter::fromConrey(4, 3);
        int matches = 0;
        for (const auto& chi : enumerateCharacters(8)) {
            if (chi.conductor() != 4) continue;
            ++matches;
            const auto star = inducedPrimitive(chi);
            CHECK(star.modulus() == 4);
            for (std::int64_t n = 1; n < 8; n += 2) CHECK(star(n) == chi4(n));
        }
        CHECK(matches == 1);
    }
    SUBCASE("mod 12 character of conductor 3")
    {
        const auto chi3 = DirichletCharacter::fromConrey(3, 2);
        int matches = 0;
        for (const auto& chi : enumerateCharacters(12)) {
            if (chi.conductor() != 3) continue;
            ++matches;
            const auto star = inducedPrimitive(chi);
            CHECK(star.modulus() == 3);
            for (std::int64_t n = 1; n < 12; ++n)
                if (oracle::gcd(n, 12) == 1) CHECK(star(n) == chi(n));
            CHECK(star.exponents() == chi3.exponents());
        }
        CHECK(matches == 1);
    }
    SUBCASE("principal input is rejected")
    {
        CHECK_THROWS_AS(inducedPrimitive(DirichletCharacter::fromConrey(9, 1)), std::invalid_argument);
    }
    SUBCASE("conductor is the least period on coprime residues")
    {
        for (std::int64_t q = 2; q <= 72; ++q) {
            for (const auto& chi : enumerateCharacters(q)) {
                std::int64_t best = q;
                for (std::int64_t d = 1; d < q; ++d) {
                    if (q % d) continue;
                    bool ok = true;
                    for (std::int64_t n = 1; n <= q && ok; ++n)
                        if (oracle::gcd(n, q) == 1 && n % d == 1 % d && chi(n) != cplx{1.0, 0.0}) ok = false;
                    if (ok) {
                        best = d;
                        break;
                    }
                }
                REQUIRE(chi.conductor() == best);
                REQUIRE(chi.isPrimitive() == (best == q));
            }
        }
    }
}

TEST_CASE("Gauss sums of primitive characters have modulus sqrt(q)")
{
    for (std::int64_t q = 3; q <= 200; ++q)
        for (const auto& chi : enumerateCharacters(q))
            if (chi.isPrimitive()) REQUIRE(std::fabs(std::abs(gaussSum(chi)) - std::sqrt(static_cast<double>(q))) <= 1e-9);
}

TEST_CASE("partial character sums")
{
    const auto chi = DirichletCharacter::fromConrey(11, 2);
    CHECK(partialCharSum(chi, 0.0).value == cplx{});
    CHECK(partialCharSum(chi, 0.99).value == cplx{});
    CHECK(std::abs(partialCharSum(chi, 11.0).value) <= 1e-14);
    CHECK(std::abs(partialCharSum(chi, 33.0).value) <= 1e-14);
    CHECK_THROWS_AS(partialCharSum(chi, -1.0), std::invalid_argument);

    cplx direct{};
    for (std::int64_t a = 1; a <= 57; ++a) direct += chi(a);
    CHECK(near(partialCharSum(chi, 57.5).value, direct, 1e-12));
}

TEST_CASE("Polya-Vinogradov bound over a u-grid")
{
    for (std::int64_t q = 3; q <= 200; ++q) {
        const double cap = std::sqrt(static_cast<double>(q)) * std::log(static_cast<double>(q)) + 1.0;
        for (const auto& chi : enumerateCharacters(q)) {
            if (!chi.isPrimitive()) continue;
            for (std::int64_t u = 0; u <= 2 * q; ++u)
                REQUIRE(std::abs(partialCharSum(chi, static_cast<double>(u) + 0.5).value) <= cap);
        }
    }
}
