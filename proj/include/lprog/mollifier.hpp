#pragma once

#include <complex>
#include <cstdint>
#include <vector>

#include "lprog/characters.hpp"
#include "lprog/lfunction.hpp"
#include "lprog/polynomial.hpp"
#include "lprog/sieve.hpp"

namespace lprog {

enum class MollifierLabel { P1, P2, Custom };

const char* toString(MollifierLabel l);

/// Truncation length X and weight polynomial P of
///   M(s, chi, P) = sum_{m <= X} mu(m) chi(m) m^{-s} P(1 - log m / log X).
struct MollifierSpec {
    double X = 1.0;
    Polynomial poly;
    MollifierLabel label = MollifierLabel::Custom;

    /// P1(x) = x.
    static MollifierSpec p1(double X) { return {X, Polynomial{0.0, 1.0}, MollifierLabel::P1}; }
    /// P2(x) = 1.
    static MollifierSpec p2(double X) { return {X, Polynomial{1.0}, MollifierLabel::P2}; }
    static MollifierSpec custom(double X, Polynomial p) { return {X, std::move(p), MollifierLabel::Custom}; }
};

/// The mollifier for one character, with its coefficients
/// mu(m) chi(m) P(1 - log m / log X) precomputed for evaluation at many s.
class Mollifier {
public:
    /// Builds its own sieve up to floor(X).
    Mollifier(const DirichletCharacter& chi, const MollifierSpec& spec);
    Mollifier(const DirichletCharacter& chi, const MollifierSpec& spec, const SieveTable& sieve);

    const MollifierSpec& spec() const noexcept { return spec_; }

    std::complex<double> value(ComplexPoint s) const;
    /// d/ds M(s) = sum -log(m) c_m m^{-s}.
    std::complex<double> derivative(ComplexPoint s) const;
    /// sum_{m <= X, mu(m) chi(m) != 0} m^{-sigma} max_{[0,1]} |P|.
    double trivialBound(double sigma) const;

private:
    MollifierSpec spec_;
    std::vector<std::int64_t> indices_;
    std::vector<std::complex<double>> coeffs_;
    std::vector<double> logs_;
};

/// Sum evaluated by compensated summation ascending in m; X < 2 gives P(1).
std::complex<double> evalMollifier(ComplexPoint s, const DirichletCharacter& chi, const MollifierSpec& spec);

enum class CoeffKind { A, B };

/// Dirichlet convolution coefficients for 1 <= n <= floor(qUX):
///   A: a_n = sum_{lm = n, l <= qU, m <= X} mu(m)(1 - log m / log X)
///   B: b_n = sum_{lm = n, l <= qU, m <= X} mu(m)
struct ConvolvedCoeffs {
    CoeffKind kind = CoeffKind::A;
    std::int64_t q = 1;
    double U = 1.0;
    double X = 1.0;
    std::vector<double> values; // values[0] unused

    std::int64_t size() const noexcept { return static_cast<std::int64_t>(values.size()) - 1; }
    double operator[](std::int64_t n) const { return values[static_cast<std::size_t>(n)]; }
};

inline constexpr std::int64_t kMaxConvolutionLength = 100'000'000;

/// Throws std::invalid_argument when the sieve is shorter than qUX or qUX
/// exceeds kMaxConvolutionLength.
ConvolvedCoeffs buildCoeffs(CoeffKind kind, std::int64_t q, double U, double X, const SieveTable& sieve);

/// sum_{n <= N} chi(n) c_n n^{-s} over the stored coefficients.
std::complex<double> convolvedDirichletPolynomial(const ConvolvedCoeffs& c, const DirichletCharacter& chi, ComplexPoint s);

} // namespace lprog
