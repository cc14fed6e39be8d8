#pragma once

#include <complex>
#include <cstdint>
#include <utility>
#include <vector>

#include "lprog/characters.hpp"

namespace lprog {

/// s = sigma + i t.
struct ComplexPoint {
    double sigma = 0.5;
    double t = 0.0;

    std::complex<double> s() const noexcept { return {sigma, t}; }
};

enum class EvalMethod { HurwitzOracle, TruncatedSeries };

const char* toString(EvalMethod m);

/// A complex value together with an error radius: the true value lies in the
/// closed disc of that radius about `value` (up to the calibration of any
/// empirical constant that went into the radius).
struct EvaluatedValue {
    std::complex<double> value;
    double errorRadius = 0.0;
    EvalMethod method = EvalMethod::TruncatedSeries;
    std::int64_t termsUsed = 0;
};

/// Parameters of the truncated Dirichlet series sum_{n <= q x} chi(n) n^{-s}.
/// `constantFactor` stands in for the unspecified O_C-constant of the
/// truncation error bound.
struct TruncationPlan {
    double C = 2.0;
    double x = 1.0;
    double constantFactor = 8.0;
};

inline constexpr int kDefaultHurwitzShift = 30;
inline constexpr int kDefaultBernoulliTerms = 10;
inline constexpr int kMaxBernoulliTerms = 13;

/// zeta(s, alpha) by Euler–Maclaurin. The index shift actually used is
/// max(shiftN, ceil(|s|) + 2 * bernoulliTerms) so that the correction series
/// decays geometrically for every t. The error radius is four times the
/// first omitted correction term plus a rounding budget.
///
/// Throws PoleError at s = 1 and std::invalid_argument for alpha outside (0, 1].
EvaluatedValue hurwitzZeta(ComplexPoint s, double alpha, int shiftN = kDefaultHurwitzShift,
                           int bernoulliTerms = kDefaultBernoulliTerms);

/// zeta(s, alpha) - 1/(s - 1): entire in s, finite at s = 1.
EvaluatedValue hurwitzZetaRegularized(ComplexPoint s, double alpha, int shiftN = kDefaultHurwitzShift,
                                      int bernoulliTerms = kDefaultBernoulliTerms);

/// L(s, chi) = q^{-s} sum_a chi(a) zeta(s, a/q). The pole terms cancel because
/// sum_a chi(a) = 0, so the regularized Hurwitz function is used and s = 1 is
/// allowed. Requires a non-principal chi and sigma > 0.
EvaluatedValue lViaHurwitz(ComplexPoint s, const DirichletCharacter& chi);

/// Truncated series value with the O-term radius
///   constantFactor * q^{1/2-sigma} x^{-sigma} log q (1 + min{sigma/(x log q), |t|/sigma})
/// plus a floating-point rounding budget. Throws std::domain_error naming the
/// violated bound when sigma <= 0, C <= 1 or x <= C|t|/2pi, and
/// std::invalid_argument for principal chi.
EvaluatedValue lTruncated(ComplexPoint s, const DirichletCharacter& chi, const TruncationPlan& plan);

/// The error radius lTruncated would attach, without the rounding budget.
double truncationErrorRadius(ComplexPoint s, std::int64_t q, const TruncationPlan& plan);

/// Precomputed sum_{n <= N} chi(n) n^{-sigma} e^{-i t log n} for repeated
/// evaluation at many t on one vertical line.
class TruncatedSeries {
public:
    TruncatedSeries(const DirichletCharacter& chi, double sigma, std::int64_t terms);

    std::int64_t terms() const noexcept { return terms_; }
    double sigma() const noexcept { return sigma_; }

    std::complex<double> value(double t) const;
    /// d/ds of the series, i.e. sum -log(n) chi(n) n^{-s}.
    std::complex<double> derivative(double t) const;
    /// Sum of |chi(n)| n^{-sigma}; scales the rounding budget.
    double absoluteMass() const noexcept { return mass_; }

private:
    double sigma_;
    std::int64_t terms_;
    std::vector<double> coeffRe_;
    std::vector<double> coeffIm_;
    std::vector<double> logs_;
    double mass_ = 0.0;
};

/// Rounding budget for a series of `mass` total magnitude evaluated at height t
/// with largest log n equal to `maxLog`.
double seriesRoundingBudget(double mass, double t, double maxLog);

/// Both sides of
///   sum_{a=1}^q chi(a)({x - a/q} - 1/2) = -sum_{a <= qx} chi(a) - (1/q) sum_{a=1}^q a chi(a)
/// evaluated independently. Requires non-principal chi and 0 <= x < 1.
std::pair<std::complex<double>, std::complex<double>> fractionalPartIdentity(const DirichletCharacter& chi, double x);

struct HurwitzPartialReport {
    double residual = 0.0;
    double bound = 0.0;           // 2 (|s|/sigma) N^{-sigma}
    double quadratureError = 0.0; // summed Simpson error estimates
};

/// Residual of the partial-summation representation of zeta(s, alpha)
/// truncated at N, with the oscillatory integral done by panel-wise
/// adaptive Simpson (panels break where {u - alpha} jumps).
/// Throws NumericError if any panel fails to converge.
HurwitzPartialReport hurwitzPartialResidual(ComplexPoint s, double alpha, double x, double N,
                                            double absTol = 1e-12, int maxDepth = 40);

} // namespace lprog
