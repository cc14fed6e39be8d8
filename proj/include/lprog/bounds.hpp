#pragma once

#include <complex>
#include <cstdint>
#include <optional>

#include "lprog/characters.hpp"
#include "lprog/polynomial.hpp"
#include "lprog/progression.hpp"

namespace lprog {

/// floor(e^{j/beta}), returned as an integer-valued double because it leaves
/// the int64 range long before the j/beta <= 700 limit. Throws
/// std::range_error beyond that limit.
double ejBoundary(double beta, std::int64_t j);

inline constexpr double kMinSumMaxB = 1e8;

/// sum_{A < n <= B} w(n) min{T, ||beta log n||^{-1}} with w(n) = n^{-1/2}
/// when weighted and 1 otherwise; a zero distance contributes T.
/// Throws std::invalid_argument unless 1 <= A < B <= 1e8, beta > 0, T >= 1.
double minSumExact(double A, double B, double beta, double T, bool weighted);

enum class MinSumVariant { General, BetaGE1, IntervalLemma };

const char* toString(MinSumVariant v);

/// Right-hand sides without implied constants:
///   General:       e^{1/b}/(e^{1/2b} - 1) (T A^{-1/2} + (e^{1/b}/b) B^{1/2} (log B + 1/b))
///   BetaGE1:       b T A^{-1/2} + B^{1/2} log B            (requires beta >= 1)
///   IntervalLemma: T + (e^{1/b}/b) ((j+1)/b) e^{j/b}       (A = E_j, B = E_{j+1})
double minSumBoundShape(double A, double B, double beta, double T, MinSumVariant variant,
                        std::optional<std::int64_t> j = std::nullopt);

struct MinSumResult {
    double A = 1.0;
    double B = 2.0;
    double beta = 1.0;
    double T = 1.0;
    MinSumVariant variant = MinSumVariant::General;
    std::optional<std::int64_t> j; // interval index for IntervalLemma
    double exactValue = 0.0;
    double boundValue = 0.0;
    double ratio = 0.0;
};

/// Exact sum (weighted except for IntervalLemma) against its bound shape.
MinSumResult minSumCompare(double A, double B, double beta, double T, MinSumVariant variant,
                           std::optional<std::int64_t> j = std::nullopt);

/// w_L(x) = exp(L log x / log log x). Throws std::domain_error for x <= e.
double wFunction(double L, double x);

struct BauerInputs {
    double T = 2.0;
    double X = 2.0;
    std::int64_t q = 1;
    Polynomial Q1;
    std::optional<Polynomial> Q2;                                         // defaults to Q1
    std::optional<std::pair<std::complex<double>, std::complex<double>>> shifts; // (a, b); absent = limit a, b -> 0
    double epsilon = 0.05; // X is flagged when outside [T^eps, T^{1/2 - eps}]
};

struct BauerMainTerm {
    double T = 0.0;
    double X = 0.0;
    std::int64_t q = 1;
    double L = 0.0; // log(qT / 2pi)
    std::complex<double> E;
    double Etilde = 0.0;
    std::complex<double> mainTerm;    // T (Q1(1) Q2(1) + (e^{b-a} - 1)/(b - a) E), or its a, b -> 0 limit
    double derivativeMainTerm = 0.0;  // Etilde T L^2
    bool xInRange = true;
};

/// Main terms of the mollified second-moment integrals, with every integral
/// over [0, 1] done exactly by monomials. Throws std::invalid_argument unless
/// Q1(0) = Q2(0) = 0, T > 1, X > 1, and for the shifted form a != b with
/// |a|, |b| <= 1.
BauerMainTerm bauerMainTerm(const BauerInputs& in);

struct BauerQuadratureReport {
    double T = 0.0;
    double theta = 0.0;
    double X = 0.0;
    double integral = 0.0;
    double mainTerm = 0.0;
    double relativeDeviation = 0.0; // |integral - main| / |main|; absolute when main = 0
    double quadratureError = 0.0;
    long evaluations = 0;
    bool xInRange = true;
};

/// int_1^T |L(1/2 + it, chi) M(1/2 + it, chi, Q1)|^2 dt by adaptive Simpson
/// on unit panels, compared with T (Q1(1)^2 + (log T / log X) int Q1'^2).
/// Throws NumericError if a panel fails to converge.
BauerQuadratureReport bauerQuadratureCheck(double T, double theta, const DirichletCharacter& chi, const Polynomial& Q1,
                                           const EvalPlan& plan, double relTol = 1e-8);

} // namespace lprog
