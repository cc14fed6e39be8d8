#pragma once

#include <complex>
#include <cstdint>
#include <vector>

#include "lprog/characters.hpp"
#include "lprog/lfunction.hpp"
#include "lprog/mollifier.hpp"

namespace lprog {

/// s_k = 1/2 + 2 pi i (alpha + k beta); external units a = 2 pi alpha, b = 2 pi beta.
struct ProgressionSpec {
    double alpha = 0.0;
    double beta = 1.0;

    static ProgressionSpec fromExternal(double a, double b);
};

ComplexPoint pointOfProgression(const ProgressionSpec& spec, std::int64_t k);

/// How L(s, chi) is evaluated along a progression.
struct EvalPlan {
    EvalMethod method = EvalMethod::TruncatedSeries;
    double constantFactor = 8.0; // O_C stand-in for truncated evaluation
    double C = 2.0;
    int retryCap = 6;            // x-doublings before a point is left undetermined
};

enum class Verdict { Nonzero, Undetermined };

const char* toString(Verdict v);

struct NonvanishingVerdict {
    std::int64_t k = 0;
    double t = 0.0;
    std::complex<double> value;
    double errorRadius = 0.0;
    Verdict verdict = Verdict::Undetermined;
};

/// nonzero iff |value| > errorRadius.
Verdict classify(std::complex<double> value, double errorRadius) noexcept;

struct MomentReport {
    std::int64_t T = 0;
    ProgressionSpec spec;
    MollifierSpec mollifier;
    double X = 1.0;
    double theta = 0.0; // log X / log T; 0 when T = 1
    double U = 0.0;     // truncation parameter x used for every L(s_k)
    std::int64_t modulus = 0;
    std::int64_t label = 0;
    EvalMethod method = EvalMethod::TruncatedSeries;
    std::complex<double> s1;
    double s2 = 0.0;
    double csLowerBound = 0.0; // |S1|^2 / S2
    std::int64_t nonzeroCount = 0;
    std::int64_t undeterminedCount = 0;
    double perPointErrorBudget = 0.0; // sum_k |M(s_k)| errorRadius(L(s_k))
};

/// Mollifier length by the rule of the corresponding proof: X = T^theta for
/// P1 (and custom), X = sqrt(beta T / q) for P2 (floored at 1).
MollifierSpec standardMollifier(MollifierLabel label, std::int64_t T, double theta, double beta, std::int64_t q,
                                const Polynomial& custom = {});

/// U = 4 beta T for P2, 3(|alpha| + |beta|) T otherwise.
double truncationLength(MollifierLabel label, const ProgressionSpec& spec, std::int64_t T);

/// Computes S1, S2, the Cauchy–Schwarz count and per-point verdicts in one
/// pass. Per-point values may be computed in parallel; reductions run in
/// ascending k with compensated summation. beta < 0 is folded onto beta > 0
/// by conjugation.
MomentReport computeMoments(std::int64_t T, const ProgressionSpec& spec, const DirichletCharacter& chi,
                            const MollifierSpec& mollifier, const EvalPlan& plan);

MomentReport firstMoment(std::int64_t T, const ProgressionSpec& spec, const DirichletCharacter& chi,
                         const MollifierSpec& mollifier, const EvalPlan& plan);
MomentReport secondMoment(std::int64_t T, const ProgressionSpec& spec, const DirichletCharacter& chi,
                          const MollifierSpec& mollifier, const EvalPlan& plan);

struct ScanSummary {
    std::int64_t T = 0;
    std::int64_t nonzeroCount = 0;
    std::int64_t undeterminedCount = 0;
    double ratio = 0.0; // nonzeroCount / (T / log T)
    std::vector<NonvanishingVerdict> verdicts;
};

/// Per-point nonvanishing decisions for k = 1..T. Truncated evaluation
/// starts at x = 3(|alpha| + |beta|) T and doubles x on an undetermined
/// verdict up to plan.retryCap times.
ScanSummary nonvanishingScan(std::int64_t T, const ProgressionSpec& spec, const DirichletCharacter& chi,
                             const EvalPlan& plan);

/// Decides one point, retrying with doubled x from `x0` when truncated.
NonvanishingVerdict decidePoint(ComplexPoint s, std::int64_t k, const DirichletCharacter& chi, const EvalPlan& plan,
                                double x0);

/// sum_{k=1}^T n^{-2 pi i k beta}, by the closed form sin(pi T th)/sin(pi th)
/// times a phase, with th = beta log n reduced mod 1.
std::complex<double> geometricProgressionSum(std::int64_t n, double beta, std::int64_t T);

/// The same sum by direct term-by-term accumulation (exact phase reduction).
std::complex<double> geometricProgressionSumDirect(std::int64_t n, double beta, std::int64_t T);

/// min(T, 1 / (2 ||beta log n||)).
double geometricSumBound(std::int64_t n, double beta, std::int64_t T);

struct FirstNonzeroResult {
    std::int64_t k = 0;
    double theoremBound = 0.0;
    double safetyFactor = 1.0;
    bool withinBound = false;
    NonvanishingVerdict verdict;
};

/// The bare bound expression b^3 q w_D(b^3 q) for b >= 2 pi, or
/// b^{-1} q w_D(q) for 0 < b < 2 pi, where w_D(x) = exp(D log x / log log x).
double firstNonzeroTheoremBound(double b, std::int64_t q, double D);

/// Smallest k >= 1 with a nonzero verdict at 1/2 + i(a + k b). Throws
/// ExhaustionError past maxIndex and std::invalid_argument unless
/// 0 <= a < b, D > 8 log 2 and chi is non-principal.
FirstNonzeroResult firstNonzeroIndex(const DirichletCharacter& chi, double a, double b, double D, const EvalPlan& plan,
                                     double safetyFactor = 1.0, std::int64_t maxIndex = 100000);

struct GallagherReport {
    double lhs = 0.0;         // sum |F G|^2 over the grid
    double rhs = 0.0;         // I_FG / kappa + 2 sqrt(I_FG I_FG') + 2 sqrt(I_FG I_F'G)
    double integralFG = 0.0;
    double integralFGprime = 0.0;
    double integralFprimeG = 0.0;
    double quadratureError = 0.0;
    std::int64_t seriesTerms = 0;
    bool holds = false;       // lhs <= rhs (1 + quadTolerance)
};

/// Gallagher-type discrete-to-continuous check with F(t) = L(1/2 + it, chi)
/// (a fixed truncated Dirichlet polynomial long enough for the whole of
/// [T1, T2]) and G(t) = M(1/2 + it). Grid points must be kappa-well-spaced
/// inside [T1 + kappa/2, T2 - kappa/2]. Throws std::invalid_argument on a bad
/// grid and NumericError if a quadrature panel fails.
GallagherReport gallagherInequalityCheck(double T1, double T2, double kappa, const std::vector<double>& gridPoints,
                                         const DirichletCharacter& chi, const MollifierSpec& mollifier,
                                         const EvalPlan& plan, double quadTolerance = 1e-6);

} // namespace lprog
