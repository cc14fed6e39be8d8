#include "lprog/progression.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <limits>
#include <optional>
#include <stdexcept>
#include <string>

#include "lprog/errors.hpp"
#include "lprog/numeric.hpp"
#include "lprog/quadrature.hpp"
#include "lprog/summation.hpp"

namespace lprog {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

void requireNonPrincipal(const DirichletCharacter& chi, const char* where)
{
    if (chi.isPrincipal()) throw std::invalid_argument(std::string(where) + ": chi must be non-principal");
}

EvaluatedValue evaluateTruncatedSeries(const TruncatedSeries& series, ComplexPoint s, std::int64_t q,
                                       const TruncationPlan& tp)
{
    EvaluatedValue out;
    out.value = series.value(s.t);
    out.method = EvalMethod::TruncatedSeries;
    out.termsUsed = series.terms();
    const double maxLog = series.terms() > 0 ? std::log(static_cast<double>(series.terms())) : 0.0;
    out.errorRadius = truncationErrorRadius(s, q, tp) + seriesRoundingBudget(series.absoluteMass(), s.t, maxLog);
    return out;
}

// max_k |t_k| / 2pi over k = 1..T, attained at an endpoint.
double maxHeightTurns(const ProgressionSpec& spec, std::int64_t T)
{
    return std::max(std::fabs(spec.alpha + spec.beta), std::fabs(spec.alpha + static_cast<double>(T) * spec.beta));
}

void validatePlan(const EvalPlan& plan)
{
    if (!(plan.C > 1.0)) throw std::invalid_argument("evalPlan: C must exceed 1");
    if (!(plan.constantFactor > 0.0)) throw std::invalid_argument("evalPlan: constantFactor must be positive");
    if (plan.retryCap < 0) throw std::invalid_argument("evalPlan: retryCap must be >= 0");
}

// Triple of integrands for the Gallagher check, integrated together so each
// sample of F, F', G, G' is shared.
struct Triple {
    double a = 0.0, b = 0.0, c = 0.0;

    friend Triple operator+(Triple x, Triple y) { return {x.a + y.a, x.b + y.b, x.c + y.c}; }
    friend Triple operator-(Triple x, Triple y) { return {x.a - y.a, x.b - y.b, x.c - y.c}; }
    friend Triple operator*(double k, Triple x) { return {k * x.a, k * x.b, k * x.c}; }
    friend Triple operator*(Triple x, double k) { return k * x; }
    friend Triple operator/(Triple x, double k) { return {x.a / k, x.b / k, x.c / k}; }
    friend double abs(Triple x) { return std::max({std::fabs(x.a), std::fabs(x.b), std::fabs(x.c)}); }
};

} // namespace

ProgressionSpec ProgressionSpec::fromExternal(double a, double b) { return {a / kTwoPi, b / kTwoPi}; }

ComplexPoint pointOfProgression(const ProgressionSpec& spec, std::int64_t k)
{
    return {0.5, kTwoPi * (spec.alpha + static_cast<double>(k) * spec.beta)};
}

const char* toString(Verdict v) { return v == Verdict::Nonzero ? "nonzero" : "undetermined"; }

Verdict classify(std::complex<double> value, double errorRadius) noexcept
{
    return std::abs(value) > errorRadius ? Verdict::Nonzero : Verdict::Undetermined;
}

MollifierSpec standardMollifier(MollifierLabel label, std::int64_t T, double theta, double beta, std::int64_t q,
                                const Polynomial& custom)
{
    if (T < 1) throw std::invalid_argument("standardMollifier: T must be >= 1");
    if (label == MollifierLabel::P2) {
        if (!(beta > 0.0) || q < 1) throw std::invalid_argument("standardMollifier: P2 needs beta > 0 and q >= 1");
        return MollifierSpec::p2(std::max(1.0, std::sqrt(beta * static_cast<double>(T) / static_cast<double>(q))));
    }
    if (!(theta > 0.0 && theta < 1.0)) throw std::invalid_argument("standardMollifier: theta must lie in (0, 1)");
    const double X = std::max(1.0, std::pow(static_cast<double>(T), theta));
    if (label == MollifierLabel::P1) return MollifierSpec::p1(X);
    return MollifierSpec::custom(X, custom);
}

double truncationLength(MollifierLabel label, const ProgressionSpec& spec, std::int64_t T)
{
    const double Td = static_cast<double>(T);
    if (label == MollifierLabel::P2) return 4.0 * spec.beta * Td;
    return 3.0 * (std::fabs(spec.alpha) + std::fabs(spec.beta)) * Td;
}

MomentReport computeMoments(std::int64_t T, const ProgressionSpec& spec, const DirichletCharacter& chi,
                            const MollifierSpec& mollifier, const EvalPlan& plan)
{
    requireNonPrincipal(chi, "moments");
    validatePlan(plan);
    if (T < 1) throw std::invalid_argument("moments: T must be >= 1");
    if (!std::isfinite(spec.alpha) || !std::isfinite(spec.beta) || spec.beta == 0.0)
        throw std::invalid_argument("moments: alpha must be finite and beta finite and nonzero");

    if (spec.beta < 0.0) {
        // L(conj s, conj chi) = conj L(s, chi), and M has real weights, so the
        // progression (-alpha, -beta) with conj chi gives conjugate terms.
        MomentReport r = computeMoments(T, {-spec.alpha, -spec.beta}, chi.conjugate(), mollifier, plan);
        r.spec = spec;
        r.label = chi.label();
        r.s1 = std::conj(r.s1);
        return r;
    }
    if (mollifier.label == MollifierLabel::P2 && !(spec.alpha >= 0.0 && spec.alpha < spec.beta))
        throw std::invalid_argument("moments: the P2 run requires 0 <= alpha < beta");

    MomentReport rep;
    rep.T = T;
    rep.spec = spec;
    rep.mollifier = mollifier;
    rep.X = mollifier.X;
    rep.theta = T > 1 ? std::log(mollifier.X) / std::log(static_cast<double>(T)) : 0.0;
    rep.U = truncationLength(mollifier.label, spec, T);
    rep.modulus = chi.modulus();
    rep.label = chi.label();
    rep.method = plan.method;

    const std::int64_t q = chi.modulus();
    std::optional<TruncatedSeries> series;
    const TruncationPlan tp{plan.C, rep.U, plan.constantFactor};
    if (plan.method == EvalMethod::TruncatedSeries) {
        const double need = plan.C * maxHeightTurns(spec, T);
        if (!(rep.U > need))
            throw std::invalid_argument("moments: U = " + std::to_string(rep.U) + " does not exceed C|t|/2pi = "
                                        + std::to_string(need));
        series.emplace(chi, 0.5, static_cast<std::int64_t>(std::floor(static_cast<double>(q) * rep.U)));
    }
    const Mollifier mol(chi, mollifier);

    const auto n = static_cast<std::size_t>(T);
    std::vector<EvaluatedValue> Lk(n);
    std::vector<std::complex<double>> Mk(n);
    parallelFor(n, [&](std::size_t i) {
        const ComplexPoint s = pointOfProgression(spec, static_cast<std::int64_t>(i) + 1);
        Lk[i] = series ? evaluateTruncatedSeries(*series, s, q, tp) : lViaHurwitz(s, chi);
        Mk[i] = mol.value(s);
    });

    ComplexNeumaierSum s1;
    NeumaierSum s2;
    NeumaierSum budget;
    for (std::size_t i = 0; i < n; ++i) {
        const auto lm = Lk[i].value * Mk[i];
        s1 += lm;
        s2 += std::norm(lm);
        budget += std::abs(Mk[i]) * Lk[i].errorRadius;
        if (classify(Lk[i].value, Lk[i].errorRadius) == Verdict::Nonzero)
            ++rep.nonzeroCount;
        else
            ++rep.undeterminedCount;
    }
    rep.s1 = s1.value();
    rep.s2 = s2.value();
    rep.perPointErrorBudget = budget.value();
    rep.csLowerBound = rep.s2 > 0.0 ? std::norm(rep.s1) / rep.s2 : 0.0;
    return rep;
}

MomentReport firstMoment(std::int64_t T, const ProgressionSpec& spec, const DirichletCharacter& chi,
                         const MollifierSpec& mollifier, const EvalPlan& plan)
{
    return computeMoments(T, spec, chi, mollifier, plan);
}

MomentReport secondMoment(std::int64_t T, const ProgressionSpec& spec, const DirichletCharacter& chi,
                          const MollifierSpec& mollifier, const EvalPlan& plan)
{
    return computeMoments(T, spec, chi, mollifier, plan);
}

NonvanishingVerdict decidePoint(ComplexPoint s, std::int64_t k, const DirichletCharacter& chi, const EvalPlan& plan,
                                double x0)
{
    NonvanishingVerdict v;
    v.k = k;
    v.t = s.t;
    if (plan.method == EvalMethod::HurwitzOracle) {
        const auto e = lViaHurwitz(s, chi);
        v.value = e.value;
        v.errorRadius = e.errorRadius;
        v.verdict = classify(v.value, v.errorRadius);
        return v;
    }
    double x = x0;
    for (int attempt = 0; attempt <= plan.retryCap; ++attempt, x *= 2.0) {
        const auto e = lTruncated(s, chi, TruncationPlan{plan.C, x, plan.constantFactor});
        v.value = e.value;
        v.errorRadius = e.errorRadius;
        v.verdict = classify(v.value, v.errorRadius);
        if (v.verdict == Verdict::Nonzero) break;
    }
    return v;
}

ScanSummary nonvanishingScan(std::int64_t T, const ProgressionSpec& spec, const DirichletCharacter& chi,
                             const EvalPlan& plan)
{
    requireNonPrincipal(chi, "nonvanishingScan");
    validatePlan(plan);
    if (T < 1) throw std::invalid_argument("nonvanishingScan: T must be >= 1");
    if (!std::isfinite(spec.alpha) || !std::isfinite(spec.beta) || spec.beta == 0.0)
        throw std::invalid_argument("nonvanishingScan: alpha must be finite and beta finite and nonzero");

    const double x0 = truncationLength(MollifierLabel::P1, spec, T);
    const std::int64_t q = chi.modulus();
    const TruncationPlan tp{plan.C, x0, plan.constantFactor};
    std::optional<TruncatedSeries> series;
    if (plan.method == EvalMethod::TruncatedSeries)
        series.emplace(chi, 0.5, static_cast<std::int64_t>(std::floor(static_cast<double>(q) * x0)));

    ScanSummary out;
    out.T = T;
    out.verdicts.resize(static_cast<std::size_t>(T));
    parallelFor(out.verdicts.size(), [&](std::size_t i) {
        const auto k = static_cast<std::int64_t>(i) + 1;
        const ComplexPoint s = pointOfProgression(spec, k);
        NonvanishingVerdict v;
        if (series) {
            const auto e = evaluateTruncatedSeries(*series, s, q, tp);
            v = {k, s.t, e.value, e.errorRadius, classify(e.value, e.errorRadius)};
            if (v.verdict == Verdict::Undetermined && plan.retryCap > 0) {
                EvalPlan retry = plan;
                retry.retryCap = plan.retryCap - 1;
                v = decidePoint(s, k, chi, retry, 2.0 * x0);
            }
        } else {
            v = decidePoint(s, k, chi, plan, x0);
        }
        out.verdicts[i] = v;
    });
    for (const auto& v : out.verdicts) {
        if (v.verdict == Verdict::Nonzero)
            ++out.nonzeroCount;
        else
            ++out.undeterminedCount;
    }
    out.ratio = static_cast<double>(out.nonzeroCount) * std::log(static_cast<double>(T)) / static_cast<double>(T);
    return out;
}

std::complex<double> geometricProgressionSum(std::int64_t n, double beta, std::int64_t T)
{
    if (n < 1) throw std::invalid_argument("geometricProgressionSum: n must be >= 1");
    if (T < 1) throw std::invalid_argument("geometricProgressionSum: T must be >= 1");
    const double theta = beta * std::log(static_cast<double>(n));
    const double th = theta - std::nearbyint(theta);
    const double Td = static_cast<double>(T);
    if (th == 0.0) return {Td, 0.0};
    // sum_{k=1}^T e(-k th) = e(-(T+1) th / 2) sin(pi T th) / sin(pi th)
    const double ratio = sinPiProduct(Td, th) / std::sin(std::numbers::pi * th);
    return {ratio * cosPiProduct(Td + 1.0, th), -ratio * sinPiProduct(Td + 1.0, th)};
}

std::complex<double> geometricProgressionSumDirect(std::int64_t n, double beta, std::int64_t T)
{
    if (n < 1) throw std::invalid_argument("geometricProgressionSumDirect: n must be >= 1");
    if (T < 1) throw std::invalid_argument("geometricProgressionSumDirect: T must be >= 1");
    const double theta = beta * std::log(static_cast<double>(n));
    const double th = theta - std::nearbyint(theta);
    ComplexNeumaierSum sum;
    for (std::int64_t k = 1; k <= T; ++k) {
        // e(-k th) = cos(pi (2k) th) - i sin(pi (2k) th)
        const double kk = 2.0 * static_cast<double>(k);
        sum += std::complex<double>{cosPiProduct(kk, th), -sinPiProduct(kk, th)};
    }
    return sum.value();
}

double geometricSumBound(std::int64_t n, double beta, std::int64_t T)
{
    const double d = nearestIntegerDistance(beta * std::log(static_cast<double>(n)));
    const double Td = static_cast<double>(T);
    return d == 0.0 ? Td : std::min(Td, 1.0 / (2.0 * d));
}

double firstNonzeroTheoremBound(double b, std::int64_t q, double D)
{
    if (!(b > 0.0) || q < 1) throw std::invalid_argument("firstNonzeroTheoremBound: requires b > 0 and q >= 1");
    const double qd = static_cast<double>(q);
    const double base = b >= kTwoPi ? b * b * b * qd : qd / b;
    const double y = b >= kTwoPi ? base : qd;
    if (!(y > std::numbers::e))
        throw std::invalid_argument("firstNonzeroTheoremBound: the argument of w_D must exceed e");
    const double ly = std::log(y);
    return base * std::exp(D * ly / std::log(ly));
}

FirstNonzeroResult firstNonzeroIndex(const DirichletCharacter& chi, double a, double b, double D, const EvalPlan& plan,
                                     double safetyFactor, std::int64_t maxIndex)
{
    requireNonPrincipal(chi, "firstNonzeroIndex");
    validatePlan(plan);
    if (!(a >= 0.0 && a < b)) throw std::invalid_argument("firstNonzeroIndex: requires 0 <= a < b");
    if (!(D > 8.0 * std::numbers::ln2)) throw std::invalid_argument("firstNonzeroIndex: requires D > 8 log 2");
    if (!(safetyFactor > 0.0)) throw std::invalid_argument("firstNonzeroIndex: safetyFactor must be positive");
    if (maxIndex < 1) throw std::invalid_argument("firstNonzeroIndex: maxIndex must be >= 1");

    FirstNonzeroResult r;
    r.safetyFactor = safetyFactor;
    // q / b can fall below e for small q and large b < 2pi; the bound is then undefined.
    try {
        r.theoremBound = firstNonzeroTheoremBound(b, chi.modulus(), D);
    } catch (const std::invalid_argument&) {
        r.theoremBound = std::numeric_limits<double>::quiet_NaN();
    }
    const ProgressionSpec spec = ProgressionSpec::fromExternal(a, b);
    for (std::int64_t k = 1; k <= maxIndex; ++k) {
        const ComplexPoint s{0.5, a + static_cast<double>(k) * b};
        const double x0 = 3.0 * (std::fabs(spec.alpha) + spec.beta) * static_cast<double>(k);
        const auto v = decidePoint(s, k, chi, plan, x0);
        if (v.verdict == Verdict::Nonzero) {
            r.k = k;
            r.verdict = v;
            r.withinBound = std::isfinite(r.theoremBound) && static_cast<double>(k) <= safetyFactor * r.theoremBound;
            return r;
        }
    }
    throw ExhaustionError("firstNonzeroIndex: no nonzero verdict for k <= " + std::to_string(maxIndex));
}

GallagherReport gallagherInequalityCheck(double T1, double T2, double kappa, const std::vector<double>& gridPoints,
                                         const DirichletCharacter& chi, const MollifierSpec& mollifier,
                                         const EvalPlan& plan, double quadTolerance)
{
    requireNonPrincipal(chi, "gallagherInequalityCheck");
    if (!(kappa > 0.0)) throw std::invalid_argument("gallagherInequalityCheck: kappa must be positive");
    if (!(T1 < T2) || !std::isfinite(T1) || !std::isfinite(T2))
        throw std::invalid_argument("gallagherInequalityCheck: requires finite T1 < T2");
    if (!(quadTolerance > 0.0)) throw std::invalid_argument("gallagherInequalityCheck: quadTolerance must be positive");

    // Spacing and containment are checked with a relative slack of 1e-12 so that
    // progression points computed in floating point are accepted.
    const double slack = 1e-12 * std::max({1.0, std::fabs(T1), std::fabs(T2)});
    std::vector<double> grid(gridPoints);
    std::sort(grid.begin(), grid.end());
    for (std::size_t i = 0; i < grid.size(); ++i) {
        if (!(grid[i] >= T1 + 0.5 * kappa - slack && grid[i] <= T2 - 0.5 * kappa + slack))
            throw std::invalid_argument("gallagherInequalityCheck: grid point " + std::to_string(grid[i])
                                        + " lies outside [T1 + kappa/2, T2 - kappa/2]");
        if (i > 0 && grid[i] - grid[i - 1] < kappa - slack)
            throw std::invalid_argument("gallagherInequalityCheck: grid is not kappa-well-spaced");
    }

    const double top = std::max(std::fabs(T1), std::fabs(T2));
    const double x = plan.C * top / kTwoPi + 10.0;
    const TruncatedSeries F(chi, 0.5, static_cast<std::int64_t>(std::floor(static_cast<double>(chi.modulus()) * x)));
    const Mollifier G(chi, mollifier);

    GallagherReport rep;
    rep.seriesTerms = F.terms();
    NeumaierSum lhs;
    for (const double u : grid) lhs += std::norm(F.value(u) * G.value({0.5, u}));
    rep.lhs = lhs.value();

    // d/dt f(1/2 + it) = i f'(s), so |d/dt| = |d/ds|.
    auto integrand = [&](double t) {
        const ComplexPoint s{0.5, t};
        const auto f = F.value(t);
        const auto fp = F.derivative(t);
        const auto g = G.value(s);
        const auto gp = G.derivative(s);
        return Triple{std::norm(f * g), std::norm(f * gp), std::norm(fp * g)};
    };

    std::vector<double> breaks;
    for (double p = T1; p < T2; p += 1.0) breaks.push_back(p);
    breaks.push_back(T2);

    NeumaierSum i1, i2, i3;
    for (std::size_t i = 0; i + 1 < breaks.size(); ++i) {
        const auto probe = integrand(breaks[i]);
        const double scale = std::max(1.0, abs(probe));
        const auto panel = adaptiveSimpson(integrand, breaks[i], breaks[i + 1], 1e-3 * quadTolerance * scale, 40);
        if (!panel.converged)
            throw NumericError("gallagherInequalityCheck: quadrature did not converge on [" + std::to_string(breaks[i])
                               + ", " + std::to_string(breaks[i + 1]) + "]");
        i1 += panel.value.a;
        i2 += panel.value.b;
        i3 += panel.value.c;
        rep.quadratureError += panel.errorEstimate;
    }
    rep.integralFG = i1.value();
    rep.integralFGprime = i2.value();
    rep.integralFprimeG = i3.value();
    rep.rhs = rep.integralFG / kappa + 2.0 * std::sqrt(rep.integralFG * rep.integralFGprime)
        + 2.0 * std::sqrt(rep.integralFG * rep.integralFprimeG);
    rep.holds = rep.lhs <= rep.rhs * (1.0 + quadTolerance);
    return rep;
}

} // namespace lprog
