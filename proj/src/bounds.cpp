#include "lprog/bounds.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>
#include <vector>

#include "lprog/errors.hpp"
#include "lprog/mollifier.hpp"
#include "lprog/numeric.hpp"
#include "lprog/quadrature.hpp"
#include "lprog/summation.hpp"

namespace lprog {

namespace {

void requireMinSumRange(double A, double B, double beta, double T)
{
    if (!(A >= 1.0 && A < B && B <= kMinSumMaxB))
        throw std::invalid_argument("minSum: requires 1 <= A < B <= 1e8 (A = " + std::to_string(A)
                                    + ", B = " + std::to_string(B) + ")");
    if (!(beta > 0.0) || !std::isfinite(beta)) throw std::invalid_argument("minSum: beta must be positive");
    if (!(T >= 1.0) || !std::isfinite(T)) throw std::invalid_argument("minSum: T must be >= 1");
}

double integral01(const Polynomial& a, const Polynomial& b) { return (a * b).integral01(); }

} // namespace

double ejBoundary(double beta, std::int64_t j)
{
    if (!(beta > 0.0)) throw std::invalid_argument("ejBoundary: beta must be positive");
    if (j < 0) throw std::invalid_argument("ejBoundary: j must be nonnegative");
    const double e = static_cast<double>(j) / beta;
    if (e > 700.0) throw std::range_error("ejBoundary: j/beta exceeds 700");
    return std::floor(std::exp(e));
}

double minSumExact(double A, double B, double beta, double T, bool weighted)
{
    requireMinSumRange(A, B, beta, T);
    const auto lo = static_cast<std::int64_t>(std::floor(A)) + 1;
    const auto hi = static_cast<std::int64_t>(std::floor(B));
    NeumaierSum sum;
    for (std::int64_t n = lo; n <= hi; ++n) {
        const double nd = static_cast<double>(n);
        const double d = nearestIntegerDistance(beta * std::log(nd));
        const double m = d == 0.0 ? T : std::min(T, 1.0 / d);
        sum += weighted ? m / std::sqrt(nd) : m;
    }
    return sum.value();
}

const char* toString(MinSumVariant v)
{
    switch (v) {
    case MinSumVariant::General: return "general";
    case MinSumVariant::BetaGE1: return "beta-ge-1";
    case MinSumVariant::IntervalLemma: return "interval";
    }
    return "general";
}

double minSumBoundShape(double A, double B, double beta, double T, MinSumVariant variant, std::optional<std::int64_t> j)
{
    requireMinSumRange(A, B, beta, T);
    const double e1 = std::exp(1.0 / beta);
    switch (variant) {
    case MinSumVariant::General:
        return e1 / std::expm1(0.5 / beta)
            * (T / std::sqrt(A) + e1 / beta * std::sqrt(B) * (std::log(B) + 1.0 / beta));
    case MinSumVariant::BetaGE1:
        if (!(beta >= 1.0)) throw std::invalid_argument("minSumBoundShape: the beta >= 1 form requires beta >= 1");
        return beta * T / std::sqrt(A) + std::sqrt(B) * std::log(B);
    case MinSumVariant::IntervalLemma: {
        if (!j || *j < 0) throw std::invalid_argument("minSumBoundShape: the interval form requires j >= 0");
        if (A != ejBoundary(beta, *j) || B != ejBoundary(beta, *j + 1))
            throw std::invalid_argument("minSumBoundShape: the interval form requires A = E_j and B = E_{j+1}");
        const double jd = static_cast<double>(*j);
        return T + e1 / beta * ((jd + 1.0) / beta) * std::exp(jd / beta);
    }
    }
    throw std::invalid_argument("minSumBoundShape: unknown variant");
}

MinSumResult minSumCompare(double A, double B, double beta, double T, MinSumVariant variant, std::optional<std::int64_t> j)
{
    MinSumResult r{A, B, beta, T, variant, j};
    r.boundValue = minSumBoundShape(A, B, beta, T, variant, j);
    r.exactValue = minSumExact(A, B, beta, T, variant != MinSumVariant::IntervalLemma);
    r.ratio = r.exactValue / r.boundValue;
    return r;
}

double wFunction(double L, double x)
{
    if (!(x > std::numbers::e)) throw std::domain_error("wFunction: requires x > e");
    if (!std::isfinite(L)) throw std::invalid_argument("wFunction: L must be finite");
    const double lx = std::log(x);
    return std::exp(L * lx / std::log(lx));
}

BauerMainTerm bauerMainTerm(const BauerInputs& in)
{
    if (!(in.T > 1.0) || !(in.X > 1.0)) throw std::invalid_argument("bauerMainTerm: requires T > 1 and X > 1");
    if (in.q < 1) throw std::invalid_argument("bauerMainTerm: q must be >= 1");
    const Polynomial& Q1 = in.Q1;
    const Polynomial& Q2 = in.Q2 ? *in.Q2 : in.Q1;
    if (Q1(0.0) != 0.0 || Q2(0.0) != 0.0) throw std::invalid_argument("bauerMainTerm: requires Q1(0) = Q2(0) = 0");

    BauerMainTerm out;
    out.T = in.T;
    out.X = in.X;
    out.q = in.q;
    out.L = std::log(static_cast<double>(in.q) * in.T / (2.0 * std::numbers::pi));
    const double logT = std::log(in.T);
    const double logX = std::log(in.X);
    out.xInRange = logX >= in.epsilon * logT && logX <= (0.5 - in.epsilon) * logT;

    const Polynomial d1 = Q1.derivative();
    const Polynomial d2 = Q2.derivative();
    const double q1q2 = Q1(1.0) * Q2(1.0);
    const double dd = integral01(d1, d2);

    if (in.shifts) {
        const auto [a, b] = *in.shifts;
        if (a == b) throw std::invalid_argument("bauerMainTerm: a = b in the shifted form; use the limit form");
        if (std::abs(a) > 1.0 || std::abs(b) > 1.0) throw std::invalid_argument("bauerMainTerm: requires |a|, |b| <= 1");
        out.E = logT / logX * dd + (b * integral01(d1, Q2) - a * integral01(Q1, d2))
            - a * b * (logX / logT) * integral01(Q1, Q2);
        const auto h = b - a;
        out.mainTerm = in.T * (q1q2 + (std::exp(h) - 1.0) / h * out.E);
    } else {
        out.E = logT / logX * dd;
        out.mainTerm = in.T * (q1q2 + out.E);
    }

    out.Etilde = logT / (3.0 * logX) * integral01(d1, d1) + integral01(Q1, d1) + logX / logT * integral01(Q1, Q1);
    out.derivativeMainTerm = out.Etilde * in.T * out.L * out.L;
    return out;
}

BauerQuadratureReport bauerQuadratureCheck(double T, double theta, const DirichletCharacter& chi, const Polynomial& Q1,
                                           const EvalPlan& plan, double relTol)
{
    if (chi.isPrincipal()) throw std::invalid_argument("bauerQuadratureCheck: chi must be non-principal");
    if (!(T > 1.0)) throw std::invalid_argument("bauerQuadratureCheck: T must exceed 1");
    if (!(theta > 0.0 && theta < 0.5)) throw std::invalid_argument("bauerQuadratureCheck: theta must lie in (0, 1/2)");
    if (!(relTol > 0.0)) throw std::invalid_argument("bauerQuadratureCheck: relTol must be positive");

    BauerQuadratureReport rep;
    rep.T = T;
    rep.theta = theta;
    rep.X = std::pow(T, theta);

    const Mollifier M(chi, MollifierSpec::custom(rep.X, Q1));
    std::optional<TruncatedSeries> series;
    if (plan.method == EvalMethod::TruncatedSeries) {
        const double x = plan.C * T / (2.0 * std::numbers::pi) + 10.0;
        series.emplace(chi, 0.5, static_cast<std::int64_t>(std::floor(static_cast<double>(chi.modulus()) * x)));
    }
    auto integrand = [&](double t) {
        const ComplexPoint s{0.5, t};
        const auto l = series ? series->value(t) : lViaHurwitz(s, chi).value;
        return std::norm(l * M.value(s));
    };

    NeumaierSum total;
    for (double a = 1.0; a < T; a += 1.0) {
        const double b = std::min(a + 1.0, T);
        const double scale = std::max(1.0, integrand(a));
        const auto panel = adaptiveSimpson(integrand, a, b, relTol * scale, 40);
        if (!panel.converged)
            throw NumericError("bauerQuadratureCheck: quadrature did not converge on [" + std::to_string(a) + ", "
                               + std::to_string(b) + "]");
        total += panel.value;
        rep.quadratureError += panel.errorEstimate;
        rep.evaluations += panel.evaluations + 1;
    }
    rep.integral = total.value();

    BauerInputs in;
    in.T = T;
    in.X = rep.X;
    in.q = chi.modulus();
    in.Q1 = Q1;
    const auto main = bauerMainTerm(in);
    rep.mainTerm = main.mainTerm.real();
    rep.xInRange = main.xInRange;
    const double diff = std::fabs(rep.integral - rep.mainTerm);
    rep.relativeDeviation = rep.mainTerm != 0.0 ? diff / std::fabs(rep.mainTerm) : diff;
    return rep;
}

} // namespace lprog
