#include "lprog/lfunction.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <string>

#include "lprog/errors.hpp"
#include "lprog/quadrature.hpp"
#include "lprog/summation.hpp"

namespace lprog {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();

// B_2, B_4, ..., B_28.
constexpr std::array<double, 14> kBernoulli = {
    1.0 / 6.0,
    -1.0 / 30.0,
    1.0 / 42.0,
    -1.0 / 30.0,
    5.0 / 66.0,
    -691.0 / 2730.0,
    7.0 / 6.0,
    -3617.0 / 510.0,
    43867.0 / 798.0,
    -174611.0 / 330.0,
    854513.0 / 138.0,
    -236364091.0 / 2730.0,
    8553103.0 / 6.0,
    -23749461029.0 / 870.0,
};

// u^{-s} for real u > 0.
std::complex<double> powNeg(double u, std::complex<double> s)
{
    const double lu = std::log(u);
    const double mag = std::exp(-s.real() * lu);
    const double phase = -s.imag() * lu;
    return {mag * std::cos(phase), mag * std::sin(phase)};
}

// (e^w - 1) / w without cancellation near w = 0.
std::complex<double> exprel(std::complex<double> w)
{
    if (std::abs(w) < 1e-4) return 1.0 + w * (0.5 + w * (1.0 / 6.0 + w / 24.0));
    const double x = w.real();
    const double y = w.imag();
    const double sh = std::sin(0.5 * y);
    const std::complex<double> em1{std::expm1(x) * std::cos(y) - 2.0 * sh * sh, std::exp(x) * std::sin(y)};
    return em1 / w;
}

void requireNonPrincipal(const DirichletCharacter& chi, const char* op)
{
    if (chi.isPrincipal())
        throw std::invalid_argument(std::string(op) + ": principal characters are unsupported (modulus "
                                    + std::to_string(chi.modulus()) + ")");
}

// Shared Euler–Maclaurin core. With `regularized`, the pole term
// (N+a)^{1-s}/(s-1) is replaced by ((N+a)^{1-s} - 1)/(s-1).
EvaluatedValue eulerMaclaurin(ComplexPoint sp, double alpha, int shiftN, int bernoulliTerms, bool regularized)
{
    if (!(alpha > 0.0 && alpha <= 1.0))
        throw std::invalid_argument("hurwitzZeta: alpha must lie in (0, 1], got " + std::to_string(alpha));
    if (shiftN < 1) throw std::invalid_argument("hurwitzZeta: shiftN must be positive");
    if (bernoulliTerms < 1 || bernoulliTerms > kMaxBernoulliTerms)
        throw std::invalid_argument("hurwitzZeta: bernoulliTerms must lie in [1, " + std::to_string(kMaxBernoulliTerms) + "]");

    const std::complex<double> s = sp.s();
    const double absS = std::abs(s);
    const int shift = std::max(shiftN, static_cast<int>(std::ceil(absS)) + 2 * bernoulliTerms);

    // Each term n^{-s} carries a phase error of about |t| |log u| eps from the
    // rounded logarithm and product, plus a few ulp from exp/cos/sin.
    const double absT = std::fabs(sp.t);
    ComplexNeumaierSum sum;
    double rounding = 0.0;
    for (int n = 0; n < shift; ++n) {
        const double u = n + alpha;
        const auto term = powNeg(u, s);
        sum += term;
        rounding += std::abs(term) * (4.0 + absT * std::fabs(std::log(u)));
    }

    const double Na = shift + alpha;
    const double logNa = std::log(Na);
    const auto NaNegS = powNeg(Na, s);
    const std::complex<double> poleTerm =
        // ((N+a)^{1-s} - 1)/(s - 1) = -log(N+a) * exprel((1-s) log(N+a))
        regularized ? -logNa * exprel((1.0 - s) * logNa) : Na * NaNegS / (s - 1.0);
    sum += poleTerm;
    sum += 0.5 * NaNegS;
    double tailMass = std::abs(poleTerm) + std::abs(NaNegS);

    // Correction terms B_{2k}/(2k)! * s(s+1)...(s+2k-2) * (N+a)^{-s-2k+1}.
    std::complex<double> rising = s;
    double factorial = 2.0;
    double invPow = 1.0 / Na;
    std::complex<double> lastOmitted;
    for (int k = 1; k <= bernoulliTerms + 1; ++k) {
        const std::complex<double> term = kBernoulli[k - 1] / factorial * rising * NaNegS * invPow;
        if (k <= bernoulliTerms) {
            sum += term;
            tailMass += std::abs(term);
        } else {
            lastOmitted = term;
        }
        rising *= (s + (2.0 * k - 1.0)) * (s + 2.0 * k);
        factorial *= (2.0 * k + 1.0) * (2.0 * k + 2.0);
        invPow /= Na * Na;
    }

    EvaluatedValue out;
    out.value = sum.value();
    out.method = EvalMethod::HurwitzOracle;
    out.termsUsed = shift;
    out.errorRadius = 4.0 * std::abs(lastOmitted) + kEps * (rounding + tailMass * (4.0 + 2.0 * absT * logNa));
    return out;
}

} // namespace

const char* toString(EvalMethod m)
{
    return m == EvalMethod::HurwitzOracle ? "hurwitz-oracle" : "truncated-series";
}

double seriesRoundingBudget(double mass, double t, double maxLog)
{
    // Per term: a few ulp from exp/cos/sin and the product t*log n, whose
    // absolute phase error grows like |t| log n * eps.
    return mass * kEps * (4.0 + 2.0 * std::fabs(t) * std::max(maxLog, 1.0));
}

EvaluatedValue hurwitzZeta(ComplexPoint s, double alpha, int shiftN, int bernoulliTerms)
{
    if (s.sigma == 1.0 && s.t == 0.0) throw PoleError("hurwitzZeta: pole at s = 1");
    return eulerMaclaurin(s, alpha, shiftN, bernoulliTerms, false);
}

EvaluatedValue hurwitzZetaRegularized(ComplexPoint s, double alpha, int shiftN, int bernoulliTerms)
{
    return eulerMaclaurin(s, alpha, shiftN, bernoulliTerms, true);
}

EvaluatedValue lViaHurwitz(ComplexPoint s, const DirichletCharacter& chi)
{
    requireNonPrincipal(chi, "lViaHurwitz");
    if (!(s.sigma > 0.0)) throw std::domain_error("lViaHurwitz: sigma must be > 0");
    const std::int64_t q = chi.modulus();
    const double qd = static_cast<double>(q);

    ComplexNeumaierSum sum;
    double maxRadius = 0.0;
    double mass = 0.0;
    std::int64_t terms = 0;
    for (std::int64_t a = 1; a <= q; ++a) {
        const auto c = chi(a);
        if (c == std::complex<double>{}) continue;
        const auto z = hurwitzZetaRegularized(s, static_cast<double>(a) / qd);
        sum += c * z.value;
        maxRadius = std::max(maxRadius, z.errorRadius);
        mass += std::abs(z.value);
        terms += z.termsUsed;
    }
    const auto qNegS = powNeg(qd, s.s());
    EvaluatedValue out;
    out.value = qNegS * sum.value();
    out.method = EvalMethod::HurwitzOracle;
    out.termsUsed = terms;
    out.errorRadius = std::pow(qd, 1.0 - s.sigma) * maxRadius
        + std::abs(qNegS) * seriesRoundingBudget(mass, s.t, std::log(qd));
    return out;
}

double truncationErrorRadius(ComplexPoint s, std::int64_t q, const TruncationPlan& plan)
{
    const double logq = std::log(static_cast<double>(q));
    const double sigma = s.sigma;
    const double inner = std::min(sigma / (plan.x * logq), std::fabs(s.t) / sigma);
    return plan.constantFactor * std::pow(static_cast<double>(q), 0.5 - sigma) * std::pow(plan.x, -sigma) * logq
        * (1.0 + inner);
}

TruncatedSeries::TruncatedSeries(const DirichletCharacter& chi, double sigma, std::int64_t terms)
    : sigma_(sigma), terms_(std::max<std::int64_t>(terms, 0))
{
    coeffRe_.reserve(static_cast<std::size_t>(terms_));
    coeffIm_.reserve(static_cast<std::size_t>(terms_));
    logs_.reserve(static_cast<std::size_t>(terms_));
    for (std::int64_t n = 1; n <= terms_; ++n) {
        const auto c = chi(n);
        const double ln = std::log(static_cast<double>(n));
        const double w = std::exp(-sigma * ln);
        coeffRe_.push_back(c.real() * w);
        coeffIm_.push_back(c.imag() * w);
        logs_.push_back(ln);
        mass_ += std::abs(c) * w;
    }
}

std::complex<double> TruncatedSeries::value(double t) const
{
    NeumaierSum re, im;
    for (std::size_t i = 0; i < logs_.size(); ++i) {
        const double ph = t * logs_[i];
        const double c = std::cos(ph);
        const double sn = std::sin(ph);
        // (a + ib)(cos - i sin)
        re += coeffRe_[i] * c + coeffIm_[i] * sn;
        im += coeffIm_[i] * c - coeffRe_[i] * sn;
    }
    return {re.value(), im.value()};
}

std::complex<double> TruncatedSeries::derivative(double t) const
{
    NeumaierSum re, im;
    for (std::size_t i = 0; i < logs_.size(); ++i) {
        const double ph = t * logs_[i];
        const double c = std::cos(ph);
        const double sn = std::sin(ph);
        const double l = -logs_[i];
        re += l * (coeffRe_[i] * c + coeffIm_[i] * sn);
        im += l * (coeffIm_[i] * c - coeffRe_[i] * sn);
    }
    return {re.value(), im.value()};
}

EvaluatedValue lTruncated(ComplexPoint s, const DirichletCharacter& chi, const TruncationPlan& plan)
{
    requireNonPrincipal(chi, "lTruncated");
    if (!(s.sigma > 0.0)) throw std::domain_error("lTruncated: requires sigma > 0");
    if (!(plan.C > 1.0)) throw std::domain_error("lTruncated: requires C > 1");
    if (!(plan.constantFactor > 0.0)) throw std::domain_error("lTruncated: requires constantFactor > 0");
    const double xMin = plan.C * std::fabs(s.t) / (2.0 * std::numbers::pi);
    if (!(plan.x > xMin) || !(plan.x > 0.0))
        throw std::domain_error("lTruncated: requires x > C|t|/2pi (x = " + std::to_string(plan.x)
                                + ", C|t|/2pi = " + std::to_string(xMin) + ")");

    const double qx = static_cast<double>(chi.modulus()) * plan.x;
    const auto terms = static_cast<std::int64_t>(std::floor(qx));
    const TruncatedSeries series(chi, s.sigma, terms);

    EvaluatedValue out;
    out.value = series.value(s.t);
    out.method = EvalMethod::TruncatedSeries;
    out.termsUsed = terms;
    out.errorRadius = truncationErrorRadius(s, chi.modulus(), plan)
        + seriesRoundingBudget(series.absoluteMass(), s.t, terms > 0 ? std::log(static_cast<double>(terms)) : 0.0);
    return out;
}

std::pair<std::complex<double>, std::complex<double>> fractionalPartIdentity(const DirichletCharacter& chi, double x)
{
    requireNonPrincipal(chi, "fractionalPartIdentity");
    if (!(x >= 0.0 && x < 1.0)) throw std::invalid_argument("fractionalPartIdentity: x must lie in [0, 1)");
    const std::int64_t q = chi.modulus();
    const double qd = static_cast<double>(q);
    const double qx = qd * x;

    ComplexNeumaierSum lhs;
    for (std::int64_t a = 1; a <= q; ++a) {
        const double y = (qx - static_cast<double>(a)) / qd;
        const double frac = y - std::floor(y);
        lhs += chi(a) * (frac - 0.5);
    }

    const auto b = static_cast<std::int64_t>(std::floor(qx));
    ComplexNeumaierSum head;
    for (std::int64_t a = 1; a <= b; ++a) head += chi(a);
    ComplexNeumaierSum weighted;
    for (std::int64_t a = 1; a <= q; ++a) weighted += static_cast<double>(a) * chi(a);
    const auto rhs = -head.value() - weighted.value() / qd;
    return {lhs.value(), rhs};
}

HurwitzPartialReport hurwitzPartialResidual(ComplexPoint sp, double alpha, double x, double N, double absTol,
                                            int maxDepth)
{
    if (!(sp.sigma > 0.0)) throw std::domain_error("hurwitzPartialResidual: requires sigma > 0");
    if (sp.sigma == 1.0 && sp.t == 0.0) throw PoleError("hurwitzPartialResidual: pole at s = 1");
    if (!(alpha > 0.0 && alpha < 1.0)) throw std::invalid_argument("hurwitzPartialResidual: alpha must lie in (0, 1)");
    if (!(x > alpha)) throw std::invalid_argument("hurwitzPartialResidual: requires x > alpha");
    if (!(N > x)) throw std::invalid_argument("hurwitzPartialResidual: requires N > x");

    const std::complex<double> s = sp.s();
    const auto zeta = hurwitzZeta(sp, alpha);

    ComplexNeumaierSum head;
    const auto last = static_cast<std::int64_t>(std::floor(x - alpha));
    for (std::int64_t n = 0; n <= last; ++n) head += powNeg(static_cast<double>(n) + alpha, s);

    const double fracX = (x - alpha) - std::floor(x - alpha);
    const auto xNegS = powNeg(x, s);
    const std::complex<double> boundary = (fracX - 0.5) * xNegS;
    const std::complex<double> powerTerm = x * xNegS / (1.0 - s);

    // Panel k covers [k + alpha, k + 1 + alpha] clipped to [x, N]; on it
    // {u - alpha} = u - alpha - k, including at the right endpoint.
    ComplexNeumaierSum integral;
    double quadErr = 0.0;
    for (std::int64_t k = last;; ++k) {
        const double lo = std::max(x, static_cast<double>(k) + alpha);
        const double hi = std::min(N, static_cast<double>(k + 1) + alpha);
        if (lo >= N) break;
        if (hi <= lo) continue;
        const double shiftK = static_cast<double>(k) + alpha + 0.5;
        auto integrand = [&](double u) { return (u - shiftK) * powNeg(u, s + 1.0); };
        const auto r = adaptiveSimpson(integrand, lo, hi, absTol, maxDepth);
        if (!r.converged)
            throw NumericError("hurwitzPartialResidual: quadrature did not converge on [" + std::to_string(lo) + ", "
                               + std::to_string(hi) + "]");
        integral += r.value;
        quadErr += r.errorEstimate;
    }

    const std::complex<double> approx = head.value() + boundary - powerTerm - s * integral.value();
    HurwitzPartialReport rep;
    rep.residual = std::abs(zeta.value - approx);
    rep.bound = 2.0 * std::abs(s) / sp.sigma * std::pow(N, -sp.sigma);
    rep.quadratureError = std::abs(s) * quadErr;
    return rep;
}

} // namespace lprog
