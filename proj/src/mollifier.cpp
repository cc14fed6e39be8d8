#include "lprog/mollifier.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "lprog/summation.hpp"

namespace lprog {

namespace {

// Weight P(1 - log m / log X); m = 1 always gets P(1).
double weight(const Polynomial& p, double logm, double logX)
{
    if (logm == 0.0) return p(1.0);
    return p(1.0 - logm / logX);
}

std::complex<double> powNeg(double logu, std::complex<double> s)
{
    const double mag = std::exp(-s.real() * logu);
    const double phase = -s.imag() * logu;
    return {mag * std::cos(phase), mag * std::sin(phase)};
}

} // namespace

const char* toString(MollifierLabel l)
{
    switch (l) {
    case MollifierLabel::P1: return "P1";
    case MollifierLabel::P2: return "P2";
    case MollifierLabel::Custom: return "custom";
    }
    return "custom";
}

Mollifier::Mollifier(const DirichletCharacter& chi, const MollifierSpec& spec)
    : Mollifier(chi, spec, buildSieve(std::max<std::int64_t>(1, static_cast<std::int64_t>(std::floor(spec.X)))))
{
}

Mollifier::Mollifier(const DirichletCharacter& chi, const MollifierSpec& spec, const SieveTable& sieve) : spec_(spec)
{
    if (!(spec.X >= 1.0)) throw std::invalid_argument("Mollifier: X must be >= 1");
    const auto top = static_cast<std::int64_t>(std::floor(spec.X));
    if (sieve.limit < top) throw std::invalid_argument("Mollifier: sieve shorter than X");
    const double logX = std::log(spec.X);
    for (std::int64_t m = 1; m <= top; ++m) {
        if (sieve.mobius[m] == 0) continue;
        const auto c = chi(m);
        if (c == std::complex<double>{}) continue;
        const double lm = std::log(static_cast<double>(m));
        indices_.push_back(m);
        coeffs_.push_back(static_cast<double>(sieve.mobius[m]) * c * weight(spec.poly, lm, logX));
        logs_.push_back(lm);
    }
}

std::complex<double> Mollifier::value(ComplexPoint s) const
{
    ComplexNeumaierSum sum;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) sum += coeffs_[i] * powNeg(logs_[i], s.s());
    return sum.value();
}

std::complex<double> Mollifier::derivative(ComplexPoint s) const
{
    ComplexNeumaierSum sum;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) sum += -logs_[i] * coeffs_[i] * powNeg(logs_[i], s.s());
    return sum.value();
}

double Mollifier::trivialBound(double sigma) const
{
    NeumaierSum sum;
    for (const double l : logs_) sum += std::exp(-sigma * l);
    return sum.value() * spec_.poly.maxAbsOnUnitInterval();
}

std::complex<double> evalMollifier(ComplexPoint s, const DirichletCharacter& chi, const MollifierSpec& spec)
{
    return Mollifier(chi, spec).value(s);
}

ConvolvedCoeffs buildCoeffs(CoeffKind kind, std::int64_t q, double U, double X, const SieveTable& sieve)
{
    if (q < 1) throw std::invalid_argument("buildCoeffs: q must be >= 1");
    if (!(U > 0.0) || !(X >= 1.0)) throw std::invalid_argument("buildCoeffs: requires U > 0 and X >= 1");
    const double lengthD = std::floor(static_cast<double>(q) * U * X);
    if (lengthD > static_cast<double>(kMaxConvolutionLength))
        throw std::invalid_argument("buildCoeffs: qUX exceeds the configured cap of " + std::to_string(kMaxConvolutionLength));
    const auto length = static_cast<std::int64_t>(lengthD);
    if (sieve.limit < length)
        throw std::invalid_argument("buildCoeffs: sieve limit " + std::to_string(sieve.limit) + " is below qUX = "
                                    + std::to_string(length));

    ConvolvedCoeffs out;
    out.kind = kind;
    out.q = q;
    out.U = U;
    out.X = X;
    out.values.assign(static_cast<std::size_t>(length) + 1, 0.0);

    const auto lMax = static_cast<std::int64_t>(std::floor(static_cast<double>(q) * U));
    const auto mMax = static_cast<std::int64_t>(std::floor(X));
    const double logX = std::log(X);
    for (std::int64_t m = 1; m <= mMax && m <= length; ++m) {
        const int mu = sieve.mobius[m];
        if (mu == 0) continue;
        const double w = kind == CoeffKind::A && m > 1 ? 1.0 - std::log(static_cast<double>(m)) / logX : 1.0;
        const double c = mu * w;
        const std::int64_t lTop = std::min(lMax, length / m);
        for (std::int64_t l = 1; l <= lTop; ++l) out.values[static_cast<std::size_t>(l * m)] += c;
    }
    return out;
}

std::complex<double> convolvedDirichletPolynomial(const ConvolvedCoeffs& c, const DirichletCharacter& chi, ComplexPoint s)
{
    ComplexNeumaierSum sum;
    for (std::int64_t n = 1; n <= c.size(); ++n) {
        const double a = c[n];
        if (a == 0.0) continue;
        const auto x = chi(n);
        if (x == std::complex<double>{}) continue;
        sum += a * x * powNeg(std::log(static_cast<double>(n)), s.s());
    }
    return sum.value();
}

} // namespace lprog
