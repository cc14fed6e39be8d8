#include "lprog/polynomial.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "lprog/summation.hpp"

namespace lprog {

Polynomial::Polynomial(std::vector<double> coeffs) : coeffs_(std::move(coeffs))
{
    for (const double c : coeffs_)
        if (!std::isfinite(c)) throw std::invalid_argument("Polynomial: coefficients must be finite");
    while (!coeffs_.empty() && coeffs_.back() == 0.0) coeffs_.pop_back();
}

double Polynomial::operator()(double x) const noexcept
{
    double acc = 0.0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

Polynomial Polynomial::derivative() const
{
    if (coeffs_.size() <= 1) return {};
    std::vector<double> d(coeffs_.size() - 1);
    for (std::size_t j = 1; j < coeffs_.size(); ++j) d[j - 1] = static_cast<double>(j) * coeffs_[j];
    return Polynomial(std::move(d));
}

Polynomial Polynomial::operator*(const Polynomial& rhs) const
{
    if (isZero() || rhs.isZero()) return {};
    std::vector<double> out(coeffs_.size() + rhs.coeffs_.size() - 1, 0.0);
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) out[i + j] += coeffs_[i] * rhs.coeffs_[j];
    return Polynomial(std::move(out));
}

Polynomial Polynomial::operator*(double k) const
{
    std::vector<double> out(coeffs_);
    for (double& c : out) c *= k;
    return Polynomial(std::move(out));
}

double Polynomial::integral01() const
{
    NeumaierSum sum;
    for (std::size_t j = 0; j < coeffs_.size(); ++j) sum += coeffs_[j] / static_cast<double>(j + 1);
    return sum.value();
}

double Polynomial::maxAbsOnUnitInterval() const
{
    double best = std::max(std::fabs((*this)(0.0)), std::fabs((*this)(1.0)));
    constexpr int kSamples = 4096;
    for (int i = 1; i < kSamples; ++i) best = std::max(best, std::fabs((*this)(static_cast<double>(i) / kSamples)));
    return best;
}

double Polynomial::coefficientMass() const noexcept
{
    double m = 0.0;
    for (const double c : coeffs_) m += std::fabs(c);
    return m;
}

} // namespace lprog
