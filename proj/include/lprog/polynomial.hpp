#pragma once

#include <initializer_list>
#include <vector>

namespace lprog {

/// Real polynomial sum_j c_j x^j in the monomial basis.
class Polynomial {
public:
    Polynomial() = default;
    explicit Polynomial(std::vector<double> coeffs);
    Polynomial(std::initializer_list<double> coeffs) : Polynomial(std::vector<double>(coeffs)) {}

    const std::vector<double>& coeffs() const noexcept { return coeffs_; }
    int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
    bool isZero() const noexcept { return coeffs_.empty(); }

    double operator()(double x) const noexcept;
    Polynomial derivative() const;
    Polynomial operator*(const Polynomial& rhs) const;
    Polynomial operator*(double k) const;

    /// Exact integral over [0, 1] from 1/(m+1) per monomial.
    double integral01() const;
    /// max |P(x)| over [0, 1], sampled densely plus endpoints.
    double maxAbsOnUnitInterval() const;
    /// Sum of |c_j|.
    double coefficientMass() const noexcept;

private:
    std::vector<double> coeffs_; // trailing zeros trimmed
};

} // namespace lprog
