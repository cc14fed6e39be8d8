#pragma once

#include <complex>
#include <cstdint>
#include <memory>
#include <vector>

namespace lprog {

enum class Parity { Even, Odd };

const char* toString(Parity p);

/// A Dirichlet character mod q, identified by its Conrey label.
///
/// Each value is stored twice: as an exact root-of-unity exponent k meaning
/// e(k / order) (or -1 where gcd(n, q) > 1), and as a complex double derived
/// from it. Instances are immutable.
class DirichletCharacter {
public:
    /// Builds chi_q(label, .). Throws std::invalid_argument when q < 1 or
    /// gcd(label, q) != 1.
    static DirichletCharacter fromConrey(std::int64_t modulus, std::int64_t label);

    std::int64_t modulus() const noexcept { return modulus_; }
    std::int64_t label() const noexcept { return label_; }
    std::int64_t conductor() const noexcept { return conductor_; }
    std::int64_t order() const noexcept { return order_; }
    bool isPrincipal() const noexcept { return order_ == 1; }
    bool isPrimitive() const noexcept { return conductor_ == modulus_; }
    Parity parity() const noexcept { return parity_; }

    /// chi(n) for any integer n (reduced mod q).
    std::complex<double> operator()(std::int64_t n) const noexcept { return values_[reduce(n)]; }

    /// Exact exponent k with chi(n) = e(k / order()), or -1 if chi(n) = 0.
    std::int64_t exponent(std::int64_t n) const noexcept { return exponents_[reduce(n)]; }

    const std::vector<std::complex<double>>& values() const noexcept { return values_; }
    const std::vector<std::int64_t>& exponents() const noexcept { return exponents_; }

    /// The complex-conjugate character (Conrey label m^{-1} mod q).
    DirichletCharacter conjugate() const;

    /// S_chi(u) = sum_{1 <= a <= u} chi(a), via full periods plus a prefix table.
    std::complex<double> partialSum(double u) const;

private:
    friend struct CharacterFactory;
    DirichletCharacter() = default;

    std::size_t reduce(std::int64_t n) const noexcept
    {
        std::int64_t r = n % modulus_;
        if (r < 0) r += modulus_;
        return static_cast<std::size_t>(r);
    }

    void finalize();

    std::int64_t modulus_ = 1;
    std::int64_t label_ = 1;
    std::int64_t conductor_ = 1;
    std::int64_t order_ = 1;
    Parity parity_ = Parity::Even;
    std::vector<std::int64_t> exponents_;
    std::vector<std::complex<double>> values_;
    std::vector<std::complex<double>> prefix_;
};

/// e(k / n) = exp(2 pi i k / n) with exact values at multiples of 1/4.
std::complex<double> rootOfUnity(std::int64_t k, std::int64_t n);

/// All phi(q) characters mod q, sorted by Conrey label; the principal
/// character (label 1) comes first.
std::vector<DirichletCharacter> enumerateCharacters(std::int64_t q);

/// chi(n mod q), the free-function form of DirichletCharacter::operator().
inline std::complex<double> evalChar(const DirichletCharacter& chi, std::int64_t n) { return chi(n); }

/// The primitive character mod conductor(chi) that induces chi. Throws
/// std::invalid_argument for the principal character.
DirichletCharacter inducedPrimitive(const DirichletCharacter& chi);

/// tau(chi) = sum_{a=1}^{q} chi(a) e(a/q), by direct summation.
std::complex<double> gaussSum(const DirichletCharacter& chi);

struct PartialCharSum {
    double bound = 0.0;
    std::complex<double> value;
};

/// Throws std::invalid_argument for u < 0.
PartialCharSum partialCharSum(const DirichletCharacter& chi, double u);

std::int64_t gcd64(std::int64_t a, std::int64_t b);
std::int64_t eulerPhi(std::int64_t n);

} // namespace lprog
