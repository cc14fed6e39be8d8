#include "lprog/characters.hpp"

#include <numbers>
#include <numeric>
#include <stdexcept>
#include <string>

#include "lprog/summation.hpp"

namespace lprog {

namespace {

using i64 = std::int64_t;
__extension__ typedef unsigned __int128 u128;

i64 mulmod(i64 a, i64 b, i64 m)
{
    return static_cast<i64>(static_cast<u128>(a) * static_cast<u128>(b) % m);
}

i64 powmod(i64 base, i64 exp, i64 m)
{
    i64 result = 1 % m;
    base %= m;
    while (exp > 0) {
        if (exp & 1) result = mulmod(result, base, m);
        base = mulmod(base, base, m);
        exp >>= 1;
    }
    return result;
}

std::vector<std::pair<i64, int>> factorize(i64 n)
{
    std::vector<std::pair<i64, int>> f;
    for (i64 p = 2; p * p <= n; ++p) {
        if (n % p) continue;
        int e = 0;
        while (n % p == 0) {
            n /= p;
            ++e;
        }
        f.emplace_back(p, e);
    }
    if (n > 1) f.emplace_back(n, 1);
    return f;
}

// Smallest g that is a primitive root mod p and mod p^2, hence mod every p^e.
i64 conreyPrimitiveRoot(i64 p)
{
    const auto factors = factorize(p - 1);
    for (i64 g = 2; g < p * p; ++g) {
        if (g % p == 0) continue;
        bool primitive = true;
        for (const auto& [r, e] : factors) {
            if (powmod(g, (p - 1) / r, p) == 1) {
                primitive = false;
                break;
            }
        }
        if (primitive && powmod(g, p - 1, p * p) != 1) return g;
    }
    throw std::logic_error("no primitive root found for p = " + std::to_string(p));
}

enum class ComponentKind { Odd, Four, TwoPower };

// One cyclic (or, for 2^e with e >= 3, bicyclic) factor of (Z/q)^*.
struct Component {
    i64 p = 0;
    int e = 0;
    i64 pe = 1;
    ComponentKind kind = ComponentKind::Odd;
    i64 denom = 1;              // local character values are e(k / denom)
    std::vector<i64> log;       // odd: discrete log base g; 2^e: exponent of 5
    std::vector<std::int8_t> sign; // 2-power only: 1 if n == -5^a

    bool coprime(i64 n) const { return n % p != 0; }

    i64 localExponent(i64 m, i64 n) const
    {
        m %= pe;
        n %= pe;
        switch (kind) {
        case ComponentKind::Odd:
            return mulmod(log[m], log[n], denom);
        case ComponentKind::Four:
            return sign[m] * sign[n];
        case ComponentKind::TwoPower:
            return (sign[m] * sign[n] * (denom / 2) + mulmod(log[m], log[n], denom)) % denom;
        }
        return 0;
    }
};

Component makeComponent(i64 p, int e)
{
    Component c;
    c.p = p;
    c.e = e;
    for (int i = 0; i < e; ++i) c.pe *= p;
    if (p != 2) {
        c.kind = ComponentKind::Odd;
        c.denom = c.pe / p * (p - 1);
        c.log.assign(static_cast<std::size_t>(c.pe), -1);
        const i64 g = conreyPrimitiveRoot(p);
        i64 x = 1;
        for (i64 k = 0; k < c.denom; ++k) {
            c.log[x] = k;
            x = mulmod(x, g % c.pe, c.pe);
        }
    } else if (e == 2) {
        c.kind = ComponentKind::Four;
        c.denom = 2;
        c.sign = {0, 0, 0, 1};
        c.log.assign(4, 0);
    } else {
        // e >= 3; the e == 1 factor is trivial and never constructed.
        c.kind = ComponentKind::TwoPower;
        c.denom = c.pe / 4;
        c.log.assign(static_cast<std::size_t>(c.pe), -1);
        c.sign.assign(static_cast<std::size_t>(c.pe), 0);
        i64 x = 1;
        for (i64 a = 0; a < c.denom; ++a) {
            c.log[x] = a;
            c.log[c.pe - x] = a;
            c.sign[c.pe - x] = 1;
            x = x * 5 % c.pe;
        }
    }
    return c;
}

struct Group {
    i64 q = 1;
    std::vector<Component> components;
    i64 denom = 1; // lcm of component denominators

    explicit Group(i64 modulus) : q(modulus)
    {
        if (modulus < 1) throw std::invalid_argument("character modulus must be >= 1, got " + std::to_string(modulus));
        for (const auto& [p, e] : factorize(modulus)) {
            if (p == 2 && e == 1) continue;
            components.push_back(makeComponent(p, e));
            denom = std::lcm(denom, components.back().denom);
        }
    }

    i64 exponent(i64 label, i64 n) const
    {
        i64 k = 0;
        for (const auto& c : components) k = (k + c.localExponent(label, n) * (denom / c.denom)) % denom;
        return k;
    }

    // Smallest p^f such that the p-part of chi_q(label, .) is trivial on n == 1 mod p^f.
    i64 conductor(i64 label) const
    {
        i64 cond = 1;
        for (const auto& c : components) {
            i64 pf = 1;
            for (int f = 0; f <= c.e; ++f, pf *= c.p) {
                bool trivial = true;
                for (i64 n = 1; n < c.pe && trivial; n += pf) {
                    if (c.coprime(n) && c.localExponent(label, n) != 0) trivial = false;
                }
                if (trivial) break;
            }
            cond *= pf;
        }
        return cond;
    }
};

i64 normalizeLabel(i64 q, i64 label)
{
    if (q == 1) return 1;
    i64 m = label % q;
    if (m < 0) m += q;
    if (gcd64(m, q) != 1)
        throw std::invalid_argument("Conrey label " + std::to_string(label) + " is not coprime to modulus " + std::to_string(q));
    return m;
}

i64 inverseMod(i64 a, i64 m)
{
    i64 t = 0, newT = 1, r = m, newR = a % m;
    while (newR != 0) {
        const i64 quot = r / newR;
        t = std::exchange(newT, t - quot * newT);
        r = std::exchange(newR, r - quot * newR);
    }
    return t < 0 ? t + m : t;
}

} // namespace

const char* toString(Parity p) { return p == Parity::Even ? "even" : "odd"; }

std::int64_t gcd64(std::int64_t a, std::int64_t b) { return std::gcd(a, b); }

std::int64_t eulerPhi(std::int64_t n)
{
    std::int64_t phi = n;
    for (const auto& [p, e] : factorize(n)) phi = phi / p * (p - 1);
    return phi;
}

std::complex<double> rootOfUnity(std::int64_t k, std::int64_t n)
{
    k %= n;
    if (k < 0) k += n;
    if ((4 * k) % n == 0) {
        switch ((4 * k) / n) {
        case 0: return {1.0, 0.0};
        case 1: return {0.0, 1.0};
        case 2: return {-1.0, 0.0};
        default: return {0.0, -1.0};
        }
    }
    const std::int64_t centered = 2 * k > n ? k - n : k;
    const double theta = 2.0 * std::numbers::pi * static_cast<double>(centered) / static_cast<double>(n);
    return {std::cos(theta), std::sin(theta)};
}

struct CharacterFactory {
    static DirichletCharacter build(const Group& g, i64 label)
    {
        DirichletCharacter chi;
        chi.modulus_ = g.q;
        chi.label_ = label;
        chi.conductor_ = g.conductor(label);
        chi.order_ = g.denom;
        chi.exponents_.assign(static_cast<std::size_t>(g.q), -1);
        for (i64 n = 0; n < g.q; ++n)
            if (gcd64(n, g.q) == 1) chi.exponents_[static_cast<std::size_t>(n)] = g.exponent(label, n);
        chi.finalize();
        return chi;
    }
};

DirichletCharacter DirichletCharacter::fromConrey(std::int64_t modulus, std::int64_t label)
{
    const Group g(modulus);
    return CharacterFactory::build(g, normalizeLabel(modulus, label));
}

void DirichletCharacter::finalize()
{
    i64 common = order_;
    for (const i64 k : exponents_)
        if (k > 0) common = std::gcd(common, k);
    if (common > 1) {
        order_ /= common;
        for (i64& k : exponents_)
            if (k > 0) k /= common;
    }
    values_.resize(exponents_.size());
    for (std::size_t n = 0; n < exponents_.size(); ++n)
        values_[n] = exponents_[n] < 0 ? std::complex<double>{} : rootOfUnity(exponents_[n], order_);

    prefix_.assign(exponents_.size(), {});
    ComplexNeumaierSum acc;
    for (std::size_t r = 1; r < exponents_.size(); ++r) {
        acc += values_[r];
        prefix_[r] = acc.value();
    }

    const i64 minusOne = exponents_[reduce(-1)];
    parity_ = (minusOne == 0) ? Parity::Even : Parity::Odd;
}

DirichletCharacter DirichletCharacter::conjugate() const
{
    return fromConrey(modulus_, modulus_ == 1 ? 1 : inverseMod(label_, modulus_));
}

std::complex<double> DirichletCharacter::partialSum(double u) const
{
    if (u < 1.0) return {};
    const auto n = static_cast<i64>(std::floor(u));
    const i64 periods = n / modulus_;
    const i64 rest = n % modulus_;
    // Full periods sum to 0 for non-principal chi and to phi(q) otherwise.
    std::complex<double> full{};
    if (isPrincipal() && periods > 0)
        full = static_cast<double>(periods) * static_cast<double>(eulerPhi(modulus_));
    if (modulus_ == 1) return static_cast<double>(n);
    return full + prefix_[static_cast<std::size_t>(rest)];
}

std::vector<DirichletCharacter> enumerateCharacters(std::int64_t q)
{
    const Group g(q);
    std::vector<DirichletCharacter> out;
    if (q == 1) {
        out.push_back(CharacterFactory::build(g, 1));
        return out;
    }
    for (i64 m = 1; m < q; ++m)
        if (gcd64(m, q) == 1) out.push_back(CharacterFactory::build(g, m));
    return out;
}

DirichletCharacter inducedPrimitive(const DirichletCharacter& chi)
{
    if (chi.isPrincipal()) throw std::invalid_argument("inducedPrimitive: the principal character has no primitive non-principal inducer");
    const i64 q = chi.modulus();
    const i64 qStar = chi.conductor();
    auto induces = [&](const DirichletCharacter& cand) {
        for (i64 n = 1; n < q; ++n) {
            if (gcd64(n, q) != 1) continue;
            if (cand.exponent(n) * chi.order() != chi.exponent(n) * cand.order()) return false;
        }
        return true;
    };
    // Conrey labels are compatible with induction: chi_q(m, .) comes from chi_{q*}(m mod q*, .).
    const Group g(qStar);
    auto direct = CharacterFactory::build(g, chi.label() % qStar);
    if (direct.isPrimitive() && induces(direct)) return direct;
    for (i64 m = 1; m < qStar; ++m) {
        if (gcd64(m, qStar) != 1) continue;
        auto cand = CharacterFactory::build(g, m);
        if (cand.isPrimitive() && induces(cand)) return cand;
    }
    throw std::logic_error("inducedPrimitive: no inducing character found");
}

std::complex<double> gaussSum(const DirichletCharacter& chi)
{
    const i64 q = chi.modulus();
    const i64 ord = chi.order();
    ComplexNeumaierSum sum;
    for (i64 a = 1; a <= q; ++a) {
        const i64 k = chi.exponent(a);
        if (k < 0) continue;
        // e(k/ord) e(a/q) = e((k q + a ord) / (ord q))
        sum += rootOfUnity((mulmod(k, q, ord * q) + mulmod(a % q, ord, ord * q)) % (ord * q), ord * q);
    }
    return sum.value();
}

PartialCharSum partialCharSum(const DirichletCharacter& chi, double u)
{
    if (!(u >= 0.0)) throw std::invalid_argument("partialCharSum: u must be >= 0");
    return {u, chi.partialSum(u)};
}

} // namespace lprog
