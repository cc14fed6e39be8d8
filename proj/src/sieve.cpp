#include "lprog/sieve.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace lprog {

SieveTable buildSieve(std::int64_t limit)
{
    if (limit < 1) throw std::invalid_argument("buildSieve: limit must be >= 1, got " + std::to_string(limit));

    SieveTable t;
    t.limit = limit;
    const auto size = static_cast<std::size_t>(limit) + 1;
    t.mobius.assign(size, 0);
    t.vonMangoldt.assign(size, 0.0);
    t.omegaCount.assign(size, 0);
    t.smallestPrimeFactor.assign(size, 0);
    t.mobius[1] = 1;
    t.smallestPrimeFactor[1] = 1;

    // Linear sieve: every composite n = p * m is visited exactly once, with
    // p = spf(n) <= spf(m).
    for (std::int64_t i = 2; i <= limit; ++i) {
        if (t.smallestPrimeFactor[i] == 0) {
            t.smallestPrimeFactor[i] = i;
            t.primes.push_back(i);
            t.mobius[i] = -1;
            t.omegaCount[i] = 1;
            t.vonMangoldt[i] = std::log(static_cast<double>(i));
        }
        for (const std::int64_t p : t.primes) {
            if (p > t.smallestPrimeFactor[i] || p * i > limit) break;
            const std::int64_t n = p * i;
            t.smallestPrimeFactor[n] = p;
            if (p == t.smallestPrimeFactor[i]) {
                t.mobius[n] = 0;
                t.omegaCount[n] = t.omegaCount[i];
                // n is a prime power exactly when i is a power of p.
                if (t.vonMangoldt[i] > 0.0) t.vonMangoldt[n] = t.vonMangoldt[p];
            } else {
                t.mobius[n] = static_cast<std::int8_t>(-t.mobius[i]);
                t.omegaCount[n] = static_cast<std::uint8_t>(t.omegaCount[i] + 1);
            }
        }
    }
    return t;
}

} // namespace lprog
