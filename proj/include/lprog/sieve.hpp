#pragma once

#include <cstdint>
#include <vector>

namespace lprog {

/// Arithmetic functions on 1..limit from one linear sieve pass. Index 0 is
/// unused padding so that `mobius[n]` reads naturally.
struct SieveTable {
    std::int64_t limit = 0;
    std::vector<std::int8_t> mobius;
    std::vector<double> vonMangoldt;
    std::vector<std::uint8_t> omegaCount;
    std::vector<std::int64_t> smallestPrimeFactor;
    std::vector<std::int64_t> primes;

    bool isPrime(std::int64_t n) const { return n >= 2 && smallestPrimeFactor[n] == n; }
};

/// Throws std::invalid_argument for limit < 1.
SieveTable buildSieve(std::int64_t limit);

} // namespace lprog
