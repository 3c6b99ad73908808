#pragma once

#include <cstdint>
#include <utility>
#include <vector>

namespace totring {

inline bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

// Prime factorization by trial division, ascending primes.
inline std::vector<std::pair<std::uint64_t, std::uint64_t>> factorize(std::uint64_t n) {
    std::vector<std::pair<std::uint64_t, std::uint64_t>> out;
    for (std::uint64_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            std::uint64_t e = 0;
            while (n % d == 0) { n /= d; ++e; }
            out.emplace_back(d, e);
        }
    }
    if (n > 1) out.emplace_back(n, 1);
    return out;
}

// Product of the distinct primes dividing n.
inline std::uint64_t squarefree_kernel(std::uint64_t n) {
    std::uint64_t r = 1;
    for (auto [p, e] : factorize(n)) r *= p;
    return r;
}

// q = p^k with p prime: returns {p, k}; otherwise {0, 0}.
inline std::pair<std::uint64_t, std::uint64_t> prime_power(std::uint64_t q) {
    if (q < 2) return {0, 0};
    auto f = factorize(q);
    if (f.size() != 1) return {0, 0};
    return {f[0].first, f[0].second};
}

} // namespace totring
