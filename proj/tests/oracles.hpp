#pragma once

// Test-side oracles, deliberately independent of the library's
// implementation paths: subset enumeration for domination, maximal
// left ideal intersection for the radical, naive polynomial arithmetic
// for small field checks.

#include <cstdint>
#include <functional>
#include <vector>

#include <totring/ring.hpp>
#include <totring/total_graph.hpp>

namespace oracles {

// Minimum dominating set size by exhaustive subset enumeration in
// increasing size; practical up to ~30 vertices at small gamma.
inline std::size_t gamma_subsets(const totring::TotalGraph& g) {
    const std::size_t n = g.n;
    std::vector<std::vector<std::size_t>> closed(n);
    for (std::size_t v = 0; v < n; ++v) {
        closed[v].push_back(v);
        for (std::size_t u = 0; u < n; ++u)
            if (g.adjacent(v, u)) closed[v].push_back(u);
    }
    std::vector<std::size_t> pick;
    std::function<bool(std::size_t, std::size_t, std::size_t)> rec =
        [&](std::size_t start, std::size_t depth, std::size_t k) -> bool {
        if (depth == k) {
            std::vector<char> covered(n, 0);
            for (std::size_t v : pick)
                for (std::size_t u : closed[v]) covered[u] = 1;
            for (std::size_t v = 0; v < n; ++v)
                if (!covered[v]) return false;
            return true;
        }
        for (std::size_t v = start; v < n; ++v) {
            pick.push_back(v);
            if (rec(v + 1, depth + 1, k)) return true;
            pick.pop_back();
        }
        return false;
    };
    for (std::size_t k = 1; k <= n; ++k) {
        pick.clear();
        if (rec(0, 0, k)) return k;
    }
    return n;
}

// Jacobson radical as the intersection of maximal left ideals, found by
// enumerating all subsets; usable for rings with at most ~16 elements.
inline std::vector<totring::elem> radical_via_left_ideals(const totring::Ring& r) {
    using totring::elem;
    const std::size_t n = r.order;
    std::vector<std::uint32_t> left_ideals;
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
        if (!(mask >> r.zero & 1)) continue;
        if (mask == (1u << n) - 1) continue; // proper only
        bool ok = true;
        for (std::size_t a = 0; a < n && ok; ++a) {
            if (!(mask >> a & 1)) continue;
            for (std::size_t b = 0; b < n && ok; ++b) {
                if ((mask >> b & 1) &&
                    !(mask >> r.add(static_cast<elem>(a), static_cast<elem>(b)) & 1))
                    ok = false;
                if (!(mask >> r.mul(static_cast<elem>(b), static_cast<elem>(a)) & 1))
                    ok = false; // left multiple r*a must stay inside
            }
        }
        if (ok) left_ideals.push_back(mask);
    }
    std::uint32_t inter = (1u << n) - 1;
    for (std::uint32_t m : left_ideals) {
        bool maximal = true;
        for (std::uint32_t m2 : left_ideals)
            if (m2 != m && (m & m2) == m) { maximal = false; break; }
        if (maximal) inter &= m;
    }
    std::vector<totring::elem> out;
    for (std::size_t x = 0; x < n; ++x)
        if (inter >> x & 1) out.push_back(static_cast<totring::elem>(x));
    return out;
}

// GF(4) as Z_2[t]/(t^2+t+1), multiplication worked by hand:
//   ids 0,1,2,3 = 0, 1, t, t+1
inline int gf4_mul(int a, int b) {
    static const int table[4][4] = {
        {0, 0, 0, 0},
        {0, 1, 2, 3},
        {0, 2, 3, 1},
        {0, 3, 1, 2},
    };
    return table[a][b];
}

// Count invertible 2x2 matrices over Z_p by determinant.
inline std::size_t count_invertible_2x2(int p) {
    std::size_t count = 0;
    for (int a = 0; a < p; ++a)
        for (int b = 0; b < p; ++b)
            for (int c = 0; c < p; ++c)
                for (int d = 0; d < p; ++d)
                    if ((a * d - b * c) % p != 0) ++count;
    return count;
}

} // namespace oracles
