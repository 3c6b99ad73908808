#pragma once

#include <fstream>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include <totring/bitrows.hpp>
#include <totring/quotient.hpp>
#include <totring/ring.hpp>

namespace totring {

// tau(R): vertices are the ring elements, x ~ y iff x != y and
// x + y is a zero-divisor. Symmetric, loop-free.
struct TotalGraph {
    const Ring* ring = nullptr; // non-owning; keep the ring alive
    std::size_t n = 0;
    BitRows adj;
    std::vector<std::size_t> degree;

    bool adjacent(std::size_t a, std::size_t b) const { return adj.test(a, b); }
};

inline TotalGraph build_total_graph(const Ring& r) {
    TotalGraph g;
    g.ring = &r;
    g.n = r.order;
    g.adj = BitRows(g.n, g.n);
    g.degree.assign(g.n, 0);
    for (std::size_t a = 0; a < g.n; ++a)
        for (std::size_t b = a + 1; b < g.n; ++b)
            if (r.is_zero_divisor(r.add(static_cast<elem>(a), static_cast<elem>(b)))) {
                g.adj.set(a, b);
                g.adj.set(b, a);
                ++g.degree[a];
                ++g.degree[b];
            }
    return g;
}

namespace detail {

// BFS distances from src; unreachable vertices get SIZE_MAX.
inline std::vector<std::size_t> bfs_depths(const TotalGraph& g, std::size_t src) {
    std::vector<std::size_t> dist(g.n, SIZE_MAX);
    BitVec frontier(g.n), visited(g.n);
    frontier.set(src);
    visited.set(src);
    dist[src] = 0;
    std::size_t depth = 0;
    while (frontier.any()) {
        ++depth;
        BitVec next(g.n);
        frontier.for_each_set([&](std::size_t v) { next.or_with(g.adj.row(v)); });
        next.andnot_with(visited.data());
        next.for_each_set([&](std::size_t v) { dist[v] = depth; });
        visited.or_with(next.data());
        frontier = next;
    }
    return dist;
}

} // namespace detail

inline bool is_connected(const TotalGraph& g) {
    auto d = detail::bfs_depths(g, 0);
    for (std::size_t v = 0; v < g.n; ++v)
        if (d[v] == SIZE_MAX) return false;
    return true;
}

// Exact diameter; nullopt means disconnected (infinite).
inline std::optional<std::size_t> diameter(const TotalGraph& g) {
    std::size_t best = 0;
    for (std::size_t s = 0; s < g.n; ++s) {
        auto d = detail::bfs_depths(g, s);
        for (std::size_t v = 0; v < g.n; ++v) {
            if (d[v] == SIZE_MAX) return std::nullopt;
            best = std::max(best, d[v]);
        }
    }
    return best;
}

// Graph-theoretic test: connected with every degree even. Kept
// independent of the ring-theoretic criterion it is checked against.
inline bool is_eulerian(const TotalGraph& g) {
    if (!is_connected(g)) return false;
    for (auto d : g.degree)
        if (d % 2) return false;
    return true;
}

struct ComponentProfile {
    enum class Kind { Complete, Biclique, Other };
    struct Entry {
        Kind kind;
        std::size_t size;  // m for K_m; side size m for K_{m,m}
        std::size_t count;
    };
    std::vector<Entry> entries; // sorted by (kind, size)

    std::size_t total_vertices() const {
        std::size_t t = 0;
        for (const auto& e : entries)
            t += e.count * (e.kind == Kind::Biclique ? 2 * e.size : e.size);
        return t;
    }
};

namespace detail {

struct ComponentClass {
    ComponentProfile::Kind kind;
    std::size_t size;
};

inline ComponentClass classify_component(const TotalGraph& g, const std::vector<std::size_t>& verts) {
    using Kind = ComponentProfile::Kind;
    const std::size_t m = verts.size();
    if (m == 1) return {Kind::Complete, 1};

    bool complete = true;
    for (std::size_t i = 0; i < m && complete; ++i)
        for (std::size_t j = i + 1; j < m; ++j)
            if (!g.adjacent(verts[i], verts[j])) { complete = false; break; }

    // A single edge is both K_2 and K_{1,1}; follow the local-ring
    // component structure and let the characteristic decide.
    if (complete && m == 2) {
        std::uint64_t c = g.ring->characteristic;
        while (c % 2 == 0) c /= 2;
        return c == 1 ? ComponentClass{Kind::Complete, 2} : ComponentClass{Kind::Biclique, 1};
    }
    if (complete) return {Kind::Complete, m};

    // balanced complete bipartite: 2-color by BFS, then check both sides
    std::vector<int> color(g.n, -1);
    std::vector<std::size_t> stack{verts[0]}, side[2];
    color[verts[0]] = 0;
    bool bipartite = true;
    while (!stack.empty() && bipartite) {
        std::size_t v = stack.back();
        stack.pop_back();
        side[color[v]].push_back(v);
        for (std::size_t u : verts) {
            if (!g.adjacent(v, u)) continue;
            if (color[u] == -1) {
                color[u] = 1 - color[v];
                stack.push_back(u);
            } else if (color[u] == color[v]) {
                bipartite = false;
                break;
            }
        }
    }
    if (bipartite && side[0].size() == side[1].size()) {
        bool full = true;
        for (std::size_t a : side[0])
            for (std::size_t b : side[1])
                if (!g.adjacent(a, b)) { full = false; break; }
        for (std::size_t a : side[0])
            for (std::size_t b : side[0])
                if (a != b && g.adjacent(a, b)) { full = false; break; }
        if (full) return {Kind::Biclique, side[0].size()};
    }
    return {Kind::Other, m};
}

} // namespace detail

inline ComponentProfile component_profile(const TotalGraph& g) {
    std::vector<char> seen(g.n, 0);
    std::vector<detail::ComponentClass> classes;
    for (std::size_t v = 0; v < g.n; ++v) {
        if (seen[v]) continue;
        auto d = detail::bfs_depths(g, v);
        std::vector<std::size_t> verts;
        for (std::size_t u = 0; u < g.n; ++u)
            if (d[u] != SIZE_MAX) {
                seen[u] = 1;
                verts.push_back(u);
            }
        classes.push_back(detail::classify_component(g, verts));
    }
    ComponentProfile prof;
    for (const auto& c : classes) {
        bool found = false;
        for (auto& e : prof.entries)
            if (e.kind == c.kind && e.size == c.size) {
                ++e.count;
                found = true;
                break;
            }
        if (!found) prof.entries.push_back({c.kind, c.size, 1});
    }
    std::sort(prof.entries.begin(), prof.entries.end(), [](const auto& a, const auto& b) {
        if (a.kind != b.kind) return static_cast<int>(a.kind) < static_cast<int>(b.kind);
        return a.size < b.size;
    });
    return prof;
}

inline std::string profile_to_string(const ComponentProfile& p) {
    std::string out;
    for (const auto& e : p.entries) {
        if (!out.empty()) out += " + ";
        std::string name = e.kind == ComponentProfile::Kind::Complete
                               ? "K_" + std::to_string(e.size)
                               : e.kind == ComponentProfile::Kind::Biclique
                                     ? "K_{" + std::to_string(e.size) + "," + std::to_string(e.size) + "}"
                                     : "Other(" + std::to_string(e.size) + ")";
        out += name + " x " + std::to_string(e.count);
    }
    return out.empty() ? "empty" : out;
}

// Deterministic DOT output; vertex labels come from the structural
// element decoding. An optional vertex sequence is overlaid as a
// highlighted closed walk (used for Hamiltonian cycles).
inline void export_dot(const TotalGraph& g, std::ostream& os,
                       const std::vector<elem>* cycle_overlay = nullptr) {
    const Ring& r = *g.ring;
    BitRows on_cycle(cycle_overlay ? g.n : 0, cycle_overlay ? g.n : 0);
    if (cycle_overlay) {
        const auto& c = *cycle_overlay;
        for (std::size_t i = 0; i < c.size(); ++i) {
            std::size_t a = c[i], b = c[(i + 1) % c.size()];
            on_cycle.set(a, b);
            on_cycle.set(b, a);
        }
    }
    os << "graph tau {\n";
    for (std::size_t v = 0; v < g.n; ++v) {
        std::string lbl = r.label(static_cast<elem>(v));
        std::string esc;
        for (char ch : lbl) {
            if (ch == '"' || ch == '\\') esc += '\\';
            esc += ch;
        }
        os << "  n" << v << " [label=\"" << esc << "\"];\n";
    }
    for (std::size_t a = 0; a < g.n; ++a)
        for (std::size_t b = a + 1; b < g.n; ++b)
            if (g.adjacent(a, b)) {
                os << "  n" << a << " -- n" << b;
                if (cycle_overlay && on_cycle.test(a, b)) os << " [color=red penwidth=2]";
                os << ";\n";
            }
    os << "}\n";
}

inline void export_dot_file(const TotalGraph& g, const std::string& path,
                            const std::vector<elem>* cycle_overlay = nullptr) {
    std::ofstream os(path);
    if (!os) throw error("cannot open " + path + " for writing");
    export_dot(g, os, cycle_overlay);
}

} // namespace totring
