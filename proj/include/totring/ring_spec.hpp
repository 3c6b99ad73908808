#pragma once

#include <cstdint>
#include <fstream>
#include <memory>
#include <string>
#include <vector>

#include <json.hpp>

#include <totring/errors.hpp>

namespace totring {

// Compositional description of a finite ring. Realization (arithmetic
// tables, cached unit/zero-divisor sets, ...) happens in make_ring.
struct RingSpec {
    enum class Kind { Zn, GF, Mat, Tri, Prod, Table };

    Kind kind = Kind::Zn;

    // Zn: n; GF: p, k; Mat/Tri: n + base; Prod: factors; Table: tables.
    std::uint64_t n = 0;       // Zn modulus, Mat/Tri dimension
    std::uint64_t p = 0;       // GF characteristic
    std::uint64_t k = 0;       // GF extension degree
    std::vector<RingSpec> sub; // Mat/Tri base (one entry) or Prod factors

    // Table variant: row-major order x order operation tables.
    std::uint64_t table_order = 0;
    std::vector<std::uint32_t> table_add, table_mul;
    std::uint32_t table_zero = 0, table_one = 0;
    std::string table_source; // file path, for printing

    static RingSpec zn(std::uint64_t n) {
        RingSpec s;
        s.kind = Kind::Zn;
        s.n = n;
        return s;
    }
    static RingSpec gf(std::uint64_t p, std::uint64_t k = 1) {
        RingSpec s;
        s.kind = Kind::GF;
        s.p = p;
        s.k = k;
        return s;
    }
    static RingSpec mat(std::uint64_t n, RingSpec base) {
        RingSpec s;
        s.kind = Kind::Mat;
        s.n = n;
        s.sub.push_back(std::move(base));
        return s;
    }
    static RingSpec tri(std::uint64_t n, RingSpec base) {
        RingSpec s;
        s.kind = Kind::Tri;
        s.n = n;
        s.sub.push_back(std::move(base));
        return s;
    }
    static RingSpec prod(std::vector<RingSpec> factors) {
        RingSpec s;
        s.kind = Kind::Prod;
        s.sub = std::move(factors);
        return s;
    }

    bool operator==(const RingSpec& o) const {
        if (kind != o.kind) return false;
        switch (kind) {
        case Kind::Zn: return n == o.n;
        case Kind::GF: return p == o.p && k == o.k;
        case Kind::Mat:
        case Kind::Tri: return n == o.n && sub == o.sub;
        case Kind::Prod: return sub == o.sub;
        case Kind::Table:
            return table_order == o.table_order && table_add == o.table_add &&
                   table_mul == o.table_mul && table_zero == o.table_zero &&
                   table_one == o.table_one;
        }
        return false;
    }
};

namespace detail {

inline std::uint64_t checked_pow(std::uint64_t base, std::uint64_t exp) {
    std::uint64_t r = 1;
    for (std::uint64_t i = 0; i < exp; ++i) {
        if (base != 0 && r > UINT64_MAX / base)
            throw order_guard_error("carrier size overflows 64 bits");
        r *= base;
    }
    return r;
}

} // namespace detail

// Carrier size of the realized ring; throws on 64-bit overflow.
inline std::uint64_t spec_order(const RingSpec& s) {
    using K = RingSpec::Kind;
    switch (s.kind) {
    case K::Zn: return s.n;
    case K::GF: return detail::checked_pow(s.p, s.k);
    case K::Mat: return detail::checked_pow(spec_order(s.sub[0]), s.n * s.n);
    case K::Tri: return detail::checked_pow(spec_order(s.sub[0]), s.n * (s.n + 1) / 2);
    case K::Prod: {
        std::uint64_t r = 1;
        for (const auto& f : s.sub) {
            std::uint64_t m = spec_order(f);
            if (m != 0 && r > UINT64_MAX / m)
                throw order_guard_error("carrier size overflows 64 bits");
            r *= m;
        }
        return r;
    }
    case K::Table: return s.table_order;
    }
    return 0;
}

// Canonical expression text; parse(print(s)) == s.
inline std::string print_spec(const RingSpec& s, bool parenthesize_prod = false) {
    using K = RingSpec::Kind;
    switch (s.kind) {
    case K::Zn: return "Z(" + std::to_string(s.n) + ")";
    case K::GF: return "GF(" + std::to_string(s.p) + "," + std::to_string(s.k) + ")";
    case K::Mat: return "M(" + std::to_string(s.n) + "," + print_spec(s.sub[0]) + ")";
    case K::Tri: return "T(" + std::to_string(s.n) + "," + print_spec(s.sub[0]) + ")";
    case K::Prod: {
        std::string out;
        for (std::size_t i = 0; i < s.sub.size(); ++i) {
            if (i) out += " x ";
            out += print_spec(s.sub[i], true);
        }
        if (parenthesize_prod) out = "(" + out + ")";
        return out;
    }
    case K::Table:
        return "@" + (s.table_source.empty() ? std::string("<table>") : s.table_source);
    }
    return "?";
}

// Parses {"order": n, "add": [[...]], "mul": [[...]], "zero": i, "one": j}.
// Tables are 0-indexed row-major. Ring axioms are validated later, in
// make_ring; this only checks shape.
inline RingSpec table_spec_from_json(const nlohmann::json& j, const std::string& source = "") {
    RingSpec s;
    s.kind = RingSpec::Kind::Table;
    s.table_source = source;
    if (!j.is_object() || !j.contains("order") || !j.contains("add") || !j.contains("mul") ||
        !j.contains("zero") || !j.contains("one"))
        throw spec_error("table spec: expected object with order/add/mul/zero/one");
    s.table_order = j.at("order").get<std::uint64_t>();
    if (s.table_order < 2) throw spec_error("table spec: order must be >= 2");
    const std::uint64_t n = s.table_order;
    s.table_zero = j.at("zero").get<std::uint32_t>();
    s.table_one = j.at("one").get<std::uint32_t>();
    if (s.table_zero >= n || s.table_one >= n)
        throw spec_error("table spec: zero/one index out of range");
    auto load = [&](const char* key, std::vector<std::uint32_t>& out) {
        const auto& t = j.at(key);
        if (!t.is_array() || t.size() != n)
            throw spec_error(std::string("table spec: ") + key + " must be an order x order array");
        out.reserve(n * n);
        for (const auto& row : t) {
            if (!row.is_array() || row.size() != n)
                throw spec_error(std::string("table spec: ") + key + " row has wrong length");
            for (const auto& v : row) {
                std::uint64_t x = v.get<std::uint64_t>();
                if (x >= n) throw spec_error(std::string("table spec: ") + key + " entry out of range");
                out.push_back(static_cast<std::uint32_t>(x));
            }
        }
    };
    load("add", s.table_add);
    load("mul", s.table_mul);
    return s;
}

inline RingSpec load_table_spec(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw spec_error("cannot open table file: " + path);
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw spec_error("bad JSON in " + path + ": " + e.what());
    }
    return table_spec_from_json(j, path);
}

} // namespace totring
