#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <totring/ring.hpp>

namespace totring {

// R/J materialized as a table ring over canonical (least-id) coset
// representatives. Coset ids are assigned in ascending order of their
// representative, so coset 0 is J itself.
struct QuotientRing {
    Ring quotient;              // table-realized, |R|/|J| elements
    std::vector<elem> project;  // base element id -> coset id
    std::vector<elem> section;  // coset id -> canonical representative in base

    std::size_t coset_count() const { return section.size(); }
};

inline QuotientRing quotient_mod_radical(const Ring& r, const MakeOptions& opt = {}) {
    const std::size_t n = r.order;
    const auto& rad = r.radical();

    QuotientRing q;
    q.project.assign(n, 0);
    std::vector<char> assigned(n, 0);
    for (std::size_t x = 0; x < n; ++x) {
        if (assigned[x]) continue;
        const elem coset = static_cast<elem>(q.section.size());
        q.section.push_back(static_cast<elem>(x));
        for (elem j : rad) {
            elem y = r.add(static_cast<elem>(x), j);
            assigned[y] = 1;
            q.project[y] = coset;
        }
    }

    const std::size_t m = q.section.size();
    RingSpec tspec;
    tspec.kind = RingSpec::Kind::Table;
    tspec.table_order = m;
    tspec.table_add.resize(m * m);
    tspec.table_mul.resize(m * m);
    for (std::size_t a = 0; a < m; ++a)
        for (std::size_t b = 0; b < m; ++b) {
            tspec.table_add[a * m + b] = q.project[r.add(q.section[a], q.section[b])];
            tspec.table_mul[a * m + b] = q.project[r.mul(q.section[a], q.section[b])];
        }
    tspec.table_zero = q.project[r.zero];
    tspec.table_one = q.project[r.one];
    tspec.table_source = "quotient(" + print_spec(r.spec) + ")";

    MakeOptions qopt = opt;
    qopt.validate_table = false; // induced operations form a ring by construction
    q.quotient = make_ring(tspec, qopt);

    if (q.quotient.radical().size() != 1)
        throw internal_error("quotient mod radical is not semisimple");
    return q;
}

// Local iff the non-units coincide with the radical (equivalently, R/J
// is a division ring).
inline bool is_local(const Ring& r) {
    return r.zero_divisors().size() == r.radical().size();
}

// Wedderburn shape of R/J: factors (n_i, q_i) meaning M_{n_i}(F_{q_i}).
// Unknown for operation-table rings.
struct SemisimpleShape {
    bool known = false;
    std::vector<std::pair<std::uint64_t, std::uint64_t>> factors; // (n_i, |F_i|)
};

namespace detail {

inline bool shape_rec(const RingSpec& s,
                      std::vector<std::pair<std::uint64_t, std::uint64_t>>& out) {
    using K = RingSpec::Kind;
    switch (s.kind) {
    case K::GF:
        out.emplace_back(1, checked_pow(s.p, s.k));
        return true;
    case K::Zn:
        for (auto [p, e] : factorize(s.n)) out.emplace_back(1, p);
        return true;
    case K::Prod:
        for (const auto& f : s.sub)
            if (!shape_rec(f, out)) return false;
        return true;
    case K::Mat: {
        std::vector<std::pair<std::uint64_t, std::uint64_t>> inner;
        if (!shape_rec(s.sub[0], inner)) return false;
        for (auto [m, q] : inner) out.emplace_back(s.n * m, q);
        return true;
    }
    case K::Tri: {
        std::uint64_t q = spec_order(s.sub[0]);
        for (std::uint64_t i = 0; i < s.n; ++i) out.emplace_back(1, q);
        return true;
    }
    case K::Table:
        return false;
    }
    return false;
}

} // namespace detail

inline SemisimpleShape semisimple_shape(const Ring& r) {
    SemisimpleShape s;
    s.known = detail::shape_rec(r.spec, s.factors);
    if (!s.known) s.factors.clear();
    return s;
}

} // namespace totring
