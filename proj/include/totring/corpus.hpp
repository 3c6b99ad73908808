#pragma once

#include <string>
#include <vector>

#include <totring/parse.hpp>
#include <totring/ring_spec.hpp>

namespace totring {

// Built-in corpus: local and non-local rings, zero and nonzero radical,
// even and odd characteristic, one and several Wedderburn factors.
struct CorpusEntry {
    enum class Gate { Default, Slow, Skip };

    std::string name;
    std::string expr;          // empty for inline table specs
    RingSpec spec;
    Gate entry_gate = Gate::Default; // whole entry gated (adds under --slow)
    Gate gamma_gate = Gate::Default; // exact-domination gate
    Gate ham_gate = Gate::Default;   // Hamiltonian-construction gate
};

namespace detail {

// Z_4 with the labels of 2 and 3 swapped, fed through the operation-table
// path: exercises black-box validation and the Unknown-shape branches.
inline RingSpec scrambled_z4_table() {
    auto perm = [](std::uint32_t x) -> std::uint32_t {
        if (x == 2) return 3;
        if (x == 3) return 2;
        return x;
    };
    RingSpec s;
    s.kind = RingSpec::Kind::Table;
    s.table_order = 4;
    s.table_zero = 0;
    s.table_one = 1;
    s.table_source = "builtin:z4-relabeled";
    s.table_add.resize(16);
    s.table_mul.resize(16);
    for (std::uint32_t a = 0; a < 4; ++a)
        for (std::uint32_t b = 0; b < 4; ++b) {
            std::uint32_t ra = perm(a), rb = perm(b);
            s.table_add[a * 4 + b] = perm((ra + rb) % 4);
            s.table_mul[a * 4 + b] = perm((ra * rb) % 4);
        }
    return s;
}

} // namespace detail

inline const std::vector<CorpusEntry>& builtin_corpus() {
    using G = CorpusEntry::Gate;
    static const std::vector<CorpusEntry> corpus = [] {
        std::vector<CorpusEntry> v;
        auto add = [&](std::string name, std::string expr, G entry = G::Default,
                       G gamma = G::Default, G ham = G::Default) {
            CorpusEntry e;
            e.name = std::move(name);
            e.expr = expr;
            e.spec = parse_ring_expr(expr);
            e.entry_gate = entry;
            e.gamma_gate = gamma;
            e.ham_gate = ham;
            v.push_back(std::move(e));
        };
        add("Z_2", "Z(2)");
        add("Z_3", "Z(3)");
        add("Z_4", "Z(4)");
        add("Z_6", "Z(6)");
        add("Z_8", "Z(8)");
        add("Z_9", "Z(9)");
        add("Z_12", "Z(12)");
        add("GF(4)", "GF(4)");
        add("GF(8)", "GF(8)");
        add("GF(9)", "GF(9)");
        add("GF(2)xGF(2)", "GF(2) x GF(2)");
        add("GF(2)xGF(3)", "GF(2) x GF(3)");
        add("GF(4)xGF(2)", "GF(4) x GF(2)");
        add("M_2(GF(2))", "M(2,GF(2))");
        add("M_2(GF(3))", "M(2,GF(3))");
        // graph-scale checks by default; Hamiltonian run added under --slow,
        // exact domination out of reach for the deepening disproofs
        add("M_2(GF(4))", "M(2,GF(4))", G::Default, G::Skip, G::Slow);
        add("T_2(GF(2))", "T(2,GF(2))");
        add("T_2(GF(3))", "T(2,GF(3))");
        add("M_2(Z_4)", "M(2,Z(4))");
        add("M_2(GF(2))xGF(3)", "M(2,GF(2)) x GF(3)");
        {
            CorpusEntry e;
            e.name = "TableLocal";
            e.expr = "";
            e.spec = detail::scrambled_z4_table();
            v.push_back(std::move(e));
        }
        // extra entry under --slow only
        add("M_3(GF(2))", "M(3,GF(2))", G::Slow, G::Slow, G::Default);
        return v;
    }();
    return corpus;
}

} // namespace totring
