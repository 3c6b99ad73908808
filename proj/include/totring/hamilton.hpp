#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <totring/quotient.hpp>
#include <totring/ring.hpp>
#include <totring/total_graph.hpp>

namespace totring {

struct HamPath {
    std::vector<elem> seq;
};

struct HamCycle {
    std::vector<elem> seq;
};

struct VerifyResult {
    bool ok = false;
    std::string violation;
};

// Pure oracle: bijectivity onto R plus every cyclic consecutive sum a
// zero-divisor. Shares no code with the constructions it checks.
inline VerifyResult verify_cycle(const Ring& r, const std::vector<elem>& seq) {
    if (seq.size() != r.order)
        return {false, "length " + std::to_string(seq.size()) + " != |R| = " + std::to_string(r.order)};
    if (seq.size() < 3) return {false, "a cycle needs at least 3 vertices"};
    std::vector<char> seen(r.order, 0);
    for (elem v : seq) {
        if (v >= r.order) return {false, "vertex id " + std::to_string(v) + " out of range"};
        if (seen[v]) return {false, "DuplicateVertex " + r.label(v)};
        seen[v] = 1;
    }
    for (std::size_t i = 0; i < seq.size(); ++i) {
        elem a = seq[i], b = seq[(i + 1) % seq.size()];
        elem s = r.add(a, b);
        if (!r.is_zero_divisor(s))
            return {false, "sum " + r.label(a) + " + " + r.label(b) + " = " + r.label(s) +
                               " is not a zero-divisor"};
    }
    return {true, ""};
}

// Path variant: distinct vertices, consecutive sums in Z(R), no wrap edge.
inline VerifyResult verify_path(const Ring& r, const std::vector<elem>& seq) {
    std::vector<char> seen(r.order, 0);
    for (elem v : seq) {
        if (v >= r.order) return {false, "vertex id out of range"};
        if (seen[v]) return {false, "DuplicateVertex " + r.label(v)};
        seen[v] = 1;
    }
    for (std::size_t i = 0; i + 1 < seq.size(); ++i) {
        elem s = r.add(seq[i], seq[i + 1]);
        if (!r.is_zero_divisor(s))
            return {false, "sum " + r.label(seq[i]) + " + " + r.label(seq[i + 1]) +
                               " is not a zero-divisor"};
    }
    return {true, ""};
}

struct ConstructionLog {
    std::vector<std::string> notes;
    void note(std::string s) { notes.push_back(std::move(s)); }
};

namespace detail {

// Appends vertices one at a time, checking each new edge against Z(R)
// as it is laid down; a bad snake edge fails fast with the offending pair.
struct PathBuilder {
    const Ring& r;
    std::vector<elem> seq;
    std::vector<char> seen;

    explicit PathBuilder(const Ring& ring) : r(ring), seen(ring.order, 0) {}

    void append(elem v) {
        if (seen[v])
            throw edge_violation_error("construction revisits vertex " + r.label(v));
        if (!seq.empty()) {
            elem s = r.add(seq.back(), v);
            if (!r.is_zero_divisor(s))
                throw edge_violation_error("EdgeViolation: " + r.label(seq.back()) + " -- " +
                                           r.label(v) + " sums to " + r.label(s) +
                                           ", not a zero-divisor");
        }
        seen[v] = 1;
        seq.push_back(v);
    }

    void check_wrap() const {
        elem s = r.add(seq.back(), seq.front());
        if (!r.is_zero_divisor(s))
            throw edge_violation_error("EdgeViolation: closing edge " + r.label(seq.back()) +
                                       " -- " + r.label(seq.front()) + " sums to " + r.label(s));
    }
};

} // namespace detail

// ---------------------------------------------------------------------------
// Row-major index prefixes over the n x n positions, with the companion
// matrix sets. Positions are 1-based (k,l); packed position is
// (k-1)*n + (l-1).
// ---------------------------------------------------------------------------

struct IndexPrefix {
    std::size_t n = 0, k = 0, l = 0;

    // (i,j) strictly before (k,l) in row-major order
    bool in_I(std::size_t i, std::size_t j) const { return i < k || (i == k && j < l); }
    bool in_Ibar(std::size_t i, std::size_t j) const { return in_I(i, j) || (i == k && j == l); }
    // I minus the row-major predecessor of (k,l)
    bool in_Iunder(std::size_t i, std::size_t j) const {
        if (!in_I(i, j)) return false;
        if (l == 1) return !(i == k - 1 && j == n);
        return !(i == k && j == l - 1);
    }

    std::vector<std::size_t> positions_I() const {
        std::vector<std::size_t> out;
        for (std::size_t i = 1; i <= n; ++i)
            for (std::size_t j = 1; j <= n; ++j)
                if (in_I(i, j)) out.push_back((i - 1) * n + (j - 1));
        return out;
    }
};

// Digit-level view of a Mat(n, F) ring: entry extraction and scalar
// matrix units without rebuilding element vectors.
class MatrixLayout {
public:
    const Ring& M;
    const Ring& F;
    std::size_t n;

    explicit MatrixLayout(const Ring& mat_ring)
        : M(mat_ring), F(*mat_ring.children.at(0)), n(mat_ring.spec.n) {
        if (M.spec.kind != RingSpec::Kind::Mat)
            throw invalid_input_error("MatrixLayout requires a matrix ring");
        pow_.resize(n * n + 1, 1);
        for (std::size_t i = 0; i < n * n; ++i) pow_[i + 1] = pow_[i] * F.order;
    }

    std::size_t pos(std::size_t k, std::size_t l) const { return (k - 1) * n + (l - 1); }

    elem entry(elem e, std::size_t p) const {
        return static_cast<elem>((e / pow_[p]) % F.order);
    }

    // x * E_{k,l} as an element id
    elem unit_scalar(elem x, std::size_t k, std::size_t l) const {
        return static_cast<elem>(std::uint64_t(x) * pow_[pos(k, l)]);
    }

    bool in_A(elem e, const IndexPrefix& pfx) const {
        for (std::size_t i = 1; i <= n; ++i)
            for (std::size_t j = 1; j <= n; ++j)
                if (!pfx.in_I(i, j) && entry(e, pos(i, j)) != F.zero) return false;
        return true;
    }
    bool in_Abar(elem e, const IndexPrefix& pfx) const {
        for (std::size_t i = 1; i <= n; ++i)
            for (std::size_t j = 1; j <= n; ++j)
                if (!pfx.in_Ibar(i, j) && entry(e, pos(i, j)) != F.zero) return false;
        return true;
    }
    bool in_C(elem e, const IndexPrefix& pfx, elem c) const {
        for (std::size_t i = 1; i <= n; ++i)
            for (std::size_t j = 1; j <= n; ++j)
                if (pfx.in_I(i, j) && entry(e, pos(i, j)) != c) return false;
        return true;
    }
    bool in_Cbar(elem e, const IndexPrefix& pfx, elem c) const {
        for (std::size_t i = 1; i <= n; ++i)
            for (std::size_t j = 1; j <= n; ++j)
                if (pfx.in_Ibar(i, j) && entry(e, pos(i, j)) != c) return false;
        return true;
    }
    bool in_Cunder(elem e, const IndexPrefix& pfx, elem c) const {
        for (std::size_t i = 1; i <= n; ++i)
            for (std::size_t j = 1; j <= n; ++j)
                if (pfx.in_Iunder(i, j) && entry(e, pos(i, j)) != c) return false;
        return true;
    }

    // Common value on I_{k,l}, if the entries there are constant.
    std::optional<elem> const_on_I(elem e, const IndexPrefix& pfx) const {
        std::optional<elem> v;
        for (std::size_t i = 1; i <= n; ++i)
            for (std::size_t j = 1; j <= n; ++j)
                if (pfx.in_I(i, j)) {
                    elem x = entry(e, pos(i, j));
                    if (!v) v = x;
                    else if (*v != x) return std::nullopt;
                }
        return v ? v : std::optional<elem>(F.zero); // empty prefix: constant vacuously
    }

private:
    std::vector<std::uint64_t> pow_;
};

// ---------------------------------------------------------------------------
// Layer extensions: append the F*-multiples of E_{k,l} to a Hamiltonian
// path on A_{k,l}, walking the snake grid boustrophedon.
// ---------------------------------------------------------------------------

// char(F) = 2. Input path on A_{k,l} from 0 ending in C_under(0); output
// path on Abar_{k,l} from 0 ending in C(0). Grid rows are P + x_i*E with
// the nonzero scalars in ascending id order; odd rows run right-to-left.
inline HamPath extend_layer_char2(const MatrixLayout& L, const HamPath& path,
                                  std::size_t k, std::size_t l) {
    const Ring& M = L.M;
    const Ring& F = L.F;
    if (F.characteristic != 2) throw invalid_input_error("extend_layer_char2 needs char(F) = 2");
    IndexPrefix pfx{L.n, k, l};

    if (path.seq.empty() || path.seq.front() != M.zero)
        throw invalid_input_error("layer input path must start at 0");
    std::uint64_t expected = 1;
    for (std::size_t i = 0; i < pfx.positions_I().size(); ++i) expected *= F.order;
    if (path.seq.size() != expected)
        throw invalid_input_error("layer input path does not cover A_{k,l}");
    for (elem v : path.seq)
        if (!L.in_A(v, pfx)) throw invalid_input_error("layer input path leaves A_{k,l}");
    if (!L.in_Cunder(path.seq.back(), pfx, F.zero))
        throw invalid_input_error("layer input path must end in C_under(0)");

    detail::PathBuilder b(M);
    for (elem v : path.seq) b.append(v);

    std::size_t row = 0;
    for (std::size_t x = 0; x < F.order; ++x) {
        if (static_cast<elem>(x) == F.zero) continue;
        elem e = L.unit_scalar(static_cast<elem>(x), k, l);
        ++row;
        if (row % 2) { // right-to-left
            for (std::size_t j = path.seq.size(); j-- > 0;) b.append(M.add(path.seq[j], e));
        } else {
            for (elem p : path.seq) b.append(M.add(p, e));
        }
    }

    HamPath out{std::move(b.seq)};
    if (out.seq.size() != expected * F.order)
        throw internal_error("char-2 layer output does not cover Abar_{k,l}");
    if (!L.in_C(out.seq.back(), pfx, F.zero))
        throw internal_error("char-2 layer endpoint is not in C(0)");
    return out;
}

// char(F) odd. Input path on A_{k,l} from 0 ending in C(c) for some
// c in F^*; output path on Abar_{k,l} from 0 ending in Cbar(d), d != 0.
// F^* is walked in pairs {x_i, -x_i}; the pair of c goes last and its
// orientation is fixed empirically: the literal diagram reading is
// tried first and flipped if the endpoint misses Cbar, which the log
// records as a ParityAdjustment.
inline HamPath extend_layer_odd(const MatrixLayout& L, const HamPath& path,
                                std::size_t k, std::size_t l, ConstructionLog* log = nullptr) {
    const Ring& M = L.M;
    const Ring& F = L.F;
    if (F.characteristic == 2) throw invalid_input_error("extend_layer_odd needs odd char");
    IndexPrefix pfx{L.n, k, l};

    if (path.seq.empty() || path.seq.front() != M.zero)
        throw invalid_input_error("layer input path must start at 0");
    std::uint64_t expected = 1;
    for (std::size_t i = 0; i < pfx.positions_I().size(); ++i) expected *= F.order;
    if (path.seq.size() != expected)
        throw invalid_input_error("layer input path does not cover A_{k,l}");
    for (elem v : path.seq)
        if (!L.in_A(v, pfx)) throw invalid_input_error("layer input path leaves A_{k,l}");

    auto cval = L.const_on_I(path.seq.back(), pfx);
    if (!cval) throw invalid_input_error("layer input endpoint is not constant on I_{k,l}");
    elem c = *cval;
    if (pfx.positions_I().empty()) {
        // I empty: the C(c) condition is vacuous; pick the least id in F^*
        for (std::size_t x = 0; x < F.order; ++x)
            if (static_cast<elem>(x) != F.zero) { c = static_cast<elem>(x); break; }
    } else if (c == F.zero) {
        throw invalid_input_error("layer input endpoint constant 0; need c in F^*");
    }

    // pairs {y, -y} of F^*, ordered by least member id; c's pair last
    std::vector<std::pair<elem, elem>> pairs;
    std::vector<char> taken(F.order, 0);
    for (std::size_t y = 0; y < F.order; ++y) {
        if (static_cast<elem>(y) == F.zero || taken[y]) continue;
        elem ny = F.neg(static_cast<elem>(y));
        taken[y] = taken[ny] = 1;
        pairs.emplace_back(static_cast<elem>(y), ny);
    }
    auto is_c_pair = [&](const std::pair<elem, elem>& pr) {
        return pr.first == c || pr.second == c;
    };
    std::stable_partition(pairs.begin(), pairs.end(),
                          [&](const auto& pr) { return !is_c_pair(pr); });

    const std::size_t m = pairs.size();
    std::vector<elem> negp(path.seq.size());
    for (std::size_t j = 0; j < path.seq.size(); ++j) negp[j] = M.neg(path.seq[j]);

    // literal reading puts x_m = (-1)^m c; the flipped one negates it
    elem xm_literal = (m % 2 == 0) ? c : F.neg(c);

    auto build = [&](elem xm) {
        detail::PathBuilder b(M);
        for (elem v : path.seq) b.append(v);
        for (std::size_t i = 1; i <= m; ++i) {
            elem xi = (i == m) ? xm : std::min(pairs[i - 1].first, pairs[i - 1].second);
            elem ep = L.unit_scalar(xi, k, l);
            elem en = L.unit_scalar(F.neg(xi), k, l);
            const auto& base = (i % 2) ? negp : path.seq; // eps_i = (-1)^i
            // row 2i-1: eps*P_j + (-1)^j x_i E, walked right-to-left
            for (std::size_t j = base.size(); j-- > 0;)
                b.append(M.add(base[j], (j % 2 == 0) ? ep : en));
            // row 2i: eps*P_j + (-1)^{j+1} x_i E, walked left-to-right
            for (std::size_t j = 0; j < base.size(); ++j)
                b.append(M.add(base[j], (j % 2 == 0) ? en : ep));
        }
        return HamPath{std::move(b.seq)};
    };

    // endpoint of the would-be snake: eps_m * P_t + (-1)^{t+1} x_m E
    auto endpoint_of = [&](elem xm) {
        const std::size_t t = path.seq.size() - 1;
        elem base = (m % 2) ? negp.back() : path.seq.back();
        elem xe = (t % 2 == 0) ? F.neg(xm) : xm;
        return M.add(base, L.unit_scalar(xe, k, l));
    };

    auto cbar_ok = [&](elem v) {
        for (elem d = 0; d < F.order; ++d)
            if (d != F.zero && L.in_Cbar(v, pfx, d)) return true;
        return false;
    };

    elem xm = xm_literal;
    if (!cbar_ok(endpoint_of(xm))) {
        xm = F.neg(xm_literal);
        if (log)
            log->note("ParityAdjustment at (" + std::to_string(k) + "," + std::to_string(l) +
                      "): last scalar pair reoriented to land in Cbar");
        if (!cbar_ok(endpoint_of(xm)))
            throw internal_error("odd layer endpoint misses Cbar under both pair orientations");
    }

    HamPath out = build(xm);
    if (out.seq.size() != expected * F.order)
        throw internal_error("odd layer output does not cover Abar_{k,l}");
    if (!cbar_ok(out.seq.back()))
        throw internal_error("odd layer endpoint is not in Cbar(d), d != 0");
    return out;
}

// ---------------------------------------------------------------------------
// Full constructions
// ---------------------------------------------------------------------------

namespace detail {

inline bool spec_is_field(const RingSpec& s) {
    return s.kind == RingSpec::Kind::GF ||
           (s.kind == RingSpec::Kind::Zn && is_prime(s.n));
}

} // namespace detail

// Hamiltonian cycle on M_n(F), n >= 2: iterate the positions row-major,
// extending the path one scalar layer at a time, then close the cycle
// (the final endpoint is singular, so it connects back to 0).
inline HamCycle ham_matrix(const Ring& mat_ring, ConstructionLog* log = nullptr) {
    if (mat_ring.spec.kind != RingSpec::Kind::Mat || mat_ring.spec.n < 2 ||
        !detail::spec_is_field(mat_ring.spec.sub[0]))
        throw invalid_input_error("ham_matrix needs M(n, field) with n >= 2");
    MatrixLayout L(mat_ring);
    const bool char2 = (L.F.characteristic == 2);

    HamPath path{{mat_ring.zero}};
    for (std::size_t k = 1; k <= L.n; ++k)
        for (std::size_t l = 1; l <= L.n; ++l)
            path = char2 ? extend_layer_char2(L, path, k, l)
                         : extend_layer_odd(L, path, k, l, log);

    if (path.seq.size() != mat_ring.order)
        throw internal_error("matrix snake does not cover M_n(F)");
    detail::PathBuilder b(mat_ring);
    for (elem v : path.seq) b.append(v);
    b.check_wrap();
    HamCycle cycle{std::move(b.seq)};
    auto v = verify_cycle(mat_ring, cycle.seq);
    if (!v.ok) throw internal_error("ham_matrix produced an invalid cycle: " + v.violation);
    return cycle;
}

namespace detail {

// Pair view of a product ring: elements are a + size_a * b. Factor-wise
// negation and characteristic are recovered through the product's own
// tables, so this works for any factor split.
struct PairView {
    const Ring& P;
    std::size_t size_a, size_b;

    elem pair(std::size_t a, std::size_t b) const { return static_cast<elem>(a + size_a * b); }
    elem neg_a(std::size_t a) const { return P.neg(static_cast<elem>(a)); } // stays in the a-slice
    std::size_t neg_b(std::size_t b) const { return P.neg(pair(0, b)) / size_a; }

    std::uint64_t char_a() const {
        elem one_a = static_cast<elem>(P.one % size_a);
        elem x = one_a;
        std::uint64_t c = 1;
        while (x != P.zero) { x = P.add(x, one_a); ++c; }
        return c;
    }
    std::uint64_t char_b() const {
        elem one_b = pair(0, P.one / size_a);
        elem x = one_b;
        std::uint64_t c = 1;
        while (x != P.zero) { x = P.add(x, one_b); ++c; }
        return c;
    }
};

// Boustrophedon for the char-2 column ring: columns in id order, rows
// ascending on odd columns and negated-descending on even ones.
// `swap_roles` mirrors the construction when the row ring has char 2.
inline HamCycle product_char2_case(const PairView& v, bool swap_roles) {
    detail::PathBuilder b(v.P);
    const std::size_t rows = swap_roles ? v.size_b : v.size_a;
    const std::size_t cols = swap_roles ? v.size_a : v.size_b;
    auto at = [&](std::size_t rrow, std::size_t col) {
        return swap_roles ? v.pair(col, rrow) : v.pair(rrow, col);
    };
    auto neg_row = [&](std::size_t rrow) {
        return swap_roles ? v.neg_b(rrow) : static_cast<std::size_t>(v.neg_a(rrow));
    };
    for (std::size_t c = 0; c < cols; ++c) {
        if (c % 2 == 0)
            for (std::size_t r = 0; r < rows; ++r) b.append(at(r, c));
        else
            for (std::size_t r = rows; r-- > 0;) b.append(at(neg_row(r), c));
    }
    b.check_wrap();
    return HamCycle{std::move(b.seq)};
}

// Both characteristics differ from 2: order S into +/- pairs plus the
// 2-torsion tail, reorder R so the last element is -a_1 with 2a_1 != 0,
// and stitch the column pairs and the tail exactly as the proof lists
// them, validating every junction edge.
inline HamCycle product_odd_case(const PairView& v) {
    const Ring& P = v.P;

    // R-side order: a_1 with 2a_1 != 0, interior ascending, a_r = -a_1
    std::size_t a1 = SIZE_MAX;
    for (std::size_t a = 0; a < v.size_a; ++a)
        if (P.add(static_cast<elem>(a), static_cast<elem>(a)) != P.zero) { a1 = a; break; }
    if (a1 == SIZE_MAX) throw internal_error("char(R) != 2 but R is 2-torsion");
    std::size_t ar = v.neg_a(a1);
    std::vector<std::size_t> avec{a1};
    for (std::size_t a = 0; a < v.size_a; ++a)
        if (a != a1 && a != ar) avec.push_back(a);
    avec.push_back(ar);
    const std::size_t r = avec.size();

    // S-side: pairs {b, -b} by least member, then the 2-torsion tail
    std::vector<std::size_t> pair_rep, torsion;
    std::vector<char> taken(v.size_b, 0);
    for (std::size_t bb = 0; bb < v.size_b; ++bb) {
        if (taken[bb]) continue;
        std::size_t nb = v.neg_b(bb);
        if (nb == bb) {
            torsion.push_back(bb);
        } else {
            taken[nb] = 1;
            pair_rep.push_back(bb);
        }
        taken[bb] = 1;
    }
    const std::size_t t = pair_rep.size();
    if (torsion.empty()) throw internal_error("product tail is empty (0 is 2-torsion)");

    detail::PathBuilder b(P);
    for (std::size_t i = 0; i < t; ++i) {
        std::size_t bi = pair_rep[i], nbi = v.neg_b(bi);
        if (i % 2 == 0) {
            // (a_1,b) - (a_1,-b) - (a_2,b) - ... - (a_r,b) - (a_r,-b)
            for (std::size_t j = 0; j < r; ++j) {
                b.append(v.pair(avec[j], bi));
                b.append(v.pair(avec[j], nbi));
            }
        } else {
            // (-a_r,b) - (-a_r,-b) - ... - (-a_1,b) - (-a_1,-b)
            for (std::size_t j = r; j-- > 0;) {
                std::size_t na = v.neg_a(avec[j]);
                b.append(v.pair(na, bi));
                b.append(v.pair(na, nbi));
            }
        }
    }
    // torsion tail: boustrophedon over columns c_1..c_w
    for (std::size_t i = 0; i < torsion.size(); ++i) {
        if ((t + i) % 2 == 0) {
            for (std::size_t j = 0; j < r; ++j) b.append(v.pair(avec[j], torsion[i]));
        } else {
            for (std::size_t j = r; j-- > 0;) b.append(v.pair(v.neg_a(avec[j]), torsion[i]));
        }
    }
    b.check_wrap();
    return HamCycle{std::move(b.seq)};
}

} // namespace detail

// Hamiltonian cycle on a product ring (stitching over the
// split last factor vs the rest; only element orderings are needed, so
// any number of factors folds into one two-sided application).
inline HamCycle ham_product(const Ring& prod_ring, ConstructionLog* log = nullptr) {
    if (prod_ring.spec.kind != RingSpec::Kind::Prod || prod_ring.spec.sub.size() < 2)
        throw invalid_input_error("ham_product needs a product of at least two rings");
    const std::size_t size_b = prod_ring.children.back()->order;
    const std::size_t size_a = prod_ring.order / size_b;
    detail::PairView v{prod_ring, size_a, size_b};

    HamCycle cycle;
    if (v.char_b() == 2) {
        cycle = detail::product_char2_case(v, false);
        if (log) log->note("product case: char(S) = 2 boustrophedon");
    } else if (v.char_a() == 2) {
        cycle = detail::product_char2_case(v, true);
        if (log) log->note("product case: char(R) = 2, roles swapped");
    } else {
        cycle = detail::product_odd_case(v);
        if (log) log->note("product case: odd/odd pair stitching");
    }
    auto ver = verify_cycle(prod_ring, cycle.seq);
    if (!ver.ok) throw internal_error("ham_product produced an invalid cycle: " + ver.violation);
    return cycle;
}

// Lift a quotient Hamiltonian cycle along R -> R/J: walk the cycle once
// per radical element, x_1+j, ..., x_m+j, stepping j after each sweep.
// Relies on radical absorption (x in Z, j in J => x+j in Z); every edge
// is still checked as it is laid down.
inline HamCycle lift_mod_radical(const Ring& r, const QuotientRing& q,
                                 const std::vector<elem>& qreps) {
    if (qreps.size() != q.coset_count())
        throw invalid_input_error("quotient cycle has wrong length");
    std::vector<elem> projected;
    projected.reserve(qreps.size());
    for (elem x : qreps) {
        if (x >= r.order) throw invalid_input_error("representative out of range");
        projected.push_back(q.project[x]);
    }
    auto ver = verify_cycle(q.quotient, projected);
    if (!ver.ok)
        throw invalid_input_error("quotient cycle fails verification: " + ver.violation);

    detail::PathBuilder b(r);
    for (elem j : r.radical())
        for (elem x : qreps) b.append(r.add(x, j));
    b.check_wrap();
    HamCycle out{std::move(b.seq)};
    auto ver2 = verify_cycle(r, out.seq);
    if (!ver2.ok) throw internal_error("lifted cycle invalid: " + ver2.violation);
    return out;
}

inline HamCycle lift_mod_radical(const Ring& r, const std::vector<elem>& qreps,
                                 const MakeOptions& opt = {}) {
    return lift_mod_radical(r, quotient_mod_radical(r, opt), qreps);
}

// Backtracking Hamiltonian cycle search; fallback for table-realized
// quotients. Deterministic: start at vertex 0, candidates tried in
// canonical id order. Degree-guided orderings trap the walk on total
// graphs of odd products (all the low-degree zero-divisors get consumed
// first and the unit block is left stranded), while id order tracks the
// coset structure; measured on tau(F_3 x F_3 x F_5), id order closes in
// 54 nodes where degree-first exceeds 10^8. Branches are pruned when
// some unvisited vertex runs out of unvisited neighbours or the
// unvisited region disconnects.
inline HamCycle search_ham(const TotalGraph& g, std::uint64_t node_budget = 50000000) {
    if (!is_connected(g)) throw search_exhausted_error("SearchExhausted: graph is disconnected");
    const std::size_t n = g.n;
    if (n < 3) throw search_exhausted_error("SearchExhausted: no cycle on fewer than 3 vertices");

    std::vector<std::vector<std::uint32_t>> nbrs(n);
    for (std::size_t v = 0; v < n; ++v)
        for (std::size_t u = 0; u < n; ++u)
            if (g.adjacent(v, u)) nbrs[v].push_back(static_cast<std::uint32_t>(u));

    std::vector<elem> path{0};
    std::vector<char> used(n, 0);
    std::vector<std::uint32_t> remaining(n); // unvisited neighbours per vertex
    for (std::size_t v = 0; v < n; ++v) remaining[v] = static_cast<std::uint32_t>(g.degree[v]);
    BitVec unvisited(n);
    unvisited.set_all();
    unvisited.reset(0);
    used[0] = 1;
    for (std::uint32_t u : nbrs[0]) --remaining[u];
    std::uint64_t nodes = 0;

    // the future path must walk every unvisited vertex starting next to
    // the current endpoint, so the unvisited region has to be reachable
    // from the endpoint through unvisited vertices alone
    auto region_connected = [&](std::size_t endpoint) {
        std::size_t left = unvisited.count();
        if (left == 0) return true;
        BitVec frontier(n), seen(n);
        frontier.or_with(g.adj.row(endpoint));
        frontier.and_with(unvisited.data());
        seen = frontier;
        std::size_t covered = seen.count();
        while (frontier.any() && covered < left) {
            BitVec next(n);
            frontier.for_each_set([&](std::size_t v) { next.or_with(g.adj.row(v)); });
            next.and_with(unvisited.data());
            next.andnot_with(seen.data());
            if (!next.any()) break;
            covered += next.count();
            seen.or_with(next.data());
            frontier = next;
        }
        return covered == left;
    };

    auto dfs = [&](auto&& self, std::size_t v) -> bool {
        if (++nodes > node_budget)
            throw search_exhausted_error("SearchExhausted: node budget exceeded");
        if (path.size() == n) return g.adjacent(v, 0);
        for (std::uint32_t u : nbrs[v]) {
            if (used[u]) continue;
            used[u] = 1;
            unvisited.reset(u);
            for (std::uint32_t w : nbrs[u]) --remaining[w];
            const std::size_t left = n - path.size() - 1;
            bool dead = false;
            if (left > 1) {
                // a vertex with no unvisited neighbours left can only be
                // the final one
                for (std::uint32_t w : nbrs[u])
                    if (!used[w] && remaining[w] == 0) { dead = true; break; }
            }
            path.push_back(static_cast<elem>(u));
            if (!dead && region_connected(u) && self(self, u)) return true;
            path.pop_back();
            for (std::uint32_t w : nbrs[u]) ++remaining[w];
            unvisited.set(u);
            used[u] = 0;
        }
        return false;
    };
    if (!dfs(dfs, 0)) throw search_exhausted_error("SearchExhausted: no Hamiltonian cycle found");
    return HamCycle{std::move(path)};
}

struct HamReport {
    HamCycle cycle;
    std::string method;
    std::vector<std::string> notes;
};

// Dispatcher. Products stitch directly (the construction needs nothing
// from the radical); matrix rings over fields snake when the radical is
// zero; other zero-radical rings are searched; everything else gets a
// searched cycle on the table-realized quotient lifted along the
// radical. The result always re-verifies.
inline HamReport ham_cycle(const Ring& r, const MakeOptions& opt = {}) {
    if (is_local(r))
        throw local_ring_error("LocalRing: tau(R) is disconnected for " + print_spec(r.spec));

    ConstructionLog log;
    HamReport rep;
    const auto& s = r.spec;

    if (s.kind == RingSpec::Kind::Prod && s.sub.size() >= 2) {
        rep.cycle = ham_product(r, &log);
        rep.method = "product-stitch";
    } else if (r.radical().size() == 1) {
        if (s.kind == RingSpec::Kind::Mat && s.n >= 2 && detail::spec_is_field(s.sub[0])) {
            rep.cycle = ham_matrix(r, &log);
            rep.method = "matrix-snake";
        } else {
            TotalGraph g = build_total_graph(r);
            rep.cycle = search_ham(g);
            rep.method = "search";
        }
    } else {
        QuotientRing q = quotient_mod_radical(r, opt);
        TotalGraph gq = build_total_graph(q.quotient);
        HamCycle qc = search_ham(gq);
        std::vector<elem> qreps;
        qreps.reserve(qc.seq.size());
        for (elem coset : qc.seq) qreps.push_back(q.section[coset]);
        rep.cycle = lift_mod_radical(r, q, qreps);
        rep.method = "quotient-search+lift";
    }

    rep.notes = std::move(log.notes);
    auto ver = verify_cycle(r, rep.cycle.seq);
    if (!ver.ok) throw internal_error("dispatcher cycle invalid: " + ver.violation);
    return rep;
}

} // namespace totring
