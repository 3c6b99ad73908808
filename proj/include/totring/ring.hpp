#pragma once

#include <algorithm>
#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include <totring/errors.hpp>
#include <totring/numth.hpp>
#include <totring/ring_spec.hpp>

namespace totring {

// Element id inside one ring: 0 .. order-1. The structural encoding is
// mixed-radix positional (see Ring::digits), so id 0 is always the zero
// element for compositionally specified rings.
using elem = std::uint16_t;

inline constexpr std::uint64_t kElemLimit = 65535;

struct MakeOptions {
    std::uint64_t max_order = 4096;
    bool validate_table = true; // internal quotient tables skip re-validation
};

enum class ElementClass { Unit, ZeroDivisor };

namespace detail {

// --- polynomial helpers over Z_p (little-endian coefficient vectors) ---

inline void poly_trim(std::vector<std::uint32_t>& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

inline std::vector<std::uint32_t> poly_mul(const std::vector<std::uint32_t>& a,
                                           const std::vector<std::uint32_t>& b,
                                           std::uint64_t p) {
    if (a.empty() || b.empty()) return {};
    std::vector<std::uint32_t> c(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j)
            c[i + j] = static_cast<std::uint32_t>((c[i + j] + std::uint64_t(a[i]) * b[j]) % p);
    poly_trim(c);
    return c;
}

// Remainder of a modulo monic m.
inline std::vector<std::uint32_t> poly_mod(std::vector<std::uint32_t> a,
                                           const std::vector<std::uint32_t>& m,
                                           std::uint64_t p) {
    poly_trim(a);
    const std::size_t dm = m.size() - 1;
    while (a.size() > dm) {
        std::uint64_t lead = a.back();
        std::size_t shift = a.size() - 1 - dm;
        for (std::size_t i = 0; i < m.size(); ++i) {
            std::uint64_t sub = (lead * m[i]) % p;
            a[shift + i] = static_cast<std::uint32_t>((a[shift + i] + p - sub) % p);
        }
        poly_trim(a);
        if (a.empty()) break;
    }
    return a;
}

inline bool poly_divides(const std::vector<std::uint32_t>& d,
                         const std::vector<std::uint32_t>& a, std::uint64_t p) {
    return poly_mod(a, d, p).empty();
}

// Monic polynomial of degree deg whose non-leading coefficients encode
// the integer `code` in radix p, least-significant coefficient first.
inline std::vector<std::uint32_t> poly_from_code(std::uint64_t code, std::size_t deg,
                                                 std::uint64_t p) {
    std::vector<std::uint32_t> f(deg + 1, 0);
    for (std::size_t i = 0; i < deg; ++i) {
        f[i] = static_cast<std::uint32_t>(code % p);
        code /= p;
    }
    f[deg] = 1;
    return f;
}

inline bool poly_irreducible(const std::vector<std::uint32_t>& f, std::uint64_t p) {
    const std::size_t deg = f.size() - 1;
    if (deg == 1) return true;
    for (std::size_t d = 1; 2 * d <= deg; ++d) {
        std::uint64_t count = 1;
        for (std::size_t i = 0; i < d; ++i) count *= p;
        for (std::uint64_t code = 0; code < count; ++code)
            if (poly_divides(poly_from_code(code, d, p), f, p)) return false;
    }
    return true;
}

// Smallest monic irreducible of degree k over Z_p, ordered by the
// radix-p encoding of the non-leading coefficients. Deterministic, so
// element encodings are reproducible across runs.
inline std::vector<std::uint32_t> smallest_irreducible(std::uint64_t p, std::uint64_t k) {
    std::uint64_t count = 1;
    for (std::uint64_t i = 0; i < k; ++i) count *= p;
    for (std::uint64_t code = 0; code < count; ++code) {
        auto f = poly_from_code(code, k, p);
        if (poly_irreducible(f, p)) return f;
    }
    throw internal_error("no irreducible polynomial found"); // unreachable
}

} // namespace detail

// A realized finite ring: dense add/mul tables plus the cached element
// classification (units, zero-divisors, Jacobson radical). Immutable
// after construction; all queries are safe for concurrent reads.
class Ring {
public:
    RingSpec spec;
    std::size_t order = 0;
    elem zero = 0, one = 0;
    std::uint64_t characteristic = 0;
    std::vector<std::shared_ptr<const Ring>> children; // Mat/Tri base, Prod factors

    elem add(elem a, elem b) const { return add_[std::size_t(a) * order + b]; }
    elem mul(elem a, elem b) const { return mul_[std::size_t(a) * order + b]; }
    elem neg(elem a) const { return neg_[a]; }
    elem sub(elem a, elem b) const { return add(a, neg(b)); }

    bool is_unit(elem x) const { return unit_mask_[x]; }
    bool is_zero_divisor(elem x) const { return zdiv_mask_[x]; }
    bool in_radical(elem x) const { return radical_mask_[x]; }

    const std::vector<elem>& units() const { return units_; }
    const std::vector<elem>& zero_divisors() const { return zero_divisors_; }
    const std::vector<elem>& radical() const { return radical_; }

    // Mixed-radix digit layout of the structural encoding:
    //   Zn     [n]                    residue
    //   GF     [p] * k                coefficients of 1, t, t^2, ...
    //   Mat    [|S|] * n^2            row-major entries
    //   Tri    [q] * n(n+1)/2         packed upper-triangular entries
    //   Prod   [|S_1|, ..., |S_k|]    factor components
    //   Table  [order]                raw index
    // Digit 0 is the least significant.
    const std::vector<std::uint32_t>& digit_radices() const { return radices_; }

    std::vector<std::uint32_t> digits(elem x) const {
        std::vector<std::uint32_t> d(radices_.size());
        std::uint64_t v = x;
        for (std::size_t i = 0; i < radices_.size(); ++i) {
            d[i] = static_cast<std::uint32_t>(v % radices_[i]);
            v /= radices_[i];
        }
        return d;
    }

    elem from_digits(const std::vector<std::uint32_t>& d) const {
        std::uint64_t v = 0, w = 1;
        for (std::size_t i = 0; i < radices_.size(); ++i) {
            v += d[i] * w;
            w *= radices_[i];
        }
        return static_cast<elem>(v);
    }

    std::string label(elem x) const;

    friend Ring make_ring(const RingSpec& spec, const MakeOptions& opt);

private:
    std::vector<elem> add_, mul_, neg_;
    std::vector<char> unit_mask_, zdiv_mask_, radical_mask_;
    std::vector<elem> units_, zero_divisors_, radical_;
    std::vector<std::uint32_t> radices_;
};

namespace detail {

inline std::string gf_label(const std::vector<std::uint32_t>& coeffs) {
    std::string out;
    for (std::size_t i = coeffs.size(); i-- > 0;) {
        if (coeffs[i] == 0) continue;
        if (!out.empty()) out += "+";
        if (i == 0 || coeffs[i] != 1) out += std::to_string(coeffs[i]);
        if (i == 1) out += "t";
        else if (i > 1) out += "t^" + std::to_string(i);
    }
    return out.empty() ? "0" : out;
}

} // namespace detail

inline std::string Ring::label(elem x) const {
    using K = RingSpec::Kind;
    switch (spec.kind) {
    case K::Zn: return std::to_string(x);
    case K::GF:
        if (spec.k == 1) return std::to_string(x);
        return detail::gf_label(digits(x));
    case K::Mat: {
        const auto d = digits(x);
        const auto& base = *children[0];
        const std::size_t n = spec.n;
        std::string out = "[";
        for (std::size_t i = 0; i < n; ++i) {
            out += i ? ",[" : "[";
            for (std::size_t j = 0; j < n; ++j) {
                if (j) out += ",";
                out += base.label(static_cast<elem>(d[i * n + j]));
            }
            out += "]";
        }
        return out + "]";
    }
    case K::Tri: {
        const auto d = digits(x);
        const auto& base = *children[0];
        const std::size_t n = spec.n;
        std::string out = "[";
        std::size_t pos = 0;
        std::vector<std::vector<std::uint32_t>> full(n, std::vector<std::uint32_t>(n, 0));
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i; j < n; ++j) full[i][j] = d[pos++];
        for (std::size_t i = 0; i < n; ++i) {
            out += i ? ",[" : "[";
            for (std::size_t j = 0; j < n; ++j) {
                if (j) out += ",";
                out += base.label(static_cast<elem>(full[i][j]));
            }
            out += "]";
        }
        return out + "]";
    }
    case K::Prod: {
        const auto d = digits(x);
        std::string out = "(";
        for (std::size_t i = 0; i < children.size(); ++i) {
            if (i) out += ",";
            out += children[i]->label(static_cast<elem>(d[i]));
        }
        return out + ")";
    }
    case K::Table: return "#" + std::to_string(x);
    }
    return "?";
}

inline ElementClass classify(const Ring& r, elem x) {
    return r.is_unit(x) ? ElementClass::Unit : ElementClass::ZeroDivisor;
}

inline const std::vector<elem>& jacobson(const Ring& r) { return r.radical(); }

namespace detail {

// Structural Jacobson radical for compositional specs; used to
// cross-check the brute-force quasi-regularity computation.
inline bool structural_radical_known(const RingSpec& s) {
    return s.kind != RingSpec::Kind::Table;
}

inline std::vector<char> structural_radical_mask(const Ring& r) {
    using K = RingSpec::Kind;
    const std::size_t n = r.order;
    std::vector<char> mask(n, 0);
    switch (r.spec.kind) {
    case K::Zn: {
        std::uint64_t sk = squarefree_kernel(r.spec.n);
        for (std::size_t x = 0; x < n; ++x) mask[x] = (x % sk == 0);
        break;
    }
    case K::GF:
        mask[0] = 1;
        break;
    case K::Mat: {
        const auto& base = *r.children[0];
        for (std::size_t x = 0; x < n; ++x) {
            bool all = true;
            for (auto d : r.digits(static_cast<elem>(x)))
                if (!base.in_radical(static_cast<elem>(d))) { all = false; break; }
            mask[x] = all;
        }
        break;
    }
    case K::Tri: {
        // strictly upper-triangular part: packed diagonal digits are zero
        const std::size_t dim = r.spec.n;
        std::vector<std::size_t> diag_pos;
        std::size_t pos = 0;
        for (std::size_t i = 0; i < dim; ++i)
            for (std::size_t j = i; j < dim; ++j) {
                if (i == j) diag_pos.push_back(pos);
                ++pos;
            }
        for (std::size_t x = 0; x < n; ++x) {
            auto d = r.digits(static_cast<elem>(x));
            bool all = true;
            for (auto dp : diag_pos)
                if (d[dp] != 0) { all = false; break; }
            mask[x] = all;
        }
        break;
    }
    case K::Prod: {
        for (std::size_t x = 0; x < n; ++x) {
            auto d = r.digits(static_cast<elem>(x));
            bool all = true;
            for (std::size_t i = 0; i < r.children.size(); ++i)
                if (!r.children[i]->in_radical(static_cast<elem>(d[i]))) { all = false; break; }
            mask[x] = all;
        }
        break;
    }
    case K::Table:
        break;
    }
    return mask;
}

inline void validate_table_axioms(const std::vector<std::uint32_t>& add,
                                  const std::vector<std::uint32_t>& mul,
                                  std::size_t n, std::uint32_t zero, std::uint32_t one) {
    auto A = [&](std::size_t a, std::size_t b) { return add[a * n + b]; };
    auto M = [&](std::size_t a, std::size_t b) { return mul[a * n + b]; };
    auto fail = [](const std::string& law, std::size_t a, std::size_t b, std::size_t c) {
        throw spec_error("table axioms violated: " + law + " fails at (" + std::to_string(a) +
                         "," + std::to_string(b) + "," + std::to_string(c) + ")");
    };
    for (std::size_t a = 0; a < n; ++a) {
        if (A(a, zero) != a) fail("additive identity", a, zero, 0);
        if (M(a, one) != a || M(one, a) != a) fail("multiplicative identity", a, one, 0);
        bool has_neg = false;
        for (std::size_t b = 0; b < n; ++b)
            if (A(a, b) == zero) { has_neg = true; break; }
        if (!has_neg) fail("additive inverse", a, 0, 0);
    }
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
            if (A(a, b) != A(b, a)) fail("additive commutativity", a, b, 0);
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
            for (std::size_t c = 0; c < n; ++c) {
                if (A(A(a, b), c) != A(a, A(b, c))) fail("additive associativity", a, b, c);
                if (M(M(a, b), c) != M(a, M(b, c))) fail("multiplicative associativity", a, b, c);
                if (M(a, A(b, c)) != A(M(a, b), M(a, c))) fail("left distributivity", a, b, c);
                if (M(A(a, b), c) != A(M(a, c), M(b, c))) fail("right distributivity", a, b, c);
            }
}

} // namespace detail

// Realizes a ring from its compositional description: builds the dense
// operation tables, classifies every element (unit /
// zero-divisor partition), computes the Jacobson radical by the finite
// quasi-regularity test and cross-checks it against the structural rule.
inline Ring make_ring(const RingSpec& spec, const MakeOptions& opt = {}) {
    using K = RingSpec::Kind;

    const std::uint64_t order64 = spec_order(spec);
    const std::uint64_t guard = std::min<std::uint64_t>(opt.max_order, kElemLimit);
    if (order64 < 2) throw spec_error("ring must have at least 2 elements");
    if (order64 > guard)
        throw order_guard_error("ring order " + std::to_string(order64) +
                                " exceeds order guard " + std::to_string(guard));

    Ring r;
    r.spec = spec;
    r.order = static_cast<std::size_t>(order64);
    const std::size_t n = r.order;

    // --- realize the arithmetic per variant ---
    switch (spec.kind) {
    case K::Zn: {
        if (spec.n < 2) throw spec_error("Z(n) requires n >= 2");
        r.radices_ = {static_cast<std::uint32_t>(spec.n)};
        r.add_.resize(n * n);
        r.mul_.resize(n * n);
        r.neg_.resize(n);
        for (std::size_t a = 0; a < n; ++a) {
            r.neg_[a] = static_cast<elem>((n - a) % n);
            for (std::size_t b = 0; b < n; ++b) {
                r.add_[a * n + b] = static_cast<elem>((a + b) % n);
                r.mul_[a * n + b] = static_cast<elem>((a * b) % n);
            }
        }
        r.zero = 0;
        r.one = 1;
        break;
    }
    case K::GF: {
        if (!is_prime(spec.p)) throw spec_error("GF(p,k): p = " + std::to_string(spec.p) + " is not prime");
        if (spec.k < 1) throw spec_error("GF(p,k): k must be >= 1");
        const std::uint64_t p = spec.p, k = spec.k;
        auto modulus = detail::smallest_irreducible(p, k);
        r.radices_.assign(k, static_cast<std::uint32_t>(p));
        // element id <-> little-endian coefficient vector
        auto coeffs_of = [&](std::size_t x) {
            std::vector<std::uint32_t> c(k);
            for (std::uint64_t i = 0; i < k; ++i) { c[i] = static_cast<std::uint32_t>(x % p); x /= p; }
            return c;
        };
        auto id_of = [&](const std::vector<std::uint32_t>& c) {
            std::uint64_t v = 0, w = 1;
            for (std::size_t i = 0; i < c.size() && i < k; ++i) { v += c[i] * w; w *= p; }
            return static_cast<elem>(v);
        };
        std::vector<std::vector<std::uint32_t>> all(n);
        for (std::size_t x = 0; x < n; ++x) all[x] = coeffs_of(x);
        r.add_.resize(n * n);
        r.mul_.resize(n * n);
        r.neg_.resize(n);
        for (std::size_t a = 0; a < n; ++a) {
            std::vector<std::uint32_t> na(k);
            for (std::uint64_t i = 0; i < k; ++i)
                na[i] = static_cast<std::uint32_t>((p - all[a][i]) % p);
            r.neg_[a] = id_of(na);
            for (std::size_t b = 0; b < n; ++b) {
                std::vector<std::uint32_t> s(k);
                for (std::uint64_t i = 0; i < k; ++i)
                    s[i] = static_cast<std::uint32_t>((all[a][i] + all[b][i]) % p);
                r.add_[a * n + b] = id_of(s);
                auto prod = detail::poly_mod(detail::poly_mul(all[a], all[b], p), modulus, p);
                prod.resize(k, 0);
                r.mul_[a * n + b] = id_of(prod);
            }
        }
        r.zero = 0;
        r.one = 1;
        break;
    }
    case K::Mat: {
        if (spec.n < 1) throw spec_error("M(n,...): n must be >= 1");
        auto base = std::make_shared<const Ring>(make_ring(spec.sub[0], opt));
        const std::size_t dim = spec.n, nd = dim * dim, B = base->order;
        r.children.push_back(base);
        r.radices_.assign(nd, static_cast<std::uint32_t>(B));
        std::vector<std::vector<elem>> ent(n, std::vector<elem>(nd));
        for (std::size_t x = 0; x < n; ++x) {
            std::uint64_t v = x;
            for (std::size_t i = 0; i < nd; ++i) { ent[x][i] = static_cast<elem>(v % B); v /= B; }
        }
        auto id_of = [&](const std::vector<elem>& e) {
            std::uint64_t v = 0, w = 1;
            for (std::size_t i = 0; i < nd; ++i) { v += std::uint64_t(e[i]) * w; w *= B; }
            return static_cast<elem>(v);
        };
        r.add_.resize(n * n);
        r.mul_.resize(n * n);
        r.neg_.resize(n);
        std::vector<elem> tmp(nd);
        for (std::size_t a = 0; a < n; ++a) {
            for (std::size_t i = 0; i < nd; ++i) tmp[i] = base->neg(ent[a][i]);
            r.neg_[a] = id_of(tmp);
            for (std::size_t b = 0; b < n; ++b) {
                for (std::size_t i = 0; i < nd; ++i) tmp[i] = base->add(ent[a][i], ent[b][i]);
                r.add_[a * n + b] = id_of(tmp);
                for (std::size_t i = 0; i < dim; ++i)
                    for (std::size_t j = 0; j < dim; ++j) {
                        elem acc = base->zero;
                        for (std::size_t l = 0; l < dim; ++l)
                            acc = base->add(acc, base->mul(ent[a][i * dim + l], ent[b][l * dim + j]));
                        tmp[i * dim + j] = acc;
                    }
                r.mul_[a * n + b] = id_of(tmp);
            }
        }
        std::vector<elem> ident(nd, base->zero);
        for (std::size_t i = 0; i < dim; ++i) ident[i * dim + i] = base->one;
        r.zero = 0;
        r.one = id_of(ident);
        break;
    }
    case K::Tri: {
        if (spec.n < 2) throw spec_error("T(n,...): n must be >= 2");
        if (spec.sub[0].kind != K::GF && !(spec.sub[0].kind == K::Zn && is_prime(spec.sub[0].n)))
            throw spec_error("T(n,F): base must be a finite field");
        auto base = std::make_shared<const Ring>(make_ring(spec.sub[0], opt));
        const std::size_t dim = spec.n, nd = dim * (dim + 1) / 2, B = base->order;
        r.children.push_back(base);
        r.radices_.assign(nd, static_cast<std::uint32_t>(B));
        // packed position of entry (i,j), i <= j, row-major
        std::vector<std::vector<int>> ppos(dim, std::vector<int>(dim, -1));
        {
            std::size_t pos = 0;
            for (std::size_t i = 0; i < dim; ++i)
                for (std::size_t j = i; j < dim; ++j) ppos[i][j] = static_cast<int>(pos++);
        }
        std::vector<std::vector<elem>> ent(n, std::vector<elem>(nd));
        for (std::size_t x = 0; x < n; ++x) {
            std::uint64_t v = x;
            for (std::size_t i = 0; i < nd; ++i) { ent[x][i] = static_cast<elem>(v % B); v /= B; }
        }
        auto id_of = [&](const std::vector<elem>& e) {
            std::uint64_t v = 0, w = 1;
            for (std::size_t i = 0; i < nd; ++i) { v += std::uint64_t(e[i]) * w; w *= B; }
            return static_cast<elem>(v);
        };
        r.add_.resize(n * n);
        r.mul_.resize(n * n);
        r.neg_.resize(n);
        std::vector<elem> tmp(nd);
        for (std::size_t a = 0; a < n; ++a) {
            for (std::size_t i = 0; i < nd; ++i) tmp[i] = base->neg(ent[a][i]);
            r.neg_[a] = id_of(tmp);
            for (std::size_t b = 0; b < n; ++b) {
                for (std::size_t i = 0; i < nd; ++i) tmp[i] = base->add(ent[a][i], ent[b][i]);
                r.add_[a * n + b] = id_of(tmp);
                for (std::size_t i = 0; i < dim; ++i)
                    for (std::size_t j = i; j < dim; ++j) {
                        elem acc = base->zero;
                        for (std::size_t l = i; l <= j; ++l)
                            acc = base->add(acc, base->mul(ent[a][ppos[i][l]], ent[b][ppos[l][j]]));
                        tmp[ppos[i][j]] = acc;
                    }
                r.mul_[a * n + b] = id_of(tmp);
            }
        }
        std::vector<elem> ident(nd, base->zero);
        for (std::size_t i = 0; i < dim; ++i) ident[ppos[i][i]] = base->one;
        r.zero = 0;
        r.one = id_of(ident);
        break;
    }
    case K::Prod: {
        if (spec.sub.empty()) throw spec_error("product needs at least one factor");
        std::vector<std::shared_ptr<const Ring>> factors;
        for (const auto& f : spec.sub)
            factors.push_back(std::make_shared<const Ring>(make_ring(f, opt)));
        const std::size_t nf = factors.size();
        for (const auto& f : factors)
            r.radices_.push_back(static_cast<std::uint32_t>(f->order));
        r.children = factors;
        std::vector<std::vector<elem>> ent(n, std::vector<elem>(nf));
        for (std::size_t x = 0; x < n; ++x) {
            std::uint64_t v = x;
            for (std::size_t i = 0; i < nf; ++i) { ent[x][i] = static_cast<elem>(v % factors[i]->order); v /= factors[i]->order; }
        }
        auto id_of = [&](const std::vector<elem>& e) {
            std::uint64_t v = 0, w = 1;
            for (std::size_t i = 0; i < nf; ++i) { v += std::uint64_t(e[i]) * w; w *= factors[i]->order; }
            return static_cast<elem>(v);
        };
        r.add_.resize(n * n);
        r.mul_.resize(n * n);
        r.neg_.resize(n);
        std::vector<elem> tmp(nf);
        for (std::size_t a = 0; a < n; ++a) {
            for (std::size_t i = 0; i < nf; ++i) tmp[i] = factors[i]->neg(ent[a][i]);
            r.neg_[a] = id_of(tmp);
            for (std::size_t b = 0; b < n; ++b) {
                for (std::size_t i = 0; i < nf; ++i) tmp[i] = factors[i]->add(ent[a][i], ent[b][i]);
                r.add_[a * n + b] = id_of(tmp);
                for (std::size_t i = 0; i < nf; ++i) tmp[i] = factors[i]->mul(ent[a][i], ent[b][i]);
                r.mul_[a * n + b] = id_of(tmp);
            }
        }
        std::vector<elem> ones(nf);
        for (std::size_t i = 0; i < nf; ++i) ones[i] = factors[i]->one;
        r.zero = 0;
        r.one = id_of(ones);
        break;
    }
    case K::Table: {
        r.radices_ = {static_cast<std::uint32_t>(n)};
        if (spec.table_add.size() != n * n || spec.table_mul.size() != n * n)
            throw spec_error("table spec: wrong table dimensions");
        if (opt.validate_table)
            detail::validate_table_axioms(spec.table_add, spec.table_mul, n,
                                          spec.table_zero, spec.table_one);
        r.add_.assign(spec.table_add.begin(), spec.table_add.end());
        r.mul_.assign(spec.table_mul.begin(), spec.table_mul.end());
        r.zero = static_cast<elem>(spec.table_zero);
        r.one = static_cast<elem>(spec.table_one);
        r.neg_.resize(n);
        for (std::size_t a = 0; a < n; ++a)
            for (std::size_t b = 0; b < n; ++b)
                if (r.add_[a * n + b] == r.zero) { r.neg_[a] = static_cast<elem>(b); break; }
        break;
    }
    }

    // --- characteristic: additive order of 1 ---
    {
        elem x = r.one;
        std::uint64_t c = 1;
        while (x != r.zero) { x = r.add(x, r.one); ++c; }
        r.characteristic = c;
    }

    // --- classify every element (invertible xor zero-divisor) ---
    r.unit_mask_.assign(n, 0);
    r.zdiv_mask_.assign(n, 0);
    for (std::size_t x = 0; x < n; ++x) {
        for (std::size_t y = 0; y < n; ++y)
            if (r.mul_[x * n + y] == r.one && r.mul_[y * n + x] == r.one) {
                r.unit_mask_[x] = 1;
                break;
            }
        for (std::size_t y = 0; y < n; ++y) {
            if (y == r.zero) continue;
            if (r.mul_[x * n + y] == r.zero || r.mul_[y * n + x] == r.zero) {
                r.zdiv_mask_[x] = 1;
                break;
            }
        }
        if (r.unit_mask_[x] == r.zdiv_mask_[x])
            throw internal_error("element " + std::to_string(x) +
                                 " is not exactly one of unit / zero-divisor");
    }
    for (std::size_t x = 0; x < n; ++x) {
        if (r.unit_mask_[x]) r.units_.push_back(static_cast<elem>(x));
        else r.zero_divisors_.push_back(static_cast<elem>(x));
    }

    // |Z(R)| >= 2 implies |R| <= |Z(R)|^2
    if (r.zero_divisors_.size() >= 2 &&
        n > r.zero_divisors_.size() * r.zero_divisors_.size())
        throw internal_error("|R| <= |Z(R)|^2 violated");

    // --- Jacobson radical: x in J iff 1 - r*x is a unit for all r ---
    r.radical_mask_.assign(n, 0);
    for (std::size_t x = 0; x < n; ++x) {
        bool in = true;
        for (std::size_t s = 0; s < n; ++s) {
            elem t = r.sub(r.one, r.mul_[s * n + x]);
            if (!r.unit_mask_[t]) { in = false; break; }
        }
        if (in) {
            r.radical_mask_[x] = 1;
            r.radical_.push_back(static_cast<elem>(x));
        }
    }

    // two-sided ideal + 1+J subset of units
    for (elem j1 : r.radical_) {
        if (!r.unit_mask_[r.add(r.one, j1)])
            throw internal_error("1 + radical element is not a unit");
        for (elem j2 : r.radical_)
            if (!r.radical_mask_[r.add(j1, j2)])
                throw internal_error("radical not closed under addition");
        for (std::size_t s = 0; s < n; ++s) {
            if (!r.radical_mask_[r.mul_[s * n + j1]] || !r.radical_mask_[r.mul_[j1 * n + s]])
                throw internal_error("radical is not a two-sided ideal");
        }
    }

    // structural cross-check for compositional specs
    if (detail::structural_radical_known(spec)) {
        auto expect = detail::structural_radical_mask(r);
        for (std::size_t x = 0; x < n; ++x)
            if (expect[x] != r.radical_mask_[x])
                throw internal_error("structural vs brute-force radical mismatch at element " +
                                     std::to_string(x) + " of " + print_spec(spec));
    }

    return r;
}

} // namespace totring
