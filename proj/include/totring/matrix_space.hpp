#pragma once

#include <cstdint>
#include <vector>

#include <totring/ring.hpp>

namespace totring {

// On-the-fly view of M_n(F) for a small field ring F. No operation
// tables: ids are 64-bit, entries are extracted digit-wise, and
// singularity is decided by a determinant evaluation. This is what lets
// the explicit dominating set be checked on carriers far beyond the
// realized-ring order guard (e.g. M_3(F_4) with 262144 matrices).
class MatrixSpace {
public:
    MatrixSpace(std::size_t n, const Ring& field) : n_(n), f_(field) {
        if (field.units().size() + 1 != field.order)
            throw invalid_input_error("MatrixSpace requires a field");
        pow_.resize(n * n + 1, 1);
        for (std::size_t i = 0; i < n * n; ++i) pow_[i + 1] = pow_[i] * field.order;
    }

    std::size_t dim() const { return n_; }
    const Ring& field() const { return f_; }
    std::uint64_t size() const { return pow_[n_ * n_]; }

    // entry at row i, column j (1-based)
    elem entry(std::uint64_t id, std::size_t i, std::size_t j) const {
        return static_cast<elem>((id / pow_[(i - 1) * n_ + (j - 1)]) % f_.order);
    }

    std::uint64_t add(std::uint64_t a, std::uint64_t b) const {
        std::uint64_t out = 0;
        for (std::size_t p = 0; p < n_ * n_; ++p) {
            elem s = f_.add(static_cast<elem>((a / pow_[p]) % f_.order),
                            static_cast<elem>((b / pow_[p]) % f_.order));
            out += std::uint64_t(s) * pow_[p];
        }
        return out;
    }

    // x * E_{k,l}
    std::uint64_t unit_scalar(elem x, std::size_t k, std::size_t l) const {
        return std::uint64_t(x) * pow_[(k - 1) * n_ + (l - 1)];
    }

    // Laplace expansion along the first row; exact over the field.
    elem det(std::uint64_t id) const {
        std::vector<elem> m(n_ * n_);
        for (std::size_t p = 0; p < n_ * n_; ++p)
            m[p] = static_cast<elem>((id / pow_[p]) % f_.order);
        return det_rec(m, n_);
    }

    bool is_singular(std::uint64_t id) const { return det(id) == f_.zero; }

    // det of the minor with row 1 and column j removed (1-based j)
    elem first_row_minor_det(std::uint64_t id, std::size_t j) const {
        std::vector<elem> m((n_ - 1) * (n_ - 1));
        std::size_t out = 0;
        for (std::size_t r = 2; r <= n_; ++r)
            for (std::size_t c = 1; c <= n_; ++c)
                if (c != j) m[out++] = entry(id, r, c);
        return det_rec(m, n_ - 1);
    }

private:
    elem det_rec(const std::vector<elem>& m, std::size_t d) const {
        if (d == 1) return m[0];
        elem acc = f_.zero;
        std::vector<elem> minor((d - 1) * (d - 1));
        for (std::size_t c = 0; c < d; ++c) {
            if (m[c] == f_.zero) continue;
            std::size_t out = 0;
            for (std::size_t r = 1; r < d; ++r)
                for (std::size_t cc = 0; cc < d; ++cc)
                    if (cc != c) minor[out++] = m[r * d + cc];
            elem term = f_.mul(m[c], det_rec(minor, d - 1));
            acc = (c % 2 == 0) ? f_.add(acc, term) : f_.sub(acc, term);
        }
        return acc;
    }

    std::size_t n_;
    const Ring& f_;
    std::vector<std::uint64_t> pow_;
};

// Confirms det(A + x*E_{1j}) = det(A) + x*(-1)^{1+j}*det(A(1,j)) for one
// triple by independent determinant evaluation of both sides. The minor
// determinant enters through the cofactor, so the sign flips for even j.
inline bool det_expansion_check(const MatrixSpace& ms, std::uint64_t a, std::size_t j, elem x) {
    const Ring& f = ms.field();
    elem lhs = ms.det(ms.add(a, ms.unit_scalar(x, 1, j)));
    elem cof = ms.first_row_minor_det(a, j);
    if (j % 2 == 0) cof = f.neg(cof);
    elem rhs = f.add(ms.det(a), f.mul(x, cof));
    return lhs == rhs;
}

} // namespace totring
