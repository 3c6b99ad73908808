#pragma once

#include <bit>
#include <cstdint>
#include <cstddef>
#include <vector>

namespace totring {

// Fixed-width bit matrix: n rows of n bits, each row an array of 64-bit
// words. Row-level OR/AND/popcount are the workhorses of the graph
// kernels and of the domination solver.
class BitRows {
public:
    using word = std::uint64_t;

    BitRows() = default;
    BitRows(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), words_per_row_((cols + 63) / 64),
          data_(rows * words_per_row_, 0) {}

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    std::size_t words_per_row() const { return words_per_row_; }

    void set(std::size_t r, std::size_t c) {
        data_[r * words_per_row_ + c / 64] |= word(1) << (c % 64);
    }
    bool test(std::size_t r, std::size_t c) const {
        return (data_[r * words_per_row_ + c / 64] >> (c % 64)) & 1;
    }

    const word* row(std::size_t r) const { return data_.data() + r * words_per_row_; }
    word* row(std::size_t r) { return data_.data() + r * words_per_row_; }

    std::size_t row_popcount(std::size_t r) const {
        std::size_t total = 0;
        const word* w = row(r);
        for (std::size_t i = 0; i < words_per_row_; ++i) total += std::popcount(w[i]);
        return total;
    }

private:
    std::size_t rows_ = 0, cols_ = 0, words_per_row_ = 0;
    std::vector<word> data_;
};

// A single dynamic bit vector with the same word layout.
class BitVec {
public:
    using word = std::uint64_t;

    BitVec() = default;
    explicit BitVec(std::size_t n) : n_(n), w_((n + 63) / 64, 0) {}

    std::size_t size() const { return n_; }
    std::size_t words() const { return w_.size(); }
    const word* data() const { return w_.data(); }
    word* data() { return w_.data(); }

    void set(std::size_t i) { w_[i / 64] |= word(1) << (i % 64); }
    void reset(std::size_t i) { w_[i / 64] &= ~(word(1) << (i % 64)); }
    bool test(std::size_t i) const { return (w_[i / 64] >> (i % 64)) & 1; }

    void clear() { for (auto& x : w_) x = 0; }

    void set_all() {
        for (auto& x : w_) x = ~word(0);
        trim();
    }

    std::size_t count() const {
        std::size_t total = 0;
        for (word x : w_) total += std::popcount(x);
        return total;
    }

    bool any() const {
        for (word x : w_) if (x) return true;
        return false;
    }

    void or_with(const word* other) {
        for (std::size_t i = 0; i < w_.size(); ++i) w_[i] |= other[i];
    }
    void and_with(const word* other) {
        for (std::size_t i = 0; i < w_.size(); ++i) w_[i] &= other[i];
    }
    void andnot_with(const word* other) {
        for (std::size_t i = 0; i < w_.size(); ++i) w_[i] &= ~other[i];
    }

    // this \subseteq other
    bool subset_of(const word* other) const {
        for (std::size_t i = 0; i < w_.size(); ++i)
            if (w_[i] & ~other[i]) return false;
        return true;
    }

    std::size_t count_and(const word* other) const {
        std::size_t total = 0;
        for (std::size_t i = 0; i < w_.size(); ++i)
            total += std::popcount(w_[i] & other[i]);
        return total;
    }

    // Index of the lowest set bit, or size() if none.
    std::size_t first_set() const {
        for (std::size_t i = 0; i < w_.size(); ++i)
            if (w_[i]) return i * 64 + std::countr_zero(w_[i]);
        return n_;
    }

    template <typename F>
    void for_each_set(F&& f) const {
        for (std::size_t i = 0; i < w_.size(); ++i) {
            word x = w_[i];
            while (x) {
                f(i * 64 + std::countr_zero(x));
                x &= x - 1;
            }
        }
    }

private:
    void trim() {
        if (n_ % 64 && !w_.empty())
            w_.back() &= (word(1) << (n_ % 64)) - 1;
    }

    std::size_t n_ = 0;
    std::vector<word> w_;
};

} // namespace totring
