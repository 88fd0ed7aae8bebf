#ifndef FIBERCX_GF2_HPP
#define FIBERCX_GF2_HPP

// Dense bit-packed linear algebra over GF(2). All operations are pure and
// deterministic: elimination always picks the first nonzero entry in
// row-major order, so results are identical across platforms.

#include <cstdint>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <vector>

namespace fibercx {

class BitVector {
public:
    BitVector() = default;
    explicit BitVector(std::size_t length)
        : length_(length), blocks_((length + 63) / 64, 0) {}

    std::size_t size() const { return length_; }

    bool get(std::size_t i) const {
        return (blocks_[i >> 6] >> (i & 63)) & 1u;
    }
    void set(std::size_t i, bool v) {
        if (v)
            blocks_[i >> 6] |= std::uint64_t(1) << (i & 63);
        else
            blocks_[i >> 6] &= ~(std::uint64_t(1) << (i & 63));
    }
    void flip(std::size_t i) { blocks_[i >> 6] ^= std::uint64_t(1) << (i & 63); }

    BitVector& operator^=(const BitVector& other) {
        if (other.length_ != length_)
            throw std::invalid_argument("BitVector xor: length mismatch");
        for (std::size_t b = 0; b < blocks_.size(); ++b)
            blocks_[b] ^= other.blocks_[b];
        return *this;
    }
    friend BitVector operator^(BitVector a, const BitVector& b) {
        a ^= b;
        return a;
    }

    bool is_zero() const {
        for (auto b : blocks_)
            if (b) return false;
        return true;
    }

    // Index of the first set bit, or npos.
    static constexpr std::size_t npos = static_cast<std::size_t>(-1);
    std::size_t first_set() const {
        for (std::size_t b = 0; b < blocks_.size(); ++b)
            if (blocks_[b])
                return (b << 6) + static_cast<std::size_t>(__builtin_ctzll(blocks_[b]));
        return npos;
    }

    std::size_t popcount() const {
        std::size_t n = 0;
        for (auto b : blocks_) n += static_cast<std::size_t>(__builtin_popcountll(b));
        return n;
    }

    friend bool operator==(const BitVector& a, const BitVector& b) {
        return a.length_ == b.length_ && a.blocks_ == b.blocks_;
    }

private:
    std::size_t length_ = 0;
    std::vector<std::uint64_t> blocks_;
};

class BitMatrix {
public:
    BitMatrix() = default;
    BitMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), data_(rows, BitVector(cols)) {}

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    bool get(std::size_t r, std::size_t c) const { return data_[r].get(c); }
    void set(std::size_t r, std::size_t c, bool v) { data_[r].set(c, v); }

    const BitVector& row(std::size_t r) const { return data_[r]; }
    BitVector& row(std::size_t r) { return data_[r]; }

    // y = M x
    BitVector apply(const BitVector& x) const {
        if (x.size() != cols_)
            throw std::invalid_argument("BitMatrix::apply: dimension mismatch");
        BitVector y(rows_);
        for (std::size_t r = 0; r < rows_; ++r) {
            std::size_t dot = 0;
            for (std::size_t c = 0; c < cols_; ++c)
                dot += (data_[r].get(c) && x.get(c)) ? 1 : 0;
            y.set(r, dot & 1);
        }
        return y;
    }

    BitMatrix transposed() const {
        BitMatrix t(cols_, rows_);
        for (std::size_t r = 0; r < rows_; ++r)
            for (std::size_t c = 0; c < cols_; ++c)
                if (get(r, c)) t.set(c, r, true);
        return t;
    }

    friend bool operator==(const BitMatrix& a, const BitMatrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<BitVector> data_;
};

// Reduced row echelon form together with the pivot column of each
// nonzero row. Pivots are strictly increasing.
struct Rref {
    BitMatrix mat;
    std::vector<std::size_t> pivots;  // pivot column per echelon row
};

inline Rref rref(const BitMatrix& m) {
    Rref out{m, {}};
    std::size_t r = 0;
    for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
        std::size_t pivot = BitVector::npos;
        for (std::size_t i = r; i < m.rows(); ++i) {
            if (out.mat.get(i, c)) { pivot = i; break; }
        }
        if (pivot == BitVector::npos) continue;
        std::swap(out.mat.row(r), out.mat.row(pivot));
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i != r && out.mat.get(i, c)) out.mat.row(i) ^= out.mat.row(r);
        }
        out.pivots.push_back(c);
        ++r;
    }
    return out;
}

inline std::size_t rank(const BitMatrix& m) { return rref(m).pivots.size(); }

// Basis of {v : Mv = 0}; size is cols - rank(M). Canonical: one vector per
// free column in column order, with the free coordinate set.
inline std::vector<BitVector> kernel_basis(const BitMatrix& m) {
    Rref e = rref(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto p : e.pivots) is_pivot[p] = true;

    std::vector<BitVector> basis;
    for (std::size_t c = 0; c < m.cols(); ++c) {
        if (is_pivot[c]) continue;
        BitVector v(m.cols());
        v.set(c, true);
        for (std::size_t r = 0; r < e.pivots.size(); ++r)
            if (e.mat.get(r, c)) v.set(e.pivots[r], true);
        basis.push_back(std::move(v));
    }
    return basis;
}

// Basis of the column space: the first columns, in order, that increase
// the rank. Size is rank(M).
inline std::vector<BitVector> image_basis(const BitMatrix& m) {
    // Select the earliest columns that increase the rank.
    std::vector<BitVector> basis;
    std::vector<BitVector> chosen;
    std::size_t cur_rank = 0;
    for (std::size_t c = 0; c < m.cols(); ++c) {
        BitVector col(m.rows());
        for (std::size_t r = 0; r < m.rows(); ++r)
            if (m.get(r, c)) col.set(r, true);
        chosen.push_back(col);
        BitMatrix trial(chosen.size(), m.rows());
        for (std::size_t i = 0; i < chosen.size(); ++i) trial.row(i) = chosen[i];
        std::size_t rk = rank(trial);
        if (rk > cur_rank) {
            cur_rank = rk;
            basis.push_back(col);
        } else {
            chosen.pop_back();
        }
    }
    return basis;
}

// Solve Mx = b. Empty optional means no solution exists.
inline std::optional<BitVector> solve(const BitMatrix& m, const BitVector& b) {
    if (b.size() != m.rows())
        throw std::invalid_argument("solve: right-hand side length mismatch");
    // Eliminate on the augmented matrix [M | b].
    BitMatrix aug(m.rows(), m.cols() + 1);
    for (std::size_t r = 0; r < m.rows(); ++r) {
        for (std::size_t c = 0; c < m.cols(); ++c)
            if (m.get(r, c)) aug.set(r, c, true);
        if (b.get(r)) aug.set(r, m.cols(), true);
    }
    Rref e = rref(aug);
    BitVector x(m.cols());
    for (std::size_t r = 0; r < e.pivots.size(); ++r) {
        if (e.pivots[r] == m.cols()) return std::nullopt;  // 0 = 1 row
        x.set(e.pivots[r], e.mat.get(r, m.cols()));
    }
    return x;
}

// True iff v lies in the row span of `span`.
inline bool in_span(const std::vector<BitVector>& span, const BitVector& v) {
    if (span.empty()) return v.is_zero();
    BitMatrix m(span.size(), span[0].size());
    for (std::size_t i = 0; i < span.size(); ++i) m.row(i) = span[i];
    std::size_t r0 = rank(m);
    BitMatrix m2(span.size() + 1, span[0].size());
    for (std::size_t i = 0; i < span.size(); ++i) m2.row(i) = span[i];
    m2.row(span.size()) = v;
    return rank(m2) == r0;
}

}  // namespace fibercx

#endif
