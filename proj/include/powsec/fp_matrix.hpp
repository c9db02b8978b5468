#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "powsec/fp.hpp"

namespace powsec {

/// Dense row-major matrix over F_p. The certification workhorse: every
/// "number of independent conditions" in the library is a rank of one of
/// these. Matrices are immutable after assembly; rank() works on a copy.
class FpMatrix {
public:
    FpMatrix(std::size_t rows, std::size_t cols, PrimeField f)
        : rows_(rows), cols_(cols), field_(f), entries_(rows * cols, 0) {}

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    const PrimeField& field() const { return field_; }

    std::uint64_t at(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }
    void set(std::size_t r, std::size_t c, std::uint64_t v) { entries_[r * cols_ + c] = v % field_.p(); }

    const std::vector<std::uint64_t>& entries() const { return entries_; }

    /// Append the rows of another block with the same column space.
    void append_rows(const FpMatrix& other) {
        if (other.cols_ != cols_) throw std::invalid_argument("FpMatrix: column mismatch in stack");
        if (!(other.field_ == field_)) throw std::invalid_argument("FpMatrix: field mismatch in stack");
        entries_.insert(entries_.end(), other.entries_.begin(), other.entries_.end());
        rows_ += other.rows_;
    }

    /// Rank over F_p by Gaussian elimination, column by column with the
    /// first nonzero pivot. Fully deterministic: no scheduling, no pivot
    /// heuristics, so the same matrix always reports the same rank.
    std::size_t rank() const {
        std::vector<std::uint64_t> a(entries_);
        std::size_t r = 0;
        for (std::size_t col = 0; col < cols_ && r < rows_; ++col) {
            std::size_t piv = r;
            while (piv < rows_ && a[piv * cols_ + col] == 0) ++piv;
            if (piv == rows_) continue;
            if (piv != r) {
                for (std::size_t j = col; j < cols_; ++j)
                    std::swap(a[r * cols_ + j], a[piv * cols_ + j]);
            }
            const std::uint64_t inv = field_.inv(a[r * cols_ + col]);
            for (std::size_t i = r + 1; i < rows_; ++i) {
                const std::uint64_t lead = a[i * cols_ + col];
                if (lead == 0) continue;
                const std::uint64_t f = field_.mul(lead, inv);
                a[i * cols_ + col] = 0;
                const std::uint64_t* src = &a[r * cols_];
                std::uint64_t* dst = &a[i * cols_];
                for (std::size_t j = col + 1; j < cols_; ++j)
                    dst[j] = field_.sub(dst[j], field_.mul(f, src[j]));
            }
            ++r;
        }
        return r;
    }

    /// Dimension of the right kernel.
    std::size_t kernel_dim() const { return cols_ - rank(); }

private:
    std::size_t rows_;
    std::size_t cols_;
    PrimeField field_;
    std::vector<std::uint64_t> entries_;
};

/// Stack blocks vertically (all sharing the same column basis).
inline FpMatrix vstack(const std::vector<FpMatrix>& blocks, std::size_t cols, PrimeField f) {
    FpMatrix m(0, cols, f);
    for (const auto& b : blocks) m.append_rows(b);
    return m;
}

}  // namespace powsec
