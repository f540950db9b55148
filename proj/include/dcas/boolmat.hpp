#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "dcas/kernels.hpp"

namespace dcas {

/// Bit-packed rectangular 0/1 matrix. Rows are stored row-major, each row
/// padded to whole 64-bit words; padding bits past the last column are
/// always zero, so whole-row word comparisons and products are exact.
///
/// Values are immutable in practice once built (operations return fresh
/// matrices); set() exists for construction and tests.
class BoolMatrix {
public:
    using Word = kern::Word;
    static constexpr std::size_t kWordBits = 64;

    BoolMatrix() = default;
    BoolMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols),
          words_per_row_((cols + kWordBits - 1) / kWordBits),
          data_(rows * words_per_row_, 0) {}

    static BoolMatrix identity(std::size_t n);
    static BoolMatrix ones(std::size_t rows, std::size_t cols);
    /// Row-of-rows literal, 0/1 entries; rows must have equal length.
    static BoolMatrix from_rows(std::initializer_list<std::initializer_list<int>> rows);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    std::size_t words_per_row() const { return words_per_row_; }

    bool get(std::size_t i, std::size_t j) const {
        return (row_ptr(i)[j / kWordBits] >> (j % kWordBits)) & 1u;
    }

    void set(std::size_t i, std::size_t j, bool v) {
        Word mask = Word{1} << (j % kWordBits);
        Word& w = row_ptr(i)[j / kWordBits];
        if (v)
            w |= mask;
        else
            w &= ~mask;
    }

    std::span<const Word> row(std::size_t i) const {
        return {row_ptr(i), words_per_row_};
    }
    std::span<Word> row(std::size_t i) {
        return {row_ptr(i), words_per_row_};
    }

    BoolMatrix transpose() const;

    /// Copy of the rectangular region [r0,r1) x [c0,c1).
    BoolMatrix submatrix(std::size_t r0, std::size_t r1,
                         std::size_t c0, std::size_t c1) const;

    bool all_padding_zero() const;

    bool operator==(const BoolMatrix&) const = default;

    std::string to_string() const; // rows of 0/1, for diagnostics

private:
    const Word* row_ptr(std::size_t i) const { return data_.data() + i * words_per_row_; }
    Word* row_ptr(std::size_t i) { return data_.data() + i * words_per_row_; }

    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::size_t words_per_row_ = 0;
    std::vector<Word> data_;
};

/// Boolean semiring product: result(i,j) = OR_k A(i,k) AND B(k,j).
/// Empty inner dimension yields all-zeros.
BoolMatrix bool_product(const BoolMatrix& a, const BoolMatrix& b);

/// Implication product: result(i,j) = 1 iff A(i,k) <= B(k,j) for every k.
/// Empty inner dimension yields all-ones.
BoolMatrix odot_product(const BoolMatrix& a, const BoolMatrix& b);

BoolMatrix elementwise_or(const BoolMatrix& a, const BoolMatrix& b);
BoolMatrix elementwise_and(const BoolMatrix& a, const BoolMatrix& b);

/// Assemble [[TL,TR],[BL,BR]]; shapes must be conformal.
BoolMatrix block_compose(const BoolMatrix& tl, const BoolMatrix& tr,
                         const BoolMatrix& bl, const BoolMatrix& br);

} // namespace dcas
