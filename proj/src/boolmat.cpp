#include "dcas/boolmat.hpp"

#include <bit>

#include <fmt/core.h>

#include "dcas/errors.hpp"

namespace dcas {

namespace {

void require_inner(const BoolMatrix& a, const BoolMatrix& b, const char* op) {
    if (a.cols() != b.rows())
        throw DimensionError(fmt::format(
            "{}: inner dimensions differ, left is {}x{}, right is {}x{}",
            op, a.rows(), a.cols(), b.rows(), b.cols()));
}

void require_same_shape(const BoolMatrix& a, const BoolMatrix& b, const char* op) {
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw DimensionError(fmt::format(
            "{}: shapes differ, left is {}x{}, right is {}x{}",
            op, a.rows(), a.cols(), b.rows(), b.cols()));
}

} // namespace

BoolMatrix BoolMatrix::identity(std::size_t n) {
    BoolMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        m.set(i, i, true);
    return m;
}

BoolMatrix BoolMatrix::ones(std::size_t rows, std::size_t cols) {
    BoolMatrix m(rows, cols);
    if (cols == 0)
        return m;
    for (std::size_t i = 0; i < rows; ++i) {
        auto r = m.row(i);
        for (auto& w : r)
            w = ~Word{0};
        // clear padding past the last column
        std::size_t tail = cols % kWordBits;
        if (tail != 0)
            r[r.size() - 1] = (Word{1} << tail) - 1;
    }
    return m;
}

BoolMatrix BoolMatrix::from_rows(std::initializer_list<std::initializer_list<int>> rows) {
    std::size_t nr = rows.size();
    std::size_t nc = nr == 0 ? 0 : rows.begin()->size();
    BoolMatrix m(nr, nc);
    std::size_t i = 0;
    for (const auto& r : rows) {
        if (r.size() != nc)
            throw DimensionError("from_rows: ragged row lengths");
        std::size_t j = 0;
        for (int v : r)
            m.set(i, j++, v != 0);
        ++i;
    }
    return m;
}

BoolMatrix BoolMatrix::transpose() const {
    BoolMatrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            if (get(i, j))
                t.set(j, i, true);
    return t;
}

BoolMatrix BoolMatrix::submatrix(std::size_t r0, std::size_t r1,
                                 std::size_t c0, std::size_t c1) const {
    if (r1 < r0 || c1 < c0 || r1 > rows_ || c1 > cols_)
        throw DimensionError(fmt::format(
            "submatrix: region [{},{})x[{},{}) out of bounds for {}x{}",
            r0, r1, c0, c1, rows_, cols_));
    BoolMatrix s(r1 - r0, c1 - c0);
    for (std::size_t i = r0; i < r1; ++i)
        for (std::size_t j = c0; j < c1; ++j)
            if (get(i, j))
                s.set(i - r0, j - c0, true);
    return s;
}

bool BoolMatrix::all_padding_zero() const {
    std::size_t tail = cols_ % kWordBits;
    if (tail == 0 || words_per_row_ == 0)
        return true;
    Word pad_mask = ~((Word{1} << tail) - 1);
    for (std::size_t i = 0; i < rows_; ++i)
        if (row(i)[words_per_row_ - 1] & pad_mask)
            return false;
    return true;
}

std::string BoolMatrix::to_string() const {
    std::string s;
    s.reserve(rows_ * (cols_ + 1));
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t j = 0; j < cols_; ++j)
            s += get(i, j) ? '1' : '0';
        s += '\n';
    }
    return s;
}

BoolMatrix bool_product(const BoolMatrix& a, const BoolMatrix& b) {
    require_inner(a, b, "bool_product");
    // result row i = OR of the B-rows selected by the set bits of A row i
    BoolMatrix res(a.rows(), b.cols());
    std::size_t nw = res.words_per_row();
    for (std::size_t i = 0; i < a.rows(); ++i) {
        auto arow = a.row(i);
        auto out = res.row(i);
        for (std::size_t wi = 0; wi < arow.size(); ++wi) {
            kern::Word w = arow[wi];
            while (w) {
                std::size_t k = wi * BoolMatrix::kWordBits
                              + static_cast<std::size_t>(std::countr_zero(w));
                kern::or_into(out.data(), b.row(k).data(), nw);
                w &= w - 1;
            }
        }
    }
    return res;
}

BoolMatrix odot_product(const BoolMatrix& a, const BoolMatrix& b) {
    require_inner(a, b, "odot_product");
    // result row i = AND of the B-rows selected by A row i; empty
    // selection leaves the all-ones row (empty conjunction)
    BoolMatrix res = BoolMatrix::ones(a.rows(), b.cols());
    std::size_t nw = res.words_per_row();
    for (std::size_t i = 0; i < a.rows(); ++i) {
        auto arow = a.row(i);
        auto out = res.row(i);
        for (std::size_t wi = 0; wi < arow.size(); ++wi) {
            kern::Word w = arow[wi];
            while (w) {
                std::size_t k = wi * BoolMatrix::kWordBits
                              + static_cast<std::size_t>(std::countr_zero(w));
                kern::and_into(out.data(), b.row(k).data(), nw);
                w &= w - 1;
            }
        }
    }
    return res;
}

BoolMatrix elementwise_or(const BoolMatrix& a, const BoolMatrix& b) {
    require_same_shape(a, b, "elementwise_or");
    BoolMatrix res = a;
    for (std::size_t i = 0; i < res.rows(); ++i)
        kern::or_into(res.row(i).data(), b.row(i).data(), res.words_per_row());
    return res;
}

BoolMatrix elementwise_and(const BoolMatrix& a, const BoolMatrix& b) {
    require_same_shape(a, b, "elementwise_and");
    BoolMatrix res = a;
    for (std::size_t i = 0; i < res.rows(); ++i)
        kern::and_into(res.row(i).data(), b.row(i).data(), res.words_per_row());
    return res;
}

BoolMatrix block_compose(const BoolMatrix& tl, const BoolMatrix& tr,
                         const BoolMatrix& bl, const BoolMatrix& br) {
    if (tl.rows() != tr.rows() || bl.rows() != br.rows() ||
        tl.cols() != bl.cols() || tr.cols() != br.cols())
        throw DimensionError(fmt::format(
            "block_compose: non-conformal blocks {}x{}, {}x{}, {}x{}, {}x{}",
            tl.rows(), tl.cols(), tr.rows(), tr.cols(),
            bl.rows(), bl.cols(), br.rows(), br.cols()));
    std::size_t n = tl.rows(), t = bl.rows();
    std::size_t cl = tl.cols(), cr = tr.cols();
    BoolMatrix res(n + t, cl + cr);
    auto place = [&](const BoolMatrix& blk, std::size_t ro, std::size_t co) {
        for (std::size_t i = 0; i < blk.rows(); ++i)
            for (std::size_t j = 0; j < blk.cols(); ++j)
                if (blk.get(i, j))
                    res.set(ro + i, co + j, true);
    };
    place(tl, 0, 0);
    place(tr, 0, cl);
    place(bl, n, 0);
    place(br, n, cl);
    return res;
}

} // namespace dcas
