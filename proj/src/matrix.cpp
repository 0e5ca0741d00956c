#include "intdecomp/matrix.hpp"

#include <algorithm>
#include <numeric>
#include <string>
#include <utility>

namespace intdecomp {

namespace {

void check_dims(std::size_t rows, std::size_t cols) {
    if (rows == 0 || cols == 0)
        throw std::invalid_argument("matrix dimensions must be at least 1x1");
}

} // namespace

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), entries_(rows * cols) {
    check_dims(rows, cols);
}

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long>> rows)
    : rows_(rows.size()), cols_(rows.size() ? rows.begin()->size() : 0) {
    check_dims(rows_, cols_);
    entries_.reserve(rows_ * cols_);
    for (const auto &row : rows) {
        if (row.size() != cols_)
            throw std::invalid_argument("ragged initializer rows");
        for (long v : row)
            entries_.emplace_back(v);
    }
}

IntMatrix IntMatrix::identity(std::size_t n) {
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        m(i, i) = 1;
    return m;
}

bool IntMatrix::is_symmetric() const {
    if (!is_square())
        return false;
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = i + 1; j < cols_; ++j)
            if ((*this)(i, j) != (*this)(j, i))
                return false;
    return true;
}

bool IntMatrix::is_zero_row(std::size_t i) const {
    for (std::size_t j = 0; j < cols_; ++j)
        if ((*this)(i, j) != 0)
            return false;
    return true;
}

bool IntMatrix::is_zero_column(std::size_t j) const {
    for (std::size_t i = 0; i < rows_; ++i)
        if ((*this)(i, j) != 0)
            return false;
    return true;
}

RatMatrix::RatMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), entries_(rows * cols) {
    check_dims(rows, cols);
}

RatMatrix::RatMatrix(std::initializer_list<std::initializer_list<long>> rows)
    : rows_(rows.size()), cols_(rows.size() ? rows.begin()->size() : 0) {
    check_dims(rows_, cols_);
    entries_.reserve(rows_ * cols_);
    for (const auto &row : rows) {
        if (row.size() != cols_)
            throw std::invalid_argument("ragged initializer rows");
        for (long v : row)
            entries_.emplace_back(v);
    }
}

RatMatrix::RatMatrix(const IntMatrix &m) : RatMatrix(m.rows(), m.cols()) {
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            (*this)(i, j) = m(i, j);
}

Permutation::Permutation(std::vector<std::size_t> mapping)
    : mapping_(std::move(mapping)) {
    if (mapping_.empty())
        throw std::invalid_argument("permutation must have length >= 1");
    std::vector<bool> seen(mapping_.size(), false);
    for (std::size_t v : mapping_) {
        if (v >= mapping_.size() || seen[v])
            throw std::invalid_argument("permutation mapping is not a bijection");
        seen[v] = true;
    }
}

Permutation Permutation::identity(std::size_t n) {
    std::vector<std::size_t> m(n);
    std::iota(m.begin(), m.end(), std::size_t{0});
    return Permutation(std::move(m));
}

Permutation Permutation::from_one_based(const std::vector<std::size_t> &mapping) {
    std::vector<std::size_t> m;
    m.reserve(mapping.size());
    for (std::size_t v : mapping) {
        if (v == 0)
            throw std::invalid_argument("one-based permutation entry is zero");
        m.push_back(v - 1);
    }
    return Permutation(std::move(m));
}

std::vector<std::size_t> Permutation::one_based() const {
    std::vector<std::size_t> out;
    out.reserve(mapping_.size());
    for (std::size_t v : mapping_)
        out.push_back(v + 1);
    return out;
}

IntMatrix Permutation::to_matrix() const {
    IntMatrix q(size(), size());
    for (std::size_t j = 0; j < size(); ++j)
        q(mapping_[j], j) = 1;
    return q;
}

bool Permutation::is_identity() const {
    for (std::size_t j = 0; j < size(); ++j)
        if (mapping_[j] != j)
            return false;
    return true;
}

IntMatrix multiply(const IntMatrix &a, const IntMatrix &b) {
    if (a.cols() != b.rows())
        throw std::invalid_argument("multiply: dimension mismatch (" +
                                    std::to_string(a.cols()) + " vs " +
                                    std::to_string(b.rows()) + ")");
    IntMatrix c(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const Int &aik = a(i, k);
            if (aik == 0)
                continue;
            for (std::size_t j = 0; j < b.cols(); ++j)
                c(i, j) += aik * b(k, j);
        }
    return c;
}

IntMatrix transpose(const IntMatrix &a) {
    IntMatrix t(a.cols(), a.rows());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            t(j, i) = a(i, j);
    return t;
}

Int determinant(const IntMatrix &a) {
    if (!a.is_square())
        throw std::invalid_argument("determinant: matrix not square");
    const std::size_t n = a.rows();
    IntMatrix w = a;
    Int prev = 1;
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        std::size_t piv = k;
        while (piv < n && w(piv, k) == 0)
            ++piv;
        if (piv == n)
            return 0;
        if (piv != k) {
            for (std::size_t j = k; j < n; ++j)
                std::swap(w(k, j), w(piv, j));
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                Int num = w(i, j) * w(k, k) - w(i, k) * w(k, j);
                // division by the previous pivot is exact (Bareiss)
                mpz_divexact(w(i, j).get_mpz_t(), num.get_mpz_t(),
                             prev.get_mpz_t());
            }
            w(i, k) = 0;
        }
        prev = w(k, k);
    }
    return sign == 1 ? w(n - 1, n - 1) : Int(-w(n - 1, n - 1));
}

bool is_unimodular(const IntMatrix &a) {
    if (!a.is_square())
        return false;
    Int d = determinant(a);
    return d == 1 || d == -1;
}

IntMatrix gram(const IntMatrix &h) {
    return multiply(transpose(h), h);
}

IntMatrix direct_sum(const std::vector<IntMatrix> &blocks) {
    if (blocks.empty())
        throw std::invalid_argument("direct_sum: empty block list");
    std::size_t rows = 0, cols = 0;
    for (const IntMatrix &b : blocks) {
        rows += b.rows();
        cols += b.cols();
    }
    IntMatrix out(rows, cols);
    std::size_t ro = 0, co = 0;
    for (const IntMatrix &b : blocks) {
        for (std::size_t i = 0; i < b.rows(); ++i)
            for (std::size_t j = 0; j < b.cols(); ++j)
                out(ro + i, co + j) = b(i, j);
        ro += b.rows();
        co += b.cols();
    }
    return out;
}

IntMatrix apply_column_permutation(const IntMatrix &a, const Permutation &q) {
    if (q.size() != a.cols())
        throw std::invalid_argument("apply_column_permutation: length mismatch");
    IntMatrix out(a.rows(), a.cols());
    for (std::size_t j = 0; j < a.cols(); ++j)
        for (std::size_t i = 0; i < a.rows(); ++i)
            out(i, j) = a(i, q(j));
    return out;
}

} // namespace intdecomp
