#pragma once

#include <cstddef>
#include <initializer_list>
#include <stdexcept>
#include <vector>

#include <gmpxx.h>

namespace intdecomp {

using Int = mpz_class;
using Rat = mpq_class;

/// Dense row-major matrix of arbitrary-precision integers. All arithmetic
/// is exact; dimensions are at least 1x1 and fixed at construction.
class IntMatrix {
  public:
    IntMatrix(std::size_t rows, std::size_t cols);
    IntMatrix(std::initializer_list<std::initializer_list<long>> rows);

    static IntMatrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    const Int &operator()(std::size_t i, std::size_t j) const {
        return entries_[i * cols_ + j];
    }
    Int &operator()(std::size_t i, std::size_t j) {
        return entries_[i * cols_ + j];
    }

    bool is_square() const { return rows_ == cols_; }
    bool is_symmetric() const;
    bool is_zero_row(std::size_t i) const;
    bool is_zero_column(std::size_t j) const;

    friend bool operator==(const IntMatrix &, const IntMatrix &) = default;

  private:
    std::size_t rows_, cols_;
    std::vector<Int> entries_;
};

/// Dense matrix of exact rationals. Entries are kept canonical
/// (lowest terms, positive denominator).
class RatMatrix {
  public:
    RatMatrix(std::size_t rows, std::size_t cols);
    RatMatrix(std::initializer_list<std::initializer_list<long>> rows);
    explicit RatMatrix(const IntMatrix &m);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    const Rat &operator()(std::size_t i, std::size_t j) const {
        return entries_[i * cols_ + j];
    }
    Rat &operator()(std::size_t i, std::size_t j) {
        return entries_[i * cols_ + j];
    }

    friend bool operator==(const RatMatrix &, const RatMatrix &) = default;

  private:
    std::size_t rows_, cols_;
    std::vector<Rat> entries_;
};

/// Permutation of n column indices. mapping()[j] is the 0-based image of
/// position j: the matrix form Q has Q(mapping(j), j) = 1, so column j of
/// A*Q is column mapping(j) of A.
class Permutation {
  public:
    explicit Permutation(std::vector<std::size_t> mapping);

    static Permutation identity(std::size_t n);
    static Permutation from_one_based(const std::vector<std::size_t> &mapping);

    std::size_t size() const { return mapping_.size(); }
    std::size_t operator()(std::size_t j) const { return mapping_[j]; }
    const std::vector<std::size_t> &mapping() const { return mapping_; }
    std::vector<std::size_t> one_based() const;

    IntMatrix to_matrix() const;
    bool is_identity() const;

    friend bool operator==(const Permutation &, const Permutation &) = default;

  private:
    std::vector<std::size_t> mapping_;
};

IntMatrix multiply(const IntMatrix &a, const IntMatrix &b);
IntMatrix transpose(const IntMatrix &a);

/// Exact determinant by fraction-free (Bareiss) elimination.
Int determinant(const IntMatrix &a);

/// True iff a is square with determinant +-1. Non-square returns false.
bool is_unimodular(const IntMatrix &a);

/// h^T * h. Symmetric; entry (i,i) is the sum of squares of column i.
IntMatrix gram(const IntMatrix &h);

/// Block-diagonal matrix with the given blocks on the diagonal, in order.
IntMatrix direct_sum(const std::vector<IntMatrix> &blocks);

/// A*Q for the column permutation q. Column j of the result is column
/// q(j) of a.
IntMatrix apply_column_permutation(const IntMatrix &a, const Permutation &q);

} // namespace intdecomp
