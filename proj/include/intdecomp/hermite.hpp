#pragma once

#include <cstddef>
#include <vector>

#include "intdecomp/matrix.hpp"

namespace intdecomp {

/// Hermite normal form of an input matrix A, together with a unimodular
/// witness pair: p * h == A and p_inverse * A == h. h is unique; p is one
/// valid witness (unique only when A has full row rank).
struct HnfResult {
    IntMatrix h;
    IntMatrix p;
    IntMatrix p_inverse;
    std::vector<std::size_t> pivot_cols; // 0-based, strictly increasing
    std::size_t rank;
};

/// Row-based HNF: columns are processed left to right, the working column
/// is reduced to its gcd by extended-Euclid row combinations, rows below
/// the pivot are zeroed and entries above are reduced into [0, pivot).
HnfResult hermite_normal_form(const IntMatrix &a);

/// True iff h is in Hermite normal form: row echelon with strictly
/// positive pivots, entries above each pivot in [0, pivot), zero rows last.
bool is_hnf(const IntMatrix &h);

/// The top rank rows of h.h, i.e. the full-row-rank part. Throws if the
/// rank is zero (a matrix needs at least one row).
IntMatrix strip_zero_rows(const HnfResult &h);

} // namespace intdecomp
