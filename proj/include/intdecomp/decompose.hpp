#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "intdecomp/graph.hpp"
#include "intdecomp/hermite.hpp"
#include "intdecomp/matrix.hpp"

namespace intdecomp {

/// Input has a column of zeros (column index is 1-based).
class ZeroColumnError : public std::invalid_argument {
  public:
    explicit ZeroColumnError(std::size_t column)
        : std::invalid_argument("zero column " + std::to_string(column)),
          column_(column) {}

    std::size_t column() const { return column_; }

  private:
    std::size_t column_;
};

/// Input rank is smaller than its row count.
class RankDeficientError : public std::invalid_argument {
  public:
    RankDeficientError(std::size_t rank, std::size_t rows)
        : std::invalid_argument("rank deficient: rank " + std::to_string(rank) +
                                " < rows " + std::to_string(rows)),
          rank_(rank), rows_(rows) {}

    std::size_t rank() const { return rank_; }
    std::size_t rows() const { return rows_; }

  private:
    std::size_t rank_, rows_;
};

/// Result of the decomposition pipeline: p is unimodular with inverse
/// p_inverse, q is a column permutation, and
///     p_inverse * A * Q == direct_sum(blocks)
/// with every block in Hermite normal form. row_partition / column_partition
/// give the 1-based original row / column indices owned by each block.
struct Decomposition {
    IntMatrix p;
    IntMatrix p_inverse;
    Permutation q;
    std::vector<IntMatrix> blocks;
    std::vector<std::vector<std::size_t>> row_partition;
    ComponentPartition column_partition;
    bool decomposable; // true iff blocks.size() >= 2

    // Side record of the connectivity cross-check on gram(HNF(A)).
    // Present when produced by hnf_decomposition, absent when the
    // decomposition was reconstructed from serialized output.
    std::optional<ConnectivityCrossCheck> connectivity;
};

/// Whether A splits into a direct sum of >= 2 matrices under some
/// unimodular row transform and column permutation. Requires full row rank
/// and no zero column; decided by reducibility of gram(HNF(A)).
bool is_decomposable(const IntMatrix &a);

/// Runs the full pipeline: HNF, gram matrix, connected components of its
/// weight graph, column permutation grouping the components, and a second
/// HNF bringing every block into normal form. The zero-pattern components
/// are authoritative; the Laplacian RREF reading runs alongside and lands
/// in the connectivity record. The two disagree exactly when rank(L)
/// drops below n - t (possible with negative gram weights); any other
/// disagreement raises ConnectivityMismatchError.
Decomposition hnf_decomposition(const IntMatrix &a);

/// Outcome of checking a Decomposition against its originating matrix.
struct VerificationReport {
    bool ok = true;
    std::vector<std::string> reasons;

    explicit operator bool() const { return ok; }
};

/// Re-derives every Decomposition invariant against a. Never throws for
/// value-level mismatches; each failed check appends a reason.
VerificationReport verify_decomposition(const IntMatrix &a,
                                        const Decomposition &d);

/// A witness that h (in HNF, full row rank, no zero column) splits: rows T
/// and columns S, both 1-based, such that h is zero outside the blocks
/// T x S and ~T x ~S. First witness in increasing bitmask order, or
/// nullopt. Guarded to at most 12 rows and 12 columns.
struct BruteForceSplit {
    std::vector<std::size_t> rows;
    std::vector<std::size_t> cols;
};

std::optional<BruteForceSplit> decomposable_brute_force(const IntMatrix &h);

/// Test-harness cross-check: the gram-reducibility criterion and the definitional
/// enumeration on HNF(a) must agree. Guarded to at most 8x8.
bool decomposability_equivalence_check(const IntMatrix &a);

/// Drops all-zero rows (preprocessing convenience). Throws if every row
/// is zero.
IntMatrix remove_zero_rows(const IntMatrix &a);

} // namespace intdecomp
