#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "intdecomp/matrix.hpp"

namespace intdecomp {

/// Undirected weighted graph given by a symmetric adjacency matrix B;
/// b_ij is the weight of edge {i, j}. Diagonal entries are self-loops and
/// never connect distinct vertices.
class WeightedGraph {
  public:
    explicit WeightedGraph(IntMatrix adjacency);

    std::size_t order() const { return adjacency_.rows(); }
    const IntMatrix &adjacency() const { return adjacency_; }

  private:
    IntMatrix adjacency_;
};

/// Ordered partition of the vertex set {1..n} into connected components.
/// Vertex indices are 1-based; each component is sorted ascending and
/// components are ordered by their smallest element.
struct ComponentPartition {
    std::vector<std::vector<std::size_t>> components;

    std::size_t count() const { return components.size(); }

    friend bool operator==(const ComponentPartition &,
                           const ComponentPartition &) = default;
};

/// Raised when the two connectivity readings cannot be reconciled: either
/// the echelon-form reading fails to partition the vertex set, or it
/// disagrees with the zero-pattern components. Carries both views.
class ConnectivityMismatchError : public std::runtime_error {
  public:
    ConnectivityMismatchError(std::string message, RatMatrix rref,
                              std::optional<ComponentPartition> rref_partition,
                              ComponentPartition zero_pattern_partition)
        : std::runtime_error(std::move(message)), rref_(std::move(rref)),
          rref_partition_(std::move(rref_partition)),
          zero_pattern_partition_(std::move(zero_pattern_partition)) {}

    const RatMatrix &rref() const { return rref_; }
    const std::optional<ComponentPartition> &rref_partition() const {
        return rref_partition_;
    }
    const ComponentPartition &zero_pattern_partition() const {
        return zero_pattern_partition_;
    }

  private:
    RatMatrix rref_;
    std::optional<ComponentPartition> rref_partition_;
    ComponentPartition zero_pattern_partition_;
};

/// Full row sums of the adjacency matrix, diagonal included.
std::vector<Int> degrees(const WeightedGraph &g);

/// L = D - B with D = diag(degrees). Every row of L sums to zero, and
/// self-loop weights cancel out of the diagonal.
IntMatrix laplacian(const WeightedGraph &g);

/// Reduced row echelon form over the exact rationals, with the 0-based
/// pivot column list.
struct RrefResult {
    RatMatrix m;
    std::vector<std::size_t> pivot_cols;
};

RrefResult rref_with_pivots(const RatMatrix &m);
RatMatrix rref(const RatMatrix &m);
RatMatrix rref(const IntMatrix &m);

/// Components read off the RREF of the Laplacian: each non-pivot column j
/// yields the component {j} together with the pivot columns of the rows
/// supporting v_j. Throws ConnectivityMismatchError if the resulting sets
/// do not partition {1..n}.
ComponentPartition components_via_rref(const WeightedGraph &g);

/// Components of the graph whose edges are the nonzero off-diagonal
/// entries, by disjoint-set union.
ComponentPartition components_via_zero_pattern(const WeightedGraph &g);

/// Both connectivity readings side by side. The echelon reading is provably
/// correct exactly when rank(L) = n - t (t = zero-pattern component count);
/// with negative weights the rank can drop below n - t, and then the
/// echelon reading either fails to partition {1..n} or yields strictly more
/// than t sets. Hence agreed == rank_law_holds always; cross_check_components
/// throws ConnectivityMismatchError if that equivalence is ever violated,
/// since only an implementation bug could violate it.
struct ConnectivityCrossCheck {
    ComponentPartition zero_pattern;
    std::optional<ComponentPartition> via_rref; // nullopt: sets overlapped
    std::size_t laplacian_rank = 0;
    bool rank_law_holds = false;
    bool agreed = false;
};

ConnectivityCrossCheck cross_check_components(const WeightedGraph &g);

/// True iff some symmetric permutation of b is a direct sum of >= 2 square
/// blocks, i.e. the graph of b is disconnected. b must be symmetric.
bool is_reducible(const IntMatrix &b);

/// Definitional reducibility check: enumerates nonempty proper subsets S
/// of {1..n} in increasing bitmask order and returns the first S with
/// b_ij = 0 for all i in S, j outside S. Returns the 1-based subset, or
/// nullopt if b is irreducible. Guarded to n <= 20.
std::optional<std::vector<std::size_t>>
reducibility_witness_brute_force(const IntMatrix &b);

} // namespace intdecomp
