#include "intdecomp/decompose.hpp"

#include <algorithm>
#include <cstdint>
#include <utility>

namespace intdecomp {

namespace {

// Zero-column scan first, then rank via the HNF itself.
HnfResult validate_and_reduce(const IntMatrix &a) {
    for (std::size_t j = 0; j < a.cols(); ++j)
        if (a.is_zero_column(j))
            throw ZeroColumnError(j + 1);
    HnfResult hnf = hermite_normal_form(a);
    if (hnf.rank < a.rows())
        throw RankDeficientError(hnf.rank, a.rows());
    return hnf;
}

} // namespace

bool is_decomposable(const IntMatrix &a) {
    HnfResult hnf = validate_and_reduce(a);
    return is_reducible(gram(hnf.h));
}

Decomposition hnf_decomposition(const IntMatrix &a) {
    HnfResult hnf = validate_and_reduce(a);
    const IntMatrix &h = hnf.h;
    const std::size_t m = h.rows(), n = h.cols();

    // cross_check_components already certifies that any disagreement between
    // the two readings is the rank-law gap and nothing else.
    ConnectivityCrossCheck cross = cross_check_components(WeightedGraph(gram(h)));
    ComponentPartition comps = cross.zero_pattern;

    // Q gathers each component's columns in ascending order; components are
    // already ordered by smallest member.
    std::vector<std::size_t> mapping;
    mapping.reserve(n);
    for (const auto &comp : comps.components)
        for (std::size_t v : comp)
            mapping.push_back(v - 1);
    Permutation q(std::move(mapping));

    IntMatrix hq = apply_column_permutation(h, q);
    HnfResult hnf2 = hermite_normal_form(hq);

    // Every row of h owns a pivot; the pivot's component owns the row.
    std::vector<std::size_t> vertex_comp(n);
    for (std::size_t k = 0; k < comps.count(); ++k)
        for (std::size_t v : comps.components[k])
            vertex_comp[v - 1] = k;
    std::vector<std::vector<std::size_t>> row_partition(comps.count());
    for (std::size_t i = 0; i < m; ++i)
        row_partition[vertex_comp[hnf.pivot_cols[i]]].push_back(i + 1);

    // hnf2.h must be the direct sum of the per-component blocks.
    std::vector<IntMatrix> blocks;
    std::size_t row_off = 0, col_off = 0;
    for (std::size_t k = 0; k < comps.count(); ++k) {
        const std::size_t bm = row_partition[k].size();
        const std::size_t bn = comps.components[k].size();
        if (bm == 0)
            throw std::logic_error("component without pivot rows");
        IntMatrix block(bm, bn);
        for (std::size_t i = 0; i < bm; ++i)
            for (std::size_t j = 0; j < bn; ++j)
                block(i, j) = hnf2.h(row_off + i, col_off + j);
        blocks.push_back(std::move(block));
        row_off += bm;
        col_off += bn;
    }
    // Everything outside the diagonal blocks must have vanished; anything
    // else would contradict the block structure the components promise.
    if (hnf2.h != direct_sum(blocks))
        throw std::logic_error(
            "HNF of the permuted matrix is not the direct sum of its blocks");

    bool decomposable = comps.count() >= 2;
    return Decomposition{multiply(hnf.p, hnf2.p),
                         multiply(hnf2.p_inverse, hnf.p_inverse),
                         std::move(q),
                         std::move(blocks),
                         std::move(row_partition),
                         std::move(comps),
                         decomposable,
                         std::move(cross)};
}

VerificationReport verify_decomposition(const IntMatrix &a,
                                        const Decomposition &d) {
    VerificationReport report;
    auto fail = [&](std::string reason) {
        report.ok = false;
        report.reasons.push_back(std::move(reason));
    };

    const std::size_t m = a.rows(), n = a.cols();
    if (d.p.rows() != m || d.p.cols() != m)
        fail("P has wrong dimensions");
    if (d.p_inverse.rows() != m || d.p_inverse.cols() != m)
        fail("P_inverse has wrong dimensions");
    if (d.q.size() != n)
        fail("Q has wrong length");
    if (d.blocks.empty())
        fail("no blocks");
    if (!report.ok)
        return report;

    if (!is_unimodular(d.p))
        fail("not unimodular");
    if (multiply(d.p, d.p_inverse) != IntMatrix::identity(m))
        fail("P_inverse is not the inverse of P");

    std::size_t total_rows = 0, total_cols = 0;
    for (std::size_t k = 0; k < d.blocks.size(); ++k) {
        total_rows += d.blocks[k].rows();
        total_cols += d.blocks[k].cols();
        if (!is_hnf(d.blocks[k]))
            fail("block " + std::to_string(k + 1) + " not in HNF");
    }
    if (total_rows != m || total_cols != n)
        fail("block extents do not sum to the matrix dimensions");

    if (d.row_partition.size() != d.blocks.size() ||
        d.column_partition.count() != d.blocks.size()) {
        fail("partition count differs from block count");
    } else {
        std::vector<std::size_t> rows_seen, cols_seen;
        for (std::size_t k = 0; k < d.blocks.size(); ++k) {
            if (d.row_partition[k].size() != d.blocks[k].rows())
                fail("row partition " + std::to_string(k + 1) +
                     " has wrong size");
            if (d.column_partition.components[k].size() != d.blocks[k].cols())
                fail("column partition " + std::to_string(k + 1) +
                     " has wrong size");
            rows_seen.insert(rows_seen.end(), d.row_partition[k].begin(),
                             d.row_partition[k].end());
            cols_seen.insert(cols_seen.end(),
                             d.column_partition.components[k].begin(),
                             d.column_partition.components[k].end());
        }
        auto covers = [](std::vector<std::size_t> v, std::size_t count) {
            std::sort(v.begin(), v.end());
            if (v.size() != count)
                return false;
            for (std::size_t i = 0; i < count; ++i)
                if (v[i] != i + 1)
                    return false;
            return true;
        };
        if (!covers(rows_seen, m))
            fail("row partition does not cover {1..m}");
        if (!covers(cols_seen, n))
            fail("column partition does not cover {1..n}");
    }

    // Q must gather each component's columns in order.
    if (d.q.size() == n && d.column_partition.count() == d.blocks.size()) {
        std::size_t pos = 0;
        bool q_consistent = true;
        for (const auto &comp : d.column_partition.components)
            for (std::size_t v : comp)
                if (pos < n && d.q(pos++) != v - 1)
                    q_consistent = false;
        if (!q_consistent)
            fail("Q does not gather the column partition");
    }

    // P^{-1} A Q = blocks, checked multiplication-only as A Q = P * blocks.
    if (total_rows == m && total_cols == n) {
        IntMatrix expected = multiply(d.p, direct_sum(d.blocks));
        if (expected != apply_column_permutation(a, d.q))
            fail("product mismatch");
    }

    if (d.decomposable != (d.blocks.size() >= 2))
        fail("decomposable flag inconsistent with block count");

    return report;
}

std::optional<BruteForceSplit> decomposable_brute_force(const IntMatrix &h) {
    const std::size_t m = h.rows(), n = h.cols();
    if (m > 12 || n > 12)
        throw std::invalid_argument(
            "decomposable_brute_force: enumeration guard exceeded (12x12)");
    if (!is_hnf(h))
        throw std::invalid_argument("decomposable_brute_force: not in HNF");
    for (std::size_t i = 0; i < m; ++i)
        if (h.is_zero_row(i))
            throw std::invalid_argument(
                "decomposable_brute_force: not of full row rank");
    for (std::size_t j = 0; j < n; ++j)
        if (h.is_zero_column(j))
            throw ZeroColumnError(j + 1);

    if (m < 2)
        return std::nullopt; // no way to split the rows

    std::vector<std::uint32_t> row_support(m, 0);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (h(i, j) != 0)
                row_support[i] |= std::uint32_t{1} << j;

    // For a column subset S the row side is forced: a row lies in T iff its
    // support is inside S, and the split is valid iff no row straddles S.
    const std::uint32_t full_cols = (std::uint32_t{1} << n) - 1;
    for (std::uint32_t s = 1; s < full_cols; ++s) {
        std::uint32_t t = 0;
        bool valid = true;
        for (std::size_t i = 0; valid && i < m; ++i) {
            if ((row_support[i] & ~s) == 0)
                t |= std::uint32_t{1} << i;
            else if ((row_support[i] & s) != 0)
                valid = false; // row straddles the column split
        }
        if (!valid || t == 0 || t == (std::uint32_t{1} << m) - 1)
            continue;
        BruteForceSplit split;
        for (std::size_t i = 0; i < m; ++i)
            if (t & (std::uint32_t{1} << i))
                split.rows.push_back(i + 1);
        for (std::size_t j = 0; j < n; ++j)
            if (s & (std::uint32_t{1} << j))
                split.cols.push_back(j + 1);
        return split;
    }
    return std::nullopt;
}

bool decomposability_equivalence_check(const IntMatrix &a) {
    if (a.rows() > 8 || a.cols() > 8)
        throw std::invalid_argument(
            "decomposability_equivalence_check: guard exceeded (8x8)");
    bool via_criterion = is_decomposable(a);
    bool via_enumeration =
        decomposable_brute_force(hermite_normal_form(a).h).has_value();
    return via_criterion == via_enumeration;
}

IntMatrix remove_zero_rows(const IntMatrix &a) {
    std::vector<std::size_t> keep;
    for (std::size_t i = 0; i < a.rows(); ++i)
        if (!a.is_zero_row(i))
            keep.push_back(i);
    if (keep.empty())
        throw std::invalid_argument("remove_zero_rows: all rows are zero");
    IntMatrix out(keep.size(), a.cols());
    for (std::size_t i = 0; i < keep.size(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            out(i, j) = a(keep[i], j);
    return out;
}

} // namespace intdecomp
