#include "intdecomp/graph.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <utility>

namespace intdecomp {

namespace {

// Sort vertices inside each component, order components by smallest member.
ComponentPartition canonical(std::vector<std::vector<std::size_t>> comps) {
    for (auto &c : comps)
        std::sort(c.begin(), c.end());
    std::sort(comps.begin(), comps.end(),
              [](const auto &a, const auto &b) { return a.front() < b.front(); });
    return ComponentPartition{std::move(comps)};
}

struct DisjointSet {
    std::vector<std::size_t> parent;

    explicit DisjointSet(std::size_t n) : parent(n) {
        std::iota(parent.begin(), parent.end(), std::size_t{0});
    }
    std::size_t find(std::size_t x) {
        while (parent[x] != x)
            x = parent[x] = parent[parent[x]];
        return x;
    }
    void unite(std::size_t a, std::size_t b) { parent[find(a)] = find(b); }
};

} // namespace

WeightedGraph::WeightedGraph(IntMatrix adjacency)
    : adjacency_(std::move(adjacency)) {
    if (!adjacency_.is_symmetric())
        throw std::invalid_argument("adjacency matrix must be symmetric");
}

std::vector<Int> degrees(const WeightedGraph &g) {
    const IntMatrix &b = g.adjacency();
    std::vector<Int> d(g.order());
    for (std::size_t i = 0; i < g.order(); ++i)
        for (std::size_t j = 0; j < g.order(); ++j)
            d[i] += b(i, j);
    return d;
}

IntMatrix laplacian(const WeightedGraph &g) {
    const IntMatrix &b = g.adjacency();
    std::vector<Int> d = degrees(g);
    IntMatrix l(g.order(), g.order());
    for (std::size_t i = 0; i < g.order(); ++i) {
        for (std::size_t j = 0; j < g.order(); ++j)
            l(i, j) = -b(i, j);
        l(i, i) += d[i];
    }
    return l;
}

RrefResult rref_with_pivots(const RatMatrix &m) {
    RatMatrix w = m;
    const std::size_t rows = w.rows(), cols = w.cols();
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < cols && row < rows; ++col) {
        std::size_t k = row;
        while (k < rows && w(k, col) == 0)
            ++k;
        if (k == rows)
            continue;
        if (k != row)
            for (std::size_t j = 0; j < cols; ++j)
                std::swap(w(row, j), w(k, j));
        Rat piv = w(row, col);
        for (std::size_t j = col; j < cols; ++j)
            w(row, j) /= piv;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == row || w(i, col) == 0)
                continue;
            Rat f = w(i, col);
            for (std::size_t j = col; j < cols; ++j)
                w(i, j) -= f * w(row, j);
        }
        pivots.push_back(col);
        ++row;
    }
    return RrefResult{std::move(w), std::move(pivots)};
}

RatMatrix rref(const RatMatrix &m) { return rref_with_pivots(m).m; }

RatMatrix rref(const IntMatrix &m) { return rref(RatMatrix(m)); }

namespace {

// Component sets read off the echelon form, or nullopt when they fail to
// cover each vertex exactly once.
std::optional<std::vector<std::vector<std::size_t>>>
rref_component_sets(const RrefResult &rr, std::size_t n) {
    std::vector<bool> is_pivot(n, false);
    for (std::size_t c : rr.pivot_cols)
        is_pivot[c] = true;

    // Non-pivot column j collects the vertices of j's component: the entry
    // in row i refers to the pivot column of row i, not to i itself.
    std::vector<std::vector<std::size_t>> comps;
    for (std::size_t j = 0; j < n; ++j) {
        if (is_pivot[j])
            continue;
        std::vector<std::size_t> comp{j + 1};
        for (std::size_t i = 0; i < rr.pivot_cols.size(); ++i)
            if (rr.m(i, j) != 0)
                comp.push_back(rr.pivot_cols[i] + 1);
        comps.push_back(std::move(comp));
    }

    std::vector<std::size_t> all;
    for (const auto &c : comps)
        all.insert(all.end(), c.begin(), c.end());
    std::sort(all.begin(), all.end());
    bool is_partition = all.size() == n;
    for (std::size_t i = 0; is_partition && i < all.size(); ++i)
        is_partition = all[i] == i + 1;
    if (!is_partition)
        return std::nullopt;
    return comps;
}

} // namespace

ComponentPartition components_via_rref(const WeightedGraph &g) {
    RrefResult rr = rref_with_pivots(RatMatrix(laplacian(g)));
    auto comps = rref_component_sets(rr, g.order());
    if (!comps)
        throw ConnectivityMismatchError(
            "component sets read from the Laplacian RREF do not partition "
            "the vertex set",
            std::move(rr.m), std::nullopt, components_via_zero_pattern(g));
    return canonical(std::move(*comps));
}

ConnectivityCrossCheck cross_check_components(const WeightedGraph &g) {
    const std::size_t n = g.order();
    ConnectivityCrossCheck out;
    out.zero_pattern = components_via_zero_pattern(g);

    RrefResult rr = rref_with_pivots(RatMatrix(laplacian(g)));
    out.laplacian_rank = rr.pivot_cols.size();
    out.rank_law_holds = out.laplacian_rank == n - out.zero_pattern.count();

    auto comps = rref_component_sets(rr, n);
    if (comps)
        out.via_rref = canonical(std::move(*comps));
    out.agreed = out.via_rref && *out.via_rref == out.zero_pattern;

    if (out.agreed != out.rank_law_holds)
        throw ConnectivityMismatchError(
            out.rank_law_holds
                ? "echelon components disagree with the zero pattern even "
                  "though rank(L) = n - t"
                : "echelon components match the zero pattern even though "
                  "rank(L) != n - t",
            std::move(rr.m), out.via_rref, out.zero_pattern);
    return out;
}

ComponentPartition components_via_zero_pattern(const WeightedGraph &g) {
    const IntMatrix &b = g.adjacency();
    const std::size_t n = g.order();
    DisjointSet dsu(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (b(i, j) != 0)
                dsu.unite(i, j);

    std::vector<std::vector<std::size_t>> groups(n);
    for (std::size_t v = 0; v < n; ++v)
        groups[dsu.find(v)].push_back(v + 1);
    std::vector<std::vector<std::size_t>> comps;
    for (auto &grp : groups)
        if (!grp.empty())
            comps.push_back(std::move(grp));
    return canonical(std::move(comps));
}

bool is_reducible(const IntMatrix &b) {
    return components_via_zero_pattern(WeightedGraph(b)).count() >= 2;
}

std::optional<std::vector<std::size_t>>
reducibility_witness_brute_force(const IntMatrix &b) {
    if (!b.is_symmetric())
        throw std::invalid_argument("reducibility witness: matrix not symmetric");
    const std::size_t n = b.rows();
    if (n > 20)
        throw std::invalid_argument(
            "reducibility witness: enumeration guard exceeded (n > 20)");

    // row_mask[i] marks the off-diagonal nonzeros of row i. A subset S is
    // a witness iff no member's edges leave S.
    std::vector<std::uint32_t> row_mask(n, 0);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (i != j && b(i, j) != 0)
                row_mask[i] |= std::uint32_t{1} << j;

    const std::uint32_t full = (n == 32) ? ~std::uint32_t{0}
                                         : ((std::uint32_t{1} << n) - 1);
    for (std::uint32_t s = 1; s < full; ++s) {
        bool ok = true;
        for (std::size_t i = 0; ok && i < n; ++i)
            if (s & (std::uint32_t{1} << i))
                ok = (row_mask[i] & ~s) == 0;
        if (ok) {
            std::vector<std::size_t> subset;
            for (std::size_t i = 0; i < n; ++i)
                if (s & (std::uint32_t{1} << i))
                    subset.push_back(i + 1);
            return subset;
        }
    }
    return std::nullopt;
}

} // namespace intdecomp
