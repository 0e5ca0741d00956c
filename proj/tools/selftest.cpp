#include "selftest.hpp"

#include <random>
#include <vector>

#include "intdecomp/decompose.hpp"
#include "intdecomp/graph.hpp"
#include "intdecomp/hermite.hpp"
#include "intdecomp/matrix.hpp"

namespace intdecomp::selftest {

namespace {

// Reference vectors for the 3x5 example that exercises every stage.
const IntMatrix kA{{2, -4, 2, 5, -6}, {2, -2, 2, 5, -3}, {0, -2, 1, 2, -3}};
const IntMatrix kH{{2, 0, 0, 1, 0}, {0, 2, 0, 0, 3}, {0, 0, 1, 2, 0}};
const IntMatrix kP{{1, -2, 2}, {1, -1, 2}, {0, -1, 1}};
const IntMatrix kPInv{{1, 0, -2}, {-1, 1, 0}, {-1, 1, 1}};
const IntMatrix kB{{4, 0, 0, 2, 0},
                   {0, 4, 0, 0, 6},
                   {0, 0, 1, 2, 0},
                   {2, 0, 2, 5, 0},
                   {0, 6, 0, 0, 9}};
const IntMatrix kL{{2, 0, 0, -2, 0},
                   {0, 6, 0, 0, -6},
                   {0, 0, 2, -2, 0},
                   {-2, 0, -2, 4, 0},
                   {0, -6, 0, 0, 6}};
const IntMatrix kR{{1, 0, 0, -1, 0},
                   {0, 1, 0, 0, -1},
                   {0, 0, 1, -1, 0},
                   {0, 0, 0, 0, 0},
                   {0, 0, 0, 0, 0}};
const ComponentPartition kComponents{{{1, 3, 4}, {2, 5}}};
const IntMatrix kBlock1{{2, 0, 1}, {0, 1, 2}};
const IntMatrix kBlock2{{2, 3}};
const std::vector<std::size_t> kQ{1, 3, 4, 2, 5};

struct Reporter {
    std::ostream &out;
    int failures = 0;

    void check(bool ok, const char *name) {
        out << (ok ? "ok   " : "FAIL ") << name << "\n";
        failures += ok ? 0 : 1;
    }
};

long rand_in(std::mt19937_64 &rng, long lo, long hi) {
    return std::uniform_int_distribution<long>(lo, hi)(rng);
}

IntMatrix random_matrix(std::mt19937_64 &rng, std::size_t m, std::size_t n) {
    IntMatrix a(m, n);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < n; ++j)
            a(i, j) = rand_in(rng, -3, 3);
    return a;
}

bool usable(const IntMatrix &a) {
    for (std::size_t j = 0; j < a.cols(); ++j)
        if (a.is_zero_column(j))
            return false;
    return hermite_normal_form(a).rank == a.rows();
}

} // namespace

int run(unsigned long seed, std::ostream &out) {
    Reporter r{out};

    HnfResult hnf = hermite_normal_form(kA);
    r.check(hnf.h == kH, "hermite: normal form");
    r.check(hnf.p == kP, "hermite: witness P");
    r.check(hnf.p_inverse == kPInv, "hermite: witness P_inverse");
    r.check(multiply(hnf.p, hnf.h) == kA, "hermite: P*H reproduces A");
    r.check(is_unimodular(kP), "hermite: reference P is unimodular");

    r.check(gram(kH) == kB, "gram matrix");
    WeightedGraph g(kB);
    r.check(laplacian(g) == kL, "laplacian");
    r.check(rref(RatMatrix(kL)) == RatMatrix(kR), "echelon form of L");
    r.check(components_via_rref(g) == kComponents, "components via echelon");
    r.check(components_via_zero_pattern(g) == kComponents,
            "components via zero pattern");

    Decomposition d = hnf_decomposition(kA);
    r.check(d.decomposable, "decompose: verdict");
    r.check(d.blocks.size() == 2 && d.blocks[0] == kBlock1 &&
                d.blocks[1] == kBlock2,
            "decompose: blocks");
    r.check(d.q.one_based() == kQ, "decompose: column permutation");
    r.check(d.column_partition == kComponents, "decompose: column partition");
    r.check(verify_decomposition(kA, d).ok, "decompose: verification");

    auto split = decomposable_brute_force(kH);
    r.check(split && split->rows == std::vector<std::size_t>{1, 3} &&
                split->cols == std::vector<std::size_t>{1, 3, 4},
            "oracle: enumeration split");
    auto witness = reducibility_witness_brute_force(kB);
    r.check(witness == std::vector<std::size_t>{1, 3, 4},
            "oracle: reducibility witness");

    std::mt19937_64 rng(seed);
    bool equivalence = true;
    for (int it = 0; it < 250 && equivalence; ++it) {
        std::size_t m = static_cast<std::size_t>(rand_in(rng, 1, 3));
        std::size_t n = static_cast<std::size_t>(rand_in(rng, m, 5));
        IntMatrix a = random_matrix(rng, m, n);
        if (!usable(a))
            continue;
        equivalence = decomposability_equivalence_check(a);
    }
    r.check(equivalence, "randomized: criterion matches enumeration");

    bool hnf_ok = true;
    for (int it = 0; it < 250 && hnf_ok; ++it) {
        std::size_t m = static_cast<std::size_t>(rand_in(rng, 1, 4));
        std::size_t n = static_cast<std::size_t>(rand_in(rng, 1, 5));
        IntMatrix a = random_matrix(rng, m, n);
        HnfResult hr = hermite_normal_form(a);
        hnf_ok = is_hnf(hr.h) && multiply(hr.p, hr.h) == a &&
                 multiply(hr.p, hr.p_inverse) == IntMatrix::identity(m) &&
                 hermite_normal_form(hr.h).h == hr.h;
    }
    r.check(hnf_ok, "randomized: hermite witnesses");

    out << (r.failures == 0 ? "selftest passed" : "selftest FAILED") << "\n";
    return r.failures;
}

} // namespace intdecomp::selftest
