#include "intdecomp/hermite.hpp"

#include <cstddef>
#include <utility>

namespace intdecomp {

namespace {

// Working state of the reduction. The invariants
//     u * a == w   and   p == u^{-1}
// hold after every elementary step, so at the end a == p * w.
struct Reduction {
    IntMatrix w, u, p;

    explicit Reduction(const IntMatrix &a)
        : w(a), u(IntMatrix::identity(a.rows())),
          p(IntMatrix::identity(a.rows())) {}

    std::size_t rows() const { return w.rows(); }
    std::size_t cols() const { return w.cols(); }

    void swap_rows(std::size_t r0, std::size_t r1) {
        for (std::size_t j = 0; j < cols(); ++j)
            std::swap(w(r0, j), w(r1, j));
        for (std::size_t j = 0; j < rows(); ++j) {
            std::swap(u(r0, j), u(r1, j));
            std::swap(p(j, r0), p(j, r1));
        }
    }

    void negate_row(std::size_t r) {
        for (std::size_t j = 0; j < cols(); ++j)
            w(r, j) = -w(r, j);
        for (std::size_t j = 0; j < rows(); ++j) {
            u(r, j) = -u(r, j);
            p(j, r) = -p(j, r);
        }
    }

    // row dst += c * row src; the inverse op acts on the columns of p.
    void add_row_multiple(std::size_t dst, std::size_t src, const Int &c) {
        for (std::size_t j = 0; j < cols(); ++j)
            w(dst, j) += c * w(src, j);
        for (std::size_t j = 0; j < rows(); ++j) {
            u(dst, j) += c * u(src, j);
            p(j, src) -= c * p(j, dst);
        }
    }

    // Combine rows r0, r1 so that w(r0, col) becomes gcd(a, b) > 0 and
    // w(r1, col) becomes 0, via the det-1 transform
    //   [ s     t   ]          with  s*a + t*b = g,
    //   [-b/g   a/g ]
    // whose inverse [[a/g, -t], [b/g, s]] is applied to the columns of p.
    void gcd_combine(std::size_t r0, std::size_t r1, std::size_t col) {
        const Int a = w(r0, col), b = w(r1, col);
        Int g, s, t;
        mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), a.get_mpz_t(),
                   b.get_mpz_t());
        Int x = a / g, y = b / g;
        for (std::size_t j = 0; j < cols(); ++j) {
            Int w0 = s * w(r0, j) + t * w(r1, j);
            Int w1 = x * w(r1, j) - y * w(r0, j);
            w(r0, j) = std::move(w0);
            w(r1, j) = std::move(w1);
        }
        for (std::size_t j = 0; j < rows(); ++j) {
            Int u0 = s * u(r0, j) + t * u(r1, j);
            Int u1 = x * u(r1, j) - y * u(r0, j);
            u(r0, j) = std::move(u0);
            u(r1, j) = std::move(u1);
            Int p0 = x * p(j, r0) + y * p(j, r1);
            Int p1 = s * p(j, r1) - t * p(j, r0);
            p(j, r0) = std::move(p0);
            p(j, r1) = std::move(p1);
        }
    }
};

// Floor quotient, so the remainder lands in [0, den) for den > 0.
Int floor_div(const Int &num, const Int &den) {
    Int q;
    mpz_fdiv_q(q.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    return q;
}

} // namespace

HnfResult hermite_normal_form(const IntMatrix &a) {
    const std::size_t m = a.rows(), n = a.cols();
    Reduction red(a);
    std::vector<std::size_t> pivots;

    std::size_t row = 0;
    for (std::size_t col = 0; col < n && row < m; ++col) {
        std::size_t k = row;
        while (k < m && red.w(k, col) == 0)
            ++k;
        if (k == m)
            continue;
        if (k != row)
            red.swap_rows(row, k);
        for (std::size_t i = row + 1; i < m; ++i)
            if (red.w(i, col) != 0)
                red.gcd_combine(row, i, col);
        if (red.w(row, col) < 0)
            red.negate_row(row);
        for (std::size_t i = 0; i < row; ++i) {
            Int q = floor_div(red.w(i, col), red.w(row, col));
            if (q != 0)
                red.add_row_multiple(i, row, -q);
        }
        pivots.push_back(col);
        ++row;
    }

    std::size_t rank = pivots.size();
    return HnfResult{std::move(red.w), std::move(red.p), std::move(red.u),
                     std::move(pivots), rank};
}

bool is_hnf(const IntMatrix &h) {
    const std::size_t m = h.rows(), n = h.cols();
    std::vector<std::size_t> pivots;
    bool seen_zero_row = false;
    for (std::size_t i = 0; i < m; ++i) {
        std::size_t j = 0;
        while (j < n && h(i, j) == 0)
            ++j;
        if (j == n) {
            seen_zero_row = true;
            continue;
        }
        if (seen_zero_row)
            return false; // nonzero row below a zero row
        if (!pivots.empty() && j <= pivots.back())
            return false; // pivots must move strictly right
        if (h(i, j) <= 0)
            return false;
        for (std::size_t k = 0; k < i; ++k)
            if (h(k, j) < 0 || h(k, j) >= h(i, j))
                return false;
        pivots.push_back(j);
    }
    return true;
}

IntMatrix strip_zero_rows(const HnfResult &h) {
    if (h.rank == 0)
        throw std::invalid_argument("strip_zero_rows: rank is zero");
    IntMatrix out(h.rank, h.h.cols());
    for (std::size_t i = 0; i < h.rank; ++i)
        for (std::size_t j = 0; j < h.h.cols(); ++j)
            out(i, j) = h.h(i, j);
    return out;
}

} // namespace intdecomp
