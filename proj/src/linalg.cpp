#include "kgc/linalg.hpp"

#include "kgc/errors.hpp"

#include <string>
#include <utility>

namespace kgc {

LatticeBasis::LatticeBasis(IntMatrix rows, std::size_t ambient) {
    if (rows.cols() != ambient)
        throw dimension_error("LatticeBasis: rows live in Z^" + std::to_string(rows.cols()) +
                              ", ambient is Z^" + std::to_string(ambient));
    if (kgc::rank(rows) != rows.rows())
        throw invalid_input_error("LatticeBasis: rows are linearly dependent");
    rows_ = std::move(rows);
    ambient_ = ambient;
}

LatticeBasis LatticeBasis::empty(std::size_t ambient) {
    return trusted(IntMatrix(0, ambient), ambient);
}

LatticeBasis LatticeBasis::trusted(IntMatrix rows, std::size_t ambient) {
    LatticeBasis b;
    b.rows_ = std::move(rows);
    b.ambient_ = ambient;
    return b;
}

Integer det(const IntMatrix& m) {
    if (!m.is_square())
        throw dimension_error("det: matrix is " + std::to_string(m.rows()) + "x" +
                              std::to_string(m.cols()) + ", not square");
    const std::size_t n = m.rows();
    if (n == 0)
        return 1;
    IntMatrix w = m;
    int sign = 1;
    Integer prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (w(k, k) == 0) {
            std::size_t piv = n;
            for (std::size_t i = k + 1; i < n; ++i)
                if (w(i, k) != 0) {
                    piv = i;
                    break;
                }
            if (piv == n)
                return 0;
            w.swap_rows(k, piv);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j)
                // Sylvester identity: this quotient is exact, the result is a
                // (k+2)-minor of the input.
                w(i, j) = (w(i, j) * w(k, k) - w(i, k) * w(k, j)) / prev;
            w(i, k) = 0;
        }
        prev = w(k, k);
    }
    return sign > 0 ? w(n - 1, n - 1) : Integer(-w(n - 1, n - 1));
}

std::size_t rank(const IntMatrix& m) {
    IntMatrix w = m;
    const std::size_t nr = w.rows(), nc = w.cols();
    std::size_t r = 0;
    Integer prev = 1;
    for (std::size_t c = 0; c < nc && r < nr; ++c) {
        std::size_t piv = nr;
        for (std::size_t i = r; i < nr; ++i)
            if (w(i, c) != 0) {
                piv = i;
                break;
            }
        if (piv == nr)
            continue;
        w.swap_rows(r, piv);
        for (std::size_t i = r + 1; i < nr; ++i) {
            for (std::size_t j = c + 1; j < nc; ++j)
                w(i, j) = (w(i, j) * w(r, c) - w(i, c) * w(r, j)) / prev;
            w(i, c) = 0;
        }
        prev = w(r, c);
        ++r;
    }
    return r;
}

LatticeBasis hnf(const IntMatrix& row_span) {
    IntMatrix h = row_span;
    const std::size_t nr = h.rows(), nc = h.cols();
    std::size_t r = 0;
    for (std::size_t c = 0; c < nc && r < nr; ++c) {
        // Reduce column c below row r to a single entry by repeated
        // division: move the smallest |entry| up, subtract quotients from the
        // rest.  This is the gcd algorithm run on whole rows.
        while (true) {
            std::size_t best = nr;
            for (std::size_t i = r; i < nr; ++i)
                if (h(i, c) != 0 && (best == nr || iabs(h(i, c)) < iabs(h(best, c))))
                    best = i;
            if (best == nr)
                break;
            h.swap_rows(r, best);
            bool remainder = false;
            for (std::size_t i = r + 1; i < nr; ++i) {
                if (h(i, c) == 0)
                    continue;
                Integer q = h(i, c) / h(r, c);
                h.add_row_multiple(i, r, -q);
                if (h(i, c) != 0)
                    remainder = true;
            }
            if (!remainder)
                break;
        }
        if (h(r, c) == 0)
            continue; // no pivot in this column
        if (h(r, c) < 0)
            h.negate_row(r);
        // Canonical window: entries above the pivot land in [0, pivot).
        for (std::size_t i = 0; i < r; ++i) {
            Integer q = fdiv(h(i, c), h(r, c));
            h.add_row_multiple(i, r, -q);
        }
        ++r;
    }
    return LatticeBasis::trusted(h.block(0, r, 0, nc), nc);
}

LatticeBasis hnf(const LatticeBasis& basis) { return hnf(basis.rows()); }

SnfResult snf(const IntMatrix& a) {
    SnfResult res;
    res.d = a;
    const std::size_t nr = a.rows(), nc = a.cols();
    res.s = IntMatrix::identity(nr);
    res.s_inv = IntMatrix::identity(nr);
    res.t = IntMatrix::identity(nc);
    res.t_inv = IntMatrix::identity(nc);
    IntMatrix& d = res.d;

    // Every elementary operation on d is mirrored on the transform it came
    // from and, inverted, on that transform's inverse accumulator, so
    // s*a*t = d, s*s_inv = 1, t*t_inv = 1 hold at every step.
    auto row_swap = [&](std::size_t i, std::size_t j) {
        d.swap_rows(i, j);
        res.s.swap_rows(i, j);
        res.s_inv.swap_cols(i, j);
    };
    auto row_add = [&](std::size_t dst, std::size_t src, const Integer& k) {
        d.add_row_multiple(dst, src, k);
        res.s.add_row_multiple(dst, src, k);
        res.s_inv.add_col_multiple(src, dst, -k);
    };
    auto row_neg = [&](std::size_t i) {
        d.negate_row(i);
        res.s.negate_row(i);
        res.s_inv.negate_col(i);
    };
    auto col_swap = [&](std::size_t i, std::size_t j) {
        d.swap_cols(i, j);
        res.t.swap_cols(i, j);
        res.t_inv.swap_rows(i, j);
    };
    auto col_add = [&](std::size_t dst, std::size_t src, const Integer& k) {
        d.add_col_multiple(dst, src, k);
        res.t.add_col_multiple(dst, src, k);
        res.t_inv.add_row_multiple(src, dst, -k);
    };

    const std::size_t tmax = nr < nc ? nr : nc;
    std::size_t t = 0;
    while (t < tmax) {
        // Smallest |entry| of the trailing submatrix becomes the pivot.
        std::size_t bi = nr, bj = nc;
        for (std::size_t i = t; i < nr; ++i)
            for (std::size_t j = t; j < nc; ++j)
                if (d(i, j) != 0 && (bi == nr || iabs(d(i, j)) < iabs(d(bi, bj)))) {
                    bi = i;
                    bj = j;
                }
        if (bi == nr)
            break; // submatrix is zero
        row_swap(t, bi);
        col_swap(t, bj);

        bool clean = true;
        for (std::size_t i = t + 1; i < nr; ++i)
            if (d(i, t) != 0) {
                Integer q = d(i, t) / d(t, t);
                row_add(i, t, -q);
                if (d(i, t) != 0)
                    clean = false; // remainder smaller than pivot survives
            }
        for (std::size_t j = t + 1; j < nc; ++j)
            if (d(t, j) != 0) {
                Integer q = d(t, j) / d(t, t);
                col_add(j, t, -q);
                if (d(t, j) != 0)
                    clean = false;
            }
        if (!clean)
            continue; // re-pick: some remainder now beats the pivot

        // Divisibility: the pivot must divide the whole trailing submatrix,
        // or the diagonal would not form a chain.  Merging an offending row
        // into the pivot row lets the gcd loop above absorb it.
        Integer p = d(t, t);
        bool merged = false;
        for (std::size_t i = t + 1; i < nr && !merged; ++i)
            for (std::size_t j = t + 1; j < nc; ++j)
                if (d(i, j) % p != 0) {
                    row_add(t, i, 1);
                    merged = true;
                    break;
                }
        if (merged)
            continue;

        if (p < 0)
            row_neg(t);
        ++t;
    }

    res.rank = t;
    res.divisors.reserve(t);
    for (std::size_t i = 0; i < t; ++i)
        res.divisors.push_back(d(i, i));
    return res;
}

LatticeBasis kernel_lattice(const IntMatrix& a) {
    const std::size_t n = a.cols();
    IntMatrix w = a;
    IntMatrix u = IntMatrix::identity(n);
    std::size_t c = 0; // columns [0, c) have been consumed as pivots
    for (std::size_t r = 0; r < w.rows() && c < n; ++r) {
        while (true) {
            std::size_t best = n;
            for (std::size_t j = c; j < n; ++j)
                if (w(r, j) != 0 && (best == n || iabs(w(r, j)) < iabs(w(r, best))))
                    best = j;
            if (best == n)
                break;
            w.swap_cols(c, best);
            u.swap_cols(c, best);
            bool remainder = false;
            for (std::size_t j = c + 1; j < n; ++j) {
                if (w(r, j) == 0)
                    continue;
                Integer q = w(r, j) / w(r, c);
                w.add_col_multiple(j, c, -q);
                u.add_col_multiple(j, c, -q);
                if (w(r, j) != 0)
                    remainder = true;
            }
            if (!remainder)
                break;
        }
        if (c < n && w(r, c) != 0)
            ++c;
    }
    // Columns c.. of u are killed by every row of a; they are a basis of the
    // kernel because u is unimodular.  Saturation is automatic for integer
    // kernels.  HNF makes the returned basis canonical.
    IntMatrix k(n - c, n);
    for (std::size_t j = c; j < n; ++j)
        k.set_row(j - c, u.col(j));
    return hnf(k);
}

namespace {

// Pivot column of an HNF row (index of first nonzero).
std::size_t pivot_col(const IntMatrix& h, std::size_t r) {
    for (std::size_t c = 0; c < h.cols(); ++c)
        if (h(r, c) != 0)
            return c;
    return h.cols();
}

bool in_hnf_lattice(std::vector<Integer> w, const IntMatrix& h) {
    for (std::size_t r = 0; r < h.rows(); ++r) {
        std::size_t pc = pivot_col(h, r);
        if (pc == h.cols())
            continue;
        if (w[pc] % h(r, pc) != 0)
            return false;
        Integer q = w[pc] / h(r, pc);
        if (q != 0)
            for (std::size_t c = 0; c < h.cols(); ++c)
                w[c] -= q * h(r, c);
    }
    return is_zero_vector(w);
}

} // namespace

bool in_lattice(const std::vector<Integer>& v, const LatticeBasis& basis) {
    if (v.size() != basis.ambient())
        throw dimension_error("in_lattice: vector length " + std::to_string(v.size()) +
                              " vs ambient " + std::to_string(basis.ambient()));
    return in_hnf_lattice(v, hnf(basis).rows());
}

bool lattice_subset(const LatticeBasis& inner, const LatticeBasis& outer) {
    if (inner.ambient() != outer.ambient())
        throw dimension_error("lattice_subset: ambient mismatch");
    IntMatrix h = hnf(outer).rows();
    for (std::size_t i = 0; i < inner.rank(); ++i)
        if (!in_hnf_lattice(inner.vector(i), h))
            return false;
    return true;
}

bool lattice_equal(const LatticeBasis& a, const LatticeBasis& b) {
    if (a.ambient() != b.ambient())
        throw dimension_error("lattice_equal: ambients Z^" + std::to_string(a.ambient()) +
                              " vs Z^" + std::to_string(b.ambient()));
    return hnf(a).rows() == hnf(b).rows();
}

} // namespace kgc
