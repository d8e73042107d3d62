#pragma once

#include "snailhom/matrix.hpp"

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <vector>

namespace snailhom {

/// U * A * V = D with D diagonal, d_i | d_{i+1}, U and V invertible over
/// the ring. Over Q and F_p the same pipeline degenerates to Gaussian
/// elimination and D has 0/1 diagonal.
struct SmithDecomposition {
    ExactMatrix U, D, V;
    int rank; // number of nonzero diagonal entries
};

namespace detail {

inline void swap_rows(ExactMatrix& m, int a, int b)
{
    if (a == b) return;
    for (int j = 0; j < m.cols(); ++j) std::swap(m.at(a, j), m.at(b, j));
}

inline void swap_cols(ExactMatrix& m, int a, int b)
{
    if (a == b) return;
    for (int i = 0; i < m.rows(); ++i) std::swap(m.at(i, a), m.at(i, b));
}

// row_a -= q * row_b
inline void row_axpy(ExactMatrix& m, int a, int b, const Rat& q)
{
    if (q == 0) return;
    for (int j = 0; j < m.cols(); ++j)
        m.set(a, j, m.at(a, j) - q * m.at(b, j));
}

inline void col_axpy(ExactMatrix& m, int a, int b, const Rat& q)
{
    if (q == 0) return;
    for (int i = 0; i < m.rows(); ++i)
        m.set(i, a, m.at(i, a) - q * m.at(i, b));
}

inline void scale_row(ExactMatrix& m, int a, const Rat& u)
{
    for (int j = 0; j < m.cols(); ++j) m.set(a, j, m.at(a, j) * u);
}

} // namespace detail

inline SmithDecomposition smith(const ExactMatrix& a)
{
    const Ring ring = a.ring();
    const int m = a.rows(), n = a.cols();
    ExactMatrix d = a;
    ExactMatrix u = ExactMatrix::identity(ring, m);
    ExactMatrix v = ExactMatrix::identity(ring, n);
    const int k = std::min(m, n);

    auto diagonalize = [&]() {
        for (int t = 0; t < k; ++t) {
            for (;;) {
                // smallest nonzero pivot in the trailing submatrix
                int pi = -1, pj = -1;
                Int best = 0;
                for (int i = t; i < m; ++i)
                    for (int j = t; j < n; ++j) {
                        if (d.at(i, j) == 0) continue;
                        Int sz = ring.euclid_size(d.at(i, j));
                        if (pi < 0 || sz < best) { pi = i; pj = j; best = sz; }
                    }
                if (pi < 0) return; // trailing block is zero, done
                detail::swap_rows(d, t, pi);
                detail::swap_rows(u, t, pi);
                detail::swap_cols(d, t, pj);
                detail::swap_cols(v, t, pj);

                bool remainder = false;
                for (int i = t + 1; i < m; ++i) {
                    if (d.at(i, t) == 0) continue;
                    Rat q = ring.euclid_quot(d.at(i, t), d.at(t, t));
                    detail::row_axpy(d, i, t, q);
                    detail::row_axpy(u, i, t, q);
                    if (d.at(i, t) != 0) remainder = true;
                }
                if (remainder) continue; // a smaller pivot appeared
                for (int j = t + 1; j < n; ++j) {
                    if (d.at(t, j) == 0) continue;
                    Rat q = ring.euclid_quot(d.at(t, j), d.at(t, t));
                    detail::col_axpy(d, j, t, q);
                    detail::col_axpy(v, j, t, q);
                    if (d.at(t, j) != 0) remainder = true;
                }
                if (!remainder) break;
            }
        }
    };

    diagonalize();

    // unit-normalize pivots: positive over Z, 1 over fields
    auto normalize_pivots = [&]() {
        for (int t = 0; t < k; ++t) {
            const Rat& p = d.at(t, t);
            if (p == 0) continue;
            if (ring.is_field()) {
                Rat inv = ring.div(Rat(1), p);
                detail::scale_row(d, t, inv);
                detail::scale_row(u, t, inv);
            } else if (p < 0) {
                detail::scale_row(d, t, Rat(-1));
                detail::scale_row(u, t, Rat(-1));
            }
        }
    };
    normalize_pivots();

    int rank = 0;
    while (rank < k && d.at(rank, rank) != 0) ++rank;
    for (int t = rank; t < k; ++t)
        if (d.at(t, t) != 0) throw std::logic_error("smith: nonzero pivot after zero");

    // enforce the divisibility chain: replace each violating pair
    // (d_i, d_j) by (gcd, lcm) with a local 2x2 transform
    auto fix_pair = [&](int i, int j) {
        if (ring.divides(d.at(i, i), d.at(j, j))) return;
        detail::col_axpy(d, i, j, Rat(-1)); // col_i += col_j, drops d_j at (j,i)
        detail::col_axpy(v, i, j, Rat(-1));
        for (;;) { // euclid on rows i,j in column i
            Rat q = ring.euclid_quot(d.at(j, i), d.at(i, i));
            detail::row_axpy(d, j, i, q);
            detail::row_axpy(u, j, i, q);
            if (d.at(j, i) == 0) break;
            detail::swap_rows(d, i, j);
            detail::swap_rows(u, i, j);
        }
        // pivot is now the gcd; it divides the stray entry at (i,j)
        Rat q = ring.div(d.at(i, j), d.at(i, i));
        detail::col_axpy(d, j, i, q);
        detail::col_axpy(v, j, i, q);
    };
    for (int i = 0; i < rank; ++i)
        for (int j = i + 1; j < rank; ++j) fix_pair(i, j);
    normalize_pivots();

    return SmithDecomposition{u, d, v, rank};
}

/// Solver for row-vector systems X * A = B over the ring, with the Smith
/// decomposition computed once and reused. Also exposes the saturated
/// basis of the left kernel {x : x * A = 0}.
class SmithSolver {
public:
    explicit SmithSolver(ExactMatrix a) : a_(std::move(a)), s_(smith(a_)) {}

    const ExactMatrix& matrix() const { return a_; }
    const SmithDecomposition& decomposition() const { return s_; }
    int rank() const { return s_.rank; }

    std::optional<ExactMatrix> solve(const ExactMatrix& b) const
    {
        const Ring& ring = a_.ring();
        const int m = a_.rows(), n = a_.cols();
        if (b.cols() != n) throw std::invalid_argument("solve: rhs column mismatch");
        ExactMatrix c = b * s_.V;
        ExactMatrix y(ring, b.rows(), m);
        const int k = std::min(m, n);
        for (int i = 0; i < b.rows(); ++i) {
            for (int j = 0; j < n; ++j) {
                if (j < k && s_.D.at(j, j) != 0) {
                    if (!ring.divides(s_.D.at(j, j), c.at(i, j))) return std::nullopt;
                    y.at(i, j) = ring.div(c.at(i, j), s_.D.at(j, j));
                } else if (c.at(i, j) != 0) {
                    return std::nullopt;
                }
            }
        }
        return y * s_.U;
    }

    /// Rows span (saturated, over Z) the left kernel of A.
    ExactMatrix kernel_basis() const
    {
        const int m = a_.rows(), n = a_.cols();
        const int k = std::min(m, n);
        std::vector<int> idx;
        for (int t = 0; t < m; ++t)
            if (t >= k || s_.D.at(t, t) == 0) idx.push_back(t);
        ExactMatrix z(a_.ring(), static_cast<int>(idx.size()), m);
        for (int r = 0; r < static_cast<int>(idx.size()); ++r)
            for (int j = 0; j < m; ++j) z.at(r, j) = s_.U.at(idx[r], j);
        return z;
    }

private:
    ExactMatrix a_;
    SmithDecomposition s_;
};

inline std::optional<ExactMatrix> solve_left(const ExactMatrix& a, const ExactMatrix& b)
{
    return SmithSolver(a).solve(b);
}

inline ExactMatrix left_kernel(const ExactMatrix& a)
{
    return SmithSolver(a).kernel_basis();
}

/// Exact inverse of a matrix invertible over the ring.
inline std::optional<ExactMatrix> inverse(const ExactMatrix& m)
{
    if (m.rows() != m.cols()) return std::nullopt;
    return solve_left(m, ExactMatrix::identity(m.ring(), m.rows()));
}

} // namespace snailhom
