#pragma once

#include "snailhom/smith.hpp"

#include <optional>
#include <stdexcept>
#include <vector>

namespace snailhom {

/// Joint linear system over unknown matrices X_0, ..., X_{k-1}:
///
///   for each condition i:   sum_t  A_ti . X_{u(t)} . B_ti  ==  C_i
///   modulo the row span of a relations matrix R_i.
///
/// Everything is vectorized through vec(A X B) = vec(X) (A^T kron B)
/// and solved over the ring in one Smith pass. The solution space
/// (particular + homogeneous generators) is exposed so callers can
/// sample random solutions — commuting squares, d^2 = 0, nullhomotopy
/// equations and hom lattices are all instances of this shape.
class MatrixSystem {
public:
    explicit MatrixSystem(Ring ring) : ring_(ring) {}

    int add_unknown(int rows, int cols)
    {
        unknowns_.push_back({rows, cols});
        return static_cast<int>(unknowns_.size()) - 1;
    }

    /// New condition with right-hand side c, to hold modulo rowspan(rels).
    /// Pass a 0 x cols matrix as rels for an exact condition.
    int add_condition(ExactMatrix c, ExactMatrix rels)
    {
        if (rels.cols() != c.cols())
            throw std::invalid_argument("condition relations column mismatch");
        conditions_.push_back({std::move(c), std::move(rels), {}});
        return static_cast<int>(conditions_.size()) - 1;
    }

    /// Adds the term A . X_u . B to condition `cond`.
    void add_term(int cond, int unknown, ExactMatrix a, ExactMatrix b)
    {
        auto& cd = conditions_.at(cond);
        const auto& sh = unknowns_.at(unknown);
        if (a.cols() != sh.rows || b.rows() != sh.cols)
            throw std::invalid_argument("term shape does not match unknown");
        if (a.rows() != cd.rhs.rows() || b.cols() != cd.rhs.cols())
            throw std::invalid_argument("term shape does not match condition");
        cd.terms.push_back({unknown, std::move(a), std::move(b)});
    }

    struct Solution {
        std::vector<ExactMatrix> particular;               // one matrix per unknown
        std::vector<std::vector<ExactMatrix>> homogeneous; // generators of the kernel
    };

    std::optional<Solution> solve() const
    {
        // layout: unknowns first, then one slack block per condition
        std::vector<Shape> cols = unknowns_;
        std::vector<int> slack_of;
        for (const auto& cd : conditions_) {
            slack_of.push_back(static_cast<int>(cols.size()));
            cols.push_back({cd.rhs.rows(), cd.rels.rows()});
        }
        std::vector<int> offset(cols.size() + 1, 0);
        for (size_t i = 0; i < cols.size(); ++i)
            offset[i + 1] = offset[i] + cols[i].rows * cols[i].cols;
        const int nvar = offset.back();

        int ncons = 0;
        std::vector<int> cons_offset;
        for (const auto& cd : conditions_) {
            cons_offset.push_back(ncons);
            ncons += cd.rhs.rows() * cd.rhs.cols();
        }

        ExactMatrix big(ring_, nvar, ncons);
        ExactMatrix rhs(ring_, 1, ncons);
        for (size_t ci = 0; ci < conditions_.size(); ++ci) {
            const auto& cd = conditions_[ci];
            auto place = [&](int unknown, const ExactMatrix& a, const ExactMatrix& b) {
                ExactMatrix blk = ExactMatrix::kron(a.transposed(), b);
                for (int r = 0; r < blk.rows(); ++r)
                    for (int c = 0; c < blk.cols(); ++c)
                        if (blk.at(r, c) != 0)
                            big.set(offset[unknown] + r, cons_offset[ci] + c,
                                    big.at(offset[unknown] + r, cons_offset[ci] + c) + blk.at(r, c));
            };
            for (const auto& t : cd.terms) place(t.unknown, t.a, t.b);
            if (cd.rels.rows() > 0)
                place(slack_of[ci], ExactMatrix::identity(ring_, cd.rhs.rows()), cd.rels);
            ExactMatrix v = cd.rhs.vec_row();
            for (int c = 0; c < v.cols(); ++c) rhs.at(0, cons_offset[ci] + c) = v.at(0, c);
        }

        SmithSolver solver(big);
        auto part = solver.solve(rhs);
        if (!part) return std::nullopt;
        ExactMatrix hom = solver.kernel_basis();

        Solution out;
        for (size_t u = 0; u < unknowns_.size(); ++u)
            out.particular.push_back(extract(*part, 0, static_cast<int>(u), offset));
        for (int h = 0; h < hom.rows(); ++h) {
            std::vector<ExactMatrix> gen;
            bool nonzero = false;
            for (size_t u = 0; u < unknowns_.size(); ++u) {
                gen.push_back(extract(hom, h, static_cast<int>(u), offset));
                nonzero = nonzero || !gen.back().is_zero();
            }
            if (nonzero) out.homogeneous.push_back(std::move(gen));
        }
        return out;
    }

private:
    struct Shape {
        int rows, cols;
    };
    struct Term {
        int unknown;
        ExactMatrix a, b;
    };
    struct Condition {
        ExactMatrix rhs;
        ExactMatrix rels;
        std::vector<Term> terms;
    };

    ExactMatrix extract(const ExactMatrix& flat, int row, int u, const std::vector<int>& offset) const
    {
        const auto& sh = unknowns_[u];
        ExactMatrix m(ring_, sh.rows, sh.cols);
        for (int i = 0; i < sh.rows; ++i)
            for (int j = 0; j < sh.cols; ++j)
                m.at(i, j) = flat.at(row, offset[u] + i * sh.cols + j);
        return m;
    }

    Ring ring_;
    std::vector<Shape> unknowns_;
    std::vector<Condition> conditions_;
};

} // namespace snailhom
