#pragma once

#include "snailhom/ring.hpp"

#include <initializer_list>
#include <stdexcept>
#include <string>
#include <vector>

namespace snailhom {

/// Dense matrix over one of the base rings, row-major, entries kept in
/// canonical form. Morphisms act on row vectors, so composition of maps
/// is the plain matrix product in diagrammatic order. Zero-row and
/// zero-column matrices are first-class citizens.
class ExactMatrix {
public:
    ExactMatrix(Ring ring, int rows, int cols)
        : ring_(ring), rows_(rows), cols_(cols), a_(static_cast<size_t>(rows) * cols, Rat(0))
    {
        if (rows < 0 || cols < 0) throw std::invalid_argument("negative matrix dimension");
    }

    ExactMatrix(Ring ring, int rows, int cols, std::vector<Rat> entries)
        : ring_(ring), rows_(rows), cols_(cols), a_(std::move(entries))
    {
        if (a_.size() != static_cast<size_t>(rows) * cols)
            throw std::invalid_argument("entry count does not match dimensions");
        for (auto& v : a_) v = ring_.normalize(v);
    }

    static ExactMatrix from_rows(Ring ring, std::initializer_list<std::initializer_list<long long>> rows)
    {
        int r = static_cast<int>(rows.size());
        int c = r == 0 ? 0 : static_cast<int>(rows.begin()->size());
        std::vector<Rat> e;
        e.reserve(static_cast<size_t>(r) * c);
        for (auto& row : rows) {
            if (static_cast<int>(row.size()) != c)
                throw std::invalid_argument("ragged rows");
            for (long long v : row) e.emplace_back(v);
        }
        return ExactMatrix(ring, r, c, std::move(e));
    }

    static ExactMatrix identity(Ring ring, int n)
    {
        ExactMatrix m(ring, n, n);
        for (int i = 0; i < n; ++i) m.at(i, i) = 1;
        return m;
    }

    static ExactMatrix zero(Ring ring, int r, int c) { return ExactMatrix(ring, r, c); }

    const Ring& ring() const { return ring_; }
    int rows() const { return rows_; }
    int cols() const { return cols_; }

    const Rat& at(int i, int j) const { return a_[static_cast<size_t>(i) * cols_ + j]; }
    Rat& at(int i, int j) { return a_[static_cast<size_t>(i) * cols_ + j]; }

    void set(int i, int j, const Rat& v) { at(i, j) = ring_.normalize(v); }

    bool is_zero() const
    {
        for (const auto& v : a_)
            if (v != 0) return false;
        return true;
    }

    bool operator==(const ExactMatrix& o) const
    {
        return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_ && ring_ == o.ring_;
    }
    bool operator!=(const ExactMatrix& o) const { return !(*this == o); }

    ExactMatrix operator*(const ExactMatrix& o) const
    {
        if (cols_ != o.rows_) throw std::invalid_argument("matrix product shape mismatch");
        ExactMatrix r(ring_, rows_, o.cols_);
        for (int i = 0; i < rows_; ++i)
            for (int k = 0; k < cols_; ++k) {
                const Rat& aik = at(i, k);
                if (aik == 0) continue;
                for (int j = 0; j < o.cols_; ++j)
                    if (o.at(k, j) != 0) r.at(i, j) += aik * o.at(k, j);
            }
        for (auto& v : r.a_) v = ring_.normalize(v);
        return r;
    }

    ExactMatrix operator+(const ExactMatrix& o) const { return zip(o, +1); }
    ExactMatrix operator-(const ExactMatrix& o) const { return zip(o, -1); }

    ExactMatrix operator-() const
    {
        ExactMatrix r = *this;
        for (auto& v : r.a_) v = ring_.normalize(-v);
        return r;
    }

    ExactMatrix scaled(const Rat& s) const
    {
        ExactMatrix r = *this;
        for (auto& v : r.a_) v = ring_.normalize(v * s);
        return r;
    }

    ExactMatrix transposed() const
    {
        ExactMatrix r(ring_, cols_, rows_);
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
        return r;
    }

    /// Columns [c0, c1) as a new matrix.
    ExactMatrix col_slice(int c0, int c1) const
    {
        if (c0 < 0 || c1 < c0 || c1 > cols_) throw std::invalid_argument("bad column slice");
        ExactMatrix r(ring_, rows_, c1 - c0);
        for (int i = 0; i < rows_; ++i)
            for (int j = c0; j < c1; ++j) r.at(i, j - c0) = at(i, j);
        return r;
    }

    ExactMatrix row_slice(int r0, int r1) const
    {
        if (r0 < 0 || r1 < r0 || r1 > rows_) throw std::invalid_argument("bad row slice");
        ExactMatrix r(ring_, r1 - r0, cols_);
        for (int i = r0; i < r1; ++i)
            for (int j = 0; j < cols_; ++j) r.at(i - r0, j) = at(i, j);
        return r;
    }

    ExactMatrix row(int i) const { return row_slice(i, i + 1); }

    static ExactMatrix vstack(const ExactMatrix& a, const ExactMatrix& b)
    {
        if (a.cols_ != b.cols_ || a.ring_ != b.ring_)
            throw std::invalid_argument("vstack shape mismatch");
        ExactMatrix r(a.ring_, a.rows_ + b.rows_, a.cols_);
        for (int i = 0; i < a.rows_; ++i)
            for (int j = 0; j < a.cols_; ++j) r.at(i, j) = a.at(i, j);
        for (int i = 0; i < b.rows_; ++i)
            for (int j = 0; j < b.cols_; ++j) r.at(a.rows_ + i, j) = b.at(i, j);
        return r;
    }

    static ExactMatrix hstack(const ExactMatrix& a, const ExactMatrix& b)
    {
        if (a.rows_ != b.rows_ || a.ring_ != b.ring_)
            throw std::invalid_argument("hstack shape mismatch");
        ExactMatrix r(a.ring_, a.rows_, a.cols_ + b.cols_);
        for (int i = 0; i < a.rows_; ++i) {
            for (int j = 0; j < a.cols_; ++j) r.at(i, j) = a.at(i, j);
            for (int j = 0; j < b.cols_; ++j) r.at(i, a.cols_ + j) = b.at(i, j);
        }
        return r;
    }

    static ExactMatrix block_diag(const ExactMatrix& a, const ExactMatrix& b)
    {
        if (a.ring_ != b.ring_) throw std::invalid_argument("block_diag ring mismatch");
        ExactMatrix r(a.ring_, a.rows_ + b.rows_, a.cols_ + b.cols_);
        for (int i = 0; i < a.rows_; ++i)
            for (int j = 0; j < a.cols_; ++j) r.at(i, j) = a.at(i, j);
        for (int i = 0; i < b.rows_; ++i)
            for (int j = 0; j < b.cols_; ++j) r.at(a.rows_ + i, a.cols_ + j) = b.at(i, j);
        return r;
    }

    /// Kronecker product; index (i,k),(j,l) -> A(i,j)*B(k,l). Used to
    /// vectorize two-sided linear conditions on matrices.
    static ExactMatrix kron(const ExactMatrix& a, const ExactMatrix& b)
    {
        if (a.ring_ != b.ring_) throw std::invalid_argument("kron ring mismatch");
        ExactMatrix r(a.ring_, a.rows_ * b.rows_, a.cols_ * b.cols_);
        for (int i = 0; i < a.rows_; ++i)
            for (int j = 0; j < a.cols_; ++j) {
                if (a.at(i, j) == 0) continue;
                for (int k = 0; k < b.rows_; ++k)
                    for (int l = 0; l < b.cols_; ++l)
                        r.at(i * b.rows_ + k, j * b.cols_ + l) =
                            a.ring_.normalize(a.at(i, j) * b.at(k, l));
            }
        return r;
    }

    /// Row-major flattening into a single row vector.
    ExactMatrix vec_row() const
    {
        ExactMatrix r(ring_, 1, rows_ * cols_);
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < cols_; ++j) r.at(0, i * cols_ + j) = at(i, j);
        return r;
    }

    /// Inverse of vec_row with the given shape.
    static ExactMatrix unvec_row(const ExactMatrix& v, int rows, int cols)
    {
        if (v.rows() != 1 || v.cols() != rows * cols)
            throw std::invalid_argument("unvec_row shape mismatch");
        ExactMatrix r(v.ring(), rows, cols);
        for (int i = 0; i < rows; ++i)
            for (int j = 0; j < cols; ++j) r.at(i, j) = v.at(0, i * cols + j);
        return r;
    }

    std::string to_string() const
    {
        std::string s = "[";
        for (int i = 0; i < rows_; ++i) {
            s += i ? "; " : "";
            for (int j = 0; j < cols_; ++j)
                s += (j ? " " : "") + ring_.to_string(at(i, j));
        }
        return s + "]";
    }

private:
    ExactMatrix zip(const ExactMatrix& o, int sign) const
    {
        if (rows_ != o.rows_ || cols_ != o.cols_ || ring_ != o.ring_)
            throw std::invalid_argument("matrix sum shape mismatch");
        ExactMatrix r(ring_, rows_, cols_);
        for (size_t t = 0; t < a_.size(); ++t)
            r.a_[t] = ring_.normalize(sign > 0 ? Rat(a_[t] + o.a_[t]) : Rat(a_[t] - o.a_[t]));
        return r;
    }

    Ring ring_;
    int rows_, cols_;
    std::vector<Rat> a_;
};

} // namespace snailhom
