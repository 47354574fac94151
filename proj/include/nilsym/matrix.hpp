#pragma once

#include <cassert>
#include <stdexcept>
#include <utility>
#include <vector>

#include "nilsym/rational.hpp"

namespace nilsym {

using Vec = std::vector<Rational>;

// Dense matrix over the rationals. Everything here is exact; pivoting is
// first-nonzero since there is no rounding to worry about.
class Mat {
  public:
    Mat() : rows_(0), cols_(0) {}
    Mat(int rows, int cols) : rows_(rows), cols_(cols), a_(static_cast<std::size_t>(rows) * cols) {}

    static Mat identity(int n) {
        Mat m(n, n);
        for (int i = 0; i < n; ++i) m(i, i) = 1;
        return m;
    }
    static Mat from_rows(const std::vector<Vec>& rows) {
        if (rows.empty()) return Mat();
        Mat m(static_cast<int>(rows.size()), static_cast<int>(rows[0].size()));
        for (int i = 0; i < m.rows_; ++i) {
            if (static_cast<int>(rows[i].size()) != m.cols_)
                throw std::invalid_argument("ragged row list");
            for (int j = 0; j < m.cols_; ++j) m(i, j) = rows[i][j];
        }
        return m;
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    Rational& operator()(int i, int j) { return a_[static_cast<std::size_t>(i) * cols_ + j]; }
    const Rational& operator()(int i, int j) const {
        return a_[static_cast<std::size_t>(i) * cols_ + j];
    }

    Vec row(int i) const {
        Vec v(cols_);
        for (int j = 0; j < cols_; ++j) v[j] = (*this)(i, j);
        return v;
    }
    Vec col(int j) const {
        Vec v(rows_);
        for (int i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
        return v;
    }
    void set_row(int i, const Vec& v) {
        for (int j = 0; j < cols_; ++j) (*this)(i, j) = v[j];
    }

    bool operator==(const Mat& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
    }

    bool is_zero() const {
        for (const auto& x : a_)
            if (x != 0) return false;
        return true;
    }

    Mat transpose() const {
        Mat t(cols_, rows_);
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
        return t;
    }

    Mat operator*(const Mat& o) const {
        if (cols_ != o.rows_) throw std::invalid_argument("matrix product shape mismatch");
        Mat r(rows_, o.cols_);
        for (int i = 0; i < rows_; ++i)
            for (int k = 0; k < cols_; ++k) {
                const Rational& x = (*this)(i, k);
                if (x == 0) continue;
                for (int j = 0; j < o.cols_; ++j) r(i, j) += x * o(k, j);
            }
        return r;
    }
    Vec operator*(const Vec& v) const {
        if (cols_ != static_cast<int>(v.size()))
            throw std::invalid_argument("matrix-vector shape mismatch");
        Vec r(rows_);
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < cols_; ++j)
                if ((*this)(i, j) != 0 && v[j] != 0) r[i] += (*this)(i, j) * v[j];
        return r;
    }
    Mat operator+(const Mat& o) const {
        Mat r = *this;
        for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] += o.a_[i];
        return r;
    }
    Mat operator-(const Mat& o) const {
        Mat r = *this;
        for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] -= o.a_[i];
        return r;
    }
    Mat operator*(const Rational& c) const {
        Mat r = *this;
        for (auto& x : r.a_) x *= c;
        return r;
    }
    Mat operator-() const { return *this * Rational(-1); }

    // Reduced row echelon form in place. Returns the pivot columns.
    std::vector<int> rref() {
        std::vector<int> pivots;
        int r = 0;
        for (int c = 0; c < cols_ && r < rows_; ++c) {
            int p = -1;
            for (int i = r; i < rows_; ++i)
                if ((*this)(i, c) != 0) {
                    p = i;
                    break;
                }
            if (p < 0) continue;
            if (p != r)
                for (int j = 0; j < cols_; ++j) std::swap((*this)(p, j), (*this)(r, j));
            Rational inv = 1 / (*this)(r, c);
            for (int j = c; j < cols_; ++j) (*this)(r, j) *= inv;
            for (int i = 0; i < rows_; ++i) {
                if (i == r || (*this)(i, c) == 0) continue;
                Rational f = (*this)(i, c);
                for (int j = c; j < cols_; ++j) (*this)(i, j) -= f * (*this)(r, j);
            }
            pivots.push_back(c);
            ++r;
        }
        return pivots;
    }

    int rank() const {
        Mat m = *this;
        return static_cast<int>(m.rref().size());
    }

    // Basis (as rows) of {x : A x = 0}.
    Mat kernel_basis() const {
        Mat m = *this;
        std::vector<int> pivots = m.rref();
        std::vector<bool> is_pivot(cols_, false);
        for (int c : pivots) is_pivot[c] = true;
        std::vector<Vec> basis;
        for (int c = 0; c < cols_; ++c) {
            if (is_pivot[c]) continue;
            Vec v(cols_);
            v[c] = 1;
            for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -m(static_cast<int>(r), c);
            basis.push_back(std::move(v));
        }
        Mat k = Mat::from_rows(basis);
        if (basis.empty()) k = Mat(0, cols_);
        return k;
    }

    Mat inverse() const {
        if (rows_ != cols_) throw std::invalid_argument("inverse of non-square matrix");
        Mat aug(rows_, 2 * cols_);
        for (int i = 0; i < rows_; ++i) {
            for (int j = 0; j < cols_; ++j) aug(i, j) = (*this)(i, j);
            aug(i, cols_ + i) = 1;
        }
        std::vector<int> piv = aug.rref();
        for (int i = 0; i < rows_; ++i)
            if (static_cast<int>(piv.size()) <= i || piv[i] != i)
                throw std::invalid_argument("matrix not invertible");
        Mat inv(rows_, cols_);
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < cols_; ++j) inv(i, j) = aug(i, cols_ + j);
        return inv;
    }

    Rational det() const {
        if (rows_ != cols_) throw std::invalid_argument("determinant of non-square matrix");
        Mat m = *this;
        Rational d = 1;
        for (int c = 0; c < cols_; ++c) {
            int p = -1;
            for (int i = c; i < rows_; ++i)
                if (m(i, c) != 0) {
                    p = i;
                    break;
                }
            if (p < 0) return 0;
            if (p != c) {
                for (int j = 0; j < cols_; ++j) std::swap(m(p, j), m(c, j));
                d = -d;
            }
            d *= m(c, c);
            Rational inv = 1 / m(c, c);
            for (int i = c + 1; i < rows_; ++i) {
                if (m(i, c) == 0) continue;
                Rational f = m(i, c) * inv;
                for (int j = c; j < cols_; ++j) m(i, j) -= f * m(c, j);
            }
        }
        return d;
    }

  private:
    int rows_, cols_;
    std::vector<Rational> a_;
};

// A subspace of Q^n kept in reduced row echelon form, so equal subspaces
// have equal representations.
class Subspace {
  public:
    explicit Subspace(int ambient_dim) : ambient_(ambient_dim), basis_(0, ambient_dim) {}

    static Subspace span(int ambient_dim, const std::vector<Vec>& vectors) {
        Subspace s(ambient_dim);
        if (vectors.empty()) return s;
        Mat m = Mat::from_rows(vectors);
        std::size_t r = m.rref().size();
        Mat b(static_cast<int>(r), ambient_dim);
        for (int i = 0; i < b.rows(); ++i)
            for (int j = 0; j < ambient_dim; ++j) b(i, j) = m(i, j);
        s.basis_ = b;
        return s;
    }
    static Subspace full(int ambient_dim) {
        Subspace s(ambient_dim);
        s.basis_ = Mat::identity(ambient_dim);
        return s;
    }

    int ambient_dim() const { return ambient_; }
    int dim() const { return basis_.rows(); }
    const Mat& basis() const { return basis_; }

    bool contains(const Vec& v) const {
        // Reduce v against the echelon rows; membership iff the residue is zero.
        Vec w = v;
        for (int i = 0; i < basis_.rows(); ++i) {
            int lead = -1;
            for (int j = 0; j < ambient_; ++j)
                if (basis_(i, j) != 0) {
                    lead = j;
                    break;
                }
            if (lead >= 0 && w[lead] != 0) {
                Rational f = w[lead];
                for (int j = 0; j < ambient_; ++j) w[j] -= f * basis_(i, j);
            }
        }
        for (const auto& x : w)
            if (x != 0) return false;
        return true;
    }
    bool contains(const Subspace& other) const {
        for (int i = 0; i < other.basis_.rows(); ++i)
            if (!contains(other.basis_.row(i))) return false;
        return true;
    }

    // Functionals vanishing on this subspace, i.e. kernel of the basis matrix.
    Mat annihilator() const { return basis_.kernel_basis(); }

    bool operator==(const Subspace& o) const {
        return ambient_ == o.ambient_ && basis_ == o.basis_;
    }

  private:
    int ambient_;
    Mat basis_;
};

}  // namespace nilsym
