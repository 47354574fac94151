#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <unordered_map>
#include <vector>

#include "nilsym/lie_algebra.hpp"
#include "nilsym/matrix.hpp"
#include "nilsym/rational.hpp"

namespace nilsym {

// Sorts indices ascending and returns the permutation sign, or 0 on a repeat.
inline int sort_with_parity(std::vector<int>& idx) {
    int sign = 1;
    for (std::size_t i = 1; i < idx.size(); ++i)
        for (std::size_t j = i; j > 0 && idx[j] < idx[j - 1]; --j) {
            std::swap(idx[j], idx[j - 1]);
            sign = -sign;
        }
    for (std::size_t i = 1; i < idx.size(); ++i)
        if (idx[i] == idx[i - 1]) return 0;
    return sign;
}

// Skew p-linear form on the dual basis, stored sparsely on strictly
// increasing index tuples. Degree 0 is a scalar keyed by the empty tuple.
class PForm {
  public:
    PForm(int ambient_dim, int degree) : ambient_(ambient_dim), degree_(degree) {
        if (degree < 0 || degree > ambient_dim)
            throw std::invalid_argument("form degree out of range");
    }

    static PForm basis(int ambient_dim, std::vector<int> idx) {
        PForm f(ambient_dim, static_cast<int>(idx.size()));
        f.add(std::move(idx), 1);
        return f;
    }
    static PForm scalar(int ambient_dim, const Rational& c) {
        PForm f(ambient_dim, 0);
        f.add({}, c);
        return f;
    }

    int ambient_dim() const { return ambient_; }
    int degree() const { return degree_; }
    const std::map<std::vector<int>, Rational>& coeffs() const { return coeffs_; }
    bool is_zero() const { return coeffs_.empty(); }

    // Adds c * alpha_{i1} ^ ... ^ alpha_{ip}; indices may arrive unsorted.
    void add(std::vector<int> idx, const Rational& c) {
        if (static_cast<int>(idx.size()) != degree_)
            throw std::invalid_argument("index tuple length does not match degree");
        for (int i : idx)
            if (i < 1 || i > ambient_) throw std::out_of_range("form index out of range");
        if (c == 0) return;
        int sign = sort_with_parity(idx);
        if (sign == 0) return;
        Rational& slot = coeffs_[idx];
        slot += sign * c;
        if (slot == 0) coeffs_.erase(idx);
    }

    Rational coefficient(std::vector<int> idx) const {
        int sign = sort_with_parity(idx);
        if (sign == 0) return 0;
        auto it = coeffs_.find(idx);
        if (it == coeffs_.end()) return 0;
        return sign * it->second;
    }

    PForm operator+(const PForm& o) const {
        require_same_shape(o);
        PForm r = *this;
        for (const auto& [idx, c] : o.coeffs_) r.add(idx, c);
        return r;
    }
    PForm operator-(const PForm& o) const { return *this + o * Rational(-1); }
    PForm operator*(const Rational& c) const {
        PForm r(ambient_, degree_);
        if (c == 0) return r;
        for (const auto& [idx, v] : coeffs_) r.coeffs_[idx] = v * c;
        return r;
    }

    bool operator==(const PForm& o) const {
        return ambient_ == o.ambient_ && degree_ == o.degree_ && coeffs_ == o.coeffs_;
    }

  private:
    void require_same_shape(const PForm& o) const {
        if (ambient_ != o.ambient_ || degree_ != o.degree_)
            throw std::invalid_argument("form shape mismatch");
    }

    int ambient_;
    int degree_;
    std::map<std::vector<int>, Rational> coeffs_;
};

inline PForm wedge(const PForm& a, const PForm& b) {
    if (a.ambient_dim() != b.ambient_dim())
        throw std::invalid_argument("wedge ambient dimension mismatch");
    int deg = a.degree() + b.degree();
    // Degree above the ambient dimension is identically zero.
    if (deg > a.ambient_dim()) return PForm(a.ambient_dim(), a.ambient_dim());
    PForm r(a.ambient_dim(), deg);
    for (const auto& [ia, ca] : a.coeffs())
        for (const auto& [ib, cb] : b.coeffs()) {
            std::vector<int> idx = ia;
            idx.insert(idx.end(), ib.begin(), ib.end());
            r.add(std::move(idx), ca * cb);
        }
    return r;
}

inline PForm wedge_power(const PForm& a, int p) {
    PForm r = PForm::scalar(a.ambient_dim(), 1);
    for (int i = 0; i < p; ++i) {
        if (r.degree() + a.degree() > a.ambient_dim()) return PForm(a.ambient_dim(), a.ambient_dim());
        r = wedge(r, a);
    }
    return r;
}

// Chevalley-Eilenberg differential with d(alpha)(X,Y) = -alpha([X,Y]) on
// 1-forms, extended as an antiderivation. d o d = 0 iff Jacobi holds.
inline PForm ce_differential(const LieAlgebra& l, const PForm& omega) {
    if (omega.ambient_dim() != l.dim())
        throw std::invalid_argument("form ambient does not match algebra dimension");
    int n = l.dim();
    PForm result(n, std::min(omega.degree() + 1, n));
    if (omega.degree() + 1 > n) return result;
    if (omega.degree() == 0) return result;

    // d(alpha_k) = - sum_{i<j} C_ij^k alpha_i ^ alpha_j, cached per k.
    std::vector<PForm> d1(static_cast<std::size_t>(n) + 1, PForm(n, 2));
    for (const auto& [pair, entry] : l.constants())
        for (const auto& [k, c] : entry) d1[k].add({pair.first, pair.second}, -c);

    for (const auto& [idx, c] : omega.coeffs()) {
        for (std::size_t r = 0; r < idx.size(); ++r) {
            int sign = (r % 2 == 0) ? 1 : -1;
            const PForm& dk = d1[idx[r]];
            if (dk.is_zero()) continue;
            std::vector<int> rest;
            for (std::size_t t = 0; t < idx.size(); ++t)
                if (t != r) rest.push_back(idx[t]);
            for (const auto& [dij, dc] : dk.coeffs()) {
                std::vector<int> full = dij;
                full.insert(full.end(), rest.begin(), rest.end());
                result.add(std::move(full), c * dc * sign);
            }
        }
    }
    return result;
}

inline std::vector<std::vector<int>> index_tuples(int n, int p) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    auto rec = [&](auto&& self, int start) -> void {
        if (static_cast<int>(cur.size()) == p) {
            out.push_back(cur);
            return;
        }
        for (int i = start; i <= n; ++i) {
            cur.push_back(i);
            self(self, i + 1);
            cur.pop_back();
        }
    };
    rec(rec, 1);
    return out;
}

// Matrix of d_p : Lambda^p -> Lambda^{p+1} in the basis of sorted tuples.
inline Mat d_matrix(const LieAlgebra& l, int p) {
    int n = l.dim();
    auto dom = index_tuples(n, p);
    auto cod = index_tuples(n, p + 1);
    std::map<std::vector<int>, int> cod_index;
    for (std::size_t i = 0; i < cod.size(); ++i) cod_index[cod[i]] = static_cast<int>(i);
    Mat m(static_cast<int>(cod.size()), static_cast<int>(dom.size()));
    for (std::size_t j = 0; j < dom.size(); ++j) {
        PForm d = ce_differential(l, PForm::basis(n, dom[j]));
        for (const auto& [idx, c] : d.coeffs()) m(cod_index.at(idx), static_cast<int>(j)) = c;
    }
    return m;
}

// Betti numbers b_0..b_n of the scalar Chevalley-Eilenberg complex.
inline std::vector<int> cohomology_dims(const LieAlgebra& l) {
    int n = l.dim();
    std::vector<int> ranks(static_cast<std::size_t>(n) + 1, 0);   // rank of d_p
    for (int p = 0; p <= n; ++p) ranks[p] = p < n ? d_matrix(l, p).rank() : 0;
    std::vector<int> b(static_cast<std::size_t>(n) + 1);
    auto binom = [](int n_, int k_) {
        long r = 1;
        for (int i = 1; i <= k_; ++i) r = r * (n_ - k_ + i) / i;
        return static_cast<int>(r);
    };
    for (int p = 0; p <= n; ++p) {
        int dim_p = binom(n, p);
        int prev_rank = p > 0 ? ranks[p - 1] : 0;
        b[p] = dim_p - ranks[p] - prev_rank;
    }
    return b;
}

// Cartan class of a nonzero 1-form: 2p when (da)^p != 0, a^(da)^p = 0; and
// 2p+1 when a^(da)^p != 0 with (da)^{p+1} = 0.
inline int cartan_class(const LieAlgebra& l, const PForm& alpha) {
    if (alpha.degree() != 1) throw std::invalid_argument("cartan class needs a 1-form");
    if (alpha.is_zero()) throw std::invalid_argument("cartan class of the zero form");
    PForm da = ce_differential(l, alpha);
    int p = 0;
    PForm power = PForm::scalar(l.dim(), 1);
    while (true) {
        if (power.degree() + 2 > l.dim()) break;
        PForm next = wedge(power, da);
        if (next.is_zero()) break;
        power = next;
        ++p;
    }
    PForm mixed = power.degree() + 1 <= l.dim() ? wedge(alpha, power) : PForm(l.dim(), l.dim());
    return mixed.is_zero() ? 2 * p : 2 * p + 1;
}

// ---- Pfaffian ----------------------------------------------------------

inline void require_skew(const Mat& a) {
    if (a.rows() != a.cols()) throw std::invalid_argument("pfaffian needs a square matrix");
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j <= i; ++j)
            if (a(i, j) != -a(j, i)) throw std::invalid_argument("matrix is not skew-symmetric");
}

// Exact Pfaffian by first-row expansion over index subsets, memoized on the
// subset bitmask. Odd sizes return 0 by convention.
inline Rational pfaffian(const Mat& a) {
    require_skew(a);
    int n = a.rows();
    if (n % 2 == 1) return 0;
    if (n == 0) return 1;
    std::unordered_map<std::uint64_t, Rational> memo;
    auto rec = [&](auto&& self, std::uint64_t mask) -> Rational {
        if (mask == 0) return 1;
        auto it = memo.find(mask);
        if (it != memo.end()) return it->second;
        int first = 0;
        while (!(mask >> first & 1)) ++first;
        Rational total = 0;
        int sign = 1;
        std::uint64_t rest = mask & ~(std::uint64_t{1} << first);
        for (int j = first + 1; j < n; ++j) {
            if (!(rest >> j & 1)) continue;
            if (a(first, j) != 0)
                total += Rational(sign) * a(first, j) * self(self, rest & ~(std::uint64_t{1} << j));
            sign = -sign;
        }
        memo.emplace(mask, total);
        return total;
    };
    return rec(rec, (std::uint64_t{1} << n) - 1);
}

// Gram matrix of a 2-form: A_ij = theta(X_i, X_j).
inline Mat gram(const PForm& theta) {
    if (theta.degree() != 2) throw std::invalid_argument("gram needs a 2-form");
    int n = theta.ambient_dim();
    Mat a(n, n);
    for (const auto& [idx, c] : theta.coeffs()) {
        a(idx[0] - 1, idx[1] - 1) = c;
        a(idx[1] - 1, idx[0] - 1) = -c;
    }
    return a;
}

// Nondegeneracy of a 2-form via the Pfaffian, cross-checked against the
// wedge-power identity theta^p = p! Pf(A) vol on even dimensions.
inline bool is_nondegenerate(const LieAlgebra& l, const PForm& theta) {
    if (theta.ambient_dim() != l.dim())
        throw std::invalid_argument("form ambient does not match algebra dimension");
    int n = l.dim();
    Rational pf = pfaffian(gram(theta));
    if (n % 2 == 1) return false;
    int p = n / 2;
    PForm top = wedge_power(theta, p);
    Rational fact = 1;
    for (int i = 2; i <= p; ++i) fact *= i;
    std::vector<int> vol(n);
    for (int i = 0; i < n; ++i) vol[i] = i + 1;
    Rational top_coeff = top.is_zero() ? Rational(0) : top.coefficient(vol);
    if (top_coeff != fact * pf)
        throw std::logic_error("pfaffian and wedge-power nondegeneracy checks disagree");
    return pf != 0;
}

}  // namespace nilsym
