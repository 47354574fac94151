#pragma once

#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "nilsym/exterior.hpp"
#include "nilsym/lie_algebra.hpp"
#include "nilsym/rational.hpp"

namespace nilsym {

// A 2-cochain with values in the algebra: psi(e_i, e_j) = sum_k a_ij^k e_k.
struct TwoCochain {
    int dim = 0;
    std::map<std::pair<int, int>, std::map<int, Rational>> coeffs;   // keys i < j

    void add(int i, int j, int k, const Rational& c) {
        if (!(1 <= i && i < j && j <= dim && 1 <= k && k <= dim))
            throw std::invalid_argument("cochain indices out of range");
        Rational& slot = coeffs[{i, j}][k];
        slot += c;
        if (slot == 0) {
            coeffs[{i, j}].erase(k);
            if (coeffs[{i, j}].empty()) coeffs.erase({i, j});
        }
    }

    Vec value(int i, int j) const {
        Vec v(dim);
        int sign = 1;
        if (i > j) {
            std::swap(i, j);
            sign = -1;
        }
        if (i == j) return v;
        auto it = coeffs.find({i, j});
        if (it == coeffs.end()) return v;
        for (const auto& [k, c] : it->second) v[k - 1] = sign * c;
        return v;
    }
};

struct DeformationReport {
    bool base_jacobi = true;        // t^0 coefficient of the Jacobiator
    bool cocycle_condition = true;  // t^1 coefficient (psi is a 2-cocycle)
    bool integrability = true;      // t^2 coefficient ([psi, psi] = 0)
    bool ok() const { return base_jacobi && cocycle_condition && integrability; }
};

// Splits the Jacobiator of [.,.] + t psi(.,.) by powers of t and checks each
// coefficient on all basis triples.
inline DeformationReport validate_deformation(const LieAlgebra& l, const TwoCochain& psi) {
    if (psi.dim != l.dim()) throw std::invalid_argument("cochain dimension mismatch");
    int n = l.dim();
    DeformationReport rep;
    auto psival = [&](const Vec& x, const Vec& y) {
        Vec r(n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                if (x[i] == 0 || y[j] == 0) continue;
                Vec v = psi.value(i + 1, j + 1);
                for (int k = 0; k < n; ++k) r[k] += x[i] * y[j] * v[k];
            }
        return r;
    };
    for (int i = 1; i <= n && rep.ok(); ++i)
        for (int j = i + 1; j <= n; ++j)
            for (int k = j + 1; k <= n; ++k) {
                Vec x = l.basis_vector(i), y = l.basis_vector(j), z = l.basis_vector(k);
                Vec t0(n), t1(n), t2(n);
                auto cyc = [&](auto f, auto g, Vec& acc) {
                    Vec a = f(x, g(y, z));
                    Vec b = f(y, g(z, x));
                    Vec c = f(z, g(x, y));
                    for (int q = 0; q < n; ++q) acc[q] += a[q] + b[q] + c[q];
                };
                auto br = [&](const Vec& u, const Vec& v) { return l.bracket(u, v); };
                cyc(br, br, t0);
                cyc(br, psival, t1);
                cyc(psival, br, t1);
                cyc(psival, psival, t2);
                for (int q = 0; q < n; ++q) {
                    if (t0[q] != 0) rep.base_jacobi = false;
                    if (t1[q] != 0) rep.cocycle_condition = false;
                    if (t2[q] != 0) rep.integrability = false;
                }
            }
    return rep;
}

// The algebra with bracket [.,.] + t psi(.,.); validated before returning.
inline LieAlgebra linear_deformation(const LieAlgebra& l, const TwoCochain& psi,
                                     const Rational& t) {
    if (psi.dim != l.dim()) throw std::invalid_argument("cochain dimension mismatch");
    int n = l.dim();
    LieAlgebra out(n, l.name().empty() ? "" : l.name() + "_deformed");
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) {
            Vec v = l.bracket_basis(i, j);
            Vec p = psi.value(i, j);
            for (int k = 0; k < n; ++k) {
                Rational c = v[k] + t * p[k];
                if (c != 0) out.add_constant(i, j, k + 1, c);
            }
        }
    if (!out.validate().ok)
        throw std::invalid_argument("deformed bracket violates the Jacobi identity");
    return out;
}

struct ContractResult {
    std::optional<LieAlgebra> limit;
    std::vector<std::array<int, 3>> offending;   // triples (i,j,k) with negative exponent
};

// Basis rescaling Y_i = eps^{w_i} X_i sends C_ij^k to eps^{w_i + w_j - w_k} C_ij^k;
// the eps -> 0 limit exists iff every nonzero constant has nonnegative exponent.
inline ContractResult contract(const LieAlgebra& l, const std::vector<int>& weights) {
    if (static_cast<int>(weights.size()) != l.dim())
        throw std::invalid_argument("one weight per basis vector required");
    ContractResult res;
    LieAlgebra out(l.dim(), l.name().empty() ? "" : l.name() + "_contracted");
    for (const auto& [pair, entry] : l.constants())
        for (const auto& [k, c] : entry) {
            auto [i, j] = pair;
            int e = weights[i - 1] + weights[j - 1] - weights[k - 1];
            if (e < 0)
                res.offending.push_back({i, j, k});
            else if (e == 0)
                out.add_constant(i, j, k, c);
        }
    if (!res.offending.empty()) return res;
    if (!out.validate().ok) throw std::logic_error("contraction limit violates Jacobi");
    res.limit = std::move(out);
    return res;
}

// A symplectic form survives the contraction iff all its nonzero entries sit
// in a single weight degree k = w_i + w_j (the form rescales homogeneously).
inline bool transport_symplectic(const PForm& theta, const std::vector<int>& weights) {
    if (theta.degree() != 2) throw std::invalid_argument("expected a 2-form");
    std::optional<int> common;
    for (const auto& [idx, c] : theta.coeffs()) {
        int k = weights[idx[0] - 1] + weights[idx[1] - 1];
        if (!common)
            common = k;
        else if (*common != k)
            return false;
    }
    return true;
}

struct FamilyWarning {
    bool charseq_matches_target = true;
    CharSeq expected;
    CharSeq actual;
};

namespace detail {

inline LieAlgebra family_base_g32() {
    LieAlgebra g(8, "g32");
    g.add_constant(1, 2, 3, 1);
    g.add_constant(1, 4, 5, 1);
    g.add_constant(1, 6, 7, 1);
    return g;
}

inline LieAlgebra family_base_g24() {
    LieAlgebra g(8, "g24");
    g.add_constant(1, 2, 3, 1);
    g.add_constant(1, 4, 5, 1);
    return g;
}

}  // namespace detail

// Members of the parametric families: the parameter map assigns a rational
// to allowed cocycle slots keyed "(i,j)->k". Unknown keys are rejected.
inline LieAlgebra family_algebra(const std::string& family,
                                 const std::map<std::string, Rational>& params,
                                 FamilyWarning* warning = nullptr, int p = 0) {
    auto key = [](int i, int j, int k) {
        std::ostringstream os;
        os << "(" << i << "," << j << ")->" << k;
        return os.str();
    };
    LieAlgebra g(0);
    std::set<std::string> allowed;
    CharSeq target;
    if (family == "C1_F832") {
        g = detail::family_base_g32();
        for (int i : {2, 4, 6, 8})
            for (int j : {2, 4, 6, 8})
                if (i < j)
                    for (int k : {3, 5, 7}) allowed.insert(key(i, j, k));
        target = CharSeq{{2, 2, 2, 1, 1}};
    } else if (family == "C2_F832") {
        g = detail::family_base_g32();
        for (int i : {2, 4, 6})
            for (int j : {2, 4, 6})
                if (i < j)
                    for (int k : {3, 5, 7, 8}) allowed.insert(key(i, j, k));
        target = CharSeq{{2, 2, 2, 1, 1}};
    } else if (family == "C1_F824") {
        g = detail::family_base_g24();
        for (int i : {2, 4, 6, 7, 8})
            for (int j : {2, 4, 6, 7, 8})
                if (i < j)
                    for (int k : {3, 5}) allowed.insert(key(i, j, k));
        target = CharSeq{{2, 2, 1, 1, 1, 1}};
    } else if (family == "C2_F824") {
        g = detail::family_base_g24();
        g.add_constant(2, 4, 8, 1);
        for (auto [i, j] : {std::pair{2, 6}, {2, 7}, {4, 6}, {4, 7}, {6, 7}})
            for (int k : {3, 5}) allowed.insert(key(i, j, k));
        target = CharSeq{{2, 2, 1, 1, 1, 1}};
    } else if (family == "C1_general") {
        if (p < 2) throw std::invalid_argument("C1_general needs p >= 2");
        g = LieAlgebra(2 * p, "g_2p");
        for (int i = 1; i <= p - 1; ++i) g.add_constant(1, 2 * i, 2 * i + 1, 1);
        for (int i = 2; i <= 2 * p; i += 2)
            for (int j = i + 2; j <= 2 * p; j += 2)
                for (int k = 3; k <= 2 * p - 1; k += 2) allowed.insert(key(i, j, k));
        std::vector<int> t(p - 1, 2);
        t.push_back(1);
        t.push_back(1);
        target = CharSeq{t};
    } else {
        throw std::invalid_argument("unknown family: " + family);
    }
    for (const auto& [k, v] : params) {
        if (!allowed.count(k)) throw std::invalid_argument("parameter slot not in family: " + k);
        std::istringstream is(k);
        char c;
        int i, j, tgt;
        is >> c >> i >> c >> j >> c >> c >> c >> tgt;
        g.add_constant(i, j, tgt, v);
    }
    if (!g.validate().ok) throw std::logic_error("family member violates Jacobi");
    if (warning) {
        warning->expected = target;
        warning->actual = g.characteristic_sequence();
        warning->charseq_matches_target = warning->expected == warning->actual;
    }
    return g;
}

}  // namespace nilsym
