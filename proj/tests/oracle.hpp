#pragma once

// Brute-force symplectic oracle used to cross-check the production decision
// procedure. It deliberately avoids the Pfaffian: nondegeneracy is tested via
// the determinant at sample points and via a full symbolic expansion of the
// top wedge power theta(t)^{n/2} with polynomial coefficients.

#include <map>
#include <random>
#include <vector>

#include "nilsym/exterior.hpp"
#include "nilsym/lie_algebra.hpp"
#include "nilsym/matrix.hpp"
#include "nilsym/poly.hpp"
#include "nilsym/symplectic.hpp"

namespace nilsym::oracle {

// p-form with polynomial coefficients, just enough for wedge powers.
struct PolyForm {
    int ambient = 0;
    int degree = 0;
    std::map<std::vector<int>, ParamPoly> coeffs;
};

inline PolyForm poly_wedge(const PolyForm& a, const PolyForm& b, int nvars) {
    PolyForm r;
    r.ambient = a.ambient;
    r.degree = a.degree + b.degree;
    if (r.degree > r.ambient) return r;
    for (const auto& [ia, ca] : a.coeffs)
        for (const auto& [ib, cb] : b.coeffs) {
            std::vector<int> idx = ia;
            idx.insert(idx.end(), ib.begin(), ib.end());
            int sign = sort_with_parity(idx);
            if (sign == 0) continue;
            ParamPoly term = ca * cb * Rational(sign);
            auto it = r.coeffs.find(idx);
            if (it == r.coeffs.end())
                r.coeffs.emplace(idx, term);
            else {
                it->second = it->second + term;
                if (it->second.is_zero()) r.coeffs.erase(it);
            }
        }
    (void)nvars;
    return r;
}

inline bool oracle_symplectic(const LieAlgebra& l, unsigned seed = 12345, int samples = 10000) {
    int n = l.dim();
    if (n % 2 == 1) return false;
    if (n == 0) return true;
    std::vector<PForm> basis = closed_two_forms(l);
    int m = static_cast<int>(basis.size());
    if (m == 0) return false;

    // Random sampling with determinant-based nondegeneracy.
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> dist(-4, 4);
    for (int s = 0; s < samples; ++s) {
        Mat g(n, n);
        for (int v = 0; v < m; ++v) {
            int t = dist(rng);
            if (t == 0) continue;
            for (const auto& [idx, c] : basis[v].coeffs()) {
                g(idx[0] - 1, idx[1] - 1) += t * c;
                g(idx[1] - 1, idx[0] - 1) -= t * c;
            }
        }
        if (g.det() != 0) return true;
    }

    // Symbolic: expand theta(t)^{n/2} and inspect the top coefficient.
    PolyForm generic;
    generic.ambient = n;
    generic.degree = 2;
    for (int v = 0; v < m; ++v)
        for (const auto& [idx, c] : basis[v].coeffs()) {
            ParamPoly term = ParamPoly::variable(m, v, c);
            auto it = generic.coeffs.find(idx);
            if (it == generic.coeffs.end())
                generic.coeffs.emplace(idx, term);
            else
                it->second = it->second + term;
        }
    PolyForm power = generic;
    for (int i = 1; i < n / 2; ++i) power = poly_wedge(power, generic, m);
    for (const auto& [idx, c] : power.coeffs)
        if (!c.is_zero()) return true;
    return false;
}

// Random 2-step nilpotent algebra: generators 1..g, center g+1..n, random
// rational brackets of generators landing in the center. Always Jacobi-valid.
inline LieAlgebra random_two_step(int dim, std::mt19937_64& rng) {
    std::uniform_int_distribution<int> gens(2, dim);
    int g = gens(rng);
    LieAlgebra l(dim);
    std::uniform_int_distribution<int> coef(-3, 3);
    for (int i = 1; i <= g; ++i)
        for (int j = i + 1; j <= g; ++j)
            for (int k = g + 1; k <= dim; ++k) {
                int c = coef(rng);
                if (c != 0) l.add_constant(i, j, k, c);
            }
    return l;
}

}  // namespace nilsym::oracle
