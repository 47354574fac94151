#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "nilsym/matrix.hpp"
#include "nilsym/rational.hpp"

namespace nilsym {

// Decreasing Jordan-block-size sequence of a generic adjoint operator;
// an isomorphism invariant of nilpotent Lie algebras.
struct CharSeq {
    std::vector<int> seq;

    bool operator==(const CharSeq& o) const { return seq == o.seq; }
    bool operator<(const CharSeq& o) const {
        return std::lexicographical_compare(seq.begin(), seq.end(), o.seq.begin(), o.seq.end());
    }
    std::string str() const {
        std::string s = "(";
        for (std::size_t i = 0; i < seq.size(); ++i) {
            if (i) s += ",";
            s += std::to_string(seq[i]);
        }
        return s + ")";
    }
};

struct JacobiViolation {
    int i, j, l;     // 1-based basis triple
    Vec residual;    // coordinates of the Jacobiator
};

struct ValidationReport {
    bool ok = true;
    std::vector<JacobiViolation> violations;
};

// A finite-dimensional Lie algebra given by rational structure constants on
// a fixed basis X_1..X_n. Only pairs i < j are stored; [X_j,X_i] = -[X_i,X_j]
// by definition. Indices are 1-based throughout, matching the file format.
class LieAlgebra {
  public:
    explicit LieAlgebra(int dim, std::string name = "") : dim_(dim), name_(std::move(name)) {
        if (dim < 0) throw std::invalid_argument("negative dimension");
    }

    int dim() const { return dim_; }
    const std::string& name() const { return name_; }
    void set_name(std::string n) { name_ = std::move(n); }

    using Constants = std::map<std::pair<int, int>, std::map<int, Rational>>;
    const Constants& constants() const { return constants_; }

    // Adds c * X_k to [X_i, X_j]; requires i < j.
    void add_constant(int i, int j, int k, const Rational& c) {
        check_index(i);
        check_index(j);
        check_index(k);
        if (i >= j) throw std::invalid_argument("bracket pair needs i < j");
        if (c == 0) return;
        auto& entry = constants_[{i, j}];
        entry[k] += c;
        if (entry[k] == 0) entry.erase(k);
        if (entry.empty()) constants_.erase({i, j});
    }
    void set_bracket(int i, int j, int k, const Rational& c) { add_constant(i, j, k, c); }

    // [X_i, X_j] for arbitrary i, j (antisymmetry applied as needed).
    Vec bracket_basis(int i, int j) const {
        check_index(i);
        check_index(j);
        Vec v(dim_);
        if (i == j) return v;
        bool flip = i > j;
        if (flip) std::swap(i, j);
        auto it = constants_.find({i, j});
        if (it != constants_.end())
            for (const auto& [k, c] : it->second) v[k - 1] = flip ? -c : c;
        return v;
    }

    // Bilinear extension of the structure constants.
    Vec bracket(const Vec& u, const Vec& v) const {
        if (static_cast<int>(u.size()) != dim_ || static_cast<int>(v.size()) != dim_)
            throw std::invalid_argument("bracket vector length mismatch");
        Vec r(dim_);
        for (const auto& [pair, entry] : constants_) {
            auto [i, j] = pair;
            Rational coeff = u[i - 1] * v[j - 1] - u[j - 1] * v[i - 1];
            if (coeff == 0) continue;
            for (const auto& [k, c] : entry) r[k - 1] += coeff * c;
        }
        return r;
    }

    // Matrix of ad(x): column j holds [x, e_j].
    Mat ad(const Vec& x) const {
        Mat m(dim_, dim_);
        for (int j = 1; j <= dim_; ++j) {
            Vec col(dim_);
            for (const auto& [pair, entry] : constants_) {
                auto [a, b] = pair;
                Rational coeff;
                if (b == j)
                    coeff = x[a - 1];
                else if (a == j)
                    coeff = -x[b - 1];
                else
                    continue;
                if (coeff == 0) continue;
                for (const auto& [k, c] : entry) col[k - 1] += coeff * c;
            }
            for (int i = 0; i < dim_; ++i) m(i, j - 1) = col[i];
        }
        return m;
    }

    ValidationReport validate() const {
        ValidationReport rep;
        for (int i = 1; i <= dim_; ++i)
            for (int j = i + 1; j <= dim_; ++j) {
                Vec bij = bracket_basis(i, j);
                bool bij_zero = std::all_of(bij.begin(), bij.end(),
                                            [](const Rational& x) { return x == 0; });
                for (int l = j + 1; l <= dim_; ++l) {
                    Vec res(dim_);
                    if (!bij_zero) res = bracket(bij, basis_vector(l));
                    Vec bjl = bracket_basis(j, l);
                    Vec t2 = bracket(bjl, basis_vector(i));
                    Vec bli = bracket_basis(l, i);
                    Vec t3 = bracket(bli, basis_vector(j));
                    bool zero = true;
                    for (int k = 0; k < dim_; ++k) {
                        res[k] += t2[k] + t3[k];
                        if (res[k] != 0) zero = false;
                    }
                    if (!zero) {
                        rep.ok = false;
                        rep.violations.push_back({i, j, l, res});
                    }
                }
            }
        return rep;
    }

    // C^0 = g, C^j = [g, C^{j-1}]; returned through the first repeated term.
    std::vector<Subspace> lower_central_series() const {
        std::vector<Subspace> series{Subspace::full(dim_)};
        while (true) {
            const Subspace& prev = series.back();
            std::vector<Vec> gens;
            for (int i = 1; i <= dim_; ++i)
                for (int r = 0; r < prev.basis().rows(); ++r)
                    gens.push_back(bracket(basis_vector(i), prev.basis().row(r)));
            Subspace next = Subspace::span(dim_, gens);
            if (next == prev) break;
            series.push_back(next);
        }
        return series;
    }

    // C_0 = 0, C_j = {X : [X, g] <= C_{j-1}}; C_1 is the center.
    std::vector<Subspace> upper_central_series() const {
        std::vector<Subspace> series{Subspace(dim_)};
        while (true) {
            const Subspace& prev = series.back();
            Mat ann = prev.annihilator();   // functionals vanishing on C_{j-1}
            std::vector<Vec> constraint_rows;
            for (int l = 1; l <= dim_; ++l) {
                // M_l maps x to [x, e_l].
                Mat ml(dim_, dim_);
                for (int i = 1; i <= dim_; ++i) {
                    Vec b = bracket_basis(i, l);
                    for (int k = 0; k < dim_; ++k) ml(k, i - 1) = b[k];
                }
                Mat rows = ann * ml;
                for (int r = 0; r < rows.rows(); ++r) constraint_rows.push_back(rows.row(r));
            }
            Subspace next(dim_);
            if (constraint_rows.empty()) {
                next = Subspace::full(dim_);
            } else {
                Mat sys = Mat::from_rows(constraint_rows);
                Mat ker = sys.kernel_basis();
                std::vector<Vec> rows;
                for (int r = 0; r < ker.rows(); ++r) rows.push_back(ker.row(r));
                next = Subspace::span(dim_, rows);
            }
            if (next == prev) break;
            series.push_back(next);
        }
        return series;
    }

    // Smallest k with C^k = 0, or nullopt when the series stabilizes above 0.
    std::optional<int> nilindex() const {
        if (dim_ == 0) return 0;
        auto series = lower_central_series();
        if (series.back().dim() != 0) return std::nullopt;
        return static_cast<int>(series.size()) - 1;
    }
    bool is_nilpotent() const { return nilindex().has_value(); }

    int generators_count() const {
        auto series = lower_central_series();
        int c1 = series.size() > 1 ? series[1].dim() : 0;
        return dim_ - c1;
    }

    // Jordan block sizes of a nilpotent operator from its rank sequence:
    // #blocks of size >= s equals rank(A^{s-1}) - rank(A^s).
    static std::vector<int> jordan_block_sizes(const Mat& a) {
        int n = a.rows();
        std::vector<int> ranks{n};
        Mat p = a;
        while (true) {
            int r = p.rank();
            ranks.push_back(r);
            if (r == 0) break;
            p = p * a;
            if (static_cast<int>(ranks.size()) > n + 1)
                throw std::invalid_argument("operator is not nilpotent");
        }
        std::vector<int> sizes;
        int smax = static_cast<int>(ranks.size()) - 1;
        for (int s = smax; s >= 1; --s) {
            int geq_s = ranks[s - 1] - ranks[s];
            int geq_s1 = s < smax ? ranks[s] - ranks[s + 1] : 0;
            for (int c = 0; c < geq_s - geq_s1; ++c) sizes.push_back(s);
        }
        return sizes;
    }

    // Monte-Carlo characteristic sequence: lexicographic maximum over sampled
    // X outside C^1 of the Jordan data of ad(X). The maximum is attained on a
    // Zariski-open set, so generic sampling finds it with probability 1.
    // Deterministic for a fixed seed; basis vectors outside C^1 are always tried.
    CharSeq characteristic_sequence(unsigned seed = 0, int trials = 32, int bound = 10) const {
        if (!is_nilpotent()) throw std::invalid_argument("characteristic sequence needs a nilpotent algebra");
        if (dim_ == 0) return CharSeq{};
        Subspace c1 = lower_central_series().size() > 1 ? lower_central_series()[1] : Subspace(dim_);
        CharSeq best;
        auto consider = [&](const Vec& x) {
            bool zero = std::all_of(x.begin(), x.end(), [](const Rational& r) { return r == 0; });
            if (zero || c1.contains(x)) return;
            CharSeq c{jordan_block_sizes(ad(x))};
            if (best.seq.empty() || best < c) best = c;
        };
        for (int i = 1; i <= dim_; ++i) consider(basis_vector(i));
        std::mt19937_64 rng(seed);
        std::uniform_int_distribution<int> dist(-bound, bound);
        for (int t = 0; t < trials; ++t) {
            Vec x(dim_);
            for (int i = 0; i < dim_; ++i) x[i] = dist(rng);
            consider(x);
        }
        if (best.seq.empty())   // abelian: every X is central with ad(X) = 0
            best.seq.assign(dim_, 1);
        return best;
    }

    LieAlgebra direct_sum(const LieAlgebra& other) const {
        LieAlgebra r(dim_ + other.dim_);
        for (const auto& [pair, entry] : constants_)
            for (const auto& [k, c] : entry) r.add_constant(pair.first, pair.second, k, c);
        for (const auto& [pair, entry] : other.constants_)
            for (const auto& [k, c] : entry)
                r.add_constant(pair.first + dim_, pair.second + dim_, k + dim_, c);
        return r;
    }

    // Conjugates the structure constants: row i of P holds the coordinates of
    // the new basis vector Y_i in the old basis.
    LieAlgebra change_basis(const Mat& p) const {
        if (p.rows() != dim_ || p.cols() != dim_)
            throw std::invalid_argument("basis change matrix shape mismatch");
        Mat pinv = p.inverse();
        LieAlgebra r(dim_, name_);
        for (int i = 1; i <= dim_; ++i)
            for (int j = i + 1; j <= dim_; ++j) {
                Vec b = bracket(p.row(i - 1), p.row(j - 1));
                // coordinates in the new basis: solve c * P = b  =>  c = b * P^{-1}
                for (int k = 1; k <= dim_; ++k) {
                    Rational c;
                    for (int l = 0; l < dim_; ++l) c += b[l] * pinv(l, k - 1);
                    if (c != 0) r.add_constant(i, j, k, c);
                }
            }
        return r;
    }

    // Splits off the maximal abelian factor reachable by extracting central
    // lines outside C^1. The complement always contains C^1, hence is an ideal.
    std::pair<LieAlgebra, int> split_abelian_factor() const {
        LieAlgebra core = *this;
        int s = 0;
        while (core.dim_ > 0) {
            auto lower = core.lower_central_series();
            Subspace c1 = lower.size() > 1 ? lower[1] : Subspace(core.dim_);
            Subspace center = core.upper_central_series().size() > 1
                                  ? core.upper_central_series()[1]
                                  : Subspace(core.dim_);
            Vec z;
            bool found = false;
            for (int r = 0; r < center.basis().rows(); ++r) {
                Vec cand = center.basis().row(r);
                if (!c1.contains(cand)) {
                    z = cand;
                    found = true;
                    break;
                }
            }
            if (!found) break;
            // Complement of <z> containing C^1, greedily extended by basis vectors.
            std::vector<Vec> rows;
            for (int r = 0; r < c1.basis().rows(); ++r) rows.push_back(c1.basis().row(r));
            for (int i = 1; i <= core.dim_ && static_cast<int>(rows.size()) < core.dim_ - 1; ++i) {
                std::vector<Vec> trial = rows;
                trial.push_back(core.basis_vector(i));
                Subspace sp = Subspace::span(core.dim_, trial);
                if (sp.dim() == static_cast<int>(rows.size()) + 1 && !sp.contains(z))
                    rows.push_back(core.basis_vector(i));
            }
            rows.push_back(z);
            LieAlgebra conj = core.change_basis(Mat::from_rows(rows));
            // z is central, so no bracket touches the last coordinate.
            LieAlgebra smaller(core.dim_ - 1);
            for (const auto& [pair, entry] : conj.constants_)
                for (const auto& [k, c] : entry) smaller.add_constant(pair.first, pair.second, k, c);
            core = smaller;
            ++s;
        }
        core.set_name(name_.empty() ? "" : name_ + "_core");
        return {core, s};
    }

    Vec basis_vector(int i) const {
        check_index(i);
        Vec v(dim_);
        v[i - 1] = 1;
        return v;
    }

    bool operator==(const LieAlgebra& o) const {
        return dim_ == o.dim_ && constants_ == o.constants_;
    }

  private:
    void check_index(int i) const {
        if (i < 1 || i > dim_) throw std::out_of_range("basis index out of range");
    }

    int dim_;
    std::string name_;
    Constants constants_;
};

}  // namespace nilsym
