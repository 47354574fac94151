#pragma once

#include <cstdint>
#include <map>
#include <stdexcept>
#include <unordered_map>
#include <vector>

#include "nilsym/matrix.hpp"
#include "nilsym/rational.hpp"

namespace nilsym {

// Sparse multivariate polynomial over Q, keyed by exponent vectors.
class ParamPoly {
  public:
    explicit ParamPoly(int nvars = 0) : nvars_(nvars) {}

    static ParamPoly constant(int nvars, const Rational& c) {
        ParamPoly p(nvars);
        if (c != 0) p.terms_[std::vector<int>(nvars, 0)] = c;
        return p;
    }
    static ParamPoly variable(int nvars, int var, const Rational& c = 1) {
        ParamPoly p(nvars);
        if (c != 0) {
            std::vector<int> e(nvars, 0);
            e[var] = 1;
            p.terms_[e] = c;
        }
        return p;
    }

    int nvars() const { return nvars_; }
    const std::map<std::vector<int>, Rational>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }

    int total_degree() const {
        int d = 0;
        for (const auto& [e, c] : terms_) {
            int s = 0;
            for (int x : e) s += x;
            d = std::max(d, s);
        }
        return d;
    }

    void add_term(const std::vector<int>& exps, const Rational& c) {
        if (static_cast<int>(exps.size()) != nvars_)
            throw std::invalid_argument("exponent vector length mismatch");
        if (c == 0) return;
        Rational& slot = terms_[exps];
        slot += c;
        if (slot == 0) terms_.erase(exps);
    }

    ParamPoly operator+(const ParamPoly& o) const {
        check(o);
        ParamPoly r = *this;
        for (const auto& [e, c] : o.terms_) r.add_term(e, c);
        return r;
    }
    ParamPoly operator-(const ParamPoly& o) const {
        check(o);
        ParamPoly r = *this;
        for (const auto& [e, c] : o.terms_) r.add_term(e, -c);
        return r;
    }
    ParamPoly operator*(const ParamPoly& o) const {
        check(o);
        ParamPoly r(nvars_);
        for (const auto& [ea, ca] : terms_)
            for (const auto& [eb, cb] : o.terms_) {
                std::vector<int> e(nvars_);
                for (int i = 0; i < nvars_; ++i) e[i] = ea[i] + eb[i];
                r.add_term(e, ca * cb);
            }
        return r;
    }
    ParamPoly operator*(const Rational& c) const {
        ParamPoly r(nvars_);
        if (c == 0) return r;
        for (const auto& [e, v] : terms_) r.terms_[e] = v * c;
        return r;
    }
    ParamPoly operator-() const { return *this * Rational(-1); }

    Rational eval(const std::vector<Rational>& point) const {
        if (static_cast<int>(point.size()) != nvars_)
            throw std::invalid_argument("evaluation point length mismatch");
        Rational total = 0;
        for (const auto& [e, c] : terms_) {
            Rational t = c;
            for (int i = 0; i < nvars_; ++i)
                for (int k = 0; k < e[i]; ++k) t *= point[i];
            total += t;
        }
        return total;
    }

    // Substitutes a value for one variable; keeps the variable count so that
    // term keys stay comparable across substitution steps.
    ParamPoly substitute(int var, const Rational& value) const {
        ParamPoly r(nvars_);
        for (const auto& [e, c] : terms_) {
            Rational t = c;
            for (int k = 0; k < e[var]; ++k) t *= value;
            std::vector<int> e2 = e;
            e2[var] = 0;
            r.add_term(e2, t);
        }
        return r;
    }

    bool operator==(const ParamPoly& o) const { return nvars_ == o.nvars_ && terms_ == o.terms_; }

  private:
    void check(const ParamPoly& o) const {
        if (nvars_ != o.nvars_) throw std::invalid_argument("variable count mismatch");
    }

    int nvars_;
    std::map<std::vector<int>, Rational> terms_;
};

// Skew matrix with polynomial entries, used for the generic-form Pfaffian.
class PolyMat {
  public:
    PolyMat(int n, int nvars) : n_(n), nvars_(nvars), a_(static_cast<std::size_t>(n) * n, ParamPoly(nvars)) {}

    int size() const { return n_; }
    ParamPoly& operator()(int i, int j) { return a_[static_cast<std::size_t>(i) * n_ + j]; }
    const ParamPoly& operator()(int i, int j) const { return a_[static_cast<std::size_t>(i) * n_ + j]; }

  private:
    int n_, nvars_;
    std::vector<ParamPoly> a_;
};

// Symbolic Pfaffian by the same memoized subset expansion as the numeric one.
inline ParamPoly symbolic_pfaffian(const PolyMat& a, int nvars) {
    int n = a.size();
    if (n % 2 == 1) return ParamPoly(nvars);
    if (n == 0) return ParamPoly::constant(nvars, 1);
    if (n > 62) throw std::invalid_argument("matrix too large for subset expansion");
    std::unordered_map<std::uint64_t, ParamPoly> memo;
    auto rec = [&](auto&& self, std::uint64_t mask) -> const ParamPoly& {
        auto it = memo.find(mask);
        if (it != memo.end()) return it->second;
        ParamPoly total(nvars);
        if (mask == 0) {
            total = ParamPoly::constant(nvars, 1);
        } else {
            int first = 0;
            while (!(mask >> first & 1)) ++first;
            int sign = 1;
            std::uint64_t rest = mask & ~(std::uint64_t{1} << first);
            for (int j = first + 1; j < n; ++j) {
                if (!(rest >> j & 1)) continue;
                if (!a(first, j).is_zero()) {
                    ParamPoly sub = self(self, rest & ~(std::uint64_t{1} << j));
                    ParamPoly term = a(first, j) * sub;
                    total = sign > 0 ? total + term : total - term;
                }
                sign = -sign;
            }
        }
        return memo.emplace(mask, std::move(total)).first->second;
    };
    return rec(rec, (std::uint64_t{1} << n) - 1);
}

}  // namespace nilsym
