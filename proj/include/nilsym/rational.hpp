#pragma once

#include <gmpxx.h>

#include <optional>
#include <stdexcept>
#include <string>

namespace nilsym {

// Exact rational scalar. mpq_class keeps gcd(|num|, den) = 1 and den >= 1
// after canonicalize(), which every arithmetic operator preserves.
using Rational = mpq_class;

inline Rational rat(long num, long den = 1) {
    if (den == 0) throw std::invalid_argument("rational with zero denominator");
    Rational r(num, den);
    r.canonicalize();
    return r;
}

inline std::string rat_str(const Rational& r) {
    if (r.get_den() == 1) return r.get_num().get_str();
    return r.get_num().get_str() + "/" + r.get_den().get_str();
}

// Parses "a" or "a/b" with integer a and positive integer b.
inline std::optional<Rational> parse_rational(const std::string& s) {
    if (s.empty()) return std::nullopt;
    auto slash = s.find('/');
    std::string num = s.substr(0, slash);
    std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
    auto is_int = [](const std::string& t, bool allow_sign) {
        if (t.empty()) return false;
        std::size_t i = 0;
        if (allow_sign && (t[0] == '-' || t[0] == '+')) i = 1;
        if (i == t.size()) return false;
        for (; i < t.size(); ++i)
            if (t[i] < '0' || t[i] > '9') return false;
        return true;
    };
    if (!is_int(num, true) || !is_int(den, false)) return std::nullopt;
    if (num[0] == '+') num.erase(0, 1);   // mpz_set_str rejects a leading '+'
    mpz_class d(den);
    if (d <= 0) return std::nullopt;
    Rational r(mpz_class(num), d);
    r.canonicalize();
    return r;
}

}  // namespace nilsym
