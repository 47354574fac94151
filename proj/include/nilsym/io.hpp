#pragma once

#include <cctype>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "nilsym/lie_algebra.hpp"
#include "nilsym/matrix.hpp"
#include "nilsym/rational.hpp"

namespace nilsym {

struct ParseError : std::runtime_error {
    int line;
    int column;
    ParseError(int l, int c, const std::string& msg)
        : std::runtime_error("line " + std::to_string(l) + ", column " + std::to_string(c) +
                             ": " + msg),
          line(l),
          column(c) {}
};

namespace detail {

struct Cursor {
    const std::string& text;
    int line;
    std::size_t pos = 0;

    void skip_ws() {
        while (pos < text.size() && (text[pos] == ' ' || text[pos] == '\t')) ++pos;
    }
    bool done() {
        skip_ws();
        return pos >= text.size();
    }
    [[noreturn]] void fail(const std::string& msg) {
        throw ParseError(line, static_cast<int>(pos) + 1, msg);
    }
    void expect(char c) {
        skip_ws();
        if (pos >= text.size() || text[pos] != c)
            fail(std::string("expected '") + c + "'");
        ++pos;
    }
    int integer() {
        skip_ws();
        std::size_t start = pos;
        if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) ++pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
        if (pos == start) fail("expected an integer");
        return std::stoi(text.substr(start, pos - start));
    }
    Rational rational() {
        skip_ws();
        std::size_t start = pos;
        if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) ++pos;
        while (pos < text.size() &&
               (std::isdigit(static_cast<unsigned char>(text[pos])) || text[pos] == '/'))
            ++pos;
        if (pos == start) fail("expected a rational number");
        auto r = parse_rational(text.substr(start, pos - start));
        if (!r) fail("malformed rational number");
        return *r;
    }
    std::string word() {
        skip_ws();
        std::size_t start = pos;
        while (pos < text.size() &&
               (std::isalnum(static_cast<unsigned char>(text[pos])) || text[pos] == '_'))
            ++pos;
        if (pos == start) fail("expected a name");
        return text.substr(start, pos - start);
    }
};

inline std::string strip_comment(const std::string& s) {
    auto h = s.find('#');
    return h == std::string::npos ? s : s.substr(0, h);
}

}  // namespace detail

// Text grammar:
//   algebra <name>            (optional)
//   dim <n>                   (required, before any bracket)
//   [i,j] = k:c, k:c, ...     (one line per stored pair, i < j)
// with '#' comments and blank lines ignored.
inline LieAlgebra parse_algebra(const std::string& text) {
    std::istringstream in(text);
    std::string raw;
    int lineno = 0;
    std::string name;
    std::optional<LieAlgebra> alg;
    while (std::getline(in, raw)) {
        ++lineno;
        std::string line = detail::strip_comment(raw);
        detail::Cursor cur{line, lineno};
        if (cur.done()) continue;
        if (std::isalpha(static_cast<unsigned char>(line[cur.pos]))) {
            std::string kw = cur.word();
            if (kw == "algebra") {
                name = cur.word();
                if (!cur.done()) cur.fail("trailing characters after algebra name");
            } else if (kw == "dim") {
                if (alg) cur.fail("duplicate dim line");
                int n = cur.integer();
                if (n < 0) cur.fail("dimension must be nonnegative");
                if (!cur.done()) cur.fail("trailing characters after dimension");
                alg.emplace(n, name);
            } else {
                cur.fail("unknown keyword '" + kw + "'");
            }
            continue;
        }
        if (!alg) cur.fail("bracket line before dim");
        cur.expect('[');
        int i = cur.integer();
        cur.expect(',');
        int j = cur.integer();
        cur.expect(']');
        cur.expect('=');
        if (!(1 <= i && i < j && j <= alg->dim())) cur.fail("bracket pair out of range");
        while (true) {
            int k = cur.integer();
            cur.expect(':');
            Rational c = cur.rational();
            if (!(1 <= k && k <= alg->dim())) cur.fail("bracket target out of range");
            alg->add_constant(i, j, k, c);
            if (cur.done()) break;
            cur.expect(',');
        }
    }
    if (!alg) throw ParseError(lineno, 1, "missing dim line");
    if (!name.empty()) alg->set_name(name);
    return *alg;
}

// Canonical serialization: name, dim, pairs sorted by (i,j), targets sorted by k.
inline std::string serialize_algebra(const LieAlgebra& l) {
    std::ostringstream out;
    if (!l.name().empty()) out << "algebra " << l.name() << "\n";
    out << "dim " << l.dim() << "\n";
    for (const auto& [pair, entry] : l.constants()) {
        if (entry.empty()) continue;
        out << "[" << pair.first << "," << pair.second << "] = ";
        bool first = true;
        for (const auto& [k, c] : entry) {
            if (!first) out << ", ";
            first = false;
            out << k << ":" << rat_str(c);
        }
        out << "\n";
    }
    return out.str();
}

// 2-form syntax "i,j:c; i,j:c" (also accepts newline separators).
inline std::vector<std::tuple<int, int, Rational>> parse_form_entries(const std::string& text) {
    std::vector<std::tuple<int, int, Rational>> entries;
    std::string piece;
    std::string normalized = text;
    for (char& c : normalized)
        if (c == '\n') c = ';';
    std::istringstream in(normalized);
    int field = 0;
    while (std::getline(in, piece, ';')) {
        ++field;
        detail::Cursor cur{piece, field};
        if (cur.done()) continue;
        int i = cur.integer();
        cur.expect(',');
        int j = cur.integer();
        cur.expect(':');
        Rational c = cur.rational();
        if (!cur.done()) cur.fail("trailing characters in form entry");
        entries.emplace_back(i, j, c);
    }
    return entries;
}

// Whitespace-separated rational matrix, one row per line.
inline Mat parse_matrix(const std::string& text) {
    std::istringstream in(text);
    std::string raw;
    std::vector<Vec> rows;
    int lineno = 0;
    while (std::getline(in, raw)) {
        ++lineno;
        std::string line = detail::strip_comment(raw);
        std::istringstream ls(line);
        std::string tok;
        Vec row;
        while (ls >> tok) {
            auto r = parse_rational(tok);
            if (!r) throw ParseError(lineno, 1, "malformed matrix entry '" + tok + "'");
            row.push_back(*r);
        }
        if (!row.empty()) rows.push_back(std::move(row));
    }
    if (rows.empty()) throw ParseError(lineno, 1, "empty matrix");
    for (const auto& r : rows)
        if (r.size() != rows[0].size()) throw ParseError(lineno, 1, "ragged matrix rows");
    return Mat::from_rows(rows);
}

}  // namespace nilsym
