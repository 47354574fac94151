#pragma once

#include <map>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "nilsym/exterior.hpp"
#include "nilsym/lie_algebra.hpp"
#include "nilsym/rational.hpp"

namespace nilsym {

inline LieAlgebra heisenberg(int p) {
    if (p < 1) throw std::invalid_argument("heisenberg needs p >= 1");
    LieAlgebra g(2 * p + 1, "heisenberg_" + std::to_string(p));
    for (int i = 1; i <= p; ++i) g.add_constant(i, p + i, 2 * p + 1, 1);
    return g;
}

inline LieAlgebra free_two_step(int k) {
    if (k < 2) throw std::invalid_argument("free_two_step needs k >= 2");
    LieAlgebra g(k + k * (k - 1) / 2, "free_two_step_" + std::to_string(k));
    int next = k + 1;
    for (int i = 1; i <= k; ++i)
        for (int j = i + 1; j <= k; ++j) g.add_constant(i, j, next++, 1);
    return g;
}

struct SimpleGraph {
    int vertices = 0;
    std::vector<std::pair<int, int>> edges;   // 1-based, i < j, no repeats
};

// One basis vector per vertex plus one central vector per edge.
inline LieAlgebra graph_algebra(const SimpleGraph& graph) {
    int v = graph.vertices;
    for (auto [a, b] : graph.edges)
        if (!(1 <= a && a < b && b <= v)) throw std::invalid_argument("bad edge");
    LieAlgebra g(v + static_cast<int>(graph.edges.size()), "graph_algebra");
    int next = v + 1;
    for (auto [a, b] : graph.edges) g.add_constant(a, b, next++, 1);
    return g;
}

// The graph algebra is symplectic iff every connected component has at most
// as many edges as vertices.
inline bool graph_symplectic_criterion(const SimpleGraph& graph) {
    std::vector<int> parent(graph.vertices + 1);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (auto [a, b] : graph.edges) parent[find(a)] = find(b);
    std::map<int, std::pair<int, int>> comp;   // root -> (vertices, edges)
    for (int i = 1; i <= graph.vertices; ++i) comp[find(i)].first++;
    for (auto [a, b] : graph.edges) comp[find(a)].second++;
    for (const auto& [root, ve] : comp)
        if (ve.second > ve.first) return false;
    return true;
}

enum class Expected { Yes, No, Unknown };

struct CatalogEntry {
    std::string name;
    LieAlgebra algebra{0};
    Expected symplectic = Expected::Unknown;
    std::optional<PForm> witness;
    CharSeq charseq;          // empty when not frozen
    std::string note;
};

namespace detail {

// Brackets written as structure equations d(alpha_k) = sum c alpha_i ^ alpha_j,
// i.e. C_ij^k = -c.
struct MCTerm {
    int i, j, k;
    Rational c;
};

inline LieAlgebra from_structure_equations(int dim, const std::string& name,
                                           const std::vector<MCTerm>& terms) {
    LieAlgebra g(dim, name);
    for (const auto& t : terms) g.add_constant(t.i, t.j, t.k, -t.c);
    return g;
}

inline PForm form_of(int dim, const std::vector<std::tuple<int, int, Rational>>& entries) {
    PForm f(dim, 2);
    for (const auto& [i, j, c] : entries) f.add({i, j}, c);
    return f;
}

}  // namespace detail

// dim 2p algebra with no symplectic structure exactly when p = 4.
inline LieAlgebra nosym_general(int p) {
    if (p < 3) throw std::invalid_argument("nosym_general needs p >= 3");
    int n = 2 * p;
    std::vector<detail::MCTerm> terms;
    for (int i = 1; i <= p - 2; ++i) terms.push_back({1, 2 * i, 2 * i + 1, 1});
    terms.push_back({1, 2 * p - 2, 2 * p - 1, 1});
    terms.push_back({2 * p - 2, 2 * p, 2 * p - 1, 1});
    int limit = (p % 2 == 0) ? 2 * p - 4 : 2 * p - 6;
    for (int k = 0; 4 * k + 4 <= limit; ++k)
        terms.push_back({4 * k + 2, 4 * k + 4, 2 * p - 1, 1});
    return detail::from_structure_equations(n, "nosym_general_" + std::to_string(p), terms);
}

inline std::vector<CatalogEntry> catalog_entries() {
    using detail::form_of;
    using detail::from_structure_equations;
    std::vector<CatalogEntry> out;
    auto push = [&](CatalogEntry e) { out.push_back(std::move(e)); };

    {
        CatalogEntry e;
        e.name = "k8";
        e.algebra = from_structure_equations(8, "k8",
                                             {{1, 2, 3, 1},
                                              {4, 6, 3, 1},
                                              {7, 8, 3, 1},
                                              {1, 4, 5, 1},
                                              {2, 8, 5, 1},
                                              {6, 7, 5, 1}});
        e.symplectic = Expected::No;
        e.charseq = CharSeq{{2, 2, 1, 1, 1, 1}};
        e.note = "both nonzero structure equations have Cartan class 7";
        push(std::move(e));
    }
    {
        CatalogEntry e;
        e.name = "nosym8";
        e.algebra = from_structure_equations(8, "nosym8",
                                             {{1, 2, 3, -1},
                                              {1, 4, 5, -1},
                                              {1, 6, 7, -1},
                                              {2, 4, 7, -1},
                                              {6, 8, 7, -1}});
        e.symplectic = Expected::No;
        e.charseq = CharSeq{{2, 2, 2, 1, 1}};
        push(std::move(e));
    }
    {
        CatalogEntry e;
        e.name = "filiform6";
        LieAlgebra g(6, "filiform6");
        g.add_constant(1, 2, 3, 1);
        g.add_constant(1, 3, 4, 1);
        g.add_constant(1, 4, 5, 1);
        g.add_constant(1, 5, 6, 1);
        g.add_constant(2, 3, 5, 1);
        g.add_constant(2, 4, 6, 1);
        e.algebra = g;
        e.symplectic = Expected::Yes;
        e.witness = form_of(6, {{1, 6, 1}, {2, 5, 2}, {3, 4, -1}});
        e.charseq = CharSeq{{5, 1}};
        push(std::move(e));
    }
    {
        CatalogEntry e;
        e.name = "dim6_1";
        LieAlgebra g(6, "dim6_1");
        g.add_constant(1, 2, 3, 1);
        g.add_constant(1, 4, 5, 1);
        g.add_constant(2, 6, 5, 1);
        e.algebra = g;
        e.symplectic = Expected::Yes;
        e.witness = form_of(6, {{1, 5, 1}, {2, 4, 1}, {3, 6, 1}});
        e.charseq = CharSeq{{2, 2, 1, 1}};
        push(std::move(e));
    }
    {
        CatalogEntry e;
        e.name = "dim6_2";
        LieAlgebra g(6, "dim6_2");
        g.add_constant(1, 2, 3, 1);
        g.add_constant(1, 4, 5, 1);
        g.add_constant(2, 6, 5, 1);
        g.add_constant(4, 6, 3, 1);
        e.algebra = g;
        e.symplectic = Expected::Yes;
        e.witness = form_of(6, {{1, 5, 1}, {2, 4, 1}, {3, 6, 1}});
        e.charseq = CharSeq{{2, 2, 1, 1}};
        push(std::move(e));
    }
    {
        CatalogEntry e;
        e.name = "dim6_3";
        LieAlgebra g(6, "dim6_3");
        g.add_constant(1, 2, 3, 1);
        g.add_constant(1, 4, 5, 1);
        g.add_constant(2, 6, 5, -1);
        g.add_constant(4, 6, 3, 1);
        e.algebra = g;
        e.symplectic = Expected::Yes;
        e.witness = form_of(6, {{4, 5, 1}, {1, 6, 1}, {2, 3, -1}});
        e.charseq = CharSeq{{2, 2, 1, 1}};
        e.note = "real form; not isomorphic to dim6_2 over the rationals";
        push(std::move(e));
    }
    {
        CatalogEntry e;
        e.name = "n7_124";
        e.algebra = from_structure_equations(
            8, "n7_124", {{1, 2, 3, 1}, {4, 7, 3, 1}, {1, 4, 5, 1}, {6, 7, 5, 1}});
        e.symplectic = Expected::Yes;
        e.charseq = CharSeq{{2, 2, 1, 1, 1, 1}};
        push(std::move(e));
    }
    {
        CatalogEntry e;
        e.name = "n6_19";
        e.algebra =
            from_structure_equations(8, "n6_19", {{1, 2, 3, 1}, {1, 4, 5, 1}, {2, 6, 5, 1}});
        e.symplectic = Expected::Yes;
        e.charseq = CharSeq{{2, 2, 1, 1, 1, 1}};
        push(std::move(e));
    }
    {
        CatalogEntry e;
        e.name = "n6_20";
        e.algebra = from_structure_equations(8, "n6_20",
                                             {{1, 2, 3, 1}, {1, 4, 5, 1}, {2, 4, 6, 1}});
        e.symplectic = Expected::Yes;
        e.charseq = CharSeq{{2, 2, 1, 1, 1, 1}};
        push(std::move(e));
    }
    {
        CatalogEntry e;
        e.name = "n6_20_1";
        e.algebra = from_structure_equations(
            8, "n6_20_1", {{1, 2, 3, 1}, {4, 6, 3, 1}, {1, 4, 5, 1}, {2, 6, 5, -1}});
        e.symplectic = Expected::Yes;
        e.charseq = CharSeq{{2, 2, 1, 1, 1, 1}};
        e.note = "real form of n6_20";
        push(std::move(e));
    }
    {
        CatalogEntry e;
        e.name = "n5_5";
        e.algebra = from_structure_equations(8, "n5_5", {{1, 2, 3, 1}, {1, 4, 5, 1}});
        e.symplectic = Expected::Yes;
        e.charseq = CharSeq{{2, 2, 1, 1, 1, 1}};
        push(std::move(e));
    }
    {
        CatalogEntry e;
        e.name = "n3_1";
        e.algebra =
            from_structure_equations(8, "n3_1", {{1, 2, 3, 1}, {1, 4, 5, 1}, {4, 6, 5, 1}});
        e.symplectic = Expected::Yes;
        e.charseq = CharSeq{{2, 2, 1, 1, 1, 1}};
        push(std::move(e));
    }
    {
        CatalogEntry e;
        e.name = "mc41";
        e.algebra = from_structure_equations(8, "mc41",
                                             {{1, 2, 3, 1}, {1, 4, 5, 1}, {2, 4, 8, 1}});
        e.symplectic = Expected::Yes;
        push(std::move(e));
    }
    {
        CatalogEntry e;
        e.name = "g32";
        LieAlgebra g(8, "g32");
        g.add_constant(1, 2, 3, 1);
        g.add_constant(1, 4, 5, 1);
        g.add_constant(1, 6, 7, 1);
        e.algebra = g;
        e.symplectic = Expected::Unknown;
        e.charseq = CharSeq{{2, 2, 2, 1, 1}};
        e.note = "base point of the dimension-8 families with three 2-chains";
        push(std::move(e));
    }
    {
        CatalogEntry e;
        e.name = "g24";
        LieAlgebra g(8, "g24");
        g.add_constant(1, 2, 3, 1);
        g.add_constant(1, 4, 5, 1);
        e.algebra = g;
        e.symplectic = Expected::Unknown;
        e.charseq = CharSeq{{2, 2, 1, 1, 1, 1}};
        e.note = "base point of the dimension-8 families with two 2-chains";
        push(std::move(e));
    }
    {
        CatalogEntry e;
        e.name = "h81_s21";
        LieAlgebra g(8, "h81_s21");
        g.add_constant(1, 2, 3, 1);
        g.add_constant(1, 4, 5, 1);
        g.add_constant(1, 6, 7, 1);
        g.add_constant(2, 4, 7, 1);
        g.add_constant(4, 8, 3, 1);
        g.add_constant(6, 8, 5, 1);
        e.algebra = g;
        e.symplectic = Expected::Unknown;
        push(std::move(e));
    }
    {
        CatalogEntry e;
        e.name = "h82_s21";
        LieAlgebra g(8, "h82_s21");
        g.add_constant(1, 2, 3, 1);
        g.add_constant(1, 4, 5, 1);
        g.add_constant(1, 6, 7, 1);
        g.add_constant(2, 6, 5, 1);
        g.add_constant(2, 4, 8, 1);
        e.algebra = g;
        e.symplectic = Expected::Unknown;
        push(std::move(e));
    }
    {
        CatalogEntry e;
        e.name = "h82_rigid";
        LieAlgebra g(8, "h82_rigid");
        g.add_constant(1, 2, 3, 1);
        g.add_constant(1, 4, 5, 1);
        g.add_constant(1, 6, 7, 1);
        g.add_constant(2, 4, 7, 1);
        g.add_constant(4, 8, 3, 1);
        g.add_constant(6, 8, 5, 1);
        e.algebra = g;
        e.symplectic = Expected::Yes;
        e.witness = form_of(8, {{1, 8, 1}, {2, 7, 1}, {3, 6, -1}, {4, 5, 1}});
        e.note = "same bracket set as h81_s21 under a second naming convention";
        push(std::move(e));
    }
    {
        CatalogEntry e;
        e.name = "heisenberg3";
        e.algebra = heisenberg(3);
        e.symplectic = Expected::No;   // odd dimension
        push(std::move(e));
    }
    {
        CatalogEntry e;
        e.name = "free2step3";
        e.algebra = free_two_step(3);
        e.symplectic = Expected::Yes;
        push(std::move(e));
    }
    {
        CatalogEntry e;
        e.name = "nosym10";
        e.algebra = nosym_general(5);
        e.symplectic = Expected::Unknown;
        e.note = "dimension-10 member of the nosym family; the frozen theorem only covers p = 4";
        push(std::move(e));
    }
    return out;
}

inline std::optional<CatalogEntry> catalog_named(const std::string& name) {
    for (auto& e : catalog_entries())
        if (e.name == name) return e;
    return std::nullopt;
}

inline std::vector<std::string> catalog_names() {
    std::vector<std::string> names;
    for (const auto& e : catalog_entries()) names.push_back(e.name);
    return names;
}

}  // namespace nilsym
