#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "dcrystal/lusztig.hpp"
#include "dcrystal/tableau.hpp"

namespace dcrystal {

// Affine operators on B^{J,s}, i in 0..n; none when the result leaves B^{J,s}.
std::optional<LusztigDatum> f_affine(const LusztigDatum& c, int i, int s);
std::optional<LusztigDatum> e_affine(const LusztigDatum& c, int i, int s);

std::vector<LusztigDatum> enumerate_BJs(int n, int s);

// Weyl dimension of V(s varpi_n) for D_n.
long long weyl_dimension_spin_multiple(int n, int s);

// Operators on Knuth classes of tableaux with at most s columns; classes are
// represented by their rectification.
std::optional<SkewTableau> f_tableau_class(const SkewTableau& t, int i, int n, int s);
std::optional<SkewTableau> e_tableau_class(const SkewTableau& t, int i, int n, int s);

enum class GraphSide { lusztig, tableau };

// Labeled digraph with vertices 0..size-1; edges (from, to, label) for f_label.
struct CrystalGraph {
    int n = 0;
    int s = 0;
    std::vector<std::string> labels;
    std::vector<std::tuple<int, int, int>> edges;

    int size() const { return static_cast<int>(labels.size()); }
};

struct LusztigCrystal {
    std::vector<LusztigDatum> vertices;
    CrystalGraph graph;
};

struct TableauCrystal {
    std::vector<SkewTableau> vertices;
    CrystalGraph graph;
};

// Closure of the zero datum / empty tableau under all f_i and e_i.
LusztigCrystal lusztig_crystal(int n, int s);
TableauCrystal tableau_crystal(int n, int s);
CrystalGraph crystal_graph(int n, int s, GraphSide side);

// Checks that `vertex_map` is a bijection carrying every labeled edge of a onto b.
bool is_isomorphism(const CrystalGraph& a, const CrystalGraph& b, const std::vector<int>& vertex_map);

struct StringReport {
    bool regular = true;
    std::string message;
};

// phi_i - epsilon_i = <wt + s varpi_n, h_i>, strings are finite, and f, e are mutually inverse.
StringReport check_regular(int n, int s);

// Every operator defined on B^{J,s} agrees with the same operator on B^{J,t}, s <= t.
bool check_embedding(int n, int s, int t);

std::string to_dot(const CrystalGraph& g);
std::string graph_json(const CrystalGraph& g);

}  // namespace dcrystal
