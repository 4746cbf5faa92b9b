#pragma once

#include <vector>

#include "dcrystal/lusztig.hpp"

namespace dcrystal {

// Cell (row, col) of the triangle Delta_n, 1 <= col <= row <= n-1.
// It carries eps_i + eps_j with j = n - col + 1 and i = row - col + 1.
struct TriangleCoord {
    int row = 1;
    int col = 1;
    friend auto operator<=>(const TriangleCoord&, const TriangleCoord&) = default;
};

Root cell_root(int n, TriangleCoord t);
TriangleCoord root_cell(int n, const Root& r);  // r must be a sum root
int cell_position(int n, TriangleCoord t);       // index in i_0 order
int cell_count(int n);
std::vector<TriangleCoord> all_cells(int n);
bool in_triangle(int n, TriangleCoord t);

// Upper datum from rows listed top to bottom; row r has r entries.
LusztigDatum datum_from_rows(int n, const std::vector<std::vector<int>>& rows);
std::vector<std::vector<int>> datum_rows(const LusztigDatum& c);
int cell_value(const LusztigDatum& c, TriangleCoord t);

// Two lattice paths sharing their first cell, `left` strictly left of `right`
// afterwards, ending at adjacent bottom-row cells. A single bottom-row cell is
// the degenerate case used only by max_nonintersecting.
struct DoublePath {
    std::vector<TriangleCoord> left;
    std::vector<TriangleCoord> right;

    TriangleCoord start() const { return left.front(); }
    std::vector<TriangleCoord> cells() const;
    friend bool operator==(const DoublePath&, const DoublePath&) = default;
};

bool is_double_path(int n, const DoublePath& p);
std::vector<DoublePath> enumerate_double_paths(int n, TriangleCoord start);
std::vector<DoublePath> enumerate_all_double_paths(int n);

int path_weight(const LusztigDatum& c, const DoublePath& p);

// Maximum of path_weight over all double paths (equivalently over those at the top cell).
int epsilon_star_n(const LusztigDatum& c);

struct NonIntersectingOptimum {
    int value = 0;
    std::vector<DoublePath> paths;  // paths[k] starts in row 2k+1
};

// Maximum total weight of l pairwise disjoint double paths, the k-th starting in row 2k-1.
NonIntersectingOptimum max_nonintersecting(const LusztigDatum& c, int l);
// All l-tuples of pairwise disjoint double paths (k-th starting in row 2k-1).
std::vector<std::vector<DoublePath>> enumerate_nonintersecting(int n, int l);

// lambda with lambda_{2l-1} = lambda_{2l} = max(l) - max(l-1); trailing zeros dropped.
std::vector<int> shape_from_paths(const LusztigDatum& c);

bool in_BJs(const LusztigDatum& c, int s);
// Cell sets of the inequalities ||c||_p <= s cutting out B^{J,s} (double paths at the top cell).
std::vector<std::vector<TriangleCoord>> polytope_inequalities(int n);

}  // namespace dcrystal
