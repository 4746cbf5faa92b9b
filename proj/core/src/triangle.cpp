#include "dcrystal/triangle.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>

namespace dcrystal {

bool in_triangle(int n, TriangleCoord t) { return t.row >= 1 && t.row <= n - 1 && t.col >= 1 && t.col <= t.row; }

int cell_count(int n) { return n * (n - 1) / 2; }

Root cell_root(int n, TriangleCoord t) {
    if (!in_triangle(n, t)) throw std::invalid_argument("cell outside the triangle");
    return {RootKind::sum, t.row - t.col + 1, n - t.col + 1};
}

TriangleCoord root_cell(int n, const Root& r) {
    if (r.kind != RootKind::sum || r.i < 1 || r.i >= r.j || r.j > n) throw std::invalid_argument("not a sum root");
    int col = n - r.j + 1;
    return {r.i + col - 1, col};
}

int cell_position(int n, TriangleCoord t) { return root_system(n).position(cell_root(n, t)); }

std::vector<TriangleCoord> all_cells(int n) {
    std::vector<TriangleCoord> out;
    for (int r = 1; r <= n - 1; ++r)
        for (int m = 1; m <= r; ++m) out.push_back({r, m});
    return out;
}

LusztigDatum datum_from_rows(int n, const std::vector<std::vector<int>>& rows) {
    require_rank(n);
    if (static_cast<int>(rows.size()) != n - 1)
        throw std::invalid_argument("triangle needs " + std::to_string(n - 1) + " rows, got " +
                                    std::to_string(rows.size()));
    LusztigDatum c(n, Support::upper);
    for (int r = 1; r <= n - 1; ++r) {
        if (static_cast<int>(rows[r - 1].size()) != r)
            throw std::invalid_argument("row " + std::to_string(r) + " needs " + std::to_string(r) + " entries, got " +
                                        std::to_string(rows[r - 1].size()));
        for (int m = 1; m <= r; ++m) {
            int v = rows[r - 1][m - 1];
            if (v < 0)
                throw std::invalid_argument("negative entry at cell (" + std::to_string(r) + "," + std::to_string(m) +
                                            ")");
            c.add(cell_position(n, {r, m}), v);
        }
    }
    return c;
}

std::vector<std::vector<int>> datum_rows(const LusztigDatum& c) {
    const int n = c.rank();
    std::vector<std::vector<int>> rows(n - 1);
    for (int r = 1; r <= n - 1; ++r)
        for (int m = 1; m <= r; ++m) rows[r - 1].push_back(cell_value(c, {r, m}));
    return rows;
}

int cell_value(const LusztigDatum& c, TriangleCoord t) { return c[cell_position(c.rank(), t)]; }

std::vector<TriangleCoord> DoublePath::cells() const {
    std::vector<TriangleCoord> out(left.begin(), left.end());
    out.insert(out.end(), right.begin(), right.end());
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

namespace {

bool is_step(TriangleCoord a, TriangleCoord b) { return b.row == a.row + 1 && (b.col == a.col || b.col == a.col + 1); }

}  // namespace

bool is_double_path(int n, const DoublePath& p) {
    if (p.left.size() != p.right.size() || p.left.size() < 2) return false;
    if (p.left.front() != p.right.front()) return false;
    for (std::size_t k = 0; k < p.left.size(); ++k) {
        if (!in_triangle(n, p.left[k]) || !in_triangle(n, p.right[k])) return false;
        if (k > 0) {
            if (!is_step(p.left[k - 1], p.left[k]) || !is_step(p.right[k - 1], p.right[k])) return false;
            if (p.left[k].col >= p.right[k].col) return false;
        }
    }
    return p.left.back().row == n - 1 && p.right.back().col == p.left.back().col + 1;
}

std::vector<DoublePath> enumerate_double_paths(int n, TriangleCoord start) {
    require_rank(n);
    if (!in_triangle(n, start)) throw std::invalid_argument("start cell outside the triangle");
    std::vector<DoublePath> out;
    if (start.row == n - 1) return out;
    DoublePath cur{{start}, {start}};
    std::function<void()> grow = [&] {
        TriangleCoord l = cur.left.back(), r = cur.right.back();
        if (l.row == n - 1) {
            if (r.col == l.col + 1) out.push_back(cur);
            return;
        }
        for (int dl = 0; dl <= 1; ++dl)
            for (int dr = 0; dr <= 1; ++dr) {
                TriangleCoord nl{l.row + 1, l.col + dl}, nr{r.row + 1, r.col + dr};
                if (nl.col >= nr.col) continue;
                cur.left.push_back(nl);
                cur.right.push_back(nr);
                grow();
                cur.left.pop_back();
                cur.right.pop_back();
            }
    };
    grow();
    return out;
}

std::vector<DoublePath> enumerate_all_double_paths(int n) {
    std::vector<DoublePath> out;
    for (auto t : all_cells(n)) {
        auto ps = enumerate_double_paths(n, t);
        out.insert(out.end(), ps.begin(), ps.end());
    }
    return out;
}

int path_weight(const LusztigDatum& c, const DoublePath& p) {
    int s = 0;
    for (auto t : p.cells()) s += cell_value(c, t);
    return s;
}

int epsilon_star_n(const LusztigDatum& c) {
    int best = 0;
    for (const auto& p : enumerate_double_paths(c.rank(), {1, 1})) best = std::max(best, path_weight(c, p));
    return best;
}

namespace {

struct MaskedPath {
    DoublePath path;
    std::uint64_t mask = 0;
};

std::vector<MaskedPath> paths_in_row(int n, int row) {
    std::vector<MaskedPath> out;
    auto bit = [&](TriangleCoord t) { return std::uint64_t{1} << (cell_position(n, t)); };
    for (int m = 1; m <= row; ++m) {
        if (row == n - 1) {
            DoublePath p{{{row, m}}, {{row, m}}};
            out.push_back({p, bit({row, m})});
            continue;
        }
        for (auto& p : enumerate_double_paths(n, {row, m})) {
            std::uint64_t mask = 0;
            for (auto t : p.cells()) mask |= bit(t);
            out.push_back({std::move(p), mask});
        }
    }
    return out;
}

void check_l(int n, int l) {
    if (l < 0 || 2 * l - 1 > n - 1) throw std::invalid_argument("l out of range for this rank");
}

}  // namespace

std::vector<std::vector<DoublePath>> enumerate_nonintersecting(int n, int l) {
    require_rank(n);
    check_l(n, l);
    std::vector<std::vector<MaskedPath>> rows;
    for (int k = 1; k <= l; ++k) rows.push_back(paths_in_row(n, 2 * k - 1));
    std::vector<std::vector<DoublePath>> out;
    std::vector<DoublePath> cur;
    std::function<void(int, std::uint64_t)> go = [&](int k, std::uint64_t used) {
        if (k == l) {
            out.push_back(cur);
            return;
        }
        for (const auto& mp : rows[k]) {
            if (mp.mask & used) continue;
            cur.push_back(mp.path);
            go(k + 1, used | mp.mask);
            cur.pop_back();
        }
    };
    go(0, 0);
    return out;
}

NonIntersectingOptimum max_nonintersecting(const LusztigDatum& c, int l) {
    const int n = c.rank();
    check_l(n, l);
    std::vector<std::vector<MaskedPath>> rows;
    for (int k = 1; k <= l; ++k) rows.push_back(paths_in_row(n, 2 * k - 1));
    auto weight_of = [&](std::uint64_t mask) {
        int s = 0;
        for (int p = 0; mask; ++p, mask >>= 1)
            if (mask & 1) s += c[p];
        return s;
    };
    NonIntersectingOptimum best;
    best.value = -1;
    std::vector<DoublePath> cur;
    std::function<void(int, std::uint64_t)> go = [&](int k, std::uint64_t used) {
        if (k == l) {
            int v = weight_of(used);
            if (v > best.value) best = {v, cur};
            return;
        }
        for (const auto& mp : rows[k]) {
            if (mp.mask & used) continue;
            cur.push_back(mp.path);
            go(k + 1, used | mp.mask);
            cur.pop_back();
        }
    };
    go(0, 0);
    if (best.value < 0) throw std::logic_error("no non-intersecting tuple exists");
    return best;
}

std::vector<int> shape_from_paths(const LusztigDatum& c) {
    const int n = c.rank();
    std::vector<int> lambda;
    int prev = 0;
    for (int l = 1; 2 * l - 1 <= n - 1; ++l) {
        int cur = max_nonintersecting(c, l).value;
        lambda.push_back(cur - prev);
        lambda.push_back(cur - prev);
        prev = cur;
    }
    while (!lambda.empty() && lambda.back() == 0) lambda.pop_back();
    return lambda;
}

bool in_BJs(const LusztigDatum& c, int s) {
    if (!fits_support(c.rank(), c.values(), Support::upper)) return false;
    return epsilon_star_n(c) <= s;
}

std::vector<std::vector<TriangleCoord>> polytope_inequalities(int n) {
    std::vector<std::vector<TriangleCoord>> out;
    for (const auto& p : enumerate_double_paths(n, {1, 1})) out.push_back(p.cells());
    return out;
}

}  // namespace dcrystal
