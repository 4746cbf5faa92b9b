#pragma once

// Reference implementations used only by the tests. Each one is written from
// the definitions directly and shares no code with the library.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <vector>

#include "dcrystal/tableau.hpp"

namespace oracle {

using Vec = std::vector<int>;

// Simple root alpha_i of D_n in eps coordinates.
inline Vec simple_root(int n, int i) {
    Vec v(n, 0);
    if (i < n) {
        v[i - 1] = 1;
        v[i] = -1;
    } else {
        v[n - 2] = 1;
        v[n - 1] = 1;
    }
    return v;
}

inline Vec reflect(int n, Vec v, int i) {
    if (i < n) {
        std::swap(v[i - 1], v[i]);
    } else {
        int a = v[n - 2], b = v[n - 1];
        v[n - 2] = -b;
        v[n - 1] = -a;
    }
    return v;
}

inline bool is_positive(const Vec& v) {
    for (int x : v)
        if (x != 0) return x > 0;
    return false;
}

// Closure of the simple roots under the simple reflections, positive part only.
inline std::set<Vec> positive_roots(int n) {
    std::set<Vec> all;
    std::vector<Vec> todo;
    for (int i = 1; i <= n; ++i) todo.push_back(simple_root(n, i));
    while (!todo.empty()) {
        Vec v = todo.back();
        todo.pop_back();
        if (!all.insert(v).second) continue;
        for (int i = 1; i <= n; ++i) todo.push_back(reflect(n, v, i));
    }
    std::set<Vec> pos;
    for (const auto& v : all)
        if (is_positive(v)) pos.insert(v);
    return pos;
}

// beta_k = s_{i_1} ... s_{i_{k-1}} alpha_{i_k}
inline std::vector<Vec> convex_order(int n, const std::vector<int>& word) {
    std::vector<Vec> out;
    for (std::size_t k = 0; k < word.size(); ++k) {
        Vec v = simple_root(n, word[k]);
        for (std::size_t m = k; m-- > 0;) v = reflect(n, v, word[m]);
        out.push_back(v);
    }
    return out;
}

// dim V(s varpi_n) from the Weyl dimension formula, in doubled coordinates.
inline long long weyl_dimension(int n, int s) {
    Vec lam2(n, s), rho2(n);
    for (int k = 0; k < n; ++k) rho2[k] = 2 * (n - 1 - k);
    unsigned __int128 num = 1, den = 1;
    for (const auto& a : positive_roots(n)) {
        long long x = 0, y = 0;
        for (int k = 0; k < n; ++k) {
            x += static_cast<long long>(lam2[k] + rho2[k]) * a[k];
            y += static_cast<long long>(rho2[k]) * a[k];
        }
        num *= static_cast<unsigned __int128>(x);
        den *= static_cast<unsigned __int128>(y);
        unsigned __int128 p = num, q = den;
        while (q != 0) {
            auto t = p % q;
            p = q;
            q = t;
        }
        num /= p;
        den /= p;
    }
    return static_cast<long long>(num / den);
}

// Type A bracketing on a word over {1..n}-bar: (i+1)-bar reads '+', i-bar reads '-';
// a '+' followed later by an unmatched '-' cancels.
struct Bracket {
    std::vector<std::size_t> plus;   // surviving '+' positions, left to right
    std::vector<std::size_t> minus;  // surviving '-' positions, left to right
};

inline Bracket bracket(const dcrystal::Word& w, int i) {
    Bracket b;
    for (std::size_t k = 0; k < w.size(); ++k) {
        if (w[k].index == i + 1) {
            b.plus.push_back(k);
        } else if (w[k].index == i) {
            if (!b.plus.empty())
                b.plus.pop_back();
            else
                b.minus.push_back(k);
        }
    }
    return b;
}

inline std::optional<dcrystal::Word> word_f(dcrystal::Word w, int i) {
    auto b = bracket(w, i);
    if (b.plus.empty()) return std::nullopt;
    w[b.plus.front()].index = i;
    return w;
}

inline std::optional<dcrystal::Word> word_e(dcrystal::Word w, int i) {
    auto b = bracket(w, i);
    if (b.minus.empty()) return std::nullopt;
    w[b.minus.back()].index = i + 1;
    return w;
}

// Knuth class by exhaustive search over elementary moves
// y x z <-> y z x (x < y <= z) and x z y <-> z x y (x <= y < z).
// Reading words run right to left, so the moves act on the reversed word.
inline std::set<std::vector<int>> knuth_class(dcrystal::Word w) {
    std::reverse(w.begin(), w.end());
    using dcrystal::Letter;
    auto key = [](const dcrystal::Word& u) {
        std::vector<int> v;
        for (auto x = u.rbegin(); x != u.rend(); ++x) v.push_back(x->index);
        return v;
    };
    std::set<std::vector<int>> seen{key(w)};
    std::vector<dcrystal::Word> todo{w};
    auto visit = [&](const dcrystal::Word& u) {
        if (seen.insert(key(u)).second) todo.push_back(u);
    };
    while (!todo.empty()) {
        auto u = todo.back();
        todo.pop_back();
        for (std::size_t k = 0; k + 2 < u.size(); ++k) {
            Letter p = u[k], q = u[k + 1], r = u[k + 2];
            // p q r with q < p <= r  ->  p r q
            if (q < p && p <= r) {
                auto v = u;
                std::swap(v[k + 1], v[k + 2]);
                visit(v);
            }
            // p q r with r < p <= q  ->  p r q
            if (r < p && p <= q) {
                auto v = u;
                std::swap(v[k + 1], v[k + 2]);
                visit(v);
            }
            // p q r with p <= r < q  ->  q p r
            if (p <= r && r < q) {
                auto v = u;
                std::swap(v[k], v[k + 1]);
                visit(v);
            }
            // p q r with q <= r < p  ->  q p r
            if (q <= r && r < p) {
                auto v = u;
                std::swap(v[k], v[k + 1]);
                visit(v);
            }
        }
    }
    return seen;
}

// Cells of Delta_n as (row, col), 1 <= col <= row <= n-1, col increasing to the right.
using Cell = std::pair<int, int>;
using Path = std::vector<Cell>;

// All downward lattice paths from `start` to the bottom row.
inline std::vector<Path> lattice_paths(int n, Cell start) {
    std::vector<Path> out;
    std::function<void(Path&)> go = [&](Path& p) {
        auto [r, c] = p.back();
        if (r == n - 1) {
            out.push_back(p);
            return;
        }
        for (int dc : {0, 1}) {
            p.push_back({r + 1, c + dc});
            go(p);
            p.pop_back();
        }
    };
    Path p{start};
    go(p);
    return out;
}

// Cell sets of double paths at `start`: two paths through `start`, the left one
// strictly left of the right one below it, ending in adjacent bottom cells.
inline std::vector<std::set<Cell>> double_paths(int n, Cell start) {
    std::vector<std::set<Cell>> out;
    if (start.first == n - 1) return out;
    auto paths = lattice_paths(n, start);
    for (const auto& a : paths)
        for (const auto& b : paths) {
            bool ok = true;
            for (std::size_t k = 1; k < a.size() && ok; ++k) ok = a[k].second < b[k].second;
            if (!ok || b.back().second != a.back().second + 1) continue;
            std::set<Cell> cells(a.begin(), a.end());
            cells.insert(b.begin(), b.end());
            out.push_back(cells);
        }
    return out;
}

// Maximum of the total weight of l pairwise disjoint double paths whose k-th
// member starts in row 2k-1; a start in the bottom row is a single cell.
inline int max_disjoint(int n, int l, const std::function<int(Cell)>& value) {
    std::vector<std::vector<std::set<Cell>>> choices(l);
    for (int k = 0; k < l; ++k) {
        int row = 2 * k + 1;
        for (int col = 1; col <= row; ++col) {
            if (row == n - 1) {
                choices[k].push_back({{row, col}});
            } else {
                auto ps = double_paths(n, {row, col});
                choices[k].insert(choices[k].end(), ps.begin(), ps.end());
            }
        }
    }
    int best = -1;
    std::set<Cell> used;
    std::function<void(int, int)> go = [&](int k, int acc) {
        if (k == l) {
            best = std::max(best, acc);
            return;
        }
        for (const auto& cells : choices[k]) {
            bool clash = false;
            for (const auto& x : cells) clash = clash || used.count(x);
            if (clash) continue;
            int v = 0;
            for (const auto& x : cells) v += value(x);
            used.insert(cells.begin(), cells.end());
            go(k + 1, acc + v);
            for (const auto& x : cells) used.erase(x);
        }
    };
    go(0, 0);
    return best;
}

// Sign vectors with an even number of minus signs.
inline std::set<Vec> even_spin(int n) {
    std::set<Vec> out;
    for (int mask = 0; mask < (1 << n); ++mask) {
        if (__builtin_popcount(static_cast<unsigned>(mask)) % 2) continue;
        Vec v(n);
        for (int k = 0; k < n; ++k) v[k] = (mask >> k) & 1 ? -1 : 1;
        out.insert(v);
    }
    return out;
}

}  // namespace oracle
