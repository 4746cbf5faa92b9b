#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "dcrystal/lusztig.hpp"
#include "dcrystal/tableau.hpp"
#include "dcrystal/triangle.hpp"

namespace gen {

class Source {
public:
    explicit Source(std::uint64_t seed) : rng_(seed) {}

    int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }
    bool coin() { return uniform(0, 1) == 1; }
    std::mt19937_64& engine() { return rng_; }

    // Entries in 0..bound; roughly a third of the cells are forced to zero so
    // that sparse data show up too.
    dcrystal::LusztigDatum upper(int n, int bound) {
        std::vector<std::vector<int>> rows;
        for (int r = 1; r <= n - 1; ++r) {
            std::vector<int> row;
            for (int c = 0; c < r; ++c) row.push_back(uniform(0, 2) == 0 ? 0 : uniform(0, bound));
            rows.push_back(row);
        }
        return dcrystal::datum_from_rows(n, rows);
    }

    dcrystal::LusztigDatum full(int n, int bound) {
        const int size = n * n - n;
        std::vector<int> v(size);
        for (int& x : v) x = uniform(0, 2) == 0 ? 0 : uniform(0, bound);
        return dcrystal::LusztigDatum(n, dcrystal::Support::full, v);
    }

    dcrystal::Word word(int n, int length) {
        dcrystal::Word w;
        for (int k = 0; k < length; ++k) w.push_back(dcrystal::Letter{uniform(1, n)});
        return w;
    }

    // Random semistandard skew tableau over {1..n}-bar: random outer and inner
    // partitions, cells filled row by row with the smallest legal letter or a
    // random larger one.
    dcrystal::SkewTableau skew(int n, int max_rows, int max_cols) {
        using dcrystal::Letter;
        for (;;) {
            int rows = uniform(1, std::min(max_rows, n));
            std::vector<int> outer(rows), inner(rows);
            int prev = max_cols;
            for (int r = 0; r < rows; ++r) prev = outer[r] = uniform(1, prev);
            prev = outer[rows - 1];
            for (int r = rows; r-- > 0;) {
                int cap = r + 1 < rows ? std::max(inner[r + 1], 0) : 0;
                inner[r] = uniform(cap, std::min(outer[r] - 1, cap + 2));
            }
            // inner must be a partition too
            for (int r = rows - 1; r-- > 0;) inner[r] = std::max(inner[r], inner[r + 1]);
            bool shape_ok = true;
            for (int r = 0; r < rows; ++r) shape_ok = shape_ok && inner[r] < outer[r];
            if (!shape_ok) continue;

            std::vector<std::vector<Letter>> fill(rows);
            bool ok = true;
            for (int r = 0; r < rows && ok; ++r) {
                for (int c = inner[r]; c < outer[r] && ok; ++c) {
                    // larger index = smaller letter; rows weakly increase, columns strictly
                    int hi = n;  // smallest letter n-bar
                    if (c > inner[r]) hi = std::min(hi, fill[r].back().index);
                    if (r > 0 && c >= inner[r - 1] && c < outer[r - 1])
                        hi = std::min(hi, fill[r - 1][c - inner[r - 1]].index - 1);
                    if (hi < 1) {
                        ok = false;
                        break;
                    }
                    fill[r].push_back(Letter{uniform(1, hi)});
                }
            }
            if (!ok) continue;
            return dcrystal::SkewTableau(inner, fill);
        }
    }

private:
    std::mt19937_64 rng_;
};

inline dcrystal::Word word_of(std::initializer_list<int> xs) {
    dcrystal::Word w;
    for (int x : xs) w.push_back(dcrystal::Letter{x});
    return w;
}

inline std::vector<std::vector<dcrystal::Letter>> letters(const std::vector<std::vector<int>>& rows) {
    std::vector<std::vector<dcrystal::Letter>> out;
    for (const auto& r : rows) {
        out.emplace_back();
        for (int x : r) out.back().push_back(dcrystal::Letter{x});
    }
    return out;
}

}  // namespace gen
