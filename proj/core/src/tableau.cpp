#include "dcrystal/tableau.hpp"

#include <algorithm>
#include <random>
#include <sstream>
#include <stdexcept>

namespace dcrystal {

Partition conjugate(const Partition& p) {
    Partition out;
    if (p.empty()) return out;
    for (int c = 0; c < p.front(); ++c) {
        int len = 0;
        for (int x : p)
            if (x > c) ++len;
        out.push_back(len);
    }
    return out;
}

SkewTableau::SkewTableau(std::vector<int> inner, std::vector<std::vector<Letter>> rows)
    : inner_(std::move(inner)), rows_(std::move(rows)) {
    if (inner_.size() != rows_.size()) throw std::invalid_argument("inner offsets and rows differ in length");
    for (int x : inner_)
        if (x < 0) throw std::invalid_argument("negative row offset");
    for (const auto& row : rows_)
        for (Letter l : row)
            if (l.index < 1) throw std::invalid_argument("letter index must be positive");
    canonicalize();
}

void SkewTableau::canonicalize() {
    while (!rows_.empty() && rows_.front().empty()) {
        rows_.erase(rows_.begin());
        inner_.erase(inner_.begin());
    }
    while (!rows_.empty() && rows_.back().empty()) {
        rows_.pop_back();
        inner_.pop_back();
    }
    if (rows_.empty()) return;
    int shift = -1;
    for (std::size_t r = 0; r < rows_.size(); ++r)
        if (!rows_[r].empty()) shift = shift < 0 ? inner_[r] : std::min(shift, inner_[r]);
    for (auto& x : inner_) x = std::max(0, x - shift);
}

SkewTableau SkewTableau::normal(std::vector<std::vector<Letter>> rows) {
    std::vector<int> inner(rows.size(), 0);
    return SkewTableau(std::move(inner), std::move(rows));
}

SkewTableau SkewTableau::anti_normal(std::vector<std::vector<Letter>> rows) {
    std::size_t w = 0;
    for (const auto& r : rows) w = std::max(w, r.size());
    std::vector<int> inner;
    for (const auto& r : rows) inner.push_back(static_cast<int>(w - r.size()));
    return SkewTableau(std::move(inner), std::move(rows));
}

int SkewTableau::width() const {
    int w = 0;
    for (std::size_t r = 0; r < rows_.size(); ++r) w = std::max(w, inner_[r] + static_cast<int>(rows_[r].size()));
    return w;
}

int SkewTableau::size() const {
    int s = 0;
    for (const auto& r : rows_) s += static_cast<int>(r.size());
    return s;
}

std::vector<int> SkewTableau::outer() const {
    std::vector<int> out;
    for (std::size_t r = 0; r < rows_.size(); ++r) out.push_back(inner_[r] + static_cast<int>(rows_[r].size()));
    return out;
}

std::optional<Letter> SkewTableau::at(Cell c) const {
    if (c.row < 0 || c.row >= height()) return std::nullopt;
    int k = c.col - inner_[c.row];
    if (k < 0 || k >= static_cast<int>(rows_[c.row].size())) return std::nullopt;
    return rows_[c.row][k];
}

bool SkewTableau::is_skew_shape() const {
    auto out = outer();
    for (int r = 0; r + 1 < height(); ++r)
        if (inner_[r] < inner_[r + 1] || out[r] < out[r + 1]) return false;
    return true;
}

bool SkewTableau::is_normal() const {
    return is_skew_shape() && std::all_of(inner_.begin(), inner_.end(), [](int x) { return x == 0; });
}

bool SkewTableau::is_anti_normal() const {
    if (!is_skew_shape()) return false;
    int w = width();
    for (int x : outer())
        if (x != w) return false;
    return true;
}

bool SkewTableau::is_semistandard() const {
    if (!is_skew_shape()) return false;
    for (int r = 0; r < height(); ++r) {
        for (std::size_t k = 0; k + 1 < rows_[r].size(); ++k)
            if (rows_[r][k + 1] < rows_[r][k]) return false;
        if (r == 0) continue;
        for (std::size_t k = 0; k < rows_[r].size(); ++k) {
            int col = inner_[r] + static_cast<int>(k);
            auto above = at({r - 1, col});
            if (above && !(*above < rows_[r][k])) return false;
        }
    }
    return true;
}

Partition SkewTableau::shape() const {
    Partition p;
    for (const auto& r : rows_) p.push_back(static_cast<int>(r.size()));
    if (is_anti_normal() && !is_normal()) std::reverse(p.begin(), p.end());
    while (!p.empty() && p.back() == 0) p.pop_back();
    if (!std::is_sorted(p.begin(), p.end(), std::greater<>()))
        throw std::logic_error("shape requested for a tableau that is neither normal nor anti-normal");
    return p;
}

std::vector<std::vector<Letter>> SkewTableau::columns() const {
    std::vector<std::vector<Letter>> cols(width());
    for (int r = 0; r < height(); ++r)
        for (std::size_t k = 0; k < rows_[r].size(); ++k) cols[inner_[r] + k].push_back(rows_[r][k]);
    return cols;
}

Word SkewTableau::row_word() const {
    Word w;
    for (const auto& row : rows_)
        for (auto it = row.rbegin(); it != row.rend(); ++it) w.push_back(*it);
    return w;
}

std::vector<Cell> SkewTableau::reading_cells() const {
    std::vector<Cell> out;
    for (int r = 0; r < height(); ++r)
        for (int k = static_cast<int>(rows_[r].size()) - 1; k >= 0; --k) out.push_back({r, inner_[r] + k});
    return out;
}

SkewTableau SkewTableau::with_word(const Word& w) const {
    if (static_cast<int>(w.size()) != size()) throw std::invalid_argument("word length differs from tableau size");
    auto rows = rows_;
    std::size_t p = 0;
    for (auto& row : rows)
        for (auto it = row.rbegin(); it != row.rend(); ++it) *it = w[p++];
    return SkewTableau(inner_, std::move(rows));
}

bool operator==(const SkewTableau& a, const SkewTableau& b) {
    if (a.rows_.size() != b.rows_.size()) return false;
    for (std::size_t r = 0; r < a.rows_.size(); ++r) {
        if (a.rows_[r] != b.rows_[r]) return false;
        if (!a.rows_[r].empty() && a.inner_[r] != b.inner_[r]) return false;
    }
    return true;
}

SkewTableau from_bottom_aligned_columns(const std::vector<std::vector<Letter>>& cols) {
    std::size_t h = 0;
    for (const auto& c : cols) h = std::max(h, c.size());
    std::vector<std::vector<Letter>> rows(h);
    std::vector<int> inner(h, -1);
    for (std::size_t c = 0; c < cols.size(); ++c) {
        std::size_t off = h - cols[c].size();
        for (std::size_t k = 0; k < cols[c].size(); ++k) {
            auto& row = rows[off + k];
            if (row.empty()) inner[off + k] = static_cast<int>(c);
            else if (inner[off + k] + static_cast<int>(row.size()) != static_cast<int>(c))
                throw std::invalid_argument("columns do not form a skew shape");
            row.push_back(cols[c][k]);
        }
    }
    for (auto& x : inner) x = std::max(x, 0);
    SkewTableau t(std::move(inner), std::move(rows));
    if (!t.is_skew_shape()) throw std::invalid_argument("columns do not form a skew shape");
    return t;
}

SkewTableau from_top_aligned_columns(const std::vector<std::vector<Letter>>& cols) {
    std::vector<std::vector<Letter>> rows;
    for (std::size_t c = 0; c < cols.size(); ++c)
        for (std::size_t k = 0; k < cols[c].size(); ++k) {
            if (rows.size() <= k) rows.resize(k + 1);
            if (rows[k].size() != c) throw std::invalid_argument("columns do not form a normal shape");
            rows[k].push_back(cols[c][k]);
        }
    auto t = SkewTableau::normal(std::move(rows));
    if (!t.is_normal()) throw std::invalid_argument("columns do not form a normal shape");
    return t;
}

SkewTableau rotate_complement(const SkewTableau& t, int n) {
    const int h = t.height(), w = t.width();
    auto out = t.outer();
    std::vector<int> inner(h);
    std::vector<std::vector<Letter>> rows(h);
    for (int r = 0; r < h; ++r) {
        const auto& src = t.rows()[h - 1 - r];
        inner[r] = w - out[h - 1 - r];
        for (auto it = src.rbegin(); it != src.rend(); ++it) {
            if (it->index > n) throw std::invalid_argument("letter exceeds alphabet bound");
            rows[r].push_back(complement(*it, n));
        }
    }
    return SkewTableau(std::move(inner), std::move(rows));
}

std::pair<SkewTableau, Cell> column_insert(const SkewTableau& u, Letter a) {
    if (!u.is_normal()) throw std::invalid_argument("column insertion needs a normal tableau");
    auto rows = u.rows();
    Letter x = a;
    for (int j = 0;; ++j) {
        int r = 0;
        for (; r < static_cast<int>(rows.size()) && static_cast<int>(rows[r].size()) > j; ++r) {
            if (rows[r][j] >= x) {
                std::swap(rows[r][j], x);
                break;
            }
        }
        if (r < static_cast<int>(rows.size()) && static_cast<int>(rows[r].size()) > j) continue;
        if (r == static_cast<int>(rows.size())) rows.emplace_back();
        rows[r].push_back(x);
        return {SkewTableau::normal(std::move(rows)), Cell{r, j}};
    }
}

std::pair<SkewTableau, Letter> column_uninsert(const SkewTableau& u, int row) {
    if (!u.is_normal()) throw std::invalid_argument("uninsertion needs a normal tableau");
    auto rows = u.rows();
    if (row < 0 || row >= static_cast<int>(rows.size()) || rows[row].empty())
        throw std::invalid_argument("no cell to remove in that row");
    int j = static_cast<int>(rows[row].size()) - 1;
    if (row + 1 < static_cast<int>(rows.size()) && static_cast<int>(rows[row + 1].size()) > j)
        throw std::invalid_argument("cell is not a corner");
    Letter x = rows[row].back();
    rows[row].pop_back();
    for (int col = j - 1; col >= 0; --col) {
        int r = -1;
        for (int k = 0; k < static_cast<int>(rows.size()) && static_cast<int>(rows[k].size()) > col; ++k)
            if (rows[k][col] <= x) r = k;
        if (r < 0) throw std::logic_error("uninsertion found no entry to bump");
        std::swap(rows[r][col], x);
    }
    return {SkewTableau::normal(std::move(rows)), x};
}

std::pair<SkewTableau, Cell> reverse_insert(const SkewTableau& v, Letter b, int n) {
    if (!v.empty() && !v.is_anti_normal()) throw std::invalid_argument("reverse insertion needs an anti-normal tableau");
    auto [u, cell] = column_insert(rotate_complement(v, n), complement(b, n));
    const int h = u.height(), w = u.width();
    return {rotate_complement(u, n), Cell{h - 1 - cell.row, w - 1 - cell.col}};
}

SkewTableau insertion_tableau(const Word& w) {
    SkewTableau t;
    for (Letter x : w) t = column_insert(t, x).first;
    return t;
}

SkewTableau anti_insertion_tableau(const Word& w, int n) {
    SkewTableau t;
    for (auto it = w.rbegin(); it != w.rend(); ++it) t = reverse_insert(t, *it, n).first;
    return t;
}

bool knuth_equivalent(const Word& a, const Word& b) { return insertion_tableau(a) == insertion_tableau(b); }

namespace {

// Dense grid; index 0 marks an absent cell.
struct Grid {
    int h = 0, w = 0;
    std::vector<int> cells;
    int& at(int r, int c) { return cells[r * w + c]; }
    int get(int r, int c) const { return (r < 0 || r >= h || c < 0 || c >= w) ? 0 : cells[r * w + c]; }
};

Grid to_grid(const SkewTableau& t) {
    Grid g{t.height(), t.width(), {}};
    g.cells.assign(g.h * g.w, 0);
    for (int r = 0; r < g.h; ++r)
        for (std::size_t k = 0; k < t.rows()[r].size(); ++k) g.at(r, t.inner()[r] + k) = t.rows()[r][k].index;
    return g;
}

SkewTableau from_grid(const Grid& g) {
    std::vector<int> inner(g.h, 0);
    std::vector<std::vector<Letter>> rows(g.h);
    for (int r = 0; r < g.h; ++r) {
        int first = -1;
        for (int c = 0; c < g.w; ++c) {
            if (g.get(r, c) == 0) {
                if (first >= 0 && c < g.w && std::any_of(g.cells.begin() + r * g.w + c, g.cells.begin() + (r + 1) * g.w,
                                                         [](int x) { return x != 0; }))
                    throw std::logic_error("row is not contiguous");
                if (first >= 0) break;
                continue;
            }
            if (first < 0) first = c;
            rows[r].push_back(Letter{g.get(r, c)});
        }
        inner[r] = first < 0 ? 0 : first;
    }
    // A row emptied by a slide lies wholly inside the inner shape; give it the
    // outer edge of the row below so the shape stays skew.
    for (int r = g.h - 1; r >= 0; --r)
        if (rows[r].empty()) inner[r] = r + 1 < g.h ? inner[r + 1] + static_cast<int>(rows[r + 1].size()) : 0;
    return SkewTableau(std::move(inner), std::move(rows));
}

// Forward slide of the hole at (r, c) into the tableau.
void slide(Grid& g, int r, int c) {
    while (true) {
        int right = g.get(r, c + 1), below = g.get(r + 1, c);
        if (right == 0 && below == 0) return;
        // Letter order is reversed on indices: below <= right iff below index >= right index.
        if (below != 0 && (right == 0 || below >= right)) {
            g.at(r, c) = below;
            g.at(r + 1, c) = 0;
            ++r;
        } else {
            g.at(r, c) = right;
            g.at(r, c + 1) = 0;
            ++c;
        }
    }
}

template <class Pick>
SkewTableau rectify_with(const SkewTableau& t, Pick pick) {
    if (!t.is_skew_shape()) throw std::invalid_argument("not a skew shape");
    SkewTableau cur = t;
    while (true) {
        std::vector<int> inner = cur.inner();
        std::vector<int> corners;
        for (int r = 0; r < cur.height(); ++r) {
            int next = r + 1 < cur.height() ? inner[r + 1] : 0;
            if (inner[r] > 0 && next < inner[r]) corners.push_back(r);
        }
        if (corners.empty()) return cur;
        int r = pick(corners);
        Grid g = to_grid(cur);
        slide(g, r, inner[r] - 1);
        cur = from_grid(g);
    }
}

}  // namespace

SkewTableau rectify(const SkewTableau& t, CornerChoice choice) {
    return rectify_with(t, [&](const std::vector<int>& corners) {
        return choice == CornerChoice::topmost ? corners.front() : corners.back();
    });
}

SkewTableau rectify(const SkewTableau& t, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    return rectify_with(t, [&](const std::vector<int>& corners) {
        std::uniform_int_distribution<std::size_t> d(0, corners.size() - 1);
        return corners[d(rng)];
    });
}

SkewTableau anti_rectify(const SkewTableau& t, int n) { return rotate_complement(rectify(rotate_complement(t, n)), n); }

namespace {

struct WordSignature {
    std::vector<int> plus;   // unmatched + positions, left to right
    std::vector<int> minus;  // unmatched - positions, left to right
};

WordSignature word_signature(const Word& w, int i) {
    if (i < 1) throw std::invalid_argument("word crystal index must be positive");
    WordSignature s;
    for (int p = 0; p < static_cast<int>(w.size()); ++p) {
        if (w[p].index == i + 1) {
            s.plus.push_back(p);
        } else if (w[p].index == i) {
            if (!s.plus.empty()) s.plus.pop_back();
            else s.minus.push_back(p);
        }
    }
    return s;
}

}  // namespace

std::optional<Word> word_f(const Word& w, int i) {
    auto s = word_signature(w, i);
    if (s.plus.empty()) return std::nullopt;
    Word out = w;
    out[s.plus.front()].index = i;
    return out;
}

std::optional<Word> word_e(const Word& w, int i) {
    auto s = word_signature(w, i);
    if (s.minus.empty()) return std::nullopt;
    Word out = w;
    out[s.minus.back()].index = i + 1;
    return out;
}

int word_epsilon(const Word& w, int i) { return static_cast<int>(word_signature(w, i).minus.size()); }
int word_phi(const Word& w, int i) { return static_cast<int>(word_signature(w, i).plus.size()); }

std::optional<SkewTableau> tableau_f(const SkewTableau& t, int i) {
    auto w = word_f(t.row_word(), i);
    if (!w) return std::nullopt;
    return t.with_word(*w);
}

std::optional<SkewTableau> tableau_e(const SkewTableau& t, int i) {
    auto w = word_e(t.row_word(), i);
    if (!w) return std::nullopt;
    return t.with_word(*w);
}

bool has_even_columns(const SkewTableau& t) {
    for (const auto& c : t.columns())
        if (c.size() % 2 != 0) return false;
    return true;
}

namespace {

// Reduced signature on a finite sequence of signs; returns unmatched positions.
WordSignature reduce_signs(const std::vector<int>& signs) {
    WordSignature s;
    for (int p = 0; p < static_cast<int>(signs.size()); ++p) {
        if (signs[p] > 0) s.plus.push_back(p);
        else if (signs[p] < 0) {
            if (!s.plus.empty()) s.plus.pop_back();
            else s.minus.push_back(p);
        }
    }
    return s;
}

bool contains(const std::vector<Letter>& col, int index) {
    return std::any_of(col.begin(), col.end(), [&](Letter x) { return x.index == index; });
}

void require_anti_normal(const SkewTableau& t) {
    if (!t.empty() && !t.is_anti_normal()) throw std::invalid_argument("expected an anti-normal tableau");
}

void require_normal(const SkewTableau& t) {
    if (!t.is_normal()) throw std::invalid_argument("expected a normal tableau");
}

// Signs of columns enumerated from the right (k = 1, 2, ...).
std::vector<int> se_signs(const std::vector<std::vector<Letter>>& cols, int n) {
    std::vector<int> signs;
    for (auto it = cols.rbegin(); it != cols.rend(); ++it) {
        const auto& col = *it;
        if (col.empty() || col.front().index < n - 1) signs.push_back(+1);
        else if (contains(col, n - 1) && contains(col, n)) signs.push_back(-1);
        else signs.push_back(0);
    }
    return signs;
}

// Signs written as (..., sigma_2, sigma_1) for columns enumerated from the left.
std::vector<int> nw_signs(const std::vector<std::vector<Letter>>& cols) {
    std::vector<int> signs;
    for (auto it = cols.rbegin(); it != cols.rend(); ++it) {
        const auto& col = *it;
        if (col.empty() || col.back().index > 2) signs.push_back(-1);
        else if (contains(col, 1) && contains(col, 2)) signs.push_back(+1);
        else signs.push_back(0);
    }
    return signs;
}

}  // namespace

std::optional<SkewTableau> f_n_se(const SkewTableau& t, int n) {
    require_anti_normal(t);
    auto cols = t.columns();
    auto s = reduce_signs(se_signs(cols, n));
    int k = s.plus.empty() ? static_cast<int>(cols.size()) : s.plus.front();
    if (k == static_cast<int>(cols.size())) cols.insert(cols.begin(), std::vector<Letter>{});
    auto& col = cols[cols.size() - 1 - k];
    col.insert(col.begin(), {Letter{n}, Letter{n - 1}});
    auto out = from_bottom_aligned_columns(cols);
    if (!out.is_anti_normal()) throw std::logic_error("f_n left the anti-normal shapes");
    return out;
}

std::optional<SkewTableau> e_n_se(const SkewTableau& t, int n) {
    require_anti_normal(t);
    auto cols = t.columns();
    auto s = reduce_signs(se_signs(cols, n));
    if (s.minus.empty()) return std::nullopt;
    auto& col = cols[cols.size() - 1 - s.minus.back()];
    col.erase(col.begin(), col.begin() + 2);
    auto out = from_bottom_aligned_columns(cols);
    if (!out.empty() && !out.is_anti_normal()) throw std::logic_error("e_n left the anti-normal shapes");
    return out;
}

std::optional<SkewTableau> e_0_nw(const SkewTableau& t) {
    require_normal(t);
    auto cols = t.columns();
    const int w = static_cast<int>(cols.size());
    auto s = reduce_signs(nw_signs(cols));
    // sequence position p corresponds to column w - 1 - p; infinitely many - sit to the left
    int col_index = s.minus.empty() ? w : w - 1 - s.minus.back();
    if (col_index == w) cols.emplace_back();
    cols[col_index].push_back(Letter{2});
    cols[col_index].push_back(Letter{1});
    auto out = from_top_aligned_columns(cols);
    return out;
}

std::optional<SkewTableau> f_0_nw(const SkewTableau& t) {
    require_normal(t);
    auto cols = t.columns();
    const int w = static_cast<int>(cols.size());
    auto s = reduce_signs(nw_signs(cols));
    if (s.plus.empty()) return std::nullopt;
    auto& col = cols[w - 1 - s.plus.front()];
    col.resize(col.size() - 2);
    while (!cols.empty() && cols.back().empty()) cols.pop_back();
    return from_top_aligned_columns(cols);
}

std::string letter_text(Letter x) { return std::to_string(x.index) + "b"; }

std::string to_text(const SkewTableau& t) {
    std::ostringstream os;
    int w = t.width();
    for (int r = 0; r < t.height(); ++r) {
        for (int c = 0; c < w; ++c) {
            auto x = t.at({r, c});
            os << (c ? " " : "") << (x ? std::to_string(x->index) : std::string("."));
        }
        os << '\n';
    }
    return os.str();
}

}  // namespace dcrystal
