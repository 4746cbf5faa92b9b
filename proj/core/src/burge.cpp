#include "dcrystal/burge.hpp"

#include <algorithm>
#include <stdexcept>

#include "dcrystal/triangle.hpp"

namespace dcrystal {

bool biword_less(BiwordOrder order, const Biletter& x, const Biletter& y) {
    if (order == BiwordOrder::omega) return x.a < y.a || (x.a == y.a && x.b > y.b);
    return x.b < y.b || (x.b == y.b && x.a > y.a);
}

Biword datum_to_biword(const LusztigDatum& c, BiwordOrder order) {
    const int n = c.rank();
    if (!fits_support(n, c.values(), Support::upper)) throw std::invalid_argument("biwords need an upper datum");
    Biword w{order, {}};
    for (auto t : all_cells(n)) {
        Root r = cell_root(n, t);
        for (int k = cell_value(c, t); k > 0; --k) w.pairs.push_back({Letter{r.j}, Letter{r.i}});
    }
    std::stable_sort(w.pairs.begin(), w.pairs.end(),
                     [&](const Biletter& x, const Biletter& y) { return biword_less(order, x, y); });
    return w;
}

LusztigDatum biword_to_datum(int n, const Biword& w) {
    LusztigDatum c(n, Support::upper);
    for (const auto& p : w.pairs) {
        if (!(p.a < p.b) || p.a.index > n || p.b.index < 1)
            throw std::invalid_argument("biletter is not of the form (j-bar, i-bar) with i < j <= n");
        c.add(root_system(n).position({RootKind::sum, p.b.index, p.a.index}), 1);
    }
    return c;
}

namespace {

// Column-insert `upper`, then place `lower` directly below the new cell.
SkewTableau insert_domino(const SkewTableau& u, Letter upper, Letter lower) {
    auto [t, cell] = column_insert(u, upper);
    auto rows = t.rows();
    int r = cell.row + 1;
    if (r == static_cast<int>(rows.size())) rows.emplace_back();
    if (static_cast<int>(rows[r].size()) != cell.col) throw std::logic_error("cell below the new box is not addable");
    rows[r].push_back(lower);
    return SkewTableau::normal(std::move(rows));
}

// Undo insert_domino where `lower` is the largest letter present: remove a cell
// holding it from the bottom of a column, then uninsert from the cell above it.
// Among several candidates the rightmost one was placed last.
std::optional<std::pair<SkewTableau, Biletter>> peel_domino(const SkewTableau& u) {
    if (u.empty()) return std::nullopt;
    auto rows = u.rows();
    Letter top_letter{1 << 30};
    for (const auto& row : rows)
        for (Letter x : row) top_letter = std::max(top_letter, x);
    int h = static_cast<int>(rows.size());
    int best_r = -1, best_c = -1;
    for (int r = 1; r < h; ++r) {
        int c = static_cast<int>(rows[r].size()) - 1;
        if (c < 0 || !(rows[r][c] == top_letter)) continue;
        if (r + 1 < h && static_cast<int>(rows[r + 1].size()) > c) continue;
        if (static_cast<int>(rows[r - 1].size()) != c + 1) continue;
        if (c > best_c) best_r = r, best_c = c;
    }
    if (best_r < 0) throw std::invalid_argument("tableau is not in the image of the Burge correspondence");
    rows[best_r].pop_back();
    auto [t, upper] = column_uninsert(SkewTableau::normal(std::move(rows)), best_r - 1);
    return std::make_pair(t, Biletter{upper, top_letter});
}

void check_letters(const SkewTableau& t, int n) {
    for (const auto& row : t.rows())
        for (Letter x : row)
            if (x.index < 1 || x.index > n) throw std::invalid_argument("letter outside {1..n}-bar");
}

}  // namespace

SkewTableau kappa_se(const LusztigDatum& c, std::vector<SkewTableau>* trace) {
    const int n = c.rank();
    auto w = datum_to_biword(c, BiwordOrder::omega);
    SkewTableau u;
    for (auto it = w.pairs.rbegin(); it != w.pairs.rend(); ++it) {
        u = insert_domino(u, complement(it->b, n), complement(it->a, n));
        if (trace) trace->push_back(rotate_complement(u, n));
    }
    return rotate_complement(u, n);
}

SkewTableau kappa_nw(const LusztigDatum& c, std::vector<SkewTableau>* trace) {
    auto w = datum_to_biword(c, BiwordOrder::omega_prime);
    SkewTableau t;
    for (const auto& p : w.pairs) {
        t = insert_domino(t, p.a, p.b);
        if (trace) trace->push_back(t);
    }
    return t;
}

LusztigDatum kappa_nw_inverse(const SkewTableau& t, int n) {
    require_rank(n);
    if (!t.empty() && (!t.is_normal() || !t.is_semistandard() || !has_even_columns(t)))
        throw std::invalid_argument("expected a semistandard normal tableau with even columns");
    check_letters(t, n);
    Biword w{BiwordOrder::omega_prime, {}};
    SkewTableau cur = t;
    while (auto step = peel_domino(cur)) {
        auto [next, pair] = *step;
        if (!(pair.a < pair.b)) throw std::invalid_argument("tableau is not in the image of kappa_nw");
        if (!w.pairs.empty() && biword_less(w.order, w.pairs.back(), pair))
            throw std::invalid_argument("tableau is not in the image of kappa_nw");
        w.pairs.push_back(pair);
        cur = next;
    }
    return biword_to_datum(n, w);
}

LusztigDatum kappa_se_inverse(const SkewTableau& t, int n) {
    require_rank(n);
    if (!t.empty() && (!t.is_anti_normal() || !t.is_semistandard() || !has_even_columns(t)))
        throw std::invalid_argument("expected a semistandard anti-normal tableau with even columns");
    check_letters(t, n);
    Biword w{BiwordOrder::omega, {}};
    SkewTableau cur = rotate_complement(t, n);
    while (auto step = peel_domino(cur)) {
        auto [next, pair] = *step;
        Biletter original{complement(pair.b, n), complement(pair.a, n)};
        if (!(original.a < original.b)) throw std::invalid_argument("tableau is not in the image of kappa_se");
        if (!w.pairs.empty() && biword_less(w.order, original, w.pairs.back()))
            throw std::invalid_argument("tableau is not in the image of kappa_se");
        w.pairs.push_back(original);
        cur = next;
    }
    return biword_to_datum(n, w);
}

Partition lambda_of(const LusztigDatum& c) { return kappa_nw(c).shape(); }

namespace {

struct Band {
    std::vector<Letter> top, bottom;  // left to right in the anti-normal picture
    int glued_columns = 0;           // columns of V^nw glued to U
    int received = 0;
};

}  // namespace

GlueResult glue_T(const LusztigDatum& c, int i) {
    const int n = c.rank();
    if (i < 1 || i > n - 1) throw std::invalid_argument("glue index out of range");
    for (auto t : all_cells(n))
        if (cell_value(c, t) != 0 && cell_root(n, t).j > i + 1)
            throw std::invalid_argument("datum is not supported on the sub-triangle of this index");

    auto w = datum_to_biword(c, BiwordOrder::omega);
    Biword rest{BiwordOrder::omega, {}};
    std::vector<Biletter> head;
    for (const auto& p : w.pairs) (p.a.index >= i ? head : rest.pairs).push_back(p);

    GlueResult out;
    out.base = kappa_se(biword_to_datum(n, rest));
    const Partition mu = out.base.shape();

    // Work in the rotated frame: rows from the bottom, columns from the right.
    SkewTableau u = rotate_complement(out.base, n);
    std::vector<std::vector<int>> qgrid;  // letter index of Q per rotated cell, 0 if absent
    for (auto it = head.rbegin(); it != head.rend(); ++it) {
        auto [next, cell] = column_insert(u, complement(it->b, n));
        u = next;
        if (static_cast<int>(qgrid.size()) <= cell.row) qgrid.resize(cell.row + 1);
        if (static_cast<int>(qgrid[cell.row].size()) <= cell.col) qgrid[cell.row].resize(cell.col + 1, 0);
        qgrid[cell.row][cell.col] = it->a.index;
    }
    out.P = rotate_complement(u, n);

    const auto& urows = u.rows();
    const int h = u.height();
    auto mu_at = [&](int k) { return k < static_cast<int>(mu.size()) ? mu[k] : 0; };
    {
        std::vector<int> inner(h);
        std::vector<std::vector<Letter>> qrows(h);
        for (int r = 0; r < h; ++r) {
            inner[r] = mu_at(r);
            for (int col = mu_at(r); col < static_cast<int>(urows[r].size()); ++col)
                qrows[r].push_back(complement(Letter{qgrid.at(r).at(col)}, n));
        }
        out.Q = rotate_complement(SkewTableau(std::move(inner), std::move(qrows)), n);
    }

    // Split the anti-normal picture into two-row bands, band 0 at the bottom.
    auto anti_row = [&](int r, bool q_part) {
        std::vector<Letter> v;
        if (r >= h) return v;
        int lo = q_part ? mu_at(r) : 0;
        int hi = q_part ? static_cast<int>(urows[r].size()) : mu_at(r);
        for (int col = hi - 1; col >= lo; --col)
            v.push_back(q_part ? Letter{qgrid[r][col]} : complement(urows[r][col], n));
        return v;
    };
    auto p_row = [&](int r, bool q_part) {
        std::vector<Letter> v;
        if (r >= h) return v;
        int lo = q_part ? mu_at(r) : 0;
        int hi = q_part ? static_cast<int>(urows[r].size()) : mu_at(r);
        for (int col = hi - 1; col >= lo; --col) v.push_back(complement(urows[r][col], n));
        return v;
    };

    const int bands = (h + 1) / 2;
    std::vector<Band> band(bands);
    for (int l = 0; l < bands; ++l) {
        int rb = 2 * l, rt = 2 * l + 1;
        if (mu_at(rb) != mu_at(rt)) throw std::logic_error("base tableau has an odd column");
        auto v_top = anti_row(rt, true), v_bot = anti_row(rb, true);
        auto u_top = p_row(rt, true), u_bot = p_row(rb, true);
        auto t_top = p_row(rt, false), t_bot = p_row(rb, false);
        auto v = rectify(SkewTableau::anti_normal({v_top, v_bot}));
        std::vector<Letter> v1, v2;
        if (v.height() >= 1) v1 = v.rows()[0];
        if (v.height() >= 2) v2 = v.rows()[1];
        if (v1.size() != v_bot.size() || v2.size() != v_top.size())
            throw std::logic_error("recording band did not rectify to the rotated shape");
        Band& b = band[l];
        b.top = v1;
        b.top.insert(b.top.end(), u_top.begin(), u_top.end());
        b.top.insert(b.top.end(), t_top.begin(), t_top.end());
        b.bottom = v2;
        b.bottom.insert(b.bottom.end(), u_bot.begin(), u_bot.end());
        b.bottom.insert(b.bottom.end(), t_bot.begin(), t_bot.end());
        b.glued_columns = static_cast<int>(v1.size() + u_top.size());
    }

    // Push surplus dominoes (i+1)-bar over i-bar down, top band first.
    for (int l = bands - 1; l >= 1; --l) {
        Band& b = band[l];
        int room = mu_at(2 * l - 2) - mu_at(2 * l);
        int excess = b.glued_columns + b.received - room;
        if (excess <= 0) continue;
        if (excess > static_cast<int>(b.bottom.size()))
            throw std::logic_error("not enough dominoes to move down");
        for (int k = 0; k < excess; ++k)
            if (b.top[k].index != i + 1 || b.bottom[k].index != i)
                throw std::logic_error("column to move down is not a domino of the expected letters");
        Band& below = band[l - 1];
        below.top.insert(below.top.begin(), b.top.begin(), b.top.begin() + excess);
        below.bottom.insert(below.bottom.begin(), b.bottom.begin(), b.bottom.begin() + excess);
        below.received += excess;
        b.top.erase(b.top.begin(), b.top.begin() + excess);
        b.bottom.erase(b.bottom.begin(), b.bottom.begin() + excess);
        // Moved dominoes leave the glued block of this band.
        int from_glue = std::max(0, excess - b.received);
        b.glued_columns -= from_glue;
        b.received = std::max(0, b.received - excess);
    }

    std::vector<std::vector<Letter>> rows;
    for (int l = bands - 1; l >= 0; --l) {
        rows.push_back(band[l].top);
        rows.push_back(band[l].bottom);
    }
    out.glued = SkewTableau::anti_normal(std::move(rows));
    if (!out.glued.is_anti_normal() || !out.glued.is_semistandard())
        throw std::logic_error("glued tableau is not a semistandard anti-normal tableau");
    return out;
}

}  // namespace dcrystal
