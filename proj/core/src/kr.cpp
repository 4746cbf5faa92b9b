#include "dcrystal/kr.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

#include <nlohmann/json.hpp>

#include "dcrystal/burge.hpp"
#include "dcrystal/triangle.hpp"

namespace dcrystal {

namespace {

void check_affine_index(int n, int i) {
    if (i < 0 || i > n) throw std::invalid_argument("affine index out of range");
}

int pos_alpha_n(int n) { return root_system(n).position(simple_root(n, n)); }
int pos_e12(int n) { return root_system(n).position({RootKind::sum, 1, 2}); }

std::optional<LusztigDatum> shifted(const LusztigDatum& c, int pos, int delta, int s) {
    std::vector<int> v = c.values();
    v[pos] += delta;
    if (v[pos] < 0) return std::nullopt;
    LusztigDatum out(c.rank(), Support::upper, std::move(v));
    if (delta > 0 && !in_BJs(out, s)) return std::nullopt;
    return out;
}

}  // namespace

std::optional<LusztigDatum> f_affine(const LusztigDatum& c, int i, int s) {
    const int n = c.rank();
    check_affine_index(n, i);
    if (i == 0) return shifted(c, pos_e12(n), -1, s);
    if (i == n) return shifted(c, pos_alpha_n(n), +1, s);
    return f_J(c, i);
}

std::optional<LusztigDatum> e_affine(const LusztigDatum& c, int i, int s) {
    const int n = c.rank();
    check_affine_index(n, i);
    if (i == 0) return shifted(c, pos_e12(n), +1, s);
    if (i == n) return shifted(c, pos_alpha_n(n), -1, s);
    return e_J(c, i);
}

std::vector<LusztigDatum> enumerate_BJs(int n, int s) {
    require_rank(n);
    if (s < 0) throw std::invalid_argument("level must be non-negative");
    const int M = cell_count(n);
    // Inequalities as position lists; prune on partial sums.
    std::vector<std::vector<int>> ineq;
    for (const auto& cells : polytope_inequalities(n)) {
        std::vector<int> ps;
        for (auto t : cells) ps.push_back(cell_position(n, t));
        ineq.push_back(std::move(ps));
    }
    std::vector<std::vector<int>> touching(M);
    for (int q = 0; q < static_cast<int>(ineq.size()); ++q)
        for (int p : ineq[q]) touching[p].push_back(q);
    std::vector<int> sums(ineq.size(), 0);
    std::vector<int> v(n * n - n, 0);
    std::vector<LusztigDatum> out;
    std::function<void(int)> go = [&](int p) {
        if (p == M) {
            out.emplace_back(n, Support::upper, v);
            return;
        }
        for (int x = 0; x <= s; ++x) {
            bool ok = true;
            for (int q : touching[p])
                if (sums[q] + x > s) ok = false;
            if (!ok) break;
            for (int q : touching[p]) sums[q] += x;
            v[p] = x;
            go(p + 1);
            for (int q : touching[p]) sums[q] -= x;
        }
        v[p] = 0;
    };
    go(0);
    return out;
}

long long weyl_dimension_spin_multiple(int n, int s) {
    require_rank(n);
    // Doubled coordinates: 2(lambda + rho) and 2 rho.
    std::vector<long long> lr(n), r(n);
    for (int k = 0; k < n; ++k) {
        r[k] = 2LL * (n - 1 - k);
        lr[k] = r[k] + s;
    }
    long long num = 1, den = 1;
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            for (int sign : {-1, 1}) {
                num *= lr[a] + sign * lr[b];
                den *= r[a] + sign * r[b];
                long long g = std::gcd(num, den);
                num /= g;
                den /= g;
            }
    if (den != 1) throw std::logic_error("Weyl dimension is not an integer");
    return num;
}

namespace {

std::optional<SkewTableau> capped(std::optional<SkewTableau> t, int s) {
    if (!t) return std::nullopt;
    auto r = rectify(*t);
    if (r.column_count() > s) return std::nullopt;
    return r;
}

}  // namespace

std::optional<SkewTableau> f_tableau_class(const SkewTableau& t, int i, int n, int s) {
    check_affine_index(n, i);
    SkewTableau nw = rectify(t);
    if (i == 0) return capped(f_0_nw(nw), s);
    if (i == n) return capped(f_n_se(anti_rectify(nw, n), n), s);
    return capped(tableau_f(nw, i), s);
}

std::optional<SkewTableau> e_tableau_class(const SkewTableau& t, int i, int n, int s) {
    check_affine_index(n, i);
    SkewTableau nw = rectify(t);
    if (i == 0) return capped(e_0_nw(nw), s);
    if (i == n) return capped(e_n_se(anti_rectify(nw, n), n), s);
    return capped(tableau_e(nw, i), s);
}

namespace {

std::string rows_label(const LusztigDatum& c) {
    std::ostringstream os;
    os << '[';
    bool first_row = true;
    for (const auto& row : datum_rows(c)) {
        os << (first_row ? "" : ",") << '[';
        for (std::size_t k = 0; k < row.size(); ++k) os << (k ? "," : "") << row[k];
        os << ']';
        first_row = false;
    }
    os << ']';
    return os.str();
}

std::string tableau_label(const SkewTableau& t) {
    std::ostringstream os;
    for (int r = 0; r < t.height(); ++r) {
        if (r) os << '/';
        for (Letter x : t.rows()[r]) os << x.index;
    }
    return t.empty() ? std::string("empty") : os.str();
}

struct TableauKey {
    std::size_t operator()(const SkewTableau& t) const {
        std::size_t h = 0;
        for (const auto& row : t.rows()) {
            h = h * 31 + row.size();
            for (Letter x : row) h = h * 131 + static_cast<std::size_t>(x.index);
        }
        return h;
    }
};

template <class V, class Hash, class F, class E, class Label>
std::pair<std::vector<V>, CrystalGraph> closure(int n, int s, V root, F f, E e, Label label) {
    std::vector<V> verts{root};
    std::unordered_map<V, int, Hash> index{{root, 0}};
    CrystalGraph g{n, s, {}, {}};
    auto intern = [&](const V& v) {
        auto [it, fresh] = index.emplace(v, static_cast<int>(verts.size()));
        if (fresh) verts.push_back(v);
        return it->second;
    };
    for (std::size_t q = 0; q < verts.size(); ++q) {
        for (int i = 0; i <= n; ++i) {
            V cur = verts[q];
            if (auto y = f(cur, i)) {
                int to = intern(*y);
                g.edges.emplace_back(static_cast<int>(q), to, i);
            }
            if (auto y = e(verts[q], i)) intern(*y);
        }
    }
    for (const auto& v : verts) g.labels.push_back(label(v));
    std::sort(g.edges.begin(), g.edges.end());
    return {std::move(verts), std::move(g)};
}

}  // namespace

LusztigCrystal lusztig_crystal(int n, int s) {
    auto [v, g] = closure<LusztigDatum, LusztigDatumHash>(
        n, s, LusztigDatum(n, Support::upper),
        [s](const LusztigDatum& c, int i) { return f_affine(c, i, s); },
        [s](const LusztigDatum& c, int i) { return e_affine(c, i, s); }, rows_label);
    return {std::move(v), std::move(g)};
}

TableauCrystal tableau_crystal(int n, int s) {
    auto [v, g] = closure<SkewTableau, TableauKey>(
        n, s, SkewTableau(),
        [n, s](const SkewTableau& t, int i) { return f_tableau_class(t, i, n, s); },
        [n, s](const SkewTableau& t, int i) { return e_tableau_class(t, i, n, s); }, tableau_label);
    return {std::move(v), std::move(g)};
}

CrystalGraph crystal_graph(int n, int s, GraphSide side) {
    return side == GraphSide::lusztig ? lusztig_crystal(n, s).graph : tableau_crystal(n, s).graph;
}

bool is_isomorphism(const CrystalGraph& a, const CrystalGraph& b, const std::vector<int>& vertex_map) {
    if (a.size() != b.size() || static_cast<int>(vertex_map.size()) != a.size()) return false;
    std::vector<char> hit(b.size(), 0);
    for (int x : vertex_map) {
        if (x < 0 || x >= b.size() || hit[x]) return false;
        hit[x] = 1;
    }
    if (a.edges.size() != b.edges.size()) return false;
    std::vector<std::tuple<int, int, int>> mapped;
    for (auto [u, v, i] : a.edges) mapped.emplace_back(vertex_map[u], vertex_map[v], i);
    std::sort(mapped.begin(), mapped.end());
    auto be = b.edges;
    std::sort(be.begin(), be.end());
    return mapped == be;
}

StringReport check_regular(int n, int s) {
    auto crystal = lusztig_crystal(n, s);
    for (const auto& c : crystal.vertices) {
        auto w = weight(c);
        std::vector<int> doubled(n);
        for (int k = 0; k < n; ++k) doubled[k] = 2 * w[k] + s;
        for (int i = 0; i <= n; ++i) {
            int eps = 0, phi = 0;
            for (auto x = e_affine(c, i, s); x; x = e_affine(*x, i, s)) {
                if (++eps > 4 * s * n * n + 8) return {false, "infinite e-string"};
            }
            for (auto x = f_affine(c, i, s); x; x = f_affine(*x, i, s)) {
                if (++phi > 4 * s * n * n + 8) return {false, "infinite f-string"};
            }
            int expect2 = pairing(doubled, i);
            if (2 * (phi - eps) != expect2)
                return {false, "phi - epsilon mismatch at i=" + std::to_string(i) + " for " + rows_label(c)};
            if (auto y = f_affine(c, i, s)) {
                auto back = e_affine(*y, i, s);
                if (!back || !(*back == c)) return {false, "e does not invert f at i=" + std::to_string(i)};
            }
        }
    }
    return {true, "ok"};
}

bool check_embedding(int n, int s, int t) {
    if (s > t) throw std::invalid_argument("embedding needs s <= t");
    for (const auto& c : enumerate_BJs(n, s))
        for (int i = 0; i <= n; ++i) {
            auto fs = f_affine(c, i, s);
            if (fs && f_affine(c, i, t) != fs) return false;
            auto es = e_affine(c, i, s);
            if (es && e_affine(c, i, t) != es) return false;
        }
    return true;
}

std::string to_dot(const CrystalGraph& g) {
    std::ostringstream os;
    os << "digraph crystal {\n";
    for (int v = 0; v < g.size(); ++v) os << "  v" << v << " [label=\"" << g.labels[v] << "\"];\n";
    for (auto [u, v, i] : g.edges) os << "  v" << u << " -> v" << v << " [label=\"" << i << "\"];\n";
    os << "}\n";
    return os.str();
}

std::string graph_json(const CrystalGraph& g) {
    nlohmann::json j;
    j["n"] = g.n;
    j["s"] = g.s;
    j["vertices"] = g.labels;
    auto edges = nlohmann::json::array();
    for (auto [u, v, i] : g.edges) edges.push_back({{"from", u}, {"to", v}, {"label", i}});
    j["edges"] = edges;
    return j.dump(2);
}

}  // namespace dcrystal
