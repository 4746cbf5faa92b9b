#include "dcrystal/trails.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <map>
#include <set>
#include <stdexcept>

namespace dcrystal {

SpinElement::SpinElement(std::vector<int> signs) : signs_(std::move(signs)) {
    for (int s : signs_)
        if (s != 1 && s != -1) throw std::invalid_argument("spin signs must be +1 or -1");
}

SpinElement SpinElement::highest(int n, bool even) {
    std::vector<int> s(n, 1);
    if (!even) s[n - 1] = -1;
    return SpinElement(std::move(s));
}

SpinElement SpinElement::lowest(int n, bool even) {
    std::vector<int> s(n, -1);
    if ((n % 2 == 0) != even) s[n - 1] = 1;
    return SpinElement(std::move(s));
}

SpinElement SpinElement::leading_minus(int n, int k) {
    if (k < 0 || k > n) throw std::invalid_argument("sign count out of range");
    std::vector<int> s(n, 1);
    for (int p = 0; p < k; ++p) s[p] = -1;
    return SpinElement(std::move(s));
}

int SpinElement::minus_count() const { return static_cast<int>(std::count(signs_.begin(), signs_.end(), -1)); }

std::optional<SpinElement> spin_f(const SpinElement& b, int i) {
    const int n = b.rank();
    auto s = b.signs();
    if (i < 1 || i > n) throw std::invalid_argument("spin operator index out of range");
    if (i == n) {
        if (s[n - 2] != 1 || s[n - 1] != 1) return std::nullopt;
        s[n - 2] = s[n - 1] = -1;
    } else {
        if (s[i - 1] != 1 || s[i] != -1) return std::nullopt;
        s[i - 1] = -1;
        s[i] = 1;
    }
    return SpinElement(std::move(s));
}

std::optional<SpinElement> spin_e(const SpinElement& b, int i) {
    const int n = b.rank();
    auto s = b.signs();
    if (i < 1 || i > n) throw std::invalid_argument("spin operator index out of range");
    if (i == n) {
        if (s[n - 2] != -1 || s[n - 1] != -1) return std::nullopt;
        s[n - 2] = s[n - 1] = 1;
    } else {
        if (s[i - 1] != -1 || s[i] != 1) return std::nullopt;
        s[i - 1] = 1;
        s[i] = -1;
    }
    return SpinElement(std::move(s));
}

std::vector<SpinElement> spin_crystal(int n, bool even) {
    std::vector<SpinElement> out;
    for (int mask = 0; mask < (1 << n); ++mask) {
        std::vector<int> s(n);
        for (int p = 0; p < n; ++p) s[p] = (mask >> p) & 1 ? -1 : 1;
        SpinElement b(std::move(s));
        if (b.even() == even) out.push_back(b);
    }
    return out;
}

SpinElement spin_reflect(const SpinElement& b, int i) {
    const int n = b.rank();
    auto s = b.signs();
    if (i < n) {
        std::swap(s[i - 1], s[i]);
    } else {
        int a = s[n - 2], c = s[n - 1];
        s[n - 2] = -c;
        s[n - 1] = -a;
    }
    return SpinElement(std::move(s));
}

int star_letter(int n, int i) {
    if (n % 2 == 1 && i == n) return n - 1;
    if (n % 2 == 1 && i == n - 1) return n;
    return i;
}

std::vector<int> word_j0(int n) {
    auto w = reduced_word_i0(n);
    std::reverse(w.begin(), w.end());
    for (auto& x : w) x = star_letter(n, x);
    return w;
}

std::vector<SpinElement> trail_vertices(const Trail& t, const SpinElement& start) {
    std::vector<SpinElement> out{start};
    for (std::size_t k = 0; k < t.word.size(); ++k) {
        if (!t.steps[k]) {
            out.push_back(out.back());
            continue;
        }
        auto next = spin_f(out.back(), t.word[k]);
        if (!next) throw std::invalid_argument("not a trail");
        out.push_back(*next);
    }
    return out;
}

namespace {

int code(const SpinElement& b) {
    int m = 0;
    for (int p = 0; p < b.rank(); ++p)
        if (b.signs()[p] < 0) m |= 1 << p;
    return m;
}

// reach[k][code] = the end can be reached from `code` using letters k..N-1.
std::vector<std::vector<char>> reachability(const std::vector<int>& word, int n, const SpinElement& end) {
    const int N = static_cast<int>(word.size());
    std::vector<std::vector<char>> reach(N + 1, std::vector<char>(1 << n, 0));
    reach[N][code(end)] = 1;
    auto all = spin_crystal(n, end.even());
    for (int k = N - 1; k >= 0; --k)
        for (const auto& b : all) {
            char ok = reach[k + 1][code(b)];
            if (!ok) {
                auto f = spin_f(b, word[k]);
                ok = f && reach[k + 1][code(*f)];
            }
            reach[k][code(b)] = ok;
        }
    return reach;
}

}  // namespace

std::vector<Trail> enumerate_trails(const std::vector<int>& word, const SpinElement& start, const SpinElement& end) {
    const int n = start.rank();
    if (end.rank() != n || start.even() != end.even()) return {};
    auto reach = reachability(word, n, end);
    std::vector<Trail> out;
    if (!reach[0][code(start)]) return out;
    Trail cur{word, std::vector<int>(word.size(), 0)};
    std::function<void(std::size_t, const SpinElement&)> go = [&](std::size_t k, const SpinElement& b) {
        if (k == word.size()) {
            out.push_back(cur);
            return;
        }
        if (reach[k + 1][code(b)]) {
            cur.steps[k] = 0;
            go(k + 1, b);
        }
        if (auto f = spin_f(b, word[k]); f && reach[k + 1][code(*f)]) {
            cur.steps[k] = 1;
            go(k + 1, *f);
            cur.steps[k] = 0;
        }
    };
    go(0, start);
    return out;
}

std::optional<long long> min_trail_cost(const std::vector<int>& word, const std::vector<int>& cost,
                                        const SpinElement& start, const SpinElement& end) {
    const int n = start.rank();
    if (cost.size() != word.size()) throw std::invalid_argument("cost length differs from word length");
    if (end.rank() != n || start.even() != end.even()) return std::nullopt;
    constexpr long long inf = std::numeric_limits<long long>::max() / 4;
    auto all = spin_crystal(n, start.even());
    std::vector<long long> best(1 << n, inf), next(1 << n, inf);
    best[code(start)] = 0;
    for (std::size_t k = 0; k < word.size(); ++k) {
        std::fill(next.begin(), next.end(), inf);
        for (const auto& b : all) {
            long long v = best[code(b)];
            if (v >= inf) continue;
            next[code(b)] = std::min(next[code(b)], v);
            if (auto f = spin_f(b, word[k])) next[code(*f)] = std::min(next[code(*f)], v + cost[k]);
        }
        std::swap(best, next);
    }
    if (best[code(end)] >= inf) return std::nullopt;
    return best[code(end)];
}

namespace {

SpinElement s_n_varpi_n(int n) {
    std::vector<int> s(n, 1);
    s[n - 2] = s[n - 1] = -1;
    return SpinElement(std::move(s));
}

}  // namespace

std::vector<Trail> trails_T(int n) {
    require_rank(n);
    return enumerate_trails(word_j0(n), s_n_varpi_n(n), SpinElement::lowest(n, true));
}

std::vector<Trail> trails_T_prime(int n) {
    const int M = (n * n - n) / 2;
    auto target = SpinElement::leading_minus(n, 2);
    std::vector<Trail> out;
    for (auto& t : trails_T(n))
        if (trail_vertices(t, s_n_varpi_n(n))[M] == target) out.push_back(std::move(t));
    return out;
}

std::vector<Trail> trails_T_l(int n, int l) {
    require_rank(n);
    if (l < 1 || 2 * l > n) throw std::invalid_argument("l out of range");
    return enumerate_trails(reduced_word_i0(n), SpinElement::leading_minus(n, 2 * l), SpinElement::lowest(n, true));
}

int trail_norm(const LusztigDatum& c, const Trail& t) {
    const int N = static_cast<int>(t.steps.size()), M = N / 2;
    int s = 0;
    for (int k = 1; k <= M; ++k) s += (1 - t.steps[N - k]) * c[k - 1];
    return s;
}

int trail_max(const LusztigDatum& c) {
    // max (1 - d) c = sum c - min d c along j_0, with the cost of step N-k+1 equal to c_k.
    const int n = c.rank(), N = n * n - n, M = N / 2;
    std::vector<int> cost(N, 0);
    int total = 0;
    for (int k = 1; k <= M; ++k) {
        cost[N - k] = c[k - 1];
        total += c[k - 1];
    }
    auto m = min_trail_cost(word_j0(n), cost, s_n_varpi_n(n), SpinElement::lowest(n, true));
    if (!m) throw std::logic_error("no trail from s_n varpi_n to the lowest weight");
    return total - static_cast<int>(*m);
}

DArray trail_to_darray(const Trail& t) {
    const int N = static_cast<int>(t.steps.size()), M = N / 2;
    DArray d(M);
    for (int p = 0; p < M; ++p) d[p] = t.steps[N - 1 - p];
    return d;
}

DArray i0_trail_to_darray(const Trail& t) {
    const int N = static_cast<int>(t.steps.size()), M = N / 2;
    return DArray(t.steps.begin(), t.steps.begin() + M);
}

DArray paths_to_darray(int n, const std::vector<DoublePath>& paths) {
    DArray d(cell_count(n), 1);
    for (const auto& p : paths)
        for (auto t : p.cells()) d[cell_position(n, t)] = 0;
    return d;
}

std::vector<int> j_array(int n) {
    auto j = word_j0(n);
    const int N = static_cast<int>(j.size()), M = N / 2;
    std::vector<int> out(M);
    for (int p = 0; p < M; ++p) out[p] = j[N - 1 - p];
    return out;
}

namespace {

int at(int n, const DArray& d, int r, int m) { return d[cell_position(n, {r, m})]; }

bool interleaves(int n, const DArray& d, int r, int lo, int hi, int other) {
    // Cells of row `other` lying strictly between columns lo < hi of row r.
    int first = other < r ? lo : lo + 1;
    int last = other < r ? hi - 1 : hi;
    int ones = 0;
    for (int m = first; m <= last; ++m) ones += at(n, d, other, m);
    return ones == 1;
}

}  // namespace

bool is_darray(int n, int l, const DArray& d, BottomRowOrder order) {
    if (static_cast<int>(d.size()) != cell_count(n)) return false;
    for (int x : d)
        if (x != 0 && x != 1) return false;
    for (int r = 1; r <= n - 1; ++r) {
        int ones = 0;
        for (int m = 1; m <= r; ++m) ones += at(n, d, r, m);
        if (r <= 2 * l && ones != 0) return false;
        if (r > 2 * l && ones != r - 2 * l) return false;
    }
    for (int r = 2 * l + 1; r <= n - 1; ++r) {
        int prev = -1;
        for (int m = 1; m <= r; ++m) {
            if (!at(n, d, r, m)) continue;
            if (prev > 0) {
                if (r > 2 * l + 1 && !interleaves(n, d, r, prev, m, r - 1)) return false;
                if (r < n - 1 && !interleaves(n, d, r, prev, m, r + 1)) return false;
            }
            prev = m;
        }
    }
    auto jarr = j_array(n);
    std::vector<int> letters;
    for (int m = 1; m <= n - 1; ++m)
        if (at(n, d, n - 1, m)) letters.push_back(jarr[cell_position(n, {n - 1, m})]);
    if (order == BottomRowOrder::right_to_left) std::reverse(letters.begin(), letters.end());
    for (std::size_t k = 0; k < letters.size(); ++k)
        if (letters[k] != (k % 2 == 0 ? n : n - 1)) return false;
    return true;
}

std::vector<DArray> enumerate_darrays(int n, int l, BottomRowOrder order) {
    require_rank(n);
    if (l < 1 || 2 * l > n) throw std::invalid_argument("l out of range");
    std::vector<DArray> out;
    DArray d(cell_count(n), 0);
    std::function<void(int)> row = [&](int r) {
        if (r == n) {
            if (is_darray(n, l, d, order)) out.push_back(d);
            return;
        }
        int need = std::max(0, r - 2 * l);
        for (int mask = 0; mask < (1 << r); ++mask) {
            if (__builtin_popcount(mask) != need) continue;
            for (int m = 1; m <= r; ++m) d[cell_position(n, {r, m})] = (mask >> (m - 1)) & 1;
            row(r + 1);
        }
        for (int m = 1; m <= r; ++m) d[cell_position(n, {r, m})] = 0;
    };
    row(1);
    return out;
}

namespace {

SpinElement fundamental(int n, int letter) {
    if (letter == n) return SpinElement::highest(n, true);
    if (letter == n - 1) return SpinElement::highest(n, false);
    throw std::invalid_argument("string entry is only implemented for the spin nodes n-1 and n");
}

}  // namespace

int bz_string_entry(const std::vector<int>& lusztig_word, const std::vector<int>& coords,
                    const std::vector<int>& string_word, int k) {
    if (k < 1 || k > static_cast<int>(string_word.size())) throw std::invalid_argument("string index out of range");
    const int n = *std::max_element(lusztig_word.begin(), lusztig_word.end());
    const int letter = string_word[k - 1];
    SpinElement top = fundamental(n, letter);
    SpinElement lambda1 = top;
    for (int p = k - 2; p >= 0; --p) lambda1 = spin_reflect(lambda1, string_word[p]);
    SpinElement lambda2 = spin_reflect(top, letter);
    for (int p = k - 2; p >= 0; --p) lambda2 = spin_reflect(lambda2, string_word[p]);
    SpinElement bottom = SpinElement::lowest(n, top.even());
    auto m1 = min_trail_cost(lusztig_word, coords, lambda1, bottom);
    auto m2 = min_trail_cost(lusztig_word, coords, lambda2, bottom);
    if (!m1 || !m2) throw std::logic_error("no trail for the requested string entry");
    return static_cast<int>(*m1 - *m2);
}

int epsilon_star_n_bz(const LusztigDatum& c) {
    const int n = c.rank();
    std::vector<int> op(c.values().rbegin(), c.values().rend());
    return bz_string_entry(word_j0(n), op, reduced_word_i0(n), 1);
}

std::vector<int> j0_n_positions(int n) {
    auto j = word_j0(n);
    std::vector<int> out;
    for (int k = 0; k < static_cast<int>(j.size()); ++k)
        if (j[k] == n) out.push_back(k + 1);
    return out;
}

int lambda_by_chain(const LusztigDatum& c, int l) {
    const int n = c.rank();
    auto pos = j0_n_positions(n);
    if (l < 1 || l > static_cast<int>(pos.size())) throw std::invalid_argument("l out of range");
    auto j = word_j0(n);
    const int alpha_n = root_system(n).position(simple_root(n, n));
    LusztigDatum x = c.as(Support::upper);
    for (int k = 1; k < pos[l - 1]; ++k) {
        int letter = j[k - 1];
        if (letter == n) {
            std::vector<int> v = x.values();
            v[alpha_n] = 0;
            x = LusztigDatum(n, Support::upper, std::move(v));
            continue;
        }
        while (auto y = e_J(x, letter)) x = *y;
    }
    return x[alpha_n];
}

int lambda_by_trails(const LusztigDatum& c, int l) {
    const int n = c.rank();
    auto pos = j0_n_positions(n);
    if (l < 1 || l > static_cast<int>(pos.size())) throw std::invalid_argument("l out of range");
    return bz_string_entry(reduced_word_i0(n), c.values(), word_j0(n), pos[l - 1]);
}

}  // namespace dcrystal
