#include "dcrystal/lusztig.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace dcrystal {

namespace {

constexpr int minus_infinity = std::numeric_limits<int>::min() / 4;

int pos_sum(const RootSystem& rs, int i, int j) { return rs.position({RootKind::sum, std::min(i, j), std::max(i, j)}); }
int pos_diff(const RootSystem& rs, int i, int j) { return rs.position({RootKind::diff, i, j}); }

}  // namespace

bool fits_support(int n, const std::vector<int>& values, Support support) {
    const int N = n * n - n, M = N / 2;
    if (static_cast<int>(values.size()) != N) return false;
    for (int p = 0; p < N; ++p) {
        if (values[p] < 0) return false;
        if (values[p] == 0) continue;
        if (support == Support::upper && p >= M) return false;
        if (support == Support::lower && p < M) return false;
    }
    return true;
}

LusztigDatum::LusztigDatum(int n, Support support) : n_(n), support_(support) {
    require_rank(n);
    values_.assign(n * n - n, 0);
}

LusztigDatum::LusztigDatum(int n, Support support, std::vector<int> values)
    : n_(n), support_(support), values_(std::move(values)) {
    require_rank(n);
    check();
}

void LusztigDatum::check() const {
    if (static_cast<int>(values_.size()) != n_ * n_ - n_)
        throw std::invalid_argument("datum length must be n^2-n");
    if (!fits_support(n_, values_, support_))
        throw std::invalid_argument("datum has negative entries or lies outside its support");
}

LusztigDatum LusztigDatum::unit(int n, const Root& r, Support support) {
    LusztigDatum c(n, support);
    c.set(r, 1);
    return c;
}

int LusztigDatum::at(const Root& r) const { return values_[root_system(n_).position(r)]; }

void LusztigDatum::set(const Root& r, int value) {
    int p = root_system(n_).position(r);
    values_[p] = value;
    if (!fits_support(n_, values_, support_)) throw std::invalid_argument("value outside datum support");
}

void LusztigDatum::add(int pos, int delta) { values_.at(pos) += delta; }

bool LusztigDatum::is_zero() const {
    return std::all_of(values_.begin(), values_.end(), [](int v) { return v == 0; });
}

int LusztigDatum::total() const { return std::accumulate(values_.begin(), values_.end(), 0); }

LusztigDatum LusztigDatum::as(Support support) const { return LusztigDatum(n_, support, values_); }

std::size_t LusztigDatumHash::operator()(const LusztigDatum& c) const {
    std::size_t h = static_cast<std::size_t>(c.rank());
    for (int v : c.values()) h = h * 1000003u ^ static_cast<std::size_t>(v);
    return h;
}

std::vector<int> weight(const LusztigDatum& c) {
    const auto& rs = root_system(c.rank());
    std::vector<int> w(c.rank(), 0);
    for (int p = 0; p < rs.size(); ++p) {
        if (c[p] == 0) continue;
        const Root& r = rs.root(p);
        w[r.i - 1] -= c[p];
        w[r.j - 1] -= r.kind == RootKind::sum ? c[p] : -c[p];
    }
    return w;
}

int pairing(const std::vector<int>& lambda, int i) {
    const int n = static_cast<int>(lambda.size());
    if (i == 0) return -lambda[0] - lambda[1];
    if (i == n) return lambda[n - 2] + lambda[n - 1];
    if (i < 0 || i > n) throw std::invalid_argument("index out of range");
    return lambda[i - 1] - lambda[i];
}

Signature Signature::reduced() const {
    std::vector<SignatureRun> minus, plus;
    for (const auto& run : runs_) {
        if (run.count == 0) continue;
        if (run.sign > 0) {
            plus.push_back(run);
            continue;
        }
        int left = run.count;
        while (left > 0 && !plus.empty()) {
            int take = std::min(left, plus.back().count);
            plus.back().count -= take;
            left -= take;
            if (plus.back().count == 0) plus.pop_back();
        }
        if (left > 0) {
            auto r = run;
            r.count = left;
            minus.push_back(r);
        }
    }
    minus.insert(minus.end(), plus.begin(), plus.end());
    return Signature(std::move(minus));
}

int Signature::minus_count() const {
    int s = 0;
    for (const auto& r : runs_)
        if (r.sign < 0) s += r.count;
    return s;
}

int Signature::plus_count() const {
    int s = 0;
    for (const auto& r : runs_)
        if (r.sign > 0) s += r.count;
    return s;
}

std::optional<SignatureRun> Signature::leftmost_plus() const {
    for (const auto& r : runs_)
        if (r.sign > 0 && r.count > 0) return r;
    return std::nullopt;
}

std::optional<SignatureRun> Signature::rightmost_minus() const {
    for (auto it = runs_.rbegin(); it != runs_.rend(); ++it)
        if (it->sign < 0 && it->count > 0) return *it;
    return std::nullopt;
}

Signature sigma(const LusztigDatum& c, int i) {
    const int n = c.rank();
    if (i < 1 || i >= n) throw std::invalid_argument("sigma is defined for 1 <= i <= n-1");
    const auto& rs = root_system(n);
    std::vector<SignatureRun> runs;
    auto pair = [&](int minus_pos, int plus_pos) {
        runs.push_back({-1, c[minus_pos], minus_pos, plus_pos});
        runs.push_back({+1, c[plus_pos], plus_pos, minus_pos});
    };
    for (int j = n; j >= i + 2; --j) pair(pos_sum(rs, i, j), pos_sum(rs, i + 1, j));
    for (int s = i - 1; s >= 1; --s) pair(pos_sum(rs, s, i), pos_sum(rs, s, i + 1));
    if (c.support() != Support::upper) {
        for (int s = 1; s <= i - 1; ++s) pair(pos_diff(rs, s, i + 1), pos_diff(rs, s, i));
        int a = pos_diff(rs, i, i + 1);
        runs.push_back({-1, c[a], a, -1});
    }
    return Signature(std::move(runs));
}

namespace {

void require_index(int n, int i, int lo, int hi) {
    if (i < lo || i > hi)
        throw std::invalid_argument("operator index " + std::to_string(i) + " out of range for n=" + std::to_string(n));
}

LusztigDatum moved(const LusztigDatum& c, const SignatureRun& run, Support support) {
    std::vector<int> v = c.values();
    v[run.pos] -= 1;
    if (run.partner >= 0) v[run.partner] += 1;
    return LusztigDatum(c.rank(), support, std::move(v));
}

}  // namespace

LusztigDatum f_full(const LusztigDatum& c0, int i) {
    const int n = c0.rank();
    require_index(n, i, 1, n);
    LusztigDatum c = c0.as(Support::full);
    const auto& rs = root_system(n);
    if (i == n) {
        c.add(rs.position(simple_root(n, n)), 1);
        return c;
    }
    auto plus = sigma(c, i).reduced().leftmost_plus();
    if (plus) return moved(c, *plus, Support::full);
    c.add(rs.position(simple_root(n, i)), 1);
    return c;
}

std::optional<LusztigDatum> e_full(const LusztigDatum& c0, int i) {
    const int n = c0.rank();
    require_index(n, i, 1, n);
    LusztigDatum c = c0.as(Support::full);
    if (i == n) {
        int p = root_system(n).position(simple_root(n, n));
        if (c[p] == 0) return std::nullopt;
        c.add(p, -1);
        return c;
    }
    auto minus = sigma(c, i).reduced().rightmost_minus();
    if (!minus) return std::nullopt;
    return moved(c, *minus, Support::full);
}

int epsilon_full(const LusztigDatum& c, int i) {
    const int n = c.rank();
    require_index(n, i, 1, n);
    if (i == n) return c[root_system(n).position(simple_root(n, n))];
    return sigma(c.as(Support::full), i).reduced().minus_count();
}

int phi_full(const LusztigDatum& c, int i) { return epsilon_full(c, i) + pairing(weight(c), i); }

std::optional<LusztigDatum> f_J(const LusztigDatum& c, int i) {
    require_index(c.rank(), i, 1, c.rank() - 1);
    auto u = c.as(Support::upper);
    auto plus = sigma(u, i).reduced().leftmost_plus();
    if (!plus) return std::nullopt;
    return moved(u, *plus, Support::upper);
}

std::optional<LusztigDatum> e_J(const LusztigDatum& c, int i) {
    require_index(c.rank(), i, 1, c.rank() - 1);
    auto u = c.as(Support::upper);
    auto minus = sigma(u, i).reduced().rightmost_minus();
    if (!minus) return std::nullopt;
    return moved(u, *minus, Support::upper);
}

int epsilon_J(const LusztigDatum& c, int i) {
    require_index(c.rank(), i, 1, c.rank() - 1);
    return sigma(c.as(Support::upper), i).reduced().minus_count();
}

int phi_J(const LusztigDatum& c, int i) {
    require_index(c.rank(), i, 1, c.rank() - 1);
    return sigma(c.as(Support::upper), i).reduced().plus_count();
}

std::pair<LusztigDatum, LusztigDatum> split(const LusztigDatum& c) {
    const int n = c.rank(), M = (n * n - n) / 2;
    std::vector<int> up(c.values()), low(c.values());
    std::fill(up.begin() + M, up.end(), 0);
    std::fill(low.begin(), low.begin() + M, 0);
    return {LusztigDatum(n, Support::upper, std::move(up)), LusztigDatum(n, Support::lower, std::move(low))};
}

LusztigDatum combine(const LusztigDatum& upper, const LusztigDatum& lower) {
    if (upper.rank() != lower.rank()) throw std::invalid_argument("rank mismatch");
    const int n = upper.rank();
    if (!fits_support(n, upper.values(), Support::upper) || !fits_support(n, lower.values(), Support::lower))
        throw std::invalid_argument("factors do not have the expected supports");
    std::vector<int> v(upper.values());
    for (std::size_t p = 0; p < v.size(); ++p) v[p] += lower[static_cast<int>(p)];
    return LusztigDatum(n, Support::full, std::move(v));
}

namespace {

int lower_epsilon(const LusztigDatum& lower, int i) {
    return i == lower.rank() ? minus_infinity : epsilon_full(lower, i);
}

int upper_phi(const LusztigDatum& upper, int i) { return phi_full(upper, i); }

}  // namespace

LusztigDatum tensor_f(const LusztigDatum& upper, const LusztigDatum& lower, int i) {
    if (upper_phi(upper, i) > lower_epsilon(lower, i)) {
        auto b1 = f_full(upper, i);
        return combine(b1.as(Support::upper), lower);
    }
    auto b2 = f_full(lower, i);
    return combine(upper, b2.as(Support::lower));
}

std::optional<LusztigDatum> tensor_e(const LusztigDatum& upper, const LusztigDatum& lower, int i) {
    if (upper_phi(upper, i) >= lower_epsilon(lower, i)) {
        auto b1 = e_full(upper, i);
        if (!b1) return std::nullopt;
        return combine(b1->as(Support::upper), lower);
    }
    auto b2 = e_full(lower, i);
    if (!b2) return std::nullopt;
    return combine(upper, b2->as(Support::lower));
}

int tensor_epsilon(const LusztigDatum& upper, const LusztigDatum& lower, int i) {
    int e1 = epsilon_full(upper, i);
    if (i == upper.rank()) return e1;
    return std::max(e1, epsilon_full(lower, i) - pairing(weight(upper), i));
}

bool is_l_highest(const LusztigDatum& c) {
    const int n = c.rank();
    const auto& rs = root_system(n);
    std::vector<char> allowed(rs.size(), 0);
    std::vector<int> chain;
    for (int k = n - 1; k >= 1; k -= 2) {
        int p = pos_sum(rs, k, k + 1);
        allowed[p] = 1;
        chain.push_back(c[p]);
    }
    for (int p = 0; p < rs.size(); ++p)
        if (!allowed[p] && c[p] != 0) return false;
    return std::is_sorted(chain.begin(), chain.end(), std::greater<>());
}

}  // namespace dcrystal
