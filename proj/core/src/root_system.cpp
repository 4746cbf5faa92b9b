#include "dcrystal/root_system.hpp"

#include <algorithm>
#include <cstdlib>
#include <deque>
#include <map>
#include <memory>
#include <mutex>
#include <unordered_map>

namespace dcrystal {

void require_rank(int n) {
    if (n < 4) throw std::invalid_argument("rank must be at least 4, got " + std::to_string(n));
}

std::vector<int> Root::coordinates(int n) const {
    std::vector<int> v(n, 0);
    v.at(i - 1) = 1;
    v.at(j - 1) = kind == RootKind::sum ? 1 : -1;
    return v;
}

std::string Root::to_string() const {
    return std::string(kind == RootKind::sum ? "+" : "-") + std::to_string(i) + "," + std::to_string(j);
}

Root Root::parse(std::string_view text) {
    auto fail = [&] { return std::invalid_argument("malformed root: " + std::string(text)); };
    if (text.size() < 4 || (text[0] != '+' && text[0] != '-')) throw fail();
    auto comma = text.find(',');
    if (comma == std::string_view::npos) throw fail();
    Root r;
    r.kind = text[0] == '+' ? RootKind::sum : RootKind::diff;
    try {
        std::size_t used = 0;
        std::string a(text.substr(1, comma - 1)), b(text.substr(comma + 1));
        r.i = std::stoi(a, &used);
        if (used != a.size()) throw fail();
        r.j = std::stoi(b, &used);
        if (used != b.size()) throw fail();
    } catch (const std::logic_error&) {
        throw fail();
    }
    if (r.i < 1 || r.i >= r.j) throw fail();
    return r;
}

Root simple_root(int n, int i) {
    if (i < 1 || i > n) throw std::invalid_argument("simple root index out of range");
    if (i < n) return {RootKind::diff, i, i + 1};
    return {RootKind::sum, n - 1, n};
}

bool adjacent(int n, int a, int b) {
    if (a > b) std::swap(a, b);
    if (b == n) return a == n - 2;
    return b == a + 1 && b <= n - 1;
}

namespace {

std::vector<int> block_upper(int n, int k) {
    if (k % 2 == 1) {
        if (n % 2 == 0 && k == n - 1) return {n};
        std::vector<int> w{n};
        for (int x = n - 2; x >= k; --x) w.push_back(x);
        return w;
    }
    std::vector<int> w;
    for (int x = n - 1; x >= k; --x) w.push_back(x);
    return w;
}

std::vector<int> block_lower(int n, int k) {
    std::vector<int> w;
    if (n % 2 == 0) {
        for (int x = n - 1; x >= k; --x) w.push_back(x);
        return w;
    }
    if (k == n - 1) return {n};
    w.push_back(n);
    for (int x = n - 2; x >= k; --x) w.push_back(x);
    return w;
}

std::optional<Root> as_positive_root(const std::vector<int>& v) {
    int first = -1, second = -1;
    for (int k = 0; k < static_cast<int>(v.size()); ++k) {
        if (v[k] == 0) continue;
        if (std::abs(v[k]) != 1) return std::nullopt;
        if (first < 0) first = k;
        else if (second < 0) second = k;
        else return std::nullopt;
    }
    if (second < 0 || v[first] != 1) return std::nullopt;
    return Root{v[second] == 1 ? RootKind::sum : RootKind::diff, first + 1, second + 1};
}

int root_key(int n, const Root& r) { return ((r.kind == RootKind::sum ? 0 : 1) * (n + 1) + r.i) * (n + 1) + r.j; }

}  // namespace

std::vector<int> reduced_word_upper(int n) {
    require_rank(n);
    std::vector<int> w;
    for (int k = 1; k <= n - 1; ++k) {
        auto b = block_upper(n, k);
        w.insert(w.end(), b.begin(), b.end());
    }
    return w;
}

std::vector<int> reduced_word_lower(int n) {
    require_rank(n);
    std::vector<int> w;
    for (int k = 1; k <= n - 1; ++k) {
        auto b = block_lower(n, k);
        w.insert(w.end(), b.begin(), b.end());
    }
    return w;
}

std::vector<int> reduced_word_i0(int n) {
    auto w = reduced_word_upper(n);
    auto l = reduced_word_lower(n);
    w.insert(w.end(), l.begin(), l.end());
    return w;
}

SignedPermutation::SignedPermutation(int n) : image_(n) {
    for (int k = 0; k < n; ++k) image_[k] = k + 1;
}

SignedPermutation SignedPermutation::reflection(int n, int i) {
    SignedPermutation p(n);
    p.multiply_reflection(i);
    return p;
}

void SignedPermutation::multiply_reflection(int i) {
    const int n = rank();
    if (i < 1 || i > n) throw std::invalid_argument("reflection index out of range");
    if (i < n) {
        std::swap(image_[i - 1], image_[i]);
    } else {
        int a = image_[n - 2], b = image_[n - 1];
        image_[n - 2] = -b;
        image_[n - 1] = -a;
    }
}

std::vector<int> SignedPermutation::apply(const std::vector<int>& v) const {
    std::vector<int> out(rank(), 0);
    for (int k = 0; k < rank(); ++k) {
        int img = image_[k];
        int sign = img > 0 ? 1 : -1;
        out[std::abs(img) - 1] += sign * v[k];
    }
    return out;
}

std::vector<Root> word_to_roots(int n, const std::vector<int>& word) {
    require_rank(n);
    SignedPermutation w(n);
    std::vector<Root> out;
    std::vector<char> seen((2 * (n + 1) + 2) * (n + 1) * (n + 1), 0);
    for (int letter : word) {
        if (letter < 1 || letter > n) throw std::domain_error("letter out of range in word");
        auto beta = as_positive_root(w.apply(simple_root(n, letter).coordinates(n)));
        if (!beta) throw std::domain_error("word is not reduced");
        int key = root_key(n, *beta);
        if (seen[key]) throw std::domain_error("word is not reduced");
        seen[key] = 1;
        out.push_back(*beta);
        w.multiply_reflection(letter);
    }
    return out;
}

RootSystem::RootSystem(int n) : n_(n) {
    require_rank(n);
    word_ = reduced_word_i0(n);
    roots_ = word_to_roots(n, word_);
    if (static_cast<int>(roots_.size()) != n * n - n) throw std::logic_error("i_0 has wrong length");
    index_.assign((2 * (n + 1) + 2) * (n + 1) * (n + 1), -1);
    for (int p = 0; p < size(); ++p) index_[root_key(n, roots_[p])] = p;
}

std::optional<int> RootSystem::find(const Root& r) const {
    if (r.i < 1 || r.j > n_ || r.i >= r.j) return std::nullopt;
    int p = index_[root_key(n_, r)];
    if (p < 0) return std::nullopt;
    return p;
}

int RootSystem::position(const Root& r) const {
    auto p = find(r);
    if (!p) throw std::invalid_argument("not a positive root of D_" + std::to_string(n_) + ": " + r.to_string());
    return *p;
}

const RootSystem& root_system(int n) {
    require_rank(n);
    static std::mutex mutex;
    static std::map<int, std::unique_ptr<RootSystem>> cache;
    std::lock_guard lock(mutex);
    auto& slot = cache[n];
    if (!slot) slot = std::make_unique<RootSystem>(n);
    return *slot;
}

bool braid_move_applies(int n, const std::vector<int>& word, const BraidMove& move) {
    const int p = move.position;
    if (p < 0 || p + move.arity > static_cast<int>(word.size())) return false;
    if (move.arity == 2) return word[p] != word[p + 1] && !adjacent(n, word[p], word[p + 1]);
    if (move.arity == 3) return word[p] == word[p + 2] && adjacent(n, word[p], word[p + 1]);
    return false;
}

std::vector<int> apply_braid_move(int n, std::vector<int> word, const BraidMove& move) {
    if (!braid_move_applies(n, word, move)) throw std::invalid_argument("braid move does not apply");
    const int p = move.position;
    if (move.arity == 2) {
        std::swap(word[p], word[p + 1]);
    } else {
        int a = word[p], b = word[p + 1];
        word[p] = b;
        word[p + 1] = a;
        word[p + 2] = b;
    }
    return word;
}

std::vector<int> apply_transition(std::vector<int> c, const BraidMove& move) {
    const int p = move.position;
    if (move.arity == 2) {
        std::swap(c.at(p), c.at(p + 1));
        return c;
    }
    int a = c.at(p), b = c.at(p + 1), d = c.at(p + 2);
    int m = std::min(a, d);
    c[p] = b + d - m;
    c[p + 1] = m;
    c[p + 2] = a + b - m;
    return c;
}

std::vector<int> transition(int n, std::vector<int> coords, std::vector<int> word,
                            const std::vector<BraidMove>& moves) {
    if (coords.size() != word.size()) throw std::invalid_argument("coordinate length differs from word length");
    for (const auto& m : moves) {
        word = apply_braid_move(n, std::move(word), m);
        coords = apply_transition(std::move(coords), m);
    }
    return coords;
}

std::optional<std::vector<BraidMove>> find_word_path(
    int n, const std::vector<int>& start, const std::function<bool(const std::vector<int>&)>& accept,
    std::size_t node_cap) {
    auto key = [](const std::vector<int>& w) { return std::string(w.begin(), w.end()); };
    struct Parent {
        std::string from;
        BraidMove move;
    };
    std::unordered_map<std::string, Parent> parent;
    std::deque<std::vector<int>> queue;
    parent.emplace(key(start), Parent{{}, {-1, 0}});
    queue.push_back(start);
    const int len = static_cast<int>(start.size());

    auto rebuild = [&](const std::vector<int>& w) {
        std::vector<BraidMove> path;
        std::string k = key(w);
        while (true) {
            const auto& p = parent.at(k);
            if (p.move.position < 0) break;
            path.push_back(p.move);
            k = p.from;
        }
        std::reverse(path.begin(), path.end());
        return path;
    };

    while (!queue.empty()) {
        auto w = std::move(queue.front());
        queue.pop_front();
        if (accept(w)) return rebuild(w);
        std::string wk = key(w);
        for (int p = 0; p < len; ++p) {
            for (int arity : {2, 3}) {
                BraidMove m{p, arity};
                if (!braid_move_applies(n, w, m)) continue;
                auto next = apply_braid_move(n, w, m);
                auto [it, fresh] = parent.emplace(key(next), Parent{wk, m});
                if (!fresh) continue;
                if (parent.size() > node_cap) throw SearchBudgetExceeded("braid-move search exceeded node cap");
                queue.push_back(std::move(next));
            }
        }
    }
    return std::nullopt;
}

}  // namespace dcrystal
