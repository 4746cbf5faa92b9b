// Prints one PASS/FAIL line per acceptance criterion; exits non-zero if any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "dcrystal/burge.hpp"
#include "dcrystal/kr.hpp"
#include "dcrystal/trails.hpp"
#include "dcrystal/triangle.hpp"
#include "dcrystal/verify.hpp"
#include "oracles.hpp"

using namespace dcrystal;

namespace {

struct Outcome {
    bool ok = true;
    std::string note;
};

struct Criterion {
    int id;
    const char* title;
    double limit_seconds;
    std::function<Outcome()> run;
};

int worker_count() { return static_cast<int>(std::max(1u, std::thread::hardware_concurrency())); }

SkewTableau anti(const std::vector<std::vector<int>>& rows) {
    std::vector<std::vector<Letter>> out;
    for (const auto& r : rows) {
        out.emplace_back();
        for (int x : r) out.back().push_back(Letter{x});
    }
    return SkewTableau::anti_normal(out);
}

// Runs a suite and folds its result into `out`.
void suite(Outcome& out, const std::string& name, VerifyConfig cfg) {
    cfg.jobs = worker_count();
    auto r = run_suite(name, cfg);
    std::ostringstream os;
    os << name << " n=" << cfg.n;
    if (name == "kr-iso")
        os << " s=" << cfg.s;
    else
        os << (cfg.samples ? " samples=" : " bound=") << (cfg.samples ? cfg.samples : cfg.bound);
    os << ": " << r.cases << " cases, " << r.failures << " failures";
    if (!r.counterexamples.empty()) os << " (first: " << r.counterexamples.front() << ")";
    if (!out.note.empty()) out.note += "; ";
    out.note += os.str();
    out.ok = out.ok && r.passed() && r.cases > 0;
}

VerifyConfig box(int n, int bound) {
    VerifyConfig c;
    c.n = n;
    c.bound = bound;
    return c;
}

VerifyConfig sampled(int n, long long samples, int bound, std::uint64_t seed) {
    VerifyConfig c;
    c.n = n;
    c.samples = samples;
    c.bound = bound;
    c.seed = seed;
    return c;
}

Outcome c1() {
    auto c = datum_from_rows(5, {{2}, {1, 0}, {1, 2, 1}, {2, 1, 0, 1}});
    auto t = kappa_se(c);
    auto expected = anti({{5, 4}, {3, 3}, {5, 5, 5, 5, 5, 4, 4, 2, 2}, {4, 4, 3, 2, 2, 1, 1, 1, 1}});
    const int paths = epsilon_star_n(c), trails = trail_max(c), bz = epsilon_star_n_bz(c);
    Outcome o;
    o.ok = t == expected && t.shape() == Partition{9, 9, 2, 2} && paths == 9 && trails == 9 && bz == 9;
    o.note = "columns=" + std::to_string(t.column_count()) + " paths=" + std::to_string(paths) +
             " trails=" + std::to_string(trails) + " strings=" + std::to_string(bz) +
             (t == expected ? " tableau matches" : " tableau differs");
    return o;
}

Outcome c2() {
    auto c = datum_from_rows(6, {{1}, {2, 3}, {2, 1, 1}, {1, 3, 2, 1}, {2, 3, 2, 0, 3}});
    auto lambda = kappa_nw(c).shape();
    const int m1 = max_nonintersecting(c, 1).value, m2 = max_nonintersecting(c, 2).value,
              m3 = max_nonintersecting(c, 3).value;
    Outcome o;
    o.ok = lambda == Partition{19, 19, 6, 6, 2, 2} && m1 == 19 && m2 == 25 && m3 == 27;
    std::string lam;
    for (int x : lambda) lam += (lam.empty() ? "" : ",") + std::to_string(x);
    o.note = "lambda=(" + lam + ") maxima=" + std::to_string(m1) + "/" + std::to_string(m2) + "/" + std::to_string(m3);
    return o;
}

Outcome c3() {
    auto c = datum_from_rows(6, {{0}, {0, 3}, {0, 1, 1}, {0, 3, 2, 1}, {0, 3, 2, 0, 3}});
    auto g = glue_T(c, 4);
    auto printed = anti({{5, 5, 4, 4},
                         {3, 3, 3, 3},
                         {5, 5, 5, 5, 5, 5, 5, 5, 4, 3, 2, 2, 2, 2, 2},
                         {4, 4, 4, 4, 4, 3, 2, 1, 1, 1, 1, 1, 1, 1, 1}});
    const bool as_printed = g.glued == printed, equals_se = g.glued == kappa_se(c);
    Outcome o;
    o.ok = as_printed && equals_se;
    o.note = std::string("glued ") + (as_printed ? "matches" : "differs from") + " the printed tableau, " +
             (equals_se ? "equals" : "differs from") + " anti-normal insertion";
    return o;
}

Outcome c4() {
    Outcome o;
    suite(o, "burge-equivariance", box(4, 2));
    suite(o, "burge-equivariance", sampled(5, 10'000, 3, 4));
    return o;
}

Outcome c5() {
    Outcome o;
    suite(o, "operator-oracle", box(4, 2));
    suite(o, "epsilon-star", box(4, 2));
    return o;
}

Outcome c6() {
    Outcome o;
    suite(o, "shape-equality", box(4, 2));
    suite(o, "shape-equality", sampled(5, 1000, 3, 6));
    suite(o, "shape-equality", sampled(6, 1000, 3, 6));
    return o;
}

Outcome c7() {
    Outcome o;
    const long long b41 = static_cast<long long>(enumerate_BJs(4, 1).size());
    o.ok = b41 == 8;
    for (auto [n, s] : std::vector<std::pair<int, int>>{{4, 1}, {4, 2}, {5, 1}}) {
        const long long size = static_cast<long long>(enumerate_BJs(n, s).size());
        const long long dim = oracle::weyl_dimension(n, s);
        o.ok = o.ok && size == dim;
        o.note += (o.note.empty() ? "" : ", ") + std::string("(") + std::to_string(n) + "," + std::to_string(s) +
                  "): " + std::to_string(size) + " vs " + std::to_string(dim);
    }
    return o;
}

Outcome c8() {
    Outcome o;
    for (auto [n, s] : std::vector<std::pair<int, int>>{{4, 1}, {4, 2}, {5, 1}}) {
        VerifyConfig cfg;
        cfg.n = n;
        cfg.s = s;
        suite(o, "kr-iso", cfg);
    }
    return o;
}

Outcome c9() {
    Outcome o;
    const std::vector<std::size_t> published{2, 5};
    for (int n = 4; n <= 6; ++n) {
        const auto trails = trails_T_prime(n).size();
        const auto arrays = enumerate_darrays(n, 1).size();
        const auto paths = enumerate_double_paths(n, {1, 1}).size();
        bool ok = trails == arrays && arrays == paths;
        if (n - 4 < static_cast<int>(published.size())) ok = ok && paths == published[n - 4];
        o.ok = o.ok && ok;
        o.note += (o.note.empty() ? "" : ", ") + std::string("n=") + std::to_string(n) + ": " +
                  std::to_string(trails) + "/" + std::to_string(arrays) + "/" + std::to_string(paths);
    }
    return o;
}

Outcome c10() {
    Outcome o;
    suite(o, "string-formula", box(4, 2));
    return o;
}

}  // namespace

int main() {
    const std::vector<Criterion> criteria{
        {1, "rank 5 worked example: anti-normal tableau and epsilon = 9 three ways", 1.0, c1},
        {2, "rank 6 worked example: shape (19,19,6,6,2,2) and maxima 19/25/27", 5.0, c2},
        {3, "gluing example at rank 6, i = 4", 1.0, c3},
        {4, "equivariance of both insertions (rank 4 box, 10^4 rank 5 samples)", 300.0, c4},
        {5, "signature rule vs braid-move transitions, rank 4 box", 600.0, c5},
        {6, "shape by insertion equals shape by paths", 0.0, c6},
        {7, "polytope sizes vs Weyl dimension formula", 0.0, c7},
        {8, "KR graph isomorphism and string regularity", 120.0, c8},
        {9, "trails, arrays and double paths have equal counts", 0.0, c9},
        {10, "chain and trail values equal the insertion shape, rank 4 box", 0.0, c10},
    };

    int failed = 0;
    for (const auto& c : criteria) {
        const auto start = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = c.run();
        } catch (const std::exception& e) {
            o.ok = false;
            o.note = std::string("exception: ") + e.what();
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        const bool in_time = c.limit_seconds <= 0 || secs <= c.limit_seconds;
        const bool pass = o.ok && in_time;
        failed += pass ? 0 : 1;
        std::printf("%s C%-2d %s [%.2fs%s] %s%s\n", pass ? "PASS" : "FAIL", c.id, c.title, secs,
                    c.limit_seconds > 0 ? (" / limit " + std::to_string(static_cast<int>(c.limit_seconds)) + "s").c_str()
                                        : "",
                    o.note.c_str(), in_time ? "" : " (over time limit)");
        std::fflush(stdout);
    }
    std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
    return failed == 0 ? 0 : 1;
}
