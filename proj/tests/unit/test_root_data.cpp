#include <doctest.h>

#include <algorithm>
#include <set>

#include "dcrystal/root_system.hpp"
#include "oracles.hpp"

using namespace dcrystal;

namespace {

Root sum(int i, int j) { return {RootKind::sum, i, j}; }
Root diff(int i, int j) { return {RootKind::diff, i, j}; }

}  // namespace

TEST_CASE("i0 splits into the published halves") {
    CHECK(reduced_word_upper(4) == std::vector<int>{4, 2, 1, 3, 2, 4});
    CHECK(reduced_word_lower(4) == std::vector<int>{3, 2, 1, 3, 2, 3});
    CHECK(reduced_word_upper(5) == std::vector<int>{5, 3, 2, 1, 4, 3, 2, 5, 3, 4});
    CHECK(reduced_word_lower(5) == std::vector<int>{5, 3, 2, 1, 5, 3, 2, 5, 3, 5});
    for (int n = 4; n <= 9; ++n) {
        auto w = reduced_word_i0(n);
        CHECK(w.size() == static_cast<std::size_t>(n * n - n));
        CHECK(w.front() == n);
    }
}

TEST_CASE("convex order at rank 4") {
    const std::vector<Root> expected{sum(3, 4),  sum(2, 4),  sum(1, 4),  sum(2, 3),  sum(1, 3),  sum(1, 2),
                                     diff(1, 2), diff(1, 3), diff(1, 4), diff(2, 3), diff(2, 4), diff(3, 4)};
    CHECK(root_system(4).roots() == expected);
}

TEST_CASE("roots of i0 agree with the reflection oracle") {
    for (int n = 4; n <= 8; ++n) {
        CAPTURE(n);
        const auto& rs = root_system(n);
        auto expected = oracle::convex_order(n, rs.word());
        REQUIRE(static_cast<int>(expected.size()) == rs.size());
        for (int k = 0; k < rs.size(); ++k) CHECK(rs.root(k).coordinates(n) == expected[k]);

        std::set<oracle::Vec> got;
        for (const auto& r : rs.roots()) got.insert(r.coordinates(n));
        CHECK(got == oracle::positive_roots(n));
    }
}

TEST_CASE("the order of i0 is convex") {
    for (int n = 4; n <= 7; ++n) {
        const auto& rs = root_system(n);
        for (int a = 0; a < rs.size(); ++a)
            for (int b = a + 1; b < rs.size(); ++b) {
                auto x = rs.root(a).coordinates(n), y = rs.root(b).coordinates(n);
                for (int k = 0; k < n; ++k) x[k] += y[k];
                for (int c = 0; c < rs.size(); ++c)
                    if (rs.root(c).coordinates(n) == x) CHECK((a < c && c < b));
            }
    }
}

TEST_CASE("upper half holds exactly the roots eps_i + eps_j") {
    for (int n = 4; n <= 7; ++n) {
        const auto& rs = root_system(n);
        for (int k = 0; k < rs.size(); ++k)
            CHECK((rs.root(k).kind == RootKind::sum) == (k < rs.half()));
    }
}

TEST_CASE("root text round trip") {
    for (const auto& r : root_system(6).roots()) CHECK(Root::parse(r.to_string()) == r);
    CHECK_THROWS_AS(Root::parse("*1,2"), std::invalid_argument);
    CHECK_THROWS_AS(root_system(3), std::invalid_argument);
}

TEST_CASE("word_to_roots rejects non-reduced words") {
    CHECK_THROWS_AS(word_to_roots(4, {1, 1}), std::domain_error);
    CHECK_NOTHROW(word_to_roots(4, {1, 2, 1}));
}

TEST_CASE("single braid moves") {
    CHECK(apply_transition({1, 1, 0}, {0, 3}) == std::vector<int>{1, 0, 2});
    CHECK(apply_transition({3, 5}, {0, 2}) == std::vector<int>{5, 3});

    // the 3-term move is an involution on coordinates
    for (int a = 0; a <= 3; ++a)
        for (int b = 0; b <= 3; ++b)
            for (int c = 0; c <= 3; ++c) {
                std::vector<int> v{a, b, c};
                CHECK(apply_transition(apply_transition(v, {0, 3}), {0, 3}) == v);
            }

    CHECK(braid_move_applies(4, {1, 2, 1}, {0, 3}));
    CHECK_FALSE(braid_move_applies(4, {1, 3, 1}, {0, 3}));
    CHECK(braid_move_applies(4, {1, 3}, {0, 2}));
    CHECK_FALSE(braid_move_applies(4, {1, 2}, {0, 2}));
    CHECK(apply_braid_move(4, {1, 2, 1}, {0, 3}) == std::vector<int>{2, 1, 2});
}

TEST_CASE("transitions preserve the weight of a datum") {
    const int n = 4;
    auto w = reduced_word_i0(n);
    auto path = find_word_path(n, w, [](const std::vector<int>& u) { return u.front() == 1; });
    REQUIRE(path.has_value());
    auto target = w;
    for (const auto& m : *path) target = apply_braid_move(n, target, m);
    CHECK(target.front() == 1);

    const auto start_roots = word_to_roots(n, w), end_roots = word_to_roots(n, target);
    std::vector<int> coords(w.size());
    for (std::size_t k = 0; k < coords.size(); ++k) coords[k] = static_cast<int>((k * 7 + 3) % 4);
    auto moved = transition(n, coords, w, *path);
    std::vector<int> wt0(n, 0), wt1(n, 0);
    for (std::size_t k = 0; k < coords.size(); ++k) {
        auto a = start_roots[k].coordinates(n), b = end_roots[k].coordinates(n);
        for (int m = 0; m < n; ++m) {
            wt0[m] += coords[k] * a[m];
            wt1[m] += moved[k] * b[m];
        }
    }
    CHECK(wt0 == wt1);
}

TEST_CASE("signed permutations multiply like reflections") {
    for (int n = 4; n <= 6; ++n)
        for (int i = 1; i <= n; ++i) {
            auto p = SignedPermutation::reflection(n, i);
            p.multiply_reflection(i);
            CHECK(p == SignedPermutation(n));
            oracle::Vec v(n);
            for (int k = 0; k < n; ++k) v[k] = 3 * k + 1;
            CHECK(SignedPermutation::reflection(n, i).apply(v) == oracle::reflect(n, v, i));
        }
}
