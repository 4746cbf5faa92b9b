#include "dcrystal/verify.hpp"

#include <algorithm>
#include <atomic>
#include <limits>
#include <map>
#include <mutex>
#include <random>
#include <set>
#include <stdexcept>
#include <thread>

#include "dcrystal/burge.hpp"
#include "dcrystal/kr.hpp"
#include "dcrystal/serialize.hpp"
#include "dcrystal/tableau.hpp"
#include "dcrystal/trails.hpp"
#include "dcrystal/triangle.hpp"

namespace dcrystal {

namespace {

constexpr std::size_t kKeptCounterexamples = 10;
constexpr long long kMaxExhaustive = 50'000'000;

int support_length(int n, Support s) {
    const int N = n * n - n;
    return s == Support::full ? N : N / 2;
}

// Per-worker accumulator; merged in a way that does not depend on scheduling.
struct Tally {
    long long cases = 0;
    long long failures = 0;
    std::set<std::string> examples;

    void fail(std::string what) {
        ++failures;
        examples.insert(std::move(what));
        if (examples.size() > kKeptCounterexamples) examples.erase(std::prev(examples.end()));
    }
    void merge(const Tally& o) {
        cases += o.cases;
        failures += o.failures;
        for (const auto& e : o.examples) {
            examples.insert(e);
            if (examples.size() > kKeptCounterexamples) examples.erase(std::prev(examples.end()));
        }
    }
};

std::string label(const LusztigDatum& c) {
    if (fits_support(c.rank(), c.values(), Support::upper)) return nlohmann::json(datum_rows(c)).dump();
    return nlohmann::json(c.values()).dump();
}

void finish(SuiteReport& r, const Tally& t) {
    r.cases = t.cases;
    r.failures = t.failures;
    r.counterexamples.assign(t.examples.begin(), t.examples.end());
}

// Runs `check` over the configured data set, one tally per worker.
Tally over_data(const VerifyConfig& cfg, Support support,
                const std::function<void(const LusztigDatum&, Tally&)>& check) {
    long long count = cfg.samples;
    if (count <= 0) {
        count = datum_box_size(cfg.n, support, cfg.bound);
        if (count > kMaxExhaustive)
            throw std::invalid_argument("exhaustive run too large; pass a sample count");
    }
    const int jobs = std::max(1, cfg.jobs);
    std::vector<Tally> tallies(jobs);
    parallel_for(count, jobs, [&](long long begin, long long end, int w) {
        for (long long k = begin; k < end; ++k) {
            LusztigDatum c = cfg.samples > 0 ? random_datum(cfg.n, support, cfg.bound, cfg.seed, k)
                                             : datum_at(cfg.n, support, cfg.bound, k);
            ++tallies[w].cases;
            check(c, tallies[w]);
        }
    });
    Tally all;
    for (const auto& t : tallies) all.merge(t);
    return all;
}

template <class T>
bool same(const std::optional<T>& a, const std::optional<T>& b) {
    return a.has_value() == b.has_value() && (!a || *a == *b);
}

std::optional<LusztigDatum> shift(const LusztigDatum& c, int pos, int delta) {
    std::vector<int> v = c.values();
    v[pos] += delta;
    if (v[pos] < 0) return std::nullopt;
    return LusztigDatum(c.rank(), c.support(), std::move(v));
}

std::optional<SkewTableau> kse(const std::optional<LusztigDatum>& c) {
    if (!c) return std::nullopt;
    return kappa_se(*c);
}

std::optional<SkewTableau> knw(const std::optional<LusztigDatum>& c) {
    if (!c) return std::nullopt;
    return kappa_nw(*c);
}

Partition padded(Partition p, int n) {
    p.resize(std::max<std::size_t>(p.size(), n), 0);
    return p;
}

SuiteReport suite_operator_oracle(const VerifyConfig& cfg) {
    SuiteReport r;
    r.suite = "operator-oracle";
    TransitionOracle oracle(cfg.n);
    auto t = over_data(cfg, Support::full, [&](const LusztigDatum& c, Tally& tally) {
        for (int i = 1; i <= c.rank(); ++i) {
            if (!(f_full(c, i) == oracle.f(c, i))) tally.fail("f_" + std::to_string(i) + " " + label(c));
            if (!same(e_full(c, i), oracle.e(c, i))) tally.fail("e_" + std::to_string(i) + " " + label(c));
            if (epsilon_full(c, i) != oracle.epsilon(c, i)) tally.fail("eps_" + std::to_string(i) + " " + label(c));
        }
    });
    finish(r, t);
    return r;
}

SuiteReport suite_epsilon_star(const VerifyConfig& cfg) {
    SuiteReport r;
    r.suite = "epsilon-star";
    TransitionOracle oracle(cfg.n);
    auto t = over_data(cfg, Support::upper, [&](const LusztigDatum& c, Tally& tally) {
        if (epsilon_star_n(c) != oracle.epsilon_star_n(c)) tally.fail(label(c));
    });
    finish(r, t);
    return r;
}

SuiteReport suite_tensor_split(const VerifyConfig& cfg) {
    SuiteReport r;
    r.suite = "tensor-split";
    auto t = over_data(cfg, Support::full, [&](const LusztigDatum& c, Tally& tally) {
        auto [up, low] = split(c);
        if (!(combine(up, low) == c)) tally.fail("combine " + label(c));
        for (int i = 1; i <= c.rank(); ++i) {
            if (!(f_full(c, i) == tensor_f(up, low, i))) tally.fail("f_" + std::to_string(i) + " " + label(c));
            if (!same(e_full(c, i), tensor_e(up, low, i))) tally.fail("e_" + std::to_string(i) + " " + label(c));
            if (epsilon_full(c, i) != tensor_epsilon(up, low, i))
                tally.fail("eps_" + std::to_string(i) + " " + label(c));
        }
    });
    finish(r, t);
    return r;
}

SuiteReport suite_burge_equivariance(const VerifyConfig& cfg) {
    SuiteReport r;
    r.suite = "burge-equivariance";
    const int n = cfg.n;
    const int alpha_n = root_system(n).position(simple_root(n, n));
    const int e12 = root_system(n).position({RootKind::sum, 1, 2});
    auto t = over_data(cfg, Support::upper, [&](const LusztigDatum& c, Tally& tally) {
        const auto se = kappa_se(c);
        const auto nw = kappa_nw(c);
        auto check = [&](bool ok, const std::string& what) {
            if (!ok) tally.fail(what + " " + label(c));
        };
        for (int i = 1; i < n; ++i) {
            auto f = f_J(c, i), e = e_J(c, i);
            const std::string k = std::to_string(i);
            check(same(kse(f), tableau_f(se, i)), "se f_" + k);
            check(same(kse(e), tableau_e(se, i)), "se e_" + k);
            check(same(knw(f), tableau_f(nw, i)), "nw f_" + k);
            check(same(knw(e), tableau_e(nw, i)), "nw e_" + k);
        }
        check(same(kse(shift(c, alpha_n, +1)), f_n_se(se, n)), "se f_n");
        check(same(kse(shift(c, alpha_n, -1)), e_n_se(se, n)), "se e_n");
        check(same(knw(shift(c, e12, -1)), f_0_nw(nw)), "nw f_0");
        check(same(knw(shift(c, e12, +1)), e_0_nw(nw)), "nw e_0");
    });
    finish(r, t);
    return r;
}

SuiteReport suite_burge_inverse(const VerifyConfig& cfg) {
    SuiteReport r;
    r.suite = "burge-inverse";
    const int n = cfg.n;
    auto t = over_data(cfg, Support::upper, [&](const LusztigDatum& c, Tally& tally) {
        const auto se = kappa_se(c);
        const auto nw = kappa_nw(c);
        if (!se.empty() && (!se.is_anti_normal() || !se.is_semistandard())) tally.fail("se shape " + label(c));
        if (!nw.empty() && (!nw.is_normal() || !nw.is_semistandard())) tally.fail("nw shape " + label(c));
        if (!has_even_columns(se) || !has_even_columns(nw) || se.height() > n || nw.height() > n)
            tally.fail("columns " + label(c));
        if (!(kappa_se_inverse(se, n) == c)) tally.fail("se inverse " + label(c));
        if (!(kappa_nw_inverse(nw, n) == c)) tally.fail("nw inverse " + label(c));
        if (!(rectify(se) == nw)) tally.fail("knuth class " + label(c));
    });
    finish(r, t);
    return r;
}

SuiteReport suite_glue(const VerifyConfig& cfg) {
    SuiteReport r;
    r.suite = "glue";
    const int n = cfg.n;
    auto t = over_data(cfg, Support::upper, [&](const LusztigDatum& c, Tally& tally) {
        for (int i = 1; i < n; ++i) {
            LusztigDatum part(n, Support::upper);
            for (auto cell : all_cells(n)) {
                Root root = cell_root(n, cell);
                if (root.j <= i + 1) part.add(root_system(n).position(root), cell_value(c, cell));
            }
            if (!(glue_T(part, i).glued == kappa_se(part)))
                tally.fail("i=" + std::to_string(i) + " " + label(part));
        }
    });
    finish(r, t);
    return r;
}

SuiteReport suite_shape_equality(const VerifyConfig& cfg) {
    SuiteReport r;
    r.suite = "shape-equality";
    const int n = cfg.n;
    auto t = over_data(cfg, Support::upper, [&](const LusztigDatum& c, Tally& tally) {
        auto by_paths = padded(shape_from_paths(c), n);
        auto by_insertion = padded(lambda_of(c), n);
        if (by_paths != by_insertion) tally.fail("shape " + label(c));
        const int e = epsilon_star_n(c);
        if (e != max_nonintersecting(c, 1).value || e != kappa_se(c).column_count())
            tally.fail("epsilon " + label(c));
        for (std::size_t k = 1; k < by_paths.size(); ++k)
            if (by_paths[k] > by_paths[k - 1]) tally.fail("not a partition " + label(c));
    });
    finish(r, t);
    return r;
}

SuiteReport suite_string_formula(const VerifyConfig& cfg) {
    SuiteReport r;
    r.suite = "string-formula";
    const int n = cfg.n;
    auto t = over_data(cfg, Support::upper, [&](const LusztigDatum& c, Tally& tally) {
        const int e = epsilon_star_n(c);
        if (e != trail_max(c) || e != epsilon_star_n_bz(c)) tally.fail("epsilon " + label(c));
        auto lambda = padded(lambda_of(c), n);
        for (int l = 1; 2 * l <= n; ++l) {
            const int want = lambda[2 * l - 2];
            if (lambda_by_trails(c, l) != want || lambda_by_chain(c, l) != want)
                tally.fail("l=" + std::to_string(l) + " " + label(c));
        }
    });
    finish(r, t);
    return r;
}

SuiteReport suite_trail_counts(const VerifyConfig& cfg) {
    SuiteReport r;
    r.suite = "trail-counts";
    const int n = cfg.n;
    Tally tally;
    auto paths = enumerate_double_paths(n, {1, 1});
    auto tprime = trails_T_prime(n);
    auto darrays = enumerate_darrays(n, 1);
    std::set<DArray> from_trails, from_paths, arrays(darrays.begin(), darrays.end());
    for (const auto& t : tprime) from_trails.insert(trail_to_darray(t));
    for (const auto& p : paths) from_paths.insert(paths_to_darray(n, {p}));
    ++tally.cases;
    if (from_trails.size() != tprime.size() || from_trails != arrays) tally.fail("trails to arrays");
    ++tally.cases;
    if (from_paths.size() != paths.size() || from_paths != arrays) tally.fail("paths to arrays");
    nlohmann::json levels = nlohmann::json::array();
    for (int l = 1; 2 * l <= n; ++l) {
        auto dl = enumerate_darrays(n, l);
        auto tl = trails_T_l(n, l);
        auto pl = enumerate_nonintersecting(n, l);
        std::set<DArray> d(dl.begin(), dl.end()), td, pd;
        for (const auto& t : tl) td.insert(i0_trail_to_darray(t));
        for (const auto& p : pl) pd.insert(paths_to_darray(n, p));
        ++tally.cases;
        if (td.size() != tl.size() || td != d) tally.fail("l=" + std::to_string(l) + " trails");
        ++tally.cases;
        if (pd != d) tally.fail("l=" + std::to_string(l) + " paths");
        levels.push_back({{"l", l}, {"trails", tl.size()}, {"arrays", dl.size()}, {"path_tuples", pl.size()}});
    }
    finish(r, tally);
    r.details = {{"double_paths_at_theta", paths.size()},
                 {"trails", tprime.size()},
                 {"arrays", darrays.size()},
                 {"all_trails", trails_T(n).size()},
                 {"levels", levels}};
    return r;
}

SuiteReport suite_kr_iso(const VerifyConfig& cfg) {
    SuiteReport r;
    r.suite = "kr-iso";
    const int n = cfg.n, s = cfg.s;
    Tally tally;
    auto lus = lusztig_crystal(n, s);
    auto tab = tableau_crystal(n, s);
    const long long dim = weyl_dimension_spin_multiple(n, s);
    const long long polytope = static_cast<long long>(enumerate_BJs(n, s).size());
    ++tally.cases;
    if (static_cast<long long>(lus.vertices.size()) != dim || polytope != dim ||
        static_cast<long long>(tab.vertices.size()) != dim)
        tally.fail("cardinality");
    std::map<SkewTableau, int, bool (*)(const SkewTableau&, const SkewTableau&)> index(
        [](const SkewTableau& a, const SkewTableau& b) { return a.rows() < b.rows(); });
    for (int k = 0; k < static_cast<int>(tab.vertices.size()); ++k) index.emplace(tab.vertices[k], k);
    std::vector<int> vertex_map;
    for (const auto& c : lus.vertices) {
        auto it = index.find(kappa_nw(c));
        if (it == index.end()) {
            tally.fail("kappa image missing " + label(c));
            break;
        }
        vertex_map.push_back(it->second);
    }
    ++tally.cases;
    if (vertex_map.size() != lus.vertices.size() || !is_isomorphism(lus.graph, tab.graph, vertex_map))
        tally.fail("not an isomorphism");
    ++tally.cases;
    auto regular = check_regular(n, s);
    if (!regular.regular) tally.fail("regularity: " + regular.message);
    long long e0_capped = 0;
    for (const auto& c : lus.vertices)
        if (!e_affine(c, 0, s)) ++e0_capped;
    finish(r, tally);
    r.details = {{"vertices", lus.vertices.size()},
                 {"edges", lus.graph.edges.size()},
                 {"weyl_dimension", dim},
                 {"polytope_points", polytope},
                 {"e0_capped_vertices", e0_capped}};
    return r;
}

SuiteReport suite_embedding(const VerifyConfig& cfg) {
    SuiteReport r;
    r.suite = "embedding";
    Tally tally;
    for (int t : {cfg.s, cfg.s + 1, cfg.s + 2}) {
        ++tally.cases;
        if (!check_embedding(cfg.n, cfg.s, t)) tally.fail("s=" + std::to_string(cfg.s) + " t=" + std::to_string(t));
    }
    finish(r, tally);
    return r;
}

using SuiteFn = SuiteReport (*)(const VerifyConfig&);

const std::vector<std::pair<std::string, SuiteFn>>& registry() {
    static const std::vector<std::pair<std::string, SuiteFn>> suites = {
        {"operator-oracle", suite_operator_oracle},
        {"epsilon-star", suite_epsilon_star},
        {"tensor-split", suite_tensor_split},
        {"burge-equivariance", suite_burge_equivariance},
        {"burge-inverse", suite_burge_inverse},
        {"glue", suite_glue},
        {"shape-equality", suite_shape_equality},
        {"string-formula", suite_string_formula},
        {"trail-counts", suite_trail_counts},
        {"kr-iso", suite_kr_iso},
        {"embedding", suite_embedding},
    };
    return suites;
}

}  // namespace

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names = [] {
        std::vector<std::string> out;
        for (const auto& [name, fn] : registry()) out.push_back(name);
        return out;
    }();
    return names;
}

SuiteReport run_suite(const std::string& name, const VerifyConfig& cfg) {
    require_rank(cfg.n);
    if (cfg.bound < 0 || cfg.s < 0 || cfg.samples < 0) throw std::invalid_argument("bounds must be non-negative");
    const std::string key = name == "kr-isomorphism" ? "kr-iso" : name;
    for (const auto& [suite, fn] : registry())
        if (suite == key) return fn(cfg);
    throw std::invalid_argument("unknown suite: " + name);
}

nlohmann::json report_json(const SuiteReport& r) {
    return {{"suite", r.suite},
            {"pass", r.passed()},
            {"cases", r.cases},
            {"failures", r.failures},
            {"counterexamples", r.counterexamples},
            {"details", r.details}};
}

void parallel_for(long long count, int jobs, const std::function<void(long long, long long, int)>& body) {
    if (count <= 0) return;
    jobs = static_cast<int>(std::clamp<long long>(jobs, 1, count));
    if (jobs == 1) {
        body(0, count, 0);
        return;
    }
    const long long block = std::max<long long>(1, std::min<long long>(4096, count / (8LL * jobs)));
    std::atomic<long long> next{0};
    std::exception_ptr error;
    std::mutex error_mutex;
    std::vector<std::thread> pool;
    for (int w = 0; w < jobs; ++w)
        pool.emplace_back([&, w] {
            try {
                for (long long b; (b = next.fetch_add(block)) < count;) body(b, std::min(count, b + block), w);
            } catch (...) {
                std::lock_guard lock(error_mutex);
                if (!error) error = std::current_exception();
                next = count;
            }
        });
    for (auto& t : pool) t.join();
    if (error) std::rethrow_exception(error);
}

long long datum_box_size(int n, Support support, int bound) {
    long long size = 1;
    for (int k = 0; k < support_length(n, support); ++k) {
        if (size > std::numeric_limits<long long>::max() / (bound + 1)) return std::numeric_limits<long long>::max();
        size *= bound + 1;
    }
    return size;
}

LusztigDatum datum_at(int n, Support support, int bound, long long index) {
    require_rank(n);
    const int N = n * n - n, len = support_length(n, support);
    const int offset = support == Support::lower ? N / 2 : 0;
    std::vector<int> v(N, 0);
    for (int k = 0; k < len; ++k) {
        v[offset + k] = static_cast<int>(index % (bound + 1));
        index /= bound + 1;
    }
    return LusztigDatum(n, support, std::move(v));
}

LusztigDatum random_datum(int n, Support support, int bound, std::uint64_t seed, long long index) {
    require_rank(n);
    const int N = n * n - n, len = support_length(n, support);
    const int offset = support == Support::lower ? N / 2 : 0;
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(index), static_cast<std::uint32_t>(index >> 32)};
    std::mt19937_64 rng(seq);
    std::uniform_int_distribution<int> pick(0, bound);
    std::vector<int> v(N, 0);
    for (int k = 0; k < len; ++k) v[offset + k] = pick(rng);
    return LusztigDatum(n, support, std::move(v));
}

TransitionOracle::TransitionOracle(int n, std::size_t node_cap) : n_(n), i0_(reduced_word_i0(n)) {
    auto make = [&](const std::function<bool(const std::vector<int>&)>& accept) {
        auto moves = find_word_path(n, i0_, accept, node_cap);
        if (!moves) throw std::logic_error("no braid path to the requested word");
        Path p;
        p.forward = *moves;
        p.target = i0_;
        for (const auto& m : p.forward) p.target = apply_braid_move(n, p.target, m);
        p.backward.assign(p.forward.rbegin(), p.forward.rend());
        return p;
    };
    first_.resize(n + 1);
    for (int i = 1; i <= n; ++i) first_[i] = make([i](const std::vector<int>& w) { return w.front() == i; });
    const int last = star_letter(n, n);
    last_ = make([last](const std::vector<int>& w) { return w.back() == last; });
}

const TransitionOracle::Path& TransitionOracle::path(int i) const {
    if (i < 1 || i > n_) throw std::invalid_argument("index out of range");
    return first_[i];
}

LusztigDatum TransitionOracle::f(const LusztigDatum& c, int i) const {
    const auto& p = path(i);
    auto v = transition(n_, c.values(), i0_, p.forward);
    ++v.front();
    return LusztigDatum(n_, Support::full, transition(n_, v, p.target, p.backward));
}

std::optional<LusztigDatum> TransitionOracle::e(const LusztigDatum& c, int i) const {
    const auto& p = path(i);
    auto v = transition(n_, c.values(), i0_, p.forward);
    if (v.front() == 0) return std::nullopt;
    --v.front();
    return LusztigDatum(n_, Support::full, transition(n_, v, p.target, p.backward));
}

int TransitionOracle::epsilon(const LusztigDatum& c, int i) const {
    return transition(n_, c.values(), i0_, path(i).forward).front();
}

int TransitionOracle::epsilon_star_n(const LusztigDatum& c) const {
    return transition(n_, c.values(), i0_, last_.forward).back();
}

}  // namespace dcrystal
