#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "dcrystal/lusztig.hpp"
#include "dcrystal/root_system.hpp"

namespace dcrystal {

struct VerifyConfig {
    int n = 4;
    int s = 1;
    int bound = 2;            // entries range over 0..bound
    long long samples = 0;    // 0 = exhaustive over the box, otherwise random data
    std::uint64_t seed = 1;
    int jobs = 1;
};

struct SuiteReport {
    std::string suite;
    long long cases = 0;
    long long failures = 0;
    std::vector<std::string> counterexamples;  // lexicographically smallest few
    nlohmann::json details = nlohmann::json::object();

    bool passed() const { return failures == 0; }
};

const std::vector<std::string>& suite_names();
// Throws std::invalid_argument for an unknown suite or an oversized exhaustive run.
SuiteReport run_suite(const std::string& name, const VerifyConfig& cfg);
nlohmann::json report_json(const SuiteReport& r);

// Splits [0, count) into blocks handed to `jobs` threads; body(begin, end, worker).
void parallel_for(long long count, int jobs, const std::function<void(long long, long long, int)>& body);

// Mixed-radix decoding of `index` into a datum with entries in 0..bound on the given support.
LusztigDatum datum_at(int n, Support support, int bound, long long index);
long long datum_box_size(int n, Support support, int bound);
// Deterministic in (seed, index).
LusztigDatum random_datum(int n, Support support, int bound, std::uint64_t seed, long long index);

// Crystal operators on B computed by moving to a word that starts with i and
// acting on the first coordinate; cached braid paths per index.
class TransitionOracle {
public:
    explicit TransitionOracle(int n, std::size_t node_cap = 5'000'000);

    LusztigDatum f(const LusztigDatum& c, int i) const;
    std::optional<LusztigDatum> e(const LusztigDatum& c, int i) const;
    int epsilon(const LusztigDatum& c, int i) const;
    // Last coordinate in a word ending in n* (n* = n-1 for odd n, else n).
    int epsilon_star_n(const LusztigDatum& c) const;

private:
    struct Path {
        std::vector<BraidMove> forward;
        std::vector<BraidMove> backward;
        std::vector<int> target;
    };
    const Path& path(int i) const;

    int n_;
    std::vector<int> i0_;
    std::vector<Path> first_;  // index i: word starting with i
    Path last_;
};

}  // namespace dcrystal
