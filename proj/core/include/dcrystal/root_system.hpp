#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace dcrystal {

// Positive root eps_i + eps_j (sum) or eps_i - eps_j (diff), 1 <= i < j <= n.
enum class RootKind : std::uint8_t { sum, diff };

struct Root {
    RootKind kind = RootKind::sum;
    int i = 0;
    int j = 0;

    friend auto operator<=>(const Root&, const Root&) = default;

    std::vector<int> coordinates(int n) const;
    // "+i,j" for eps_i + eps_j, "-i,j" for eps_i - eps_j
    std::string to_string() const;
    static Root parse(std::string_view text);
};

Root simple_root(int n, int i);

// Type D_n data for a fixed n >= 4 together with the convex order of i_0.
class RootSystem {
public:
    explicit RootSystem(int n);

    int rank() const { return n_; }
    int size() const { return static_cast<int>(roots_.size()); }
    int half() const { return size() / 2; }

    // Positive roots listed in the convex order of i_0; index = position.
    const std::vector<Root>& roots() const { return roots_; }
    const Root& root(int pos) const { return roots_.at(pos); }
    int position(const Root& r) const;
    std::optional<int> find(const Root& r) const;

    const std::vector<int>& word() const { return word_; }

private:
    int n_;
    std::vector<Root> roots_;
    std::vector<int> word_;
    std::vector<int> index_;
};

// Cached immutable instance; throws std::invalid_argument for n < 4.
const RootSystem& root_system(int n);

void require_rank(int n);
bool adjacent(int n, int a, int b);

// Letters of the distinguished reduced word i_0 = i^J . i_J and its halves.
std::vector<int> reduced_word_i0(int n);
std::vector<int> reduced_word_upper(int n);
std::vector<int> reduced_word_lower(int n);

// Convex order beta_1..beta_N of a reduced word; throws std::domain_error if not reduced.
std::vector<Root> word_to_roots(int n, const std::vector<int>& word);

// Signed permutation acting on eps coordinates: image[k] = +-(m+1) means eps_{k+1} -> +-eps_{m+1}.
class SignedPermutation {
public:
    explicit SignedPermutation(int n);
    static SignedPermutation reflection(int n, int i);

    int rank() const { return static_cast<int>(image_.size()); }
    // this * s_i
    void multiply_reflection(int i);
    std::vector<int> apply(const std::vector<int>& v) const;

    friend bool operator==(const SignedPermutation&, const SignedPermutation&) = default;

private:
    std::vector<int> image_;
};

struct BraidMove {
    int position = 0;  // 0-based index of the first letter
    int arity = 2;     // 2 for commutation, 3 for the braid relation
    friend bool operator==(const BraidMove&, const BraidMove&) = default;
};

bool braid_move_applies(int n, const std::vector<int>& word, const BraidMove& move);
std::vector<int> apply_braid_move(int n, std::vector<int> word, const BraidMove& move);

// Lusztig coordinates relative to a word under a single braid move.
std::vector<int> apply_transition(std::vector<int> coords, const BraidMove& move);

// Transition of coordinates along a sequence of moves starting from `word`.
std::vector<int> transition(int n, std::vector<int> coords, std::vector<int> word,
                            const std::vector<BraidMove>& moves);

class SearchBudgetExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Shortest braid-move path from `start` to a reduced word satisfying `accept`.
// Returns std::nullopt if no reachable word is accepted.
std::optional<std::vector<BraidMove>> find_word_path(
    int n, const std::vector<int>& start, const std::function<bool(const std::vector<int>&)>& accept,
    std::size_t node_cap = 5'000'000);

}  // namespace dcrystal
