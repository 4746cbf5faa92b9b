#pragma once

#include <optional>
#include <vector>

#include "dcrystal/lusztig.hpp"
#include "dcrystal/triangle.hpp"

namespace dcrystal {

// Element of a half-spin crystal: signs (+1/-1) in positions 1..n. Weight is half the sign vector.
class SpinElement {
public:
    SpinElement() = default;
    explicit SpinElement(std::vector<int> signs);

    static SpinElement highest(int n, bool even = true);
    static SpinElement lowest(int n, bool even = true);
    // (-)^k (+)^{n-k}
    static SpinElement leading_minus(int n, int k);

    int rank() const { return static_cast<int>(signs_.size()); }
    const std::vector<int>& signs() const { return signs_; }
    int minus_count() const;
    bool even() const { return minus_count() % 2 == 0; }

    friend auto operator<=>(const SpinElement&, const SpinElement&) = default;

private:
    std::vector<int> signs_;
};

std::optional<SpinElement> spin_f(const SpinElement& b, int i);
std::optional<SpinElement> spin_e(const SpinElement& b, int i);
std::vector<SpinElement> spin_crystal(int n, bool even = true);
// Weyl group action on a spin weight (half-integral sign vector).
SpinElement spin_reflect(const SpinElement& b, int i);

int star_letter(int n, int i);
// j_0 = (i_0)^{*op}
std::vector<int> word_j0(int n);

// Trail: 0/1 steps d_1..d_N along a word; vertices are spin elements.
struct Trail {
    std::vector<int> word;
    std::vector<int> steps;
    friend bool operator==(const Trail&, const Trail&) = default;
};

std::vector<SpinElement> trail_vertices(const Trail& t, const SpinElement& start);
std::vector<Trail> enumerate_trails(const std::vector<int>& word, const SpinElement& start, const SpinElement& end);

// Trails along j_0 from s_n(varpi_n) to w_0(varpi_n).
std::vector<Trail> trails_T(int n);
// Those whose first M steps go from (+..+--) to (--+..+).
std::vector<Trail> trails_T_prime(int n);

// ||c||_pi = sum_{k<=M} (1 - d_{N-k+1}) c_k
int trail_norm(const LusztigDatum& c, const Trail& t);
int trail_max(const LusztigDatum& c);

// 0/1 array on the cells of the triangle, indexed by cell_position.
using DArray = std::vector<int>;

// For a j_0-trail: d_k (k in M+1..N) placed at the cell of beta_{N-k+1}.
DArray trail_to_darray(const Trail& t);
// For an i_0-trail: d_k (k in 1..M) placed at the cell of beta_k.
DArray i0_trail_to_darray(const Trail& t);
// 0 on cells covered by the paths, 1 elsewhere.
DArray paths_to_darray(int n, const std::vector<DoublePath>& paths);
// Letters j_k written at the cell of beta_{N-k+1}.
std::vector<int> j_array(int n);

enum class BottomRowOrder { right_to_left, left_to_right };

// Arrays satisfying the four conditions for a given l (rows 1..2l vanish).
std::vector<DArray> enumerate_darrays(int n, int l, BottomRowOrder order = BottomRowOrder::right_to_left);
bool is_darray(int n, int l, const DArray& d, BottomRowOrder order = BottomRowOrder::right_to_left);

// Trail-formula evaluation of the k-th string entry (1-based) of b_{lusztig_word}(c)
// taken along string_word. The k-th letter of string_word must be n.
int bz_string_entry(const std::vector<int>& lusztig_word, const std::vector<int>& coords,
                    const std::vector<int>& string_word, int k);

// epsilon_n^*(c) through the trail formula (first string entry along i_0 of c^*).
int epsilon_star_n_bz(const LusztigDatum& c);

// Positions (1-based) in j_0 of the letter n; k_l is the l-th one.
std::vector<int> j0_n_positions(int n);
// epsilon_{j_{k_l}} after applying e^max along j_1..j_{k_l - 1}.
int lambda_by_chain(const LusztigDatum& c, int l);
// i_0-trails from (-)^{2l}(+)^{n-2l} to the lowest weight.
std::vector<Trail> trails_T_l(int n, int l);
// Minimum of sum d_k cost_k over trails along `word` from `start` to `end`; nullopt if none.
std::optional<long long> min_trail_cost(const std::vector<int>& word, const std::vector<int>& cost,
                                        const SpinElement& start, const SpinElement& end);
// Difference of trail minima from (-)^{2l-2}(+)... and (-)^{2l}(+)... along i_0.
int lambda_by_trails(const LusztigDatum& c, int l);

}  // namespace dcrystal
