#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "dcrystal/root_system.hpp"

namespace dcrystal {

// Which part of Phi^+ a datum may be supported on.
// upper: roots eps_i + eps_j (the first M positions of i_0); lower: roots eps_i - eps_j.
enum class Support { full, upper, lower };

// Lusztig datum with respect to i_0: one non-negative multiplicity per positive root.
class LusztigDatum {
public:
    LusztigDatum() = default;
    LusztigDatum(int n, Support support);
    LusztigDatum(int n, Support support, std::vector<int> values);

    static LusztigDatum unit(int n, const Root& r, Support support = Support::full);

    int rank() const { return n_; }
    Support support() const { return support_; }
    const std::vector<int>& values() const { return values_; }

    int operator[](int pos) const { return values_[pos]; }
    int at(const Root& r) const;
    void set(const Root& r, int value);
    void add(int pos, int delta);

    bool is_zero() const;
    int total() const;
    // Relabel the support flag after checking the values fit.
    LusztigDatum as(Support support) const;

    friend bool operator==(const LusztigDatum& a, const LusztigDatum& b) {
        return a.n_ == b.n_ && a.values_ == b.values_;
    }

private:
    void check() const;

    int n_ = 0;
    Support support_ = Support::full;
    std::vector<int> values_;
};

struct LusztigDatumHash {
    std::size_t operator()(const LusztigDatum& c) const;
};

bool fits_support(int n, const std::vector<int>& values, Support support);

// Weight -sum c_beta beta in eps coordinates.
std::vector<int> weight(const LusztigDatum& c);
// <lambda, h_i> for i in 0..n, lambda in eps coordinates (h_0 pairs with alpha_0 = -eps_1 - eps_2).
int pairing(const std::vector<int>& lambda, int i);

// One run of equal signs; a run sits at position `pos` and, when acted on,
// moves one unit to `partner` (or drops it when partner < 0).
struct SignatureRun {
    int sign = +1;
    int count = 0;
    int pos = -1;
    int partner = -1;
};

class Signature {
public:
    Signature() = default;
    explicit Signature(std::vector<SignatureRun> runs) : runs_(std::move(runs)) {}

    const std::vector<SignatureRun>& runs() const { return runs_; }

    // Cancels (+,-) pairs until the sequence reads -...-+...+.
    Signature reduced() const;
    int minus_count() const;
    int plus_count() const;
    // Reduced signature only: the run holding the leftmost + / rightmost -.
    std::optional<SignatureRun> leftmost_plus() const;
    std::optional<SignatureRun> rightmost_minus() const;

private:
    std::vector<SignatureRun> runs_;
};

// sigma_i(c) for 1 <= i <= n-1; the lower block is omitted for upper-supported data.
Signature sigma(const LusztigDatum& c, int i);

// Crystal operators on B = B_{i_0}; i in 1..n.
LusztigDatum f_full(const LusztigDatum& c, int i);
std::optional<LusztigDatum> e_full(const LusztigDatum& c, int i);
int epsilon_full(const LusztigDatum& c, int i);
int phi_full(const LusztigDatum& c, int i);

// Operators on B^J for i in 1..n-1; result stays upper or is absent.
std::optional<LusztigDatum> f_J(const LusztigDatum& c, int i);
std::optional<LusztigDatum> e_J(const LusztigDatum& c, int i);
int epsilon_J(const LusztigDatum& c, int i);
int phi_J(const LusztigDatum& c, int i);

std::pair<LusztigDatum, LusztigDatum> split(const LusztigDatum& c);
LusztigDatum combine(const LusztigDatum& upper, const LusztigDatum& lower);

// Tensor-product rule applied to upper (x) lower, with each factor regarded in B.
LusztigDatum tensor_f(const LusztigDatum& upper, const LusztigDatum& lower, int i);
std::optional<LusztigDatum> tensor_e(const LusztigDatum& upper, const LusztigDatum& lower, int i);
int tensor_epsilon(const LusztigDatum& upper, const LusztigDatum& lower, int i);

// Support only on eps_{n-1}+eps_n, eps_{n-3}+eps_{n-2}, ... with weakly decreasing values.
bool is_l_highest(const LusztigDatum& c);

}  // namespace dcrystal
