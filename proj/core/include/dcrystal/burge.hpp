#pragma once

#include <optional>
#include <vector>

#include "dcrystal/lusztig.hpp"
#include "dcrystal/tableau.hpp"

namespace dcrystal {

// Biletter (a, b) = (j-bar, i-bar) for the root eps_i + eps_j, so a < b.
struct Biletter {
    Letter a;
    Letter b;
    friend bool operator==(const Biletter&, const Biletter&) = default;
};

// omega: (a,b) < (c,d) iff a < c, or a = c and b > d.
// omega_prime: (a,b) < (c,d) iff b < d, or b = d and a > c.
enum class BiwordOrder { omega, omega_prime };

bool biword_less(BiwordOrder order, const Biletter& x, const Biletter& y);

struct Biword {
    BiwordOrder order = BiwordOrder::omega;
    std::vector<Biletter> pairs;
};

Biword datum_to_biword(const LusztigDatum& c, BiwordOrder order);
LusztigDatum biword_to_datum(int n, const Biword& w);

// kappa-SE: anti-normal tableau with even columns. `trace` receives P_r, ..., P_1.
SkewTableau kappa_se(const LusztigDatum& c, std::vector<SkewTableau>* trace = nullptr);
// kappa-NW: normal tableau with even columns. `trace` receives P_1, ..., P_r.
SkewTableau kappa_nw(const LusztigDatum& c, std::vector<SkewTableau>* trace = nullptr);

// Inverses; throw std::invalid_argument for tableaux outside the image.
LusztigDatum kappa_se_inverse(const SkewTableau& t, int n);
LusztigDatum kappa_nw_inverse(const SkewTableau& t, int n);

Partition lambda_of(const LusztigDatum& c);

// Pairs with first letter (i+1)-bar or i-bar inserted into kappa_se of the other pairs,
// then the two-row bands glued back together.
struct GlueResult {
    SkewTableau base;     // kappa_se of the remaining pairs
    SkewTableau P;        // base with the second letters inserted
    SkewTableau Q;        // recording tableau of the first letters
    SkewTableau glued;    // result after gluing the bands
};

// c must be supported on roots eps_a + eps_b with b <= i + 1; 1 <= i <= n - 1.
GlueResult glue_T(const LusztigDatum& c, int i);

}  // namespace dcrystal
