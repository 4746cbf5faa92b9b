#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace dcrystal {

// The letter k-bar. Letters are ordered n-bar < ... < 2-bar < 1-bar, so a larger
// index compares smaller.
struct Letter {
    int index = 0;

    friend bool operator==(Letter a, Letter b) { return a.index == b.index; }
    friend bool operator<(Letter a, Letter b) { return a.index > b.index; }
    friend bool operator>(Letter a, Letter b) { return b < a; }
    friend bool operator<=(Letter a, Letter b) { return !(b < a); }
    friend bool operator>=(Letter a, Letter b) { return !(a < b); }
};

// Reverse the alphabet of {1..n}-bar: k-bar -> (n+1-k)-bar.
inline Letter complement(Letter x, int n) { return Letter{n + 1 - x.index}; }

using Word = std::vector<Letter>;
using Partition = std::vector<int>;

Partition conjugate(const Partition& p);

struct Cell {
    int row = 0;
    int col = 0;
    friend auto operator<=>(const Cell&, const Cell&) = default;
};

// Skew tableau: row r occupies columns inner[r] .. inner[r] + rows[r].size() - 1.
// Row 0 is the top row.
class SkewTableau {
public:
    SkewTableau() = default;
    SkewTableau(std::vector<int> inner, std::vector<std::vector<Letter>> rows);

    static SkewTableau normal(std::vector<std::vector<Letter>> rows);
    // Rows listed top to bottom, right-aligned.
    static SkewTableau anti_normal(std::vector<std::vector<Letter>> rows);

    int height() const { return static_cast<int>(rows_.size()); }
    int width() const;
    int size() const;
    bool empty() const { return size() == 0; }

    const std::vector<int>& inner() const { return inner_; }
    const std::vector<std::vector<Letter>>& rows() const { return rows_; }
    std::vector<int> outer() const;
    std::optional<Letter> at(Cell c) const;

    bool is_skew_shape() const;
    bool is_normal() const;
    bool is_anti_normal() const;
    bool is_semistandard() const;

    // Normal shape lambda, or for an anti-normal tableau the lambda with shape lambda^pi.
    Partition shape() const;
    // Column entries top to bottom, columns left to right.
    std::vector<std::vector<Letter>> columns() const;
    int column_count() const { return width(); }

    // Rows top to bottom, each read right to left.
    Word row_word() const;
    std::vector<Cell> reading_cells() const;
    SkewTableau with_word(const Word& w) const;

    friend bool operator==(const SkewTableau& a, const SkewTableau& b);

private:
    void canonicalize();

    std::vector<int> inner_;
    std::vector<std::vector<Letter>> rows_;
};

SkewTableau from_bottom_aligned_columns(const std::vector<std::vector<Letter>>& cols);
SkewTableau from_top_aligned_columns(const std::vector<std::vector<Letter>>& cols);

// Rotate by 180 degrees inside the bounding box and reverse the alphabet of {1..n}-bar.
SkewTableau rotate_complement(const SkewTableau& t, int n);

// Column insertion a -> U into a normal tableau; returns the new cell.
std::pair<SkewTableau, Cell> column_insert(const SkewTableau& u, Letter a);
// Inverse of column insertion from the corner ending row `row`.
std::pair<SkewTableau, Letter> column_uninsert(const SkewTableau& u, int row);
// Reverse insertion V <- b into an anti-normal tableau over {1..n}-bar.
std::pair<SkewTableau, Cell> reverse_insert(const SkewTableau& v, Letter b, int n);

// P(w) = w_r -> (... (w_2 -> w_1)).
SkewTableau insertion_tableau(const Word& w);
// ((w_r <- w_{r-1}) <- ... <- w_1).
SkewTableau anti_insertion_tableau(const Word& w, int n);
bool knuth_equivalent(const Word& a, const Word& b);

enum class CornerChoice { topmost, bottommost };
SkewTableau rectify(const SkewTableau& t, CornerChoice choice = CornerChoice::topmost);
SkewTableau rectify(const SkewTableau& t, std::uint64_t seed);
SkewTableau anti_rectify(const SkewTableau& t, int n);

// Crystal operators of type A_{n-1} on words and tableaux, 1 <= i <= n-1.
std::optional<Word> word_f(const Word& w, int i);
std::optional<Word> word_e(const Word& w, int i);
int word_epsilon(const Word& w, int i);
int word_phi(const Word& w, int i);
std::optional<SkewTableau> tableau_f(const SkewTableau& t, int i);
std::optional<SkewTableau> tableau_e(const SkewTableau& t, int i);

// Domino operators: f_n / e_n on anti-normal tableaux with even columns,
// f_0 / e_0 on normal tableaux with even columns.
std::optional<SkewTableau> f_n_se(const SkewTableau& t, int n);
std::optional<SkewTableau> e_n_se(const SkewTableau& t, int n);
std::optional<SkewTableau> f_0_nw(const SkewTableau& t);
std::optional<SkewTableau> e_0_nw(const SkewTableau& t);

bool has_even_columns(const SkewTableau& t);

std::string letter_text(Letter x);
std::string to_text(const SkewTableau& t);

}  // namespace dcrystal
