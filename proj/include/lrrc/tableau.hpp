#pragma once

#include <compare>
#include <vector>

#include "lrrc/partition.hpp"

namespace lrrc {

using Word = std::vector<int>;

// Straight-shape tableau, rows top to bottom (English convention).
struct Tableau {
    std::vector<std::vector<int>> rows;

    Partition shape() const;
    int size() const;
    bool empty() const { return rows.empty(); }

    auto operator<=>(const Tableau&) const = default;
};

// Skew tableau: row i holds its entries in columns inner[i]+1, inner[i]+2, ...
struct SkewTableau {
    Partition inner;
    std::vector<std::vector<int>> rows;

    auto operator<=>(const SkewTableau&) const = default;
};

// 1-based cell coordinates.
struct Cell {
    int row = 0;
    int col = 0;
    auto operator<=>(const Cell&) const = default;
};

bool is_standard(const Tableau& t);
bool is_column_strict(const Tableau& t);

// Row reading word: bottom row first, each row left to right.
Word reading_word(const Tableau& t);
Word reading_word(const SkewTableau& t);

// Schensted P-tableau by row insertion.
Tableau schensted_p(const Word& w);
Tableau schensted_p(const SkewTableau& t);

// Erase letters outside [a, b].
SkewTableau restrict(const Tableau& t, int a, int b);

// Straight tableau obtained from a skew tableau with empty inner shape.
Tableau as_straight(const SkewTableau& t);

Tableau standardize(const Tableau& t);
Tableau transpose(const Tableau& t);

// Add `delta` to every entry.
Tableau shifted(const Tableau& t, int delta);
Word shifted(const Word& w, int delta);

// positions[x] is the cell holding letter x of a standard tableau; index 0 unused.
std::vector<Cell> positions(const Tableau& s);
Cell cell_of(const Tableau& t, int letter);

// Add a letter at the end of row `row` (1-based; row = rows+1 opens a new row).
Tableau with_cell(const Tableau& t, int row, int letter);

Tableau minus(const Tableau& s);
Tableau d_map(const Tableau& s);
Tableau evacuate(const Tableau& s);

// i is an ascent when i+1 sits in a strictly later column.
int ascents(const Tableau& s);
bool is_descent(const Tableau& s, int i);
int ls_charge(const Tableau& s);
int ls_charge_recursive(const Tableau& s);

// Charge of a word whose content is a partition, via standard subwords.
int word_charge(const Word& w);

// Lascoux-Schutzenberger automorphism of conjugation exchanging the
// multiplicities of the letters p and p+1 in a column-strict tableau.
Tableau ls_reflection(const Tableau& t, int p);
// Remove the rightmost occurrence of `letter`; it must sit at a corner.
Tableau remove_rightmost(const Tableau& t, int letter);

std::vector<Tableau> standard_tableaux(const Partition& shape);
std::vector<Tableau> column_strict_tableaux(const Partition& shape, const std::vector<int>& content);
std::vector<Word> permutations(int n);

} // namespace lrrc
