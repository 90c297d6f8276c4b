#pragma once

#include <vector>

namespace lrrc {

// Weakly decreasing positive parts; trailing zeros are implicit.
using Partition = std::vector<int>;

int total(const Partition& p);
bool is_partition(const std::vector<int>& v);

// Sort decreasing and drop zeros.
Partition normalized(std::vector<int> v);

// 1-based part access, zero past the end.
int part(const Partition& p, int i);

Partition transpose(const Partition& p);

// Q_n(p) = p^t_1 + ... + p^t_n = sum_i min(p_i, n).
int q_n(const Partition& p, int n);

// Number of parts equal to n.
int multiplicity(const Partition& p, int n);

// Size of the n-th column.
int column_size(const Partition& p, int n);

// Partitions of n in reverse lexicographic order, parts bounded by max_part
// when max_part >= 0.
std::vector<Partition> partitions_of(int n, int max_part = -1);

// Every partition fitting in a box with at most `rows` parts each <= cols.
std::vector<Partition> partitions_in_box(int rows, int cols);

// Dominance order; requires equal sizes.
bool dominates(const Partition& a, const Partition& b);

bool contains(const Partition& outer, const Partition& inner);

// Row index (1-based) of the corner cell in column c, or 0 if there is none.
int corner_row_in_column(const Partition& p, int c);

} // namespace lrrc
