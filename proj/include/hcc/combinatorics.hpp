#pragma once

#include "hcc/types.hpp"

#include <algorithm>
#include <stdexcept>
#include <vector>

namespace hcc {

// Binomial coefficient as an exact big integer; 0 when k < 0 or k > n.
Int binom(long long n, long long k);

// Binomial coefficient in 64 bits; throws std::overflow_error if it does not fit.
long long binom_ll(long long n, long long k);

// All k-subsets of {1, ..., n} in lexicographic order (each subset sorted ascending).
std::vector<std::vector<int>> subsets_lex(int n, int k);

// All k-subsets of a sorted ground set, in lexicographic order.
std::vector<std::vector<int>> subsets_lex_of(const std::vector<int>& base, int k);

// 1-based lexicographic rank of a sorted k-subset among all k-subsets of {1,...,n}.
long long lex_rank(const std::vector<int>& subset, int n);

// a ⊆ b for sorted vectors.
bool is_subset(const std::vector<int>& a, const std::vector<int>& b);

// b \ a for sorted vectors (elements of b not in a).
std::vector<int> set_diff(const std::vector<int>& b, const std::vector<int>& a);

// Sorted union of two sorted vectors.
std::vector<int> set_union(const std::vector<int>& a, const std::vector<int>& b);

}  // namespace hcc
