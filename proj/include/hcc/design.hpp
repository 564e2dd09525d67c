#pragma once

#include "hcc/types.hpp"
#include "hcc/validation.hpp"

#include <string>
#include <vector>

namespace hcc {

// A t-(v, k, lambda) block design over points {1, ..., v}.
// Blocks are stored sorted internally but keep their insertion order,
// which fixes the column grouping of arrays built from the design.
struct Design {
    int v = 0;
    int k = 0;
    int t = 0;
    long long lambda = 0;
    std::vector<std::vector<int>> blocks;

    long long b() const { return static_cast<long long>(blocks.size()); }
};

// Checks: point ranges, block sizes, v >= k >= t >= 1, lambda >= 1, and that
// every t-subset of the point set lies in exactly lambda blocks
// (counted with multiplicity; repeated blocks are allowed).
Report validate_design(const Design& d);

// Number of blocks containing a fixed s-subset, s <= t:
// lambda_s = lambda * C(v-s, t-s) / C(k-s, t-s).  Throws if the division
// is not exact (cannot happen for a valid design).
long long lambda_s(const Design& d, int s);

// The complete design: all k-subsets of {1,...,n} as blocks of a
// k-(n, k, 1) design (blocks in lexicographic order).
Design trivial_design(int n, int k);

// Named catalog: "fano-7-3-1", "sqs-8-4-1", "trivial-<n>-<k>".
// Throws std::invalid_argument for unknown names.
Design builtin_design(const std::string& name);
bool is_builtin_design_name(const std::string& name);
std::vector<std::string> builtin_design_names();

// JSON round-trip: {"v":..,"k":..,"t":..,"lambda":..,"blocks":[[..],..]}
std::string design_to_json(const Design& d);
Design design_from_json(const std::string& text);
Design load_design(const std::string& name_or_path);  // catalog name or JSON file

}  // namespace hcc
