#pragma once

#include "hcc/design.hpp"
#include "hcc/types.hpp"
#include "hcc/validation.hpp"

#include <optional>
#include <string>
#include <vector>

namespace hcc {

// Placement delivery array: F x K grid of cells, each either a star or a
// positive integer.  Stars are stored as 0.
struct Pda {
    long long K = 0;  // columns (users)
    long long F = 0;  // rows (packets)
    long long Z = 0;  // stars per column
    long long S = 0;  // number of distinct integers; integers lie in [1, S]

    std::vector<std::string> row_names;  // size F
    std::vector<std::string> col_names;  // size K
    // For design-built arrays: which block each column belongs to (index into
    // the design's block list), -1 for generic arrays.  Used to group columns
    // into subarrays when lifting to a two-layer array.
    std::vector<int> col_block;

    std::vector<long long> cells;  // F*K row-major; 0 = star

    long long at(long long j, long long k) const { return cells[j * K + k]; }
    long long& at(long long j, long long k) { return cells[j * K + k]; }
    bool is_star(long long j, long long k) const { return at(j, k) == 0; }
};

struct PdaParams {
    long long K = 0, F = 0, Z = 0, S = 0;
};

// Parameters of the design-based construction for subset sizes i <= j <= k:
//   K = b * C(k, j),  F = C(v, i),  Z = C(v, i) - C(j, i),
//   S = C(v, j-i) * lambda * C(v-j, t-j) / C(k-j, t-j).
// Throws if the S division is not exact.
PdaParams design_pda_params(const Design& d, int i, int j);

// Build the PDA from a validated design.  Rows are the i-subsets of the point
// set in lexicographic order; columns are (block A, j-subset Y of A) pairs,
// blocks in design order and Y lexicographic within each block.  Cell (X,(A,Y))
// is a star when X is not contained in Y, otherwise the integer
//   (alpha - 1) * C(v, j-i) + rank(Y \ X)
// where rank is the 1-based lexicographic rank among (j-i)-subsets of the
// point set and alpha counts occurrences of the set Y \ X in row X from left
// to right.  Throws if the realized integer count differs from the S formula.
Pda build_design_pda(const Design& d, int i, int j);

// Complete-design specialization: all k-subsets of {1..n} as blocks.
Pda complete_design_pda(int n, int k, int j, int i);

// The classic single-layer array: rows are t-subsets of {1..K_users}, columns
// are users, star when the user is in the row subset, otherwise the rank of
// row-subset ∪ {user} among (t+1)-subsets.
Pda man_pda(int K_users, int t);

// Transpose; requires every row to contain the same number of stars.
Pda transpose_pda(const Pda& p);

// Validation of the three defining conditions plus declared-parameter
// consistency.  `parallel` selects the OpenMP path; both paths produce the
// same report (serial path kept as reference).
Report validate_pda(const Pda& p, bool parallel = true);
Report validate_pda_serial(const Pda& p);

// g if every integer appears exactly g times, nullopt otherwise.
std::optional<long long> pda_regularity(const Pda& p);

struct SchemePoint {
    Rat m;  // per-user cache fraction Z/F
    Rat R;  // load S/F
};
SchemePoint pda_scheme_point(const Pda& p);

// Label-invariant equality: identical star pattern and identical partition of
// non-star cells into equal-integer classes.
bool value_partition_equal(const Pda& a, const Pda& b);

// Small fixed arrays used as second-layer seeds: "inner-5-5-1-10",
// "inner-5-5-2-7", "inner-5-5-3-4", "inner-5-5-4-1".
Pda builtin_pda(const std::string& name);
std::vector<std::string> builtin_pda_names();

// CSV: first row "row,<col name>,..."; cells are "*" or decimal integers.
std::string pda_to_csv(const Pda& p);
Pda pda_from_csv(const std::string& text);
// JSON mirror of the same content.
std::string pda_to_json(const Pda& p);
Pda pda_from_json(const std::string& text);

Pda load_pda(const std::string& name_or_path);  // builtin name, .csv or .json

}  // namespace hcc
