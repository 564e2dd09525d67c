#pragma once

#include "hcc/design.hpp"
#include "hcc/pda.hpp"
#include "hcc/types.hpp"
#include "hcc/validation.hpp"

#include <set>
#include <string>
#include <vector>

namespace hcc {

// Two-layer placement delivery array for a network of K1 mirrors with K2
// attached users each.  The mirror array is F x K1 over {star, null}; each
// user subarray is an F x K2 grid of stars (0) and positive integers.
// Integers in [1, S] are "server" integers shared across subarrays; integers
// above S are local to a single subarray and belong to S_m.
struct Hpda {
    long long K1 = 0, K2 = 0, F = 0;
    long long Z1 = 0;  // stars per mirror-array column
    long long Z2 = 0;  // stars per user-subarray column
    long long S = 0;   // upper bound of the shared-integer range [1, S]

    std::vector<uint8_t> mirror;                 // F*K1 row-major; 1 = star, 0 = null
    std::vector<std::vector<long long>> users;   // K1 grids, each F*K2 row-major; 0 = star

    std::vector<long long> S_m;  // sorted integers served by mirrors, not the server

    bool mirror_star(long long j, long long k1) const { return mirror[j * K1 + k1] != 0; }
    long long user_at(long long k1, long long j, long long k2) const {
        return users[k1][j * K2 + k2];
    }

    // Distinct integers appearing in subarray k1 (0-based).
    std::set<long long> subarray_integers(long long k1) const;
    // Distinct integers over all subarrays.
    std::set<long long> all_integers() const;
};

// Lift of the design-built PDA: columns grouped by block into K1 = b
// subarrays of K2 = C(k, j) columns; mirror column k1 has a star in row X
// exactly when X is not contained in block k1 (the rows where the whole
// subarray row is stars); those all-star rows are refilled with fresh
// integers S + (k1)*Z1*K2 + 1 ... assigned row-major (star rows top to
// bottom, columns left to right).  S_m = [S+1, S+K1*Z1*K2].
Hpda build_design_hpda(const Design& d, int i, int j);

// Variant trading mirror memory for user memory: the Z1 all-star rows of each
// subarray are replaced by a copy of `inner` (an F'=Z1 row, K2 column PDA),
// with inner integer s mapped to S + k1*S_inner + s in subarray k1.
Hpda build_design_hpda_with_inner(const Design& d, int i, int j, const Pda& inner);

// Defining conditions B1 (mirror column stars = Z1), B2 (each subarray is a
// valid PDA with Z2 stars per column), B3 (each integer of S_m occurs in
// exactly one subarray and only in rows starred for that mirror), B4 (cross-
// subarray occurrences of a shared integer see stars in the mirror array).
Report validate_hpda(const Hpda& h, bool parallel = true);
Report validate_hpda_serial(const Hpda& h);

struct HpdaPoint {
    Rat m1, m2;  // mirror / user cache fractions
    Rat R1, R2;  // first / second hop loads
};
// m1 = Z1/F, m2 = Z2/F, R1 = |union S_k1 \ S_m| / F, R2 = max_k1 |S_k1| / F.
HpdaPoint hpda_scheme_point(const Hpda& h);

// Closed-form upper bound on R2 for the design lift:
//   (C(k, j-i) * lambda * C(v-j, t-j) / C(k-j, t-j) + Z1 * K2) / F.
Rat design_hpda_r2_bound(const Design& d, int i, int j);
// Same bound with the inner array's S' replacing the Z1*K2 term.
Rat design_hpda_r2_bound_with_inner(const Design& d, int i, int j, const Pda& inner);

// The worked 6-packet fixture with three mirrors of two users each.
Hpda example_hpda_6x3x2();

// JSON: {"K1","K2","F","Z1","Z2","S","mirror":[["*"|"-"],..],
//        "users":[[["*"|int],..],..],"S_m":[..]}
std::string hpda_to_json(const Hpda& h);
Hpda hpda_from_json(const std::string& text);
Hpda load_hpda(const std::string& name_or_path);  // "example-6x3x2" or .json path

}  // namespace hcc
