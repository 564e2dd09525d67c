#pragma once

#include "hcc/hpda.hpp"
#include "hcc/types.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace hcc {

// N files split into F packets of packet_bytes pseudo-random bytes each.
struct Library {
    int N = 0;
    long long F = 0;
    int packet_bytes = 16;
    std::vector<uint8_t> data;  // N * F * packet_bytes

    const uint8_t* packet(int n, long long j) const {
        return data.data() + (static_cast<size_t>(n) * F + j) * packet_bytes;
    }
};
Library make_library(int N, long long F, int packet_bytes, uint64_t seed);

// One demand per user; user (k1, k2) (0-based) is index k1*K2 + k2; values in [0, N).
using Demand = std::vector<int>;

struct Message {
    long long s = 0;   // the integer this message serves
    int mirror = -1;   // -1: server broadcast; otherwise sending mirror (0-based)
    std::vector<uint8_t> payload;
};

struct Transcript {
    std::vector<Message> server;                     // one per integer in (∪ S_k1) \ S_m
    std::vector<std::vector<Message>> per_mirror;    // K1 lists
    Rat measured_R1() const;                          // |server| / F
    Rat measured_R2() const;                          // max_k1 |per_mirror[k1]| / F
    long long F = 0;
};

// Caches induced by the array: a mirror stores packet rows starred in its
// mirror-array column (all files); a user stores rows starred in its column.
struct Placement {
    std::vector<std::vector<long long>> mirror_rows;  // per mirror, sorted
    std::vector<std::vector<long long>> user_rows;    // per user (k1*K2+k2), sorted
};
Placement place(const Hpda& h);

// The XOR terms of the message serving integer s.  Kind selects which rule:
//   server:        all cells holding s across all subarrays;
//   mirror-shared: the server list minus terms whose packet row is cached by
//                  mirror k1 and sits in another subarray;
//   mirror-local:  cells of subarray k1 holding the local integer s.
struct Term {
    int file;        // demanded file index of the cell's user
    long long row;   // packet row
    int user;        // flat user index the cell belongs to
};
std::vector<Term> server_terms(const Hpda& h, const Demand& d, long long s);
std::vector<Term> mirror_terms(const Hpda& h, const Demand& d, int k1, long long s);

Transcript deliver(const Hpda& h, const Library& lib, const Demand& d);

struct DecodeFailure {
    int user = -1;
    long long packet_row = -1;
    std::string reason;
};
struct DecodeReport {
    bool ok = true;
    long long packets_checked = 0;
    std::vector<DecodeFailure> failures;
};
// Every user reconstructs each non-cached packet of its demanded file using
// only its cache and the transcript, then the result is compared bit-exactly
// against the library.  Failures identify the user and packet row.
DecodeReport decode_all(const Hpda& h, const Library& lib, const Placement& pl,
                        const Transcript& tr, const Demand& d);

struct SweepOptions {
    enum class Policy { Auto, Exhaustive, Sampled } policy = Policy::Auto;
    long long samples = 200;   // for sampled mode
    int N = 0;                 // 0: default N = K1*K2
    int packet_bytes = 16;
    uint64_t seed = 1;
    bool parallel = true;
};
struct SweepResult {
    long long demands_run = 0;
    long long failures = 0;
    Rat R1;      // measured on the first demand (demand-independent)
    Rat R2;
    std::vector<DecodeFailure> sample_failures;  // first few witnesses
    bool exhaustive = false;
};
// Auto policy: exhaustive when N^(K1*K2) <= 4096, otherwise seeded sampling.
SweepResult run_demand_sweep(const Hpda& h, const SweepOptions& opt);

}  // namespace hcc
