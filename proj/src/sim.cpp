#include "hcc/sim.hpp"

#include <algorithm>
#include <cstring>
#include <map>
#include <random>
#include <stdexcept>

namespace hcc {

Library make_library(int N, long long F, int packet_bytes, uint64_t seed) {
    Library lib;
    lib.N = N;
    lib.F = F;
    lib.packet_bytes = packet_bytes;
    lib.data.resize(static_cast<size_t>(N) * F * packet_bytes);
    std::mt19937_64 rng(seed);
    size_t i = 0;
    while (i + 8 <= lib.data.size()) {
        uint64_t w = rng();
        std::memcpy(lib.data.data() + i, &w, 8);
        i += 8;
    }
    for (; i < lib.data.size(); ++i) lib.data[i] = static_cast<uint8_t>(rng());
    return lib;
}

Rat Transcript::measured_R1() const {
    return make_rat(static_cast<long long>(server.size()), F);
}

Rat Transcript::measured_R2() const {
    long long mx = 0;
    for (const auto& m : per_mirror) mx = std::max(mx, static_cast<long long>(m.size()));
    return make_rat(mx, F);
}

Placement place(const Hpda& h) {
    Placement pl;
    pl.mirror_rows.resize(h.K1);
    pl.user_rows.resize(h.K1 * h.K2);
    for (long long k1 = 0; k1 < h.K1; ++k1)
        for (long long r = 0; r < h.F; ++r)
            if (h.mirror_star(r, k1)) pl.mirror_rows[k1].push_back(r);
    for (long long k1 = 0; k1 < h.K1; ++k1)
        for (long long c = 0; c < h.K2; ++c)
            for (long long r = 0; r < h.F; ++r)
                if (h.user_at(k1, r, c) == 0)
                    pl.user_rows[k1 * h.K2 + c].push_back(r);
    return pl;
}

std::vector<Term> server_terms(const Hpda& h, const Demand& d, long long s) {
    std::vector<Term> out;
    for (long long k1 = 0; k1 < h.K1; ++k1)
        for (long long r = 0; r < h.F; ++r)
            for (long long c = 0; c < h.K2; ++c)
                if (h.user_at(k1, r, c) == s) {
                    int user = static_cast<int>(k1 * h.K2 + c);
                    out.push_back({d[user], r, user});
                }
    return out;
}

std::vector<Term> mirror_terms(const Hpda& h, const Demand& d, int k1, long long s) {
    bool local = std::binary_search(h.S_m.begin(), h.S_m.end(), s);
    std::vector<Term> out;
    for (long long k = 0; k < h.K1; ++k) {
        if (local && k != k1) continue;
        for (long long r = 0; r < h.F; ++r)
            for (long long c = 0; c < h.K2; ++c)
                if (h.user_at(k, r, c) == s) {
                    // For a shared integer, the mirror strips terms it caches
                    // that belong to other subarrays.
                    if (!local && k != k1 && h.mirror_star(r, k1)) continue;
                    int user = static_cast<int>(k * h.K2 + c);
                    out.push_back({d[user], r, user});
                }
    }
    return out;
}

namespace {

void xor_into(std::vector<uint8_t>& acc, const uint8_t* src, int n) {
    for (int i = 0; i < n; ++i) acc[i] ^= src[i];
}

// One integer cell: which subarray/row/user it sits in.  The demanded file is
// resolved per demand vector.
struct Site {
    int k1;
    long long row;
    int user;
};
// Every integer's cell sites, computed once per array and reused across the
// demand sweep.
using SiteIndex = std::map<long long, std::vector<Site>>;

SiteIndex build_site_index(const Hpda& h) {
    SiteIndex idx;
    for (long long k1 = 0; k1 < h.K1; ++k1)
        for (long long r = 0; r < h.F; ++r)
            for (long long c = 0; c < h.K2; ++c) {
                long long s = h.user_at(k1, r, c);
                if (s != 0)
                    idx[s].push_back({static_cast<int>(k1), r,
                                      static_cast<int>(k1 * h.K2 + c)});
            }
    return idx;
}

// Terms of the message mirror k1 sends for integer s (shared: the server list
// minus packets this mirror caches from other subarrays; local: own cells).
template <typename Fn>
void for_each_mirror_term(const Hpda& h, const SiteIndex& idx, bool local, int k1,
                          long long s, Fn&& fn) {
    auto it = idx.find(s);
    if (it == idx.end()) return;
    for (const Site& site : it->second) {
        if (site.k1 != k1) {
            if (local) continue;
            if (h.mirror_star(site.row, k1)) continue;
        }
        fn(site);
    }
}

Transcript deliver_core(const Hpda& h, const Library& lib, const Demand& d,
                        const SiteIndex& idx, const std::set<long long>& sm) {
    Transcript tr;
    tr.F = h.F;
    for (const auto& [s, sites] : idx) {
        if (sm.count(s)) continue;
        Message m;
        m.s = s;
        m.mirror = -1;
        m.payload.assign(lib.packet_bytes, 0);
        for (const Site& site : sites)
            xor_into(m.payload, lib.packet(d[site.user], site.row), lib.packet_bytes);
        tr.server.push_back(std::move(m));
    }
    tr.per_mirror.resize(h.K1);
    for (long long k1 = 0; k1 < h.K1; ++k1) {
        for (long long s : h.subarray_integers(k1)) {
            Message m;
            m.s = s;
            m.mirror = static_cast<int>(k1);
            m.payload.assign(lib.packet_bytes, 0);
            for_each_mirror_term(h, idx, sm.count(s) != 0, static_cast<int>(k1), s,
                                 [&](const Site& site) {
                                     xor_into(m.payload, lib.packet(d[site.user], site.row),
                                              lib.packet_bytes);
                                 });
            tr.per_mirror[k1].push_back(std::move(m));
        }
    }
    return tr;
}

DecodeReport decode_core(const Hpda& h, const Library& lib, const Placement& pl,
                         const Transcript& tr, const Demand& d, const SiteIndex& idx,
                         const std::set<long long>& sm) {
    DecodeReport rep;
    // Index the mirror messages for lookup.
    std::vector<std::map<long long, const Message*>> msgs(h.K1);
    for (long long k1 = 0; k1 < h.K1; ++k1)
        for (const auto& m : tr.per_mirror[k1]) msgs[k1][m.s] = &m;

    std::vector<uint8_t> buf(lib.packet_bytes);
    for (long long k1 = 0; k1 < h.K1; ++k1)
        for (long long c = 0; c < h.K2; ++c) {
            int user = static_cast<int>(k1 * h.K2 + c);
            const auto& cache = pl.user_rows[user];
            int want = d[user];
            for (long long r = 0; r < h.F; ++r) {
                long long s = h.user_at(k1, r, c);
                if (s == 0) continue;  // cached packet
                ++rep.packets_checked;
                auto it = msgs[k1].find(s);
                if (it == msgs[k1].end()) {
                    rep.failures.push_back({user, r, "no message from mirror for integer " +
                                                        std::to_string(s)});
                    continue;
                }
                buf = it->second->payload;
                bool usable = true;
                int own_seen = 0;
                for_each_mirror_term(
                    h, idx, sm.count(s) != 0, static_cast<int>(k1), s,
                    [&](const Site& site) {
                        if (!usable) return;
                        if (site.user == user && site.row == r) {
                            ++own_seen;
                            return;
                        }
                        if (!std::binary_search(cache.begin(), cache.end(), site.row)) {
                            rep.failures.push_back(
                                {user, r,
                                 "interfering packet (file " + std::to_string(d[site.user]) +
                                     ", row " + std::to_string(site.row + 1) +
                                     ") is not in the user cache"});
                            usable = false;
                            return;
                        }
                        xor_into(buf, lib.packet(d[site.user], site.row), lib.packet_bytes);
                    });
                if (!usable) continue;
                if (own_seen != 1) {
                    rep.failures.push_back({user, r, "message does not contain the demanded "
                                                     "packet exactly once"});
                    continue;
                }
                if (std::memcmp(buf.data(), lib.packet(want, r), lib.packet_bytes) != 0)
                    rep.failures.push_back({user, r, "reconstructed packet differs from the "
                                                     "library"});
            }
        }
    rep.ok = rep.failures.empty();
    return rep;
}

}  // namespace

Transcript deliver(const Hpda& h, const Library& lib, const Demand& d) {
    if (static_cast<long long>(d.size()) != h.K1 * h.K2)
        throw std::invalid_argument("demand vector must have K1*K2 entries");
    for (int f : d)
        if (f < 0 || f >= lib.N) throw std::invalid_argument("demand out of range");
    std::set<long long> sm(h.S_m.begin(), h.S_m.end());
    return deliver_core(h, lib, d, build_site_index(h), sm);
}

DecodeReport decode_all(const Hpda& h, const Library& lib, const Placement& pl,
                        const Transcript& tr, const Demand& d) {
    std::set<long long> sm(h.S_m.begin(), h.S_m.end());
    return decode_core(h, lib, pl, tr, d, build_site_index(h), sm);
}

SweepResult run_demand_sweep(const Hpda& h, const SweepOptions& opt) {
    SweepResult res;
    const int users = static_cast<int>(h.K1 * h.K2);
    const int N = opt.N > 0 ? opt.N : users;
    Library lib = make_library(N, h.F, opt.packet_bytes, opt.seed);
    Placement pl = place(h);

    // Decide exhaustive vs sampled.
    Int total = 1;
    bool overflow = false;
    for (int u = 0; u < users && !overflow; ++u) {
        total *= N;
        if (total > Int(100000000)) overflow = true;
    }
    bool exhaustive;
    switch (opt.policy) {
        case SweepOptions::Policy::Exhaustive:
            if (overflow) throw std::invalid_argument("exhaustive sweep too large");
            exhaustive = true;
            break;
        case SweepOptions::Policy::Sampled:
            exhaustive = false;
            break;
        default:
            exhaustive = !overflow && total <= Int(4096);
    }

    std::vector<Demand> demands;
    if (exhaustive) {
        long long count = static_cast<long long>(total);
        demands.reserve(count);
        Demand d(users, 0);
        for (long long idx = 0; idx < count; ++idx) {
            demands.push_back(d);
            for (int u = users - 1; u >= 0; --u) {
                if (++d[u] < N) break;
                d[u] = 0;
            }
        }
    } else {
        std::mt19937_64 rng(opt.seed ^ 0x9e3779b97f4a7c15ULL);
        std::uniform_int_distribution<int> pick(0, N - 1);
        demands.resize(opt.samples, Demand(users, 0));
        for (auto& d : demands)
            for (auto& f : d) f = pick(rng);
    }
    res.exhaustive = exhaustive;
    res.demands_run = static_cast<long long>(demands.size());

    SiteIndex sites = build_site_index(h);
    std::set<long long> sm(h.S_m.begin(), h.S_m.end());
    long long failures = 0;
#pragma omp parallel for schedule(dynamic) reduction(+ : failures) if (opt.parallel)
    for (long long idx = 0; idx < static_cast<long long>(demands.size()); ++idx) {
        Transcript tr = deliver_core(h, lib, demands[idx], sites, sm);
        DecodeReport dr = decode_core(h, lib, pl, tr, demands[idx], sites, sm);
        if (!dr.ok) {
            failures += 1;
#pragma omp critical
            {
                for (const auto& f : dr.failures)
                    if (res.sample_failures.size() < 5) res.sample_failures.push_back(f);
            }
        }
        if (idx == 0) {
#pragma omp critical
            {
                res.R1 = tr.measured_R1();
                res.R2 = tr.measured_R2();
            }
        }
    }
    res.failures = failures;
    return res;
}

}  // namespace hcc
