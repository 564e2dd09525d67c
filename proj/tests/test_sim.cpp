#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hcc/design.hpp"
#include "hcc/hpda.hpp"
#include "hcc/sim.hpp"

#include <algorithm>
#include <set>

using namespace hcc;

namespace {

std::set<std::pair<int, long long>> term_set(const std::vector<Term>& terms) {
    std::set<std::pair<int, long long>> out;
    for (const auto& t : terms) out.insert({t.file, t.row});
    return out;
}

const Message* find_msg(const std::vector<Message>& msgs, long long s) {
    for (const auto& m : msgs)
        if (m.s == s) return &m;
    return nullptr;
}

}  // namespace

TEST_CASE("worked 6x3x2 fixture: transcript matches the hand-derived messages") {
    Hpda h = example_hpda_6x3x2();
    // Users (1..6) demand files (2,1,5,4,3,6); files/rows 0-based internally.
    Demand d = {1, 0, 4, 3, 2, 5};

    // Server message for shared integer 1: packets W_{2,4}, W_{1,3}, W_{5,2},
    // W_{4,1} (file, row 1-based).
    CHECK(term_set(server_terms(h, d, 1)) ==
          std::set<std::pair<int, long long>>{{1, 3}, {0, 2}, {4, 1}, {3, 0}});

    // Mirror 1, shared integer 1: it strips the terms it caches (rows 1-2
    // of subarrays 2 and 3), leaving W_{2,4} and W_{1,3}.
    CHECK(term_set(mirror_terms(h, d, 0, 1)) ==
          std::set<std::pair<int, long long>>{{1, 3}, {0, 2}});
    // Mirror 1, local integer 4: W_{2,2} and W_{1,1}.
    CHECK(term_set(mirror_terms(h, d, 0, 4)) ==
          std::set<std::pair<int, long long>>{{1, 1}, {0, 0}});
    // Mirror 2, local integer 5: W_{5,4} and W_{4,3}.
    CHECK(term_set(mirror_terms(h, d, 1, 5)) ==
          std::set<std::pair<int, long long>>{{4, 3}, {3, 2}});
    // Mirror 3, local integer 6: W_{3,6} and W_{6,5}.
    CHECK(term_set(mirror_terms(h, d, 2, 6)) ==
          std::set<std::pair<int, long long>>{{2, 5}, {5, 4}});

    Library lib = make_library(6, h.F, 16, 7);
    Transcript tr = deliver(h, lib, d);
    CHECK(tr.server.size() == 3);  // shared integers 1, 2, 3
    CHECK(tr.measured_R1() == make_rat(1, 2));
    CHECK(tr.measured_R2() == make_rat(1, 2));
    // Payload of the server message for integer 1 is the XOR of its terms.
    const Message* m1 = find_msg(tr.server, 1);
    REQUIRE(m1 != nullptr);
    std::vector<uint8_t> expect(16, 0);
    for (auto [f, r] : term_set(server_terms(h, d, 1)))
        for (int b = 0; b < 16; ++b) expect[b] ^= lib.packet(f, r)[b];
    CHECK(m1->payload == expect);

    Placement pl = place(h);
    auto rep = decode_all(h, lib, pl, tr, d);
    INFO(std::string(rep.failures.empty() ? "" : rep.failures.front().reason));
    CHECK(rep.ok);
    CHECK(rep.packets_checked == 6 * 3);  // 6 users, F - Z2 = 3 packets each
}

TEST_CASE("worked fixture: every demand assignment decodes") {
    Hpda h = example_hpda_6x3x2();
    SweepOptions opt;
    opt.policy = SweepOptions::Policy::Exhaustive;
    SweepResult res = run_demand_sweep(h, opt);
    CHECK(res.exhaustive);
    CHECK(res.demands_run == 46656);  // 6^6
    CHECK(res.failures == 0);
    CHECK(res.R1 == make_rat(1, 2));
    CHECK(res.R2 == make_rat(1, 2));
}

TEST_CASE("design lifts decode under sampled demands") {
    SweepOptions opt;
    opt.policy = SweepOptions::Policy::Sampled;
    opt.samples = 50;
    opt.seed = 42;
    {
        Hpda h = build_design_hpda(builtin_design("fano-7-3-1"), 1, 2);
        SweepResult res = run_demand_sweep(h, opt);
        CHECK(res.failures == 0);
        CHECK(res.R1 == Rat(1));
        CHECK(res.R2 == make_rat(15, 7));
    }
    {
        Hpda h = build_design_hpda_with_inner(trivial_design(6, 5), 2, 4,
                                              builtin_pda("inner-5-5-2-7"));
        SweepResult res = run_demand_sweep(h, opt);
        CHECK(res.failures == 0);
        CHECK(res.R1 == Rat(2));
    }
    {
        // Serial and parallel sweeps agree.
        Hpda h = build_design_hpda(trivial_design(6, 5), 2, 4);
        SweepOptions ser = opt;
        ser.parallel = false;
        SweepResult a = run_demand_sweep(h, opt);
        SweepResult b = run_demand_sweep(h, ser);
        CHECK(a.failures == b.failures);
        CHECK(a.R1 == b.R1);
        CHECK(a.R2 == b.R2);
        CHECK(a.demands_run == b.demands_run);
    }
}

TEST_CASE("auto policy switches between exhaustive and sampled") {
    Hpda h = example_hpda_6x3x2();
    SweepOptions opt;
    opt.N = 2;  // 2^6 = 64 <= 4096: exhaustive
    SweepResult small = run_demand_sweep(h, opt);
    CHECK(small.exhaustive);
    CHECK(small.demands_run == 64);
    opt.N = 6;  // 6^6 = 46656 > 4096: sampled
    opt.samples = 10;
    SweepResult big = run_demand_sweep(h, opt);
    CHECK_FALSE(big.exhaustive);
    CHECK(big.demands_run == 10);
    CHECK(big.failures == 0);
}

TEST_CASE("a corrupted transcript produces a localized decode witness") {
    Hpda h = example_hpda_6x3x2();
    Library lib = make_library(6, h.F, 16, 9);
    Demand d = {1, 0, 4, 3, 2, 5};
    Transcript tr = deliver(h, lib, d);
    Placement pl = place(h);

    SUBCASE("flipped payload byte") {
        tr.per_mirror[0][0].payload[0] ^= 0xff;
        auto rep = decode_all(h, lib, pl, tr, d);
        REQUIRE_FALSE(rep.ok);
        bool mismatch = false;
        for (const auto& f : rep.failures) {
            CHECK(f.user >= 0);
            CHECK(f.user < 6);
            CHECK(f.packet_row >= 0);
            if (f.reason.find("differs") != std::string::npos) mismatch = true;
        }
        CHECK(mismatch);
    }
    SUBCASE("zeroed message payload") {
        std::fill(tr.per_mirror[1][0].payload.begin(), tr.per_mirror[1][0].payload.end(),
                  uint8_t{0});
        CHECK_FALSE(decode_all(h, lib, pl, tr, d).ok);
    }
    SUBCASE("dropped message") {
        tr.per_mirror[2].erase(tr.per_mirror[2].begin());
        auto rep = decode_all(h, lib, pl, tr, d);
        REQUIRE_FALSE(rep.ok);
        CHECK(rep.failures.front().reason.find("no message") != std::string::npos);
    }
}

TEST_CASE("library generation is deterministic in the seed") {
    Library a = make_library(3, 5, 16, 123);
    Library b = make_library(3, 5, 16, 123);
    Library c = make_library(3, 5, 16, 124);
    CHECK(a.data == b.data);
    CHECK(a.data != c.data);
}
