// Timing comparison of the serial and parallel validators on mid-size inputs.
#include "hcc/design.hpp"
#include "hcc/hpda.hpp"
#include "hcc/pda.hpp"

#include <chrono>
#include <iostream>

using namespace hcc;
using clk = std::chrono::steady_clock;

namespace {

template <typename F>
double time_ms(F&& f) {
    auto t0 = clk::now();
    f();
    return std::chrono::duration<double, std::milli>(clk::now() - t0).count();
}

}  // namespace

int main() {
    {
        Pda p = complete_design_pda(12, 11, 8, 3);  // 220 x 1980
        bool ok_s = false, ok_p = false;
        double s = time_ms([&] { ok_s = validate_pda_serial(p).ok(); });
        double t = time_ms([&] { ok_p = validate_pda(p).ok(); });
        std::cout << "pda  (K=" << p.K << ", F=" << p.F << "): serial " << s
                  << " ms, parallel " << t << " ms, ok=" << ok_s << "/" << ok_p << "\n";
    }
    {
        Hpda h = build_design_hpda(trivial_design(10, 9), 4, 7);  // 10 x 36 users, F=210
        bool ok_s = false, ok_p = false;
        double s = time_ms([&] { ok_s = validate_hpda_serial(h).ok(); });
        double t = time_ms([&] { ok_p = validate_hpda(h).ok(); });
        std::cout << "hpda (K1=" << h.K1 << ", K2=" << h.K2 << ", F=" << h.F
                  << "): serial " << s << " ms, parallel " << t << " ms, ok=" << ok_s
                  << "/" << ok_p << "\n";
    }
    return 0;
}
