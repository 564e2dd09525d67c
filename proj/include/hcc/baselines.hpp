#pragma once

#include "hcc/pda.hpp"
#include "hcc/types.hpp"

#include <string>
#include <vector>

namespace hcc {

// Single-layer coded-caching load r(M/N, K) = K(1-M/N) * min{1/(1+KM/N), N/K}
// evaluated exactly.  Non-integer K*M/N is handled by memory sharing between
// the neighbouring integer points: with theta = ceil(Km) - Km,
// r = theta * r(floor(Km)/K) + (1-theta) * r(ceil(Km)/K).
// `f` is the largest subpacketization among the integer points used.
struct RateEval {
    Rat rate;
    Int f = 1;
};
RateEval man_rate(const Rat& m, long long K, const Rat& N_files);

struct BaselinePoint {
    Rat R1, R2;
    Rat T() const { return R1 + R2; }
    Int F = 1;  // subpacketization: max over the constituent binomials
};

// Two-layer composite scheme with split parameters alpha (fraction of each
// file served through mirror caches) and beta (fraction of user memory
// devoted to that part):
//   R1 = alpha*K2*r(M1/(alpha N), K1) + (1-alpha)*r((1-beta)M2/((1-alpha)N), K1K2)
//   R2 = alpha*r(beta M2/(alpha N), K2) + (1-alpha)*r((1-beta)M2/((1-alpha)N), K2)
// Terms with a zero coefficient are skipped.  First arguments above 1 clamp to 1.
BaselinePoint knmd_point(long long K1, long long K2, const Rat& m1, const Rat& m2,
                         const Rat& alpha, const Rat& beta, const Rat& N_files);

// Closed-form optimal split:
//   (m1, m1)                 if M1 + K2*M2 >= N and M1 <= N/4
//   (M1/(M1+K2*M2), 0)       if M1 + K2*M2 <  N
//   (m1, 1/4)                if M1 + K2*M2 >= N and N/4 < M1 <= N
std::pair<Rat, Rat> knmd_optimal_ab(const Rat& m1, const Rat& m2, long long K2);

// alpha = beta = 1: everything through the mirrors.
BaselinePoint scheme_a_point(long long K1, long long K2, const Rat& m1, const Rat& m2,
                             const Rat& N_files);
// alpha = beta = 0: mirrors bypassed, K1K2 users against the server.
BaselinePoint scheme_b_point(long long K1, long long K2, const Rat& m2,
                             const Rat& N_files);

// Two-layer scheme obtained by pairing two single-layer arrays
// A=(K1,F1,Z1,S1) (server-to-mirror) and B=(K2,F2,Z2,S2) (mirror-to-user):
// m1=Z1/F1, m2=Z2/F2, R1=S1*S2/(F1*F2), R2=S2/F2, F=F1*F2.
struct PairPoint {
    Rat m1, m2, R1, R2;
    Rat T() const { return R1 + R2; }
    Int F = 1;
};
PairPoint pair_scheme_point(const PdaParams& A, const PdaParams& B);

// Closed-form two-layer scheme requiring integer K1*m1 and K2*m2:
// R1 = K1K2(1-m1)(1-m2)/(1+K1m1), R2 = K2(1-m2)/(1+K2m2),
// F = C(K1,K1m1)*C(K2,K2m2).  Throws std::domain_error off the integer grid.
PairPoint closed_form_two_layer_point(long long K1, long long K2,
                                      const Rat& m1, const Rat& m2);

// Hybrid delivery-delay baseline:
//   T = alpha*(Rp1 + Rp2) + (1-alpha)*Rs2 with
//   Rp1 = r(M1/(alpha N), K1) * r(beta M2/(alpha N), K2)
//   Rp2 = min{M1/(alpha N), 1} * r(beta M2/(alpha N), K2)
//   Rs2 = r((1-beta) M2/((1-alpha) N), K1K2)
struct DelayPoint {
    Rat T;
    Rat Rs1, Rs2, Rp1, Rp2;
    Int F = 1;
};
DelayPoint hybrid_delay_point(long long K1, long long K2, const Rat& m1, const Rat& m2,
                              const Rat& alpha, const Rat& beta, const Rat& N_files);

}  // namespace hcc
