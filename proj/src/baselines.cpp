#include "hcc/baselines.hpp"

#include "hcc/combinatorics.hpp"

#include <stdexcept>

namespace hcc {

namespace {

Int floor_rat(const Rat& r) {
    Int num = boost::multiprecision::numerator(r);
    Int den = boost::multiprecision::denominator(r);
    if (num >= 0) return num / den;
    return -((-num + den - 1) / den);
}

// Load at an integer cache point t = K*m: K(1-m) * min{1/(1+t), N/K}.
Rat integer_point_rate(long long K, long long t, const Rat& N_files) {
    Rat m = make_rat(t, K);
    Rat a = Rat(1, Int(1 + t));
    Rat b = N_files / K;
    Rat mn = a < b ? a : b;
    return Rat(Int(K)) * (Rat(1) - m) * mn;
}

}  // namespace

RateEval man_rate(const Rat& m_in, long long K, const Rat& N_files) {
    Rat m = m_in;
    if (m < 0) throw std::domain_error("memory ratio must be nonnegative");
    if (m > 1) m = 1;  // more cache than content: rate 0
    Rat Km = Rat(Int(K)) * m;
    Int fl = floor_rat(Km);
    RateEval out;
    if (Rat(fl) == Km) {
        long long t = static_cast<long long>(fl);
        out.rate = integer_point_rate(K, t, N_files);
        out.f = binom(K, t);
        return out;
    }
    long long lo = static_cast<long long>(fl);
    long long hi = lo + 1;
    Rat theta = Rat(Int(hi)) - Km;  // weight on the floor point
    out.rate = theta * integer_point_rate(K, lo, N_files) +
               (Rat(1) - theta) * integer_point_rate(K, hi, N_files);
    out.f = std::max(binom(K, lo), binom(K, hi));
    return out;
}

BaselinePoint knmd_point(long long K1, long long K2, const Rat& m1, const Rat& m2,
                         const Rat& alpha, const Rat& beta, const Rat& N_files) {
    if (alpha < 0 || alpha > 1 || beta < 0 || beta > 1)
        throw std::domain_error("alpha and beta must lie in [0,1]");
    BaselinePoint out;
    out.R1 = 0;
    out.R2 = 0;
    out.F = 1;
    auto acc = [&](const RateEval& e) { out.F = std::max(out.F, e.f); };
    if (alpha > 0) {
        RateEval r1 = man_rate(m1 / alpha, K1, N_files);
        acc(r1);
        out.R1 += alpha * Rat(Int(K2)) * r1.rate;
        RateEval r2 = man_rate(beta * m2 / alpha, K2, N_files);
        acc(r2);
        out.R2 += alpha * r2.rate;
    }
    if (alpha < 1) {
        Rat arg = (Rat(1) - beta) * m2 / (Rat(1) - alpha);
        RateEval rA = man_rate(arg, K1 * K2, N_files);
        acc(rA);
        out.R1 += (Rat(1) - alpha) * rA.rate;
        RateEval rB = man_rate(arg, K2, N_files);
        acc(rB);
        out.R2 += (Rat(1) - alpha) * rB.rate;
    }
    return out;
}

std::pair<Rat, Rat> knmd_optimal_ab(const Rat& m1, const Rat& m2, long long K2) {
    Rat combined = m1 + Rat(Int(K2)) * m2;
    if (combined < 1) return {m1 / combined, Rat(0)};
    if (m1 <= Rat(1, 4)) return {m1, m1};
    return {m1, Rat(1, 4)};
}

BaselinePoint scheme_a_point(long long K1, long long K2, const Rat& m1, const Rat& m2,
                             const Rat& N_files) {
    return knmd_point(K1, K2, m1, m2, Rat(1), Rat(1), N_files);
}

BaselinePoint scheme_b_point(long long K1, long long K2, const Rat& m2,
                             const Rat& N_files) {
    return knmd_point(K1, K2, Rat(0), m2, Rat(0), Rat(0), N_files);
}

PairPoint pair_scheme_point(const PdaParams& A, const PdaParams& B) {
    PairPoint p;
    p.m1 = make_rat(A.Z, A.F);
    p.m2 = make_rat(B.Z, B.F);
    p.R1 = make_rat(A.S, A.F) * make_rat(B.S, B.F);
    p.R2 = make_rat(B.S, B.F);
    p.F = Int(A.F) * Int(B.F);
    return p;
}

PairPoint closed_form_two_layer_point(long long K1, long long K2,
                                      const Rat& m1, const Rat& m2) {
    Rat t1 = Rat(Int(K1)) * m1;
    Rat t2 = Rat(Int(K2)) * m2;
    if (Rat(floor_rat(t1)) != t1 || Rat(floor_rat(t2)) != t2)
        throw std::domain_error("requires integer K1*m1 and K2*m2");
    PairPoint p;
    p.m1 = m1;
    p.m2 = m2;
    p.R1 = Rat(Int(K1 * K2)) * (Rat(1) - m1) * (Rat(1) - m2) / (Rat(1) + t1);
    p.R2 = Rat(Int(K2)) * (Rat(1) - m2) / (Rat(1) + t2);
    p.F = binom(K1, static_cast<long long>(floor_rat(t1))) *
          binom(K2, static_cast<long long>(floor_rat(t2)));
    return p;
}

DelayPoint hybrid_delay_point(long long K1, long long K2, const Rat& m1, const Rat& m2,
                              const Rat& alpha, const Rat& beta, const Rat& N_files) {
    if (alpha <= 0 || alpha >= 1)
        throw std::domain_error("requires 0 < alpha < 1");
    DelayPoint out;
    out.F = 1;
    auto acc = [&](const RateEval& e) { out.F = std::max(out.F, e.f); };
    Rat a1 = m1 / alpha;
    RateEval r1 = man_rate(a1, K1, N_files);
    acc(r1);
    RateEval r2 = man_rate(beta * m2 / alpha, K2, N_files);
    acc(r2);
    out.Rp1 = r1.rate * r2.rate;
    Rat cl = a1 < 1 ? a1 : Rat(1);
    out.Rp2 = cl * r2.rate;
    out.Rs1 = out.Rp1 + out.Rp2;
    RateEval rs2 = man_rate((Rat(1) - beta) * m2 / (Rat(1) - alpha), K1 * K2, N_files);
    acc(rs2);
    out.Rs2 = rs2.rate;
    out.T = alpha * out.Rs1 + (Rat(1) - alpha) * out.Rs2;
    return out;
}

}  // namespace hcc
