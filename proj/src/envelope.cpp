#include "hcc/envelope.hpp"

#include <sstream>
#include <stdexcept>

namespace hcc {

std::vector<AchievablePoint> trivial_points(const Rat& N_files, long long K2) {
    AchievablePoint none;  // no caching: the server ships all files, mirrors relay
    none.m1 = 0;
    none.m2 = 0;
    none.R1 = N_files;
    none.R2 = Rat(Int(K2));
    none.source = "no-cache";
    AchievablePoint full;  // users cache everything
    full.m1 = 0;
    full.m2 = 1;
    full.R1 = 0;
    full.R2 = 0;
    full.source = "full-cache";
    return {none, full};
}

AchievablePoint share3(const AchievablePoint& a, const AchievablePoint& b,
                       const AchievablePoint& c, const Rat& alpha, const Rat& beta) {
    Rat gamma = Rat(1) - alpha - beta;
    if (alpha < 0 || beta < 0 || gamma < 0)
        throw std::domain_error("weights must be nonnegative and sum to at most 1");
    AchievablePoint p;
    p.m1 = alpha * a.m1 + beta * b.m1 + gamma * c.m1;
    p.m2 = alpha * a.m2 + beta * b.m2 + gamma * c.m2;
    p.R1 = alpha * a.R1 + beta * b.R1 + gamma * c.R1;
    p.R2 = alpha * a.R2 + beta * b.R2 + gamma * c.R2;
    std::ostringstream os;
    os << "share(" << a.source << "*" << rat_to_string(alpha) << "+" << b.source << "*"
       << rat_to_string(beta) << "+" << c.source << "*" << rat_to_string(gamma) << ")";
    p.source = os.str();
    return p;
}

namespace {

void consider(std::optional<EnvelopeValue>& best, const Rat& t,
              std::vector<std::pair<std::string, Rat>> support) {
    if (!best || t < best->T ||
        (t == best->T && support.size() < best->support.size()))
        best = EnvelopeValue{t, std::move(support)};
}

}  // namespace

std::optional<EnvelopeValue> lower_envelope(const std::vector<AchievablePoint>& pts,
                                            const Rat& m1, const Rat& m2) {
    std::optional<EnvelopeValue> best;
    const size_t n = pts.size();
    for (size_t a = 0; a < n; ++a) {
        const auto& A = pts[a];
        if (A.m1 == m1 && A.m2 == m2) consider(best, A.T(), {{A.source, Rat(1)}});
        for (size_t b = a + 1; b < n; ++b) {
            const auto& B = pts[b];
            // weight w on A with (1-w) on B hitting (m1, m2) exactly
            Rat d1 = A.m1 - B.m1, d2 = A.m2 - B.m2;
            Rat w;
            bool okw = false;
            if (d1 != 0) {
                w = (m1 - B.m1) / d1;
                okw = (A.m2 * w + B.m2 * (Rat(1) - w) == m2);
            } else if (d2 != 0) {
                w = (m2 - B.m2) / d2;
                okw = (B.m1 == m1);
            }
            if (okw && w >= 0 && w <= 1) {
                Rat t = w * A.T() + (Rat(1) - w) * B.T();
                consider(best, t, {{A.source, w}, {B.source, Rat(1) - w}});
            }
            for (size_t c = b + 1; c < n; ++c) {
                const auto& C = pts[c];
                Rat a11 = A.m1 - C.m1, a12 = B.m1 - C.m1;
                Rat a21 = A.m2 - C.m2, a22 = B.m2 - C.m2;
                Rat det = a11 * a22 - a12 * a21;
                if (det == 0) continue;  // collinear: the pair loop covers it
                Rat b1 = m1 - C.m1, b2 = m2 - C.m2;
                Rat al = (b1 * a22 - a12 * b2) / det;
                Rat be = (a11 * b2 - b1 * a21) / det;
                Rat ga = Rat(1) - al - be;
                if (al < 0 || be < 0 || ga < 0) continue;
                Rat t = al * A.T() + be * B.T() + ga * C.T();
                consider(best, t, {{A.source, al}, {B.source, be}, {C.source, ga}});
            }
        }
    }
    return best;
}

std::vector<ConvexityEntry> convexity_report(const std::vector<AchievablePoint>& pts) {
    std::vector<ConvexityEntry> out;
    for (const auto& p : pts) {
        ConvexityEntry e;
        e.source = p.source;
        auto env = lower_envelope(pts, p.m1, p.m2);
        e.envelope_T = env ? env->T : p.T();
        e.on_envelope = !env || !(env->T < p.T());
        if (!e.on_envelope) {
            std::ostringstream os;
            for (size_t i = 0; i < env->support.size(); ++i) {
                if (i) os << " + ";
                os << env->support[i].first << "*" << rat_to_string(env->support[i].second);
            }
            e.dominating = os.str();
        }
        out.push_back(std::move(e));
    }
    return out;
}

}  // namespace hcc
