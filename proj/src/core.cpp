#include "core.hpp"

#include <algorithm>

namespace relay {

namespace {
constexpr double kNegClamp = -1e-12;   // root-solver round-off guard
constexpr double kBudgetTol = 1e-9;    // relative tolerance on the budgets

double clamp0(double v) { return (v < 0.0 && v >= kNegClamp) ? 0.0 : v; }
}  // namespace

const char* to_string(SubScheme s) {
    switch (s) {
        case SubScheme::An: return "An";
        case SubScheme::Bn: return "Bn";
        case SubScheme::En: return "En";
        case SubScheme::Ar: return "Ar";
        case SubScheme::Br: return "Br";
        case SubScheme::Cr: return "Cr";
        case SubScheme::Er: return "Er";
        case SubScheme::As: return "As";
        case SubScheme::Bs: return "Bs";
        case SubScheme::Cs: return "Cs";
        case SubScheme::Ds: return "Ds";
        case SubScheme::Es: return "Es";
        case SubScheme::Direct: return "Direct";
        case SubScheme::TwoHop: return "TwoHop";
        case SubScheme::Outage: return "Outage";
    }
    return "?";
}

RatePair rate_pair(const Allocation& a, const ChannelGains& g, const SystemParams& p) {
    const double e1 = clamp0(a.eta1), r1 = clamp0(a.rho1);
    const double e2 = clamp0(a.eta2), r2 = clamp0(a.rho2), rr = clamp0(a.rho_r);
    const double th = p.theta, tb = p.tbar();
    const double s1 = (e1 + r1) * p.ps * g.gd / p.n;
    const double cross = 2.0 * std::sqrt(std::max(p.ps * g.gd * p.pr * g.gr * r2 * rr, 0.0));
    const double s2 = ((e2 + r2) * p.ps * g.gd + rr * p.pr * g.gr + cross) / p.n;
    RatePair out;
    out.i1 = th * std::log2(1.0 + s1) + tb * std::log2(1.0 + s2);
    out.i2 = th * std::log2(1.0 + r1 * p.ps * g.gs / (p.n + e1 * p.ps * g.gs))
           + th * std::log2(1.0 + e1 * p.ps * g.gd / p.n)
           + tb * std::log2(1.0 + e2 * p.ps * g.gd / p.n);
    return out;
}

Consumed consumed(const Allocation& a, const SystemParams& p) {
    const double th = p.theta, tb = p.tbar();
    Consumed c;
    c.phase1 = th * (clamp0(a.eta1) + clamp0(a.rho1)) * p.ps;
    const double src2 = tb * (clamp0(a.eta2) + clamp0(a.rho2)) * p.ps;
    c.relay = tb * clamp0(a.rho_r) * p.pr;
    c.source = c.phase1 + src2;
    c.phase2 = src2 + c.relay;
    return c;
}

bool is_feasible(const Allocation& a, const SystemParams& p) {
    const double fields[5] = {a.eta1, a.rho1, a.eta2, a.rho2, a.rho_r};
    for (double f : fields)
        if (!(f >= kNegClamp) || !std::isfinite(f)) return false;
    const double th = p.theta, tb = p.tbar();
    const double src = th * (clamp0(a.eta1) + clamp0(a.rho1)) + tb * (clamp0(a.eta2) + clamp0(a.rho2));
    const double rel = tb * clamp0(a.rho_r);
    return src <= 1.0 + kBudgetTol && rel <= 1.0 + kBudgetTol;
}

SchemeResult make_result(SubScheme sub, const Allocation& a,
                         const ChannelGains& g, const SystemParams& p) {
    if (!is_feasible(a, p)) return outage_result();
    SchemeResult r;
    r.subscheme = sub;
    r.alloc.eta1 = clamp0(a.eta1);
    r.alloc.rho1 = clamp0(a.rho1);
    r.alloc.eta2 = clamp0(a.eta2);
    r.alloc.rho2 = clamp0(a.rho2);
    r.alloc.rho_r = clamp0(a.rho_r);
    r.rates = rate_pair(r.alloc, g, p);
    const Consumed c = consumed(r.alloc, p);
    r.source_energy = c.source;
    r.relay_energy = c.relay;
    r.phase1_energy = c.phase1;
    r.phase2_energy = c.phase2;
    return r;
}

SchemeResult outage_result() { return SchemeResult{}; }

}  // namespace relay
