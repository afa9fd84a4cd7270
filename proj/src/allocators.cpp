#include "allocators.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

#include "baselines.hpp"

namespace relay {
namespace detail {

double rho1_full_df(double r, const ChannelGains& g, const SystemParams& p) {
    return (exp2s(r / p.theta) - 1.0) * p.n / (p.ps * g.gs);
}

double eta2_needed(double r, double rho1, const ChannelGains& g, const SystemParams& p) {
    const double rem = (r - p.theta * std::log2(gamma_of(rho1, g.gs, p))) / p.tbar();
    if (rem <= 0.0) return 0.0;
    return (exp2s(rem) - 1.0) * p.n / (p.ps * g.gd);
}

// First-phase power when the relay-decode constraint is slack: the remaining
// stationarity pins Gamma_d = 2^r / (1 + gr/gd)^tbar.
double rho1_saturated_network(double r, const ChannelGains& g, const SystemParams& p) {
    const double gd_target = exp2s(r - p.tbar() * std::log2(1.0 + g.gr / g.gd));
    return (gd_target - 1.0) * p.n / (p.ps * g.gd);
}

Allocation alloc_An(double r, double rho1, const ChannelGains& g, const SystemParams& p) {
    const double Gd = bigG(r, rho1, g.gd, p);
    const double Gs = bigG(r, rho1, g.gs, p);
    Allocation a;
    a.rho1 = rho1;
    a.rho_r = std::max(p.n * g.gr / (p.pr * (g.gr + g.gd) * (g.gr + g.gd)) * (Gd - Gs), 0.0);
    a.eta2 = std::max((Gs - 1.0) * p.n / (p.ps * g.gd), 0.0);
    a.rho2 = (p.pr * g.gd / (p.ps * g.gr)) * a.rho_r;
    return a;
}

Allocation alloc_Bn(double r, double rho1, const ChannelGains& g, const SystemParams& p) {
    const double Gd = bigG(r, rho1, g.gd, p);
    Allocation a;
    a.rho1 = rho1;
    a.rho_r = std::max(p.n * g.gr / (p.pr * (g.gr + g.gd) * (g.gr + g.gd)) * (Gd - 1.0), 0.0);
    a.rho2 = (p.pr * g.gd / (p.ps * g.gr)) * a.rho_r;
    return a;
}

namespace {

constexpr double kRateTol = 1e-7;
constexpr double kLabelTol = 1e-11;

bool meets_rate(const SchemeResult& res, double r) {
    return res.rates.i1 >= r - kRateTol && res.rates.i2 >= r - kRateTol;
}

struct Candidate {
    SubScheme sub;
    Allocation a;
};

SchemeResult best_by(const std::vector<Candidate>& cands, double r,
                     const ChannelGains& g, const SystemParams& p,
                     double (*objective)(const SchemeResult&)) {
    SchemeResult best = outage_result();
    double best_val = 0.0;
    for (const auto& c : cands) {
        SchemeResult res = make_result(c.sub, c.a, g, p);
        if (res.outage() || !meets_rate(res, r)) continue;
        const double v = objective(res);
        if (best.outage() || v < best_val - 1e-15) {
            best = res;
            best_val = v;
        }
    }
    return best;
}

double obj_total(const SchemeResult& r) { return r.total_energy(); }
double obj_relay(const SchemeResult& r) { return r.relay_energy; }
double obj_source(const SchemeResult& r) { return r.source_energy; }

}  // namespace

SchemeResult relay_min_saturated(double r, const ChannelGains& g, const SystemParams& p) {
    const double th = p.theta, tb = p.tbar();
    const double r1_cap = 1.0 / th;
    const double rB = std::min(rho1_full_df(r, g, p), r1_cap);

    auto build = [&](double s) -> std::optional<Candidate> {
        const double e2 = eta2_needed(r, s, g, p);
        double rho2 = (1.0 - s * th) / tb - e2;
        if (rho2 < -1e-12) return std::nullopt;
        rho2 = std::max(rho2, 0.0);
        const double gap = bigG(r, s, g.gd, p) - (1.0 + e2 * p.ps * g.gd / p.n);
        const double x = std::sqrt(std::max(p.ps * g.gd * rho2 / p.n, 0.0));
        const double y = std::sqrt(std::max(gap, 0.0)) - x;
        Allocation a;
        a.rho1 = s;
        a.eta2 = e2;
        a.rho2 = rho2;
        if (y > 0.0) {
            if (g.gr <= 0.0) return std::nullopt;
            a.rho_r = p.n / (p.pr * g.gr) * y * y;
        }
        SubScheme sub;
        if (e2 > kLabelTol) sub = SubScheme::Ar;
        else if (s <= rB * (1.0 + 1e-9) + 1e-15) sub = SubScheme::Br;
        else sub = SubScheme::Er;
        return Candidate{sub, a};
    };

    // eta2>0 window: the residual-budget margin q is concave in rho1.
    auto q = [&](double s) { return (1.0 - s * th) / tb - eta2_needed(r, s, g, p); };
    const double qr = std::min(rB, r1_cap);
    bool have_a = false;
    double a_lo = 0.0, a_hi = qr;
    if (q(0.0) >= 0.0) {
        have_a = true;
    } else {
        double gl = 0.0, gh = qr;
        while (gh - gl > 1e-14) {
            const double m1 = gl + (gh - gl) / 3.0, m2 = gh - (gh - gl) / 3.0;
            if (q(m1) < q(m2)) gl = m1; else gh = m2;
        }
        const double smax = 0.5 * (gl + gh);
        if (q(smax) >= 0.0) {
            have_a = true;
            a_lo = bisect([&](double s) { return q(s); }, 0.0, smax).value_or(smax);
            a_hi = q(qr) < 0.0 ? bisect([&](double s) { return q(s); }, smax, qr).value_or(qr) : qr;
        }
    }
    if (!have_a && rB > r1_cap) return outage_result();

    std::vector<double> pts;
    const double lo = have_a ? a_lo : rB;
    pts.push_back(lo);
    pts.push_back(r1_cap);
    if (rB >= lo && rB <= r1_cap) pts.push_back(rB);
    if (have_a) {
        pts.push_back(a_hi);
        auto roots = scan_roots([&](double s) { return g2_stationarity_relay(r, s, g, p); }, a_lo, a_hi);
        pts.insert(pts.end(), roots.begin(), roots.end());
    }
    if (rB < r1_cap) {
        auto phi = [&](double s) {
            // sign of d(relay energy)/d rho1 on the eta2 = 0 piece
            const double Gd = bigG(r, s, g.gd, p);
            const double rho2 = (1.0 - s * th) / tb;
            const double x = std::sqrt(std::max(p.ps * g.gd * rho2 / p.n, 1e-300));
            return std::sqrt(std::max(Gd - 1.0, 0.0)) / x * gamma_of(s, g.gd, p) / Gd - 1.0;
        };
        auto roots = scan_roots(phi, std::max(rB, lo), r1_cap);
        pts.insert(pts.end(), roots.begin(), roots.end());
    }
    std::vector<Candidate> cands;
    for (double s : pts) {
        if (s < lo - 1e-15 || s > r1_cap + 1e-15) continue;
        if (auto c = build(std::clamp(s, 0.0, r1_cap))) cands.push_back(*c);
    }
    return best_by(cands, r, g, p, obj_relay);
}

SchemeResult source_min_relaycapped(double r, const ChannelGains& g, const SystemParams& p) {
    const double th = p.theta, tb = p.tbar();
    const double r1_cap = 1.0 / th;
    const double rB = std::min(rho1_full_df(r, g, p), r1_cap);
    const double y0sq = p.pr * g.gr / (tb * p.n);
    const double y0 = std::sqrt(y0sq);

    auto build = [&](double s) -> std::optional<Candidate> {
        const double e2 = eta2_needed(r, s, g, p);
        const double gap = bigG(r, s, g.gd, p) - (1.0 + e2 * p.ps * g.gd / p.n);
        Allocation a;
        a.rho1 = s;
        a.eta2 = e2;
        const bool i2_active = s <= rB * (1.0 + 1e-9) + 1e-15 || e2 > kLabelTol;
        SubScheme sub;
        if (gap <= 0.0) {
            sub = e2 > kLabelTol ? SubScheme::Cs : (i2_active ? SubScheme::Ds : SubScheme::Es);
        } else if (gap <= y0sq) {
            if (g.gr <= 0.0) return std::nullopt;
            a.rho_r = p.n / (p.pr * g.gr) * gap;  // relay reduced to the minimum
            sub = e2 > kLabelTol ? SubScheme::Cs : (i2_active ? SubScheme::Ds : SubScheme::Es);
        } else {
            const double d = std::sqrt(gap) - y0;
            a.rho2 = d * d * p.n / (p.ps * g.gd);
            a.rho_r = 1.0 / tb;
            if (e2 > kLabelTol) sub = SubScheme::As;
            else sub = i2_active ? SubScheme::Bs : SubScheme::Es;
        }
        return Candidate{sub, a};
    };

    std::vector<double> pts{0.0, r1_cap};
    if (rB <= r1_cap) pts.push_back(rB);
    // rho2 -> 0 boundary given full relay power
    auto bridge = [&](double s) {
        const double e2 = eta2_needed(r, s, g, p);
        return bigG(r, s, g.gd, p) - (1.0 + e2 * p.ps * g.gd / p.n) - y0sq;
    };
    {
        auto roots = scan_roots(bridge, 0.0, r1_cap);
        pts.insert(pts.end(), roots.begin(), roots.end());
    }
    // partial-DF-without-beamforming stationarity (closed form)
    {
        const double sc = (p.n / (p.ps * g.gs)) * (exp2s(r + tb * std::log2(g.gs / g.gd)) - 1.0);
        if (sc >= 0.0 && sc <= r1_cap) pts.push_back(sc);
    }
    if (rB > 0.0) {
        auto roots = scan_roots([&](double s) { return g2_stationarity_source(r, s, g, p); },
                                0.0, std::min(rB, r1_cap));
        pts.insert(pts.end(), roots.begin(), roots.end());
    }
    if (rB < r1_cap) {
        auto phi = [&](double s) {
            // sign of -d(source energy)/d rho1 on the eta2 = 0, rho2 > 0 piece
            const double Gd = bigG(r, s, g.gd, p);
            const double qq = std::sqrt(std::max(Gd - 1.0, 1e-300));
            return (1.0 - y0 / qq) * Gd / gamma_of(s, g.gd, p) - 1.0;
        };
        auto roots = scan_roots(phi, rB, r1_cap);
        pts.insert(pts.end(), roots.begin(), roots.end());
    }
    std::vector<Candidate> cands;
    for (double s : pts) {
        if (s < -1e-15 || s > r1_cap + 1e-15) continue;
        if (auto c = build(std::clamp(s, 0.0, r1_cap))) cands.push_back(*c);
    }
    return best_by(cands, r, g, p, obj_source);
}

}  // namespace detail

SchemeResult n_ee_allocate(double r, const ChannelGains& g, const SystemParams& p) {
    if (!(r > 0.0) || !g.valid() || !p.valid()) return outage_result();
    if (g.gs <= g.gd) return direct_tx(r, g, p);
    std::vector<detail::Candidate> cands;
    RootProblem rp{RootTarget::G1_network, r, g, p};
    if (auto root = solve_root(rp)) {
        const double rn = p.theta * std::log2(gamma_of(*root, g.gs, p));
        if (r >= rn - 1e-12)
            cands.push_back({SubScheme::An, detail::alloc_An(r, *root, g, p)});
    }
    const double rB = detail::rho1_full_df(r, g, p);
    const double rE = detail::rho1_saturated_network(r, g, p);
    if (rE > rB)
        cands.push_back({SubScheme::En, detail::alloc_Bn(r, rE, g, p)});
    else
        cands.push_back({SubScheme::Bn, detail::alloc_Bn(r, rB, g, p)});
    return detail::best_by(cands, r, g, p, detail::obj_total);
}

SchemeResult r_ee_allocate(double r, const ChannelGains& g, const SystemParams& p) {
    if (!(r > 0.0) || !g.valid() || !p.valid()) return outage_result();
    const double r1 = std::log2(1.0 + p.ps * g.gd / p.n);
    if (r <= r1) {
        SchemeResult res = direct_tx(r, g, p);
        if (!res.outage()) res.subscheme = SubScheme::Cr;
        return res;
    }
    if (g.gs <= g.gd) return outage_result();
    return detail::relay_min_saturated(r, g, p);
}

SchemeResult s_ee_allocate(double r, const ChannelGains& g, const SystemParams& p) {
    if (!(r > 0.0) || !g.valid() || !p.valid()) return outage_result();
    if (g.gs <= g.gd) return direct_tx(r, g, p);
    return detail::source_min_relaycapped(r, g, p);
}

Thresholds thresholds(const ChannelGains& g, const SystemParams& p, double r) {
    if (!(g.gs > g.gd)) throw DegenerateChannel();
    const double inf = std::numeric_limits<double>::infinity();
    const double th = p.theta, tb = p.tbar();
    Thresholds t;
    t.r_r1 = std::log2(1.0 + p.ps * g.gd / p.n);
    t.r_c = th * std::log2(g.gs / g.gd);
    t.r_b = th * std::log2(1.0 + (g.gd / g.gs) * (exp2s(r / th) - 1.0))
          + tb * std::log2(1.0 + p.pr * g.gr / (tb * p.n));
    auto rate_at = [&](std::optional<double> root) {
        return root ? th * std::log2(gamma_of(*root, g.gs, p)) : inf;
    };
    t.r_n = rate_at(solve_root({RootTarget::G1_network, r, g, p}));
    t.r_r2 = rate_at(solve_root({RootTarget::G2_relay, r, g, p}));
    auto root_s = solve_root({RootTarget::G2_source, r, g, p});
    if (t.r_b <= t.r_c) {
        t.r_s1 = t.r_b;
        t.r_s2 = rate_at(root_s);
    } else {
        t.r_s1 = t.r_c;
        if (root_s) {
            const double d = std::pow(gamma_of(*root_s, g.gd, p), -th / tb)
                           - std::pow(gamma_of(*root_s, g.gs, p), -th / tb);
            t.r_s2 = d > 0.0 ? tb * std::log2(p.pr * g.gr / (tb * p.n)) - tb * std::log2(d) : inf;
        } else {
            t.r_s2 = inf;
        }
    }
    // interior network-family budget boundary, by bisection on feasibility
    double lo = 0.0, hi = 1.0;
    const double cap = std::log2(1.0 + (p.ps * (g.gs + g.gd) + p.pr * g.gr) / p.n) + 8.0;
    while (hi < cap && !n_ee_allocate(hi, g, p).outage()) { lo = hi; hi *= 2.0; }
    for (int i = 0; i < 200 && hi - lo > 1e-9; ++i) {
        const double mid = 0.5 * (lo + hi);
        if (!n_ee_allocate(mid, g, p).outage()) lo = mid; else hi = mid;
    }
    t.r_n_max = lo;
    return t;
}

}  // namespace relay
