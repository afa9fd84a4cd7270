#include "roots.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace relay {

double g1_network(double r, double rho1, const ChannelGains& g, const SystemParams& p) {
    const double tb = p.tbar();
    const double ud = exp2s((r - std::log2(gamma_of(rho1, g.gd, p))) / tb);
    const double us = exp2s((r - std::log2(gamma_of(rho1, g.gs, p))) / tb);
    return ud - 1.0 + (g.gr / g.gd) * ((g.gs / g.gd) * us - 1.0);
}

double g3_gap(double r, double rho1, const ChannelGains& g, const SystemParams& p) {
    return bigG(r, rho1, g.gd, p) - bigG(r, rho1, g.gs, p);
}

double g2_printed_relay(double r, double rho1, const ChannelGains& g, const SystemParams& p) {
    const double tb = p.tbar();
    const double ud = exp2s((r - std::log2(gamma_of(rho1, g.gd, p))) / tb);
    const double us = exp2s((r - std::log2(gamma_of(rho1, g.gs, p))) / tb);
    return ud - 1.0 + g3_gap(r, rho1, g, p) * ((g.gs / g.gd) * us - 1.0);
}

double g2_printed_source(double r, double rho1, const ChannelGains& g, const SystemParams& p) {
    const double Gd = bigG(r, rho1, g.gd, p);
    const double Gs = bigG(r, rho1, g.gs, p);
    return Gd - 1.0 + g3_gap(r, rho1, g, p) * ((g.gs / g.gd) * Gs - 1.0);
}

namespace {
// Smallest eta2 meeting the relay-decode constraint I2 >= r given rho1.
double eta2_needed(double r, double rho1, const ChannelGains& g, const SystemParams& p) {
    const double rem = (r - p.theta * std::log2(gamma_of(rho1, g.gs, p))) / p.tbar();
    if (rem <= 0.0) return 0.0;
    return (exp2s(rem) - 1.0) * p.n / (p.ps * g.gd);
}
const double kInvalid = std::numeric_limits<double>::quiet_NaN();
}  // namespace

double g2_stationarity_relay(double r, double rho1, const ChannelGains& g, const SystemParams& p) {
    // Along: both rate constraints active, source budget met with equality.
    const double e2 = eta2_needed(r, rho1, g, p);
    const double rho2 = (1.0 - rho1 * p.theta) / p.tbar() - e2;
    if (rho2 <= 0.0) return kInvalid;
    const double x = std::sqrt(p.ps * g.gd * rho2 / p.n);
    const double gap = bigG(r, rho1, g.gd, p) - (1.0 + e2 * p.ps * g.gd / p.n);
    if (gap <= 0.0) return kInvalid;
    const double y = std::sqrt(gap) - x;
    if (y <= 0.0) return kInvalid;  // relay not needed here
    const double beta = y / x;
    const double tb = p.tbar();
    const double ud = exp2s((r - std::log2(gamma_of(rho1, g.gd, p))) / tb);
    const double us = exp2s((r - std::log2(gamma_of(rho1, g.gs, p))) / tb);
    return ud - 1.0 + beta * ((g.gs / g.gd) * us - 1.0);
}

double g2_stationarity_source(double r, double rho1, const ChannelGains& g, const SystemParams& p) {
    // Along: both rate constraints active, relay at full power 1/tbar.
    const double y0 = std::sqrt(p.pr * g.gr / (p.tbar() * p.n));
    const double e2 = eta2_needed(r, rho1, g, p);
    const double gap = bigG(r, rho1, g.gd, p) - (1.0 + e2 * p.ps * g.gd / p.n);
    if (gap <= 0.0) return kInvalid;
    const double x = std::sqrt(gap) - y0;
    if (x <= 0.0) return kInvalid;  // rho2 would be zero
    const double beta = y0 / x;
    const double tb = p.tbar();
    const double ud = exp2s((r - std::log2(gamma_of(rho1, g.gd, p))) / tb);
    const double us = exp2s((r - std::log2(gamma_of(rho1, g.gs, p))) / tb);
    return ud - 1.0 + beta * ((g.gs / g.gd) * us - 1.0);
}

std::optional<double> bisect(const std::function<double(double)>& f,
                             double lo, double hi, double tol, int max_iter) {
    double flo = f(lo);
    if (flo == 0.0) return lo;
    double fhi = f(hi);
    if (fhi == 0.0) return hi;
    if ((flo > 0.0) == (fhi > 0.0)) return std::nullopt;
    for (int i = 0; i < max_iter && hi - lo > tol; ++i) {
        const double mid = 0.5 * (lo + hi);
        const double fm = f(mid);
        if (fm == 0.0) return mid;
        if ((fm > 0.0) == (flo > 0.0)) {
            lo = mid;
            flo = fm;
        } else {
            hi = mid;
        }
    }
    return 0.5 * (lo + hi);
}

std::vector<double> scan_roots(const std::function<double(double)>& f,
                               double lo, double hi, int pieces) {
    std::vector<double> out;
    if (!(hi > lo)) return out;
    double xp = lo, fp = f(lo);
    if (fp == 0.0) out.push_back(lo);
    for (int i = 1; i <= pieces; ++i) {
        const double x = lo + (hi - lo) * i / pieces;
        const double fx = f(x);
        if (std::isfinite(fp) && std::isfinite(fx)) {
            if (fx == 0.0) {
                out.push_back(x);
            } else if (fp * fx < 0.0) {
                if (auto r = bisect(f, xp, x)) out.push_back(*r);
            }
        }
        xp = x;
        fp = fx;
    }
    return out;
}

std::optional<double> solve_root(const RootProblem& rp) {
    if (!(rp.g.gs > rp.g.gd)) throw DegenerateChannel();
    const double hi = 1.0 / rp.p.theta;
    if (rp.target == RootTarget::G1_network) {
        // g1 is strictly decreasing with g1(0) > 0; plain bisection applies.
        auto f = [&](double s) { return g1_network(rp.r, s, rp.g, rp.p); };
        if (f(hi) > 0.0) return std::nullopt;
        return bisect(f, 0.0, hi);
    }
    auto f = [&](double s) {
        return rp.target == RootTarget::G2_relay
                   ? g2_stationarity_relay(rp.r, s, rp.g, rp.p)
                   : g2_stationarity_source(rp.r, s, rp.g, rp.p);
    };
    auto roots = scan_roots(f, 0.0, hi);
    if (roots.empty()) return std::nullopt;
    return roots.front();
}

}  // namespace relay
