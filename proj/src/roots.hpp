#pragma once
#include <functional>
#include <optional>
#include <stdexcept>
#include <vector>

#include "core.hpp"

namespace relay {

// Thrown when a relayed scheme is requested with gs <= gd; the caller must
// fall back to direct transmission or outage.
struct DegenerateChannel : std::runtime_error {
    DegenerateChannel() : std::runtime_error("gs <= gd: relayed sub-schemes degenerate") {}
};

// 1 + rho1 * Ps * gi / N
inline double gamma_of(double rho1, double gi, const SystemParams& p) {
    return 1.0 + rho1 * p.ps * gi / p.n;
}
// 2^{R/tbar} / Gamma^{theta/tbar}
inline double bigG(double r, double rho1, double gi, const SystemParams& p) {
    return exp2s((r - p.theta * std::log2(gamma_of(rho1, gi, p))) / p.tbar());
}

// Root equation for the network scheme's message-split boundary.
double g1_network(double r, double rho1, const ChannelGains& g, const SystemParams& p);
// Beamforming gap G_d - G_s shared by the relay/source schemes.
double g3_gap(double r, double rho1, const ChannelGains& g, const SystemParams& p);
// The two root equations exactly as the paper prints them (documented
// alternates; the stationarity forms below are what the allocators use).
double g2_printed_relay(double r, double rho1, const ChannelGains& g, const SystemParams& p);
double g2_printed_source(double r, double rho1, const ChannelGains& g, const SystemParams& p);
// KKT stationarity along the active-constraint manifolds.
double g2_stationarity_relay(double r, double rho1, const ChannelGains& g, const SystemParams& p);
double g2_stationarity_source(double r, double rho1, const ChannelGains& g, const SystemParams& p);

// Bisection to |hi-lo| < tol given a sign change; nullopt otherwise.
std::optional<double> bisect(const std::function<double(double)>& f,
                             double lo, double hi,
                             double tol = 1e-12, int max_iter = 200);

// All sign-change roots on [lo, hi] found by a uniform scan.
std::vector<double> scan_roots(const std::function<double(double)>& f,
                               double lo, double hi, int pieces = 96);

enum class RootTarget { G1_network, G2_relay, G2_source };

struct RootProblem {
    RootTarget target = RootTarget::G1_network;
    double r = 0.0;
    ChannelGains g;
    SystemParams p;
};

// rho1* in [0, 1/theta] for the requested equation; nullopt when no root
// exists (the matching threshold is +infinity). Throws DegenerateChannel
// when gs <= gd.
std::optional<double> solve_root(const RootProblem& rp);

struct Thresholds {
    double r_n = 0.0;      // network split threshold (may be +inf)
    double r_n_max = 0.0;  // interior network family budget boundary
    double r_r1 = 0.0;     // direct-link capacity
    double r_r2 = 0.0;     // relay-scheme split threshold (may be +inf)
    double r_s1 = 0.0;
    double r_s2 = 0.0;
    double r_b = 0.0;
    double r_c = 0.0;
};

}  // namespace relay
