#pragma once
#include "core.hpp"

namespace relay {

// Generalized scheme: the budget-constrained network-energy optimum at every
// achievable rate. Continues past the interior N-EE range with the
// source-saturated (relay-energy) family or the relay-saturated
// (source-energy) family, whichever budget binds first.
SchemeResult g_ee_allocate(double r, const ChannelGains& g, const SystemParams& p);

struct MaxRate {
    double value = 0.0;
    SubScheme limiting = SubScheme::Outage;
};

// Largest achievable rate and the sub-scheme in force at the boundary.
MaxRate r_max(const ChannelGains& g, const SystemParams& p);

// Largest rate served by the interior (budget-unsaturated) network family;
// the seam at which the generalized scheme switches family. Throws
// DegenerateChannel when gs <= gd.
double r_n_max(const ChannelGains& g, const SystemParams& p);

// Bisection on feasibility of an arbitrary allocator, tolerance 1e-9 b/s/Hz.
template <typename Fn>
double largest_feasible_rate(Fn&& feasible_at, double rate_cap) {
    double lo = 0.0, hi = 1.0;
    while (hi < rate_cap && feasible_at(hi)) {
        lo = hi;
        hi *= 2.0;
    }
    for (int i = 0; i < 200 && hi - lo > 1e-9; ++i) {
        const double mid = 0.5 * (lo + hi);
        if (feasible_at(mid)) lo = mid; else hi = mid;
    }
    return lo;
}

double rate_search_cap(const ChannelGains& g, const SystemParams& p);

}  // namespace relay
