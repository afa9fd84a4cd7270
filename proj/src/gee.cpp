#include "gee.hpp"

#include <cmath>

#include "allocators.hpp"
#include "baselines.hpp"
#include "roots.hpp"

namespace relay {

double rate_search_cap(const ChannelGains& g, const SystemParams& p) {
    return std::log2(1.0 + (p.ps * (g.gs + g.gd) + p.pr * g.gr) / p.n) + 8.0;
}

SchemeResult g_ee_allocate(double r, const ChannelGains& g, const SystemParams& p) {
    if (!(r > 0.0) || !g.valid() || !p.valid()) return outage_result();
    if (g.gs <= g.gd) return direct_tx(r, g, p);
    SchemeResult best = n_ee_allocate(r, g, p);
    for (SchemeResult cand : {detail::relay_min_saturated(r, g, p),
                              detail::source_min_relaycapped(r, g, p)}) {
        if (cand.outage()) continue;
        if (best.outage() || cand.total_energy() < best.total_energy() - 1e-15)
            best = cand;
    }
    return best;
}

MaxRate r_max(const ChannelGains& g, const SystemParams& p) {
    MaxRate out;
    if (!g.valid() || !p.valid()) return out;
    if (g.gs <= g.gd) {
        out.value = std::log2(1.0 + p.ps * g.gd / p.n);
        out.limiting = SubScheme::Direct;
        return out;
    }
    const double cap = rate_search_cap(g, p);
    const double rb = largest_feasible_rate(
        [&](double r) { return !s_ee_allocate(r, g, p).outage(); }, cap);
    const SchemeResult at = s_ee_allocate(rb * (1.0 - 1e-9), g, p);
    out.limiting = at.subscheme;
    switch (out.limiting) {
        case SubScheme::Ds:
            out.value = p.theta * std::log2(1.0 + p.ps * g.gs / (p.theta * p.n));
            break;
        case SubScheme::Cs:
            out.value = std::log2(p.theta + (g.gs / g.gd) * p.tbar() + p.ps * g.gs / p.n)
                      + p.tbar() * std::log2(g.gd / g.gs);
            break;
        default:
            out.value = rb;  // the remaining rows are rate-implicit
            break;
    }
    return out;
}

double r_n_max(const ChannelGains& g, const SystemParams& p) {
    if (!(g.gs > g.gd)) throw DegenerateChannel();
    return largest_feasible_rate(
        [&](double r) { return !n_ee_allocate(r, g, p).outage(); },
        rate_search_cap(g, p));
}

}  // namespace relay
