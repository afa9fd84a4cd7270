#include "baselines.hpp"

namespace relay {

SchemeResult direct_tx(double r, const ChannelGains& g, const SystemParams& p) {
    if (!(r > 0.0) || g.gd <= 0.0) return outage_result();
    const double eta = (exp2s(r) - 1.0) * p.n / (p.ps * g.gd);
    if (eta > 1.0 + 1e-9) return outage_result();
    Allocation a;
    a.eta1 = eta;
    a.eta2 = eta;
    return make_result(SubScheme::Direct, a, g, p);
}

SchemeResult two_hop(double r, const ChannelGains& g, const SystemParams& p) {
    if (!(r > 0.0) || g.gs <= 0.0 || g.gr <= 0.0) return outage_result();
    const double th = p.theta, tb = p.tbar();
    const double rho_s = (exp2s(r / th) - 1.0) * p.n / (p.ps * g.gs);
    const double rho_r = (exp2s(r / tb) - 1.0) * p.n / (p.pr * g.gr);
    if (rho_s > 1.0 / th + 1e-9 || rho_r > 1.0 / tb + 1e-9) return outage_result();
    Allocation a;
    a.rho1 = rho_s;
    a.rho_r = rho_r;
    SchemeResult res = make_result(SubScheme::TwoHop, a, g, p);
    if (res.outage()) return res;
    // The destination decodes from the relay signal alone, so the reported
    // rates are the two hop capacities, not the joint-decoding expressions.
    res.rates.i2 = th * std::log2(1.0 + rho_s * p.ps * g.gs / p.n);
    res.rates.i1 = tb * std::log2(1.0 + rho_r * p.pr * g.gr / p.n);
    return res;
}

}  // namespace relay
