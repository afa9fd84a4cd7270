#pragma once
#include <cmath>
#include <string>

namespace relay {

// Squared link gains |h|^2; only squared magnitudes enter the rate expressions.
struct ChannelGains {
    double gs = 0.0;  // source -> relay
    double gd = 0.0;  // source -> destination
    double gr = 0.0;  // relay -> destination
    bool valid() const {
        return std::isfinite(gs) && std::isfinite(gd) && std::isfinite(gr)
            && gs >= 0.0 && gd >= 0.0 && gr >= 0.0;
    }
};

struct SystemParams {
    double ps = 1.0;      // source power budget, W
    double pr = 1.0;      // relay power budget, W
    double n = 1.0;       // noise power, W
    double theta = 0.5;   // first-phase duration, in (0,1)
    double tbar() const { return 1.0 - theta; }
    bool valid() const {
        return ps > 0.0 && pr > 0.0 && n > 0.0 && theta > 0.0 && theta < 1.0
            && std::isfinite(ps) && std::isfinite(pr) && std::isfinite(n);
    }
};

// Power fractions. eta* carry the direct part, rho* the relayed part,
// rho_r is the relay's own fraction.
struct Allocation {
    double eta1 = 0.0;
    double rho1 = 0.0;
    double eta2 = 0.0;
    double rho2 = 0.0;
    double rho_r = 0.0;
};

struct RatePair {
    double i1 = 0.0;  // destination joint-decoding constraint, b/s/Hz
    double i2 = 0.0;  // relay decoding + direct-part constraint, b/s/Hz
};

enum class SubScheme {
    An, Bn, En,          // network-energy family
    Ar, Br, Cr, Er,      // relay-energy family
    As, Bs, Cs, Ds, Es,  // source-energy family
    Direct, TwoHop,
    Outage
};

const char* to_string(SubScheme s);

struct SchemeResult {
    SubScheme subscheme = SubScheme::Outage;
    Allocation alloc;
    RatePair rates;
    double source_energy = 0.0;   // time-normalized consumed power, W
    double relay_energy = 0.0;
    double phase1_energy = 0.0;
    double phase2_energy = 0.0;
    bool outage() const { return subscheme == SubScheme::Outage; }
    double total_energy() const { return source_energy + relay_energy; }
};

struct Consumed {
    double source = 0.0;
    double relay = 0.0;
    double phase1 = 0.0;
    double phase2 = 0.0;
};

// 2^x clamped so that threshold arithmetic never overflows to inf/nan.
inline double exp2s(double x) {
    if (x > 1000.0) return 1e300;
    if (x < -1000.0) return 0.0;
    return std::exp2(x);
}

RatePair rate_pair(const Allocation& a, const ChannelGains& g, const SystemParams& p);
Consumed consumed(const Allocation& a, const SystemParams& p);
bool is_feasible(const Allocation& a, const SystemParams& p);

// Fills rates and energies; marks Outage instead when infeasible.
SchemeResult make_result(SubScheme sub, const Allocation& a,
                         const ChannelGains& g, const SystemParams& p);
SchemeResult outage_result();

}  // namespace relay
