#pragma once
#include "core.hpp"
#include "roots.hpp"

namespace relay {

// Minimum total (source + relay) consumption at rate r, budgets respected but
// never saturated on purpose; Outage once the interior family leaves the
// budget polytope. Sub-schemes: An (split message), Bn (full decode-forward),
// En (full DF with the relay-decode constraint slack), Direct for gs <= gd.
SchemeResult n_ee_allocate(double r, const ChannelGains& g, const SystemParams& p);

// Minimum relay consumption; the source spends its full budget whenever the
// relay transmits. Sub-schemes: Cr (direct), Ar / Br / Er.
SchemeResult r_ee_allocate(double r, const ChannelGains& g, const SystemParams& p);

// Minimum source consumption; the relay helps up to full power and is then
// reduced to the minimum required. Sub-schemes: Ds, Cs, Bs, As, Es.
SchemeResult s_ee_allocate(double r, const ChannelGains& g, const SystemParams& p);

// Every threshold the three algorithms branch on, evaluated at rate r.
Thresholds thresholds(const ChannelGains& g, const SystemParams& p, double r);

namespace detail {
// Shared sub-scheme constructions, exposed for the generalized scheme and tests.
Allocation alloc_An(double r, double rho1, const ChannelGains& g, const SystemParams& p);
Allocation alloc_Bn(double r, double rho1, const ChannelGains& g, const SystemParams& p);
double rho1_full_df(double r, const ChannelGains& g, const SystemParams& p);
double rho1_saturated_network(double r, const ChannelGains& g, const SystemParams& p);
double eta2_needed(double r, double rho1, const ChannelGains& g, const SystemParams& p);
// Best allocation on the source-budget-saturated manifold (relay minimal), or
// outage; used by both r_ee_allocate and the generalized scheme.
SchemeResult relay_min_saturated(double r, const ChannelGains& g, const SystemParams& p);
// Best allocation with the relay capped at full power (source minimal).
SchemeResult source_min_relaycapped(double r, const ChannelGains& g, const SystemParams& p);
}  // namespace detail

}  // namespace relay
