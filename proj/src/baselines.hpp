#pragma once
#include "core.hpp"

namespace relay {

// One-phase transmission over the direct link, power spread over both phases.
SchemeResult direct_tx(double r, const ChannelGains& g, const SystemParams& p);

// Classical routing: source -> relay in phase 1, relay -> destination in
// phase 2; the destination ignores the phase-1 signal.
SchemeResult two_hop(double r, const ChannelGains& g, const SystemParams& p);

}  // namespace relay
