#pragma once
#include <optional>

#include "core.hpp"

namespace relay {

enum class Objective { Network, Relay, Source };

struct OracleResult {
    double value = 0.0;
    Allocation alloc;
};

// Brute-force verifier: grid over (rho1, eta2, rho2, rho_r) with eta1 = 0,
// combined with the complementary direct family (eta1 free, rho* = 0) that
// covers gs < gd, then coordinate-descent refinement with exact
// constraint-inversion completions. Independent of the closed-form schemes.
std::optional<OracleResult> oracle_min_energy(Objective obj, double r,
                                              const ChannelGains& g,
                                              const SystemParams& p,
                                              int grid = 64, int threads = 0);

// Maximum of min(I1, I2) over the budget polytope, same strategy.
OracleResult oracle_max_rate(const ChannelGains& g, const SystemParams& p,
                             int grid = 64, int threads = 0);

}  // namespace relay
