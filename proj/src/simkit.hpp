#pragma once
#include <cstdint>
#include <string>
#include <vector>

#include "core.hpp"
#include "propagation.hpp"

namespace relay {

enum class Scheme { NEE, REE, SEE, GEE, Direct, TwoHop };

const char* to_string(Scheme s);
bool scheme_from_string(const std::string& name, Scheme& out);

SchemeResult evaluate(Scheme s, double r, const ChannelGains& g, const SystemParams& p);

struct SweepRow {
    Scheme scheme;
    double rate;
    SchemeResult res;
};

// One row per (scheme, rate); outage stays in-band.
std::vector<SweepRow> sweep_rate(const std::vector<Scheme>& schemes,
                                 const std::vector<double>& r_grid,
                                 const ChannelGains& g, const SystemParams& p);

struct MonteCarloStats {
    double mean_energy = 0.0;  // over non-outage trials
    double outage_prob = 0.0;
    std::int64_t trials = 0;
};

struct MonteCarloJob {
    Scheme scheme = Scheme::GEE;
    double rate = 1.0;
    SystemParams params;
    PropagationConfig cfg;
    LinkDistances dist;          // ignored when use_geometry is set
    Geometry geo;
    bool use_geometry = false;
    double fc_ghz = 3.5;
    bool with_shadowing = true;
    std::int64_t trials = 1;
    std::uint64_t seed = 0;
    int threads = 0;
};

MonteCarloStats monte_carlo(const MonteCarloJob& job);

struct HeatmapSpec {
    double x0 = -120.0, x1 = 100.0;
    int nx = 41;
    double y0 = -120.0, y1 = 120.0;
    int ny = 41;
    double rate = 1.0;
    SystemParams params;
    PropagationConfig cfg;
    Geometry geo;                // relay/destination placement; source varies
    double fc_ghz = 3.5;
    std::int64_t trials = 2000;
    std::uint64_t seed = 0;
    int threads = 0;
};

struct HeatmapCell {
    double x = 0.0, y = 0.0;
    double gain_db = 0.0;           // reference-over-generalized energy gain
    double outage_reduction = 0.0;  // percentage points
    double p_out_ref = 0.0;
    double p_out_gee = 0.0;
    double mean_e_ref = 0.0;
    double mean_e_gee = 0.0;
};

// Row-major cells (y outer, x inner). The reference combined scheme picks the
// baseline with the smaller required energy per realization; its delivered
// energy average uses the cheapest feasible baseline.
std::vector<HeatmapCell> heatmap(const HeatmapSpec& spec);

}  // namespace relay
