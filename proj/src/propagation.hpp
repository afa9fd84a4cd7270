#pragma once
#include <array>
#include <cstdint>
#include <stdexcept>
#include <string>

#include "core.hpp"

namespace relay {

struct NonPositiveDistance : std::domain_error {
    NonPositiveDistance() : std::domain_error("link distance must be positive") {}
};

enum class LinkScenario { B1_SR, C2_SD, B5f_RD };

// WINNER-style path-loss row: PL = A log10(d[m]) + B + C log10(fc[GHz]/5) + chi.
struct LinkModel {
    double a = 0.0;
    double b = 0.0;
    double c = 0.0;
    double sigma2 = 0.0;          // shadowing variance, dB^2
    LinkScenario scenario = LinkScenario::B1_SR;
};

struct PropagationConfig {
    LinkModel sr{22.7, 41.0, 20.0, 3.0, LinkScenario::B1_SR};
    LinkModel sd{26.0, 39.0, 20.0, 4.0, LinkScenario::C2_SD};
    LinkModel rd{23.5, 57.5, 23.0, 8.0, LinkScenario::B5f_RD};
    double d_sr = 70.0;   // default per-link distances, m
    double d_sd = 100.0;
    double d_rd = 30.0;
    // When set, the sigma2 column is read as a standard deviation in dB
    // instead of a variance (sensitivity runs only).
    bool sigma_is_stddev = false;

    double stddev_db(const LinkModel& lm) const {
        return sigma_is_stddev ? lm.sigma2 : std::sqrt(lm.sigma2);
    }
};

// Parses key=value lines (keys link.{sr,sd,rd}.{A,B,C,sigma2,d} and
// shadow.sigma_is_stddev); '#' starts a comment. Throws std::runtime_error
// with a line diagnostic on malformed input or unknown keys.
PropagationConfig load_config(const std::string& path);
PropagationConfig parse_config_text(const std::string& text, PropagationConfig base = {});

double pathloss_db(const LinkModel& lm, double d_m, double fc_ghz);
double link_gain(const LinkModel& lm, double d_m, double fc_ghz, double shadow_db);

struct Geometry {
    double source_x = 0.0, source_y = 0.0;
    double relay_x = 0.0, relay_y = 0.0;
    double dest_x = 28.284271247461902;  // 20*sqrt(2), so that d_rd = 30 m
    double dest_y = 0.0;
    double dest_height_offset = 10.0;
};

struct LinkDistances {
    double sr = 0.0, sd = 0.0, rd = 0.0;
};

// Source and relay at street level, destination elevated. Distances are
// clamped below at 1 m so lattice cells may coincide with a node.
LinkDistances distances_from_geometry(const Geometry& geo);

// Counter-based generator (splitmix64) feeding a Box-Muller normal; the
// seed-to-sample mapping is part of the artifact's stable behavior.
struct Rng {
    std::uint64_t state;
    explicit Rng(std::uint64_t seed) : state(seed) {}
    std::uint64_t next() {
        state += 0x9E3779B97F4A7C15ULL;
        std::uint64_t z = state;
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }
    double uniform01() { return double(next() >> 11) * 0x1.0p-53; }
    double normal() {
        const double u1 = 1.0 - uniform01();  // (0, 1]
        const double u2 = uniform01();
        return std::sqrt(-2.0 * std::log(u1)) * std::cos(6.283185307179586477 * u2);
    }
};

// Decorrelated per-trial seed stream.
inline std::uint64_t derive_seed(std::uint64_t base, std::uint64_t index) {
    Rng r(base ^ (0xD1B54A32D192ED03ULL * (index + 1)));
    return r.next();
}

ChannelGains sample_channel(const PropagationConfig& cfg, const LinkDistances& d,
                            double fc_ghz, std::uint64_t seed, bool with_shadowing);
ChannelGains sample_channel(const PropagationConfig& cfg, const Geometry& geo,
                            double fc_ghz, std::uint64_t seed, bool with_shadowing);

}  // namespace relay
