#include "propagation.hpp"

#include <atomic>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace relay {

double pathloss_db(const LinkModel& lm, double d_m, double fc_ghz) {
    if (!(d_m > 0.0)) throw NonPositiveDistance();
    static std::atomic<bool> warned{false};
    if ((fc_ghz < 2.0 || fc_ghz > 6.0) && !warned.exchange(true))
        std::fprintf(stderr, "relayee: note: fc=%g GHz outside the 2-6 GHz model range\n", fc_ghz);
    return lm.a * std::log10(d_m) + lm.b + lm.c * std::log10(fc_ghz / 5.0);
}

double link_gain(const LinkModel& lm, double d_m, double fc_ghz, double shadow_db) {
    return std::pow(10.0, -(pathloss_db(lm, d_m, fc_ghz) + shadow_db) / 10.0);
}

LinkDistances distances_from_geometry(const Geometry& geo) {
    const double h = geo.dest_height_offset;
    LinkDistances d;
    d.sr = std::hypot(geo.source_x - geo.relay_x, geo.source_y - geo.relay_y);
    d.sd = std::sqrt((geo.source_x - geo.dest_x) * (geo.source_x - geo.dest_x)
                   + (geo.source_y - geo.dest_y) * (geo.source_y - geo.dest_y) + h * h);
    d.rd = std::sqrt((geo.relay_x - geo.dest_x) * (geo.relay_x - geo.dest_x)
                   + (geo.relay_y - geo.dest_y) * (geo.relay_y - geo.dest_y) + h * h);
    d.sr = std::max(d.sr, 1.0);
    d.sd = std::max(d.sd, 1.0);
    d.rd = std::max(d.rd, 1.0);
    return d;
}

ChannelGains sample_channel(const PropagationConfig& cfg, const LinkDistances& d,
                            double fc_ghz, std::uint64_t seed, bool with_shadowing) {
    Rng rng(seed);
    double x_sr = 0.0, x_sd = 0.0, x_rd = 0.0;
    if (with_shadowing) {
        x_sr = rng.normal() * cfg.stddev_db(cfg.sr);
        x_sd = rng.normal() * cfg.stddev_db(cfg.sd);
        x_rd = rng.normal() * cfg.stddev_db(cfg.rd);
    }
    ChannelGains g;
    g.gs = link_gain(cfg.sr, d.sr, fc_ghz, x_sr);
    g.gd = link_gain(cfg.sd, d.sd, fc_ghz, x_sd);
    g.gr = link_gain(cfg.rd, d.rd, fc_ghz, x_rd);
    return g;
}

ChannelGains sample_channel(const PropagationConfig& cfg, const Geometry& geo,
                            double fc_ghz, std::uint64_t seed, bool with_shadowing) {
    return sample_channel(cfg, distances_from_geometry(geo), fc_ghz, seed, with_shadowing);
}

namespace {
std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return "";
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}
}  // namespace

PropagationConfig parse_config_text(const std::string& text, PropagationConfig base) {
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        line = trim(line);
        if (line.empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw std::runtime_error("config line " + std::to_string(lineno) + ": expected key=value");
        const std::string key = trim(line.substr(0, eq));
        const std::string val = trim(line.substr(eq + 1));
        char* end = nullptr;
        const double v = std::strtod(val.c_str(), &end);
        if (end == val.c_str() || *end != '\0')
            throw std::runtime_error("config line " + std::to_string(lineno) + ": bad number '" + val + "'");
        auto set_link = [&](LinkModel& lm, double& dist, const std::string& field) -> bool {
            if (field == "A") lm.a = v;
            else if (field == "B") lm.b = v;
            else if (field == "C") lm.c = v;
            else if (field == "sigma2") lm.sigma2 = v;
            else if (field == "d") dist = v;
            else return false;
            return true;
        };
        bool ok = false;
        if (key.rfind("link.sr.", 0) == 0) ok = set_link(base.sr, base.d_sr, key.substr(8));
        else if (key.rfind("link.sd.", 0) == 0) ok = set_link(base.sd, base.d_sd, key.substr(8));
        else if (key.rfind("link.rd.", 0) == 0) ok = set_link(base.rd, base.d_rd, key.substr(8));
        else if (key == "shadow.sigma_is_stddev") { base.sigma_is_stddev = v != 0.0; ok = true; }
        if (!ok)
            throw std::runtime_error("config line " + std::to_string(lineno) + ": unknown key '" + key + "'");
    }
    return base;
}

PropagationConfig load_config(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw std::runtime_error("cannot open config file '" + path + "'");
    std::ostringstream ss;
    ss << f.rdbuf();
    return parse_config_text(ss.str());
}

}  // namespace relay
