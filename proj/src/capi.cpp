#include "relayee.h"

#include <cstring>
#include <new>
#include <string>

#include "allocators.hpp"
#include "baselines.hpp"
#include "gee.hpp"
#include "oracle.hpp"
#include "propagation.hpp"
#include "simkit.hpp"
#include "version.hpp"

namespace {

thread_local std::string g_last_error;

int fail(int code, const char* msg) {
    g_last_error = msg;
    return code;
}

relay::ChannelGains to_gains(const relayee_gains& g) { return {g.gs, g.gd, g.gr}; }
relay::SystemParams to_params(const relayee_params& p) { return {p.ps, p.pr, p.noise, p.theta}; }
relay::Allocation to_alloc(const relayee_alloc& a) { return {a.eta1, a.rho1, a.eta2, a.rho2, a.rho_r}; }

relayee_alloc from_alloc(const relay::Allocation& a) {
    return {a.eta1, a.rho1, a.eta2, a.rho2, a.rho_r};
}

relayee_result from_result(const relay::SchemeResult& r) {
    relayee_result out{};
    out.subscheme = static_cast<int>(r.subscheme);
    out.outage = r.outage() ? 1 : 0;
    out.alloc = from_alloc(r.alloc);
    out.i1 = r.rates.i1;
    out.i2 = r.rates.i2;
    out.source_energy = r.source_energy;
    out.relay_energy = r.relay_energy;
    out.phase1_energy = r.phase1_energy;
    out.phase2_energy = r.phase2_energy;
    return out;
}

bool check(const relayee_gains* g, const relayee_params* p) {
    return g && p && to_gains(*g).valid() && to_params(*p).valid();
}

template <typename F>
int guarded(F&& f) {
    try {
        return f();
    } catch (const relay::DegenerateChannel& e) {
        return fail(RELAYEE_EDEGENERATE, e.what());
    } catch (const std::exception& e) {
        return fail(RELAYEE_EINTERNAL, e.what());
    }
}

}  // namespace

struct relayee_linkcfg {
    relay::PropagationConfig cfg;
};

extern "C" {

const char* relayee_version(void) { return relay::kVersion; }

const char* relayee_subscheme_name(int subscheme) {
    if (subscheme < 0 || subscheme > static_cast<int>(relay::SubScheme::Outage)) return "?";
    return relay::to_string(static_cast<relay::SubScheme>(subscheme));
}

const char* relayee_last_error(void) { return g_last_error.c_str(); }

int relayee_rate_pair(const relayee_alloc* a, const relayee_gains* g,
                      const relayee_params* p, double* i1, double* i2) {
    if (!a || !i1 || !i2 || !check(g, p)) return fail(RELAYEE_EINVAL, "bad argument");
    const relay::RatePair rp = relay::rate_pair(to_alloc(*a), to_gains(*g), to_params(*p));
    *i1 = rp.i1;
    *i2 = rp.i2;
    return RELAYEE_OK;
}

int relayee_consumed(const relayee_alloc* a, const relayee_params* p, double out[4]) {
    if (!a || !p || !out || !to_params(*p).valid()) return fail(RELAYEE_EINVAL, "bad argument");
    const relay::Consumed c = relay::consumed(to_alloc(*a), to_params(*p));
    out[0] = c.source;
    out[1] = c.relay;
    out[2] = c.phase1;
    out[3] = c.phase2;
    return RELAYEE_OK;
}

int relayee_is_feasible(const relayee_alloc* a, const relayee_params* p, int* feasible) {
    if (!a || !p || !feasible || !to_params(*p).valid()) return fail(RELAYEE_EINVAL, "bad argument");
    *feasible = relay::is_feasible(to_alloc(*a), to_params(*p)) ? 1 : 0;
    return RELAYEE_OK;
}

int relayee_allocate(int scheme, double rate, const relayee_gains* g,
                     const relayee_params* p, relayee_result* out) {
    if (!out || !check(g, p) || !(rate > 0.0) || scheme < 0 || scheme > RELAYEE_SCHEME_TWOHOP)
        return fail(RELAYEE_EINVAL, "bad argument");
    return guarded([&] {
        const relay::SchemeResult r =
            relay::evaluate(static_cast<relay::Scheme>(scheme), rate, to_gains(*g), to_params(*p));
        *out = from_result(r);
        return RELAYEE_OK;
    });
}

int relayee_r_max(const relayee_gains* g, const relayee_params* p, double* value,
                  int* limiting) {
    if (!value || !check(g, p)) return fail(RELAYEE_EINVAL, "bad argument");
    return guarded([&] {
        const relay::MaxRate m = relay::r_max(to_gains(*g), to_params(*p));
        *value = m.value;
        if (limiting) *limiting = static_cast<int>(m.limiting);
        return RELAYEE_OK;
    });
}

int relayee_r_n_max(const relayee_gains* g, const relayee_params* p, double* value) {
    if (!value || !check(g, p)) return fail(RELAYEE_EINVAL, "bad argument");
    return guarded([&] {
        *value = relay::r_n_max(to_gains(*g), to_params(*p));
        return RELAYEE_OK;
    });
}

int relayee_thresholds(const relayee_gains* g, const relayee_params* p, double rate,
                       double out[8]) {
    if (!out || !check(g, p) || !(rate > 0.0)) return fail(RELAYEE_EINVAL, "bad argument");
    return guarded([&] {
        const relay::Thresholds t = relay::thresholds(to_gains(*g), to_params(*p), rate);
        out[0] = t.r_n;
        out[1] = t.r_n_max;
        out[2] = t.r_r1;
        out[3] = t.r_r2;
        out[4] = t.r_s1;
        out[5] = t.r_s2;
        out[6] = t.r_b;
        out[7] = t.r_c;
        return RELAYEE_OK;
    });
}

int relayee_oracle_min_energy(int objective, double rate, const relayee_gains* g,
                              const relayee_params* p, int grid, int threads,
                              int* found, double* energy, relayee_alloc* alloc) {
    if (!found || !energy || !check(g, p) || !(rate > 0.0) || grid < 16 ||
        objective < 0 || objective > RELAYEE_OBJ_SOURCE)
        return fail(RELAYEE_EINVAL, "bad argument");
    return guarded([&] {
        const auto r = relay::oracle_min_energy(static_cast<relay::Objective>(objective),
                                                rate, to_gains(*g), to_params(*p), grid, threads);
        *found = r.has_value() ? 1 : 0;
        if (r) {
            *energy = r->value;
            if (alloc) *alloc = from_alloc(r->alloc);
        }
        return RELAYEE_OK;
    });
}

int relayee_oracle_max_rate(const relayee_gains* g, const relayee_params* p, int grid,
                            int threads, double* rate, relayee_alloc* alloc) {
    if (!rate || !check(g, p) || grid < 16) return fail(RELAYEE_EINVAL, "bad argument");
    return guarded([&] {
        const relay::OracleResult r = relay::oracle_max_rate(to_gains(*g), to_params(*p), grid, threads);
        *rate = r.value;
        if (alloc) *alloc = from_alloc(r.alloc);
        return RELAYEE_OK;
    });
}

relayee_linkcfg* relayee_linkcfg_create(void) {
    return new (std::nothrow) relayee_linkcfg{};
}

void relayee_linkcfg_destroy(relayee_linkcfg* cfg) { delete cfg; }

int relayee_linkcfg_load(relayee_linkcfg* cfg, const char* path) {
    if (!cfg || !path) return fail(RELAYEE_EINVAL, "bad argument");
    try {
        cfg->cfg = relay::load_config(path);
        return RELAYEE_OK;
    } catch (const std::exception& e) {
        return fail(RELAYEE_EIO, e.what());
    }
}

int relayee_linkcfg_set(relayee_linkcfg* cfg, const char* key, double value) {
    if (!cfg || !key) return fail(RELAYEE_EINVAL, "bad argument");
    try {
        char line[128];
        std::snprintf(line, sizeof line, "%s=%.17g", key, value);
        cfg->cfg = relay::parse_config_text(line, cfg->cfg);
        return RELAYEE_OK;
    } catch (const std::exception& e) {
        return fail(RELAYEE_EINVAL, e.what());
    }
}

int relayee_pathloss_db(const relayee_linkcfg* cfg, int link, double d_m, double fc_ghz,
                        double* out_db) {
    if (!cfg || !out_db || link < 0 || link > RELAYEE_LINK_RD)
        return fail(RELAYEE_EINVAL, "bad argument");
    const relay::LinkModel& lm = link == RELAYEE_LINK_SR   ? cfg->cfg.sr
                                 : link == RELAYEE_LINK_SD ? cfg->cfg.sd
                                                           : cfg->cfg.rd;
    try {
        *out_db = relay::pathloss_db(lm, d_m, fc_ghz);
        return RELAYEE_OK;
    } catch (const relay::NonPositiveDistance& e) {
        return fail(RELAYEE_EINVAL, e.what());
    }
}

int relayee_sample_channel(const relayee_linkcfg* cfg, double fc_ghz, uint64_t seed,
                           int with_shadowing, relayee_gains* out) {
    if (!cfg || !out) return fail(RELAYEE_EINVAL, "bad argument");
    return guarded([&] {
        const relay::LinkDistances d{cfg->cfg.d_sr, cfg->cfg.d_sd, cfg->cfg.d_rd};
        const relay::ChannelGains g =
            relay::sample_channel(cfg->cfg, d, fc_ghz, seed, with_shadowing != 0);
        *out = {g.gs, g.gd, g.gr};
        return RELAYEE_OK;
    });
}

int relayee_sample_channel_at(const relayee_linkcfg* cfg, double src_x, double src_y,
                              double fc_ghz, uint64_t seed, int with_shadowing,
                              relayee_gains* out) {
    if (!cfg || !out) return fail(RELAYEE_EINVAL, "bad argument");
    return guarded([&] {
        relay::Geometry geo;
        geo.source_x = src_x;
        geo.source_y = src_y;
        const relay::ChannelGains g =
            relay::sample_channel(cfg->cfg, geo, fc_ghz, seed, with_shadowing != 0);
        *out = {g.gs, g.gd, g.gr};
        return RELAYEE_OK;
    });
}

int relayee_sweep(const char* schemes, const double* rates, int n_rates,
                  const relayee_gains* g, const relayee_params* p,
                  relayee_sweep_row* rows, int* n_rows) {
    if (!schemes || !rates || n_rates <= 0 || !rows || !n_rows || !check(g, p))
        return fail(RELAYEE_EINVAL, "bad argument");
    std::vector<relay::Scheme> list;
    std::string tok;
    for (const char* c = schemes;; ++c) {
        if (*c == ',' || *c == '\0') {
            if (!tok.empty()) {
                relay::Scheme s;
                if (!relay::scheme_from_string(tok, s))
                    return fail(RELAYEE_EINVAL, "unknown scheme in list");
                list.push_back(s);
                tok.clear();
            }
            if (*c == '\0') break;
        } else {
            tok += *c;
        }
    }
    if (list.empty()) return fail(RELAYEE_EINVAL, "empty scheme list");
    return guarded([&] {
        const std::vector<double> grid(rates, rates + n_rates);
        const auto out = relay::sweep_rate(list, grid, to_gains(*g), to_params(*p));
        for (size_t i = 0; i < out.size(); ++i) {
            rows[i].scheme = static_cast<int>(out[i].scheme);
            rows[i].rate = out[i].rate;
            rows[i].res = from_result(out[i].res);
        }
        *n_rows = static_cast<int>(out.size());
        return RELAYEE_OK;
    });
}

int relayee_montecarlo(const relayee_linkcfg* cfg, int scheme, double rate,
                       const relayee_params* p, double fc_ghz, int use_position,
                       double src_x, double src_y, int64_t trials, uint64_t seed,
                       int with_shadowing, int threads, double* mean_energy,
                       double* outage_prob) {
    if (!cfg || !p || !mean_energy || !outage_prob || trials < 1 || !(rate > 0.0) ||
        scheme < 0 || scheme > RELAYEE_SCHEME_TWOHOP || !to_params(*p).valid())
        return fail(RELAYEE_EINVAL, "bad argument");
    return guarded([&] {
        relay::MonteCarloJob job;
        job.scheme = static_cast<relay::Scheme>(scheme);
        job.rate = rate;
        job.params = to_params(*p);
        job.cfg = cfg->cfg;
        job.dist = {cfg->cfg.d_sr, cfg->cfg.d_sd, cfg->cfg.d_rd};
        if (use_position) {
            job.use_geometry = true;
            job.geo.source_x = src_x;
            job.geo.source_y = src_y;
        }
        job.fc_ghz = fc_ghz;
        job.with_shadowing = with_shadowing != 0;
        job.trials = trials;
        job.seed = seed;
        job.threads = threads;
        const relay::MonteCarloStats st = relay::monte_carlo(job);
        *mean_energy = st.mean_energy;
        *outage_prob = st.outage_prob;
        return RELAYEE_OK;
    });
}

int relayee_heatmap(const relayee_linkcfg* cfg, double rate, const relayee_params* p,
                    double fc_ghz, double x0, double x1, int nx, double y0, double y1,
                    int ny, int64_t trials, uint64_t seed, int threads,
                    relayee_heatmap_cell* cells) {
    if (!cfg || !p || !cells || nx < 1 || ny < 1 || trials < 1 || !(rate > 0.0) ||
        !to_params(*p).valid())
        return fail(RELAYEE_EINVAL, "bad argument");
    return guarded([&] {
        relay::HeatmapSpec spec;
        spec.x0 = x0;
        spec.x1 = x1;
        spec.nx = nx;
        spec.y0 = y0;
        spec.y1 = y1;
        spec.ny = ny;
        spec.rate = rate;
        spec.params = to_params(*p);
        spec.cfg = cfg->cfg;
        spec.fc_ghz = fc_ghz;
        spec.trials = trials;
        spec.seed = seed;
        spec.threads = threads;
        const auto out = relay::heatmap(spec);
        for (size_t i = 0; i < out.size(); ++i) {
            cells[i] = {out[i].x, out[i].y, out[i].gain_db, out[i].outage_reduction,
                        out[i].p_out_ref, out[i].p_out_gee, out[i].mean_e_ref,
                        out[i].mean_e_gee};
        }
        return RELAYEE_OK;
    });
}

}  // extern "C"
