/* relayee — half-duplex decode-forward relay channel, energy-optimal power
 * allocation (network / relay / source / generalized), brute-force verifiers,
 * WINNER-style propagation sampling and Monte Carlo drivers.
 *
 * All functions return RELAYEE_OK (0) on success or a negative error code;
 * outage is an in-band result (see relayee_result.outage), not an error.
 * Thread-safe: no global mutable state apart from the error-message slot,
 * which is thread-local.
 */
#ifndef RELAYEE_H
#define RELAYEE_H

#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

#define RELAYEE_API __attribute__((visibility("default")))

enum relayee_status {
    RELAYEE_OK = 0,
    RELAYEE_EINVAL = -1,   /* invalid argument */
    RELAYEE_EIO = -2,      /* file not readable/writable or malformed */
    RELAYEE_EDEGENERATE = -3, /* gs <= gd where a relayed quantity was requested */
    RELAYEE_EINTERNAL = -4
};

enum relayee_scheme {
    RELAYEE_SCHEME_NEE = 0,
    RELAYEE_SCHEME_REE = 1,
    RELAYEE_SCHEME_SEE = 2,
    RELAYEE_SCHEME_GEE = 3,
    RELAYEE_SCHEME_DIRECT = 4,
    RELAYEE_SCHEME_TWOHOP = 5
};

enum relayee_subscheme {
    RELAYEE_SUB_AN = 0, RELAYEE_SUB_BN = 1, RELAYEE_SUB_EN = 2,
    RELAYEE_SUB_AR = 3, RELAYEE_SUB_BR = 4, RELAYEE_SUB_CR = 5, RELAYEE_SUB_ER = 6,
    RELAYEE_SUB_AS = 7, RELAYEE_SUB_BS = 8, RELAYEE_SUB_CS = 9, RELAYEE_SUB_DS = 10,
    RELAYEE_SUB_ES = 11,
    RELAYEE_SUB_DIRECT = 12, RELAYEE_SUB_TWOHOP = 13, RELAYEE_SUB_OUTAGE = 14
};

enum relayee_objective {
    RELAYEE_OBJ_NETWORK = 0,
    RELAYEE_OBJ_RELAY = 1,
    RELAYEE_OBJ_SOURCE = 2
};

typedef struct relayee_gains {
    double gs;  /* |h_s|^2, source->relay */
    double gd;  /* |h_d|^2, source->destination */
    double gr;  /* |h_r|^2, relay->destination */
} relayee_gains;

typedef struct relayee_params {
    double ps;     /* source budget, W */
    double pr;     /* relay budget, W */
    double noise;  /* noise power, W */
    double theta;  /* first-phase fraction, in (0,1) */
} relayee_params;

typedef struct relayee_alloc {
    double eta1, rho1, eta2, rho2, rho_r;
} relayee_alloc;

typedef struct relayee_result {
    int subscheme;            /* relayee_subscheme */
    int outage;               /* nonzero when no feasible allocation */
    relayee_alloc alloc;
    double i1, i2;            /* achieved rate constraints, b/s/Hz */
    double source_energy;     /* time-normalized consumed power, W */
    double relay_energy;
    double phase1_energy;
    double phase2_energy;
} relayee_result;

RELAYEE_API const char* relayee_version(void);
RELAYEE_API const char* relayee_subscheme_name(int subscheme);
/* Message for the most recent failing call on this thread. */
RELAYEE_API const char* relayee_last_error(void);

/* ---- core arithmetic ---- */
RELAYEE_API int relayee_rate_pair(const relayee_alloc* a, const relayee_gains* g,
                                  const relayee_params* p, double* i1, double* i2);
/* out = {source, relay, phase1, phase2} consumed power, W */
RELAYEE_API int relayee_consumed(const relayee_alloc* a, const relayee_params* p,
                                 double out[4]);
RELAYEE_API int relayee_is_feasible(const relayee_alloc* a, const relayee_params* p,
                                    int* feasible);

/* ---- allocation schemes ---- */
RELAYEE_API int relayee_allocate(int scheme, double rate, const relayee_gains* g,
                                 const relayee_params* p, relayee_result* out);

/* Largest achievable rate; limiting receives the boundary sub-scheme. */
RELAYEE_API int relayee_r_max(const relayee_gains* g, const relayee_params* p,
                              double* value, int* limiting);
/* Budget boundary of the interior network-energy family (needs gs > gd). */
RELAYEE_API int relayee_r_n_max(const relayee_gains* g, const relayee_params* p,
                                double* value);
/* out = {r_n, r_n_max, r_r1, r_r2, r_s1, r_s2, r_b, r_c}; +inf encodes a
 * threshold whose defining root does not exist. Needs gs > gd. */
RELAYEE_API int relayee_thresholds(const relayee_gains* g, const relayee_params* p,
                                   double rate, double out[8]);

/* ---- brute-force verifiers ---- */
/* found=0 and *energy untouched when the rate is infeasible. grid >= 16. */
RELAYEE_API int relayee_oracle_min_energy(int objective, double rate,
                                          const relayee_gains* g,
                                          const relayee_params* p, int grid,
                                          int threads, int* found, double* energy,
                                          relayee_alloc* alloc);
RELAYEE_API int relayee_oracle_max_rate(const relayee_gains* g,
                                        const relayee_params* p, int grid,
                                        int threads, double* rate,
                                        relayee_alloc* alloc);

/* ---- propagation ---- */
typedef struct relayee_linkcfg relayee_linkcfg;  /* opaque */

enum relayee_link { RELAYEE_LINK_SR = 0, RELAYEE_LINK_SD = 1, RELAYEE_LINK_RD = 2 };

/* Table-II defaults (B1/C2/B5f rows, d = 70/100/30 m). */
RELAYEE_API relayee_linkcfg* relayee_linkcfg_create(void);
RELAYEE_API void relayee_linkcfg_destroy(relayee_linkcfg* cfg);
/* Key=value overrides: link.{sr,sd,rd}.{A,B,C,sigma2,d}, shadow.sigma_is_stddev. */
RELAYEE_API int relayee_linkcfg_load(relayee_linkcfg* cfg, const char* path);
RELAYEE_API int relayee_linkcfg_set(relayee_linkcfg* cfg, const char* key, double value);

RELAYEE_API int relayee_pathloss_db(const relayee_linkcfg* cfg, int link, double d_m,
                                    double fc_ghz, double* out_db);
/* Gains at the configured per-link distances; identical seed, identical gains. */
RELAYEE_API int relayee_sample_channel(const relayee_linkcfg* cfg, double fc_ghz,
                                       uint64_t seed, int with_shadowing,
                                       relayee_gains* out);
/* Gains with the source at (x, y); relay at the origin, destination at
 * (20*sqrt(2), 0) with a 10 m height offset. */
RELAYEE_API int relayee_sample_channel_at(const relayee_linkcfg* cfg, double src_x,
                                          double src_y, double fc_ghz, uint64_t seed,
                                          int with_shadowing, relayee_gains* out);

/* ---- experiment drivers ---- */
typedef struct relayee_sweep_row {
    int scheme;
    double rate;
    relayee_result res;
} relayee_sweep_row;

/* schemes: comma-separated list ("gee,direct,twohop"). rows must hold
 * n_schemes * n_rates entries; *n_rows receives the count. */
RELAYEE_API int relayee_sweep(const char* schemes, const double* rates, int n_rates,
                              const relayee_gains* g, const relayee_params* p,
                              relayee_sweep_row* rows, int* n_rows);

RELAYEE_API int relayee_montecarlo(const relayee_linkcfg* cfg, int scheme, double rate,
                                   const relayee_params* p, double fc_ghz,
                                   int use_position, double src_x, double src_y,
                                   int64_t trials, uint64_t seed, int with_shadowing,
                                   int threads, double* mean_energy,
                                   double* outage_prob);

typedef struct relayee_heatmap_cell {
    double x, y;
    double gain_db;
    double outage_reduction;  /* percentage points */
    double p_out_ref, p_out_gee;
    double mean_e_ref, mean_e_gee;
} relayee_heatmap_cell;

/* cells must hold nx*ny entries; row-major, y outer. theta defaults to the
 * value in p (equal time division in the reference experiment). */
RELAYEE_API int relayee_heatmap(const relayee_linkcfg* cfg, double rate,
                                const relayee_params* p, double fc_ghz,
                                double x0, double x1, int nx,
                                double y0, double y1, int ny,
                                int64_t trials, uint64_t seed, int threads,
                                relayee_heatmap_cell* cells);

#ifdef __cplusplus
}
#endif

#endif /* RELAYEE_H */
