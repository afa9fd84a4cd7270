#include "oracle.hpp"

#include <atomic>
#include <cmath>
#include <limits>
#include <vector>

#include "parallel.hpp"

namespace relay {
namespace {

constexpr double kRateSlack = 1e-9;
constexpr double kBudSlack = 1e-12;
const double kInf = std::numeric_limits<double>::infinity();

struct Best {
    double value = kInf;
    Allocation a;
    std::int64_t order = -1;  // tie-break so the result is thread-count independent
};

void take_min(Best& b, double v, const Allocation& a, std::int64_t order) {
    if (v < b.value || (v == b.value && order < b.order)) {
        b.value = v;
        b.a = a;
        b.order = order;
    }
}

// Smallest rho_r meeting I1 >= r given the rest; nullopt if unreachable.
std::optional<double> min_rhor(double r, double rho1, double e2, double r2,
                               const ChannelGains& g, const SystemParams& p) {
    const double rem = (r - p.theta * std::log2(1.0 + rho1 * p.ps * g.gd / p.n)) / p.tbar();
    if (rem <= 0.0) return 0.0;
    const double s2req = exp2s(rem) - 1.0;
    const double c = s2req - (e2 + r2) * p.ps * g.gd / p.n;
    if (c <= 0.0) return 0.0;
    if (p.pr * g.gr <= 0.0) return std::nullopt;
    const double x = std::sqrt(p.ps * g.gd * r2 / p.n);
    const double t = -x + std::sqrt(x * x + c);
    return t * t * p.n / (p.pr * g.gr);
}

// Smallest eta2 meeting I2 >= r given rho1 (eta1 = 0); may be +inf.
double min_eta2(double r, double rho1, const ChannelGains& g, const SystemParams& p) {
    const double rem = (r - p.theta * std::log2(1.0 + rho1 * p.ps * g.gs / p.n)) / p.tbar();
    if (rem <= 0.0) return 0.0;
    if (g.gd <= 0.0) return kInf;
    return (exp2s(rem) - 1.0) * p.n / (p.ps * g.gd);
}

double weight_s(Objective o) { return o == Objective::Relay ? 0.0 : 1.0; }
double weight_r(Objective o) { return o == Objective::Source ? 0.0 : 1.0; }

struct EnergyEval {
    Objective obj;
    double r;
    ChannelGains g;
    SystemParams p;

    // (rho1, s2 in [0,1]) -> completed allocation + objective value.
    std::optional<std::pair<double, Allocation>> complete(double rho1, double s2) const {
        if (rho1 < 0.0 || s2 < 0.0 || s2 > 1.0) return std::nullopt;
        const double th = p.theta, tb = p.tbar();
        const double resid = (1.0 - th * rho1) / tb;
        if (resid < -1e-15) return std::nullopt;
        const double e2 = min_eta2(r, rho1, g, p);
        if (!(e2 <= std::max(resid, 0.0) + kBudSlack)) return std::nullopt;
        const double r2 = s2 * std::max(resid - e2, 0.0);
        const auto rr = min_rhor(r, rho1, e2, r2, g, p);
        if (!rr || tb * *rr > 1.0 + kBudSlack) return std::nullopt;
        Allocation a;
        a.rho1 = rho1;
        a.eta2 = e2;
        a.rho2 = r2;
        a.rho_r = *rr;
        const Consumed c = consumed(a, p);
        return std::make_pair(weight_s(obj) * c.source + weight_r(obj) * c.relay, a);
    }
};

// Coordinate descent with step halving from a start point.
template <typename Eval>
void refine2d(const Eval& value_at, double v0, double v1, double step0, double step1,
              int halvings, Best& b, std::int64_t order_tag) {
    double v[2] = {v0, v1};
    auto got = value_at(v[0], v[1]);
    if (!got) return;
    double cur = got->first;
    Allocation a = got->second;
    double step[2] = {step0, step1};
    for (int h = 0; h < halvings; ++h) {
        bool improved = true;
        while (improved) {
            improved = false;
            for (int i = 0; i < 2; ++i) {
                for (double d : {+1.0, -1.0}) {
                    const double cand0 = v[0] + (i == 0 ? d * step[0] : 0.0);
                    const double cand1 = v[1] + (i == 1 ? d * step[1] : 0.0);
                    auto res = value_at(cand0, cand1);
                    if (res && res->first < cur - 1e-15) {
                        cur = res->first;
                        a = res->second;
                        v[0] = cand0;
                        v[1] = cand1;
                        improved = true;
                    }
                }
            }
        }
        step[0] *= 0.5;
        step[1] *= 0.5;
    }
    take_min(b, cur, a, order_tag);
}

// eta1-free, rho* = 0 family (covers gs < gd where eta1 = 0 is not WLOG).
void direct_family_min(Objective obj, double r, const ChannelGains& g,
                       const SystemParams& p, int grid, Best& b) {
    if (g.gd <= 0.0) return;
    const double th = p.theta, tb = p.tbar();
    const double ws = weight_s(obj);
    auto value_at = [&](double e1) -> std::optional<std::pair<double, Allocation>> {
        if (e1 < 0.0 || e1 > 1.0 / th) return std::nullopt;
        const double rem = (r - th * std::log2(1.0 + e1 * p.ps * g.gd / p.n)) / tb;
        const double e2 = rem > 0.0 ? (exp2s(rem) - 1.0) * p.n / (p.ps * g.gd) : 0.0;
        if (th * e1 + tb * e2 > 1.0 + kBudSlack) return std::nullopt;
        Allocation a;
        a.eta1 = e1;
        a.eta2 = e2;
        return std::make_pair(ws * (th * e1 + tb * e2) * p.ps, a);
    };
    Best local;
    for (int i = 0; i < grid; ++i) {
        const double e1 = (1.0 / th) * i / (grid - 1);
        if (auto got = value_at(e1)) take_min(local, got->first, got->second, i);
    }
    if (local.order < 0) return;
    // 1-D descent on eta1 with the minimal-eta2 completion
    double x = local.a.eta1, step = (1.0 / th) / (grid - 1);
    double cur = local.value;
    Allocation a = local.a;
    for (int h = 0; h < 40; ++h) {
        bool improved = true;
        while (improved) {
            improved = false;
            for (double d : {+1.0, -1.0}) {
                auto got = value_at(x + d * step);
                if (got && got->first < cur - 1e-15) {
                    cur = got->first;
                    a = got->second;
                    x += d * step;
                    improved = true;
                }
            }
        }
        step *= 0.5;
    }
    take_min(b, cur, a, 1LL << 60);
}

}  // namespace

std::optional<OracleResult> oracle_min_energy(Objective obj, double r,
                                              const ChannelGains& g,
                                              const SystemParams& p,
                                              int grid, int threads) {
    if (grid < 16) grid = 16;
    if (threads <= 0) threads = default_threads();
    const double th = p.theta, tb = p.tbar();
    const double ws = weight_s(obj), wr = weight_r(obj);

    // spec-mandated 4-D scan over (rho1, eta2, rho2, rho_r) with eta1 = 0
    std::vector<Best> chunk_best(static_cast<size_t>(grid));
    parallel_chunks(grid, grid, threads, [&](int chunk, std::int64_t b, std::int64_t e) {
        Best local;
        for (std::int64_t i = b; i < e; ++i) {
            const double r1 = (1.0 / th) * double(i) / (grid - 1);
            const double i2_1 = th * std::log2(1.0 + r1 * p.ps * g.gs / p.n);
            const double resid = (1.0 - th * r1) / tb;
            if (resid < 0.0) continue;
            const double i1_1 = th * std::log2(1.0 + r1 * p.ps * g.gd / p.n);
            for (int j = 0; j < grid; ++j) {
                const double e2 = resid * j / (grid - 1);
                const double i2 = i2_1 + tb * std::log2(1.0 + e2 * p.ps * g.gd / p.n);
                if (i2 < r - kRateSlack) continue;  // I2 free of (rho2, rho_r)
                const double r2max = resid - e2;
                for (int k = 0; k < grid; ++k) {
                    const double r2 = r2max * k / (grid - 1);
                    const double base = (e2 + r2) * p.ps * g.gd;
                    const double bf = p.ps * g.gd * p.pr * g.gr * r2;
                    for (int m = 0; m < grid; ++m) {
                        const double rr = (1.0 / tb) * m / (grid - 1);
                        const double s2 = (base + rr * p.pr * g.gr
                                           + 2.0 * std::sqrt(bf * rr)) / p.n;
                        const double i1 = i1_1 + tb * std::log2(1.0 + s2);
                        if (i1 < r - kRateSlack) continue;
                        const double en = ws * (th * r1 + tb * (e2 + r2)) * p.ps
                                        + wr * tb * rr * p.pr;
                        if (en < local.value) {
                            Allocation a;
                            a.rho1 = r1;
                            a.eta2 = e2;
                            a.rho2 = r2;
                            a.rho_r = rr;
                            const std::int64_t ord = ((i * grid + j) * grid + k) * grid + m;
                            take_min(local, en, a, ord);
                        }
                    }
                }
            }
        }
        chunk_best[static_cast<size_t>(chunk)] = local;
    });
    Best best;
    for (const Best& cb : chunk_best)
        if (cb.order >= 0) take_min(best, cb.value, cb.a, cb.order);

    const EnergyEval ev{obj, r, g, p};
    if (best.order >= 0) {
        const double resid = std::max((1.0 - th * best.a.rho1) / tb - best.a.eta2, 1e-300);
        const double s2 = std::min(std::max(best.a.rho2 / resid, 0.0), 1.0);
        const double st0 = (1.0 / th) / (grid - 1), st1 = 1.0 / (grid - 1);
        auto call = [&](double a0, double a1) { return ev.complete(a0, a1); };
        Best refined;
        refine2d(call, best.a.rho1, s2, st0, st1, 40, refined, 0);
        refine2d(call, std::min(best.a.rho1 + 8 * st0, 1.0 / th), s2, st0, st1, 40, refined, 1);
        refine2d(call, std::max(best.a.rho1 - 8 * st0, 0.0), s2, st0, st1, 40, refined, 2);
        refine2d(call, best.a.rho1, 0.0, st0, st1, 40, refined, 3);
        refine2d(call, best.a.rho1, 1.0, st0, st1, 40, refined, 4);
        if (refined.order >= 0 && refined.value <= best.value)
            best = refined;
    }
    direct_family_min(obj, r, g, p, grid, best);
    if (best.order < 0) return std::nullopt;
    OracleResult out;
    out.value = best.value;
    out.alloc = best.a;
    return out;
}

OracleResult oracle_max_rate(const ChannelGains& g, const SystemParams& p,
                             int grid, int threads) {
    if (grid < 16) grid = 16;
    if (threads <= 0) threads = default_threads();
    const double th = p.theta, tb = p.tbar();
    struct BestR {
        double value = -1.0;
        Allocation a;
        std::int64_t order = std::numeric_limits<std::int64_t>::max();
    };
    auto take_max = [](BestR& b, double v, const Allocation& a, std::int64_t ord) {
        if (v > b.value || (v == b.value && ord < b.order)) {
            b.value = v;
            b.a = a;
            b.order = ord;
        }
    };
    // relay at full power is always optimal for max-rate
    auto eval = [&](double r1, double e2, double r2) {
        Allocation a;
        a.rho1 = r1;
        a.eta2 = e2;
        a.rho2 = r2;
        a.rho_r = 1.0 / tb;
        const RatePair rp = rate_pair(a, g, p);
        return std::make_pair(std::min(rp.i1, rp.i2), a);
    };
    std::vector<BestR> chunk_best(static_cast<size_t>(grid));
    parallel_chunks(grid, grid, threads, [&](int chunk, std::int64_t b, std::int64_t e) {
        BestR local;
        for (std::int64_t i = b; i < e; ++i) {
            const double r1 = (1.0 / th) * double(i) / (grid - 1);
            const double resid = (1.0 - th * r1) / tb;
            if (resid < 0.0) continue;
            for (int j = 0; j < grid; ++j) {
                const double e2 = resid * j / (grid - 1);
                for (int k = 0; k < grid; ++k) {
                    const double r2 = (resid - e2) * k / (grid - 1);
                    auto [v, a] = eval(r1, e2, r2);
                    take_max(local, v, a, (i * grid + j) * grid + k);
                }
            }
        }
        chunk_best[static_cast<size_t>(chunk)] = local;
    });
    BestR best;
    for (const BestR& cb : chunk_best)
        if (cb.value >= 0.0) take_max(best, cb.value, cb.a, cb.order);

    // CD over (rho1, eta2 fraction of full source spend)
    auto value_at = [&](double r1, double f) -> std::optional<std::pair<double, Allocation>> {
        if (r1 < 0.0 || r1 > 1.0 / th || f < 0.0 || f > 1.0) return std::nullopt;
        const double resid = std::max((1.0 - th * r1) / tb, 0.0);
        auto [v, a] = eval(r1, f * resid, (1.0 - f) * resid);
        return std::make_pair(-v, a);  // refine2d minimizes
    };
    const double resid0 = std::max((1.0 - th * best.a.rho1) / tb, 1e-300);
    const double f0 = std::min(std::max(best.a.eta2 / resid0, 0.0), 1.0);
    const double st0 = (1.0 / th) / (grid - 1), st1 = 1.0 / (grid - 1);
    Best refined;
    refine2d(value_at, best.a.rho1, f0, st0, st1, 40, refined, 0);
    refine2d(value_at, best.a.rho1, 0.0, st0, st1, 40, refined, 1);
    refine2d(value_at, best.a.rho1, 1.0, st0, st1, 40, refined, 2);
    if (refined.order >= 0 && -refined.value > best.value) {
        best.value = -refined.value;
        best.a = refined.a;
    }
    // direct family: full source spend split across phases
    if (g.gd > 0.0) {
        auto dval = [&](double e1) -> std::optional<std::pair<double, Allocation>> {
            if (e1 < 0.0 || e1 > 1.0 / th) return std::nullopt;
            Allocation a;
            a.eta1 = e1;
            a.eta2 = (1.0 - th * e1) / tb;
            const RatePair rp = rate_pair(a, g, p);
            return std::make_pair(-std::min(rp.i1, rp.i2), a);
        };
        Best dbest;
        for (int i = 0; i < grid; ++i) {
            const double e1 = (1.0 / th) * i / (grid - 1);
            if (auto got = dval(e1)) take_min(dbest, got->first, got->second, i);
        }
        double x = dbest.a.eta1, step = st0, cur = dbest.value;
        Allocation a = dbest.a;
        for (int h = 0; h < 40; ++h) {
            bool improved = true;
            while (improved) {
                improved = false;
                for (double d : {+1.0, -1.0}) {
                    auto got = dval(x + d * step);
                    if (got && got->first < cur - 1e-15) {
                        cur = got->first;
                        a = got->second;
                        x += d * step;
                        improved = true;
                    }
                }
            }
            step *= 0.5;
        }
        if (-cur > best.value) {
            best.value = -cur;
            best.a = a;
        }
    }
    OracleResult out;
    out.value = best.value;
    out.alloc = best.a;
    return out;
}

}  // namespace relay
