// Acceptance gate: one pass/fail line per criterion, nonzero exit if any fail.

#include <chrono>
#include <cmath>
#include <cstdarg>
#include <cstdio>
#include <numbers>
#include <random>
#include <vector>

#include "lcac/lcac.hpp"
#include "lcac/profiles_data.hpp"

using namespace lcac;

namespace {

int g_failures = 0;

void verdict_line(int idx, const char* name, bool ok, const std::string& detail) {
    std::printf("[%s] criterion %d: %s%s%s\n", ok ? "PASS" : "FAIL", idx, name,
                detail.empty() ? "" : " — ", detail.c_str());
    if (!ok) ++g_failures;
}

std::string fmt(const char* f, ...) {
    char buf[512];
    va_list ap;
    va_start(ap, f);
    std::vsnprintf(buf, sizeof buf, f, ap);
    va_end(ap);
    return buf;
}

ChannelProfile first_dps_profile() {
    return {ChannelKind::Illegal_DPS, data::dps_profiles().front()};
}

// ---- criterion 1: codec identity and capability ----
bool c1(std::string& detail) {
    auto spec = default_spec();
    AuthConfig cfg;
    ChannelProfile quiet;
    for (double x : spec.constellation) quiet.profile.points.push_back({x, 1e-6, 2.0});

    std::mt19937_64 rng(101);
    for (int t = 0; t < 1000; ++t) {
        BitString source = random_bits(spec.source_bits(), rng);
        SecretBundle bundle = make_bundle(cfg, rng);
        auto st = lcac::detail::sender_pipeline(source, bundle, cfg, spec, t);
        auto rx = apply_channel(st.grid, quiet, spec, rng);
        auto r = lcac::detail::receiver_pipeline(rx, source, st, bundle, cfg, spec);
        if (r.eps_c1 != 0.0 || r.eps_a1 != 0.0) {
            detail = fmt("noiseless roundtrip %d failed", t);
            return false;
        }
    }

    ReedSolomon rs(255, 55);
    std::vector<std::uint8_t> msg(55);
    for (auto& b : msg) b = static_cast<std::uint8_t>(rng() & 0xff);
    auto cw = rs.encode(msg);
    for (int errs : {100, 101}) {
        auto bad = cw;
        std::vector<int> pos(255);
        std::iota(pos.begin(), pos.end(), 0);
        std::shuffle(pos.begin(), pos.end(), rng);
        for (int i = 0; i < errs; ++i) bad[pos[i]] ^= static_cast<std::uint8_t>(1 + (rng() % 255));
        bool failed = false;
        auto dec = rs.decode(bad, failed);
        bool recovered = !failed && dec == msg;
        if (errs == 100 && !recovered) {
            detail = "RS failed at 100 symbol errors";
            return false;
        }
        if (errs == 101 && recovered) {
            detail = "RS silently accepted 101 symbol errors";
            return false;
        }
    }

    Bch bch(255, 147, 14);
    BitString bmsg = random_bits(147, rng);
    BitString bcw = bch.encode(bmsg);
    for (int errs : {14, 15}) {
        BitString bad = bcw;
        std::vector<int> pos(255);
        std::iota(pos.begin(), pos.end(), 0);
        std::shuffle(pos.begin(), pos.end(), rng);
        for (int i = 0; i < errs; ++i) bad[pos[i]] ^= 1;
        bool failed = false;
        auto dec = bch.decode(bad, failed);
        bool recovered = !failed && dec == bmsg;
        if (errs == 14 && !recovered) {
            detail = "BCH failed at 14 bit errors";
            return false;
        }
        if (errs == 15 && recovered) {
            detail = "BCH silently accepted 15 bit errors";
            return false;
        }
    }
    detail = "1000 roundtrips clean; RS 100/101 and BCH 14/15 edges exact";
    return true;
}

// ---- criterion 2: distribution oracles ----
// Simpson on x = mu + u^3; the substitution removes the cusp at the mode so the
// rule converges even for shapes below 2.
double half_mass_quad(const GgdParams& p, double dist) {
    const int n = 40000;
    double hi = std::cbrt(dist);
    double h = hi / n;
    auto f = [&](double u) { return ggd_pdf(p, p.mu + u * u * u) * 3.0 * u * u; };
    double s = f(0.0) + f(hi);
    for (int i = 1; i < n; ++i) s += f(i * h) * (i % 2 ? 4.0 : 2.0);
    return s * h / 3.0;
}

double cdf_quadrature(const GgdParams& p, double x) {
    double d = x - p.mu;
    return d >= 0.0 ? 0.5 + half_mass_quad(p, d) : 0.5 - half_mass_quad(p, -d);
}

bool c2(std::string& detail) {
    auto all = data::dps_profiles();
    auto sc = data::sc_profiles();
    all.insert(all.end(), sc.begin(), sc.end());
    double worst = 0.0;
    for (const auto& prof : all)
        for (const auto& p : prof.points)
            for (double x : {0.0, 70.0, 130.0, 190.0, 255.0}) {
                double err = std::fabs(ggd_cdf(p, x) - cdf_quadrature(p, x));
                worst = std::max(worst, err);
            }
    if (worst > 1e-5) {
        detail = fmt("cdf vs quadrature worst error %.2e", worst);
        return false;
    }
    if (std::fabs(ratio_function(2.0) - std::numbers::pi / 2) > 1e-9 ||
        std::fabs(ratio_function(1.0) - 2.0) > 1e-9) {
        detail = "ratio function fixed points off";
        return false;
    }
    std::mt19937_64 rng(202);
    const auto recovery_profile = data::dps_profiles().front();
    for (const auto& truth : recovery_profile.points) {
        std::vector<double> xs(100000);
        for (auto& x : xs) x = ggd_sample(truth, rng);
        double mu = estimate_mean(xs);
        double var = estimate_variance(xs, mu);
        double shape = estimate_shape(xs, mu, var);
        if (std::fabs(mu - truth.mu) > 1.0 ||
            std::fabs(var - truth.sigma2) / truth.sigma2 > 0.08 ||
            std::fabs(shape - truth.shape) > 0.15) {
            detail = fmt("estimator drift at mu=%.2f: got (%.2f, %.1f, %.2f)", truth.mu,
                         mu, var, shape);
            return false;
        }
    }
    detail = fmt("cdf worst error %.1e; estimators within tolerance", worst);
    return true;
}

// ---- criterion 3: theory vs alpha-weighted Monte Carlo ----
bool c3(std::string& detail) {
    auto spec = default_spec();
    auto rule = DemodulationRule::from_spec(spec);
    std::mt19937_64 rng(303);
    const std::size_t per_point = 250000;  // 1e6 per profile across 4 points
    double worst_sigmas = 0.0;
    for (const auto& prof : data::dps_profiles()) {
        double theory = raw_auth_ber(prof, rule);
        double sum = 0.0, sumsq = 0.0;
        for (int i = 1; i <= 4; ++i) {
            const auto& p = prof.points[i - 1];
            for (std::size_t k = 0; k < per_point; ++k) {
                double y = ggd_sample(p, rng);
                double w = 0.0;
                if (y >= 0.0 && y <= 255.0) {
                    int j = 0;
                    while (j < 3 && y >= spec.thresholds[j + 1]) ++j;
                    if (j + 1 != i) w = DemodulationRule::alpha(i, j);
                }
                sum += w;
                sumsq += w * w;
            }
        }
        const double n = 4.0 * per_point;
        double mc = sum / n;
        double var = sumsq / n - mc * mc;
        double se = std::sqrt(var / n);
        double sig = std::fabs(mc - theory) / se;
        worst_sigmas = std::max(worst_sigmas, sig);
        if (sig > 3.0) {
            detail = fmt("profile %s: theory %.5f vs mc %.5f (%.1f sigma)",
                         prof.name.c_str(), theory, mc, sig);
            return false;
        }
    }
    detail = fmt("all 16 profiles within 3 sigma (worst %.2f)", worst_sigmas);
    return true;
}

// ---- criterion 4: prediction fit reproduction ----
bool c4(std::string& detail) {
    std::vector<std::pair<double, double>> mus, vars;
    for (const auto& prof : data::sc_profiles()) {
        mus.emplace_back(prof.frequency, prof.points[1].mu);
        vars.emplace_back(prof.frequency, prof.points[1].sigma2);
    }
    auto [a_mu, b_mu] = fit_mean_power(mus);
    auto vf = fit_variance_power(vars);
    if (std::fabs(a_mu - 118.6) / 118.6 > 0.05 || std::fabs(b_mu + 0.0342) > 0.005) {
        detail = fmt("mean fit (%.2f, %.4f) off the reference", a_mu, b_mu);
        return false;
    }
    if (std::fabs(vf.a + 138.5) / 138.5 > 0.15 || std::fabs(vf.b - 0.232) / 0.232 > 0.15 ||
        std::fabs(vf.c - 617.7) / 617.7 > 0.15) {
        detail = fmt("variance fit (%.1f, %.3f, %.1f) off the reference", vf.a, vf.b, vf.c);
        return false;
    }
    auto model = fit_prediction_model(data::sc_profiles());
    auto prof8 = predict_profile(model, 8.0);
    double mu8 = prof8.points[1].mu, var8 = prof8.points[1].sigma2;
    if (std::fabs(mu8 - 110.30) / 110.30 > 0.01 || std::fabs(var8 - 393.58) / 393.58 > 0.01) {
        detail = fmt("prediction at 8 gives (%.2f, %.2f)", mu8, var8);
        return false;
    }
    detail = fmt("a_mu=%.2f b_mu=%.4f (a,b,c)_sigma=(%.1f,%.3f,%.1f) f=8 -> (%.2f,%.2f)",
                 a_mu, b_mu, vf.a, vf.b, vf.c, mu8, var8);
    return true;
}

// ---- criterion 5: direct-copy detection rates ----
bool c5(std::string& detail) {
    auto spec = default_spec();
    AuthConfig cfg;  // (255,147,14), delta 0.012
    auto legal_profile = default_legal_profile(spec);
    auto attack_reports = batch_trials(
        [&](std::size_t, std::mt19937_64& rng) {
            BitString source = random_bits(spec.source_bits(), rng);
            SecretBundle bundle = make_bundle(cfg, rng);
            return run_dc_attack(source, bundle, cfg, spec, first_dps_profile(), rng);
        },
        500, 505);
    auto legal_reports = batch_trials(
        [&](std::size_t, std::mt19937_64& rng) {
            BitString source = random_bits(spec.source_bits(), rng);
            SecretBundle bundle = make_bundle(cfg, rng);
            return run_legal_trial(source, bundle, cfg, spec, legal_profile, rng);
        },
        500, 506);
    auto sa = summarize(attack_reports);
    auto sl = summarize(legal_reports);
    detail = fmt("illegal detection %.3f (need >= 0.8), legal false alarms %.3f",
                 sa.illegal_fraction, sl.illegal_fraction);
    // Independent-noise channel model: the measured detection rate documents
    // the gap against the field-measured target.
    return sa.illegal_fraction >= 0.8 && sl.illegal_fraction == 0.0;
}

// ---- criterion 6: synthesized-copy trend ----
bool c6(std::string& detail) {
    auto spec = default_spec();
    AuthConfig cfg;
    auto legal = default_legal_profile(spec);
    std::vector<double> pzero;
    for (int ns : {1, 2, 4, 8}) {
        const auto prof = data::sc_profiles()[ns - 1];
        auto reports = batch_trials(
            [&](std::size_t, std::mt19937_64& rng) {
                BitString source = random_bits(spec.source_bits(), rng);
                SecretBundle bundle = make_bundle(cfg, rng);
                AttackConfig atk;
                atk.n_s = ns;
                atk.mode = ScMode::Empirical;
                atk.empirical_profile = ChannelProfile{ChannelKind::Illegal_DPS, prof};
                return run_sc_attack(source, bundle, cfg, spec, atk, legal, rng);
            },
            500, 600 + ns);
        pzero.push_back(summarize(reports).p_a1_zero);
    }
    bool monotone = pzero[0] < pzero[1] && pzero[1] < pzero[2] && pzero[2] < pzero[3];
    bool endpoint = pzero[3] >= 0.68 && pzero[3] <= 0.88;
    detail = fmt("P(eps_a1=0) = {%.3f, %.3f, %.3f, %.3f}; endpoint window [0.68,0.88]",
                 pzero[0], pzero[1], pzero[2], pzero[3]);
    return monotone && endpoint;
}

// ---- criterion 7: optimization effect ----
bool c7(std::string& detail) {
    auto spec = default_spec();
    auto model = fit_prediction_model(data::sc_profiles());
    AuthConfig t14;
    AuthConfig t10;
    t10.auth_message_bits = 179;
    t10.correction_capability = 10;

    auto prof10 = predict_profile(model, 10.0);
    double ea2 = raw_auth_ber(prof10, DemodulationRule::from_spec(spec));
    auto d14 = decoded_auth_ber(ea2, t14, 200000, 700);
    auto d10 = decoded_auth_ber(ea2, t10, 200000, 700);
    bool pzero_drop = d10.p_zero < d14.p_zero;

    int be14 = break_even(model, 0.012, t14, spec, 200000, 701);
    int be10 = break_even(model, 0.012, t10, spec, 200000, 701);
    bool be_grow = be10 == kNoBreakEven || (be14 != kNoBreakEven && be10 > be14);
    bool windows = be14 >= 8 && be14 <= 12 && be10 >= 12 && be10 <= 16;
    detail = fmt("P0(t=14)=%.3f P0(t=10)=%.3f; break-even t=14: %d (window [8,12]), "
                 "t=10: %d (window [12,16])",
                 d14.p_zero, d10.p_zero, be14, be10);
    return pzero_drop && be_grow && windows;
}

// ---- criterion 8: occlusion ordering ----
bool c8(std::string& detail) {
    auto spec = default_spec();
    auto ch = first_dps_profile();
    std::vector<std::pair<int, int>> sizes = {{0, 0}, {2, 11}, {4, 11}, {7, 11}};
    double ea1_s1 = 0.0, ea1_s2 = 0.0;
    bool monotone = true;
    for (int strat : {1, 2}) {
        AuthConfig cfg;
        cfg.strategy = strat == 2 ? EmbedStrategy::Strategy2 : EmbedStrategy::Strategy1;
        double prev = -1.0;
        for (auto [a, b] : sizes) {
            std::size_t trials = (a == 7) ? 500 : 200;
            auto reports = batch_trials(
                [&](std::size_t, std::mt19937_64& rng) {
                    BitString source = random_bits(spec.source_bits(), rng);
                    SecretBundle bundle = make_bundle(cfg, rng);
                    return run_occluded_trial(source, bundle, cfg, spec, ch, a, b, rng);
                },
                trials, 800 + strat * 10 + a);
            auto s = summarize(reports);
            if (s.mean_eps_c2 <= prev) monotone = false;
            prev = s.mean_eps_c2;
            if (a == 7) (strat == 1 ? ea1_s1 : ea1_s2) = s.mean_eps_a1;
        }
    }
    bool ordering = ea1_s2 < ea1_s1;
    detail = fmt("7x11 mean eps_a1: strategy1 %.4f vs strategy2 %.4f; growth %s",
                 ea1_s1, ea1_s2, monotone ? "monotone" : "NOT monotone");
    return ordering && monotone;
}

// ---- criterion 9: determinism ----
bool c9(std::string& detail) {
    auto spec = default_spec();
    AuthConfig cfg;
    auto trial = [&](std::size_t, std::mt19937_64& rng) {
        BitString source = random_bits(spec.source_bits(), rng);
        SecretBundle bundle = make_bundle(cfg, rng);
        return run_dc_attack(source, bundle, cfg, spec, first_dps_profile(), rng);
    };
    auto a = reports_csv(batch_trials(trial, 50, 909, 1));
    auto b = reports_csv(batch_trials(trial, 50, 909, 4));
    auto c = reports_csv(batch_trials(trial, 50, 909, 3));
    if (a != b || a != c) {
        detail = "CSV bodies differ across worker counts";
        return false;
    }
    auto again = reports_csv(batch_trials(trial, 50, 909, 2));
    if (a != again) {
        detail = "CSV bodies differ across reruns";
        return false;
    }
    detail = "byte-identical CSV across reruns and 1/2/3/4 workers";
    return true;
}

}  // namespace

int main() {
    using clock = std::chrono::steady_clock;
    struct Item {
        int idx;
        const char* name;
        bool (*fn)(std::string&);
    };
    const Item items[] = {
        {1, "codec identity & capability", c1},
        {2, "distribution math oracles", c2},
        {3, "demodulation theory vs simulation", c3},
        {4, "prediction-fit reproduction", c4},
        {5, "direct-copy detection", c5},
        {6, "synthesized-copy trend", c6},
        {7, "optimization effect", c7},
        {8, "occlusion ordering", c8},
        {9, "determinism", c9},
    };
    for (const auto& it : items) {
        auto t0 = clock::now();
        std::string detail;
        bool ok = it.fn(detail);
        auto secs =
            std::chrono::duration_cast<std::chrono::milliseconds>(clock::now() - t0)
                .count() /
            1000.0;
        verdict_line(it.idx, it.name, ok, detail + fmt(" [%.1fs]", secs));
    }
    std::printf("%d of 9 criteria failed\n", g_failures);
    return g_failures == 0 ? 0 : 1;
}
