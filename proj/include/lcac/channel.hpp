#ifndef LCAC_CHANNEL_HPP
#define LCAC_CHANNEL_HPP

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include "lcac/auth.hpp"
#include "lcac/bits.hpp"
#include "lcac/ggd.hpp"
#include "lcac/grid.hpp"
#include "lcac/spec.hpp"

namespace lcac {

enum class ChannelKind { Legal_SPS, Illegal_DPS };

struct ChannelProfile {
    ChannelKind kind = ChannelKind::Legal_SPS;
    ConstellationProfile profile;

    void validate(const BarcodeSpec& spec) const {
        profile.validate(spec.constellation.size());
    }
};

/// Synthetic single-print-scan reference: Gaussian noise centered on the
/// constellation points.  Stands in for an unmeasured legal channel.
inline ChannelProfile default_legal_profile(const BarcodeSpec& spec, double sigma2 = 25.0) {
    ChannelProfile ch;
    ch.kind = ChannelKind::Legal_SPS;
    ch.profile.name = "legal_sps_default";
    for (double x : spec.constellation) ch.profile.points.push_back({x, sigma2, 2.0});
    return ch;
}

namespace detail {

// Nearest constellation index for a printable gray; rejects grays that sit
// more than half a decision cell away from every constellation point.
inline std::size_t nearest_constellation(double gray, const BarcodeSpec& spec) {
    std::size_t best = 0;
    double best_d = 1e300;
    for (std::size_t i = 0; i < spec.constellation.size(); ++i) {
        double d = std::fabs(gray - spec.constellation[i]);
        if (d < best_d) {
            best_d = d;
            best = i;
        }
    }
    double half_cell = 0.5 * (spec.thresholds[best + 1] - spec.thresholds[best]);
    if (best_d > half_cell)
        throw std::invalid_argument("nearest_constellation: gray " +
                                    std::to_string(gray) +
                                    " not attributable to any constellation");
    return best;
}

}  // namespace detail

/// Independent per-module noise: each intensity is shifted by a draw from the
/// GGD of its nearest constellation, relative to that constellation point.
/// Modules printed exactly at a constellation point are therefore replaced by
/// a plain draw from the constellation's distribution.
template <class Rng>
ModuleGrid apply_channel(const ModuleGrid& grid, const ChannelProfile& ch,
                         const BarcodeSpec& spec, Rng& rng) {
    ch.validate(spec);
    ModuleGrid out = grid;
    for (double& v : out.intensities) {
        std::size_t i = detail::nearest_constellation(v, spec);
        double draw = ggd_sample(ch.profile.points[i], rng);
        v = std::clamp(v + (draw - spec.constellation[i]), 0.0, 255.0);
    }
    return out;
}

struct BerReport {
    double eps_c2 = 0.0;
    double eps_c1 = 0.0;
    double eps_a2 = 0.0;
    double eps_a1 = 0.0;
    Verdict verdict = Verdict::Legal;
    std::uint64_t trial_seed = 0;
};

namespace detail {

struct SenderState {
    BitString s_c2;       // coded source before embedding
    BitString s_a2;       // coded authentication message
    EmbedLocations loc;
    ModuleGrid grid;
};

inline SenderState sender_pipeline(const BitString& source, const SecretBundle& bundle,
                                   const AuthConfig& cfg, const BarcodeSpec& spec,
                                   std::uint64_t layout_seed) {
    SenderState st;
    st.s_c2 = rs_encode(source, spec);
    st.s_a2 = bch_encode(bundle.s_a1, cfg);
    st.loc = derive_locations(source, bundle.key, cfg, spec);
    BitString embedded = embed(st.s_c2, st.s_a2, st.loc);
    st.grid = assemble_grid(modulate(embedded, spec), spec, layout_seed);
    return st;
}

inline BerReport receiver_pipeline(const ModuleGrid& received, const BitString& source,
                                   const SenderState& st, const SecretBundle& bundle,
                                   const AuthConfig& cfg, const BarcodeSpec& spec) {
    auto [grays, training] = disassemble_grid(received, spec);
    (void)training;
    BitString hat_c2 = demodulate(grays, spec).to_bits(spec);

    BerReport r;
    // demodulated source BER measured against the pre-embedding codeword, so
    // the embedded bits themselves count as channel-independent errors
    r.eps_c2 = static_cast<double>(hamming(hat_c2, st.s_c2)) / st.s_c2.size();

    auto [hat_c1, rs_failed] = rs_decode(hat_c2, spec);
    (void)rs_failed;
    r.eps_c1 = static_cast<double>(hamming(hat_c1, source)) / source.size();

    BitString hat_a2 = extract(hat_c2, st.loc);
    r.eps_a2 = static_cast<double>(hamming(hat_a2, st.s_a2)) / st.s_a2.size();

    auto [hat_a1, bch_failed] = bch_decode(hat_a2, cfg);
    (void)bch_failed;
    auto [ea1, verdict] = authenticate(hat_a1, bundle.s_a1, cfg.delta);
    r.eps_a1 = ea1;
    r.verdict = verdict;
    return r;
}

}  // namespace detail

template <class Rng>
BerReport run_legal_trial(const BitString& source, const SecretBundle& bundle,
                          const AuthConfig& cfg, const BarcodeSpec& spec,
                          const ChannelProfile& legal, Rng& rng,
                          std::uint64_t layout_seed = 0) {
    auto st = detail::sender_pipeline(source, bundle, cfg, spec, layout_seed);
    ModuleGrid rx = apply_channel(st.grid, legal, spec, rng);
    return detail::receiver_pipeline(rx, source, st, bundle, cfg, spec);
}

template <class Rng>
BerReport run_dc_attack(const BitString& source, const SecretBundle& bundle,
                        const AuthConfig& cfg, const BarcodeSpec& spec,
                        const ChannelProfile& illegal, Rng& rng,
                        std::uint64_t layout_seed = 0) {
    if (illegal.kind != ChannelKind::Illegal_DPS)
        throw std::invalid_argument("run_dc_attack: profile must be Illegal_DPS");
    auto st = detail::sender_pipeline(source, bundle, cfg, spec, layout_seed);
    ModuleGrid rx = apply_channel(st.grid, illegal, spec, rng);
    return detail::receiver_pipeline(rx, source, st, bundle, cfg, spec);
}

enum class ScMode { Empirical, Compositional };

struct AttackConfig {
    int n_s = 1;
    ScMode mode = ScMode::Empirical;
    // Empirical: the whole double print-scan channel measured at this n_s.
    std::optional<ChannelProfile> empirical_profile;
    // Compositional: the attacker's capture channel plus reprint noise.
    std::optional<ChannelProfile> first_stage;
    std::vector<GgdParams> second_stage_noise;  // per constellation, centered

    void validate(const BarcodeSpec& spec) const {
        if (n_s < 1) throw std::invalid_argument("AttackConfig: n_s must be >= 1");
        if (mode == ScMode::Empirical) {
            if (!empirical_profile)
                throw std::invalid_argument("AttackConfig: missing empirical profile");
            empirical_profile->validate(spec);
        } else {
            if (!first_stage)
                throw std::invalid_argument("AttackConfig: missing first-stage profile");
            first_stage->validate(spec);
            if (second_stage_noise.size() != spec.constellation.size())
                throw std::invalid_argument("AttackConfig: second-stage noise size");
            for (const auto& p : second_stage_noise) p.validate();
        }
    }
};

/// Synthesized copy: either one pass through an n_s-indexed measured profile,
/// or an explicit average of n_s capture draws, re-quantized, re-noised, and
/// captured by the legal receiver.
template <class Rng>
BerReport run_sc_attack(const BitString& source, const SecretBundle& bundle,
                        const AuthConfig& cfg, const BarcodeSpec& spec,
                        const AttackConfig& attack, const ChannelProfile& capture,
                        Rng& rng, std::uint64_t layout_seed = 0) {
    attack.validate(spec);
    auto st = detail::sender_pipeline(source, bundle, cfg, spec, layout_seed);

    ModuleGrid rx;
    if (attack.mode == ScMode::Empirical) {
        rx = apply_channel(st.grid, *attack.empirical_profile, spec, rng);
    } else {
        ModuleGrid avg = st.grid;
        std::fill(avg.intensities.begin(), avg.intensities.end(), 0.0);
        for (int s = 0; s < attack.n_s; ++s) {
            ModuleGrid cap = apply_channel(st.grid, *attack.first_stage, spec, rng);
            for (std::size_t i = 0; i < avg.intensities.size(); ++i)
                avg.intensities[i] += cap.intensities[i];
        }
        for (double& v : avg.intensities) v /= attack.n_s;
        // the attacker reprints: snap the synthesized grays onto the printable
        // constellation, then push the result through reprint + legal capture
        for (double& v : avg.intensities) {
            std::size_t best = 0;
            double best_d = 1e300;
            for (std::size_t i = 0; i < spec.constellation.size(); ++i) {
                double d = std::fabs(v - spec.constellation[i]);
                if (d < best_d) {
                    best_d = d;
                    best = i;
                }
            }
            v = spec.constellation[best];
        }
        for (std::size_t i = 0; i < avg.intensities.size(); ++i) {
            std::size_t ci = detail::nearest_constellation(avg.intensities[i], spec);
            const auto& p = attack.second_stage_noise[ci];
            double draw = ggd_sample(p, rng);
            avg.intensities[i] =
                std::clamp(avg.intensities[i] + (draw - p.mu), 0.0, 255.0);
        }
        // re-snap: capture profiles require printable grays
        for (double& v : avg.intensities) {
            std::size_t best = 0;
            double best_d = 1e300;
            for (std::size_t i = 0; i < spec.constellation.size(); ++i) {
                double d = std::fabs(v - spec.constellation[i]);
                if (d < best_d) {
                    best_d = d;
                    best = i;
                }
            }
            v = spec.constellation[best];
        }
        rx = apply_channel(avg, capture, spec, rng);
    }
    return detail::receiver_pipeline(rx, source, st, bundle, cfg, spec);
}

/// Occlusion variant of a trial: a rectangle of the captured image is blocked
/// out after the channel pass.
template <class Rng>
BerReport run_occluded_trial(const BitString& source, const SecretBundle& bundle,
                             const AuthConfig& cfg, const BarcodeSpec& spec,
                             const ChannelProfile& channel, int occ_rows, int occ_cols,
                             Rng& rng, std::uint64_t layout_seed = 0) {
    auto st = detail::sender_pipeline(source, bundle, cfg, spec, layout_seed);
    ModuleGrid rx = apply_channel(st.grid, channel, spec, rng);
    rx = occlude(rx, occ_rows, occ_cols);
    return detail::receiver_pipeline(rx, source, st, bundle, cfg, spec);
}

struct BatchSummary {
    std::size_t trials = 0;
    double mean_eps_c2 = 0.0;
    double mean_eps_c1 = 0.0;
    double mean_eps_a2 = 0.0;
    double mean_eps_a1 = 0.0;
    double p_a1_zero = 0.0;
    double p_c1_zero = 0.0;
    double p_a1_zero_se = 0.0;  // binomial standard errors
    double p_c1_zero_se = 0.0;
    double illegal_fraction = 0.0;
};

inline BatchSummary summarize(const std::vector<BerReport>& reports) {
    BatchSummary s;
    s.trials = reports.size();
    if (reports.empty()) return s;
    std::size_t a1z = 0, c1z = 0, ill = 0;
    for (const auto& r : reports) {
        s.mean_eps_c2 += r.eps_c2;
        s.mean_eps_c1 += r.eps_c1;
        s.mean_eps_a2 += r.eps_a2;
        s.mean_eps_a1 += r.eps_a1;
        if (r.eps_a1 == 0.0) ++a1z;
        if (r.eps_c1 == 0.0) ++c1z;
        if (r.verdict == Verdict::Illegal) ++ill;
    }
    const double n = static_cast<double>(s.trials);
    s.mean_eps_c2 /= n;
    s.mean_eps_c1 /= n;
    s.mean_eps_a2 /= n;
    s.mean_eps_a1 /= n;
    s.p_a1_zero = a1z / n;
    s.p_c1_zero = c1z / n;
    s.illegal_fraction = ill / n;
    s.p_a1_zero_se = std::sqrt(s.p_a1_zero * (1.0 - s.p_a1_zero) / n);
    s.p_c1_zero_se = std::sqrt(s.p_c1_zero * (1.0 - s.p_c1_zero) / n);
    return s;
}

/// Run trial_count independent trials.  trial(index, rng) -> BerReport; each
/// trial gets its own generator seeded from master_seed, so the result set is
/// identical for any worker count.
template <class TrialFn>
std::vector<BerReport> batch_trials(TrialFn&& trial, std::size_t trial_count,
                                    std::uint64_t master_seed, unsigned workers = 1) {
    if (trial_count < 1) throw std::invalid_argument("batch_trials: trial_count >= 1");
    std::vector<BerReport> reports(trial_count);
    auto run_range = [&](std::size_t lo, std::size_t hi) {
        for (std::size_t i = lo; i < hi; ++i) {
            std::uint64_t seed = derive_seed(master_seed, i);
            std::mt19937_64 rng(seed);
            reports[i] = trial(i, rng);
            reports[i].trial_seed = seed;
        }
    };
    if (workers <= 1) {
        run_range(0, trial_count);
    } else {
        std::vector<std::thread> pool;
        std::size_t chunk = (trial_count + workers - 1) / workers;
        for (unsigned w = 0; w < workers; ++w) {
            std::size_t lo = std::min<std::size_t>(w * chunk, trial_count);
            std::size_t hi = std::min<std::size_t>(lo + chunk, trial_count);
            if (lo < hi) pool.emplace_back(run_range, lo, hi);
        }
        for (auto& t : pool) t.join();
    }
    return reports;
}

inline std::string reports_csv(const std::vector<BerReport>& reports) {
    std::string out = "trial,seed,eps_c2,eps_c1,eps_a2,eps_a1,verdict\n";
    char buf[256];
    for (std::size_t i = 0; i < reports.size(); ++i) {
        const auto& r = reports[i];
        std::snprintf(buf, sizeof buf, "%zu,%llu,%.9g,%.9g,%.9g,%.9g,%s\n", i,
                      static_cast<unsigned long long>(r.trial_seed), r.eps_c2, r.eps_c1,
                      r.eps_a2, r.eps_a1,
                      r.verdict == Verdict::Illegal ? "Illegal" : "Legal");
        out += buf;
    }
    auto s = summarize(reports);
    std::snprintf(buf, sizeof buf,
                  "#summary,trials=%zu,mean_eps_c2=%.9g,mean_eps_c1=%.9g,"
                  "mean_eps_a2=%.9g,mean_eps_a1=%.9g,p_a1_zero=%.9g,p_c1_zero=%.9g,"
                  "illegal_fraction=%.9g\n",
                  s.trials, s.mean_eps_c2, s.mean_eps_c1, s.mean_eps_a2, s.mean_eps_a1,
                  s.p_a1_zero, s.p_c1_zero, s.illegal_fraction);
    out += buf;
    return out;
}

}  // namespace lcac

#endif
