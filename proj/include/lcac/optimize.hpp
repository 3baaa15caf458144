#ifndef LCAC_OPTIMIZE_HPP
#define LCAC_OPTIMIZE_HPP

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "lcac/auth.hpp"
#include "lcac/channel.hpp"
#include "lcac/predict.hpp"

namespace lcac {

inline constexpr int kNoBreakEven = -1;  // attack never succeeds in range

/// Threshold rule: delta is the largest decoded authentication BER ever seen
/// on the legal channel.
inline double calibrate_delta(const std::vector<BerReport>& legal_reports) {
    if (legal_reports.empty())
        throw std::invalid_argument("calibrate_delta: no legal trials");
    double d = 0.0;
    for (const auto& r : legal_reports) d = std::max(d, r.eps_a1);
    return d;
}

struct CovertnessReport {
    bool pass = false;
    double mean_eps_c1 = 0.0;
    double max_eps_c1 = 0.0;
    std::size_t trials = 0;
};

/// Covert iff embedding never breaks source decoding on the legal channel.
inline CovertnessReport check_covertness(const std::vector<BerReport>& legal_reports) {
    if (legal_reports.empty())
        throw std::invalid_argument("check_covertness: no legal trials");
    CovertnessReport c;
    c.trials = legal_reports.size();
    c.pass = true;
    for (const auto& r : legal_reports) {
        c.mean_eps_c1 += r.eps_c1;
        c.max_eps_c1 = std::max(c.max_eps_c1, r.eps_c1);
        if (r.eps_c1 != 0.0) c.pass = false;
    }
    c.mean_eps_c1 /= c.trials;
    return c;
}

inline double predicted_eps_a1(const PredictionModel& model, double f,
                               const AuthConfig& cfg, const BarcodeSpec& spec,
                               std::size_t mc_trials = 20000,
                               std::uint64_t seed = 0x5eedbeef) {
    auto prof = predict_profile(model, f);
    double ea2 = raw_auth_ber(prof, DemodulationRule::from_spec(spec));
    return decoded_auth_ber(ea2, cfg, mc_trials, seed).eps_a1;
}

/// Smallest integer sample count at which the predicted decoded BER drops to
/// delta or below; kNoBreakEven if the attack never gets there in range.
inline int break_even(const PredictionModel& model, double delta, const AuthConfig& cfg,
                      const BarcodeSpec& spec, std::size_t mc_trials = 20000,
                      std::uint64_t seed = 0x5eedbeef) {
    for (int f = static_cast<int>(std::ceil(model.range_lo));
         f <= static_cast<int>(model.range_hi); ++f) {
        if (predicted_eps_a1(model, f, cfg, spec, mc_trials, seed) <= delta) return f;
    }
    return kNoBreakEven;
}

struct CodeChoice {
    AuthConfig cfg;
    bool warning = false;  // no preset detects the target attack
};

/// Pick the preset with the most correction capability that still flags an
/// attack at target_ns; fall back to the weakest code with a warning.
inline CodeChoice choose_code(const PredictionModel& model, double delta,
                              double target_ns, const std::vector<AuthConfig>& presets,
                              const BarcodeSpec& spec, std::size_t mc_trials = 20000,
                              std::uint64_t seed = 0x5eedbeef) {
    if (presets.empty()) throw std::invalid_argument("choose_code: no presets");
    const AuthConfig* best = nullptr;
    const AuthConfig* weakest = &presets.front();
    for (const auto& p : presets) {
        if (p.correction_capability < weakest->correction_capability) weakest = &p;
        double ea1 = predicted_eps_a1(model, target_ns, p, spec, mc_trials, seed);
        if (ea1 > delta &&
            (!best || p.correction_capability > best->correction_capability))
            best = &p;
    }
    if (best) return {*best, false};
    return {*weakest, true};
}

struct OptimizationResult {
    AuthConfig chosen;
    double delta = 0.0;
    int break_even_ns = kNoBreakEven;
    CovertnessReport covertness;
    bool warning = false;
};

inline OptimizationResult optimize_embedding(
    const PredictionModel& model, const std::vector<BerReport>& legal_reports,
    double target_ns, const std::vector<AuthConfig>& presets, const BarcodeSpec& spec,
    std::size_t mc_trials = 20000, std::uint64_t seed = 0x5eedbeef) {
    OptimizationResult r;
    r.delta = std::max(calibrate_delta(legal_reports), 0.012);
    r.covertness = check_covertness(legal_reports);
    auto choice =
        choose_code(model, r.delta, target_ns, presets, spec, mc_trials, seed);
    r.chosen = choice.cfg;
    r.chosen.delta = r.delta;
    r.warning = choice.warning;
    r.break_even_ns = break_even(model, r.delta, r.chosen, spec, mc_trials, seed);
    return r;
}

inline std::string optimization_table(const OptimizationResult& r) {
    char buf[512];
    std::snprintf(buf, sizeof buf,
                  "code            delta    break-even n_s  covert\n"
                  "BCH(%d,%d,t=%d)  %.4f   %s             %s%s\n",
                  r.chosen.auth_codeword_bits, r.chosen.auth_message_bits,
                  r.chosen.correction_capability, r.delta,
                  r.break_even_ns == kNoBreakEven
                      ? "none"
                      : std::to_string(r.break_even_ns).c_str(),
                  r.covertness.pass ? "yes" : "no",
                  r.warning ? "   (warning: no preset detects target attack)" : "");
    return buf;
}

}  // namespace lcac

#endif
