#ifndef LCAC_PREDICT_HPP
#define LCAC_PREDICT_HPP

#include <cmath>
#include <cstdint>
#include <limits>
#include <random>
#include <stdexcept>
#include <utility>
#include <vector>

#include "lcac/auth.hpp"
#include "lcac/ggd.hpp"
#include "lcac/spec.hpp"

namespace lcac {

/// Least squares in log-log space: log(mu) = log(a) + b*log(n).
inline std::pair<double, double> fit_mean_power(
    const std::vector<std::pair<double, double>>& series) {
    if (series.size() < 2)
        throw std::invalid_argument("fit_mean_power: need >= 2 points");
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (auto [n, mu] : series) {
        if (!(mu > 0.0) || !(n > 0.0))
            throw std::invalid_argument("fit_mean_power: values must be positive");
        double x = std::log(n), y = std::log(mu);
        sx += x;
        sy += y;
        sxx += x * x;
        sxy += x * y;
    }
    const double m = static_cast<double>(series.size());
    double denom = m * sxx - sx * sx;
    double b = denom == 0.0 ? 0.0 : (m * sxy - sx * sy) / denom;
    double loga = (sy - b * sx) / m;
    return {std::exp(loga), b};
}

/// sigma2 = a*n^b + c: exhaustive grid on b with a closed-form linear solve
/// for (a, c) at each grid point.  Deterministic, no iterative solver.
struct VarianceFit {
    double a = 0.0, b = 0.0, c = 0.0;
    double residual = 0.0;  // sum of squared residuals
};

inline VarianceFit fit_variance_power(
    const std::vector<std::pair<double, double>>& series) {
    if (series.size() < 3)
        throw std::invalid_argument("fit_variance_power: need >= 3 points");
    VarianceFit best;
    best.residual = std::numeric_limits<double>::infinity();
    const double m = static_cast<double>(series.size());
    for (int bi = -3000; bi <= 3000; ++bi) {
        double b = bi * 1e-3;
        double su = 0, sy = 0, suu = 0, suy = 0;
        for (auto [n, v] : series) {
            double u = std::pow(n, b);
            su += u;
            sy += v;
            suu += u * u;
            suy += u * v;
        }
        double denom = m * suu - su * su;
        double a, c;
        if (std::fabs(denom) < 1e-12) {  // n^b ~ constant: fold into c
            a = 0.0;
            c = sy / m;
        } else {
            a = (m * suy - su * sy) / denom;
            c = (sy - a * su) / m;
        }
        double res = 0;
        for (auto [n, v] : series) {
            double e = a * std::pow(n, b) + c - v;
            res += e * e;
        }
        if (res < best.residual) best = {a, b, c, res};
    }
    return best;
}

inline double fit_shape_avg(const std::vector<std::pair<double, double>>& series) {
    if (series.empty()) throw std::invalid_argument("fit_shape_avg: empty series");
    double s = 0;
    for (auto [n, g] : series) {
        (void)n;
        s += g;
    }
    return s / series.size();
}

/// Per-constellation power-law extrapolation of a synthesized-copy channel to
/// an arbitrary sample count f.
struct PredictionModel {
    struct PointFit {
        double a_mu = 0, b_mu = 0;
        double a_sigma = 0, b_sigma = 0, c_sigma = 0;
        double gamma_bar = 2.0;
    };
    std::vector<PointFit> points;
    double fit_lo = 1.0, fit_hi = 8.0;      // sample counts used for fitting
    double range_lo = 1.0, range_hi = 32.0; // declared extrapolation range
};

/// Fit one power model per constellation from a measured profile series.
inline PredictionModel fit_prediction_model(
    const std::vector<ConstellationProfile>& series, double range_hi = 32.0) {
    if (series.size() < 3)
        throw std::invalid_argument("fit_prediction_model: need >= 3 profiles");
    const std::size_t m = series.front().points.size();
    PredictionModel model;
    model.fit_lo = series.front().frequency;
    model.fit_hi = series.back().frequency;
    model.range_lo = 1.0;
    model.range_hi = range_hi;
    for (std::size_t i = 0; i < m; ++i) {
        std::vector<std::pair<double, double>> mus, vars, shapes;
        for (const auto& prof : series) {
            if (prof.points.size() != m)
                throw std::invalid_argument("fit_prediction_model: ragged series");
            mus.emplace_back(prof.frequency, prof.points[i].mu);
            vars.emplace_back(prof.frequency, prof.points[i].sigma2);
            shapes.emplace_back(prof.frequency, prof.points[i].shape);
        }
        PredictionModel::PointFit pf;
        std::tie(pf.a_mu, pf.b_mu) = fit_mean_power(mus);
        auto vf = fit_variance_power(vars);
        pf.a_sigma = vf.a;
        pf.b_sigma = vf.b;
        pf.c_sigma = vf.c;
        pf.gamma_bar = fit_shape_avg(shapes);
        model.points.push_back(pf);
    }
    // cap the declared range where any predicted variance stops being positive
    for (double f = model.range_lo; f <= model.range_hi; f += 1.0) {
        bool ok = true;
        for (const auto& pf : model.points)
            if (pf.a_sigma * std::pow(f, pf.b_sigma) + pf.c_sigma <= 0.0) ok = false;
        if (!ok) {
            model.range_hi = f - 1.0;
            break;
        }
    }
    return model;
}

inline ConstellationProfile predict_profile(const PredictionModel& model, double f) {
    if (f < model.range_lo || f > model.range_hi)
        throw std::out_of_range("predict_profile: f outside extrapolation range");
    ConstellationProfile prof;
    prof.name = "predicted";
    prof.frequency = f;
    for (const auto& pf : model.points) {
        GgdParams p;
        p.mu = pf.a_mu * std::pow(f, pf.b_mu);
        p.sigma2 = pf.a_sigma * std::pow(f, pf.b_sigma) + pf.c_sigma;
        p.shape = pf.gamma_bar;
        if (p.sigma2 <= 0.0)
            throw std::out_of_range("predict_profile: predicted variance <= 0");
        prof.points.push_back(p);
    }
    return prof;
}

/// Correction factors for the symbol-error weighting: 1/2 when the received
/// symbol lies within two positions of the sent one, else 1.
struct DemodulationRule {
    std::vector<double> thresholds;

    static DemodulationRule from_spec(const BarcodeSpec& spec) {
        return {spec.thresholds};
    }
    static double alpha(int i, int j) {
        return std::abs(j + 1 - i) <= 2 ? 0.5 : 1.0;
    }
};

/// Weighted probability that symbol i (1-based) demodulates into a wrong cell.
inline double symbol_ber(const ConstellationProfile& profile,
                         const DemodulationRule& rule, int i) {
    const int M = static_cast<int>(profile.points.size());
    if (i < 1 || i > M) throw std::invalid_argument("symbol_ber: bad index");
    const auto& p = profile.points[i - 1];
    double e = 0.0;
    for (int j = 0; j < M; ++j) {
        if (j + 1 == i) continue;
        double mass = ggd_cdf(p, rule.thresholds[j + 1]) - ggd_cdf(p, rule.thresholds[j]);
        e += DemodulationRule::alpha(i, j) * mass;
    }
    return e;
}

inline double raw_auth_ber(const ConstellationProfile& profile,
                           const DemodulationRule& rule) {
    const int M = static_cast<int>(profile.points.size());
    double s = 0.0;
    for (int i = 1; i <= M; ++i) s += symbol_ber(profile, rule, i);
    return s / M;
}

/// Decoded-BER model under independent bit errors: per trial the error count
/// is Binomial(n_a, eps); counts within the correction capability decode to
/// zero, anything beyond contributes its raw fraction.
struct DecodedBer {
    double eps_a1 = 0.0;
    double p_zero = 0.0;
};

inline DecodedBer decoded_auth_ber(double eps_a2, const AuthConfig& cfg,
                                   std::size_t trials, std::uint64_t seed) {
    if (eps_a2 < 0.0 || eps_a2 > 1.0)
        throw std::invalid_argument("decoded_auth_ber: eps out of range");
    cfg.validate();
    std::mt19937_64 rng(seed);
    std::binomial_distribution<int> bin(cfg.auth_codeword_bits, eps_a2);
    double sum = 0.0;
    std::size_t zeros = 0;
    for (std::size_t t = 0; t < trials; ++t) {
        int e = bin(rng);
        if (e <= cfg.correction_capability) {
            ++zeros;
        } else {
            sum += static_cast<double>(e) / cfg.auth_codeword_bits;
        }
    }
    return {sum / trials, static_cast<double>(zeros) / trials};
}

}  // namespace lcac

#endif
