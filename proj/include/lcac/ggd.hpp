#ifndef LCAC_GGD_HPP
#define LCAC_GGD_HPP

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

namespace lcac {

/// Generalized Gaussian: f(x) = gamma*eta/(2*Gamma(1/gamma)) * exp(-(eta*|x-mu|)^gamma)
/// with eta = (1/sigma)*sqrt(Gamma(3/gamma)/Gamma(1/gamma)).
struct GgdParams {
    double mu = 0.0;
    double sigma2 = 1.0;  // variance
    double shape = 2.0;   // gamma; 2 = Gaussian, 1 = Laplacian

    void validate() const {
        if (!(sigma2 > 0.0)) throw std::invalid_argument("GgdParams: sigma2 must be > 0");
        if (!(shape > 0.0)) throw std::invalid_argument("GgdParams: shape must be > 0");
    }
};

namespace ggd_detail {

// Regularized lower incomplete gamma P(a,x). Series for x < a+1, else
// continued fraction for Q (Lentz).
inline double gamma_p(double a, double x) {
    if (x < 0.0 || a <= 0.0) throw std::invalid_argument("gamma_p: bad arguments");
    if (x == 0.0) return 0.0;
    const double lga = std::lgamma(a);
    if (x < a + 1.0) {
        double term = 1.0 / a;
        double sum = term;
        double ap = a;
        for (int i = 0; i < 500; ++i) {
            ap += 1.0;
            term *= x / ap;
            sum += term;
            if (std::fabs(term) < std::fabs(sum) * 1e-15) break;
        }
        return sum * std::exp(-x + a * std::log(x) - lga);
    }
    double b = x + 1.0 - a;
    double c = 1e300;
    double d = 1.0 / b;
    double h = d;
    for (int i = 1; i <= 500; ++i) {
        double an = -static_cast<double>(i) * (i - a);
        b += 2.0;
        d = an * d + b;
        if (std::fabs(d) < 1e-300) d = 1e-300;
        c = b + an / c;
        if (std::fabs(c) < 1e-300) c = 1e-300;
        d = 1.0 / d;
        double del = d * c;
        h *= del;
        if (std::fabs(del - 1.0) < 1e-15) break;
    }
    double q = std::exp(-x + a * std::log(x) - lga) * h;
    return 1.0 - q;
}

// Marsaglia-Tsang Gamma(a,1) sampler, deterministic across platforms given
// the generator state.
template <class Rng>
double gamma_sample(double a, Rng& rng) {
    std::uniform_real_distribution<double> unif(0.0, 1.0);
    std::normal_distribution<double> norm(0.0, 1.0);
    if (a < 1.0) {
        double u = unif(rng);
        while (u <= 0.0) u = unif(rng);
        return gamma_sample(a + 1.0, rng) * std::pow(u, 1.0 / a);
    }
    const double d = a - 1.0 / 3.0;
    const double c = 1.0 / std::sqrt(9.0 * d);
    for (;;) {
        double x, v;
        do {
            x = norm(rng);
            v = 1.0 + c * x;
        } while (v <= 0.0);
        v = v * v * v;
        double u = unif(rng);
        if (u < 1.0 - 0.0331 * x * x * x * x) return d * v;
        if (u > 0.0 && std::log(u) < 0.5 * x * x + d * (1.0 - v + std::log(v)))
            return d * v;
    }
}

}  // namespace ggd_detail

inline double ggd_eta(const GgdParams& p) {
    double s = std::sqrt(p.sigma2);
    return (1.0 / s) * std::sqrt(std::exp(std::lgamma(3.0 / p.shape) -
                                          std::lgamma(1.0 / p.shape)));
}

inline double ggd_pdf(const GgdParams& p, double x) {
    p.validate();
    double eta = ggd_eta(p);
    double lead = p.shape * eta / (2.0 * std::exp(std::lgamma(1.0 / p.shape)));
    return lead * std::exp(-std::pow(eta * std::fabs(x - p.mu), p.shape));
}

inline double ggd_cdf(const GgdParams& p, double x) {
    p.validate();
    double eta = ggd_eta(p);
    double z = eta * std::fabs(x - p.mu);
    double half = 0.5 * ggd_detail::gamma_p(1.0 / p.shape, std::pow(z, p.shape));
    return x >= p.mu ? 0.5 + half : 0.5 - half;
}

/// Draw via X = mu + sign * G^(1/gamma) / eta with G ~ Gamma(1/gamma, 1).
template <class Rng>
double ggd_sample(const GgdParams& p, Rng& rng) {
    p.validate();
    double eta = ggd_eta(p);
    double g = ggd_detail::gamma_sample(1.0 / p.shape, rng);
    std::uniform_real_distribution<double> unif(0.0, 1.0);
    double sign = unif(rng) < 0.5 ? -1.0 : 1.0;
    return p.mu + sign * std::pow(g, 1.0 / p.shape) / eta;
}

inline double estimate_mean(const std::vector<double>& xs) {
    if (xs.empty()) throw std::invalid_argument("estimate_mean: empty sample");
    double s = 0.0;
    for (double v : xs) s += v;
    return s / xs.size();
}

inline double estimate_variance(const std::vector<double>& xs, double mean) {
    if (xs.size() < 2) throw std::invalid_argument("estimate_variance: need >= 2 samples");
    double s = 0.0;
    for (double v : xs) s += (v - mean) * (v - mean);
    return s / (xs.size() - 1);
}

/// r(gamma) = Gamma(1/g)*Gamma(3/g) / Gamma(2/g)^2 — strictly decreasing in g.
inline double ratio_function(double g) {
    if (!(g > 0.0)) throw std::invalid_argument("ratio_function: shape must be > 0");
    return std::exp(std::lgamma(1.0 / g) + std::lgamma(3.0 / g) -
                    2.0 * std::lgamma(2.0 / g));
}

/// Moment-matched shape estimate. The sample ratio sigma^2 / E[|x-mu|]^2 is
/// inverted through r; the mean absolute deviation here divides by J (not J-1).
inline double estimate_shape(const std::vector<double>& xs, double mean, double var,
                             bool exhaustive = false) {
    if (xs.empty()) throw std::invalid_argument("estimate_shape: empty sample");
    double mad = 0.0;
    for (double v : xs) mad += std::fabs(v - mean);
    mad /= xs.size();
    if (!(mad > 0.0)) throw std::invalid_argument("estimate_shape: degenerate sample");
    double target = var / (mad * mad);

    const double lo = 0.1, hi = 10.0;
    if (target >= ratio_function(lo)) return lo;
    if (target <= ratio_function(hi)) return hi;

    if (exhaustive) {
        double best = lo, best_err = 1e300;
        for (double g = lo; g <= hi + 1e-12; g += 1e-4) {
            double err = std::fabs(ratio_function(g) - target);
            if (err < best_err) {
                best_err = err;
                best = g;
            }
        }
        return best;
    }
    double a = lo, b = hi;
    while (b - a > 1e-4) {
        double m = 0.5 * (a + b);
        if (ratio_function(m) > target)
            a = m;  // r decreasing: too big means shape too small
        else
            b = m;
    }
    return 0.5 * (a + b);
}

/// One estimated distribution per constellation point.
struct ConstellationProfile {
    std::string name;
    double frequency = 0.0;  // copy/print generation parameter, 0 = n/a
    std::vector<GgdParams> points;

    void validate(std::size_t m) const {
        if (points.size() != m)
            throw std::invalid_argument("ConstellationProfile: wrong point count");
        for (const auto& p : points) p.validate();
    }
};

inline ConstellationProfile estimate_profile(
    const std::vector<std::vector<double>>& samples_per_point,
    bool exhaustive = false) {
    ConstellationProfile prof;
    for (const auto& xs : samples_per_point) {
        GgdParams p;
        p.mu = estimate_mean(xs);
        p.sigma2 = estimate_variance(xs, p.mu);
        p.shape = estimate_shape(xs, p.mu, p.sigma2, exhaustive);
        prof.points.push_back(p);
    }
    return prof;
}

/// Aggregate per-copy statistics across K source copies.  Means and variances
/// average; the pooled absolute deviation for the shape divides by J-1.
struct ScStats {
    double mu = 0.0;
    double sigma2 = 0.0;
    double mad = 0.0;  // pooled mean absolute deviation
};

inline GgdParams sc_aggregate(const std::vector<std::vector<double>>& copies) {
    if (copies.empty()) throw std::invalid_argument("sc_aggregate: no copies");
    double mu = 0.0, var = 0.0, mad = 0.0;
    for (const auto& xs : copies) {
        if (xs.size() < 2)
            throw std::invalid_argument("sc_aggregate: need >= 2 samples per copy");
        double m = estimate_mean(xs);
        double v = estimate_variance(xs, m);
        double d = 0.0;
        for (double x : xs) d += std::fabs(x - m);
        d /= (xs.size() - 1);
        mu += m;
        var += v;
        mad += d;
    }
    mu /= copies.size();
    var /= copies.size();
    mad /= copies.size();
    GgdParams p;
    p.mu = mu;
    p.sigma2 = var;
    double target = var / (mad * mad);
    const double lo = 0.1, hi = 10.0;
    if (target >= ratio_function(lo)) {
        p.shape = lo;
    } else if (target <= ratio_function(hi)) {
        p.shape = hi;
    } else {
        double a = lo, b = hi;
        while (b - a > 1e-4) {
            double m = 0.5 * (a + b);
            if (ratio_function(m) > target)
                a = m;
            else
                b = m;
        }
        p.shape = 0.5 * (a + b);
    }
    return p;
}

}  // namespace lcac

#endif
