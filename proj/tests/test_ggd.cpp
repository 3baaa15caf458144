#include "doctest.h"
#include "lcac/ggd.hpp"
#include "lcac/profiles_data.hpp"

#include <cmath>
#include <numbers>
#include <random>

using namespace lcac;

namespace {

// Simpson quadrature of the pdf — the test-side oracle for the CDF. Integrates
// outward from the mode with the substitution x = mu + u^3, which flattens the
// cusp the density has at its mode for shapes below 2 and clusters nodes where
// the mass lives.
double half_mass(const GgdParams& p, double dist, int n = 20000) {
    double hi = std::cbrt(dist);
    double h = hi / n;
    auto f = [&](double u) { return ggd_pdf(p, p.mu + u * u * u) * 3.0 * u * u; };
    double s = f(0.0) + f(hi);
    for (int i = 1; i < n; ++i)
        s += f(i * h) * (i % 2 ? 4.0 : 2.0);
    return s * h / 3.0;
}

double cdf_quadrature(const GgdParams& p, double x) {
    double d = x - p.mu;
    if (d >= 0.0) return 0.5 + half_mass(p, d);
    return 0.5 - half_mass(p, -d);
}

}  // namespace

TEST_CASE("pdf integrates to one") {
    for (double shape : {0.6, 1.0, 1.7, 2.0, 3.5}) {
        GgdParams p{100.0, 400.0, shape};
        CHECK(half_mass(p, 2000.0, 40000) * 2.0 == doctest::Approx(1.0).epsilon(1e-6));
    }
}

TEST_CASE("cdf equals quadrature on every bundled profile row") {
    auto check_profile = [](const ConstellationProfile& prof) {
        for (const auto& p : prof.points) {
            for (double x : {0.0, 70.0, 130.0, 190.0, 255.0, p.mu}) {
                double q = cdf_quadrature(p, x);
                CHECK(std::fabs(ggd_cdf(p, x) - q) < 1e-5);
            }
        }
    };
    for (const auto& prof : data::dps_profiles()) check_profile(prof);
    for (const auto& prof : data::sc_profiles()) check_profile(prof);
}

TEST_CASE("gaussian special case matches erf") {
    GgdParams p{0.0, 1.0, 2.0};
    for (double x : {-2.0, -0.5, 0.0, 1.0, 3.0}) {
        double ref = 0.5 * (1.0 + std::erf(x / std::sqrt(2.0)));
        CHECK(ggd_cdf(p, x) == doctest::Approx(ref).epsilon(1e-9));
    }
    CHECK(ggd_cdf(p, 0.0) == doctest::Approx(0.5));
}

TEST_CASE("laplacian special case matches closed form") {
    GgdParams p{0.0, 2.0, 1.0};  // variance 2 => classic Laplace with b=1
    for (double x : {-1.5, 0.0, 0.7, 2.0}) {
        double ref = x < 0 ? 0.5 * std::exp(x) : 1.0 - 0.5 * std::exp(-x);
        CHECK(ggd_cdf(p, x) == doctest::Approx(ref).epsilon(1e-9));
    }
}

TEST_CASE("ratio function fixed points and monotonicity") {
    CHECK(ratio_function(2.0) == doctest::Approx(std::numbers::pi / 2).epsilon(1e-9));
    CHECK(ratio_function(1.0) == doctest::Approx(2.0).epsilon(1e-9));
    double prev = ratio_function(0.1);
    for (double g = 0.2; g <= 10.0; g += 0.1) {
        double cur = ratio_function(g);
        CHECK(cur < prev);
        prev = cur;
    }
}

TEST_CASE("sampler moments match the declared parameters") {
    std::mt19937_64 rng(7);
    for (double shape : {1.0, 1.61, 2.0}) {
        GgdParams p{110.0, 390.0, shape};
        std::vector<double> xs(200000);
        for (auto& x : xs) x = ggd_sample(p, rng);
        double m = estimate_mean(xs);
        double v = estimate_variance(xs, m);
        CHECK(m == doctest::Approx(p.mu).epsilon(0.01));
        CHECK(v == doctest::Approx(p.sigma2).epsilon(0.05));
    }
}

TEST_CASE("estimator recovers synthetic draws of a measured row") {
    // generate from each parameter row of the first bundled illegal profile
    auto prof = data::dps_profiles().front();
    std::mt19937_64 rng(11);
    for (const auto& truth : prof.points) {
        std::vector<double> xs(100000);
        for (auto& x : xs) x = ggd_sample(truth, rng);
        double mu = estimate_mean(xs);
        double var = estimate_variance(xs, mu);
        double shape = estimate_shape(xs, mu, var);
        CHECK(std::fabs(mu - truth.mu) < 1.0);
        CHECK(std::fabs(var - truth.sigma2) / truth.sigma2 < 0.08);
        CHECK(std::fabs(shape - truth.shape) < 0.15);
    }
}

TEST_CASE("exhaustive shape search agrees with bisection") {
    std::mt19937_64 rng(13);
    GgdParams truth{100.0, 300.0, 1.8};
    std::vector<double> xs(20000);
    for (auto& x : xs) x = ggd_sample(truth, rng);
    double mu = estimate_mean(xs);
    double var = estimate_variance(xs, mu);
    double fast = estimate_shape(xs, mu, var, false);
    double slow = estimate_shape(xs, mu, var, true);
    CHECK(fast == doctest::Approx(slow).epsilon(1e-3));
}

TEST_CASE("multi-copy aggregation averages copies and pools the deviation") {
    std::mt19937_64 rng(17);
    GgdParams truth{160.0, 280.0, 1.9};
    std::vector<std::vector<double>> copies(6, std::vector<double>(20000));
    for (auto& c : copies)
        for (auto& x : c) x = ggd_sample(truth, rng);
    auto agg = sc_aggregate(copies);
    CHECK(agg.mu == doctest::Approx(truth.mu).epsilon(0.01));
    CHECK(agg.sigma2 == doctest::Approx(truth.sigma2).epsilon(0.05));
    CHECK(std::fabs(agg.shape - truth.shape) < 0.2);
    CHECK_THROWS(sc_aggregate({}));
}

TEST_CASE("degenerate inputs throw") {
    CHECK_THROWS(GgdParams{0, -1, 2}.validate());
    CHECK_THROWS(GgdParams{0, 1, 0}.validate());
    CHECK_THROWS(estimate_mean({}));
    CHECK_THROWS(estimate_variance({1.0}, 1.0));
    CHECK_THROWS(ratio_function(0.0));
}
