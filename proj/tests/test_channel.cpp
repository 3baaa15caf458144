#include "doctest.h"
#include "lcac/channel.hpp"
#include "lcac/profiles_data.hpp"

#include <random>

using namespace lcac;

namespace {

ChannelProfile degenerate_profile(const BarcodeSpec& spec) {
    ChannelProfile ch;
    ch.kind = ChannelKind::Legal_SPS;
    for (double x : spec.constellation) ch.profile.points.push_back({x, 1e-6, 2.0});
    return ch;
}

ChannelProfile table_a() {
    return {ChannelKind::Illegal_DPS, data::dps_profiles().front()};
}

}  // namespace

TEST_CASE("noiseless limit: output approximates input") {
    auto spec = default_spec();
    std::mt19937_64 rng(1);
    auto g = assemble_grid(modulate(random_bits(4080, rng), spec), spec, 1);
    auto out = apply_channel(g, degenerate_profile(spec), spec, rng);
    for (std::size_t i = 0; i < g.intensities.size(); ++i)
        CHECK(out.intensities[i] == doctest::Approx(g.intensities[i]).epsilon(1e-2));
}

TEST_CASE("channel draws reproduce the profile statistics at x2") {
    auto spec = default_spec();
    auto ch = table_a();
    const auto truth = ch.profile.points[1];  // x2 = 100
    std::mt19937_64 rng(2);

    // a grid of pure x2 modules: run many channel passes over the data slots
    std::vector<double> samples;
    samples.reserve(100000);
    BitString bits;
    for (int i = 0; i < 2040; ++i) {  // all symbols = 2 -> bits 01
        bits.push_back(0);
        bits.push_back(1);
    }
    auto g = assemble_grid(modulate(bits, spec), spec, 1);
    while (samples.size() < 100000) {
        auto out = apply_channel(g, ch, spec, rng);
        auto [grays, training] = disassemble_grid(out, spec);
        (void)training;
        samples.insert(samples.end(), grays.begin(), grays.end());
    }
    samples.resize(100000);
    double m = estimate_mean(samples);
    double v = estimate_variance(samples, m);
    // clamping to [0,255] barely touches this row, so moments survive
    CHECK(m == doctest::Approx(truth.mu).epsilon(0.01));
    CHECK(v == doctest::Approx(truth.sigma2).epsilon(0.05));
}

TEST_CASE("outputs always stay inside [0,255]") {
    auto spec = default_spec();
    auto ch = table_a();
    std::mt19937_64 rng(3);
    auto g = assemble_grid(modulate(random_bits(4080, rng), spec), spec, 2);
    for (int pass = 0; pass < 100; ++pass) {
        auto out = apply_channel(g, ch, spec, rng);
        for (double v : out.intensities) {
            CHECK(v >= 0.0);
            CHECK(v <= 255.0);
        }
    }
}

TEST_CASE("non-printable gray is rejected") {
    auto spec = default_spec();
    auto g = assemble_grid(modulate(BitString(4080, 0), spec), spec, 1);
    g.intensities[0] = 0.0;  // 40 off the nearest constellation
    std::mt19937_64 rng(4);
    CHECK_THROWS(apply_channel(g, table_a(), spec, rng));
}

TEST_CASE("legal trial is clean end to end") {
    auto spec = default_spec();
    AuthConfig cfg;
    std::mt19937_64 rng(5);
    BitString source = random_bits(spec.source_bits(), rng);
    SecretBundle bundle = make_bundle(cfg, rng);

    auto r = run_legal_trial(source, bundle, cfg, spec, degenerate_profile(spec), rng);
    CHECK(r.eps_c1 == 0.0);
    CHECK(r.eps_a2 == 0.0);
    CHECK(r.eps_a1 == 0.0);
    CHECK(r.verdict == Verdict::Legal);
    // embedding flips some coded bits, so eps_c2 is nonzero even noiselessly
    CHECK(r.eps_c2 > 0.0);
    CHECK(r.eps_c2 <= 255.0 / 4080.0);

    // default legal profile also decodes cleanly
    for (int t = 0; t < 20; ++t) {
        auto rl = run_legal_trial(source, bundle, cfg, spec,
                                  default_legal_profile(spec), rng);
        CHECK(rl.eps_a1 == 0.0);
        CHECK(rl.eps_c1 == 0.0);
        CHECK(rl.verdict == Verdict::Legal);
    }
}

TEST_CASE("trials are deterministic under a fixed seed") {
    auto spec = default_spec();
    AuthConfig cfg;
    std::mt19937_64 setup(6);
    BitString source = random_bits(spec.source_bits(), setup);
    SecretBundle bundle = make_bundle(cfg, setup);

    std::mt19937_64 r1(77), r2(77);
    auto a = run_dc_attack(source, bundle, cfg, spec, table_a(), r1);
    auto b = run_dc_attack(source, bundle, cfg, spec, table_a(), r2);
    CHECK(a.eps_c2 == b.eps_c2);
    CHECK(a.eps_a2 == b.eps_a2);
    CHECK(a.eps_a1 == b.eps_a1);
}

TEST_CASE("dc attack demands an illegal profile") {
    auto spec = default_spec();
    AuthConfig cfg;
    std::mt19937_64 rng(7);
    BitString source = random_bits(spec.source_bits(), rng);
    SecretBundle bundle = make_bundle(cfg, rng);
    CHECK_THROWS(
        run_dc_attack(source, bundle, cfg, spec, default_legal_profile(spec), rng));
}

TEST_CASE("empirical sc attack with n_s=1 behaves like dc") {
    auto spec = default_spec();
    AuthConfig cfg;
    std::mt19937_64 setup(8);

    auto dc_batch = batch_trials(
        [&](std::size_t, std::mt19937_64& rng) {
            BitString source = random_bits(spec.source_bits(), rng);
            SecretBundle bundle = make_bundle(cfg, rng);
            return run_dc_attack(source, bundle, cfg, spec, table_a(), rng);
        },
        300, 1234);
    AttackConfig atk;
    atk.n_s = 1;
    atk.mode = ScMode::Empirical;
    atk.empirical_profile = table_a();
    auto sc_batch = batch_trials(
        [&](std::size_t, std::mt19937_64& rng) {
            BitString source = random_bits(spec.source_bits(), rng);
            SecretBundle bundle = make_bundle(cfg, rng);
            return run_sc_attack(source, bundle, cfg, spec, atk,
                                 default_legal_profile(spec), rng);
        },
        300, 4321);
    auto sd = summarize(dc_batch);
    auto ss = summarize(sc_batch);
    CHECK(std::fabs(sd.mean_eps_a2 - ss.mean_eps_a2) < 0.004);
}

TEST_CASE("compositional averaging with many samples approaches the clean capture") {
    auto spec = default_spec();
    AuthConfig cfg;
    AttackConfig atk;
    atk.n_s = 32;
    atk.mode = ScMode::Compositional;
    atk.first_stage = table_a();
    for (std::size_t i = 0; i < spec.constellation.size(); ++i)
        atk.second_stage_noise.push_back({0.0, 1e-6, 2.0});

    std::mt19937_64 rng(9);
    BitString source = random_bits(spec.source_bits(), rng);
    SecretBundle bundle = make_bundle(cfg, rng);
    auto r = run_sc_attack(source, bundle, cfg, spec, atk, default_legal_profile(spec),
                           rng);
    // averaging 32 captures all but removes first-stage noise
    CHECK(r.eps_a1 == 0.0);
    CHECK(r.eps_c1 == 0.0);
}

TEST_CASE("batch summaries are order independent and reproducible") {
    auto spec = default_spec();
    AuthConfig cfg;
    auto trial = [&](std::size_t, std::mt19937_64& rng) {
        BitString source = random_bits(spec.source_bits(), rng);
        SecretBundle bundle = make_bundle(cfg, rng);
        return run_dc_attack(source, bundle, cfg, spec, table_a(), rng);
    };
    auto serial = batch_trials(trial, 64, 999, 1);
    auto threaded = batch_trials(trial, 64, 999, 4);
    CHECK(reports_csv(serial) == reports_csv(threaded));
    auto again = batch_trials(trial, 64, 999, 2);
    CHECK(reports_csv(serial) == reports_csv(again));
}

TEST_CASE("verdicts match the threshold rule in every report") {
    auto spec = default_spec();
    AuthConfig cfg;
    auto trial = [&](std::size_t, std::mt19937_64& rng) {
        BitString source = random_bits(spec.source_bits(), rng);
        SecretBundle bundle = make_bundle(cfg, rng);
        return run_dc_attack(source, bundle, cfg, spec, table_a(), rng);
    };
    for (const auto& r : batch_trials(trial, 100, 555)) {
        CHECK((r.verdict == Verdict::Illegal) == (r.eps_a1 > cfg.delta));
        CHECK(r.eps_c2 >= 0.0);
        CHECK(r.eps_a2 <= 1.0);
    }
}
