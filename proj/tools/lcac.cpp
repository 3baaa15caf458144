// Command-line harness: barcode generation/decoding, channel and attack
// simulation, profile estimation, prediction-model fitting, embedding
// optimization, and canned experiment plans.

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

#include "CLI11.hpp"
#include "lcac/lcac.hpp"
#include "lcac/profiles_data.hpp"

namespace fs = std::filesystem;
using namespace lcac;

#ifndef LCAC_DATA_DIR
#define LCAC_DATA_DIR ""
#endif

namespace {

std::string g_data_dir;

std::string data_dir() {
    if (!g_data_dir.empty()) return g_data_dir;
    if (const char* env = std::getenv("LCAC_DATA_DIR")) return env;
    return LCAC_DATA_DIR;
}

// A profile reference is either a JSON file path or a bundled name
// (p1s1p1s1 .. p2s2p2s2, sc_ns1 .. sc_ns8, legal_default).
ChannelProfile resolve_profile(const std::string& ref, const BarcodeSpec& spec) {
    if (ref == "legal_default") return default_legal_profile(spec);
    if (fs::exists(ref)) return channel_from_json(load_json(ref));
    for (const auto& p : data::dps_profiles())
        if (p.name == ref) return {ChannelKind::Illegal_DPS, p};
    for (const auto& p : data::sc_profiles())
        if (p.name == ref) return {ChannelKind::Illegal_DPS, p};
    throw std::invalid_argument("unknown profile: " + ref);
}

BitString read_bits_file(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw std::runtime_error("cannot open " + path);
    std::string s, line;
    while (std::getline(f, line)) s += line;
    return bits_from_string(s);
}

AuthConfig preset_by_k(int k_a) {
    for (const auto& p : bch_presets())
        if (p.auth_message_bits == k_a) return p;
    throw std::invalid_argument("no BCH preset with k_a=" + std::to_string(k_a));
}

struct CommonFlags {
    std::string spec_path;
    int strategy = 1;
    int k_a = 147;
    double delta = 0.012;
    std::uint64_t seed = 1;
    std::size_t trials = 500;
    std::string out;
};

BarcodeSpec load_spec(const CommonFlags& c) {
    if (c.spec_path.empty()) return default_spec();
    return spec_from_json(load_json(c.spec_path));
}

AuthConfig auth_config(const CommonFlags& c) {
    AuthConfig cfg = preset_by_k(c.k_a);
    cfg.strategy = c.strategy == 2 ? EmbedStrategy::Strategy2 : EmbedStrategy::Strategy1;
    cfg.delta = c.delta;
    return cfg;
}

void add_common(CLI::App* app, CommonFlags& c) {
    app->add_option("--spec", c.spec_path, "barcode spec JSON (default built-in)");
    app->add_option("--strategy", c.strategy, "embedding strategy")
        ->check(CLI::IsMember({1, 2}));
    app->add_option("--ka", c.k_a, "BCH message length (147/179/247)");
    app->add_option("--delta", c.delta, "authentication threshold");
    app->add_option("--seed", c.seed, "master seed");
    app->add_option("--trials", c.trials, "trial count")->check(CLI::PositiveNumber);
    app->add_option("--out", c.out, "output path or prefix");
}

int cmd_keygen(const CommonFlags& c) {
    AuthConfig cfg = auth_config(c);
    std::mt19937_64 rng(c.seed);
    SecretBundle b = make_bundle(cfg, rng);
    std::string path = c.out.empty() ? "key.json" : c.out;
    save_json(to_json(b), path);
    std::cout << "wrote " << path << "\n";
    return 0;
}

int cmd_generate(const CommonFlags& c, const std::string& source_path,
                 const std::string& key_path) {
    BarcodeSpec spec = load_spec(c);
    AuthConfig cfg = auth_config(c);
    if (!fs::exists(key_path)) {
        std::cerr << "error: key file not found: " << key_path << "\n";
        return 2;
    }
    SecretBundle bundle = bundle_from_json(load_json(key_path));
    BitString source;
    if (source_path.empty()) {
        std::mt19937_64 rng(c.seed);
        source = random_bits(spec.source_bits(), rng);
    } else {
        source = read_bits_file(source_path);
    }
    if (static_cast<long>(source.size()) != spec.source_bits()) {
        std::cerr << "error: source must have " << spec.source_bits() << " bits\n";
        return 2;
    }
    auto st = detail::sender_pipeline(source, bundle, cfg, spec, c.seed);
    std::string prefix = c.out.empty() ? "barcode" : c.out;
    write_pgm(st.grid, prefix + ".pgm");
    json meta = grid_metadata(st.grid, spec);
    meta["strategy"] = c.strategy;
    meta["ka"] = c.k_a;
    save_json(meta, prefix + ".meta.json");
    save_text(bits_to_string(source) + "\n", prefix + ".source.txt");
    std::cout << "wrote " << prefix << ".pgm (+ .meta.json, .source.txt)\n";
    return 0;
}

// Receiver path shared by decode and verify: demodulate, decode the source,
// re-derive the embedding locations from the decoded source, decode the
// authentication message.
struct Decoded {
    BitString source;
    BitString auth;
    bool rs_ok = true;
    bool bch_ok = true;
};

Decoded receiver_decode(const ModuleGrid& grid, const BarcodeSpec& spec,
                        const AuthConfig& cfg, const SecretBundle& bundle) {
    auto [grays, training] = disassemble_grid(grid, spec);
    (void)training;
    BitString hat_c2 = demodulate(grays, spec).to_bits(spec);
    auto [hat_c1, flags] = rs_decode(hat_c2, spec);
    Decoded d;
    d.source = hat_c1;
    for (bool f : flags)
        if (f) d.rs_ok = false;
    auto loc = derive_locations(hat_c1, bundle.key, cfg, spec);
    auto [hat_a1, failed] = bch_decode(extract(hat_c2, loc), cfg);
    d.auth = hat_a1;
    d.bch_ok = !failed;
    return d;
}

ModuleGrid load_grid(const std::string& image, const std::string& meta,
                     BarcodeSpec& spec) {
    ModuleGrid g = read_pgm(image);
    json m = load_json(meta);
    spec = grid_metadata_parse(m, g).first;
    return g;
}

int cmd_decode(const CommonFlags& c, const std::string& image, const std::string& meta,
               const std::string& key_path) {
    BarcodeSpec spec;
    ModuleGrid g = load_grid(image, meta, spec);
    json m = load_json(meta);
    CommonFlags cc = c;
    cc.strategy = m.value("strategy", c.strategy);
    cc.k_a = m.value("ka", c.k_a);
    AuthConfig cfg = auth_config(cc);
    SecretBundle bundle = bundle_from_json(load_json(key_path));
    Decoded d = receiver_decode(g, spec, cfg, bundle);
    std::string prefix = c.out.empty() ? "decoded" : c.out;
    save_text(bits_to_string(d.source) + "\n", prefix + ".source.txt");
    save_text(bits_to_string(d.auth) + "\n", prefix + ".auth.txt");
    std::cout << "rs_ok=" << d.rs_ok << " bch_ok=" << d.bch_ok << "\n";
    return 0;
}

int cmd_channel(const CommonFlags& c, const std::string& image, const std::string& meta,
                const std::string& profile_ref) {
    BarcodeSpec spec;
    ModuleGrid g = load_grid(image, meta, spec);
    ChannelProfile ch = resolve_profile(profile_ref, spec);
    std::mt19937_64 rng(c.seed);
    ModuleGrid out = apply_channel(g, ch, spec, rng);
    std::string path = c.out.empty() ? "channel_out.pgm" : c.out;
    write_pgm(out, path);
    std::cout << "wrote " << path << "\n";
    return 0;
}

int cmd_attack(const CommonFlags& c, const std::string& profile_ref, int n_s,
               const std::string& mode) {
    BarcodeSpec spec = load_spec(c);
    AuthConfig cfg = auth_config(c);
    ChannelProfile legal = default_legal_profile(spec);

    auto trial = [&](std::size_t, std::mt19937_64& rng) {
        BitString source = random_bits(spec.source_bits(), rng);
        SecretBundle bundle = make_bundle(cfg, rng);
        if (mode == "dc") {
            ChannelProfile ch = resolve_profile(profile_ref, spec);
            ch.kind = ChannelKind::Illegal_DPS;
            return run_dc_attack(source, bundle, cfg, spec, ch, rng);
        }
        AttackConfig atk;
        atk.n_s = n_s;
        if (mode == "sc") {
            atk.mode = ScMode::Empirical;
            std::string ref = profile_ref.empty() ? "sc_ns" + std::to_string(n_s)
                                                  : profile_ref;
            atk.empirical_profile = resolve_profile(ref, spec);
        } else if (mode == "sc-comp") {
            atk.mode = ScMode::Compositional;
            atk.first_stage = resolve_profile(
                profile_ref.empty() ? "p1s1p1s1" : profile_ref, spec);
            for (std::size_t i = 0; i < spec.constellation.size(); ++i) {
                double dv = atk.first_stage->profile.points[i].sigma2 -
                            legal.profile.points[i].sigma2;
                atk.second_stage_noise.push_back(
                    {0.0, std::max(dv, 1.0), atk.first_stage->profile.points[i].shape});
            }
        } else {
            throw std::invalid_argument("attack mode must be dc, sc, or sc-comp");
        }
        return run_sc_attack(source, bundle, cfg, spec, atk, legal, rng);
    };
    auto reports = batch_trials(trial, c.trials, c.seed);
    std::string csv = reports_csv(reports);
    if (!c.out.empty()) save_text(csv, c.out);
    auto s = summarize(reports);
    std::printf("trials=%zu mean_eps_a2=%.4f mean_eps_a1=%.4f p_a1_zero=%.4f "
                "illegal_fraction=%.4f\n",
                s.trials, s.mean_eps_a2, s.mean_eps_a1, s.p_a1_zero,
                s.illegal_fraction);
    return 0;
}

int cmd_estimate(const CommonFlags& c, const std::string& samples_csv, bool exhaustive) {
    BarcodeSpec spec = load_spec(c);
    std::ifstream f(samples_csv);
    if (!f) throw std::runtime_error("cannot open " + samples_csv);
    std::map<double, std::vector<double>> groups;
    std::string line;
    while (std::getline(f, line)) {
        if (line.empty() || line[0] == '#' || line.rfind("constellation", 0) == 0)
            continue;
        std::istringstream ss(line);
        std::string a, b;
        if (!std::getline(ss, a, ',') || !std::getline(ss, b))
            throw std::invalid_argument("malformed CSV line: " + line);
        groups[std::stod(a)].push_back(std::stod(b));
    }
    if (groups.size() != spec.constellation.size())
        throw std::invalid_argument(
            "need samples for all " + std::to_string(spec.constellation.size()) +
            " constellations, got " + std::to_string(groups.size()));
    std::vector<std::vector<double>> per_point;
    for (auto& [k, v] : groups) per_point.push_back(std::move(v));
    ConstellationProfile prof = estimate_profile(per_point, exhaustive);
    prof.name = "estimated";
    std::string path = c.out.empty() ? "profile.json" : c.out;
    save_json(to_json(ChannelProfile{ChannelKind::Illegal_DPS, prof}), path);
    std::cout << "wrote " << path << "\n";
    return 0;
}

int cmd_fit(const CommonFlags& c, const std::string& series_path) {
    std::vector<ConstellationProfile> series;
    if (series_path.empty()) {
        series = data::sc_profiles();
    } else {
        for (const auto& pj : load_json(series_path))
            series.push_back(profile_from_json(pj));
    }
    PredictionModel model = fit_prediction_model(series);
    std::string path = c.out.empty() ? "model.json" : c.out;
    save_json(to_json(model), path);
    const auto& x2 = model.points[1];
    std::printf("x2: a_mu=%.4g b_mu=%.4g a_sigma=%.4g b_sigma=%.4g c_sigma=%.4g "
                "gamma_bar=%.5g range=[%g,%g]\n",
                x2.a_mu, x2.b_mu, x2.a_sigma, x2.b_sigma, x2.c_sigma, x2.gamma_bar,
                model.range_lo, model.range_hi);
    return 0;
}

int cmd_predict(const CommonFlags& c, const std::string& model_path, double f) {
    BarcodeSpec spec = load_spec(c);
    AuthConfig cfg = auth_config(c);
    PredictionModel model = model_path.empty()
                                ? fit_prediction_model(data::sc_profiles())
                                : model_from_json(load_json(model_path));
    ConstellationProfile prof = predict_profile(model, f);
    double ea2 = raw_auth_ber(prof, DemodulationRule::from_spec(spec));
    auto dec = decoded_auth_ber(ea2, cfg, 200000, c.seed);
    std::printf("f=%g eps_a2=%.5f eps_a1=%.5f p_a1_zero=%.5f\n", f, ea2, dec.eps_a1,
                dec.p_zero);
    if (!c.out.empty()) {
        json j = to_json(ChannelProfile{ChannelKind::Illegal_DPS, prof});
        j["eps_a2_theory"] = ea2;
        j["eps_a1_model"] = dec.eps_a1;
        j["p_a1_zero_model"] = dec.p_zero;
        save_json(j, c.out);
    }
    return 0;
}

int cmd_optimize(const CommonFlags& c, const std::string& model_path, double target_ns) {
    BarcodeSpec spec = load_spec(c);
    AuthConfig cfg = auth_config(c);
    ChannelProfile legal = default_legal_profile(spec);
    auto trial = [&](std::size_t, std::mt19937_64& rng) {
        BitString source = random_bits(spec.source_bits(), rng);
        SecretBundle bundle = make_bundle(cfg, rng);
        return run_legal_trial(source, bundle, cfg, spec, legal, rng);
    };
    auto legal_reports = batch_trials(trial, c.trials, c.seed);
    PredictionModel model = model_path.empty()
                                ? fit_prediction_model(data::sc_profiles())
                                : model_from_json(load_json(model_path));
    auto result = optimize_embedding(model, legal_reports, target_ns, bch_presets(),
                                     spec, 20000, c.seed);
    std::cout << optimization_table(result);
    if (!c.out.empty()) {
        json j{{"ka", result.chosen.auth_message_bits},
               {"na", result.chosen.auth_codeword_bits},
               {"ta", result.chosen.correction_capability},
               {"delta", result.delta},
               {"break_even_ns", result.break_even_ns},
               {"covert", result.covertness.pass},
               {"warning", result.warning}};
        save_json(j, c.out);
    }
    return 0;
}

int cmd_verify(const CommonFlags& c, const std::string& image, const std::string& meta,
               const std::string& key_path) {
    BarcodeSpec spec;
    ModuleGrid g = load_grid(image, meta, spec);
    json m = load_json(meta);
    CommonFlags cc = c;
    cc.strategy = m.value("strategy", c.strategy);
    cc.k_a = m.value("ka", c.k_a);
    AuthConfig cfg = auth_config(cc);
    SecretBundle bundle = bundle_from_json(load_json(key_path));
    Decoded d = receiver_decode(g, spec, cfg, bundle);
    auto [ea1, verdict] = authenticate(d.auth, bundle.s_a1, cfg.delta);
    const char* name = verdict == Verdict::Illegal ? "Illegal" : "Legal";
    if (!c.out.empty())
        save_json(json{{"eps_a1", ea1}, {"verdict", name}, {"delta", cfg.delta}}, c.out);
    std::printf("eps_a1=%.5f verdict=%s\n", ea1, name);
    return verdict == Verdict::Illegal ? 1 : 0;
}

// ---- experiment plans ----

json load_plan(const std::string& ref) {
    if (fs::exists(ref)) return load_json(ref);
    fs::path p = fs::path(data_dir()) / "plans" / (ref + ".json");
    if (fs::exists(p)) return load_json(p.string());
    throw std::invalid_argument("unknown plan: " + ref);
}

std::vector<BerReport> empirical_attack_batch(const ConstellationProfile& prof,
                                              const AuthConfig& cfg,
                                              const BarcodeSpec& spec,
                                              std::size_t trials,
                                              std::uint64_t seed) {
    ChannelProfile legal = default_legal_profile(spec);
    auto trial = [&](std::size_t, std::mt19937_64& rng) {
        BitString source = random_bits(spec.source_bits(), rng);
        SecretBundle bundle = make_bundle(cfg, rng);
        AttackConfig atk;
        atk.n_s = std::max(1, static_cast<int>(prof.frequency));
        atk.mode = ScMode::Empirical;
        atk.empirical_profile = ChannelProfile{ChannelKind::Illegal_DPS, prof};
        return run_sc_attack(source, bundle, cfg, spec, atk, legal, rng);
    };
    return batch_trials(trial, trials, seed);
}

int run_plan(const CommonFlags& c, const json& plan) {
    const std::string kind = plan.at("kind").get<std::string>();
    BarcodeSpec spec = default_spec();
    std::size_t trials = plan.value("trials", c.trials);
    std::uint64_t seed = plan.value("seed", c.seed);
    std::string out = c.out.empty() ? plan.value("out", kind + ".csv") : c.out;
    auto rule = DemodulationRule::from_spec(spec);

    if (kind == "fig17") {
        // prediction sweep: theory vs simulation per synthesized-sample count
        PredictionModel model = fit_prediction_model(data::sc_profiles());
        int f_lo = plan.value("f_lo", 1);
        int f_hi = plan.value("f_hi", static_cast<int>(model.range_hi));
        AuthConfig cfg = preset_by_k(plan.value("ka", 147));
        cfg.delta = plan.value("delta", c.delta);
        std::string csv = "f,eps_a2_theory,eps_a2_sim,eps_a1_sim\n";
        char buf[160];
        for (int f = f_lo; f <= f_hi; ++f) {
            auto prof = predict_profile(model, f);
            double th = raw_auth_ber(prof, rule);
            auto reports = empirical_attack_batch(prof, cfg, spec, trials,
                                                  derive_seed(seed, f));
            auto s = summarize(reports);
            std::snprintf(buf, sizeof buf, "%d,%.9g,%.9g,%.9g\n", f, th, s.mean_eps_a2,
                          s.mean_eps_a1);
            csv += buf;
        }
        save_text(csv, out);
    } else if (kind == "table6") {
        // decoded-BER comparison across code presets at a fixed attack strength
        PredictionModel model = fit_prediction_model(data::sc_profiles());
        int ns = plan.value("ns", 10);
        double delta = plan.value("delta", 0.012);
        std::string csv =
            "ka,ta,ns,eps_a2_theory,eps_a1_model,p_a1_zero_model,"
            "eps_a1_sim,p_a1_zero_sim,break_even_ns\n";
        char buf[256];
        for (int ka : plan.value("presets", std::vector<int>{147, 179})) {
            AuthConfig cfg = preset_by_k(ka);
            cfg.delta = delta;
            auto prof = predict_profile(model, ns);
            double th = raw_auth_ber(prof, rule);
            auto dec = decoded_auth_ber(th, cfg, 200000, derive_seed(seed, ka));
            auto reports = empirical_attack_batch(prof, cfg, spec, trials,
                                                  derive_seed(seed, 1000 + ka));
            auto s = summarize(reports);
            int be = break_even(model, delta, cfg, spec, 20000, seed);
            std::snprintf(buf, sizeof buf, "%d,%d,%d,%.9g,%.9g,%.9g,%.9g,%.9g,%d\n",
                          ka, cfg.correction_capability, ns, th, dec.eps_a1,
                          dec.p_zero, s.mean_eps_a1, s.p_a1_zero, be);
            csv += buf;
        }
        save_text(csv, out);
    } else if (kind == "appendixA") {
        // occlusion sweep per embedding strategy
        ChannelProfile ch = resolve_profile(plan.value("profile", "p1s1p1s1"), spec);
        ch.kind = ChannelKind::Illegal_DPS;
        std::string csv = "strategy,occ_rows,occ_cols,mean_eps_c2,mean_eps_a1\n";
        char buf[160];
        std::vector<std::pair<int, int>> sizes = {{0, 0}, {2, 11}, {4, 11}, {7, 11}};
        for (int strat : {1, 2}) {
            AuthConfig cfg = preset_by_k(plan.value("ka", 147));
            cfg.strategy =
                strat == 2 ? EmbedStrategy::Strategy2 : EmbedStrategy::Strategy1;
            for (auto [a, b] : sizes) {
                auto trial = [&](std::size_t, std::mt19937_64& rng) {
                    BitString source = random_bits(spec.source_bits(), rng);
                    SecretBundle bundle = make_bundle(cfg, rng);
                    return run_occluded_trial(source, bundle, cfg, spec, ch, a, b, rng);
                };
                auto reports = batch_trials(
                    trial, trials, derive_seed(seed, strat * 100 + a));
                auto s = summarize(reports);
                std::snprintf(buf, sizeof buf, "%d,%d,%d,%.9g,%.9g\n", strat, a, b,
                              s.mean_eps_c2, s.mean_eps_a1);
                csv += buf;
            }
        }
        save_text(csv, out);
    } else {
        throw std::invalid_argument("unknown plan kind: " + kind);
    }
    std::cout << "wrote " << out << "\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"low-cost anti-copying barcode toolkit"};
    app.require_subcommand(1);
    app.add_option("--data", g_data_dir, "data directory (plans, bundled JSON)");

    CommonFlags c;
    std::string source_path, key_path = "key.json", image, meta, profile_ref,
                samples_csv, series_path, model_path, mode = "dc", plan_ref;
    int n_s = 1;
    double f = 1.0, target_ns = 10.0;
    bool exhaustive = false;

    auto* keygen = app.add_subcommand("keygen", "create a secret key bundle");
    add_common(keygen, c);

    auto* generate = app.add_subcommand("generate", "build a barcode image");
    add_common(generate, c);
    generate->add_option("--source", source_path, "source bit file (default random)");
    generate->add_option("--key", key_path, "secret bundle JSON");

    auto* decode = app.add_subcommand("decode", "decode a barcode image");
    add_common(decode, c);
    decode->add_option("--image", image)->required();
    decode->add_option("--meta", meta)->required();
    decode->add_option("--key", key_path);

    auto* channel = app.add_subcommand("channel", "pass an image through a channel");
    add_common(channel, c);
    channel->add_option("--image", image)->required();
    channel->add_option("--meta", meta)->required();
    channel->add_option("--profile", profile_ref)->required();

    auto* attack = app.add_subcommand("attack", "simulate copy attacks");
    add_common(attack, c);
    attack->add_option("--profile", profile_ref, "channel profile name or file");
    attack->add_option("--ns", n_s, "synthesized sample count");
    attack->add_option("--mode", mode, "dc | sc | sc-comp");

    auto* estimate = app.add_subcommand("estimate", "estimate a profile from samples");
    add_common(estimate, c);
    estimate->add_option("--samples", samples_csv)->required();
    estimate->add_flag("--exhaustive", exhaustive, "grid-search the shape factor");

    auto* fit = app.add_subcommand("fit", "fit a prediction model");
    add_common(fit, c);
    fit->add_option("--series", series_path, "profile series JSON (default bundled)");

    auto* predict = app.add_subcommand("predict", "extrapolate a profile and BERs");
    add_common(predict, c);
    predict->add_option("--model", model_path, "model JSON (default: fit bundled)");
    predict->add_option("--ns", f, "synthesized sample count to predict");

    auto* optimize = app.add_subcommand("optimize", "choose code parameters");
    add_common(optimize, c);
    optimize->add_option("--model", model_path);
    optimize->add_option("--target-ns", target_ns, "attack strength to defend against");

    auto* experiment = app.add_subcommand("experiment", "run a canned plan");
    add_common(experiment, c);
    experiment->add_option("--plan", plan_ref, "plan name or JSON file")->required();

    auto* verify = app.add_subcommand("verify", "authenticate a captured image");
    add_common(verify, c);
    verify->add_option("--image", image)->required();
    verify->add_option("--meta", meta)->required();
    verify->add_option("--key", key_path);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (keygen->parsed()) return cmd_keygen(c);
        if (generate->parsed()) return cmd_generate(c, source_path, key_path);
        if (decode->parsed()) return cmd_decode(c, image, meta, key_path);
        if (channel->parsed()) return cmd_channel(c, image, meta, profile_ref);
        if (attack->parsed()) return cmd_attack(c, profile_ref, n_s, mode);
        if (estimate->parsed()) return cmd_estimate(c, samples_csv, exhaustive);
        if (fit->parsed()) return cmd_fit(c, series_path);
        if (predict->parsed()) return cmd_predict(c, model_path, f);
        if (optimize->parsed()) return cmd_optimize(c, model_path, target_ns);
        if (experiment->parsed()) return run_plan(c, load_plan(plan_ref));
        if (verify->parsed()) return cmd_verify(c, image, meta, key_path);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
