#ifndef LCAC_IO_HPP
#define LCAC_IO_HPP

#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>

#include "json.hpp"
#include "lcac/auth.hpp"
#include "lcac/channel.hpp"
#include "lcac/ggd.hpp"
#include "lcac/grid.hpp"
#include "lcac/predict.hpp"
#include "lcac/spec.hpp"

namespace lcac {

using nlohmann::json;

inline json to_json(const GgdParams& p) {
    return json{{"mu", p.mu}, {"sigma2", p.sigma2}, {"shape", p.shape}};
}

inline GgdParams ggd_from_json(const json& j) {
    GgdParams p{j.at("mu").get<double>(), j.at("sigma2").get<double>(),
                j.at("shape").get<double>()};
    p.validate();
    return p;
}

inline json to_json(const ConstellationProfile& prof) {
    json pts = json::array();
    for (const auto& p : prof.points) pts.push_back(to_json(p));
    return json{{"name", prof.name}, {"frequency", prof.frequency}, {"points", pts}};
}

inline ConstellationProfile profile_from_json(const json& j) {
    ConstellationProfile prof;
    prof.name = j.value("name", "");
    prof.frequency = j.value("frequency", 0.0);
    for (const auto& pj : j.at("points")) prof.points.push_back(ggd_from_json(pj));
    return prof;
}

inline json to_json(const ChannelProfile& ch) {
    json j = to_json(ch.profile);
    j["kind"] = ch.kind == ChannelKind::Legal_SPS ? "legal_sps" : "illegal_dps";
    return j;
}

inline ChannelProfile channel_from_json(const json& j) {
    ChannelProfile ch;
    std::string k = j.value("kind", "illegal_dps");
    if (k == "legal_sps")
        ch.kind = ChannelKind::Legal_SPS;
    else if (k == "illegal_dps")
        ch.kind = ChannelKind::Illegal_DPS;
    else
        throw std::invalid_argument("channel_from_json: bad kind " + k);
    ch.profile = profile_from_json(j);
    return ch;
}

inline json to_json(const PredictionModel& m) {
    json pts = json::array();
    for (const auto& pf : m.points)
        pts.push_back(json{{"a_mu", pf.a_mu},
                           {"b_mu", pf.b_mu},
                           {"a_sigma", pf.a_sigma},
                           {"b_sigma", pf.b_sigma},
                           {"c_sigma", pf.c_sigma},
                           {"gamma_bar", pf.gamma_bar}});
    return json{{"points", pts},
                {"fit_range", {m.fit_lo, m.fit_hi}},
                {"extrapolation_range", {m.range_lo, m.range_hi}}};
}

inline PredictionModel model_from_json(const json& j) {
    PredictionModel m;
    for (const auto& pj : j.at("points")) {
        PredictionModel::PointFit pf;
        pf.a_mu = pj.at("a_mu").get<double>();
        pf.b_mu = pj.at("b_mu").get<double>();
        pf.a_sigma = pj.at("a_sigma").get<double>();
        pf.b_sigma = pj.at("b_sigma").get<double>();
        pf.c_sigma = pj.at("c_sigma").get<double>();
        pf.gamma_bar = pj.at("gamma_bar").get<double>();
        m.points.push_back(pf);
    }
    auto fr = j.at("fit_range");
    m.fit_lo = fr.at(0).get<double>();
    m.fit_hi = fr.at(1).get<double>();
    auto er = j.at("extrapolation_range");
    m.range_lo = er.at(0).get<double>();
    m.range_hi = er.at(1).get<double>();
    return m;
}

inline json to_json(const BarcodeSpec& s) {
    return json{{"modulation_order", s.modulation_order},
                {"block_count", s.block_count},
                {"rs_codeword_bits", s.rs_codeword_bits},
                {"rs_message_bits", s.rs_message_bits},
                {"header_training_bits", s.header_training_bits},
                {"constellation", s.constellation},
                {"thresholds", s.thresholds},
                {"training1_modules", s.training1_modules},
                {"training2_modules", s.training2_modules},
                {"header_modules", s.header_modules}};
}

inline BarcodeSpec spec_from_json(const json& j) {
    // start from the matching built-in so the bit map follows the order
    BarcodeSpec s =
        j.at("modulation_order").get<int>() == 2 ? binary_spec() : default_spec();
    s.block_count = j.at("block_count").get<int>();
    s.rs_codeword_bits = j.at("rs_codeword_bits").get<int>();
    s.rs_message_bits = j.at("rs_message_bits").get<int>();
    s.header_training_bits = j.at("header_training_bits").get<int>();
    s.constellation = j.at("constellation").get<std::vector<double>>();
    s.thresholds = j.at("thresholds").get<std::vector<double>>();
    s.training1_modules = j.at("training1_modules").get<int>();
    s.training2_modules = j.at("training2_modules").get<int>();
    s.header_modules = j.at("header_modules").get<int>();
    s.validate();
    return s;
}

/// Grid sidecar: everything needed to re-derive the layout, but no secrets.
inline json grid_metadata(const ModuleGrid& g, const BarcodeSpec& spec) {
    std::string roles;
    roles.reserve(g.roles.size());
    for (Role r : g.roles) roles.push_back("DHTU"[static_cast<int>(r)]);
    return json{{"side", g.side},
                {"layout_seed", g.layout_seed},
                {"roles", roles},
                {"spec", to_json(spec)}};
}

inline std::pair<BarcodeSpec, std::uint64_t> grid_metadata_parse(const json& j,
                                                                 ModuleGrid& g) {
    BarcodeSpec spec = spec_from_json(j.at("spec"));
    g.layout_seed = j.at("layout_seed").get<std::uint64_t>();
    if (j.at("side").get<int>() != g.side)
        throw std::invalid_argument("grid metadata: side mismatch");
    std::string roles = j.at("roles").get<std::string>();
    if (static_cast<int>(roles.size()) != g.side * g.side)
        throw std::invalid_argument("grid metadata: role mask length");
    g.roles.clear();
    for (char c : roles) {
        switch (c) {
            case 'D': g.roles.push_back(Role::Data); break;
            case 'H': g.roles.push_back(Role::Header); break;
            case 'T': g.roles.push_back(Role::Training1); break;
            case 'U': g.roles.push_back(Role::Training2); break;
            default: throw std::invalid_argument("grid metadata: bad role char");
        }
    }
    return {spec, g.layout_seed};
}

inline json to_json(const SecretBundle& b) {
    return json{{"key", to_hex(b.key)}, {"s_a1", bits_to_string(b.s_a1)}};
}

inline SecretBundle bundle_from_json(const json& j) {
    SecretBundle b;
    b.key = from_hex(j.at("key").get<std::string>());
    b.s_a1 = bits_from_string(j.at("s_a1").get<std::string>());
    return b;
}

inline json load_json(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw std::runtime_error("cannot open " + path);
    json j;
    f >> j;
    return j;
}

inline void save_json(const json& j, const std::string& path) {
    std::ofstream f(path);
    if (!f) throw std::runtime_error("cannot open " + path);
    f << j.dump(2) << "\n";
}

inline void save_text(const std::string& text, const std::string& path) {
    std::ofstream f(path, std::ios::binary);
    if (!f) throw std::runtime_error("cannot open " + path);
    f << text;
}

}  // namespace lcac

#endif
