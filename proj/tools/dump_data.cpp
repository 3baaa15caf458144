// Regenerates the JSON files under data/ from the bundled in-header tables.

#include <filesystem>
#include <iostream>

#include "lcac/io.hpp"
#include "lcac/profiles_data.hpp"

namespace fs = std::filesystem;
using namespace lcac;

int main(int argc, char** argv) {
    fs::path root = argc > 1 ? argv[1] : "data";
    fs::create_directories(root / "profiles");
    fs::create_directories(root / "plans");

    for (const auto& p : data::dps_profiles())
        save_json(to_json(ChannelProfile{ChannelKind::Illegal_DPS, p}),
                  (root / "profiles" / (p.name + ".json")).string());
    for (const auto& p : data::sc_profiles())
        save_json(to_json(ChannelProfile{ChannelKind::Illegal_DPS, p}),
                  (root / "profiles" / (p.name + ".json")).string());

    PredictionModel model = fit_prediction_model(data::sc_profiles());
    save_json(to_json(model), (root / "sc_prediction_model.json").string());

    save_json(json{{"kind", "table6"},
                   {"ns", 10},
                   {"delta", 0.012},
                   {"presets", {147, 179}},
                   {"trials", 500},
                   {"seed", 1}},
              (root / "plans" / "table6.json").string());
    // the fitted variance law for the brightest constellation crosses zero
    // just past f=14, so the sweep stops there
    save_json(json{{"kind", "fig17"},
                   {"f_lo", 1},
                   {"f_hi", static_cast<int>(model.range_hi)},
                   {"ka", 147},
                   {"trials", 200},
                   {"seed", 1}},
              (root / "plans" / "fig17.json").string());
    save_json(json{{"kind", "appendixA"},
                   {"profile", "p1s1p1s1"},
                   {"ka", 147},
                   {"trials", 300},
                   {"seed", 1}},
              (root / "plans" / "appendixA.json").string());

    std::cout << "wrote data files under " << root << "\n";
    return 0;
}
