#ifndef LCAC_GRID_HPP
#define LCAC_GRID_HPP

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <random>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "lcac/bits.hpp"
#include "lcac/rs.hpp"
#include "lcac/spec.hpp"

namespace lcac {

enum class Role : std::uint8_t { Data = 0, Header = 1, Training1 = 2, Training2 = 3 };

inline const std::vector<double>& training2_grays() {
    static const std::vector<double> g = {30, 50, 70, 100, 160, 180, 200, 220};
    return g;
}
inline constexpr double kTraining1Gray = 130.0;

/// Square array of per-module gray intensities plus a role mask.
struct ModuleGrid {
    int side = 0;
    std::vector<double> intensities;  // row-major, side*side
    std::vector<Role> roles;
    std::uint64_t layout_seed = 0;

    double& at(int r, int c) { return intensities[r * side + c]; }
    double at(int r, int c) const { return intensities[r * side + c]; }
    Role role(int r, int c) const { return roles[r * side + c]; }

    int count(Role ro) const {
        return static_cast<int>(std::count(roles.begin(), roles.end(), ro));
    }
};

namespace detail {

/// Deterministic slot layout for a spec + seed: which slot plays which role,
/// and the placement order of the data symbols.
struct GridLayout {
    std::vector<Role> roles;          // per slot
    std::vector<int> data_slots;      // placement order: data_slots[i] holds symbol i
    std::vector<int> training1_slots; // row-major order
    std::vector<int> training2_slots; // row-major order
    std::vector<int> header_slots;    // row-major order
};

inline GridLayout make_layout(const BarcodeSpec& spec, std::uint64_t layout_seed) {
    const int side = spec.side();
    const int total = side * side;
    GridLayout L;
    L.roles.assign(total, Role::Data);

    // training2: contiguous block at the center, two rows
    const int t2 = spec.training2_modules;
    const int cols = std::max(1, t2 / 2);
    const int r0 = side / 2 - 1;
    const int c0 = (side - cols) / 2;
    for (int i = 0; i < t2; ++i) {
        int slot = (r0 + i / cols) * side + (c0 + i % cols);
        L.roles[slot] = Role::Training2;
        L.training2_slots.push_back(slot);
    }
    std::sort(L.training2_slots.begin(), L.training2_slots.end());

    // header occupies the last free slots in row-major order (bottom-right corner)
    int placed = 0;
    for (int slot = total - 1; slot >= 0 && placed < spec.header_modules; --slot) {
        if (L.roles[slot] != Role::Data) continue;
        L.roles[slot] = Role::Header;
        L.header_slots.push_back(slot);
        ++placed;
    }
    std::sort(L.header_slots.begin(), L.header_slots.end());

    // training1: one slot per stratum of the remaining slots, chosen by the seed,
    // so the pattern spreads over the whole grid
    std::vector<int> free;
    for (int slot = 0; slot < total; ++slot)
        if (L.roles[slot] == Role::Data) free.push_back(slot);
    std::mt19937_64 rng(layout_seed);
    const int t1 = spec.training1_modules;
    for (int s = 0; s < t1; ++s) {
        std::size_t lo = s * free.size() / t1;
        std::size_t hi = (s + 1) * free.size() / t1;
        std::uniform_int_distribution<std::size_t> pick(lo, hi - 1);
        int slot = free[pick(rng)];
        L.roles[slot] = Role::Training1;
        L.training1_slots.push_back(slot);
    }

    // data placement starts at the bottom-right corner and walks back to the
    // top-left (QR-style), so early symbols sit near the bottom-right
    for (int slot = total - 1; slot >= 0; --slot)
        if (L.roles[slot] == Role::Data) L.data_slots.push_back(slot);
    return L;
}

inline BitString header_bits(const BarcodeSpec& spec) {
    // fixed version/format bytes, zero padded
    std::vector<std::uint8_t> bytes = {'L', 'C', 1,
                                       static_cast<std::uint8_t>(spec.modulation_order),
                                       static_cast<std::uint8_t>(spec.block_count)};
    BitString bits = unpack_bytes(bytes);
    bits.resize(static_cast<std::size_t>(spec.header_modules) * spec.bits_per_symbol(), 0);
    return bits;
}

}  // namespace detail

/// Insert header and training symbols around the data stream.
inline ModuleGrid assemble_grid(const SymbolStream& data, const BarcodeSpec& spec,
                                std::uint64_t layout_seed) {
    if (static_cast<int>(data.symbols.size()) != spec.data_modules())
        throw std::invalid_argument("assemble_grid: data length mismatch");
    const auto L = detail::make_layout(spec, layout_seed);
    ModuleGrid g;
    g.side = spec.side();
    g.layout_seed = layout_seed;
    g.roles = L.roles;
    g.intensities.assign(g.side * g.side, 0.0);

    for (std::size_t i = 0; i < L.data_slots.size(); ++i)
        g.intensities[L.data_slots[i]] = spec.constellation[data.symbols[i] - 1];
    for (int slot : L.training1_slots) g.intensities[slot] = kTraining1Gray;
    for (std::size_t i = 0; i < L.training2_slots.size(); ++i)
        g.intensities[L.training2_slots[i]] = training2_grays()[i % training2_grays().size()];

    const SymbolStream hdr = modulate(detail::header_bits(spec), spec);
    for (std::size_t i = 0; i < L.header_slots.size(); ++i)
        g.intensities[L.header_slots[i]] = spec.constellation[hdr.symbols[i] - 1];
    return g;
}

/// Remove header and training symbols; returns data-module grays in placement
/// order plus (nominal, observed) pairs for every header/training module.
inline std::pair<std::vector<double>, std::vector<std::pair<double, double>>>
disassemble_grid(const ModuleGrid& grid, const BarcodeSpec& spec) {
    if (grid.side != spec.side())
        throw std::invalid_argument("disassemble_grid: grid side mismatch");
    const auto L = detail::make_layout(spec, grid.layout_seed);
    if (L.roles != grid.roles)
        throw std::invalid_argument("disassemble_grid: role mask does not match spec layout");

    std::vector<double> data;
    data.reserve(L.data_slots.size());
    for (int slot : L.data_slots) data.push_back(grid.intensities[slot]);

    std::vector<std::pair<double, double>> training;
    for (int slot : L.training1_slots)
        training.emplace_back(kTraining1Gray, grid.intensities[slot]);
    for (std::size_t i = 0; i < L.training2_slots.size(); ++i)
        training.emplace_back(training2_grays()[i % training2_grays().size()],
                              grid.intensities[L.training2_slots[i]]);
    const SymbolStream hdr = modulate(detail::header_bits(spec), spec);
    for (std::size_t i = 0; i < L.header_slots.size(); ++i)
        training.emplace_back(spec.constellation[hdr.symbols[i] - 1],
                              grid.intensities[L.header_slots[i]]);
    return {std::move(data), std::move(training)};
}

/// Blank out an a x b module rectangle (default anchor: top-left corner).
inline ModuleGrid occlude(const ModuleGrid& grid, int rows, int cols, double fill = 0.0,
                          int row0 = 0, int col0 = 0) {
    if (rows < 0 || cols < 0 || row0 < 0 || col0 < 0 || row0 + rows > grid.side ||
        col0 + cols > grid.side)
        throw std::invalid_argument("occlude: rectangle out of range");
    ModuleGrid out = grid;
    for (int r = row0; r < row0 + rows; ++r)
        for (int c = col0; c < col0 + cols; ++c) out.at(r, c) = fill;
    return out;
}

// ---- RS block coding at the bit level ----

inline BitString rs_encode(const BitString& source, const BarcodeSpec& spec) {
    if (static_cast<long>(source.size()) != spec.source_bits())
        throw std::invalid_argument("rs_encode: source length mismatch");
    ReedSolomon rs(spec.rs_codeword_bits / 8, spec.rs_message_bits / 8);
    BitString out;
    out.reserve(spec.coded_bits());
    for (int b = 0; b < spec.block_count; ++b) {
        BitString msg(source.begin() + static_cast<long>(b) * spec.rs_message_bits,
                      source.begin() + static_cast<long>(b + 1) * spec.rs_message_bits);
        auto cw = rs.encode(pack_bytes(msg));
        auto bits = unpack_bytes(cw);
        out.insert(out.end(), bits.begin(), bits.end());
    }
    return out;
}

inline std::pair<BitString, std::vector<bool>> rs_decode(const BitString& coded,
                                                         const BarcodeSpec& spec) {
    if (static_cast<long>(coded.size()) != spec.coded_bits())
        throw std::invalid_argument("rs_decode: coded length mismatch");
    ReedSolomon rs(spec.rs_codeword_bits / 8, spec.rs_message_bits / 8);
    BitString out;
    std::vector<bool> flags(spec.block_count, false);
    for (int b = 0; b < spec.block_count; ++b) {
        BitString word(coded.begin() + static_cast<long>(b) * spec.rs_codeword_bits,
                       coded.begin() + static_cast<long>(b + 1) * spec.rs_codeword_bits);
        bool failed = false;
        auto msg = rs.decode(pack_bytes(word), failed);
        flags[b] = failed;
        auto bits = unpack_bytes(msg);
        out.insert(out.end(), bits.begin(), bits.end());
    }
    return {std::move(out), std::move(flags)};
}

// ---- PGM + metadata serialization ----

inline void write_pgm(const ModuleGrid& grid, const std::string& path) {
    std::ofstream f(path, std::ios::binary);
    if (!f) throw std::runtime_error("write_pgm: cannot open " + path);
    f << "P5\n" << grid.side << " " << grid.side << "\n255\n";
    for (double v : grid.intensities) {
        double c = std::clamp(v, 0.0, 255.0);
        f.put(static_cast<char>(static_cast<int>(std::lround(c))));
    }
}

inline ModuleGrid read_pgm(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    if (!f) throw std::runtime_error("read_pgm: cannot open " + path);
    std::string magic;
    int w = 0, h = 0, maxv = 0;
    f >> magic >> w >> h >> maxv;
    if (magic != "P5" || w != h || maxv != 255)
        throw std::runtime_error("read_pgm: unsupported image " + path);
    f.get();  // single whitespace after the header
    ModuleGrid g;
    g.side = w;
    g.intensities.resize(static_cast<std::size_t>(w) * h);
    g.roles.assign(g.intensities.size(), Role::Data);
    for (auto& v : g.intensities) {
        int c = f.get();
        if (c == EOF) throw std::runtime_error("read_pgm: truncated file " + path);
        v = static_cast<double>(c);
    }
    return g;
}

}  // namespace lcac

#endif
