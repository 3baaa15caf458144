#ifndef LCAC_SPEC_HPP
#define LCAC_SPEC_HPP

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "lcac/bits.hpp"

namespace lcac {

/// Static geometry and code parameters of one barcode configuration.
struct BarcodeSpec {
    int modulation_order = 4;          // M
    int block_count = 2;               // N
    int rs_codeword_bits = 2040;       // n
    int rs_message_bits = 440;         // k
    int header_training_bits = 338;    // L_h
    std::vector<double> constellation = {40, 100, 160, 220};     // x_1..x_M
    std::vector<double> thresholds = {0, 70, 130, 190, 255};     // theta_0..theta_M
    // bit pattern carried by each constellation index (Gray order by default)
    std::vector<BitString> bit_map = {{0, 0}, {0, 1}, {1, 1}, {1, 0}};
    // module counts of the non-data roles (header + training1 + training2
    // modules must equal L_h / log2(M))
    int training1_modules = 100;
    int training2_modules = 8;
    int header_modules = 61;

    int bits_per_symbol() const {
        return modulation_order == 2 ? 1 : (modulation_order == 4 ? 2 : 0);
    }
    long source_bits() const { return static_cast<long>(block_count) * rs_message_bits; }
    long coded_bits() const { return static_cast<long>(block_count) * rs_codeword_bits; }
    long total_bits() const { return coded_bits() + header_training_bits; }
    int data_modules() const { return static_cast<int>(coded_bits() / bits_per_symbol()); }
    int side() const {
        long modules = total_bits() / bits_per_symbol();
        int s = static_cast<int>(std::lround(std::sqrt(static_cast<double>(modules))));
        return s;
    }
    int parity_bits_per_block() const { return rs_codeword_bits - rs_message_bits; }

    void validate() const {
        if (modulation_order != 2 && modulation_order != 4)
            throw std::invalid_argument("BarcodeSpec: M must be 2 or 4");
        long modules = total_bits() / bits_per_symbol();
        long s = side();
        if (s * s != modules)
            throw std::invalid_argument("BarcodeSpec: module count is not a perfect square");
        if (static_cast<int>(constellation.size()) != modulation_order ||
            static_cast<int>(thresholds.size()) != modulation_order + 1)
            throw std::invalid_argument("BarcodeSpec: constellation/threshold size mismatch");
        if (thresholds.front() != 0.0 || thresholds.back() != 255.0)
            throw std::invalid_argument("BarcodeSpec: thresholds must span [0, 255]");
        for (int i = 0; i < modulation_order; ++i) {
            if (!(thresholds[i] < thresholds[i + 1]))
                throw std::invalid_argument("BarcodeSpec: thresholds not increasing");
            if (!(constellation[i] > thresholds[i] && constellation[i] < thresholds[i + 1]))
                throw std::invalid_argument("BarcodeSpec: constellation point outside its cell");
        }
        int total_role_modules = training1_modules + training2_modules + header_modules;
        if (total_role_modules != header_training_bits / bits_per_symbol())
            throw std::invalid_argument("BarcodeSpec: header/training module split mismatch");
        if (rs_message_bits % 8 != 0 || rs_codeword_bits % 8 != 0)
            throw std::invalid_argument("BarcodeSpec: RS lengths must be byte aligned");
    }
};

/// Default configuration: M=4, two RS(255,55) blocks, 47x47 grid.
inline BarcodeSpec default_spec() {
    BarcodeSpec s;
    s.validate();
    return s;
}

/// Binary configuration (M=2): two RS blocks on a 64x64 grid.
inline BarcodeSpec binary_spec() {
    BarcodeSpec s;
    s.modulation_order = 2;
    s.header_training_bits = 16;
    s.constellation = {40, 220};
    s.thresholds = {0, 130, 255};
    s.bit_map = {{0}, {1}};
    s.training1_modules = 6;
    s.training2_modules = 8;
    s.header_modules = 2;
    s.validate();
    return s;
}

/// Symbol view of a bit stream: constellation indices in 1..M.
struct SymbolStream {
    std::vector<int> symbols;

    static SymbolStream from_bits(const BitString& bits, const BarcodeSpec& spec) {
        const int bps = spec.bits_per_symbol();
        if (bits.size() % bps != 0)
            throw std::invalid_argument("modulate: bit length not divisible by log2(M)");
        SymbolStream out;
        out.symbols.reserve(bits.size() / bps);
        for (std::size_t i = 0; i < bits.size(); i += bps) {
            int found = -1;
            for (int s = 0; s < spec.modulation_order; ++s) {
                bool match = true;
                for (int b = 0; b < bps; ++b)
                    if (spec.bit_map[s][b] != bits[i + b]) { match = false; break; }
                if (match) { found = s + 1; break; }
            }
            if (found < 0) throw std::logic_error("modulate: bit_map does not cover pattern");
            out.symbols.push_back(found);
        }
        return out;
    }

    BitString to_bits(const BarcodeSpec& spec) const {
        BitString bits;
        bits.reserve(symbols.size() * spec.bits_per_symbol());
        for (int s : symbols) {
            const BitString& pat = spec.bit_map[s - 1];
            bits.insert(bits.end(), pat.begin(), pat.end());
        }
        return bits;
    }

    std::vector<double> nominal_grays(const BarcodeSpec& spec) const {
        std::vector<double> g;
        g.reserve(symbols.size());
        for (int s : symbols) g.push_back(spec.constellation[s - 1]);
        return g;
    }
};

/// PAM modulation: log2(M)-bit groups to constellation indices.
inline SymbolStream modulate(const BitString& bits, const BarcodeSpec& spec) {
    return SymbolStream::from_bits(bits, spec);
}

/// Threshold demodulation: value v maps to symbol i with theta_{i-1} <= v < theta_i;
/// v = 255 maps to symbol M.
inline SymbolStream demodulate(const std::vector<double>& grays, const BarcodeSpec& spec) {
    SymbolStream out;
    out.symbols.reserve(grays.size());
    for (double v : grays) {
        if (v < 0.0 || v > 255.0)
            throw std::invalid_argument("demodulate: gray value out of [0, 255]");
        int sym = spec.modulation_order;
        for (int i = 1; i <= spec.modulation_order; ++i) {
            if (v < spec.thresholds[i]) { sym = i; break; }
        }
        out.symbols.push_back(sym);
    }
    return out;
}

}  // namespace lcac

#endif
