#ifndef LCAC_AUTH_HPP
#define LCAC_AUTH_HPP

#include <cstdint>
#include <numeric>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "lcac/bch.hpp"
#include "lcac/bits.hpp"
#include "lcac/sha256.hpp"
#include "lcac/spec.hpp"

namespace lcac {

enum class EmbedStrategy { Strategy1 = 1, Strategy2 = 2 };
enum class Verdict { Legal, Illegal };

/// Authentication code parameters and the decision threshold.
struct AuthConfig {
    int auth_message_bits = 147;   // k_a
    int auth_codeword_bits = 255;  // n_a
    int correction_capability = 14;  // t_a
    EmbedStrategy strategy = EmbedStrategy::Strategy1;
    double delta = 0.012;

    void validate() const {
        const bool ok = (auth_codeword_bits == 255) &&
                        ((auth_message_bits == 147 && correction_capability == 14) ||
                         (auth_message_bits == 179 && correction_capability == 10) ||
                         (auth_message_bits == 247 && correction_capability == 1));
        if (!ok)
            throw std::invalid_argument("AuthConfig: unsupported BCH preset");
        if (delta < 0.0 || delta >= 1.0)
            throw std::invalid_argument("AuthConfig: delta must lie in [0, 1)");
    }
};

inline const std::vector<AuthConfig>& bch_presets() {
    static const std::vector<AuthConfig> p = {
        {147, 255, 14, EmbedStrategy::Strategy1, 0.012},
        {179, 255, 10, EmbedStrategy::Strategy1, 0.012},
        {247, 255, 1, EmbedStrategy::Strategy1, 0.012},
    };
    return p;
}

/// Per-product secret: the location key and the plain authentication message.
struct SecretBundle {
    std::vector<std::uint8_t> key;
    BitString s_a1;
};

struct EmbedLocations {
    std::vector<long> positions;  // n_a distinct bit indices into s_c2
};

inline BitString bch_encode(const BitString& s_a1, const AuthConfig& cfg) {
    cfg.validate();
    Bch bch(cfg.auth_codeword_bits, cfg.auth_message_bits, cfg.correction_capability);
    return bch.encode(s_a1);
}

inline std::pair<BitString, bool> bch_decode(const BitString& word, const AuthConfig& cfg) {
    cfg.validate();
    Bch bch(cfg.auth_codeword_bits, cfg.auth_message_bits, cfg.correction_capability);
    bool failed = false;
    auto msg = bch.decode(word, failed);
    return {std::move(msg), failed};
}

/// Keyed pseudorandom embedding locations: the digest of (key || s_c1) seeds a
/// generator that samples n_a distinct bit positions from the strategy's range.
inline EmbedLocations derive_locations(const BitString& s_c1,
                                       const std::vector<std::uint8_t>& key,
                                       const AuthConfig& cfg, const BarcodeSpec& spec) {
    cfg.validate();
    std::vector<long> range;
    if (cfg.strategy == EmbedStrategy::Strategy1) {
        for (int b = 0; b < spec.block_count; ++b) {
            long base = static_cast<long>(b) * spec.rs_codeword_bits;
            for (int i = spec.rs_message_bits; i < spec.rs_codeword_bits; ++i)
                range.push_back(base + i);
        }
    } else {
        range.resize(spec.coded_bits());
        std::iota(range.begin(), range.end(), 0L);
    }
    if (static_cast<long>(range.size()) < cfg.auth_codeword_bits)
        throw std::invalid_argument("derive_locations: n_a exceeds admissible range");

    std::vector<std::uint8_t> material(key);
    for (auto b : s_c1) material.push_back(b);
    auto digest = detail::sha256(material);
    std::uint64_t seed = 0;
    for (int i = 0; i < 8; ++i) seed = (seed << 8) | digest[i];
    std::mt19937_64 rng(seed);

    EmbedLocations loc;
    loc.positions.reserve(cfg.auth_codeword_bits);
    // partial Fisher-Yates over the admissible range
    for (int j = 0; j < cfg.auth_codeword_bits; ++j) {
        std::uniform_int_distribution<std::size_t> pick(j, range.size() - 1);
        std::size_t r = pick(rng);
        std::swap(range[j], range[r]);
        loc.positions.push_back(range[j]);
    }
    return loc;
}

/// Replace the bits of s_c2 at the embedding locations by s_a2.
inline BitString embed(const BitString& s_c2, const BitString& s_a2,
                       const EmbedLocations& loc) {
    if (s_a2.size() != loc.positions.size())
        throw std::invalid_argument("embed: s_a2/location length mismatch");
    BitString out(s_c2);
    for (std::size_t j = 0; j < loc.positions.size(); ++j) {
        long p = loc.positions[j];
        if (p < 0 || p >= static_cast<long>(out.size()))
            throw std::invalid_argument("embed: position out of range");
        out[p] = s_a2[j];
    }
    return out;
}

inline BitString extract(const BitString& s_c2, const EmbedLocations& loc) {
    BitString out(loc.positions.size());
    for (std::size_t j = 0; j < loc.positions.size(); ++j) {
        long p = loc.positions[j];
        if (p < 0 || p >= static_cast<long>(s_c2.size()))
            throw std::invalid_argument("extract: position out of range");
        out[j] = s_c2[p];
    }
    return out;
}

/// The authentication decision: illegal iff the decoded BER exceeds delta.
inline std::pair<double, Verdict> authenticate(const BitString& decoded,
                                               const BitString& s_a1, double delta) {
    if (decoded.size() != s_a1.size())
        throw std::invalid_argument("authenticate: length mismatch");
    if (delta < 0.0 || delta >= 1.0)
        throw std::invalid_argument("authenticate: delta out of range");
    double ber = static_cast<double>(hamming(decoded, s_a1)) / s_a1.size();
    return {ber, ber > delta ? Verdict::Illegal : Verdict::Legal};
}

inline SecretBundle make_bundle(const AuthConfig& cfg, std::mt19937_64& rng) {
    SecretBundle b;
    b.key.resize(32);
    for (auto& v : b.key) v = static_cast<std::uint8_t>(rng() & 0xff);
    b.s_a1 = random_bits(cfg.auth_message_bits, rng);
    return b;
}

}  // namespace lcac

#endif
