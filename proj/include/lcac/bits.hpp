#ifndef LCAC_BITS_HPP
#define LCAC_BITS_HPP

#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

namespace lcac {

/// A bit string stored one bit per byte (values 0 or 1).
using BitString = std::vector<std::uint8_t>;

inline std::size_t hamming(const BitString& a, const BitString& b) {
    if (a.size() != b.size())
        throw std::invalid_argument("hamming: length mismatch");
    std::size_t d = 0;
    for (std::size_t i = 0; i < a.size(); ++i) d += (a[i] ^ b[i]) & 1u;
    return d;
}

/// Pack bits (MSB first within each byte) into bytes; length must be a multiple of 8.
inline std::vector<std::uint8_t> pack_bytes(const BitString& bits) {
    if (bits.size() % 8 != 0)
        throw std::invalid_argument("pack_bytes: length not a multiple of 8");
    std::vector<std::uint8_t> out(bits.size() / 8, 0);
    for (std::size_t i = 0; i < bits.size(); ++i)
        out[i / 8] |= static_cast<std::uint8_t>((bits[i] & 1u) << (7 - (i % 8)));
    return out;
}

inline BitString unpack_bytes(const std::vector<std::uint8_t>& bytes) {
    BitString bits(bytes.size() * 8);
    for (std::size_t i = 0; i < bits.size(); ++i)
        bits[i] = (bytes[i / 8] >> (7 - (i % 8))) & 1u;
    return bits;
}

inline BitString random_bits(std::size_t n, std::mt19937_64& rng) {
    BitString b(n);
    for (auto& v : b) v = static_cast<std::uint8_t>(rng() & 1u);
    return b;
}

inline std::string to_hex(const std::vector<std::uint8_t>& bytes) {
    static const char* digits = "0123456789abcdef";
    std::string s;
    s.reserve(bytes.size() * 2);
    for (auto b : bytes) {
        s.push_back(digits[b >> 4]);
        s.push_back(digits[b & 0xf]);
    }
    return s;
}

inline std::vector<std::uint8_t> from_hex(const std::string& s) {
    if (s.size() % 2 != 0) throw std::invalid_argument("from_hex: odd length");
    auto nib = [](char c) -> int {
        if (c >= '0' && c <= '9') return c - '0';
        if (c >= 'a' && c <= 'f') return c - 'a' + 10;
        if (c >= 'A' && c <= 'F') return c - 'A' + 10;
        throw std::invalid_argument("from_hex: bad digit");
    };
    std::vector<std::uint8_t> out(s.size() / 2);
    for (std::size_t i = 0; i < out.size(); ++i)
        out[i] = static_cast<std::uint8_t>((nib(s[2 * i]) << 4) | nib(s[2 * i + 1]));
    return out;
}

inline std::string bits_to_string(const BitString& b) {
    std::string s;
    s.reserve(b.size());
    for (auto v : b) s.push_back(v ? '1' : '0');
    return s;
}

inline BitString bits_from_string(const std::string& s) {
    BitString b;
    b.reserve(s.size());
    for (char c : s) {
        if (c == '0') b.push_back(0);
        else if (c == '1') b.push_back(1);
        else throw std::invalid_argument("bits_from_string: bad character");
    }
    return b;
}

/// splitmix64 step, used to derive independent per-trial seeds from a master seed.
inline std::uint64_t splitmix64(std::uint64_t& state) {
    std::uint64_t z = (state += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

inline std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index) {
    std::uint64_t s = master ^ (0xD1B54A32D192ED03ULL * (index + 1));
    return splitmix64(s);
}

}  // namespace lcac

#endif
