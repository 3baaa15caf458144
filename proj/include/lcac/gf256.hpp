#ifndef LCAC_GF256_HPP
#define LCAC_GF256_HPP

#include <array>
#include <cstdint>

namespace lcac::gf {

// GF(2^8) with primitive polynomial x^8+x^4+x^3+x^2+1 (0x11d).
struct Tables {
    std::array<std::uint8_t, 512> exp{};
    std::array<int, 256> log{};
    constexpr Tables() {
        int x = 1;
        for (int i = 0; i < 255; ++i) {
            exp[i] = static_cast<std::uint8_t>(x);
            log[x] = i;
            x <<= 1;
            if (x & 0x100) x ^= 0x11d;
        }
        for (int i = 255; i < 512; ++i) exp[i] = exp[i - 255];
        log[0] = -1;
    }
};

inline constexpr Tables tab{};

inline std::uint8_t mul(std::uint8_t a, std::uint8_t b) {
    if (a == 0 || b == 0) return 0;
    return tab.exp[tab.log[a] + tab.log[b]];
}

inline std::uint8_t div(std::uint8_t a, std::uint8_t b) {
    if (a == 0) return 0;
    return tab.exp[(tab.log[a] - tab.log[b] + 255) % 255];
}

inline std::uint8_t inv(std::uint8_t a) { return tab.exp[255 - tab.log[a]]; }

inline std::uint8_t pow(std::uint8_t a, int n) {
    if (a == 0) return 0;
    int e = (tab.log[a] * (n % 255)) % 255;
    if (e < 0) e += 255;
    return tab.exp[e];
}

inline std::uint8_t alpha_pow(int n) {
    int e = n % 255;
    if (e < 0) e += 255;
    return tab.exp[e];
}

}  // namespace lcac::gf

#endif
