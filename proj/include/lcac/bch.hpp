#ifndef LCAC_BCH_HPP
#define LCAC_BCH_HPP

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "lcac/bits.hpp"
#include "lcac/gf256.hpp"

namespace lcac {

/// Binary BCH codec of length 255. The generator polynomial is built from the
/// minimal polynomials of alpha^1..alpha^{2t}; (n, k) must match a code from
/// the length-255 family, e.g. (255,147) t=14, (255,179) t=10, (255,247) t=1.
/// Codeword layout: [message bits | parity bits].
class Bch {
public:
    Bch(int n_bits, int k_bits, int t_bits) : n_(n_bits), k_(k_bits), t_(t_bits) {
        if (n_ != 255) throw std::invalid_argument("Bch: only length 255 supported");
        // collect cyclotomic cosets of exponents 1..2t
        std::vector<bool> in_roots(255, false);
        for (int e = 1; e <= 2 * t_; ++e) {
            int c = e % 255;
            while (!in_roots[c]) {
                in_roots[c] = true;
                c = (c * 2) % 255;
            }
        }
        // generator polynomial over GF(256): prod over roots (x - alpha^e);
        // coefficients end up in GF(2)
        std::vector<std::uint8_t> g{1};
        for (int e = 0; e < 255; ++e) {
            if (!in_roots[e]) continue;
            std::vector<std::uint8_t> next(g.size() + 1, 0);
            for (std::size_t j = 0; j < g.size(); ++j) {
                next[j] ^= g[j];
                next[j + 1] ^= gf::mul(g[j], gf::alpha_pow(e));
            }
            g = std::move(next);
        }
        gen_.resize(g.size());
        for (std::size_t i = 0; i < g.size(); ++i) {
            if (g[i] != 0 && g[i] != 1)
                throw std::logic_error("Bch: generator polynomial not binary");
            gen_[i] = g[i];
        }
        if (static_cast<int>(gen_.size()) - 1 != n_ - k_)
            throw std::invalid_argument("Bch: (n, k, t) inconsistent with the length-255 family");
    }

    int n() const { return n_; }
    int k() const { return k_; }
    int t() const { return t_; }

    BitString encode(const BitString& msg) const {
        if (static_cast<int>(msg.size()) != k_)
            throw std::invalid_argument("bch encode: message length mismatch");
        const int p = n_ - k_;
        BitString rem(p, 0);
        for (int i = 0; i < k_; ++i) {
            std::uint8_t coef = (msg[i] ^ rem[0]) & 1u;
            rem.erase(rem.begin());
            rem.push_back(0);
            if (coef)
                for (int j = 0; j < p; ++j) rem[j] ^= gen_[j + 1];
        }
        BitString cw(msg);
        cw.insert(cw.end(), rem.begin(), rem.end());
        return cw;
    }

    /// Bounded-distance decode; on failure returns the systematic portion
    /// unchanged and sets `failed`.
    BitString decode(const BitString& word, bool& failed) const {
        if (static_cast<int>(word.size()) != n_)
            throw std::invalid_argument("bch decode: word length mismatch");
        failed = false;
        const int nsyn = 2 * t_;
        std::vector<std::uint8_t> syn(nsyn, 0);
        bool all_zero = true;
        for (int i = 1; i <= nsyn; ++i) {
            std::uint8_t s = 0;
            for (int j = 0; j < n_; ++j)
                if (word[j]) s ^= gf::alpha_pow((i * (n_ - 1 - j)) % 255);
            syn[i - 1] = s;
            if (s) all_zero = false;
        }
        if (all_zero) return {word.begin(), word.begin() + k_};

        // Berlekamp-Massey
        std::vector<std::uint8_t> lambda{1}, prev{1};
        int L = 0, m = 1;
        std::uint8_t b = 1;
        for (int i = 0; i < nsyn; ++i) {
            std::uint8_t delta = syn[i];
            for (int j = 1; j <= L && j < static_cast<int>(lambda.size()); ++j)
                delta ^= gf::mul(lambda[j], syn[i - j]);
            if (delta == 0) {
                ++m;
            } else if (2 * L <= i) {
                std::vector<std::uint8_t> tmp = lambda;
                std::uint8_t scale = gf::div(delta, b);
                if (lambda.size() < prev.size() + m) lambda.resize(prev.size() + m, 0);
                for (std::size_t j = 0; j < prev.size(); ++j)
                    lambda[j + m] ^= gf::mul(scale, prev[j]);
                L = i + 1 - L;
                prev = std::move(tmp);
                b = delta;
                m = 1;
            } else {
                std::uint8_t scale = gf::div(delta, b);
                if (lambda.size() < prev.size() + m) lambda.resize(prev.size() + m, 0);
                for (std::size_t j = 0; j < prev.size(); ++j)
                    lambda[j + m] ^= gf::mul(scale, prev[j]);
                ++m;
            }
        }
        while (lambda.size() > 1 && lambda.back() == 0) lambda.pop_back();
        int deg = static_cast<int>(lambda.size()) - 1;
        if (deg > t_) {
            failed = true;
            return {word.begin(), word.begin() + k_};
        }

        BitString corrected(word);
        int roots = 0;
        for (int p = 0; p < n_; ++p) {
            std::uint8_t x = gf::alpha_pow(-(n_ - 1 - p));
            std::uint8_t v = 0;
            for (int j = deg; j >= 0; --j)
                v = gf::mul(v, x) ^ lambda[j];
            if (v == 0) {
                corrected[p] ^= 1u;
                ++roots;
            }
        }
        if (roots != deg) {
            failed = true;
            return {word.begin(), word.begin() + k_};
        }
        // verify
        for (int i = 1; i <= nsyn; ++i) {
            std::uint8_t s = 0;
            for (int j = 0; j < n_; ++j)
                if (corrected[j]) s ^= gf::alpha_pow((i * (n_ - 1 - j)) % 255);
            if (s != 0) {
                failed = true;
                return {word.begin(), word.begin() + k_};
            }
        }
        return {corrected.begin(), corrected.begin() + k_};
    }

private:
    int n_, k_, t_;
    BitString gen_;
};

}  // namespace lcac

#endif
