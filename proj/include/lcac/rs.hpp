#ifndef LCAC_RS_HPP
#define LCAC_RS_HPP

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "lcac/gf256.hpp"

namespace lcac {

/// Systematic Reed-Solomon codec over GF(2^8), codeword length 255 symbols.
/// Codeword layout: [message symbols | parity symbols].
class ReedSolomon {
public:
    ReedSolomon(int n_symbols, int k_symbols)
        : n_(n_symbols), k_(k_symbols), t_((n_symbols - k_symbols) / 2) {
        if (n_ != 255 || k_ <= 0 || k_ >= n_ || (n_ - k_) % 2 != 0)
            throw std::invalid_argument("ReedSolomon: unsupported (n, k)");
        // generator polynomial: prod_{i=0}^{2t-1} (x - alpha^i)
        gen_.assign(1, 1);
        for (int i = 0; i < n_ - k_; ++i) {
            std::vector<std::uint8_t> next(gen_.size() + 1, 0);
            for (std::size_t j = 0; j < gen_.size(); ++j) {
                next[j] ^= gen_[j];
                next[j + 1] ^= gf::mul(gen_[j], gf::alpha_pow(i));
            }
            gen_ = std::move(next);
        }
    }

    int n() const { return n_; }
    int k() const { return k_; }
    int t() const { return t_; }

    std::vector<std::uint8_t> encode(const std::vector<std::uint8_t>& msg) const {
        if (static_cast<int>(msg.size()) != k_)
            throw std::invalid_argument("rs encode: message length mismatch");
        // long division of msg(x) * x^(n-k) by gen(x); remainder is the parity
        std::vector<std::uint8_t> rem(n_ - k_, 0);
        for (int i = 0; i < k_; ++i) {
            std::uint8_t coef = msg[i] ^ rem[0];
            rem.erase(rem.begin());
            rem.push_back(0);
            if (coef != 0)
                for (int j = 0; j < n_ - k_; ++j)
                    rem[j] ^= gf::mul(gen_[j + 1], coef);
        }
        std::vector<std::uint8_t> cw(msg);
        cw.insert(cw.end(), rem.begin(), rem.end());
        return cw;
    }

    /// Bounded-distance decode. Returns the message symbols; sets `failed` when
    /// more than t symbol errors are present (message portion returned uncorrected).
    std::vector<std::uint8_t> decode(const std::vector<std::uint8_t>& word, bool& failed) const {
        if (static_cast<int>(word.size()) != n_)
            throw std::invalid_argument("rs decode: word length mismatch");
        failed = false;
        const int nsyn = n_ - k_;
        std::vector<std::uint8_t> syn(nsyn, 0);
        bool all_zero = true;
        for (int i = 0; i < nsyn; ++i) {
            std::uint8_t s = 0;
            for (int j = 0; j < n_; ++j)
                s = gf::mul(s, gf::alpha_pow(i)) ^ word[j];
            syn[i] = s;
            if (s) all_zero = false;
        }
        if (all_zero)
            return {word.begin(), word.begin() + k_};

        // Berlekamp-Massey for the error locator polynomial
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

        // Chien search over codeword indices; index p evaluates at alpha^{-(n-1-p)}
        std::vector<int> errpos;
        for (int p = 0; p < n_; ++p) {
            std::uint8_t x = gf::alpha_pow(-(n_ - 1 - p));
            std::uint8_t v = 0;
            for (int j = deg; j >= 0; --j)
                v = gf::mul(v, x) ^ lambda[j];
            if (v == 0) errpos.push_back(p);
        }
        if (static_cast<int>(errpos.size()) != deg) {
            failed = true;
            return {word.begin(), word.begin() + k_};
        }

        // Forney: omega(x) = syn(x) * lambda(x) mod x^(2t)
        std::vector<std::uint8_t> omega(nsyn, 0);
        for (int i = 0; i < nsyn; ++i)
            for (int j = 0; j <= deg && j <= i; ++j)
                omega[i] ^= gf::mul(syn[i - j], lambda[j]);
        std::vector<std::uint8_t> corrected(word);
        for (int p : errpos) {
            // codeword index j maps to evaluation point alpha^{n-1-j}; we index
            // positions so that word[j] multiplies alpha^{i*(n-1-j)} in syndromes
            std::uint8_t xinv = gf::alpha_pow(-(n_ - 1 - p));
            std::uint8_t num = 0;
            for (int j = nsyn - 1; j >= 0; --j)
                num = gf::mul(num, xinv) ^ omega[j];
            std::uint8_t den = 0;
            for (int j = 1; j <= deg; j += 2)
                den ^= gf::mul(lambda[j], gf::pow(xinv, j - 1));
            if (den == 0) {
                failed = true;
                return {word.begin(), word.begin() + k_};
            }
            corrected[p] ^= gf::mul(gf::alpha_pow(n_ - 1 - p), gf::div(num, den));
        }

        // verify syndromes of the corrected word
        for (int i = 0; i < nsyn; ++i) {
            std::uint8_t s = 0;
            for (int j = 0; j < n_; ++j)
                s = gf::mul(s, gf::alpha_pow(i)) ^ corrected[j];
            if (s != 0) {
                failed = true;
                return {word.begin(), word.begin() + k_};
            }
        }
        return {corrected.begin(), corrected.begin() + k_};
    }

private:
    int n_, k_, t_;
    std::vector<std::uint8_t> gen_;  // gen_[0] = leading coefficient (monic)
};

}  // namespace lcac

#endif
