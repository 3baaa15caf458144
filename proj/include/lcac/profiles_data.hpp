#ifndef LCAC_PROFILES_DATA_HPP
#define LCAC_PROFILES_DATA_HPP

#include <array>
#include <string>
#include <vector>

#include "lcac/ggd.hpp"

// Bundled channel measurements: per-constellation GGD parameters estimated
// from physical print-and-scan runs.  "dps_*" entries cover the sixteen
// printer/scanner chains of a double print-scan copy; "sc_ns*" entries cover
// synthesized-copy channels built from 1..8 captured samples (mobile phone).

namespace lcac::data {

inline std::vector<ConstellationProfile> dps_profiles() {
    auto mk = [](const char* name, std::array<double, 12> v) {
        ConstellationProfile p;
        p.name = name;
        for (int i = 0; i < 4; ++i)
            p.points.push_back({v[3 * i], v[3 * i + 1], v[3 * i + 2]});
        return p;
    };
    return {
        mk("p1s1p1s1", {38.63, 138.53, 1.34, 119.87, 432.05, 1.77, 169.03, 333.62, 1.93, 215.83, 120.37, 1.76}),
        mk("p1s1p1s2", {33.71, 115.09, 1.28, 106.77, 405.33, 1.73, 175.59, 242.49, 1.96, 211.03, 128.23, 1.91}),
        mk("p1s1p2s1", {30.99, 156.18, 1.22, 110.31, 351.84, 1.75, 171.46, 217.05, 1.98, 210.87, 112.96, 1.99}),
        mk("p1s1p2s2", {31.02, 124.53, 1.15, 107.25, 276.83, 1.67, 168.13, 252.68, 1.94, 218.78, 216.23, 1.96}),
        mk("p1s2p1s1", {24.83, 34.01, 0.84, 100.54, 385.77, 1.83, 160.95, 267.73, 1.95, 202.44, 132.34, 1.81}),
        mk("p1s2p1s2", {23.38, 24.83, 0.65, 97.87, 348.76, 1.73, 159.89, 273.04, 1.91, 207.91, 190.38, 1.91}),
        mk("p1s2p2s1", {31.48, 29.65, 0.94, 105.64, 429.72, 2.35, 161.22, 221.04, 2.11, 203.75, 103.07, 1.72}),
        mk("p1s2p2s2", {30.55, 23.02, 0.87, 100.79, 401.96, 2.26, 159.54, 272.79, 2.05, 214.87, 194.64, 1.71}),
        mk("p2s1p1s1", {24.91, 85.63, 1.22, 114.92, 323.97, 2.16, 165.03, 226.41, 1.98, 198.55, 124.51, 1.99}),
        mk("p2s1p1s2", {26.33, 72.71, 1.16, 114.82, 246.74, 2.09, 164.29, 198.53, 1.93, 201.43, 128.01, 2.01}),
        mk("p2s1p2s1", {29.21, 110.79, 1.38, 111.27, 238.01, 2.07, 166.02, 158.36, 1.99, 188.91, 76.36, 1.86}),
        mk("p2s1p2s2", {33.69, 79.32, 1.44, 103.29, 198.15, 2.01, 165.97, 294.82, 1.84, 202.22, 220.46, 1.88}),
        mk("p2s2p1s1", {25.41, 31.56, 0.96, 111.59, 217.18, 1.88, 160.26, 172.17, 1.92, 198.09, 124.09, 2.02}),
        mk("p2s2p1s2", {25.14, 24.09, 0.82, 105.02, 177.93, 1.82, 156.64, 212.76, 1.89, 209.84, 276.31, 1.91}),
        mk("p2s2p2s1", {30.64, 21.97, 0.85, 103.56, 215.04, 2.24, 152.81, 183.35, 2.03, 187.54, 139.71, 2.17}),
        mk("p2s2p2s2", {22.11, 22.59, 0.64, 108.63, 260.99, 2.18, 163.53, 208.76, 1.99, 196.91, 139.13, 2.19}),
    };
}

inline std::vector<ConstellationProfile> sc_profiles() {
    auto mk = [](const char* name, double f, std::array<double, 12> v) {
        ConstellationProfile p;
        p.name = name;
        p.frequency = f;
        for (int i = 0; i < 4; ++i)
            p.points.push_back({v[3 * i], v[3 * i + 1], v[3 * i + 2]});
        return p;
    };
    return {
        mk("sc_ns1", 1, {41.06, 119.24, 1.39, 117.61, 474.53, 1.91, 167.05, 378.64, 2.18, 214.92, 129.37, 1.76}),
        mk("sc_ns2", 2, {40.45, 94.92, 1.39, 116.55, 470.69, 1.72, 171.53, 348.23, 2.04, 218.60, 113.73, 1.79}),
        mk("sc_ns3", 3, {40.66, 92.70, 1.33, 116.17, 431.69, 1.79, 165.71, 345.62, 1.98, 212.48, 126.68, 1.81}),
        mk("sc_ns4", 4, {38.77, 78.34, 1.33, 112.63, 418.92, 1.87, 163.50, 325.93, 1.78, 212.21, 121.21, 1.72}),
        mk("sc_ns5", 5, {39.76, 71.82, 1.44, 111.42, 414.32, 1.65, 163.70, 315.48, 1.92, 212.41, 106.46, 1.81}),
        mk("sc_ns6", 6, {39.94, 73.17, 1.41, 111.09, 412.73, 1.66, 163.81, 307.67, 1.94, 212.76, 97.87, 1.71}),
        mk("sc_ns7", 7, {39.14, 79.49, 1.42, 111.14, 400.48, 1.64, 164.69, 292.47, 1.95, 214.03, 93.28, 1.72}),
        mk("sc_ns8", 8, {38.25, 71.40, 1.26, 110.30, 393.58, 1.61, 164.88, 282.19, 1.83, 213.33, 87.11, 1.63}),
    };
}

// Published reference fit for the x2 = 100 constellation of the synthesized
// series above: mu(f) = a_mu * f^b_mu, sigma2(f) = a_sig * f^b_sig + c_sig.
struct ReferenceFit {
    double a_mu = 118.6;
    double b_mu = -0.0342;
    double a_sigma = -138.5;
    double b_sigma = 0.232;
    double c_sigma = 617.7;
};

inline ReferenceFit reference_fit_x2() { return {}; }

}  // namespace lcac::data

#endif
