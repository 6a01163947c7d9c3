// Copyright (c) 2026 the secbeam authors
// SPDX-License-Identifier: Apache-2.0

/// \file channel.hpp
/// \brief Correlated MISO wiretap channel model.
///
/// An Ns-antenna source talks to a single-antenna destination over h while a
/// single-antenna eavesdropper listens over g.  Transmit side is
/// independent; receive side is correlated per antenna with power
/// correlation coefficients rho_i = corr(h_i^2, g_i^2).  Conditioned on h,
/// the wiretap channel decomposes into a deterministic part plus white
/// complex Gaussian noise:
///
///     g = (sigma_e / sigma_d) sqrt(Theta) h + sigma_e sqrt(I - Theta) z,
///
/// with Theta = diag(rho_1, ..., rho_Ns) and z ~ CN(0, I).  |g_i|^2 given
/// |h_i|^2 = y_i is noncentral chi-square (2 dof) with per-component
/// variance sigma_i^2 = (1 - rho_i) sigma_e^2 / 2 and noncentrality
/// amplitude s_i = sqrt(y_i rho_i sigma_e^2 / sigma_d^2).

#pragma once

#include <cmath>
#include <complex>
#include <stdexcept>
#include <string>

#include <Eigen/Dense>

#include "secbeam/rng.hpp"

namespace secbeam {

namespace detail {

inline void require(bool cond, const char* msg) {
    if (!cond) throw std::domain_error(msg);
}

} // namespace detail

/// Modified Bessel function of the first kind, order zero, scaled by
/// exp(-x).  Power series below the crossover, asymptotic expansion above;
/// both converge to better than 1e-12 relative there.
inline double bessel_i0_scaled(double x) {
    detail::require(x >= 0.0, "bessel_i0: negative argument");
    if (x < 20.0) {
        // I0(x) = sum_k ((x/2)^k / k!)^2, then scale.
        const double q = 0.25 * x * x;
        double term = 1.0, sum = 1.0;
        for (int k = 1; k < 200; ++k) {
            term *= q / (static_cast<double>(k) * k);
            sum += term;
            if (term < 1e-15 * sum) break;
        }
        return sum * std::exp(-x);
    }
    // I0(x) ~ e^x / sqrt(2 pi x) * sum_k a_k / x^k,
    // a_0 = 1, a_{k+1} = a_k (2k+1)^2 / (8(k+1)).
    double coeff = 1.0, sum = 1.0;
    for (int k = 0; k < 30; ++k) {
        coeff *= (2.0 * k + 1.0) * (2.0 * k + 1.0) / (8.0 * (k + 1.0));
        const double term = coeff / std::pow(x, k + 1.0);
        sum += term;
        if (term < 1e-16 * sum) break;
    }
    return sum / std::sqrt(2.0 * M_PI * x);
}

/// I0(x) itself.  Signals overflow instead of returning inf.
inline double bessel_i0(double x) {
    const double scaled = bessel_i0_scaled(x);
    const double log_value = x + std::log(scaled);
    if (log_value > 709.0)
        throw std::overflow_error("bessel_i0: argument " + std::to_string(x) +
                                  " overflows double range");
    return std::exp(log_value);
}

namespace detail {

/// Density of |c|^2 for c ~ CN(m, 2 sigma_sq) with |m| = s: the noncentral
/// chi-square (2 dof) density
///     f(x) = exp(-(s^2+x)/(2 sigma^2)) / (2 sigma^2) * I0(s sqrt(x)/sigma^2)
/// evaluated through the scaled Bessel so large noncentralities do not
/// overflow: the combined exponent is -(sqrt(x)-s)^2/(2 sigma^2) <= 0.
inline double ncx2_density(double x, double sigma_sq, double s) {
    require(sigma_sq > 0.0, "ncx2_density: sigma_sq must be positive");
    require(s >= 0.0, "ncx2_density: s must be nonnegative");
    if (x <= 0.0) return 0.0;
    const double rx = std::sqrt(x);
    const double arg = s * rx / sigma_sq;
    const double expo = -(rx - s) * (rx - s) / (2.0 * sigma_sq);
    return bessel_i0_scaled(arg) * std::exp(expo) / (2.0 * sigma_sq);
}

} // namespace detail

/// One block realization of the correlated wiretap setup: the known main
/// channel h, the two channel-gain variances, and the per-antenna power
/// correlation coefficients.
struct ChannelRealization {
    Eigen::VectorXcd h;
    double sigma_d_sq = 1.0;
    double sigma_e_sq = 1.0;
    Eigen::VectorXd rho;

    ChannelRealization(Eigen::VectorXcd h_in, double sd2, double se2, Eigen::VectorXd rho_in)
        : h(std::move(h_in)), sigma_d_sq(sd2), sigma_e_sq(se2), rho(std::move(rho_in)) {
        detail::require(h.size() >= 2, "ChannelRealization: need at least two antennas");
        detail::require(rho.size() == h.size(), "ChannelRealization: rho/h dimension mismatch");
        detail::require(sigma_d_sq > 0.0 && sigma_e_sq > 0.0,
                        "ChannelRealization: variances must be positive");
        for (Eigen::Index i = 0; i < rho.size(); ++i)
            detail::require(rho[i] >= 0.0 && rho[i] < 1.0,
                            "ChannelRealization: rho must lie in [0,1)");
    }

    Eigen::Index ns() const { return h.size(); }
};

/// Per-antenna complex-Gaussian law of g conditioned on h:
/// mean_i = sigma_e sqrt(rho_i)/sigma_d * h_i, var_i = sigma_e^2 (1-rho_i).
struct WiretapStats {
    Eigen::VectorXcd mean;
    Eigen::VectorXd var;
};

/// Law of the shifted wiretap channel g~ = g - sigma_e sqrt(rho0)/sigma_d h
/// with rho0 = min_i rho_i; this is the part of g visible through any
/// direction orthogonal to h.  s_tilde_sq_i is the squared mean magnitude,
/// sigma_i_sq the per-component variance of g~_i.
struct ShiftedWiretapStats {
    double rho0 = 0.0;
    Eigen::VectorXcd mean;
    Eigen::VectorXd var;
    Eigen::VectorXd s_tilde_sq;
    Eigen::VectorXd sigma_i_sq;
};

/// Joint density of the subchannel powers, f(x, y) with x the wiretap power
/// |g_i|^2 and y the main power |h_i|^2:
///
///   f(x,y) = I0( 2 sqrt(rho x y / (sd2 se2)) / (1-rho) ) / ((1-rho) sd2 se2)
///            * exp( -(x/se2 + y/sd2) / (1-rho) ).
///
/// Marginalizing over x recovers the exponential main-power law, and
/// f(x,y)/f_{h^2}(y) is exactly conditional_power_pdf(x | y).
inline double joint_power_pdf(double x, double y, double rho, double sigma_d_sq,
                              double sigma_e_sq) {
    detail::require(rho >= 0.0 && rho < 1.0, "joint_power_pdf: rho must lie in [0,1)");
    detail::require(sigma_d_sq > 0.0 && sigma_e_sq > 0.0,
                    "joint_power_pdf: variances must be positive");
    if (x <= 0.0 || y <= 0.0) return 0.0;
    const double one_m = 1.0 - rho;
    const double arg = 2.0 * std::sqrt(rho * x * y / (sigma_d_sq * sigma_e_sq)) / one_m;
    const double expo = -(x / sigma_e_sq + y / sigma_d_sq) / one_m;
    // arg + expo <= 0, so the scaled form is stable for any rho < 1.
    return bessel_i0_scaled(arg) * std::exp(arg + expo) / (one_m * sigma_d_sq * sigma_e_sq);
}

/// Exponential density of the main subchannel power |h_i|^2.
inline double main_power_pdf(double y, double sigma_d_sq) {
    detail::require(sigma_d_sq > 0.0, "main_power_pdf: variance must be positive");
    if (y <= 0.0) return 0.0;
    return std::exp(-y / sigma_d_sq) / sigma_d_sq;
}

/// Density of the wiretap subchannel power |g_i|^2 given |h_i|^2 = y_i:
/// noncentral chi-square (2 dof) with sigma_i^2 = (1-rho_i) sigma_e^2 / 2
/// and s_i = sqrt(y_i rho_i sigma_e^2 / sigma_d^2).
inline double conditional_power_pdf(double x, double y_i, double rho_i, double sigma_d_sq,
                                    double sigma_e_sq) {
    detail::require(rho_i >= 0.0 && rho_i < 1.0, "conditional_power_pdf: rho must lie in [0,1)");
    detail::require(sigma_d_sq > 0.0 && sigma_e_sq > 0.0,
                    "conditional_power_pdf: variances must be positive");
    detail::require(y_i > 0.0, "conditional_power_pdf: conditioning power must be positive");
    const double sigma_sq = 0.5 * (1.0 - rho_i) * sigma_e_sq;
    const double s = std::sqrt(y_i * rho_i * sigma_e_sq / sigma_d_sq);
    return detail::ncx2_density(x, sigma_sq, s);
}

inline WiretapStats wiretap_stats(const ChannelRealization& ch) {
    const Eigen::Index n = ch.ns();
    WiretapStats st;
    st.mean.resize(n);
    st.var.resize(n);
    const double ratio = std::sqrt(ch.sigma_e_sq / ch.sigma_d_sq);
    for (Eigen::Index i = 0; i < n; ++i) {
        st.mean[i] = ratio * std::sqrt(ch.rho[i]) * ch.h[i];
        st.var[i] = ch.sigma_e_sq * (1.0 - ch.rho[i]);
    }
    return st;
}

inline ShiftedWiretapStats shifted_stats(const ChannelRealization& ch) {
    const Eigen::Index n = ch.ns();
    ShiftedWiretapStats st;
    st.rho0 = ch.rho.minCoeff();
    st.mean.resize(n);
    st.var.resize(n);
    st.s_tilde_sq.resize(n);
    st.sigma_i_sq.resize(n);
    const double ratio = std::sqrt(ch.sigma_e_sq / ch.sigma_d_sq);
    const double r0 = std::sqrt(st.rho0);
    for (Eigen::Index i = 0; i < n; ++i) {
        const double shift = std::sqrt(ch.rho[i]) - r0;
        st.mean[i] = ratio * shift * ch.h[i];
        st.var[i] = ch.sigma_e_sq * (1.0 - ch.rho[i]);
        st.s_tilde_sq[i] = std::norm(st.mean[i]);
        st.sigma_i_sq[i] = 0.5 * (1.0 - ch.rho[i]) * ch.sigma_e_sq;
    }
    return st;
}

/// One draw of g conditioned on ch.h.
inline Eigen::VectorXcd sample_wiretap(const ChannelRealization& ch, Rng& rng) {
    const Eigen::Index n = ch.ns();
    Eigen::VectorXcd g(n);
    const double ratio = std::sqrt(ch.sigma_e_sq / ch.sigma_d_sq);
    const double se = std::sqrt(ch.sigma_e_sq);
    for (Eigen::Index i = 0; i < n; ++i) {
        g[i] = ratio * std::sqrt(ch.rho[i]) * ch.h[i] +
               se * std::sqrt(1.0 - ch.rho[i]) * rng.cgauss();
    }
    return g;
}

/// Shifted channel g~ = g - sigma_e sqrt(rho0)/sigma_d h for a drawn g.
/// For any a with h^H a = 0, g^H a = g~^H a.
inline Eigen::VectorXcd shifted_wiretap(const ChannelRealization& ch, const Eigen::VectorXcd& g) {
    const double r0 = std::sqrt(ch.rho.minCoeff());
    const double ratio = std::sqrt(ch.sigma_e_sq / ch.sigma_d_sq);
    return g - (ratio * r0) * ch.h;
}

/// i.i.d. draw h ~ CN(0, sigma_d_sq I).
inline Eigen::VectorXcd sample_main(Eigen::Index ns, double sigma_d_sq, Rng& rng) {
    detail::require(ns >= 2, "sample_main: need at least two antennas");
    detail::require(sigma_d_sq > 0.0, "sample_main: variance must be positive");
    const double sd = std::sqrt(sigma_d_sq);
    Eigen::VectorXcd h(ns);
    for (Eigen::Index i = 0; i < ns; ++i) h[i] = sd * rng.cgauss();
    return h;
}

inline double db_to_watts(double p_dbw) { return std::pow(10.0, p_dbw / 10.0); }

/// Per-antenna correlation profile for sweeps: uniform on
/// [rho-0.2, rho+0.2] clipped to [0, 0.99].
inline Eigen::VectorXd draw_rho_profile(double rho, Eigen::Index ns, Rng& rng) {
    Eigen::VectorXd out(ns);
    for (Eigen::Index i = 0; i < ns; ++i) {
        const double r = rho - 0.2 + 0.4 * rng.uniform();
        out[i] = std::clamp(r, 0.0, 0.99);
    }
    return out;
}

} // namespace secbeam
