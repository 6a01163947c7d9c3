// Copyright (c) 2026 the secbeam authors
// SPDX-License-Identifier: Apache-2.0

/// \file rng.hpp
/// \brief Deterministic random source with derivable independent streams.
///
/// Every stochastic routine in the library takes an explicit Rng so that a
/// recorded seed reproduces a run bit for bit.  Gaussian deviates are drawn
/// by Box-Muller from the raw engine bits rather than through
/// std::normal_distribution, whose output is implementation-defined.

#pragma once

#include <complex>
#include <cstdint>
#include <random>

#include <Eigen/Dense>

namespace secbeam {

namespace detail {

/// splitmix64 finalizer; used to decorrelate derived stream seeds.
inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    std::uint64_t z = x;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

} // namespace detail

/// Seed for an independent substream (worker, replication, instance).
/// Mixing is order-free: stream i of seed s is the same no matter how many
/// other streams were derived before it.
inline std::uint64_t derive_stream(std::uint64_t master, std::uint64_t index) {
    return detail::splitmix64(master ^ detail::splitmix64(index + 1));
}

class Rng {
  public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next_u64() { return engine_(); }

    /// Uniform on [0, 1).
    double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

    /// Standard normal via Box-Muller (pair cached).
    double normal() {
        if (have_cached_) {
            have_cached_ = false;
            return cached_;
        }
        // u1 in (0,1] so the log is finite.
        const double u1 = (static_cast<double>(engine_() >> 11) + 1.0) * 0x1.0p-53;
        const double u2 = uniform();
        const double r = std::sqrt(-2.0 * std::log(u1));
        const double t = 2.0 * M_PI * u2;
        cached_ = r * std::sin(t);
        have_cached_ = true;
        return r * std::cos(t);
    }

    /// Circularly symmetric complex Gaussian, unit total variance:
    /// CN(0,1) = (N(0,1/2) + j N(0,1/2)).
    std::complex<double> cgauss() {
        const double s = M_SQRT1_2;
        return {s * normal(), s * normal()};
    }

    Eigen::VectorXcd cgauss_vector(Eigen::Index n) {
        Eigen::VectorXcd v(n);
        for (Eigen::Index i = 0; i < n; ++i) v[i] = cgauss();
        return v;
    }

  private:
    std::mt19937_64 engine_;
    double cached_ = 0.0;
    bool have_cached_ = false;
};

} // namespace secbeam
