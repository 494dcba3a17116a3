#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>
#include <random>

#include "planestitch/types.hpp"

namespace planestitch {

// mt19937_64 with hand-specified output transforms. std::*_distribution is
// implementation-defined, so every draw here is spelled out to keep fixtures
// and file outputs bit-stable across toolchains.
class Rng {
public:
    explicit Rng(uint64_t seed) : engine_(seed) {}

    uint64_t next_u64() { return engine_(); }

    // uniform in [0, 1) with 53 random bits
    double uniform01() {
        return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
    }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

    // index in [0, n)
    size_t index(size_t n) { return static_cast<size_t>(engine_() % n); }

    // standard normal via Box-Muller; consumes exactly two uniforms
    double normal() {
        double u1 = uniform01();
        while (u1 <= 0.0) u1 = uniform01();
        const double u2 = uniform01();
        return std::sqrt(-2.0 * std::log(u1)) *
               std::cos(2.0 * std::numbers::pi * u2);
    }

    Eigen::Vector3d gaussian3() {
        const double a = normal(), b = normal(), c = normal();
        return {a, b, c};
    }

    Eigen::Vector3d unit_vector3() {
        for (;;) {
            const Eigen::Vector3d g = gaussian3();
            const double len = g.norm();
            if (len > 1e-9) return g / len;
        }
    }

    Eigen::VectorXd unit_vector(int dim) {
        for (;;) {
            Eigen::VectorXd g(dim);
            for (int i = 0; i < dim; ++i) g[i] = normal();
            const double len = g.norm();
            if (len > 1e-9) return g / len;
        }
    }

    // uniform rotation (Shoemake)
    Eigen::Quaterniond rotation() {
        const double u1 = uniform01(), u2 = uniform01(), u3 = uniform01();
        const double two_pi = 2.0 * std::numbers::pi;
        const double a = std::sqrt(1.0 - u1), b = std::sqrt(u1);
        return canonical(Eigen::Quaterniond(a * std::sin(two_pi * u2),
                                            a * std::cos(two_pi * u2),
                                            b * std::sin(two_pi * u3),
                                            b * std::cos(two_pi * u3)));
    }

    // rotation by `angle_rad` about a uniformly random axis
    Eigen::Quaterniond rotation_with_angle(double angle_rad) {
        return canonical(Eigen::Quaterniond(
            Eigen::AngleAxisd(angle_rad, unit_vector3())));
    }

    template <typename T>
    void shuffle(std::vector<T>& v) {
        for (size_t i = v.size(); i > 1; --i) {
            const size_t j = index(i);
            std::swap(v[i - 1], v[j]);
        }
    }

private:
    std::mt19937_64 engine_;
};

}  // namespace planestitch
