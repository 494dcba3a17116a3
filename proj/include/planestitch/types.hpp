#pragma once

#include <Eigen/Dense>
#include <Eigen/Geometry>
#include <stdexcept>
#include <string>

namespace planestitch {

struct StitchError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct DegenerateInput : StitchError { using StitchError::StitchError; };
struct NotARotation : StitchError { using StitchError::StitchError; };
struct DegenerateOffset : StitchError { using StitchError::StitchError; };
struct RayParallel : StitchError { using StitchError::StitchError; };
struct BehindCamera : StitchError { using StitchError::StitchError; };
struct InsufficientData : StitchError { using StitchError::StitchError; };
struct NumericalFailure : StitchError { using StitchError::StitchError; };
struct SchemaError : StitchError { using StitchError::StitchError; };
struct NormalizationError : StitchError { using StitchError::StitchError; };
struct DimensionMismatch : StitchError { using StitchError::StitchError; };
struct LengthMismatch : StitchError { using StitchError::StitchError; };
struct RetryExhausted : StitchError { using StitchError::StitchError; };

// Plane n'X = o with ||n|| = 1 and o >= 0. Constructions that would yield a
// negative offset flip both normal and offset so the representation is unique.
struct Plane {
    Eigen::Vector3d normal{0.0, 0.0, 1.0};
    double offset{1.0};

    Plane() = default;
    Plane(const Eigen::Vector3d& n, double o) {
        const double len = n.norm();
        if (!(len > 1e-12) || !n.allFinite() || !std::isfinite(o))
            throw DegenerateInput("Plane: normal must be a finite nonzero vector");
        normal = n / len;
        offset = o;
        if (offset < 0.0) {
            normal = -normal;
            offset = -offset;
        }
    }

    // Offset-scaled normal q = o * n, the unconstrained parameterization.
    Eigen::Vector3d q() const { return offset * normal; }

    static Plane from_q(const Eigen::Vector3d& q) {
        const double len = q.norm();
        if (!(len > 1e-12)) throw DegenerateInput("Plane::from_q: |q| ~ 0");
        return Plane(q / len, len);
    }

    double signed_distance(const Eigen::Vector3d& x) const {
        return normal.dot(x) - offset;
    }
};

// Canonical quaternion form: w >= 0; if w == 0, first nonzero of (x,y,z) positive.
inline Eigen::Quaterniond canonical(const Eigen::Quaterniond& q) {
    Eigen::Quaterniond r = q.normalized();
    bool flip = r.w() < 0.0;
    if (r.w() == 0.0) {
        if (r.x() != 0.0) flip = r.x() < 0.0;
        else if (r.y() != 0.0) flip = r.y() < 0.0;
        else flip = r.z() < 0.0;
    }
    if (flip) r.coeffs() = -r.coeffs();
    return r;
}

// Rigid transform mapping points of the source camera frame into the target
// frame: x_target = R * x_source + t.
struct CameraPose {
    Eigen::Quaterniond rotation{1.0, 0.0, 0.0, 0.0};
    Eigen::Vector3d translation{0.0, 0.0, 0.0};

    CameraPose() = default;
    CameraPose(const Eigen::Quaterniond& q, const Eigen::Vector3d& t)
        : rotation(canonical(q)), translation(t) {}
    CameraPose(const Eigen::Matrix3d& r, const Eigen::Vector3d& t)
        : rotation(canonical(Eigen::Quaterniond(r))), translation(t) {}

    Eigen::Matrix3d matrix() const { return rotation.toRotationMatrix(); }

    Eigen::Vector3d apply(const Eigen::Vector3d& x) const {
        return rotation * x + translation;
    }

    CameraPose inverse() const {
        Eigen::Quaterniond qi = rotation.conjugate();
        return CameraPose(qi, -(qi * translation));
    }

    CameraPose compose(const CameraPose& inner) const {
        // (*this) after inner: x -> R_outer (R_inner x + t_inner) + t_outer
        return CameraPose(rotation * inner.rotation,
                          rotation * inner.translation + translation);
    }

    static CameraPose identity() { return CameraPose(); }
};

// First two columns of a rotation matrix, before Gram-Schmidt.
struct Rot6D {
    Eigen::Vector3d a1{1.0, 0.0, 0.0};
    Eigen::Vector3d a2{0.0, 1.0, 0.0};
};

struct Intrinsics {
    double fx{480.0};
    double fy{480.0};
    double cx{320.0};
    double cy{240.0};
    int width{640};
    int height{480};

    bool valid() const {
        return fx > 0 && fy > 0 && cx > 0 && cx < width && cy > 0 && cy < height &&
               width > 0 && height > 0;
    }

    bool contains(double u, double v) const {
        return u >= 0.0 && u < width && v >= 0.0 && v < height;
    }
};

}  // namespace planestitch
