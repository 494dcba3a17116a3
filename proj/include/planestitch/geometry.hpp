#pragma once

#include "planestitch/types.hpp"

namespace planestitch {

constexpr double kOffsetEps = 1e-9;

/// Gram-Schmidt orthonormalization of the 6D rotation parameterization.
/// Columns of the result are b1 = a1/|a1|, b2 = normalize(a2 - (b1'a2) b1),
/// b3 = b1 x b2.
Eigen::Matrix3d rot6d_to_matrix(const Rot6D& v);

/// Inverse map: first two columns of R. Validates that R is a proper rotation.
Rot6D matrix_to_rot6d(const Eigen::Matrix3d& r);

/// Angle of the relative rotation, acos((trace(R1'R2) - 1) / 2), in [0, pi].
double geodesic_distance(const Eigen::Matrix3d& r1, const Eigen::Matrix3d& r2);
double geodesic_distance(const Eigen::Quaterniond& q1, const Eigen::Quaterniond& q2);

/// Carries plane parameters from the source camera frame into the target
/// frame of `pose` (x_t = R x_s + t):
///   P = (1 + t . R(o n) / |R(o n)|^2) R(o n), n_w = P/|P|, o_w = |P|.
/// Throws DegenerateOffset when the input or output plane passes through the
/// frame origin (|o| <= 1e-9), where the formula is undefined.
Plane cam2world(const Plane& plane, const CameraPose& pose);

/// Algebraic inverse of cam2world: n_c = R' n_w, o_c = o_w - t . n_w,
/// re-canonicalized to o >= 0. Throws DegenerateOffset near zero offsets.
Plane world2cam(const Plane& plane, const CameraPose& pose);

/// Intersects the viewing ray of pixel (u, v) with the plane. Returns the 3D
/// point s * ((u-cx)/fx, (v-cy)/fy, 1) with s = o / (n'r).
Eigen::Vector3d backproject(double u, double v, const Plane& plane, const Intrinsics& k);

}  // namespace planestitch
