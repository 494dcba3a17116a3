#include "planestitch/geometry.hpp"

#include <algorithm>
#include <cmath>

namespace planestitch {

Eigen::Matrix3d rot6d_to_matrix(const Rot6D& v) {
    const double n1 = v.a1.norm();
    if (!(n1 > 1e-12) || !v.a1.allFinite() || !v.a2.allFinite())
        throw DegenerateInput("rot6d_to_matrix: |a1| ~ 0 or non-finite input");
    const Eigen::Vector3d b1 = v.a1 / n1;
    const Eigen::Vector3d res = v.a2 - b1.dot(v.a2) * b1;
    const double n2 = res.norm();
    if (!(n2 > 1e-12))
        throw DegenerateInput("rot6d_to_matrix: a2 parallel to a1");
    const Eigen::Vector3d b2 = res / n2;
    const Eigen::Vector3d b3 = b1.cross(b2);
    Eigen::Matrix3d r;
    r.col(0) = b1;
    r.col(1) = b2;
    r.col(2) = b3;
    return r;
}

Rot6D matrix_to_rot6d(const Eigen::Matrix3d& r) {
    const double ortho = (r.transpose() * r - Eigen::Matrix3d::Identity()).norm();
    if (ortho > 1e-6 || std::abs(r.determinant() - 1.0) > 1e-6)
        throw NotARotation("matrix_to_rot6d: input is not a proper rotation");
    Rot6D v;
    v.a1 = r.col(0);
    v.a2 = r.col(1);
    return v;
}

double geodesic_distance(const Eigen::Matrix3d& r1, const Eigen::Matrix3d& r2) {
    const double tr = (r1.transpose() * r2).trace();
    return std::acos(std::clamp((tr - 1.0) / 2.0, -1.0, 1.0));
}

double geodesic_distance(const Eigen::Quaterniond& q1, const Eigen::Quaterniond& q2) {
    // |q1 . q2| = cos(theta / 2) on the double cover.
    const double d = std::clamp(std::abs(q1.dot(q2)), 0.0, 1.0);
    return 2.0 * std::acos(d);
}

Plane cam2world(const Plane& plane, const CameraPose& pose) {
    if (plane.offset <= kOffsetEps)
        throw DegenerateOffset("cam2world: plane offset <= 1e-9");
    const Eigen::Vector3d u = pose.rotation * plane.q();
    const double u2 = u.squaredNorm();
    const Eigen::Vector3d p = (1.0 + pose.translation.dot(u) / u2) * u;
    const double ow = p.norm();
    if (ow <= kOffsetEps)
        throw DegenerateOffset("cam2world: transformed plane passes through the origin");
    return Plane(p / ow, ow);
}

Plane world2cam(const Plane& plane, const CameraPose& pose) {
    const Eigen::Vector3d nc = pose.rotation.conjugate() * plane.normal;
    const double oc = plane.offset - pose.translation.dot(plane.normal);
    if (std::abs(oc) <= kOffsetEps)
        throw DegenerateOffset("world2cam: transformed plane passes through the origin");
    return Plane(nc, oc);  // Plane ctor re-applies the o >= 0 convention
}

Eigen::Vector3d backproject(double u, double v, const Plane& plane, const Intrinsics& k) {
    const Eigen::Vector3d ray((u - k.cx) / k.fx, (v - k.cy) / k.fy, 1.0);
    const double denom = plane.normal.dot(ray);
    if (std::abs(denom) < 1e-9)
        throw RayParallel("backproject: viewing ray parallel to plane");
    const double s = plane.offset / denom;
    if (s <= 0.0)
        throw BehindCamera("backproject: intersection behind the camera");
    return s * ray;
}

}  // namespace planestitch
