#pragma once

#include "quadrover/vec3.hpp"

namespace quadrover {

// Row-major 3x3 matrix, used as a world-from-body rotation throughout.
struct Mat3 {
    double m[3][3]{{1.0, 0.0, 0.0}, {0.0, 1.0, 0.0}, {0.0, 0.0, 1.0}};

    static Mat3 identity() { return Mat3{}; }

    double operator()(int r, int c) const { return m[r][c]; }
    double& operator()(int r, int c) { return m[r][c]; }

    Mat3 operator*(const Mat3& b) const;
    Vec3 operator*(const Vec3& v) const;

    Mat3 transposed() const;
    double trace() const { return m[0][0] + m[1][1] + m[2][2]; }

    // Column as a vector; column 2 of a rotation is the body z axis in world frame.
    Vec3 col(int c) const { return {m[0][c], m[1][c], m[2][c]}; }
};

// Rotation described by a unit axis and an angle in radians.
struct AxisAngle {
    Vec3 axis{0.0, 0.0, 1.0};
    double angle{0.0};
};

// Rodrigues formula. The axis is normalized internally; a zero axis with a
// nonzero angle is a domain error.
Mat3 axis_angle_to_matrix(const AxisAngle& aa);

// Inverse map: rotation vector (axis * angle, angle in [0, pi]) of R.
// Handles the small-angle and near-pi branches; throws std::domain_error if R
// is not orthonormal within 1e-6.
Vec3 matrix_to_rotvec(const Mat3& R);

// Rotation about world z by yaw psi [rad].
Mat3 yaw_matrix(double psi);

// Yaw angle [rad] of the body x axis projected to the world xy plane.
double yaw_of(const Mat3& R);

// One Newton-Schulz step X(3I - X^T X)/2; pulls a slightly drifted rotation
// back toward the orthonormal manifold.
Mat3 orthonormalized(const Mat3& R);

// Max |R^T R - I| entry, used to validate inputs and watch integration drift.
double orthonormality_error(const Mat3& R);

}  // namespace quadrover
