#include "quadrover/rotation.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace quadrover {

Mat3 Mat3::operator*(const Mat3& b) const {
    Mat3 r;
    for (int i = 0; i < 3; ++i) {
        for (int j = 0; j < 3; ++j) {
            double s = 0.0;
            for (int k = 0; k < 3; ++k) s += m[i][k] * b.m[k][j];
            r.m[i][j] = s;
        }
    }
    return r;
}

Vec3 Mat3::operator*(const Vec3& v) const {
    return {m[0][0] * v.x + m[0][1] * v.y + m[0][2] * v.z,
            m[1][0] * v.x + m[1][1] * v.y + m[1][2] * v.z,
            m[2][0] * v.x + m[2][1] * v.y + m[2][2] * v.z};
}

Mat3 Mat3::transposed() const {
    Mat3 r;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) r.m[i][j] = m[j][i];
    return r;
}

Mat3 axis_angle_to_matrix(const AxisAngle& aa) {
    const double n = aa.axis.norm();
    if (n == 0.0) {
        if (aa.angle != 0.0) throw std::domain_error("axis_angle_to_matrix: zero axis with nonzero angle");
        return Mat3::identity();
    }
    const Vec3 u = aa.axis / n;
    const double c = std::cos(aa.angle);
    const double s = std::sin(aa.angle);
    const double t = 1.0 - c;

    Mat3 R;
    R.m[0][0] = c + u.x * u.x * t;
    R.m[0][1] = u.x * u.y * t - u.z * s;
    R.m[0][2] = u.x * u.z * t + u.y * s;
    R.m[1][0] = u.y * u.x * t + u.z * s;
    R.m[1][1] = c + u.y * u.y * t;
    R.m[1][2] = u.y * u.z * t - u.x * s;
    R.m[2][0] = u.z * u.x * t - u.y * s;
    R.m[2][1] = u.z * u.y * t + u.x * s;
    R.m[2][2] = c + u.z * u.z * t;
    return R;
}

double orthonormality_error(const Mat3& R) {
    const Mat3 g = R.transposed() * R;
    double e = 0.0;
    for (int i = 0; i < 3; ++i) {
        for (int j = 0; j < 3; ++j) {
            const double target = (i == j) ? 1.0 : 0.0;
            e = std::max(e, std::fabs(g.m[i][j] - target));
        }
    }
    return e;
}

Vec3 matrix_to_rotvec(const Mat3& R) {
    if (orthonormality_error(R) > 1e-6) {
        throw std::domain_error("matrix_to_rotvec: matrix is not orthonormal");
    }

    // Skew-symmetric part encodes 2 sin(theta) * axis.
    const Vec3 w{R.m[2][1] - R.m[1][2], R.m[0][2] - R.m[2][0], R.m[1][0] - R.m[0][1]};
    // atan2 of (2 sin, 2 cos) keeps the angle well conditioned at both ends;
    // acos of the trace alone loses half the digits as theta approaches pi.
    const double theta = std::atan2(0.5 * w.norm(), (R.trace() - 1.0) * 0.5);

    if (theta < 1e-7) {
        // sin(theta)/theta -> 1; w/2 is already axis*theta to first order.
        return w * 0.5;
    }
    if (theta < M_PI - 1e-6) {
        // w / |w| is the axis; scaling by theta/|w| avoids dividing by a
        // separately computed sin that would reintroduce the conditioning loss.
        return w * (theta / w.norm());
    }

    // Near pi the skew part vanishes; recover the axis from R + I, whose
    // columns are all parallel to it.
    Mat3 S = R;
    S.m[0][0] += 1.0;
    S.m[1][1] += 1.0;
    S.m[2][2] += 1.0;
    Vec3 axis{};
    double best = -1.0;
    for (int cidx = 0; cidx < 3; ++cidx) {
        const Vec3 col = S.col(cidx);
        const double n = col.norm();
        if (n > best) {
            best = n;
            axis = col;
        }
    }
    axis = axis.normalized();
    // Keep the sign consistent with the (tiny) skew part when it has one;
    // exactly at pi both signs describe the same rotation.
    if (axis.dot(w) < 0.0) axis = -axis;
    return axis * theta;
}

Mat3 yaw_matrix(double psi) {
    const double c = std::cos(psi);
    const double s = std::sin(psi);
    Mat3 R;
    R.m[0][0] = c;
    R.m[0][1] = -s;
    R.m[1][0] = s;
    R.m[1][1] = c;
    return R;
}

double yaw_of(const Mat3& R) { return std::atan2(R.m[1][0], R.m[0][0]); }

Mat3 orthonormalized(const Mat3& R) {
    const Mat3 g = R.transposed() * R;
    Mat3 h;  // (3I - g)/2
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) h.m[i][j] = ((i == j) ? 3.0 : 0.0) - g.m[i][j];
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) h.m[i][j] *= 0.5;
    return R * h;
}

}  // namespace quadrover
