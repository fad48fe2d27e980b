#include "gs/gaussian.hpp"

namespace gs {

namespace {

Mat3 rotation_from_unit(Scalar w, Scalar x, Scalar y, Scalar z) {
    Mat3 r;
    r << 1 - 2 * (y * y + z * z), 2 * (x * y - w * z), 2 * (x * z + w * y),
         2 * (x * y + w * z), 1 - 2 * (x * x + z * z), 2 * (y * z - w * x),
         2 * (x * z - w * y), 2 * (y * z + w * x), 1 - 2 * (x * x + y * y);
    return r;
}

}  // namespace

Mat3 rotation_matrix(const Vec4& q) {
    const Vec4 u = q / q.norm();
    return rotation_from_unit(u[0], u[1], u[2], u[3]);
}

Vec4 rotation_matrix_backward(const Vec4& q, const Mat3& d_rot) {
    const Scalar n = q.norm();
    const Vec4 u = q / n;
    const Scalar w = u[0], x = u[1], y = u[2], z = u[3];

    Mat3 dw, dx, dy, dz;
    dw << 0, -z, y,
          z, 0, -x,
          -y, x, 0;
    dx << 0, y, z,
          y, -2 * x, -w,
          z, w, -2 * x;
    dy << -2 * y, x, w,
          x, 0, z,
          -w, z, -2 * y;
    dz << -2 * z, -w, x,
          w, -2 * z, y,
          x, y, 0;

    Vec4 d_unit;
    d_unit[0] = 2.0 * (d_rot.array() * dw.array()).sum();
    d_unit[1] = 2.0 * (d_rot.array() * dx.array()).sum();
    d_unit[2] = 2.0 * (d_rot.array() * dy.array()).sum();
    d_unit[3] = 2.0 * (d_rot.array() * dz.array()).sum();

    // chain through u = q / |q|
    return (d_unit - u * u.dot(d_unit)) / n;
}

Mat3 covariance(const Gaussian& g) {
    const Mat3 r = rotation_matrix(g.rotation);
    const Vec3 s2 = g.scale.cwiseProduct(g.scale);
    return r * s2.asDiagonal() * r.transpose();
}

void covariance_backward(const Gaussian& g, const Mat3& d_cov,
                         Vec3* d_scale, Vec4* d_rotation) {
    const Mat3 r = rotation_matrix(g.rotation);
    const Vec3 s2 = g.scale.cwiseProduct(g.scale);

    const Mat3 rt_dc_r = r.transpose() * d_cov * r;
    if (d_scale) {
        for (int i = 0; i < 3; ++i)
            (*d_scale)[i] += 2.0 * g.scale[i] * rt_dc_r(i, i);
    }
    if (d_rotation) {
        const Mat3 d_r = (d_cov + d_cov.transpose()) * r * s2.asDiagonal();
        *d_rotation += rotation_matrix_backward(g.rotation, d_r);
    }
}

int shortest_axis_index(const Vec3& scale) {
    int k = 0;
    for (int i = 1; i < 3; ++i)
        if (scale[i] < scale[k]) k = i;
    return k;
}

Vec3 shortest_axis(const Gaussian& g) {
    const Mat3 r = rotation_matrix(g.rotation);
    return r.col(shortest_axis_index(g.scale));
}

Vec4 shortest_axis_backward(const Gaussian& g, const Vec3& d_axis) {
    Mat3 d_rot = Mat3::Zero();
    d_rot.col(shortest_axis_index(g.scale)) = d_axis;
    return rotation_matrix_backward(g.rotation, d_rot);
}

}  // namespace gs
