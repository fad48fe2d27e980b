#pragma once

#include "gs/core.hpp"

#include <array>

namespace gs {

inline constexpr int kShCoeffs = 16;  // real SH basis up to order 3

/// One anisotropic 3D Gaussian with shape and shading attributes.
///
/// Opacity and roughness are stored as unconstrained logits; the sigmoid
/// mapping keeps the effective values strictly inside (0,1). Diffuse and
/// tint are clamped to [0,1] after optimizer steps.
struct Gaussian {
    Vec3 position = Vec3::Zero();
    Vec3 scale = Vec3::Ones();           // positive axis lengths (diagonal of S)
    Vec4 rotation = Vec4(1, 0, 0, 0);    // unit quaternion (w, x, y, z)
    Scalar opacity_logit = 0.0;
    Vec3 diffuse = Vec3::Constant(0.5);
    Vec3 specular_tint = Vec3::Constant(0.5);
    Scalar roughness_raw = 0.0;
    std::array<Vec3, kShCoeffs> residual_sh{};  // per coefficient, 3 channels
    Vec3 normal_residual_outward = Vec3::Zero();  // applied when w_o . v > 0
    Vec3 normal_residual_inward = Vec3::Zero();

    Scalar opacity() const { return sigmoid(opacity_logit); }
    Scalar roughness() const { return sigmoid(roughness_raw); }
};

/// Rotation matrix from the (possibly non-unit) stored quaternion.
/// The quaternion is normalized internally so gradients taken with respect
/// to the raw components stay consistent with finite differences.
Mat3 rotation_matrix(const Vec4& q);

/// d(R(q/|q|)) contracted with an upstream dL/dR, yielding dL/dq for the
/// raw (unnormalized) quaternion components.
Vec4 rotation_matrix_backward(const Vec4& q, const Mat3& d_rot);

/// Sigma = R S S^T R^T.
Mat3 covariance(const Gaussian& g);

/// Adjoint of covariance(): routes dL/dSigma into dL/dscale and dL/dq.
void covariance_backward(const Gaussian& g, const Mat3& d_cov,
                         Vec3* d_scale, Vec4* d_rotation);

/// Index (0..2) of the smallest scale component; ties go to the lowest index.
int shortest_axis_index(const Vec3& scale);

/// Unit column of R matching the smallest scale component.
Vec3 shortest_axis(const Gaussian& g);

/// Adjoint of shortest_axis() for the quaternion (the axis choice itself is
/// piecewise constant in scale and carries no gradient).
Vec4 shortest_axis_backward(const Gaussian& g, const Vec3& d_axis);

}  // namespace gs
