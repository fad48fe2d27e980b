#pragma once

#include <Eigen/Core>
#include <Eigen/Geometry>

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace gs {

using Scalar = double;
using Vec2 = Eigen::Vector2d;
using Vec3 = Eigen::Vector3d;
using Vec4 = Eigen::Vector4d;
using Mat2 = Eigen::Matrix2d;
using Mat3 = Eigen::Matrix3d;
using Quat = Eigen::Quaterniond;

inline Scalar sigmoid(Scalar x) { return 1.0 / (1.0 + std::exp(-x)); }

inline Scalar sigmoid_deriv(Scalar x) {
    const Scalar s = sigmoid(x);
    return s * (1.0 - s);
}

/// Inverse of sigmoid; p must lie strictly inside (0,1).
inline Scalar logit(Scalar p) { return std::log(p / (1.0 - p)); }

inline Scalar clamp01(Scalar x) { return x < 0.0 ? 0.0 : (x > 1.0 ? 1.0 : x); }

/// Dense row-major image with `channels` interleaved values per pixel.
class Image {
public:
    Image() = default;
    Image(int height, int width, int channels, Scalar fill = 0.0)
        : height_(height), width_(width), channels_(channels),
          data_(static_cast<size_t>(height) * width * channels, fill) {}

    int height() const { return height_; }
    int width() const { return width_; }
    int channels() const { return channels_; }
    size_t size() const { return data_.size(); }
    bool empty() const { return data_.empty(); }

    Scalar& at(int y, int x, int c) {
        return data_[(static_cast<size_t>(y) * width_ + x) * channels_ + c];
    }
    Scalar at(int y, int x, int c) const {
        return data_[(static_cast<size_t>(y) * width_ + x) * channels_ + c];
    }

    Vec3 pixel3(int y, int x) const {
        const size_t i = (static_cast<size_t>(y) * width_ + x) * channels_;
        return Vec3(data_[i], data_[i + 1], data_[i + 2]);
    }
    void set_pixel3(int y, int x, const Vec3& v) {
        const size_t i = (static_cast<size_t>(y) * width_ + x) * channels_;
        data_[i] = v.x();
        data_[i + 1] = v.y();
        data_[i + 2] = v.z();
    }

    Scalar* data() { return data_.data(); }
    const Scalar* data() const { return data_.data(); }
    std::vector<Scalar>& raw() { return data_; }
    const std::vector<Scalar>& raw() const { return data_; }

    bool same_shape(const Image& o) const {
        return height_ == o.height_ && width_ == o.width_ && channels_ == o.channels_;
    }

private:
    int height_ = 0;
    int width_ = 0;
    int channels_ = 0;
    std::vector<Scalar> data_;
};

}  // namespace gs
