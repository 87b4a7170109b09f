#pragma once

#include <cmath>
#include <stdexcept>

#include "conformon/numeric.hpp"

namespace conformon {

// Curvature profiles k(s1) shared by the rod reconstruction and the linear
// Schroedinger solver. The traveling profile also depends on the rescaled
// time u; the static kinds ignore it.
class CurvatureProfile {
 public:
  enum class Kind { Zero, Constant, Sech, Kovalevskaya };

  static CurvatureProfile zero() { return {Kind::Zero, 0.0, 0.0, 0.0}; }

  static CurvatureProfile constant(double k) { return {Kind::Constant, 0.0, 0.0, k}; }

  // k(s1) = 2 sqrt(alpha) sech(sqrt(alpha) s1)
  static CurvatureProfile sech_profile(double alpha) {
    require_alpha(alpha);
    return {Kind::Sech, alpha, 0.0, 0.0};
  }

  // k(s1,u) = 2 sqrt(alpha) sech(sqrt(alpha) (s1 - v u))
  static CurvatureProfile kovalevskaya(double alpha, double v) {
    require_alpha(alpha);
    return {Kind::Kovalevskaya, alpha, v, 0.0};
  }

  double operator()(double s1, double u = 0.0) const {
    switch (kind_) {
      case Kind::Zero:
        return 0.0;
      case Kind::Constant:
        return c_;
      case Kind::Sech:
        return 2.0 * std::sqrt(alpha_) * sech(std::sqrt(alpha_) * s1);
      case Kind::Kovalevskaya:
        return 2.0 * std::sqrt(alpha_) * sech(std::sqrt(alpha_) * (s1 - v_ * u));
    }
    return 0.0;
  }

  Kind kind() const { return kind_; }
  double alpha() const { return alpha_; }
  double velocity() const { return v_; }
  double constant_value() const { return c_; }
  bool time_dependent() const { return kind_ == Kind::Kovalevskaya && v_ != 0.0; }

 private:
  CurvatureProfile(Kind kind, double alpha, double v, double c)
      : kind_(kind), alpha_(alpha), v_(v), c_(c) {}

  static void require_alpha(double alpha) {
    if (!(alpha >= 0.0))
      throw std::invalid_argument("CurvatureProfile: alpha must be >= 0");
  }

  Kind kind_;
  double alpha_;
  double v_;
  double c_;
};

}  // namespace conformon
