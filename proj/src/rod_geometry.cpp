#include "conformon/rod_geometry.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace conformon::rod {

namespace {

using Vec4 = Eigen::Vector4d;  // quaternion as (w, x, y, z)

Vec4 quat_mul(const Vec4& a, const Vec4& b) {
  return Vec4(a[0] * b[0] - a[1] * b[1] - a[2] * b[2] - a[3] * b[3],
              a[0] * b[1] + a[1] * b[0] + a[2] * b[3] - a[3] * b[2],
              a[0] * b[2] - a[1] * b[3] + a[2] * b[0] + a[3] * b[1],
              a[0] * b[3] + a[1] * b[2] - a[2] * b[1] + a[3] * b[0]);
}

Eigen::Matrix3d rotation_of(const Vec4& q) {
  const Vec4 u = q.normalized();
  return Eigen::Quaterniond(u[0], u[1], u[2], u[3]).toRotationMatrix();
}

// q maps frame components to world; body angular rate gives dq/ds = q*(0,w)/2.
Vec4 quat_rate(const Vec4& q, const Vec3& omega_body) {
  return 0.5 * quat_mul(q, Vec4(0.0, omega_body[0], omega_body[1], omega_body[2]));
}

Frame frame_from_state(const Vec3& p, const Vec4& q) {
  const Eigen::Matrix3d r = rotation_of(q);
  Frame f;
  f.position = p;
  f.d1 = r.col(0);
  f.d2 = r.col(1);
  f.d3 = r.col(2);
  return f;
}

}  // namespace

bool frame_is_orthonormal(const Frame& f, double tol) {
  if (std::abs(f.d1.norm() - 1.0) > tol) return false;
  if (std::abs(f.d2.norm() - 1.0) > tol) return false;
  if (std::abs(f.d3.norm() - 1.0) > tol) return false;
  return (f.d1 - f.d2.cross(f.d3)).norm() <= tol;
}

DarbouxComponents darboux_from_scalars(double k, double tau, double phi, double phi_s) {
  return {k * std::sin(phi), k * std::cos(phi), tau + phi_s};
}

FrameRate frame_derivative(const Frame& f, const DarbouxComponents& d) {
  const Vec3 darboux = d.k1 * f.d1 + d.k2 * f.d2 + d.k3 * f.d3;
  return {f.d3, darboux.cross(f.d1), darboux.cross(f.d2), darboux.cross(f.d3)};
}

FramePath reconstruct_curve(const CurvatureProfile& profile, double tau0, double phi,
                            double s1_min, double s1_max, double step,
                            const Frame& initial) {
  if (!(step > 0.0))
    throw std::invalid_argument("reconstruct_curve: step must be positive");
  if (!std::isfinite(s1_min) || !std::isfinite(s1_max) || s1_max < s1_min)
    throw std::invalid_argument("reconstruct_curve: s1 range must be finite and ordered");
  if (!frame_is_orthonormal(initial))
    throw std::invalid_argument("reconstruct_curve: initial frame is not an orthonormal right-handed triad");

  auto omega_at = [&](double s) -> Vec3 {
    const double k = profile(s);
    if (!std::isfinite(k))
      throw std::runtime_error("reconstruct_curve: curvature profile returned a non-finite value");
    const DarbouxComponents d = darboux_from_scalars(k, tau0, phi, 0.0);
    return {d.k1, d.k2, d.k3};
  };

  const std::size_t n_steps =
      static_cast<std::size_t>(std::floor((s1_max - s1_min) / step + 1e-9));

  Eigen::Matrix3d m0;
  m0.col(0) = initial.d1;
  m0.col(1) = initial.d2;
  m0.col(2) = initial.d3;
  Eigen::Quaterniond eq(m0);
  Vec4 q(eq.w(), eq.x(), eq.y(), eq.z());
  q.normalize();
  Vec3 p = initial.position;

  FramePath path;
  path.step = step;
  path.s1.reserve(n_steps + 1);
  path.frames.reserve(n_steps + 1);
  path.s1.push_back(s1_min);
  path.frames.push_back(frame_from_state(p, q));

  const double h = step;
  for (std::size_t i = 0; i < n_steps; ++i) {
    const double s = s1_min + static_cast<double>(i) * h;
    const Vec3 w0 = omega_at(s);
    const Vec3 wm = omega_at(s + 0.5 * h);
    const Vec3 w1 = omega_at(s + h);

    const Vec3 kp1 = rotation_of(q).col(2);
    const Vec4 kq1 = quat_rate(q, w0);

    const Vec4 q2 = q + 0.5 * h * kq1;
    const Vec3 kp2 = rotation_of(q2).col(2);
    const Vec4 kq2 = quat_rate(q2, wm);

    const Vec4 q3 = q + 0.5 * h * kq2;
    const Vec3 kp3 = rotation_of(q3).col(2);
    const Vec4 kq3 = quat_rate(q3, wm);

    const Vec4 q4 = q + h * kq3;
    const Vec3 kp4 = rotation_of(q4).col(2);
    const Vec4 kq4 = quat_rate(q4, w1);

    p += (h / 6.0) * (kp1 + 2.0 * kp2 + 2.0 * kp3 + kp4);
    q += (h / 6.0) * (kq1 + 2.0 * kq2 + 2.0 * kq3 + kq4);
    q.normalize();

    path.s1.push_back(s1_min + static_cast<double>(i + 1) * h);
    path.frames.push_back(frame_from_state(p, q));
  }
  return path;
}

std::vector<double> curvature_from_curve(const FramePath& path) {
  const std::size_t n = path.size();
  if (n < 3)
    throw std::invalid_argument("curvature_from_curve: need at least 3 samples");
  const double h = path.step;
  std::vector<double> k;
  k.reserve(n - 2);
  for (std::size_t i = 1; i + 1 < n; ++i) {
    const Vec3 ts = (path.frames[i + 1].d3 - path.frames[i - 1].d3) / (2.0 * h);
    k.push_back(ts.norm());
  }
  return k;
}

std::vector<std::optional<double>> torsion_from_curve(const FramePath& path, double k_floor) {
  const std::size_t n = path.size();
  if (n < 5)
    throw std::invalid_argument("torsion_from_curve: need at least 5 samples");
  const double h = path.step;
  std::vector<std::optional<double>> tau;
  tau.reserve(n - 2);
  for (std::size_t i = 1; i + 1 < n; ++i) {
    const Vec3& a = path.frames[i - 1].d3;
    const Vec3& b = path.frames[i].d3;
    const Vec3& c = path.frames[i + 1].d3;
    const Vec3 ts = (c - a) / (2.0 * h);
    const Vec3 tss = (c - 2.0 * b + a) / (h * h);
    const double k2 = ts.squaredNorm();
    if (std::sqrt(k2) > k_floor) {
      tau.push_back(b.dot(ts.cross(tss)) / k2);
    } else {
      tau.push_back(std::nullopt);
    }
  }
  return tau;
}

double min_nonlocal_distance(const FramePath& path, double resolution,
                             double min_arclength_gap) {
  if (path.size() < 2 || !(resolution > 0.0))
    throw std::invalid_argument("min_nonlocal_distance: bad path or resolution");
  const std::size_t stride =
      std::max<std::size_t>(1, static_cast<std::size_t>(std::llround(resolution / path.step)));
  std::vector<std::size_t> idx;
  for (std::size_t i = 0; i < path.size(); i += stride) idx.push_back(i);

  double best = std::numeric_limits<double>::infinity();
  for (std::size_t a = 0; a < idx.size(); ++a) {
    for (std::size_t b = a + 1; b < idx.size(); ++b) {
      if (path.s1[idx[b]] - path.s1[idx[a]] < min_arclength_gap) continue;
      best = std::min(best,
                      (path.frames[idx[a]].position - path.frames[idx[b]].position).norm());
    }
  }
  return best;
}

}  // namespace conformon::rod
