#pragma once

#include <Eigen/Dense>
#include <optional>
#include <vector>

#include "conformon/curvature_profile.hpp"

namespace conformon::rod {

using Vec3 = Eigen::Vector3d;

inline constexpr double kFrameTol = 1e-9;        // orthonormality tolerance
inline constexpr double kTorsionKFloor = 1e-4;   // below this, torsion is masked
inline constexpr double kDefaultStep = 1e-3;

// Material frame at one arclength sample: position plus the right-handed
// orthonormal triad (d3 tangent, d2, d1 = d2 x d3).
struct Frame {
  Vec3 position = Vec3::Zero();
  Vec3 d1 = Vec3::UnitX();
  Vec3 d2 = Vec3::UnitY();
  Vec3 d3 = Vec3::UnitZ();
};

// |d_i| = 1 and d1 = d2 x d3 within tol.
bool frame_is_orthonormal(const Frame& f, double tol = kFrameTol);

struct DarbouxComponents {
  double k1 = 0.0;
  double k2 = 0.0;
  double k3 = 0.0;
};

// (k1, k2, k3) = (k sin(phi), k cos(phi), tau + phi_s)
DarbouxComponents darboux_from_scalars(double k, double tau, double phi, double phi_s);

struct FrameRate {
  Vec3 dposition;
  Vec3 dd1;
  Vec3 dd2;
  Vec3 dd3;
};

// dR/ds = d3, dd_i/ds = K x d_i with K the Darboux vector in the frame.
FrameRate frame_derivative(const Frame& f, const DarbouxComponents& d);

struct FramePath {
  std::vector<double> s1;
  std::vector<Frame> frames;
  double step = 0.0;

  std::size_t size() const { return frames.size(); }
};

// Integrates the frame equations along arclength with a classical 4th-order
// step on the (position, rotation) state; the rotation is carried as a unit
// quaternion and renormalized after every step. phi is held constant
// (phi_s = 0).
FramePath reconstruct_curve(const CurvatureProfile& profile, double tau0, double phi,
                            double s1_min, double s1_max, double step,
                            const Frame& initial = Frame{});

// Central-difference estimate of |d d3/ds| at interior samples
// (aligned with path samples 1 .. n-2).
std::vector<double> curvature_from_curve(const FramePath& path);

// Finite-difference estimate of d3.(d3_s x d3_ss)/k^2 at interior samples;
// nullopt where the recovered curvature is <= k_floor.
std::vector<std::optional<double>> torsion_from_curve(const FramePath& path,
                                                      double k_floor = kTorsionKFloor);

// Minimum distance between curve samples taken every `resolution` in
// arclength, over pairs separated by at least `min_arclength_gap`.
// Used as the self-intersection screen.
double min_nonlocal_distance(const FramePath& path, double resolution,
                             double min_arclength_gap);

}  // namespace conformon::rod
