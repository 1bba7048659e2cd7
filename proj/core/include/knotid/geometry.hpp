#pragma once

#include <array>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "knotid/egc.hpp"

namespace knotid {

class GeometryError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Vec3 {
  double x = 0;
  double y = 0;
  double z = 0;

  friend bool operator==(const Vec3&, const Vec3&) = default;
};

// Closed polygonal component; the last vertex connects back to the first.
class Polyline3D {
 public:
  // Requires at least 3 vertices and no two cyclically consecutive vertices
  // that coincide.
  explicit Polyline3D(std::vector<Vec3> vertices);

  const std::vector<Vec3>& vertices() const { return vertices_; }
  std::size_t edge_count() const { return vertices_.size(); }

 private:
  std::vector<Vec3> vertices_;
};

using Mat3 = std::array<std::array<double, 3>, 3>;

// Rotation applied before projecting along -z onto the xy-plane. `seed`
// drives the perturbations used when a projection is degenerate.
struct ProjectionFrame {
  Mat3 rotation{{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}};
  std::uint64_t seed = 0;
  int attempt = 0;

  static ProjectionFrame identity(std::uint64_t seed = 0);
  // Rotation by `angle` radians about `axis` (normalized internally).
  static ProjectionFrame axis_angle(Vec3 axis, double angle, std::uint64_t seed = 0);
  // Throws GeometryError unless `rotation` is orthonormal with det +1.
  void validate() const;
};

// Plain "x y z" lines (blank lines separate components) or a Geomview VECT
// file made of closed polylines.
std::vector<Polyline3D> parse_coordinates(std::string_view text);

struct EgcOptions {
  int max_attempts = 16;
  double tolerance = 1e-9;      // relative to the bounding box
  double perturbation = 1e-3;   // radians, per retry
};

// Crossing diagram of the projection. Over strand = larger rotated z; sign
// +1 iff det[d_over, d_under] > 0. Labels are assigned in order of first
// encounter walking the components in order from their first vertex.
// Crossing-free components become a twist "b?-a?-".
Diagram compute_egc(const std::vector<Polyline3D>& components, const ProjectionFrame& frame = {},
                    const EgcOptions& options = {});

}  // namespace knotid
