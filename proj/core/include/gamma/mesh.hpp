#pragma once

#include <array>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <unordered_map>
#include <vector>

#include "gamma/geometry.hpp"

namespace gamma {

enum class BoundaryTag : uint8_t { RobinDirichlet, Neumann };

// Local polar frame at a point where the two boundary tags meet.
// theta = 0 points along the tagged-Dirichlet side; theta = orientation *
// (angle from that ray) sweeps the interior, covering (0, opening).
// opening = pi for a flat junction; the half-disk carries one pi/2 corner
// junction where the manufactured solution is smooth.
struct JunctionFrame {
  Point2 center;
  double tangent_angle = 0.0;
  int orientation = 1;  // +1 counterclockwise, -1 clockwise
  double opening = 3.14159265358979323846;

  // Local polar coordinates (r, theta) of p; theta in (0, opening) inside.
  std::pair<double, double> to_polar(Point2 p) const;
  Point2 from_polar(double r, double theta) const;
};

struct BoundaryEdge {
  int a = -1, b = -1;
  BoundaryTag tag = BoundaryTag::Neumann;
};

struct GradingSpec {
  double h_max = 0.1;
  double beta = 1.0;           // >= 1; 1 means quasi-uniform
  double grading_radius = 0.5; // radius of the graded zone around junctions

  // Target element size at distance d from the nearest junction.
  double target(double d) const;
  // Self-consistent first-layer size: h = target(h).
  double first_layer() const;
};

struct ValidationReport {
  bool pass = false;
  long euler_characteristic = 0;
  double min_angle_deg = 0.0;
  bool tags_partition_boundary = false;
  bool junctions_are_vertices = false;
  bool orientation_ok = false;
  std::string detail;
};

struct Mesh {
  std::vector<Point2> vertices;
  std::vector<std::array<int, 3>> triangles;  // counterclockwise
  std::vector<BoundaryEdge> boundary_edges;
  std::vector<JunctionFrame> junctions;

  int vertex_count() const { return static_cast<int>(vertices.size()); }
  int triangle_count() const { return static_cast<int>(triangles.size()); }

  double triangle_area(int t) const;
  double triangle_diameter(int t) const;
  Point2 centroid(int t) const;
  double min_angle_deg() const;
  double area() const;
  double boundary_length(BoundaryTag tag) const;

  // Index of the vertex at p (within tol) or -1.
  int find_vertex(Point2 p, double tol = 1e-12) const;
};

ValidationReport validate(const Mesh& mesh);

// Upper unit half-disk {r < 1, 0 < theta < pi}. Tags: segment (0,1)x{0} and
// the arc are Robin-Dirichlet; segment (-1,0)x{0} is Neumann. Junctions at
// (0,0) (flat, opening pi) and (-1,0) (corner, opening pi/2).
Mesh build_half_disk(const GradingSpec& grading);

// Unit square with Gamma_D = {(x,0) : a < x < b} and Neumann elsewhere.
// Junctions at (a,0) and (b,0), both flat.
Mesh build_unit_square_mixed(const GradingSpec& grading, double a, double b);

// Unit disk, whole boundary Robin-Dirichlet, no junctions.
Mesh build_unit_disk(double h_max);

// Upper half-disk of radius R for the truncated half-plane problem.
// Positive axis Robin-Dirichlet; negative axis and arc Neumann. Radial size
// ~ h_near * sqrt(r) for r < 1 and ~ h_near * r beyond (relative accuracy
// per octave stays balanced while the vertex count grows only like log R).
Mesh build_halfplane_disk(double R, double h_near);

// Point location with a uniform background grid; immutable after build.
class PointLocator {
 public:
  explicit PointLocator(const Mesh& mesh);

  // Triangle containing p and its barycentric coordinates, or -1.
  int locate(Point2 p, std::array<double, 3>& bary,
             double tol = 1e-10) const;
  // Like locate, but falls back to the nearest triangle (clamped
  // barycentrics) for points within `slack` of the mesh, e.g. between a
  // boundary chord and the true arc.
  int locate_clamped(Point2 p, std::array<double, 3>& bary) const;

 private:
  const Mesh& mesh_;
  double x0_, y0_, cell_;
  int nx_, ny_;
  std::vector<std::vector<int>> cells_;
};

void write_mesh(const Mesh& mesh, std::ostream& os);
void write_mesh_file(const Mesh& mesh, const std::string& path);
Mesh read_mesh(std::istream& is);
Mesh read_mesh_file(const std::string& path);

}  // namespace gamma
