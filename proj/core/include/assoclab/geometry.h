#ifndef ASSOCLAB_GEOMETRY_H_
#define ASSOCLAB_GEOMETRY_H_

#include <array>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace assoclab {

inline constexpr double kPi = 3.14159265358979323846;

// Two points closer than this to being antipodal are rejected.
inline constexpr double kAntipodalTolerance = 1e-9;

struct Vec3 {
  double x = 0, y = 0, z = 0;

  friend Vec3 operator+(const Vec3& a, const Vec3& b) { return {a.x + b.x, a.y + b.y, a.z + b.z}; }
  friend Vec3 operator-(const Vec3& a, const Vec3& b) { return {a.x - b.x, a.y - b.y, a.z - b.z}; }
  friend Vec3 operator*(double s, const Vec3& a) { return {s * a.x, s * a.y, s * a.z}; }
  friend bool operator==(const Vec3&, const Vec3&) = default;
};

inline double Dot(const Vec3& a, const Vec3& b) { return a.x * b.x + a.y * b.y + a.z * b.z; }
inline Vec3 Cross(const Vec3& a, const Vec3& b) {
  return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x};
}
inline double Norm(const Vec3& a) { return std::sqrt(Dot(a, a)); }
// det[a b c] with a, b, c as rows.
inline double Det(const Vec3& a, const Vec3& b, const Vec3& c) { return Dot(a, Cross(b, c)); }

class AntipodalPair : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// A point on the unit sphere. The constructor normalizes; the stored vector
// always has unit length to within rounding.
class SpherePoint {
 public:
  SpherePoint() : v_{0, 0, 1} {}
  explicit SpherePoint(const Vec3& v);
  SpherePoint(double x, double y, double z) : SpherePoint(Vec3{x, y, z}) {}

  const Vec3& vec() const { return v_; }
  double x() const { return v_.x; }
  double y() const { return v_.y; }
  double z() const { return v_.z; }

  friend bool operator==(const SpherePoint&, const SpherePoint&) = default;

 private:
  Vec3 v_;
};

// True if |a + b| is at most kAntipodalTolerance.
bool NearlyAntipodal(const SpherePoint& a, const SpherePoint& b);
double Distance(const SpherePoint& a, const SpherePoint& b);  // chordal

// Oriented area of the geodesic triangle x -> y -> z, in (-2pi, 2pi].
// Counterclockwise (as seen from outside the sphere) is positive. The value
// is only meaningful modulo 4pi.
double SignedArea(const SpherePoint& x, const SpherePoint& y, const SpherePoint& z);

SpherePoint GeodesicMidpoint(const SpherePoint& x, const SpherePoint& y);

// Points x1..x7 of the tetrahedron path: odd points are vertices of a regular
// tetrahedron, even points are midpoints of the edges between their odd
// neighbours. Index 0 of the returned array is x1.
std::array<SpherePoint, 7> TetrahedronConfiguration();

// The vertex assignment chosen by the labeling search: entry i is the index
// into the standard tetrahedron {(1,1,1),(1,-1,-1),(-1,1,-1),(-1,-1,1)}/sqrt3
// used for x_{2i+1}.
std::array<int, 4> TetrahedronLabeling();

// Uniform point on S^2 (normalized Gaussian vector).
SpherePoint RandomSpherePoint(std::mt19937_64& rng);

// The standard 2-simplex {x, y >= 0, x + y <= 1} cut into k^2 triangles by the
// grid lines x = i/k, y = j/k and x + y = m/k. Vertices are addressed by their
// integer grid coordinates (i, j); the planar point is (i/k, j/k).
struct GridPoint {
  int i = 0, j = 0;
  friend auto operator<=>(const GridPoint&, const GridPoint&) = default;
};

struct SimplexFace {
  enum class Kind { kLower, kUpper };
  Kind kind;
  // Cell coordinates as used by the lace generator.
  int i, j;
  // Vertices in counterclockwise order, starting at the vertex the lace
  // generator reaches first.
  std::array<GridPoint, 3> ccw;
};

class TriangulatedSimplex {
 public:
  explicit TriangulatedSimplex(int k);

  int k() const { return k_; }
  const std::vector<GridPoint>& vertices() const { return vertices_; }
  const std::vector<std::pair<GridPoint, GridPoint>>& edges() const { return edges_; }
  const std::vector<SimplexFace>& faces() const { return faces_; }

  bool HasVertex(const GridPoint& p) const;
  bool HasEdge(const GridPoint& a, const GridPoint& b) const;
  std::pair<mpq_class, mpq_class> Coordinates(const GridPoint& p) const;
  // Index into faces() of the face bounded by these three vertices, or -1.
  int FaceIndex(GridPoint a, GridPoint b, GridPoint c) const;
  // Number of faces incident to the (unoriented) edge.
  int FacesOnEdge(const GridPoint& a, const GridPoint& b) const;

  // Counterclockwise boundary loop from the origin: eps_1..eps_k along the
  // bottom, eps_{k+1}..eps_{2k} up the hypotenuse, eps_{2k+1}..eps_{3k} down.
  std::vector<GridPoint> BoundaryLoop() const;

 private:
  int k_;
  std::vector<GridPoint> vertices_;
  std::vector<std::pair<GridPoint, GridPoint>> edges_;
  std::vector<SimplexFace> faces_;
};

inline constexpr int kMaxSimplexSubdivision = 64;

TriangulatedSimplex TriangulateSimplex(int k);

}  // namespace assoclab

#endif  // ASSOCLAB_GEOMETRY_H_
