#include "assoclab/geometry.h"

#include <algorithm>
#include <map>
#include <optional>

namespace assoclab {

SpherePoint::SpherePoint(const Vec3& v) {
  const double n = Norm(v);
  if (!(n > 0) || !std::isfinite(n)) {
    throw std::domain_error("SpherePoint: cannot normalize a zero or non-finite vector");
  }
  v_ = (1.0 / n) * v;
}

bool NearlyAntipodal(const SpherePoint& a, const SpherePoint& b) {
  return Norm(a.vec() + b.vec()) <= kAntipodalTolerance;
}

double Distance(const SpherePoint& a, const SpherePoint& b) { return Norm(a.vec() - b.vec()); }

double SignedArea(const SpherePoint& x, const SpherePoint& y, const SpherePoint& z) {
  if (NearlyAntipodal(x, y) || NearlyAntipodal(y, z) || NearlyAntipodal(z, x)) {
    throw AntipodalPair("SignedArea: antipodal vertices");
  }
  // Oosterom-Strackee: tan(E/2) = det / (1 + x.y + y.z + z.x).
  const Vec3 &a = x.vec(), &b = y.vec(), &c = z.vec();
  const double det = Det(a, b, c);
  const double denom = 1.0 + Dot(a, b) + Dot(b, c) + Dot(c, a);
  return 2.0 * std::atan2(det, denom);
}

SpherePoint GeodesicMidpoint(const SpherePoint& x, const SpherePoint& y) {
  if (NearlyAntipodal(x, y)) throw AntipodalPair("GeodesicMidpoint: antipodal endpoints");
  return SpherePoint(x.vec() + y.vec());
}

namespace {

struct Arrow {
  SpherePoint target, source;
  double area;
};

// Multiplication of the area-window groupoid, inlined here so the fixture does
// not depend on the groupoid layer.
std::optional<Arrow> WindowMul(const std::optional<Arrow>& g, const std::optional<Arrow>& h) {
  if (!g || !h) return std::nullopt;
  const SpherePoint& z = g->target;
  const SpherePoint& y = h->target;
  const SpherePoint& x = h->source;
  if (NearlyAntipodal(x, z)) return std::nullopt;
  const double a = SignedArea(x, y, z);
  if (std::abs(a) >= kPi - 1e-12) return std::nullopt;
  return Arrow{z, x, g->area + h->area + a};
}

std::array<SpherePoint, 7> PathFromVertices(const std::array<Vec3, 4>& v) {
  std::array<SpherePoint, 7> p;
  for (int i = 0; i < 4; ++i) p[2 * i] = SpherePoint(v[i]);
  for (int i = 0; i < 3; ++i) p[2 * i + 1] = GeodesicMidpoint(p[2 * i], p[2 * i + 2]);
  return p;
}

struct Labeling {
  std::array<int, 4> order;
  std::array<SpherePoint, 7> points;
};

Labeling SearchLabeling() {
  const std::array<Vec3, 4> kStandard = {Vec3{1, 1, 1}, Vec3{1, -1, -1}, Vec3{-1, 1, -1},
                                          Vec3{-1, -1, 1}};
  std::array<int, 4> order = {0, 1, 2, 3};
  do {
    std::array<Vec3, 4> v;
    for (int i = 0; i < 4; ++i) v[i] = kStandard[order[i]];
    const auto p = PathFromVertices(v);
    // Letters A..F: letter n goes from x_{n+1} to x_{n+2} (0-based n).
    std::array<std::optional<Arrow>, 6> l;
    for (int n = 0; n < 6; ++n) l[n] = Arrow{p[n + 1], p[n], 0.0};
    const auto &A = l[0], &B = l[1], &C = l[2], &D = l[3], &E = l[4], &F = l[5];
    // F(E((D(CB))A)) and ((F((ED)C))B)A.
    const auto first = WindowMul(F, WindowMul(E, WindowMul(WindowMul(D, WindowMul(C, B)), A)));
    const auto second = WindowMul(WindowMul(WindowMul(F, WindowMul(WindowMul(E, D), C)), B), A);
    if (first && second && std::abs(first->area - 2 * kPi) < 1e-9 &&
        std::abs(second->area + 2 * kPi) < 1e-9) {
      return {order, p};
    }
  } while (std::next_permutation(order.begin(), order.end()));
  throw std::logic_error("tetrahedron labeling search found no assignment");
}

const Labeling& FrozenLabeling() {
  static const Labeling labeling = SearchLabeling();
  return labeling;
}

}  // namespace

std::array<SpherePoint, 7> TetrahedronConfiguration() { return FrozenLabeling().points; }

std::array<int, 4> TetrahedronLabeling() { return FrozenLabeling().order; }

SpherePoint RandomSpherePoint(std::mt19937_64& rng) {
  std::normal_distribution<double> normal(0.0, 1.0);
  for (;;) {
    Vec3 v{normal(rng), normal(rng), normal(rng)};
    if (Norm(v) > 1e-12) return SpherePoint(v);
  }
}

// ---------------------------------------------------------------------------
// Triangulated simplex

TriangulatedSimplex::TriangulatedSimplex(int k) : k_(k) {
  if (k < 1 || k > kMaxSimplexSubdivision) {
    throw std::invalid_argument("TriangulateSimplex: k must be in [1, 64]");
  }
  for (int i = 0; i <= k; ++i) {
    for (int j = 0; i + j <= k; ++j) vertices_.push_back({i, j});
  }
  for (int i = 0; i <= k; ++i) {
    for (int j = 0; i + j <= k; ++j) {
      if (i + j < k) {
        edges_.push_back({{i, j}, {i + 1, j}});
        edges_.push_back({{i, j}, {i, j + 1}});
        edges_.push_back({{i + 1, j}, {i, j + 1}});
      }
    }
  }
  for (int i = 0; i < k; ++i) {
    for (int j = 0; i + j < k; ++j) {
      faces_.push_back({SimplexFace::Kind::kLower, i, j, {GridPoint{i + 1, j}, {i, j + 1}, {i, j}}});
      if (i + j + 2 <= k) {
        faces_.push_back(
            {SimplexFace::Kind::kUpper, i, j, {GridPoint{i + 1, j}, {i + 1, j + 1}, {i, j + 1}}});
      }
    }
  }
}

bool TriangulatedSimplex::HasVertex(const GridPoint& p) const {
  return p.i >= 0 && p.j >= 0 && p.i + p.j <= k_;
}

bool TriangulatedSimplex::HasEdge(const GridPoint& a, const GridPoint& b) const {
  if (!HasVertex(a) || !HasVertex(b)) return false;
  const int di = b.i - a.i, dj = b.j - a.j;
  return (std::abs(di) == 1 && dj == 0) || (di == 0 && std::abs(dj) == 1) ||
         (di == 1 && dj == -1) || (di == -1 && dj == 1);
}

std::pair<mpq_class, mpq_class> TriangulatedSimplex::Coordinates(const GridPoint& p) const {
  mpq_class x(p.i, k_), y(p.j, k_);
  x.canonicalize();
  y.canonicalize();
  return {x, y};
}

int TriangulatedSimplex::FaceIndex(GridPoint a, GridPoint b, GridPoint c) const {
  std::array<GridPoint, 3> key = {a, b, c};
  std::sort(key.begin(), key.end());
  for (std::size_t f = 0; f < faces_.size(); ++f) {
    auto v = faces_[f].ccw;
    std::sort(v.begin(), v.end());
    if (v == key) return static_cast<int>(f);
  }
  return -1;
}

int TriangulatedSimplex::FacesOnEdge(const GridPoint& a, const GridPoint& b) const {
  int count = 0;
  for (const auto& f : faces_) {
    int hits = 0;
    for (const auto& v : f.ccw) hits += (v == a || v == b);
    count += (hits == 2);
  }
  return count;
}

std::vector<GridPoint> TriangulatedSimplex::BoundaryLoop() const {
  std::vector<GridPoint> loop;
  for (int i = 0; i <= k_; ++i) loop.push_back({i, 0});
  for (int j = 1; j <= k_; ++j) loop.push_back({k_ - j, j});
  for (int j = k_ - 1; j >= 0; --j) loop.push_back({0, j});
  return loop;
}

TriangulatedSimplex TriangulateSimplex(int k) { return TriangulatedSimplex(k); }

}  // namespace assoclab
