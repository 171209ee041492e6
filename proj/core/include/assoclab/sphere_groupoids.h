#ifndef ASSOCLAB_SPHERE_GROUPOIDS_H_
#define ASSOCLAB_SPHERE_GROUPOIDS_H_

#include <array>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <vector>

#include "assoclab/geometry.h"

namespace assoclab {

class SourceTargetMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Products whose triangle area is this close to the edge of the open window
// are treated as undefined.
inline constexpr double kWindowMargin = 1e-12;
inline constexpr double kDefaultGroupoidTolerance = 1e-9;

// (target, source, area). Target and source must not be antipodal.
struct SphereArrow {
  SpherePoint y;
  SpherePoint x;
  double a = 0;
};

struct PointPair {
  SpherePoint first;
  SpherePoint second;
};

// ((y, y'), (x, x'), a): an arrow of the pair groupoid of S^2 x S^2 with one
// real coordinate.
struct ProductArrow {
  SpherePoint y, y2;
  SpherePoint x, x2;
  double a = 0;

  PointPair target() const { return {y, y2}; }
  PointPair source() const { return {x, x2}; }
};

std::size_t HashRounded(std::initializer_list<double> coords);

namespace detail {

// Shared plumbing of the two area groupoids on S^2.
class SphereArrowGroupoid {
 public:
  using Element = SphereArrow;
  using Object = SpherePoint;

  explicit SphereArrowGroupoid(double tol) : tol_(tol) {}

  double tolerance() const { return tol_; }
  SpherePoint Source(const SphereArrow& g) const { return g.x; }
  SpherePoint Target(const SphereArrow& g) const { return g.y; }
  bool ObjectsEqual(const SpherePoint& p, const SpherePoint& q) const {
    return Distance(p, q) <= tol_;
  }

 protected:
  // The triangle area of the product g h, or nullopt if x and z are
  // antipodal. Throws SourceTargetMismatch if g and h are not composable.
  std::optional<double> ProductArea(const SphereArrow& g, const SphereArrow& h) const;

  double tol_;
};

}  // namespace detail

// Area coordinate reduced to [0, 4pi); the product is defined whenever the
// outer endpoints are not antipodal.
class GPrime : public detail::SphereArrowGroupoid {
 public:
  explicit GPrime(double tol = kDefaultGroupoidTolerance) : SphereArrowGroupoid(tol) {}

  SphereArrow Make(const SpherePoint& y, const SpherePoint& x, double a) const;
  SphereArrow Unit(const SpherePoint& p) const { return {p, p, 0}; }
  std::optional<SphereArrow> TryMul(const SphereArrow& g, const SphereArrow& h) const;
  std::optional<SphereArrow> TryInv(const SphereArrow& g) const;
  bool ElementsEqual(const SphereArrow& g, const SphereArrow& h) const;
  std::size_t Bucket(const SphereArrow& g) const;
};

// Unreduced area coordinate; the product is only defined when the triangle
// area lies in (-pi, pi).
class GDoublePrime : public detail::SphereArrowGroupoid {
 public:
  explicit GDoublePrime(double tol = kDefaultGroupoidTolerance) : SphereArrowGroupoid(tol) {}

  SphereArrow Make(const SpherePoint& y, const SpherePoint& x, double a) const;
  SphereArrow Unit(const SpherePoint& p) const { return {p, p, 0}; }
  std::optional<SphereArrow> TryMul(const SphereArrow& g, const SphereArrow& h) const;
  std::optional<SphereArrow> TryInv(const SphereArrow& g) const;
  bool ElementsEqual(const SphereArrow& g, const SphereArrow& h) const;
  std::size_t Bucket(const SphereArrow& g) const;
};

// The family H(lambda) on S^2 x S^2: the area coordinate picks up
// A1 + lambda * A2, with windows |A1| < pi and, for lambda != 0, |A2| < pi/|lambda|.
class HLambda {
 public:
  using Element = ProductArrow;
  using Object = PointPair;

  explicit HLambda(double lambda, double tol = kDefaultGroupoidTolerance)
      : lambda_(lambda), tol_(tol) {}

  double lambda() const { return lambda_; }
  double tolerance() const { return tol_; }

  ProductArrow Make(const PointPair& target, const PointPair& source, double a) const;
  PointPair Source(const ProductArrow& g) const { return g.source(); }
  PointPair Target(const ProductArrow& g) const { return g.target(); }
  ProductArrow Unit(const PointPair& p) const { return {p.first, p.second, p.first, p.second, 0}; }
  std::optional<ProductArrow> TryMul(const ProductArrow& g, const ProductArrow& h) const;
  std::optional<ProductArrow> TryInv(const ProductArrow& g) const;
  bool ObjectsEqual(const PointPair& p, const PointPair& q) const {
    return Distance(p.first, q.first) <= tol_ && Distance(p.second, q.second) <= tol_;
  }
  bool ElementsEqual(const ProductArrow& g, const ProductArrow& h) const;
  std::size_t Bucket(const ProductArrow& g) const;

 private:
  double lambda_;
  double tol_;
};

// The six letters A..F of the tetrahedron word: letter n is (x_{n+2}, x_{n+1}, 0).
std::array<SphereArrow, 6> TetrahedronLetters();

// The letters A..F followed by their inverses.
std::vector<SphereArrow> TetrahedronAlphabet();

// Tetrahedron letters placed on one factor of S^2 x S^2 with the other factor
// frozen at x1, followed by their inverses. Factor-1 letters come first.
std::vector<ProductArrow> HLambdaGadgetAlphabet();

// The base object (x1, x1) of the gadget alphabet.
PointPair HLambdaBase();

}  // namespace assoclab

#endif  // ASSOCLAB_SPHERE_GROUPOIDS_H_
