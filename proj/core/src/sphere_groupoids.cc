#include "assoclab/sphere_groupoids.h"

#include <cmath>
#include <functional>

namespace assoclab {

namespace {

constexpr double kFourPi = 4 * kPi;
constexpr double kBucketGrid = 1e-7;

double ReduceFourPi(double a) {
  double r = std::fmod(a, kFourPi);
  if (r < 0) r += kFourPi;
  if (r >= kFourPi) r -= kFourPi;
  return r;
}

// Distance between two angles on the circle R / 4piZ.
double CircularGap(double a, double b) {
  const double d = ReduceFourPi(a - b);
  return std::min(d, kFourPi - d);
}

void CheckEnds(const SpherePoint& y, const SpherePoint& x) {
  if (NearlyAntipodal(x, y)) throw AntipodalPair("arrow endpoints are antipodal");
}

}  // namespace

std::size_t HashRounded(std::initializer_list<double> coords) {
  std::size_t h = 0;
  for (double c : coords) {
    const auto q = static_cast<long long>(std::llround(c / kBucketGrid));
    h ^= std::hash<long long>{}(q) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return h;
}

std::optional<double> detail::SphereArrowGroupoid::ProductArea(const SphereArrow& g,
                                                               const SphereArrow& h) const {
  if (!ObjectsEqual(g.x, h.y)) throw SourceTargetMismatch("source of g differs from target of h");
  const SpherePoint& z = g.y;
  const SpherePoint& y = h.y;
  const SpherePoint& x = h.x;
  if (NearlyAntipodal(x, z)) return std::nullopt;
  return SignedArea(x, y, z);
}

// ---------------------------------------------------------------------------
// G'

SphereArrow GPrime::Make(const SpherePoint& y, const SpherePoint& x, double a) const {
  CheckEnds(y, x);
  return {y, x, ReduceFourPi(a)};
}

std::optional<SphereArrow> GPrime::TryMul(const SphereArrow& g, const SphereArrow& h) const {
  const auto area = ProductArea(g, h);
  if (!area) return std::nullopt;
  return SphereArrow{g.y, h.x, ReduceFourPi(g.a + h.a + *area)};
}

std::optional<SphereArrow> GPrime::TryInv(const SphereArrow& g) const {
  return SphereArrow{g.x, g.y, ReduceFourPi(-g.a)};
}

bool GPrime::ElementsEqual(const SphereArrow& g, const SphereArrow& h) const {
  return ObjectsEqual(g.y, h.y) && ObjectsEqual(g.x, h.x) && CircularGap(g.a, h.a) <= tol_;
}

std::size_t GPrime::Bucket(const SphereArrow& g) const {
  return HashRounded({g.y.x(), g.y.y(), g.y.z(), g.x.x(), g.x.y(), g.x.z(), g.a});
}

// ---------------------------------------------------------------------------
// G''

SphereArrow GDoublePrime::Make(const SpherePoint& y, const SpherePoint& x, double a) const {
  CheckEnds(y, x);
  return {y, x, a};
}

std::optional<SphereArrow> GDoublePrime::TryMul(const SphereArrow& g, const SphereArrow& h) const {
  const auto area = ProductArea(g, h);
  if (!area || std::abs(*area) >= kPi - kWindowMargin) return std::nullopt;
  return SphereArrow{g.y, h.x, g.a + h.a + *area};
}

std::optional<SphereArrow> GDoublePrime::TryInv(const SphereArrow& g) const {
  return SphereArrow{g.x, g.y, -g.a};
}

bool GDoublePrime::ElementsEqual(const SphereArrow& g, const SphereArrow& h) const {
  return ObjectsEqual(g.y, h.y) && ObjectsEqual(g.x, h.x) && std::abs(g.a - h.a) <= tol_;
}

std::size_t GDoublePrime::Bucket(const SphereArrow& g) const {
  return HashRounded({g.y.x(), g.y.y(), g.y.z(), g.x.x(), g.x.y(), g.x.z(), g.a});
}

// ---------------------------------------------------------------------------
// H(lambda)

ProductArrow HLambda::Make(const PointPair& target, const PointPair& source, double a) const {
  CheckEnds(target.first, source.first);
  CheckEnds(target.second, source.second);
  return {target.first, target.second, source.first, source.second, a};
}

std::optional<ProductArrow> HLambda::TryMul(const ProductArrow& g, const ProductArrow& h) const {
  if (!ObjectsEqual(g.source(), h.target())) {
    throw SourceTargetMismatch("source of g differs from target of h");
  }
  if (NearlyAntipodal(h.x, g.y) || NearlyAntipodal(h.x2, g.y2)) return std::nullopt;
  const double a1 = SignedArea(h.x, h.y, g.y);
  if (std::abs(a1) >= kPi - kWindowMargin) return std::nullopt;
  const double a2 = SignedArea(h.x2, h.y2, g.y2);
  if (lambda_ != 0 && std::abs(a2) >= kPi / std::abs(lambda_) - kWindowMargin) return std::nullopt;
  return ProductArrow{g.y, g.y2, h.x, h.x2, g.a + h.a + a1 + lambda_ * a2};
}

std::optional<ProductArrow> HLambda::TryInv(const ProductArrow& g) const {
  return ProductArrow{g.x, g.x2, g.y, g.y2, -g.a};
}

bool HLambda::ElementsEqual(const ProductArrow& g, const ProductArrow& h) const {
  return ObjectsEqual(g.target(), h.target()) && ObjectsEqual(g.source(), h.source()) &&
         std::abs(g.a - h.a) <= tol_;
}

std::size_t HLambda::Bucket(const ProductArrow& g) const {
  return HashRounded({g.y.x(), g.y.y(), g.y.z(), g.y2.x(), g.y2.y(), g.y2.z(), g.x.x(), g.x.y(),
                      g.x.z(), g.x2.x(), g.x2.y(), g.x2.z(), g.a});
}

// ---------------------------------------------------------------------------
// Fixture letters

std::array<SphereArrow, 6> TetrahedronLetters() {
  const auto p = TetrahedronConfiguration();
  std::array<SphereArrow, 6> letters;
  for (int n = 0; n < 6; ++n) letters[n] = {p[n + 1], p[n], 0.0};
  return letters;
}

std::vector<SphereArrow> TetrahedronAlphabet() {
  const auto letters = TetrahedronLetters();
  std::vector<SphereArrow> out(letters.begin(), letters.end());
  for (const auto& l : letters) out.push_back({l.x, l.y, -l.a});
  return out;
}

std::vector<ProductArrow> HLambdaGadgetAlphabet() {
  const auto p = TetrahedronConfiguration();
  const SpherePoint& base = p[0];
  std::vector<ProductArrow> first, second;
  for (int n = 0; n < 6; ++n) {
    first.push_back({p[n + 1], base, p[n], base, 0.0});
    second.push_back({base, p[n + 1], base, p[n], 0.0});
  }
  std::vector<ProductArrow> out;
  auto inverse = [](const ProductArrow& g) { return ProductArrow{g.x, g.x2, g.y, g.y2, -g.a}; };
  for (const auto& g : first) out.push_back(g);
  for (const auto& g : first) out.push_back(inverse(g));
  for (const auto& g : second) out.push_back(g);
  for (const auto& g : second) out.push_back(inverse(g));
  return out;
}

PointPair HLambdaBase() {
  const auto p = TetrahedronConfiguration();
  return {p[0], p[0]};
}

}  // namespace assoclab
