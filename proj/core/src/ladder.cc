#include "assoclab/ladder.h"

#include <cmath>
#include <string>

namespace assoclab {

namespace {

constexpr double kLetterTime = 1.0 / 20;
constexpr double kWindowLo = 0.1;
constexpr double kWindowHi = 0.9;
constexpr double kCalibrationTime = 0.8;

double XSpeed(const LadderPoint& p, const LadderConfig& cfg) {
  if (p.x < kWindowLo || p.x > kWindowHi) return 1.0;
  const double n = std::round(p.y);
  if (std::abs(p.y - n) >= cfg.tube_radius || n <= 0) return 1.0;
  if (n > cfg.depth) {
    throw UncalibratedBand("band " + std::to_string(static_cast<long long>(n)) +
                           " is beyond the calibrated depth " + std::to_string(cfg.depth));
  }
  return BandSpeed(cfg.c[static_cast<std::size_t>(n) - 1], p.x);
}

int StepCount(double time, double step) {
  return std::max(1, static_cast<int>(std::ceil(std::abs(time) / step - 1e-9)));
}

// Classical RK4 for the scalar equation x' = speed(x).
template <typename Speed>
double IntegrateScalar(double x, double time, double step, Speed&& speed) {
  const int n = StepCount(time, step);
  const double h = time / n;
  for (int i = 0; i < n; ++i) {
    const double k1 = speed(x);
    const double k2 = speed(x + 0.5 * h * k1);
    const double k3 = speed(x + 0.5 * h * k2);
    const double k4 = speed(x + h * k3);
    x += h / 6 * (k1 + 2 * k2 + 2 * k3 + k4);
  }
  return x;
}

}  // namespace

double Bump(double u) {
  if (std::abs(u) >= 1) return 0.0;
  return std::exp(1.0 - 1.0 / (1.0 - u * u));
}

double BandSpeed(double c, double x) { return 1.0 + c * Bump(6.0 * (x - 0.5)); }

double DistanceToLadder(const LadderPoint& p) {
  const double rungs = std::hypot(std::max({0.0, -p.x, p.x - 1.0}), std::abs(p.y - std::round(p.y)));
  return std::min({std::abs(p.x), std::abs(p.x - 1.0), rungs});
}

bool InLadderRegion(const LadderPoint& p, double radius) { return DistanceToLadder(p) < radius; }

double CalibrationEndpoint(double c, double step) {
  return IntegrateScalar(kWindowLo, kCalibrationTime, step, [c](double x) { return BandSpeed(c, x); });
}

double CalibrationResidual(int n, double c, double step) {
  return CalibrationEndpoint(c, step) - (kWindowHi + 1.0 / (100.0 * n));
}

double CalibrateBand(int n, double step) {
  if (n < 1) throw std::invalid_argument("CalibrateBand: n must be positive");
  double lo = 0.0, hi = 10.0;
  double r_lo = CalibrationResidual(n, lo, step);
  double r_hi = CalibrationResidual(n, hi, step);
  if (!(r_lo < 0 && r_hi > 0)) throw NoBracket("CalibrateBand: target not bracketed by [0, 10]");
  for (int iter = 0; iter < 200; ++iter) {
    const double mid = 0.5 * (lo + hi);
    const double r = CalibrationResidual(n, mid, step);
    if (std::abs(r) < kCalibrationTolerance * 1e-2) return mid;
    if (r < 0) {
      lo = mid;
    } else {
      hi = mid;
    }
    if (hi - lo <= 0) break;
  }
  return 0.5 * (lo + hi);
}

LadderConfig CalibrateLadder(int depth, double step) {
  if (depth < 0) throw std::invalid_argument("CalibrateLadder: depth must be non-negative");
  LadderConfig cfg;
  cfg.depth = depth;
  cfg.step = step;
  for (int n = 1; n <= depth; ++n) cfg.c.push_back(CalibrateBand(n, step));
  return cfg;
}

std::optional<LadderPoint> LadderFlow(const LadderPoint& p, LadderField field, double time,
                                      const LadderConfig& cfg) {
  if (std::abs(time) > kLadderMaxTime) throw std::invalid_argument("LadderFlow: |time| must be <= 10");
  if (!InLadderRegion(p, cfg.tube_radius)) return std::nullopt;
  const int n = StepCount(time, cfg.step);
  const double h = time / n;
  LadderPoint q = p;
  for (int i = 0; i < n; ++i) {
    if (field == LadderField::kY) {
      q.y += h;
    } else {
      auto speed = [&](double x) { return XSpeed({x, q.y}, cfg); };
      const double k1 = speed(q.x);
      const double k2 = speed(q.x + 0.5 * h * k1);
      const double k3 = speed(q.x + 0.5 * h * k2);
      const double k4 = speed(q.x + h * k3);
      q.x += h / 6 * (k1 + 2 * k2 + 2 * k3 + k4);
    }
    if (!InLadderRegion(q, cfg.tube_radius)) return std::nullopt;
  }
  return q;
}

LadderAssociatorResult LadderAssociator(int n, const LadderConfig& cfg) {
  if (n < 1) throw std::invalid_argument("LadderAssociator: n must be positive");
  if (n > cfg.depth) throw UncalibratedBand("LadderAssociator: band not calibrated");
  auto flow = [&](const LadderPoint& p, LadderField f, double t) {
    auto q = LadderFlow(p, f, t, cfg);
    if (!q) throw std::runtime_error("ladder word left the thickened ladder");
    return *q;
  };
  const int nb = 20 * n;
  LadderAssociatorResult out;

  // Middle outwards: each step multiplies by the next letter on the right and
  // its partner on the left, which undoes it.
  LadderPoint p{0, 0};
  for (int i = 0; i < nb; ++i) p = flow(flow(p, LadderField::kY, kLetterTime), LadderField::kY, -kLetterTime);
  for (int i = 0; i < 20; ++i) p = flow(flow(p, LadderField::kX, kLetterTime), LadderField::kX, -kLetterTime);
  out.inside_out = p;

  // c = b..b a..a from left to right, then b^-1 and a^-1 from the right.
  LadderPoint c{0, 0};
  for (int i = 0; i < nb; ++i) c = flow(c, LadderField::kY, kLetterTime);
  for (int i = 0; i < 20; ++i) c = flow(c, LadderField::kX, kLetterTime);
  for (int i = 0; i < nb; ++i) c = flow(c, LadderField::kY, -kLetterTime);
  for (int i = 0; i < 20; ++i) c = flow(c, LadderField::kX, -kLetterTime);
  out.associator = c;
  return out;
}

}  // namespace assoclab
