#ifndef ASSOCLAB_LADDER_H_
#define ASSOCLAB_LADDER_H_

#include <optional>
#include <stdexcept>
#include <vector>

namespace assoclab {

class UncalibratedBand : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class NoBracket : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline constexpr double kLadderTubeRadius = 0.1;
inline constexpr double kLadderStep = 1e-3;
inline constexpr double kLadderMaxTime = 10.0;
inline constexpr double kCalibrationTolerance = 1e-10;

struct LadderPoint {
  double x = 0;
  double y = 0;
};

// Bump amplitudes c_n for bands n = 1..depth (stored at index n - 1).
struct LadderConfig {
  int depth = 0;
  std::vector<double> c;
  double tube_radius = kLadderTubeRadius;
  double step = kLadderStep;
};

enum class LadderField { kX, kY };

// exp(1 - 1/(1 - u^2)) on (-1, 1), zero elsewhere; peak value 1 at u = 0.
double Bump(double u);

// f_n(x) = 1 + c * Bump(6 (x - 1/2)), equal to 1 outside [1/3, 2/3].
double BandSpeed(double c, double x);

// Distance-based membership in the open 1/10-neighbourhood of the ladder
// {x = 0} u {x = 1} u [0, 1] x Z.
double DistanceToLadder(const LadderPoint& p);
bool InLadderRegion(const LadderPoint& p, double radius = kLadderTubeRadius);

// Endpoint of the time-0.8 flow of f_n d/dx started at 1/10, integrated with
// the same fixed-step scheme as LadderFlow.
double CalibrationEndpoint(double c, double step = kLadderStep);
// CalibrationEndpoint(c) - (9/10 + 1/(100 n)).
double CalibrationResidual(int n, double c, double step = kLadderStep);

// Bisection for c_n in [0, 10]. Throws NoBracket if the target is not
// bracketed.
double CalibrateBand(int n, double step = kLadderStep);
LadderConfig CalibrateLadder(int depth, double step = kLadderStep);

// Fixed-step RK4 flow of X or Y for the given time. Empty if some step leaves
// the ladder region. Throws UncalibratedBand when X is evaluated on a band
// n > cfg.depth.
std::optional<LadderPoint> LadderFlow(const LadderPoint& p, LadderField field, double time,
                                      const LadderConfig& cfg);

struct LadderAssociatorResult {
  LadderPoint inside_out;  // expected (0, 0)
  LadderPoint associator;  // expected (1/(100 n), 0)
};

// Evaluates a^-20 b^-20n b^20n a^20 with a = (1/20, 0), b = (0, 1/20) in two
// orders: from the middle outwards, and with c = b..ba..a taken left to right
// followed by the remaining letters multiplied on from right to left.
LadderAssociatorResult LadderAssociator(int n, const LadderConfig& cfg);

}  // namespace assoclab

#endif  // ASSOCLAB_LADDER_H_
