#ifndef ASSOCLAB_TOOLS_CLI_H_
#define ASSOCLAB_TOOLS_CLI_H_

#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

namespace assoclab::cli {

inline constexpr int kExitPass = 0;
inline constexpr int kExitFail = 1;
inline constexpr int kExitUsage = 2;

// Where a reported value comes from: a published value being reproduced, an
// independent oracle, or a plain computation.
enum class Origin { kReference, kOracle, kComputed };

struct Check {
  std::string name;
  bool pass = false;
  std::string detail;
};

struct RunReport {
  std::string command;
  nlohmann::json parameters = nlohmann::json::object();
  nlohmann::json results = nlohmann::json::array();
  std::vector<Check> checks;
  std::optional<double> wall_time_s;
  std::vector<std::string> text;  // extra lines for the human-readable form

  void AddResult(const std::string& name, nlohmann::json value, Origin origin = Origin::kComputed);
  void AddCheck(const std::string& name, bool pass, const std::string& detail = "");
  bool passed() const;

  nlohmann::json ToJson() const;
  std::string ToText() const;
};

// Parses argv (without the program name), runs the subcommand, and writes the
// report to `out`. Returns kExitPass, kExitFail or kExitUsage.
int Run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

// Parses "p/q" as an exact fraction (reduced, q > 0). Empty for decimals.
std::optional<std::pair<long long, long long>> ParseFraction(const std::string& text);

}  // namespace assoclab::cli

#endif  // ASSOCLAB_TOOLS_CLI_H_
