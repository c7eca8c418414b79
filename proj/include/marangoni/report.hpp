#pragma once

#include "marangoni/params.hpp"
#include "marangoni/pipeline.hpp"

#include "json.hpp"

#include <string>
#include <vector>

namespace marangoni {

/// Column-oriented sample table.
struct Profile {
  std::vector<std::string> columns;
  std::vector<std::vector<double>> rows;
};

/// Header row, then one line per sample with 17 significant digits.
std::string to_csv(const Profile& profile);
nlohmann::json to_json(const Profile& profile);

struct CommandOutput {
  Profile profile;
  nlohmann::json report;
};

/// eta,F,dF,ddF plus the closure/oracle report.
CommandOutput momentum_command(const RunConfig& config);

/// eta,g,dg[,theta] plus the report, including the first eta where |dg_vim - dg_rk4| exceeds the
/// deviation threshold.
CommandOutput temperature_command(const RunConfig& config);

/// eta,F_vim,F_rk4,dF_vim,dF_rk4[,dg_vim,dg_rk4] and a deviation summary.
CommandOutput compare_command(const RunConfig& config, bool with_temperature = true);

/// C1, C2 and the exponents a, b, t.
nlohmann::json params_command(const Rational& k, const PhysicalParams& physical);

}  // namespace marangoni
