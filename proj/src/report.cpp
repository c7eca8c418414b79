#include "marangoni/report.hpp"

#include "marangoni/serialize.hpp"
#include "marangoni/vim.hpp"

#include <cmath>
#include <cstdio>

namespace marangoni {

namespace {

// Reference values for k = 0. No quantity of the closed-form solution evaluates to c.
constexpr double kReferenceClosureConstant = 1.364053270;
constexpr double kReferenceSurfaceVelocity = 1.3046259583;

std::string render(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

nlohmann::json bracket_json(const Bracket& b) { return nlohmann::json::array({b.lo, b.hi}); }

nlohmann::json closure_json(const ClosureResult& c) {
  auto roots = nlohmann::json::array();
  for (const auto& r : c.roots)
    roots.push_back({{"b", r.b},
                     {"b_exact", to_fraction_string(from_double(r.b))},
                     {"phi", r.numerator_lead},
                     {"q_lead", r.denominator_lead}});
  return {{"pade_order", c.order}, {"bracket", bracket_json(c.bracket)}, {"roots", roots}, {"preferred", c.preferred}};
}

nlohmann::json stats_json(const DeviationStats& s) { return {{"max_abs", s.max_abs}, {"mean_abs", s.mean_abs}}; }

nlohmann::json config_json(const RunConfig& c, SampleRange range) {
  nlohmann::json j = {{"k", to_fraction_string(c.k)},
                      {"pr", to_fraction_string(c.pr)},
                      {"pade_l_momentum", c.pade_l_momentum},
                      {"pade_l_temperature", c.pade_l_temperature},
                      {"iterations", c.iterations},
                      {"eta_max", c.eta_max},
                      {"step", c.step},
                      {"samples", c.samples},
                      {"range", nlohmann::json::array({range.lo, range.hi})},
                      {"deviation_threshold", c.deviation_threshold}};
  if (c.m) j["m"] = to_fraction_string(*c.m);
  return j;
}

nlohmann::json params_json(const SimilarityParams& p) {
  return {{"k", to_fraction_string(p.k)},
          {"a", to_fraction_string(p.a)},
          {"b", to_fraction_string(p.b)},
          {"t", to_fraction_string(p.t)},
          {"pr", to_fraction_string(p.pr)}};
}

template <typename Fn>
std::vector<double> sample(const std::vector<double>& grid, Fn&& fn) {
  std::vector<double> out;
  out.reserve(grid.size());
  for (double x : grid) out.push_back(fn(x));
  return out;
}

struct MomentumSamples {
  std::vector<double> f, df, ddf, f_rk4, df_rk4, ddf_rk4, residual;
};

MomentumSamples sample_momentum(const MomentumRun& run, const std::vector<double>& grid) {
  const ExpPoly d1 = differentiate(run.solution);
  const ExpPoly d2 = differentiate(d1);
  const ExpPoly res = momentum_residual(run.solution, run.params);
  MomentumSamples s;
  s.f = sample(grid, [&](double x) { return eval(run.solution, x); });
  s.df = sample(grid, [&](double x) { return eval(d1, x); });
  s.ddf = sample(grid, [&](double x) { return eval(d2, x); });
  s.f_rk4 = sample(grid, [&](double x) { return run.oracle.at(x, 0); });
  s.df_rk4 = sample(grid, [&](double x) { return run.oracle.at(x, 1); });
  s.ddf_rk4 = sample(grid, [&](double x) { return run.oracle.at(x, 2); });
  s.residual = sample(grid, [&](double x) { return eval(res, x); });
  return s;
}

nlohmann::json momentum_json(const MomentumRun& run, const MomentumSamples& s) {
  double sq = 0.0, mx = 0.0;
  for (double r : s.residual) {
    sq += r * r;
    mx = std::max(mx, std::abs(r));
  }
  const double surface_velocity = eval(differentiate(run.solution), 0.0);
  nlohmann::json j = {
      {"closure", closure_json(run.closure)},
      {"free_constant", to_double(run.free_constant)},
      {"free_constant_exact", to_fraction_string(run.free_constant)},
      {"constants", {{"A", to_fraction_string(run.constant_a)}, {"C", to_fraction_string(run.constant_c)}}},
      {"surface_velocity", surface_velocity},
      {"solution", to_json(run.solution)},
      {"slope_pade", to_json(run.slope_pade)},
      {"oracle",
       {{"shooting_parameter", run.oracle.shooting_parameter},
        {"terminal_residual", run.oracle.terminal_residual},
        {"eta_max", run.oracle.eta_max()},
        {"step", run.oracle.step}}},
      {"deviation",
       {{"F", stats_json(deviation(s.f, s.f_rk4))},
        {"dF", stats_json(deviation(s.df, s.df_rk4))},
        {"ddF", stats_json(deviation(s.ddf, s.ddf_rk4))}}},
      {"residual_norm", {{"max_abs", mx}, {"rms", s.residual.empty() ? 0.0 : std::sqrt(sq / s.residual.size())}}}};
  if (run.params.k == 0) {
    j["reference_k0"] = {{"closure_constant_c", kReferenceClosureConstant},
                      {"surface_velocity", kReferenceSurfaceVelocity},
                      {"surface_velocity_gap", surface_velocity - kReferenceSurfaceVelocity},
                      {"c_minus_free_constant", kReferenceClosureConstant - to_double(run.free_constant)},
                      {"c_minus_surface_velocity", kReferenceClosureConstant - surface_velocity}};
  }
  return j;
}

struct TemperatureSamples {
  std::vector<double> g, dg, g_rk4, dg_rk4;
};

TemperatureSamples sample_temperature(const TemperatureRun& run, const std::vector<double>& grid) {
  const ExpPoly d1 = differentiate(run.solution);
  TemperatureSamples s;
  s.g = sample(grid, [&](double x) { return eval(run.solution, x); });
  s.dg = sample(grid, [&](double x) { return eval(d1, x); });
  s.g_rk4 = sample(grid, [&](double x) { return run.oracle.at(x, 0); });
  s.dg_rk4 = sample(grid, [&](double x) { return run.oracle.at(x, 1); });
  return s;
}

nlohmann::json temperature_json(const TemperatureRun& run, const TemperatureSamples& s,
                                const std::vector<double>& grid, double threshold) {
  const auto limit = first_exceedance(grid, s.dg, s.dg_rk4, threshold);
  return {{"closure", closure_json(run.closure)},
          {"free_constant", to_double(run.free_constant)},
          {"free_constant_exact", to_fraction_string(run.free_constant)},
          {"constants", {{"C", to_fraction_string(apply_temperature_bcs())}}},
          {"surface_gradient", eval(differentiate(run.solution), 0.0)},
          {"solution", to_json(run.solution)},
          {"slope_pade", to_json(run.slope_pade)},
          {"oracle",
           {{"shooting_parameter", run.oracle.shooting_parameter},
            {"terminal_residual", run.oracle.terminal_residual},
            {"eta_max", run.oracle.eta_max()},
            {"step", run.oracle.step}}},
          {"deviation", {{"g", stats_json(deviation(s.g, s.g_rk4))}, {"dg", stats_json(deviation(s.dg, s.dg_rk4))}}},
          {"limited_range_eta", limit ? nlohmann::json(*limit) : nlohmann::json(nullptr)}};
}

}  // namespace

std::string to_csv(const Profile& profile) {
  std::string out;
  for (std::size_t i = 0; i < profile.columns.size(); ++i) {
    if (i) out += ',';
    out += profile.columns[i];
  }
  out += '\n';
  for (const auto& row : profile.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i) out += ',';
      out += render(row[i]);
    }
    out += '\n';
  }
  return out;
}

nlohmann::json to_json(const Profile& profile) {
  nlohmann::json j = nlohmann::json::object();
  for (std::size_t c = 0; c < profile.columns.size(); ++c) {
    auto col = nlohmann::json::array();
    for (const auto& row : profile.rows) col.push_back(row[c]);
    j[profile.columns[c]] = std::move(col);
  }
  return j;
}

CommandOutput momentum_command(const RunConfig& config) {
  const SampleRange range = config.range.value_or(kMomentumRange);
  validate(config, range);
  const auto run = run_momentum(config);
  const auto grid = sample_grid(range, config.samples);
  const auto s = sample_momentum(run, grid);

  CommandOutput out;
  out.profile.columns = {"eta", "F", "dF", "ddF"};
  for (std::size_t i = 0; i < grid.size(); ++i) out.profile.rows.push_back({grid[i], s.f[i], s.df[i], s.ddf[i]});
  out.report = {{"command", "momentum"},
                {"config", config_json(config, range)},
                {"parameters", params_json(run.params)},
                {"momentum", momentum_json(run, s)}};
  return out;
}

CommandOutput temperature_command(const RunConfig& config) {
  const SampleRange range = config.range.value_or(kTemperatureRange);
  validate(config, range);
  const auto run = run_temperature(config);
  const auto grid = sample_grid(range, config.samples);
  const auto s = sample_temperature(run, grid);

  CommandOutput out;
  out.profile.columns = {"eta", "g", "dg"};
  if (config.m) out.profile.columns.emplace_back("theta");
  const ExpPoly theta = config.m ? theta_from_g(run.solution, *config.m) : ExpPoly{};
  for (std::size_t i = 0; i < grid.size(); ++i) {
    std::vector<double> row{grid[i], s.g[i], s.dg[i]};
    if (config.m) row.push_back(eval(theta, grid[i]));
    out.profile.rows.push_back(std::move(row));
  }
  out.report = {{"command", "temperature"},
                {"config", config_json(config, range)},
                {"parameters", params_json(run.momentum.params)},
                {"momentum", momentum_json(run.momentum, sample_momentum(run.momentum, grid))},
                {"temperature", temperature_json(run, s, grid, config.deviation_threshold)}};
  return out;
}

CommandOutput compare_command(const RunConfig& config, bool with_temperature) {
  const SampleRange range = config.range.value_or(kCompareRange);
  validate(config, range);
  const auto grid = sample_grid(range, config.samples);

  CommandOutput out;
  out.profile.columns = {"eta", "F_vim", "F_rk4", "dF_vim", "dF_rk4"};
  nlohmann::json summary;
  if (with_temperature) {
    const auto run = run_temperature(config);
    const auto m = sample_momentum(run.momentum, grid);
    const auto t = sample_temperature(run, grid);
    out.profile.columns.insert(out.profile.columns.end(), {"dg_vim", "dg_rk4"});
    for (std::size_t i = 0; i < grid.size(); ++i)
      out.profile.rows.push_back({grid[i], m.f[i], m.f_rk4[i], m.df[i], m.df_rk4[i], t.dg[i], t.dg_rk4[i]});
    const auto limit = first_exceedance(grid, t.dg, t.dg_rk4, config.deviation_threshold);
    summary = {{"F", stats_json(deviation(m.f, m.f_rk4))},
               {"dF", stats_json(deviation(m.df, m.df_rk4))},
               {"dg", stats_json(deviation(t.dg, t.dg_rk4))},
               {"limited_range_eta", limit ? nlohmann::json(*limit) : nlohmann::json(nullptr)},
               {"momentum_free_constant", to_double(run.momentum.free_constant)},
               {"temperature_free_constant", to_double(run.free_constant)}};
  } else {
    const auto run = run_momentum(config);
    const auto m = sample_momentum(run, grid);
    for (std::size_t i = 0; i < grid.size(); ++i)
      out.profile.rows.push_back({grid[i], m.f[i], m.f_rk4[i], m.df[i], m.df_rk4[i]});
    summary = {{"F", stats_json(deviation(m.f, m.f_rk4))},
               {"dF", stats_json(deviation(m.df, m.df_rk4))},
               {"momentum_free_constant", to_double(run.free_constant)}};
  }
  out.report = {{"command", "compare"}, {"config", config_json(config, range)}, {"deviation", summary}};
  return out;
}

nlohmann::json params_command(const Rational& k, const PhysicalParams& physical) {
  const auto e = derive_exponents(k);
  const auto c = scaling_constants(physical);
  return {{"C1", c.c1},
          {"C2", c.c2},
          {"a", to_double(e.a)},
          {"b", to_double(e.b)},
          {"t", to_double(e.t)},
          {"exact", {{"k", to_fraction_string(k)}, {"a", to_fraction_string(e.a)}, {"b", to_fraction_string(e.b)}, {"t", to_fraction_string(e.t)}}}};
}

}  // namespace marangoni
