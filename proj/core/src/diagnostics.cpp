#include "septensor/diagnostics.hpp"

#include <cmath>
#include <cstddef>
#include <fstream>
#include <limits>
#include <nlohmann/json.hpp>
#include <sstream>
#include <utility>

#include "septensor/csv.hpp"
#include "septensor/errors.hpp"
#include "septensor/numfmt.hpp"

namespace septensor {
namespace {

constexpr double kCheckSlack = 1e-10;
const double kNan = std::numeric_limits<double>::quiet_NaN();

double pow2(int e) { return std::ldexp(1.0, e); }

BoundCheck make_check(std::string name, int index, double lhs, double rhs, std::string note) {
  BoundCheck c;
  c.name = std::move(name);
  c.index = index;
  c.lhs = lhs;
  c.rhs = rhs;
  c.pass = lhs <= rhs * (1.0 + kCheckSlack);
  c.note = std::move(note);
  return c;
}

BoundCheck make_info(std::string name, std::string note) {
  BoundCheck c;
  c.name = std::move(name);
  c.lhs = kNan;
  c.rhs = kNan;
  c.note = std::move(note);
  return c;
}

double num_or_nan(const nlohmann::json& v) {
  if (v.is_number()) return v.get<double>();
  return kNan;
}

nlohmann::json nan_to_null(double v) {
  if (std::isnan(v)) return nullptr;
  return v;
}

}  // namespace

bool DiagnosticsReport::all_checks_pass() const {
  for (const BoundCheck& c : bound_checks) {
    if (c.pass.has_value() && !*c.pass) return false;
  }
  return true;
}

double lebesgue_constant(const DirectionalBasis& b, const FunctionSource& f,
                         const Grid& dense) {
  const Eigen::MatrixXd values = b.values_on_grid(f, dense);
  return values.cwiseAbs().rowwise().sum().maxCoeff();
}

Eigen::MatrixXd sample_on_grids(const FunctionSource& f, const Grid& gx, const Grid& gy) {
  Eigen::MatrixXd values(gx.size(), gy.size());
  for (std::size_t j = 0; j < gy.size(); ++j) {
    for (std::size_t i = 0; i < gx.size(); ++i) {
      values(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = f.eval(gx[i], gy[j]);
    }
  }
  if (!values.allFinite()) {
    throw DomainError("function produced a non-finite value on the diagnostics grids");
  }
  return values;
}

double sup_error(const FunctionSource& f,
                 const std::function<double(double, double)>& surrogate,
                 const Grid& gx, const Grid& gy) {
  double sup = 0.0;
  for (std::size_t j = 0; j < gy.size(); ++j) {
    for (std::size_t i = 0; i < gx.size(); ++i) {
      const double exact = f.eval(gx[i], gy[j]);
      const double approx = surrogate(gx[i], gy[j]);
      if (!std::isfinite(exact) || !std::isfinite(approx)) {
        throw DomainError("non-finite value while measuring the sup error");
      }
      sup = std::max(sup, std::abs(exact - approx));
    }
  }
  return sup;
}

DiagnosticsReport verify_bounds(const TensorInterpolant& t, const SvdFactors& factors,
                                DiagnosticsReport report, const Grid& diag_x,
                                const Grid& diag_y) {
  const int m = t.rank_x();
  const int n = t.rank_y();
  const double lm = lebesgue_constant(t.basis_x, t.source, diag_x);
  const double ln = lebesgue_constant(t.basis_y, t.source, diag_y);
  if (report.lebesgue_x.empty()) report.lebesgue_x = {lm};
  if (report.lebesgue_y.empty()) report.lebesgue_y = {ln};
  report.sigma.assign(factors.sigma.data(), factors.sigma.data() + factors.sigma.size());

  const Eigen::MatrixXd f_grid = sample_on_grids(t.source, diag_x, diag_y);
  const Eigen::MatrixXd q_grid = t.basis_x.values_on_grid(t.source, diag_x);
  const Eigen::MatrixXd s_grid = t.basis_y.values_on_grid(t.source, diag_y);
  const Eigen::MatrixXd interp_grid = (q_grid * t.collocation) * s_grid.transpose();
  report.sup_error_interp = (f_grid - interp_grid).cwiseAbs().maxCoeff();

  const double f_norm = t.collocation.norm();
  std::vector<BoundCheck>& checks = report.bound_checks;
  checks.push_back(make_check("lebesgue-exponential", m, lm, pow2(m) - 1.0, "direction x"));
  checks.push_back(make_check("lebesgue-exponential", n, ln, pow2(n) - 1.0, "direction y"));
  for (int i = 0; i < m; ++i) {
    checks.push_back(make_check("basis-sup", i + 1, q_grid.col(i).cwiseAbs().maxCoeff(),
                                pow2(m - 1), "direction x"));
  }
  for (int j = 0; j < n; ++j) {
    checks.push_back(make_check("basis-sup", j + 1, s_grid.col(j).cwiseAbs().maxCoeff(),
                                pow2(n - 1), "direction y"));
  }

  const double lebesgue_factor = lm * ln * std::sqrt(static_cast<double>(m) * n);
  for (int K = 1; K <= static_cast<int>(factors.sigma.size()); ++K) {
    const double tail = frobenius_tail(factors, K);
    const Eigen::MatrixXd truncated = factors.U.leftCols(K) *
                                      factors.sigma.head(K).asDiagonal() *
                                      factors.V.leftCols(K).transpose();
    const double trunc_err = (t.collocation - truncated).norm();
    checks.push_back(make_check("eckart-young", K, std::abs(trunc_err - tail),
                                kCheckSlack * f_norm,
                                "equality encoded as an absolute difference"));

    const Eigen::MatrixXd lowrank_grid = (q_grid * factors.U.leftCols(K)) *
                                         factors.sigma.head(K).asDiagonal() *
                                         (s_grid * factors.V.leftCols(K)).transpose();
    const double interp_vs_lowrank = (interp_grid - lowrank_grid).cwiseAbs().maxCoeff();
    checks.push_back(make_check(
        "truncation-sandwich", K, interp_vs_lowrank,
        lebesgue_factor * tail + kCheckSlack * f_norm,
        "absolute slack 1e-10 * |F|_F absorbs roundoff when the tail vanishes"));
    report.sup_error_lowrank[K] = (f_grid - lowrank_grid).cwiseAbs().maxCoeff();
  }

  checks.push_back(make_info(
      "interpolation-best-approx",
      "the interpolation error bound involves the best-approximation error, "
      "which is not computable from samples"));
  checks.push_back(make_info(
      "truncation-best-approx",
      "the rank-K error bound involves the best-approximation error, "
      "which is not computable from samples"));
  return report;
}

RankSweep run_rank_sweep(const FunctionSource& f, const EimConfig& cfg_x,
                         const EimConfig& cfg_y, const Grid& diag_x, const Grid& diag_y) {
  const std::vector<DirectionalBasis> sweep_x = run_directional_eim_sweep(f, Direction::x, cfg_x);
  const std::vector<DirectionalBasis> sweep_y = run_directional_eim_sweep(f, Direction::y, cfg_y);

  RankSweep out;
  out.lebesgue_x.reserve(sweep_x.size());
  for (const DirectionalBasis& b : sweep_x) {
    out.lebesgue_x.push_back(lebesgue_constant(b, f, diag_x));
  }
  out.lebesgue_y.reserve(sweep_y.size());
  for (const DirectionalBasis& b : sweep_y) {
    out.lebesgue_y.push_back(lebesgue_constant(b, f, diag_y));
  }

  const Eigen::MatrixXd f_grid = sample_on_grids(f, diag_x, diag_y);
  const DirectionalBasis& full_x = sweep_x.back();
  const DirectionalBasis& full_y = sweep_y.back();
  Eigen::MatrixXd collocation(full_x.points.size(), full_y.points.size());
  for (std::size_t j = 0; j < full_y.points.size(); ++j) {
    for (std::size_t i = 0; i < full_x.points.size(); ++i) {
      collocation(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) =
          f.eval(full_x.points[i], full_y.points[j]);
    }
  }
  const std::size_t rank_cap = std::min(sweep_x.size(), sweep_y.size());
  out.interp_sup_error.reserve(rank_cap);
  for (std::size_t r = 1; r <= rank_cap; ++r) {
    const Eigen::MatrixXd q_r = sweep_x[r - 1].values_on_grid(f, diag_x);
    const Eigen::MatrixXd s_r = sweep_y[r - 1].values_on_grid(f, diag_y);
    const Eigen::Index rr = static_cast<Eigen::Index>(r);
    const Eigen::MatrixXd interp_grid =
        (q_r * collocation.topLeftCorner(rr, rr)) * s_r.transpose();
    out.interp_sup_error.push_back((f_grid - interp_grid).cwiseAbs().maxCoeff());
  }
  return out;
}

nlohmann::json report_to_json(const DiagnosticsReport& report) {
  nlohmann::json j;
  j["lebesgue_x"] = report.lebesgue_x;
  j["lebesgue_y"] = report.lebesgue_y;
  j["sup_error_interp"] = report.sup_error_interp;
  nlohmann::json lowrank = nlohmann::json::object();
  for (const auto& [rank, err] : report.sup_error_lowrank) {
    lowrank[std::to_string(rank)] = err;
  }
  j["sup_error_lowrank"] = std::move(lowrank);
  j["sigma"] = report.sigma;
  nlohmann::json checks = nlohmann::json::array();
  for (const BoundCheck& c : report.bound_checks) {
    nlohmann::json jc;
    jc["name"] = c.name;
    jc["index"] = c.index;
    jc["lhs"] = nan_to_null(c.lhs);
    jc["rhs"] = nan_to_null(c.rhs);
    jc["pass"] = c.pass.has_value() ? nlohmann::json(*c.pass) : nlohmann::json(nullptr);
    jc["note"] = c.note;
    checks.push_back(std::move(jc));
  }
  j["bound_checks"] = std::move(checks);
  return j;
}

DiagnosticsReport report_from_json(const nlohmann::json& j) {
  DiagnosticsReport report;
  report.lebesgue_x = j.at("lebesgue_x").get<std::vector<double>>();
  report.lebesgue_y = j.at("lebesgue_y").get<std::vector<double>>();
  report.sup_error_interp = j.at("sup_error_interp").get<double>();
  for (const auto& [key, value] : j.at("sup_error_lowrank").items()) {
    report.sup_error_lowrank[std::stoi(key)] = value.get<double>();
  }
  report.sigma = j.at("sigma").get<std::vector<double>>();
  for (const nlohmann::json& jc : j.at("bound_checks")) {
    BoundCheck c;
    c.name = jc.at("name").get<std::string>();
    c.index = jc.at("index").get<int>();
    c.lhs = num_or_nan(jc.at("lhs"));
    c.rhs = num_or_nan(jc.at("rhs"));
    if (!jc.at("pass").is_null()) c.pass = jc.at("pass").get<bool>();
    c.note = jc.at("note").get<std::string>();
    report.bound_checks.push_back(std::move(c));
  }
  return report;
}

void write_report_json(const DiagnosticsReport& report, const std::filesystem::path& path) {
  write_text_file(path, report_to_json(report).dump(2) + "\n");
}

DiagnosticsReport read_report_json(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open " + path.string());
  nlohmann::json j;
  try {
    in >> j;
    return report_from_json(j);
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError("malformed diagnostics report " + path.string() + ": " + e.what());
  }
}

void write_lebesgue_csv(const std::vector<double>& lebesgue, const std::filesystem::path& path) {
  std::vector<std::vector<double>> rows;
  rows.reserve(lebesgue.size());
  for (std::size_t r = 0; r < lebesgue.size(); ++r) {
    rows.push_back({static_cast<double>(r + 1), lebesgue[r], pow2(static_cast<int>(r + 1)) - 1.0});
  }
  write_csv_table(path, {"m", "L_m", "bound"}, rows);
}

void write_errors_csv(const std::vector<double>& sup_errors, const std::filesystem::path& path) {
  std::vector<std::vector<double>> rows;
  rows.reserve(sup_errors.size());
  for (std::size_t r = 0; r < sup_errors.size(); ++r) {
    rows.push_back({static_cast<double>(r + 1), sup_errors[r]});
  }
  write_csv_table(path, {"m", "sup_error"}, rows);
}

void write_sigma_csv(const std::vector<double>& sigma, const std::filesystem::path& path) {
  std::vector<std::vector<double>> rows;
  rows.reserve(sigma.size());
  for (std::size_t k = 0; k < sigma.size(); ++k) {
    rows.push_back({static_cast<double>(k + 1), sigma[k]});
  }
  write_csv_table(path, {"k", "sigma_k"}, rows);
}

void write_bounds_csv(const std::vector<BoundCheck>& checks, const std::filesystem::path& path) {
  std::ostringstream out;
  out << "name,K,lhs,rhs,pass\n";
  for (const BoundCheck& c : checks) {
    out << c.name << ',';
    if (c.index >= 0) out << c.index;
    out << ',';
    if (!std::isnan(c.lhs)) out << format_double(c.lhs);
    out << ',';
    if (!std::isnan(c.rhs)) out << format_double(c.rhs);
    out << ',';
    if (c.pass.has_value()) out << (*c.pass ? "true" : "false");
    out << '\n';
  }
  write_text_file(path, out.str());
}

}  // namespace septensor
