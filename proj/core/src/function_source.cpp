#include "septensor/function_source.hpp"

#include <cmath>
#include <numbers>

#include "septensor/csv.hpp"
#include "septensor/errors.hpp"
#include "septensor/numfmt.hpp"

namespace septensor {

namespace {

constexpr double kPi = std::numbers::pi;

double paper_f(double x, double y) {
  return x + y + x * y + std::exp(-(std::pow(x, 2.0) + std::pow(y, 2.0))) +
         std::sin(3.0 * kPi * y) - std::sin(kPi * x * std::pow(y, 2.0) + kPi * x * std::exp(-y));
}

double rank1_sep(double x, double y) { return (1.0 + x) * std::exp(y); }

double zero_fn(double, double) { return 0.0; }

struct BuiltinEntry {
  const char* name;
  double (*fn)(double, double);
};

// Registry order is part of the CLI contract; new entries go at the end.
constexpr BuiltinEntry kBuiltins[] = {
    {"paper-f", &paper_f},
    {"rank1-sep", &rank1_sep},
    {"zero", &zero_fn},
};

double (*lookup_builtin(const std::string& name))(double, double) {
  for (const auto& entry : kBuiltins) {
    if (name == entry.name) return entry.fn;
  }
  return nullptr;
}

}  // namespace

FunctionSource::Table::Table(Grid gx, Grid gy, Eigen::MatrixXd v)
    : x_nodes(std::move(gx)), y_nodes(std::move(gy)), values(std::move(v)) {
  if (values.rows() != static_cast<Eigen::Index>(x_nodes.size()) ||
      values.cols() != static_cast<Eigen::Index>(y_nodes.size())) {
    throw ConfigError("tabulated source: value matrix is " + std::to_string(values.rows()) + "x" +
                      std::to_string(values.cols()) + " but grids have " +
                      std::to_string(x_nodes.size()) + "x" + std::to_string(y_nodes.size()) +
                      " nodes");
  }
}

FunctionSource::FunctionSource(SourceKind kind, Interval dx, Interval dy, Payload payload,
                               std::string description)
    : kind_(kind),
      domain_x_(make_interval(dx.lo, dx.hi)),
      domain_y_(make_interval(dy.lo, dy.hi)),
      payload_(std::move(payload)),
      description_(std::move(description)) {}

FunctionSource FunctionSource::builtin(const std::string& name, Interval domain_x,
                                       Interval domain_y) {
  auto* fn = lookup_builtin(name);
  if (fn == nullptr) {
    throw ConfigError("unknown builtin function '" + name + "'");
  }
  return FunctionSource(SourceKind::builtin, domain_x, domain_y, fn, name);
}

FunctionSource FunctionSource::expression(std::string_view text, Interval domain_x,
                                          Interval domain_y) {
  std::shared_ptr<const Expr> ast = parse_expr(text);
  return FunctionSource(SourceKind::expression, domain_x, domain_y, std::move(ast),
                        std::string(text));
}

FunctionSource FunctionSource::tabulated(Grid x_nodes, Grid y_nodes, Eigen::MatrixXd values) {
  Interval dx = x_nodes.interval();
  Interval dy = y_nodes.interval();
  auto table = std::make_shared<const Table>(std::move(x_nodes), std::move(y_nodes),
                                             std::move(values));
  return FunctionSource(SourceKind::tabulated, dx, dy, std::move(table), "");
}

FunctionSource FunctionSource::tabulated_from_csv(const std::filesystem::path& path) {
  TabulatedData data = read_tabulated_csv(path);
  Grid gx(Interval{data.x_nodes.front(), data.x_nodes.back()}, data.x_nodes);
  Grid gy(Interval{data.y_nodes.front(), data.y_nodes.back()}, data.y_nodes);
  return tabulated(std::move(gx), std::move(gy), std::move(data.values));
}

double FunctionSource::eval(double x, double y) const {
  if (!domain_x_.contains(x) || !domain_y_.contains(y)) {
    throw DomainError("point (" + format_double(x) + ", " + format_double(y) +
                      ") lies outside the domain [" + format_double(domain_x_.lo) + ", " +
                      format_double(domain_x_.hi) + "] x [" + format_double(domain_y_.lo) + ", " +
                      format_double(domain_y_.hi) + "]");
  }
  switch (kind_) {
    case SourceKind::builtin:
      return std::get<double (*)(double, double)>(payload_)(x, y);
    case SourceKind::expression:
      return eval_expr(*std::get<std::shared_ptr<const Expr>>(payload_), x, y);
    case SourceKind::tabulated: {
      const Table& t = *std::get<std::shared_ptr<const Table>>(payload_);
      auto i = t.x_nodes.find_node(x);
      auto j = t.y_nodes.find_node(y);
      if (!i || !j) {
        throw UnsupportedOffGrid("tabulated source has no node at (" + format_double(x) + ", " +
                                 format_double(y) + ")");
      }
      return t.values(static_cast<Eigen::Index>(*i), static_cast<Eigen::Index>(*j));
    }
  }
  return std::nan("");
}

const Grid& FunctionSource::x_nodes() const {
  if (!is_tabulated()) throw ConfigError("x_nodes() requires a tabulated source");
  return std::get<std::shared_ptr<const Table>>(payload_)->x_nodes;
}

const Grid& FunctionSource::y_nodes() const {
  if (!is_tabulated()) throw ConfigError("y_nodes() requires a tabulated source");
  return std::get<std::shared_ptr<const Table>>(payload_)->y_nodes;
}

std::vector<std::string> builtin_registry() {
  std::vector<std::string> names;
  for (const auto& entry : kBuiltins) names.emplace_back(entry.name);
  return names;
}

}  // namespace septensor
