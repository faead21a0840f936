#pragma once

#include <Eigen/Core>
#include <filesystem>
#include <memory>
#include <string>
#include <variant>
#include <vector>

#include "septensor/expr.hpp"
#include "septensor/grid.hpp"

namespace septensor {

enum class SourceKind { builtin, expression, tabulated };

/// A bivariate function over a rectangular domain, evaluable pointwise.
/// Three flavors share one interface: named builtins, parsed expressions in
/// x and y, and tabulated samples that only answer at their own grid nodes.
/// Instances are immutable and cheap to copy.
class FunctionSource {
 public:
  static FunctionSource builtin(const std::string& name, Interval domain_x = {0.0, 1.0},
                                Interval domain_y = {0.0, 1.0});
  static FunctionSource expression(std::string_view text, Interval domain_x = {0.0, 1.0},
                                   Interval domain_y = {0.0, 1.0});
  static FunctionSource tabulated(Grid x_nodes, Grid y_nodes, Eigen::MatrixXd values);
  static FunctionSource tabulated_from_csv(const std::filesystem::path& path);

  /// Throws DomainError outside the domain; for tabulated sources the point
  /// must coincide with a grid node within 1e-14, else UnsupportedOffGrid.
  double eval(double x, double y) const;
  double operator()(double x, double y) const { return eval(x, y); }

  SourceKind kind() const noexcept { return kind_; }
  const Interval& domain_x() const noexcept { return domain_x_; }
  const Interval& domain_y() const noexcept { return domain_y_; }

  bool is_tabulated() const noexcept { return kind_ == SourceKind::tabulated; }
  const Grid& x_nodes() const;  // tabulated sources only
  const Grid& y_nodes() const;

  /// Builtin name or expression text; empty for tabulated sources.
  const std::string& description() const noexcept { return description_; }

 private:
  struct Table {
    Grid x_nodes;
    Grid y_nodes;
    Eigen::MatrixXd values;
    Table(Grid gx, Grid gy, Eigen::MatrixXd v);
  };

  using Payload =
      std::variant<double (*)(double, double), std::shared_ptr<const Expr>,
                   std::shared_ptr<const Table>>;

  FunctionSource(SourceKind kind, Interval dx, Interval dy, Payload payload,
                 std::string description);

  SourceKind kind_;
  Interval domain_x_;
  Interval domain_y_;
  Payload payload_;
  std::string description_;
};

/// Names of the registered builtin functions, in a fixed order.
std::vector<std::string> builtin_registry();

}  // namespace septensor
