#pragma once

// Independent reference computations for the test suite. Everything here is
// deliberately written without the library's own numerics so that agreement
// is evidence, not tautology.

#include <Eigen/Core>
#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <numbers>
#include <random>
#include <sstream>
#include <string>
#include <unistd.h>
#include <vector>

namespace oracles {

/// Uniform double in [0, 1) from the generator's raw bits; avoids the
/// implementation-defined std::uniform_real_distribution.
inline double rand01(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

/// Cyclic Jacobi eigenvalue iteration for a symmetric matrix; returns the
/// eigenvalues sorted in descending order. Accurate to roughly machine
/// precision relative to the largest eigenvalue.
inline std::vector<double> symmetric_eigenvalues(Eigen::MatrixXd a) {
  const Eigen::Index n = a.rows();
  const double scale = a.norm();
  for (int sweep = 0; sweep < 100; ++sweep) {
    double off = 0.0;
    for (Eigen::Index p = 0; p < n; ++p) {
      for (Eigen::Index q = p + 1; q < n; ++q) off += a(p, q) * a(p, q);
    }
    if (std::sqrt(off) <= 1e-15 * scale) break;
    for (Eigen::Index p = 0; p + 1 < n; ++p) {
      for (Eigen::Index q = p + 1; q < n; ++q) {
        if (a(p, q) == 0.0) continue;
        const double theta = (a(q, q) - a(p, p)) / (2.0 * a(p, q));
        const double t =
            std::copysign(1.0, theta) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        for (Eigen::Index k = 0; k < n; ++k) {
          const double akp = a(k, p);
          const double akq = a(k, q);
          a(k, p) = c * akp - s * akq;
          a(k, q) = s * akp + c * akq;
        }
        for (Eigen::Index k = 0; k < n; ++k) {
          const double apk = a(p, k);
          const double aqk = a(q, k);
          a(p, k) = c * apk - s * aqk;
          a(q, k) = s * apk + c * aqk;
        }
      }
    }
  }
  std::vector<double> eigenvalues(static_cast<std::size_t>(n));
  for (Eigen::Index i = 0; i < n; ++i) eigenvalues[static_cast<std::size_t>(i)] = a(i, i);
  std::sort(eigenvalues.begin(), eigenvalues.end(), std::greater<>());
  return eigenvalues;
}

/// The reference bivariate test function, written term by term with plain
/// multiplications instead of the library's expression tree.
inline double paper_f_reference(double x, double y) {
  const double pi = std::numbers::pi;
  const double poly = x + y + x * y;
  const double gauss = std::exp(-(x * x + y * y));
  const double oscillation = std::sin(3.0 * pi * y);
  const double phase = pi * x * y * y + pi * x * std::exp(-y);
  return poly + gauss + oscillation - std::sin(phase);
}

/// Smooth random-coefficient expression in x and y, printable and parseable.
inline std::string random_smooth_expr(std::mt19937_64& rng) {
  auto coeff = [&rng] {
    std::ostringstream out;
    out.precision(17);
    out << (2.0 * rand01(rng) - 1.0);
    return out.str();
  };
  std::ostringstream expr;
  expr << coeff() << " + " << coeff() << "*x + " << coeff() << "*y + " << coeff() << "*x*y + "
       << coeff() << "*sin(" << coeff() << "*x + " << coeff() << "*y) + " << coeff()
       << "*exp(" << coeff() << "*x*y)";
  return expr.str();
}

class TempDir {
 public:
  TempDir() {
    static std::atomic<unsigned> counter{0};
    path_ = std::filesystem::temp_directory_path() /
            ("septensor_test_" + std::to_string(::getpid()) + "_" + std::to_string(counter++));
    std::filesystem::create_directories(path_);
  }
  ~TempDir() {
    std::error_code ec;
    std::filesystem::remove_all(path_, ec);
  }
  TempDir(const TempDir&) = delete;
  TempDir& operator=(const TempDir&) = delete;
  const std::filesystem::path& path() const { return path_; }

 private:
  std::filesystem::path path_;
};

inline std::string read_file(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

}  // namespace oracles
