#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace septensor {

// Error taxonomy shared by the library and the CLI exit-code mapping:
// configuration/parse problems, numeric failures during a run, and the
// zero-function breakdown of the greedy loop are kept distinct.
enum class errc {
  invalid_grid,
  domain_error,
  unsupported_off_grid,
  zero_function,
  numeric_error,
  invalid_rank,
  syntax_error,
  config_error,
  io_error,
};

class Error : public std::runtime_error {
 public:
  Error(errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
  errc code() const noexcept { return code_; }

 private:
  errc code_;
};

struct InvalidGrid : Error {
  explicit InvalidGrid(const std::string& what) : Error(errc::invalid_grid, what) {}
};

struct DomainError : Error {
  explicit DomainError(const std::string& what) : Error(errc::domain_error, what) {}
};

struct UnsupportedOffGrid : Error {
  explicit UnsupportedOffGrid(const std::string& what)
      : Error(errc::unsupported_off_grid, what) {}
};

// Thrown when the first greedy pivot is numerically zero: the function has no
// usable magnitude anywhere on the selection grids.
struct ZeroFunction : Error {
  explicit ZeroFunction(const std::string& what) : Error(errc::zero_function, what) {}
};

struct NumericError : Error {
  explicit NumericError(const std::string& what) : Error(errc::numeric_error, what) {}
};

struct InvalidRank : Error {
  explicit InvalidRank(const std::string& what) : Error(errc::invalid_rank, what) {}
};

// Parse failure with a 0-based character offset into the input text.
struct SyntaxError : Error {
  SyntaxError(std::size_t offset, const std::string& what)
      : Error(errc::syntax_error, what + " (at offset " + std::to_string(offset) + ")"),
        offset(offset) {}
  std::size_t offset;
};

struct ConfigError : Error {
  explicit ConfigError(const std::string& what) : Error(errc::config_error, what) {}
};

struct IoError : Error {
  explicit IoError(const std::string& what) : Error(errc::io_error, what) {}
};

}  // namespace septensor
