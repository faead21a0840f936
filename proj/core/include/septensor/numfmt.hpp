#pragma once

#include <string>

namespace septensor {

/// Shortest decimal form that parses back to exactly the same double.
/// Every number the library writes to CSV or JSON goes through this, which is
/// what makes repeated runs byte-identical.
std::string format_double(double v);

}  // namespace septensor
