#pragma once

// Command-line front end: argument parsing helpers and the eval / verify /
// table driver.

#include "poincare/types.hpp"

#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

namespace poincare::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitCheckFailed = 1;
inline constexpr int kExitUsage = 2;

/// Real literal with optional pi factor: "0.5", "pi", "-pi/2", "3pi/4", "2*pi".
double parse_real(const std::string& s);
/// "a:b:N" (N >= 1 evenly spaced nodes, ends included) or a single value.
std::vector<double> parse_range(const std::string& s);
/// "x,y,z".
Vector3d parse_vector3(const std::string& s);
/// "re" or "re,im".
Complex parse_complex(const std::string& s);
/// "NAME=VALUE".
std::pair<std::string, double> parse_tolerance(const std::string& s);
/// "true" / "false".
bool parse_bool(const std::string& s);

/// re then the signed imaginary part with 17 significant digits: "1+0i", "0.5-2i".
std::string format_complex(Complex z);

/// Full CLI; returns the process exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace poincare::cli
