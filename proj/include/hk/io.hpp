#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "json.hpp"

#include "hk/analysis.hpp"
#include "hk/error.hpp"
#include "hk/oracle.hpp"
#include "hk/poly.hpp"

namespace hk::io {

using Json = nlohmann::json;

// {"breakpoints": ["0", "1"], "pieces": [["0", "2"]]}; rationals as "p/q"
// strings, coefficients lowest degree first, the zero polynomial as [].
Json to_json(const PiecewisePoly& f);
// Throws kParseError.
PiecewisePoly pw_from_json(const Json& j);

Json to_json(const HKReport& r);
Json to_json(const OracleSample& s);
Json to_json(const ConvergenceReport& r);

// Accepts {"vertices": [...]}, {"rays": [...], "coeffs": [...]} or
// {"segre": [spec, spec]}. Throws kParseError naming the offending field,
// or the geometric error of the described polytope.
PairSpec parse_spec(std::string_view text);
PairSpec spec_from_json(const Json& j, const std::string& path = "$");

// Header "lambda,value" followed by samples + 1 equally spaced rows on
// [0, domain end].
std::string sample_csv(const PiecewisePoly& f, int samples);

// Static polyline plot with breakpoint markers. Coordinates are rounded;
// the plot is for viewing only.
std::string plot_svg(const PiecewisePoly& f, int samples, const std::string& title);

struct CommandOptions {
  std::string format = "json";
  long q = 16;
  std::optional<Rat> lambda;
  int samples = 512;
  long k = 1;
};

struct CommandResult {
  int exit_code = 0;
  std::string body;
  std::string extension;  // "json", "csv" or "svg"
};

// Commands: density, phi, ehk, limit, tiling, report, oracle, convergence,
// segre. Engine errors become {"error": {"code", "message"}} with a
// nonzero exit code.
CommandResult run_command(const std::string& command, std::string_view spec_text,
                          const CommandOptions& options);

std::string error_json(ErrorCode code, const std::string& message);

}  // namespace hk::io
