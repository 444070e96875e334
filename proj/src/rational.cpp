#include "hk/rational.hpp"

#include <cctype>
#include <limits>

#include "hk/error.hpp"

namespace hk {

std::string_view error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::kParseError: return "parse_error";
    case ErrorCode::kInvalidArgument: return "invalid_argument";
    case ErrorCode::kUnbounded: return "unbounded";
    case ErrorCode::kEmpty: return "empty";
    case ErrorCode::kDegenerate: return "degenerate";
    case ErrorCode::kNonIntegralVertex: return "non_integral_vertex";
    case ErrorCode::kNegativeScale: return "negative_scale";
    case ErrorCode::kDimMismatch: return "dim_mismatch";
    case ErrorCode::kFacetParallelToBase: return "facet_parallel_to_base";
    case ErrorCode::kUnsupportedDimension: return "unsupported_dimension";
    case ErrorCode::kInterpolationMismatch: return "interpolation_mismatch";
    case ErrorCode::kBreakpointVerificationFailed:
      return "breakpoint_verification_failed";
  }
  return "unknown";
}

Rat make_rat(long num, long den) {
  if (den == 0) throw Error(ErrorCode::kInvalidArgument, "zero denominator");
  Rat r(num, den);
  r.canonicalize();
  return r;
}

namespace {

bool valid_integer_literal(std::string_view s) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  }
  return true;
}

}  // namespace

Rat parse_rat(std::string_view text) {
  const auto slash = text.find('/');
  const std::string_view num = text.substr(0, slash);
  const std::string_view den =
      slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
  if (!valid_integer_literal(num) || !valid_integer_literal(den) ||
      den[0] == '-' || den[0] == '+') {
    throw Error(ErrorCode::kParseError,
                "malformed rational '" + std::string(text) + "'");
  }
  const std::string n(num[0] == '+' ? num.substr(1) : num);
  BigInt d{std::string(den)};
  if (d == 0) {
    throw Error(ErrorCode::kParseError,
                "zero denominator in '" + std::string(text) + "'");
  }
  Rat r(BigInt(n), d);
  r.canonicalize();
  return r;
}

std::string to_string(const Rat& r) {
  if (r.get_den() == 1) return r.get_num().get_str();
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

bool is_integer(const Rat& r) { return r.get_den() == 1; }

BigInt floor(const Rat& r) {
  BigInt out;
  mpz_fdiv_q(out.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
  return out;
}

BigInt ceil(const Rat& r) {
  BigInt out;
  mpz_cdiv_q(out.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
  return out;
}

Rat abs(const Rat& r) { return r < 0 ? Rat(-r) : r; }

Rat pow(const Rat& base, unsigned exponent) {
  BigInt n, d;
  mpz_pow_ui(n.get_mpz_t(), base.get_num_mpz_t(), exponent);
  mpz_pow_ui(d.get_mpz_t(), base.get_den_mpz_t(), exponent);
  Rat out(n, d);
  out.canonicalize();
  return out;
}

bool exact_root(const Rat& r, unsigned k, Rat* root) {
  if (r < 0 || k == 0) return false;
  BigInt n, d;
  if (mpz_root(n.get_mpz_t(), r.get_num_mpz_t(), k) == 0) return false;
  if (mpz_root(d.get_mpz_t(), r.get_den_mpz_t(), k) == 0) return false;
  *root = Rat(n, d);
  root->canonicalize();
  return true;
}

std::int64_t to_int64(const BigInt& v) {
  if (!v.fits_slong_p()) {
    throw Error(ErrorCode::kInvalidArgument,
                "integer " + v.get_str() + " exceeds 64-bit range");
  }
  return v.get_si();
}

}  // namespace hk
