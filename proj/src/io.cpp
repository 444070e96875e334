#include "hk/io.hpp"

#include <cstdio>
#include <sstream>
#include <utility>
#include <vector>

namespace hk::io {

namespace {

[[noreturn]] void fail(const std::string& path, const std::string& what) {
  throw Error(ErrorCode::kParseError, "field " + path + ": " + what);
}

Json rat_json(const Rat& r) { return hk::to_string(r); }

Rat rat_from(const Json& j, const std::string& path) {
  if (j.is_number_integer()) return Rat(j.get<long>());
  if (!j.is_string()) fail(path, "expected a rational string");
  try {
    return parse_rat(j.get<std::string>());
  } catch (const Error& e) {
    fail(path, e.what());
  }
}

long int_from(const Json& j, const std::string& path) {
  if (!j.is_number_integer()) fail(path, "expected an integer");
  return j.get<long>();
}

const Json& array_field(const Json& j, const char* key, const std::string& path) {
  if (!j.contains(key)) fail(path, std::string("missing \"") + key + "\"");
  const Json& v = j.at(key);
  if (!v.is_array()) fail(path + "." + key, "expected an array");
  return v;
}

std::vector<Point> point_list(const Json& arr, const std::string& path) {
  std::vector<Point> out;
  for (std::size_t i = 0; i < arr.size(); ++i) {
    const std::string p = path + "[" + std::to_string(i) + "]";
    if (!arr[i].is_array() || arr[i].empty()) fail(p, "expected a nonempty integer array");
    std::vector<long> c;
    for (std::size_t k = 0; k < arr[i].size(); ++k) {
      c.push_back(int_from(arr[i][k], p + "[" + std::to_string(k) + "]"));
    }
    if (!out.empty() && out.front().dim() != c.size()) fail(p, "dimension differs from the first entry");
    out.push_back(Point::from_ints(c));
  }
  if (out.empty()) fail(path, "expected at least one entry");
  return out;
}

std::string fmt_double(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.15g", x);
  return buf;
}

}  // namespace

Json to_json(const PiecewisePoly& f) {
  Json b = Json::array(), p = Json::array();
  for (const auto& t : f.breakpoints()) b.push_back(rat_json(t));
  for (const auto& piece : f.pieces()) {
    Json c = Json::array();
    for (const auto& x : piece.coeffs()) c.push_back(rat_json(x));
    p.push_back(std::move(c));
  }
  return {{"breakpoints", std::move(b)}, {"pieces", std::move(p)}};
}

PiecewisePoly pw_from_json(const Json& j) {
  if (!j.is_object()) fail("$", "expected an object");
  const Json& b = array_field(j, "breakpoints", "$");
  const Json& p = array_field(j, "pieces", "$");
  std::vector<Rat> breaks;
  for (std::size_t i = 0; i < b.size(); ++i) breaks.push_back(rat_from(b[i], "$.breakpoints[" + std::to_string(i) + "]"));
  std::vector<Poly> pieces;
  for (std::size_t i = 0; i < p.size(); ++i) {
    const std::string path = "$.pieces[" + std::to_string(i) + "]";
    if (!p[i].is_array()) fail(path, "expected an array");
    std::vector<Rat> c;
    for (std::size_t k = 0; k < p[i].size(); ++k) c.push_back(rat_from(p[i][k], path + "[" + std::to_string(k) + "]"));
    pieces.emplace_back(std::move(c));
  }
  try {
    return PiecewisePoly(std::move(breaks), std::move(pieces));
  } catch (const Error& e) {
    fail("$", e.what());
  }
}

Json to_json(const HKReport& r) {
  Json j;
  j["d"] = r.d;
  j["volume"] = rat_json(r.volume);
  j["hkd"] = r.hkd ? to_json(*r.hkd) : Json(nullptr);
  j["e_hk"] = r.e_hk ? rat_json(*r.e_hk) : Json(nullptr);
  j["e0"] = rat_json(r.e0);
  j["h0"] = r.h0.get_str();
  j["phi"] = to_json(r.phi);
  j["phi_integral"] = rat_json(r.phi_integral);
  j["limit_A"] = rat_json(r.limit_A);
  j["tiling_gap_B"] = r.tiling_gap_text();
  j["tiling_gap_sign"] = r.tiling_gap_sign;
  j["is_tiler"] = r.is_tiler;
  return j;
}

Json to_json(const OracleSample& s) {
  return {{"q", s.q}, {"m", s.m}, {"count", s.count.get_str()}, {"f_value", rat_json(s.f_value)}};
}

Json to_json(const ConvergenceReport& r) {
  Json samples = Json::array();
  for (std::size_t i = 0; i < r.samples.size(); ++i) {
    Json s = to_json(r.samples[i]);
    if (i < r.gaps.size()) s["gap"] = rat_json(r.gaps[i]);
    samples.push_back(std::move(s));
  }
  return {{"lambda", rat_json(r.lambda)},
          {"exact_value", r.exact_value ? rat_json(*r.exact_value) : Json(nullptr)},
          {"samples", std::move(samples)},
          {"max_gap_tail", r.max_gap_tail ? rat_json(*r.max_gap_tail) : Json(nullptr)}};
}

PairSpec spec_from_json(const Json& j, const std::string& path) {
  if (!j.is_object()) fail(path, "expected an object");
  const int forms = static_cast<int>(j.contains("vertices")) + static_cast<int>(j.contains("rays")) +
                    static_cast<int>(j.contains("segre"));
  if (forms != 1) fail(path, "exactly one of \"vertices\", \"rays\" or \"segre\" is required");
  if (j.contains("segre")) {
    const Json& s = array_field(j, "segre", path);
    if (s.size() != 2) fail(path + ".segre", "expected two specs");
    return PairSpec::segre(spec_from_json(s[0], path + ".segre[0]"), spec_from_json(s[1], path + ".segre[1]"));
  }
  if (j.contains("vertices")) {
    const auto pts = point_list(array_field(j, "vertices", path), path + ".vertices");
    return PairSpec::leaf(ToricPair::from_vertices(pts));
  }
  const auto rays = point_list(array_field(j, "rays", path), path + ".rays");
  const Json& c = array_field(j, "coeffs", path);
  std::vector<long> coeffs;
  for (std::size_t i = 0; i < c.size(); ++i) {
    coeffs.push_back(int_from(c[i], path + ".coeffs[" + std::to_string(i) + "]"));
  }
  if (coeffs.size() != rays.size()) fail(path + ".coeffs", "length differs from rays");
  return PairSpec::leaf(ToricPair::from_fan(rays, coeffs));
}

PairSpec parse_spec(std::string_view text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw Error(ErrorCode::kParseError, std::string("invalid JSON: ") + e.what());
  }
  return spec_from_json(j, "$");
}

std::string sample_csv(const PiecewisePoly& f, int samples) {
  if (samples < 1) throw Error(ErrorCode::kInvalidArgument, "samples must be positive");
  std::ostringstream out;
  out << "lambda,value\n";
  const Rat end = f.domain_end();
  for (int i = 0; i <= samples; ++i) {
    const Rat x = end * make_rat(i, samples);
    out << hk::to_string(x) << ',' << hk::to_string(f(x)) << '\n';
  }
  return out.str();
}

std::string plot_svg(const PiecewisePoly& f, int samples, const std::string& title) {
  if (samples < 1) throw Error(ErrorCode::kInvalidArgument, "samples must be positive");
  constexpr double kW = 640, kH = 400, kPad = 40;
  const double xmax = f.domain_end() > 0 ? f.domain_end().get_d() : 1.0;
  std::vector<double> ys;
  double ymax = 0;
  for (int i = 0; i <= samples; ++i) {
    ys.push_back(f(f.domain_end() * make_rat(i, samples)).get_d());
    ymax = std::max(ymax, ys.back());
  }
  if (ymax <= 0) ymax = 1;
  auto px = [&](double x) { return kPad + (kW - 2 * kPad) * x / xmax; };
  auto py = [&](double y) { return kH - kPad - (kH - 2 * kPad) * y / ymax; };
  std::ostringstream out;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kW << "\" height=\"" << kH << "\">\n";
  out << "<title>" << title << "</title>\n";
  out << "<line x1=\"" << kPad << "\" y1=\"" << py(0) << "\" x2=\"" << kW - kPad << "\" y2=\"" << py(0)
      << "\" stroke=\"gray\"/>\n";
  out << "<polyline fill=\"none\" stroke=\"black\" points=\"";
  for (int i = 0; i <= samples; ++i) {
    out << (i ? " " : "") << fmt_double(px(xmax * i / samples)) << ',' << fmt_double(py(ys[i]));
  }
  out << "\"/>\n";
  for (const auto& b : f.breakpoints()) {
    out << "<circle cx=\"" << fmt_double(px(b.get_d())) << "\" cy=\"" << fmt_double(py(f(b).get_d()))
        << "\" r=\"3\" fill=\"red\"><title>" << hk::to_string(b) << "</title></circle>\n";
  }
  out << "</svg>\n";
  return out.str();
}

std::string error_json(ErrorCode code, const std::string& message) {
  Json j = {{"error", {{"code", std::string(error_code_name(code))}, {"message", message}}}};
  return j.dump(2) + "\n";
}

namespace {

CommandResult emit_function(const std::string& command, const char* key, const PiecewisePoly& f,
                            Json extra, const CommandOptions& o) {
  if (o.format == "csv") return {0, sample_csv(f, o.samples), "csv"};
  if (o.format == "svg") return {0, plot_svg(f, o.samples, command), "svg"};
  extra["command"] = command;
  extra[key] = to_json(f);
  return {0, extra.dump(2) + "\n", "json"};
}

CommandResult emit_json(const std::string& command, Json j, const CommandOptions& o) {
  if (o.format != "json") {
    throw Error(ErrorCode::kInvalidArgument, "command " + command + " only supports json output");
  }
  j["command"] = command;
  return {0, j.dump(2) + "\n", "json"};
}

PiecewisePoly require_hkd(const PairSpec& spec) {
  auto h = hkd_of(spec);
  if (!h) {
    throw Error(ErrorCode::kUnsupportedDimension,
                "no exact density for this input; use a Segre spec of low-dimensional factors or the oracle");
  }
  return *h;
}

CommandResult dispatch(const std::string& cmd, const PairSpec& spec, const CommandOptions& o) {
  if (cmd == "density") {
    const PiecewisePoly h = require_hkd(spec);
    return emit_function(cmd, "hkd", h, {{"e_hk", rat_json(h.integral())}}, o);
  }
  if (cmd == "phi") {
    const PiecewisePoly phi = phi_scaled(phi_of(spec), o.k);
    return emit_function(cmd, "phi", phi, {{"k", o.k}, {"phi_integral", rat_json(phi.integral())}}, o);
  }
  if (cmd == "ehk") {
    const PiecewisePoly h = require_hkd(spec);
    const Rat vol = volume(spec.polytope());
    Rat fact = 1;
    for (std::size_t i = 2; i <= spec.lattice_dim(); ++i) fact *= static_cast<unsigned long>(i);
    return emit_json(cmd, {{"e_hk", rat_json(h.integral())}, {"e0", rat_json(fact * vol)}}, o);
  }
  if (cmd == "limit") {
    const HKReport r = analyze(spec);
    Json j = {{"limit_A", rat_json(r.limit_A)},
              {"phi_integral", rat_json(r.phi_integral)},
              {"volume", rat_json(r.volume)}};
    if (!spec.is_segre()) {
      const VeroneseExpansion v = veronese_expansion(spec.pair(), o.k);
      j["veronese"] = {{"k", o.k},
                       {"coeff_d", rat_json(v.coeff_d)},
                       {"coeff_d_minus_1", rat_json(v.coeff_d_minus_1)},
                       {"e0_scaled", rat_json(v.e0_scaled)},
                       {"ehk_scaled", v.ehk_scaled ? rat_json(*v.ehk_scaled) : Json(nullptr)}};
    }
    return emit_json(cmd, std::move(j), o);
  }
  if (cmd == "tiling") {
    const HKReport r = analyze(spec);
    return emit_json(cmd, {{"is_tiler", r.is_tiler}, {"B", r.tiling_gap_text()}, {"B_sign", r.tiling_gap_sign}}, o);
  }
  if (cmd == "report") return emit_json(cmd, to_json(analyze(spec)), o);
  if (cmd == "oracle") {
    const LatticePolytope lp(spec.polytope());
    if (o.lambda) return emit_json(cmd, to_json(f_n(lp, o.q, *o.lambda)), o);
    return emit_json(cmd, {{"q", o.q}, {"e_hk_estimate", rat_json(oracle_ehk(lp, o.q))}}, o);
  }
  if (cmd == "convergence") {
    if (!o.lambda) throw Error(ErrorCode::kInvalidArgument, "convergence needs --lambda");
    std::vector<long> qs;
    for (long q = 2; q <= o.q; q *= 2) qs.push_back(q);
    if (qs.empty()) throw Error(ErrorCode::kInvalidArgument, "convergence needs --q >= 2");
    const ConvergenceReport r = convergence_report(spec, *o.lambda, qs);
    if (o.format == "csv") return {0, convergence_csv(r), "csv"};
    return emit_json(cmd, to_json(r), o);
  }
  if (cmd == "segre") {
    if (!spec.is_segre()) throw Error(ErrorCode::kInvalidArgument, "segre needs a {\"segre\": [...]} spec");
    const PiecewisePoly phi = phi_of(spec);
    Json j = {{"phi_integral", rat_json(phi.integral())}};
    const auto h = hkd_of(spec);
    j["hkd"] = h ? to_json(*h) : Json(nullptr);
    j["e_hk"] = h ? rat_json(h->integral()) : Json(nullptr);
    return emit_function(cmd, "phi", phi, std::move(j), o);
  }
  throw Error(ErrorCode::kInvalidArgument, "unknown command '" + cmd + "'");
}

}  // namespace

CommandResult run_command(const std::string& command, std::string_view spec_text,
                          const CommandOptions& options) {
  try {
    if (options.format != "json" && options.format != "csv" && options.format != "svg") {
      throw Error(ErrorCode::kInvalidArgument, "format must be json, csv or svg");
    }
    return dispatch(command, parse_spec(spec_text), options);
  } catch (const Error& e) {
    return {1, error_json(e.code(), e.what()), "json"};
  }
}

}  // namespace hk::io
