#include <filesystem>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <string>

#include "CLI11.hpp"

#include "hk/io.hpp"

namespace {

std::optional<std::string> read_all(std::istream& in) {
  if (!in) return std::nullopt;
  return std::string(std::istreambuf_iterator<char>(in), {});
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Hilbert-Kunz density functions of toric pairs"};
  std::string command, input = "-", output, lambda_text;
  hk::io::CommandOptions opts;
  app.add_option("command", command,
                 "density | phi | ehk | limit | tiling | report | oracle | convergence | segre")
      ->required();
  app.add_option("--input", input, "JSON spec file, '-' for stdin");
  app.add_option("--output", output, "directory for <command>.<ext>; stdout if omitted");
  app.add_option("--format", opts.format, "json | csv | svg");
  app.add_option("--q", opts.q, "Frobenius level for oracle, largest q for convergence");
  app.add_option("--lambda", lambda_text, "rational p/q");
  app.add_option("--samples", opts.samples, "sample count for csv and svg");
  app.add_option("--k", opts.k, "scaling factor for phi and the Veronese expansion");
  CLI11_PARSE(app, argc, argv);

  hk::io::CommandResult result;
  std::optional<std::string> text;
  if (input == "-") {
    text = read_all(std::cin);
  } else {
    std::ifstream f(input);
    text = read_all(f);
  }
  if (!text) {
    result = {1, hk::io::error_json(hk::ErrorCode::kParseError, "cannot read " + input), "json"};
  } else {
    try {
      if (!lambda_text.empty()) opts.lambda = hk::parse_rat(lambda_text);
      result = hk::io::run_command(command, *text, opts);
    } catch (const hk::Error& e) {
      result = {1, hk::io::error_json(e.code(), e.what()), "json"};
    }
  }

  if (output.empty() || result.exit_code != 0) {
    std::cout << result.body;
    return result.exit_code;
  }
  std::filesystem::create_directories(output);
  const auto path = std::filesystem::path(output) / (command + "." + result.extension);
  std::ofstream out(path);
  out << result.body;
  if (!out) {
    std::cout << hk::io::error_json(hk::ErrorCode::kInvalidArgument, "cannot write " + path.string());
    return 1;
  }
  std::cout << path.string() << "\n";
  return 0;
}
