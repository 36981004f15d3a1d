// Command-line front end: construct functions, apply spectral operators,
// run verification checks and extremal searches, merge reports.

#include <CLI11.hpp>
#include <json.hpp>

#include <charconv>
#include <chrono>
#include <cstdlib>
#include <ctime>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <regex>
#include <string>
#include <vector>

#include "walshkit/constructions.hpp"
#include "walshkit/fwht.hpp"
#include "walshkit/interpolation.hpp"
#include "walshkit/io.hpp"
#include "walshkit/numeric.hpp"
#include "walshkit/spectral_ops.hpp"
#include "walshkit/verify.hpp"
#include "walshkit/version.hpp"

namespace {

namespace fs = std::filesystem;
using nlohmann::json;
using walshkit::Complex;
using walshkit::DomainError;
using walshkit::format_double;

struct GlobalOptions {
  std::uint64_t seed = 0;
  std::string out;
  std::string manifest;
  int threads = 1;
  bool emit_json = false;
  std::string started_at;
};

std::string iso_timestamp_utc() {
  const std::time_t t =
      std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&t, &tm);
  char buf[32];
  std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

double parse_exponent(const std::string& text) {
  if (text == "inf" || text == "Inf" || text == "INF") {
    return std::numeric_limits<double>::infinity();
  }
  double value = 0.0;
  const auto* begin = text.data();
  const auto* end = text.data() + text.size();
  if (begin != end && *begin == '+') ++begin;  // from_chars rejects a leading +
  const auto [ptr, ec] = std::from_chars(begin, end, value);
  if (ec != std::errc{} || ptr != end) {
    throw DomainError("cannot parse number: " + text);
  }
  return value;
}

std::vector<double> parse_grid(const std::string& text) {
  std::vector<double> grid;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t comma = text.find(',', pos);
    const std::string item =
        text.substr(pos, comma == std::string::npos ? comma : comma - pos);
    if (!item.empty()) grid.push_back(parse_exponent(item));
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  if (grid.empty()) throw DomainError("empty grid: " + text);
  return grid;
}

std::vector<int> parse_int_list(const std::string& text) {
  std::vector<int> items;
  for (double v : parse_grid(text)) items.push_back(static_cast<int>(v));
  return items;
}

std::uint32_t parse_mask(const std::string& text) {
  int base = 10;
  std::size_t offset = 0;
  if (text.rfind("0b", 0) == 0 || text.rfind("0B", 0) == 0) {
    base = 2;
    offset = 2;
  } else if (text.rfind("0x", 0) == 0 || text.rfind("0X", 0) == 0) {
    base = 16;
    offset = 2;
  }
  std::uint32_t value = 0;
  const auto* begin = text.data() + offset;
  const auto* end = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(begin, end, value, base);
  if (ec != std::errc{} || ptr != end) {
    throw DomainError("cannot parse mask: " + text);
  }
  return value;
}

// Accepts a, bi, a+bi, a-bi (also with j as the imaginary suffix).
Complex parse_complex(const std::string& text) {
  std::string s = text;
  for (char& ch : s) {
    if (ch == 'j') ch = 'i';
  }
  const std::regex full(R"(^([+-]?[0-9.eE+-]*?)([+-][0-9.eE]*)i$)");
  const std::regex imag_only(R"(^([+-]?[0-9.eE]*)i$)");
  std::smatch m;
  if (std::regex_match(s, m, full)) {
    const std::string re = m[1].str().empty() ? "0" : m[1].str();
    std::string im = m[2].str();
    if (im == "+" || im == "-") im += "1";
    return Complex(parse_exponent(re), parse_exponent(im));
  }
  if (std::regex_match(s, m, imag_only)) {
    std::string im = m[1].str();
    if (im.empty() || im == "+") im = "1";
    if (im == "-") im = "-1";
    return Complex(0.0, parse_exponent(im));
  }
  return Complex(parse_exponent(s), 0.0);
}

void write_manifest(const GlobalOptions& global, const std::string& command,
                    const json& params, const std::vector<std::string>& artifacts) {
  json manifest;
  manifest["command"] = command;
  manifest["params"] = params;
  manifest["seed"] = global.seed;
  manifest["threads"] = global.threads;
  manifest["version"] = std::string(walshkit::kVersion);
  manifest["started_at"] = global.started_at;
  manifest["artifacts"] = artifacts;
  fs::path path;
  if (!global.manifest.empty()) {
    path = global.manifest;
  } else if (!global.out.empty()) {
    path = global.out + ".manifest.json";
  } else {
    path = "walshkit-manifest.json";
  }
  walshkit::io::write_json_file(path, manifest);
}

int emit_report(const GlobalOptions& global, const std::string& command,
                const json& params, const walshkit::verify::VerificationReport& report) {
  std::vector<std::string> artifacts;
  if (!global.out.empty()) {
    walshkit::io::write_json_file(global.out, report.to_json());
    artifacts.push_back(global.out);
  }
  write_manifest(global, command, params, artifacts);
  if (global.emit_json || global.out.empty()) {
    std::cout << walshkit::io::canonical_dump(report.body_json());
  } else {
    std::cout << report.check_id << ": " << to_string(report.verdict)
              << " (observed=" << format_double(report.observed) << ", bound="
              << (report.bound ? format_double(*report.bound) : "reported-only")
              << ")\n";
  }
  return walshkit::verify::exit_code_for(report.verdict);
}

struct ConstructArgs {
  std::string kind;
  int n = 8;
  int d = 2;
  int k = 1;
  std::string mask = "0b1";
  std::string fixed = "0b11";
  std::string minus = "0b0";
};

int run_construct(const GlobalOptions& global, const ConstructArgs& args) {
  if (global.out.empty()) {
    throw DomainError("construct requires --out");
  }
  json params = {{"kind", args.kind}};
  walshkit::CubeFunction f = walshkit::CubeFunction::zeros(1);
  if (args.kind == "chebyshev") {
    params["n"] = args.n;
    params["d"] = args.d;
    f = walshkit::constructions::chebyshev_function(args.n, args.d);
  } else if (args.kind == "kushilevitz") {
    params["k"] = args.k;
    f = walshkit::constructions::to_signs(walshkit::constructions::kushilevitz(args.k));
  } else if (args.kind == "character") {
    params["n"] = args.n;
    params["mask"] = args.mask;
    f = walshkit::CubeFunction::character(args.n, parse_mask(args.mask));
  } else if (args.kind == "subcube") {
    params["n"] = args.n;
    params["fixed"] = args.fixed;
    params["minus"] = args.minus;
    const std::uint32_t fixed = parse_mask(args.fixed);
    const std::uint32_t minus = parse_mask(args.minus);
    if ((minus & ~fixed) != 0) {
      throw DomainError("--minus must be a subset of --fixed");
    }
    const std::size_t size = walshkit::table_size(args.n);
    if (fixed >= size) throw DomainError("--fixed out of range for --n");
    std::vector<Complex> values(size);
    for (std::size_t i = 0; i < size; ++i) {
      values[i] =
          ((static_cast<std::uint32_t>(i) ^ minus) & fixed) == 0 ? 1.0 : 0.0;
    }
    f = walshkit::CubeFunction(args.n, std::move(values));
  } else {
    throw DomainError("unknown construct kind: " + args.kind);
  }

  walshkit::io::write_json_file(global.out, walshkit::io::function_to_json(f));
  write_manifest(global, "construct", params, {global.out});
  if (global.emit_json) {
    std::cout << walshkit::io::canonical_dump(walshkit::io::function_to_json(f));
  } else {
    std::cout << "wrote " << global.out << " (n=" << f.n() << ")\n";
  }
  return 0;
}

struct ApplyArgs {
  std::string op;
  std::string in;
  int k = 1;
  double t = 0.5;
  bool unstable = false;
  std::string z = "1";
  double gamma = 0.0;
  int low = -1;
  int tail = -1;
  int j = 1;
};

int run_apply(const GlobalOptions& global, const ApplyArgs& args) {
  namespace spectral = walshkit::spectral;
  if (global.out.empty()) throw DomainError("apply requires --out");
  const walshkit::io::LoadedFunction loaded =
      walshkit::io::function_from_json(walshkit::io::read_json_file(args.in));

  json params = {{"op", args.op}, {"in", args.in}};
  json output;
  if (args.op == "project") {
    if ((args.low < 0) == (args.tail < 0)) {
      throw DomainError("project needs exactly one of --low or --tail");
    }
    const auto window = args.low >= 0 ? spectral::ProjectionWindow::low(args.low)
                                      : spectral::ProjectionWindow::tail(args.tail);
    params[args.low >= 0 ? "low" : "tail"] = args.low >= 0 ? args.low : args.tail;
    if (loaded.kind == "walsh") {
      output = walshkit::io::spectrum_to_json(project(loaded.as_spectrum(), window));
    } else {
      output = walshkit::io::function_to_json(project(loaded.as_function(), window));
    }
  } else {
    const walshkit::CubeFunction f = loaded.as_function();
    walshkit::CubeFunction result = f;
    if (args.op == "laplacian") {
      params["k"] = args.k;
      result = spectral::laplacian_power(f, args.k);
    } else if (args.op == "heat") {
      params["t"] = args.t;
      params["unstable"] = args.unstable;
      result = spectral::heat(f, args.t, args.unstable);
    } else if (args.op == "power") {
      const Complex z = parse_complex(args.z);
      params["z"] = {z.real(), z.imag()};
      params["gamma"] = args.gamma;
      result = spectral::complex_power(f, z, args.gamma);
    } else if (args.op == "partial") {
      params["j"] = args.j;
      result = spectral::partial_derivative(f, args.j);
    } else {
      throw DomainError("unknown apply op: " + args.op);
    }
    output = loaded.kind == "walsh"
                 ? walshkit::io::spectrum_to_json(walshkit::fwht_forward(result))
                 : walshkit::io::function_to_json(result);
  }

  walshkit::io::write_json_file(global.out, output);
  write_manifest(global, "apply", params, {global.out});
  if (global.emit_json) std::cout << walshkit::io::canonical_dump(output);
  return 0;
}

struct VerifyArgs {
  std::string check;
  int n = 10;
  int d = 3;
  int k = 1;
  int trials = 200;
  int samples = 129;
  std::string p = "4";
  double eps = 2.0;
  double gamma = 1.0;
  std::string t_grid = "0.1,0.5,1";
  std::string u_grid = "-2,-0.5,0.5,2";
  std::string n_list = "4,8,16";
  int restarts = 24;
  int steps = 400;
  double step_size = 0.5;
  double smoothing_p = 64.0;
};

walshkit::verify::VerificationReport dispatch_check(const GlobalOptions& global,
                                                    const VerifyArgs& args) {
  namespace verify = walshkit::verify;
  const double p = parse_exponent(args.p);
  if (args.check == "bm-l2") {
    return verify::check_bm_l2(args.n, args.d, args.trials, global.seed,
                               global.threads);
  }
  if (args.check == "bernstein") {
    verify::SearchConfig config;
    config.restarts = args.restarts;
    config.steps = args.steps;
    config.step_size = args.step_size;
    config.smoothing_p = args.smoothing_p;
    config.seed = global.seed;
    config.threads = global.threads;
    return verify::search_bernstein_ratio(args.n, args.d, args.k, p, args.eps,
                                          config);
  }
  if (args.check == "boolean-l1") {
    return verify::check_boolean_l1(verify::boolean_corpus());
  }
  if (args.check == "corma") {
    return verify::check_corma(verify::boolean_corpus(), p);
  }
  if (args.check == "heat-tail") {
    const auto grid = parse_grid(args.t_grid);
    return verify::check_heat_tail(args.n, args.d, p, args.eps, grid,
                                   args.trials, global.seed, global.threads);
  }
  if (args.check == "helo") {
    const auto grid = parse_grid(args.t_grid);
    return verify::check_helo(args.n, args.d, p, args.eps, grid, args.trials,
                              global.seed, global.threads);
  }
  if (args.check == "imaginary") {
    const auto grid = parse_grid(args.u_grid);
    return verify::check_imaginary_powers(args.n, p, grid, args.gamma,
                                          args.trials, global.seed,
                                          global.threads);
  }
  if (args.check == "chebyshev") {
    const auto ns = parse_int_list(args.n_list);
    return verify::check_chebyshev_lower(ns, args.d);
  }
  if (args.check == "kushilevitz") {
    return verify::check_kushilevitz(args.k);
  }
  if (args.check == "three-lines") {
    return verify::check_three_lines(args.n, args.d, p, args.eps, args.k,
                                     args.gamma, args.samples, global.seed);
  }
  throw DomainError("unknown check: " + args.check);
}

int run_verify(const GlobalOptions& global, const VerifyArgs& args) {
  const walshkit::verify::VerificationReport report = dispatch_check(global, args);
  json params;
  for (const auto& [key, value] : report.params) params[key] = value;
  params["check"] = args.check;
  return emit_report(global, "verify " + args.check, params, report);
}

struct ReportArgs {
  std::string glob;
  std::string format = "csv";
};

std::vector<fs::path> expand_glob(const std::string& pattern) {
  const fs::path as_path(pattern);
  const fs::path dir =
      as_path.has_parent_path() ? as_path.parent_path() : fs::path(".");
  const std::string name = as_path.filename().string();
  if (name.find('*') == std::string::npos) {
    return fs::exists(as_path) ? std::vector<fs::path>{as_path}
                               : std::vector<fs::path>{};
  }
  std::string rx;
  for (char c : name) {
    if (c == '*') {
      rx += ".*";
    } else if (std::string("()[]{}.+?^$|\\").find(c) != std::string::npos) {
      rx += '\\';
      rx += c;
    } else {
      rx += c;
    }
  }
  const std::regex re(rx);
  std::vector<fs::path> matches;
  if (!fs::exists(dir)) return matches;
  for (const auto& entry : fs::directory_iterator(dir)) {
    if (!entry.is_regular_file()) continue;
    if (std::regex_match(entry.path().filename().string(), re)) {
      matches.push_back(entry.path());
    }
  }
  std::sort(matches.begin(), matches.end());
  return matches;
}

int run_report(const GlobalOptions& global, const ReportArgs& args) {
  namespace verify = walshkit::verify;
  const std::vector<fs::path> files = expand_glob(args.glob);
  if (files.empty()) {
    throw DomainError("no reports match " + args.glob);
  }

  std::vector<verify::VerificationReport> reports;
  for (const fs::path& file : files) {
    // Manifests sit next to reports and would match most globs.
    if (file.filename().string().ends_with(".manifest.json")) continue;
    try {
      reports.push_back(verify::VerificationReport::from_json(
          walshkit::io::read_json_file(file)));
    } catch (const std::exception& e) {
      throw DomainError("bad report " + file.string() + ": " + e.what());
    }
  }
  if (reports.empty()) {
    throw DomainError("no reports match " + args.glob);
  }

  const auto param_line = [](const verify::VerificationReport& r) {
    std::string line;
    for (const auto& [key, value] : r.params) line += key + "=" + value + ";";
    return line;
  };
  std::sort(reports.begin(), reports.end(),
            [&](const auto& a, const auto& b) {
              if (a.check_id != b.check_id) return a.check_id < b.check_id;
              return param_line(a) < param_line(b);
            });

  std::vector<std::string> keys;
  for (const auto& report : reports) {
    for (const auto& [key, value] : report.params) {
      (void)value;
      if (std::find(keys.begin(), keys.end(), key) == keys.end()) {
        keys.push_back(key);
      }
    }
  }
  std::sort(keys.begin(), keys.end());

  std::string text;
  if (args.format == "csv") {
    text = "check_id";
    for (const auto& key : keys) text += "," + key;
    text += ",observed,bound,verdict\n";
    for (const auto& report : reports) {
      text += report.check_id;
      for (const auto& key : keys) {
        const auto it = report.params.find(key);
        text += ",";
        if (it != report.params.end()) text += it->second;
      }
      text += "," + format_double(report.observed);
      text += "," + (report.bound ? format_double(*report.bound)
                                  : std::string("reported-only"));
      text += "," + std::string(to_string(report.verdict)) + "\n";
    }
  } else if (args.format == "md") {
    std::string current;
    for (const auto& report : reports) {
      if (report.check_id != current) {
        current = report.check_id;
        text += "## " + current + "\n\n";
        text += "| params | observed | bound | verdict |\n";
        text += "| --- | --- | --- | --- |\n";
      }
      text += "| " + param_line(report) + " | " + format_double(report.observed) +
              " | " +
              (report.bound ? format_double(*report.bound)
                            : std::string("reported-only")) +
              " | " + std::string(to_string(report.verdict)) + " |\n";
    }
  } else {
    throw DomainError("unknown report format: " + args.format);
  }

  std::vector<std::string> artifacts;
  if (!global.out.empty()) {
    std::ofstream out(global.out, std::ios::binary);
    if (!out) throw DomainError("cannot open " + global.out);
    out << text;
    artifacts.push_back(global.out);
  } else {
    std::cout << text;
  }
  write_manifest(global, "report", {{"glob", args.glob}, {"format", args.format}},
                 artifacts);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  GlobalOptions global;
  global.started_at = iso_timestamp_utc();

  CLI::App app{"Spectral toolkit for complex-valued functions on the sign cube"};
  app.require_subcommand(1);
  app.add_option("--seed", global.seed, "Base RNG seed")->capture_default_str();
  app.add_option("--out", global.out, "Primary output path");
  app.add_option("--manifest", global.manifest,
                 "Manifest path (default: <out>.manifest.json)");
  app.add_option("--threads", global.threads, "Worker threads")
      ->capture_default_str();
  app.add_flag("--json", global.emit_json, "Echo result JSON to stdout");

  ConstructArgs construct_args;
  CLI::App* construct = app.add_subcommand("construct", "Materialize a function");
  construct->fallthrough();
  construct
      ->add_option("kind", construct_args.kind,
                   "chebyshev | kushilevitz | character | subcube")
      ->required()
      ->check(CLI::IsMember({"chebyshev", "kushilevitz", "character", "subcube"}));
  construct->add_option("--n", construct_args.n, "Dimension");
  construct->add_option("--d", construct_args.d, "Degree");
  construct->add_option("--k", construct_args.k, "Composition depth");
  construct->add_option("--mask", construct_args.mask, "Character support mask");
  construct->add_option("--fixed", construct_args.fixed,
                        "Subcube: mask of fixed coordinates");
  construct->add_option("--minus", construct_args.minus,
                        "Subcube: fixed coordinates pinned to -1");

  ApplyArgs apply_args;
  CLI::App* apply = app.add_subcommand("apply", "Apply an operator to a file");
  apply->fallthrough();
  apply
      ->add_option("op", apply_args.op,
                   "laplacian | heat | power | project | partial")
      ->required()
      ->check(CLI::IsMember({"laplacian", "heat", "power", "project", "partial"}));
  apply->add_option("--in", apply_args.in, "Input function JSON")->required();
  apply->add_option("--k", apply_args.k, "Laplacian power");
  apply->add_option("--t", apply_args.t, "Heat time");
  apply->add_flag("--unstable", apply_args.unstable, "Allow negative heat time");
  apply->add_option("--z", apply_args.z, "Complex exponent, e.g. 0.5+2i");
  apply->add_option("--gamma", apply_args.gamma, "Spectral shift");
  apply->add_option("--low", apply_args.low, "Keep levels <= d");
  apply->add_option("--tail", apply_args.tail, "Keep levels >= d");
  apply->add_option("--j", apply_args.j, "Coordinate for partial");

  VerifyArgs verify_args;
  CLI::App* verify_cmd = app.add_subcommand("verify", "Run a named check");
  verify_cmd->fallthrough();
  verify_cmd->add_option("check", verify_args.check, "Check id")
      ->required()
      ->check(CLI::IsMember({"bm-l2", "bernstein", "boolean-l1", "corma",
                             "heat-tail", "helo", "imaginary", "chebyshev",
                             "kushilevitz", "three-lines"}));
  verify_cmd->add_option("--n", verify_args.n, "Dimension");
  verify_cmd->add_option("--d", verify_args.d, "Degree / tail level");
  verify_cmd->add_option("--k", verify_args.k, "Power / composition depth");
  verify_cmd->add_option("--trials", verify_args.trials, "Random trials");
  verify_cmd->add_option("--samples", verify_args.samples, "Boundary samples");
  verify_cmd->add_option("--p", verify_args.p, "Exponent p (decimal or inf)");
  verify_cmd->add_option("--eps", verify_args.eps, "Exponent perturbation");
  verify_cmd->add_option("--gamma", verify_args.gamma, "Spectral shift");
  verify_cmd->add_option("--t-grid", verify_args.t_grid, "Comma-separated times");
  verify_cmd->add_option("--u-grid", verify_args.u_grid,
                         "Comma-separated imaginary heights");
  verify_cmd->add_option("--n-list", verify_args.n_list,
                         "Comma-separated dimensions");
  verify_cmd->add_option("--restarts", verify_args.restarts, "Search restarts");
  verify_cmd->add_option("--steps", verify_args.steps, "Search steps");

  VerifyArgs search_args;
  search_args.n = 8;
  search_args.d = 2;
  CLI::App* search = app.add_subcommand("search", "Extremal-ratio search");
  search->fallthrough();
  search->add_option("--n", search_args.n, "Dimension");
  search->add_option("--d", search_args.d, "Degree cap");
  search->add_option("--k", search_args.k, "Laplacian power");
  search->add_option("--p", search_args.p, "Exponent p (decimal or inf)");
  search->add_option("--eps", search_args.eps, "Exponent perturbation");
  search->add_option("--restarts", search_args.restarts, "Restarts");
  search->add_option("--steps", search_args.steps, "Ascent steps");
  search->add_option("--step-size", search_args.step_size, "Initial step size");
  search->add_option("--smoothing-p", search_args.smoothing_p,
                     "Finite proxy exponent for p = inf");

  ReportArgs report_args;
  CLI::App* report_cmd = app.add_subcommand("report", "Merge report files");
  report_cmd->fallthrough();
  report_cmd->add_option("glob", report_args.glob, "Report file glob")->required();
  report_cmd->add_option("--format", report_args.format, "csv | md")
      ->check(CLI::IsMember({"csv", "md"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 3;
  }

  if (const char* env = std::getenv("THREADS");
      env != nullptr && app.count("--threads") == 0) {
    global.threads = std::max(1, std::atoi(env));
  }

  try {
    if (construct->parsed()) return run_construct(global, construct_args);
    if (apply->parsed()) return run_apply(global, apply_args);
    if (verify_cmd->parsed()) return run_verify(global, verify_args);
    if (search->parsed()) {
      search_args.check = "bernstein";
      return run_verify(global, search_args);
    }
    if (report_cmd->parsed()) return run_report(global, report_args);
  } catch (const walshkit::SingularMultiplierError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
  return 3;
}
