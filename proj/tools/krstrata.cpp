// krstrata: Kottwitz-Rapoport strata of the Siegel local model with
// Iwahori level structure.
//
// Exit codes: 0 success, 1 verification failure, 2 usage error, 3 size limit.

#include <CLI11.hpp>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <sstream>
#include <unistd.h>

#include "krstrata/alcove.hpp"
#include "krstrata/checks.hpp"
#include "krstrata/error.hpp"
#include "krstrata/parallel.hpp"
#include "krstrata/prank.hpp"
#include "krstrata/report_io.hpp"
#include "krstrata/rpoly.hpp"

namespace {

using namespace krstrata;

constexpr int kOk = 0;
constexpr int kVerifyFailed = 1;
constexpr int kUsage = 2;
constexpr int kSizeLimit = 3;

struct RunConfig {
  int n = 1;
  long long q = 2;
  int m = 1;
  std::optional<int> r;
  std::string format;
  std::string out;
  std::uint64_t seed = 1;
  std::vector<std::string> checks;
  bool verbose = false;
};

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void emit(const RunConfig& config, const std::string& text) {
  if (config.out.empty()) {
    std::cout << text;
    return;
  }
  const std::filesystem::path target(config.out);
  auto temp = target;
  temp += ".tmp." + std::to_string(::getpid());
  {
    std::ofstream file(temp, std::ios::binary | std::ios::trunc);
    if (!file) throw std::runtime_error("cannot write " + temp.string());
    file << text;
    if (!file.flush()) throw std::runtime_error("cannot write " + temp.string());
  }
  std::filesystem::rename(temp, target);
  if (config.verbose) std::cerr << "wrote " << target.string() << "\n";
}

void require_n(const RunConfig& config) {
  if (config.n < 1) throw UsageError("--n must be at least 1");
}

int cmd_enumerate(const RunConfig& config) {
  require_n(config);
  const auto format = config.format.empty() ? std::string("json") : config.format;
  if (format != "json" && format != "csv") throw UsageError("enumerate supports --format json or csv");
  const auto report = strata_report(config.n);
  emit(config, format == "json" ? report_to_json(report) : report_to_csv(report));
  return kOk;
}

int cmd_hasse(const RunConfig& config) {
  require_n(config);
  if (!config.format.empty() && config.format != "dot") throw UsageError("hasse supports --format dot");
  emit(config, hasse_dot(strata_report(config.n)));
  return kOk;
}

int cmd_points(const RunConfig& config) {
  require_n(config);
  if (!config.format.empty() && config.format != "json") throw UsageError("points supports --format json");
  if (config.q > 7) throw Error(ErrorKind::SizeLimit, "point enumeration is limited to q <= 7");
  const auto count = point_count(config.n, static_cast<int>(config.q));
  emit(config, point_count_to_json(count));
  return kOk;
}

int cmd_trace(const RunConfig& config) {
  require_n(config);
  if (!is_prime_power(config.q)) throw UsageError("--q must be a prime power");
  if (config.m < 1) throw UsageError("--m must be at least 1");
  if (config.n > 3) throw Error(ErrorKind::SizeLimit, "trace is limited to n <= 3");
  const auto format = config.format.empty() ? std::string("text") : config.format;
  if (format != "text" && format != "csv" && format != "json") throw UsageError("trace supports text, csv or json");

  const auto report = strata_report(config.n);
  const RPolynomialTable table(AffineWeylGroup::gsp(config.n));
  std::ostringstream os;
  nlohmann::ordered_json rows = nlohmann::ordered_json::array();
  if (format == "csv") os << "window,length,p_rank,trace\n";
  if (format == "text") os << "window\tlength\tp_rank\ttrace\n";
  for (const auto& r : report.records) {
    const auto value = ss_trace(table, r.element, config.q, config.m).value;
    if (format == "json") {
      rows.push_back({{"window", r.element.window()},
                      {"length", r.length},
                      {"p_rank", r.p_rank},
                      {"trace", value.str()}});
    } else {
      const char* sep = format == "csv" ? "," : "\t";
      os << (format == "csv" ? "\"" : "") << r.element << (format == "csv" ? "\"" : "") << sep << r.length << sep
         << r.p_rank << sep << value << "\n";
    }
  }
  if (format == "json") {
    nlohmann::ordered_json j;
    j["n"] = config.n;
    j["q"] = config.q;
    j["m"] = config.m;
    j["rows"] = std::move(rows);
    os << j.dump(2) << "\n";
  }
  emit(config, os.str());
  return kOk;
}

int cmd_verify(const RunConfig& config) {
  require_n(config);
  if (config.n > 4) throw Error(ErrorKind::SizeLimit, "verify is limited to n <= 4");
  if (!is_prime_power(config.q)) throw UsageError("--q must be a prime power");
  auto names = config.checks.empty() ? check_names() : config.checks;
  for (const auto& name : names)
    if (!is_check_name(name)) throw UsageError("unknown check: " + name);

  CheckConfig check_config;
  check_config.n = config.n;
  check_config.q = static_cast<int>(config.q);
  check_config.seed = config.seed;
  check_config.r = config.r;
  std::ostringstream os;
  bool ok = true;
  for (const auto& name : names) {
    const auto result = run_check(name, check_config);
    ok = ok && result.status != CheckStatus::Fail;
    os << to_string(result.status) << " " << result.name << " (" << result.detail << ")\n";
    if (config.out.empty()) {
      std::cout << os.str() << std::flush;
      os.str("");
    }
  }
  if (!config.out.empty()) emit(config, os.str());
  return ok ? kOk : kVerifyFailed;
}

void configure_threads() {
  const char* env = std::getenv("KRSTRATA_THREADS");
  if (!env || !*env) return;
  char* end = nullptr;
  const long value = std::strtol(env, &end, 10);
  if (*end != '\0' || value < 1 || value > 1024) throw UsageError("KRSTRATA_THREADS must be a positive integer");
  set_thread_count(static_cast<unsigned>(value));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Kottwitz-Rapoport strata of the Siegel local model"};
  app.require_subcommand(1);
  RunConfig config;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--n", config.n, "Genus n (the group is GSp(2n))")->capture_default_str();
    sub->add_option("--format", config.format, "Output format");
    sub->add_option("--out", config.out, "Output file (written atomically); stdout if omitted");
    sub->add_flag("-v,--verbose", config.verbose, "Log to stderr");
  };

  auto* enumerate = app.add_subcommand("enumerate", "Strata report of KR(mu): json (default) or csv");
  add_common(enumerate);
  auto* verify = app.add_subcommand("verify", "Run named checks; one PASS/FAIL/SKIP line each");
  add_common(verify);
  verify->add_option("--q", config.q, "Field size")->capture_default_str();
  verify->add_option("--seed", config.seed, "Seed for random Iwahori elements")->capture_default_str();
  verify->add_option("--r", config.r, "Restrict vertex_lattice to val-det r");
  verify->add_option("--checks", config.checks, "Comma separated check names (default: all)")->delimiter(',');
  auto* trace = app.add_subcommand("trace", "Semisimple trace of Frobenius on every stratum");
  add_common(trace);
  trace->add_option("--q", config.q, "Prime power q")->capture_default_str();
  trace->add_option("--m", config.m, "Frobenius power")->capture_default_str();
  auto* hasse = app.add_subcommand("hasse", "Hasse diagram of the Bruhat order on KR(mu) as DOT");
  add_common(hasse);
  auto* points = app.add_subcommand("points", "Brute-force point count of the special fiber");
  add_common(points);
  points->add_option("--q", config.q, "Prime field size")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    configure_threads();
    if (enumerate->parsed()) return cmd_enumerate(config);
    if (verify->parsed()) return cmd_verify(config);
    if (trace->parsed()) return cmd_trace(config);
    if (hasse->parsed()) return cmd_hasse(config);
    if (points->parsed()) return cmd_points(config);
  } catch (const UsageError& e) {
    std::cerr << "krstrata: " << e.what() << "\n";
    return kUsage;
  } catch (const Error& e) {
    std::cerr << "krstrata: " << e.what() << "\n";
    if (e.kind() == ErrorKind::SizeLimit) return kSizeLimit;
    if (e.kind() == ErrorKind::InvalidArgument) return kUsage;
    return kVerifyFailed;
  } catch (const std::exception& e) {
    std::cerr << "krstrata: " << e.what() << "\n";
    return kVerifyFailed;
  }
  return kUsage;
}
