#pragma once

// Named verification checks shared by the command line tool and the Python
// bindings.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace krstrata {

enum class CheckStatus { Pass, Fail, Skip };

struct CheckResult {
  std::string name;
  CheckStatus status = CheckStatus::Skip;
  std::string detail;
};

struct CheckConfig {
  int n = 1;
  int q = 2;
  std::uint64_t seed = 1;
  /// Restricts vertex_lattice to one val-det value.
  std::optional<int> r;
  /// Random Iwahori elements per stratum in iwahori_invariance.
  int samples = 100;
};

/// In execution order.
const std::vector<std::string>& check_names();
bool is_check_name(const std::string& name);

/// Runs one check. Out-of-range parameters give Skip; exceptions other than
/// usage errors are reported as Fail.
CheckResult run_check(const std::string& name, const CheckConfig& config);

/// Compares the vertex and lattice forms of permissibility on every element
/// of the GL(d) component val-det = r with length <= max_length. Returns
/// (checked, disagreements).
std::pair<std::size_t, std::size_t> compare_permissibility(int d, int r, int max_length);

std::string to_string(CheckStatus status);

}  // namespace krstrata
