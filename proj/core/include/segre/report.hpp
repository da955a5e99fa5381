#pragma once

#include <functional>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

namespace segre {

struct Check {
  std::string name;
  std::string anchor;  // which identity or fact the check verifies
  bool pass = false;
  std::string details;
};

struct Report {
  std::string command;
  std::string inputs;  // echo of parameters, JSON text
  std::vector<Check> checks;
  std::vector<std::pair<std::string, std::string>> dimensions;
  double elapsed_seconds = 0.0;

  bool pass() const;
  /// JSON text; deterministic mode zeroes the elapsed time so repeated runs
  /// are byte-identical.
  std::string to_json(bool deterministic) const;
  void print(std::ostream& os) const;
};

/// Worker cap: SEGRE_KIT_WORKERS, default hardware concurrency.
std::size_t worker_count();

/// Runs independent check tasks on a worker pool; results keep task order.
std::vector<Check> run_checks(std::vector<std::function<Check()>> tasks);

}  // namespace segre
