#include "segre/report.hpp"

#include <json.hpp>

#include <atomic>
#include <cstdlib>
#include <ostream>
#include <thread>

namespace segre {

bool Report::pass() const {
  for (const Check& c : checks)
    if (!c.pass) return false;
  return true;
}

std::string Report::to_json(bool deterministic) const {
  nlohmann::json j;
  j["command"] = command;
  j["inputs"] = inputs.empty()
                    ? nlohmann::json(nullptr)
                    : nlohmann::json::parse(inputs, nullptr, false);
  nlohmann::json arr = nlohmann::json::array();
  for (const Check& c : checks) {
    nlohmann::json jc;
    jc["name"] = c.name;
    jc["anchor"] = c.anchor;
    jc["pass"] = c.pass;
    if (!c.details.empty()) jc["details"] = c.details;
    arr.push_back(std::move(jc));
  }
  j["checks"] = std::move(arr);
  nlohmann::json dims = nlohmann::json::object();
  for (const auto& [k, v] : dimensions) dims[k] = v;
  j["dimensions"] = std::move(dims);
  j["pass"] = pass();
  j["elapsed"] = deterministic ? 0.0 : elapsed_seconds;
  return j.dump(2);
}

void Report::print(std::ostream& os) const {
  os << "== " << command << " ==\n";
  for (const Check& c : checks) {
    os << (c.pass ? "  [pass] " : "  [FAIL] ") << c.name;
    if (!c.anchor.empty()) os << "  (" << c.anchor << ")";
    if (!c.details.empty()) os << "  -- " << c.details;
    os << "\n";
  }
  for (const auto& [k, v] : dimensions) os << "  dim " << k << " = " << v << "\n";
  os << (pass() ? "PASS" : "FAIL") << " (" << elapsed_seconds << " s)\n";
}

std::size_t worker_count() {
  if (const char* env = std::getenv("SEGRE_KIT_WORKERS")) {
    const long v = std::strtol(env, nullptr, 10);
    if (v > 0) return static_cast<std::size_t>(v);
  }
  const unsigned hc = std::thread::hardware_concurrency();
  return hc == 0 ? 1 : hc;
}

std::vector<Check> run_checks(std::vector<std::function<Check()>> tasks) {
  std::vector<Check> results(tasks.size());
  const std::size_t workers = std::min(worker_count(), tasks.size());
  if (workers <= 1) {
    for (std::size_t k = 0; k < tasks.size(); ++k) results[k] = tasks[k]();
    return results;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (std::size_t w = 0; w < workers; ++w)
    pool.emplace_back([&] {
      for (;;) {
        const std::size_t k = next.fetch_add(1);
        if (k >= tasks.size()) return;
        results[k] = tasks[k]();
      }
    });
  for (auto& t : pool) t.join();
  return results;
}

}  // namespace segre
