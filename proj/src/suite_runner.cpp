#include <algorithm>
#include <atomic>
#include <iomanip>
#include <mutex>
#include <sstream>
#include <thread>

#include "homdom/suite.hpp"

namespace homdom {

bool SuiteReport::all_pass() const {
  return std::all_of(results.begin(), results.end(), [](const auto& r) { return r.status == CheckStatus::pass; });
}

std::size_t SuiteReport::count(CheckStatus s) const {
  return static_cast<std::size_t>(
      std::count_if(results.begin(), results.end(), [s](const auto& r) { return r.status == s; }));
}

SuiteReport run_suite(const SuiteConfig& config, const RunOptions& options) {
  std::vector<CheckSpec> specs = config.checks;
  if (options.seed_override)
    for (auto& s : specs) s.seed = *options.seed_override;

  SuiteReport report;
  std::mutex mu;
  std::atomic<std::size_t> next{0};
  std::atomic<bool> stop{false};

  auto worker = [&] {
    for (;;) {
      if (stop.load()) return;
      const std::size_t k = next.fetch_add(1);
      if (k >= specs.size()) return;
      CheckResult r = run_check(specs[k]);
      if (options.fail_fast && r.status != CheckStatus::pass) stop.store(true);
      std::lock_guard<std::mutex> lock(mu);
      report.results.push_back(std::move(r));
    }
  };

  const unsigned jobs = std::max(1u, std::min<unsigned>(options.jobs, static_cast<unsigned>(specs.size())));
  if (jobs <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned j = 0; j < jobs; ++j) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  report.skipped = specs.size() - report.results.size();
  std::sort(report.results.begin(), report.results.end(), [](const auto& a, const auto& b) { return a.id < b.id; });
  return report;
}

nlohmann::json to_json(const CheckResult& r, bool include_timing) {
  nlohmann::json j;
  j["id"] = r.id;
  j["kind"] = r.kind;
  j["target"] = r.target;
  j["criterion"] = r.criterion;
  j["status"] = to_string(r.status);
  j["details"] = r.details;
  if (!r.message.empty()) j["message"] = r.message;
  if (include_timing) j["wall_time_ms"] = r.wall_time_ms;
  return j;
}

std::string to_ndjson(const SuiteReport& report, bool include_timing) {
  std::string out;
  for (const auto& r : report.results) out += to_json(r, include_timing).dump() + "\n";
  return out;
}

std::string to_markdown(const SuiteReport& report) {
  std::ostringstream os;
  os << "| id | kind | target | criterion | status | accepted | time (ms) |\n";
  os << "|---|---|---|---|---|---|---|\n";
  for (const auto& r : report.results) {
    std::string accepted = "-";
    if (r.details.contains("accepted"))
      accepted = std::to_string(r.details["accepted"].get<std::size_t>()) + "/" +
                 std::to_string(r.details["total"].get<std::size_t>());
    os << "| " << r.id << " | " << r.kind << " | `" << r.target << "` | " << (r.criterion ? std::to_string(r.criterion) : "-")
       << " | " << to_string(r.status) << " | " << accepted << " | " << std::fixed << std::setprecision(1)
       << r.wall_time_ms << " |\n";
  }
  os << "\n" << report.count(CheckStatus::pass) << " pass, " << report.count(CheckStatus::fail) << " fail, "
     << report.count(CheckStatus::error) << " error";
  if (report.skipped) os << ", " << report.skipped << " skipped";
  os << "\n";
  for (const auto& r : report.results)
    if (r.status == CheckStatus::error) os << "\n- " << r.id << ": " << r.message << "\n";
  return os.str();
}

}  // namespace homdom
