#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

#include "homdom/catalog.hpp"
#include "homdom/suite.hpp"

namespace homdom {

namespace {

std::string trim(const std::string& s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string::npos) return "";
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

[[noreturn]] void fail(const std::string& source, int line, const std::string& what) {
  throw ConfigError(source + ":" + std::to_string(line) + ": " + what);
}

CheckPath parse_path(const std::string& v, const std::string& source, int line) {
  if (v == "exact") return CheckPath::exact;
  if (v == "float") return CheckPath::floating;
  if (v == "both") return CheckPath::both;
  fail(source, line, "path must be exact, float or both, got '" + v + "'");
}

void finish(CheckSpec& spec, const std::string& source, std::set<std::string>& seen) {
  if (spec.kind.empty()) fail(source, spec.line, "check '" + spec.id + "' has no kind");
  const auto& kinds = check_kinds();
  if (std::find(kinds.begin(), kinds.end(), spec.kind) == kinds.end())
    fail(source, spec.line, "check '" + spec.id + "' has unknown kind '" + spec.kind + "'");
  if (spec.target.empty()) fail(source, spec.line, "check '" + spec.id + "' has no target");
  try {
    resolve(spec.target);
  } catch (const Error& e) {
    fail(source, spec.line, "check '" + spec.id + "': unresolved target '" + spec.target + "': " + e.what());
  }
  if (!seen.insert(spec.id).second) fail(source, spec.line, "duplicate check id '" + spec.id + "'");
}

}  // namespace

const std::vector<std::string>& check_kinds() {
  static const std::vector<std::string> kinds{"invariance", "transitivity", "levi",         "chern_moser",
                                              "lie",        "line_witness", "closure", "rank"};
  return kinds;
}

SuiteConfig parse_config(std::istream& in, const std::string& source) {
  SuiteConfig cfg;
  cfg.source = source;
  std::set<std::string> seen;
  std::optional<CheckSpec> current;
  std::string raw;
  int line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    const std::string line = trim(raw);
    if (line.empty() || line[0] == '#') continue;
    if (line.front() == '[') {
      if (line.back() != ']') fail(source, line_no, "unterminated block header");
      const std::string inner = trim(line.substr(1, line.size() - 2));
      if (inner.rfind("check", 0) != 0 || inner.size() < 6 || (inner[5] != ' ' && inner[5] != '\t'))
        fail(source, line_no, "expected [check <id>]");
      const std::string id = trim(inner.substr(5));
      if (id.empty() || id.find_first_of(" \t") != std::string::npos)
        fail(source, line_no, "check id must be a single non-empty word");
      if (current) {
        finish(*current, source, seen);
        cfg.checks.push_back(std::move(*current));
      }
      current = CheckSpec{};
      current->id = id;
      current->line = line_no;
      continue;
    }
    const auto eq = line.find('=');
    if (eq == std::string::npos) fail(source, line_no, "expected key = value");
    if (!current) fail(source, line_no, "key outside of a [check] block");
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    if (key.empty()) fail(source, line_no, "empty key");
    if (key == "kind") {
      current->kind = value;
    } else if (key == "target") {
      current->target = value;
    } else if (key == "seed") {
      try {
        std::size_t used = 0;
        current->seed = std::stoull(value, &used);
        if (used != value.size()) throw std::invalid_argument(value);
      } catch (const std::exception&) {
        fail(source, line_no, "seed must be a non-negative integer");
      }
    } else if (key == "path") {
      current->path = parse_path(value, source, line_no);
    } else if (key == "criterion") {
      try {
        current->criterion = std::stoi(value);
      } catch (const std::exception&) {
        fail(source, line_no, "criterion must be an integer");
      }
    } else if (key == "expect") {
      if (value != "accept" && value != "reject") fail(source, line_no, "expect must be accept or reject");
      current->expect_reject = value == "reject";
    } else {
      if (current->params.count(key)) fail(source, line_no, "duplicate key '" + key + "'");
      current->params[key] = value;
    }
  }
  if (current) {
    finish(*current, source, seen);
    cfg.checks.push_back(std::move(*current));
  }
  return cfg;
}

SuiteConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config '" + path + "'");
  return parse_config(in, path);
}

}  // namespace homdom
