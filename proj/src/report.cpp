#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <sstream>
#include <thread>

#include "graphforms/experiments.hpp"

namespace graphforms {

const nlohmann::json& expected_values() {
  static const nlohmann::json j = nlohmann::json::parse(kExpectedValuesJson);
  return j;
}

std::string to_string(CellStatus s) {
  switch (s) {
    case CellStatus::kPass:
      return "pass";
    case CellStatus::kFail:
      return "fail";
    case CellStatus::kExhausted:
      return "exhausted";
    case CellStatus::kInfo:
      return "info";
  }
  return "unknown";
}

int ExperimentReport::exit_code() const {
  bool fail = false, exhausted = false;
  for (const auto& c : cells) {
    fail |= c.status == CellStatus::kFail;
    exhausted |= c.status == CellStatus::kExhausted;
  }
  if (fail) return 2;
  if (exhausted) return 3;
  return 0;
}

nlohmann::json ExperimentReport::to_json() const {
  nlohmann::json j;
  j["tag"] = tag;
  j["seed"] = seed;
  j["fixture_version"] = expected_values().at("version");
  j["cells"] = nlohmann::json::array();
  int counts[4] = {0, 0, 0, 0};
  for (const auto& c : cells) {
    ++counts[static_cast<int>(c.status)];
    nlohmann::json cj;
    cj["anchor"] = c.anchor;
    cj["row"] = c.row;
    cj["column"] = c.column;
    cj["value"] = c.value;
    cj["expected"] = c.expected;
    cj["tolerance"] = c.tolerance;
    cj["status"] = to_string(c.status);
    if (!c.note.empty()) cj["note"] = c.note;
    j["cells"].push_back(std::move(cj));
  }
  j["summary"] = {{"pass", counts[0]}, {"fail", counts[1]}, {"exhausted", counts[2]}, {"info", counts[3]}};
  j["exit_code"] = exit_code();
  return j;
}

namespace {

std::string render(const nlohmann::json& v) {
  if (v.is_null()) return "-";
  if (v.is_string()) return v.get<std::string>();
  if (v.is_number_float()) {
    std::ostringstream os;
    os.precision(6);
    os << v.get<double>();
    return os.str();
  }
  return v.dump();
}

}  // namespace

std::string ExperimentReport::to_table() const {
  std::vector<std::vector<std::string>> rows{{"anchor", "row", "column", "value", "expected", "status"}};
  for (const auto& c : cells)
    rows.push_back({c.anchor, c.row, c.column, render(c.value), render(c.expected), to_string(c.status)});
  std::vector<size_t> width(rows[0].size(), 0);
  for (const auto& r : rows)
    for (size_t i = 0; i < r.size(); ++i) width[i] = std::max(width[i], r[i].size());
  std::ostringstream os;
  os << "# " << tag << " (seed " << seed << ")\n";
  for (const auto& r : rows) {
    for (size_t i = 0; i < r.size(); ++i) {
      os << r[i];
      if (i + 1 < r.size()) os << std::string(width[i] - r[i].size() + 2, ' ');
    }
    os << '\n';
  }
  os << "exit code " << exit_code() << '\n';
  return os.str();
}

std::vector<std::vector<Cell>> run_tasks(const std::vector<std::function<std::vector<Cell>()>>& tasks, int threads) {
  std::vector<std::vector<Cell>> out(tasks.size());
  std::vector<std::exception_ptr> errors(tasks.size());
  if (threads <= 0) threads = static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
  threads = std::min<int>(threads, static_cast<int>(tasks.size()));
  std::atomic<size_t> next{0};
  auto worker = [&] {
    for (size_t i; (i = next++) < tasks.size();) {
      try {
        out[i] = tasks[i]();
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  for (const auto& e : errors)
    if (e) std::rethrow_exception(e);
  return out;
}

Cell relative_cell(std::string anchor, std::string row, std::string column, double value, double expected, double rel) {
  Cell c;
  c.anchor = std::move(anchor);
  c.row = std::move(row);
  c.column = std::move(column);
  c.value = value;
  c.expected = expected;
  std::ostringstream tol;
  tol << "rel " << rel;
  c.tolerance = tol.str();
  bool ok = std::isfinite(value) && std::abs(value - expected) <= rel * std::abs(expected);
  c.status = ok ? CellStatus::kPass : CellStatus::kFail;
  return c;
}

}  // namespace graphforms
