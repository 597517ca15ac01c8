#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "graphforms/distance.hpp"
#include "graphforms/isometry.hpp"
#include "json.hpp"

namespace graphforms {

extern const std::string_view kExpectedValuesJson;
// Parsed copy of the embedded expected-values fixture.
const nlohmann::json& expected_values();

const std::vector<std::string>& experiment_tags();

struct ExperimentSpec {
  std::string tag;
  std::vector<int> sizes;  // empty: the tag's default range
  std::uint64_t seed = 1;
  IsometryBudget budget;
  DistanceOptions distance;
  std::string corpus;  // directory of graph6 files, optional
  int threads = 0;     // 0: hardware concurrency

  void validate() const;
};

enum class CellStatus { kPass, kFail, kExhausted, kInfo };
std::string to_string(CellStatus s);

struct Cell {
  std::string anchor;  // source table and coordinates
  std::string row;
  std::string column;
  nlohmann::json value;
  nlohmann::json expected;  // null when there is nothing to compare against
  std::string tolerance;    // e.g. "rel 5e-4"
  CellStatus status = CellStatus::kInfo;
  std::string note;
};

struct ExperimentReport {
  std::string tag;
  std::uint64_t seed = 1;
  std::vector<Cell> cells;

  // 0 all gated cells pass, 2 tolerance failure, 3 exhausted budget.
  int exit_code() const;
  nlohmann::json to_json() const;
  std::string to_table() const;
};

// Runs tasks on a pool of worker threads; results keep task order.
std::vector<std::vector<Cell>> run_tasks(const std::vector<std::function<std::vector<Cell>()>>& tasks, int threads);

ExperimentReport run_experiment(const ExperimentSpec& spec);

// Helpers shared by the runners and the acceptance binary.
Cell relative_cell(std::string anchor, std::string row, std::string column, double value, double expected, double rel);
double dumbbell_gap(int n, int which);  // |phi_1(a) - phi_1(b)| on edge e_which of DB_n

}  // namespace graphforms
