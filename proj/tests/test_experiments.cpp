#include <gtest/gtest.h>

#include <cmath>
#include <stdexcept>

#include "graphforms/experiments.hpp"

using namespace graphforms;

TEST(Fixture, ParsesAndCarriesTolerances) {
  const auto& j = expected_values();
  EXPECT_EQ(j.at("version"), 1);
  EXPECT_DOUBLE_EQ(j.at("tolerances").at("distance_relative").get<double>(), 5e-4);
  EXPECT_EQ(j.at("dumbbell").at("distance").size(), 5u);
  EXPECT_EQ(experiment_tags().size(), 10u);
}

TEST(Spec, RejectsBadInput) {
  ExperimentSpec s;
  s.tag = "no-such-tag";
  EXPECT_THROW(s.validate(), Error);
  s.tag = "nearly-complete";
  s.sizes = {9};
  EXPECT_THROW(s.validate(), Error);
  s.sizes = {5};
  s.budget.max_nodes = 0;
  EXPECT_THROW(s.validate(), Error);
}

TEST(Report, ExitCodePrecedence) {
  ExperimentReport r;
  r.cells.push_back({});
  EXPECT_EQ(r.exit_code(), 0);
  r.cells.back().status = CellStatus::kExhausted;
  EXPECT_EQ(r.exit_code(), 3);
  Cell f;
  f.status = CellStatus::kFail;
  r.cells.push_back(f);
  EXPECT_EQ(r.exit_code(), 2);
  EXPECT_EQ(r.to_json().at("summary").at("fail"), 1);
}

TEST(Report, RelativeCell) {
  EXPECT_EQ(relative_cell("a", "r", "c", 1.0004, 1.0, 5e-4).status, CellStatus::kPass);
  EXPECT_EQ(relative_cell("a", "r", "c", 1.0006, 1.0, 5e-4).status, CellStatus::kFail);
  EXPECT_EQ(relative_cell("a", "r", "c", std::nan(""), 1.0, 5e-4).status, CellStatus::kFail);
}

TEST(RunTasks, KeepsOrderAndRethrows) {
  std::vector<std::function<std::vector<Cell>()>> tasks;
  for (int i = 0; i < 20; ++i)
    tasks.push_back([i] {
      Cell c;
      c.row = std::to_string(i);
      return std::vector<Cell>{c};
    });
  auto out = run_tasks(tasks, 4);
  for (int i = 0; i < 20; ++i) EXPECT_EQ(out[i][0].row, std::to_string(i));
  tasks.push_back([]() -> std::vector<Cell> { throw Error("boom"); });
  EXPECT_THROW(run_tasks(tasks, 3), Error);
}

TEST(Experiments, ReportsAreDeterministicAcrossThreadCounts) {
  ExperimentSpec s;
  s.tag = "complete-cycle";
  s.sizes = {5, 10, 20};
  s.threads = 1;
  auto a = run_experiment(s).to_json().dump();
  s.threads = 3;
  auto b = run_experiment(s).to_json().dump();
  EXPECT_EQ(a, b);
  EXPECT_EQ(run_experiment(s).exit_code(), 0);
}

TEST(Experiments, SmallRunsPass) {
  for (const std::string tag : {"tree-forms", "srg16", "cfi-symbols"}) {
    ExperimentSpec s;
    s.tag = tag;
    if (tag == "tree-forms") s.sizes = {4, 5, 6};
    if (tag == "cfi-symbols") s.sizes = {4};
    auto r = run_experiment(s);
    EXPECT_EQ(r.exit_code(), 0) << r.to_table();
  }
}

TEST(Experiments, DumbbellGapSpotValues) {
  EXPECT_NEAR(dumbbell_gap(5, 1), 0.48876, 0.48876 * 5e-4);
  EXPECT_LT(dumbbell_gap(5, 2), 1e-10);
  EXPECT_NEAR(dumbbell_gap(10, 3), 0.039628, 0.039628 * 5e-4);
}
