#include <doctest.h>

#include <algorithm>

#include "lintrack/case_studies.hpp"

using namespace lintrack;

namespace {

CaseParams small_params() {
  CaseParams p;
  p.num_processes = 2;
  p.values = {1, 2};
  p.max_total_ops = 4;
  p.uf_n = 3;
  p.snapshot_m = 2;
  return p;
}

}  // namespace

TEST_CASE("registry lists every case study and builds each one") {
  auto names = case_study_names();
  for (const char* expected : {"hw-queue", "jt-union-find", "jayanti-snapshot",
                               "atomic-queue", "atomic-union-find",
                               "atomic-snapshot"}) {
    CHECK(std::find(names.begin(), names.end(), expected) != names.end());
    CaseStudy cs = make_case_study(expected, small_params());
    CHECK(cs.name == expected);
    CHECK(cs.machine);
  }
  CHECK_THROWS(make_case_study("no-such-case", small_params()));
}

TEST_CASE("queue line layout") {
  CaseStudy cs = hw_queue(small_params());
  const StepMachine& m = *cs.machine;
  CHECK(m.op_entry_line(m.op_index("Enqueue")) == 1);
  CHECK(m.op_entry_line(m.op_index("Dequeue")) == 5);
  CHECK(m.classify_line(1) == LineKind::Invocation);
  CHECK(m.classify_line(4) == LineKind::Return);
  CHECK(m.classify_line(5) == LineKind::Invocation);
  CHECK(m.classify_line(9) == LineKind::Return);
  CHECK(cs.partial().rule_sites() == std::vector<int>{2, 8});
  CHECK_FALSE(cs.swss);
}

TEST_CASE("union-find line layout and initial parents") {
  CaseParams p = small_params();
  CaseStudy cs = jt_union_find(p);
  const StepMachine& m = *cs.machine;
  CHECK(m.op_entry_line(m.op_index("Find")) == 1);
  CHECK(m.op_entry_line(m.op_index("Unite")) == 6);
  CHECK(m.classify_line(3) == LineKind::Return);
  CHECK(m.classify_line(5) == LineKind::Intermediate);
  CHECK(m.classify_line(14) == LineKind::Return);
  MachineConfig c = m.initial_config();
  for (int x = 1; x <= p.uf_n; ++x)
    CHECK(m.shared_at(c, m.shared_index("par" + std::to_string(x))) ==
          Value::integer(x));
}

TEST_CASE("snapshot line layout and roles") {
  CaseStudy cs = jayanti_snapshot(small_params());
  const StepMachine& m = *cs.machine;
  CHECK(m.op_entry_line(m.op_index("Write")) == 1);
  CHECK(m.op_entry_line(m.op_index("Scan")) == 6);
  CHECK(m.classify_line(5) == LineKind::Return);
  CHECK(m.classify_line(12) == LineKind::Return);
  CHECK(cs.swss);
}

TEST_CASE("each concurrent case study ships two named buggy variants") {
  for (const char* name : {"hw-queue", "jt-union-find", "jayanti-snapshot"}) {
    CaseStudy cs = make_case_study(name, small_params());
    REQUIRE(cs.mutants.size() == 2);
    for (const Mutant& mu : cs.mutants) {
      CHECK_FALSE(mu.description.empty());
      CHECK(cs.find_mutant(mu.name) == &mu);
      // the variant keeps the healthy line layout so counterexample replay
      // and tracking work unchanged
      CHECK(mu.machine->num_operations() == cs.machine->num_operations());
      CHECK(mu.machine->lines().size() == cs.machine->lines().size());
    }
  }
  CHECK(hw_queue(small_params()).find_mutant("nope") == nullptr);
}

TEST_CASE("atomic cases linearize at their single take-effect line") {
  CaseStudy cs = make_case_study("atomic-queue", small_params());
  CHECK(cs.has_partial());
  CHECK(cs.mutants.empty());
  // one rule site per operation, at the line applying the transition function
  CHECK(cs.partial().rule_sites() == std::vector<int>{2, 5});
}
