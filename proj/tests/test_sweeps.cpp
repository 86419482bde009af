#include <algorithm>
#include <sstream>

#include "doctest.h"
#include "helpers.hpp"
#include "invschub/sweeps.hpp"

using namespace invschub;
using namespace testutil;

TEST_SUITE_BEGIN("sweeps");

TEST_CASE("universes are lexicographic and sized by the classical recurrences") {
  CHECK(all_permutations(0) == std::vector<Permutation>{Permutation()});
  CHECK(all_permutations(4) == all_perms(4));
  CHECK(all_involutions(4).size() == 10);
  CHECK(all_involutions(5) == involutions_on(1, 5));
  CHECK(all_fpf_involutions(6) == all_fpf(6));
  CHECK(all_fpf_involutions(0) == std::vector<FpfInvolution>{FpfInvolution()});

  auto invs = all_involutions(6);
  CHECK(invs.size() == 76);
  // ascending in one-line notation (which differs from operator<)
  for (size_t k = 0; k + 1 < invs.size(); ++k)
    CHECK(invs[k].perm().one_line(1, 6) < invs[k + 1].perm().one_line(1, 6));
  CHECK(invs.front() == Involution::identity());
  auto fpfs = all_fpf_involutions(6);
  for (size_t k = 0; k + 1 < fpfs.size(); ++k)
    CHECK(fpfs[k].window_perm(1, 6).one_line(1, 6) <
          fpfs[k + 1].window_perm(1, 6).one_line(1, 6));

  CHECK(universe_size(UniverseKind::perm, 4) == 24);
  CHECK(universe_size(UniverseKind::perm, 9) == 362880);
  CHECK(universe_size(UniverseKind::inv, 5) == 26);
  CHECK(universe_size(UniverseKind::inv, 8) == 764);
  CHECK(universe_size(UniverseKind::inv, 9) == 2620);
  CHECK(universe_size(UniverseKind::inv, 10) == 9496);
  CHECK(universe_size(UniverseKind::fpf, 8) == 105);
  CHECK(universe_size(UniverseKind::fpf, 12) == 10395);
  for (int n : {4, 5, 6})
    CHECK(universe_size(UniverseKind::inv, n) ==
          static_cast<long long>(all_involutions(n).size()));

  // bounds are enforced rather than silently exploding
  CHECK_THROWS_AS(all_permutations(10), check_error);
  CHECK_THROWS_AS(all_involutions(11), check_error);
  CHECK_THROWS_AS(all_fpf_involutions(5), check_error);
  CHECK_THROWS_AS(all_fpf_involutions(14), check_error);
  CHECK_THROWS_AS(universe_size(UniverseKind::perm, 10), check_error);
}

TEST_CASE("the registry lists every suite once, gated ones marked") {
  auto suites = list_suites();
  REQUIRE(!suites.empty());
  CHECK(suites.front().name == "worked-examples");
  std::vector<std::string> names;
  for (const SuiteInfo& s : suites) names.push_back(s.name);
  std::vector<std::string> expected = {
      "worked-examples", "products-inv",    "products-fpf",
      "transitions-inv", "transitions-fpf", "transitions-inv-spot",
      "transitions-fpf-spot", "tau-s6",     "tau-s8",
      "tau-s9",          "mir2-s6",         "mir2-s8",
      "little-inv",      "little-fpf",      "props-perm",
      "props-poly",      "props-involutions", "props-tau",
      "props-inv-schubert", "props-fpf",    "props-little"};
  CHECK(names == expected);
  for (const SuiteInfo& s : suites) {
    CHECK(s.big == (s.name == "tau-s9"));
    CHECK(!s.description.empty());
  }
}

TEST_CASE("unknown and gated suites are usage errors") {
  CHECK_THROWS_AS(run_suite("no-such-suite"), suite_error);
  CHECK_THROWS_AS(run_suite(""), suite_error);
  CHECK_THROWS_AS(run_suite("tau-s9"), suite_error);  // gated behind big
}

TEST_CASE("report text renders pass and fail shapes") {
  SweepReport r;
  r.suite = "demo";
  r.universe_size = 3;
  r.checked = 3;
  CHECK(r.passed());
  CHECK(r.canonical_text() ==
        "suite: demo\nuniverse: 3\nchecked: 3\nfailures: 0\nresult: pass\n");
  r.failures = {"first thing broke", "second thing broke"};
  CHECK(!r.passed());
  CHECK(r.canonical_text() ==
        "suite: demo\nuniverse: 3\nchecked: 3\nfailures: 2\n"
        "  - first thing broke\n  - second thing broke\nresult: fail\n");
}

TEST_CASE("worked examples pass") {
  SweepReport r = run_suite("worked-examples");
  CHECK(r.failures.empty());
  CHECK(r.checked == r.universe_size);
  CHECK(r.universe_size > 15);
}

TEST_CASE("product suites pass, by canonical name or alias") {
  SweepReport r = run_suite("wy-n7");
  CHECK(r.suite == "products-inv");
  CHECK(r.failures.empty());
  CHECK(r.checked == 7);
  SweepReport f = run_suite("wy-fpf-n8");
  CHECK(f.suite == "products-fpf");
  CHECK(f.failures.empty());
  CHECK(f.checked == 4);
}

TEST_CASE("transition suites pass") {
  for (const char* name : {"transitions-inv", "transitions-fpf",
                           "transitions-inv-spot", "transitions-fpf-spot"}) {
    CAPTURE(name);
    SweepReport r = run_suite(name);
    CHECK(r.failures.empty());
    CHECK(r.checked == r.universe_size);
  }
  CHECK(run_suite("transitions-inv").universe_size == 76);
  CHECK(run_suite("transitions-inv-spot").universe_size == 100);
  CHECK(run_suite("transitions-fpf-spot").universe_size == 100);
}

TEST_CASE("pair-map and mirror suites pass at rank 6") {
  SweepReport t = run_suite("tau-s6");
  CHECK(t.failures.empty());
  CHECK(t.checked == 76);
  SweepReport m = run_suite("mir2-s6");
  CHECK(m.failures.empty());
  CHECK(m.checked == 76);
}

TEST_CASE("bijection suites pass") {
  SweepReport a = run_suite("little-inv");
  CHECK(a.failures.empty());
  CHECK(a.checked == 26);
  SweepReport b = run_suite("little-fpf");
  CHECK(b.failures.empty());
  CHECK(b.checked == 15);
}

TEST_CASE("property suites pass") {
  for (const char* name : {"props-perm", "props-poly", "props-involutions",
                           "props-tau", "props-inv-schubert", "props-fpf",
                           "props-little"}) {
    CAPTURE(name);
    SweepReport r = run_suite(name);
    for (const std::string& f : r.failures) CAPTURE(f);
    CHECK(r.failures.empty());
    CHECK(r.checked == r.universe_size);
  }
}

TEST_CASE("reports are byte-identical across worker counts") {
  for (const char* name : {"worked-examples", "tau-s6", "little-inv"}) {
    CAPTURE(name);
    SweepOptions one, four, eight;
    one.workers = 1;
    four.workers = 4;
    eight.workers = 8;
    std::string base = run_suite(name, one).canonical_text();
    CHECK(run_suite(name, four).canonical_text() == base);
    CHECK(run_suite(name, eight).canonical_text() == base);
  }
}

TEST_CASE("failures stream to the log as they are found") {
  // worked-examples is clean, so the stream stays empty
  std::ostringstream log;
  SweepOptions opts;
  opts.log = &log;
  SweepReport r = run_suite("worked-examples", opts);
  CHECK(r.passed());
  CHECK(log.str().empty());
}

TEST_SUITE_END();
