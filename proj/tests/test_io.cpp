#include "parahoric/figure.hpp"
#include "parahoric/io.hpp"
#include "test_helpers.hpp"

#include <doctest.h>
#include <nlohmann/json.hpp>

using namespace parahoric;
using parahoric::testing::random_element;

TEST_CASE("element json round trip") {
  std::mt19937 rng(41);
  for (auto dat : {build_group_datum(Family::GL, 3), build_group_datum(Family::GSp, 2)}) {
    for (int trial = 0; trial < 15; ++trial) {
      AffineElt x = random_element(dat, rng);
      CHECK(element_from_json(dat, element_to_json(x)) == x);
    }
  }
  auto gl3 = build_group_datum(Family::GL, 3);
  auto gsp4 = build_group_datum(Family::GSp, 2);
  CHECK_THROWS_AS(element_from_json(gsp4, element_to_json(identity_elt(gl3))),
                  std::invalid_argument);
}

TEST_CASE("stratify json schema") {
  auto gl2 = build_group_datum(Family::GL, 2);
  auto j = stratify_to_json(gl2, {0, -1});
  CHECK(j["equal"] == true);
  CHECK(j["components"] == 2);
  CHECK(j["adm"].size() == 3);
  CHECK(j["perm"].size() == 3);
  CHECK(j["strata"].size() == 3);
  for (const auto& s : j["strata"]) {
    CHECK(s.contains("w"));
    CHECK(s.contains("length"));
    CHECK(s.contains("smooth"));
    CHECK(s.contains("closure"));
    CHECK_FALSE(s.contains("p_rank"));
  }
  auto gsp4 = build_group_datum(Family::GSp, 2);
  auto jg = stratify_to_json(gsp4, Coweight{0, 0, -1, -1});
  for (const auto& s : jg["strata"]) CHECK(s.contains("p_rank"));

  // Deterministic rendering.
  CHECK(stratify_to_json(gl2, {0, -1}).dump() == j.dump());
}

TEST_CASE("tsv tables") {
  auto gl2 = build_group_datum(Family::GL, 2);
  std::string trace = trace_table_tsv(gl2, {0, -1}, 3, 1);
  CHECK(trace.rfind("element\tlength\tsign\tpolynomial\tvalue_q=3^1", 0) == 0);
  CHECK(trace.find("t[0,-1]*w[1,2]\t1\t+\t1\t1") != std::string::npos);

  std::string phi = test_function_tsv(gl2, {0, -1}, 3, 1);
  CHECK(phi.find("-2") != std::string::npos);

  auto rep = strata_point_counts(gl2, {0, -1}, 2);
  std::string tsv = strata_counts_tsv(rep);
  CHECK(tsv.find("total\t\t5\t5\tok") != std::string::npos);
}

TEST_CASE("figure svg") {
  auto gl3 = build_group_datum(Family::GL, 3);
  std::string svg = alcove_figure_svg(gl3, {-1, 0, 0});
  CHECK(svg.rfind("<svg", 0) == 0);
  CHECK(std::count(svg.begin(), svg.end(), '\n') > 7);
  size_t polys = 0, pos = 0;
  while ((pos = svg.find("<polygon", pos)) != std::string::npos) {
    ++polys;
    ++pos;
  }
  CHECK(polys == 7);
  CHECK(svg.find("&#964;") != std::string::npos);
  CHECK(svg == alcove_figure_svg(gl3, {-1, 0, 0}));

  auto gsp4 = build_group_datum(Family::GSp, 2);
  std::string svg2 = alcove_figure_svg(gsp4, Coweight{0, 0, -1, -1});
  polys = 0;
  pos = 0;
  while ((pos = svg2.find("<polygon", pos)) != std::string::npos) {
    ++polys;
    ++pos;
  }
  CHECK(polys == 13);

  auto gl4 = build_group_datum(Family::GL, 4);
  CHECK_THROWS_AS(alcove_figure_svg(gl4, Coweight{0, 0, 0, -1}),
                  std::invalid_argument);
}
