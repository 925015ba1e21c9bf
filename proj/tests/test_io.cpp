#include <doctest.h>

#include <sstream>

#include "bergebook/constructions.hpp"
#include "bergebook/io.hpp"

using namespace bergebook;

TEST_CASE("3hg round trip") {
  Hypergraph h = random_uniform(9, 15, 42);
  std::ostringstream out;
  write_3hg(out, h, {"a comment"});
  std::istringstream in(out.str());
  Hypergraph back = read_3hg(in);
  CHECK(back.n == h.n);
  CHECK(back.edges == h.edges);

  // writing twice is byte-identical
  std::ostringstream out2;
  write_3hg(out2, h, {"a comment"});
  CHECK(out.str() == out2.str());
}

TEST_CASE("3hg accepts unsorted edges and comments") {
  std::istringstream in(
      "# fixture\n4 2\n2 1 0\n0 1 3  # trailing comment\n");
  Hypergraph h = read_3hg(in);
  CHECK(h.n == 4);
  CHECK(h.edges[0] == Triple{0, 1, 2});
  CHECK(h.edges[1] == Triple{0, 1, 3});
}

TEST_CASE("3hg parse errors") {
  std::istringstream bad1("4\n");
  CHECK_THROWS_AS(read_3hg(bad1), ParseError);
  std::istringstream bad2("4 2\n0 1 2\n");
  CHECK_THROWS_AS(read_3hg(bad2), ParseError);
  std::istringstream bad3("4 1\n0 1 9\n");
  CHECK_THROWS_AS(read_3hg(bad3), OutOfRange);
  std::istringstream bad4("4 1\n0 1\n");
  CHECK_THROWS_AS(read_3hg(bad4), ParseError);
}

TEST_CASE("certificate JSON shape is fixed") {
  Hypergraph h = build(
      14, {{0, 1, 9}, {0, 2, 10}, {1, 2, 11}, {0, 3, 12}, {1, 3, 13}});
  auto c = find_berge_book(h, 2);
  REQUIRE(c.has_value());
  std::string dumped = to_json(*c).dump();
  CHECK(dumped ==
        "{\"base\":[0,1],\"apex\":[0,1,9],\"pages\":[{\"x\":2,\"e\":[0,2,10],"
        "\"f\":[1,2,11]},{\"x\":3,\"e\":[0,3,12],\"f\":[1,3,13]}]}");

  // determinism across runs
  CHECK(to_json(*find_berge_book(h, 2)).dump() == dumped);
}

TEST_CASE("pipeline report JSON carries exact integer bound checks") {
  PipelineReport rep = run_pipeline(fig1(16), 2);
  auto j = to_json(rep);
  CHECK(j["e_h1"] == 32);
  CHECK(j["e_h2"] == 0);
  CHECK(j["certificate"].is_null());
  bool saw = false;
  for (const auto& b : j["bound_checks"]) {
    if (b["name"] == "e_h1_8e_vs_n2") {
      saw = true;
      CHECK(b["lhs"] == 256);
      CHECK(b["rhs"] == 256);
      CHECK(b["pass"] == true);
    }
  }
  CHECK(saw);
}
