#include <catch2/catch_amalgamated.hpp>

#include "pathbetti/closed_form.hpp"
#include "pathbetti/io.hpp"

using namespace pathbetti;

TEST_CASE("json round trip") {
  BettiTable t = betti_table({3, 2, 1});
  nlohmann::json j = to_json(t);
  CHECK(j["n"] == 3);
  CHECK(j["m"] == 2);
  CHECK(j["t"] == 1);
  REQUIRE(j["entries"].size() == 4);
  // entries arrive sorted by (i, j)
  CHECK(j["entries"][0]["i"] == 0);
  CHECK(j["entries"][0]["j"] == 2);
  CHECK(j["entries"][0]["value"] == "4");
  CHECK(j["entries"][3]["i"] == 2);
  CHECK(j["entries"][3]["j"] == 5);

  BettiTable back = from_json(j);
  CHECK(back == t);
  REQUIRE(back.params.has_value());
  CHECK(*back.params == PathParams(3, 2, 1));
}

TEST_CASE("json with label and huge values") {
  BettiTable t;
  t.label = "custom";
  t.add(0, 2, binom(100, 50));
  nlohmann::json j = to_json(t);
  CHECK(j["label"] == "custom");
  CHECK(j["entries"][0]["value"] == "100891344545564193334812497256");
  BettiTable back = from_json(j);
  CHECK(back.label == "custom");
  CHECK_FALSE(back.params.has_value());
  CHECK(back.value(0, 2) == binom(100, 50));

  // integer-valued entries parse too
  nlohmann::json hand = nlohmann::json::parse(
      R"({"entries":[{"i":0,"j":3,"value":7}]})");
  CHECK(from_json(hand).value(0, 3) == 7);
}

TEST_CASE("csv") {
  CHECK(to_csv(betti_table({2, 2, 1})) == "i,j,value\n0,2,3\n1,3,2\n");
  BettiTable empty;
  CHECK(to_csv(empty) == "i,j,value\n");
}

TEST_CASE("diagram") {
  CHECK(to_diagram(betti_table({3, 2, 1})) ==
        "       0 1 2\n"
        "total: 4 4 1\n"
        "    2: 4 3 .\n"
        "    3: . 1 1\n");

  BettiTable empty;
  CHECK(to_diagram(empty) == "empty table\n");

  // column widths stretch to the widest entry
  BettiTable wide;
  wide.add(0, 2, 100);
  wide.add(1, 3, 1);
  CHECK(to_diagram(wide) ==
        "         0 1\n"
        "total: 100 1\n"
        "    2: 100 1\n");
}
