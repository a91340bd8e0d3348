#include <doctest.h>

#include "surfemb/json_io.hpp"

using namespace surfemb;

TEST_CASE("quiver and gram parsing") {
  const Quiver q = parse_quiver(json::parse(R"({"vertices": 3, "arrows": [[0, 1], [1, 2]]})"));
  CHECK(q == quivers::linear_a(3));
  CHECK_THROWS_AS(parse_quiver(json::parse(R"({"vertices": 3, "arrows": [[0, 1], [1, 2], [2, 0]]})")), InputError);
  CHECK_THROWS_AS(parse_quiver(json::parse(R"({"vertices": -1, "arrows": []})")), InputError);
  CHECK_THROWS_AS(parse_quiver(json::parse(R"({"vertices": 2, "arrows": [[0]]})")), InputError);
  CHECK_THROWS_AS(parse_quiver(json::parse(R"({"vertices": 2})")), InputError);
  CHECK_THROWS_AS(parse_quiver(json::parse(R"([1, 2])")), InputError);

  const ExactMatrix g = parse_gram(json::parse(R"({"gram": [[1, -2], [0, 1]]})"));
  CHECK(g == euler_matrix_simples(quivers::kronecker(2)));
  CHECK_THROWS_AS(parse_gram(json::parse(R"({"gram": [[1, 2]]})")), InputError);
  CHECK_THROWS_AS(parse_gram(json::parse(R"({"gram": [[1, 0.5], [0, 1]]})")), InputError);

  CHECK(std::holds_alternative<ExactMatrix>(parse_obstruction_input(json::parse(R"({"gram": [[1]]})"))));
  CHECK(std::holds_alternative<Quiver>(parse_obstruction_input(json::parse(R"({"vertices": 1, "arrows": []})"))));
  CHECK_THROWS_AS(parse_obstruction_input(json::parse(R"({"schema": 3, "gram": [[1]]})")), InputError);
  CHECK_THROWS_AS(parse_obstruction_input(json::parse(R"({"other": 1})")), InputError);
}

TEST_CASE("fan, divisor and collection parsing") {
  const ToricSurface s = parse_fan(json::parse(R"({"rays": [[0, -1], [1, 0], [0, 1], [-1, 0]]})"));
  CHECK(equivalent_fans(s, surfaces::p1xp1()));
  CHECK_THROWS_AS(parse_fan(json::parse(R"({"rays": [[1, 0], [1, 2], [-1, 0], [0, -1]]})")), InputError);
  CHECK_THROWS_AS(parse_fan(json::parse(R"({"rays": [[1, 0, 0]]})")), InputError);

  CHECK(parse_divisor(json::parse("[1, 2, 3, 4]"), s) == (Divisor(4) << 1, 2, 3, 4).finished());
  CHECK(parse_divisor(json::parse(R"({"pic": [1, 2]})"), s) == s.lift_pic({1, 2}));
  CHECK_THROWS_AS(parse_divisor(json::parse("[1, 2]"), s), InputError);
  CHECK_THROWS_AS(parse_divisor(json::parse(R"({"pic": [1]})"), s), InputError);

  const Collection c = parse_collection(json::parse(R"({
    "fan": {"rays": [[1, 0], [0, 1], [-1, -1]]},
    "objects": [{"line": [0, 0, 0]}, {"line_pic": [1]}, {"curve_ray": 2}]
  })"));
  CHECK(c.size() == 3);
  CHECK(std::holds_alternative<CurveSheaf>(c.objects[2]));
  CHECK_THROWS_AS(parse_collection(json::parse(R"({"fan": {"rays": [[1, 0], [0, 1], [-1, -1]]},
                                                   "objects": [{"curve_ray": 7}]})")),
                  InputError);
  CHECK_THROWS_AS(parse_collection(json::parse(R"({"fan": {"rays": [[1, 0], [0, 1], [-1, -1]]},
                                                   "objects": [{"sheaf": 1}]})")),
                  InputError);
}

TEST_CASE("missing and malformed files") {
  CHECK_THROWS_AS(read_json_file("/nonexistent/file.json"), InputError);
}

TEST_CASE("serialization") {
  CHECK(to_json(Rational(3)) == json(3));
  CHECK(to_json(Rational(-1, 2)) == json("-1/2"));
  CHECK(to_json(Signature{4, 2, 0}) == json::parse(R"({"n_plus": 4, "n_minus": 2, "n_zero": 0})"));
  CHECK(to_json(CohDims{1, 0, 0}) == json::parse("[1, 0, 0]"));
  CHECK(to_json(quivers::kronecker(2)) == json::parse(R"({"vertices": 2, "arrows": [[0, 1], [0, 1]]})"));

  const json r = to_json(obstruction_report(quivers::linear_a(4)));
  CHECK(r["rank_chi_minus"] == 4);
  CHECK(r["passes_rank"] == false);
  CHECK(r["forbidden_witness"] == json::parse("[0, 1, 2, 3]"));
  CHECK(to_json(obstruction_report(quivers::linear_a(2)))["forbidden_witness"].is_null());
}

TEST_CASE("reports are deterministic with sorted keys") {
  const json report = make_report("solve-abc", {{"max", 1}}, {{"z", 1}, {"a", 2}}, true);
  const std::string text = dump(report);
  CHECK(text == dump(json::parse(text)));
  CHECK(text.find("\"a\"") < text.find("\"z\""));
  CHECK(text.find("\"command\"") < text.find("\"pass\""));
  CHECK(report["schema"] == kReportSchema);
  CHECK(report["version"] == kVersion);
  CHECK(text.back() == '\n');
}
