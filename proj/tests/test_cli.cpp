#include <doctest.h>

#include <algorithm>
#include <sstream>

#include "commands.hpp"
#include "surfemb/json_io.hpp"

using surfemb::json;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
  json report() const { return json::parse(out); }
};

Run cli(std::vector<std::string> args) {
  args.insert(args.begin(), "surfemb");
  std::ostringstream out, err;
  const int code = surfemb::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string data(const std::string& name) { return std::string(SURFEMB_DATA_DIR) + "/" + name; }

}  // namespace

TEST_CASE("obstruct") {
  const Run a4 = cli({"obstruct", data("a4.json")});
  CHECK(a4.code == 1);
  CHECK(a4.report()["result"]["rank_chi_minus"] == 4);
  CHECK(a4.report()["result"]["passes_rank"] == false);
  CHECK(a4.report()["command"]["name"] == "obstruct");

  const Run gram = cli({"obstruct", data("five_vertex_gram.json")});
  CHECK(gram.report()["result"]["passes_rank"] == true);
  CHECK(gram.report()["result"]["passes_signature"] == false);
  CHECK(gram.report()["result"]["input_kind"] == "gram");

  const Run at2 = cli({"obstruct", data("atilde2.json")});
  CHECK(at2.code == 0);
  CHECK(at2.report()["pass"] == true);

  const Run cyclic = cli({"obstruct", data("cyclic.json")});
  CHECK(cyclic.code == 2);
  CHECK(cyclic.out.empty());
  CHECK(cyclic.err.find("cycle") != std::string::npos);
  CHECK(cyclic.err.find("cyclic.json") != std::string::npos);

  CHECK(cli({"obstruct", data("missing.json")}).code == 2);
}

TEST_CASE("toric") {
  const Run coh = cli({"toric", "coh", "dP6", "--pic=0,0,0,1"});
  CHECK(coh.code == 0);
  CHECK(coh.report()["result"]["h"] == json::parse("[1, 0, 0]"));
  CHECK(coh.report()["result"]["chi"] == 1);

  const Run file = cli({"toric", "coh", data("dp6.json"), "--divisor=0,0,0,1,0,0"});
  CHECK(file.report()["result"]["h"] == json::parse("[1, 0, 0]"));

  const Run knum = cli({"toric", "knum", "dP6"});
  CHECK(knum.code == 0);
  CHECK(knum.report()["result"]["signature"] == json::parse("[4, 2]"));
  CHECK(cli({"toric", "knum", "P2"}).report()["result"]["rank_chi_minus"] == 2);

  const Run singular = cli({"toric", "knum", data("singular.json")});
  CHECK(singular.code == 2);
  CHECK(singular.err.find("(1,0) and (1,2)") != std::string::npos);

  CHECK(cli({"toric", "coh", "dP6"}).code == 2);
  CHECK(cli({"toric", "coh", "dP6", "--pic=1,2"}).code == 2);
  CHECK(cli({"toric", "coh", "nowhere", "--pic=1"}).code == 2);
}

TEST_CASE("verify") {
  const Run at2 = cli({"verify", data("atilde2_collection.json"), "--strong"});
  CHECK(at2.code == 0);
  CHECK(at2.report()["result"]["strong"] == true);
  CHECK(at2.report()["result"]["abc"] == json::parse("[1, 1, 1]"));

  const Run four = cli({"verify", data("four_vertex_collection.json"), "--strong"});
  CHECK(four.code == 0);
  CHECK(four.report()["result"]["hom_dims"] == json::parse("[[1,1,2,2],[0,1,1,1],[0,0,1,0],[0,0,0,1]]"));

  const Run star = cli({"verify", data("star2_collection.json"), "--strong"});
  CHECK(star.code == 0);
  CHECK(star.report()["result"]["endo_quiver"]["arrows"] == json::parse("[[0, 1], [0, 2]]"));

  const Run bad = cli({"verify", data("not_exceptional.json")});
  CHECK(bad.code == 1);
  CHECK(bad.report()["result"]["witness"]["kind"] == "backward_ext");
}

TEST_CASE("search and solve-abc") {
  const Run s = cli({"search", "dP6", "1", "3", "1", "--bound", "2"});
  CHECK(s.code == 0);
  const json pairs = s.report()["result"]["pairs"];
  const json table_pair = json::parse(R"({"D": [0, 0, 0, 1], "E": [1, 1, 1, 1]})");
  CHECK(std::find(pairs.begin(), pairs.end(), table_pair) != pairs.end());

  const Run impossible = cli({"search", "dP6", "1", "1", "3"});
  CHECK(impossible.code == 1);
  CHECK(impossible.report()["result"]["diagnostic"].is_string());

  const Run solve = cli({"solve-abc", "--max", "4"});
  CHECK(solve.code == 0);
  CHECK(solve.report()["result"]["count"] == 17);
  CHECK(cli({"search", "dP6", "-1", "1", "1"}).code == 2);
}

TEST_CASE("argument errors and help") {
  CHECK(cli({}).code == 2);
  CHECK(cli({"frobnicate"}).code == 2);
  CHECK(cli({"obstruct"}).code == 2);
  CHECK(cli({"reproduce", "--m-max", "0"}).code == 2);
  const Run help = cli({"--help"});
  CHECK(help.code == 0);
  CHECK(help.out.find("obstruct") != std::string::npos);
}

TEST_CASE("output is deterministic") {
  const std::vector<std::string> args{"verify", data("four_vertex_collection.json"), "--strong"};
  CHECK(cli(args).out == cli(args).out);
  const std::vector<std::string> search{"search", "P1xP1", "2", "2", "0", "--bound", "1"};
  CHECK(cli(search).out == cli(search).out);
}

TEST_CASE("reproduce") {
  const Run r = cli({"reproduce", "--m-max", "1"});
  const json report = r.report();
  CHECK(report["result"]["total"] == 10);
  CHECK(report["result"]["criteria"].size() == 10);
  CHECK(r.code == (report["pass"].get<bool>() ? 0 : 1));
  CHECK(r.err.find("PASS 9") != std::string::npos);
}
