#include "commands.hpp"

#include <filesystem>
#include <ostream>

#include <CLI11.hpp>

#include "surfemb/reproduce.hpp"

namespace surfemb::cli {

namespace {

struct Outcome {
  json result;
  bool pass = true;
};

ToricSurface load_fan(const std::string& name) {
  if (std::filesystem::exists(name)) {
    try {
      return parse_fan(read_json_file(name));
    } catch (const InputError& e) {
      throw InputError(name + ": " + e.what());
    }
  }
  try {
    return surfaces::by_name(name);
  } catch (const ToricError&) {
    throw InputError("'" + name + "' is neither a fan file nor a preset (P2, P1xP1, F<n>, Bl1P2, Bl2P2, Bl3P2, dP6)");
  }
}

template <class Parse>
auto load_file(const std::string& path, Parse parse) {
  try {
    return parse(read_json_file(path));
  } catch (const InputError& e) {
    const std::string msg = e.what();
    if (msg.rfind(path, 0) == 0) throw;
    throw InputError(path + ": " + msg);
  }
}

json ints(const std::vector<Integer>& v) { return v; }

Outcome cmd_obstruct(const std::string& file, std::size_t witness_bound) {
  const auto input = load_file(file, parse_obstruction_input);
  const ObstructionReport r = std::visit(
      [&](const auto& x) {
        if constexpr (std::is_same_v<std::decay_t<decltype(x)>, Quiver>)
          return obstruction_report(x, witness_bound);
        else
          return obstruction_report(x);
      },
      input);
  json out = to_json(r);
  out["input_kind"] = std::holds_alternative<Quiver>(input) ? "quiver" : "gram";
  return {out, r.passes()};
}

Outcome cmd_coh(const std::string& fan, const std::vector<Integer>& divisor, const std::vector<Integer>& pic) {
  const ToricSurface s = load_fan(fan);
  const Divisor d = pic.empty() ? parse_divisor(ints(divisor), s) : parse_divisor(json{{"pic", pic}}, s);
  const CohDims h = cohomology(s, d);
  return {{{"surface", to_json(s)},
           {"divisor", std::vector<Integer>(d.begin(), d.end())},
           {"h", to_json(h)},
           {"chi", h.euler_characteristic()}},
          true};
}

Outcome cmd_knum(const std::string& fan) {
  const ToricSurface s = load_fan(fan);
  const KnumGram g = knum_gram(s);
  const std::size_t rk = rank(antisymmetrize(g.gram));
  const Signature sig = signature(symmetrize(g.gram));
  const bool pass = rk == 2 && sig == Signature{s.picard_rank(), 2, 0};
  return {{{"surface", to_json(s)},
           {"basis", g.labels},
           {"gram", to_json(g.gram)},
           {"rank_chi_minus", rk},
           {"signature_chi_plus", to_json(sig)},
           {"signature", json::array({sig.n_plus, sig.n_minus})}},
          pass};
}

Outcome cmd_verify(const std::string& file, bool strong) {
  const Collection c = load_file(file, parse_collection);
  const VerifyResult exceptional = verify_collection(c, false);
  const VerifyResult strong_result = verify_collection(c, true);
  const VerifyResult& chosen = strong ? strong_result : exceptional;
  json out = to_json(chosen);
  out["exceptional"] = exceptional.ok;
  out["strong"] = strong_result.ok;
  out["abc"] = nullptr;
  out["endo_quiver"] = nullptr;
  if (strong_result.ok) {
    out["hom_dims"] = to_json(endo_quiver_dims(c));
    try {
      out["endo_quiver"] = to_json(endo_quiver(c));
    } catch (const CollectionError& e) {
      out["endo_quiver_error"] = e.what();
    }
    // Only dimensions are compared; relations in the endomorphism algebra are not checked.
    out["relations_checked"] = false;
    if (c.size() == 3) out["abc"] = abc(c);
  }
  return {out, chosen.ok};
}

Outcome cmd_search(const std::string& fan, Integer a, Integer b, Integer c, Integer bound) {
  const ToricSurface s = load_fan(fan);
  const SearchResult r = search_abc(s, a, b, c, bound);
  json out = to_json(r);
  out["surface"] = to_json(s);
  return {out, !r.diagnostic && !r.pairs.empty()};
}

Outcome cmd_solve_abc(Integer max_value) {
  json list = json::array();
  for (const auto& t : solve_abc(max_value)) list.push_back(t);
  return {{{"solutions", list}, {"count", list.size()}}, true};
}

Outcome cmd_reproduce(Integer m_max, std::uint64_t seed, std::ostream& err) {
  json criteria = json::array();
  std::size_t passed = 0;
  const auto results = run_acceptance(m_max, seed);
  for (const auto& r : results) {
    passed += r.passed ? 1 : 0;
    err << (r.passed ? "PASS " : "FAIL ") << r.id << ": " << r.title << "\n";
    criteria.push_back({{"id", r.id}, {"title", r.title}, {"passed", r.passed}, {"detail", r.detail}});
  }
  return {{{"criteria", criteria}, {"passed", passed}, {"total", results.size()}}, passed == results.size()};
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Derived embeddings of quiver algebras into toric surfaces", "surfemb"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(kVersion));

  std::string file;
  std::string fan;
  std::size_t witness_bound = kDefaultSubquiverBound;
  bool strong = false;
  std::vector<Integer> divisor;
  std::vector<Integer> pic;
  Integer a = 0;
  Integer b = 0;
  Integer c = 0;
  Integer bound = kDefaultSearchBound;
  Integer max_value = 10;
  Integer m_max = 5;
  std::uint64_t seed = kDefaultSeed;

  auto* obstruct = app.add_subcommand("obstruct", "Rank and signature obstructions for a quiver or Gram matrix");
  obstruct->add_option("file", file, "Quiver or Gram matrix JSON")->required();
  obstruct->add_option("--witness-bound", witness_bound, "Largest quiver searched for a forbidden full subquiver");

  auto* toric = app.add_subcommand("toric", "Toric surface computations");
  toric->require_subcommand(1);
  auto* coh = toric->add_subcommand("coh", "Line bundle cohomology");
  coh->add_option("fan", fan, "Fan JSON file or preset name")->required();
  auto* div_opt = coh->add_option("--divisor", divisor, "Coefficients of D_1..D_n")->delimiter(',');
  auto* pic_opt = coh->add_option("--pic", pic, "Coordinates on D_1..D_rho")->delimiter(',');
  div_opt->excludes(pic_opt);
  pic_opt->excludes(div_opt);
  auto* knum = toric->add_subcommand("knum", "Euler form on K_num");
  knum->add_option("fan", fan, "Fan JSON file or preset name")->required();

  auto* verify = app.add_subcommand("verify", "Check that a collection is (strong) exceptional");
  verify->add_option("file", file, "Collection JSON")->required();
  verify->add_flag("--strong", strong, "Also require vanishing higher Ext forward");

  auto* search = app.add_subcommand("search", "Search <O, O(D), O(E)> realizing Q_{a,b,c}");
  search->add_option("fan", fan, "Fan JSON file or preset name")->required();
  search->add_option("a", a)->required()->check(CLI::NonNegativeNumber);
  search->add_option("b", b)->required()->check(CLI::NonNegativeNumber);
  search->add_option("c", c)->required()->check(CLI::NonNegativeNumber);
  search->add_option("--bound", bound, "Pic coordinates range over [-bound, bound]")->check(CLI::NonNegativeNumber);

  auto* solve = app.add_subcommand("solve-abc", "Solutions of a + b = ab + c");
  solve->add_option("--max", max_value, "Largest value of a, b, c")->check(CLI::NonNegativeNumber);

  auto* reproduce = app.add_subcommand("reproduce", "Run the full acceptance suite");
  reproduce->add_option("--m-max", m_max, "Largest m for the Bl3P2 divisor table")->check(CLI::PositiveNumber);
  reproduce->add_option("--seed", seed, "Seed for random surfaces");

  std::vector<const char*> argv;
  for (const auto& s : args) argv.push_back(s.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kSuccess : kInputError;
  }

  try {
    std::string name;
    json echo;
    Outcome o;
    if (*obstruct) {
      name = "obstruct";
      echo = {{"file", file}, {"witness_bound", witness_bound}};
      o = cmd_obstruct(file, witness_bound);
    } else if (*coh) {
      if (divisor.empty() && pic.empty()) throw InputError("toric coh needs --divisor or --pic");
      name = "toric coh";
      echo = {{"fan", fan}, {"divisor", divisor}, {"pic", pic}};
      o = cmd_coh(fan, divisor, pic);
    } else if (*knum) {
      name = "toric knum";
      echo = {{"fan", fan}};
      o = cmd_knum(fan);
    } else if (*verify) {
      name = "verify";
      echo = {{"file", file}, {"strong", strong}};
      o = cmd_verify(file, strong);
    } else if (*search) {
      name = "search";
      echo = {{"fan", fan}, {"a", a}, {"b", b}, {"c", c}, {"bound", bound}};
      o = cmd_search(fan, a, b, c, bound);
    } else if (*solve) {
      name = "solve-abc";
      echo = {{"max", max_value}};
      o = cmd_solve_abc(max_value);
    } else {
      name = "reproduce";
      echo = {{"m_max", m_max}, {"seed", seed}};
      o = cmd_reproduce(m_max, seed, err);
    }
    out << dump(make_report(name, echo, std::move(o.result), o.pass));
    return o.pass ? kSuccess : kVerificationFailure;
  } catch (const ConsistencyError& e) {
    err << "surfemb: consistency check failed: " << e.what() << "\n";
    return kVerificationFailure;
  } catch (const std::exception& e) {
    err << "surfemb: " << e.what() << "\n";
    return kInputError;
  }
}

}  // namespace surfemb::cli
