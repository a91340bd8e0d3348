#include "surfemb/json_io.hpp"

#include <fstream>
#include <sstream>

namespace surfemb {

namespace {

Integer get_int(const json& j, const std::string& what) {
  if (!j.is_number_integer()) throw InputError(what + " must be an integer");
  return j.get<Integer>();
}

std::size_t get_index(const json& j, const std::string& what) {
  const Integer v = get_int(j, what);
  if (v < 0) throw InputError(what + " must be nonnegative");
  return static_cast<std::size_t>(v);
}

std::vector<Integer> get_int_array(const json& j, const std::string& what) {
  if (!j.is_array()) throw InputError(what + " must be an array of integers");
  std::vector<Integer> out;
  for (const auto& x : j) out.push_back(get_int(x, what + " entry"));
  return out;
}

void check_schema(const json& j) {
  if (!j.is_object()) throw InputError("top-level JSON value must be an object");
  if (j.contains("schema") && !j["schema"].is_string()) throw InputError("\"schema\" must be a string");
}

json ext_json(const ExtDims& e) { return json::array({e[0], e[1], e[2]}); }

}  // namespace

json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path.string());
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw InputError(path.string() + ": " + e.what());
  }
}

Quiver parse_quiver(const json& j) {
  check_schema(j);
  if (!j.contains("vertices") || !j.contains("arrows")) throw InputError("quiver needs \"vertices\" and \"arrows\"");
  const std::size_t n = get_index(j["vertices"], "\"vertices\"");
  if (!j["arrows"].is_array()) throw InputError("\"arrows\" must be an array");
  std::vector<Arrow> arrows;
  for (const auto& a : j["arrows"]) {
    if (!a.is_array() || a.size() != 2) throw InputError("each arrow must be a pair [source, target]");
    arrows.emplace_back(get_index(a[0], "arrow source"), get_index(a[1], "arrow target"));
  }
  try {
    return Quiver(n, std::move(arrows));
  } catch (const QuiverError& e) {
    throw InputError(std::string("invalid quiver: ") + e.what());
  }
}

ExactMatrix parse_gram(const json& j) {
  check_schema(j);
  if (!j.contains("gram") || !j["gram"].is_array()) throw InputError("\"gram\" must be an array of rows");
  const auto& rows = j["gram"];
  const std::size_t n = rows.size();
  if (n == 0) throw InputError("\"gram\" is empty");
  ExactMatrix m(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n));
  for (std::size_t i = 0; i < n; ++i) {
    const auto row = get_int_array(rows[i], "gram row");
    if (row.size() != n) throw InputError("\"gram\" must be square");
    for (std::size_t k = 0; k < n; ++k) m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(k)) = row[k];
  }
  return m;
}

std::variant<Quiver, ExactMatrix> parse_obstruction_input(const json& j) {
  check_schema(j);
  if (j.contains("gram")) return parse_gram(j);
  if (j.contains("vertices")) return parse_quiver(j);
  throw InputError("expected a quiver {\"vertices\", \"arrows\"} or a Gram matrix {\"gram\"}");
}

ToricSurface parse_fan(const json& j) {
  check_schema(j);
  if (!j.contains("rays") || !j["rays"].is_array()) throw InputError("fan needs a \"rays\" array");
  std::vector<Ray> rays;
  for (const auto& r : j["rays"]) {
    const auto v = get_int_array(r, "ray");
    if (v.size() != 2) throw InputError("each ray must have two coordinates");
    rays.emplace_back(v[0], v[1]);
  }
  try {
    return ToricSurface::from_rays(std::move(rays));
  } catch (const ToricError& e) {
    throw InputError(std::string("invalid fan: ") + e.what());
  }
}

Divisor parse_divisor(const json& j, const ToricSurface& s) {
  try {
    if (j.is_object()) {
      if (!j.contains("pic")) throw InputError("divisor object needs a \"pic\" array");
      return s.lift_pic(get_int_array(j["pic"], "\"pic\""));
    }
    const auto v = get_int_array(j, "divisor");
    if (v.size() != s.ray_count())
      throw InputError("divisor has " + std::to_string(v.size()) + " coefficients, fan has " +
                       std::to_string(s.ray_count()) + " rays");
    return Eigen::Map<const Divisor>(v.data(), static_cast<Eigen::Index>(v.size()));
  } catch (const ToricError& e) {
    throw InputError(e.what());
  }
}

Collection parse_collection(const json& j) {
  check_schema(j);
  if (!j.contains("fan") || !j.contains("objects")) throw InputError("collection needs \"fan\" and \"objects\"");
  ToricSurface s = parse_fan(j["fan"]);
  if (!j["objects"].is_array()) throw InputError("\"objects\" must be an array");
  std::vector<SheafObject> objs;
  for (const auto& o : j["objects"]) {
    if (!o.is_object() || o.size() != 1) throw InputError("each object must have exactly one key");
    if (o.contains("line")) {
      objs.emplace_back(LineBundle{parse_divisor(o["line"], s)});
    } else if (o.contains("line_pic")) {
      objs.emplace_back(LineBundle{parse_divisor(json{{"pic", o["line_pic"]}}, s)});
    } else if (o.contains("curve_ray")) {
      objs.emplace_back(CurveSheaf{get_index(o["curve_ray"], "\"curve_ray\"")});
    } else {
      throw InputError("object must be one of \"line\", \"line_pic\", \"curve_ray\"");
    }
  }
  try {
    return Collection(std::move(s), std::move(objs));
  } catch (const CollectionError& e) {
    throw InputError(e.what());
  }
}

json to_json(const Rational& q) {
  if (is_integral(q)) return floor_integer(q);
  return q.str();
}

json to_json(const ExactMatrix& m) {
  json rows = json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (Eigen::Index k = 0; k < m.cols(); ++k) row.push_back(to_json(m(i, k)));
    rows.push_back(std::move(row));
  }
  return rows;
}

json to_json(const IntMatrix& m) {
  json rows = json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (Eigen::Index k = 0; k < m.cols(); ++k) row.push_back(m(i, k));
    rows.push_back(std::move(row));
  }
  return rows;
}

json to_json(const Signature& s) {
  return {{"n_plus", s.n_plus}, {"n_minus", s.n_minus}, {"n_zero", s.n_zero}};
}

json to_json(const CohDims& h) { return json::array({h.h0, h.h1, h.h2}); }

json to_json(const ObstructionReport& r) {
  json out{{"rank_chi_minus", r.rank_chi_minus},
           {"signature_chi_plus", to_json(r.signature_chi_plus)},
           {"passes_rank", r.passes_rank},
           {"passes_signature", r.passes_signature},
           {"forbidden_witness", nullptr}};
  if (r.forbidden_witness) out["forbidden_witness"] = *r.forbidden_witness;
  return out;
}

json to_json(const HomMatrix& h) {
  json rows = json::array();
  for (std::size_t i = 0; i < h.size(); ++i) {
    json row = json::array();
    for (std::size_t k = 0; k < h.size(); ++k) row.push_back(ext_json(h(i, k)));
    rows.push_back(std::move(row));
  }
  return rows;
}

json to_json(const VerifyResult& r) {
  json out{{"ok", r.ok}, {"ext", to_json(r.homs)}, {"witness", nullptr}};
  if (r.witness)
    out["witness"] = {{"i", r.witness->i},
                      {"j", r.witness->j},
                      {"ext", ext_json(r.witness->dims)},
                      {"kind", to_string(r.witness->kind)}};
  return out;
}

json to_json(const Quiver& q) {
  json arrows = json::array();
  for (const auto& [s, t] : q.arrows()) arrows.push_back(json::array({s, t}));
  return {{"vertices", q.vertex_count()}, {"arrows", arrows}};
}

json to_json(const ToricSurface& s) {
  json rays = json::array();
  for (const auto& r : s.rays()) rays.push_back(json::array({r.x(), r.y()}));
  json self = json::array();
  for (Eigen::Index i = 0; i < s.self_intersections().size(); ++i) self.push_back(s.self_intersections()(i));
  return {{"rays", rays}, {"self_intersections", self}, {"picard_rank", s.picard_rank()}};
}

json to_json(const SearchResult& r) {
  json pairs = json::array();
  for (const auto& p : r.pairs) pairs.push_back({{"D", p.d}, {"E", p.e}});
  json out{{"pairs", pairs}, {"count", r.pairs.size()}, {"diagnostic", nullptr}};
  if (r.diagnostic) out["diagnostic"] = *r.diagnostic;
  return out;
}

json to_json(const Table1Case& t) {
  return {{"family", t.family}, {"abc", t.abc}, {"m", t.m},   {"D", t.d},
          {"E", t.e},           {"ok", t.ok},   {"failures", t.failures}};
}

json to_json(const StarReport& r) {
  return {{"n", r.n},
          {"surface", to_json(r.surface)},
          {"blowups", r.blowups},
          {"exceptional_rays", r.exceptional_rays},
          {"verification", to_json(r.verification)},
          {"matches_star", r.matches_star},
          {"failures", r.failures},
          {"ok", r.ok()}};
}

json make_report(const std::string& command, const json& args, json result, bool pass) {
  return {{"schema", kReportSchema},
          {"version", kVersion},
          {"command", {{"name", command}, {"args", args}}},
          {"result", std::move(result)},
          {"pass", pass}};
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

}  // namespace surfemb
