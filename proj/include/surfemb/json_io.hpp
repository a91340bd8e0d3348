// JSON schemas for quivers, Gram matrices, fans, divisors and collections,
// and the serialized form of every report.
#pragma once

#include <filesystem>
#include <stdexcept>
#include <string>
#include <variant>

#include <nlohmann/json.hpp>

#include "surfemb/collections.hpp"
#include "surfemb/exact_linalg.hpp"
#include "surfemb/quiver.hpp"
#include "surfemb/toric_surface.hpp"

namespace surfemb {

/// Malformed or schema-violating input.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

using json = nlohmann::json;

inline constexpr const char* kReportSchema = "surfemb.report/1";
inline constexpr const char* kVersion = "1.0.0";

json read_json_file(const std::filesystem::path& path);

/// {"vertices": n, "arrows": [[s, t], ...]}
Quiver parse_quiver(const json& j);
/// {"gram": [[...], ...]} with integer entries.
ExactMatrix parse_gram(const json& j);
/// Either a quiver or a Gram matrix, decided by the keys present.
std::variant<Quiver, ExactMatrix> parse_obstruction_input(const json& j);
/// {"rays": [[x, y], ...]}
ToricSurface parse_fan(const json& j);
/// An integer array in ray order, or {"pic": [...]}.
Divisor parse_divisor(const json& j, const ToricSurface& s);
/// {"fan": {...}, "objects": [{"line": [...]} | {"line_pic": [...]} | {"curve_ray": i}, ...]}
Collection parse_collection(const json& j);

json to_json(const Rational& q);
json to_json(const ExactMatrix& m);
json to_json(const IntMatrix& m);
json to_json(const Signature& s);
json to_json(const CohDims& h);
json to_json(const ObstructionReport& r);
json to_json(const HomMatrix& h);
json to_json(const VerifyResult& r);
json to_json(const Quiver& q);
json to_json(const ToricSurface& s);
json to_json(const SearchResult& r);
json to_json(const Table1Case& t);
json to_json(const StarReport& r);

/// Envelope shared by every command: schema, version, command echo, payload
/// and overall verdict.
json make_report(const std::string& command, const json& args, json result, bool pass);

/// Two-space indented, keys sorted.
std::string dump(const json& j);

}  // namespace surfemb
