#include "toric_cli/documents.hpp"

#include <fstream>
#include <sstream>

namespace toric::cli {

json integer_to_json(const Integer& x) {
  if (abs(x) <= kSafeInteger) return static_cast<long long>(x);
  return x.str();
}

Integer integer_from_json(const json& j, const std::string& where) {
  if (j.is_number_integer()) {
    if (j.is_number_unsigned()) return Integer(j.get<std::uint64_t>());
    return Integer(j.get<std::int64_t>());
  }
  if (j.is_string()) {
    const auto& s = j.get_ref<const std::string&>();
    const std::size_t start = (!s.empty() && s[0] == '-') ? 1 : 0;
    if (s.size() == start || s.find_first_not_of("0123456789", start) != std::string::npos)
      throw DocumentError(where + ": \"" + s + "\" is not a decimal integer");
    return Integer(s);
  }
  if (j.is_number_float())
    throw DocumentError(where + ": non-integer number (write large integers as decimal strings)");
  throw DocumentError(where + ": expected an integer, got " + std::string(j.type_name()));
}

json vector_to_json(const std::vector<Integer>& v) {
  json out = json::array();
  for (const auto& x : v) out.push_back(integer_to_json(x));
  return out;
}

std::vector<Integer> vector_from_json(const json& j, std::size_t rank, const std::string& where) {
  if (!j.is_array()) throw DocumentError(where + ": expected an array of integers");
  if (j.size() != rank)
    throw DocumentError(where + ": expected " + std::to_string(rank) + " coordinates, got " +
                        std::to_string(j.size()));
  std::vector<Integer> out;
  for (std::size_t i = 0; i < j.size(); ++i)
    out.push_back(integer_from_json(j[i], where + "[" + std::to_string(i) + "]"));
  return out;
}

json rows_to_json(const std::vector<std::vector<Integer>>& rows) {
  json out = json::array();
  for (const auto& r : rows) out.push_back(vector_to_json(r));
  return out;
}

namespace {

std::size_t parse_rank(const json& j) {
  if (!j.contains("rank")) throw DocumentError("document has no \"rank\"");
  const Integer r = integer_from_json(j["rank"], "rank");
  if (r < 1 || r > 64) throw DocumentError("rank must be between 1 and 64");
  return static_cast<std::size_t>(r);
}

std::vector<LatticeVector> parse_generators(const json& j, std::size_t rank, const std::string& where) {
  if (!j.is_array()) throw DocumentError(where + ": expected an array of generators");
  std::vector<LatticeVector> gens;
  for (std::size_t i = 0; i < j.size(); ++i)
    gens.emplace_back(vector_from_json(j[i], rank, where + "[" + std::to_string(i) + "]"));
  return gens;
}

Cone checked_cone(const std::vector<LatticeVector>& gens, std::size_t rank, const std::string& where) {
  try {
    return new_cone(gens, rank);
  } catch (const std::invalid_argument& e) {
    throw DocumentError(where + ": " + e.what());
  }
}

}  // namespace

Document parse_document(const json& j) {
  if (!j.is_object()) throw DocumentError("document must be a JSON object");
  const bool has_gens = j.contains("generators");
  const bool has_cones = j.contains("cones");
  if (has_gens == has_cones)
    throw DocumentError("document needs exactly one of \"generators\" (cone) or \"cones\" (fan)");
  const std::size_t rank = parse_rank(j);
  if (has_gens) return checked_cone(parse_generators(j["generators"], rank, "generators"), rank, "cone");

  const json& list = j["cones"];
  if (!list.is_array()) throw DocumentError("cones: expected an array of generator lists");
  std::vector<Cone> cones;
  for (std::size_t i = 0; i < list.size(); ++i) {
    const std::string where = "cones[" + std::to_string(i) + "]";
    cones.push_back(checked_cone(parse_generators(list[i], rank, where), rank, where));
  }
  try {
    return validate_fan(rank, cones);
  } catch (const FanError& e) {
    throw DocumentError(std::string("invalid fan: ") + e.what());
  } catch (const std::invalid_argument& e) {
    throw DocumentError(std::string("invalid fan: ") + e.what());
  }
}

Document parse_document_text(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw DocumentError(std::string("malformed JSON: ") + e.what());
  }
  return parse_document(j);
}

json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw DocumentError("cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  try {
    return json::parse(buf.str());
  } catch (const json::parse_error& e) {
    throw DocumentError(path.string() + ": malformed JSON: " + e.what());
  }
}

Document read_document_file(const std::filesystem::path& path) {
  const json j = read_json_file(path);
  try {
    return parse_document(j);
  } catch (const DocumentError& e) {
    throw DocumentError(path.string() + ": " + e.what());
  }
}

json cone_to_json(const Cone& cone) {
  json gens = json::array();
  for (const auto& r : cone.extreme_rays()) gens.push_back(vector_to_json(r));
  return {{"rank", cone.ambient_rank()}, {"generators", gens}};
}

json fan_to_json(const Fan& fan) {
  json cones = json::array();
  for (const auto& c : maximal_cones(fan)) cones.push_back(cone_to_json(c)["generators"]);
  return {{"rank", fan.ambient_rank()}, {"cones", cones}};
}

json document_to_json(const Document& doc) {
  return std::visit(
      [](const auto& x) -> json {
        if constexpr (std::is_same_v<std::decay_t<decltype(x)>, Cone>)
          return cone_to_json(x);
        else
          return fan_to_json(x);
      },
      doc);
}

std::size_t document_rank(const Document& doc) {
  return std::visit([](const auto& x) { return x.ambient_rank(); }, doc);
}

std::vector<Cone> document_cones(const Document& doc) {
  if (const Cone* c = std::get_if<Cone>(&doc)) return {*c};
  return std::get<Fan>(doc).cones();
}

}  // namespace toric::cli
