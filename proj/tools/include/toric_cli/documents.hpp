#pragma once

// JSON interchange for cones and fans. The format is described in
// docs/formats.md.

#include <filesystem>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "json.hpp"

#include "toric/cone.hpp"
#include "toric/fan.hpp"

namespace toric::cli {

using json = nlohmann::json;

/// Malformed or semantically invalid input; maps to exit status 2.
class DocumentError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Largest magnitude written as a JSON number (2^53 - 1); anything larger
/// becomes a decimal string so that double-based readers stay exact.
inline constexpr long long kSafeInteger = 9007199254740991LL;

json integer_to_json(const Integer& x);
/// Accepts JSON integers and decimal strings; rejects floats, booleans
/// and anything else.
Integer integer_from_json(const json& j, const std::string& where);

json vector_to_json(const std::vector<Integer>& v);
std::vector<Integer> vector_from_json(const json& j, std::size_t rank, const std::string& where);

template <class Space>
json vector_to_json(const IntVector<Space>& v) {
  return vector_to_json(v.coords());
}

json rows_to_json(const std::vector<std::vector<Integer>>& rows);

using Document = std::variant<Cone, Fan>;

/// ConeDocument {"rank", "generators"}; FanDocument {"rank", "cones"}.
/// Unknown keys are ignored. Geometric errors (lines, overlapping cones)
/// are reported as DocumentError with the library's message.
Document parse_document(const json& j);
Document parse_document_text(const std::string& text);
Document read_document_file(const std::filesystem::path& path);
json read_json_file(const std::filesystem::path& path);

/// Canonical form: extreme rays in canonical order, fans by maximal cones.
json cone_to_json(const Cone& cone);
json fan_to_json(const Fan& fan);
json document_to_json(const Document& doc);

std::size_t document_rank(const Document& doc);

/// The cones a verdict is reported for: the cone itself, or every cone of
/// the fan (faces included).
std::vector<Cone> document_cones(const Document& doc);

}  // namespace toric::cli
