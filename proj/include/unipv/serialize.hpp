#pragma once

#include <json.hpp>
#include <string>
#include <string_view>
#include <vector>

#include "unipv/condition_c.hpp"
#include "unipv/galois.hpp"
#include "unipv/hyperlog.hpp"
#include "unipv/operator.hpp"
#include "unipv/pv_extension.hpp"

// Structured documents. Every document carries "schema": "unipv/1" and a "kind";
// symbolic values are canonical expression texts, so equal values serialize equally.
//
//   extension: {n, f: [text], extra: [{row, col, value}], derivation: {"x[i,j]": text}}
//   operator:  {order, coeffs: [text]}        coeffs[i] multiplies Y^(i)
//   galois:    {n, matrix: [[text]]}
//   condition_c, numeric_check: report fields, see to_json below
namespace unipv {

using json = nlohmann::json;

inline constexpr std::string_view kSchema = "unipv/1";

json to_json(const PVExtension& ext);
json to_json(const DiffOperator& op);
json to_json(const GaloisElement& m);
json to_json(const ConditionCReport& report);
json to_json(const NumericCheckReport& report);

/// Rebuilds the extension from n, f and extra; a stored derivation table must match
/// the rebuilt one. Throws DomainError on malformed documents.
PVExtension extension_from_json(const json& doc);
/// max_param bounds the parameters allowed in the coefficients.
DiffOperator operator_from_json(const json& doc, unsigned max_param);
GaloisElement galois_from_json(const json& doc);

/// Splits on top-level occurrences of sep, ignoring separators inside () and [].
std::vector<std::string> split_top_level(std::string_view text, char sep);
/// Row-major matrix literal "1,a1,0; 0,1,a2; 0,0,1".
Matrix<RatFunc> parse_matrix(std::string_view text, unsigned max_param);
/// Extra entries "1,3:r; 2,4:s" (1-indexed positions).
std::vector<ExtraEntry> parse_extra(std::string_view text, unsigned max_param);

}  // namespace unipv
