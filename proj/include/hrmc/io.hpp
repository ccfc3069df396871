#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "hrmc/code_space.hpp"
#include "hrmc/macwilliams.hpp"
#include "hrmc/negq_poly.hpp"

namespace hrmc {

/// Insertion-ordered JSON, so emitted documents are byte-stable.
using Json = nlohmann::ordered_json;

// All *_from_json functions throw ParseError on malformed input.

Json to_json(const Field& field);  // {p, m, modulus_poly}
Field field_from_json(const Json& j);

Json to_json(const FieldElement& x);  // 2m little-endian base-p digits
FieldElement element_from_json(const Field& field, const Json& j);

Json to_json(const Matrix& m);  // {t, rows}
Matrix matrix_from_json(const Field& field, const Json& j);

/// A code file as written: {field, t, generators}.
struct CodeFile {
  Field field;
  std::size_t t;
  std::vector<Matrix> generators;
};

CodeFile code_file_from_json(const Json& j);
Json to_json(const CodeFile& file);
/// Code file holding the reduced basis of `code`.
Json code_to_json(const LinearCode& code);
/// Parses and builds the code; also throws NotHermitian, MixedDimensions.
LinearCode code_from_json(const Json& j);

Json to_json(const WeightDistribution& w, std::int64_t q, std::int64_t t, std::size_t k);  // {q, t, k, counts}
WeightDistribution distribution_from_json(const Json& j);

Json to_json(const EigenTable& table);  // {q, t, rows}
Json to_json(const ConcretePoly& p);    // {degree, coefficients}
ConcretePoly concrete_from_json(const Json& j);

Json parse_json(std::string_view text);
Json read_json_file(const std::string& path);

/// "1,0,3,4" -> (1, 0, 3, 4).
WeightDistribution parse_distribution_list(std::string_view text);

std::vector<std::string> decimal_strings(const std::vector<BigInt>& values);

}  // namespace hrmc
