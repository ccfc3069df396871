#include "hrmc/io.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

#include "hrmc/errors.hpp"

namespace hrmc {

BigInt parse_bigint(std::string_view text) {
  std::size_t pos = 0;
  while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  std::size_t end = text.size();
  while (end > pos && std::isspace(static_cast<unsigned char>(text[end - 1]))) --end;
  std::string_view body = text.substr(pos, end - pos);
  bool negative = false;
  if (!body.empty() && (body[0] == '-' || body[0] == '+')) {
    negative = body[0] == '-';
    body.remove_prefix(1);
  }
  if (body.empty()) throw ParseError("empty integer");
  BigInt v = 0;
  for (char ch : body) {
    if (!std::isdigit(static_cast<unsigned char>(ch))) throw ParseError("invalid integer '" + std::string(text) + "'");
    v = v * 10 + (ch - '0');
  }
  return negative ? BigInt(-v) : v;
}

namespace {

template <class F>
auto guarded(const char* what, F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const ParseError&) {
    throw;
  } catch (const Error& e) {
    throw ParseError(std::string(what) + ": " + e.what());
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string(what) + ": " + e.what());
  }
}

const Json& member(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw ParseError(std::string("missing field '") + key + "'");
  return j.at(key);
}

std::uint32_t as_u32(const Json& j, const char* what) {
  if (!j.is_number_unsigned() && !(j.is_number_integer() && j.get<std::int64_t>() >= 0)) {
    throw ParseError(std::string(what) + " must be a non-negative integer");
  }
  return j.get<std::uint32_t>();
}

BigInt as_bigint(const Json& j) {
  if (j.is_string()) return parse_bigint(j.get<std::string>());
  if (j.is_number_integer()) return BigInt(j.get<std::int64_t>());
  throw ParseError("expected an integer or decimal string");
}

}  // namespace

Json to_json(const Field& field) {
  Json j;
  j["p"] = field.p();
  j["m"] = field.m();
  j["modulus_poly"] = field.modulus();
  return j;
}

Field field_from_json(const Json& j) {
  return guarded("field", [&] {
    const std::uint32_t p = as_u32(member(j, "p"), "p");
    const std::uint32_t m = as_u32(member(j, "m"), "m");
    std::optional<std::vector<std::uint32_t>> modulus;
    if (j.contains("modulus_poly") && !j.at("modulus_poly").is_null()) {
      modulus = j.at("modulus_poly").get<std::vector<std::uint32_t>>();
    }
    return Field::make(p, m, modulus);
  });
}

Json to_json(const FieldElement& x) { return Json(x.digits()); }

FieldElement element_from_json(const Field& field, const Json& j) {
  return guarded("element", [&] {
    if (!j.is_array()) throw ParseError("element must be an array of digits");
    std::vector<std::uint32_t> digits;
    for (const auto& d : j) digits.push_back(as_u32(d, "digit"));
    return field.from_digits(digits);
  });
}

Json to_json(const Matrix& m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.t(); ++i) {
    Json row = Json::array();
    for (std::size_t k = 0; k < m.t(); ++k) row.push_back(to_json(m.at(i, k)));
    rows.push_back(std::move(row));
  }
  Json j;
  j["t"] = m.t();
  j["rows"] = std::move(rows);
  return j;
}

Matrix matrix_from_json(const Field& field, const Json& j) {
  return guarded("matrix", [&] {
    const std::size_t t = as_u32(member(j, "t"), "t");
    const Json& rows = member(j, "rows");
    if (t == 0) throw ParseError("matrix side must be at least 1");
    if (!rows.is_array() || rows.size() != t) throw ParseError("matrix needs t rows");
    Matrix m(field, t);
    for (std::size_t i = 0; i < t; ++i) {
      if (!rows[i].is_array() || rows[i].size() != t) throw ParseError("matrix row needs t entries");
      for (std::size_t k = 0; k < t; ++k) m(i, k) = element_from_json(field, rows[i][k]).code();
    }
    return m;
  });
}

CodeFile code_file_from_json(const Json& j) {
  return guarded("code file", [&] {
    CodeFile file{field_from_json(member(j, "field")), as_u32(member(j, "t"), "t"), {}};
    const Json& gens = member(j, "generators");
    if (!gens.is_array()) throw ParseError("generators must be an array");
    for (const auto& g : gens) file.generators.push_back(matrix_from_json(file.field, g));
    return file;
  });
}

Json to_json(const CodeFile& file) {
  Json j;
  j["field"] = to_json(file.field);
  j["t"] = file.t;
  Json gens = Json::array();
  for (const auto& g : file.generators) gens.push_back(to_json(g));
  j["generators"] = std::move(gens);
  return j;
}

Json code_to_json(const LinearCode& code) {
  CodeFile file{code.field(), code.t(), {}};
  for (const auto& g : code.basis()) file.generators.push_back(g.matrix());
  return to_json(file);
}

LinearCode code_from_json(const Json& j) {
  CodeFile file = code_file_from_json(j);
  if (file.t == 0) throw ParseError("t must be at least 1");
  return make_code(file.field, file.t, file.generators);
}

std::vector<std::string> decimal_strings(const std::vector<BigInt>& values) {
  std::vector<std::string> out;
  for (const auto& v : values) out.push_back(v.str());
  return out;
}

Json to_json(const WeightDistribution& w, std::int64_t q, std::int64_t t, std::size_t k) {
  Json j;
  j["q"] = q;
  j["t"] = t;
  j["k"] = k;
  j["counts"] = decimal_strings(w.counts);
  return j;
}

WeightDistribution distribution_from_json(const Json& j) {
  return guarded("weight distribution", [&] {
    const Json& counts = member(j, "counts");
    if (!counts.is_array()) throw ParseError("counts must be an array");
    WeightDistribution w;
    for (const auto& c : counts) w.counts.push_back(as_bigint(c));
    return w;
  });
}

Json to_json(const EigenTable& table) {
  Json j;
  j["q"] = table.q;
  j["t"] = table.t;
  Json rows = Json::array();
  for (const auto& row : table.values) rows.push_back(decimal_strings(row));
  j["rows"] = std::move(rows);
  return j;
}

Json to_json(const ConcretePoly& p) {
  Json j;
  j["degree"] = p.degree();
  j["coefficients"] = decimal_strings(p.coefficients);
  return j;
}

ConcretePoly concrete_from_json(const Json& j) {
  return guarded("polynomial", [&] {
    const Json& coeffs = member(j, "coefficients");
    if (!coeffs.is_array()) throw ParseError("coefficients must be an array");
    ConcretePoly p;
    for (const auto& c : coeffs) p.coefficients.push_back(as_bigint(c));
    if (j.contains("degree") && j.at("degree").get<std::int64_t>() != p.degree()) {
      throw ParseError("degree does not match the coefficient count");
    }
    return p;
  });
}

Json parse_json(std::string_view text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_json(buf.str());
}

WeightDistribution parse_distribution_list(std::string_view text) {
  WeightDistribution w;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t comma = text.find(',', start);
    if (comma == std::string_view::npos) comma = text.size();
    w.counts.push_back(parse_bigint(text.substr(start, comma - start)));
    start = comma + 1;
  }
  return w;
}

}  // namespace hrmc
