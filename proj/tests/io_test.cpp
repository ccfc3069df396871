#include <doctest.h>

#include "hrmc/code_space.hpp"
#include "hrmc/errors.hpp"
#include "hrmc/io.hpp"
#include "hrmc/macwilliams.hpp"
#include "hrmc/random.hpp"

using namespace hrmc;

TEST_CASE("field and element round trip") {
  for (std::uint64_t q : {2, 3, 4, 9}) {
    const Field f = Field::for_q(q);
    CHECK(field_from_json(to_json(f)) == f);
    for (Field::Code x = 0; x < f.order(); ++x) CHECK(element_from_json(f, to_json(f.element(x))).code() == x);
  }
  CHECK(to_json(Field::for_q(2).element(2)).dump() == "[0,1]");
}

TEST_CASE("code round trip") {
  for (std::uint64_t q : {2, 3}) {
    const Field f = Field::for_q(q);
    for (std::uint64_t i = 0; i < 5; ++i) {
      Rng rng(3, 3, i);
      const LinearCode c = random_subcode(f, 2, rng);
      CHECK(code_from_json(parse_json(code_to_json(c).dump())) == c);
    }
  }
}

TEST_CASE("distributions and polynomials") {
  const auto w = make_distribution({1, 0, 3, 4});
  const Json j = to_json(w, 2, 3, 3);
  CHECK(j.dump() == R"({"q":2,"t":3,"k":3,"counts":["1","0","3","4"]})");
  CHECK(distribution_from_json(j) == w);
  CHECK(parse_distribution_list("1,0,3,4") == w);
  CHECK(parse_distribution_list(" 12345678901234567890123 ").counts[0] == BigInt("12345678901234567890123"));

  const ConcretePoly p{{BigInt(1), BigInt(-21), BigInt("99999999999999999999999")}};
  CHECK(concrete_from_json(to_json(p)) == p);

  const auto table = eigen_table_Q(NegQContext(2), 1);
  CHECK(to_json(table).dump() == R"({"q":2,"t":1,"rows":[["1","1"],["1","-1"]]})");
}

TEST_CASE("malformed input raises ParseError") {
  CHECK_THROWS_AS(parse_json("{"), ParseError);
  CHECK_THROWS_AS(parse_distribution_list("1,,2"), ParseError);
  CHECK_THROWS_AS(parse_distribution_list("1,x"), ParseError);
  CHECK_THROWS_AS(parse_bigint(""), ParseError);
  CHECK_THROWS_AS(field_from_json(parse_json(R"({"p": 4, "m": 1})")), ParseError);
  CHECK_THROWS_AS(field_from_json(parse_json(R"({"m": 1})")), ParseError);
  const Field f = Field::for_q(2);
  CHECK_THROWS_AS(element_from_json(f, parse_json("[0, 2]")), ParseError);
  CHECK_THROWS_AS(element_from_json(f, parse_json("[0]")), ParseError);
  CHECK_THROWS_AS(matrix_from_json(f, parse_json(R"({"t": 2, "rows": [[[0,0],[0,0]]]})")), ParseError);
  CHECK_THROWS_AS(read_json_file("/nonexistent/code.json"), ParseError);
  CHECK_THROWS_AS(concrete_from_json(parse_json(R"({"degree": 3, "coefficients": ["1"]})")), ParseError);
}

TEST_CASE("non-Hermitian generator in a code file") {
  const char* text = R"({"field": {"p": 2, "m": 1}, "t": 2,
    "generators": [{"t": 2, "rows": [[[0,0],[0,1]], [[0,1],[0,0]]]}]})";
  CHECK_THROWS_AS(code_from_json(parse_json(text)), NotHermitian);
}
