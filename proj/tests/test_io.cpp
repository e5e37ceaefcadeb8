#include <catch2/catch_amalgamated.hpp>

#include "symten/io.hpp"

using namespace symten;

namespace {

Word make_word(std::uint32_t m, std::initializer_list<std::uint8_t> letters) {
  return Word(m, std::vector<std::uint8_t>(letters));
}

} // namespace

TEST_CASE("word parsing") {
  CHECK(parse_word("x1.x2.x1", 2) == make_word(2, {1, 2, 1}));
  CHECK(parse_word(" x2 ", 2) == make_word(2, {2}));
  CHECK(parse_word("1", 2).empty());
  CHECK_THROWS_AS(parse_word("x3", 2), input_error);
  CHECK_THROWS_AS(parse_word("x1..x2", 2), input_error);
  CHECK_THROWS_AS(parse_word("x1 x2", 2), input_error);
}

TEST_CASE("exponent map parsing") {
  const ExponentMap alpha = parse_exponent_map("{x2.x1:1, x1:2}", 2);
  CHECK(alpha.weight() == 3);
  CHECK(alpha.support_size() == 2);
  CHECK(parse_exponent_map("{}", 2).is_identity());
  CHECK(parse_exponent_map("{x1:0}", 2).is_identity()); // zero exponents drop
  CHECK_THROWS_AS(parse_exponent_map("{x1:1, x1:2}", 2), input_error);
  CHECK_THROWS_AS(parse_exponent_map("x1:1", 2), input_error);
  CHECK_THROWS_AS(parse_exponent_map("{1:1}", 2), input_error);
}

TEST_CASE("element parsing") {
  const Mode mode = Mode::truncated(2);
  SECTION("single block") {
    const SymElement e = parse_sym_element("e1[x1]", mode, 2);
    REQUIRE(e.terms().size() == 1);
    CHECK(e.coefficient_of(ExponentMap::single(make_word(2, {1}), 1)) == 1);
  }
  SECTION("sum with rational coefficients") {
    const SymElement e = parse_sym_element("2*e2[x1] + e1[x1.x1] - 1/2*e1[x2]", mode, 2);
    CHECK(e.coefficient_of(ExponentMap::single(make_word(2, {1}), 2)) == 2);
    CHECK(e.coefficient_of(ExponentMap::single(make_word(2, {1, 1}), 1)) == 1);
    CHECK(e.coefficient_of(ExponentMap::single(make_word(2, {2}), 1)) == Rational(-1, 2));
  }
  SECTION("bare rationals scale the identity") {
    const SymElement e = parse_sym_element("3 - e1[x1]", mode, 2);
    CHECK(e.coefficient_of(ExponentMap::identity(2)) == 3);
    CHECK(e.coefficient_of(ExponentMap::single(make_word(2, {1}), 1)) == -1);
  }
  SECTION("weight precondition enforced at parse time") {
    CHECK_THROWS_AS(parse_sym_element("e3[x1]", mode, 2), input_error);
  }
  SECTION("junk rejected") {
    CHECK_THROWS_AS(parse_sym_element("e1[x1] +", mode, 2), input_error);
    CHECK_THROWS_AS(parse_sym_element("", mode, 2), input_error);
    CHECK_THROWS_AS(parse_sym_element("e0[x1]", mode, 2), input_error);
  }
}

TEST_CASE("alphabet inference") {
  CHECK(scan_max_generator("e1[x1] + e1[x2]") == 2);
  CHECK(scan_max_generator("{x3.x1:2}") == 3);
  CHECK(scan_max_generator("no generators here") == 0);
}

TEST_CASE("element JSON schema") {
  const Mode mode = Mode::truncated(2);
  SymElement e(mode, 2);
  e.add_term(ExponentMap::single(make_word(2, {1}), 2), 2);
  e.add_term(ExponentMap(2, {{make_word(2, {1}), 1}, {make_word(2, {2}), 1}}),
             Rational(-1, 2));
  const Json j = sym_element_to_json(e);
  CHECK(j["mode"]["truncated"] == 2);
  REQUIRE(j["terms"].size() == 2);
  // terms sorted by alpha ({x1:1,x2:1} precedes {x1:2} since exponents
  // compare ascending after equal words); words as 1-based index arrays
  CHECK(j["terms"][0]["alpha"].size() == 2);
  CHECK(j["terms"][0]["alpha"][0][0] == Json::array({1}));
  CHECK(j["terms"][0]["alpha"][0][1] == 1);
  CHECK(j["terms"][0]["alpha"][1][0] == Json::array({2}));
  CHECK(j["terms"][0]["coeff"] == "-1/2");
  CHECK(j["terms"][1]["alpha"][0][0] == Json::array({1}));
  CHECK(j["terms"][1]["alpha"][0][1] == 2);
  CHECK(j["terms"][1]["coeff"] == "2");

  const SymElement f = SymElement::identity(Mode::free(), 2);
  CHECK(sym_element_to_json(f)["mode"] == "free");
}

TEST_CASE("abelian JSON uses generator names") {
  const AbelianPoly p =
      AbelianPoly::generator(2, FGen(1, make_word(2, {1}))) *
          AbelianPoly::generator(2, FGen(1, make_word(2, {2}))) -
      AbelianPoly::generator(2, FGen(1, make_word(2, {1, 2})));
  const Json j = abelian_poly_to_json(p);
  REQUIRE(j["terms"].size() == 2);
  CHECK(j["terms"][0]["monomial"][0][0] == "f[1;x1]");
  CHECK(j["terms"][0]["monomial"][1][0] == "f[1;x2]");
  CHECK(j["terms"][0]["coeff"] == "1");
  CHECK(j["terms"][1]["monomial"][0][0] == "f[1;x1.x2]");
  CHECK(j["terms"][1]["coeff"] == "-1");
}

TEST_CASE("rational round trips") {
  CHECK(parse_rational("-7/3") == Rational(-7) / 3);
  CHECK(parse_rational("42") == 42);
  CHECK(to_string(Rational(-7) / 3) == "-7/3");
  CHECK(to_string(Rational(6) / 3) == "2");
  // lowest terms, positive denominator
  const Rational q = Rational(6) / Rational(-4);
  CHECK(rational_num(q) == -3);
  CHECK(rational_den(q) == 2);
  CHECK(to_string(q) == "-3/2");
  CHECK_THROWS_AS(parse_rational("1/0"), input_error);
  CHECK_THROWS_AS(parse_rational("abc"), input_error);
}
