#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "symten/sym_element.hpp"
#include "symten/tensor.hpp"

using namespace symten;

namespace {

Word make_word(std::uint32_t m, std::initializer_list<std::uint8_t> letters) {
  return Word(m, std::vector<std::uint8_t>(letters));
}

// every exponent map over m=2 supported on words of length <= max_len with
// weight <= max_weight (identity included)
std::vector<ExponentMap> small_exponent_maps(std::uint32_t max_len,
                                             std::uint32_t max_weight) {
  std::vector<Word> words;
  for (std::uint32_t len = 1; len <= max_len; ++len) {
    std::vector<std::uint8_t> letters(len, 1);
    do
      words.emplace_back(2, letters);
    while (detail::next_word_letters(letters, 2));
  }
  std::vector<ExponentMap> out;
  std::vector<ExponentMap::Entry> stack;
  auto rec = [&](auto&& self, std::size_t from, std::uint32_t weight_left) -> void {
    out.emplace_back(2, stack);
    for (std::size_t i = from; i < words.size(); ++i)
      for (std::uint32_t e = 1; e <= weight_left; ++e) {
        stack.emplace_back(words[i], e);
        self(self, i + 1, weight_left - e);
        stack.pop_back();
      }
  };
  rec(rec, 0, max_weight);
  return out;
}

SymElement oracle_product(const ExponentMap& a, const ExponentMap& b, std::uint32_t n) {
  return project_to_basis(tensor_mul(orbit_expand(a, n), orbit_expand(b, n)));
}

SymElement random_element(std::mt19937_64& rng, const Mode& mode,
                          const std::vector<ExponentMap>& pool) {
  std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
  std::uniform_int_distribution<int> coeff(-4, 4);
  SymElement out(mode, 2);
  for (int t = 0; t < 3; ++t) {
    const auto& alpha = pool[pick(rng)];
    if (!mode.admits_weight(alpha.weight())) continue;
    out += SymElement::basis(mode, alpha, coeff(rng));
  }
  return out;
}

} // namespace

TEST_CASE("exponent map invariants") {
  const Word w1 = make_word(2, {1});
  const Word w12 = make_word(2, {1, 2});
  const ExponentMap alpha(2, {{w12, 1}, {w1, 2}});
  CHECK(alpha.weight() == 3);
  CHECK(alpha.multidegree() == DegreeVector({3, 1}));
  CHECK(alpha.entries().front().first == w1); // sorted graded-lex
  CHECK(ExponentMap::identity(2).weight() == 0);
  CHECK_THROWS_AS(ExponentMap(2, {{Word(2), 1}}), input_error);   // empty word
  CHECK_THROWS_AS(ExponentMap(2, {{w1, 1}, {w1, 2}}), input_error); // duplicate
}

TEST_CASE("basis enumeration") {
  SECTION("n=2, m=2, delta=(1,1)") {
    const auto basis = enumerate_basis(2, DegreeVector({1, 1}));
    REQUIRE(basis.size() == 3);
    const ExponentMap split(2, {{make_word(2, {1}), 1}, {make_word(2, {2}), 1}});
    const ExponentMap x12(2, {{make_word(2, {1, 2}), 1}});
    const ExponentMap x21(2, {{make_word(2, {2, 1}), 1}});
    CHECK(std::count(basis.begin(), basis.end(), split) == 1);
    CHECK(std::count(basis.begin(), basis.end(), x12) == 1);
    CHECK(std::count(basis.begin(), basis.end(), x21) == 1);
  }
  SECTION("n=1, m=1, delta=(3): a single cube") {
    const auto basis = enumerate_basis(1, DegreeVector({3}));
    REQUIRE(basis.size() == 1);
    CHECK(basis[0] == ExponentMap::single(make_word(1, {1, 1, 1}), 1));
  }
  SECTION("delta = 0 gives the identity") {
    const auto basis = enumerate_basis(4, DegreeVector({0, 0}));
    REQUIRE(basis.size() == 1);
    CHECK(basis[0].is_identity());
  }
  SECTION("weight cap matters") {
    // (2,0): {x1:2} and {x1x1:1} at n>=2, only {x1x1:1} at n=1
    CHECK(enumerate_basis(2, DegreeVector({2, 0})).size() == 2);
    CHECK(enumerate_basis(1, DegreeVector({2, 0})).size() == 1);
  }
  SECTION("resource cap") {
    Limits tight;
    tight.max_basis = 2;
    CHECK_THROWS_AS(enumerate_basis(2, DegreeVector({1, 1}), tight), resource_error);
  }
}

TEST_CASE("product formula on single blocks") {
  const Word x1 = make_word(2, {1});
  const Word x2 = make_word(2, {2});

  SECTION("e1(x1)*e1(x1) at n=2") {
    const SymElement p =
        basis_mul(ExponentMap::single(x1, 1), ExponentMap::single(x1, 1),
                  Mode::truncated(2));
    SymElement expected(Mode::truncated(2), 2);
    expected.add_term(ExponentMap::single(x1, 2), 2);
    expected.add_term(ExponentMap::single(x1 * x1, 1), 1);
    CHECK(p == expected);
    CHECK(p == oracle_product(ExponentMap::single(x1, 1), ExponentMap::single(x1, 1), 2));
  }
  SECTION("e1(x1)*e1(x2) at n>=2") {
    for (std::uint32_t n = 2; n <= 4; ++n) {
      const SymElement p = basis_mul(ExponentMap::single(x1, 1),
                                     ExponentMap::single(x2, 1), Mode::truncated(n));
      SymElement expected(Mode::truncated(n), 2);
      expected.add_term(ExponentMap(2, {{x1, 1}, {x2, 1}}), 1);
      expected.add_term(ExponentMap::single(x1 * x2, 1), 1);
      CHECK(p == expected);
    }
  }
  SECTION("e1(x1)*e1(x2) at n=1: only the concatenation survives") {
    const SymElement p = basis_mul(ExponentMap::single(x1, 1),
                                   ExponentMap::single(x2, 1), Mode::truncated(1));
    SymElement expected(Mode::truncated(1), 2);
    expected.add_term(ExponentMap::single(x1 * x2, 1), 1);
    CHECK(p == expected);
  }
  SECTION("weight precondition") {
    CHECK_THROWS_AS(basis_mul(ExponentMap::single(x1, 2), ExponentMap::single(x2, 1),
                              Mode::truncated(1)),
                    input_error);
  }
}

TEST_CASE("product formula agrees with the tensor oracle everywhere") {
  // all pairs supported on words of length <= 2 with weights <= 2, n = 1..4
  const auto pool = small_exponent_maps(2, 2);
  for (std::uint32_t n = 1; n <= 4; ++n) {
    const Mode mode = Mode::truncated(n);
    for (const auto& a : pool) {
      if (a.weight() > n) continue;
      for (const auto& b : pool) {
        if (b.weight() > n) continue;
        REQUIRE(basis_mul(a, b, mode) == oracle_product(a, b, n));
      }
    }
  }
}

TEST_CASE("grading of products") {
  const auto pool = small_exponent_maps(2, 2);
  for (const auto& a : pool)
    for (const auto& b : pool) {
      const SymElement p = basis_mul(a, b, Mode::free());
      const DegreeVector expected = a.multidegree() + b.multidegree();
      for (const auto& [gamma, c] : p.terms()) CHECK(gamma.multidegree() == expected);
    }
}

TEST_CASE("elem_mul is bilinear, unital, associative") {
  const Word x1 = make_word(2, {1});
  const Mode mode = Mode::truncated(2);

  SECTION("identity is a two-sided unit on random elements") {
    std::mt19937_64 rng(42);
    const auto pool = small_exponent_maps(2, 2);
    const SymElement one = SymElement::identity(mode, 2);
    for (int trial = 0; trial < 50; ++trial) {
      const SymElement a = random_element(rng, mode, pool);
      CHECK(elem_mul(a, one) == a);
      CHECK(elem_mul(one, a) == a);
    }
  }
  SECTION("scaling") {
    const SymElement a = SymElement::basis(mode, ExponentMap::single(x1, 1), 2);
    const SymElement b = SymElement::basis(mode, ExponentMap::single(x1, 1), 3);
    SymElement expected(mode, 2);
    expected.add_term(ExponentMap::single(x1, 2), 12);
    expected.add_term(ExponentMap::single(x1 * x1, 1), 6);
    CHECK(elem_mul(a, b) == expected);
  }
  SECTION("associativity witness at n=3 via the oracle") {
    const Mode m3 = Mode::truncated(3);
    const SymElement e1x1 = SymElement::basis(m3, ExponentMap::single(x1, 1));
    const SymElement left = elem_mul(elem_mul(e1x1, e1x1), e1x1);
    const SymElement right = elem_mul(e1x1, elem_mul(e1x1, e1x1));
    CHECK(left == right);
    // both against the tensor model
    const TensorElement t = orbit_expand(ExponentMap::single(x1, 1), 3);
    CHECK(left == project_to_basis(tensor_mul(tensor_mul(t, t), t)));
  }
  SECTION("mode mismatch") {
    const SymElement a = SymElement::identity(Mode::truncated(2), 2);
    const SymElement b = SymElement::identity(Mode::truncated(3), 2);
    CHECK_THROWS_AS(elem_mul(a, b), input_error);
  }
}

TEST_CASE("truncation") {
  const Word x1 = make_word(2, {1});
  SECTION("weight above the order dies, the rest survives") {
    SymElement f(Mode::free(), 2);
    f.add_term(ExponentMap::single(x1, 3), 1);
    CHECK(truncate(f, 2).is_zero());
    SymElement g(Mode::free(), 2);
    g.add_term(ExponentMap::single(x1, 2), 5);
    const SymElement t = truncate(g, 2);
    REQUIRE(t.terms().size() == 1);
    CHECK(t.coefficient_of(ExponentMap::single(x1, 2)) == 5);
  }
  SECTION("truncation of a free product to order 1") {
    const SymElement f1 = SymElement::basis(Mode::free(), ExponentMap::single(x1, 1));
    const SymElement product = elem_mul(f1, f1);
    const SymElement lhs = truncate(product, 1);
    const SymElement rhs = elem_mul(truncate(f1, 1), truncate(f1, 1));
    CHECK(lhs == rhs);
    SymElement expected(Mode::truncated(1), 2);
    expected.add_term(ExponentMap::single(x1 * x1, 1), 1);
    CHECK(lhs == expected);
  }
  SECTION("truncation is an algebra map on random free elements") {
    std::mt19937_64 rng(2718);
    const auto pool = small_exponent_maps(2, 3);
    for (int trial = 0; trial < 20; ++trial) {
      const SymElement a = random_element(rng, Mode::free(), pool);
      const SymElement b = random_element(rng, Mode::free(), pool);
      for (std::uint32_t n = 1; n <= 4; ++n)
        CHECK(truncate(elem_mul(a, b), n) ==
              elem_mul(truncate(a, n), truncate(b, n)));
    }
  }
}

TEST_CASE("free-mode products stabilize") {
  const auto pool = small_exponent_maps(2, 2);
  for (const auto& a : pool)
    for (const auto& b : pool) {
      const SymElement free_product = basis_mul(a, b, Mode::free());
      const std::uint32_t total = a.weight() + b.weight();
      for (std::uint32_t n = total; n <= total + 2 && n >= 1; ++n) {
        const SymElement truncated_product = basis_mul(a, b, Mode::truncated(n));
        CHECK(truncate(free_product, n) == truncated_product);
      }
    }
}

TEST_CASE("noncommutativity witness") {
  const Word x1 = make_word(2, {1});
  const Word x2 = make_word(2, {2});
  for (std::uint32_t n = 1; n <= 3; ++n) {
    const Mode mode = Mode::truncated(n);
    const SymElement a = SymElement::basis(mode, ExponentMap::single(x1, 1));
    const SymElement b = SymElement::basis(mode, ExponentMap::single(x2, 1));
    const SymElement commutator = elem_mul(a, b) - elem_mul(b, a);
    SymElement expected(mode, 2);
    expected.add_term(ExponentMap::single(x1 * x2, 1), 1);
    expected.add_term(ExponentMap::single(x2 * x1, 1), -1);
    CHECK(commutator == expected);
    CHECK_FALSE(commutator.is_zero());
  }
}

TEST_CASE("cached multidegree matches recomputation") {
  const auto pool = small_exponent_maps(2, 3);
  for (const auto& alpha : pool) {
    DegreeVector fresh = DegreeVector::zeros(2);
    for (const auto& [word, exp] : alpha.entries())
      fresh += multidegree(word).scaled(exp);
    CHECK(alpha.multidegree() == fresh);
  }
}
