#include <doctest.h>

#include <sstream>
#include <stdexcept>

#include "greenring/element.hpp"

using namespace greenring;

TEST_CASE("from_indec builds a single summand") {
  CHECK(from_indec(5) == GreenElement{{5, 1}});
  CHECK(from_indec(1) == GreenElement{{1, 1}});
  CHECK_THROWS_AS(from_indec(0), std::invalid_argument);
}

TEST_CASE("dim is the weighted sum of indices") {
  CHECK(dim(GreenElement{{5, 1}, {8, 2}, {16, 6}}) == 117);
  CHECK(dim(GreenElement{}) == 0);
  CHECK(dim(GreenElement{{3, -2}, {4, 2}}) == 2);
}

TEST_CASE("summand_count counts summands of genuine elements") {
  CHECK(summand_count(GreenElement{{1, 1}, {4, 2}, {5, 1}}) == 4);
  CHECK(summand_count(GreenElement{{13, 1}}) == 1);
  CHECK_THROWS_AS(summand_count(GreenElement{{3, -1}}), std::invalid_argument);
}

TEST_CASE("terms are canonical") {
  const GreenElement e = GreenElement::from_terms({{4, 1}, {2, 3}, {4, -1}, {7, 0}, {2, 1}});
  REQUIRE(e.terms().size() == 1);
  CHECK(e.terms()[0].first == 2);
  CHECK(e.terms()[0].second == 4);
  CHECK(GreenElement{{3, 1}, {1, 2}} == GreenElement{{1, 2}, {3, 1}});
  CHECK_THROWS_AS(GreenElement::from_terms({{0, 1}}), std::invalid_argument);
  CHECK(GreenElement{{5, 0}}.is_zero());
}

TEST_CASE("element queries") {
  const GreenElement e{{2, 3}, {9, -1}};
  CHECK(e.multiplicity(2) == 3);
  CHECK(e.multiplicity(9) == -1);
  CHECK(e.multiplicity(4) == 0);
  CHECK(e.max_index() == 9);
  CHECK(GreenElement{}.max_index() == 0);
  CHECK_FALSE(e.is_genuine());
  CHECK(GreenElement{{2, 3}}.is_genuine());
  CHECK(GreenElement{}.is_genuine());
  CHECK(e.distinct_count() == 2);
}

TEST_CASE("additive group and scalars") {
  const GreenElement a{{1, 1}, {3, 2}};
  const GreenElement b{{3, -2}, {4, 1}};
  CHECK(a + b == GreenElement{{1, 1}, {4, 1}});
  CHECK(a - a == GreenElement{});
  CHECK(-a == GreenElement{{1, -1}, {3, -2}});
  CHECK(a * BigInt(3) == GreenElement{{1, 3}, {3, 6}});
  CHECK(a * BigInt(0) == GreenElement{});
  GreenElement c = a;
  c.add_term(3, -2);
  CHECK(c == from_indec(1));
  CHECK_THROWS_AS(c.add_term(0, 1), std::invalid_argument);
}

TEST_CASE("text rendering") {
  CHECK(to_string(GreenElement{{5, 1}, {8, 2}, {16, 6}}) == "V5 + 2*V8 + 6*V16");
  CHECK(to_string(GreenElement{{3, -2}}) == "-2*V3");
  CHECK(to_string(GreenElement{{3, -1}}) == "-V3");
  CHECK(to_string(GreenElement{}) == "0");
  std::ostringstream os;
  os << GreenElement{{1, 1}, {3, -2}, {4, 2}};
  CHECK(os.str() == "V1 + -2*V3 + 2*V4");
}

TEST_CASE("multiplicities are arbitrary precision") {
  const BigInt big("8197519886357582844587268803532720");
  GreenElement e;
  e.add_term(128, big);
  e.add_term(128, big);
  CHECK(e.multiplicity(128) == big * 2);
  CHECK(dim(e) == big * 256);
}

TEST_CASE("binomial") {
  CHECK(binomial(4, 2) == 6);
  CHECK(binomial(3, 5) == 0);
  CHECK(binomial(7, 0) == 1);
  CHECK(binomial(0, 0) == 1);
  CHECK(binomial(100, 50) == BigInt("100891344545564193334812497256"));
}

TEST_CASE("group contexts") {
  CHECK(GroupContext(4).order() == 16);
  CHECK_THROWS_AS(GroupContext(0), std::invalid_argument);
  CHECK_THROWS_AS(GroupContext(GroupContext::kMaxExponent + 1), std::invalid_argument);
  CHECK(GroupContext::minimal_for(1).exponent() == 1);
  CHECK(GroupContext::minimal_for(2).exponent() == 1);
  CHECK(GroupContext::minimal_for(3).exponent() == 2);
  CHECK(GroupContext::minimal_for(16).exponent() == 4);
  CHECK(GroupContext::minimal_for(17).exponent() == 5);
  CHECK(ceil_log2(1) == 0);
  CHECK(ceil_log2(147) == 8);
}

TEST_CASE("accumulator") {
  ElementAccumulator acc(8);
  acc.add(3, 2);
  acc.add(GreenElement{{3, -2}, {8, 1}}, 5);
  acc.add(20, 1);  // grows on demand
  CHECK(acc.take() == GreenElement{{3, -8}, {8, 5}, {20, 1}});
  ElementAccumulator cancel(4);
  cancel.add(3, 2);
  cancel.add(GreenElement{{3, -1}}, 2);
  CHECK(cancel.take().is_zero());
}
