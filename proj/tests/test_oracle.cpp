#include <doctest.h>

#include <random>
#include <stdexcept>

#include "greenring/errors.hpp"
#include "greenring/oracle.hpp"
#include "greenring/powers.hpp"
#include "support.hpp"

using namespace greenring;

namespace {

BasisIndex wedge(std::vector<std::uint32_t> t) { return {BasisKind::wedge, std::move(t)}; }
BasisIndex mono(std::vector<std::uint32_t> t) { return {BasisKind::monomial, std::move(t)}; }

GF2Matrix conjugate(const GF2Matrix& m, const GF2Matrix& p) { return p * m * inverse(p); }

}  // namespace

TEST_CASE("rep_indec and rep_of_element") {
  CHECK(rep_indec(1) == GF2Matrix::identity(1));
  CHECK(rep_indec(2) == GF2Matrix::from_rows({{1, 1}, {0, 1}}));
  CHECK(rep_indec(3) == GF2Matrix::from_rows({{1, 1, 0}, {0, 1, 1}, {0, 0, 1}}));
  CHECK_THROWS_AS(rep_indec(0), std::invalid_argument);

  const GF2Matrix m = rep_of_element(GreenElement{{2, 1}, {1, 2}});
  CHECK(m == GF2Matrix::from_rows({{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 1}, {0, 0, 0, 1}}));
  CHECK(rep_of_element(GreenElement{}).size() == 0);
  CHECK_THROWS_AS(rep_of_element(GreenElement{{2, -1}}), std::invalid_argument);
  CHECK_THROWS_AS(rep_of_element(GreenElement::from_terms({{1, BigInt(1) << 25}})), std::invalid_argument);
}

TEST_CASE("basis enumeration and positions") {
  const auto w = enumerate_basis(BasisKind::wedge, 3, 2);
  CHECK(w == std::vector<BasisIndex>{wedge({0, 1}), wedge({0, 2}), wedge({1, 2})});
  const auto s = enumerate_basis(BasisKind::monomial, 2, 2);
  CHECK(s == std::vector<BasisIndex>{mono({0, 0}), mono({0, 1}), mono({1, 1})});
  CHECK(enumerate_basis(BasisKind::wedge, 4, 0) == std::vector<BasisIndex>{wedge({})});
  CHECK(enumerate_basis(BasisKind::wedge, 2, 3).empty());

  for (std::size_t size : {1u, 4u, 9u})
    for (unsigned r = 0; r <= 4; ++r)
      for (BasisKind kind : {BasisKind::wedge, BasisKind::monomial}) {
        const auto basis = enumerate_basis(kind, size, r);
        CHECK(basis.size() == basis_size(kind, size, r));
        for (std::size_t p = 0; p < basis.size(); ++p) CHECK(basis_position(basis[p], size) == p);
      }
  CHECK(basis_size(BasisKind::wedge, 16, 8) == 12870);
  CHECK(basis_size(BasisKind::monomial, 8, 12) == 50388);
  CHECK_THROWS_AS(basis_position(wedge({1, 0}), 3), std::invalid_argument);
  CHECK_THROWS_AS(basis_position(wedge({1, 1}), 3), std::invalid_argument);
  CHECK_THROWS_AS(basis_position(mono({0, 3}), 3), std::invalid_argument);
}

TEST_CASE("wedge and symmetric power matrices") {
  CHECK(wedge_power(rep_indec(2), 2) == GF2Matrix::identity(1));
  CHECK(wedge_power(rep_indec(3), 2) == GF2Matrix::from_rows({{1, 1, 1}, {0, 1, 1}, {0, 0, 1}}));
  CHECK(wedge_power(rep_indec(4), 0) == GF2Matrix::identity(1));
  CHECK(wedge_power(rep_indec(4), 1) == rep_indec(4));
  CHECK(sym_power(rep_indec(2), 2) == GF2Matrix::from_rows({{1, 1, 1}, {0, 1, 0}, {0, 0, 1}}));
  CHECK(sym_power(rep_indec(3), 1) == rep_indec(3));
  CHECK(sym_power(rep_indec(5), 3).size() == 35);
  CHECK(wedge_power(rep_indec(7), 3).size() == 35);
  CHECK_THROWS_AS(wedge_power(rep_indec(3), 4), std::invalid_argument);
  CHECK_THROWS_AS(sym_power(rep_indec(3), 33), std::invalid_argument);
  CHECK_THROWS_AS(wedge_power(GF2Matrix::identity(257), 1), std::invalid_argument);
}

TEST_CASE("power matrices are functorial") {
  std::mt19937 rng(17);
  for (std::size_t n : {3u, 5u, 7u}) {
    const GF2Matrix a = test::random_matrix(rng, n), b = test::random_matrix(rng, n);
    for (unsigned r = 0; r <= 3; ++r) {
      CHECK(wedge_power(a * b, r) == wedge_power(a, r) * wedge_power(b, r));
      CHECK(sym_power(a * b, r) == sym_power(a, r) * sym_power(b, r));
    }
    CHECK(wedge_power(GF2Matrix::identity(n), 2) == GF2Matrix::identity(basis_size(BasisKind::wedge, n, 2)));
  }
}

TEST_CASE("decompose: worked examples") {
  CHECK(decompose(GroupContext(1), kronecker(rep_indec(2), rep_indec(2))) == GreenElement{{2, 2}});
  CHECK(decompose(GroupContext(2), rep_indec(3)) == from_indec(3));
  CHECK(decompose(GroupContext(3), GF2Matrix::identity(4)) == GreenElement{{1, 4}});
  CHECK(decompose(GroupContext(2), GF2Matrix()).is_zero());
  CHECK(test::oracle_tensor(9, 13, 4) == GreenElement{{5, 1}, {8, 2}, {16, 6}});
  CHECK(test::oracle_wedge(from_indec(5), 2, 3) == GreenElement{{3, 1}, {7, 1}});
}

TEST_CASE("decompose: rejects non-representations") {
  CHECK_THROWS_AS(decompose(GroupContext(2), rep_indec(5)), NotARepresentation);
  CHECK_THROWS_AS(decompose(GroupContext(2), GF2Matrix::from_rows({{1, 1}, {1, 0}})), NotARepresentation);
  CHECK_THROWS_AS(decompose(GroupContext(2), GF2Matrix(3)), NotARepresentation);
  CHECK_THROWS_AS(decompose_by_powers(GroupContext(2), rep_indec(5)), NotARepresentation);
  CHECK_THROWS_AS(decompose_by_powers(GroupContext(2), GF2Matrix(3)), NotARepresentation);
}

TEST_CASE("element_from_rank_profile") {
  CHECK(element_from_rank_profile({3, 2, 1, 0, 0}) == from_indec(3));
  CHECK(element_from_rank_profile({4, 2, 0}) == GreenElement{{2, 2}});
  CHECK_THROWS_AS(element_from_rank_profile({2, 2, 0}), InternalInconsistency);
}

TEST_CASE("decompose inverts rep_of_element") {
  std::mt19937 rng(42);
  for (unsigned n = 1; n <= 4; ++n) {
    const GroupContext ctx(n);
    for (int k = 0; k < 30; ++k) {
      const GreenElement e = test::random_genuine(rng, ctx.order(), 60);
      CHECK(decompose(ctx, rep_of_element(e)) == e);
    }
  }
}

TEST_CASE("decomposition is a conjugation invariant") {
  std::mt19937 rng(4);
  const GroupContext ctx(3);
  for (int k = 0; k < 20; ++k) {
    const GreenElement e = test::random_genuine(rng, 8, 40);
    const GF2Matrix m = rep_of_element(e);
    const GF2Matrix c = conjugate(m, test::random_invertible(rng, m.size()));
    CHECK(decompose(ctx, c) == e);
    CHECK(decompose_by_powers(ctx, c) == e);
  }
}

TEST_CASE("chain profile agrees with explicit powers") {
  std::mt19937 rng(77);
  const GroupContext ctx(4);
  for (Index m = 1; m <= 10; ++m)
    for (unsigned r = 0; r <= std::min<unsigned>(m, 4); ++r) {
      const GF2Matrix w = wedge_power(rep_indec(m), r);
      CHECK(nilpotent_rank_profile(w, 16) == nilpotent_rank_profile_by_powers(w, 16));
    }
  for (int k = 0; k < 10; ++k) {
    const GreenElement e = test::random_genuine(rng, 16, 80);
    const GF2Matrix m = conjugate(rep_of_element(e), test::random_invertible(rng, static_cast<std::size_t>(dim(e))));
    CHECK(nilpotent_rank_profile(m, 16) == nilpotent_rank_profile_by_powers(m, 16));
  }
}

TEST_CASE("large oracle cases") {
  const GreenElement e = test::oracle_wedge(from_indec(16), 8, 4);
  CHECK(e == exterior_power_indec(16, 8));
  CHECK(dim(e) == BigInt(12870));
}
