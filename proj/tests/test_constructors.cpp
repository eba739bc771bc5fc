#include <doctest.h>

#include <random>
#include <set>

#include "qtoric/constructors.hpp"
#include "qtoric/explorer.hpp"
#include "qtoric/symmetry.hpp"
#include "support.hpp"

using namespace qtoric;

TEST_SUITE_BEGIN("constructors");

TEST_CASE("simplex pairs") {
  CharPair interval = simplex_pair(1);
  CHECK(interval.polytope().facet_count() == 2);
  CHECK(interval.lambda_of(0).entries() == std::vector<Int>{1});
  CHECK(interval.lambda_of(1).entries() == std::vector<Int>{1});

  CharPair cp2 = simplex_pair(2);
  CHECK(cp2.polytope() == qtest::triangle());
  CHECK(cp2.lambda_of(2).entries() == std::vector<Int>{1, 1});

  CHECK_NOTHROW(simplex_pair(4));  // all C(5,4) vertex determinants checked on construction
  CHECK_THROWS_AS(simplex_pair(0), Error);
}

TEST_CASE("products") {
  CharPair ii = product_pair(simplex_pair(1), simplex_pair(1));
  CHECK(combinatorial_isomorphism(ii.polytope(), qtest::square()));
  CHECK(ii.lambda_of(0).entries() == std::vector<Int>{1, 0});
  CHECK(ii.lambda_of(1).entries() == std::vector<Int>{1, 0});
  CHECK(ii.lambda_of(2).entries() == std::vector<Int>{0, 1});
  CHECK(ii.lambda_of(3).entries() == std::vector<Int>{0, 1});

  CharPair prism = product_pair(simplex_pair(1), simplex_pair(2));
  CHECK(prism.polytope().facet_count() == 5);
  CHECK(prism.polytope().vertex_count() == 6);
}

TEST_CASE("product f-vectors multiply") {
  CharPair a = simplex_pair(1);
  CharPair b = simplex_pair(2);
  CharPair ab = product_pair(a, b);
  CHECK(f_vector(ab.polytope()) ==
        qtest::product_f_vector(f_vector(a.polytope()), 1, f_vector(b.polytope()), 2));

  // I x I x Delta^3, the rank-5 base: 2*2*4 = 16 vertices
  CharPair big = product_pair(product_pair(simplex_pair(1), simplex_pair(1)), simplex_pair(3));
  auto f = f_vector(big.polytope());
  CHECK(f == qtest::product_f_vector(
                 qtest::product_f_vector(f_vector(simplex_pair(1).polytope()), 1,
                                         f_vector(simplex_pair(1).polytope()), 1),
                 2, f_vector(simplex_pair(3).polytope()), 3));
  CHECK(f[0] == 16);
}

TEST_CASE("products commute up to equivalence") {
  CharPair a = simplex_pair(1);
  CharPair b = bott_pair({2});
  CHECK(gl_equivalent(product_pair(a, b), product_pair(b, a)));
}

TEST_CASE("vertex cut of the square is the pentagon") {
  CharPair square = product_pair(simplex_pair(1), simplex_pair(1));
  CharPair cut = vertex_cut(square, 0);
  CHECK(combinatorial_isomorphism(cut.polytope(), qtest::pentagon()));
  CHECK(f_vector(cut.polytope()) == std::vector<long long>{5, 5});
}

TEST_CASE("vertex cut of the projective plane pair") {
  CharPair cp2 = qtest::cp2_pair();
  // vertex on facets 0 and 1
  int v = cp2.polytope().vertex_index({0, 1});
  REQUIRE(v >= 0);
  CharPair cut = vertex_cut(cp2, v);
  CHECK(cut.polytope().facet_count() == 4);
  CHECK(cut.polytope().vertex_count() == 4);
  CHECK(cut.lambda_of(3).entries() == std::vector<Int>{1, 1});
}

TEST_CASE("vertex cut bookkeeping") {
  std::mt19937_64 rng(13);
  for (const CharPair& cp : {qtest::cp2_pair(), simplex_pair(3), bott_pair({2, 3})}) {
    int v = qtest::rand_int(rng, 0, cp.polytope().vertex_count() - 1);
    CharPair cut = vertex_cut(cp, v);
    CHECK(cut.polytope().facet_count() == cp.polytope().facet_count() + 1);
    CHECK(cut.polytope().vertex_count() == cp.polytope().vertex_count() + cp.rank() - 1);
    CHECK(qtest::euler_ok(f_vector(cut.polytope()), cut.rank()));
  }
  CHECK_THROWS_AS(vertex_cut(simplex_pair(1), 0), Error);
}

TEST_CASE("bott pairs validate for every twist") {
  CHECK_NOTHROW(bott_pair({2, 3, 4}));
  CHECK(bott_pair({2, 3, 4}).polytope().facet_count() == 6);
  CHECK(bott_pair({2, 3, 4}).rank() == 4);

  std::mt19937_64 rng(19);
  for (int trial = 0; trial < 50; ++trial) {
    int m = qtest::rand_int(rng, 1, 4);
    std::vector<Int> k(m);
    for (Int& x : k) x = qtest::rand_int(rng, -20, 20);
    CHECK_NOTHROW(bott_pair(k));
  }
}

TEST_CASE("untwisted bott pair is the product") {
  CharPair flat = bott_pair({0, 0});
  CharPair product = product_pair(simplex_pair(1), simplex_pair(2));
  CHECK(gl_equivalent(flat, product));
}

TEST_CASE("lambda inventory of the rank-5 blow-up") {
  CharPair m2 = example_m2(5, {2, 3, 4});
  CHECK(m2.polytope().facet_count() == 9);
  // the cut facet comes last and is a 4-simplex
  CHECK(m2.lambda_of(8).entries() == std::vector<Int>(5, 1));
  CHECK(combinatorial_isomorphism(facet_subpolytope(m2.polytope(), 8), simplex_pair(4).polytope()));
  std::multiset<std::vector<Int>> got;
  for (const auto& v : m2.lambda()) got.insert(v.entries());
  std::multiset<std::vector<Int>> expect{
      {1, 1, 1, 1, 1}, {0, 0, 1, 1, 1}, {1, 0, 0, 0, 0}, {0, 1, 2, 3, 4}, {1, 0, 0, 0, 0},
      {0, 1, 0, 0, 0}, {0, 0, 1, 0, 0}, {0, 0, 0, 1, 0}, {0, 0, 0, 0, 1}};
  CHECK(got == expect);
}

TEST_CASE("blow-up example parameter validation") {
  CHECK_THROWS_WITH_AS(example_m2(5, {2, 2, 3}), doctest::Contains("distinct"), Error);
  CHECK_THROWS_WITH_AS(example_m2(5, {0, 2, 3}), doctest::Contains("avoid"), Error);
  CHECK_THROWS_WITH_AS(example_m2(5, {1, 2, 3}), doctest::Contains("avoid"), Error);
  CHECK_THROWS_AS(example_m2(3, {2}), Error);
  CHECK_THROWS_AS(example_m2(5, {2, 3}), Error);
  CHECK_NOTHROW(example_m2(4, {2, -3}));  // rank 4 is allowed; negatives are fine
}

TEST_CASE("larger blow-up example") {
  CharPair m2 = example_m2(7, {2, 3, 4, 5, 6});
  CHECK(m2.polytope().facet_count() == 11);
  CHECK(check_condition(m2).trivial);
}

TEST_CASE("random constructor chains stay valid") {
  std::mt19937_64 rng(37);
  for (int trial = 0; trial < 60; ++trial) {
    CharPair cp = simplex_pair(qtest::rand_int(rng, 1, 2));
    for (int step = 0; step < 3; ++step) {
      switch (qtest::rand_int(rng, 0, 3)) {
        case 0: {
          if (cp.rank() <= 4) cp = product_pair(cp, simplex_pair(qtest::rand_int(rng, 1, 2)));
          break;
        }
        case 1: {
          if (cp.rank() >= 2 && cp.polytope().facet_count() <= 10)
            cp = vertex_cut(cp, qtest::rand_int(rng, 0, cp.polytope().vertex_count() - 1));
          break;
        }
        case 2: {
          std::vector<Int> k(qtest::rand_int(rng, 1, 2));
          for (Int& x : k) x = qtest::rand_int(rng, -5, 5);
          if (cp.rank() + static_cast<int>(k.size()) + 1 <= 6) cp = product_pair(cp, bott_pair(k));
          break;
        }
        default:
          break;
      }
      CHECK(check_nonsingular(cp.polytope(), cp.lambda()).ok);
      CHECK(qtest::euler_ok(f_vector(cp.polytope()), cp.rank()));
    }
  }
}

TEST_SUITE_END();
