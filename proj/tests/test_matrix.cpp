#include <vector>

#include "doctest.h"
#include "support/generators.hpp"
#include "support/instances.hpp"
#include "valiant/matrix.hpp"
#include "valiant/upper_tri.hpp"

using namespace valiant;

namespace {

template <SemiNearRing S>
using Dense = std::vector<std::vector<typename S::Elem>>;

// Plain triple loop, used as the reference product.
template <SemiNearRing S>
Dense<S> dense_mul(const S& snr, const Dense<S>& x, const Dense<S>& y) {
  const std::size_t n = x.size(), m = y.empty() ? 0 : y[0].size(), k = y.size();
  Dense<S> out(n, std::vector<typename S::Elem>(m, snr.zero()));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < m; ++j)
      for (std::size_t t = 0; t < k; ++t) out[i][j] = snr.add(out[i][j], snr.mul(x[i][t], y[t][j]));
  return out;
}

template <SemiNearRing S>
bool dense_eq(const S& snr, const Dense<S>& x, const Dense<S>& y) {
  if (x.size() != y.size()) return false;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i].size() != y[i].size()) return false;
    for (std::size_t j = 0; j < x[i].size(); ++j)
      if (!snr.eq(x[i][j], y[i][j])) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("shape_for") {
  CHECK(to_string(shape_for(1)) == "Leaf");
  CHECK(to_string(shape_for(4)) == "Bin(Bin(Leaf,Leaf),Bin(Leaf,Leaf))");
  CHECK(to_string(shape_for(3)) == "Bin(Bin(Leaf,Leaf),Leaf)");
  CHECK_THROWS_AS(shape_for(0), std::invalid_argument);
  for (std::size_t n = 1; n <= 40; ++n) {
    CHECK(shape_for(n).size() == n);
    CHECK(skewed_shape(n).size() == n);
    CHECK(left_skewed_shape(n).size() == n);
  }
  CHECK_THROWS_AS(Shape::leaf().left(), ShapeMismatch);
}

TEST_CASE("matrix add and mul on small examples") {
  BoolSnr b;
  const Shape s2 = shape_for(2);
  const Dense<BoolSnr> id{{true, false}, {false, true}};
  const Dense<BoolSnr> swap{{false, true}, {true, false}};
  const auto I = from_dense(b, id, s2, s2);
  const auto P = from_dense(b, swap, s2, s2);
  CHECK(to_dense(b, mat_mul(b, I, P)) == swap);
  CHECK(to_dense(b, mat_mul(b, P, P)) == id);
  CHECK(to_dense(b, mat_add(b, I, P)) == Dense<BoolSnr>{{true, true}, {true, true}});

  MinPlusSnr m;
  const auto row = Mat<Cost>::row(Mat<Cost>::one(Cost(2)), Mat<Cost>::one(Cost(5)));
  const auto col = Mat<Cost>::col(Mat<Cost>::one(Cost(3)), Mat<Cost>::one(Cost(1)));
  const auto prod = mat_mul(m, row, col);
  REQUIRE(prod.kind() == MatKind::one);
  CHECK(prod.value() == Cost(5));

  CHECK_THROWS_AS(mat_add(m, row, col), ShapeMismatch);
  CHECK_THROWS_AS(mat_mul(m, row, row), ShapeMismatch);
}

TEST_CASE("Zero operands short-circuit") {
  testing::CallCounter<MinPlusSnr> c;
  Rng rng(5);
  const Shape s = shape_for(6);
  const auto y = testing::random_mat(MinPlusSnr{}, s, s, rng);
  const auto z = Mat<Cost>::zero(s, s);
  CHECK(mat_eq(c, mat_add(c, z, y), y));
  CHECK(mat_mul(c, z, y).is_zero());
  CHECK(mat_mul(c, y, z).is_zero());
  CHECK(c.counts->add == 0);
  CHECK(c.counts->mul == 0);
}

TEST_CASE("matrix product matches the dense product") {
  Rng rng(11);
  GrammarSnr g(testing::paren_grammar());
  MinPlusSnr m;
  for (int k = 0; k < 200; ++k) {
    const std::size_t r = 1 + draw_below(rng, 7), c = 1 + draw_below(rng, 7),
                      n = 1 + draw_below(rng, 7);
    const Shape rs = testing::shape_variant(r, k, rng), is = testing::shape_variant(n, k + 1, rng),
                cs = testing::shape_variant(c, k + 2, rng);
    const auto xd = testing::random_dense(m, r, n, rng), yd = testing::random_dense(m, n, c, rng);
    const auto x = from_dense(m, xd, rs, is), y = from_dense(m, yd, is, cs);
    REQUIRE(dense_eq(m, to_dense(m, mat_mul(m, x, y)), dense_mul(m, xd, yd)));

    const auto gx = testing::random_dense(g, r, n, rng), gy = testing::random_dense(g, n, c, rng);
    REQUIRE(dense_eq(g, to_dense(g, mat_mul(g, from_dense(g, gx, rs, is), from_dense(g, gy, is, cs))),
                     dense_mul(g, gx, gy)));
  }
}

TEST_CASE("triangle add and mul on small examples") {
  BoolSnr b;
  const Shape s2 = shape_for(2);
  const auto t = tri_from_dense(b, Dense<BoolSnr>{{false, true}, {false, false}}, s2);
  CHECK(ut_mul(b, t, t).is_zero());
  CHECK(ut_eq(b, ut_add(b, t, t), t));

  const Shape s3 = shape_for(3);
  const auto a = tri_from_dense(
      b, Dense<BoolSnr>{{false, true, false}, {false, false, true}, {false, false, false}}, s3);
  const auto a2 = to_dense(b, ut_mul(b, a, a));
  CHECK(a2 == Dense<BoolSnr>{{false, false, true}, {false, false, false}, {false, false, false}});

  CHECK_THROWS_AS(
      tri_from_dense(b, Dense<BoolSnr>{{true, false}, {false, false}}, s2), std::invalid_argument);
  CHECK_THROWS_AS(ut_add(b, t, UpperTri<bool>::zero(s3)), ShapeMismatch);
}

TEST_CASE("embedding is a homomorphism") {
  Rng rng(21);
  GrammarSnr g(testing::paren_grammar());
  for (int k = 0; k < 200; ++k) {
    const std::size_t n = 2 + draw_below(rng, 8);
    const Shape s = testing::shape_variant(n, k, rng);
    const auto x = testing::random_tri(g, s, rng), y = testing::random_tri(g, s, rng);
    REQUIRE(mat_eq(g, embed(ut_mul(g, x, y)), mat_mul(g, embed(x), embed(y))));
    REQUIRE(mat_eq(g, embed(ut_add(g, x, y)), mat_add(g, embed(x), embed(y))));
  }
}

TEST_CASE("cell access") {
  MinPlusSnr m;
  const Shape s = shape_for(5);
  auto x = Mat<Cost>::zero(s, s);
  const auto x0 = x;
  x = set_cell(m, x, 3, 1, Cost(7));
  CHECK(get_cell(m, x, 3, 1) == Cost(7));
  CHECK(get_cell(m, x, 1, 3) == Cost::infinity());
  CHECK(x0.is_zero());
  CHECK(set_cell(m, x, 3, 1, Cost::infinity()).is_zero());
  CHECK_THROWS_AS(get_cell(m, x, 5, 0), std::out_of_range);
  CHECK_THROWS_AS(set_cell(m, x, 0, 5, Cost(1)), std::out_of_range);

  auto t = UpperTri<Cost>::zero(s);
  t = set_cell(m, t, 0, 4, Cost(2));
  CHECK(get_cell(m, t, 0, 4) == Cost(2));
  CHECK_THROWS_AS(get_cell(m, t, 2, 2), std::out_of_range);
  CHECK_THROWS_AS(set_cell(m, t, 3, 1, Cost(1)), std::out_of_range);
  CHECK_THROWS_AS(get_cell(m, t, 0, 5), std::out_of_range);

  Rng rng(3);
  for (int k = 0; k < 100; ++k) {
    const std::size_t r = 1 + draw_below(rng, 6), c = 1 + draw_below(rng, 6);
    const auto d = testing::random_dense(m, r, c, rng);
    const auto y = from_dense(m, d, testing::shape_variant(r, k, rng), testing::shape_variant(c, k, rng));
    REQUIRE(dense_eq(m, to_dense(m, y), d));
  }
}

TEST_CASE("equality ignores how zeros are stored") {
  testing::NoHint<BoolSnr> nh;
  const Shape s = shape_for(4);
  const Dense<BoolSnr> zeros(4, std::vector<bool>(4, false));
  const auto materialized = from_dense(nh, zeros, s, s);
  CHECK_FALSE(materialized.is_zero());
  CHECK(mat_eq(nh, materialized, Mat<bool>::zero(s, s)));
  CHECK(mat_eq(nh, Mat<bool>::zero(s, s), materialized));

  BoolSnr b;
  CHECK(from_dense(b, zeros, s, s).is_zero());
}

TEST_CASE("operations keep matrices canonical") {
  Rng rng(8);
  MinPlusSnr m;
  BoolSnr b;
  for (int k = 0; k < 200; ++k) {
    const std::size_t n = 1 + draw_below(rng, 8);
    const Shape s = testing::shape_variant(n, k, rng);
    const auto x = testing::random_mat(m, s, s, rng, 1, 4), y = testing::random_mat(m, s, s, rng, 1, 4);
    REQUIRE(is_canonical(m, x));
    REQUIRE(is_canonical(m, mat_add(m, x, y)));
    REQUIRE(is_canonical(m, mat_mul(m, x, y)));
    if (n >= 2) {
      const auto p = testing::random_tri(b, s, rng, 1, 3), q = testing::random_tri(b, s, rng, 1, 3);
      REQUIRE(is_canonical(b, ut_mul(b, p, q)));
      REQUIRE(is_canonical(b, ut_add(b, p, q)));
    }
  }
}

TEST_CASE("lifted operations satisfy the laws") {
  GrammarSnr g(testing::paren_grammar());
  for (std::size_t n = 2; n <= 5; ++n) {
    CAPTURE(n);
    const auto sq = check_laws(SquareMatrixSnr<GrammarSnr>(g, shape_for(n)), 60, n);
    CHECK(sq.failed_laws().empty());
    const auto tri = check_laws(TriangleSnr<GrammarSnr>(g, skewed_shape(n)), 60, n);
    CHECK(tri.failed_laws().empty());
  }
}
