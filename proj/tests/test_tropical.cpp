#include <doctest.h>

#include <limits>

#include "support.hpp"
#include "tropcp/tropical.hpp"

using namespace tropcp;
using testing::Q;
using testing::TV;

namespace {
const TropValue ninf = TropValue::neg_inf();
}

TEST_CASE("tropical scalars") {
  CHECK(trop::add(3, ninf) == TropValue(3));
  CHECK(trop::mul(3, ninf).is_neg_inf());
  CHECK(trop::mul(Q("1/2"), Q("3/2")) == TropValue(2));
  CHECK(trop::add(ninf, ninf).is_neg_inf());
  CHECK(ninf < TropValue(-1000000));
  CHECK(TropValue().is_neg_inf());
  CHECK(trop::sub(5, 2) == TropValue(3));
  CHECK(trop::sub(ninf, 2).is_neg_inf());
  CHECK_THROWS(ninf.value());
  CHECK(ninf.to_double() == -std::numeric_limits<double>::infinity());
}

TEST_CASE("tropical value text") {
  CHECK(TropValue(Q("3/2")).str() == "3/2");
  CHECK(ninf.str() == "-inf");
  CHECK(TropValue::parse("-inf").is_neg_inf());
  CHECK(TropValue::parse("-7/3") == TropValue(Q("-7/3")));
  CHECK_THROWS_AS(TropValue::parse("inf"), std::invalid_argument);
}

TEST_CASE("tropical dot product") {
  CHECK(trop::dot(TV({"0", "-1"}), TV({"0", "0"})) == TropValue(0));
  CHECK(trop::dot(TV({"-inf", "-inf"}), TV({"5", "-2"})).is_neg_inf());
  CHECK(trop::dot(TV({"0", "-1", "-2", "-2"}), TV({"1", "1", "2", "3/2"})) == TropValue(1));
  CHECK(trop::dot({}, {}).is_neg_inf());
  CHECK_THROWS_AS(trop::dot(TV({"0"}), TV({"0", "1"})), std::invalid_argument);
}

TEST_CASE("tropical combination") {
  const auto x = TV({"2", "0"});
  CHECK(trop::combine(0, x, ninf, TV({"9", "9"})) == x);
  CHECK(trop::combine(0, TV({"0", "1"}), 0, TV({"1", "0"})) == TV({"1", "1"}));
  CHECK(trop::combine(-1, x, 0, TV({"0", "0"})) == TV({"1", "0"}));
  CHECK_THROWS_AS(trop::combine(-1, x, -1, x), std::invalid_argument);
  CHECK_THROWS_AS(trop::combine(0, x, 1, x), std::invalid_argument);
  CHECK_THROWS_AS(trop::combine(0, x, 0, TV({"0"})), std::invalid_argument);
}

TEST_CASE("entrywise order") {
  CHECK(trop::leq(TV({"-inf", "1"}), TV({"0", "1"})));
  CHECK_FALSE(trop::leq(TV({"1", "1"}), TV({"0", "2"})));
}

TEST_CASE("property: semifield axioms") {
  std::mt19937_64 rng(21);
  std::bernoulli_distribution bottom(0.2);
  auto draw = [&]() -> TropValue {
    if (bottom(rng)) return ninf;
    return testing::random_rational(rng, 20, 6);
  };
  for (int iter = 0; iter < 500; ++iter) {
    const TropValue a = draw(), b = draw(), c = draw();
    CHECK(trop::add(a, a) == a);
    CHECK(trop::add(a, b) == trop::add(b, a));
    CHECK(trop::add(trop::add(a, b), c) == trop::add(a, trop::add(b, c)));
    CHECK(trop::mul(a, b) == trop::mul(b, a));
    CHECK(trop::mul(trop::mul(a, b), c) == trop::mul(a, trop::mul(b, c)));
    CHECK(trop::mul(a, trop::add(b, c)) == trop::add(trop::mul(a, b), trop::mul(a, c)));
    CHECK(trop::add(a, ninf) == a);
    CHECK(trop::mul(a, 0) == a);
    CHECK(trop::mul(a, ninf).is_neg_inf());
  }
}

TEST_CASE("property: valuation of a scalar product of nonnegative vectors") {
  std::mt19937_64 rng(22);
  std::uniform_int_distribution<int> len(1, 5);
  std::bernoulli_distribution zero(0.15);
  for (int iter = 0; iter < 200; ++iter) {
    const int n = len(rng);
    std::vector<PuiseuxSeries> a(n), b(n);
    TropVector va(n), vb(n);
    for (int i = 0; i < n; ++i) {
      a[i] = zero(rng) ? PuiseuxSeries(0) : testing::random_positive(rng);
      b[i] = zero(rng) ? PuiseuxSeries(0) : testing::random_positive(rng);
      va[i] = a[i].valuation();
      vb[i] = b[i].valuation();
    }
    PuiseuxSeries s;
    for (int i = 0; i < n; ++i) s += a[i] * b[i];
    CHECK(trop::dot(va, vb) == s.valuation());
  }
}
