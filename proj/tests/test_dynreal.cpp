#include <gtest/gtest.h>

#include <algorithm>

#include "ordspace/ball.hpp"
#include "ordspace/dynreal.hpp"
#include "ordspace/error.hpp"

using namespace ordspace;

namespace {

const Group& f1_2() {
  static const Group g = Group::f1(2);
  return g;
}

std::vector<Element> words(const Group& g, std::initializer_list<const char*> ws) {
  std::vector<Element> out;
  for (const char* w : ws) out.push_back(eval_word(g, w));
  return out;
}

std::vector<Rational> coords(const RealizationMap& m) {
  std::vector<Rational> t;
  for (const auto& p : m.points) t.push_back(p.t);
  return t;
}

}  // namespace

TEST(Realize, PowersOfA) {
  const Ordering c1 = make_conrad_lex(f1_2(), {1, 1});
  RealizationMap m = realize(c1, words(f1_2(), {"id", "a", "a^2", "a^-1"}));
  EXPECT_EQ(coords(m), (std::vector<Rational>{0, 1, 2, -1}));
  EXPECT_TRUE(check_realization(m, c1).ok());
  RealizationMap n = realize(c1, words(f1_2(), {"id", "a", "a^-1", "a^2"}));
  EXPECT_EQ(coords(n), (std::vector<Rational>{0, 1, -1, 2}));
}

TEST(Realize, MidpointInsertion) {
  const Ordering c1 = make_conrad_lex(f1_2(), {1, 1});
  // Under C1, b a^-5 lies between a and b.
  RealizationMap m = realize(c1, words(f1_2(), {"id", "a", "b", "b a^-5"}));
  EXPECT_EQ(coords(m), (std::vector<Rational>{0, 1, 2, Rational(3) / 2}));
}

TEST(Realize, InjectedSwapIsCaught) {
  const Ordering c1 = make_conrad_lex(f1_2(), {1, 1});
  RealizationMap m = realize(c1, words(f1_2(), {"id", "a", "a^2", "a^-1"}));
  std::swap(m.points[1].t, m.points[2].t);
  RealizationReport r = check_realization(m, c1);
  EXPECT_FALSE(r.ok());
  EXPECT_FALSE(r.order_preserving);
  EXPECT_FALSE(r.violations.empty());
  RealizationMap n = realize(c1, words(f1_2(), {"id", "a"}));
  n.points[1].t = -1;
  RealizationReport s = check_realization(n, c1);
  EXPECT_FALSE(s.sign_recovery);
}

TEST(Realize, WholeBallPassesChecks) {
  for (const Ordering& o : {make_conrad_lex(f1_2(), {1, 1}), make_smirnov(f1_2(), OrderParam::above(11)),
                            make_reverse(make_smirnov(f1_2(), OrderParam::below(Rational(-1) / 2)))}) {
    Ball ball = build_ball(f1_2(), 4);
    RealizationMap m = realize(o, ball_enumeration(ball));
    ASSERT_EQ(m.points.size(), ball.size());
    EXPECT_TRUE(check_realization(m, o).ok());
  }
  const Group k = Group::klein();
  Ball kb = build_ball(k, 4);
  const Ordering t = make_tararin_lex(k, {-1, 1});
  EXPECT_TRUE(check_realization(realize(t, ball_enumeration(kb)), t).ok());
}

TEST(Realize, Errors) {
  const Ordering c1 = make_conrad_lex(f1_2(), {1, 1});
  EXPECT_THROW(realize(c1, words(f1_2(), {"a", "id"})), PreconditionError);
  EXPECT_THROW(realize(c1, {}), PreconditionError);
  EXPECT_THROW(realize(c1, words(f1_2(), {"id", "a", "b a b^-1 a^-1"})), DuplicateElementError);
  EXPECT_THROW(realize(c1, {f1_2().identity(), TowerElem{{1, 0}}}), WrongGroupError);
}

TEST(RealizeProperty, DeterministicAndRefining) {
  // Realizing a prefix gives the prefix of the full realization, and the
  // order of coordinates matches the ordering.
  const Ordering o = make_smirnov(f1_2(), OrderParam::below(3));
  Ball ball = build_ball(f1_2(), 4);
  const auto en = ball_enumeration(ball);
  RealizationMap full = realize(o, en);
  EXPECT_EQ(coords(full), coords(realize(o, en)));
  for (std::size_t len : {1u, 5u, 17u, 43u}) {
    RealizationMap part = realize(o, std::vector<Element>(en.begin(), en.begin() + static_cast<long>(len)));
    for (std::size_t i = 0; i < len; ++i) ASSERT_EQ(part.points[i].t, full.points[i].t);
  }
  for (std::size_t i = 0; i < full.points.size(); ++i) {
    for (std::size_t j = 0; j < full.points.size(); ++j) {
      ASSERT_EQ(o.less(full.points[i].elem, full.points[j].elem), full.points[i].t < full.points[j].t);
    }
  }
}
