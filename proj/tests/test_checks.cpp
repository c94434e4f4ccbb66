#include <gtest/gtest.h>

#include "ordspace/ball.hpp"
#include "ordspace/checks.hpp"
#include "ordspace/ordering.hpp"

using namespace ordspace;

namespace {

const Group& f1_2() {
  static const Group g = Group::f1(2);
  return g;
}

Ordering c1() { return make_conrad_lex(f1_2(), {1, 1}); }
Ordering smirnov(const OrderParam& p) { return make_smirnov(f1_2(), p); }

void expect_same(const CheckReport& a, const CheckReport& b) {
  EXPECT_EQ(a.ok(), b.ok());
  ASSERT_EQ(a.violations.size(), b.violations.size());
  for (std::size_t i = 0; i < a.violations.size(); ++i) {
    EXPECT_EQ(a.violations[i].rule, b.violations[i].rule);
    EXPECT_EQ(a.violations[i].witness, b.violations[i].witness);
  }
}

}  // namespace

TEST(ConeAxioms, HoldForImplementedOrderings) {
  Ball ball = build_ball(f1_2(), 5);
  EXPECT_TRUE(check_cone_axioms(ball, c1().sign_fn()).ok());
  EXPECT_TRUE(check_cone_axioms(ball, smirnov(OrderParam::above(11)).sign_fn()).ok());
  EXPECT_TRUE(check_cone_axioms(ball, make_reverse(smirnov(OrderParam::below(Rational(-1) / 3))).sign_fn()).ok());
  Ball g2 = build_ball(Group::gn(2), 3);
  const Ordering o = make_extension(make_smirnov(Group::bs13(), OrderParam::above(0)),
                                    make_conrad_lex(Group::gn(2), {1, 1, 1}), 1);
  EXPECT_TRUE(check_cone_axioms(g2, o.sign_fn()).ok());
}

TEST(ConeAxioms, CatchInjectedFaults) {
  Ball ball = build_ball(f1_2(), 4);
  const Ordering o = c1();
  const Element a = eval_word(f1_2(), "a");
  // Flip a single element: a becomes negative while a^-1 stays negative.
  auto flipped = [&](const Element& x) { return x == a ? Sign::Negative : o.sign(x); };
  CheckReport r = check_cone_axioms(ball, flipped);
  ASSERT_FALSE(r.ok());
  EXPECT_EQ(r.violations[0].rule, "inverse_sign");
  auto zero = [&](const Element& x) { return x == a ? Sign::Zero : o.sign(x); };
  EXPECT_EQ(check_cone_axioms(ball, zero).violations.at(0).rule, "trichotomy");
  auto id_pos = [&](const Element& x) { return f1_2().is_identity(x) ? Sign::Positive : o.sign(x); };
  EXPECT_EQ(check_cone_axioms(ball, id_pos).violations.at(0).rule, "identity_not_zero");
  // Reversing G_1 inside C1 gives C4, still a cone.
  auto c4 = [&](const Element& x) {
    const auto& e = std::get<F1Elem>(x);
    return e.k != 0 ? sign_of(e.k > 0 ? 1 : -1) : sign_of(-e.s.sign());
  };
  EXPECT_TRUE(check_cone_axioms(ball, c4).ok());
  // Swapping the signs of b a^-1 and its inverse keeps antisymmetry but
  // (b a^-2) a = b a^-1 is now a negative product of positives.
  const Element g = eval_word(f1_2(), "b a^-1");
  const Element gi = f1_2().inverse(g);
  auto mixed = [&](const Element& x) { return x == g || x == gi ? negate(o.sign(x)) : o.sign(x); };
  CheckReport m = check_cone_axioms(ball, mixed);
  ASSERT_FALSE(m.ok());
  EXPECT_EQ(m.violations[0].rule, "closure");
}

TEST(ConeAxioms, SerialMatchesParallel) {
  Ball ball = build_ball(f1_2(), 4);
  const Ordering o = c1();
  const Element g = eval_word(f1_2(), "b a^-1");
  auto mixed = [&](const Element& x) { return x == g ? Sign::Negative : o.sign(x); };
  expect_same(check_cone_axioms(ball, mixed), serial::check_cone_axioms(ball, mixed));
  expect_same(check_cone_axioms(ball, o.sign_fn()), serial::check_cone_axioms(ball, o.sign_fn()));
}

TEST(Conradian, Examples) {
  Ball ball = build_ball(f1_2(), 4);
  EXPECT_TRUE(check_conradian(ball, c1().sign_fn()).ok());
  EXPECT_TRUE(check_conradian(ball, make_reverse(c1()).sign_fn()).ok());
  EXPECT_TRUE(check_conradian(ball, make_conrad_lex(f1_2(), {-1, 1}).sign_fn()).ok());
  CheckReport s0 = check_conradian(ball, smirnov(OrderParam::above(0)).sign_fn());
  EXPECT_FALSE(s0.ok());
  // Each reported pair really fails f g^2 > g.
  const Ordering o = smirnov(OrderParam::above(0));
  const Group& g = f1_2();
  for (const auto& v : s0.violations) {
    const Element& f = ball[v.witness[0]].elem;
    const Element& h = ball[v.witness[1]].elem;
    EXPECT_EQ(o.sign(f), Sign::Positive);
    EXPECT_EQ(o.sign(h), Sign::Positive);
    EXPECT_NE(o.sign(g.multiply(g.inverse(h), g.multiply(f, g.multiply(h, h)))), Sign::Positive);
  }
}

TEST(Conradian, SerialMatchesParallel) {
  Ball ball = build_ball(f1_2(), 3);
  for (const OrderParam& p : {OrderParam::above(0), OrderParam::below(5), OrderParam::plus_infinity()}) {
    expect_same(check_conradian(ball, smirnov(p).sign_fn()), serial::check_conradian(ball, smirnov(p).sign_fn()));
  }
}

TEST(Cofinal, Examples) {
  Ball ball = build_ball(f1_2(), 4);
  // Above 11 every dilation conjugate is trapped between powers of a, but the
  // exponents reach the hundreds.
  CofinalReport s = check_cofinal(ball, smirnov(OrderParam::above(11)).sign_fn(), 256);
  EXPECT_TRUE(s.all_bounded());
  CofinalReport c = check_cofinal(ball, c1().sign_fn(), 64);
  EXPECT_FALSE(c.all_bounded());
  const auto b = *ball.find(eval_word(f1_2(), "b"));
  EXPECT_FALSE(c.entries[b].upper.has_value());
  EXPECT_TRUE(c.entries[b].lower.has_value());
  EXPECT_TRUE(c.entries[0].bounded());
  EXPECT_EQ(c.bound, 64);
}

TEST(Cofinal, BracketsAreGenuine) {
  Ball ball = build_ball(f1_2(), 3);
  const Ordering o = smirnov(OrderParam::below(3));
  const Group& g = f1_2();
  CofinalReport r = check_cofinal(ball, o.sign_fn(), 64);
  ASSERT_EQ(r.entries.size(), ball.size());
  for (const auto& e : r.entries) {
    if (e.lower) EXPECT_TRUE(o.less(g.translation(*e.lower), ball[e.index].elem));
    if (e.upper) EXPECT_TRUE(o.less(ball[e.index].elem, g.translation(*e.upper)));
  }
}

TEST(CofinalProperty, ConradianOrStronglyCofinal) {
  // Non-Conradian Smirnov orderings have cofinal G_1; the Conradian ones do
  // not.
  Ball ball = build_ball(f1_2(), 3);
  Ball wide = build_ball(f1_2(), 5);
  for (int eps = -3; eps <= 3; ++eps) {
    for (bool above : {true, false}) {
      const Ordering o = smirnov(above ? OrderParam::above(eps) : OrderParam::below(eps));
      const bool conradian = check_conradian(wide, o.sign_fn()).ok();
      const bool cofinal = check_cofinal(ball, o.sign_fn(), 64).all_bounded();
      EXPECT_NE(conradian, cofinal) << eps << " " << above;
    }
  }
  for (const OrderParam& p : {OrderParam::plus_infinity(), OrderParam::minus_infinity()}) {
    EXPECT_TRUE(check_conradian(ball, smirnov(p).sign_fn()).ok());
    EXPECT_FALSE(check_cofinal(ball, smirnov(p).sign_fn(), 64).all_bounded());
  }
}

TEST(Cofinal, SerialMatchesParallel) {
  Ball ball = build_ball(f1_2(), 3);
  const auto sf = smirnov(OrderParam::above(2)).sign_fn();
  CofinalReport a = check_cofinal(ball, sf, 64), b = serial::check_cofinal(ball, sf, 64);
  ASSERT_EQ(a.entries.size(), b.entries.size());
  for (std::size_t i = 0; i < a.entries.size(); ++i) {
    EXPECT_EQ(a.entries[i].index, b.entries[i].index);
    EXPECT_EQ(a.entries[i].lower, b.entries[i].lower);
    EXPECT_EQ(a.entries[i].upper, b.entries[i].upper);
  }
}

TEST(Convexity, Examples) {
  const Group& g = f1_2();
  Ball ball = build_ball(g, 5);
  auto in_g1 = [&](const Element& x) { return member_G1(g, x); };
  ConvexityReport r = check_convex(ball, c1().sign_fn(), in_g1);
  EXPECT_TRUE(r.convex());
  EXPECT_GT(r.members, 1u);
  ConvexityReport s = check_convex(ball, smirnov(OrderParam::above(0)).sign_fn(), in_g1);
  ASSERT_FALSE(s.convex());
  const Ordering o = smirnov(OrderParam::above(0));
  const auto& w = *s.witness;
  EXPECT_TRUE(in_g1(ball[w[0]].elem));
  EXPECT_FALSE(in_g1(ball[w[1]].elem));
  EXPECT_TRUE(in_g1(ball[w[2]].elem));
  EXPECT_TRUE(o.less(ball[w[0]].elem, ball[w[1]].elem));
  EXPECT_TRUE(o.less(ball[w[1]].elem, ball[w[2]].elem));
  ConvexityReport t = serial::check_convex(ball, o.sign_fn(), in_g1);
  EXPECT_EQ(t.convex(), s.convex());
  EXPECT_EQ(t.members, s.members);
}
