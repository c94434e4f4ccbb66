#include "ordspace/ordering.hpp"

#include "ordspace/ball.hpp"
#include "ordspace/checks.hpp"
#include "ordspace/error.hpp"

namespace ordspace {

struct Ordering::Node {
  Kind kind;
  Group group;
  std::vector<int> signs;
  std::optional<OrderParam> param;
  std::vector<Ordering> children;
  int level = 0;
};

Ordering make_node(Ordering::Node n) { return Ordering(std::make_shared<const Ordering::Node>(std::move(n))); }

Ordering::Kind Ordering::kind() const { return node_->kind; }
const Group& Ordering::group() const { return node_->group; }

const std::vector<int>& Ordering::signs() const {
  if (kind() != Kind::ConradLex && kind() != Kind::TararinLex) throw PreconditionError("ordering has no sign vector");
  return node_->signs;
}

const OrderParam& Ordering::param() const {
  if (kind() != Kind::Smirnov) throw PreconditionError("ordering has no parameter");
  return *node_->param;
}

const Ordering& Ordering::inner() const {
  if (kind() != Kind::Reverse && kind() != Kind::Quotient && kind() != Kind::Restrict) {
    throw PreconditionError("ordering has no inner ordering");
  }
  return node_->children[0];
}

const Ordering& Ordering::quotient_part() const {
  if (kind() != Kind::Extension) throw PreconditionError("ordering is not an extension");
  return node_->children[0];
}

const Ordering& Ordering::sub_part() const {
  if (kind() != Kind::Extension) throw PreconditionError("ordering is not an extension");
  return node_->children[1];
}

int Ordering::level() const { return node_->level; }

Sign affine_sign(const AffineMap& phi, const OrderParam& eps) {
  if (phi.slope() == 1) return sign_of(phi.shift().sign());
  const Rational theta = phi.shift() / (Rational(1) - phi.slope());
  const Cmp c = eps.compare(theta);
  if (phi.slope() > 1) return c == Cmp::Greater ? Sign::Positive : Sign::Negative;
  return c == Cmp::Less ? Sign::Positive : Sign::Negative;
}

Sign Ordering::sign(const Element& x) const {
  const Node& n = *node_;
  switch (n.kind) {
    case Kind::ConradLex:
    case Kind::TararinLex: {
      auto coords = n.group.lex_signs(x);
      for (std::size_t i = 0; i < coords.size(); ++i) {
        if (coords[i] != 0) return sign_of(coords[i] * n.signs[i]);
      }
      return Sign::Zero;
    }
    case Kind::Smirnov:
      return affine_sign(n.group.affine_image(x), *n.param);
    case Kind::Reverse:
      return negate(n.children[0].sign(x));
    case Kind::Extension: {
      n.group.require(x);
      Sign q = n.children[0].sign(n.group.project(x, n.level));
      return q != Sign::Zero ? q : n.children[1].sign(x);
    }
    case Kind::Quotient:
      return n.children[0].sign(n.children[0].group().lift(x, n.level));
    case Kind::Restrict:
      if (!n.group.in_level(x, n.level)) {
        throw WrongGroupError("element lies outside the subgroup of level " + std::to_string(n.level));
      }
      return n.children[0].sign(x);
  }
  return Sign::Zero;
}

Cmp Ordering::compare(const Element& x, const Element& y) const {
  const Group& g = group();
  return static_cast<Cmp>(-static_cast<int>(sign(g.multiply(g.inverse(x), y))));
}

SignFn Ordering::sign_fn() const {
  return [o = *this](const Element& x) { return o.sign(x); };
}

bool operator==(const Ordering& a, const Ordering& b) {
  if (a.node_ == b.node_) return true;
  const auto& x = *a.node_;
  const auto& y = *b.node_;
  return x.kind == y.kind && x.group == y.group && x.signs == y.signs && x.param == y.param && x.level == y.level &&
         x.children == y.children;
}

namespace {

std::vector<int> checked_signs(const Group& g, std::vector<int> signs) {
  const auto want = static_cast<std::size_t>(g.series_length());
  if (signs.size() != want) {
    throw LengthMismatchError("sign vector has length " + std::to_string(signs.size()) + ", group " + g.str() +
                              " has series length " + std::to_string(want));
  }
  for (int s : signs) {
    if (s != 1 && s != -1) throw PreconditionError("lexicographic signs must be +1 or -1");
  }
  return signs;
}

void check_level(const Group& g, int level) {
  if (level < 1 || level >= g.series_length()) {
    throw PreconditionError("series level " + std::to_string(level) + " out of range for " + g.str());
  }
}

}  // namespace

Ordering make_conrad_lex(const Group& g, std::vector<int> signs) {
  return make_node({Ordering::Kind::ConradLex, g, checked_signs(g, std::move(signs)), std::nullopt, {}, 0});
}

Ordering make_tararin_lex(const Group& g, std::vector<int> signs) {
  if (g.family() != Family::Tower) throw UnsupportedError("Tararin orderings are defined on towers, not " + g.str());
  return make_node({Ordering::Kind::TararinLex, g, checked_signs(g, std::move(signs)), std::nullopt, {}, 0});
}

Ordering make_smirnov(const Group& g, OrderParam eps) {
  if (!g.is_affine()) throw UnsupportedError("Smirnov orderings need an affine action; " + g.str() + " has none");
  return make_node({Ordering::Kind::Smirnov, g, {}, std::move(eps), {}, 0});
}

Ordering make_reverse(const Ordering& o) { return make_node({Ordering::Kind::Reverse, o.group(), {}, std::nullopt, {o}, 0}); }

Ordering make_extension(const Ordering& quotient, const Ordering& sub, int level) {
  const Group& g = sub.group();
  check_level(g, level);
  if (!(quotient.group() == g.quotient(level))) {
    throw WrongGroupError("quotient ordering lives on " + quotient.group().str() + ", expected " +
                          g.quotient(level).str());
  }
  return make_node({Ordering::Kind::Extension, g, {}, std::nullopt, {quotient, sub}, level});
}

Ordering restrict_order(const Ordering& o, int level) {
  check_level(o.group(), level);
  return make_node({Ordering::Kind::Restrict, o.group(), {}, std::nullopt, {o}, level});
}

Ordering make_quotient(const Ordering& o, int level) {
  check_level(o.group(), level);
  return make_node({Ordering::Kind::Quotient, o.group().quotient(level), {}, std::nullopt, {o}, level});
}

Ordering quotient_order(const Ordering& o, int level, int radius) {
  check_level(o.group(), level);
  const Group& g = o.group();
  Ball ball = build_ball(g, radius, ball_cap_from_env());
  auto report = check_convex(ball, o.sign_fn(), [&](const Element& x) { return g.in_level(x, level); });
  if (report.witness) {
    const auto& w = *report.witness;
    throw NonConvexSubgroupError(ball.word(w[0]), ball.word(w[1]), ball.word(w[2]));
  }
  return make_quotient(o, level);
}

Rational affine_to_param(const Rational& alpha, const Rational& beta, const Rational& r) {
  if (alpha.is_zero()) throw DivisionByZeroError("affine_to_param: alpha must be nonzero");
  if (r == 1) throw DivisionByZeroError("affine_to_param: r must differ from 1");
  return beta / ((r - Rational(1)) * alpha);
}

}  // namespace ordspace
