#include "ordspace/checks.hpp"

#include <algorithm>

#include "ordspace/error.hpp"
#include "parallel.hpp"

namespace ordspace {

bool CofinalReport::all_bounded() const {
  return std::all_of(entries.begin(), entries.end(), [](const CofinalEntry& e) { return e.bounded(); });
}

namespace {

std::vector<std::size_t> positive_indices(const std::vector<Sign>& signs) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < signs.size(); ++i)
    if (signs[i] == Sign::Positive) out.push_back(i);
  return out;
}

// Search order for exponents: 0, then outward, trying `first` before -first.
std::vector<std::int64_t> outward(std::int64_t bound, int first) {
  std::vector<std::int64_t> out{0};
  for (std::int64_t n = 1; n <= bound; ++n) {
    out.push_back(first * n);
    out.push_back(-first * n);
  }
  return out;
}

}  // namespace

CheckReport check_cone_axioms(const Ball& ball, const SignFn& sign) {
  const Group& g = ball.group();
  const std::size_t n = ball.size();
  std::vector<Sign> s(n), sinv(n);
  detail::parallel_for(n, [&](std::size_t i) {
    s[i] = sign(ball[i].elem);
    sinv[i] = sign(g.inverse(ball[i].elem));
  });

  CheckReport report;
  report.checked = n;
  for (std::size_t i = 0; i < n; ++i) {
    const bool id = g.is_identity(ball[i].elem);
    if (id && s[i] != Sign::Zero) {
      report.violations.push_back({"identity_not_zero", {i}});
    } else if (!id && s[i] == Sign::Zero) {
      report.violations.push_back({"trichotomy", {i}});
    } else if (sinv[i] != negate(s[i])) {
      report.violations.push_back({"inverse_sign", {i}});
    }
    if (!report.ok()) return report;
  }

  const auto pos = positive_indices(s);
  constexpr std::size_t kNone = static_cast<std::size_t>(-1);
  std::vector<std::size_t> first_bad(pos.size(), kNone);
  detail::parallel_for(pos.size(), [&](std::size_t a) {
    const Element& x = ball[pos[a]].elem;
    for (std::size_t b = 0; b < pos.size(); ++b) {
      if (sign(g.multiply(x, ball[pos[b]].elem)) != Sign::Positive) {
        first_bad[a] = b;
        return;
      }
    }
  });
  report.checked += pos.size() * pos.size();
  for (std::size_t a = 0; a < pos.size(); ++a) {
    if (first_bad[a] != kNone) {
      report.violations.push_back({"closure", {pos[a], pos[first_bad[a]]}});
      break;
    }
  }
  return report;
}

CheckReport check_conradian(const Ball& ball, const SignFn& sign) {
  const Group& g = ball.group();
  const std::size_t n = ball.size();
  std::vector<Sign> s(n);
  detail::parallel_for(n, [&](std::size_t i) { s[i] = sign(ball[i].elem); });
  const auto pos = positive_indices(s);

  std::vector<Element> inv(pos.size()), sq(pos.size());
  detail::parallel_for(pos.size(), [&](std::size_t b) {
    inv[b] = g.inverse(ball[pos[b]].elem);
    sq[b] = g.multiply(ball[pos[b]].elem, ball[pos[b]].elem);
  });

  std::vector<std::vector<std::size_t>> bad(pos.size());
  detail::parallel_for(pos.size(), [&](std::size_t a) {
    const Element& f = ball[pos[a]].elem;
    for (std::size_t b = 0; b < pos.size(); ++b) {
      if (sign(g.multiply(inv[b], g.multiply(f, sq[b]))) != Sign::Positive) bad[a].push_back(b);
    }
  });

  CheckReport report;
  report.checked = pos.size() * pos.size();
  for (std::size_t a = 0; a < pos.size(); ++a)
    for (auto b : bad[a]) report.violations.push_back({"conradian", {pos[a], pos[b]}});
  return report;
}

CofinalReport check_cofinal(const Ball& ball, const SignFn& sign, std::int64_t bound) {
  if (bound < 0) throw PreconditionError("exponent bound must be nonnegative");
  const Group& g = ball.group();
  const Element a = g.g1_generator();
  // powers[bound + n] = a^n
  std::vector<Element> powers(static_cast<std::size_t>(2 * bound + 1));
  detail::parallel_for(powers.size(), [&](std::size_t i) {
    powers[i] = g.power(a, static_cast<std::int64_t>(i) - bound);
  });
  auto pw = [&](std::int64_t e) -> const Element& { return powers[static_cast<std::size_t>(e + bound)]; };
  const auto down = outward(bound, -1);
  const auto up = outward(bound, 1);

  CofinalReport report;
  report.bound = bound;
  report.entries.resize(ball.size());
  detail::parallel_for(ball.size(), [&](std::size_t i) {
    const Element& x = ball[i].elem;
    const Element xinv = g.inverse(x);
    CofinalEntry e;
    e.index = i;
    for (auto k : down) {
      if (sign(g.multiply(pw(-k), x)) == Sign::Positive) {
        e.lower = k;
        break;
      }
    }
    for (auto k : up) {
      if (sign(g.multiply(xinv, pw(k))) == Sign::Positive) {
        e.upper = k;
        break;
      }
    }
    report.entries[i] = e;
  });
  return report;
}

ConvexityReport check_convex(const Ball& ball, const SignFn& sign, const std::function<bool(const Element&)>& member) {
  const Group& g = ball.group();
  auto less = [&](const Element& x, const Element& y) { return sign(g.multiply(g.inverse(x), y)) == Sign::Positive; };

  ConvexityReport report;
  std::optional<std::size_t> lo, hi;
  for (std::size_t i = 0; i < ball.size(); ++i) {
    if (!member(ball[i].elem)) continue;
    ++report.members;
    if (!lo || less(ball[i].elem, ball[*lo].elem)) lo = i;
    if (!hi || less(ball[*hi].elem, ball[i].elem)) hi = i;
  }
  if (!lo) return report;

  constexpr std::size_t kNone = static_cast<std::size_t>(-1);
  std::vector<std::size_t> inside(ball.size(), kNone);
  detail::parallel_for(ball.size(), [&](std::size_t i) {
    const Element& x = ball[i].elem;
    if (!member(x) && less(ball[*lo].elem, x) && less(x, ball[*hi].elem)) inside[i] = i;
  });
  for (auto i : inside) {
    if (i != kNone) {
      report.witness = {*lo, i, *hi};
      break;
    }
  }
  return report;
}

namespace serial {

CheckReport check_cone_axioms(const Ball& ball, const SignFn& sign) {
  const Group& g = ball.group();
  CheckReport report;
  std::vector<std::size_t> pos;
  for (std::size_t i = 0; i < ball.size(); ++i) {
    const Element& x = ball[i].elem;
    const Sign s = sign(x);
    ++report.checked;
    if (g.is_identity(x) ? s != Sign::Zero : s == Sign::Zero) {
      report.violations.push_back({g.is_identity(x) ? "identity_not_zero" : "trichotomy", {i}});
      return report;
    }
    if (sign(g.inverse(x)) != negate(s)) {
      report.violations.push_back({"inverse_sign", {i}});
      return report;
    }
    if (s == Sign::Positive) pos.push_back(i);
  }
  for (auto i : pos) {
    for (auto j : pos) {
      ++report.checked;
      if (sign(g.multiply(ball[i].elem, ball[j].elem)) != Sign::Positive) {
        report.violations.push_back({"closure", {i, j}});
        return report;
      }
    }
  }
  return report;
}

CheckReport check_conradian(const Ball& ball, const SignFn& sign) {
  const Group& g = ball.group();
  CheckReport report;
  std::vector<std::size_t> pos;
  for (std::size_t i = 0; i < ball.size(); ++i)
    if (sign(ball[i].elem) == Sign::Positive) pos.push_back(i);
  for (auto i : pos) {
    for (auto j : pos) {
      ++report.checked;
      const Element& f = ball[i].elem;
      const Element& h = ball[j].elem;
      const Element fhh = g.multiply(g.multiply(f, h), h);
      // f h^2 > h
      if (sign(g.multiply(g.inverse(h), fhh)) != Sign::Positive) report.violations.push_back({"conradian", {i, j}});
    }
  }
  return report;
}

CofinalReport check_cofinal(const Ball& ball, const SignFn& sign, std::int64_t bound) {
  if (bound < 0) throw PreconditionError("exponent bound must be nonnegative");
  const Group& g = ball.group();
  const Element a = g.g1_generator();
  CofinalReport report;
  report.bound = bound;
  for (std::size_t i = 0; i < ball.size(); ++i) {
    const Element& x = ball[i].elem;
    CofinalEntry e;
    e.index = i;
    for (auto k : outward(bound, -1)) {
      if (sign(g.multiply(g.inverse(g.power(a, k)), x)) == Sign::Positive) {
        e.lower = k;
        break;
      }
    }
    for (auto k : outward(bound, 1)) {
      if (sign(g.multiply(g.inverse(x), g.power(a, k))) == Sign::Positive) {
        e.upper = k;
        break;
      }
    }
    report.entries.push_back(e);
  }
  return report;
}

ConvexityReport check_convex(const Ball& ball, const SignFn& sign, const std::function<bool(const Element&)>& member) {
  const Group& g = ball.group();
  std::vector<std::size_t> order(ball.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(), [&](std::size_t i, std::size_t j) {
    return sign(g.multiply(g.inverse(ball[i].elem), ball[j].elem)) == Sign::Positive;
  });

  ConvexityReport report;
  std::optional<std::size_t> first, last;  // positions in `order`
  for (std::size_t p = 0; p < order.size(); ++p) {
    if (!member(ball[order[p]].elem)) continue;
    ++report.members;
    if (!first) first = p;
    last = p;
  }
  if (!first) return report;
  std::optional<std::size_t> offender;
  for (std::size_t p = *first + 1; p < *last; ++p) {
    const std::size_t i = order[p];
    if (!member(ball[i].elem) && (!offender || i < *offender)) offender = i;
  }
  if (offender) report.witness = {order[*first], *offender, order[*last]};
  return report;
}

}  // namespace serial

}  // namespace ordspace
