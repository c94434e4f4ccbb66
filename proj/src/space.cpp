#include "ordspace/space.hpp"

#include <algorithm>

#include "ordspace/error.hpp"
#include "parallel.hpp"

namespace ordspace {

AgreementResult agreement_radius(const Ordering& o1, const Ordering& o2, const Ball& ball) {
  if (!(o1.group() == o2.group()) || !(o1.group() == ball.group())) {
    throw WrongGroupError("agreement radius needs orderings on the same group");
  }
  AgreementResult res;
  res.max_radius = ball.radius();
  std::vector<char> differ(ball.size(), 0);
  std::vector<char> pos1(ball.size(), 0);
  detail::parallel_for(ball.size(), [&](std::size_t i) {
    const Sign s1 = o1.sign(ball[i].elem);
    differ[i] = s1 != o2.sign(ball[i].elem);
    pos1[i] = s1 == Sign::Positive;
  });
  for (std::size_t i = 0; i < ball.size(); ++i) {
    if (!differ[i]) continue;
    const int len = ball[i].length();
    std::size_t pick = i;
    for (std::size_t j = i; j < ball.size() && ball[j].length() == len; ++j) {
      if (differ[j] && pos1[j]) {
        pick = j;
        break;
      }
    }
    res.radius = len;
    res.witness = pick;
    res.witness_word = ball.word(pick);
    break;
  }
  return res;
}

AgreementResult agreement_radius(const Ordering& o1, const Ordering& o2, int max_radius, std::size_t cap) {
  return agreement_radius(o1, o2, build_ball(o1.group(), max_radius, cap));
}

Distance dist(const AgreementResult& a) {
  const int n = a.radius.value_or(a.max_radius);
  return {Rational(2).pow(-n), a.at_least()};
}

std::vector<AgreementResult> converge_experiment(const Group& g, const std::vector<OrderParam>& params,
                                                 const Ordering& target, int max_radius, std::size_t cap) {
  Ball ball = build_ball(g, max_radius, cap);
  std::vector<AgreementResult> rows;
  rows.reserve(params.size());
  for (const auto& p : params) rows.push_back(agreement_radius(make_smirnov(g, p), target, ball));
  return rows;
}

bool non_decreasing(const std::vector<AgreementResult>& rows) {
  auto key = [](const AgreementResult& r) { return r.radius ? *r.radius : r.max_radius + 1; };
  for (std::size_t i = 1; i < rows.size(); ++i)
    if (key(rows[i]) < key(rows[i - 1])) return false;
  return true;
}

// --- probe --------------------------------------------------------------

namespace {

// o on an affine group as Smirnov(param), possibly reversed.
struct AffineForm {
  OrderParam param;
  bool reversed;
};

AffineForm lex_form(int top, int bottom) {
  if (bottom > 0) return {top > 0 ? OrderParam::plus_infinity() : OrderParam::minus_infinity(), false};
  return {top > 0 ? OrderParam::minus_infinity() : OrderParam::plus_infinity(), true};
}

Ordering gn_quotient(const Ordering& o);

AffineForm affine_form(const Ordering& o) {
  using K = Ordering::Kind;
  switch (o.kind()) {
    case K::Smirnov:
      return {o.param(), false};
    case K::Reverse: {
      AffineForm f = affine_form(o.inner());
      f.reversed = !f.reversed;
      return f;
    }
    case K::ConradLex:
    case K::TararinLex:
      return lex_form(o.signs()[0], o.signs()[1]);
    case K::Extension: {
      const Group& g = o.group();
      const Ordering& q = o.quotient_part();
      const int top = static_cast<int>(q.sign(q.group().generator_power(0, 1)));
      const int bottom = static_cast<int>(o.sub_part().sign(g.translation(Rational(1))));
      return lex_form(top, bottom);
    }
    case K::Quotient:
      if (o.inner().group().family() == Family::Gn && o.level() == 1) return affine_form(gn_quotient(o.inner()));
      break;
    case K::Restrict:
      break;
  }
  throw UnsupportedError("no neighbourhood probe for this ordering shape");
}

// The ordering induced on B(1,3) by an ordering of G(n) with G_1 convex.
Ordering gn_quotient(const Ordering& o) {
  using K = Ordering::Kind;
  switch (o.kind()) {
    case K::ConradLex:
      return make_conrad_lex(o.group().quotient(1), {o.signs()[0], o.signs()[1]});
    case K::Reverse:
      return make_reverse(gn_quotient(o.inner()));
    case K::Extension:
      if (o.level() == 1) return o.quotient_part();
      break;
    default:
      break;
  }
  throw UnsupportedError("cannot read off the B(1,3) quotient of this G(n) ordering");
}

std::string conjugate_word(const Group& g, const Rational& t, std::int64_t n) {
  const auto& names = g.generator_names();
  std::string trans = g.family() == Family::F1 ? names[0] : "b";
  std::string dil = g.family() == Family::F1 ? names[1] : "c";
  std::int64_t e = (g.family() == Family::F1 && g.as_f1().inverted) ? -n : n;
  auto pw = [](const std::string& name, const Rational& x) {
    if (x == 1) return name;
    return x.is_integer() ? name + "^" + x.str() : name + "^{" + x.str() + "}";
  };
  return pw(trans, t) + " " + pw(dil, Rational(e)) + " " + pw(trans, -t);
}

struct AffineProbe {
  OrderParam next;
  Element witness;
  std::string word;
};

// Moves a Smirnov parameter while keeping every map in `images` positive.
// `carrier` is F1 or B(1,3) and supplies translations and the dilation.
AffineProbe probe_affine(const Group& carrier, const OrderParam& p, const std::vector<AffineMap>& images,
                         const ProbeOptions& opts) {
  const mpz_class m = carrier.ring_base();
  std::optional<OrderParam> next;
  std::optional<Rational> t;

  switch (p.kind()) {
    case OrderParam::Kind::PlusInfinity: {
      Rational top(0);
      bool any = false;
      for (const auto& f : images) {
        if (f.slope() > 1) {
          Rational th = *f.fixed_point();
          if (!any || th > top) top = th;
          any = true;
        }
      }
      Rational e(top.floor() + 1, mpz_class(1));
      next = OrderParam::above(e);
      t = e + Rational(1);
      break;
    }
    case OrderParam::Kind::MinusInfinity: {
      Rational bottom(0);
      bool any = false;
      for (const auto& f : images) {
        if (f.slope() < 1) {
          Rational th = *f.fixed_point();
          if (!any || th < bottom) bottom = th;
          any = true;
        }
      }
      Rational e(bottom.ceil() - 1, mpz_class(1));
      next = OrderParam::above(e);
      t = e - Rational(1);
      break;
    }
    case OrderParam::Kind::Finite: {
      const Rational& v = p.value();
      const bool above = p.side() == OrderParam::Side::Above;
      // Nearest image of v (Above) or preimage (Below) among maps not fixing v.
      std::optional<Rational> edge;
      for (const auto& f : images) {
        Rational x = above ? f.apply(v) : invert(f).apply(v);
        if (x == v) continue;
        if (!edge || (above ? x < *edge : x > *edge)) edge = x;
      }
      const Rational e = midpoint(v, edge.value_or(above ? v + Rational(2) : v - Rational(2)));
      next = OrderParam::above(e);
      mpz_class md = 1;
      for (int d = 0; d <= opts.max_denominator_power; ++d, md *= m) {
        Rational scaled = v * Rational(md, mpz_class(1));
        Rational cand = above ? Rational(scaled.floor() + 1, md) : Rational(scaled.ceil() - 1, md);
        if (above ? cand < e : cand > e) {
          t = cand;
          break;
        }
      }
      if (!t) {
        throw BoundExhaustedError("no translation in (1/" + m.get_str() + "^" +
                                  std::to_string(opts.max_denominator_power) + ")Z between " + v.str() + " and " +
                                  e.str());
      }
      break;
    }
  }

  const Element shift = carrier.translation(*t);
  const Element back = carrier.translation(-*t);
  const Element d = carrier.dilation();
  for (int n = 1; n <= opts.max_exponent; ++n) {
    Element w = carrier.multiply(carrier.multiply(shift, carrier.power(d, n)), back);
    const AffineMap phi = carrier.affine_image(w);
    if (affine_sign(phi, p) != affine_sign(phi, *next)) return {*next, w, conjugate_word(carrier, *t, n)};
  }
  throw BoundExhaustedError("no conjugate witness with dilation exponent <= " + std::to_string(opts.max_exponent));
}

bool tararin_tower(const TowerGroup& t) {
  for (int i = 1; i < t.n; ++i)
    if (t.sign(i, i + 1) != -1) return false;
  return true;
}

ProbeResult probe_tower(const Ordering& o, const std::vector<Element>& positives) {
  const Group& g = o.group();
  const auto& t = g.as_tower();
  const int n = t.n;
  std::vector<int> current(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) current[static_cast<std::size_t>(i)] = static_cast<int>(o.sign(g.generator_power(n - 1 - i, 1)));
  const bool tararin = tararin_tower(t);
  auto lex = [&](std::vector<int> s) { return tararin ? make_tararin_lex(g, std::move(s)) : make_conrad_lex(g, std::move(s)); };
  for (const auto& x : positives) {
    if (lex(current).sign(x) != Sign::Positive) throw UnsupportedError("tower ordering is not lexicographic");
  }
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    std::vector<int> cand(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) cand[static_cast<std::size_t>(i)] = (mask >> (n - 1 - i)) & 1U ? -1 : 1;
    if (cand == current) continue;
    Ordering c = lex(cand);
    if (!std::all_of(positives.begin(), positives.end(), [&](const Element& x) { return c.sign(x) == Sign::Positive; })) {
      continue;
    }
    std::size_t i = 0;
    while (cand[i] == current[i]) ++i;
    const int gen = n - 1 - static_cast<int>(i);
    ProbeResult res;
    res.neighbor = c;
    res.witness = g.generator_power(gen, 1);
    res.witness_word = g.generator_names()[static_cast<std::size_t>(gen)];
    return res;
  }
  if (!tararin) throw UnsupportedError("all lexicographic orderings are pinned but the tower is not Tararin");
  ProbeResult res;
  res.isolated = true;
  return res;
}

ProbeResult probe_unverified(const Ordering& o, const std::vector<Element>& positives, const ProbeOptions& opts) {
  const Group& g = o.group();
  switch (g.family()) {
    case Family::Tower:
      return probe_tower(o, positives);
    case Family::F1:
    case Family::BS13: {
      const AffineForm f = affine_form(o);
      std::vector<AffineMap> images;
      for (const auto& x : positives) {
        AffineMap phi = g.affine_image(x);
        images.push_back(f.reversed ? invert(phi) : phi);
      }
      AffineProbe p = probe_affine(g, f.param, images, opts);
      Ordering next = make_smirnov(g, p.next);
      ProbeResult res;
      res.neighbor = f.reversed ? make_reverse(next) : next;
      res.witness = std::move(p.witness);
      res.witness_word = std::move(p.word);
      return res;
    }
    case Family::Gn: {
      const Ordering q = gn_quotient(o);
      const Group& b = q.group();
      const AffineForm f = affine_form(q);
      std::vector<AffineMap> images;
      for (const auto& x : positives) {
        Element y = g.project(x, 1);
        if (b.is_identity(y)) continue;
        AffineMap phi = b.affine_image(y);
        images.push_back(f.reversed ? invert(phi) : phi);
      }
      AffineProbe p = probe_affine(b, f.param, images, opts);
      Ordering qn = make_smirnov(b, p.next);
      if (f.reversed) qn = make_reverse(qn);
      const bool ext = o.kind() == Ordering::Kind::Extension && o.level() == 1;
      ProbeResult res;
      res.neighbor = make_extension(qn, ext ? o.sub_part() : restrict_order(o, 1), 1);
      res.witness = g.lift(p.witness, 1);
      res.witness_word = std::move(p.word);
      return res;
    }
  }
  throw UnsupportedError("unknown group family");
}

// Empty string when the answer checks out.
std::string verify_probe(const Ordering& o, const std::vector<Element>& positives, const ProbeResult& r) {
  if (r.isolated) return {};
  if (!r.neighbor || !r.witness) return "probe returned no neighbour";
  if (*r.neighbor == o) return "neighbour equals the probed ordering";
  for (const auto& x : positives) {
    if (r.neighbor->sign(x) != Sign::Positive) return "neighbour loses positive " + o.group().element_string(x);
  }
  if (o.sign(*r.witness) == r.neighbor->sign(*r.witness)) return "witness does not separate the orderings";
  return {};
}

}  // namespace

ProbeResult probe_neighborhood(const Ordering& o, const std::vector<Element>& positives, const ProbeOptions& opts) {
  for (const auto& x : positives) {
    if (o.sign(x) != Sign::Positive) {
      throw PreconditionError("element " + o.group().element_string(x) + " is not positive in the probed ordering");
    }
  }
  ProbeResult r = probe_unverified(o, positives, opts);
  if (auto bad = verify_probe(o, positives, r); !bad.empty()) throw BoundExhaustedError("probe failed: " + bad);
  return r;
}

namespace {

std::vector<std::vector<std::size_t>> subsets_starting_at(std::size_t first, std::size_t n, int max_subset) {
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> cur{first};
  // Depth-first over increasing index sequences.
  auto rec = [&](auto&& self) -> void {
    out.push_back(cur);
    if (static_cast<int>(cur.size()) >= max_subset) return;
    for (std::size_t j = cur.back() + 1; j < n; ++j) {
      cur.push_back(j);
      self(self);
      cur.pop_back();
    }
  };
  rec(rec);
  return out;
}

void record(SweepReport& rep, const Ordering& o, const std::vector<Element>& subset, const ProbeOptions& opts) {
  ++rep.probes;
  std::string bad;
  try {
    ProbeResult r = probe_neighborhood(o, subset, opts);
    if (r.isolated) ++rep.isolated;
    else ++rep.neighbors;
    return;
  } catch (const Error& e) {
    bad = e.what();
  }
  ++rep.failures;
  if (rep.first_failure.empty()) rep.first_failure = bad;
}

void merge(SweepReport& into, const SweepReport& part) {
  into.probes += part.probes;
  into.neighbors += part.neighbors;
  into.isolated += part.isolated;
  into.failures += part.failures;
  if (into.first_failure.empty()) into.first_failure = part.first_failure;
}

std::vector<Element> positives_of(const Ordering& o, const Ball& ball) {
  std::vector<Element> out;
  for (const auto& e : ball)
    if (o.sign(e.elem) == Sign::Positive) out.push_back(e.elem);
  return out;
}

}  // namespace

SweepReport probe_sweep(const Ordering& o, const Ball& ball, int max_subset, const ProbeOptions& opts) {
  const auto pos = positives_of(o, ball);
  SweepReport total;
  if (max_subset >= 0) record(total, o, {}, opts);
  if (max_subset <= 0) return total;
  std::vector<SweepReport> parts(pos.size());
  detail::parallel_for(pos.size(), [&](std::size_t i) {
    for (const auto& idx : subsets_starting_at(i, pos.size(), max_subset)) {
      std::vector<Element> subset;
      for (auto k : idx) subset.push_back(pos[k]);
      record(parts[i], o, subset, opts);
    }
  });
  for (const auto& p : parts) merge(total, p);
  return total;
}

namespace serial {

SweepReport probe_sweep(const Ordering& o, const Ball& ball, int max_subset, const ProbeOptions& opts) {
  const auto pos = positives_of(o, ball);
  SweepReport total;
  if (max_subset >= 0) record(total, o, {}, opts);
  for (std::size_t i = 0; i < pos.size() && max_subset >= 1; ++i) {
    record(total, o, {pos[i]}, opts);
    for (std::size_t j = i + 1; j < pos.size() && max_subset >= 2; ++j) {
      record(total, o, {pos[i], pos[j]}, opts);
      for (std::size_t k = j + 1; k < pos.size() && max_subset >= 3; ++k) record(total, o, {pos[i], pos[j], pos[k]}, opts);
    }
  }
  if (max_subset > 3) throw PreconditionError("serial probe sweep supports subsets of size <= 3");
  return total;
}

}  // namespace serial

}  // namespace ordspace
