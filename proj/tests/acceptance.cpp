// End-to-end acceptance checks. Prints one PASS/FAIL line per criterion and
// exits non-zero if any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "ordspace/ball.hpp"
#include "ordspace/checks.hpp"
#include "ordspace/classify.hpp"
#include "ordspace/cli.hpp"
#include "ordspace/dynreal.hpp"
#include "ordspace/space.hpp"

using namespace ordspace;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;

  void require(bool ok, const std::string& what) {
    if (!ok && pass) {
      pass = false;
      detail = what;
    }
  }
};

std::string run_cli_line(std::vector<std::string> args, int* code = nullptr) {
  args.insert(args.begin(), "ordspace");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int rc = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  if (code) *code = rc;
  return out.str();
}

bool orderings_differ_on(const Ordering& x, const Ordering& y, const Ball& ball) {
  for (const auto& e : ball)
    if (x.sign(e.elem) != y.sign(e.elem)) return true;
  return false;
}

bool agree_on(const Ordering& x, const Ordering& y, const Ball& ball) { return !orderings_differ_on(x, y, ball); }

const Group& f1_2() {
  static const Group g = Group::f1(2);
  return g;
}

std::vector<Ordering> f1_conradian() {
  return {make_conrad_lex(f1_2(), {1, 1}), make_conrad_lex(f1_2(), {-1, 1}), make_conrad_lex(f1_2(), {-1, -1}),
          make_conrad_lex(f1_2(), {1, -1})};
}

Outcome tararin_count() {
  Outcome r;
  const std::string out = run_cli_line({"enum", "--group", R"({"family":"tower","n":2,"signs":{"1,2":-1}})", "--kind",
                                        "left"});
  std::istringstream in(out);
  int lines = 0;
  std::string last;
  for (std::string l; std::getline(in, l); ++lines) last = l;
  r.require(lines == 5, "enum printed " + std::to_string(lines) + " lines");
  r.require(last.find("\"count\":4") != std::string::npos && last.find("\"distinct\":true") != std::string::npos,
            "summary " + last);
  const Group k = Group::klein();
  auto os = enum_orderings(k, EnumKind::Left);
  r.require(os.size() == 4, "expected 4 orderings");
  Ball b2 = build_ball(k, 2), b5 = build_ball(k, 5);
  for (std::size_t i = 0; i < os.size(); ++i) {
    r.require(check_cone_axioms(b5, os[i].sign_fn()).ok(), "cone axioms fail for ordering " + std::to_string(i));
    for (std::size_t j = 0; j < i; ++j) r.require(orderings_differ_on(os[i], os[j], b2), "orderings coincide on ball(2)");
  }
  return r;
}

Outcome gn_count() {
  Outcome r;
  const Group g = Group::gn(2);
  const std::string out = run_cli_line({"enum", "--group", R"({"family":"gn","n":2})", "--kind", "conradian"});
  r.require(out.find("\"count\":8,\"distinct\":true") != std::string::npos, "enum summary mismatch");
  auto os = enum_orderings(g, EnumKind::Conradian);
  r.require(os.size() == 8, "expected 8 orderings");
  Ball b4 = build_ball(g, 4), b2 = build_ball(g, 2);
  for (std::size_t i = 0; i < os.size(); ++i) {
    r.require(check_conradian(b4, os[i].sign_fn()).ok(), "Conrad condition fails for ordering " + std::to_string(i));
    for (std::size_t j = 0; j < i; ++j) r.require(orderings_differ_on(os[i], os[j], b2), "orderings coincide");
  }
  return r;
}

Outcome four_c_orderings() {
  Outcome r;
  const auto cs = f1_conradian();
  const std::function<int(std::int64_t, const Rational&)> rules[] = {oracle::c1_sign, oracle::c2_sign, oracle::c3_sign,
                                                                     oracle::c4_sign};
  for (const auto& w : oracle::affine_ball(oracle::f1_letters(2), 6)) {
    auto [n, s] = oracle::f1_coords(w.map, 2);
    const Element x = F1Elem{n, s};
    for (int i = 0; i < 4; ++i) {
      r.require(static_cast<int>(cs[static_cast<std::size_t>(i)].sign(x)) == rules[i](n, s),
                "C" + std::to_string(i + 1) + " disagrees with its rule");
    }
  }
  r.require(agree_on(cs[2], make_reverse(cs[0]), build_ball(f1_2(), 6)), "C3 != Reverse(C1)");
  return r;
}

Outcome smirnov_convergence() {
  Outcome r;
  const Ordering c1 = make_conrad_lex(f1_2(), {1, 1});
  std::vector<OrderParam> ps;
  for (int e = 1; e <= 10; ++e) ps.push_back(OrderParam::above(Rational(1 << e)));
  auto rows = converge_experiment(f1_2(), ps, c1, 8);
  r.require(non_decreasing(rows), "converge table decreases");
  bool reached = false;
  for (const auto& row : rows) reached = reached || row.at_least() || *row.radius >= 6;
  r.require(reached, "never reached radius 6");

  const std::string out = run_cli_line({"dist", "--group", R"({"family":"f1","r":"2"})", "--o1",
                                        R"({"kind":"conrad","signs":[1,1]})", "--o2",
                                        R"({"kind":"smirnov","eps":{"value":"11","side":"above"}})", "--max-radius",
                                        "8"});
  r.require(out == "{\"agreement_radius\":6,\"dist\":\"1/64\",\"witness\":\"b^2 a^-3 b^-1\"}\n", "dist output " + out);

  // Independent recount over bare affine maps.
  int first = 0;
  std::string word;
  for (const auto& w : oracle::affine_ball(oracle::f1_letters(2), 8)) {
    auto [n, s] = oracle::f1_coords(w.map, 2);
    if (oracle::c1_sign(n, s) != oracle::smirnov_sign(w.map, 11, true)) {
      first = static_cast<int>(w.letters.size());
      break;
    }
  }
  r.require(first == 6, "brute force found radius " + std::to_string(first));
  return r;
}

Outcome non_isolation() {
  Outcome r;
  Ball ball = build_ball(f1_2(), 4);
  std::vector<Ordering> shapes = f1_conradian();
  const Ordering s11 = make_smirnov(f1_2(), OrderParam::above(11));
  const Ordering s0 = make_smirnov(f1_2(), OrderParam::below(0));
  shapes.insert(shapes.end(), {s11, s0, make_reverse(s11), make_reverse(s0)});
  std::size_t probes = 0;
  for (std::size_t i = 0; i < shapes.size(); ++i) {
    SweepReport s = probe_sweep(shapes[i], ball, 3);
    probes += s.probes;
    r.require(s.failures == 0, "shape " + std::to_string(i) + ": " + s.first_failure);
    r.require(s.isolated == 0, "shape " + std::to_string(i) + " reported isolated");
    r.require(s.neighbors == s.probes, "shape " + std::to_string(i) + " missed neighbours");
  }
  r.detail = r.pass ? std::to_string(probes) + " probes" : r.detail;
  return r;
}

Outcome tararin_isolation() {
  Outcome r;
  const Group k = Group::klein();
  auto os = enum_orderings(k, EnumKind::Left);
  Ball ball = build_ball(k, 2);
  std::size_t pinned = 0;
  for (std::size_t oi = 0; oi < os.size(); ++oi) {
    const Ordering& o = os[oi];
    std::vector<Element> pos;
    for (const auto& e : ball)
      if (o.sign(e.elem) == Sign::Positive) pos.push_back(e.elem);
    // All subsets of size <= 2 of the positive elements.
    std::vector<std::vector<Element>> sets{{}};
    for (std::size_t a = 0; a < pos.size(); ++a) {
      sets.push_back({pos[a]});
      for (std::size_t b = a + 1; b < pos.size(); ++b) sets.push_back({pos[a], pos[b]});
    }
    for (const auto& set : sets) {
      bool pins = true;
      for (std::size_t oj = 0; oj < os.size(); ++oj) {
        if (oj == oi) continue;
        bool keeps = true;
        for (const auto& x : set) keeps = keeps && os[oj].sign(x) == Sign::Positive;
        pins = pins && !keeps;
      }
      ProbeResult p = probe_neighborhood(o, set);
      if (pins) {
        ++pinned;
        r.require(p.isolated, "pinning set not reported isolated");
      } else {
        r.require(!p.isolated && p.neighbor && !(*p.neighbor == o), "free set reported isolated");
      }
    }
  }
  r.require(pinned > 0, "no pinning sets found");
  return r;
}

Outcome conradian_dichotomy() {
  Outcome r;
  const Ordering s0 = make_smirnov(f1_2(), OrderParam::above(0));
  Ball b4 = build_ball(f1_2(), 4);
  r.require(check_cofinal(b4, s0.sign_fn(), 64).all_bounded(), "Smirnov 0 not a-bounded");
  r.require(!check_conradian(b4, s0.sign_fn()).ok(), "Smirnov 0 passes Conrad's condition");
  const Ordering c1 = make_conrad_lex(f1_2(), {1, 1});
  Ball b5 = build_ball(f1_2(), 5);
  r.require(check_convex(b5, c1.sign_fn(), [](const Element& x) { return member_G1(f1_2(), x); }).convex(),
            "G_1 not convex under C1");
  r.require(check_conradian(b4, c1.sign_fn()).ok(), "C1 fails Conrad's condition");
  return r;
}

Outcome extension_round_trip() {
  Outcome r;
  auto check = [&](const Ordering& o, const Ball& ball) {
    const Ordering e = make_extension(quotient_order(o, 1, 4), restrict_order(o, 1), 1);
    r.require(agree_on(e, o, ball), "round trip differs on " + o.group().str());
  };
  Ball f = build_ball(f1_2(), 6);
  for (const auto& o : f1_conradian()) check(o, f);
  const Group g = Group::gn(2);
  Ball gb = build_ball(g, 6);
  for (const auto& o : enum_orderings(g, EnumKind::Conradian)) check(o, gb);
  return r;
}

Outcome gn_checks() {
  Outcome r;
  for (std::int64_t n : {1, 2, -2, 3}) {
    const Group g = Group::gn(n);
    r.require(eval_word(g, "b a b^-1") == eval_word(g, "a^-1"), "b a b^-1 != a^-1");
    r.require(eval_word(g, "c b c^-1") == eval_word(g, "b^3"), "c b c^-1 != b^3");
    r.require(eval_word(g, "c a c^-1") == g.generator_power(0, n), "c a c^-1 != a^n");
  }
  r.require(eval_word(Group::gn(1), "c a") == eval_word(Group::gn(1), "a c"), "c a != a c for n = 1");
  const Group m = Group::gn(-2);
  r.require(eval_word(m, "c b a b^-1 c^-1") == eval_word(m, "a^2"), "(cb) a (cb)^-1 != a^2 for n = -2");
  const Group g = Group::gn(2);
  const Ordering o = make_extension(make_smirnov(Group::bs13(), OrderParam::above(0)),
                                    restrict_order(make_conrad_lex(g, {1, 1, 1}), 1), 1);
  Ball b4 = build_ball(g, 4);
  r.require(check_convex(b4, o.sign_fn(), [&](const Element& x) { return member_Hnk(g, 0, x); }).convex(),
            "H(2,0) not convex");
  return r;
}

Outcome classification() {
  Outcome r;
  auto expect = [&](const std::string& series, const std::string& want) {
    const std::string out = run_cli_line({"classify", "--series", series});
    r.require(out == want + "\n", series + " gave " + out);
  };
  expect(R"(["-1"])", R"({"c_count":4,"lo_count":4,"verdict":"tararin"})");
  expect(R"(["2"])", R"({"c_count":4,"lo_count":"infinite","verdict":"finite_c_no_isolated"})");
  expect(R"({"n":3,"scalars":{"1,2":"-1","2,3":"3","1,3":"2"}})",
         R"({"c_count":8,"lo_count":"infinite","verdict":"finite_c_no_isolated"})");
  expect(R"(["1"])", R"({"c_count":"infinite","lo_count":"infinite","verdict":"infinite_c"})");
  r.require(to_string(verdict(descriptor_of(Group::gn(2)))) == std::string("finite_c_no_isolated"), "G(2) verdict");
  int code = 0;
  const std::string out = run_cli_line({"classify", "--series", R"({"n":3,"scalars":{"1,2":"2","2,3":"3"}})"}, &code);
  r.require(code == 1 && out.find("\"triple\":[1,2,3]") != std::string::npos && out.find("\"valid\":false") != std::string::npos,
            "invalid descriptor gave " + out);
  return r;
}

Outcome dynamical_realization() {
  Outcome r;
  const Ordering c1 = make_conrad_lex(f1_2(), {1, 1});
  Ball ball = build_ball(f1_2(), 4);
  RealizationReport rep = check_realization(realize(c1, ball_enumeration(ball)), c1);
  r.require(rep.order_preserving && rep.equivariant && rep.sign_recovery, "ball(4) realization fails");
  std::vector<Element> en;
  for (const char* w : {"id", "a", "a^2", "a^-1"}) en.push_back(eval_word(f1_2(), w));
  RealizationMap m = realize(c1, en);
  const std::vector<Rational> want{0, 1, 2, -1};
  for (std::size_t i = 0; i < want.size(); ++i) r.require(m.points[i].t == want[i], "worked example coordinates");
  return r;
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, Outcome (*)()>> criteria = {
      {"tararin count on the Klein tower", tararin_count},
      {"eight Conradian orderings of G(2)", gn_count},
      {"four C-orderings of F1", four_c_orderings},
      {"Smirnov orderings converge to C1", smirnov_convergence},
      {"no isolated points on F1", non_isolation},
      {"isolation on the Klein tower", tararin_isolation},
      {"Conradian dichotomy", conradian_dichotomy},
      {"extension round trip", extension_round_trip},
      {"G(n) relations and convexity", gn_checks},
      {"classification table", classification},
      {"dynamical realization", dynamical_realization},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail = std::string("exception: ") + e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("%s %2zu %s (%.2fs)%s%s\n", o.pass ? "PASS" : "FAIL", i + 1, criteria[i].first, secs,
                o.detail.empty() ? "" : ": ", o.detail.c_str());
    failed += !o.pass;
  }
  return failed == 0 ? 0 : 1;
}
