#include "ordspace/cli.hpp"

#include <CLI11.hpp>

#include <functional>
#include <ostream>

#include "ordspace/ball.hpp"
#include "ordspace/checks.hpp"
#include "ordspace/classify.hpp"
#include "ordspace/dynreal.hpp"
#include "ordspace/error.hpp"
#include "ordspace/json_io.hpp"
#include "ordspace/space.hpp"

namespace ordspace {

namespace {

struct UsageError : std::runtime_error {
  UsageError(const std::string& flag, const std::string& what) : std::runtime_error(flag + ": " + what) {}
};

struct Flags {
  std::string group, word, x, y, order, o1, o2, target, series, kind, positives, params, words;
  int radius = 5;
  int max_radius = 5;
  std::int64_t exp_bound = 64;
};

Json flag_json(const std::string& flag, const std::string& text) {
  if (text.empty()) throw UsageError(flag, "required");
  try {
    return Json::parse(text);
  } catch (const Json::exception& e) {
    throw UsageError(flag, std::string("malformed JSON: ") + e.what());
  }
}

template <class F>
auto as_usage(const std::string& flag, F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const InvalidDescriptorError& e) {
    throw UsageError(flag, e.what());
  } catch (const ParseError& e) {
    throw UsageError(flag, e.what());
  } catch (const UnknownGeneratorError& e) {
    throw UsageError(flag, e.what());
  }
}

Group group_flag(const Flags& f) {
  return as_usage("--group", [&] { return parse_group(flag_json("--group", f.group)); });
}

Ordering ordering_flag(const Group& g, const std::string& flag, const std::string& text) {
  return as_usage(flag, [&] { return parse_ordering(g, flag_json(flag, text)); });
}

Element word_flag(const Group& g, const std::string& flag, const std::string& text) {
  if (text.empty()) throw UsageError(flag, "required (use \"id\" for the identity)");
  return as_usage(flag, [&] { return eval_word(g, std::string_view(text)); });
}

std::vector<Element> word_list_flag(const Group& g, const std::string& flag, const std::string& text) {
  Json j = flag_json(flag, text);
  if (!j.is_array()) throw UsageError(flag, "expected a JSON array of words");
  std::vector<Element> out;
  for (const auto& w : j) {
    if (!w.is_string()) throw UsageError(flag, "expected a JSON array of words");
    out.push_back(word_flag(g, flag, w.get<std::string>()));
  }
  return out;
}

Json words_json(const Ball& ball, const std::vector<std::size_t>& idx) {
  Json a = Json::array();
  for (auto i : idx) a.push_back(ball.word(i));
  return a;
}

Json agreement_json(const AgreementResult& a) {
  Json j;
  if (a.radius) j["agreement_radius"] = *a.radius;
  else j["agreement_radius"] = {{"at_least", a.max_radius}};
  j["dist"] = dist(a).str();
  j["witness"] = a.witness ? Json(a.witness_word) : Json(nullptr);
  return j;
}

void emit(std::ostream& out, const Json& j) { out << j.dump() << '\n'; }

// --- commands -------------------------------------------------------------

int cmd_nf(const Flags& f, std::ostream& out) {
  Group g = group_flag(f);
  emit(out, element_json(g, word_flag(g, "--word", f.word)));
  return 0;
}

int cmd_cmp(const Flags& f, std::ostream& out) {
  Group g = group_flag(f);
  Ordering o = ordering_flag(g, "--order", f.order);
  Cmp c = o.compare(word_flag(g, "--x", f.x), word_flag(g, "--y", f.y));
  emit(out, {{"cmp", to_string(c)}});
  return 0;
}

int cmd_sign(const Flags& f, std::ostream& out) {
  Group g = group_flag(f);
  Ordering o = ordering_flag(g, "--order", f.order);
  emit(out, {{"sign", to_string(o.sign(word_flag(g, "--word", f.word)))}});
  return 0;
}

int cmd_ball(const Flags& f, std::ostream& out) {
  Group g = group_flag(f);
  Ball ball = build_ball(g, f.radius, ball_cap_from_env());
  for (std::size_t i = 0; i < ball.size(); ++i) {
    emit(out, {{"length", ball[i].length()}, {"word", ball.word(i)}, {"nf", g.element_string(ball[i].elem)}});
  }
  emit(out, {{"radius", f.radius}, {"size", ball.size()}});
  return 0;
}

int cmd_enum(const Flags& f, std::ostream& out) {
  Group g = group_flag(f);
  EnumKind kind;
  if (f.kind == "left") kind = EnumKind::Left;
  else if (f.kind == "conradian") kind = EnumKind::Conradian;
  else throw UsageError("--kind", "expected \"left\" or \"conradian\", got \"" + f.kind + "\"");
  auto orders = enum_orderings(g, kind);
  for (std::size_t i = 0; i < orders.size(); ++i) emit(out, {{"index", i}, {"ordering", to_json(orders[i])}});

  Ball ball = build_ball(g, 2, ball_cap_from_env());
  Json wit = Json::array();
  bool distinct = true;
  for (std::size_t i = 0; i < orders.size(); ++i) {
    for (std::size_t j = i + 1; j < orders.size(); ++j) {
      std::optional<std::size_t> w;
      for (std::size_t k = 0; k < ball.size() && !w; ++k)
        if (orders[i].sign(ball[k].elem) != orders[j].sign(ball[k].elem)) w = k;
      if (!w) distinct = false;
      wit.push_back({{"i", i}, {"j", j}, {"word", w ? Json(ball.word(*w)) : Json(nullptr)}});
    }
  }
  emit(out, {{"count", orders.size()}, {"distinct", distinct}, {"witnesses", wit}});
  return 0;
}

int cmd_check(const Flags& f, std::ostream& out) {
  Group g = group_flag(f);
  Ordering o = ordering_flag(g, "--order", f.order);
  Ball ball = build_ball(g, f.radius, ball_cap_from_env());
  CheckReport r = check_cone_axioms(ball, o.sign_fn());
  Json v = nullptr;
  if (!r.ok()) v = {{"rule", r.violations[0].rule}, {"witness", words_json(ball, r.violations[0].witness)}};
  emit(out, {{"checked", r.checked}, {"ok", r.ok()}, {"radius", f.radius}, {"violation", v}});
  return 0;
}

int cmd_conradian(const Flags& f, std::ostream& out) {
  Group g = group_flag(f);
  Ordering o = ordering_flag(g, "--order", f.order);
  Ball ball = build_ball(g, f.radius, ball_cap_from_env());
  CheckReport r = check_conradian(ball, o.sign_fn());
  Json vs = Json::array();
  for (const auto& v : r.violations) vs.push_back({{"f", ball.word(v.witness[0])}, {"g", ball.word(v.witness[1])}});
  emit(out, {{"checked", r.checked}, {"ok", r.ok()}, {"radius", f.radius}, {"violations", vs}});
  return 0;
}

int cmd_cofinal(const Flags& f, std::ostream& out) {
  Group g = group_flag(f);
  Ordering o = ordering_flag(g, "--order", f.order);
  Ball ball = build_ball(g, f.radius, ball_cap_from_env());
  CofinalReport r = check_cofinal(ball, o.sign_fn(), f.exp_bound);
  for (const auto& e : r.entries) {
    Json j = {{"word", ball.word(e.index)}, {"status", e.bounded() ? "bounded" : "not_found_up_to_bound"}};
    j["n1"] = e.lower ? Json(*e.lower) : Json(nullptr);
    j["n2"] = e.upper ? Json(*e.upper) : Json(nullptr);
    emit(out, j);
  }
  emit(out, {{"all_bounded", r.all_bounded()}, {"bound", f.exp_bound}, {"elements", r.entries.size()}});
  return 0;
}

int cmd_dist(const Flags& f, std::ostream& out) {
  Group g = group_flag(f);
  Ordering o1 = ordering_flag(g, "--o1", f.o1);
  Ordering o2 = ordering_flag(g, "--o2", f.o2);
  emit(out, agreement_json(agreement_radius(o1, o2, f.max_radius, ball_cap_from_env())));
  return 0;
}

int cmd_converge(const Flags& f, std::ostream& out) {
  Group g = group_flag(f);
  Ordering target = ordering_flag(g, "--target", f.target);
  Json pj = flag_json("--params", f.params);
  if (!pj.is_array()) throw UsageError("--params", "expected a JSON array of parameters");
  std::vector<OrderParam> params;
  for (const auto& p : pj) params.push_back(as_usage("--params", [&] { return parse_param(p); }));
  auto rows = converge_experiment(g, params, target, f.max_radius, ball_cap_from_env());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    Json j = agreement_json(rows[i]);
    j["eps"] = to_json(params[i]);
    emit(out, j);
  }
  emit(out, {{"non_decreasing", non_decreasing(rows)}, {"rows", rows.size()}});
  return 0;
}

int cmd_probe(const Flags& f, std::ostream& out) {
  Group g = group_flag(f);
  Ordering o = ordering_flag(g, "--order", f.order);
  auto pos = word_list_flag(g, "--positives", f.positives.empty() ? "[]" : f.positives);
  ProbeResult r = probe_neighborhood(o, pos);
  if (r.isolated) {
    emit(out, {{"isolated", true}});
  } else {
    emit(out, {{"isolated", false}, {"neighbor", to_json(*r.neighbor)}, {"witness", r.witness_word}});
  }
  return 0;
}

int cmd_dynreal(const Flags& f, std::ostream& out) {
  Group g = group_flag(f);
  Ordering o = ordering_flag(g, "--order", f.order);
  std::vector<Element> en;
  std::vector<std::string> names;
  if (!f.words.empty()) {
    en = word_list_flag(g, "--words", f.words);
    for (const auto& x : en) names.push_back(g.element_string(x));
  } else {
    Ball ball = build_ball(g, f.radius, ball_cap_from_env());
    en = ball_enumeration(ball);
    for (std::size_t i = 0; i < ball.size(); ++i) names.push_back(ball.word(i));
  }
  RealizationMap map = realize(o, en);
  for (std::size_t i = 0; i < map.points.size(); ++i) emit(out, {{"word", names[i]}, {"t", map.points[i].t.str()}});
  RealizationReport r = check_realization(map, o);
  emit(out, {{"equivariant", r.equivariant},
             {"order_preserving", r.order_preserving},
             {"sign_recovery", r.sign_recovery},
             {"violations", r.violations}});
  return r.ok() ? 0 : 1;
}

int cmd_classify(const Flags& f, std::ostream& out) {
  SeriesDescriptor d = as_usage("--series", [&] { return parse_series(flag_json("--series", f.series)); });
  SeriesValidation v = validate_series(d);
  if (!v.valid) {
    Json j = {{"valid", false}, {"reason", v.reason}};
    j["triple"] = v.triple ? Json(*v.triple) : Json(nullptr);
    emit(out, j);
    return 1;
  }
  auto count = [](const OrderingCount& c) { return c ? Json(*c) : Json("infinite"); };
  emit(out, {{"c_count", count(count_c_orderings(d))},
             {"lo_count", count(count_left_orderings(d))},
             {"verdict", to_string(verdict(d))}});
  return 0;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Left-orderings of groups with a rational series", "ordspace"};
  app.require_subcommand(1, 1);
  Flags f;

  struct Cmd {
    const char* name;
    const char* help;
    std::function<int(const Flags&, std::ostream&)> fn;
    std::vector<std::string> flags;
  };
  const std::vector<Cmd> cmds = {
      {"nf", "normal form of a word", cmd_nf, {"group", "word"}},
      {"cmp", "compare two words", cmd_cmp, {"group", "order", "x", "y"}},
      {"sign", "sign of a word", cmd_sign, {"group", "order", "word"}},
      {"ball", "list the ball of a radius", cmd_ball, {"group", "radius"}},
      {"enum", "enumerate a finite family of orderings", cmd_enum, {"group", "kind"}},
      {"check", "positive cone axioms on a ball", cmd_check, {"group", "order", "radius"}},
      {"conradian", "Conrad's condition on a ball", cmd_conradian, {"group", "order", "radius"}},
      {"cofinal", "bracket ball elements by powers of the bottom generator", cmd_cofinal,
       {"group", "order", "radius", "exp-bound"}},
      {"dist", "distance between two orderings", cmd_dist, {"group", "o1", "o2", "max-radius"}},
      {"converge", "agreement radii of Smirnov orderings with a target", cmd_converge,
       {"group", "params", "target", "max-radius"}},
      {"probe", "find a nearby ordering keeping given elements positive", cmd_probe, {"group", "order", "positives"}},
      {"dynreal", "dynamical realization on a finite enumeration", cmd_dynreal, {"group", "order", "words", "radius"}},
      {"classify", "counts and verdict for a series descriptor", cmd_classify, {"series"}},
  };

  const std::map<std::string, std::pair<std::string*, const char*>> text_flags = {
      {"group", {&f.group, "group descriptor (JSON)"}},
      {"word", {&f.word, "word, e.g. \"b a^-5\""}},
      {"x", {&f.x, "left word"}},
      {"y", {&f.y, "right word"}},
      {"order", {&f.order, "ordering descriptor (JSON)"}},
      {"o1", {&f.o1, "first ordering (JSON)"}},
      {"o2", {&f.o2, "second ordering (JSON)"}},
      {"target", {&f.target, "target ordering (JSON)"}},
      {"series", {&f.series, "series descriptor (JSON object or array of scalars)"}},
      {"kind", {&f.kind, "left or conradian"}},
      {"positives", {&f.positives, "JSON array of words"}},
      {"params", {&f.params, "JSON array of parameters"}},
      {"words", {&f.words, "JSON array of words, starting with \"id\""}},
  };

  std::vector<std::pair<CLI::App*, const Cmd*>> subs;
  for (const auto& c : cmds) {
    CLI::App* sub = app.add_subcommand(c.name, c.help);
    for (const auto& name : c.flags) {
      if (auto it = text_flags.find(name); it != text_flags.end()) {
        sub->add_option("--" + name, *it->second.first, it->second.second);
      } else if (name == "radius") {
        sub->add_option("--radius", f.radius, "ball radius")->capture_default_str()->check(CLI::NonNegativeNumber);
      } else if (name == "max-radius") {
        sub->add_option("--max-radius", f.max_radius, "largest radius examined")
            ->capture_default_str()
            ->check(CLI::NonNegativeNumber);
      } else if (name == "exp-bound") {
        sub->add_option("--exp-bound", f.exp_bound, "exponent search bound")
            ->capture_default_str()
            ->check(CLI::NonNegativeNumber);
      }
    }
    subs.emplace_back(sub, &c);
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << '\n';
    return 2;
  }

  for (const auto& [sub, cmd] : subs) {
    if (!sub->parsed()) continue;
    try {
      return cmd->fn(f, out);
    } catch (const UsageError& e) {
      err << "usage error: " << e.what() << '\n';
      return 2;
    } catch (const Error& e) {
      err << "error: " << e.what() << '\n';
      return 1;
    }
  }
  return 2;
}

}  // namespace ordspace
