#include "ordspace/json_io.hpp"

#include "ordspace/error.hpp"

namespace ordspace {

namespace {

[[noreturn]] void bad(const std::string& what) { throw InvalidDescriptorError(what); }

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) bad(std::string("missing field \"") + key + "\" in " + j.dump());
  return j.at(key);
}

Rational rational_of(const Json& j) {
  if (j.is_number_integer()) return Rational(j.get<std::int64_t>());
  if (j.is_string()) {
    try {
      return Rational::parse(j.get<std::string>());
    } catch (const Error& e) {
      bad(std::string("bad rational ") + j.dump() + ": " + e.what());
    }
  }
  bad("expected a rational, got " + j.dump());
}

std::int64_t int_of(const Json& j) {
  if (!j.is_number_integer()) bad("expected an integer, got " + j.dump());
  return j.get<std::int64_t>();
}

std::pair<int, int> pair_key(const std::string& key) {
  auto comma = key.find(',');
  try {
    if (comma == std::string::npos) throw std::invalid_argument(key);
    std::size_t p1 = 0, p2 = 0;
    int i = std::stoi(key.substr(0, comma), &p1);
    int j = std::stoi(key.substr(comma + 1), &p2);
    if (p1 != comma || p2 != key.size() - comma - 1) throw std::invalid_argument(key);
    return {i, j};
  } catch (const std::logic_error&) {
    bad("index key must look like \"i,j\", got \"" + key + "\"");
  }
}

std::string pair_string(const std::pair<int, int>& p) { return std::to_string(p.first) + "," + std::to_string(p.second); }

std::string kind_of(const Json& j) {
  const Json& k = field(j, "kind");
  if (!k.is_string()) bad("ordering kind must be a string");
  return k.get<std::string>();
}

int level_of(const Json& j) {
  if (!j.contains("level")) return 1;
  return static_cast<int>(int_of(j.at("level")));
}

template <class F>
auto wrap(F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const InvalidDescriptorError&) {
    throw;
  } catch (const Error& e) {
    bad(e.what());
  }
}

}  // namespace

Group parse_group(const Json& j) {
  const Json& fam = field(j, "family");
  if (!fam.is_string()) bad("group family must be a string");
  const std::string f = fam.get<std::string>();
  return wrap([&] {
    if (f == "f1") return Group::f1(rational_of(field(j, "r")));
    if (f == "bs13") return Group::bs13();
    if (f == "gn") return Group::gn(int_of(field(j, "n")));
    if (f == "tower") {
      std::map<std::pair<int, int>, int> signs;
      int n = 0;
      if (j.contains("signs")) {
        const Json& s = j.at("signs");
        if (!s.is_object()) bad("tower signs must be an object");
        for (const auto& [key, val] : s.items()) {
          auto p = pair_key(key);
          signs[p] = static_cast<int>(int_of(val));
          n = std::max(n, p.second);
        }
      }
      if (j.contains("n")) n = static_cast<int>(int_of(j.at("n")));
      return Group::tower(n, signs);
    }
    bad("unknown group family \"" + f + "\"");
  });
}

Json to_json(const Group& g) {
  switch (g.family()) {
    case Family::F1: {
      const auto& f = g.as_f1();
      return {{"family", "f1"}, {"r", (f.inverted ? f.r.inverse() : f.r).str()}};
    }
    case Family::Tower: {
      const auto& t = g.as_tower();
      Json signs = Json::object();
      for (int i = 1; i <= t.n; ++i)
        for (int k = i + 1; k <= t.n; ++k)
          if (t.sign(i, k) != 1) signs[pair_string({i, k})] = t.sign(i, k);
      return {{"family", "tower"}, {"n", t.n}, {"signs", signs}};
    }
    case Family::BS13:
      return {{"family", "bs13"}};
    case Family::Gn:
      return {{"family", "gn"}, {"n", g.as_gn().n}};
  }
  return nullptr;
}

OrderParam parse_param(const Json& j) {
  if (j.is_string()) {
    const auto s = j.get<std::string>();
    if (s == "+inf") return OrderParam::plus_infinity();
    if (s == "-inf") return OrderParam::minus_infinity();
    bad("parameter must be \"+inf\", \"-inf\" or an object, got \"" + s + "\"");
  }
  const Rational v = rational_of(field(j, "value"));
  std::string side = "above";
  if (j.contains("side")) {
    if (!j.at("side").is_string()) bad("side must be \"above\" or \"below\"");
    side = j.at("side").get<std::string>();
  }
  if (side == "above") return OrderParam::above(v);
  if (side == "below") return OrderParam::below(v);
  bad("side must be \"above\" or \"below\", got \"" + side + "\"");
}

Json to_json(const OrderParam& p) {
  switch (p.kind()) {
    case OrderParam::Kind::PlusInfinity: return "+inf";
    case OrderParam::Kind::MinusInfinity: return "-inf";
    case OrderParam::Kind::Finite: break;
  }
  return {{"value", p.value().str()}, {"side", p.side() == OrderParam::Side::Above ? "above" : "below"}};
}

Ordering parse_ordering(const Group& g, const Json& j) {
  const std::string kind = kind_of(j);
  return wrap([&]() -> Ordering {
    if (kind == "conrad" || kind == "tararin") {
      const Json& s = field(j, "signs");
      if (!s.is_array()) bad("signs must be an array");
      std::vector<int> signs;
      for (const auto& v : s) signs.push_back(static_cast<int>(int_of(v)));
      return kind == "conrad" ? make_conrad_lex(g, signs) : make_tararin_lex(g, signs);
    }
    if (kind == "smirnov") return make_smirnov(g, parse_param(field(j, "eps")));
    if (kind == "reverse") return make_reverse(parse_ordering(g, field(j, "of")));
    if (kind == "extension") {
      const int level = level_of(j);
      if (level < 1 || level >= g.series_length()) bad("extension level out of range");
      Ordering q = parse_ordering(g.quotient(level), field(j, "quotient"));
      return make_extension(q, parse_ordering(g, field(j, "sub")), level);
    }
    if (kind == "restrict") return restrict_order(parse_ordering(g, field(j, "of")), level_of(j));
    if (kind == "quotient") {
      const int level = level_of(j);
      Group parent = parse_group(field(j, "group"));
      Ordering q = make_quotient(parse_ordering(parent, field(j, "of")), level);
      if (!(q.group() == g)) bad("quotient ordering lives on " + q.group().str() + ", expected " + g.str());
      return q;
    }
    bad("unknown ordering kind \"" + kind + "\"");
  });
}

Json to_json(const Ordering& o) {
  using K = Ordering::Kind;
  switch (o.kind()) {
    case K::ConradLex: return {{"kind", "conrad"}, {"signs", o.signs()}};
    case K::TararinLex: return {{"kind", "tararin"}, {"signs", o.signs()}};
    case K::Smirnov: return {{"kind", "smirnov"}, {"eps", to_json(o.param())}};
    case K::Reverse: return {{"kind", "reverse"}, {"of", to_json(o.inner())}};
    case K::Extension:
      return {{"kind", "extension"},
              {"level", o.level()},
              {"quotient", to_json(o.quotient_part())},
              {"sub", to_json(o.sub_part())}};
    case K::Restrict: return {{"kind", "restrict"}, {"level", o.level()}, {"of", to_json(o.inner())}};
    case K::Quotient:
      return {{"kind", "quotient"}, {"level", o.level()}, {"group", to_json(o.inner().group())}, {"of", to_json(o.inner())}};
  }
  return nullptr;
}

SeriesDescriptor parse_series(const Json& j) {
  if (j.is_array()) {
    std::vector<Rational> cons;
    for (const auto& v : j) cons.push_back(rational_of(v));
    return series_from_consecutive(cons);
  }
  SeriesDescriptor d;
  d.n = static_cast<int>(int_of(field(j, "n")));
  if (j.contains("scalars")) {
    const Json& s = j.at("scalars");
    if (!s.is_object()) bad("scalars must be an object");
    for (const auto& [key, val] : s.items()) d.scalars[pair_key(key)] = rational_of(val);
  }
  return d;
}

Json to_json(const SeriesDescriptor& d) {
  Json s = Json::object();
  for (const auto& [ij, v] : d.scalars) s[pair_string(ij)] = v.str();
  return {{"n", d.n}, {"scalars", s}};
}

Json element_json(const Group& g, const Element& x) {
  g.require(x);
  switch (g.family()) {
    case Family::F1: {
      const auto& e = std::get<F1Elem>(x);
      return {{"k", g.as_f1().inverted ? -e.k : e.k}, {"s", e.s.str()}};
    }
    case Family::Tower:
      return {{"exps", std::get<TowerElem>(x).exps}};
    case Family::BS13: {
      const auto& m = std::get<BS13Elem>(x).map;
      return {{"k", slope_exponent(m)}, {"shift", m.shift().str()}};
    }
    case Family::Gn: {
      const auto& e = std::get<GnElem>(x);
      return {{"s", e.s.str()}, {"k", slope_exponent(e.g)}, {"shift", e.g.shift().str()}};
    }
  }
  return nullptr;
}

}  // namespace ordspace
