#include "ordspace/groups.hpp"

#include <cctype>
#include <charconv>

#include "ordspace/error.hpp"

namespace ordspace {

namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

std::size_t mix(std::size_t h, std::size_t v) { return h ^ (v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2)); }

std::string format_power(const std::string& name, const Rational& e) {
  if (e.is_zero()) return {};
  if (e == 1) return name;
  if (e.is_integer()) return name + "^" + e.str();
  return name + "^{" + e.str() + "}";
}

std::string join_parts(const std::vector<std::string>& parts) {
  std::string out;
  for (const auto& p : parts) {
    if (p.empty()) continue;
    if (!out.empty()) out += ' ';
    out += p;
  }
  return out.empty() ? "id" : out;
}

void tower_right_multiply(const TowerGroup& t, std::vector<std::int64_t>& z, int j, std::int64_t e) {
  if (e == 0) return;
  if (e % 2 != 0) {
    for (int i = 1; i < j; ++i) {
      if (t.sign(i, j) < 0) z[static_cast<std::size_t>(i - 1)] = -z[static_cast<std::size_t>(i - 1)];
    }
  }
  z[static_cast<std::size_t>(j - 1)] += e;
}

AffineMap power_of_three(std::int64_t k) { return AffineMap::dilation(Rational(3).pow(k)); }

}  // namespace

std::size_t ElementHash::operator()(const Element& e) const {
  return std::visit(Overloaded{
                        [](const F1Elem& x) { return mix(std::hash<std::int64_t>{}(x.k), x.s.hash()); },
                        [](const TowerElem& x) {
                          std::size_t h = x.exps.size();
                          for (auto v : x.exps) h = mix(h, std::hash<std::int64_t>{}(v));
                          return h;
                        },
                        [](const BS13Elem& x) { return mix(x.map.slope().hash(), x.map.shift().hash()); },
                        [](const GnElem& x) {
                          return mix(mix(x.s.hash(), x.g.slope().hash()), x.g.shift().hash());
                        },
                    },
                    e);
}

Group::Group(Variant g) : g_(std::move(g)) {
  std::visit(Overloaded{
                 [&](const F1Group&) { names_ = {"a", "b"}; },
                 [&](const TowerGroup& t) {
                   for (int i = 1; i <= t.n; ++i) names_.push_back("a" + std::to_string(i));
                 },
                 [&](const BS13Group&) { names_ = {"b", "c"}; },
                 [&](const GnGroup&) { names_ = {"a", "b", "c"}; },
             },
             g_);
}

Group Group::f1(const Rational& r) {
  if (r.sign() <= 0 || r == 1) throw PreconditionError("F1 requires r > 0 and r != 1, got " + r.str());
  F1Group g;
  g.inverted = r < 1;
  g.r = g.inverted ? r.inverse() : r;
  g.m = g.r.num() * g.r.den();
  return Group(g);
}

Group Group::tower(int n, const std::map<std::pair<int, int>, int>& signs) {
  if (n < 1) throw PreconditionError("tower needs at least one level");
  TowerGroup t;
  t.n = n;
  t.sigma.assign(static_cast<std::size_t>(n * n), 0);
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) t.sigma[static_cast<std::size_t>((i - 1) * n + (j - 1))] = 1;
  for (const auto& [ij, s] : signs) {
    auto [i, j] = ij;
    if (!(1 <= i && i < j && j <= n)) {
      throw PreconditionError("tower sign index (" + std::to_string(i) + "," + std::to_string(j) + ") out of range");
    }
    if (s != 1 && s != -1) throw PreconditionError("tower signs must be +1 or -1");
    t.sigma[static_cast<std::size_t>((i - 1) * n + (j - 1))] = s;
  }
  return Group(t);
}

Group Group::bs13() { return Group(BS13Group{}); }

Group Group::gn(std::int64_t n) {
  if (n == 0) throw PreconditionError("G(n) requires n != 0");
  return Group(GnGroup{n});
}

Family Group::family() const { return static_cast<Family>(g_.index()); }

const F1Group& Group::as_f1() const {
  if (auto* p = std::get_if<F1Group>(&g_)) return *p;
  throw WrongGroupError("group " + str() + " is not of family f1");
}

const TowerGroup& Group::as_tower() const {
  if (auto* p = std::get_if<TowerGroup>(&g_)) return *p;
  throw WrongGroupError("group " + str() + " is not a tower");
}

const GnGroup& Group::as_gn() const {
  if (auto* p = std::get_if<GnGroup>(&g_)) return *p;
  throw WrongGroupError("group " + str() + " is not of family gn");
}

Element Group::identity() const {
  return std::visit(Overloaded{
                        [](const F1Group&) -> Element { return F1Elem{}; },
                        [](const TowerGroup& t) -> Element {
                          return TowerElem{std::vector<std::int64_t>(static_cast<std::size_t>(t.n), 0)};
                        },
                        [](const BS13Group&) -> Element { return BS13Elem{}; },
                        [](const GnGroup&) -> Element { return GnElem{}; },
                    },
                    g_);
}

bool Group::contains(const Element& x) const {
  if (x.index() != g_.index()) return false;
  if (auto* t = std::get_if<TowerGroup>(&g_)) {
    return std::get<TowerElem>(x).exps.size() == static_cast<std::size_t>(t->n);
  }
  return true;
}

void Group::require(const Element& x) const {
  if (!contains(x)) throw WrongGroupError("element does not belong to group " + str());
}

Element Group::multiply(const Element& x, const Element& y) const {
  require(x);
  require(y);
  return std::visit(
      Overloaded{
          [&](const F1Group& g) -> Element {
            const auto& a = std::get<F1Elem>(x);
            const auto& b = std::get<F1Elem>(y);
            return F1Elem{a.k + b.k, a.s * g.r.pow(-b.k) + b.s};
          },
          [&](const TowerGroup& t) -> Element {
            auto z = std::get<TowerElem>(x).exps;
            const auto& e = std::get<TowerElem>(y).exps;
            for (int j = t.n; j >= 1; --j) tower_right_multiply(t, z, j, e[static_cast<std::size_t>(j - 1)]);
            return TowerElem{std::move(z)};
          },
          [&](const BS13Group&) -> Element {
            return BS13Elem{compose(std::get<BS13Elem>(x).map, std::get<BS13Elem>(y).map)};
          },
          [&](const GnGroup& g) -> Element {
            const auto& a = std::get<GnElem>(x);
            const auto& b = std::get<GnElem>(y);
            return GnElem{a.s + chi(BS13Elem{a.g}, g.n) * b.s, compose(a.g, b.g)};
          },
      },
      g_);
}

Element Group::inverse(const Element& x) const {
  require(x);
  return std::visit(Overloaded{
                        [&](const F1Group& g) -> Element {
                          const auto& a = std::get<F1Elem>(x);
                          return F1Elem{-a.k, -(a.s * g.r.pow(a.k))};
                        },
                        [&](const TowerGroup& t) -> Element {
                          const auto& e = std::get<TowerElem>(x).exps;
                          std::vector<std::int64_t> z(e.size(), 0);
                          for (int j = 1; j <= t.n; ++j) tower_right_multiply(t, z, j, -e[static_cast<std::size_t>(j - 1)]);
                          return TowerElem{std::move(z)};
                        },
                        [&](const BS13Group&) -> Element { return BS13Elem{invert(std::get<BS13Elem>(x).map)}; },
                        [&](const GnGroup& g) -> Element {
                          const auto& a = std::get<GnElem>(x);
                          return GnElem{-(a.s / chi(BS13Elem{a.g}, g.n)), invert(a.g)};
                        },
                    },
                    g_);
}

Element Group::power(const Element& x, std::int64_t e) const {
  Element base = e < 0 ? inverse(x) : x;
  std::uint64_t n = e < 0 ? static_cast<std::uint64_t>(-e) : static_cast<std::uint64_t>(e);
  Element result = identity();
  while (n) {
    if (n & 1U) result = multiply(result, base);
    n >>= 1U;
    if (n) base = multiply(base, base);
  }
  return result;
}

Element Group::generator_power(int gen, std::int64_t e) const {
  if (gen < 0 || gen >= generator_count()) throw UnknownGeneratorError("generator index out of range");
  return std::visit(Overloaded{
                        [&](const F1Group& g) -> Element {
                          if (gen == 0) return F1Elem{0, Rational(e)};
                          return F1Elem{g.inverted ? -e : e, Rational(0)};
                        },
                        [&](const TowerGroup& t) -> Element {
                          std::vector<std::int64_t> z(static_cast<std::size_t>(t.n), 0);
                          z[static_cast<std::size_t>(gen)] = e;
                          return TowerElem{std::move(z)};
                        },
                        [&](const BS13Group&) -> Element {
                          if (gen == 0) return BS13Elem{AffineMap::translation(Rational(e))};
                          return BS13Elem{power_of_three(e)};
                        },
                        [&](const GnGroup&) -> Element {
                          if (gen == 0) return GnElem{Rational(e), AffineMap::identity()};
                          if (gen == 1) return GnElem{Rational(0), AffineMap::translation(Rational(e))};
                          return GnElem{Rational(0), power_of_three(e)};
                        },
                    },
                    g_);
}

int Group::series_length() const {
  return std::visit(Overloaded{
                        [](const F1Group&) { return 2; },
                        [](const TowerGroup& t) { return t.n; },
                        [](const BS13Group&) { return 2; },
                        [](const GnGroup&) { return 3; },
                    },
                    g_);
}

std::vector<int> Group::lex_signs(const Element& x) const {
  require(x);
  return std::visit(Overloaded{
                        [&](const F1Group&) {
                          const auto& a = std::get<F1Elem>(x);
                          return std::vector<int>{a.k > 0 ? 1 : (a.k < 0 ? -1 : 0), a.s.sign()};
                        },
                        [&](const TowerGroup&) {
                          const auto& e = std::get<TowerElem>(x).exps;
                          std::vector<int> out;
                          for (auto it = e.rbegin(); it != e.rend(); ++it) out.push_back(*it > 0 ? 1 : (*it < 0 ? -1 : 0));
                          return out;
                        },
                        [&](const BS13Group&) {
                          const auto& m = std::get<BS13Elem>(x).map;
                          return std::vector<int>{(m.slope() - Rational(1)).sign(), m.shift().sign()};
                        },
                        [&](const GnGroup&) {
                          const auto& a = std::get<GnElem>(x);
                          return std::vector<int>{(a.g.slope() - Rational(1)).sign(), a.g.shift().sign(), a.s.sign()};
                        },
                    },
                    g_);
}

bool Group::in_level(const Element& x, int level) const {
  require(x);
  if (level <= 0) return is_identity(x);
  if (level >= series_length()) return true;
  return std::visit(Overloaded{
                        [&](const F1Group&) { return std::get<F1Elem>(x).k == 0; },
                        [&](const TowerGroup& t) {
                          const auto& e = std::get<TowerElem>(x).exps;
                          for (int j = level; j < t.n; ++j)
                            if (e[static_cast<std::size_t>(j)] != 0) return false;
                          return true;
                        },
                        [&](const BS13Group&) { return std::get<BS13Elem>(x).map.slope() == 1; },
                        [&](const GnGroup&) {
                          const auto& a = std::get<GnElem>(x);
                          return level == 1 ? a.g.is_identity() : a.g.slope() == 1;
                        },
                    },
                    g_);
}

Group Group::quotient(int level) const {
  if (level < 1 || level >= series_length()) {
    throw PreconditionError("quotient level " + std::to_string(level) + " out of range for " + str());
  }
  return std::visit(Overloaded{
                        [&](const F1Group&) { return tower(1); },
                        [&](const TowerGroup& t) {
                          std::map<std::pair<int, int>, int> s;
                          for (int i = level + 1; i <= t.n; ++i)
                            for (int j = i + 1; j <= t.n; ++j) s[{i - level, j - level}] = t.sign(i, j);
                          return tower(t.n - level, s);
                        },
                        [&](const BS13Group&) { return tower(1); },
                        [&](const GnGroup&) { return level == 1 ? bs13() : tower(1); },
                    },
                    g_);
}

Element Group::project(const Element& x, int level) const {
  require(x);
  if (level < 1 || level >= series_length()) throw PreconditionError("projection level out of range");
  return std::visit(Overloaded{
                        [&](const F1Group&) -> Element { return TowerElem{{std::get<F1Elem>(x).k}}; },
                        [&](const TowerGroup&) -> Element {
                          const auto& e = std::get<TowerElem>(x).exps;
                          return TowerElem{std::vector<std::int64_t>(e.begin() + level, e.end())};
                        },
                        [&](const BS13Group&) -> Element {
                          return TowerElem{{slope_exponent(std::get<BS13Elem>(x).map)}};
                        },
                        [&](const GnGroup&) -> Element {
                          const auto& a = std::get<GnElem>(x);
                          if (level == 1) return BS13Elem{a.g};
                          return TowerElem{{slope_exponent(a.g)}};
                        },
                    },
                    g_);
}

Element Group::lift(const Element& q, int level) const {
  quotient(level).require(q);
  return std::visit(Overloaded{
                        [&](const F1Group&) -> Element { return F1Elem{std::get<TowerElem>(q).exps[0], Rational(0)}; },
                        [&](const TowerGroup& t) -> Element {
                          std::vector<std::int64_t> z(static_cast<std::size_t>(t.n), 0);
                          const auto& e = std::get<TowerElem>(q).exps;
                          std::copy(e.begin(), e.end(), z.begin() + level);
                          return TowerElem{std::move(z)};
                        },
                        [&](const BS13Group&) -> Element {
                          return BS13Elem{power_of_three(std::get<TowerElem>(q).exps[0])};
                        },
                        [&](const GnGroup&) -> Element {
                          if (level == 1) return GnElem{Rational(0), std::get<BS13Elem>(q).map};
                          return GnElem{Rational(0), power_of_three(std::get<TowerElem>(q).exps[0])};
                        },
                    },
                    g_);
}

bool Group::is_affine() const { return family() == Family::F1 || family() == Family::BS13; }

AffineMap Group::affine_image(const Element& x) const {
  require(x);
  if (auto* g = std::get_if<F1Group>(&g_)) {
    const auto& a = std::get<F1Elem>(x);
    Rational rk = g->r.pow(a.k);
    return AffineMap(rk, rk * a.s);
  }
  if (family() == Family::BS13) return std::get<BS13Elem>(x).map;
  throw UnsupportedError("group " + str() + " has no affine representation");
}

Element Group::translation(const Rational& t) const {
  if (family() == Family::F1) return F1Elem{0, t};
  if (family() == Family::BS13) return BS13Elem{AffineMap::translation(t)};
  throw UnsupportedError("group " + str() + " has no affine representation");
}

Element Group::dilation() const {
  if (family() == Family::F1) return F1Elem{1, Rational(0)};
  if (family() == Family::BS13) return BS13Elem{power_of_three(1)};
  throw UnsupportedError("group " + str() + " has no affine representation");
}

mpz_class Group::ring_base() const {
  return std::visit(Overloaded{
                        [](const F1Group& g) { return g.m; },
                        [](const TowerGroup&) { return mpz_class(1); },
                        [](const BS13Group&) { return mpz_class(3); },
                        [](const GnGroup& g) { return mpz_class(static_cast<long>(g.n < 0 ? -g.n : g.n)); },
                    },
                    g_);
}

Element Group::g1_generator() const {
  if (family() == Family::BS13) return generator_power(0, 1);
  return generator_power(0, 1);
}

std::string Group::element_string(const Element& x) const {
  require(x);
  return std::visit(
      Overloaded{
          [&](const F1Group& g) {
            const auto& a = std::get<F1Elem>(x);
            return join_parts({format_power("b", Rational(g.inverted ? -a.k : a.k)), format_power("a", a.s)});
          },
          [&](const TowerGroup& t) {
            const auto& e = std::get<TowerElem>(x).exps;
            std::vector<std::string> parts;
            for (int j = t.n; j >= 1; --j) parts.push_back(format_power(names_[static_cast<std::size_t>(j - 1)], Rational(e[static_cast<std::size_t>(j - 1)])));
            return join_parts(parts);
          },
          [&](const BS13Group&) {
            const auto& m = std::get<BS13Elem>(x).map;
            const auto k = slope_exponent(m);
            return join_parts({format_power("c", Rational(k)), format_power("b", m.shift() / m.slope())});
          },
          [&](const GnGroup&) {
            const auto& a = std::get<GnElem>(x);
            const auto k = slope_exponent(a.g);
            return join_parts({format_power("a", a.s), format_power("c", Rational(k)),
                               format_power("b", a.g.shift() / a.g.slope())});
          },
      },
      g_);
}

std::string Group::str() const {
  return std::visit(Overloaded{
                        [](const F1Group& g) { return "f1(r=" + (g.inverted ? g.r.inverse() : g.r).str() + ")"; },
                        [](const TowerGroup& t) {
                          std::string s = "tower(n=" + std::to_string(t.n);
                          for (int i = 1; i <= t.n; ++i)
                            for (int j = i + 1; j <= t.n; ++j)
                              if (t.sign(i, j) < 0) s += ", " + std::to_string(i) + "," + std::to_string(j) + ":-1";
                          return s + ")";
                        },
                        [](const BS13Group&) { return std::string("bs13"); },
                        [](const GnGroup& g) { return "gn(n=" + std::to_string(g.n) + ")"; },
                    },
                    g_);
}

std::int64_t slope_exponent(const AffineMap& m) {
  const mpz_class& num = m.slope().num();
  const mpz_class& den = m.slope().den();
  mpz_class rest;
  if (den == 1) {
    auto k = static_cast<std::int64_t>(mpz_remove(rest.get_mpz_t(), num.get_mpz_t(), mpz_class(3).get_mpz_t()));
    if (rest != 1) throw PreconditionError("slope " + m.slope().str() + " is not a power of 3");
    return k;
  }
  if (num != 1) throw PreconditionError("slope " + m.slope().str() + " is not a power of 3");
  auto k = static_cast<std::int64_t>(mpz_remove(rest.get_mpz_t(), den.get_mpz_t(), mpz_class(3).get_mpz_t()));
  if (rest != 1) throw PreconditionError("slope " + m.slope().str() + " is not a power of 3");
  return -k;
}

Rational chi(const BS13Elem& g, std::int64_t n) {
  if (n == 0) throw PreconditionError("chi requires n != 0");
  Rational v = Rational(n).pow(slope_exponent(g.map));
  return mpz_odd_p(g.map.shift().num().get_mpz_t()) ? -v : v;
}

bool member_G1(const Group& g, const Element& x) { return g.in_level(x, 1); }

bool member_Hnk(const Group& g, std::int64_t k, const Element& x) {
  g.as_gn();
  g.require(x);
  const Rational p = Rational(-3 * k) / Rational(2);
  return std::get<GnElem>(x).g.apply(p) == p;
}

// --- words -----------------------------------------------------------------

Word parse_word(const Group& g, std::string_view text) {
  Word w;
  std::size_t i = 0;
  while (i < text.size()) {
    if (std::isspace(static_cast<unsigned char>(text[i]))) {
      ++i;
      continue;
    }
    const std::size_t start = i;
    while (i < text.size() && !std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    std::string_view tok = text.substr(start, i - start);
    auto caret = tok.find('^');
    std::string_view name = tok.substr(0, caret);
    if (name.empty()) throw ParseError("missing generator name", start);
    for (std::size_t c = 0; c < name.size(); ++c) {
      if (!std::isalnum(static_cast<unsigned char>(name[c]))) throw ParseError("unexpected character", start + c);
    }
    std::int64_t exp = 1;
    if (caret != std::string_view::npos) {
      std::string_view digits = tok.substr(caret + 1);
      if (!digits.empty() && digits.front() == '+') digits.remove_prefix(1);
      const char* first = digits.data();
      const char* last = digits.data() + digits.size();
      auto [ptr, ec] = std::from_chars(first, last, exp);
      if (digits.empty() || ec != std::errc() || ptr != last) {
        throw ParseError("malformed exponent in '" + std::string(tok) + "'", start + caret + 1);
      }
    }
    if (name == "id" && caret == std::string_view::npos) continue;
    const auto& names = g.generator_names();
    int gen = -1;
    for (std::size_t k = 0; k < names.size(); ++k)
      if (names[k] == name) gen = static_cast<int>(k);
    if (gen < 0) {
      throw UnknownGeneratorError("unknown generator '" + std::string(name) + "' for group " + g.str() + " at position " +
                                  std::to_string(start));
    }
    w.push_back({gen, exp});
  }
  return w;
}

Element eval_word(const Group& g, const Word& w) {
  Element x = g.identity();
  for (const auto& l : w) x = g.multiply(x, g.generator_power(l.gen, l.exp));
  return x;
}

std::string word_string(const Group& g, const Word& w) {
  std::string out;
  for (const auto& l : w) {
    if (!out.empty()) out += ' ';
    out += g.generator_names()[static_cast<std::size_t>(l.gen)];
    if (l.exp != 1) out += "^" + std::to_string(l.exp);
  }
  return out;
}

}  // namespace ordspace
