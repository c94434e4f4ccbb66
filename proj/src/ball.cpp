#include "ordspace/ball.hpp"

#include <cstdlib>

#include "ordspace/error.hpp"

namespace ordspace {

std::size_t ball_cap_from_env() {
  const char* v = std::getenv("ORDSPACE_BALL_CAP");
  if (v == nullptr || *v == '\0') return kDefaultBallCap;
  char* end = nullptr;
  unsigned long long cap = std::strtoull(v, &end, 10);
  if (*end != '\0' || cap == 0) throw PreconditionError(std::string("invalid ORDSPACE_BALL_CAP value '") + v + "'");
  return static_cast<std::size_t>(cap);
}

Ball::Ball(Group group, int radius, std::vector<BallEntry> entries)
    : group_(std::move(group)), radius_(radius), entries_(std::move(entries)) {
  index_.reserve(entries_.size());
  for (std::size_t i = 0; i < entries_.size(); ++i) index_.emplace(entries_[i].elem, i);
}

std::optional<std::size_t> Ball::find(const Element& x) const {
  auto it = index_.find(x);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::size_t Ball::prefix_size(int len) const {
  std::size_t lo = 0, hi = entries_.size();
  while (lo < hi) {
    std::size_t mid = (lo + hi) / 2;
    if (entries_[mid].length() <= len) lo = mid + 1;
    else hi = mid;
  }
  return lo;
}

std::string Ball::word(std::size_t i) const {
  const auto& l = entries_[i].letters;
  return l.empty() ? "id" : letters_string(group_, l);
}

Word letters_to_word(const LetterSeq& letters) {
  Word w;
  for (auto l : letters) {
    int gen = l / 2;
    std::int64_t e = (l % 2) ? -1 : 1;
    if (!w.empty() && w.back().gen == gen) w.back().exp += e;
    else w.push_back({gen, e});
  }
  return w;
}

std::string letters_string(const Group& g, const LetterSeq& letters) { return word_string(g, letters_to_word(letters)); }

namespace {

struct Expander {
  const Group& g;
  std::size_t cap;
  std::vector<Element> gens;  // indexed by letter
  std::vector<BallEntry> entries;
  std::unordered_map<Element, std::size_t, ElementHash> seen;

  Expander(const Group& group, std::size_t c) : g(group), cap(c) {
    for (int i = 0; i < g.generator_count(); ++i) {
      gens.push_back(g.generator_power(i, 1));
      gens.push_back(g.generator_power(i, -1));
    }
    add(g.identity(), {});
  }

  void add(Element e, LetterSeq letters) {
    if (entries.size() >= cap) {
      throw BallCapError("ball exceeds the element cap of " + std::to_string(cap) +
                         " (set ORDSPACE_BALL_CAP to raise it)");
    }
    seen.emplace(e, entries.size());
    entries.push_back({std::move(e), std::move(letters)});
  }

  // Candidates for one level are laid out as (frontier index, letter), which
  // is shortlex order; the first occurrence of each element wins.
  void merge(std::size_t begin, std::vector<Element>& products) {
    const std::size_t nl = gens.size();
    for (std::size_t c = 0; c < products.size(); ++c) {
      if (seen.count(products[c])) continue;
      LetterSeq w = entries[begin + c / nl].letters;
      w.push_back(static_cast<std::uint8_t>(c % nl));
      add(std::move(products[c]), std::move(w));
    }
  }
};

}  // namespace

Ball build_ball(const Group& g, int radius, std::size_t cap) {
  if (radius < 0) throw PreconditionError("ball radius must be nonnegative");
  Expander ex(g, cap);
  std::size_t begin = 0;
  for (int len = 1; len <= radius; ++len) {
    const std::size_t end = ex.entries.size();
    const std::size_t nl = ex.gens.size();
    const auto total = static_cast<std::int64_t>((end - begin) * nl);
    std::vector<Element> products(static_cast<std::size_t>(total));
#pragma omp parallel for schedule(static)
    for (std::int64_t c = 0; c < total; ++c) {
      auto uc = static_cast<std::size_t>(c);
      products[uc] = g.multiply(ex.entries[begin + uc / nl].elem, ex.gens[uc % nl]);
    }
    ex.merge(begin, products);
    begin = end;
  }
  return Ball(g, radius, std::move(ex.entries));
}

namespace serial {

Ball build_ball(const Group& g, int radius, std::size_t cap) {
  if (radius < 0) throw PreconditionError("ball radius must be nonnegative");
  Expander ex(g, cap);
  std::size_t begin = 0;
  for (int len = 1; len <= radius; ++len) {
    const std::size_t end = ex.entries.size();
    for (std::size_t i = begin; i < end; ++i) {
      for (std::size_t l = 0; l < ex.gens.size(); ++l) {
        Element p = g.multiply(ex.entries[i].elem, ex.gens[l]);
        if (ex.seen.count(p)) continue;
        LetterSeq w = ex.entries[i].letters;
        w.push_back(static_cast<std::uint8_t>(l));
        ex.add(std::move(p), std::move(w));
      }
    }
    begin = end;
  }
  return Ball(g, radius, std::move(ex.entries));
}

}  // namespace serial

}  // namespace ordspace
