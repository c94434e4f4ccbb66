#include "ordspace/dynreal.hpp"

#include <algorithm>
#include <unordered_map>

#include "ordspace/error.hpp"
#include "parallel.hpp"

namespace ordspace {

RealizationMap realize(const Ordering& o, const std::vector<Element>& enumeration) {
  const Group& g = o.group();
  if (enumeration.empty() || !g.is_identity(enumeration.front())) {
    throw PreconditionError("enumeration must start with the identity");
  }
  RealizationMap map;
  std::vector<std::size_t> sorted;  // indices into map.points, increasing in the order
  for (const auto& x : enumeration) {
    g.require(x);
    std::size_t lo = 0, hi = sorted.size();
    while (lo < hi) {
      std::size_t mid = (lo + hi) / 2;
      Cmp c = o.compare(map.points[sorted[mid]].elem, x);
      if (c == Cmp::Equal) throw DuplicateElementError("element " + g.element_string(x) + " enumerated twice");
      if (c == Cmp::Less) lo = mid + 1;
      else hi = mid;
    }
    Rational t;
    if (sorted.empty()) t = Rational(0);
    else if (lo == sorted.size()) t = map.points[sorted.back()].t + Rational(1);
    else if (lo == 0) t = map.points[sorted.front()].t - Rational(1);
    else t = midpoint(map.points[sorted[lo - 1]].t, map.points[sorted[lo]].t);
    sorted.insert(sorted.begin() + static_cast<std::ptrdiff_t>(lo), map.points.size());
    map.points.push_back({x, std::move(t)});
  }
  return map;
}

std::vector<Element> ball_enumeration(const Ball& ball) {
  std::vector<Element> out;
  out.reserve(ball.size());
  for (const auto& e : ball) out.push_back(e.elem);
  return out;
}

RealizationReport check_realization(const RealizationMap& map, const Ordering& o) {
  const Group& g = o.group();
  const auto& pts = map.points;
  const std::size_t n = pts.size();
  std::unordered_map<Element, std::size_t, ElementHash> where;
  for (std::size_t i = 0; i < n; ++i) where.emplace(pts[i].elem, i);

  // Per-point results, merged in order afterwards so the report is stable.
  enum Bit : unsigned { kOrder = 1, kEquivariant = 2, kSign = 4 };
  std::vector<unsigned> bits(n, 0);
  std::vector<std::vector<std::string>> notes(n);

  detail::parallel_for(n, [&](std::size_t i) {
    const Element& x = pts[i].elem;
    if (o.sign(x) != sign_of(pts[i].t.sign())) {
      bits[i] |= kSign;
      notes[i].push_back("sign of t(" + g.element_string(x) + ")");
    }
    for (std::size_t j = i + 1; j < n; ++j) {
      const Cmp c = o.compare(x, pts[j].elem);
      const Cmp ct = static_cast<Cmp>((pts[i].t - pts[j].t).sign());
      if (c != ct) {
        bits[i] |= kOrder;
        notes[i].push_back("order of " + g.element_string(x) + " and " + g.element_string(pts[j].elem));
      }
    }
    // The partial action of x: t(h) -> t(xh) for realized h with xh realized.
    std::vector<std::pair<Rational, Rational>> graph;
    for (std::size_t j = 0; j < n; ++j) {
      auto it = where.find(g.multiply(x, pts[j].elem));
      if (it != where.end()) graph.emplace_back(pts[j].t, pts[it->second].t);
    }
    std::sort(graph.begin(), graph.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    for (std::size_t k = 1; k < graph.size(); ++k) {
      if (!(graph[k - 1].second < graph[k].second)) {
        bits[i] |= kEquivariant;
        notes[i].push_back("action of " + g.element_string(x) + " is not increasing");
        break;
      }
    }
  });

  RealizationReport rep;
  for (std::size_t i = 0; i < n; ++i) {
    if (bits[i] & kOrder) rep.order_preserving = false;
    if (bits[i] & kEquivariant) rep.equivariant = false;
    if (bits[i] & kSign) rep.sign_recovery = false;
    for (auto& s : notes[i]) rep.violations.push_back(std::move(s));
  }
  return rep;
}

}  // namespace ordspace
