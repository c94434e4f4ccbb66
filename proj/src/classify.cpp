#include "ordspace/classify.hpp"

#include "ordspace/error.hpp"

namespace ordspace {

Rational SeriesDescriptor::scalar(int i, int j) const {
  auto it = scalars.find({i, j});
  return it == scalars.end() ? Rational(1) : it->second;
}

SeriesDescriptor series_from_consecutive(const std::vector<Rational>& consecutive) {
  SeriesDescriptor d;
  d.n = static_cast<int>(consecutive.size()) + 1;
  for (std::size_t i = 0; i < consecutive.size(); ++i) {
    const int lvl = static_cast<int>(i) + 1;
    d.scalars[{lvl, lvl + 1}] = consecutive[i];
  }
  return d;
}

SeriesDescriptor descriptor_of(const Group& g) {
  switch (g.family()) {
    case Family::F1:
      return series_from_consecutive({g.as_f1().r});
    case Family::Tower: {
      const auto& t = g.as_tower();
      SeriesDescriptor d;
      d.n = t.n;
      for (int i = 1; i <= t.n; ++i)
        for (int j = i + 1; j <= t.n; ++j) d.scalars[{i, j}] = Rational(t.sign(i, j));
      return d;
    }
    case Family::BS13:
      return series_from_consecutive({Rational(3)});
    case Family::Gn: {
      SeriesDescriptor d;
      d.n = 3;
      d.scalars[{1, 2}] = Rational(-1);
      d.scalars[{2, 3}] = Rational(3);
      d.scalars[{1, 3}] = Rational(g.as_gn().n);
      return d;
    }
  }
  throw UnsupportedError("unknown group family");
}

SeriesValidation validate_series(const SeriesDescriptor& d) {
  SeriesValidation v;
  if (d.n < 1) {
    v.valid = false;
    v.reason = "series length must be at least 1";
    return v;
  }
  for (const auto& [ij, s] : d.scalars) {
    auto [i, j] = ij;
    if (!(1 <= i && i < j && j <= d.n)) {
      v.valid = false;
      v.reason = "scalar index (" + std::to_string(i) + "," + std::to_string(j) + ") out of range";
      return v;
    }
    if (s.is_zero()) {
      v.valid = false;
      v.reason = "scalar (" + std::to_string(i) + "," + std::to_string(j) + ") is zero";
      return v;
    }
  }
  for (int i = 1; i <= d.n; ++i) {
    for (int j = i + 1; j <= d.n; ++j) {
      const Rational sij = d.scalar(i, j);
      if (sij == 1 || sij == -1) continue;
      for (int k = j + 1; k <= d.n; ++k) {
        if (d.scalar(j, k) != 1) {
          v.valid = false;
          v.triple = std::array<int, 3>{i, j, k};
          v.reason = "level " + std::to_string(j) + " acts on level " + std::to_string(i) + " by " + sij.str() +
                     " while level " + std::to_string(k) + " acts on it by " + d.scalar(j, k).str() +
                     "; such a group has infinitely many C-orderings";
          return v;
        }
      }
    }
  }
  return v;
}

namespace {

void require_valid(const SeriesDescriptor& d) {
  auto v = validate_series(d);
  if (!v.valid) throw InvalidDescriptorError("invalid series descriptor: " + v.reason);
}

std::uint64_t pow2(int n) {
  if (n >= 64) throw InvalidDescriptorError("series too long to count");
  return std::uint64_t{1} << n;
}

// First consecutive level whose scalar makes G_{i+2}/G_i too rich.
std::optional<int> first_failure(const SeriesDescriptor& d, bool left) {
  for (int i = 1; i < d.n; ++i) {
    const Rational s = d.scalar(i, i + 1);
    if (left ? s.sign() > 0 : s == 1) return i;
  }
  return std::nullopt;
}

}  // namespace

OrderingCount count_c_orderings(const SeriesDescriptor& d) {
  require_valid(d);
  if (first_failure(d, false)) return std::nullopt;
  return pow2(d.n);
}

OrderingCount count_left_orderings(const SeriesDescriptor& d) {
  require_valid(d);
  if (first_failure(d, true)) return std::nullopt;
  return pow2(d.n);
}

Verdict verdict(const SeriesDescriptor& d) {
  if (count_left_orderings(d)) return Verdict::Tararin;
  if (count_c_orderings(d)) return Verdict::FiniteCNoIsolated;
  return Verdict::InfiniteC;
}

const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::Tararin: return "tararin";
    case Verdict::FiniteCNoIsolated: return "finite_c_no_isolated";
    case Verdict::InfiniteC: return "infinite_c";
  }
  return "?";
}

mpz_class level_ring(const SeriesDescriptor& d, int level) {
  mpz_class m = 1;
  for (int j = level + 1; j <= d.n; ++j) {
    const Rational s = d.scalar(level, j);
    mpz_class f = s.num() * s.den();
    m *= abs(f);
  }
  return m;
}

std::vector<Ordering> enum_orderings(const Group& g, EnumKind kind) {
  const SeriesDescriptor d = descriptor_of(g);
  require_valid(d);
  const bool left = kind == EnumKind::Left;
  if (auto i = first_failure(d, left)) {
    const std::string q = "G_" + std::to_string(*i + 1) + "/G_" + std::to_string(*i - 1);
    throw InfiniteFamilyError(std::string(left ? "left" : "Conradian") + " orderings of " + g.str() +
                              " are infinite: " + q + (left ? " is bi-orderable" : " is Abelian") + " (scalar " +
                              d.scalar(*i, *i + 1).str() + ")");
  }
  const int n = d.n;
  std::vector<Ordering> out;
  for (std::uint64_t mask = 0; mask < pow2(n); ++mask) {
    std::vector<int> signs(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) signs[static_cast<std::size_t>(i)] = (mask >> (n - 1 - i)) & 1U ? -1 : 1;
    out.push_back(left ? make_tararin_lex(g, std::move(signs)) : make_conrad_lex(g, std::move(signs)));
  }
  return out;
}

}  // namespace ordspace
