#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "ordspace/groups.hpp"

namespace ordspace {

inline constexpr std::size_t kDefaultBallCap = 200000;

/// Reads ORDSPACE_BALL_CAP, falling back to kDefaultBallCap.
std::size_t ball_cap_from_env();

/// Letters index the symmetric generating set: 2*gen is the generator and
/// 2*gen+1 its inverse.
using LetterSeq = std::vector<std::uint8_t>;

struct BallEntry {
  Element elem;
  LetterSeq letters;  // shortlex-least geodesic
  int length() const { return static_cast<int>(letters.size()); }
};

/// Elements of word length <= radius, listed by length and then shortlex
/// order of their least geodesic word.
class Ball {
 public:
  Ball(Group group, int radius, std::vector<BallEntry> entries);

  const Group& group() const { return group_; }
  int radius() const { return radius_; }
  std::size_t size() const { return entries_.size(); }
  const BallEntry& operator[](std::size_t i) const { return entries_[i]; }
  auto begin() const { return entries_.begin(); }
  auto end() const { return entries_.end(); }

  std::optional<std::size_t> find(const Element& x) const;
  bool contains(const Element& x) const { return find(x).has_value(); }
  /// Number of entries of length <= len.
  std::size_t prefix_size(int len) const;
  /// Compressed word, e.g. "b^2 a^-3 b^-1"; "id" for the identity.
  std::string word(std::size_t i) const;

 private:
  Group group_;
  int radius_;
  std::vector<BallEntry> entries_;
  std::unordered_map<Element, std::size_t, ElementHash> index_;
};

Word letters_to_word(const LetterSeq& letters);
std::string letters_string(const Group& g, const LetterSeq& letters);

/// Frontier products are computed in parallel and merged in order, so the
/// result is identical to serial::build_ball. Throws BallCapError.
Ball build_ball(const Group& g, int radius, std::size_t cap = kDefaultBallCap);

namespace serial {
Ball build_ball(const Group& g, int radius, std::size_t cap = kDefaultBallCap);
}

}  // namespace ordspace
