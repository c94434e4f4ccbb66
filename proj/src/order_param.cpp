#include "ordspace/order_param.hpp"

namespace ordspace {

const char* to_string(Sign s) {
  switch (s) {
    case Sign::Negative: return "negative";
    case Sign::Zero: return "zero";
    case Sign::Positive: return "positive";
  }
  return "?";
}

const char* to_string(Cmp c) {
  switch (c) {
    case Cmp::Less: return "less";
    case Cmp::Equal: return "equal";
    case Cmp::Greater: return "greater";
  }
  return "?";
}

Cmp OrderParam::compare(const Rational& t) const {
  switch (kind_) {
    case Kind::PlusInfinity: return Cmp::Greater;
    case Kind::MinusInfinity: return Cmp::Less;
    case Kind::Finite: break;
  }
  if (value_ < t) return Cmp::Less;
  if (value_ > t) return Cmp::Greater;
  return side_ == Side::Above ? Cmp::Greater : Cmp::Less;
}

std::string OrderParam::str() const {
  switch (kind_) {
    case Kind::PlusInfinity: return "+inf";
    case Kind::MinusInfinity: return "-inf";
    case Kind::Finite: break;
  }
  return "(" + value_.str() + (side_ == Side::Above ? ", above)" : ", below)");
}

bool operator==(const OrderParam& a, const OrderParam& b) {
  if (a.kind_ != b.kind_) return false;
  if (!a.is_finite()) return true;
  return a.value_ == b.value_ && a.side_ == b.side_;
}

std::strong_ordering operator<=>(const OrderParam& a, const OrderParam& b) {
  auto rank = [](const OrderParam& p) {
    switch (p.kind_) {
      case OrderParam::Kind::MinusInfinity: return 0;
      case OrderParam::Kind::Finite: return 1;
      case OrderParam::Kind::PlusInfinity: return 2;
    }
    return 1;
  };
  if (auto c = rank(a) <=> rank(b); c != 0) return c;
  if (!a.is_finite()) return std::strong_ordering::equal;
  if (auto c = a.value_ <=> b.value_; c != 0) return c;
  return static_cast<int>(a.side_) <=> static_cast<int>(b.side_);
}

}  // namespace ordspace
