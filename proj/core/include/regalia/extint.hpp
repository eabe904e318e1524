#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace regalia {

/// Integer extended by -infinity and +infinity.
///
/// Degrees, a-invariants and regularity values live here: deg(0) = -inf,
/// indeg(0) = +inf, and bounds like a_p(M) + b are computed with the
/// convention -inf + finite = -inf.  Adding -inf and +inf is a logic error
/// and throws.
class ExtInt {
 public:
  constexpr ExtInt() : kind_(Kind::Finite), value_(0) {}
  constexpr ExtInt(long long v) : kind_(Kind::Finite), value_(v) {}

  static constexpr ExtInt neg_inf() { return ExtInt(Kind::NegInf); }
  static constexpr ExtInt pos_inf() { return ExtInt(Kind::PosInf); }

  constexpr bool is_finite() const { return kind_ == Kind::Finite; }
  constexpr bool is_neg_inf() const { return kind_ == Kind::NegInf; }
  constexpr bool is_pos_inf() const { return kind_ == Kind::PosInf; }

  long long value() const {
    if (!is_finite()) throw std::logic_error("ExtInt: value() on infinite value");
    return value_;
  }

  friend ExtInt operator+(ExtInt a, ExtInt b) {
    if (a.is_finite() && b.is_finite()) return ExtInt(a.value_ + b.value_);
    if (a.is_neg_inf() || b.is_neg_inf()) {
      if (a.is_pos_inf() || b.is_pos_inf())
        throw std::logic_error("ExtInt: -inf + +inf is undefined");
      return neg_inf();
    }
    return pos_inf();
  }
  friend ExtInt operator-(ExtInt a) {
    if (a.is_finite()) return ExtInt(-a.value_);
    return a.is_neg_inf() ? pos_inf() : neg_inf();
  }
  friend ExtInt operator-(ExtInt a, ExtInt b) { return a + (-b); }

  friend constexpr bool operator==(ExtInt a, ExtInt b) {
    return a.kind_ == b.kind_ && (a.kind_ != Kind::Finite || a.value_ == b.value_);
  }
  friend constexpr bool operator!=(ExtInt a, ExtInt b) { return !(a == b); }
  friend constexpr bool operator<(ExtInt a, ExtInt b) {
    if (a.kind_ == b.kind_) return a.kind_ == Kind::Finite && a.value_ < b.value_;
    if (a.is_neg_inf()) return true;
    if (b.is_neg_inf()) return false;
    return b.is_pos_inf();
  }
  friend constexpr bool operator<=(ExtInt a, ExtInt b) { return a < b || a == b; }
  friend constexpr bool operator>(ExtInt a, ExtInt b) { return b < a; }
  friend constexpr bool operator>=(ExtInt a, ExtInt b) { return b <= a; }

  friend ExtInt max(ExtInt a, ExtInt b) { return a < b ? b : a; }
  friend ExtInt min(ExtInt a, ExtInt b) { return b < a ? b : a; }

  std::string str() const {
    if (is_neg_inf()) return "-inf";
    if (is_pos_inf()) return "inf";
    return std::to_string(value_);
  }

 private:
  enum class Kind : std::uint8_t { Finite, NegInf, PosInf };
  constexpr explicit ExtInt(Kind k) : kind_(k), value_(0) {}
  Kind kind_;
  long long value_;
};

}  // namespace regalia
