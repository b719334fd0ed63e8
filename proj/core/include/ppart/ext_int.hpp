#ifndef PPART_EXT_INT_HPP
#define PPART_EXT_INT_HPP

#include <cassert>
#include <compare>
#include <ostream>
#include <string>

namespace ppart {

// Non-negative integer extended with +infinity.  Degree-sum invariants are
// minima over pair/set families that can be empty (complete graphs have no
// non-adjacent pair; some graphs have no large independent set), and the
// empty minimum is +infinity by convention.
class ExtInt {
public:
  constexpr ExtInt() = default;
  constexpr ExtInt(long long v) : value_(v), inf_(false) { assert(v >= 0); }

  static constexpr ExtInt infinity() {
    ExtInt e;
    e.inf_ = true;
    return e;
  }

  constexpr bool is_infinite() const { return inf_; }

  constexpr long long value() const {
    assert(!inf_);
    return value_;
  }

  friend constexpr bool operator==(ExtInt a, ExtInt b) {
    return a.inf_ == b.inf_ && (a.inf_ || a.value_ == b.value_);
  }

  friend constexpr std::strong_ordering operator<=>(ExtInt a, ExtInt b) {
    if (a.inf_ || b.inf_) return (a.inf_ ? 1 : 0) <=> (b.inf_ ? 1 : 0);
    return a.value_ <=> b.value_;
  }

  // k * (+inf) = +inf; requires k > 0 so the convention is unambiguous.
  friend constexpr ExtInt operator*(long long k, ExtInt e) {
    assert(k > 0);
    if (e.inf_) return infinity();
    return ExtInt(k * e.value_);
  }

  std::string to_string() const { return inf_ ? "inf" : std::to_string(value_); }

  friend std::ostream& operator<<(std::ostream& os, ExtInt e) {
    return os << e.to_string();
  }

private:
  long long value_ = 0;
  bool inf_ = false;
};

}  // namespace ppart

#endif
