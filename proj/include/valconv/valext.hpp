#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>

namespace valconv {

/// A value-group element extended by +infinity: Z ∪ {∞}.
///
/// Valuations of representable elements are bounded by their bit length, so a
/// 64-bit payload is never the limiting factor. Finite sums that overflow
/// throw std::overflow_error.
class ValExt {
 public:
  constexpr ValExt() = default;
  constexpr ValExt(std::int64_t v) : finite_(true), value_(v) {}  // NOLINT

  static constexpr ValExt infinity() { return ValExt(Tag{}); }

  constexpr bool is_infinite() const { return !finite_; }
  constexpr bool is_finite() const { return finite_; }
  // Precondition: is_finite().
  std::int64_t value() const;

  friend constexpr bool operator==(const ValExt& a, const ValExt& b) {
    return a.finite_ == b.finite_ && (!a.finite_ || a.value_ == b.value_);
  }
  friend constexpr std::strong_ordering operator<=>(const ValExt& a,
                                                    const ValExt& b) {
    if (!a.finite_ || !b.finite_) return b.finite_ <=> a.finite_;
    return a.value_ <=> b.value_;
  }

  friend ValExt operator+(const ValExt& a, const ValExt& b);
  friend ValExt operator-(const ValExt& a, std::int64_t b);

  std::string to_string() const;

 private:
  struct Tag {};
  constexpr explicit ValExt(Tag) : finite_(false), value_(0) {}

  bool finite_ = true;
  std::int64_t value_ = 0;
};

std::ostream& operator<<(std::ostream& os, const ValExt& v);

}  // namespace valconv
