#include "valconv/valext.hpp"

#include <ostream>
#include <stdexcept>

namespace valconv {

std::int64_t ValExt::value() const {
  if (!finite_) throw std::logic_error("ValExt::value() on infinity");
  return value_;
}

ValExt operator+(const ValExt& a, const ValExt& b) {
  if (!a.finite_ || !b.finite_) return ValExt::infinity();
  std::int64_t out = 0;
  if (__builtin_add_overflow(a.value_, b.value_, &out))
    throw std::overflow_error("valuation overflow");
  return ValExt(out);
}

ValExt operator-(const ValExt& a, std::int64_t b) {
  if (!a.finite_) return a;
  std::int64_t out = 0;
  if (__builtin_sub_overflow(a.value_, b, &out))
    throw std::overflow_error("valuation overflow");
  return ValExt(out);
}

std::string ValExt::to_string() const {
  return finite_ ? std::to_string(value_) : std::string("inf");
}

std::ostream& operator<<(std::ostream& os, const ValExt& v) {
  return os << v.to_string();
}

}  // namespace valconv
