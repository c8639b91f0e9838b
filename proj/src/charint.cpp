#include "saxlkit/charint.hpp"

#include <limits>
#include <ostream>
#include <stdexcept>

namespace saxlkit {

void CharInt::assign(const Big& v) {
  if (v >= std::numeric_limits<std::int64_t>::min() && v <= std::numeric_limits<std::int64_t>::max()) {
    delete big_;
    big_ = nullptr;
    small_ = static_cast<std::int64_t>(v);
  } else if (big_) {
    *big_ = v;
  } else {
    big_ = new Big(v);
  }
}

CharInt CharInt::parse(std::string_view text) {
  if (text.empty()) throw std::invalid_argument("empty integer");
  std::size_t i = (text[0] == '-' || text[0] == '+') ? 1 : 0;
  if (i == text.size()) throw std::invalid_argument("bad integer");
  for (std::size_t j = i; j < text.size(); ++j)
    if (text[j] < '0' || text[j] > '9') throw std::invalid_argument("bad integer: " + std::string(text));
  return CharInt(Big(std::string(text)));
}

CharInt CharInt::factorial(int n) {
  if (n < 0) throw std::domain_error("factorial of negative number");
  CharInt r(1);
  for (int i = 2; i <= n; ++i) r *= CharInt(i);
  return r;
}

int CharInt::sign() const noexcept {
  if (big_) return big_->sign();
  return (small_ > 0) - (small_ < 0);
}

CharInt& CharInt::operator+=(const CharInt& o) {
  std::int64_t r;
  if (!big_ && !o.big_ && !__builtin_add_overflow(small_, o.small_, &r)) {
    small_ = r;
    return *this;
  }
  assign(big() + o.big());
  return *this;
}

CharInt& CharInt::operator-=(const CharInt& o) {
  std::int64_t r;
  if (!big_ && !o.big_ && !__builtin_sub_overflow(small_, o.small_, &r)) {
    small_ = r;
    return *this;
  }
  assign(big() - o.big());
  return *this;
}

CharInt& CharInt::operator*=(const CharInt& o) {
  std::int64_t r;
  if (!big_ && !o.big_ && !__builtin_mul_overflow(small_, o.small_, &r)) {
    small_ = r;
    return *this;
  }
  assign(big() * o.big());
  return *this;
}

CharInt CharInt::operator-() const { return CharInt(0) - *this; }

CharInt operator/(const CharInt& a, const CharInt& b) {
  if (b.is_zero()) throw std::domain_error("division by zero");
  if (a.is_small() && b.is_small() &&
      !(a.small_ == std::numeric_limits<std::int64_t>::min() && b.small_ == -1))
    return CharInt(a.small_ / b.small_);
  return CharInt(CharInt::Big(a.big() / b.big()));
}

CharInt operator%(const CharInt& a, const CharInt& b) {
  if (b.is_zero()) throw std::domain_error("division by zero");
  if (a.is_small() && b.is_small()) {
    if (b.small_ == -1) return CharInt(0);
    return CharInt(a.small_ % b.small_);
  }
  return CharInt(CharInt::Big(a.big() % b.big()));
}

bool operator==(const CharInt& a, const CharInt& b) {
  // Normalized: a big value never fits in 64 bits.
  if (a.is_small() != b.is_small()) return false;
  if (a.is_small()) return a.small_ == b.small_;
  return *a.big_ == *b.big_;
}

std::strong_ordering operator<=>(const CharInt& a, const CharInt& b) {
  if (a.is_small() && b.is_small()) return a.small_ <=> b.small_;
  const int c = a.big().compare(b.big());
  return c < 0 ? std::strong_ordering::less : c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal;
}

std::string CharInt::to_string() const { return big_ ? big_->str() : std::to_string(small_); }

std::ostream& operator<<(std::ostream& os, const CharInt& v) { return os << v.to_string(); }

}  // namespace saxlkit
