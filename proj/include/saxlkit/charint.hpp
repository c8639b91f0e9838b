#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <concepts>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

namespace saxlkit {

/// Exact signed integer. Values that fit in 64 bits stay on a machine-word
/// fast path; checked arithmetic promotes to cpp_int on overflow and demotes
/// results that fit again.
class CharInt {
 public:
  using Big = boost::multiprecision::cpp_int;

  CharInt() noexcept = default;
  template <std::signed_integral T>
    requires(sizeof(T) <= sizeof(std::int64_t))
  CharInt(T v) noexcept : small_(v) {}  // NOLINT: implicit by design
  explicit CharInt(const Big& v) { assign(v); }

  static CharInt parse(std::string_view text);
  static CharInt factorial(int n);

  bool is_small() const noexcept { return !big_; }
  /// Only meaningful when is_small().
  std::int64_t small() const noexcept { return small_; }
  Big big() const { return big_ ? *big_ : Big(small_); }

  int sign() const noexcept;
  bool is_zero() const noexcept { return sign() == 0; }

  CharInt& operator+=(const CharInt& o);
  CharInt& operator-=(const CharInt& o);
  CharInt& operator*=(const CharInt& o);
  CharInt operator-() const;

  friend CharInt operator+(CharInt a, const CharInt& b) { return a += b; }
  friend CharInt operator-(CharInt a, const CharInt& b) { return a -= b; }
  friend CharInt operator*(CharInt a, const CharInt& b) { return a *= b; }

  /// Truncating division; throws std::domain_error on a zero divisor.
  friend CharInt operator/(const CharInt& a, const CharInt& b);
  friend CharInt operator%(const CharInt& a, const CharInt& b);

  friend bool operator==(const CharInt& a, const CharInt& b);
  friend std::strong_ordering operator<=>(const CharInt& a, const CharInt& b);

  std::string to_string() const;

  CharInt(const CharInt& o) : small_(o.small_), big_(o.big_ ? new Big(*o.big_) : nullptr) {}
  CharInt(CharInt&& o) noexcept : small_(o.small_), big_(o.big_) { o.big_ = nullptr; }
  CharInt& operator=(const CharInt& o) {
    if (this != &o) {
      CharInt tmp(o);
      swap(tmp);
    }
    return *this;
  }
  CharInt& operator=(CharInt&& o) noexcept {
    swap(o);
    return *this;
  }
  ~CharInt() { delete big_; }
  void swap(CharInt& o) noexcept {
    std::swap(small_, o.small_);
    std::swap(big_, o.big_);
  }

 private:
  void assign(const Big& v);

  std::int64_t small_ = 0;
  Big* big_ = nullptr;  // owned; non-null only when the value needs more than 64 bits
};

std::ostream& operator<<(std::ostream& os, const CharInt& v);

}  // namespace saxlkit
