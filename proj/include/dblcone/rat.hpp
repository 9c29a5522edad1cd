#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace dblcone {

// Exact rational number on 64-bit numerator / denominator.
//
// Invariants: gcd(num, den) == 1 and den > 0.  All intermediate products are
// taken in 128 bits; narrowing back to 64 bits is checked and throws
// overflow_error instead of wrapping.  Division by zero throws domain_error.
// There is no floating point anywhere in this type.
class Rat {
 public:
  constexpr Rat() = default;
  Rat(long long value) : num_(value), den_(1) {}
  Rat(long long num, long long den) { assign(num, den); }

  long long num() const { return num_; }
  long long den() const { return den_; }

  bool is_zero() const { return num_ == 0; }
  bool is_integer() const { return den_ == 1; }
  bool is_negative() const { return num_ < 0; }

  Rat operator-() const {
    Rat r;
    r.num_ = -num_;
    r.den_ = den_;
    return r;
  }

  friend Rat operator+(const Rat& a, const Rat& b) {
    return make(i128(a.num_) * b.den_ + i128(b.num_) * a.den_,
                i128(a.den_) * b.den_);
  }
  friend Rat operator-(const Rat& a, const Rat& b) {
    return make(i128(a.num_) * b.den_ - i128(b.num_) * a.den_,
                i128(a.den_) * b.den_);
  }
  friend Rat operator*(const Rat& a, const Rat& b) {
    return make(i128(a.num_) * b.num_, i128(a.den_) * b.den_);
  }
  friend Rat operator/(const Rat& a, const Rat& b) {
    if (b.num_ == 0) throw std::domain_error("rational division by zero");
    return make(i128(a.num_) * b.den_, i128(a.den_) * b.num_);
  }

  Rat& operator+=(const Rat& b) { return *this = *this + b; }
  Rat& operator-=(const Rat& b) { return *this = *this - b; }
  Rat& operator*=(const Rat& b) { return *this = *this * b; }
  Rat& operator/=(const Rat& b) { return *this = *this / b; }

  friend bool operator==(const Rat& a, const Rat& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const Rat& a, const Rat& b) { return !(a == b); }
  friend bool operator<(const Rat& a, const Rat& b) {
    return i128(a.num_) * b.den_ < i128(b.num_) * a.den_;
  }
  friend bool operator<=(const Rat& a, const Rat& b) { return !(b < a); }
  friend bool operator>(const Rat& a, const Rat& b) { return b < a; }
  friend bool operator>=(const Rat& a, const Rat& b) { return !(a < b); }

  Rat square() const { return *this * *this; }

  Rat abs() const { return num_ < 0 ? -*this : *this; }

  // Largest integer <= value.
  long long floor() const {
    long long q = num_ / den_;
    if (num_ % den_ != 0 && num_ < 0) --q;
    return q;
  }

  // Canonical text form: "p" for integers, "p/q" otherwise.  Never decimal.
  std::string str() const {
    std::string s = std::to_string(num_);
    if (den_ != 1) {
      s += '/';
      s += std::to_string(den_);
    }
    return s;
  }

  // Parses the canonical form.  Decimal notation is rejected: exact input
  // must be written as an integer or as "p/q".
  static Rat parse(std::string_view text);

 private:
  using i128 = __int128;

  static i128 gcd128(i128 a, i128 b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b != 0) {
      i128 t = a % b;
      a = b;
      b = t;
    }
    return a;
  }

  static long long narrow(i128 v) {
    if (v > i128(INT64_MAX) || v < i128(INT64_MIN))
      throw std::overflow_error("rational arithmetic overflow");
    return static_cast<long long>(v);
  }

  static Rat make(i128 num, i128 den) {
    if (den == 0) throw std::domain_error("rational with zero denominator");
    if (den < 0) {
      num = -num;
      den = -den;
    }
    i128 g = gcd128(num, den);
    if (g > 1) {
      num /= g;
      den /= g;
    }
    Rat r;
    r.num_ = narrow(num);
    r.den_ = narrow(den);
    return r;
  }

  void assign(long long num, long long den) { *this = make(num, den); }

  long long num_ = 0;
  long long den_ = 1;
};

inline const Rat& min(const Rat& a, const Rat& b) { return b < a ? b : a; }
inline const Rat& max(const Rat& a, const Rat& b) { return a < b ? b : a; }

}  // namespace dblcone

#include <charconv>

namespace dblcone {

inline Rat Rat::parse(std::string_view text) {
  auto bad = [&] {
    throw std::invalid_argument("invalid rational '" + std::string(text) +
                                "': expected integer or p/q");
  };
  if (text.empty()) bad();
  auto slash = text.find('/');
  auto read_int = [&](std::string_view part) -> long long {
    long long v = 0;
    const char* first = part.data();
    const char* last = part.data() + part.size();
    if (first != last && *first == '+') ++first;
    auto [ptr, ec] = std::from_chars(first, last, v);
    if (ec != std::errc() || ptr != last) bad();
    return v;
  };
  if (slash == std::string_view::npos) return Rat(read_int(text));
  long long num = read_int(text.substr(0, slash));
  long long den = read_int(text.substr(slash + 1));
  if (den == 0) throw std::domain_error("rational with zero denominator");
  return Rat(num, den);
}

}  // namespace dblcone
