#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <stdexcept>
#include <string>

namespace semifield {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

// Strictly positive rational in lowest terms. Houses the scalars theta that
// act on char-zero semifields through the embedded copy of Q+.
class PositiveRational {
 public:
  explicit PositiveRational(Rat value) : value_(std::move(value)) {
    if (value_ <= 0) throw std::invalid_argument("PositiveRational: value must be > 0");
  }
  PositiveRational(Int num, Int den) : PositiveRational(Rat(std::move(num), std::move(den))) {}

  const Rat& value() const { return value_; }
  Int numerator() const { return boost::multiprecision::numerator(value_); }
  Int denominator() const { return boost::multiprecision::denominator(value_); }

  PositiveRational reciprocal() const { return PositiveRational(Rat(1) / value_); }

  bool operator==(const PositiveRational& o) const { return value_ == o.value_; }

  std::string str() const { return value_.str(); }

 private:
  Rat value_;
};

inline std::string ratKey(const Rat& r) {
  return boost::multiprecision::numerator(r).str() + "/" +
         boost::multiprecision::denominator(r).str();
}

std::optional<Rat> parseRat(const std::string& text);

bool isPrime(const Int& n);

}  // namespace semifield
