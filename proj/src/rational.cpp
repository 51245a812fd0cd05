#include "puiseux/rational.hpp"

#include <sstream>
#include <stdexcept>
#include <utility>

namespace puiseux {

namespace {

bool all_digits(const std::string& s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (c < '0' || c > '9') return false;
  }
  return true;
}

}  // namespace

Rat::Rat(BigInt num, BigInt den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw std::invalid_argument("rational: denominator must be nonzero");
  if (num_ < 0 || den_ < 0) throw std::invalid_argument("rational: negative values are not supported");
  if (num_.is_zero()) {
    den_ = 1;
    return;
  }
  BigInt g = boost::multiprecision::gcd(num_, den_);
  num_ /= g;
  den_ /= g;
}

Rat::Rat(BigInt value) : Rat(std::move(value), BigInt(1)) {}

Rat::Rat(std::uint64_t value) : Rat(BigInt(value), BigInt(1)) {}

Rat Rat::parse(const std::string& text) {
  std::size_t begin = text.find_first_not_of(' ');
  std::size_t end = text.find_last_not_of(' ');
  if (begin == std::string::npos) throw std::invalid_argument("rational: empty string");
  std::string body = text.substr(begin, end - begin + 1);

  std::size_t slash = body.find('/');
  std::string num_part = slash == std::string::npos ? body : body.substr(0, slash);
  std::string den_part = slash == std::string::npos ? "1" : body.substr(slash + 1);
  if (!all_digits(num_part) || !all_digits(den_part)) {
    throw std::invalid_argument("rational: expected \"p\" or \"p/q\" with decimal digits, got \"" + text + "\"");
  }
  return Rat(BigInt(num_part), BigInt(den_part));
}

std::string Rat::str() const {
  if (den_ == 1) return num_.str();
  return num_.str() + "/" + den_.str();
}

std::string Rat::frac_str() const { return num_.str() + "/" + den_.str(); }

double Rat::approx() const {
  // Shift both components into double range first; the quotient survives.
  BigInt n = num_;
  BigInt d = den_;
  if (!n.is_zero()) {
    std::size_t bits = std::max(boost::multiprecision::msb(n), boost::multiprecision::msb(d));
    if (bits > 512) {
      std::size_t shift = bits - 512;
      n >>= shift;
      d >>= shift;
      if (d.is_zero()) d = 1;
    }
  }
  return n.convert_to<double>() / d.convert_to<double>();
}

std::strong_ordering operator<=>(const Rat& a, const Rat& b) {
  BigInt lhs = a.num_ * b.den_;
  BigInt rhs = b.num_ * a.den_;
  if (lhs < rhs) return std::strong_ordering::less;
  if (lhs > rhs) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

Rat operator+(const Rat& a, const Rat& b) {
  return Rat(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

Rat operator*(const Rat& a, const Rat& b) { return Rat(a.num_ * b.num_, a.den_ * b.den_); }

Rat pow(const Rat& base, std::uint64_t exponent) {
  Rat result(BigInt(1), BigInt(1));
  Rat square = base;
  std::uint64_t e = exponent;
  while (e != 0) {
    if (e & 1) result = result * square;
    e >>= 1;
    if (e != 0) square = square * square;
  }
  return result;
}

ExtRat ExtRat::infinity() {
  ExtRat r;
  r.finite_.reset();
  return r;
}

const Rat& ExtRat::finite() const {
  if (!finite_) throw std::domain_error("extended rational: value is infinite");
  return *finite_;
}

std::string ExtRat::str() const { return finite_ ? finite_->str() : "inf"; }

std::string ExtRat::frac_str() const { return finite_ ? finite_->frac_str() : "inf"; }

std::strong_ordering operator<=>(const ExtRat& a, const ExtRat& b) {
  if (a.is_infinite() && b.is_infinite()) return std::strong_ordering::equal;
  if (a.is_infinite()) return std::strong_ordering::greater;
  if (b.is_infinite()) return std::strong_ordering::less;
  return *a.finite_ <=> *b.finite_;
}

}  // namespace puiseux
