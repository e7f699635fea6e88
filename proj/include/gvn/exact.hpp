#pragma once

#include <complex>
#include <iosfwd>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace gvn {

using Rational = boost::multiprecision::cpp_rational;

/// Complex number with arbitrary-precision rational parts. Algebraic
/// identities on graph operators are checked with exact equality through it.
class ExactComplex {
 public:
  ExactComplex() = default;
  ExactComplex(Rational re, Rational im = 0) : re_(std::move(re)), im_(std::move(im)) {}
  ExactComplex(long long re) : re_(re), im_(0) {}

  static ExactComplex i() { return {0, 1}; }

  const Rational& re() const { return re_; }
  const Rational& im() const { return im_; }

  bool is_zero() const { return re_ == 0 && im_ == 0; }
  ExactComplex conj() const { return {re_, -im_}; }
  /// |z|^2, exact.
  Rational norm() const { return re_ * re_ + im_ * im_; }

  std::complex<double> to_complex() const {
    return {re_.convert_to<double>(), im_.convert_to<double>()};
  }

  ExactComplex& operator+=(const ExactComplex& o) {
    re_ += o.re_;
    im_ += o.im_;
    return *this;
  }
  ExactComplex& operator-=(const ExactComplex& o) {
    re_ -= o.re_;
    im_ -= o.im_;
    return *this;
  }
  ExactComplex& operator*=(const ExactComplex& o) {
    Rational re = re_ * o.re_ - im_ * o.im_;
    im_ = re_ * o.im_ + im_ * o.re_;
    re_ = std::move(re);
    return *this;
  }

  friend ExactComplex operator+(ExactComplex a, const ExactComplex& b) { return a += b; }
  friend ExactComplex operator-(ExactComplex a, const ExactComplex& b) { return a -= b; }
  friend ExactComplex operator*(ExactComplex a, const ExactComplex& b) { return a *= b; }
  friend ExactComplex operator-(const ExactComplex& a) { return {-a.re_, -a.im_}; }
  friend bool operator==(const ExactComplex& a, const ExactComplex& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }

  /// "re" / "im" as reduced fractions, e.g. "-3/4".
  std::string re_string() const { return re_.str(); }
  std::string im_string() const { return im_.str(); }

  /// Human-readable form: "3", "-1/2i", "1/2+3i".
  std::string str() const;

  /// Parses a rational ("3", "-1/2") into a Rational.
  static Rational parse_rational(std::string_view text);
  /// Parses "a", "bi", "a+bi", "a-bi" with rational a, b. "i" alone means 1i.
  static ExactComplex parse(std::string_view text);

 private:
  Rational re_{0};
  Rational im_{0};
};

std::ostream& operator<<(std::ostream& os, const ExactComplex& z);

}  // namespace gvn
