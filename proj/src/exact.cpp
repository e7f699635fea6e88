#include "gvn/exact.hpp"

#include <cctype>
#include <ostream>

#include "gvn/error.hpp"

namespace gvn {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

}  // namespace

Rational ExactComplex::parse_rational(std::string_view text) {
  std::string_view s = trim(text);
  bool negative = false;
  if (!s.empty() && (s.front() == '+' || s.front() == '-')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  auto slash = s.find('/');
  std::string_view num = s.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view{"1"} : s.substr(slash + 1);
  if (!all_digits(num) || !all_digits(den)) {
    throw ParseError("not a rational number: '" + std::string(text) + "'");
  }
  boost::multiprecision::cpp_int n{std::string(num)};
  boost::multiprecision::cpp_int d{std::string(den)};
  if (d == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
  Rational r(n, d);
  return negative ? Rational(-r) : r;
}

ExactComplex ExactComplex::parse(std::string_view text) {
  std::string_view s = trim(text);
  if (s.empty()) throw ParseError("empty complex literal");
  if (s.back() != 'i') return {parse_rational(s), 0};

  std::string_view body = s.substr(0, s.size() - 1);
  // Split at the last sign that is not the leading one.
  std::size_t split = std::string_view::npos;
  for (std::size_t p = body.size(); p-- > 1;) {
    if (body[p] == '+' || body[p] == '-') {
      split = p;
      break;
    }
  }
  auto imaginary = [&](std::string_view part) -> Rational {
    if (part.empty() || part == "+") return 1;
    if (part == "-") return -1;
    return parse_rational(part);
  };
  if (split == std::string_view::npos) return {0, imaginary(body)};
  return {parse_rational(body.substr(0, split)), imaginary(body.substr(split))};
}

std::string ExactComplex::str() const {
  if (im_ == 0) return re_.str();
  std::string im_part = (im_ == 1) ? "" : (im_ == -1) ? "-" : im_.str();
  if (re_ == 0) return im_part + "i";
  std::string sign = im_ > 0 ? "+" : "";
  return re_.str() + sign + im_part + "i";
}

std::ostream& operator<<(std::ostream& os, const ExactComplex& z) { return os << z.str(); }

}  // namespace gvn
