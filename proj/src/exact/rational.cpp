#include "humbert/exact/rational.hpp"

#include <cctype>
#include <limits>

#include "humbert/error.hpp"

namespace humbert::exact {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

bool valid_integer(std::string_view s) {
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

mpz_class parse_integer(std::string_view s) {
  if (!valid_integer(s)) throw Error(ErrorCode::ParseError, "not an integer: '" + std::string(s) + "'");
  if (s.front() == '+') s.remove_prefix(1);
  return mpz_class(std::string(s), 10);
}

}  // namespace

Rational::Rational(long num, long den) {
  if (den == 0) throw Error(ErrorCode::DivisionByZero, "zero denominator");
  value_ = mpq_class(num, den);
  value_.canonicalize();
}

Rational::Rational(mpq_class value) : value_(std::move(value)) { value_.canonicalize(); }

Rational Rational::parse(std::string_view text) {
  text = trim(text);
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_integer(text));
  const mpz_class num = parse_integer(trim(text.substr(0, slash)));
  const mpz_class den = parse_integer(trim(text.substr(slash + 1)));
  if (den == 0) throw Error(ErrorCode::DivisionByZero, "zero denominator in '" + std::string(text) + "'");
  mpq_class q(num, den);
  q.canonicalize();
  return Rational(q);
}

std::int64_t Rational::to_int64() const {
  if (!is_integer()) throw Error(ErrorCode::DimensionMismatch, "rational " + str() + " is not an integer");
  const mpz_class& n = value_.get_num();
  if (!n.fits_slong_p()) throw Error(ErrorCode::DimensionMismatch, "integer " + str() + " overflows int64");
  return n.get_si();
}

Rational Rational::inverse() const {
  if (is_zero()) throw Error(ErrorCode::DivisionByZero, "inverse of zero");
  return Rational(mpq_class(1 / value_));
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw Error(ErrorCode::DivisionByZero, "division by zero");
  value_ /= o.value_;
  return *this;
}

std::string Rational::str() const {
  if (value_.get_den() == 1) return value_.get_num().get_str();
  return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

GaussRational GaussRational::parse(std::string_view text) {
  text = trim(text);
  if (text.empty()) throw Error(ErrorCode::ParseError, "empty Gaussian rational");
  const auto parse_imag = [&](std::string_view part) -> Rational {
    part = trim(part);
    if (part.empty() || part.back() != 'i') throw Error(ErrorCode::ParseError, "bad imaginary part '" + std::string(part) + "'");
    part.remove_suffix(1);
    part = trim(part);
    if (!part.empty() && part.back() == '*') {
      part.remove_suffix(1);
      return Rational::parse(part);
    }
    if (part.empty() || part == "+") return Rational(1);
    if (part == "-") return Rational(-1);
    return Rational::parse(part);
  };
  if (text.back() != 'i') return GaussRational(Rational::parse(text));
  // split at the last top-level sign that is not the leading one
  std::size_t split = std::string_view::npos;
  for (std::size_t k = text.size(); k-- > 1;) {
    if ((text[k] == '+' || text[k] == '-') && text[k - 1] != '/' && text[k - 1] != '*') {
      split = k;
      break;
    }
  }
  if (split == std::string_view::npos) return GaussRational(Rational(0), parse_imag(text));
  return GaussRational(Rational::parse(text.substr(0, split)), parse_imag(text.substr(split)));
}

GaussRational GaussRational::inverse() const {
  const Rational n = norm();
  if (n.is_zero()) throw Error(ErrorCode::DivisionByZero, "inverse of zero");
  return {re_ / n, -im_ / n};
}

GaussRational& GaussRational::operator*=(const GaussRational& o) {
  if (im_.is_zero() && o.im_.is_zero()) {
    re_ *= o.re_;
    return *this;
  }
  Rational re = re_ * o.re_ - im_ * o.im_;
  Rational im = re_ * o.im_ + im_ * o.re_;
  re_ = std::move(re);
  im_ = std::move(im);
  return *this;
}

std::string GaussRational::str() const {
  if (im_.is_zero()) return re_.str();
  std::string imag;
  if (im_ == Rational(1)) {
    imag = "i";
  } else if (im_ == Rational(-1)) {
    imag = "-i";
  } else {
    imag = im_.str() + "*i";
  }
  if (re_.is_zero()) return imag;
  return re_.str() + (im_.sign() > 0 ? "+" : "") + imag;
}

std::ostream& operator<<(std::ostream& os, const GaussRational& z) { return os << z.str(); }

}  // namespace humbert::exact
