#include "dirac/scalar.hpp"

#include <cctype>
#include <ostream>
#include <stdexcept>

namespace dirac {

namespace {

// Parses an optionally signed "p" or "p/q" with decimal integers p, q.
mpq_class parse_rational(std::string_view s, std::string_view whole) {
  auto fail = [&] { throw std::invalid_argument("malformed scalar '" + std::string(whole) + "'"); };
  if (s.empty()) fail();
  std::string text(s);
  auto slash = text.find('/');
  auto check_int = [&](const std::string& part, bool allow_sign) {
    std::size_t start = 0;
    if (allow_sign && !part.empty() && (part[0] == '+' || part[0] == '-')) start = 1;
    if (start >= part.size()) fail();
    for (std::size_t k = start; k < part.size(); ++k) {
      if (!std::isdigit(static_cast<unsigned char>(part[k]))) fail();
    }
  };
  std::string num = text.substr(0, slash);
  std::string den = slash == std::string::npos ? "1" : text.substr(slash + 1);
  check_int(num, true);
  check_int(den, false);
  if (num[0] == '+') num.erase(0, 1);
  mpz_class n(num, 10);
  mpz_class d(den, 10);
  if (d == 0) throw std::invalid_argument("zero denominator in scalar '" + std::string(whole) + "'");
  mpq_class q(n, d);
  q.canonicalize();
  return q;
}

std::string rational_str(const mpq_class& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_str();
}

}  // namespace

GaussianRational::GaussianRational(mpq_class re, mpq_class im) : re_(std::move(re)), im_(std::move(im)) {
  re_.canonicalize();
  im_.canonicalize();
}

GaussianRational GaussianRational::fraction(long num, long den) {
  if (den == 0) throw std::invalid_argument("zero denominator");
  return {mpq_class(num, den), mpq_class(0)};
}

GaussianRational GaussianRational::parse(std::string_view text) {
  std::string s;
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  }
  if (s.empty()) throw std::invalid_argument("empty scalar");

  bool has_i = s.back() == 'i';
  if (!has_i) return {parse_rational(s, text), mpq_class(0)};

  // Split into a real prefix and an imaginary term at the last sign that is
  // not the first character.
  std::size_t split = std::string::npos;
  for (std::size_t k = s.size() - 1; k > 0; --k) {
    if (s[k] == '+' || s[k] == '-') {
      split = k;
      break;
    }
  }
  std::string real_part = split == std::string::npos ? std::string() : s.substr(0, split);
  std::string imag_part = split == std::string::npos ? s : s.substr(split);

  imag_part.pop_back();  // trailing 'i'
  if (!imag_part.empty() && imag_part.back() == '*') {
    imag_part.pop_back();
  } else if (!(imag_part.empty() || imag_part == "+" || imag_part == "-")) {
    throw std::invalid_argument("malformed scalar '" + std::string(text) + "'");
  }
  if (imag_part.empty() || imag_part == "+") imag_part = "1";
  if (imag_part == "-") imag_part = "-1";

  mpq_class re = real_part.empty() ? mpq_class(0) : parse_rational(real_part, text);
  return {re, parse_rational(imag_part, text)};
}

GaussianRational GaussianRational::inverse() const {
  if (is_zero()) throw std::domain_error("division by zero in Q(i)");
  mpq_class norm = re_ * re_ + im_ * im_;
  return {mpq_class(re_ / norm), mpq_class(-im_ / norm)};
}

GaussianRational& GaussianRational::operator+=(const GaussianRational& o) {
  re_ += o.re_;
  im_ += o.im_;
  return *this;
}

GaussianRational& GaussianRational::operator-=(const GaussianRational& o) {
  re_ -= o.re_;
  im_ -= o.im_;
  return *this;
}

GaussianRational& GaussianRational::operator*=(const GaussianRational& o) {
  if (sgn(im_) == 0 && sgn(o.im_) == 0) {
    re_ *= o.re_;
    return *this;
  }
  mpq_class r = re_ * o.re_ - im_ * o.im_;
  mpq_class m = re_ * o.im_ + im_ * o.re_;
  re_ = std::move(r);
  im_ = std::move(m);
  return *this;
}

GaussianRational& GaussianRational::operator/=(const GaussianRational& o) {
  if (sgn(o.im_) == 0) {
    if (sgn(o.re_) == 0) throw std::domain_error("division by zero in Q(i)");
    re_ /= o.re_;
    im_ /= o.re_;
    return *this;
  }
  return *this *= o.inverse();
}

std::string GaussianRational::str() const {
  if (sgn(im_) == 0) return rational_str(re_);
  std::string imag = im_ == 1 ? "i" : im_ == -1 ? "-i" : rational_str(im_) + "*i";
  if (sgn(re_) == 0) return imag;
  return rational_str(re_) + (sgn(im_) > 0 ? "+" : "") + imag;
}

std::ostream& operator<<(std::ostream& os, const GaussianRational& z) { return os << z.str(); }

}  // namespace dirac
