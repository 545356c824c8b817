#ifndef DIRAC_SCALAR_HPP
#define DIRAC_SCALAR_HPP

#include <gmpxx.h>

#include <Eigen/Core>

#include <iosfwd>
#include <string>
#include <string_view>

namespace dirac {

/// Exact element of the Gaussian rationals Q(i): re + im*i with
/// arbitrary-precision rational parts, always kept canonical.
class GaussianRational {
public:
  GaussianRational() = default;
  GaussianRational(int v) : re_(v) {}  // NOLINT(google-explicit-constructor)
  GaussianRational(long v) : re_(v) {}  // NOLINT(google-explicit-constructor)
  GaussianRational(mpq_class re, mpq_class im = 0);

  /// Builds num/den; den must be nonzero.
  static GaussianRational fraction(long num, long den);
  static GaussianRational i() { return {mpq_class(0), mpq_class(1)}; }

  /// Parses "a/b", "a/b+c/d*i", "c/d*i", "i", "-i" (signs optional).
  /// Throws std::invalid_argument on malformed text or a zero denominator.
  static GaussianRational parse(std::string_view text);

  const mpq_class& re() const { return re_; }
  const mpq_class& im() const { return im_; }

  bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }
  bool is_real() const { return sgn(im_) == 0; }

  GaussianRational conj() const { return {re_, -im_}; }
  /// Multiplicative inverse; throws std::domain_error on zero.
  GaussianRational inverse() const;

  GaussianRational& operator+=(const GaussianRational& o);
  GaussianRational& operator-=(const GaussianRational& o);
  GaussianRational& operator*=(const GaussianRational& o);
  GaussianRational& operator/=(const GaussianRational& o);

  friend GaussianRational operator+(GaussianRational a, const GaussianRational& b) { return a += b; }
  friend GaussianRational operator-(GaussianRational a, const GaussianRational& b) { return a -= b; }
  friend GaussianRational operator*(GaussianRational a, const GaussianRational& b) { return a *= b; }
  friend GaussianRational operator/(GaussianRational a, const GaussianRational& b) { return a /= b; }
  GaussianRational operator-() const { return {-re_, -im_}; }
  GaussianRational operator+() const { return *this; }

  friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }
  friend bool operator!=(const GaussianRational& a, const GaussianRational& b) { return !(a == b); }

  /// Canonical text form, the inverse of parse().
  std::string str() const;

private:
  mpq_class re_{0};
  mpq_class im_{0};
};

using Scalar = GaussianRational;

std::ostream& operator<<(std::ostream& os, const GaussianRational& z);

inline GaussianRational conj(const GaussianRational& z) { return z.conj(); }

}  // namespace dirac

namespace Eigen {

template <>
struct NumTraits<dirac::GaussianRational> : GenericNumTraits<dirac::GaussianRational> {
  using Real = dirac::GaussianRational;
  using NonInteger = dirac::GaussianRational;
  using Literal = dirac::GaussianRational;
  using Nested = dirac::GaussianRational;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 4,
    AddCost = 16,
    MulCost = 32
  };
  static inline Real epsilon() { return 0; }
  static inline Real dummy_precision() { return 0; }
  static inline int digits10() { return 0; }
};

}  // namespace Eigen

#endif  // DIRAC_SCALAR_HPP
