#pragma once

#include <gmpxx.h>

#include <string>

namespace qlink {

// Exact Gaussian rational re + i*im. Both parts are kept canonical by GMP.
class GaussRat {
 public:
  GaussRat() = default;
  GaussRat(long value) : re_(value) {}  // NOLINT(google-explicit-constructor)
  GaussRat(mpq_class re, mpq_class im = 0);

  static GaussRat i() { return GaussRat(0, 1); }

  const mpq_class& re() const { return re_; }
  const mpq_class& im() const { return im_; }

  bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }
  bool is_real() const { return sgn(im_) == 0; }

  GaussRat conj() const { return GaussRat(re_, -im_); }

  GaussRat& operator+=(const GaussRat& other);
  GaussRat& operator-=(const GaussRat& other);
  GaussRat& operator*=(const GaussRat& other);
  GaussRat& operator/=(const GaussRat& other);

  friend GaussRat operator+(GaussRat a, const GaussRat& b) { return a += b; }
  friend GaussRat operator-(GaussRat a, const GaussRat& b) { return a -= b; }
  friend GaussRat operator*(GaussRat a, const GaussRat& b) { return a *= b; }
  friend GaussRat operator/(GaussRat a, const GaussRat& b) { return a /= b; }
  GaussRat operator-() const { return GaussRat(-re_, -im_); }

  friend bool operator==(const GaussRat& a, const GaussRat& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }
  friend bool operator!=(const GaussRat& a, const GaussRat& b) { return !(a == b); }

  // "3", "-1/2", "2i", "(1-3i)", ...
  std::string to_string() const;

 private:
  mpq_class re_;
  mpq_class im_;
};

}  // namespace qlink
