#include "qlink/gauss_rat.hpp"

#include <stdexcept>

namespace qlink {

GaussRat::GaussRat(mpq_class re, mpq_class im) : re_(std::move(re)), im_(std::move(im)) {
  re_.canonicalize();
  im_.canonicalize();
}

GaussRat& GaussRat::operator+=(const GaussRat& other) {
  re_ += other.re_;
  if (sgn(other.im_) != 0) im_ += other.im_;
  return *this;
}

GaussRat& GaussRat::operator-=(const GaussRat& other) {
  re_ -= other.re_;
  if (sgn(other.im_) != 0) im_ -= other.im_;
  return *this;
}

GaussRat& GaussRat::operator*=(const GaussRat& other) {
  if (sgn(im_) == 0 && sgn(other.im_) == 0) {
    re_ *= other.re_;
    return *this;
  }
  mpq_class re = re_ * other.re_ - im_ * other.im_;
  mpq_class im = re_ * other.im_ + im_ * other.re_;
  re_ = std::move(re);
  im_ = std::move(im);
  return *this;
}

GaussRat& GaussRat::operator/=(const GaussRat& other) {
  if (other.is_zero()) throw std::domain_error("GaussRat: division by zero");
  if (sgn(im_) == 0 && sgn(other.im_) == 0) {
    re_ /= other.re_;
    return *this;
  }
  const mpq_class norm = other.re_ * other.re_ + other.im_ * other.im_;
  *this *= other.conj();
  re_ /= norm;
  im_ /= norm;
  return *this;
}

std::string GaussRat::to_string() const {
  if (sgn(im_) == 0) return re_.get_str();
  std::string imag;
  if (im_ == 1) {
    imag = "i";
  } else if (im_ == -1) {
    imag = "-i";
  } else {
    imag = im_.get_str() + "i";
  }
  if (sgn(re_) == 0) return imag;
  std::string out = "(" + re_.get_str();
  if (sgn(im_) > 0) out += "+";
  return out + imag + ")";
}

}  // namespace qlink
