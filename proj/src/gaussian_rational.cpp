#include "bargmann/gaussian_rational.hpp"

#include <cctype>
#include <stdexcept>

namespace bargmann {

GaussianRational::GaussianRational(mpq_class re, mpq_class im) : re_(std::move(re)), im_(std::move(im)) {
  re_.canonicalize();
  im_.canonicalize();
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
  mpq_class re = re_ * o.re_ - im_ * o.im_;
  mpq_class im = re_ * o.im_ + im_ * o.re_;
  re_ = std::move(re);
  im_ = std::move(im);
  return *this;
}

GaussianRational& GaussianRational::operator/=(const GaussianRational& o) {
  mpq_class d = o.norm();
  if (sgn(d) == 0) throw std::domain_error("GaussianRational: division by zero");
  mpq_class re = (re_ * o.re_ + im_ * o.im_) / d;
  mpq_class im = (im_ * o.re_ - re_ * o.im_) / d;
  re_ = std::move(re);
  im_ = std::move(im);
  return *this;
}

std::string GaussianRational::to_string() const {
  std::string s = "(" + re_.get_str();
  if (sgn(im_) < 0) {
    s += " - " + mpq_class(-im_).get_str();
  } else {
    s += " + " + im_.get_str();
  }
  return s + " i)";
}

std::ostream& operator<<(std::ostream& os, const GaussianRational& x) { return os << x.to_string(); }

mpq_class rational_from_decimal(const std::string& text) {
  std::size_t pos = 0;
  std::string digits;
  long scale = 0;
  while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) digits += text[pos++];
  if (pos < text.size() && text[pos] == '.') {
    ++pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
      digits += text[pos++];
      --scale;
    }
  }
  if (digits.empty()) throw std::invalid_argument("not a decimal number: '" + text + "'");
  if (pos < text.size() && (text[pos] == 'e' || text[pos] == 'E')) {
    ++pos;
    bool negative = false;
    if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) negative = text[pos++] == '-';
    std::string exp;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) exp += text[pos++];
    if (exp.empty() || exp.size() > 6) throw std::invalid_argument("bad exponent in '" + text + "'");
    long e = std::stol(exp);
    scale += negative ? -e : e;
  }
  if (pos != text.size()) throw std::invalid_argument("not a decimal number: '" + text + "'");

  mpz_class mantissa(digits, 10);
  mpz_class power;
  mpz_ui_pow_ui(power.get_mpz_t(), 10, static_cast<unsigned long>(scale < 0 ? -scale : scale));
  mpq_class r = scale < 0 ? mpq_class(mantissa, power) : mpq_class(mantissa * power);
  r.canonicalize();
  return r;
}

}  // namespace bargmann
