#include "ppi/gauss_rational.hpp"

#include <cctype>
#include <stdexcept>

namespace ppi {

GaussRational::GaussRational(mpq_class re, mpq_class im) : re_(std::move(re)), im_(std::move(im)) {
  re_.canonicalize();
  im_.canonicalize();
}

GaussRational& GaussRational::operator+=(const GaussRational& o) {
  re_ += o.re_;
  im_ += o.im_;
  return *this;
}

GaussRational& GaussRational::operator-=(const GaussRational& o) {
  re_ -= o.re_;
  im_ -= o.im_;
  return *this;
}

GaussRational& GaussRational::operator*=(const GaussRational& o) {
  if (sgn(im_) == 0 && sgn(o.im_) == 0) {
    re_ *= o.re_;
    return *this;
  }
  mpq_class re = re_ * o.re_ - im_ * o.im_;
  mpq_class im = re_ * o.im_ + im_ * o.re_;
  re_ = std::move(re);
  im_ = std::move(im);
  return *this;
}

GaussRational& GaussRational::operator/=(const GaussRational& o) {
  if (o.is_zero()) throw std::domain_error("division by zero");
  const mpq_class n = o.norm();
  *this *= o.conj();
  re_ /= n;
  im_ /= n;
  return *this;
}

namespace {

mpq_class parse_rational(std::string_view s) {
  if (s.empty()) throw std::invalid_argument("missing number");
  for (char ch : s) {
    if (!std::isdigit(static_cast<unsigned char>(ch)) && ch != '/') {
      throw std::invalid_argument("bad character in number: " + std::string(s));
    }
  }
  const auto slash = s.find('/');
  if (slash == 0 || slash + 1 == s.size() || s.find('/', slash + 1) != std::string_view::npos) {
    throw std::invalid_argument("malformed fraction: " + std::string(s));
  }
  mpq_class q(std::string(s), 10);
  if (sgn(q.get_den()) == 0) throw std::invalid_argument("zero denominator");
  q.canonicalize();
  return q;
}

}  // namespace

GaussRational GaussRational::parse(std::string_view text) {
  std::string s;
  for (char ch : text) {
    if (!std::isspace(static_cast<unsigned char>(ch))) s.push_back(ch);
  }
  if (s.empty()) throw std::invalid_argument("empty scalar");

  mpq_class re = 0, im = 0;
  bool seen_re = false, seen_im = false;
  std::size_t pos = 0;
  while (pos < s.size()) {
    int sign = 1;
    if (s[pos] == '+' || s[pos] == '-') {
      sign = s[pos] == '-' ? -1 : 1;
      ++pos;
    } else if (pos != 0) {
      throw std::invalid_argument("expected sign in scalar: " + s);
    }
    std::size_t end = pos;
    while (end < s.size() && s[end] != '+' && s[end] != '-') ++end;
    std::string_view part(s.data() + pos, end - pos);
    if (!part.empty() && part.back() == 'i') {
      if (seen_im) throw std::invalid_argument("two imaginary parts: " + s);
      part.remove_suffix(1);
      im = part.empty() ? mpq_class(1) : parse_rational(part);
      im *= sign;
      seen_im = true;
    } else {
      if (seen_re) throw std::invalid_argument("two real parts: " + s);
      re = parse_rational(part) * sign;
      seen_re = true;
    }
    pos = end;
  }
  return {re, im};
}

std::string GaussRational::to_string() const {
  auto imag_part = [](const mpq_class& q) {
    if (abs(q) == 1) return std::string("i");
    return mpq_class(abs(q)).get_str() + "i";
  };
  if (sgn(im_) == 0) return re_.get_str();
  if (sgn(re_) == 0) return (sgn(im_) < 0 ? "-" : "") + imag_part(im_);
  return re_.get_str() + (sgn(im_) < 0 ? "-" : "+") + imag_part(im_);
}

}  // namespace ppi
