#include "congsweep/series.hpp"

namespace congsweep {

RationalSeries& RationalSeries::operator+=(const RationalSeries& o) {
  for (size_t i = 0; i < c_.size() && i < o.length(); ++i) c_[i] += o[i];
  return *this;
}

RationalSeries& RationalSeries::add_scaled(const RationalSeries& o, const BigRational& c) {
  for (size_t i = 0; i < c_.size() && i < o.length(); ++i) c_[i] += c * o[i];
  return *this;
}

BigRational RationalSeries::eval(const BigRational& z0) const {
  BigRational acc(0);
  for (size_t i = c_.size(); i-- > 0;) acc = acc * z0 + c_[i];
  return acc;
}

RationalSeries mul(const RationalSeries& a, const RationalSeries& b) {
  const size_t len = a.length();
  RationalSeries r(len);
  for (size_t i = 0; i < len; ++i) {
    if (a[i] == 0) continue;
    for (size_t j = 0; i + j < len && j < b.length(); ++j) {
      if (b[j] == 0) continue;
      r[i + j] += a[i] * b[j];
    }
  }
  return r;
}

RationalSeries binomial_series(const BigRational& u, const BigRational& s, size_t len) {
  RationalSeries r(len);
  BigRational coeff(1), upow(1);
  BigRational t = s;
  for (size_t k = 0; k < len; ++k) {
    r[k] = coeff * upow;
    // binom(s,k+1) = binom(s,k) (s-k)/(k+1)
    coeff *= t;
    coeff /= static_cast<unsigned long>(k + 1);
    t -= 1;
    upow *= u;
  }
  return r;
}

RationalSeries compose_terms(const std::vector<BigRational>& t, const RationalSeries& w) {
  const size_t len = w.length();
  RationalSeries acc(len);
  RationalSeries wpow = RationalSeries::one(len);
  for (size_t k = 0; k < t.size() && k < len; ++k) {
    if (t[k] != 0) acc.add_scaled(wpow, t[k]);
    if (k + 1 < t.size() && k + 1 < len) wpow = mul(wpow, w);
  }
  return acc;
}

}  // namespace congsweep
