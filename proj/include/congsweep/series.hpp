#pragma once

#include <cstddef>
#include <vector>

#include "congsweep/exact.hpp"

namespace congsweep {

// Dense truncated formal power series over exact rationals.  A series of
// length n carries the coefficients of z^0 .. z^{n-1}; every operation
// truncates back to that window.
class RationalSeries {
 public:
  explicit RationalSeries(size_t len) : c_(len) {}

  static RationalSeries one(size_t len) {
    RationalSeries s(len);
    if (len > 0) s.c_[0] = 1;
    return s;
  }

  size_t length() const { return c_.size(); }
  const BigRational& operator[](size_t i) const { return c_[i]; }
  BigRational& operator[](size_t i) { return c_[i]; }

  bool zero_constant_term() const { return c_.empty() || c_[0] == 0; }
  bool operator==(const RationalSeries&) const = default;

  RationalSeries& operator+=(const RationalSeries& o);
  RationalSeries& add_scaled(const RationalSeries& o, const BigRational& c);

  // exact evaluation of the truncated polynomial at z0 (Horner)
  BigRational eval(const BigRational& z0) const;

 private:
  std::vector<BigRational> c_;
};

RationalSeries mul(const RationalSeries& a, const RationalSeries& b);

// (1 + u z)^s as a binomial series with constant term 1 (principal branch)
RationalSeries binomial_series(const BigRational& u, const BigRational& s, size_t len);

// sum_k t[k] w^k for a series w with zero constant term (formal composition
// of a power series given by its term coefficients with the inner series w)
RationalSeries compose_terms(const std::vector<BigRational>& t, const RationalSeries& w);

}  // namespace congsweep
