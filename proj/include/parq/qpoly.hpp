#pragma once

#include <string>
#include <vector>

#include "parq/bigint.hpp"

namespace parq {

// Dense univariate polynomial in q with Int coefficients.  Trailing zero
// coefficients are always trimmed, so the zero polynomial has an empty
// coefficient list and degree() == -1.
class QPolynomial {
  public:
    QPolynomial() = default;
    explicit QPolynomial(std::vector<Int> coeffs);
    static QPolynomial monomial(const Int& coeff, int degree);
    static QPolynomial one() { return QPolynomial({Int(1)}); }

    // 1 + q + ... + q^(s-1); the q-analogue [s].  [0] is the zero polynomial.
    static QPolynomial q_interval(int s);

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    const Int& coeff(int d) const;
    const std::vector<Int>& coeffs() const { return c_; }

    QPolynomial& operator+=(const QPolynomial& o);
    QPolynomial& operator-=(const QPolynomial& o);
    QPolynomial operator+(const QPolynomial& o) const;
    QPolynomial operator-(const QPolynomial& o) const;
    QPolynomial operator*(const QPolynomial& o) const;
    QPolynomial operator*(const Int& s) const;
    bool operator==(const QPolynomial& o) const { return c_ == o.c_; }
    bool operator!=(const QPolynomial& o) const { return c_ != o.c_; }

    Int eval(const Int& q) const;

    // Exact quotient; throws invariant_error when the division has a
    // remainder or the divisor is zero.
    QPolynomial divide_exact(const QPolynomial& divisor) const;

    // First `count` coefficients of this / (1-q)^n as a power series.
    std::vector<Int> series_over_one_minus_q(int n, int count) const;

    // "1+3q+4q^2" notation; zero polynomial prints as "0".
    std::string str() const;

  private:
    void trim();
    std::vector<Int> c_;
};

} // namespace parq
