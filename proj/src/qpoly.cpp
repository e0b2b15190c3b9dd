#include "parq/qpoly.hpp"

#include <utility>

#include "parq/errors.hpp"

namespace parq {

QPolynomial::QPolynomial(std::vector<Int> coeffs) : c_(std::move(coeffs)) { trim(); }

QPolynomial QPolynomial::monomial(const Int& coeff, int degree) {
    if (degree < 0) throw validation_error("monomial degree must be >= 0");
    if (coeff == 0) return QPolynomial();
    std::vector<Int> c(static_cast<size_t>(degree) + 1);
    c.back() = coeff;
    return QPolynomial(std::move(c));
}

QPolynomial QPolynomial::q_interval(int s) {
    if (s < 0) throw validation_error("q_interval takes s >= 0");
    return QPolynomial(std::vector<Int>(static_cast<size_t>(s), Int(1)));
}

const Int& QPolynomial::coeff(int d) const {
    static const Int zero = 0;
    if (d < 0 || d >= static_cast<int>(c_.size())) return zero;
    return c_[static_cast<size_t>(d)];
}

void QPolynomial::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

QPolynomial& QPolynomial::operator+=(const QPolynomial& o) {
    if (c_.size() < o.c_.size()) c_.resize(o.c_.size());
    for (size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
}

QPolynomial& QPolynomial::operator-=(const QPolynomial& o) {
    if (c_.size() < o.c_.size()) c_.resize(o.c_.size());
    for (size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    trim();
    return *this;
}

QPolynomial QPolynomial::operator+(const QPolynomial& o) const {
    QPolynomial r = *this;
    r += o;
    return r;
}

QPolynomial QPolynomial::operator-(const QPolynomial& o) const {
    QPolynomial r = *this;
    r -= o;
    return r;
}

QPolynomial QPolynomial::operator*(const QPolynomial& o) const {
    if (is_zero() || o.is_zero()) return QPolynomial();
    std::vector<Int> r(c_.size() + o.c_.size() - 1);
    for (size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        for (size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
    }
    return QPolynomial(std::move(r));
}

QPolynomial QPolynomial::operator*(const Int& s) const {
    if (s == 0) return QPolynomial();
    std::vector<Int> r = c_;
    for (auto& x : r) x *= s;
    return QPolynomial(std::move(r));
}

Int QPolynomial::eval(const Int& q) const {
    Int acc = 0;
    for (size_t i = c_.size(); i-- > 0;) acc = acc * q + c_[i];
    return acc;
}

QPolynomial QPolynomial::divide_exact(const QPolynomial& divisor) const {
    if (divisor.is_zero()) throw invariant_error("polynomial division by zero");
    if (is_zero()) return QPolynomial();
    if (degree() < divisor.degree())
        throw invariant_error("polynomial division leaves a remainder");
    std::vector<Int> rem = c_;
    std::vector<Int> quot(c_.size() - divisor.c_.size() + 1);
    const Int& lead = divisor.c_.back();
    for (size_t k = quot.size(); k-- > 0;) {
        Int top = rem[k + divisor.c_.size() - 1];
        if (top == 0) continue;
        if (top % lead != 0) throw invariant_error("polynomial division leaves a remainder");
        Int q = top / lead;
        quot[k] = q;
        for (size_t j = 0; j < divisor.c_.size(); ++j) rem[k + j] -= q * divisor.c_[j];
    }
    for (const Int& x : rem)
        if (x != 0) throw invariant_error("polynomial division leaves a remainder");
    return QPolynomial(std::move(quot));
}

std::vector<Int> QPolynomial::series_over_one_minus_q(int n, int count) const {
    if (n < 0 || count < 0) throw validation_error("series expansion needs n, count >= 0");
    std::vector<Int> s(static_cast<size_t>(count));
    for (int d = 0; d < count; ++d) s[static_cast<size_t>(d)] = coeff(d);
    // Multiplying a series by 1/(1-q) is a running prefix sum.
    for (int pass = 0; pass < n; ++pass)
        for (int d = 1; d < count; ++d)
            s[static_cast<size_t>(d)] += s[static_cast<size_t>(d) - 1];
    return s;
}

std::string QPolynomial::str() const {
    if (is_zero()) return "0";
    std::string out;
    for (int d = 0; d <= degree(); ++d) {
        const Int& a = coeff(d);
        if (a == 0) continue;
        Int mag = a < 0 ? Int(-a) : a;
        if (out.empty()) {
            if (a < 0) out += "-";
        } else {
            out += a < 0 ? "-" : "+";
        }
        bool unit = mag == 1;
        if (d == 0 || !unit) out += mag.str();
        if (d >= 1) out += "q";
        if (d >= 2) out += "^" + std::to_string(d);
    }
    return out;
}

} // namespace parq
