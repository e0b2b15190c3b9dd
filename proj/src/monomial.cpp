#include "parq/monomial.hpp"

#include <algorithm>
#include <utility>

#include "parq/errors.hpp"

namespace parq {

Monomial::Monomial(std::vector<int> exps) : e_(std::move(exps)) {
    for (int x : e_)
        if (x < 0) throw validation_error("monomial exponents must be >= 0");
}

Monomial Monomial::one(int nvars) {
    if (nvars < 0) throw validation_error("nvars must be >= 0");
    return Monomial(std::vector<int>(static_cast<size_t>(nvars), 0));
}

int Monomial::degree() const {
    int d = 0;
    for (int x : e_) d += x;
    return d;
}

bool Monomial::divides(const Monomial& o) const {
    if (e_.size() != o.e_.size()) throw dimension_error("monomials live in different rings");
    for (size_t i = 0; i < e_.size(); ++i)
        if (e_[i] > o.e_[i]) return false;
    return true;
}

Monomial Monomial::operator*(const Monomial& o) const {
    if (e_.size() != o.e_.size()) throw dimension_error("monomials live in different rings");
    std::vector<int> r(e_.size());
    for (size_t i = 0; i < e_.size(); ++i) r[i] = e_[i] + o.e_[i];
    return Monomial(std::move(r));
}

std::uint32_t Monomial::support_mask() const {
    std::uint32_t m = 0;
    for (size_t i = 0; i < e_.size(); ++i)
        if (e_[i] > 0) m |= 1u << i;
    return m;
}

std::string Monomial::str() const {
    std::string out;
    for (size_t i = 0; i < e_.size(); ++i) {
        if (e_[i] == 0) continue;
        if (!out.empty()) out += "*";
        out += "x" + std::to_string(i + 1);
        if (e_[i] > 1) out += "^" + std::to_string(e_[i]);
    }
    return out.empty() ? "1" : out;
}

Monomial lcm(const Monomial& a, const Monomial& b) {
    if (a.nvars() != b.nvars()) throw dimension_error("monomials live in different rings");
    std::vector<int> r(static_cast<size_t>(a.nvars()));
    for (int i = 0; i < a.nvars(); ++i) r[static_cast<size_t>(i)] = std::max(a.exp(i), b.exp(i));
    return Monomial(std::move(r));
}

std::uint32_t mask_of(const std::vector<int>& elements, int n) {
    std::uint32_t m = 0;
    for (int e : elements) {
        if (e < 1 || e > n) throw validation_error("label element out of range 1..n");
        m |= 1u << (e - 1);
    }
    return m;
}

std::vector<int> mask_elements(std::uint32_t mask) {
    std::vector<int> out;
    for (int i = 0; mask >> i; ++i)
        if (mask >> i & 1u) out.push_back(i + 1);
    return out;
}

std::string mask_str(std::uint32_t mask) {
    std::string out = "{";
    bool first = true;
    for (int e : mask_elements(mask)) {
        if (!first) out += ",";
        out += std::to_string(e);
        first = false;
    }
    return out + "}";
}

} // namespace parq
