#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "parq/bigint.hpp"

namespace parq {

// Monomial in variables x1..xn, stored as its exponent vector (0-based
// indexing: exp(i) is the exponent of x_{i+1}).
class Monomial {
  public:
    Monomial() = default;
    explicit Monomial(std::vector<int> exps);
    static Monomial one(int nvars);

    int nvars() const { return static_cast<int>(e_.size()); }
    int degree() const;
    int exp(int i) const { return e_[static_cast<size_t>(i)]; }
    const std::vector<int>& exps() const { return e_; }

    bool divides(const Monomial& o) const;
    Monomial operator*(const Monomial& o) const;

    // Bit i set when x_{i+1} appears with positive exponent.
    std::uint32_t support_mask() const;

    bool operator==(const Monomial& o) const { return e_ == o.e_; }
    bool operator<(const Monomial& o) const { return e_ < o.e_; }

    // "x1^2*x3"; the empty product prints as "1".
    std::string str() const;

  private:
    std::vector<int> e_;
};

Monomial lcm(const Monomial& a, const Monomial& b);

// Subsets of {1..n} as bitmasks: bit i-1 represents element i.
std::uint32_t mask_of(const std::vector<int>& elements, int n);
std::vector<int> mask_elements(std::uint32_t mask);
std::string mask_str(std::uint32_t mask); // "{1,3}"

} // namespace parq
