#include "parq/combinat.hpp"

#include "parq/errors.hpp"

namespace parq {

Int stirling2(int n, int k) {
    if (n < 0 || k < 0) throw validation_error("stirling2 takes n, k >= 0");
    if (k > n) return 0;
    if (n == 0) return 1; // k == 0 here
    if (k == 0) return 0;
    // S(i,j) = j*S(i-1,j) + S(i-1,j-1), rolling row.
    std::vector<Int> row(static_cast<size_t>(k) + 1, Int(0));
    row[0] = 1; // S(0,0)
    for (int i = 1; i <= n; ++i) {
        for (int j = std::min(i, k); j >= 1; --j) row[static_cast<size_t>(j)] = Int(j) * row[static_cast<size_t>(j)] + row[static_cast<size_t>(j) - 1];
        row[0] = 0;
    }
    return row[static_cast<size_t>(k)];
}

Int binomial(int n, int k) {
    if (k < 0 || n < 0 || k > n) return 0;
    k = std::min(k, n - k);
    Int r = 1;
    for (int i = 1; i <= k; ++i) {
        r *= n - k + i;
        r /= i;
    }
    return r;
}

Int factorial(int n) {
    if (n < 0) throw validation_error("factorial takes n >= 0");
    Int r = 1;
    for (int i = 2; i <= n; ++i) r *= i;
    return r;
}

Int multinomial(const std::vector<int>& parts) {
    int n = 0;
    for (int p : parts) {
        if (p < 0) throw validation_error("multinomial parts must be >= 0");
        n += p;
    }
    Int r = factorial(n);
    for (int p : parts) r /= factorial(p);
    return r;
}

Int count_monomials_of_degree(int nvars, int degree) {
    if (nvars < 0 || degree < 0) return 0;
    if (nvars == 0) return degree == 0 ? 1 : 0;
    return binomial(degree + nvars - 1, nvars - 1);
}

std::vector<std::vector<int>> monomials_of_degree(int nvars, int degree) {
    std::vector<std::vector<int>> out;
    if (nvars < 0 || degree < 0) return out;
    if (nvars == 0) {
        if (degree == 0) out.push_back({});
        return out;
    }
    std::vector<int> cur(static_cast<size_t>(nvars), 0);
    // Ascending lex: the first variable's exponent varies slowest.
    auto rec = [&](auto&& self, int pos, int rest) -> void {
        if (pos == nvars - 1) {
            cur[static_cast<size_t>(pos)] = rest;
            out.push_back(cur);
            return;
        }
        for (int e = 0; e <= rest; ++e) {
            cur[static_cast<size_t>(pos)] = e;
            self(self, pos + 1, rest - e);
        }
    };
    rec(rec, 0, degree);
    return out;
}

} // namespace parq
