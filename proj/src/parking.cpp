#include "parq/parking.hpp"

#include <algorithm>

#include "parq/errors.hpp"
#include "parq/family.hpp"

namespace parq {

namespace {

void validate_rho(const std::vector<int>& rho) {
    if (rho.empty()) throw validation_error("degree function must be nonempty");
    for (size_t i = 0; i < rho.size(); ++i) {
        if (rho[i] < 0) throw validation_error("degree function must be non-negative");
        if (i > 0 && rho[i] > rho[i - 1])
            throw validation_error("degree function must be weakly decreasing");
    }
}

// Iterates the box prod_i [0, limit_i) in ascending lexicographic order.
template <typename Fn>
void for_each_in_box(const std::vector<int>& limits, long long max_box, Fn&& fn) {
    long long volume = 1;
    for (int l : limits) {
        if (l <= 0) return;
        volume *= l;
        if (volume > max_box)
            throw capacity_error("search box too large; raise the guard to proceed");
    }
    std::vector<int> b(limits.size(), 0);
    for (;;) {
        fn(b);
        size_t pos = b.size();
        while (pos > 0) {
            --pos;
            if (++b[pos] < limits[pos]) break;
            b[pos] = 0;
            if (pos == 0) return;
        }
    }
}

} // namespace

bool is_g_parking(const Digraph& g, const std::vector<int>& b) {
    const int n = g.n();
    if (static_cast<int>(b.size()) != n) throw validation_error("sequence length must equal n");
    for (int x : b)
        if (x < 0) throw validation_error("sequence entries must be >= 0");
    for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
        bool ok = false;
        for (int i = 1; i <= n && !ok; ++i) {
            if (!(mask >> (i - 1) & 1u)) continue;
            long long d = 0;
            for (int j = 0; j <= n; ++j)
                if (j == 0 || !(mask >> (j - 1) & 1u)) d += g.a(i, j);
            ok = b[static_cast<size_t>(i - 1)] < d;
        }
        if (!ok) return false;
    }
    return true;
}

std::vector<std::vector<int>> enumerate_g_parking(const Digraph& g, long long max_box) {
    std::vector<int> limits(static_cast<size_t>(g.n()));
    for (int i = 1; i <= g.n(); ++i) {
        long long d = g.out_degree(i);
        limits[static_cast<size_t>(i - 1)] = static_cast<int>(std::min<long long>(d, 1 << 20));
    }
    std::vector<std::vector<int>> out;
    for_each_in_box(limits, max_box, [&](const std::vector<int>& b) {
        if (is_g_parking(g, b)) out.push_back(b);
    });
    return out;
}

bool is_rho_parking(const std::vector<int>& rho, const std::vector<int>& b) {
    validate_rho(rho);
    const size_t n = rho.size();
    if (b.size() != n) throw validation_error("sequence length must equal n");
    for (int x : b)
        if (x < 0) throw validation_error("sequence entries must be >= 0");
    std::vector<int> c = b;
    std::sort(c.begin(), c.end());
    for (size_t i = 0; i < n; ++i)
        if (c[i] >= rho[n - 1 - i]) return false;
    return true;
}

std::vector<std::vector<int>> enumerate_rho_parking(const std::vector<int>& rho, long long max_box) {
    validate_rho(rho);
    std::vector<int> limits(rho.size(), rho[0]);
    std::vector<std::vector<int>> out;
    for_each_in_box(limits, max_box, [&](const std::vector<int>& b) {
        if (is_rho_parking(rho, b)) out.push_back(b);
    });
    return out;
}

std::vector<std::vector<int>> enumerate_parking_functions(int n) {
    if (n < 1) throw validation_error("parking functions need n >= 1");
    std::vector<int> rho(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) rho[static_cast<size_t>(i)] = n - i;
    return enumerate_rho_parking(rho);
}

std::vector<std::vector<int>> enumerate_almost_parking(int n, int max_n) {
    if (n < 1) throw validation_error("almost parking functions need n >= 1");
    if (n > max_n)
        throw capacity_error("almost parking enumeration limited to n <= " + std::to_string(max_n) +
                             "; raise the guard to proceed");
    MonomialFamily hat = hat_family(n);
    std::vector<int> limits(static_cast<size_t>(n), n + 1); // x_i^{n+1} is a generator
    std::vector<std::vector<int>> out;
    for_each_in_box(limits, 10'000'000, [&](const std::vector<int>& b) {
        Monomial m(b);
        for (int u = 0; u < hat.size(); ++u)
            if (hat.gen(u).divides(m)) return;
        out.push_back(b);
    });
    return out;
}

Int descent_pattern_count(const std::vector<int>& rho, int max_n) {
    validate_rho(rho);
    const int n = static_cast<int>(rho.size());
    if (n > max_n)
        throw capacity_error("descent pattern count limited to n <= " + std::to_string(max_n) +
                             "; raise the guard to proceed");
    std::vector<int> sigma(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) sigma[static_cast<size_t>(i)] = i + 1;
    Int count = 0;
    do {
        bool ok = true;
        for (int i = 0; i < n && ok; ++i) {
            int next = i + 1 < n ? sigma[static_cast<size_t>(i) + 1] : 0;
            bool ascend = rho[static_cast<size_t>(i)] % 2 == 0;
            ok = ascend ? sigma[static_cast<size_t>(i)] < next : sigma[static_cast<size_t>(i)] > next;
        }
        if (ok) count += 1;
    } while (std::next_permutation(sigma.begin(), sigma.end()));
    return count;
}

QPolynomial rho_hilbert_series(const std::vector<int>& rho, int max_n) {
    validate_rho(rho);
    const int n = static_cast<int>(rho.size());
    if (n > max_n)
        throw capacity_error("product formula limited to n <= " + std::to_string(max_n) +
                             "; raise the guard to proceed");
    QPolynomial total;
    for (const std::vector<int>& a : enumerate_parking_functions(n)) {
        QPolynomial term = QPolynomial::one();
        for (int i = 0; i < n && !term.is_zero(); ++i) {
            int ai = a[static_cast<size_t>(i)];
            int hi = rho[static_cast<size_t>(n - ai) - 1];           // rho_{n-a_i}
            int lo = ai == 0 ? 0 : rho[static_cast<size_t>(n - ai)]; // rho_{n-a_i+1}, rho_{n+1} = 0
            term = term * (QPolynomial::q_interval(hi - lo) * QPolynomial::monomial(Int(1), lo));
        }
        total += term;
    }
    return total;
}

} // namespace parq
