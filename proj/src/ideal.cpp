#include "parq/ideal.hpp"

#include <algorithm>

#include "parq/combinat.hpp"
#include "parq/errors.hpp"

namespace parq {

int default_degree_cap(const MonomialFamily& f) {
    if (!f.has_all_singletons())
        throw validation_error("no default degree cap: family misses a singleton, "
                               "so the quotient is infinite-dimensional; pass a cap");
    int cap = 1;
    for (int i = 1; i <= f.n(); ++i) cap += f.nu(1u << (i - 1), i) - 1;
    return cap;
}

StandardBasis standard_basis(const MonomialFamily& f, int cap) {
    const bool all_singletons = f.has_all_singletons();
    if (cap < 0) cap = default_degree_cap(f);

    StandardBasis basis;
    long long scanned = 0;
    for (int k = 0; k <= cap; ++k) {
        if ((scanned += static_cast<long long>(count_monomials_of_degree(f.n(), k))) > 5'000'000)
            throw capacity_error("standard basis scan too large; lower the cap");
        for (auto& exps : monomials_of_degree(f.n(), k)) {
            Monomial m(std::move(exps));
            bool divisible = false;
            for (int u = 0; u < f.size() && !divisible; ++u) divisible = f.gen(u).divides(m);
            if (!divisible) basis.monomials.push_back(std::move(m));
        }
    }
    if (all_singletons) {
        int socle = default_degree_cap(f) - 1;
        basis.complete = cap >= socle;
    }
    return basis;
}

std::vector<Int> degree_counts(const std::vector<Monomial>& monomials) {
    std::vector<Int> dims;
    for (const Monomial& m : monomials) {
        int d = m.degree();
        if (d >= static_cast<int>(dims.size())) dims.resize(static_cast<size_t>(d) + 1);
        dims[static_cast<size_t>(d)] += 1;
    }
    while (!dims.empty() && dims.back() == 0) dims.pop_back();
    return dims;
}

void for_each_chain(int count, const std::function<bool(int, int)>& less,
                    const std::function<void(const std::vector<int>&)>& fn, long long max_chains) {
    std::vector<int> chain;
    long long emitted = 0;
    auto rec = [&](auto&& self, int last) -> void {
        for (int v = 0; v < count; ++v) {
            if (last >= 0 && !less(last, v)) continue;
            chain.push_back(v);
            if (++emitted > max_chains)
                throw capacity_error("chain enumeration too large; raise the guard to proceed");
            fn(chain);
            self(self, v);
            chain.pop_back();
        }
    };
    rec(rec, -1);
}

QPolynomial hilbert_numerator(const MonomialFamily& f, long long max_chains) {
    ConditionReport report = check_conditions(f);
    if (!report.monotone()) {
        std::string why = report.witnesses.empty() ? "" : ": " + report.witnesses.front().detail;
        throw validation_error("hilbert numerator needs a monotone family" + why);
    }
    QPolynomial numerator = QPolynomial::one();
    for_each_chain(
        f.size(), [&](int u, int v) { return f.less(u, v); },
        [&](const std::vector<int>& chain) {
            Monomial l = f.gen(chain[0]);
            for (size_t i = 1; i < chain.size(); ++i) l = lcm(l, f.gen(chain[i]));
            int sign = chain.size() % 2 == 0 ? 1 : -1;
            numerator += QPolynomial::monomial(Int(sign), l.degree());
        },
        max_chains);
    return numerator;
}

Int dimension_chain_formula(const MonomialFamily& f, long long max_chains) {
    if (!f.has_all_singletons())
        throw validation_error("dimension formula needs all singletons in the family");
    const int n = f.n();
    std::vector<Int> nu_box(static_cast<size_t>(n) + 1);
    for (int i = 1; i <= n; ++i) nu_box[static_cast<size_t>(i)] = f.nu(1u << (i - 1), i);

    Int box = 1;
    for (int i = 1; i <= n; ++i) box *= nu_box[static_cast<size_t>(i)];
    Int dim = box; // the empty chain

    for_each_chain(
        f.size(), [&](int u, int v) { return f.less(u, v); },
        [&](const std::vector<int>& chain) {
            Int term = chain.size() % 2 == 0 ? 1 : -1;
            std::uint32_t seen = 0;
            for (int idx : chain) {
                std::uint32_t fresh = f.label(idx) & ~seen;
                for (int i : mask_elements(fresh))
                    term *= nu_box[static_cast<size_t>(i)] - f.gen(idx).exp(i - 1);
                seen |= fresh;
            }
            for (int i = 1; i <= n; ++i)
                if (!(seen >> (i - 1) & 1u)) term *= nu_box[static_cast<size_t>(i)];
            dim += term;
        },
        max_chains);
    return dim;
}

Monomial chain_lcm(const MonomialFamily& f, const std::vector<std::uint32_t>& chain) {
    if (chain.empty()) return Monomial::one(f.n());
    std::vector<int> exps(static_cast<size_t>(f.n()), 0);
    std::uint32_t seen = 0;
    std::uint32_t prev = 0;
    for (std::uint32_t label : chain) {
        int idx = f.index_of(label);
        if (idx < 0) throw validation_error("chain label " + mask_str(label) + " not in family");
        if (!(prev != label && (prev & label) == prev))
            throw validation_error("labels do not form a strictly increasing chain");
        for (int i : mask_elements(label & ~seen))
            exps[static_cast<size_t>(i - 1)] = f.gen(idx).exp(i - 1);
        seen |= label;
        prev = label;
    }
    return Monomial(std::move(exps));
}

} // namespace parq
