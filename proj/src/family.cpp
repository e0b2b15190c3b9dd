#include "parq/family.hpp"

#include <algorithm>
#include <bit>

#include "parq/errors.hpp"

namespace parq {

MonomialFamily::MonomialFamily(int n, std::vector<FamilyEntry> entries)
    : n_(n), entries_(std::move(entries)) {
    if (n < 1 || n > 31) throw validation_error("family needs 1 <= n <= 31 variables");
    if (entries_.empty()) throw validation_error("family must have at least one generator");
    for (const auto& e : entries_) {
        if (e.label == 0 || e.label >= (1u << n)) throw validation_error("family label out of range");
        if (e.m.nvars() != n) throw validation_error("generator exponent vector has wrong length");
    }
    std::sort(entries_.begin(), entries_.end(), [](const FamilyEntry& a, const FamilyEntry& b) {
        int pa = std::popcount(a.label), pb = std::popcount(b.label);
        return pa != pb ? pa < pb : a.label < b.label;
    });
    for (size_t i = 1; i < entries_.size(); ++i)
        if (entries_[i].label == entries_[i - 1].label)
            throw validation_error("duplicate family label " + mask_str(entries_[i].label));
}

int MonomialFamily::index_of(std::uint32_t label) const {
    for (int i = 0; i < size(); ++i)
        if (entries_[static_cast<size_t>(i)].label == label) return i;
    return -1;
}

int MonomialFamily::nu(std::uint32_t label, int i) const {
    int idx = index_of(label);
    if (idx < 0) throw validation_error("label not in family");
    if (i < 1 || i > n_) throw validation_error("variable index out of range");
    return gen(idx).exp(i - 1);
}

bool MonomialFamily::has_all_singletons() const {
    for (int i = 0; i < n_; ++i)
        if (index_of(1u << i) < 0) return false;
    return true;
}

bool MonomialFamily::less(int u, int v) const {
    std::uint32_t a = label(u), b = label(v);
    return a != b && (a & b) == a;
}

namespace {

void check_family_size(int n, int max_n) {
    if (n > max_n)
        throw capacity_error("full subset family limited to n <= " + std::to_string(max_n) +
                             "; raise the guard to proceed");
}

} // namespace

MonomialFamily graph_family(const Digraph& g, int max_n) {
    const int n = g.n();
    check_family_size(n, max_n);
    std::vector<FamilyEntry> entries;
    for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
        std::vector<int> exps(static_cast<size_t>(n), 0);
        for (int i = 1; i <= n; ++i) {
            if (!(mask >> (i - 1) & 1u)) continue;
            long long d = 0;
            for (int j = 0; j <= n; ++j)
                if (j == 0 || !(mask >> (j - 1) & 1u)) d += g.a(i, j);
            exps[static_cast<size_t>(i - 1)] = static_cast<int>(d);
        }
        entries.push_back({mask, Monomial(std::move(exps))});
    }
    return MonomialFamily(n, std::move(entries));
}

MonomialFamily rho_family(const std::vector<int>& rho, int max_n) {
    const int n = static_cast<int>(rho.size());
    if (n < 1) throw validation_error("degree function must be nonempty");
    check_family_size(n, max_n);
    for (int i = 0; i < n; ++i) {
        if (rho[static_cast<size_t>(i)] < 0) throw validation_error("degree function must be non-negative");
        if (i > 0 && rho[static_cast<size_t>(i)] > rho[static_cast<size_t>(i) - 1])
            throw validation_error("degree function must be weakly decreasing");
    }
    std::vector<FamilyEntry> entries;
    for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
        int r = std::popcount(mask);
        std::vector<int> exps(static_cast<size_t>(n), 0);
        for (int i = 0; i < n; ++i)
            if (mask >> i & 1u) exps[static_cast<size_t>(i)] = rho[static_cast<size_t>(r) - 1];
        entries.push_back({mask, Monomial(std::move(exps))});
    }
    return MonomialFamily(n, std::move(entries));
}

MonomialFamily kl_family(int n, int k, int l, int max_n) {
    if (n < 1 || k < 0 || l < 0) throw validation_error("kl_family takes n >= 1 and k, l >= 0");
    std::vector<int> rho(static_cast<size_t>(n));
    for (int r = 1; r <= n; ++r) rho[static_cast<size_t>(r) - 1] = l + k * (n - r);
    return rho_family(rho, max_n);
}

MonomialFamily hat_family(int n, int max_n) {
    if (n < 1) throw validation_error("hat_family takes n >= 1");
    check_family_size(n, max_n);
    std::vector<FamilyEntry> entries;
    for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
        int r = std::popcount(mask);
        std::vector<int> exps(static_cast<size_t>(n), 0);
        for (int i = 0; i < n; ++i)
            if (mask >> i & 1u) exps[static_cast<size_t>(i)] = n - r + 1;
        exps[static_cast<size_t>(std::countr_zero(mask))] += 1; // extra factor at the minimal index
        entries.push_back({mask, Monomial(std::move(exps))});
    }
    return MonomialFamily(n, std::move(entries));
}

OrderIdealFamily::OrderIdealFamily(int nvars, std::vector<Monomial> gens,
                                   const std::vector<std::pair<int, int>>& covers)
    : nvars_(nvars), gens_(std::move(gens)) {
    if (nvars < 1) throw validation_error("order ideal family needs nvars >= 1");
    if (gens_.empty()) throw validation_error("family must have at least one generator");
    const int m = size();
    for (const auto& g : gens_)
        if (g.nvars() != nvars) throw validation_error("generator exponent vector has wrong length");
    less_.assign(static_cast<size_t>(m), std::vector<char>(static_cast<size_t>(m), 0));
    for (auto [lo, hi] : covers) {
        if (lo < 0 || lo >= m || hi < 0 || hi >= m || lo == hi)
            throw validation_error("cover relation out of range");
        less_[static_cast<size_t>(lo)][static_cast<size_t>(hi)] = 1;
    }
    // Warshall closure, then antisymmetry check.
    for (int k = 0; k < m; ++k)
        for (int i = 0; i < m; ++i)
            if (less_[static_cast<size_t>(i)][static_cast<size_t>(k)])
                for (int j = 0; j < m; ++j)
                    if (less_[static_cast<size_t>(k)][static_cast<size_t>(j)])
                        less_[static_cast<size_t>(i)][static_cast<size_t>(j)] = 1;
    for (int i = 0; i < m; ++i)
        if (less_[static_cast<size_t>(i)][static_cast<size_t>(i)])
            throw validation_error("cover relations contain a cycle");
}

bool strictly_divides(const Monomial& m, const Monomial& target) {
    if (!m.divides(target)) return false;
    for (int i = 0; i < m.nvars(); ++i)
        if (target.exp(i) > 0 && m.exp(i) == target.exp(i)) return false;
    return true;
}

namespace {

std::string entry_str(std::uint32_t label, const Monomial& m) {
    return mask_str(label) + " -> " + m.str();
}

// Shared SM1 and GM logic over an indexed generator list.
template <typename LabelFn>
void check_sm1_gm(const std::vector<Monomial>& gens, LabelFn&& name, ConditionReport& report) {
    const int m = static_cast<int>(gens.size());
    report.sm1 = Verdict::pass;
    for (int u = 0; u < m && report.sm1 == Verdict::pass; ++u)
        for (int v = 0; v < m; ++v) {
            if (u == v) continue;
            if (gens[static_cast<size_t>(u)].divides(gens[static_cast<size_t>(v)])) {
                report.sm1 = Verdict::fail;
                report.witnesses.push_back(
                    {"SM1", "generator " + name(u) + " divides " + name(v)});
                break;
            }
        }

    report.gm = Verdict::pass;
    if (report.sm1 != Verdict::pass) {
        // Genericity is defined for minimal generators only.
        report.gm = Verdict::not_applicable;
        return;
    }
    for (int u = 0; u < m; ++u)
        for (int v = u + 1; v < m; ++v) {
            const Monomial &mu = gens[static_cast<size_t>(u)], &mv = gens[static_cast<size_t>(v)];
            bool shared = false;
            for (int i = 0; i < mu.nvars() && !shared; ++i)
                shared = mu.exp(i) > 0 && mu.exp(i) == mv.exp(i);
            if (!shared) continue;
            Monomial l = lcm(mu, mv);
            bool witness = false;
            for (int w = 0; w < m && !witness; ++w)
                witness = w != u && w != v && strictly_divides(gens[static_cast<size_t>(w)], l);
            if (!witness) {
                report.gm = Verdict::fail;
                report.witnesses.push_back(
                    {"GM", "no generator strictly divides lcm(" + name(u) + ", " + name(v) + ")"});
            }
        }
}

} // namespace

ConditionReport check_conditions(const MonomialFamily& f) {
    ConditionReport report;
    const int m = f.size();

    report.mm1 = Verdict::pass;
    for (int u = 0; u < m; ++u) {
        std::uint32_t support = f.gen(u).support_mask();
        if ((support & ~f.label(u)) != 0) {
            report.mm1 = Verdict::fail;
            report.witnesses.push_back(
                {"MM1", entry_str(f.label(u), f.gen(u)) + " uses variables outside its label"});
        }
    }

    report.mm2 = Verdict::pass;
    for (int u = 0; u < m; ++u)
        for (int v = 0; v < m; ++v) {
            if (!f.less(u, v)) continue;
            for (int i : mask_elements(f.label(u)))
                if (f.gen(u).exp(i - 1) < f.gen(v).exp(i - 1)) {
                    report.mm2 = Verdict::fail;
                    report.witnesses.push_back({"MM2", "deg_x" + std::to_string(i) + " increases from " +
                                                           entry_str(f.label(u), f.gen(u)) + " to " +
                                                           entry_str(f.label(v), f.gen(v))});
                }
        }

    report.mm3 = Verdict::pass;
    for (int u = 0; u < m; ++u)
        for (int v = u; v < m; ++v) {
            Monomial l = lcm(f.gen(u), f.gen(v));
            std::uint32_t both = f.label(u) | f.label(v);
            bool found = false;
            for (int w = 0; w < m && !found; ++w)
                found = (f.label(w) & both) == both && f.gen(w).divides(l);
            if (!found) {
                report.mm3 = Verdict::fail;
                report.witnesses.push_back(
                    {"MM3", "no K containing " + mask_str(f.label(u)) + " and " + mask_str(f.label(v)) +
                                " has m_K dividing their lcm"});
            }
        }

    // OM over the inclusion order coincides with MM3 restricted to upper
    // bounds in Sigma, which is exactly what was just checked.
    report.om = report.mm3;

    std::vector<Monomial> gens;
    gens.reserve(static_cast<size_t>(m));
    for (int u = 0; u < m; ++u) gens.push_back(f.gen(u));
    check_sm1_gm(gens, [&](int u) { return entry_str(f.label(u), f.gen(u)); }, report);

    report.sm2 = Verdict::pass;
    for (int u = 0; u < m; ++u)
        for (int v = 0; v < m; ++v) {
            if (!f.less(u, v)) continue;
            for (int w = 0; w < m; ++w) {
                if (!f.less(v, w)) continue;
                bool found = false;
                for (int i : mask_elements(f.label(v) & ~f.label(u)))
                    if (f.gen(v).exp(i - 1) > f.gen(w).exp(i - 1)) {
                        found = true;
                        break;
                    }
                if (!found) {
                    report.sm2 = Verdict::fail;
                    report.witnesses.push_back({"SM2", "chain " + mask_str(f.label(u)) + " < " +
                                                           mask_str(f.label(v)) + " < " + mask_str(f.label(w)) +
                                                           " has no strictly dropping variable"});
                }
            }
        }
    return report;
}

ConditionReport check_conditions(const OrderIdealFamily& f) {
    ConditionReport report;
    const int m = f.size();

    report.om = Verdict::pass;
    for (int u = 0; u < m; ++u)
        for (int v = u; v < m; ++v) {
            Monomial l = lcm(f.gen(u), f.gen(v));
            bool found = false;
            for (int w = 0; w < m && !found; ++w) {
                bool upper = (w == u || f.less(u, w)) && (w == v || f.less(v, w));
                found = upper && f.gen(w).divides(l);
            }
            if (!found) {
                report.om = Verdict::fail;
                report.witnesses.push_back(
                    {"OM", "generators #" + std::to_string(u) + " and #" + std::to_string(v) +
                               " have no upper bound dividing their lcm"});
            }
        }

    check_sm1_gm(f.gens(), [](int u) { return "#" + std::to_string(u); }, report);
    return report;
}

} // namespace parq
