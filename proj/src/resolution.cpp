#include "parq/resolution.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

#include "parq/errors.hpp"
#include "parq/ideal.hpp"
#include "parq/matrix.hpp"

namespace parq {

namespace {

Monomial direct_lcm(const std::vector<Monomial>& gens, const std::vector<int>& chain) {
    std::vector<int> e(static_cast<size_t>(gens.front().nvars()), 0);
    for (int idx : chain)
        for (int i = 0; i < static_cast<int>(e.size()); ++i)
            e[static_cast<size_t>(i)] =
                std::max(e[static_cast<size_t>(i)], gens[static_cast<size_t>(idx)].exp(i));
    return Monomial(std::move(e));
}

struct ChainSurvey {
    std::vector<std::vector<int>> chains; // strictly increasing index lists
    std::vector<Monomial> lcms;           // aligned with chains
    bool collision_free = true;           // no chain shares its lcm with a deleted subchain
};

ChainSurvey survey_chains(const std::vector<Monomial>& gens,
                          const std::function<bool(int, int)>& less,
                          long long max_chains) {
    ChainSurvey out;
    for_each_chain(
        static_cast<int>(gens.size()), less,
        [&](const std::vector<int>& chain) {
            Monomial m = direct_lcm(gens, chain);
            for (size_t skip = 0; skip < chain.size() && out.collision_free; ++skip) {
                std::vector<int> sub;
                for (size_t i = 0; i < chain.size(); ++i)
                    if (i != skip) sub.push_back(chain[i]);
                if (direct_lcm(gens, sub) == m) out.collision_free = false;
            }
            out.chains.push_back(chain);
            out.lcms.push_back(std::move(m));
        },
        max_chains);
    return out;
}

GradedResolution resolution_from_survey(const ChainSurvey& s) {
    GradedResolution res;
    std::vector<std::map<int, Int>> by_level;
    for (size_t c = 0; c < s.chains.size(); ++c) {
        const int k = static_cast<int>(s.chains[c].size());
        if (static_cast<int>(by_level.size()) < k) by_level.resize(static_cast<size_t>(k));
        by_level[static_cast<size_t>(k) - 1][s.lcms[c].degree()] += 1;
    }
    for (const auto& level : by_level) {
        std::vector<std::pair<int, Int>> term(level.begin(), level.end());
        res.terms.push_back(std::move(term));
    }
    res.minimal = s.collision_free;
    return res;
}

BettiTable betti_from_survey(const ChainSurvey& s) {
    BettiTable table;
    for (size_t c = 0; c < s.chains.size(); ++c) {
        const int k = static_cast<int>(s.chains[c].size());
        table.counts[{k, s.lcms[c].degree()}] += 1;
    }
    table.minimal = s.collision_free;
    return table;
}

std::vector<Monomial> family_gens(const MonomialFamily& f) {
    std::vector<Monomial> gens;
    gens.reserve(static_cast<size_t>(f.size()));
    for (int i = 0; i < f.size(); ++i) gens.push_back(f.gen(i));
    return gens;
}

void require_upper_bounds(const ConditionReport& report) {
    if (report.om == Verdict::pass) return;
    std::string detail = "family fails the upper-bound (order) condition";
    for (const auto& w : report.witnesses) {
        if (w.condition == "OM" || w.condition == "MM3") {
            detail += ": " + w.detail;
            break;
        }
    }
    throw validation_error(detail);
}

// Indices that survive dropping every generator divisible by another (ties
// keep the earliest).
std::vector<int> minimal_generator_indices(const std::vector<Monomial>& gens) {
    std::vector<int> kept;
    for (int j = 0; j < static_cast<int>(gens.size()); ++j) {
        bool redundant = false;
        for (int i = 0; i < static_cast<int>(gens.size()) && !redundant; ++i) {
            if (i == j) continue;
            if (gens[static_cast<size_t>(i)].divides(gens[static_cast<size_t>(j)]) &&
                (!(gens[static_cast<size_t>(i)] == gens[static_cast<size_t>(j)]) || i < j))
                redundant = true;
        }
        if (!redundant) kept.push_back(j);
    }
    return kept;
}

SimplicialComplex scarf_of_minimalized(const std::vector<Monomial>& gens, int max_generators) {
    const std::vector<int> kept = minimal_generator_indices(gens);
    std::vector<Monomial> min_gens;
    for (int idx : kept) min_gens.push_back(gens[static_cast<size_t>(idx)]);
    const SimplicialComplex scarf = scarf_complex(min_gens, max_generators);
    std::vector<std::vector<int>> faces;
    for (const auto& face : scarf.faces()) {
        std::vector<int> relabeled;
        for (int v : face) relabeled.push_back(kept[static_cast<size_t>(v)]);
        faces.push_back(std::move(relabeled));
    }
    return SimplicialComplex(kept, std::move(faces));
}

bool compare_order_scarf_impl(const std::vector<Monomial>& gens,
                              const std::function<bool(int, int)>& less,
                              long long max_chains) {
    std::vector<std::vector<int>> order_faces;
    for_each_chain(
        static_cast<int>(gens.size()), less,
        [&](const std::vector<int>& chain) { order_faces.push_back(chain); }, max_chains);
    std::vector<std::vector<int>> scarf_faces = scarf_of_minimalized(gens, 20).faces();
    std::sort(order_faces.begin(), order_faces.end());
    std::sort(scarf_faces.begin(), scarf_faces.end());
    return order_faces == scarf_faces;
}

} // namespace

std::string GradedResolution::display() const {
    std::ostringstream os;
    os << "0";
    for (auto it = terms.rbegin(); it != terms.rend(); ++it) {
        os << " → ";
        bool first = true;
        for (const auto& [d, r] : *it) {
            if (!first) os << " ⊕ ";
            first = false;
            os << "S(-" << d << ")";
            if (r != 1) os << "^" << r;
        }
        if (first) os << "0"; // an empty term prints as the zero module
    }
    os << " → S";
    return os.str();
}

QPolynomial GradedResolution::euler_numerator() const {
    QPolynomial out = QPolynomial::one();
    int sign = -1;
    for (const auto& term : terms) {
        for (const auto& [d, r] : term) out += QPolynomial::monomial(Int(sign) * r, d);
        sign = -sign;
    }
    return out;
}

std::vector<Int> GradedResolution::betti_totals() const {
    std::vector<Int> out;
    for (const auto& term : terms) {
        Int total = 0;
        for (const auto& [d, r] : term) total += r;
        out.push_back(total);
    }
    return out;
}

Int BettiTable::total(int k) const {
    Int out = 0;
    for (const auto& [kd, c] : counts)
        if (kd.first == k) out += c;
    return out;
}

SimplicialComplex::SimplicialComplex(std::vector<int> vertices,
                                     std::vector<std::vector<int>> faces)
    : vertices_(std::move(vertices)), faces_(std::move(faces)) {
    std::sort(vertices_.begin(), vertices_.end());
    if (std::adjacent_find(vertices_.begin(), vertices_.end()) != vertices_.end())
        throw validation_error("duplicate vertex label");
    for (auto& face : faces_) {
        if (face.empty()) throw validation_error("empty face");
        std::sort(face.begin(), face.end());
        if (std::adjacent_find(face.begin(), face.end()) != face.end())
            throw validation_error("face repeats a vertex");
        for (int v : face)
            if (!std::binary_search(vertices_.begin(), vertices_.end(), v))
                throw validation_error("face uses an unknown vertex");
    }
    std::sort(faces_.begin(), faces_.end(), [](const auto& a, const auto& b) {
        if (a.size() != b.size()) return a.size() < b.size();
        return a < b;
    });
    if (std::adjacent_find(faces_.begin(), faces_.end()) != faces_.end())
        throw validation_error("duplicate face");
    for (const auto& face : faces_) {
        if (face.size() < 2) continue;
        for (size_t skip = 0; skip < face.size(); ++skip) {
            std::vector<int> sub;
            for (size_t i = 0; i < face.size(); ++i)
                if (i != skip) sub.push_back(face[i]);
            if (!std::binary_search(faces_.begin(), faces_.end(), sub,
                                    [](const auto& a, const auto& b) {
                                        if (a.size() != b.size()) return a.size() < b.size();
                                        return a < b;
                                    }))
                throw validation_error("faces are not closed under taking subsets");
        }
    }
}

std::vector<int> SimplicialComplex::face_counts_by_dim() const {
    std::vector<int> counts;
    for (const auto& face : faces_) {
        if (counts.size() < face.size()) counts.resize(face.size(), 0);
        ++counts[face.size() - 1];
    }
    return counts;
}

bool SimplicialComplex::connected() const {
    if (vertices_.size() <= 1) return true;
    std::vector<int> parent(vertices_.size());
    for (size_t i = 0; i < parent.size(); ++i) parent[i] = static_cast<int>(i);
    std::function<int(int)> find = [&](int v) {
        while (parent[static_cast<size_t>(v)] != v)
            v = parent[static_cast<size_t>(v)] = parent[static_cast<size_t>(parent[static_cast<size_t>(v)])];
        return v;
    };
    auto index_of = [&](int label) {
        return static_cast<int>(std::lower_bound(vertices_.begin(), vertices_.end(), label) -
                                vertices_.begin());
    };
    for (const auto& face : faces_) {
        if (face.size() != 2) continue;
        const int a = find(index_of(face[0]));
        const int b = find(index_of(face[1]));
        if (a != b) parent[static_cast<size_t>(a)] = b;
    }
    const int root = find(0);
    for (size_t i = 1; i < vertices_.size(); ++i)
        if (find(static_cast<int>(i)) != root) return false;
    return true;
}

GradedResolution order_complex_resolution(const MonomialFamily& f, long long max_chains) {
    require_upper_bounds(check_conditions(f));
    return resolution_from_survey(survey_chains(
        family_gens(f), [&](int u, int v) { return f.less(u, v); }, max_chains));
}

GradedResolution order_complex_resolution(const OrderIdealFamily& f, long long max_chains) {
    require_upper_bounds(check_conditions(f));
    return resolution_from_survey(survey_chains(
        f.gens(), [&](int u, int v) { return f.less(u, v); }, max_chains));
}

BettiTable betti_numbers(const MonomialFamily& f, long long max_chains) {
    return betti_from_survey(survey_chains(
        family_gens(f), [&](int u, int v) { return f.less(u, v); }, max_chains));
}

BettiTable betti_numbers(const OrderIdealFamily& f, long long max_chains) {
    return betti_from_survey(survey_chains(
        f.gens(), [&](int u, int v) { return f.less(u, v); }, max_chains));
}

SimplicialComplex scarf_complex(const std::vector<Monomial>& gens, int max_generators) {
    const int count = static_cast<int>(gens.size());
    if (count < 1) throw validation_error("at least one generator required");
    if (count > max_generators)
        throw capacity_error("subset sweep limited to " + std::to_string(max_generators) +
                             " generators; raise the guard to proceed");
    const int nvars = gens.front().nvars();
    for (const auto& g : gens)
        if (g.nvars() != nvars) throw dimension_error("generators disagree on variable count");
    for (int i = 0; i < count; ++i)
        for (int j = 0; j < count; ++j)
            if (i != j && gens[static_cast<size_t>(i)].divides(gens[static_cast<size_t>(j)]))
                throw validation_error("generators are not minimal: " +
                                       gens[static_cast<size_t>(i)].str() + " divides " +
                                       gens[static_cast<size_t>(j)].str());

    const std::uint32_t total = 1u << count;
    std::vector<std::vector<int>> lcm_of(total);
    std::map<std::vector<int>, int> seen;
    lcm_of[0].assign(static_cast<size_t>(nvars), 0);
    seen[lcm_of[0]] = 1;
    for (std::uint32_t mask = 1; mask < total; ++mask) {
        const int low = std::countr_zero(mask);
        std::vector<int> e = lcm_of[mask & (mask - 1)];
        for (int i = 0; i < nvars; ++i)
            e[static_cast<size_t>(i)] =
                std::max(e[static_cast<size_t>(i)], gens[static_cast<size_t>(low)].exp(i));
        seen[e] += 1;
        lcm_of[mask] = std::move(e);
    }
    std::vector<int> vertices(static_cast<size_t>(count));
    for (int i = 0; i < count; ++i) vertices[static_cast<size_t>(i)] = i;
    std::vector<std::vector<int>> faces;
    for (std::uint32_t mask = 1; mask < total; ++mask) {
        if (seen.at(lcm_of[mask]) != 1) continue;
        std::vector<int> face;
        for (int i = 0; i < count; ++i)
            if (mask >> i & 1u) face.push_back(i);
        faces.push_back(std::move(face));
    }
    return SimplicialComplex(std::move(vertices), std::move(faces));
}

SimplicialComplex scarf_complex(const MonomialFamily& f, int max_generators) {
    return scarf_of_minimalized(family_gens(f), max_generators);
}

bool compare_order_scarf(const MonomialFamily& f, long long max_chains) {
    const ConditionReport report = check_conditions(f);
    if (!report.monotone())
        throw validation_error("order/scarf comparison requires a monotone family");
    return compare_order_scarf_impl(
        family_gens(f), [&](int u, int v) { return f.less(u, v); }, max_chains);
}

bool compare_order_scarf(const OrderIdealFamily& f, long long max_chains) {
    require_upper_bounds(check_conditions(f));
    return compare_order_scarf_impl(
        f.gens(), [&](int u, int v) { return f.less(u, v); }, max_chains);
}

bool euler_check(const GradedResolution& res, const MonomialFamily& f, int cap) {
    const QPolynomial num = hilbert_numerator(f);
    if (res.euler_numerator() != num) return false;
    if (cap > 0) {
        const std::vector<Int> series = num.series_over_one_minus_q(f.n(), cap + 1);
        std::vector<Int> counts = degree_counts(standard_basis(f, cap).monomials);
        counts.resize(static_cast<size_t>(cap) + 1, Int(0));
        if (series != counts) return false;
    }
    return true;
}

std::vector<Int> subcomplex_homology(const MonomialFamily& f, const Monomial& m,
                                     long long max_faces) {
    if (m.nvars() != f.n()) throw dimension_error("monomial has wrong variable count");
    std::vector<int> verts;
    for (int i = 0; i < f.size(); ++i)
        if (f.gen(i).divides(m)) verts.push_back(i);

    std::vector<std::vector<std::vector<int>>> faces_by_dim;
    long long total = 0;
    for_each_chain(
        static_cast<int>(verts.size()),
        [&](int u, int v) { return f.less(verts[static_cast<size_t>(u)], verts[static_cast<size_t>(v)]); },
        [&](const std::vector<int>& chain) {
            if (++total > max_faces)
                throw capacity_error("subcomplex exceeds " + std::to_string(max_faces) +
                                     " faces; raise the guard to proceed");
            const int dim = static_cast<int>(chain.size()) - 1;
            if (static_cast<int>(faces_by_dim.size()) <= dim)
                faces_by_dim.resize(static_cast<size_t>(dim) + 1);
            faces_by_dim[static_cast<size_t>(dim)].push_back(chain);
        },
        max_faces);

    if (faces_by_dim.empty()) return {Int(1)}; // empty complex: rank 1 in degree -1
    for (auto& level : faces_by_dim) std::sort(level.begin(), level.end());

    const int top = static_cast<int>(faces_by_dim.size()) - 1;
    std::vector<int> boundary_rank(static_cast<size_t>(top) + 2, 0);
    boundary_rank[0] = 1; // augmentation C_0 -> K over a nonempty vertex set
    for (int k = 1; k <= top; ++k) {
        const auto& rows_faces = faces_by_dim[static_cast<size_t>(k) - 1];
        const auto& cols_faces = faces_by_dim[static_cast<size_t>(k)];
        BigIntMatrix b(static_cast<int>(rows_faces.size()), static_cast<int>(cols_faces.size()));
        for (int c = 0; c < static_cast<int>(cols_faces.size()); ++c) {
            const auto& face = cols_faces[static_cast<size_t>(c)];
            int sign = 1;
            for (size_t skip = 0; skip < face.size(); ++skip) {
                std::vector<int> sub;
                for (size_t i = 0; i < face.size(); ++i)
                    if (i != skip) sub.push_back(face[i]);
                const auto it = std::lower_bound(rows_faces.begin(), rows_faces.end(), sub);
                b.at(static_cast<int>(it - rows_faces.begin()), c) += sign;
                sign = -sign;
            }
        }
        boundary_rank[static_cast<size_t>(k)] = exact_rank(b);
    }

    std::vector<Int> ranks(static_cast<size_t>(top) + 2, Int(0));
    for (int k = 0; k <= top; ++k) {
        const Int faces_k = Int(static_cast<long long>(faces_by_dim[static_cast<size_t>(k)].size()));
        ranks[static_cast<size_t>(k) + 1] =
            faces_k - boundary_rank[static_cast<size_t>(k)] - boundary_rank[static_cast<size_t>(k) + 1];
    }
    return ranks;
}

} // namespace parq
