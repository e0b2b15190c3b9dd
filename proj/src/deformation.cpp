#include "parq/deformation.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <sstream>
#include <utility>

#include "parq/combinat.hpp"
#include "parq/echelon.hpp"
#include "parq/errors.hpp"
#include "parq/ideal.hpp"

namespace parq {

namespace {

Rat rat_pow(const Rat& base, int e) {
    Rat out = 1;
    for (int i = 0; i < e; ++i) out *= base;
    return out;
}

// Nonempty subsets of {1..n} in the order used by subset-labelled families:
// by size, then by mask value.
std::vector<std::uint32_t> sorted_masks(int n) {
    if (n < 1 || n > 16)
        throw capacity_error("full subset enumeration limited to n <= 16");
    std::vector<std::uint32_t> masks;
    masks.reserve((1u << n) - 1);
    for (std::uint32_t m = 1; m < (1u << n); ++m) masks.push_back(m);
    std::sort(masks.begin(), masks.end(), [](std::uint32_t a, std::uint32_t b) {
        const int pa = std::popcount(a), pb = std::popcount(b);
        if (pa != pb) return pa < pb;
        return a < b;
    });
    return masks;
}

// Edges leaving I, counted from the adjacency with multiplicity; the root
// side included, loops not.
long long edges_leaving(const Digraph& g, std::uint32_t mask) {
    const int n = g.n();
    long long total = 0;
    for (int i = 1; i <= n; ++i) {
        if (!(mask >> (i - 1) & 1u)) continue;
        for (int j = 0; j <= n; ++j)
            if (j == 0 || !(mask >> (j - 1) & 1u)) total += g.a(i, j);
    }
    return total;
}

std::map<std::vector<int>, int> column_index(const std::vector<std::vector<int>>& cols) {
    std::map<std::vector<int>, int> out;
    for (int i = 0; i < static_cast<int>(cols.size()); ++i) out.emplace(cols[static_cast<size_t>(i)], i);
    return out;
}

void check_degree_width(int nvars, int degree, int max_monomials) {
    if (count_monomials_of_degree(nvars, degree) > max_monomials)
        throw capacity_error("graded piece at degree " + std::to_string(degree) +
                             " exceeds " + std::to_string(max_monomials) +
                             " monomials; raise the guard to proceed");
}

// Variable permutation acting on an exponent vector: variable i goes to
// perm[i], so the new exponent of perm[i] is the old exponent of i.
std::vector<int> apply_perm(const std::vector<int>& perm, const std::vector<int>& e) {
    std::vector<int> out(e.size());
    for (size_t i = 0; i < e.size(); ++i) out[static_cast<size_t>(perm[i])] = e[i];
    return out;
}

std::map<std::vector<int>, Rat> permuted_terms(const std::vector<int>& perm,
                                               const std::map<std::vector<int>, Rat>& terms) {
    std::map<std::vector<int>, Rat> out;
    for (const auto& [e, c] : terms) out.emplace(apply_perm(perm, e), c);
    return out;
}

// A set of disjoint variable swaps that each leave the row data unchanged
// generates an elementary abelian group.  Its +-1 characters split the
// monomial basis into independent blocks, so a rank computation decomposes
// into one much smaller exact elimination per character; the elimination
// depth (and with it integer entry growth) shrinks by the block count.
struct VarSymmetry {
    std::vector<std::vector<int>> elements;   // variable permutations; [0] = id
    std::vector<std::vector<int>> characters; // characters[c][g] in {+1,-1}
};

VarSymmetry build_symmetry(int nvars,
                           const std::function<bool(const std::vector<int>&)>& keeps) {
    std::vector<std::pair<int, int>> swaps;
    std::vector<bool> used(static_cast<size_t>(nvars), false);
    for (int i = 0; i < nvars && swaps.size() < 5; ++i) {
        if (used[static_cast<size_t>(i)]) continue;
        for (int j = i + 1; j < nvars; ++j) {
            if (used[static_cast<size_t>(j)]) continue;
            std::vector<int> perm(static_cast<size_t>(nvars));
            std::iota(perm.begin(), perm.end(), 0);
            std::swap(perm[static_cast<size_t>(i)], perm[static_cast<size_t>(j)]);
            if (keeps(perm)) {
                swaps.emplace_back(i, j);
                used[static_cast<size_t>(i)] = used[static_cast<size_t>(j)] = true;
                break;
            }
        }
    }
    const int t = static_cast<int>(swaps.size());
    VarSymmetry sym;
    for (std::uint32_t s = 0; s < (1u << t); ++s) {
        std::vector<int> perm(static_cast<size_t>(nvars));
        std::iota(perm.begin(), perm.end(), 0);
        for (int b = 0; b < t; ++b)
            if (s >> b & 1u)
                std::swap(perm[static_cast<size_t>(swaps[static_cast<size_t>(b)].first)],
                          perm[static_cast<size_t>(swaps[static_cast<size_t>(b)].second)]);
        sym.elements.push_back(std::move(perm));
    }
    for (std::uint32_t c = 0; c < (1u << t); ++c) {
        std::vector<int> chi;
        chi.reserve(sym.elements.size());
        for (std::uint32_t s = 0; s < (1u << t); ++s)
            chi.push_back(std::popcount(c & s) % 2 ? -1 : 1);
        sym.characters.push_back(std::move(chi));
    }
    return sym;
}

// Character-block structure of one graded monomial basis: each column orbit
// contributes one representative column to every character that is trivial
// on the orbit's stabilizer, and the block widths add up to the full width.
struct ColumnBlocks {
    std::vector<int> orbit_rep;             // global column -> least column in orbit
    std::vector<std::vector<int>> local_of; // [chi][global column] -> local or -1
    std::vector<int> width;                 // [chi] -> block column count
};

ColumnBlocks split_columns(const std::vector<std::vector<int>>& cols,
                           const std::map<std::vector<int>, int>& colmap,
                           const VarSymmetry& sym) {
    const int ncols = static_cast<int>(cols.size());
    const int ng = static_cast<int>(sym.elements.size());
    const int nchi = static_cast<int>(sym.characters.size());
    ColumnBlocks cb;
    cb.orbit_rep.assign(static_cast<size_t>(ncols), 0);
    std::vector<std::uint64_t> stab(static_cast<size_t>(ncols), 0);
    for (int c = 0; c < ncols; ++c) {
        int rep = c;
        std::uint64_t s = 0;
        for (int g = 0; g < ng; ++g) {
            const int img = colmap.at(apply_perm(sym.elements[static_cast<size_t>(g)],
                                                 cols[static_cast<size_t>(c)]));
            if (img == c) s |= std::uint64_t(1) << g;
            rep = std::min(rep, img);
        }
        cb.orbit_rep[static_cast<size_t>(c)] = rep;
        stab[static_cast<size_t>(c)] = s;
    }
    cb.local_of.assign(static_cast<size_t>(nchi), std::vector<int>(static_cast<size_t>(ncols), -1));
    cb.width.assign(static_cast<size_t>(nchi), 0);
    for (int c = 0; c < ncols; ++c) {
        if (cb.orbit_rep[static_cast<size_t>(c)] != c) continue;
        for (int x = 0; x < nchi; ++x) {
            bool ok = true;
            for (int g = 0; g < ng; ++g)
                if ((stab[static_cast<size_t>(c)] >> g & 1u) &&
                    sym.characters[static_cast<size_t>(x)][static_cast<size_t>(g)] < 0) {
                    ok = false;
                    break;
                }
            if (ok)
                cb.local_of[static_cast<size_t>(x)][static_cast<size_t>(c)] =
                    cb.width[static_cast<size_t>(x)]++;
        }
    }
    return cb;
}

// Insert one row orbit representative into every character block.  images[g]
// is the sparse coefficient vector of the g-th group element applied to the
// row; the character combination lives in the corresponding eigenspace, so
// reading it off at representative columns is a faithful coordinate vector.
void insert_blocks(const std::vector<std::map<int, Int>>& images, const VarSymmetry& sym,
                   const ColumnBlocks& cb, std::vector<RowEchelon>& ech) {
    const int ng = static_cast<int>(sym.elements.size());
    const int nchi = static_cast<int>(sym.characters.size());
    for (int x = 0; x < nchi; ++x) {
        std::map<int, Int> w;
        for (int g = 0; g < ng; ++g) {
            const int sign = sym.characters[static_cast<size_t>(x)][static_cast<size_t>(g)];
            for (const auto& [col, val] : images[static_cast<size_t>(g)]) {
                if (sign > 0)
                    w[col] += val;
                else
                    w[col] -= val;
            }
        }
        std::vector<Int> dense(static_cast<size_t>(std::max(cb.width[static_cast<size_t>(x)], 1)),
                               Int(0));
        bool nonzero = false;
        for (auto& [col, val] : w) {
            if (val == 0) continue;
            if (cb.orbit_rep[static_cast<size_t>(col)] != col) continue;
            const int lc = cb.local_of[static_cast<size_t>(x)][static_cast<size_t>(col)];
            if (lc < 0) throw invariant_error("character component leaked outside its block");
            dense[static_cast<size_t>(lc)] = std::move(val);
            nonzero = true;
        }
        if (nonzero) ech[static_cast<size_t>(x)].insert(std::move(dense));
    }
}

} // namespace

HomogeneousPolynomial::HomogeneousPolynomial(int nvars, int degree)
    : nvars_(nvars), degree_(degree) {
    if (nvars < 0 || degree < 0)
        throw dimension_error("homogeneous polynomial needs nvars >= 0 and degree >= 0");
}

void HomogeneousPolynomial::add_term(const std::vector<int>& exponents, const Rat& c) {
    if (static_cast<int>(exponents.size()) != nvars_)
        throw dimension_error("term length does not match variable count");
    int deg = 0;
    for (int e : exponents) {
        if (e < 0) throw validation_error("negative exponent in term");
        deg += e;
    }
    if (deg != degree_)
        throw validation_error("term degree " + std::to_string(deg) +
                               " differs from polynomial degree " + std::to_string(degree_));
    if (c == 0) return;
    auto it = terms_.find(exponents);
    if (it == terms_.end()) {
        terms_.emplace(exponents, c);
    } else {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

HomogeneousPolynomial HomogeneousPolynomial::shifted(const std::vector<int>& shift) const {
    if (static_cast<int>(shift.size()) != nvars_)
        throw dimension_error("shift length does not match variable count");
    int extra = 0;
    for (int e : shift) {
        if (e < 0) throw validation_error("negative exponent in shift");
        extra += e;
    }
    HomogeneousPolynomial out(nvars_, degree_ + extra);
    for (const auto& [e, c] : terms_) {
        std::vector<int> f = e;
        for (int i = 0; i < nvars_; ++i) f[static_cast<size_t>(i)] += shift[static_cast<size_t>(i)];
        out.terms_.emplace(std::move(f), c);
    }
    return out;
}

std::uint32_t HomogeneousPolynomial::support_mask() const {
    std::uint32_t mask = 0;
    for (const auto& [e, c] : terms_)
        for (int i = 0; i < nvars_; ++i)
            if (e[static_cast<size_t>(i)] > 0) mask |= 1u << i;
    return mask;
}

std::vector<Int> HomogeneousPolynomial::coefficient_row(
    const std::map<std::vector<int>, int>& column_of) const {
    std::vector<Int> row(column_of.size(), Int(0));
    Int denom_lcm = 1;
    for (const auto& [e, c] : terms_) {
        const Int d = denominator(c);
        denom_lcm = denom_lcm / gcd(denom_lcm, d) * d;
    }
    for (const auto& [e, c] : terms_) {
        auto it = column_of.find(e);
        if (it == column_of.end())
            throw dimension_error("polynomial term has no column in the given order");
        row[static_cast<size_t>(it->second)] = numerator(c) * (denom_lcm / denominator(c));
    }
    return row;
}

std::string HomogeneousPolynomial::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        Rat coef = c;
        if (first) {
            if (coef < 0) {
                os << "-";
                coef = -coef;
            }
        } else {
            os << (coef < 0 ? " - " : " + ");
            if (coef < 0) coef = -coef;
        }
        first = false;
        const Monomial m{std::vector<int>(e)};
        if (coef != 1 || m.degree() == 0) {
            os << coef;
            if (m.degree() > 0) os << "*";
        }
        if (m.degree() > 0) os << m.str();
    }
    return os.str();
}

HomogeneousPolynomial HomogeneousPolynomial::linear_power(int nvars,
                                                          const std::vector<Rat>& coeffs,
                                                          int power) {
    if (static_cast<int>(coeffs.size()) != nvars)
        throw dimension_error("coefficient count does not match variable count");
    if (power < 0) throw validation_error("negative power");
    std::vector<int> live;
    for (int i = 0; i < nvars; ++i)
        if (coeffs[static_cast<size_t>(i)] != 0) live.push_back(i);
    HomogeneousPolynomial out(nvars, power);
    if (live.empty()) {
        if (power == 0) out.add_term(std::vector<int>(static_cast<size_t>(nvars), 0), 1);
        return out;
    }
    for (const auto& part : monomials_of_degree(static_cast<int>(live.size()), power)) {
        Rat c(multinomial(part));
        std::vector<int> e(static_cast<size_t>(nvars), 0);
        for (int j = 0; j < static_cast<int>(live.size()); ++j) {
            c *= rat_pow(coeffs[static_cast<size_t>(live[static_cast<size_t>(j)])],
                         part[static_cast<size_t>(j)]);
            e[static_cast<size_t>(live[static_cast<size_t>(j)])] = part[static_cast<size_t>(j)];
        }
        out.add_term(e, c);
    }
    return out;
}

HomogeneousPolynomial HomogeneousPolynomial::power_of_sum(int nvars, std::uint32_t mask,
                                                          int power) {
    std::vector<Rat> coeffs(static_cast<size_t>(nvars), Rat(0));
    for (int i = 0; i < nvars; ++i)
        if (mask >> i & 1u) coeffs[static_cast<size_t>(i)] = 1;
    return linear_power(nvars, coeffs, power);
}

HomogeneousPolynomial HomogeneousPolynomial::from_monomial(int nvars, const Monomial& m) {
    if (m.nvars() != nvars) throw dimension_error("monomial has wrong variable count");
    HomogeneousPolynomial out(nvars, m.degree());
    out.add_term(m.exps(), 1);
    return out;
}

std::vector<HomogeneousPolynomial> power_generators(const Digraph& g) {
    const int n = g.n();
    std::vector<HomogeneousPolynomial> out;
    for (std::uint32_t mask : sorted_masks(n)) {
        const long long d = edges_leaving(g, mask);
        out.push_back(HomogeneousPolynomial::power_of_sum(n, mask, static_cast<int>(d)));
    }
    return out;
}

std::vector<HomogeneousPolynomial> rho_power_generators(int nvars,
                                                        const std::vector<int>& rho) {
    if (static_cast<int>(rho.size()) != nvars)
        throw dimension_error("degree sequence length does not match variable count");
    std::vector<HomogeneousPolynomial> out;
    for (std::uint32_t mask : sorted_masks(nvars)) {
        const int r = std::popcount(mask);
        const int e = rho[static_cast<size_t>(r) - 1];
        if (e < 0) throw validation_error("degree sequence must be non-negative");
        out.push_back(HomogeneousPolynomial::power_of_sum(nvars, mask, r * e));
    }
    return out;
}

std::vector<HomogeneousPolynomial> kl_power_generators(int nvars, int k, int l) {
    std::vector<int> rho(static_cast<size_t>(nvars));
    for (int r = 1; r <= nvars; ++r) rho[static_cast<size_t>(r) - 1] = l + k * (nvars - r);
    return rho_power_generators(nvars, rho);
}

std::vector<HomogeneousPolynomial> hat_power_generators(const Digraph& g) {
    const int n = g.n();
    std::vector<HomogeneousPolynomial> out;
    for (std::uint32_t mask : sorted_masks(n)) {
        const long long d = edges_leaving(g, mask);
        out.push_back(HomogeneousPolynomial::power_of_sum(n, mask, static_cast<int>(d) + 1));
    }
    return out;
}

std::vector<Int> quotient_graded_dims(int nvars,
                                      const std::vector<HomogeneousPolynomial>& gens,
                                      int cap,
                                      int max_monomials_per_degree) {
    if (nvars < 1) throw dimension_error("quotient needs at least one variable");
    if (cap < 0) throw validation_error("quotient grading cap must be >= 0");
    for (const auto& p : gens) {
        if (p.nvars() != nvars)
            throw dimension_error("generator has wrong variable count");
        if (p.is_zero()) throw validation_error("zero generator in quotient");
    }

    // Any pair swap of variables that permutes the generator set leaves every
    // graded row space unchanged, so ranks can be computed block by block.
    const VarSymmetry sym = build_symmetry(nvars, [&](const std::vector<int>& perm) {
        for (const auto& p : gens) {
            const auto img = permuted_terms(perm, p.terms());
            bool found = false;
            for (const auto& q : gens)
                if (q.degree() == p.degree() && q.terms() == img) {
                    found = true;
                    break;
                }
            if (!found) return false;
        }
        return true;
    });
    const int ng = static_cast<int>(sym.elements.size());
    const int s = static_cast<int>(gens.size());
    std::vector<std::vector<int>> gen_image(static_cast<size_t>(ng),
                                            std::vector<int>(static_cast<size_t>(s), -1));
    for (int g = 0; g < ng; ++g)
        for (int i = 0; i < s; ++i) {
            const auto img =
                permuted_terms(sym.elements[static_cast<size_t>(g)], gens[static_cast<size_t>(i)].terms());
            for (int j = 0; j < s; ++j)
                if (gens[static_cast<size_t>(j)].degree() == gens[static_cast<size_t>(i)].degree() &&
                    gens[static_cast<size_t>(j)].terms() == img) {
                    gen_image[static_cast<size_t>(g)][static_cast<size_t>(i)] = j;
                    break;
                }
            if (gen_image[static_cast<size_t>(g)][static_cast<size_t>(i)] < 0)
                throw invariant_error("generator set is not closed under its symmetry");
        }
    // Clear denominators once per generator; row scaling does not change rank.
    std::vector<std::vector<std::pair<std::vector<int>, Int>>> int_terms(static_cast<size_t>(s));
    for (int i = 0; i < s; ++i) {
        Int denom_lcm = 1;
        for (const auto& [e, c] : gens[static_cast<size_t>(i)].terms()) {
            const Int d = denominator(c);
            denom_lcm = denom_lcm / gcd(denom_lcm, d) * d;
        }
        for (const auto& [e, c] : gens[static_cast<size_t>(i)].terms())
            int_terms[static_cast<size_t>(i)].emplace_back(e, numerator(c) * (denom_lcm / denominator(c)));
    }

    std::vector<Int> dims(static_cast<size_t>(cap) + 1, Int(0));
    for (int k = 0; k <= cap; ++k) {
        check_degree_width(nvars, k, max_monomials_per_degree);
        const std::vector<std::vector<int>> cols = monomials_of_degree(nvars, k);
        const auto colmap = column_index(cols);
        const ColumnBlocks cb = split_columns(cols, colmap, sym);
        std::vector<RowEchelon> ech;
        for (int x = 0; x < static_cast<int>(sym.characters.size()); ++x)
            ech.emplace_back(std::max(cb.width[static_cast<size_t>(x)], 1));
        std::vector<int> f(static_cast<size_t>(nvars));
        for (int i = 0; i < s; ++i) {
            const int d = k - gens[static_cast<size_t>(i)].degree();
            if (d < 0) continue;
            for (const auto& a : monomials_of_degree(nvars, d)) {
                // Skip rows that are group images of an earlier row: their
                // character components only differ by sign.
                bool canonical = true;
                for (int g = 1; g < ng && canonical; ++g) {
                    const int ig = gen_image[static_cast<size_t>(g)][static_cast<size_t>(i)];
                    if (ig < i ||
                        (ig == i && apply_perm(sym.elements[static_cast<size_t>(g)], a) < a))
                        canonical = false;
                }
                if (!canonical) continue;
                std::vector<std::map<int, Int>> images(static_cast<size_t>(ng));
                for (const auto& [e, c] : int_terms[static_cast<size_t>(i)]) {
                    for (int v = 0; v < nvars; ++v)
                        f[static_cast<size_t>(v)] = e[static_cast<size_t>(v)] + a[static_cast<size_t>(v)];
                    for (int g = 0; g < ng; ++g)
                        images[static_cast<size_t>(g)].emplace(
                            colmap.at(apply_perm(sym.elements[static_cast<size_t>(g)], f)), c);
                }
                insert_blocks(images, sym, cb, ech);
            }
        }
        long long rank = 0;
        for (const auto& e : ech) rank += e.rank();
        dims[static_cast<size_t>(k)] = Int(static_cast<long long>(cols.size()) - rank);
        if (dims[static_cast<size_t>(k)] == 0) break; // all later degrees are zero too
    }
    return dims;
}

bool is_i_deformation(int nvars, std::uint32_t mask, const Monomial& m,
                      const HomogeneousPolynomial& p, int cap) {
    if (m.nvars() != nvars || p.nvars() != nvars)
        throw dimension_error("variable counts disagree");
    if (mask == 0 || mask >= (1u << nvars))
        throw validation_error("subset mask out of range");
    if ((m.support_mask() & ~mask) != 0)
        throw validation_error("monomial uses variables outside its subset");
    if ((p.support_mask() & ~mask) != 0)
        throw validation_error("polynomial uses variables outside its subset");
    if (p.degree() != m.degree())
        throw validation_error("polynomial degree differs from monomial degree");
    if (p.is_zero()) return false;

    const std::vector<int> vars = mask_elements(mask); // 1-based
    const int r = static_cast<int>(vars.size());
    std::vector<int> m_red(static_cast<size_t>(r));
    for (int j = 0; j < r; ++j) m_red[static_cast<size_t>(j)] = m.exp(vars[static_cast<size_t>(j)] - 1);
    std::map<std::vector<int>, Rat> p_red;
    for (const auto& [e, c] : p.terms()) {
        std::vector<int> f(static_cast<size_t>(r));
        for (int j = 0; j < r; ++j) f[static_cast<size_t>(j)] = e[static_cast<size_t>(vars[static_cast<size_t>(j)] - 1)];
        p_red.emplace(std::move(f), c);
    }
    Int denom_lcm = 1;
    for (const auto& [e, c] : p_red) {
        const Int d = denominator(c);
        denom_lcm = denom_lcm / gcd(denom_lcm, d) * d;
    }

    std::vector<std::pair<std::vector<int>, Int>> p_int;
    for (const auto& [e, c] : p_red)
        p_int.emplace_back(e, numerator(c) * (denom_lcm / denominator(c)));

    // Degrees below deg(m) are spanned by the monomials alone.  At degree
    // k >= deg(m) the monomials outside (m) contribute unit rows, so the
    // span condition reduces to the projection of the multiples of p onto
    // the columns divisible by m: a square block (one multiplier per
    // divisible monomial) that must be nonsingular.
    const int deg = m.degree();
    const int cap_eff = cap >= 0 ? cap : 2 * deg + r;
    const VarSymmetry sym = build_symmetry(r, [&](const std::vector<int>& perm) {
        if (apply_perm(perm, m_red) != m_red) return false;
        std::map<std::vector<int>, Rat> img;
        for (const auto& [e, c] : p_red) img.emplace(apply_perm(perm, e), c);
        return img == p_red;
    });
    const int ng = static_cast<int>(sym.elements.size());
    const int nchi = static_cast<int>(sym.characters.size());
    for (int k = deg; k <= cap_eff; ++k) {
        check_degree_width(r, k, 20000);
        const std::vector<std::vector<int>> bcols = monomials_of_degree(r, k - deg);
        const auto bmap = column_index(bcols);
        const ColumnBlocks cb = split_columns(bcols, bmap, sym);
        std::vector<RowEchelon> ech;
        for (int x = 0; x < nchi; ++x)
            ech.emplace_back(std::max(cb.width[static_cast<size_t>(x)], 1));
        std::vector<int> b(static_cast<size_t>(r));
        for (const auto& a : bcols) {
            bool canonical = true;
            for (int g = 1; g < ng && canonical; ++g)
                if (apply_perm(sym.elements[static_cast<size_t>(g)], a) < a) canonical = false;
            if (!canonical) continue;
            std::vector<std::map<int, Int>> images(static_cast<size_t>(ng));
            for (const auto& [e, c] : p_int) {
                bool divisible = true;
                for (int j = 0; j < r; ++j) {
                    b[static_cast<size_t>(j)] = e[static_cast<size_t>(j)] +
                                                a[static_cast<size_t>(j)] -
                                                m_red[static_cast<size_t>(j)];
                    if (b[static_cast<size_t>(j)] < 0) {
                        divisible = false;
                        break;
                    }
                }
                if (!divisible) continue;
                for (int g = 0; g < ng; ++g)
                    images[static_cast<size_t>(g)].emplace(
                        bmap.at(apply_perm(sym.elements[static_cast<size_t>(g)], b)), c);
            }
            insert_blocks(images, sym, cb, ech);
        }
        for (int x = 0; x < nchi; ++x)
            if (ech[static_cast<size_t>(x)].rank() < cb.width[static_cast<size_t>(x)]) return false;
    }
    return true;
}

SpanReport verify_span(const MonomialFamily& f,
                       const std::vector<HomogeneousPolynomial>& gens,
                       int cap) {
    if (static_cast<int>(gens.size()) != f.size())
        throw dimension_error("one polynomial per monomial generator required");
    for (int i = 0; i < f.size(); ++i) {
        if (!is_i_deformation(f.n(), f.label(i), f.gen(i), gens[static_cast<size_t>(i)]))
            throw validation_error("generator for subset " + mask_str(f.label(i)) +
                                   " is not a deformation of " + f.gen(i).str());
    }
    const int cap_eff = cap >= 0 ? cap : default_degree_cap(f);
    const StandardBasis sb = standard_basis(f, cap_eff);
    std::vector<Int> a = degree_counts(sb.monomials);
    a.resize(static_cast<size_t>(cap_eff) + 1, Int(0));
    const std::vector<Int> b = quotient_graded_dims(f.n(), gens, cap_eff);

    SpanReport report;
    report.hilb_a = a;
    report.hilb_b = b;
    report.equal = true;
    for (int k = 0; k <= cap_eff; ++k) {
        if (b[static_cast<size_t>(k)] > a[static_cast<size_t>(k)])
            throw invariant_error("power quotient exceeds monomial quotient at degree " +
                                  std::to_string(k));
        if (a[static_cast<size_t>(k)] != b[static_cast<size_t>(k)] && report.equal) {
            report.equal = false;
            report.first_gap_degree = k;
        }
    }
    return report;
}

std::vector<Int> cg_graded_dims(const EdgeList& g, int max_subgraph_edges) {
    const int n = g.n();
    if (n < 1) throw dimension_error("graph must have at least one non-root vertex");
    const std::vector<EdgeSet> slim = enumerate_slim_subgraphs(g, max_subgraph_edges);
    int max_k = 0;
    for (const auto& h : slim) max_k = std::max(max_k, static_cast<int>(h.size()));
    std::vector<std::vector<const EdgeSet*>> by_size(static_cast<size_t>(max_k) + 1);
    for (const auto& h : slim) by_size[h.size()].push_back(&h);

    std::vector<Int> dims(static_cast<size_t>(max_k) + 1, Int(0));
    for (int k = 0; k <= max_k; ++k) {
        check_degree_width(n, k, 20000);
        const std::vector<std::vector<int>> cols = monomials_of_degree(n, k);
        const auto colmap = column_index(cols);
        RowEchelon ech(static_cast<int>(cols.size()));
        for (const EdgeSet* h : by_size[static_cast<size_t>(k)]) {
            // Expand prod (y_u - y_v) over the edges (u < v), y_0 = 0.
            std::map<std::vector<int>, Int> expansion;
            expansion.emplace(std::vector<int>(static_cast<size_t>(n), 0), Int(1));
            bool zero = false;
            for (int idx : *h) {
                const auto [u, v] = g.edge(idx);
                if (u == v) {
                    zero = true;
                    break;
                }
                std::map<std::vector<int>, Int> next;
                for (const auto& [e, c] : expansion) {
                    if (u > 0) {
                        std::vector<int> eu = e;
                        ++eu[static_cast<size_t>(u - 1)];
                        next[std::move(eu)] += c;
                    }
                    std::vector<int> ev = e;
                    ++ev[static_cast<size_t>(v - 1)];
                    next[std::move(ev)] -= c;
                }
                expansion = std::move(next);
            }
            if (zero) continue;
            std::vector<Int> row(cols.size(), Int(0));
            for (const auto& [e, c] : expansion) row[static_cast<size_t>(colmap.at(e))] = c;
            ech.insert(std::move(row));
        }
        dims[static_cast<size_t>(k)] = ech.rank();
    }
    return dims;
}

ForestCheckReport forest_check(const EdgeList& g) {
    const int n = g.n();
    const int total_edges = g.edge_count();
    std::map<int, Int> counts;
    int max_k = 0;
    for (const EdgeSet& forest : enumerate_subforests(g)) {
        const int act = external_activity(g, forest);
        const int k = total_edges - static_cast<int>(forest.size()) - act;
        if (k < 0) throw invariant_error("forest statistic went negative");
        counts[k] += 1;
        max_k = std::max(max_k, k);
    }
    ForestCheckReport report;
    report.forest_counts.assign(static_cast<size_t>(max_k) + 2, Int(0));
    for (const auto& [k, c] : counts) report.forest_counts[static_cast<size_t>(k)] = c;
    report.quotient_dims =
        quotient_graded_dims(n, hat_power_generators(g.to_digraph()), max_k + 1);
    report.equal = report.forest_counts == report.quotient_dims;
    return report;
}

} // namespace parq
