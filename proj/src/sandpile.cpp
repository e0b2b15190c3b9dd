#include "parq/sandpile.hpp"

#include <algorithm>
#include <limits>

#include "parq/errors.hpp"
#include "parq/monomial.hpp"
#include "parq/parking.hpp"

namespace parq {

namespace {

long long to_ll(const Int& v) {
    if (v > std::numeric_limits<long long>::max() || v < std::numeric_limits<long long>::min())
        throw capacity_error("matrix entry exceeds 64-bit range");
    return v.convert_to<long long>();
}

void check_config(const TopplingMatrix& d, const Config& u) {
    if (static_cast<int>(u.size()) != d.n())
        throw dimension_error("configuration length does not match site count");
    for (long long v : u)
        if (v < 0) throw validation_error("configurations are non-negative");
}

int lowest_critical(const TopplingMatrix& d, const Config& u) {
    for (int i = 0; i < d.n(); ++i)
        if (u[static_cast<size_t>(i)] >= d.diag(i)) return i;
    return -1;
}

} // namespace

TopplingMatrix::TopplingMatrix(BigIntMatrix d) : d_(std::move(d)) {
    const int n = d_.rows();
    entries_.resize(static_cast<size_t>(n) * static_cast<size_t>(n));
    diag_.resize(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j)
            entries_[static_cast<size_t>(i) * static_cast<size_t>(n) + static_cast<size_t>(j)] =
                to_ll(d_.at(i, j));
        diag_[static_cast<size_t>(i)] = to_ll(d_.at(i, i));
    }
    row_sums_nonneg_ = col_sums_nonneg_ = true;
    for (int i = 0; i < n; ++i) {
        Int row = 0, col = 0;
        for (int j = 0; j < n; ++j) {
            row += d_.at(i, j);
            col += d_.at(j, i);
        }
        if (row < 0) row_sums_nonneg_ = false;
        if (col < 0) col_sums_nonneg_ = false;
    }
}

TopplingMatrix TopplingMatrix::validate(const BigIntMatrix& delta, int max_n) {
    const int n = delta.rows();
    if (n != delta.cols() || n < 1) throw dimension_error("toppling matrix must be square and nonempty");
    if (n > max_n)
        throw capacity_error("principal-minor validation limited to n <= " +
                             std::to_string(max_n) + "; raise the guard to proceed");
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (i != j && delta.at(i, j) > 0)
                throw validation_error("off-diagonal entry at (" + std::to_string(i + 1) + "," +
                                       std::to_string(j + 1) + ") is positive");
    for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
        std::vector<int> idx;
        for (int i = 0; i < n; ++i)
            if (mask >> i & 1u) idx.push_back(i);
        if (determinant(delta.submatrix(idx, idx)) <= 0)
            throw validation_error("principal minor on sites " + mask_str(mask) +
                                   " is not positive");
    }
    return TopplingMatrix(delta);
}

bool is_stable(const TopplingMatrix& d, const Config& u) {
    check_config(d, u);
    return lowest_critical(d, u) < 0;
}

StabilizeResult stabilize(const TopplingMatrix& d, Config u, long long max_topplings) {
    check_config(d, u);
    const int n = d.n();
    if (max_topplings < 0) {
        // h > 0 with delta * h = (1..1); each toppling lowers h.u by one.
        std::vector<Int> ones(static_cast<size_t>(n), Int(1));
        const std::vector<Rat> h = solve_rational(d.delta(), ones);
        Rat weight = 0;
        for (int i = 0; i < n; ++i) {
            if (h[static_cast<size_t>(i)] <= 0)
                throw invariant_error("toppling certificate is not positive despite validation");
            weight += h[static_cast<size_t>(i)] * u[static_cast<size_t>(i)];
        }
        const Int bound = numerator(weight) / denominator(weight);
        if (bound > (Int(1) << 50)) throw capacity_error("stabilization bound too large");
        max_topplings = 10 * to_ll(bound) + 16;
    }
    StabilizeResult out;
    out.topplings.assign(static_cast<size_t>(n), 0);
    long long steps = 0;
    for (int site = lowest_critical(d, u); site >= 0; site = lowest_critical(d, u)) {
        if (++steps > max_topplings)
            throw invariant_error("stabilization exceeded its certified toppling bound");
        for (int j = 0; j < n; ++j) u[static_cast<size_t>(j)] -= d.entry(site, j);
        ++out.topplings[static_cast<size_t>(site)];
    }
    out.stable = std::move(u);
    return out;
}

Config avalanche(const TopplingMatrix& d, const Config& u, int site) {
    if (site < 0 || site >= d.n()) throw dimension_error("site out of range");
    if (!is_stable(d, u)) throw validation_error("avalanche operators act on stable configurations");
    Config v = u;
    ++v[static_cast<size_t>(site)];
    return stabilize(d, std::move(v)).stable;
}

bool is_allowed(const TopplingMatrix& d, const Config& u) {
    check_config(d, u);
    const int n = d.n();
    for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
        bool has_witness = false;
        for (int j = 0; j < n && !has_witness; ++j) {
            if (!(mask >> j & 1u)) continue;
            long long demand = 0;
            for (int i = 0; i < n; ++i)
                if (i != j && (mask >> i & 1u)) demand -= d.entry(i, j);
            if (u[static_cast<size_t>(j)] >= demand) has_witness = true;
        }
        if (!has_witness) return false;
    }
    return true;
}

std::vector<Config> recurrent_class(const TopplingMatrix& d, long long max_states) {
    const int n = d.n();
    Int space = 1;
    for (int i = 0; i < n; ++i) space *= d.diag(i);
    if (space > max_states)
        throw capacity_error("stable state space of size " + space.str() +
                             " exceeds the guard; raise it to proceed");
    const long long total = to_ll(space);
    std::vector<long long> stride(static_cast<size_t>(n));
    long long acc = 1;
    for (int i = 0; i < n; ++i) {
        stride[static_cast<size_t>(i)] = acc;
        acc *= d.diag(i);
    }
    auto encode = [&](const Config& u) {
        long long idx = 0;
        for (int i = 0; i < n; ++i) idx += u[static_cast<size_t>(i)] * stride[static_cast<size_t>(i)];
        return idx;
    };
    auto decode = [&](long long idx) {
        Config u(static_cast<size_t>(n));
        for (int i = 0; i < n; ++i) {
            u[static_cast<size_t>(i)] = idx % d.diag(i);
            idx /= d.diag(i);
        }
        return u;
    };

    // Tarjan over the avalanche digraph, iterative to cope with big spaces.
    std::vector<int> index(static_cast<size_t>(total), -1);
    std::vector<int> lowlink(static_cast<size_t>(total), 0);
    std::vector<int> component(static_cast<size_t>(total), -1);
    std::vector<char> on_stack(static_cast<size_t>(total), 0);
    std::vector<long long> stack;
    int next_index = 0;
    int component_count = 0;

    struct Frame {
        long long state;
        int next_arc;
    };
    for (long long start = 0; start < total; ++start) {
        if (index[static_cast<size_t>(start)] >= 0) continue;
        std::vector<Frame> frames{{start, 0}};
        index[static_cast<size_t>(start)] = lowlink[static_cast<size_t>(start)] = next_index++;
        stack.push_back(start);
        on_stack[static_cast<size_t>(start)] = 1;
        while (!frames.empty()) {
            Frame& f = frames.back();
            if (f.next_arc < n) {
                const int arc = f.next_arc++;
                const long long succ = encode(avalanche(d, decode(f.state), arc));
                if (index[static_cast<size_t>(succ)] < 0) {
                    index[static_cast<size_t>(succ)] = lowlink[static_cast<size_t>(succ)] = next_index++;
                    stack.push_back(succ);
                    on_stack[static_cast<size_t>(succ)] = 1;
                    frames.push_back({succ, 0});
                } else if (on_stack[static_cast<size_t>(succ)]) {
                    lowlink[static_cast<size_t>(f.state)] =
                        std::min(lowlink[static_cast<size_t>(f.state)], index[static_cast<size_t>(succ)]);
                }
            } else {
                if (lowlink[static_cast<size_t>(f.state)] == index[static_cast<size_t>(f.state)]) {
                    long long member;
                    do {
                        member = stack.back();
                        stack.pop_back();
                        on_stack[static_cast<size_t>(member)] = 0;
                        component[static_cast<size_t>(member)] = component_count;
                    } while (member != f.state);
                    ++component_count;
                }
                const long long done = f.state;
                frames.pop_back();
                if (!frames.empty()) {
                    const long long parent = frames.back().state;
                    lowlink[static_cast<size_t>(parent)] =
                        std::min(lowlink[static_cast<size_t>(parent)], lowlink[static_cast<size_t>(done)]);
                }
            }
        }
    }

    std::vector<char> terminal(static_cast<size_t>(component_count), 1);
    for (long long s = 0; s < total; ++s) {
        const Config u = decode(s);
        for (int i = 0; i < n; ++i) {
            const long long succ = encode(avalanche(d, u, i));
            if (component[static_cast<size_t>(succ)] != component[static_cast<size_t>(s)])
                terminal[static_cast<size_t>(component[static_cast<size_t>(s)])] = 0;
        }
    }
    int terminal_id = -1;
    for (int c = 0; c < component_count; ++c) {
        if (!terminal[static_cast<size_t>(c)]) continue;
        if (terminal_id >= 0)
            throw invariant_error("avalanche digraph has more than one terminal component");
        terminal_id = c;
    }
    if (terminal_id < 0) throw invariant_error("avalanche digraph has no terminal component");

    std::vector<Config> result;
    for (long long s = 0; s < total; ++s)
        if (component[static_cast<size_t>(s)] == terminal_id) result.push_back(decode(s));
    std::sort(result.begin(), result.end());
    if (Int(static_cast<long long>(result.size())) != determinant(d.delta()))
        throw invariant_error("recurrent class size differs from det(delta)");
    return result;
}

Config dual_config(const TopplingMatrix& d, const Config& u) {
    if (!is_stable(d, u)) throw validation_error("duals are defined for stable configurations");
    Config v(u.size());
    for (int i = 0; i < d.n(); ++i) v[static_cast<size_t>(i)] = d.diag(i) - 1 - u[static_cast<size_t>(i)];
    return v;
}

std::vector<Int> sandpile_group_invariants(const TopplingMatrix& d) {
    return smith_normal_form(d.delta());
}

bool parking_bijection_check(const Digraph& g, long long max_states) {
    const TopplingMatrix d = TopplingMatrix::validate(truncated_laplacian(g).transpose());
    std::vector<Config> duals;
    for (const Config& u : recurrent_class(d, max_states)) duals.push_back(dual_config(d, u));
    std::sort(duals.begin(), duals.end());
    std::vector<Config> parking;
    for (const auto& b : enumerate_g_parking(g))
        parking.push_back(Config(b.begin(), b.end()));
    std::sort(parking.begin(), parking.end());
    return duals == parking;
}

} // namespace parq
