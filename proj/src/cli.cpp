#include "parq/cli.hpp"

#include <cstdint>
#include <fstream>
#include <functional>
#include <iomanip>
#include <map>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"

#include "parq/combinat.hpp"
#include "parq/deformation.hpp"
#include "parq/errors.hpp"
#include "parq/family.hpp"
#include "parq/graph.hpp"
#include "parq/ideal.hpp"
#include "parq/jsonio.hpp"
#include "parq/matrix.hpp"
#include "parq/parking.hpp"
#include "parq/resolution.hpp"
#include "parq/sandpile.hpp"

namespace parq {

namespace {

constexpr const char* kVersion = "1.0.0";
constexpr std::uint64_t kDefaultSeed = 20240917ULL;

std::uint64_t fnv1a(const std::string& bytes) {
    std::uint64_t h = 14695981039346656037ULL;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    return h;
}

std::string hex64(std::uint64_t v) {
    std::ostringstream os;
    os << std::hex << std::setw(16) << std::setfill('0') << v;
    return os.str();
}

std::string read_file_bytes(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw validation_error("cannot open input file " + path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

std::vector<int> parse_int_list(const std::string& s, const char* what) {
    std::vector<int> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            size_t used = 0;
            const int v = std::stoi(item, &used);
            if (used != item.size()) throw std::invalid_argument(item);
            out.push_back(v);
        } catch (const std::exception&) {
            throw validation_error(std::string(what) + " must be a comma-separated integer list");
        }
    }
    if (out.empty()) throw validation_error(std::string(what) + " must be nonempty");
    return out;
}

struct CommonOpts {
    std::string format = "pretty";
    int cap = -1;
    std::uint64_t seed = kDefaultSeed;
    bool enumerate = false;
    long long guard_override = 0;

    long long guard(long long dflt) const { return guard_override > 0 ? guard_override : dflt; }
};

void add_common(CLI::App* sub, CommonOpts& o) {
    sub->add_option("--format", o.format, "Output format")
        ->check(CLI::IsMember({"json", "csv", "pretty"}))
        ->capture_default_str();
    sub->add_option("--cap", o.cap, "Degree cap (-1 = automatic)")->capture_default_str();
    sub->add_option("--seed", o.seed, "Seed recorded in the run manifest")->capture_default_str();
    sub->add_flag("--enumerate", o.enumerate, "Include exhaustive listings in the output");
    sub->add_option("--guard-override", o.guard_override,
                    "Replace default capacity guards with this value (logged)");
}

Json make_manifest(const std::string& command, const std::string& input_desc,
                   const std::string& input_bytes, const CommonOpts& o) {
    Json caps;
    caps["cap"] = o.cap;
    caps["guard_override"] = o.guard_override;
    Json m;
    m["command"] = command;
    m["input"] = input_desc;
    m["input_digest"] = hex64(fnv1a(input_bytes));
    m["seed"] = o.seed;
    m["caps"] = std::move(caps);
    m["version"] = kVersion;
    return m;
}

void flatten_csv(const Json& j, const std::string& prefix, std::vector<std::string>& rows) {
    if (j.is_object()) {
        for (const auto& [k, v] : j.items())
            flatten_csv(v, prefix.empty() ? k : prefix + "." + k, rows);
    } else if (j.is_array()) {
        int i = 0;
        for (const auto& v : j)
            flatten_csv(v, prefix + "[" + std::to_string(i++) + "]", rows);
    } else {
        std::string value = j.is_string() ? j.get<std::string>() : j.dump();
        rows.push_back(prefix + "," + value);
    }
}

void emit(std::ostream& out, const CommonOpts& o, const Json& manifest, const Json& result,
          const std::vector<std::string>& pretty) {
    if (o.format == "json") {
        Json doc;
        doc["manifest"] = manifest;
        doc["result"] = result;
        out << doc.dump(2) << "\n";
    } else if (o.format == "csv") {
        std::vector<std::string> rows;
        flatten_csv(manifest, "manifest", rows);
        flatten_csv(result, "result", rows);
        for (const auto& r : rows) out << r << "\n";
    } else {
        for (const auto& [k, v] : manifest.items())
            out << "# " << k << ": " << (v.is_string() ? v.get<std::string>() : v.dump()) << "\n";
        for (const auto& line : pretty) out << line << "\n";
    }
}

Json distribution_to_json(const std::map<int, Int>& dist) {
    Json out = Json::object();
    for (const auto& [k, v] : dist) out[std::to_string(k)] = json_int(v);
    return out;
}

std::string int_vector_str(const std::vector<Int>& v) {
    std::ostringstream os;
    os << "(";
    for (size_t i = 0; i < v.size(); ++i) {
        if (i) os << ",";
        os << v[i];
    }
    os << ")";
    return os.str();
}

std::string int_list_str(const std::vector<int>& v) {
    std::ostringstream os;
    for (size_t i = 0; i < v.size(); ++i) {
        if (i) os << ",";
        os << v[i];
    }
    return os.str();
}

std::vector<Int> sum_distribution(const std::vector<std::vector<int>>& vectors) {
    std::vector<Int> dims;
    for (const auto& b : vectors) {
        int total = 0;
        for (int x : b) total += x;
        if (static_cast<int>(dims.size()) <= total) dims.resize(static_cast<size_t>(total) + 1, Int(0));
        dims[static_cast<size_t>(total)] += 1;
    }
    return dims;
}

// Shared input plumbing: families (and their power generators, when the
// input carries them) can come from a graph, a rho sequence, a kl triple,
// or an explicit family file.
struct FamilyInput {
    std::string graph_path;
    std::string family_path;
    std::string rho_csv;
    std::string kl_csv;

    void add_options(CLI::App* sub) {
        sub->add_option("--graph", graph_path, "Graph JSON file");
        sub->add_option("--family", family_path, "Family JSON file");
        sub->add_option("--rho", rho_csv, "Weakly decreasing degree sequence, e.g. 4,2,1");
        sub->add_option("--kl", kl_csv, "n,k,l triple for the two-parameter family");
    }

    int selected_count() const {
        return (graph_path.empty() ? 0 : 1) + (family_path.empty() ? 0 : 1) +
               (rho_csv.empty() ? 0 : 1) + (kl_csv.empty() ? 0 : 1);
    }

    std::string describe() const {
        if (!graph_path.empty()) return "graph:" + graph_path;
        if (!family_path.empty()) return "family:" + family_path;
        if (!rho_csv.empty()) return "rho:" + rho_csv;
        return "kl:" + kl_csv;
    }

    std::string bytes() const {
        if (!graph_path.empty()) return read_file_bytes(graph_path);
        if (!family_path.empty()) return read_file_bytes(family_path);
        return describe();
    }

    MonomialFamily family() const {
        if (selected_count() != 1)
            throw validation_error("choose exactly one of --graph/--family/--rho/--kl");
        if (!graph_path.empty()) return graph_family(graph_from_json(load_json_file(graph_path)));
        if (!family_path.empty()) return family_from_json(load_json_file(family_path));
        if (!rho_csv.empty()) return rho_family(parse_int_list(rho_csv, "--rho"));
        const std::vector<int> nkl = parse_int_list(kl_csv, "--kl");
        if (nkl.size() != 3) throw validation_error("--kl takes n,k,l");
        return kl_family(nkl[0], nkl[1], nkl[2]);
    }

    bool has_power_side() const { return family_path.empty(); }

    std::vector<HomogeneousPolynomial> power_side() const {
        if (!graph_path.empty()) return power_generators(graph_from_json(load_json_file(graph_path)));
        if (!rho_csv.empty()) {
            const std::vector<int> rho = parse_int_list(rho_csv, "--rho");
            return rho_power_generators(static_cast<int>(rho.size()), rho);
        }
        if (!kl_csv.empty()) {
            const std::vector<int> nkl = parse_int_list(kl_csv, "--kl");
            if (nkl.size() != 3) throw validation_error("--kl takes n,k,l");
            return kl_power_generators(nkl[0], nkl[1], nkl[2]);
        }
        throw validation_error("power generators are defined for graph, rho, and kl inputs only");
    }
};

// ----- subcommand handlers ------------------------------------------------

void run_trees(const std::string& graph_path, const CommonOpts& o, std::ostream& out) {
    const Json gj = load_json_file(graph_path);
    const Digraph g = graph_from_json(gj);
    Json result;
    std::vector<std::string> pretty;
    const Int count = spanning_tree_count(g);
    result["count"] = json_int(count);
    pretty.push_back("spanning trees: " + count.str());
    if (g.symmetric()) {
        const EdgeList el = EdgeList::from_digraph(g);
        const auto dist = activity_distribution(el, static_cast<int>(o.guard(24)));
        result["activity_distribution"] = distribution_to_json(dist);
        std::string line = "external activity:";
        for (const auto& [k, v] : dist) line += " " + std::to_string(k) + ":" + v.str();
        pretty.push_back(line);
        if (o.enumerate) {
            Json trees = Json::array();
            for (const auto& t : enumerate_spanning_trees(el, static_cast<int>(o.guard(24)))) {
                Json edges = Json::array();
                for (int e : t) edges.push_back(Json::array({el.edge(e).first, el.edge(e).second}));
                trees.push_back(std::move(edges));
            }
            result["trees"] = std::move(trees);
            pretty.push_back("trees listed: " + std::to_string(result["trees"].size()));
        }
    } else if (o.enumerate) {
        Json trees = Json::array();
        for (const auto& t : enumerate_oriented_spanning_trees(g, static_cast<int>(o.guard(24)))) {
            Json parents = Json::array();
            for (size_t v = 1; v < t.parent.size(); ++v) parents.push_back(t.parent[v]);
            trees.push_back(std::move(parents));
        }
        result["trees"] = std::move(trees);
        pretty.push_back("trees listed: " + std::to_string(result["trees"].size()));
    }
    emit(out, o, make_manifest("trees", "graph:" + graph_path, read_file_bytes(graph_path), o),
         result, pretty);
}

void run_parking(const std::string& variant, const std::string& graph_path,
                 const std::string& rho_csv, const std::string& kl_csv, int n_param,
                 const CommonOpts& o, std::ostream& out) {
    std::vector<std::vector<int>> vectors;
    std::string desc, bytes;
    if (variant == "g") {
        if (graph_path.empty()) throw validation_error("variant g needs --graph");
        desc = "graph:" + graph_path;
        bytes = read_file_bytes(graph_path);
        vectors = enumerate_g_parking(graph_from_json(load_json_file(graph_path)),
                                      o.guard(5'000'000));
    } else if (variant == "rho") {
        if (rho_csv.empty()) throw validation_error("variant rho needs --rho");
        desc = "rho:" + rho_csv;
        bytes = desc;
        vectors = enumerate_rho_parking(parse_int_list(rho_csv, "--rho"), o.guard(5'000'000));
    } else if (variant == "kl") {
        if (kl_csv.empty()) throw validation_error("variant kl needs --kl");
        const std::vector<int> nkl = parse_int_list(kl_csv, "--kl");
        if (nkl.size() != 3) throw validation_error("--kl takes n,k,l");
        desc = "kl:" + kl_csv;
        bytes = desc;
        std::vector<int> rho(static_cast<size_t>(nkl[0]));
        for (int r = 1; r <= nkl[0]; ++r)
            rho[static_cast<size_t>(r) - 1] = nkl[2] + nkl[1] * (nkl[0] - r);
        vectors = enumerate_rho_parking(rho, o.guard(5'000'000));
    } else if (variant == "almost") {
        if (n_param < 1) throw validation_error("variant almost needs --n");
        desc = "almost:" + std::to_string(n_param);
        bytes = desc;
        vectors = enumerate_almost_parking(n_param, static_cast<int>(o.guard(6)));
    } else {
        throw validation_error("unknown parking variant " + variant);
    }
    Json result;
    result["count"] = json_int(Int(static_cast<long long>(vectors.size())));
    result["hilbert"] = json_int_vector(sum_distribution(vectors));
    if (o.enumerate) {
        Json list = Json::array();
        for (const auto& b : vectors) list.push_back(b);
        result["vectors"] = std::move(list);
    }
    std::vector<std::string> pretty;
    pretty.push_back("count: " + std::to_string(vectors.size()));
    pretty.push_back("by degree: " + int_vector_str(sum_distribution(vectors)));
    if (o.enumerate)
        for (const auto& b : vectors) pretty.push_back("  (" + int_list_str(b) + ")");
    emit(out, o, make_manifest("parking --variant " + variant, desc, bytes, o), result, pretty);
}

void run_hilbert(const FamilyInput& input, const std::string& side, const CommonOpts& o,
                 std::ostream& out) {
    const MonomialFamily f = input.family();
    Json result;
    std::vector<std::string> pretty;
    if (side == "a" || side == "both") {
        const QPolynomial num = hilbert_numerator(f, o.guard(1 << 20));
        result["numerator"] = num.str();
        pretty.push_back("numerator: " + num.str());
        const int cap = o.cap >= 0 ? o.cap : default_degree_cap(f);
        std::vector<Int> counts = degree_counts(standard_basis(f, cap).monomials);
        counts.resize(static_cast<size_t>(cap) + 1, Int(0));
        result["hilb_a"] = json_int_vector(counts);
        pretty.push_back("monomial side: " + int_vector_str(counts));
    }
    if (side == "b" || side == "both") {
        if (!input.has_power_side())
            throw validation_error("side b needs a graph, rho, or kl input (power generators)");
        const SpanReport report = verify_span(f, input.power_side(), o.cap);
        const Json rj = span_report_to_json(report);
        for (const auto& [k, v] : rj.items()) result[k] = v;
        if (side == "b") // "both" already printed the monomial side above
            pretty.push_back("monomial side: " + int_vector_str(report.hilb_a));
        pretty.push_back("power side:    " + int_vector_str(report.hilb_b));
        pretty.push_back(report.equal ? "equal: yes"
                                      : "equal: no (first gap at degree " +
                                            std::to_string(report.first_gap_degree) + ")");
    }
    emit(out, o,
         make_manifest("hilbert --side " + side, input.describe(), input.bytes(), o), result,
         pretty);
}

void run_resolution(const FamilyInput& input, const std::string& mode, const CommonOpts& o,
                    std::ostream& out) {
    const MonomialFamily f = input.family();
    Json result;
    std::vector<std::string> pretty;
    if (mode == "order" || mode == "both") {
        const GradedResolution res = order_complex_resolution(f, o.guard(1 << 20));
        result["order"] = resolution_to_json(res);
        result["order"]["euler_consistent"] = euler_check(res, f);
        pretty.push_back("order resolution: " + res.display());
        pretty.push_back(std::string("minimal: ") + (res.minimal ? "yes" : "no"));
    }
    if (mode == "scarf" || mode == "both") {
        const SimplicialComplex scarf = scarf_complex(f, 20);
        Json sj;
        sj["face_counts_by_dim"] = scarf.face_counts_by_dim();
        sj["connected"] = scarf.connected();
        if (o.enumerate) {
            Json faces = Json::array();
            for (const auto& face : scarf.faces()) faces.push_back(face);
            sj["faces"] = std::move(faces);
        }
        result["scarf"] = std::move(sj);
        std::string counts;
        for (int c : scarf.face_counts_by_dim()) counts += (counts.empty() ? "" : "+") + std::to_string(c);
        pretty.push_back("scarf faces by dimension: " + counts);
        pretty.push_back(std::string("scarf connected: ") + (scarf.connected() ? "yes" : "no"));
    }
    if (mode == "both") {
        const bool same = compare_order_scarf(f, o.guard(1 << 20));
        result["order_equals_scarf"] = same;
        pretty.push_back(std::string("order complex equals scarf complex: ") + (same ? "yes" : "no"));
    }
    emit(out, o,
         make_manifest("resolution --mode " + mode, input.describe(), input.bytes(), o), result,
         pretty);
}

void run_sandpile(const std::string& matrix_path, const std::string& graph_path,
                  const std::string& action, const std::string& config_csv, const CommonOpts& o,
                  std::ostream& out) {
    if ((matrix_path.empty()) == (graph_path.empty()))
        throw validation_error("choose exactly one of --matrix/--graph");
    std::string desc, bytes;
    BigIntMatrix delta;
    Digraph g(1);
    bool have_graph = false;
    if (!matrix_path.empty()) {
        desc = "matrix:" + matrix_path;
        bytes = read_file_bytes(matrix_path);
        delta = matrix_from_json(load_json_file(matrix_path));
    } else {
        desc = "graph:" + graph_path;
        bytes = read_file_bytes(graph_path);
        g = graph_from_json(load_json_file(graph_path));
        have_graph = true;
        delta = truncated_laplacian(g).transpose();
    }
    const TopplingMatrix d = TopplingMatrix::validate(delta);
    Json result;
    std::vector<std::string> pretty;
    if (action == "validate") {
        result["valid"] = true;
        result["row_sums_nonneg"] = d.row_sums_nonneg();
        result["col_sums_nonneg"] = d.col_sums_nonneg();
        result["determinant"] = json_int(determinant(d.delta()));
        pretty.push_back("valid toppling matrix");
        pretty.push_back(std::string("row sums non-negative: ") +
                         (d.row_sums_nonneg() ? "yes" : "no"));
        pretty.push_back(std::string("column sums non-negative: ") +
                         (d.col_sums_nonneg() ? "yes" : "no"));
    } else if (action == "stabilize") {
        if (config_csv.empty()) throw validation_error("stabilize needs --config");
        const std::vector<int> cfg = parse_int_list(config_csv, "--config");
        const StabilizeResult r = stabilize(d, Config(cfg.begin(), cfg.end()));
        result["stable"] = r.stable;
        result["topplings"] = r.topplings;
        std::string s;
        for (long long v : r.stable) s += (s.empty() ? "" : ",") + std::to_string(v);
        pretty.push_back("stable: (" + s + ")");
    } else if (action == "recurrent") {
        const std::vector<Config> rec = recurrent_class(d, o.guard(1 << 20));
        result["count"] = static_cast<long long>(rec.size());
        if (o.enumerate) {
            Json list = Json::array();
            for (const auto& u : rec) list.push_back(u);
            result["configurations"] = std::move(list);
        }
        pretty.push_back("recurrent configurations: " + std::to_string(rec.size()));
    } else if (action == "group") {
        const std::vector<Int> factors = sandpile_group_invariants(d);
        Int order = 1;
        for (const Int& x : factors) order *= x;
        result["invariant_factors"] = json_int_vector(factors);
        result["order"] = json_int(order);
        pretty.push_back("group order: " + order.str());
        pretty.push_back("invariant factors: " + int_vector_str(factors));
    } else if (action == "duality") {
        if (!have_graph) throw validation_error("duality needs --graph");
        const bool ok = parking_bijection_check(g, o.guard(1 << 20));
        const auto parking = enumerate_g_parking(g, o.guard(5'000'000));
        result["duals_match_parking"] = ok;
        result["parking_count"] = static_cast<long long>(parking.size());
        pretty.push_back(std::string("recurrent duals = parking functions: ") + (ok ? "yes" : "no"));
        pretty.push_back("count: " + std::to_string(parking.size()));
    } else {
        throw validation_error("unknown sandpile action " + action);
    }
    emit(out, o, make_manifest("sandpile --action " + action, desc, bytes, o), result, pretty);
}

void run_rho_search(int n, int max_value, const CommonOpts& o, std::ostream& out) {
    if (n < 1 || n > 3)
        throw capacity_error("degree-function search limited to n <= 3; larger rank computations "
                             "are better run one at a time via hilbert --rho");
    if (max_value < 1 || max_value > 9) throw validation_error("--max must be in 1..9");
    std::vector<std::vector<int>> candidates;
    std::vector<int> rho(static_cast<size_t>(n));
    const std::function<void(int, int)> rec = [&](int pos, int hi) {
        if (pos == n) {
            candidates.push_back(rho);
            return;
        }
        for (int v = 1; v <= hi; ++v) {
            rho[static_cast<size_t>(pos)] = v;
            rec(pos + 1, v);
        }
    };
    rec(0, max_value);
    Json tested = Json::array();
    std::vector<std::string> pretty;
    int equal_nonlinear = 0;
    for (const auto& r : candidates) {
        bool arithmetic = true;
        for (size_t i = 2; i < r.size(); ++i)
            if (r[i - 1] - r[i] != r[0] - r[1]) arithmetic = false;
        if (arithmetic) continue; // the two-parameter families are known to work
        const SpanReport report =
            verify_span(rho_family(r), rho_power_generators(n, r), o.cap);
        Json entry;
        entry["rho"] = r;
        entry["equal"] = report.equal;
        if (!report.equal) entry["first_gap_degree"] = report.first_gap_degree;
        tested.push_back(std::move(entry));
        if (report.equal) ++equal_nonlinear;
        pretty.push_back("rho (" + int_list_str(r) + "): " +
                         (report.equal ? "equal" : "gap at degree " +
                                                       std::to_string(report.first_gap_degree)));
    }
    Json result;
    result["tested"] = std::move(tested);
    result["equal_non_arithmetic_count"] = equal_nonlinear;
    pretty.push_back("non-arithmetic sequences with equality: " + std::to_string(equal_nonlinear));
    const std::string desc =
        "rho-search:n=" + std::to_string(n) + ",max=" + std::to_string(max_value);
    emit(out, o, make_manifest("rho-search", desc, desc, o), result, pretty);
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact combinatorics of tree statistics, parking vectors, monomial ideals, "
                 "their resolutions and deformations, and the sandpile model"};
    app.require_subcommand(1);

    CommonOpts trees_opts;
    std::string trees_graph;
    CLI::App* trees = app.add_subcommand("trees", "Spanning-tree counts and activity statistics");
    trees->add_option("--graph", trees_graph, "Graph JSON file")->required();
    add_common(trees, trees_opts);

    CommonOpts parking_opts;
    std::string parking_variant = "g", parking_graph, parking_rho, parking_kl;
    int parking_n = 0;
    CLI::App* parking = app.add_subcommand("parking", "Parking vector enumeration");
    parking->add_option("--variant", parking_variant, "g, rho, kl, or almost")
        ->check(CLI::IsMember({"g", "rho", "kl", "almost"}))
        ->capture_default_str();
    parking->add_option("--graph", parking_graph, "Graph JSON file (variant g)");
    parking->add_option("--rho", parking_rho, "Degree sequence (variant rho)");
    parking->add_option("--kl", parking_kl, "n,k,l triple (variant kl)");
    parking->add_option("--n", parking_n, "Size (variant almost)");
    add_common(parking, parking_opts);

    CommonOpts hilbert_opts;
    FamilyInput hilbert_input;
    std::string hilbert_side = "both";
    CLI::App* hilbert = app.add_subcommand("hilbert", "Hilbert series of the two quotients");
    hilbert_input.add_options(hilbert);
    hilbert->add_option("--side", hilbert_side, "a (monomial), b (power), or both")
        ->check(CLI::IsMember({"a", "b", "both"}))
        ->capture_default_str();
    add_common(hilbert, hilbert_opts);

    CommonOpts res_opts;
    FamilyInput res_input;
    std::string res_mode = "both";
    CLI::App* resolution = app.add_subcommand("resolution", "Order and Scarf complexes");
    res_input.add_options(resolution);
    resolution->add_option("--mode", res_mode, "order, scarf, or both")
        ->check(CLI::IsMember({"order", "scarf", "both"}))
        ->capture_default_str();
    add_common(resolution, res_opts);

    CommonOpts sand_opts;
    std::string sand_matrix, sand_graph, sand_action = "validate", sand_config;
    CLI::App* sandpile = app.add_subcommand("sandpile", "Toppling dynamics and recurrent classes");
    sandpile->add_option("--matrix", sand_matrix, "Toppling matrix JSON file");
    sandpile->add_option("--graph", sand_graph, "Graph JSON file (transposed Laplacian)");
    sandpile->add_option("--action", sand_action, "validate, stabilize, recurrent, group, duality")
        ->check(CLI::IsMember({"validate", "stabilize", "recurrent", "group", "duality"}))
        ->capture_default_str();
    sandpile->add_option("--config", sand_config, "Initial configuration (stabilize)");
    add_common(sandpile, sand_opts);

    CommonOpts search_opts;
    int search_n = 3, search_max = 5;
    CLI::App* search = app.add_subcommand(
        "rho-search", "Probe non-arithmetic degree sequences for Hilbert-series equality");
    search->add_option("--n", search_n, "Number of variables")->capture_default_str();
    search->add_option("--max", search_max, "Largest degree value")->capture_default_str();
    add_common(search, search_opts);

    std::vector<const char*> argv;
    argv.push_back("parq");
    for (const auto& s : args) argv.push_back(s.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        return app.exit(e, out, err);
    }

    try {
        if (trees->parsed()) run_trees(trees_graph, trees_opts, out);
        if (parking->parsed())
            run_parking(parking_variant, parking_graph, parking_rho, parking_kl, parking_n,
                        parking_opts, out);
        if (hilbert->parsed()) run_hilbert(hilbert_input, hilbert_side, hilbert_opts, out);
        if (resolution->parsed()) run_resolution(res_input, res_mode, res_opts, out);
        if (sandpile->parsed())
            run_sandpile(sand_matrix, sand_graph, sand_action, sand_config, sand_opts, out);
        if (search->parsed()) run_rho_search(search_n, search_max, search_opts, out);
    } catch (const capacity_error& e) {
        err << "capacity guard: " << e.what() << "\n";
        return 3;
    } catch (const invariant_error& e) {
        err << "invariant violation: " << e.what() << "\n";
        return 4;
    } catch (const singularity_error& e) {
        err << "invariant violation: " << e.what() << "\n";
        return 4;
    } catch (const error& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}

} // namespace parq
