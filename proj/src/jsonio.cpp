#include "parq/jsonio.hpp"

#include <fstream>
#include <limits>

#include "parq/errors.hpp"

namespace parq {

namespace {

int require_int(const Json& j, const char* what) {
    if (!j.is_number_integer())
        throw validation_error(std::string(what) + " must be an integer");
    return j.get<int>();
}

long long require_ll(const Json& j, const char* what) {
    if (!j.is_number_integer())
        throw validation_error(std::string(what) + " must be an integer");
    return j.get<long long>();
}

const Json& require_array(const Json& j, const char* what) {
    if (!j.is_array()) throw validation_error(std::string(what) + " must be an array");
    return j;
}

} // namespace

Json json_int(const Int& v) {
    if (v <= std::numeric_limits<long long>::max() && v >= std::numeric_limits<long long>::min())
        return Json(v.convert_to<long long>());
    return Json(v.str());
}

Json json_int_vector(const std::vector<Int>& v) {
    Json out = Json::array();
    for (const Int& x : v) out.push_back(json_int(x));
    return out;
}

Digraph graph_from_json(const Json& j) {
    if (!j.is_object()) throw validation_error("graph input must be a JSON object");
    if (j.contains("adjacency")) {
        const Json& rows = require_array(j.at("adjacency"), "adjacency");
        std::vector<std::vector<long long>> a;
        for (const Json& row : rows) {
            require_array(row, "adjacency row");
            std::vector<long long> r;
            for (const Json& v : row) r.push_back(require_ll(v, "adjacency entry"));
            a.push_back(std::move(r));
        }
        const Digraph g = Digraph::from_adjacency(a);
        if (j.contains("n") && require_int(j.at("n"), "n") != g.n())
            throw validation_error("declared n disagrees with the adjacency size");
        return g;
    }
    if (j.contains("edges")) {
        if (!j.contains("n")) throw validation_error("edge-list graphs need the field n");
        const int n = require_int(j.at("n"), "n");
        Digraph g(n);
        for (const Json& e : require_array(j.at("edges"), "edges")) {
            require_array(e, "edge");
            if (e.size() != 2) throw validation_error("edges are pairs [i,j]");
            g.add_undirected(require_int(e[0], "edge endpoint"), require_int(e[1], "edge endpoint"));
        }
        return g;
    }
    throw validation_error("graph input needs either adjacency or edges");
}

EdgeList edge_list_from_json(const Json& j) {
    if (j.is_object() && j.contains("edges")) {
        if (!j.contains("n")) throw validation_error("edge-list graphs need the field n");
        const int n = require_int(j.at("n"), "n");
        std::vector<std::pair<int, int>> edges;
        for (const Json& e : require_array(j.at("edges"), "edges")) {
            require_array(e, "edge");
            if (e.size() != 2) throw validation_error("edges are pairs [i,j]");
            edges.emplace_back(require_int(e[0], "edge endpoint"),
                               require_int(e[1], "edge endpoint"));
        }
        return EdgeList(n, std::move(edges));
    }
    return EdgeList::from_digraph(graph_from_json(j));
}

MonomialFamily family_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("n") || !j.contains("generators"))
        throw validation_error("family input needs fields n and generators");
    const int n = require_int(j.at("n"), "n");
    std::vector<FamilyEntry> entries;
    for (const Json& g : require_array(j.at("generators"), "generators")) {
        if (!g.is_object() || !g.contains("label") || !g.contains("exponents"))
            throw validation_error("each generator needs label and exponents");
        std::vector<int> label;
        for (const Json& v : require_array(g.at("label"), "label"))
            label.push_back(require_int(v, "label element"));
        std::vector<int> exps;
        for (const Json& v : require_array(g.at("exponents"), "exponents"))
            exps.push_back(require_int(v, "exponent"));
        if (static_cast<int>(exps.size()) != n)
            throw validation_error("exponent vector length must equal n");
        entries.push_back({mask_of(label, n), Monomial(std::move(exps))});
    }
    return MonomialFamily(n, std::move(entries));
}

BigIntMatrix matrix_from_json(const Json& j) {
    const Json& rows = j.is_object() && j.contains("matrix")
                           ? require_array(j.at("matrix"), "matrix")
                           : require_array(j, "matrix");
    const int r = static_cast<int>(rows.size());
    if (r == 0) throw validation_error("matrix must be nonempty");
    const int c = static_cast<int>(require_array(rows[0], "matrix row").size());
    BigIntMatrix m(r, c);
    for (int i = 0; i < r; ++i) {
        const Json& row = require_array(rows[static_cast<size_t>(i)], "matrix row");
        if (static_cast<int>(row.size()) != c)
            throw validation_error("matrix rows have unequal lengths");
        for (int k = 0; k < c; ++k)
            m.at(i, k) = Int(require_ll(row[static_cast<size_t>(k)], "matrix entry"));
    }
    return m;
}

Json resolution_to_json(const GradedResolution& r) {
    Json terms = Json::array();
    for (const auto& term : r.terms) {
        Json level = Json::array();
        for (const auto& [d, rank] : term) level.push_back(Json{{"d", d}, {"r", json_int(rank)}});
        terms.push_back(std::move(level));
    }
    return Json{{"terms", std::move(terms)}, {"minimal", r.minimal}, {"display", r.display()}};
}

Json span_report_to_json(const SpanReport& r) {
    Json out;
    out["hilb_a"] = json_int_vector(r.hilb_a);
    out["hilb_b"] = json_int_vector(r.hilb_b);
    out["equal"] = r.equal;
    out["first_gap_degree"] = r.equal ? Json(nullptr) : Json(r.first_gap_degree);
    return out;
}

Json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw validation_error("cannot open input file " + path);
    Json j;
    try {
        in >> j;
    } catch (const nlohmann::json::parse_error& e) {
        throw validation_error("malformed JSON in " + path + ": " + e.what());
    }
    return j;
}

} // namespace parq
