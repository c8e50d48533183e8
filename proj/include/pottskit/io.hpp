#ifndef POTTSKIT_IO_HPP
#define POTTSKIT_IO_HPP

// JSON schemas:
//   graph: {"vertices": N, "edges": [[u, v], ...]}
//   model: {"n": k, "vertices": N, "edges": [[u, v, "alpha", "beta"], ...]}
// with 0-based vertex indices, edge file order defining edge ids, and
// rationals as strings "p/q" or plain integers.

#include "pottskit/poly.hpp"
#include "pottskit/potts.hpp"

#include "json.hpp"

#include <string>

namespace pottskit {

using Json = nlohmann::json;

inline Rational rational_from_json(const Json& j) {
    if (j.is_number_integer()) return Rational(j.get<long>());
    if (j.is_string()) return Rational::parse(j.get<std::string>());
    throw std::invalid_argument("model JSON: rational must be an integer or a \"p/q\" string");
}

inline Multigraph graph_from_json(const Json& j) {
    if (!j.contains("vertices") || !j.contains("edges"))
        throw std::invalid_argument("graph JSON: requires \"vertices\" and \"edges\"");
    Multigraph g(j.at("vertices").get<int>());
    for (const Json& e : j.at("edges")) {
        if (!e.is_array() || e.size() < 2)
            throw std::invalid_argument("graph JSON: edge entries are [u, v]");
        g.add_edge(e.at(0).get<int>(), e.at(1).get<int>());
    }
    return g;
}

inline Json graph_to_json(const Multigraph& g) {
    Json edges = Json::array();
    for (const Edge& e : g.edges()) edges.push_back({e.u, e.v});
    return Json{{"vertices", g.vertex_count()}, {"edges", edges}};
}

inline RationalModel model_from_json(const Json& j) {
    if (!j.contains("n")) throw std::invalid_argument("model JSON: requires \"n\"");
    int n = j.at("n").get<int>();
    Multigraph g(j.at("vertices").get<int>());
    std::vector<std::pair<Rational, Rational>> w;
    for (const Json& e : j.at("edges")) {
        if (!e.is_array() || e.size() != 4)
            throw std::invalid_argument("model JSON: edge entries are [u, v, alpha, beta]");
        g.add_edge(e.at(0).get<int>(), e.at(1).get<int>());
        w.push_back({rational_from_json(e.at(2)), rational_from_json(e.at(3))});
    }
    return RationalModel(std::move(g), n, std::move(w));
}

inline Json model_to_json(const RationalModel& m) {
    Json edges = Json::array();
    for (int e = 0; e < m.graph.edge_count(); ++e) {
        const Edge& ed = m.graph.edge(e);
        edges.push_back({ed.u, ed.v, m.alpha(e).str(), m.beta(e).str()});
    }
    return Json{{"n", m.n}, {"vertices", m.graph.vertex_count()}, {"edges", edges}};
}

inline Json unipoly_to_json(const UniPoly& p, const std::string& var = "n") {
    Json coeffs = Json::array();
    for (const Rational& c : p.coeffs()) coeffs.push_back(c.str());
    return Json{{"variable", var}, {"coefficients", coeffs}};
}

inline Json bipoly_to_json(const BiPoly& p, const std::string& xv = "x",
                           const std::string& yv = "y") {
    Json terms = Json::array();
    for (const auto& [key, c] : p.terms()) terms.push_back({key.first, key.second, c.str()});
    return Json{{"variables", {xv, yv}}, {"terms", terms}};
}

} // namespace pottskit

#endif
