#include "tverberg/io.hpp"

#include <fstream>
#include <nlohmann/json.hpp>
#include <sstream>

namespace tverberg {

namespace {

using json = nlohmann::ordered_json;

int require_int(const json& j, const std::string& where) {
    if (!j.is_number_integer())
        throw ParseError(where + ": expected an integer, got " + j.dump());
    return j.get<int>();
}

SimplicialComplex parse_simplicial(const json& j) {
    if (!j.contains("facets") || !j["facets"].is_array())
        throw ParseError("simplicial complex: missing \"facets\" array");
    std::vector<VertexList> facets;
    std::size_t fi = 0;
    for (const auto& f : j["facets"]) {
        if (!f.is_array())
            throw ParseError("facets[" + std::to_string(fi) + "]: expected an array");
        VertexList vl;
        std::size_t vi = 0;
        for (const auto& v : f) {
            vl.push_back(require_int(v, "facets[" + std::to_string(fi) + "][" +
                                            std::to_string(vi) + "]"));
            ++vi;
        }
        facets.push_back(std::move(vl));
        ++fi;
    }
    try {
        return build_simplicial(facets);
    } catch (const Error& e) {
        throw ParseError(std::string("simplicial complex: ") + e.what());
    }
}

RegularCwComplex parse_cw(const json& j) {
    if (!j.contains("cells") || !j["cells"].is_array())
        throw ParseError("cw complex: missing \"cells\" array");
    std::vector<Cell> cells;
    std::size_t ci = 0;
    for (const auto& c : j["cells"]) {
        const std::string where = "cells[" + std::to_string(ci) + "]";
        if (!c.is_object() || !c.contains("id") || !c.contains("dim"))
            throw ParseError(where + ": expected {id, dim, covers}");
        if (!c["id"].is_string()) throw ParseError(where + ".id: expected a string");
        Cell cell;
        cell.id = c["id"].get<std::string>();
        cell.dim = require_int(c["dim"], where + ".dim");
        if (c.contains("covers")) {
            if (!c["covers"].is_array()) throw ParseError(where + ".covers: expected an array");
            for (const auto& b : c["covers"]) {
                if (!b.is_string()) throw ParseError(where + ".covers: expected strings");
                cell.covers.push_back(b.get<std::string>());
            }
        }
        cells.push_back(std::move(cell));
        ++ci;
    }
    try {
        return build_cw(std::move(cells));
    } catch (const Error& e) {
        throw ParseError(std::string("cw complex: ") + e.what());
    }
}

Multigraph parse_graph(const json& j) {
    if (!j.contains("vertices")) throw ParseError("graph: missing \"vertices\" count");
    const int nv = require_int(j["vertices"], "graph.vertices");
    std::vector<std::pair<int, int>> edges;
    if (j.contains("edges")) {
        if (!j["edges"].is_array()) throw ParseError("graph.edges: expected an array");
        std::size_t ei = 0;
        for (const auto& e : j["edges"]) {
            const std::string where = "edges[" + std::to_string(ei) + "]";
            if (!e.is_array() || e.size() != 2)
                throw ParseError(where + ": expected a pair of vertices");
            edges.emplace_back(require_int(e[0], where), require_int(e[1], where));
            ++ei;
        }
    }
    try {
        return make_multigraph(nv, std::move(edges));
    } catch (const Error& e) {
        throw ParseError(std::string("graph: ") + e.what());
    }
}

}  // namespace

AnyComplex parse_complex(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what());
    }
    if (!j.is_object() || !j.contains("type") || !j["type"].is_string())
        throw ParseError("complex file: missing \"type\" (simplicial | cw | graph)");

    AnyComplex out;
    out.type = j["type"].get<std::string>();
    if (out.type == "simplicial") {
        out.simplicial = parse_simplicial(j);
        out.cw = as_cw(*out.simplicial);
    } else if (out.type == "cw") {
        out.cw = parse_cw(j);
    } else if (out.type == "graph") {
        out.graph = parse_graph(j);
        out.cw = graph_to_cw(*out.graph);
    } else {
        throw ParseError("complex file: unknown type '" + out.type + "'");
    }
    return out;
}

AnyComplex load_complex(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_complex(buf.str());
}

std::string simplicial_to_text(const SimplicialComplex& K) {
    json j;
    j["type"] = "simplicial";
    j["facets"] = json::array();
    for (const auto& f : K.facets()) j["facets"].push_back(f);
    return j.dump(2) + "\n";
}

std::string cw_to_text(const RegularCwComplex& X) {
    json j;
    j["type"] = "cw";
    j["cells"] = json::array();
    for (const auto& c : X.cells()) {
        json jc;
        jc["id"] = c.id;
        jc["dim"] = c.dim;
        jc["covers"] = c.covers;
        j["cells"].push_back(std::move(jc));
    }
    return j.dump(2) + "\n";
}

std::string graph_to_text(const Multigraph& G) {
    json j;
    j["type"] = "graph";
    j["vertices"] = G.vertex_count;
    j["edges"] = json::array();
    for (auto [a, b] : G.edges) j["edges"].push_back(json::array({a, b}));
    return j.dump(2) + "\n";
}

std::string digest(const std::string& bytes) {
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 1099511628211ull;
    }
    char buf[17];
    std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(h));
    return std::string("fnv1a:") + buf;
}

}  // namespace tverberg
