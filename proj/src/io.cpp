#include "schurlc/io.hpp"

#include <algorithm>
#include <sstream>

#include <json.hpp>

namespace schurlc {

using nlohmann::json;

namespace {

json parse_json(const std::string& text) {
    json j = json::parse(text, nullptr, false);
    if (j.is_discarded()) fail(ErrorCode::ParseError, "invalid JSON");
    return j;
}

} // namespace

Graph graph_from_json(const std::string& text) {
    json j = parse_json(text);
    if (!j.is_object() || !j.contains("n") || !j["n"].is_number_integer())
        fail(ErrorCode::ParseError, "graph JSON needs an integer field 'n'");
    int n = j["n"].get<int>();
    std::vector<Edge> edges;
    if (j.contains("edges")) {
        if (!j["edges"].is_array()) fail(ErrorCode::ParseError, "'edges' must be an array");
        for (const auto& e : j["edges"]) {
            if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() || !e[1].is_number_integer())
                fail(ErrorCode::ParseError, "edge entries must be integer pairs");
            edges.emplace_back(e[0].get<int>(), e[1].get<int>());
        }
    }
    try {
        Graph g(n, edges);
        if (j.contains("labels")) {
            if (!j["labels"].is_object()) fail(ErrorCode::ParseError, "'labels' must be an object");
            for (const auto& [key, value] : j["labels"].items()) {
                if (!value.is_string()) fail(ErrorCode::ParseError, "label values must be strings");
                size_t pos = 0;
                int v = std::stoi(key, &pos);
                if (pos != key.size()) fail(ErrorCode::ParseError, "label key '" + key + "'");
                g.set_label(v, value.get<std::string>());
            }
        }
        return g;
    } catch (const Error& e) {
        if (e.code() == ErrorCode::ParseError) throw;
        fail(ErrorCode::ParseError, e.what());
    } catch (const std::invalid_argument&) {
        fail(ErrorCode::ParseError, "label keys must be vertex ids");
    } catch (const std::out_of_range&) {
        fail(ErrorCode::ParseError, "label key out of range");
    }
}

std::string graph_to_json(const Graph& g) {
    json j;
    j["n"] = g.vertex_count();
    j["edges"] = json::array();
    for (auto [u, v] : g.edges()) j["edges"].push_back({u, v});
    if (!g.labels().empty()) {
        json labels = json::object();
        for (const auto& [v, name] : g.labels()) labels[std::to_string(v)] = name;
        j["labels"] = labels;
    }
    return j.dump();
}

Graph graph_from_edge_list(const std::string& text) {
    std::istringstream in(text);
    long n = 0, m = 0;
    if (!(in >> n >> m)) fail(ErrorCode::ParseError, "edge list must start with 'n m'");
    if (n < 0 || m < 0) fail(ErrorCode::ParseError, "negative counts");
    std::vector<Edge> edges;
    for (long i = 0; i < m; ++i) {
        long u, v;
        if (!(in >> u >> v)) fail(ErrorCode::ParseError, "expected " + std::to_string(m) + " edges");
        edges.emplace_back(static_cast<int>(u), static_cast<int>(v));
    }
    std::string leftover;
    if (in >> leftover) fail(ErrorCode::ParseError, "trailing content '" + leftover + "'");
    try {
        return Graph(static_cast<int>(n), edges);
    } catch (const Error& e) {
        if (e.code() == ErrorCode::ParseError) throw;
        fail(ErrorCode::ParseError, e.what());
    }
}

std::string graph_to_edge_list(const Graph& g) {
    std::ostringstream out;
    out << g.vertex_count() << " " << g.edge_count() << "\n";
    for (auto [u, v] : g.edges()) out << u << " " << v << "\n";
    return out.str();
}

Graph graph_from_text(const std::string& text) {
    for (char c : text) {
        if (c == ' ' || c == '\t' || c == '\n' || c == '\r') continue;
        if (c == '{') return graph_from_json(text);
        break;
    }
    return graph_from_edge_list(text);
}

IntPolynomial poly_from_json(const std::string& text) {
    json j = parse_json(text);
    if (!j.is_object() || !j.contains("coeffs") || !j["coeffs"].is_array())
        fail(ErrorCode::ParseError, "polynomial JSON needs a 'coeffs' array");
    std::vector<Int> coeffs;
    for (const auto& c : j["coeffs"]) {
        if (!c.is_string()) fail(ErrorCode::ParseError, "coefficients are decimal strings");
        coeffs.push_back(int_from_decimal(c.get<std::string>()));
    }
    return IntPolynomial::from_coeffs(std::move(coeffs));
}

std::string poly_to_json(const IntPolynomial& p) {
    json j;
    j["coeffs"] = json::array();
    for (const Int& c : p.coeffs()) j["coeffs"].push_back(int_to_decimal(c));
    return j.dump();
}

TwoRowProfile profile_from_json(const std::string& text) {
    json j = parse_json(text);
    if (!j.is_object() || !j.contains("entries") || !j["entries"].is_array())
        fail(ErrorCode::ParseError, "profile JSON needs an 'entries' array");
    TwoRowProfile out;
    for (const auto& e : j["entries"]) {
        if (!e.is_object() || !e.contains("k") || !e.contains("l") || !e.contains("num") ||
            !e.contains("den"))
            fail(ErrorCode::ParseError, "profile entries need k, l, num, den");
        Partition2 p{e["k"].get<long>(), e["l"].get<long>()};
        Int num = int_from_decimal(e["num"].get<std::string>());
        Int den = int_from_decimal(e["den"].get<std::string>());
        if (den == 0) fail(ErrorCode::ParseError, "zero denominator");
        Rat c(num, den);
        c.canonicalize();
        out.add(p, c);
    }
    return out;
}

std::string profile_to_json(const TwoRowProfile& p) {
    json j;
    j["entries"] = json::array();
    for (const auto& [pt, c] : p.entries()) {
        json e;
        e["k"] = pt.k;
        e["l"] = pt.l;
        e["num"] = int_to_decimal(c.get_num());
        e["den"] = int_to_decimal(c.get_den());
        j["entries"].push_back(e);
    }
    return j.dump();
}

std::string profile_to_display(const TwoRowProfile& p) {
    if (p.is_zero()) return "0";
    // degree ascending, dominant part first inside a degree
    std::vector<std::pair<Partition2, Rat>> items(p.entries().begin(), p.entries().end());
    std::stable_sort(items.begin(), items.end(), [](const auto& a, const auto& b) {
        if (a.first.degree() != b.first.degree()) return a.first.degree() < b.first.degree();
        return a.first.k > b.first.k;
    });
    std::string out;
    bool first = true;
    for (const auto& [pt, c] : items) {
        Rat a = abs(c);
        if (first) {
            if (c < 0) out += "-";
            first = false;
        } else {
            out += (c < 0) ? " - " : " + ";
        }
        bool unit = (a == 1);
        std::string part = partition2_display(pt);
        if (!unit || part == "1") {
            out += a.get_num().get_str();
            if (a.get_den() != 1) out += "/" + a.get_den().get_str();
            if (part != "1") out += " ";
        }
        if (part != "1") out += part;
    }
    return out;
}

} // namespace schurlc
