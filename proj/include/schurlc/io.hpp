#pragma once

#include <string>

#include "schurlc/graph.hpp"
#include "schurlc/poly.hpp"
#include "schurlc/schur2.hpp"

namespace schurlc {

/// Graph JSON: {"edges":[[u,v],...],"labels":{"0":"v0",...}?,"n":int}.
/// Output is canonical (sorted keys, sorted edges) and round-trips
/// byte-exactly. ParseError on malformed input.
Graph graph_from_json(const std::string& text);
std::string graph_to_json(const Graph& g);

/// Edge-list text: first line "n m", then m lines "u v".
Graph graph_from_edge_list(const std::string& text);
std::string graph_to_edge_list(const Graph& g);

/// Polynomial JSON: {"coeffs":["1","4","3","1"]}, decimal strings.
IntPolynomial poly_from_json(const std::string& text);
std::string poly_to_json(const IntPolynomial& p);

/// Profile JSON: {"entries":[{"den":"1","k":2,"l":2,"num":"-1"},...]},
/// entries sorted by (k+l, k).
TwoRowProfile profile_from_json(const std::string& text);
std::string profile_to_json(const TwoRowProfile& p);

/// Human form: "s(3,1) - s(2,2)"; degree ascending, k descending inside a
/// degree.
std::string profile_to_display(const TwoRowProfile& p);

/// Sniffs JSON (leading '{') vs edge-list content.
Graph graph_from_text(const std::string& text);

} // namespace schurlc
