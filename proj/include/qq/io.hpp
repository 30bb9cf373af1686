#pragma once

// Text formats: quiver files, graph files and monoid element expressions.
// Every parse failure is a ParseError carrying a 1-based line and column.

#include <string>
#include <string_view>

#include "qq/quiver.hpp"
#include "qq/vmonoid.hpp"

namespace qq {

inline constexpr long kMaxFileInteger = 100000;

QuantumQuiver parse_qq(std::string_view text);
// Embedding sections are written only when they differ from the canonical one.
std::string emit_qq(const QuantumQuiver& quiver);

DirectedGraph parse_graph(std::string_view text);
std::string emit_graph(const DirectedGraph& graph);

// expr := term ('+' term)* ; term := INT '*'? atom | atom ;
// atom := 'I' | 'P(' id ')' ; also the literal 0.
MonoidElement parse_element(const MonoidPresentation& p, std::string_view text);

}  // namespace qq
