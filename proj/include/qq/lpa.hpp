#pragma once

// Presentations of Leavitt path algebras: the quantum version generated from
// a quiver, the classical one generated from a directed graph, and a
// comparison between the two for commutative quivers.

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qq/algebra.hpp"
#include "qq/poly.hpp"
#include "qq/quiver.hpp"

namespace qq {

enum class RelationTag { R1, R2, R3, R4, R5Sigma, R5SigmaBar, L1, L2, L3, L4, L5 };

// "R1" ... "R5sig", "R5sigbar", "L1" ... "L5".
std::string_view tag_name(RelationTag tag);

// `poly` = 0.
struct Relation {
  RelationTag tag = RelationTag::R1;
  Poly poly;
  bool cross_edge = false;  // classical e* f with e != f
};

/// For classical presentations the shapes hold the graph's vertices and edges
/// as size-1 blocks, and Rho / Sigma / SigmaBar stand for p_v / e / e*.
struct LpaPresentation {
  bool classical = false;
  AlgebraShape vertices;
  AlgebraShape edges;
  std::vector<GeneratorSymbol> generators;
  std::vector<Relation> relations;
  // Keys are the Sigma and SigmaBar generators; nullopt is Zero.
  std::map<GeneratorSymbol, std::optional<GeneratorSymbol>> source_map;
  std::map<GeneratorSymbol, std::optional<GeneratorSymbol>> range_map;

  std::size_t count(RelationTag tag) const;
};

std::optional<GeneratorSymbol> range_image(const QuantumQuiver& q, const GeneratorSymbol& s);
std::optional<GeneratorSymbol> source_image(const QuantumQuiver& q, const GeneratorSymbol& s);

LpaPresentation generate_presentation(const QuantumQuiver& q);
LpaPresentation classical_lpa(const DirectedGraph& g);

// "rho:v:1:2", "sig:a:3:4", "sigbar:a:3:4"; classical "p:v", "e:a", "estar:a".
std::string symbol_key(const LpaPresentation& p, const GeneratorSymbol& s);
// "rho^v_{1,2}", "sig^a_{3,4}", "sigbar^a_{3,4}"; classical "p_v", "a", "a*".
std::string symbol_text(const LpaPresentation& p, const GeneratorSymbol& s);
std::string poly_text(const LpaPresentation& p, const Poly& poly);
std::string render_text(const LpaPresentation& p);

struct ClassicalComparison {
  std::map<RelationTag, std::size_t> matched;  // classical tag -> count
  std::vector<Poly> missing_cross_edge;
  std::vector<Relation> missing_other;
  bool unit_relation = false;  // R2 is exactly sum p_v = 1
  std::vector<Relation> extra;  // quantum relations with no classical partner
  LpaPresentation classical;
};

// Throws NonCommutativeError.
ClassicalComparison compare_classical(const QuantumQuiver& q);

std::string emit_matrix_form(const QuantumQuiver& q);

}  // namespace qq
