#pragma once

#include <string>
#include <vector>

namespace qha {

struct Arrow {
  std::string name;
  int source = -1;
  int target = -1;
  bool operator==(const Arrow&) const = default;
};

/// Finite quiver. Vertices and arrows are identified by their index in
/// declaration order; names are arbitrary non-whitespace tokens.
struct Quiver {
  std::vector<std::string> vertices;
  std::vector<Arrow> arrows;

  int num_vertices() const { return static_cast<int>(vertices.size()); }
  int num_arrows() const { return static_cast<int>(arrows.size()); }
  int vertex_index(const std::string& name) const;  // -1 if unknown
  int arrow_index(const std::string& name) const;   // -1 if unknown
  bool operator==(const Quiver&) const = default;
};

/// Quiver plus monomial relations. Each relation is a path given as a sequence
/// of arrow indices; juxtaposition is path composition with the leftmost arrow
/// acting first.
struct Presentation {
  Quiver quiver;
  std::vector<std::vector<int>> relations;
  bool operator==(const Presentation&) const = default;
};

/// Parses the line-based text format:
///   vertices <id> <id> ...
///   arrow <name> <source> <target>
///   relation <arrowname> <arrowname> ...
/// '#' starts a comment; blank lines are ignored. Throws Error with kind
/// SyntaxError / UndefinedSymbol / DuplicateName / NonMonomialRelation.
Presentation parse(const std::string& text);

/// Checks composability and admissibility (length >= 2) of every relation and
/// removes relations containing another relation as a contiguous subword.
/// The result is normalized: relations deduplicated and sorted by
/// (length, lexicographic on arrow indices). Idempotent. A message per removed
/// relation is appended to *warnings when given.
Presentation validate(const Presentation& p, std::vector<std::string>* warnings = nullptr);

/// Canonical text form; parse(print(p)) == p for validated presentations.
std::string print(const Presentation& p);

std::string relation_word(const Quiver& q, const std::vector<int>& relation);

}  // namespace qha
