#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "qha/presentation.hpp"

namespace qha {

using PathId = int;

/// One basis path. Trivial paths have an empty arrow sequence and
/// source == target.
struct PathData {
  int source = -1;
  int target = -1;
  std::vector<int> arrows;  // arrow indices, leftmost acts first
  PathId prefix = -1;       // the path minus its last arrow; -1 for trivial paths

  int length() const { return static_cast<int>(arrows.size()); }
};

/// Finite-dimensional monomial bound quiver algebra together with its full
/// basis of nonzero paths (paths avoiding every relation as a contiguous
/// subword). The basis is a trie: every path stores its longest proper prefix,
/// and ids are ordered by (length, lexicographic on declared arrow order).
///
/// Immutable after build(); all queries are safe for concurrent reads.
struct Algebra {
  static constexpr PathId kZero = -1;          // composable product that hits a relation
  static constexpr PathId kIncompatible = -2;  // source/target mismatch

  Presentation pres;
  std::vector<PathData> paths;
  std::vector<PathId> trivial;                // trivial path per vertex
  std::vector<std::vector<PathId>> ext;       // [path][arrow] -> extension id, kZero or kIncompatible
  std::vector<std::vector<PathId>> children;  // nonzero one-arrow extensions, ascending ids
  std::vector<int> subtree_dim;               // #basis paths extending p (incl. p) = dim pΛ
  std::vector<int> residual_depth;            // longest extension chain below p; LL(pΛ) = 1 + depth
  int max_path_len = 0;
  std::size_t basis_limit = 0;

  int dim() const { return static_cast<int>(paths.size()); }
  int num_vertices() const { return pres.quiver.num_vertices(); }
  int num_arrows() const { return pres.quiver.num_arrows(); }
  const PathData& path(PathId p) const { return paths[p]; }
  void require_vertex(int v) const;  // throws UnknownVertex
};

/// Builds the path basis of kQ/I. Finiteness is decided exactly, before
/// enumeration, on the suffix-window automaton (states are relation-free paths
/// of length < max relation length); a reachable directed cycle means the
/// algebra is infinite-dimensional. Throws InfiniteDimensional or
/// BasisLimitExceeded.
Algebra build(const Presentation& p, std::size_t basis_limit = 1000000);

/// Path algebra product. nullopt encodes zero. Throws NotComposable when
/// target(p) != source(q).
std::optional<PathId> multiply(const Algebra& a, PathId p, PathId q);

/// LL(Λ) = 1 + length of the longest nonzero path.
int loewy_length(const Algebra& a);

/// Opposite algebra: arrows and relation words reversed, same vertex set.
Algebra opposite(const Algebra& a);

/// Basis paths with the given source (resp. target), ascending by
/// (length, lexicographic arrow order).
std::vector<PathId> paths_from(const Algebra& a, int vertex);
std::vector<PathId> paths_to(const Algebra& a, int vertex);

/// Id of the basis path starting at `source` with the given arrow word;
/// nullopt if the word leaves the basis. Throws NotComposable on a
/// non-composable word.
std::optional<PathId> find_path(const Algebra& a, int source, const std::vector<int>& arrows);

/// "e_v" for trivial paths, otherwise the arrow names joined by '.'.
std::string path_str(const Algebra& a, PathId p);

}  // namespace qha
