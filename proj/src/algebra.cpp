#include "qha/algebra.hpp"

#include <algorithm>
#include <map>
#include <queue>

#include "qha/error.hpp"

namespace qha {

namespace {

int max_relation_length(const Presentation& p) {
  std::size_t m = 0;
  for (const auto& rel : p.relations) m = std::max(m, rel.size());
  return static_cast<int>(m);
}

bool ends_with_relation(const std::vector<int>& word, const std::vector<std::vector<int>>& rels) {
  for (const auto& r : rels) {
    if (r.size() > word.size()) continue;
    if (std::equal(r.begin(), r.end(), word.end() - r.size())) return true;
  }
  return false;
}

// Suffix-window automaton. States are relation-free paths of length <= w with
// w = max(1, maxRelationLength - 1); appending an arrow is legal when no
// relation ends at the new position, which only involves the window. The
// algebra is infinite-dimensional iff the transition graph, all of whose
// states are reachable from the trivial paths, contains a directed cycle.
void ensure_finite(const Presentation& p, std::size_t limit) {
  const Quiver& q = p.quiver;
  const int w = std::max(1, max_relation_length(p) - 1);

  std::vector<std::vector<int>> arrows_from(q.num_vertices());
  for (int a = 0; a < q.num_arrows(); ++a) arrows_from[q.arrows[a].source].push_back(a);

  struct State {
    std::vector<int> word;
    int end;
  };
  std::map<std::pair<std::vector<int>, int>, int> index;
  std::vector<State> states;
  std::vector<std::vector<int>> next;
  std::queue<int> todo;

  auto intern = [&](std::vector<int> word, int end) {
    auto key = std::make_pair(word, end);
    auto it = index.find(key);
    if (it != index.end()) return it->second;
    if (states.size() >= limit)
      fail(ErrorKind::BasisLimitExceeded, "finiteness automaton exceeded the basis limit");
    int id = static_cast<int>(states.size());
    index.emplace(std::move(key), id);
    states.push_back({std::move(word), end});
    next.emplace_back();
    todo.push(id);
    return id;
  };

  for (int v = 0; v < q.num_vertices(); ++v) intern({}, v);
  while (!todo.empty()) {
    int s = todo.front();
    todo.pop();
    // copy: states may reallocate while interning successors
    const std::vector<int> word = states[s].word;
    const int end = states[s].end;
    for (int a : arrows_from[end]) {
      std::vector<int> grown = word;
      grown.push_back(a);
      if (ends_with_relation(grown, p.relations)) continue;
      if (static_cast<int>(grown.size()) > w) grown.erase(grown.begin());
      // intern may grow `next`; take the id before indexing into it
      const int nid = intern(std::move(grown), q.arrows[a].target);
      next[s].push_back(nid);
    }
  }

  // iterative DFS cycle detection
  enum : char { kWhite, kGray, kBlack };
  std::vector<char> color(states.size(), kWhite);
  for (int root = 0; root < static_cast<int>(states.size()); ++root) {
    if (color[root] != kWhite) continue;
    std::vector<std::pair<int, std::size_t>> stack{{root, 0}};
    color[root] = kGray;
    while (!stack.empty()) {
      auto& [s, i] = stack.back();
      if (i == next[s].size()) {
        color[s] = kBlack;
        stack.pop_back();
        continue;
      }
      int t = next[s][i++];
      if (color[t] == kGray)
        fail(ErrorKind::InfiniteDimensional,
             "arbitrarily long nonzero paths exist (reachable cycle avoiding all relations)");
      if (color[t] == kWhite) {
        color[t] = kGray;
        stack.emplace_back(t, 0);
      }
    }
  }
}

}  // namespace

void Algebra::require_vertex(int v) const {
  if (v < 0 || v >= num_vertices())
    fail(ErrorKind::UnknownVertex, "vertex index " + std::to_string(v) + " out of range");
}

Algebra build(const Presentation& input, std::size_t basis_limit) {
  Presentation pres = validate(input);
  ensure_finite(pres, basis_limit);

  Algebra a;
  a.pres = pres;
  a.basis_limit = basis_limit;
  const Quiver& q = pres.quiver;
  const int na = q.num_arrows();

  std::vector<std::vector<int>> arrows_from(q.num_vertices());
  for (int arr = 0; arr < na; ++arr) arrows_from[q.arrows[arr].source].push_back(arr);

  for (int v = 0; v < q.num_vertices(); ++v) {
    a.trivial.push_back(static_cast<PathId>(a.paths.size()));
    PathData d;
    d.source = d.target = v;
    a.paths.push_back(std::move(d));
  }

  // breadth-first by length; each level is sorted by word so that ids are
  // ordered by (length, lexicographic on declared arrow order)
  std::vector<PathId> level = a.trivial;
  while (!level.empty()) {
    for (std::size_t i = a.ext.size(); i < a.paths.size(); ++i) {
      a.ext.emplace_back(na, Algebra::kIncompatible);
      a.children.emplace_back();
    }
    struct Candidate {
      std::vector<int> word;
      PathId parent;
      int arrow;
    };
    std::vector<Candidate> grown;
    for (PathId p : level) {
      const int tgt = a.paths[p].target;
      for (int arr : arrows_from[tgt]) {
        std::vector<int> word = a.paths[p].arrows;
        word.push_back(arr);
        if (ends_with_relation(word, pres.relations)) {
          a.ext[p][arr] = Algebra::kZero;
          continue;
        }
        grown.push_back({std::move(word), p, arr});
      }
    }
    std::sort(grown.begin(), grown.end(),
              [](const Candidate& x, const Candidate& y) { return x.word < y.word; });
    level.clear();
    for (Candidate& c : grown) {
      if (a.paths.size() >= basis_limit)
        fail(ErrorKind::BasisLimitExceeded,
             "basis exceeds limit of " + std::to_string(basis_limit) + " paths");
      PathData d;
      d.source = a.paths[c.parent].source;
      d.target = q.arrows[c.arrow].target;
      d.prefix = c.parent;
      d.arrows = std::move(c.word);
      a.max_path_len = std::max(a.max_path_len, d.length());
      const PathId id = static_cast<PathId>(a.paths.size());
      a.paths.push_back(std::move(d));
      a.ext[c.parent][c.arrow] = id;
      a.children[c.parent].push_back(id);
      level.push_back(id);
    }
  }
  for (std::size_t i = a.ext.size(); i < a.paths.size(); ++i) {
    a.ext.emplace_back(na, Algebra::kIncompatible);
    a.children.emplace_back();
  }

  a.subtree_dim.assign(a.dim(), 1);
  a.residual_depth.assign(a.dim(), 0);
  for (PathId p = a.dim() - 1; p >= 0; --p)
    for (PathId c : a.children[p]) {
      a.subtree_dim[p] += a.subtree_dim[c];
      a.residual_depth[p] = std::max(a.residual_depth[p], 1 + a.residual_depth[c]);
    }
  return a;
}

std::optional<PathId> multiply(const Algebra& a, PathId p, PathId q) {
  if (a.path(p).target != a.path(q).source)
    fail(ErrorKind::NotComposable,
         path_str(a, p) + " does not compose with " + path_str(a, q));
  PathId r = p;
  for (int arr : a.path(q).arrows) {
    r = a.ext[r][arr];
    if (r == Algebra::kZero) return std::nullopt;
  }
  return r;
}

int loewy_length(const Algebra& a) { return a.dim() == 0 ? 0 : 1 + a.max_path_len; }

Algebra opposite(const Algebra& a) {
  Presentation op;
  op.quiver.vertices = a.pres.quiver.vertices;
  for (const Arrow& arr : a.pres.quiver.arrows)
    op.quiver.arrows.push_back({arr.name, arr.target, arr.source});
  for (const auto& rel : a.pres.relations)
    op.relations.emplace_back(rel.rbegin(), rel.rend());
  return build(op, a.basis_limit);
}

std::vector<PathId> paths_from(const Algebra& a, int vertex) {
  a.require_vertex(vertex);
  std::vector<PathId> out;
  for (PathId p = 0; p < a.dim(); ++p)
    if (a.path(p).source == vertex) out.push_back(p);
  return out;
}

std::vector<PathId> paths_to(const Algebra& a, int vertex) {
  a.require_vertex(vertex);
  std::vector<PathId> out;
  for (PathId p = 0; p < a.dim(); ++p)
    if (a.path(p).target == vertex) out.push_back(p);
  return out;
}

std::optional<PathId> find_path(const Algebra& a, int source, const std::vector<int>& arrows) {
  a.require_vertex(source);
  PathId p = a.trivial[source];
  for (int arr : arrows) {
    if (arr < 0 || arr >= a.num_arrows()) fail(ErrorKind::Internal, "arrow index out of range");
    PathId n = a.ext[p][arr];
    if (n == Algebra::kIncompatible)
      fail(ErrorKind::NotComposable, "word is not a path: '" +
                                         a.pres.quiver.arrows[arr].name + "' does not continue " +
                                         path_str(a, p));
    if (n == Algebra::kZero) return std::nullopt;
    p = n;
  }
  return p;
}

std::string path_str(const Algebra& a, PathId p) {
  const PathData& d = a.path(p);
  if (d.length() == 0) return "e_" + a.pres.quiver.vertices[d.source];
  std::string out;
  for (std::size_t i = 0; i < d.arrows.size(); ++i) {
    if (i) out += '.';
    out += a.pres.quiver.arrows[d.arrows[i]].name;
  }
  return out;
}

}  // namespace qha
