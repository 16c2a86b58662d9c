#include "qha/pathmod.hpp"

#include <algorithm>

#include "qha/error.hpp"

namespace qha {

SimpleSet SimpleSet::all(int num_vertices) {
  SimpleSet s(num_vertices);
  s.mask_.assign(num_vertices, true);
  return s;
}

SimpleSet SimpleSet::of(int num_vertices, const std::vector<int>& vertices) {
  SimpleSet s(num_vertices);
  for (int v : vertices) {
    if (v < 0 || v >= num_vertices)
      fail(ErrorKind::UnknownVertex, "vertex index " + std::to_string(v) + " out of range");
    s.insert(v);
  }
  return s;
}

SimpleSet SimpleSet::of(int num_vertices, std::initializer_list<int> vertices) {
  return of(num_vertices, std::vector<int>(vertices));
}

SimpleSet SimpleSet::complement() const {
  SimpleSet s(universe());
  for (int v = 0; v < universe(); ++v)
    if (!mask_[v]) s.insert(v);
  return s;
}

std::vector<int> SimpleSet::vertices() const {
  std::vector<int> out;
  for (int v = 0; v < universe(); ++v)
    if (mask_[v]) out.push_back(v);
  return out;
}

int SimpleSet::size() const { return static_cast<int>(std::count(mask_.begin(), mask_.end(), true)); }

bool lex_less(const SimpleSet& a, const SimpleSet& b) {
  const auto va = a.vertices(), vb = b.vertices();
  return std::lexicographical_compare(va.begin(), va.end(), vb.begin(), vb.end());
}

PathModuleSum PathModuleSum::of(std::vector<PathId> g) {
  std::sort(g.begin(), g.end());
  return PathModuleSum{std::move(g)};
}

PathModuleSum projective_module(const Algebra& a, int vertex) {
  a.require_vertex(vertex);
  return PathModuleSum{{a.trivial[vertex]}};
}

std::size_t dim(const Algebra& a, const PathModuleSum& m) {
  std::size_t total = 0;
  for (PathId p : m.gens) total += static_cast<std::size_t>(a.subtree_dim[p]);
  return total;
}

int loewy_length(const Algebra& a, const PathModuleSum& m) {
  int best = 0;
  for (PathId p : m.gens) best = std::max(best, 1 + a.residual_depth[p]);
  return best;
}

std::vector<int> composition_factors(const Algebra& a, const PathModuleSum& m) {
  std::vector<int> counts(a.num_vertices(), 0);
  std::vector<PathId> stack = m.gens;
  while (!stack.empty()) {
    PathId p = stack.back();
    stack.pop_back();
    ++counts[a.path(p).target];
    for (PathId c : a.children[p]) stack.push_back(c);
  }
  return counts;
}

PathModuleSum radical_module(const Algebra& a, const PathModuleSum& m) {
  std::vector<PathId> out;
  for (PathId p : m.gens) out.insert(out.end(), a.children[p].begin(), a.children[p].end());
  return PathModuleSum::of(std::move(out));
}

PathModuleSum torsion_radical(const Algebra& a, const PathModuleSum& m, const SimpleSet& v) {
  std::vector<PathId> out;
  std::vector<PathId> stack = m.gens;
  while (!stack.empty()) {
    PathId p = stack.back();
    stack.pop_back();
    if (!v.contains(a.path(p).target)) {
      out.push_back(p);  // top pΛ = S(target p) lies in V', whole summand is torsion
    } else {
      for (PathId c : a.children[p]) stack.push_back(c);
    }
  }
  return PathModuleSum::of(std::move(out));
}

PathModuleSum f_tv(const Algebra& a, const PathModuleSum& m, const SimpleSet& v) {
  return radical_module(a, torsion_radical(a, m, v));
}

int layer_length(const Algebra& a, const PathModuleSum& m, const SimpleSet& v) {
  PathModuleSum x = m;
  int i = 0;
  while (!torsion_radical(a, x, v).is_zero()) {
    x = f_tv(a, x, v);
    ++i;
  }
  return i;
}

std::vector<int> layer_length_paths(const Algebra& a, const SimpleSet& v) {
  std::vector<int> ll(a.dim(), 0);
  for (PathId p = a.dim() - 1; p >= 0; --p) {
    int base = 0;
    for (PathId c : a.children[p]) base = std::max(base, ll[c]);
    ll[p] = v.contains(a.path(p).target) ? base : 1 + base;
  }
  return ll;
}

int layer_length_algebra(const Algebra& a, const SimpleSet& v) {
  const auto ll = layer_length_paths(a, v);
  int best = 0;
  for (int i = 0; i < a.num_vertices(); ++i) best = std::max(best, ll[a.trivial[i]]);
  return best;
}

std::vector<PathId> min_annihilators(const Algebra& a, PathId p) {
  std::vector<PathId> out;
  // walk candidate paths q inside the basis trie from target(p); a branch ends
  // the first time the product dies, which is exactly the minimality condition
  std::vector<std::pair<PathId, PathId>> stack{{a.trivial[a.path(p).target], p}};
  while (!stack.empty()) {
    auto [q, prod] = stack.back();
    stack.pop_back();
    for (PathId c : a.children[q]) {
      const int arr = a.path(c).arrows.back();
      const PathId grown = a.ext[prod][arr];
      if (grown == Algebra::kZero)
        out.push_back(c);
      else
        stack.emplace_back(c, grown);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

// pd over the σ-graph by peeling: a node is resolved once all successors are,
// taking 1 + max; nodes never resolved reach a cycle and have infinite pd.
std::vector<HomDim> pd_table(const Algebra& a, const std::vector<std::vector<PathId>>& sigma) {
  const int n = a.dim();
  std::vector<HomDim> out(n, HomDim::infinite());
  std::vector<int> remaining(n), best(n, -1);
  std::vector<std::vector<int>> rev(n);
  for (PathId p = 0; p < n; ++p) {
    remaining[p] = static_cast<int>(sigma[p].size());
    for (PathId q : sigma[p]) rev[q].push_back(p);
  }
  std::vector<PathId> queue;
  for (PathId p = 0; p < n; ++p)
    if (remaining[p] == 0) {
      out[p] = HomDim::finite(0);
      queue.push_back(p);
    }
  while (!queue.empty()) {
    PathId q = queue.back();
    queue.pop_back();
    for (PathId p : rev[q]) {
      best[p] = std::max(best[p], out[q].value());
      if (--remaining[p] == 0) {
        out[p] = HomDim::finite(best[p] + 1);
        queue.push_back(p);
      }
    }
  }
  return out;
}

// pd S(v): 0 when S(v) is projective (no arrows out of v), else
// 1 + max over the arrow modules of rad P(v) = ⊕ αΛ.
HomDim simple_pd(const Algebra& a, const std::vector<HomDim>& pd, int v) {
  const auto& kids = a.children[a.trivial[v]];
  if (kids.empty()) return HomDim::finite(0);
  HomDim m = HomDim::finite(-1);
  for (PathId c : kids) m = max(m, pd[c]);
  return succ(m);
}

}  // namespace

PathHom::PathHom(const Algebra& a) : alg_(&a), op_(opposite(a)) {
  sigma_.resize(a.dim());
  for (PathId p = 0; p < a.dim(); ++p) sigma_[p] = qha::min_annihilators(a, p);
  pd_ = pd_table(a, sigma_);

  std::vector<std::vector<PathId>> op_sigma(op_.dim());
  for (PathId p = 0; p < op_.dim(); ++p) op_sigma[p] = qha::min_annihilators(op_, p);
  const auto op_pd = pd_table(op_, op_sigma);

  for (int v = 0; v < a.num_vertices(); ++v) {
    pd_simple_.push_back(simple_pd(a, pd_, v));
    id_simple_.push_back(simple_pd(op_, op_pd, v));
  }
}

HomDim PathHom::pd_simple(int vertex) const {
  alg_->require_vertex(vertex);
  return pd_simple_[vertex];
}

HomDim PathHom::id_simple(int vertex) const {
  alg_->require_vertex(vertex);
  return id_simple_[vertex];
}

HomDim PathHom::gldim() const {
  HomDim g = HomDim::finite(-1);
  for (int v = 0; v < alg_->num_vertices(); ++v) g = max(g, pd_simple_[v]);
  return g;
}

std::tuple<SimpleSet, SimpleSet, SimpleSet> PathHom::simple_classes() const {
  const int n = alg_->num_vertices();
  SimpleSet fin(n), inf(n), fin_inj(n);
  for (int v = 0; v < n; ++v) {
    (pd_simple_[v].is_finite() ? fin : inf).insert(v);
    if (id_simple_[v].is_finite()) fin_inj.insert(v);
  }
  return {fin, inf, fin_inj};
}

}  // namespace qha
