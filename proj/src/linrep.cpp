#include "qha/linrep.hpp"

#include <algorithm>

#include "qha/error.hpp"

namespace qha {

namespace {

// Basis of paths grouped by target vertex, with each path's position inside
// its component. Shared by the path-module, projective and cover builders.
struct GroupedPaths {
  std::vector<std::vector<PathId>> at;  // per vertex
  std::vector<int> pos;                 // per path id; -1 when absent

  GroupedPaths(const Algebra& a, const std::vector<PathId>& list)
      : at(a.num_vertices()), pos(a.dim(), -1) {
    for (PathId p : list) {
      pos[p] = static_cast<int>(at[a.path(p).target].size());
      at[a.path(p).target].push_back(p);
    }
  }
};

Rep rep_from_paths(const Algebra& a, const std::vector<PathId>& list) {
  GroupedPaths g(a, list);
  Rep m;
  m.alg = &a;
  m.dims.resize(a.num_vertices());
  for (int v = 0; v < a.num_vertices(); ++v) m.dims[v] = static_cast<int>(g.at[v].size());
  for (int arr = 0; arr < a.num_arrows(); ++arr) {
    const Arrow& ar = a.pres.quiver.arrows[arr];
    QMat mat(m.dims[ar.target], m.dims[ar.source]);
    for (PathId p : g.at[ar.source]) {
      const PathId c = a.ext[p][arr];
      if (c >= 0 && g.pos[c] >= 0) mat.at(g.pos[c], g.pos[p]) = 1;
    }
    m.act.push_back(std::move(mat));
  }
  m.validate();
  return m;
}

std::vector<PathId> subtree_paths(const Algebra& a, PathId p) {
  std::vector<PathId> out;
  std::vector<PathId> stack{p};
  while (!stack.empty()) {
    PathId q = stack.back();
    stack.pop_back();
    out.push_back(q);
    for (PathId c : a.children[q]) stack.push_back(c);
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

int Rep::total_dim() const {
  int t = 0;
  for (int d : dims) t += d;
  return t;
}

void Rep::validate() const {
  if (!alg) fail(ErrorKind::Internal, "representation without an algebra");
  const Quiver& q = alg->pres.quiver;
  if (static_cast<int>(dims.size()) != q.num_vertices() ||
      static_cast<int>(act.size()) != q.num_arrows())
    fail(ErrorKind::Internal, "representation shape mismatch");
  for (int arr = 0; arr < q.num_arrows(); ++arr)
    if (act[arr].rows() != dims[q.arrows[arr].target] || act[arr].cols() != dims[q.arrows[arr].source])
      fail(ErrorKind::Internal, "arrow matrix shape mismatch");
  for (const auto& rel : alg->pres.relations) {
    QMat comp = QMat::identity(dims[q.arrows[rel.front()].source]);
    for (int arr : rel) comp = act[arr] * comp;
    if (!comp.is_zero()) fail(ErrorKind::Internal, "relation composite does not vanish");
  }
}

void RepMorphism::validate() const {
  if (dom.alg != cod.alg) fail(ErrorKind::Internal, "morphism across algebras");
  const Quiver& q = dom.alg->pres.quiver;
  if (static_cast<int>(map.size()) != q.num_vertices())
    fail(ErrorKind::Internal, "morphism map count mismatch");
  for (int v = 0; v < q.num_vertices(); ++v)
    if (map[v].rows() != cod.dims[v] || map[v].cols() != dom.dims[v])
      fail(ErrorKind::Internal, "morphism block shape mismatch");
  for (int arr = 0; arr < q.num_arrows(); ++arr) {
    const Arrow& ar = q.arrows[arr];
    if (!(map[ar.target] * dom.act[arr] == cod.act[arr] * map[ar.source]))
      fail(ErrorKind::Internal, "morphism does not commute with arrow '" + ar.name + "'");
  }
}

bool RepMorphism::is_mono() const {
  for (std::size_t v = 0; v < map.size(); ++v)
    if (map[v].rank() != dom.dims[v]) return false;
  return true;
}

bool RepMorphism::is_epi() const {
  for (std::size_t v = 0; v < map.size(); ++v)
    if (map[v].rank() != cod.dims[v]) return false;
  return true;
}

RepMorphism identity_morphism(const Rep& m) {
  RepMorphism f{m, m, {}};
  for (int d : m.dims) f.map.push_back(QMat::identity(d));
  return f;
}

RepMorphism zero_morphism(const Rep& dom, const Rep& cod) {
  RepMorphism f{dom, cod, {}};
  for (std::size_t v = 0; v < dom.dims.size(); ++v) f.map.emplace_back(cod.dims[v], dom.dims[v]);
  return f;
}

RepMorphism compose(const RepMorphism& g, const RepMorphism& f) {
  RepMorphism out{f.dom, g.cod, {}};
  for (std::size_t v = 0; v < f.map.size(); ++v) out.map.push_back(g.map[v] * f.map[v]);
  out.validate();
  return out;
}

Rep zero_rep(const Algebra& a) {
  Rep m;
  m.alg = &a;
  m.dims.assign(a.num_vertices(), 0);
  for (int arr = 0; arr < a.num_arrows(); ++arr) m.act.emplace_back(0, 0);
  return m;
}

Rep simple_rep(const Algebra& a, int vertex) {
  a.require_vertex(vertex);
  Rep m;
  m.alg = &a;
  m.dims.assign(a.num_vertices(), 0);
  m.dims[vertex] = 1;
  for (int arr = 0; arr < a.num_arrows(); ++arr) {
    const Arrow& ar = a.pres.quiver.arrows[arr];
    m.act.emplace_back(m.dims[ar.target], m.dims[ar.source]);
  }
  m.validate();
  return m;
}

Rep rep_of_path_module(const Algebra& a, PathId p) {
  return rep_from_paths(a, subtree_paths(a, p));
}

Rep projective_rep(const Algebra& a, int vertex) {
  a.require_vertex(vertex);
  return rep_of_path_module(a, a.trivial[vertex]);
}

Rep injective_rep(const Algebra& a, int vertex) {
  a.require_vertex(vertex);
  const auto list = paths_to(a, vertex);
  // group by source: I(i)_v is spanned by the paths v -> i
  std::vector<std::vector<PathId>> at(a.num_vertices());
  std::vector<int> pos(a.dim(), -1);
  for (PathId p : list) {
    pos[p] = static_cast<int>(at[a.path(p).source].size());
    at[a.path(p).source].push_back(p);
  }
  Rep m;
  m.alg = &a;
  m.dims.resize(a.num_vertices());
  for (int v = 0; v < a.num_vertices(); ++v) m.dims[v] = static_cast<int>(at[v].size());
  for (int arr = 0; arr < a.num_arrows(); ++arr) {
    const Arrow& ar = a.pres.quiver.arrows[arr];
    QMat mat(m.dims[ar.target], m.dims[ar.source]);
    for (PathId p : at[ar.source]) {
      const PathData& d = a.path(p);
      if (d.length() == 0 || d.arrows.front() != arr) continue;
      // delete the leading arrow; the tail is a basis path by subword closure
      std::vector<int> tail(d.arrows.begin() + 1, d.arrows.end());
      auto t = find_path(a, ar.target, tail);
      if (!t) fail(ErrorKind::Internal, "suffix of a basis path left the basis");
      mat.at(pos[*t], pos[p]) = 1;
    }
    m.act.push_back(std::move(mat));
  }
  m.validate();
  return m;
}

Rep direct_sum(const std::vector<Rep>& parts) {
  if (parts.empty()) fail(ErrorKind::Internal, "direct sum of an empty list");
  const Algebra& a = *parts.front().alg;
  Rep m;
  m.alg = &a;
  m.dims.assign(a.num_vertices(), 0);
  for (const Rep& p : parts) {
    if (p.alg != &a) fail(ErrorKind::Internal, "direct sum across algebras");
    for (int v = 0; v < a.num_vertices(); ++v) m.dims[v] += p.dims[v];
  }
  for (int arr = 0; arr < a.num_arrows(); ++arr) {
    const Arrow& ar = a.pres.quiver.arrows[arr];
    QMat mat(m.dims[ar.target], m.dims[ar.source]);
    int roff = 0, coff = 0;
    for (const Rep& p : parts) {
      for (int i = 0; i < p.act[arr].rows(); ++i)
        for (int j = 0; j < p.act[arr].cols(); ++j) mat.at(roff + i, coff + j) = p.act[arr].at(i, j);
      roff += p.dims[ar.target];
      coff += p.dims[ar.source];
    }
    m.act.push_back(std::move(mat));
  }
  m.validate();
  return m;
}

Rep rep_of_path_sum(const Algebra& a, const PathModuleSum& sum) {
  if (sum.gens.empty()) return zero_rep(a);
  std::vector<Rep> parts;
  for (PathId p : sum.gens) parts.push_back(rep_of_path_module(a, p));
  return direct_sum(parts);
}

Rep regular_rep(const Algebra& a) {
  std::vector<Rep> parts;
  for (int v = 0; v < a.num_vertices(); ++v) parts.push_back(projective_rep(a, v));
  return direct_sum(parts);
}

Rep coregular_rep(const Algebra& a) {
  std::vector<Rep> parts;
  for (int v = 0; v < a.num_vertices(); ++v) parts.push_back(injective_rep(a, v));
  return direct_sum(parts);
}

namespace {

// Subrepresentation from a per-vertex column basis; arrow actions are induced
// by exact solving (the spans must be arrow-stable).
SubRep sub_from_basis(const Rep& m, std::vector<QMat> basis) {
  const Algebra& a = *m.alg;
  Rep sub;
  sub.alg = &a;
  sub.dims.resize(a.num_vertices());
  for (int v = 0; v < a.num_vertices(); ++v) sub.dims[v] = basis[v].cols();
  for (int arr = 0; arr < a.num_arrows(); ++arr) {
    const Arrow& ar = a.pres.quiver.arrows[arr];
    sub.act.push_back(QMat::solve(basis[ar.target], m.act[arr] * basis[ar.source]));
  }
  sub.validate();
  RepMorphism incl{sub, m, std::move(basis)};
  incl.validate();
  return {std::move(sub), std::move(incl)};
}

}  // namespace

SubRep radical(const Rep& m) {
  const Algebra& a = *m.alg;
  std::vector<QMat> basis(a.num_vertices());
  for (int w = 0; w < a.num_vertices(); ++w) {
    std::vector<QMat> blocks;
    for (int arr = 0; arr < a.num_arrows(); ++arr)
      if (a.pres.quiver.arrows[arr].target == w) blocks.push_back(m.act[arr]);
    basis[w] = blocks.empty() ? QMat(m.dims[w], 0) : QMat::hstack(blocks).column_space();
  }
  return sub_from_basis(m, std::move(basis));
}

TopInfo top(const Rep& m) {
  const Algebra& a = *m.alg;
  SubRep rad = radical(m);
  TopInfo info;
  info.mult.resize(a.num_vertices());
  info.rep.alg = &a;
  info.rep.dims.resize(a.num_vertices());
  std::vector<QMat> proj(a.num_vertices());
  for (int v = 0; v < a.num_vertices(); ++v) {
    auto [d, q] = complement_and_quotient(rad.incl.map[v]);
    info.mult[v] = d.cols();
    info.rep.dims[v] = d.cols();
    proj[v] = std::move(q);
  }
  for (int arr = 0; arr < a.num_arrows(); ++arr) {
    const Arrow& ar = a.pres.quiver.arrows[arr];
    info.rep.act.emplace_back(info.rep.dims[ar.target], info.rep.dims[ar.source]);
  }
  info.rep.validate();
  info.proj = RepMorphism{m, info.rep, std::move(proj)};
  info.proj.validate();
  return info;
}

Rep socle(const Rep& m) {
  const Algebra& a = *m.alg;
  Rep s;
  s.alg = &a;
  s.dims.resize(a.num_vertices());
  for (int v = 0; v < a.num_vertices(); ++v) {
    std::vector<QMat> blocks;
    for (int arr = 0; arr < a.num_arrows(); ++arr)
      if (a.pres.quiver.arrows[arr].source == v) blocks.push_back(m.act[arr]);
    QMat stacked = blocks.empty() ? QMat(0, m.dims[v]) : QMat::vstack(blocks);
    s.dims[v] = stacked.nullspace().cols();
  }
  for (int arr = 0; arr < a.num_arrows(); ++arr) {
    const Arrow& ar = a.pres.quiver.arrows[arr];
    s.act.emplace_back(s.dims[ar.target], s.dims[ar.source]);
  }
  s.validate();
  return s;
}

SubRep kernel(const RepMorphism& f) {
  const Algebra& a = *f.dom.alg;
  std::vector<QMat> basis(a.num_vertices());
  for (int v = 0; v < a.num_vertices(); ++v) basis[v] = f.map[v].nullspace();
  return sub_from_basis(f.dom, std::move(basis));
}

QuotRep quotient(const RepMorphism& incl) {
  const Algebra& a = *incl.cod.alg;
  Rep quot;
  quot.alg = &a;
  quot.dims.resize(a.num_vertices());
  std::vector<QMat> lifts(a.num_vertices()), proj(a.num_vertices());
  for (int v = 0; v < a.num_vertices(); ++v) {
    auto [d, q] = complement_and_quotient(incl.map[v]);
    quot.dims[v] = d.cols();
    lifts[v] = std::move(d);
    proj[v] = std::move(q);
  }
  for (int arr = 0; arr < a.num_arrows(); ++arr) {
    const Arrow& ar = a.pres.quiver.arrows[arr];
    quot.act.push_back(proj[ar.target] * incl.cod.act[arr] * lifts[ar.source]);
  }
  quot.validate();
  RepMorphism p{incl.cod, quot, std::move(proj)};
  p.validate();
  return {std::move(quot), std::move(p)};
}

RepMorphism projective_cover(const Rep& m) {
  const Algebra& a = *m.alg;
  if (m.is_zero()) return zero_morphism(zero_rep(a), m);

  SubRep rad = radical(m);
  std::vector<Rep> parts;
  std::vector<std::vector<QMat>> blocks;  // per part, per vertex
  for (int i = 0; i < a.num_vertices(); ++i) {
    auto [lifts, q] = complement_and_quotient(rad.incl.map[i]);
    for (int j = 0; j < lifts.cols(); ++j) {
      // one copy of P(i) per chosen lift of the top basis at vertex i
      const auto list = paths_from(a, i);
      GroupedPaths g(a, list);
      std::vector<QMat> value(a.dim());
      value[a.trivial[i]] = lifts.col(j);
      for (PathId p : list)
        for (PathId c : a.children[p]) value[c] = m.act[a.path(c).arrows.back()] * value[p];
      parts.push_back(rep_from_paths(a, list));
      std::vector<QMat> maps(a.num_vertices());
      for (int w = 0; w < a.num_vertices(); ++w) {
        QMat mat(m.dims[w], static_cast<int>(g.at[w].size()));
        for (PathId p : g.at[w])
          for (int r = 0; r < m.dims[w]; ++r) mat.at(r, g.pos[p]) = value[p].at(r, 0);
        maps[w] = std::move(mat);
      }
      blocks.push_back(std::move(maps));
    }
  }
  if (parts.empty()) fail(ErrorKind::LiftFailure, "nonzero module with empty top");

  Rep dom = direct_sum(parts);
  std::vector<QMat> maps(a.num_vertices());
  for (int w = 0; w < a.num_vertices(); ++w) {
    std::vector<QMat> row;
    for (const auto& b : blocks) row.push_back(b[w]);
    maps[w] = QMat::hstack(row);
  }
  RepMorphism cover{std::move(dom), m, std::move(maps)};
  cover.validate();
  for (int w = 0; w < a.num_vertices(); ++w)
    if (cover.map[w].rank() != m.dims[w])
      fail(ErrorKind::LiftFailure, "lifted generators do not cover the module");
  return cover;
}

Rep syzygy(const Rep& m, int steps) {
  Rep x = m;
  for (int k = 0; k < steps; ++k) x = kernel(projective_cover(x)).rep;
  return x;
}

PdBound pd_bounded(const Rep& m, int cutoff, int dim_budget) {
  if (cutoff < 0) cutoff = 2 * m.alg->dim();
  if (dim_budget <= 0) dim_budget = std::max(128, 4 * m.alg->dim());
  Rep x = m;
  for (int k = 0; k <= cutoff + 1; ++k) {
    if (x.is_zero()) return PdBound::finite(k - 1);
    if (x.total_dim() > dim_budget) return PdBound::at_least(k);
    x = kernel(projective_cover(x)).rep;
  }
  return PdBound::at_least(cutoff + 1);
}

SubRep torsion_radical(const Rep& m, const SimpleSet& v) {
  const Algebra& a = *m.alg;
  if (v.universe() != a.num_vertices()) fail(ErrorKind::Internal, "simple set universe mismatch");
  Rep cur = m;
  RepMorphism incl = identity_morphism(m);
  for (;;) {
    SubRep rad = radical(cur);
    bool stop = true;
    for (int w = 0; w < a.num_vertices(); ++w)
      if (v.contains(w) && rad.rep.dims[w] != cur.dims[w]) {
        stop = false;
        break;
      }
    if (stop) break;
    // kernel of cur ->> V-isotypic part of top cur: the radical at V-vertices,
    // everything elsewhere (arrow-stable since images always land in radicals)
    std::vector<QMat> basis(a.num_vertices());
    for (int w = 0; w < a.num_vertices(); ++w)
      basis[w] = v.contains(w) ? rad.incl.map[w] : QMat::identity(cur.dims[w]);
    SubRep step = sub_from_basis(cur, std::move(basis));
    incl = compose(incl, step.incl);
    cur = std::move(step.rep);
  }
  return {cur, incl};
}

Rep q_tv(const Rep& m, const SimpleSet& v) { return quotient(torsion_radical(m, v).incl).rep; }

Rep f_tv(const Rep& m, const SimpleSet& v) { return radical(torsion_radical(m, v).rep).rep; }

int layer_length(const Rep& m, const SimpleSet& v) {
  Rep x = m;
  int i = 0;
  for (;;) {
    SubRep t = torsion_radical(x, v);
    if (t.rep.is_zero()) return i;
    x = radical(t.rep).rep;
    ++i;
  }
}

int loewy_length(const Rep& m) {
  Rep x = m;
  int i = 0;
  while (!x.is_zero()) {
    x = radical(x).rep;
    ++i;
  }
  return i;
}

bool in_fv(const Rep& m, const SimpleSet& v) {
  for (int w = 0; w < static_cast<int>(m.dims.size()); ++w)
    if (!v.contains(w) && m.dims[w] != 0) return false;
  return true;
}

std::vector<int> composition_factors(const Rep& m) { return m.dims; }

std::vector<RepMorphism> hom_space(const Rep& m, const Rep& n) {
  if (m.alg != n.alg) fail(ErrorKind::Internal, "hom across algebras");
  const Algebra& a = *m.alg;
  const int nv = a.num_vertices();
  std::vector<int> off(nv + 1, 0);
  for (int v = 0; v < nv; ++v) off[v + 1] = off[v] + n.dims[v] * m.dims[v];
  const int unknowns = off[nv];

  int rows = 0;
  for (int arr = 0; arr < a.num_arrows(); ++arr) {
    const Arrow& ar = a.pres.quiver.arrows[arr];
    rows += n.dims[ar.target] * m.dims[ar.source];
  }
  QMat sys(rows, unknowns);
  int row = 0;
  for (int arr = 0; arr < a.num_arrows(); ++arr) {
    const Arrow& ar = a.pres.quiver.arrows[arr];
    const int v = ar.source, w = ar.target;
    // (n.act f_v - f_w m.act)[i][j] = 0
    for (int i = 0; i < n.dims[w]; ++i)
      for (int j = 0; j < m.dims[v]; ++j) {
        for (int k = 0; k < n.dims[v]; ++k)
          sys.at(row, off[v] + k * m.dims[v] + j) += n.act[arr].at(i, k);
        for (int l = 0; l < m.dims[w]; ++l)
          sys.at(row, off[w] + i * m.dims[w] + l) -= m.act[arr].at(l, j);
        ++row;
      }
  }

  QMat basis = sys.nullspace();
  std::vector<RepMorphism> out;
  for (int c = 0; c < basis.cols(); ++c) {
    RepMorphism f{m, n, {}};
    for (int v = 0; v < nv; ++v) {
      QMat b(n.dims[v], m.dims[v]);
      for (int k = 0; k < n.dims[v]; ++k)
        for (int j = 0; j < m.dims[v]; ++j) b.at(k, j) = basis.at(off[v] + k * m.dims[v] + j, c);
      f.map.push_back(std::move(b));
    }
    f.validate();
    out.push_back(std::move(f));
  }
  return out;
}

Iso is_isomorphic(const Rep& m, const Rep& n, long budget) {
  if (m.dims != n.dims) return Iso::No;
  if (m.total_dim() == 0) return Iso::Yes;
  const auto basis = hom_space(m, n);
  if (basis.empty()) return Iso::No;
  const int r = static_cast<int>(basis.size());
  const long grid = m.total_dim();  // per-variable degree bound of the det polynomial

  auto invertible = [&](const std::vector<long>& coeff) {
    for (std::size_t v = 0; v < m.dims.size(); ++v) {
      if (m.dims[v] == 0) continue;
      QMat t(n.dims[v], m.dims[v]);
      for (int i = 0; i < r; ++i)
        if (coeff[i] != 0) t = t + basis[i].map[v] * Rat(coeff[i]);
      if (t.rank() != m.dims[v]) return false;
    }
    return true;
  };

  std::vector<long> c(r, 0);
  long tried = 0;
  while (tried < budget) {
    // odometer over {0..grid}^r, c[0] fastest; wrap-around means the whole
    // grid was searched, which certifies non-isomorphism
    int pos = 0;
    while (pos < r && c[pos] == grid) c[pos++] = 0;
    if (pos == r) return Iso::No;
    ++c[pos];
    ++tried;
    if (invertible(c)) return Iso::Yes;
  }
  return Iso::Undecided;
}

RepMorphism torsion_map(const RepMorphism& f, const SimpleSet& v) {
  SubRep tm = torsion_radical(f.dom, v);
  SubRep tn = torsion_radical(f.cod, v);
  RepMorphism out{tm.rep, tn.rep, {}};
  for (std::size_t w = 0; w < f.map.size(); ++w)
    out.map.push_back(QMat::solve(tn.incl.map[w], f.map[w] * tm.incl.map[w]));
  out.validate();
  return out;
}

SubRep submodule_generated(const Rep& m, const std::vector<std::pair<int, QMat>>& gens) {
  const Algebra& a = *m.alg;
  std::vector<QMat> span(a.num_vertices());
  for (int v = 0; v < a.num_vertices(); ++v) span[v] = QMat(m.dims[v], 0);
  for (const auto& [v, vec] : gens) {
    a.require_vertex(v);
    if (vec.rows() != m.dims[v] || vec.cols() != 1)
      fail(ErrorKind::Internal, "generator vector shape mismatch");
    span[v] = QMat::hstack({span[v], vec}).column_space();
  }
  bool changed = true;
  while (changed) {
    changed = false;
    for (int arr = 0; arr < a.num_arrows(); ++arr) {
      const Arrow& ar = a.pres.quiver.arrows[arr];
      if (span[ar.source].cols() == 0) continue;
      QMat grown = QMat::hstack({span[ar.target], m.act[arr] * span[ar.source]}).column_space();
      if (grown.cols() != span[ar.target].cols()) {
        span[ar.target] = std::move(grown);
        changed = true;
      }
    }
  }
  return sub_from_basis(m, std::move(span));
}

}  // namespace qha
