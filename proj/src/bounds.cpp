#include "qha/bounds.hpp"

#include <cstdint>

#include "qha/error.hpp"

namespace qha {

HomDim pd_set(const PathHom& h, const SimpleSet& v) {
  HomDim out = HomDim::finite(-1);  // pd ∅ = -1
  for (int i : v.vertices()) out = max(out, h.pd_simple(i));
  return out;
}

HomDim id_set(const PathHom& h, const SimpleSet& v) {
  HomDim out = HomDim::finite(-1);
  for (int i : v.vertices()) out = max(out, h.id_simple(i));
  return out;
}

HomDim bound_db(const PathHom& h, const SimpleSet& v) {
  const HomDim d = min(pd_set(h, v), id_set(h, v));
  if (d.is_infinite()) return HomDim::infinite();
  const int n = layer_length_algebra(h.algebra(), v);
  const int value = (d.value() + 2) * (n + 1) - 2;
  if (value < 0) fail(ErrorKind::Internal, "negative derived-category bound");
  return HomDim::finite(value);
}

int bound_dsg(const PathHom& h, const SimpleSet& v) {
  for (int i : v.vertices())
    if (h.pd_simple(i).is_infinite())
      fail(ErrorKind::VNotInFinitePdClass,
           "simple at vertex '" + h.algebra().pres.quiver.vertices[i] +
               "' has infinite projective dimension");
  const int n = layer_length_algebra(h.algebra(), v);
  return std::max(0, n - 2);
}

int corollary_dsg(const PathHom& h) {
  return bound_dsg(h, std::get<0>(h.simple_classes()));
}

ClassicalBounds classical_bounds(const PathHom& h) {
  const int ll = loewy_length(h.algebra());
  return {ll - 1, h.gldim(), std::max(0, ll - 2)};
}

BoundReport bound_report(const PathHom& h, const SimpleSet& v) {
  BoundReport r;
  r.v = v;
  r.a = pd_set(h, v);
  r.c = id_set(h, v);
  r.d = min(r.a, r.c);
  r.n = layer_length_algebra(h.algebra(), v);
  r.db_bound = bound_db(h, v);
  bool fin = true;
  for (int i : v.vertices()) fin = fin && h.pd_simple(i).is_finite();
  if (fin) r.dsg_bound = bound_dsg(h, v);
  r.classical = classical_bounds(h);
  return r;
}

namespace {

SimpleSet set_of_mask(int num_vertices, const std::vector<int>& universe, std::uint64_t mask) {
  SimpleSet s(num_vertices);
  for (std::size_t i = 0; i < universe.size(); ++i)
    if (mask >> i & 1) s.insert(universe[i]);
  return s;
}

}  // namespace

OptimizeDb optimize_db(const PathHom& h, int max_simples) {
  const int n = h.algebra().num_vertices();
  if (n > max_simples)
    fail(ErrorKind::TooManySimples,
         std::to_string(n) + " simples; exhaustive search is capped at " +
             std::to_string(max_simples));
  std::vector<int> universe(n);
  for (int i = 0; i < n; ++i) universe[i] = i;

  OptimizeDb best{SimpleSet::empty(n), HomDim::infinite()};
  bool have = false;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    SimpleSet v = set_of_mask(n, universe, mask);
    const HomDim val = bound_db(h, v);
    if (!have || val < best.best || (val == best.best && lex_less(v, best.best_v))) {
      best = {v, val};
      have = true;
    }
  }
  return best;
}

OptimizeDsg optimize_dsg(const PathHom& h, int max_simples) {
  const int n = h.algebra().num_vertices();
  if (n > max_simples)
    fail(ErrorKind::TooManySimples,
         std::to_string(n) + " simples; exhaustive search is capped at " +
             std::to_string(max_simples));
  const std::vector<int> universe = std::get<0>(h.simple_classes()).vertices();

  OptimizeDsg best{SimpleSet::empty(n), 0};
  bool have = false;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << universe.size()); ++mask) {
    SimpleSet v = set_of_mask(n, universe, mask);
    const int val = bound_dsg(h, v);
    if (!have || val < best.best || (val == best.best && lex_less(v, best.best_v))) {
      best = {v, val};
      have = true;
    }
  }
  return best;
}

}  // namespace qha
