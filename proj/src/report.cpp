#include "qha/report.hpp"

#include <sstream>

#include "qha/error.hpp"

namespace qha {

namespace {

Json dim_value(const HomDim& d) {
  if (d.is_infinite()) return Json("infinite");
  return Json(d.value());
}

Json vertex_list(const Algebra& a, const SimpleSet& v) {
  Json out = Json::array();
  for (int i : v.vertices()) out.push_back(a.pres.quiver.vertices[i]);
  return out;
}

int min_finite(int x, const HomDim& d) { return d.is_finite() ? std::min(x, d.value()) : x; }

}  // namespace

Json algebra_json(const Algebra& a) {
  Json j;
  j["vertices"] = a.num_vertices();
  j["arrows"] = a.num_arrows();
  j["relations"] = a.pres.relations.size();
  j["dimension"] = a.dim();
  j["loewyLength"] = loewy_length(a);
  return j;
}

Json simples_json(const PathHom& h) {
  const Algebra& a = h.algebra();
  Json rows = Json::array();
  for (int v = 0; v < a.num_vertices(); ++v) {
    Json row;
    row["vertex"] = a.pres.quiver.vertices[v];
    row["pd"] = dim_value(h.pd_simple(v));
    row["id"] = dim_value(h.id_simple(v));
    rows.push_back(std::move(row));
  }
  return rows;
}

Json classes_json(const PathHom& h) {
  const Algebra& a = h.algebra();
  const auto [fin, inf, fin_inj] = h.simple_classes();
  Json j;
  j["finitePd"] = vertex_list(a, fin);
  j["infinitePd"] = vertex_list(a, inf);
  j["finiteId"] = vertex_list(a, fin_inj);
  return j;
}

Json layer_json(const Algebra& a, const SimpleSet& v) {
  Json j;
  j["V"] = vertex_list(a, v);
  Json per = Json::array();
  for (int i = 0; i < a.num_vertices(); ++i) {
    Json row;
    row["vertex"] = a.pres.quiver.vertices[i];
    row["ll"] = layer_length(a, projective_module(a, i), v);
    per.push_back(std::move(row));
  }
  j["perProjective"] = std::move(per);
  j["llAlgebra"] = layer_length_algebra(a, v);
  return j;
}

Json bounds_json(const PathHom& h, const SimpleSet& v) {
  const BoundReport r = bound_report(h, v);
  Json j;
  j["V"] = vertex_list(h.algebra(), v);
  j["a"] = dim_value(r.a);
  j["c"] = dim_value(r.c);
  j["d"] = dim_value(r.d);
  j["n"] = r.n;
  j["dbBound"] = dim_value(r.db_bound);
  j["dsgBound"] = r.dsg_bound ? Json(*r.dsg_bound) : Json("n/a");
  Json cl;
  cl["llMinus1"] = r.classical.ll_minus_1;
  cl["gldim"] = dim_value(r.classical.gldim);
  cl["llMinus2"] = r.classical.dsg;
  j["classical"] = std::move(cl);
  // headline = min of the layer-length bound and the classical bounds
  int db = min_finite(r.classical.ll_minus_1, r.classical.gldim);
  db = min_finite(db, r.db_bound);
  j["headlineDb"] = db;
  int dsg = r.classical.dsg;
  if (r.dsg_bound) dsg = std::min(dsg, *r.dsg_bound);
  j["headlineDsg"] = dsg;
  return j;
}

Json optimize_json(const PathHom& h, int max_simples) {
  const OptimizeDb db = optimize_db(h, max_simples);
  const OptimizeDsg dsg = optimize_dsg(h, max_simples);
  Json j;
  j["bestV"] = vertex_list(h.algebra(), db.best_v);
  j["bestDb"] = dim_value(db.best);
  j["bestDsgV"] = vertex_list(h.algebra(), dsg.best_v);
  j["bestDsg"] = dsg.best;
  return j;
}

Json full_report(const PathHom& h, const std::optional<SimpleSet>& v, bool optimize,
                 int max_simples) {
  Json j;
  j["algebra"] = algebra_json(h.algebra());
  j["simples"] = simples_json(h);
  j["classes"] = classes_json(h);
  SimpleSet shown = v ? *v : SimpleSet::empty(h.algebra().num_vertices());
  Json opt;
  if (optimize) {
    opt = optimize_json(h, max_simples);
    if (!v) {
      // detail the layer/bound sections at the optimizer's witness
      shown = SimpleSet(h.algebra().num_vertices());
      for (const Json& name : opt["bestV"])
        shown.insert(h.algebra().pres.quiver.vertex_index(name.get<std::string>()));
    }
  }
  j["layer"] = layer_json(h.algebra(), shown);
  j["bounds"] = bounds_json(h, shown);
  if (optimize) j["optimize"] = std::move(opt);
  return j;
}

namespace {

std::string cell(const Json& j) {
  if (j.is_string()) return j.get<std::string>();
  return j.dump();
}

void pad(std::ostringstream& o, const std::string& s, std::size_t width) {
  o << s;
  for (std::size_t i = s.size(); i < width; ++i) o << ' ';
}

std::string join_names(const Json& names) {
  std::string out = "{";
  for (std::size_t i = 0; i < names.size(); ++i) {
    if (i) out += ",";
    out += names[i].get<std::string>();
  }
  return out + "}";
}

}  // namespace

std::string render_text(const Json& report) {
  std::ostringstream o;
  if (report.contains("algebra")) {
    const Json& a = report["algebra"];
    o << "algebra: vertices=" << a["vertices"] << " arrows=" << a["arrows"]
      << " relations=" << a["relations"] << " dimension=" << a["dimension"]
      << " loewyLength=" << a["loewyLength"] << "\n";
  }
  if (report.contains("simples")) {
    o << "\nsimple  pd        id\n";
    for (const Json& row : report["simples"]) {
      std::ostringstream line;
      pad(line, cell(row["vertex"]), 8);
      pad(line, cell(row["pd"]), 10);
      line << cell(row["id"]);
      o << line.str() << "\n";
    }
  }
  if (report.contains("classes")) {
    const Json& c = report["classes"];
    o << "\nclasses: finitePd=" << join_names(c["finitePd"])
      << " infinitePd=" << join_names(c["infinitePd"]) << " finiteId=" << join_names(c["finiteId"])
      << "\n";
  }
  if (report.contains("layer")) {
    const Json& l = report["layer"];
    o << "\nlayer lengths at V=" << join_names(l["V"]) << "\nprojective  ll\n";
    for (const Json& row : l["perProjective"]) {
      std::ostringstream line;
      pad(line, cell(row["vertex"]), 12);
      line << cell(row["ll"]);
      o << line.str() << "\n";
    }
    o << "ll(algebra) = " << l["llAlgebra"] << "\n";
  }
  if (report.contains("bounds")) {
    const Json& b = report["bounds"];
    o << "\nbounds at V=" << join_names(b["V"]) << ": a=" << cell(b["a"]) << " c=" << cell(b["c"])
      << " d=" << cell(b["d"]) << " n=" << cell(b["n"]) << "\n";
    o << "  db <= " << cell(b["dbBound"]) << "   dsg <= " << cell(b["dsgBound"]) << "\n";
    const Json& cl = b["classical"];
    o << "  classical: LL-1=" << cell(cl["llMinus1"]) << " gldim=" << cell(cl["gldim"])
      << " max{0,LL-2}=" << cell(cl["llMinus2"]) << "\n";
    o << "  headline: db <= " << cell(b["headlineDb"]) << ", dsg <= " << cell(b["headlineDsg"])
      << "\n";
  }
  if (report.contains("optimize")) {
    const Json& p = report["optimize"];
    o << "\noptimize: bestV=" << join_names(p["bestV"]) << " bestDb=" << cell(p["bestDb"])
      << " bestDsgV=" << join_names(p["bestDsgV"]) << " bestDsg=" << cell(p["bestDsg"]) << "\n";
  }
  return o.str();
}

}  // namespace qha
