#include "qha/presentation.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "qha/error.hpp"

namespace qha {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::SyntaxError: return "SyntaxError";
    case ErrorKind::UndefinedSymbol: return "UndefinedSymbol";
    case ErrorKind::DuplicateName: return "DuplicateName";
    case ErrorKind::NonComposableRelation: return "NonComposableRelation";
    case ErrorKind::NonAdmissibleRelation: return "NonAdmissibleRelation";
    case ErrorKind::NonMonomialRelation: return "NonMonomialRelation";
    case ErrorKind::InfiniteDimensional: return "InfiniteDimensional";
    case ErrorKind::BasisLimitExceeded: return "BasisLimitExceeded";
    case ErrorKind::NotComposable: return "NotComposable";
    case ErrorKind::UnknownVertex: return "UnknownVertex";
    case ErrorKind::VNotInFinitePdClass: return "VNotInFinitePdClass";
    case ErrorKind::TooManySimples: return "TooManySimples";
    case ErrorKind::MBelowMinimum: return "MBelowMinimum";
    case ErrorKind::LiftFailure: return "LiftFailure";
    case ErrorKind::Internal: return "Internal";
  }
  return "Error";
}

int Quiver::vertex_index(const std::string& name) const {
  for (int i = 0; i < num_vertices(); ++i)
    if (vertices[i] == name) return i;
  return -1;
}

int Quiver::arrow_index(const std::string& name) const {
  for (int i = 0; i < num_arrows(); ++i)
    if (arrows[i].name == name) return i;
  return -1;
}

std::string relation_word(const Quiver& q, const std::vector<int>& relation) {
  std::string out;
  for (std::size_t i = 0; i < relation.size(); ++i) {
    if (i) out += ' ';
    out += q.arrows[relation[i]].name;
  }
  return out;
}

namespace {

std::vector<std::string> tokenize(const std::string& line) {
  std::vector<std::string> out;
  std::istringstream ss(line);
  std::string tok;
  while (ss >> tok) out.push_back(tok);
  return out;
}

bool contains_subword(const std::vector<int>& word, const std::vector<int>& sub) {
  if (sub.size() > word.size()) return false;
  for (std::size_t off = 0; off + sub.size() <= word.size(); ++off)
    if (std::equal(sub.begin(), sub.end(), word.begin() + off)) return true;
  return false;
}

}  // namespace

Presentation parse(const std::string& text) {
  Presentation p;
  std::map<std::string, int> vmap, amap;
  std::istringstream in(text);
  std::string raw;
  int lineno = 0;
  while (std::getline(in, raw)) {
    ++lineno;
    auto hash = raw.find('#');
    std::string line = hash == std::string::npos ? raw : raw.substr(0, hash);
    auto toks = tokenize(line);
    if (toks.empty()) continue;
    const std::string where = "line " + std::to_string(lineno);
    const std::string& kw = toks[0];
    if (kw == "vertices") {
      if (toks.size() < 2) fail(ErrorKind::SyntaxError, where + ": expected at least one vertex id");
      for (std::size_t i = 1; i < toks.size(); ++i) {
        if (vmap.count(toks[i]))
          fail(ErrorKind::DuplicateName, where + ": vertex '" + toks[i] + "' already declared");
        vmap.emplace(toks[i], p.quiver.num_vertices());
        p.quiver.vertices.push_back(toks[i]);
      }
    } else if (kw == "arrow") {
      if (toks.size() != 4)
        fail(ErrorKind::SyntaxError, where + ": expected 'arrow <name> <source> <target>'");
      if (amap.count(toks[1]))
        fail(ErrorKind::DuplicateName, where + ": arrow '" + toks[1] + "' already declared");
      auto src = vmap.find(toks[2]);
      if (src == vmap.end())
        fail(ErrorKind::UndefinedSymbol, where + ": vertex '" + toks[2] + "' not declared");
      auto tgt = vmap.find(toks[3]);
      if (tgt == vmap.end())
        fail(ErrorKind::UndefinedSymbol, where + ": vertex '" + toks[3] + "' not declared");
      amap.emplace(toks[1], p.quiver.num_arrows());
      p.quiver.arrows.push_back({toks[1], src->second, tgt->second});
    } else if (kw == "relation") {
      if (toks.size() < 2) fail(ErrorKind::SyntaxError, where + ": relation needs arrow names");
      std::vector<int> rel;
      for (std::size_t i = 1; i < toks.size(); ++i) {
        const std::string& t = toks[i];
        if (t == "+" || t == "-" || t == "*")
          fail(ErrorKind::NonMonomialRelation,
               where + ": only single-path (monomial) relations are supported");
        auto it = amap.find(t);
        if (it == amap.end())
          fail(ErrorKind::UndefinedSymbol, where + ": arrow '" + t + "' not declared");
        rel.push_back(it->second);
      }
      p.relations.push_back(std::move(rel));
    } else {
      fail(ErrorKind::SyntaxError, where + ": unknown declaration '" + kw + "'");
    }
  }
  if (p.quiver.vertices.empty()) fail(ErrorKind::SyntaxError, "document declares no vertices");
  return p;
}

Presentation validate(const Presentation& p, std::vector<std::string>* warnings) {
  const Quiver& q = p.quiver;
  for (const auto& rel : p.relations) {
    for (int a : rel)
      if (a < 0 || a >= q.num_arrows()) fail(ErrorKind::Internal, "relation arrow index out of range");
    if (rel.size() < 2)
      fail(ErrorKind::NonAdmissibleRelation,
           "relation '" + relation_word(q, rel) + "' has length " + std::to_string(rel.size()) +
               "; admissible ideals need length >= 2");
    for (std::size_t k = 0; k + 1 < rel.size(); ++k)
      if (q.arrows[rel[k]].target != q.arrows[rel[k + 1]].source)
        fail(ErrorKind::NonComposableRelation,
             "relation '" + relation_word(q, rel) + "': '" + q.arrows[rel[k]].name + "' and '" +
                 q.arrows[rel[k + 1]].name + "' do not compose");
  }

  // canonical order, then drop every relation containing a kept one as a subword
  std::vector<std::vector<int>> sorted = p.relations;
  std::sort(sorted.begin(), sorted.end(), [](const auto& x, const auto& y) {
    if (x.size() != y.size()) return x.size() < y.size();
    return x < y;
  });
  std::vector<std::vector<int>> kept;
  for (const auto& rel : sorted) {
    bool redundant = false;
    for (const auto& k : kept)
      if (contains_subword(rel, k)) {
        redundant = true;
        break;
      }
    if (redundant) {
      if (warnings)
        warnings->push_back("RedundantRelationRemoved: " + relation_word(q, rel));
      continue;
    }
    kept.push_back(rel);
  }
  return Presentation{q, std::move(kept)};
}

std::string print(const Presentation& p) {
  std::ostringstream o;
  o << "vertices";
  for (const auto& v : p.quiver.vertices) o << ' ' << v;
  o << '\n';
  for (const auto& a : p.quiver.arrows)
    o << "arrow " << a.name << ' ' << p.quiver.vertices[a.source] << ' '
      << p.quiver.vertices[a.target] << '\n';
  for (const auto& rel : p.relations) o << "relation " << relation_word(p.quiver, rel) << '\n';
  return o.str();
}

}  // namespace qha
