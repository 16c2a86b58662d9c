#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "qha/check.hpp"
#include "qha/error.hpp"
#include "qha/families.hpp"
#include "qha/report.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInput = 1;
constexpr int kExitInfiniteDimensional = 2;
constexpr int kExitPropertyViolation = 3;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) qha::fail(qha::ErrorKind::SyntaxError, "cannot read file '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::size_t basis_limit_from_env() {
  if (const char* s = std::getenv("QHA_BASIS_LIMIT")) {
    char* end = nullptr;
    const unsigned long long v = std::strtoull(s, &end, 10);
    if (end && *end == '\0' && v > 0) return static_cast<std::size_t>(v);
    qha::fail(qha::ErrorKind::SyntaxError, "QHA_BASIS_LIMIT is not a positive integer");
  }
  return 1000000;
}

qha::Algebra load_algebra(const std::string& path) {
  std::vector<std::string> warnings;
  qha::Presentation p = qha::validate(qha::parse(read_file(path)), &warnings);
  for (const auto& w : warnings) std::cerr << "warning: " << w << "\n";
  return qha::build(p, basis_limit_from_env());
}

qha::SimpleSet parse_vertex_list(const qha::Algebra& a, const std::string& csv) {
  qha::SimpleSet v(a.num_vertices());
  std::stringstream ss(csv);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const std::size_t b = item.find_first_not_of(" \t");
    if (b == std::string::npos) continue;
    const std::size_t e = item.find_last_not_of(" \t");
    const std::string name = item.substr(b, e - b + 1);
    const int idx = a.pres.quiver.vertex_index(name);
    if (idx < 0) qha::fail(qha::ErrorKind::UnknownVertex, "vertex '" + name + "' not declared");
    v.insert(idx);
  }
  return v;
}

void emit(const qha::Json& report, bool json) {
  if (json)
    std::cout << report.dump(2) << "\n";
  else
    std::cout << qha::render_text(report);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"homological invariants and derived-category dimension bounds for monomial bound quiver algebras"};
  app.require_subcommand(1);

  std::string file, vlist, family;
  bool json = false, optimize = false, has_v = false, corrupt = false;
  int m = 0, cases = 50;
  std::uint64_t seed = 1;
  int max_simples = 20;

  auto* analyze = app.add_subcommand("analyze", "dimension, Loewy length and basis size");
  analyze->add_option("file", file)->required();
  analyze->add_flag("--json", json);

  auto* simples = app.add_subcommand("simples", "pd/id table of the simple modules");
  simples->add_option("file", file)->required();
  simples->add_flag("--json", json);

  auto* layerlen = app.add_subcommand("layerlen", "layer lengths of the projectives at V");
  layerlen->add_option("file", file)->required();
  layerlen->add_option("--V", vlist, "comma-separated vertex ids (empty for V = {})");
  layerlen->add_flag("--json", json);

  auto* bounds = app.add_subcommand("bounds", "dimension bounds at V, or optimized over all V");
  bounds->add_option("file", file)->required();
  auto* vopt = bounds->add_option("--V", vlist, "comma-separated vertex ids (empty for V = {})");
  bounds->add_flag("--optimize", optimize, "exhaustive search over all subsets of simples");
  bounds->add_option("--max-simples", max_simples, "cap for the exhaustive search");
  bounds->add_flag("--json", json);

  auto* gen = app.add_subcommand("gen", "emit a parameterized example presentation");
  gen->add_option("family", family, "example41 or example42")->required();
  gen->add_option("--m", m)->required();

  auto* check = app.add_subcommand("check", "run the cross-engine invariant suite");
  check->add_option("file", file)->required();
  check->add_option("--seed", seed);
  check->add_option("--cases", cases);
  check->add_flag("--corrupt-engine", corrupt)->group("");  // test-only hook

  try {
    app.parse(argc, argv);

    if (analyze->parsed()) {
      qha::Algebra a = load_algebra(file);
      qha::Json j;
      j["algebra"] = qha::algebra_json(a);
      emit(j, json);
    } else if (simples->parsed()) {
      qha::Algebra a = load_algebra(file);
      qha::PathHom h(a);
      qha::Json j;
      j["algebra"] = qha::algebra_json(a);
      j["simples"] = qha::simples_json(h);
      j["classes"] = qha::classes_json(h);
      emit(j, json);
    } else if (layerlen->parsed()) {
      qha::Algebra a = load_algebra(file);
      qha::Json j;
      j["algebra"] = qha::algebra_json(a);
      j["layer"] = qha::layer_json(a, parse_vertex_list(a, vlist));
      emit(j, json);
    } else if (bounds->parsed()) {
      has_v = vopt->count() > 0;
      if (has_v == optimize)
        qha::fail(qha::ErrorKind::SyntaxError, "bounds needs exactly one of --V or --optimize");
      qha::Algebra a = load_algebra(file);
      qha::PathHom h(a);
      std::optional<qha::SimpleSet> v;
      if (has_v) v = parse_vertex_list(a, vlist);
      emit(qha::full_report(h, v, optimize, max_simples), json);
    } else if (gen->parsed()) {
      if (family == "example41")
        std::cout << qha::example41_text(m);
      else if (family == "example42")
        std::cout << qha::example42_text(m);
      else
        qha::fail(qha::ErrorKind::SyntaxError, "unknown family '" + family + "'");
    } else if (check->parsed()) {
      qha::Algebra a = load_algebra(file);
      const qha::CheckReport report = qha::run_checks(a, {seed, cases, corrupt});
      if (report.ok()) {
        std::cout << "ok: " << report.checked << " checks passed (seed " << seed << ", " << cases
                  << " cases)\n";
      } else {
        for (const auto& issue : report.issues)
          std::cout << "violation [" << issue.property << "] " << issue.detail << "\n";
        std::cout << report.issues.size() << " of " << report.checked
                  << " checks failed (reproduce with --seed " << seed << ")\n";
        return kExitPropertyViolation;
      }
    }
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitInput;
  } catch (const qha::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return e.kind() == qha::ErrorKind::InfiniteDimensional ? kExitInfiniteDimensional : kExitInput;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  }
}
