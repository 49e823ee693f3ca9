// trinom: pp-divisors of trinomial hypersurfaces from the command line.
//
//   trinom ppdiv "T01^3+T11^5+T21*T22" --basis F.json --section S.json
//   trinom verify input.json --bound 12
//
// Exit status: 0 success, 1 invalid input, 2 verification mismatch.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "trinom/downgrade.hpp"
#include "trinom/error.hpp"
#include "trinom/expression.hpp"
#include "trinom/oracle.hpp"
#include "trinom/ppdivisor.hpp"
#include "trinom/render.hpp"
#include "trinom/report.hpp"

namespace {

using namespace trinom;

struct Options {
  std::string input;
  std::string basis_file;
  std::string section_file;
  std::string coefficient_file;
  std::string format = "json";
  std::string u;
  std::string output;
  long bound = 12;
};

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::ParseError, "cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Json parse_json(const std::string& text, const std::string& what) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(ErrorKind::ParseError, what + ": " + e.what());
  }
}

// A file holding a JSON object, inline JSON, or an expression.
TrinomialInput read_input(const std::string& arg) {
  std::error_code ec;
  if (std::filesystem::is_regular_file(arg, ec)) return input_from_json(parse_json(slurp(arg), arg));
  if (!arg.empty() && arg.front() == '{') return input_from_json(parse_json(arg, "input"));
  return parse_trinomial_expression(arg);
}

std::optional<IntMatrix> read_matrix(const std::string& path, std::size_t rows, std::size_t cols, const std::string& name) {
  if (path.empty()) return std::nullopt;
  return oriented(matrix_from_json(parse_json(slurp(path), path)), rows, cols, name);
}

IntVector parse_vector(std::string s) {
  for (char& c : s)
    if (c == '[' || c == ']' || c == ',') c = ' ';
  std::istringstream in(s);
  IntVector v;
  std::string tok;
  while (in >> tok) {
    if (tok.find_first_not_of("-0123456789") != std::string::npos || tok == "-")
      throw Error(ErrorKind::ParseError, "bad integer \"" + tok + "\" in -u");
    v.emplace_back(tok.c_str());
  }
  return v;
}

struct Pipeline {
  TrinomialInput input;
  TorusData torus;
  PPDivisor divisor;
};

Pipeline run(const Options& o) {
  const TrinomialInput t = read_input(o.input);
  const std::size_t n = t.n();
  const auto F = read_matrix(o.basis_file, n, n - 2, "F");
  const auto S = read_matrix(o.section_file, n - 2, n, "S");
  Pipeline p{t, build_torus_data(t, F, S), compute_ppdivisor(t, F, S)};
  // {"1": [["-1/3","0"]], ...} replaces the vertex sets of the named coefficients
  if (!o.coefficient_file.empty()) {
    const Json j = parse_json(slurp(o.coefficient_file), o.coefficient_file);
    if (!j.is_object()) throw Error(ErrorKind::ParseError, "coefficient file must be an object keyed by 0, 1, 2");
    for (const auto& [key, value] : j.items()) {
      if (key != "0" && key != "1" && key != "2") throw Error(ErrorKind::ParseError, "coefficient index " + key);
      const auto vertices = vertices_from_json(value);
      for (const QVector& v : vertices)
        if (v.size() != p.divisor.lattice_rank) throw Error(ErrorKind::DimensionMismatch, "vertex of wrong dimension");
      p.divisor = with_coefficient(p.divisor, static_cast<std::size_t>(key[0] - '0'), vertices);
    }
  }
  return p;
}

void emit(const Options& o, const Json& j, const std::string& text) {
  if (o.format == "text") std::cout << text;
  else std::cout << j.dump(2) << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"pp-divisors of trinomial hypersurfaces T0^l0 + T1^l1 + T2^l2"};
  app.require_subcommand(1);
  Options o;

  auto add_common = [&](CLI::App* sub, bool overrides) {
    sub->add_option("input", o.input, "expression such as \"T01^3+T11^5+T21*T22\", or a JSON file {\"l0\":[..],...}")
        ->required();
    sub->add_option("--format", o.format, "json or text")->check(CLI::IsMember({"json", "text"}));
    if (overrides) {
      sub->add_option("--basis", o.basis_file, "JSON matrix F whose columns span ker L");
      sub->add_option("--section", o.section_file, "JSON matrix S with S F = I");
      sub->add_option("--coefficient", o.coefficient_file, "JSON object replacing coefficient vertex sets");
    }
  };
  auto* analyze = app.add_subcommand("analyze", "gcd invariants, classification and base curve");
  add_common(analyze, false);
  auto* ppdiv = app.add_subcommand("ppdiv", "the pp-divisor");
  add_common(ppdiv, true);
  auto* eval = app.add_subcommand("eval", "evaluate the divisor at a dual-cone point");
  add_common(eval, true);
  eval->add_option("-u", o.u, "lattice point, e.g. 5,0")->required();
  auto* verify = app.add_subcommand("verify", "compare graded dimensions with section dimensions");
  add_common(verify, true);
  verify->add_option("--bound", o.bound, "max |m_i| of the checked degrees")->check(CLI::NonNegativeNumber);
  auto* render = app.add_subcommand("render", "SVG figure of the coefficients (rank 2 only)");
  add_common(render, true);
  render->add_option("-o", o.output, "output file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    if (analyze->parsed()) {
      const TrinomialInput t = read_input(o.input);
      emit(o, analysis_json(t), analysis_text(t));
    } else if (ppdiv->parsed()) {
      const Pipeline p = run(o);
      emit(o, ppdivisor_json(p.input, p.torus, p.divisor), ppdivisor_text(p.input, p.torus, p.divisor));
    } else if (eval->parsed()) {
      const Pipeline p = run(o);
      const IntVector u = parse_vector(o.u);
      const Evaluation e = evaluate(p.divisor, u);
      emit(o, evaluation_json(u, e), evaluation_text(u, e));
    } else if (verify->parsed()) {
      const Pipeline p = run(o);
      const VerifyReport r = verify_divisor(p.input, p.torus, p.divisor, o.bound);
      emit(o, verify_json(r, o.bound), verify_text(r, o.bound));
      return r.passed() ? 0 : 2;
    } else if (render->parsed()) {
      const Pipeline p = run(o);
      const std::string svg = render_svg(p.divisor);
      std::ofstream out(o.output, std::ios::binary);
      if (!out) throw Error(ErrorKind::ParseError, "cannot write " + o.output);
      out << svg;
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
