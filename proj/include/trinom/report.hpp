#pragma once

// JSON and plain-text rendering of the pipeline results, plus the JSON input
// readers used by the command-line tool. Rationals are written as "p/q"
// strings in lowest terms; integers that fit 64 bits are JSON numbers.

#include <cstdint>
#include <limits>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "trinom/convexq.hpp"
#include "trinom/downgrade.hpp"
#include "trinom/error.hpp"
#include "trinom/exactla.hpp"
#include "trinom/oracle.hpp"
#include "trinom/ppdivisor.hpp"
#include "trinom/trinomial.hpp"

namespace trinom {

using Json = nlohmann::ordered_json;

inline Json to_json(const Int& x) {
  if (x >= std::numeric_limits<std::int64_t>::min() && x <= std::numeric_limits<std::int64_t>::max())
    return Json(x.convert_to<std::int64_t>());
  return Json(x.str());
}

inline Json to_json(const Rational& q) { return Json(to_string(q)); }

inline Json to_json(const IntVector& v) {
  Json a = Json::array();
  for (const Int& x : v) a.push_back(to_json(x));
  return a;
}

inline Json to_json(const QVector& v) {
  Json a = Json::array();
  for (const Rational& x : v) a.push_back(to_json(x));
  return a;
}

inline Json to_json(const IntMatrix& m) {
  Json a = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) a.push_back(to_json(m.row(i)));
  return a;
}

inline Json input_json(const TrinomialInput& t) {
  Json j;
  for (std::size_t i = 0; i < 3; ++i) j["l" + std::to_string(i)] = t.block(i);
  return j;
}

inline Json invariants_json(const GcdInvariants& g) {
  return Json{{"d0", g.d0}, {"d1", g.d1}, {"d2", g.d2}, {"d", g.d},
              {"d01", g.d01}, {"d02", g.d02}, {"d12", g.d12}, {"dtilde", g.dtilde}};
}

inline Json classification_json(const Classification& c) {
  Json j{{"type", std::string(to_string(c.tag))}, {"genus", c.genus}, {"pham_brieskorn", c.pham_brieskorn}};
  if (c.tag == RationalType::TypeI) {
    j["s"] = c.s;
    j["special_block"] = c.special_block;
  }
  return j;
}

inline Json curve_json(const BaseCurve& c) {
  return Json{{"weights", c.weights}, {"exponents", c.equation_exponents}, {"genus", c.genus}};
}

inline Json point_json(const WeightedPoint& p) {
  Json entries = Json::array();
  for (std::size_t k = 0; k < 3; ++k) {
    if (k == p.zero_index) entries.push_back(nullptr);
    else entries.push_back(Json{{"root_order", to_json(p.entries[k].order)}, {"exponent", to_json(p.entries[k].exponent)}});
  }
  return Json{{"zero_index", p.zero_index}, {"entries", entries}};
}

inline Json support_json(const SupportDivisor& s) {
  Json pts = Json::array();
  for (const WeightedPoint& p : s.points) pts.push_back(point_json(p));
  Json j{{"vanishing_coordinate", s.vanishing_coordinate}, {"cardinality", s.cardinality}, {"points", pts}};
  if (s.p1_model) {
    Json model = Json::array();
    for (const P1Point& p : *s.p1_model) model.push_back(to_string(p));
    j["p1_model"] = model;
  } else {
    j["p1_model"] = nullptr;
  }
  return j;
}

inline Json divisor_json(const PPDivisor& dv) {
  Json rays = Json::array();
  for (const IntVector& r : dv.tail.rays) rays.push_back(to_json(r));
  Json terms = Json::array();
  for (const PPTerm& term : dv.terms) {
    Json verts = Json::array();
    for (const QVector& v : term.polyhedron.vertices) verts.push_back(to_json(v));
    terms.push_back(Json{{"vertices", verts}, {"equals_tail", term.equals_tail}, {"support", support_json(term.support)}});
  }
  return Json{{"lattice_rank", dv.lattice_rank}, {"tail_rays", rays}, {"terms", terms}};
}

inline Json torus_json(const TorusData& td) {
  return Json{{"L", to_json(td.L)}, {"F", to_json(td.F)}, {"S", to_json(td.S)}};
}

inline Json properness_json(const ProperReport& r) {
  Json rays = Json::array();
  for (const auto& [u, deg] : r.ray_degrees) rays.push_back(Json{{"u", to_json(u)}, {"degree", to_json(deg)}});
  return Json{{"ray_degrees", rays},
              {"relint_sample", to_json(r.relint_sample)},
              {"relint_degree", to_json(r.relint_degree)},
              {"proper", r.proper()}};
}

inline Json analysis_json(const TrinomialInput& t) {
  const GcdInvariants g = gcd_invariants(t);
  const Classification c = classify(g, t);
  return Json{{"input", input_json(t)},
              {"invariants", invariants_json(g)},
              {"classification", classification_json(c)},
              {"curve", curve_json(base_curve(g, c))}};
}

inline Json ppdivisor_json(const TrinomialInput& t, const TorusData& td, const PPDivisor& dv) {
  Json j = analysis_json(t);
  j["lattices"] = torus_json(td);
  j["divisor"] = divisor_json(dv);
  j["properness"] = properness_json(properness_report(dv));
  return j;
}

inline Json evaluation_json(const IntVector& u, const Evaluation& e) {
  Json coeffs = Json::array();
  for (const Rational& c : e.coefficients) coeffs.push_back(to_json(c));
  return Json{{"u", to_json(u)},
              {"coefficients", coeffs},
              {"degree", to_json(e.degree)},
              {"floor_degree", to_json(e.floor_degree)}};
}

inline Json verify_json(const VerifyReport& r, long bound) {
  Json mism = Json::array();
  for (const Mismatch& m : r.mismatches)
    mism.push_back(Json{{"degree", to_json(m.degree)}, {"hilbert", to_json(m.hilbert)}, {"sections", to_json(m.sections)}});
  Json skipped = Json::array();
  for (const IntVector& m : r.skipped) skipped.push_back(to_json(m));
  return Json{{"bound", bound}, {"checked", r.checked}, {"mismatches", mism}, {"skipped", skipped}, {"passed", r.passed()}};
}

// ---- text output

inline std::string point_text(const QVector& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + to_string(v[i]);
  return s + ")";
}

inline std::string point_text(const IntVector& v) { return point_text(to_qvector(v)); }

inline std::string weighted_point_text(const WeightedPoint& p) {
  std::string s = "[";
  for (std::size_t k = 0; k < 3; ++k) {
    if (k) s += ":";
    s += k == p.zero_index ? "0" : to_string(P1Point::unit(p.entries[k]));
  }
  return s + "]";
}

inline std::string support_text(const SupportDivisor& s) {
  std::string out = "{";
  if (s.p1_model) {
    for (std::size_t i = 0; i < s.p1_model->size(); ++i) out += (i ? ", " : "") + to_string((*s.p1_model)[i]);
  } else {
    for (std::size_t i = 0; i < s.points.size(); ++i) out += (i ? ", " : "") + weighted_point_text(s.points[i]);
  }
  return out + "}";
}

inline std::string cone_text(const QCone& c) {
  std::string s = "cone(";
  for (std::size_t i = 0; i < c.rays.size(); ++i) s += (i ? "," : "") + point_text(c.rays[i]);
  return s + ")";
}

/// "conv(...)" for several vertices, the bare point otherwise.
inline std::string coefficient_text(const QPolyhedron& p) {
  if (p.vertices.size() == 1) return point_text(p.vertices.front());
  std::string s = "conv(";
  for (std::size_t i = 0; i < p.vertices.size(); ++i) s += (i ? "," : "") + point_text(p.vertices[i]);
  return s + ")";
}

inline std::string analysis_text(const TrinomialInput& t) {
  const GcdInvariants g = gcd_invariants(t);
  const Classification c = classify(g, t);
  const BaseCurve curve = base_curve(g, c);
  std::ostringstream os;
  os << "d = (" << g.d0 << "," << g.d1 << "," << g.d2 << "), gcd d = " << g.d << ", d01 = " << g.d01
     << ", d02 = " << g.d02 << ", d12 = " << g.d12 << ", dtilde = " << g.dtilde << "\n";
  os << "type " << to_string(c.tag);
  if (c.tag == RationalType::TypeI) os << "(s=" << c.s << ", block " << c.special_block << ")";
  if (c.pham_brieskorn) os << ", Pham-Brieskorn";
  os << "\n";
  os << "Y = V(w0^" << curve.equation_exponents[0] << " + w1^" << curve.equation_exponents[1] << " + w2^"
     << curve.equation_exponents[2] << ") in P(" << curve.weights[0] << "," << curve.weights[1] << ","
     << curve.weights[2] << "), genus " << curve.genus << "\n";
  return os.str();
}

inline std::string ppdivisor_text(const TrinomialInput& t, const TorusData& td, const PPDivisor& dv) {
  std::ostringstream os;
  os << analysis_text(t);
  os << "F = " << td.F << "\nS = " << td.S << "\n";
  os << "sigma = " << cone_text(dv.tail) << "\n";
  os << "D =";
  for (std::size_t i = 0; i < 3; ++i) {
    const PPTerm& term = dv.terms[i];
    os << (i ? " +" : "") << " (" << (term.equals_tail ? "sigma" : coefficient_text(term.polyhedron) + " + sigma")
       << ")*D" << i;
  }
  os << "\n";
  for (std::size_t i = 0; i < 3; ++i) {
    const SupportDivisor& s = dv.terms[i].support;
    os << "D" << i << " = V(w" << s.vanishing_coordinate << "), " << s.cardinality << " point"
       << (s.cardinality == 1 ? "" : "s") << ": " << support_text(s) << "\n";
  }
  const ProperReport r = properness_report(dv);
  os << "deg D(u) on dual rays:";
  for (std::size_t k = 0; k < r.ray_degrees.size(); ++k)
    os << (k ? ", " : " ") << point_text(r.ray_degrees[k].first) << " -> " << to_string(r.ray_degrees[k].second);
  os << "; at " << point_text(r.relint_sample) << " -> " << to_string(r.relint_degree) << "\n";
  return os.str();
}

inline std::string evaluation_text(const IntVector& u, const Evaluation& e) {
  std::ostringstream os;
  os << "D" << point_text(u) << " =";
  for (std::size_t i = 0; i < 3; ++i) {
    const Rational& c = e.coefficients[i];
    if (i == 0) os << " " << to_string(c);
    else os << (c < 0 ? " - " : " + ") << to_string(c < 0 ? Rational(-c) : c);
    os << "*D" << i;
  }
  os << "\ndegree " << to_string(e.degree) << ", floor degree " << e.floor_degree << "\n";
  return os.str();
}

inline std::string verify_text(const VerifyReport& r, long bound) {
  std::ostringstream os;
  os << "bound " << bound << ": " << r.checked << " degrees checked, " << r.mismatches.size() << " mismatches, "
     << r.skipped.size() << " skipped\n";
  for (const Mismatch& m : r.mismatches)
    os << "  mismatch at " << point_text(m.degree) << ": hilbert " << m.hilbert << ", sections " << m.sections << "\n";
  if (!r.skipped.empty()) {
    os << "  skipped:";
    for (const IntVector& m : r.skipped) os << " " << point_text(m);
    os << "\n";
  }
  return os.str();
}

// ---- input

inline TrinomialInput input_from_json(const Json& j) {
  if (!j.is_object()) throw Error(ErrorKind::ParseError, "trinomial must be a JSON object with l0, l1, l2");
  std::array<ExponentBlock, 3> blocks;
  for (std::size_t i = 0; i < 3; ++i) {
    const std::string key = "l" + std::to_string(i);
    if (!j.contains(key) || !j[key].is_array()) throw Error(ErrorKind::ParseError, "field " + key + " must be an array");
    for (const Json& e : j[key]) {
      if (!e.is_number_integer()) throw Error(ErrorKind::ParseError, "field " + key + " must hold integers");
      blocks[i].push_back(e.get<Exponent>());
    }
  }
  return validate(blocks);
}

inline IntMatrix matrix_from_json(const Json& j) {
  if (!j.is_array()) throw Error(ErrorKind::ParseError, "matrix must be an array of rows");
  std::vector<std::vector<Int>> rows;
  for (const Json& r : j) {
    if (!r.is_array()) throw Error(ErrorKind::ParseError, "matrix row must be an array");
    std::vector<Int> row;
    for (const Json& e : r) {
      if (e.is_number_integer()) row.emplace_back(e.get<std::int64_t>());
      else if (e.is_string()) row.emplace_back(e.get<std::string>().c_str());
      else throw Error(ErrorKind::ParseError, "matrix entries must be integers");
    }
    rows.push_back(std::move(row));
  }
  return IntMatrix::from_rows(rows);
}

/// Accepts the matrix or its transpose, whichever has the requested shape.
inline IntMatrix oriented(const IntMatrix& m, std::size_t rows, std::size_t cols, const std::string& name) {
  if (m.rows() == rows && m.cols() == cols) return m;
  if (m.rows() == cols && m.cols() == rows) return m.transposed();
  throw Error(ErrorKind::BadOverride, name + " must be " + std::to_string(rows) + " x " + std::to_string(cols));
}

/// Rational vertex list, e.g. [["-1/3", "0"]]; entries may be integers or "p/q" strings.
inline std::vector<QVector> vertices_from_json(const Json& j) {
  if (!j.is_array() || j.empty()) throw Error(ErrorKind::ParseError, "vertex list must be a nonempty array");
  std::vector<QVector> out;
  for (const Json& v : j) {
    if (!v.is_array()) throw Error(ErrorKind::ParseError, "vertex must be an array");
    QVector q;
    for (const Json& e : v) {
      if (e.is_number_integer()) {
        q.emplace_back(e.get<std::int64_t>());
      } else if (e.is_string()) {
        const std::string s = e.get<std::string>();
        const auto slash = s.find('/');
        try {
          q.push_back(slash == std::string::npos ? Rational(Int(s.c_str()))
                                                 : ratio(Int(s.substr(0, slash).c_str()), Int(s.substr(slash + 1).c_str())));
        } catch (const std::exception&) {
          throw Error(ErrorKind::ParseError, "bad rational \"" + s + "\"");
        }
      } else {
        throw Error(ErrorKind::ParseError, "vertex entries must be integers or \"p/q\" strings");
      }
    }
    out.push_back(std::move(q));
  }
  return out;
}

}  // namespace trinom
