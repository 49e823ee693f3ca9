#pragma once

// SVG figure of a rank-2 pp-divisor: one panel per coefficient with the
// shaded region conv(V) + sigma clipped to a common lattice window, the
// lattice points, the axes and a caption naming the support points.
// Geometry is exact; pixel coordinates are rounded to two decimals at the end,
// so the output bytes depend only on the divisor.

#include <algorithm>
#include <array>
#include <cstddef>
#include <sstream>
#include <string>
#include <vector>

#include "trinom/convexq.hpp"
#include "trinom/error.hpp"
#include "trinom/exactla.hpp"
#include "trinom/ppdivisor.hpp"
#include "trinom/report.hpp"

namespace trinom {

namespace detail {

using QPoint = std::array<Rational, 2>;

inline Rational cross(const QPoint& o, const QPoint& a, const QPoint& b) {
  return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0]);
}

// Counter-clockwise hull without collinear points (monotone chain).
inline std::vector<QPoint> convex_hull(std::vector<QPoint> pts) {
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  if (pts.size() < 3) return pts;
  std::vector<QPoint> h(2 * pts.size());
  std::size_t k = 0;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    while (k >= 2 && cross(h[k - 2], h[k - 1], pts[i]) <= 0) --k;
    h[k++] = pts[i];
  }
  for (std::size_t i = pts.size() - 1, t = k + 1; i-- > 0;) {
    while (k >= t && cross(h[k - 2], h[k - 1], pts[i]) <= 0) --k;
    h[k++] = pts[i];
  }
  h.resize(k - 1);
  return h;
}

// Keep the part of a convex polygon with a*x + b*y <= c.
inline std::vector<QPoint> clip(const std::vector<QPoint>& poly, const Rational& a, const Rational& b, const Rational& c) {
  std::vector<QPoint> out;
  const std::size_t n = poly.size();
  for (std::size_t i = 0; i < n; ++i) {
    const QPoint& p = poly[i];
    const QPoint& q = poly[(i + 1) % n];
    const Rational fp = a * p[0] + b * p[1] - c;
    const Rational fq = a * q[0] + b * q[1] - c;
    if (fp <= 0) out.push_back(p);
    if ((fp < 0 && fq > 0) || (fp > 0 && fq < 0)) {
      const Rational t = fp / (fp - fq);
      out.push_back({p[0] + t * (q[0] - p[0]), p[1] + t * (q[1] - p[1])});
    }
  }
  return out;
}

inline std::string decimal(const Rational& q) {
  using boost::multiprecision::numerator;
  const Int hundredths = numerator(floor_of(q * 100 + Rational(1, 2)));
  const Int a = abs_int(hundredths);
  std::string frac = Int(a % 100).str();
  if (frac.size() < 2) frac.insert(0, "0");
  return (hundredths < 0 ? "-" : "") + Int(a / 100).str() + "." + frac;
}

inline std::string xml_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '<') out += "&lt;";
    else if (c == '>') out += "&gt;";
    else if (c == '&') out += "&amp;";
    else out += c;
  }
  return out;
}

}  // namespace detail

struct FigureWindow {
  Int xmin, xmax, ymin, ymax;
};

/// Smallest integer box holding every vertex with a margin of one unit below
/// and two above, at least four units wide and high.
inline FigureWindow figure_window(const PPDivisor& dv) {
  Rational lo[2], hi[2];
  bool first = true;
  for (const PPTerm& term : dv.terms)
    for (const QVector& v : term.polyhedron.vertices)
      for (std::size_t c = 0; c < 2; ++c) {
        if (first || v[c] < lo[c]) lo[c] = v[c];
        if (first || v[c] > hi[c]) hi[c] = v[c];
        if (c == 1) first = false;
      }
  auto fl = [](const Rational& q) { return boost::multiprecision::numerator(floor_of(q)); };
  FigureWindow w;
  w.xmin = fl(lo[0]) - 1;
  w.ymin = fl(lo[1]) - 1;
  w.xmax = std::max(Int(-fl(-hi[0]) + 2), Int(w.xmin + 4));
  w.ymax = std::max(Int(-fl(-hi[1]) + 2), Int(w.ymin + 4));
  return w;
}

/// Vertices (counter-clockwise) of (conv(V) + sigma) ∩ window.
inline std::vector<std::array<Rational, 2>> clipped_region(const QPolyhedron& p, const FigureWindow& w) {
  using detail::QPoint;
  // A point of the window lies in v + a r1 + b r2 with a, b <= (width + height) * |r|,
  // since the rays are integral with |det(r1, r2)| >= 1.
  Int far = 0;
  for (const IntVector& r : p.recession.rays)
    for (const Int& x : r) far = std::max(far, abs_int(x));
  const Rational R((w.xmax - w.xmin + w.ymax - w.ymin + 2) * (far + 1) * 2);

  std::vector<QPoint> pts;
  const auto& rays = p.recession.rays;
  for (const QVector& v : p.vertices)
    for (std::size_t mask = 0; mask < (std::size_t{1} << rays.size()); ++mask) {
      QPoint q{v[0], v[1]};
      for (std::size_t k = 0; k < rays.size(); ++k)
        if (mask >> k & 1) {
          q[0] += R * Rational(rays[k][0]);
          q[1] += R * Rational(rays[k][1]);
        }
      pts.push_back(q);
    }
  std::vector<QPoint> poly = detail::convex_hull(std::move(pts));
  if (poly.size() < 3) return poly;
  poly = detail::clip(poly, 1, 0, Rational(w.xmax));
  poly = detail::clip(poly, -1, 0, Rational(-w.xmin));
  poly = detail::clip(poly, 0, 1, Rational(w.ymax));
  poly = detail::clip(poly, 0, -1, Rational(-w.ymin));
  return poly;
}

inline std::string render_svg(const PPDivisor& dv) {
  if (dv.lattice_rank != 2)
    throw Error(ErrorKind::UnsupportedRank, "figures need lattice rank 2, got " + std::to_string(dv.lattice_rank));
  const FigureWindow w = figure_window(dv);
  const Int span = std::max(w.xmax - w.xmin, w.ymax - w.ymin);
  const Rational scale(Int(200), span);
  const int panel_w = 240, panel_h = 290, pad = 20;

  auto px = [&](const Rational& x) { return detail::decimal(Rational(pad) + (x - Rational(w.xmin)) * scale); };
  auto py = [&](const Rational& y) { return detail::decimal(Rational(pad) + (Rational(w.ymax) - y) * scale); };
  const std::string left = px(Rational(w.xmin)), right = px(Rational(w.xmax));
  const std::string top = py(Rational(w.ymax)), bottom = py(Rational(w.ymin));

  std::ostringstream os;
  os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << 3 * panel_w << "\" height=\"" << panel_h
     << "\" viewBox=\"0 0 " << 3 * panel_w << " " << panel_h << "\" font-family=\"serif\" font-size=\"13\">\n";
  os << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";

  for (std::size_t i = 0; i < 3; ++i) {
    const PPTerm& term = dv.terms[i];
    os << "<g id=\"panel" << i << "\" transform=\"translate(" << i * panel_w << ",0)\">\n";
    os << "<rect x=\"" << left << "\" y=\"" << top << "\" width=\"" << detail::decimal(Rational(w.xmax - w.xmin) * scale)
       << "\" height=\"" << detail::decimal(Rational(w.ymax - w.ymin) * scale)
       << "\" fill=\"none\" stroke=\"#999\" stroke-width=\"0.5\"/>\n";

    const auto region = clipped_region(term.polyhedron, w);
    if (region.size() >= 3) {
      os << "<polygon points=\"";
      for (std::size_t k = 0; k < region.size(); ++k) os << (k ? " " : "") << px(region[k][0]) << "," << py(region[k][1]);
      os << "\" fill=\"#9bb7d4\" fill-opacity=\"0.6\" stroke=\"#1f4e79\" stroke-width=\"1\"/>\n";
    }
    if (w.xmin <= 0 && 0 <= w.xmax)
      os << "<line x1=\"" << px(0) << "\" y1=\"" << top << "\" x2=\"" << px(0) << "\" y2=\"" << bottom
         << "\" stroke=\"black\" stroke-width=\"0.8\"/>\n";
    if (w.ymin <= 0 && 0 <= w.ymax)
      os << "<line x1=\"" << left << "\" y1=\"" << py(0) << "\" x2=\"" << right << "\" y2=\"" << py(0)
         << "\" stroke=\"black\" stroke-width=\"0.8\"/>\n";
    for (Int x = w.xmin; x <= w.xmax; ++x)
      for (Int y = w.ymin; y <= w.ymax; ++y)
        os << "<circle cx=\"" << px(Rational(x)) << "\" cy=\"" << py(Rational(y)) << "\" r=\"1.5\" fill=\"#444\"/>\n";

    const auto& V = term.polyhedron.vertices;
    if (V.size() >= 2) {
      std::vector<detail::QPoint> pts;
      for (const QVector& v : V) pts.push_back({v[0], v[1]});
      const auto hull = detail::convex_hull(std::move(pts));
      os << "<polygon points=\"";
      for (std::size_t k = 0; k < hull.size(); ++k) os << (k ? " " : "") << px(hull[k][0]) << "," << py(hull[k][1]);
      os << "\" fill=\"none\" stroke=\"#1f4e79\" stroke-width=\"2.5\"/>\n";
    }
    for (const QVector& v : V)
      os << "<circle cx=\"" << px(v[0]) << "\" cy=\"" << py(v[1]) << "\" r=\"3\" fill=\"#c00000\"/>\n";

    const std::string formula = term.equals_tail ? "sigma" : coefficient_text(term.polyhedron) + " + sigma";
    os << "<text x=\"" << pad << "\" y=\"" << panel_h - 40 << "\">Delta" << i << " = " << detail::xml_escape(formula)
       << "</text>\n";
    os << "<text x=\"" << pad << "\" y=\"" << panel_h - 20 << "\">D" << i << " = "
       << detail::xml_escape(support_text(term.support)) << "</text>\n";
    os << "</g>\n";
  }
  os << "</svg>\n";
  return os.str();
}

}  // namespace trinom
