#pragma once

// SVG pictures of the rank-2 arrangement: hyperplanes, highlighted alcoves
// and walks drawn through alcove centroids.

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "affine_cores/alcove.hpp"
#include "affine_cores/error.hpp"
#include "affine_cores/projection.hpp"

namespace affine_cores {

struct ViewBox {
  double xmin = -1.5;
  double ymin = -1.5;
  double xmax = 1.5;
  double ymax = 1.5;
};

namespace detail {

constexpr double kPixelsPerUnit = 100.0;

inline std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", v == 0.0 ? 0.0 : v);
  return buf;
}

inline double to_double(const Rational& r) {
  return static_cast<double>(r.numerator()) /
         static_cast<double>(r.denominator());
}

struct Px {
  double x, y;
};

inline Px to_px(double x, double y) {
  return {x * kPixelsPerUnit, -y * kPixelsPerUnit};
}

inline std::string polygon_points(const std::vector<Px>& pts) {
  std::string s;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    if (i) s += " ";
    s += fmt(pts[i].x) + "," + fmt(pts[i].y);
  }
  return s;
}

// Segment of the line a*x + b*y = m inside the box, if any.
inline std::optional<std::pair<Px, Px>> clip_line(int a, int b, double m,
                                                  const ViewBox& box) {
  std::vector<std::pair<double, double>> hits;
  const double eps = 1e-9;
  auto inside = [&](double x, double y) {
    return x >= box.xmin - eps && x <= box.xmax + eps && y >= box.ymin - eps &&
           y <= box.ymax + eps;
  };
  if (b != 0) {
    for (double x : {box.xmin, box.xmax}) {
      double y = (m - a * x) / b;
      if (inside(x, y)) hits.emplace_back(x, y);
    }
  }
  if (a != 0) {
    for (double y : {box.ymin, box.ymax}) {
      double x = (m - b * y) / a;
      if (inside(x, y)) hits.emplace_back(x, y);
    }
  }
  if (hits.size() < 2) return std::nullopt;
  std::sort(hits.begin(), hits.end());
  const auto& p = hits.front();
  const auto& q = hits.back();
  if (std::abs(p.first - q.first) < eps && std::abs(p.second - q.second) < eps)
    return std::nullopt;
  return std::make_pair(to_px(p.first, p.second), to_px(q.first, q.second));
}

inline std::vector<Px> alcove_polygon(const Alcove& a) {
  std::vector<Px> out;
  for (const Point& v : fundamental_vertices(2)) {
    const Point w = apply_word(a.word, v);
    out.push_back(to_px(to_double(w[0]), to_double(w[1])));
  }
  return out;
}

inline void draw_line(std::ostringstream& os, int a, int b, double m,
                      const ViewBox& box, const std::string& style) {
  if (auto seg = clip_line(a, b, m, box))
    os << "  <line x1=\"" << fmt(seg->first.x) << "\" y1=\"" << fmt(seg->first.y)
       << "\" x2=\"" << fmt(seg->second.x) << "\" y2=\"" << fmt(seg->second.y)
       << "\" " << style << "/>\n";
}

}  // namespace detail

// Draws the arrangement inside `box`, shades the fundamental alcove, and when
// `params` is given marks the hyperplane, its shifted copy and the
// distinguished alcoves over the domain. Walks are drawn in order.
inline std::string render_svg_rank2(const std::vector<AlcoveWalk>& walks,
                                    const std::optional<DomainParams>& params,
                                    const ViewBox& box = {}) {
  using detail::fmt;
  if (params && params->n != 2)
    throw rank_mismatch("rendering is only available in rank 2");
  for (const AlcoveWalk& w : walks)
    if (w.alcoves.empty() || w.alcoves.front().rank() != 2)
      throw rank_mismatch("rendering is only available in rank 2");
  if (!(box.xmin < box.xmax && box.ymin < box.ymax))
    throw std::invalid_argument("window must have positive width and height");

  const double s = detail::kPixelsPerUnit;
  std::ostringstream os;
  os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
     << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" viewBox=\""
     << fmt(box.xmin * s) << " " << fmt(-box.ymax * s) << " "
     << fmt((box.xmax - box.xmin) * s) << " " << fmt((box.ymax - box.ymin) * s)
     << "\" width=\"" << fmt((box.xmax - box.xmin) * s) << "\" height=\""
     << fmt((box.ymax - box.ymin) * s) << "\">\n";
  os << "  <rect x=\"" << fmt(box.xmin * s) << "\" y=\"" << fmt(-box.ymax * s)
     << "\" width=\"" << fmt((box.xmax - box.xmin) * s) << "\" height=\""
     << fmt((box.ymax - box.ymin) * s) << "\" fill=\"white\"/>\n";

  if (params) {
    os << "  <g id=\"distinguished\" fill=\"#fde9a9\" stroke=\"none\">\n";
    for (const CorootPoint& v : enumerate_domain(2, params->k))
      os << "    <polygon points=\""
         << detail::polygon_points(
                detail::alcove_polygon(distinguished_alcove(v)))
         << "\"/>\n";
    os << "  </g>\n";
  }
  os << "  <polygon id=\"fundamental\" points=\""
     << detail::polygon_points(detail::alcove_polygon(fundamental_alcove(2)))
     << "\" fill=\"#c8c8c8\"/>\n";

  // Roots 2e1, 2e2, e1 - e2, e1 + e2 as (a, b) with lines a*x + b*y = m.
  const int roots[4][2] = {{2, 0}, {0, 2}, {1, -1}, {1, 1}};
  os << "  <g id=\"hyperplanes\" stroke=\"#9a9a9a\" stroke-width=\"0.8\">\n";
  for (const auto& r : roots) {
    double lo = 1e300, hi = -1e300;
    for (double x : {box.xmin, box.xmax})
      for (double y : {box.ymin, box.ymax}) {
        lo = std::min(lo, r[0] * x + r[1] * y);
        hi = std::max(hi, r[0] * x + r[1] * y);
      }
    for (long m = static_cast<long>(std::ceil(lo));
         m <= static_cast<long>(std::floor(hi)); ++m) {
      std::ostringstream line;
      detail::draw_line(line, r[0], r[1], static_cast<double>(m), box, "");
      std::string text = line.str();
      if (!text.empty()) os << "  " << text;
    }
  }
  os << "  </g>\n";

  if (params) {
    const int a = params->axis == 1 ? 1 : 0;
    const int b = params->axis == 2 ? 1 : 0;
    const double level = params->level;
    const double shifted = level - (level > 0 ? 0.5 : -0.5);
    detail::draw_line(os, a, b, level, box,
                      "id=\"hyperplane\" stroke=\"#c0392b\" stroke-width=\"2.5\"");
    detail::draw_line(os, a, b, shifted, box,
                      "id=\"shifted\" stroke=\"#2e6fb7\" stroke-width=\"2\" "
                      "stroke-dasharray=\"8,5\"");
  }

  static const char* palette[] = {"#1b7837", "#762a83", "#e08214", "#2166ac",
                                  "#b2182b"};
  for (std::size_t i = 0; i < walks.size(); ++i) {
    const char* color = palette[i % 5];
    std::vector<detail::Px> pts;
    for (const Alcove& al : walks[i].alcoves)
      pts.push_back(detail::to_px(detail::to_double(al.centroid[0]),
                                  detail::to_double(al.centroid[1])));
    os << "  <polyline class=\"walk\" points=\"" << detail::polygon_points(pts)
       << "\" fill=\"none\" stroke=\"" << color
       << "\" stroke-width=\"2\" stroke-linejoin=\"round\"/>\n";
    os << "  <circle cx=\"" << fmt(pts.back().x) << "\" cy=\"" << fmt(pts.back().y)
       << "\" r=\"4\" fill=\"" << color << "\"/>\n";
  }
  os << "</svg>\n";
  return os.str();
}

}  // namespace affine_cores
