#include "hsgon/polygon.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <map>
#include <numeric>

#include "hsgon/error.hpp"

namespace hsgon {

namespace {

std::string fixed(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", std::abs(v) < 5e-4 ? 0.0 : v);
  return buf;
}

}  // namespace

PolygonRecord build_polygon(const IrreducibleSubsum& subsum) {
  const unsigned h = subsum.h;
  PolygonRecord rec;
  rec.h = h;
  for (const auto& t : subsum.terms) {
    if (t.coeff <= 0) {
      throw Error(ErrorCode::NonPositiveCoefficient,
                  "coefficient " + t.coeff.get_str() + " of part " + std::to_string(t.part + 1));
    }
    rec.edges.push_back({t.part, t.coeff, t.exponent % h});
  }
  std::stable_sort(rec.edges.begin(), rec.edges.end(),
                   [](const PolygonEdge& a, const PolygonEdge& b) { return a.direction < b.direction; });

  CycNum at(h);
  auto push_vertex = [&](const CycNum& x) {
    const CycNum c = x.conj();
    const Rational half(1, 2);
    const auto z = x.to_complex();
    rec.vertices.push_back({x, half * (x + c), half * (x - c), z.real(), z.imag()});
  };
  push_vertex(at);
  for (const auto& e : rec.edges) {
    at += Rational(e.length) * omega_power(h, e.direction);
    push_vertex(at);
  }
  if (!at.is_zero()) throw Error(ErrorCode::NonVanishing, "edges do not close: sum is " + at.str());

  std::map<unsigned, Integer> sides;
  for (const auto& e : rec.edges) sides[e.direction] += e.length;
  rec.degenerate = sides.size() < rec.edges.size() || sides.size() < 3;
  if (sides.size() >= 2 && h % sides.size() == 0) {
    const unsigned step = h / static_cast<unsigned>(sides.size());
    const unsigned e0 = sides.begin()->first;
    const Integer& c0 = sides.begin()->second;
    rec.regular = std::all_of(sides.begin(), sides.end(), [&](const auto& kv) {
      return kv.second == c0 && (kv.first + h - e0) % step == 0;
    });
  }

  for (std::size_t a = 0; a < rec.edges.size(); ++a) {
    for (std::size_t b = a + 1; b < rec.edges.size(); ++b) {
      if (rec.edges[a].length != rec.edges[b].length) continue;
      auto [p, q] = std::minmax(rec.edges[a].part, rec.edges[b].part);
      rec.equal_edge_pairs.emplace_back(p, q);
    }
  }
  std::sort(rec.equal_edge_pairs.begin(), rec.equal_edge_pairs.end());
  return rec;
}

MultiplicityVerdict multiplicity_verdict(const CosetPartition& partition,
                                         const std::vector<PolygonRecord>& polygons) {
  MultiplicityVerdict out;
  const auto& parts = partition.parts();
  for (const auto& poly : polygons) {
    if (poly.equal_edge_pairs.empty()) continue;
    auto [j, k] = poly.equal_edge_pairs.front();
    if (parts[j].index != parts[k].index) {
      throw Error(ErrorCode::StructureViolation, "equal edges on parts " + std::to_string(j + 1) +
                                                     " and " + std::to_string(k + 1) +
                                                     " with different indices");
    }
    out.proven = true;
    out.j = j;
    out.k = k;
    out.index = parts[j].index;
    break;
  }
  for (std::size_t a = 0; a < parts.size() && !out.global_pair; ++a)
    for (std::size_t b = a + 1; b < parts.size(); ++b)
      if (parts[a].index == parts[b].index) {
        out.global_pair = std::make_pair(a, b);
        break;
      }
  return out;
}

std::string svg_document(const PolygonRecord& polygon) {
  constexpr double kSize = 400.0;
  constexpr double kMargin = 50.0;
  constexpr double kOffset = 5.0;

  double lo_x = 0, hi_x = 0, lo_y = 0, hi_y = 0;
  for (const auto& v : polygon.vertices) {
    lo_x = std::min(lo_x, v.x);
    hi_x = std::max(hi_x, v.x);
    lo_y = std::min(lo_y, v.y);
    hi_y = std::max(hi_y, v.y);
  }
  const double span = std::max({hi_x - lo_x, hi_y - lo_y, 1e-9});
  const double scale = (kSize - 2 * kMargin) / span;
  const double cx = (lo_x + hi_x) / 2;
  const double cy = (lo_y + hi_y) / 2;
  auto sx = [&](double x) { return kSize / 2 + (x - cx) * scale; };
  auto sy = [&](double y) { return kSize / 2 - (y - cy) * scale; };

  std::string title = "h = " + std::to_string(polygon.h) + ", J' = {";
  std::vector<std::size_t> members;
  for (const auto& e : polygon.edges) members.push_back(e.part + 1);
  std::sort(members.begin(), members.end());
  for (std::size_t i = 0; i < members.size(); ++i) title += (i ? ", " : "") + std::to_string(members[i]);
  title += "}";
  if (polygon.regular) title += ", regular";
  if (polygon.degenerate) title += ", degenerate";

  std::string out;
  out += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  out += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"400\" height=\"430\" "
         "viewBox=\"0 0 400 430\">\n";
  out += "  <title>" + title + "</title>\n";
  out += "  <rect x=\"0\" y=\"0\" width=\"400\" height=\"430\" fill=\"white\"/>\n";
  out += "  <text x=\"200\" y=\"420\" text-anchor=\"middle\" font-family=\"sans-serif\" "
         "font-size=\"14\">" + title + "</text>\n";

  for (std::size_t k = 0; k < polygon.edges.size(); ++k) {
    double x0 = sx(polygon.vertices[k].x), y0 = sy(polygon.vertices[k].y);
    double x1 = sx(polygon.vertices[k + 1].x), y1 = sy(polygon.vertices[k + 1].y);
    const double dx = x1 - x0, dy = y1 - y0;
    const double len = std::hypot(dx, dy);
    // Unit normal to the left of the edge in screen coordinates.
    const double nx = len > 0 ? dy / len : 0.0, ny = len > 0 ? -dx / len : 0.0;
    if (polygon.degenerate) {
      x0 += nx * kOffset;
      x1 += nx * kOffset;
      y0 += ny * kOffset;
      y1 += ny * kOffset;
    }
    out += "  <line x1=\"" + fixed(x0) + "\" y1=\"" + fixed(y0) + "\" x2=\"" + fixed(x1) +
           "\" y2=\"" + fixed(y1) + "\" stroke=\"black\" stroke-width=\"2\"/>\n";
    const double lx = (x0 + x1) / 2 + nx * 14, ly = (y0 + y1) / 2 + ny * 14;
    out += "  <text x=\"" + fixed(lx) + "\" y=\"" + fixed(ly) +
           "\" text-anchor=\"middle\" dominant-baseline=\"middle\" font-family=\"sans-serif\" "
           "font-size=\"12\">" + polygon.edges[k].length.get_str() + "</text>\n";
  }
  for (std::size_t k = 0; k + 1 < polygon.vertices.size(); ++k) {
    out += "  <circle cx=\"" + fixed(sx(polygon.vertices[k].x)) + "\" cy=\"" +
           fixed(sy(polygon.vertices[k].y)) + "\" r=\"3\" fill=\"black\"/>\n";
  }
  out += "</svg>\n";
  return out;
}

void render_svg(const PolygonRecord& polygon, const std::string& path) {
  std::ofstream file(path, std::ios::binary | std::ios::trunc);
  if (!file) throw Error(ErrorCode::IoError, "cannot open " + path + " for writing");
  file << svg_document(polygon);
  file.close();
  if (!file) throw Error(ErrorCode::IoError, "failed writing " + path);
}

}  // namespace hsgon
