#pragma once

// Convex polygons of irreducible vanishing sums: edge j is the vector
// c_j omega^{m_j}, edges sorted by direction.

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hsgon/cyclotomic.hpp"
#include "hsgon/partition.hpp"
#include "hsgon/vanishing.hpp"

namespace hsgon {

struct PolygonEdge {
  std::size_t part = 0;   // 0-based part position
  Integer length;         // c_j
  unsigned direction = 0; // m_j mod h
};

struct PolygonVertex {
  CycNum exact;           // partial sum of the edge vectors
  CycNum re;              // (x + conj x) / 2
  CycNum im_times_i;      // (x - conj x) / 2, i.e. i * Im(x)
  double x = 0.0;
  double y = 0.0;
};

struct PolygonRecord {
  unsigned h = 1;
  std::vector<PolygonEdge> edges;
  // vertices[0] is the origin; vertices[k] follows edge k - 1.
  std::vector<PolygonVertex> vertices;
  // Two edges share a direction, or fewer than three directions occur.
  bool degenerate = false;
  // After merging edges of equal direction: all sides equal and the
  // directions equally spaced mod h.
  bool regular = false;
  // Pairs of parts (0-based, ascending) whose edges have equal length.
  std::vector<std::pair<std::size_t, std::size_t>> equal_edge_pairs;
};

// Throws NonPositiveCoefficient or NonVanishing.
PolygonRecord build_polygon(const IrreducibleSubsum& subsum);

struct MultiplicityVerdict {
  bool proven = false;
  // Parts j < k with d_j = d_k found on some polygon (when proven).
  std::size_t j = 0;
  std::size_t k = 0;
  std::size_t index = 0;
  // First pair of parts with equal index anywhere in the partition.
  std::optional<std::pair<std::size_t, std::size_t>> global_pair;
};

MultiplicityVerdict multiplicity_verdict(const CosetPartition& partition,
                                         const std::vector<PolygonRecord>& polygons);

// Standalone SVG drawing titled with h and the (1-based) parts of J'.
std::string svg_document(const PolygonRecord& polygon);
// Throws IoError when the file cannot be written.
void render_svg(const PolygonRecord& polygon, const std::string& path);

}  // namespace hsgon
