#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "gwl/group.hpp"

namespace gwl {

// Edge-colored complete directed graph with self-loops. colors[y*n + z] is
// the color of the edge y -> z; the diagonal holds loop colors. In loops-only
// mode all off-diagonal entries must be kNullColor.
struct EdgeColoredDigraph {
  int n = 0;
  bool loops_only = false;
  std::vector<uint32_t> colors;

  static constexpr uint32_t kNullColor = 0xffffffffu;

  uint32_t at(int y, int z) const { return colors[static_cast<size_t>(y) * n + z]; }
  uint32_t& at(int y, int z) { return colors[static_cast<size_t>(y) * n + z]; }
};

// Canonical certificate of an edge-colored isomorphism class. Two graphs get
// equal bytes iff they are color-isomorphic (exact, not heuristic).
struct CanonCertificate {
  std::string bytes;
  bool operator==(const CanonCertificate& o) const = default;
  auto operator<=>(const CanonCertificate& o) const = default;
};

// Certificate of a loops-only graph: the sorted multiset of loop colors.
CanonCertificate loops_cert(std::span<const uint32_t> loop_colors);

// Canonical form by individualization-refinement with backtracking over an
// invariantly chosen target cell; the certificate is the lexicographically
// least reordered color matrix over all search leaves.
CanonCertificate canon_cert(const EdgeColoredDigraph& g);

// Testing oracle: tries all n! vertex bijections. Requires n <= 8.
bool brute_force_color_iso(const EdgeColoredDigraph& a, const EdgeColoredDigraph& b);

// 16-byte digest (as 32 hex chars) used to label certificates and bijections
// in reports; full-form comparison is used wherever equality matters.
std::string digest128(std::string_view bytes);

}  // namespace gwl
