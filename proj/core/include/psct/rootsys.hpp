#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace psct {

using IntVector = std::vector<long>;

// Integer realization of a (possibly reducible) root system. A_n uses n+1
// coordinates, B/C/D use n, G2 uses the sum-zero plane of Z^3, F4 and E8 are
// scaled by 2, and E6/E7 are the subsystems of (scaled) E8 orthogonal to one or
// two fixed roots.
struct RootSystem {
  std::vector<std::pair<char, int>> components;  // (type, rank)
  int ambient = 0;
  std::vector<IntVector> positive;  // sorted by height, then lexicographically decreasing
  std::vector<int> component_of;    // index into components, per positive root

  std::size_t size() const { return positive.size(); }
  // True if v is a root, of either sign.
  bool is_root(const IntVector& v) const;
  std::string name() const;
};

// Standard positive roots of the simple system of the given type and rank.
RootSystem positive_roots(char type, int rank);
// Orthogonal direct sum.
RootSystem product(const RootSystem& a, const RootSystem& b);
RootSystem empty_root_system();

// Signs (first one +1) with zero signed sum, the lexicographically least with + before -, if any.
std::optional<std::vector<int>> is_balanced(const std::vector<IntVector>& roots);

// C holds indices into R.positive.
bool is_strongly_orthogonal(const std::vector<std::size_t>& C, const RootSystem& R);

struct WellBalancedResult {
  std::vector<std::size_t> S;  // indices into the positive roots, increasing
  std::vector<int> signs;      // aligned with S
  std::vector<std::size_t> complement;
};

struct WellBalancedOptions {
  bool forbid_singleton_complement = true;
  std::size_t cap_roots = 24;
  std::size_t cap_results = 64;
};

// Results ordered by complement size, then lexicographically by complement.
std::vector<WellBalancedResult> well_balanced_search(const RootSystem& R, const WellBalancedOptions& options = {});
// Independent re-check of the three defining properties.
bool verify_well_balanced(const RootSystem& R, const WellBalancedResult& w, bool forbid_singleton_complement);

}  // namespace psct
