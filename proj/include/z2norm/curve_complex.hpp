#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "z2norm/ext_nat.hpp"
#include "z2norm/matrix.hpp"
#include "z2norm/slope.hpp"

namespace z2norm {

/// Geometric intersection number |p1*q2 - p2*q1|.
Int intersection_number(const Slope& s1, const Slope& s2);

/// p/q -> (a p + c q)/(b p + d q), normalized.
Slope mat_act(const GL2Matrix& A, const Slope& s);

/// Distance in the intersection-number-2 curve complex; infinite across
/// parity classes. Closed form through the Bredon-Wood invariant after
/// moving s1 to 0/1.
ExtNat distance(const Slope& s1, const Slope& s2);

/// All u with i(s, u) = 2 and |u.p|, |u.q| <= bound.
///
/// With p*s - q*r = 1 the solutions of p*u_q - q*u_p = 2 are
/// (2r + t p, 2s + t q); they are reduced exactly when t is odd.
std::vector<Slope> neighbors_bounded(const Slope& s, Int bound);

/// Breadth-first search restricted to slopes with coefficients within bound.
/// Returns infinity on parity mismatch and nullopt ("unknown") when no path
/// exists inside the bound.
std::optional<ExtNat> distance_bfs(const Slope& s1, const Slope& s2, Int bound);

/// The unique tree path s1 = v_0, ..., v_L = s2 with L = distance(s1, s2).
/// Throws DomainError("infinite distance") across parity classes.
std::vector<Slope> geodesic(const Slope& s1, const Slope& s2);

/// Graphviz text for the ball of `radius` around `center`, restricted to
/// coefficients within `bound`.
std::string export_dot(const Slope& center, std::size_t radius, Int bound);

/// The curve complex restricted to |p|, |q| <= bound, with dense vertex ids.
class BoundedGraph {
 public:
  explicit BoundedGraph(Int bound);

  Int bound() const noexcept { return bound_; }
  std::size_t size() const noexcept { return vertices_.size(); }
  const Slope& vertex(std::size_t i) const { return vertices_[i]; }
  std::span<const Slope> vertices() const noexcept { return vertices_; }
  std::optional<std::size_t> index_of(const Slope& s) const;
  std::span<const std::size_t> neighbors(std::size_t i) const;

  /// Hop counts from `source`; -1 where unreachable.
  std::vector<int> bfs(std::size_t source) const;

 private:
  Int bound_;
  std::vector<Slope> vertices_;
  std::unordered_map<Slope, std::size_t> index_;
  std::vector<std::size_t> offsets_;
  std::vector<std::size_t> adjacency_;
};

}  // namespace z2norm
