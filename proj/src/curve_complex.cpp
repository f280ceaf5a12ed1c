#include "z2norm/curve_complex.hpp"

#include <cmath>
#include <deque>
#include <sstream>
#include <stdexcept>

#include "z2norm/arith.hpp"

namespace z2norm {

namespace {

Int floor_div(Int x, Int y) {
  Int q = x / y;
  if ((x % y != 0) && ((x < 0) != (y < 0))) --q;
  return q;
}

Int ceil_div(Int x, Int y) { return -floor_div(-x, y); }

// (r, s) with p*s - q*r = 1.
std::pair<Int, Int> complement(const Slope& v) {
  const auto g = ext_gcd(v.p(), v.q());
  return {checked::neg(g.y), g.x};
}

// Restrict t so that |base + t*step| <= bound.
void clamp_range(Int base, Int step, Int bound, Int& lo, Int& hi) {
  if (step == 0) {
    if (checked::abs(base) > bound) {
      lo = 1;
      hi = 0;
    }
    return;
  }
  Int a = checked::sub(-bound, base), b = checked::sub(bound, base);
  if (step < 0) {
    std::swap(a, b);
    a = checked::neg(a);
    b = checked::neg(b);
    step = checked::neg(step);
  }
  lo = std::max(lo, ceil_div(a, step));
  hi = std::min(hi, floor_div(b, step));
}

bool in_box(const Slope& s, Int bound) { return checked::abs(s.p()) <= bound && checked::abs(s.q()) <= bound; }

// Neighbor of v indexed by odd t: (2r + t p)/(2s + t q).
Slope neighbor_at(const Slope& v, Int r, Int s, Int t) {
  return Slope::make(checked::add(checked::mul(2, r), checked::mul(t, v.p())),
                     checked::add(checked::mul(2, s), checked::mul(t, v.q())));
}

}  // namespace

Int intersection_number(const Slope& s1, const Slope& s2) {
  return checked::abs(checked::cross(s1.p(), s2.q(), s2.p(), s1.q()));
}

Slope mat_act(const GL2Matrix& A, const Slope& s) {
  using checked::add;
  using checked::mul;
  return Slope::make(add(mul(A.a(), s.p()), mul(A.c(), s.q())), add(mul(A.b(), s.p()), mul(A.d(), s.q())));
}

ExtNat distance(const Slope& s1, const Slope& s2) {
  if (parity_of(s1) != parity_of(s2)) return ExtNat::infinity();
  const auto [r, s] = complement(s1);
  const Int first = checked::cross(s1.p(), s2.q(), s1.q(), s2.p());
  const Int second = checked::cross(s2.p(), s, s2.q(), r);
  return bredon_wood(first, second);
}

std::vector<Slope> neighbors_bounded(const Slope& v, Int bound) {
  std::vector<Slope> out;
  if (bound < 1) return out;
  const auto [r, s] = complement(v);
  Int lo = std::numeric_limits<Int>::min() / 4, hi = std::numeric_limits<Int>::max() / 4;
  clamp_range(checked::mul(2, r), v.p(), bound, lo, hi);
  clamp_range(checked::mul(2, s), v.q(), bound, lo, hi);
  if (lo > hi) return out;
  for (Int t = (mod2(lo) == 1) ? lo : lo + 1; t <= hi; t += 2) out.push_back(neighbor_at(v, r, s, t));
  return out;
}

std::optional<ExtNat> distance_bfs(const Slope& s1, const Slope& s2, Int bound) {
  if (parity_of(s1) != parity_of(s2)) return ExtNat::infinity();
  if (s1 == s2) return ExtNat(0);
  if (!in_box(s1, bound) || !in_box(s2, bound)) return std::nullopt;

  std::unordered_map<Slope, std::uint64_t> seen{{s1, 0}};
  std::deque<Slope> frontier{s1};
  while (!frontier.empty()) {
    const Slope v = frontier.front();
    frontier.pop_front();
    const auto dv = seen.at(v);
    for (const auto& u : neighbors_bounded(v, bound)) {
      if (!seen.emplace(u, dv + 1).second) continue;
      if (u == s2) return ExtNat(dv + 1);
      frontier.push_back(u);
    }
  }
  return std::nullopt;
}

std::vector<Slope> geodesic(const Slope& s1, const Slope& s2) {
  const ExtNat total = distance(s1, s2);
  if (total.is_infinite()) throw DomainError("infinite distance between " + s1.to_string() + " and " + s2.to_string());

  std::vector<Slope> path{s1};
  path.reserve(total.value() + 1);
  Slope v = s1;
  for (std::uint64_t remaining = total.value(); remaining > 0; --remaining) {
    const auto [r, s] = complement(v);
    // In the frame sending v to 0/1 the neighbors are 2/t for odd t and the
    // target is P/Q; the step toward it has t close to 2Q/P.
    const Int P = checked::cross(v.p(), s2.q(), v.q(), s2.p());
    const Int Q = checked::cross(s2.p(), s, s2.q(), r);
    long double estimate = P == 0 ? 1.0L : 2.0L * static_cast<long double>(Q) / static_cast<long double>(P);
    if (!(std::fabs(estimate) < 1e17L)) estimate = 1.0L;
    Int t0 = static_cast<Int>(std::llround(estimate));
    if (mod2(t0) == 0) ++t0;

    std::optional<Slope> next;
    const ExtNat want(remaining - 1);
    auto try_t = [&](Int t) {
      const Slope u = neighbor_at(v, r, s, t);
      if (distance(u, s2) == want) next = u;
    };
    Int checked_radius = -1;
    // The true step sits within a few offsets of t0; a miss this wide means
    // the distance function and the tree disagree.
    constexpr Int kMaxWindow = Int{1} << 20;
    for (Int window = 4; !next; window = checked::mul(window, 2)) {
      if (window > kMaxWindow)
        throw std::logic_error("no distance-decreasing neighbor of " + v.to_string() + " toward " + s2.to_string());
      for (Int k = checked_radius + 1; k <= window && !next; ++k) {
        try_t(checked::add(t0, checked::mul(2, k)));
        if (k != 0 && !next) try_t(checked::sub(t0, checked::mul(2, k)));
      }
      checked_radius = window;
    }
    v = *next;
    path.push_back(v);
  }
  return path;
}

std::string export_dot(const Slope& center, std::size_t radius, Int bound) {
  std::vector<Slope> ball{center};
  std::unordered_map<Slope, std::size_t> depth{{center, 0}};
  std::vector<std::pair<Slope, Slope>> edges;
  for (std::size_t head = 0; head < ball.size(); ++head) {
    const Slope v = ball[head];
    if (depth.at(v) == radius) continue;
    for (const auto& u : neighbors_bounded(v, bound)) {
      if (depth.emplace(u, depth.at(v) + 1).second) {
        ball.push_back(u);
        edges.emplace_back(v, u);
      }
    }
  }
  std::ostringstream os;
  os << "graph curve_complex {\n";
  for (const auto& v : ball) os << "  \"" << v << "\";\n";
  for (const auto& [v, u] : edges) os << "  \"" << v << "\" -- \"" << u << "\";\n";
  os << "}\n";
  return os.str();
}

BoundedGraph::BoundedGraph(Int bound) : bound_(bound) {
  if (bound < 0) throw DomainError("bound must be non-negative");
  for (Int q = 0; q <= bound; ++q) {
    for (Int p = -bound; p <= bound; ++p) {
      if (q == 0 && p != 1) continue;
      if (gcd(p, q) != 1) continue;
      index_.emplace(Slope::make(p, q), vertices_.size());
      vertices_.push_back(Slope::make(p, q));
    }
  }
  offsets_.reserve(vertices_.size() + 1);
  offsets_.push_back(0);
  for (const auto& v : vertices_) {
    for (const auto& u : neighbors_bounded(v, bound)) adjacency_.push_back(index_.at(u));
    offsets_.push_back(adjacency_.size());
  }
}

std::optional<std::size_t> BoundedGraph::index_of(const Slope& s) const {
  if (auto it = index_.find(s); it != index_.end()) return it->second;
  return std::nullopt;
}

std::span<const std::size_t> BoundedGraph::neighbors(std::size_t i) const {
  return std::span<const std::size_t>(adjacency_).subspan(offsets_[i], offsets_[i + 1] - offsets_[i]);
}

std::vector<int> BoundedGraph::bfs(std::size_t source) const {
  std::vector<int> dist(vertices_.size(), -1);
  std::vector<std::size_t> queue{source};
  dist[source] = 0;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const auto v = queue[head];
    for (auto u : neighbors(v)) {
      if (dist[u] >= 0) continue;
      dist[u] = dist[v] + 1;
      queue.push_back(u);
    }
  }
  return dist;
}

}  // namespace z2norm
