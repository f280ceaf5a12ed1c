#include "z2norm/oracle.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

#include "z2norm/arith.hpp"
#include "z2norm/curve_complex.hpp"

namespace z2norm::oracle {

Rng::Rng(std::uint64_t seed, std::uint64_t stream) : seed_(seed), stream_(stream) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32U),
                    static_cast<std::uint32_t>(stream), static_cast<std::uint32_t>(stream >> 32U)};
  engine_.seed(seq);
}

Int Rng::uniform(Int lo, Int hi) { return std::uniform_int_distribution<Int>(lo, hi)(engine_); }

GL2Matrix random_glz(Rng& rng, std::size_t word_length) {
  static const std::array<GL2Matrix, 5> generators = {
      GL2Matrix::from_rows(1, 1, 0, 1), GL2Matrix::from_rows(1, -1, 0, 1), GL2Matrix::from_rows(1, 0, 1, 1),
      GL2Matrix::from_rows(1, 0, -1, 1), GL2Matrix::from_rows(1, 0, 0, -1)};
  GL2Matrix m = GL2Matrix::identity();
  for (std::size_t i = 0; i < word_length; ++i) m = m * generators[static_cast<std::size_t>(rng.uniform(0, 4))];
  return m;
}

GL2Matrix random_glz(const RandomMatrixSpec& spec) {
  Rng rng(spec.seed);
  return random_glz(rng, spec.word_length);
}

Slope random_slope(Rng& rng, Int bound) {
  for (;;) {
    const Int p = rng.uniform(-bound, bound), q = rng.uniform(-bound, bound);
    if (coprime(p, q)) return Slope::make(p, q);
  }
}

Slope random_slope_in_class(Rng& rng, ParityClass cls, Int bound) {
  for (;;) {
    const Slope s = random_slope(rng, bound);
    if (parity_of(s) == cls) return s;
  }
}

std::vector<GL2Matrix> unimodular_box(Int bound) {
  std::vector<GL2Matrix> box;
  for (Int x = -bound; x <= bound; ++x) {
    for (Int y = -bound; y <= bound; ++y) {
      for (Int z = -bound; z <= bound; ++z) {
        if (x != 0) {
          // x w - z y = det, so w is forced.
          for (Int det : {Int{1}, Int{-1}}) {
            const Int num = det + z * y;
            if (num % x != 0) continue;
            const Int w = num / x;
            if (w >= -bound && w <= bound) box.push_back(GL2Matrix::from_rows(x, y, z, w));
          }
        } else if (z * y == 1 || z * y == -1) {
          for (Int w = -bound; w <= bound; ++w) box.push_back(GL2Matrix::from_rows(x, y, z, w));
        }
      }
    }
  }
  auto size = [](const GL2Matrix& m) {
    return std::max({checked::abs(m.a()), checked::abs(m.b()), checked::abs(m.c()), checked::abs(m.d())});
  };
  std::stable_sort(box.begin(), box.end(), [&](const auto& l, const auto& r) { return size(l) < size(r); });
  // The identity leads so that A ~ A is witnessed by I.
  if (auto it = std::find(box.begin(), box.end(), GL2Matrix::identity()); it != box.end())
    std::rotate(box.begin(), it, it + 1);
  return box;
}

std::optional<GL2Matrix> ConjugatorSearch::find(const GL2Matrix& A, const std::function<bool(const GL2Matrix&)>& pred,
                                                Execution exec) const {
  const std::size_t n = box_.size();
  if (exec == Execution::Serial) {
    for (const auto& P : box_)
      if (pred(P * A * P.inverse())) return P;
    return std::nullopt;
  }

  std::size_t best = n;
  bool failed = false;
#pragma omp parallel for schedule(static) reduction(min : best) reduction(|| : failed)
  for (std::size_t i = 0; i < n; ++i) {
    if (i >= best) continue;
    try {
      if (pred(box_[i] * A * box_[i].inverse())) best = i;
    } catch (...) {
      failed = true;
    }
  }
  if (failed) throw OverflowError("conjugator search overflowed");
  if (best == n) return std::nullopt;
  return box_[best];
}

std::optional<GL2Matrix> brute_conjugate(const GL2Matrix& A, const GL2Matrix& B, Int bound, Execution exec) {
  if (bound < 1) throw DomainError("conjugator bound must be at least 1");
  return ConjugatorSearch(bound).find(A, [&](const GL2Matrix& M) { return M == B; }, exec);
}

bool is_negative_shear(const GL2Matrix& M) { return M.a() == -1 && M.c() == 0 && M.d() == -1; }

bool check_four_point(const std::array<Slope, 4>& s) {
  const ParityClass cls = parity_of(s[0]);
  for (const auto& v : s)
    if (parity_of(v) != cls) throw DomainError("four-point condition needs slopes in one parity class");
  auto d = [&](int i, int j) { return distance(s[i], s[j]).value(); };
  std::array<std::uint64_t, 3> sums = {d(0, 1) + d(2, 3), d(0, 2) + d(1, 3), d(0, 3) + d(1, 2)};
  std::sort(sums.begin(), sums.end());
  return sums[1] == sums[2];
}

GridAgreement grid_distance_agreement(Int grid_bound, Int bfs_bound, Execution exec) {
  if (bfs_bound < grid_bound) throw DomainError("BFS bound must cover the grid");
  const BoundedGraph graph(bfs_bound);
  std::vector<std::size_t> sources;
  for (std::size_t i = 0; i < graph.size(); ++i) {
    const auto& v = graph.vertex(i);
    if (checked::abs(v.p()) <= grid_bound && checked::abs(v.q()) <= grid_bound) sources.push_back(i);
  }

  // One BFS per source covers every pair with that source as the lower index.
  auto scan = [&](std::size_t si, GridAgreement& acc) {
    const auto& from = graph.vertex(sources[si]);
    const auto hops = graph.bfs(sources[si]);
    for (std::size_t ti = si; ti < sources.size(); ++ti) {
      const auto& to = graph.vertex(sources[ti]);
      if (parity_of(from) != parity_of(to)) continue;
      ++acc.pairs;
      const int h = hops[sources[ti]];
      if (h < 0) {
        ++acc.bfs_unknown;
        continue;
      }
      ++acc.bfs_found;
      const ExtNat formula = distance(from, to);
      if (formula != ExtNat(static_cast<std::uint64_t>(h))) {
        if (acc.mismatches++ == 0)
          acc.first_mismatch = from.to_string() + " " + to.to_string() + ": formula " + formula.to_string() +
                               " bfs " + std::to_string(h);
      }
    }
  };

  GridAgreement total;
  const std::size_t n = sources.size();
  if (exec == Execution::Serial) {
    for (std::size_t si = 0; si < n; ++si) scan(si, total);
    return total;
  }

  std::vector<GridAgreement> per_source(n);
#pragma omp parallel for schedule(dynamic, 8)
  for (std::size_t si = 0; si < n; ++si) scan(si, per_source[si]);
  for (const auto& part : per_source) {
    total.pairs += part.pairs;
    total.bfs_found += part.bfs_found;
    total.bfs_unknown += part.bfs_unknown;
    if (part.mismatches > 0 && total.mismatches == 0) total.first_mismatch = part.first_mismatch;
    total.mismatches += part.mismatches;
  }
  return total;
}

}  // namespace z2norm::oracle
