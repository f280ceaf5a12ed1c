#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "z2norm/matrix.hpp"
#include "z2norm/slope.hpp"

namespace z2norm {

/// Kernels below come in a serial reference form and an OpenMP form; both
/// must return identical results.
enum class Execution { Serial, Parallel };

}  // namespace z2norm

namespace z2norm::oracle {

/// Deterministic generator; `split` derives an independent stream, so
/// parallel workers never share state.
class Rng {
 public:
  explicit Rng(std::uint64_t seed, std::uint64_t stream = 0);

  Rng split(std::uint64_t stream) const { return Rng(seed_, stream_ * 0x100000001B3ULL + stream + 1); }

  Int uniform(Int lo, Int hi);  // inclusive
  bool coin() { return uniform(0, 1) == 1; }

 private:
  std::uint64_t seed_;
  std::uint64_t stream_;
  std::mt19937_64 engine_;
};

struct RandomMatrixSpec {
  std::uint64_t seed = 0;
  std::size_t word_length = 0;
};

/// Product of `word_length` generators drawn from the elementary matrices
/// [[1,+-1],[0,1]], [[1,0],[+-1,1]] and the flip diag(1,-1).
GL2Matrix random_glz(const RandomMatrixSpec& spec);
GL2Matrix random_glz(Rng& rng, std::size_t word_length);

Slope random_slope(Rng& rng, Int bound);
Slope random_slope_in_class(Rng& rng, ParityClass cls, Int bound);

/// Every P with entries in [-bound, bound] and det P = +-1, ordered by
/// largest absolute entry so that small conjugators come first.
std::vector<GL2Matrix> unimodular_box(Int bound);

/// Bounded brute-force search for P with pred(P A P^-1).
class ConjugatorSearch {
 public:
  explicit ConjugatorSearch(Int bound) : bound_(bound), box_(unimodular_box(bound)) {}

  Int bound() const noexcept { return bound_; }
  std::size_t candidates() const noexcept { return box_.size(); }

  /// First P in box order whose conjugate satisfies pred; nullopt is
  /// inconclusive, not a disproof.
  std::optional<GL2Matrix> find(const GL2Matrix& A, const std::function<bool(const GL2Matrix&)>& pred,
                                Execution exec = Execution::Serial) const;

 private:
  Int bound_;
  std::vector<GL2Matrix> box_;
};

/// P with P A P^-1 = B and entries within bound, if one exists there.
std::optional<GL2Matrix> brute_conjugate(const GL2Matrix& A, const GL2Matrix& B, Int bound,
                                         Execution exec = Execution::Serial);

/// [[-1,0],[n,-1]] for some n.
bool is_negative_shear(const GL2Matrix& M);

/// Tree four-point condition: of the three pairings' distance sums the two
/// largest agree. Throws DomainError unless all four share a parity class.
bool check_four_point(const std::array<Slope, 4>& s);

struct GridAgreement {
  std::size_t pairs = 0;
  std::size_t bfs_found = 0;
  std::size_t bfs_unknown = 0;
  std::size_t mismatches = 0;
  std::string first_mismatch;
};

/// Compares the closed-form distance with BFS on the curve complex cut to
/// |p|, |q| <= bfs_bound, for every unordered same-parity pair of slopes
/// with |p|, |q| <= grid_bound.
GridAgreement grid_distance_agreement(Int grid_bound, Int bfs_bound, Execution exec = Execution::Serial);

}  // namespace z2norm::oracle
