#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <string>

#include "z2norm/ext_nat.hpp"
#include "z2norm/matrix.hpp"
#include "z2norm/slope.hpp"

namespace z2norm {

/// Serre's trichotomy for a tree automorphism, plus the case where the
/// matrix moves the component to another one.
enum class ActionType { Rotation, Inversion, Translation, NotFixed };

std::string to_string(ActionType t);

/// Permutation of {1/0, 0/1, 1/1} induced by A mod 2.
struct ParityPermutation {
  std::array<ParityClass, 3> image;  // indexed by static_cast<size_t>(ParityClass)

  ParityClass operator()(ParityClass c) const { return image[static_cast<std::size_t>(c)]; }
  bool fixes(ParityClass c) const { return (*this)(c) == c; }
  bool is_identity() const;
};

ParityPermutation parity_permutation(const GL2Matrix& A);

struct TranslationData {
  ParityClass cls;
  ExtNat l;  // infinity iff type == NotFixed
  ActionType type;
  std::optional<Slope> witness;  // vertex with d(w, A w) == l, when found
};

/// Witness search walks a geodesic of this many edges at most.
inline constexpr std::size_t kDefaultWitnessCap = 10000;

/// Translation length from the orbit of a base vertex v:
/// d(v, f^2 v) - d(v, f v) when f^2 v != v, otherwise d(v, f v) mod 2.
/// Defaults v to the base vertex of cls. Throws DomainError if v is not in cls.
TranslationData translation_length_orbit(const GL2Matrix& A, ParityClass cls,
                                         std::optional<Slope> base = std::nullopt,
                                         std::size_t witness_cap = kDefaultWitnessCap);

/// Translation length from the closed-form case table in the matrix entries.
ExtNat translation_length_closed(const GL2Matrix& A, ParityClass cls);

/// Closed-form lengths for all three classes, indexed like kParityClasses.
std::array<ExtNat, 3> translation_lengths(const GL2Matrix& A);

/// A slope in cls fixed by A (A v = +-v), if one exists. Prefers the
/// orientation-preserving one.
std::optional<Slope> fixed_slope_in_class(const GL2Matrix& A, ParityClass cls);

}  // namespace z2norm
