#include "z2norm/bundle.hpp"

#include <algorithm>
#include <sstream>

#include "z2norm/curve_complex.hpp"

namespace z2norm {

std::string to_string(H2Case c) {
  switch (c) {
    case H2Case::Transitive: return "transitive";
    case H2Case::Fixes10: return "fixes 1/0";
    case H2Case::Fixes01: return "fixes 0/1";
    case H2Case::Fixes11: return "fixes 1/1";
    case H2Case::IdentityMod2: return "identity mod 2";
  }
  return "?";
}

std::string to_string(GeometryClass g) {
  switch (g) {
    case GeometryClass::EuclideanPeriodic: return "Euclidean-periodic";
    case GeometryClass::Nil: return "Nil";
    case GeometryClass::SolAnosov: return "Sol-Anosov";
  }
  return "?";
}

bool H2Structure::contains(int j, int k) const {
  return std::find(valid_jk.begin(), valid_jk.end(), std::pair{j, k}) != valid_jk.end();
}

H2Structure h2_structure(const GL2Matrix& A) {
  using M = GL2Matrix::Mod2;  // (a, c, b, d)
  const M m = A.mod2();
  if (m == M{1, 0, 0, 1})
    return {H2Case::IdentityMod2, {{0, 0}, {1, 0}, {0, 1}, {1, 1}}, {"tau", "F_0/1", "F_1/0"}, true};
  if (m == M{1, 1, 0, 1}) return {H2Case::Fixes10, {{0, 0}, {1, 0}}, {"tau", "F_1/0"}};
  if (m == M{1, 0, 1, 1}) return {H2Case::Fixes01, {{0, 0}, {0, 1}}, {"tau", "F_0/1"}};
  if (m == M{0, 1, 1, 0}) return {H2Case::Fixes11, {{0, 0}, {1, 1}}, {"tau", "F_1/1"}};
  return {H2Case::Transitive, {{0, 0}}, {"tau"}};
}

namespace {

void require_bits(std::initializer_list<int> bits) {
  for (int x : bits)
    if (x != 0 && x != 1) throw DomainError("class coordinates must be 0 or 1");
}

std::string describe_valid(const H2Structure& s) {
  std::ostringstream os;
  os << "{";
  for (std::size_t i = 0; i < s.valid_jk.size(); ++i)
    os << (i ? ", " : "") << "(" << s.valid_jk[i].first << "," << s.valid_jk[i].second << ")";
  os << "}";
  return os.str();
}

std::string fiber_label(ParityClass c) { return "F_" + to_string(c); }

SurfaceDescription torus_fiber() {
  SurfaceDescription s;
  s.kind = SurfaceKind::TorusFiber;
  s.label = "tau";
  return s;
}

// F_{j/k}: c x I for an invariant curve c when A rotates the tree, otherwise
// Pi_{l+2} assembled along the geodesic from c to A c.
SurfaceDescription fiber_surface(const GL2Matrix& A, ParityClass cls, std::uint64_t l, const ReportOptions& opts) {
  if (l == 0) {
    const auto fixed = fixed_slope_in_class(A, cls);
    if (!fixed) throw std::logic_error("rotation without a fixed slope in class " + to_string(cls));
    const bool preserves = checked::add(checked::mul(A.a(), fixed->p()), checked::mul(A.c(), fixed->q())) == fixed->p() &&
                           checked::add(checked::mul(A.b(), fixed->p()), checked::mul(A.d(), fixed->q())) == fixed->q();
    SurfaceDescription s;
    s.kind = preserves ? SurfaceKind::Torus : SurfaceKind::KleinBottle;
    s.label = fiber_label(cls);
    if (!preserves) s.genus = 2;
    s.certificate = std::vector<Slope>{*fixed};
    return s;
  }
  const auto data = translation_length_orbit(A, cls, std::nullopt, opts.certificate_cap);
  std::optional<std::vector<Slope>> path;
  if (data.witness && l <= opts.certificate_cap) path = geodesic(*data.witness, mat_act(A, *data.witness));
  return non_orientable_from_path(fiber_label(cls), l, std::move(path), opts.certificate_cap);
}

}  // namespace

std::uint64_t z2_norm_bundle(const GL2Matrix& A, const BundleClass& cls) {
  require_bits({cls.t, cls.j, cls.k});
  const auto s = h2_structure(A);
  if (!s.contains(cls.j, cls.k))
    throw DomainError("class (t,j,k)=(" + std::to_string(cls.t) + "," + std::to_string(cls.j) + "," +
                      std::to_string(cls.k) + ") does not exist for " + A.to_string() + "; valid (j,k): " +
                      describe_valid(s));
  if (cls.j == 0 && cls.k == 0) return 0;
  const ExtNat l = translation_length_closed(A, parity_from_bits(cls.j, cls.k));
  if (l.is_infinite()) throw std::logic_error("valid class with infinite translation length");
  return l.value();
}

std::vector<BundleNormEntry> norm_table_bundle(const GL2Matrix& A, const ReportOptions& opts) {
  const auto s = h2_structure(A);
  std::vector<BundleNormEntry> table;
  for (const auto& [j, k] : s.valid_jk) {
    std::optional<SurfaceDescription> fiber;
    std::uint64_t norm = 0;
    if (j != 0 || k != 0) {
      norm = z2_norm_bundle(A, {0, j, k});
      fiber = fiber_surface(A, parity_from_bits(j, k), norm, opts);
    }
    for (int t : {0, 1}) {
      BundleNormEntry entry{{t, j, k}, norm, {}, s.identifies_11 && j == 1 && k == 1};
      if (!fiber) {
        if (t == 1) entry.realizer = torus_fiber();
      } else if (t == 0) {
        entry.realizer = *fiber;
      } else {
        entry.realizer.kind = SurfaceKind::Sum;
        entry.realizer.label = fiber->label + " + tau";
        entry.realizer.components = {*fiber, torus_fiber()};
      }
      table.push_back(std::move(entry));
    }
  }
  return table;
}

std::vector<std::uint64_t> norm_multiset_bundle(const GL2Matrix& A) {
  std::vector<std::uint64_t> norms;
  for (const auto& [j, k] : h2_structure(A).valid_jk)
    for (int t : {0, 1}) norms.push_back(z2_norm_bundle(A, {t, j, k}));
  std::sort(norms.begin(), norms.end());
  return norms;
}

ExtNat mog_bundle(const GL2Matrix& A) {
  ExtNat best = ExtNat::infinity();
  for (const auto& l : translation_lengths(A))
    if (l.is_finite() && l.value() % 2 == 1) best = std::min(best, l);
  return best.is_finite() ? best + ExtNat(2) : best;
}

std::uint64_t meg_bundle(const GL2Matrix& A) {
  if (A.det() == -1) return 2;
  return A.trace() == -2 ? 2 : 4;
}

ExtNat order(const GL2Matrix& A) {
  // Cayley-Hamilton: A^2 = tr(A) A - det(A) I pins the order from (det, tr).
  const Int tr = A.trace();
  if (A.det() == -1) return tr == 0 ? ExtNat(2) : ExtNat::infinity();
  switch (tr) {
    case 2: return A == GL2Matrix::identity() ? ExtNat(1) : ExtNat::infinity();
    case -2: return A == -GL2Matrix::identity() ? ExtNat(2) : ExtNat::infinity();
    case 1: return 6;
    case 0: return 4;
    case -1: return 3;
    default: return ExtNat::infinity();
  }
}

GeometryClass classify_geometry(const GL2Matrix& A) {
  if (order(A).is_finite()) return GeometryClass::EuclideanPeriodic;
  if (A.det() == 1 && (A.trace() == 2 || A.trace() == -2)) return GeometryClass::Nil;
  return GeometryClass::SolAnosov;
}

std::optional<int> periodic_class(const GL2Matrix& A) {
  const ExtNat k = order(A);
  if (k.is_infinite()) return std::nullopt;
  switch (k.value()) {
    case 1: return 1;
    case 2:
      if (A.det() == 1) return 2;
      return A.mod2() == GL2Matrix::Mod2{1, 0, 0, 1} ? 3 : 4;
    case 3: return 5;
    case 4: return 6;
    case 6: return 7;
    default: return std::nullopt;
  }
}

GL2Matrix periodic_representative(int k) {
  switch (k) {
    case 1: return GL2Matrix::from_rows(1, 0, 0, 1);
    case 2: return GL2Matrix::from_rows(-1, 0, 0, -1);
    case 3: return GL2Matrix::from_rows(1, 0, 0, -1);
    case 4: return GL2Matrix::from_rows(1, 0, 1, -1);
    case 5: return GL2Matrix::from_rows(0, 1, -1, -1);
    case 6: return GL2Matrix::from_rows(0, -1, 1, 0);
    case 7: return GL2Matrix::from_rows(0, 1, -1, 1);
    default: throw DomainError("periodic representatives are A1..A7");
  }
}

}  // namespace z2norm
