#include "z2norm/semibundle.hpp"

#include <algorithm>

#include "z2norm/arith.hpp"
#include "z2norm/curve_complex.hpp"

namespace z2norm {

namespace {

bool b_even(const GL2Matrix& A) { return mod2(A.b()) == 0; }

SurfaceDescription klein_bottle(std::string label) {
  SurfaceDescription s;
  s.kind = SurfaceKind::KleinBottle;
  s.label = std::move(label);
  s.genus = 2;
  return s;
}

// Two Moebius bands in the I-bundle pieces joined through T^2 x I by a
// surface bounded by a 1/0-curve and an a/b-curve.
SurfaceDescription f_ba_surface(const GL2Matrix& A, const ReportOptions& opts) {
  if (A.b() == 0) return klein_bottle("F_b/a");
  const std::uint64_t n = bredon_wood(A.b(), A.a()).value();
  std::optional<std::vector<Slope>> path;
  if (n <= opts.certificate_cap) path = geodesic(Slope::infinity(), Slope::make(A.a(), A.b()));
  return non_orientable_from_path("F_b/a", n, std::move(path), opts.certificate_cap);
}

}  // namespace

SemiH2Structure h2_structure_semi(const GL2Matrix& A) {
  if (b_even(A)) return {true, {"K1", "K2", "F_b/a"}};
  return {false, {"K1", "K2"}};
}

std::uint64_t z2_norm_semi(const GL2Matrix& A, const SemiBundleClass& cls) {
  for (int x : {cls.e1, cls.e2, cls.phi})
    if (x != 0 && x != 1) throw DomainError("class coordinates must be 0 or 1");
  if (cls.phi == 1 && !b_even(A))
    throw DomainError("[F_b/a] does not exist for " + A.to_string() + " (b is odd); valid classes have phi = 0");
  if (cls.phi == 0) return 0;
  if (A.b() == 0) {
    if (A.a() != 1 && A.a() != -1) throw std::logic_error("b = 0 forces a = +-1");
    return 0;
  }
  return bredon_wood(A.b(), A.a()).value();
}

std::vector<SemiNormEntry> norm_table_semi(const GL2Matrix& A, const ReportOptions& opts) {
  const auto structure = h2_structure_semi(A);
  std::optional<SurfaceDescription> f_ba;
  if (structure.b_even) f_ba = f_ba_surface(A, opts);

  std::vector<SemiNormEntry> table;
  for (int phi = 0; phi <= (structure.b_even ? 1 : 0); ++phi) {
    for (int e1 : {0, 1}) {
      for (int e2 : {0, 1}) {
        std::vector<SurfaceDescription> parts;
        if (e1) parts.push_back(klein_bottle("K1"));
        if (e2) parts.push_back(klein_bottle("K2"));
        if (phi) parts.push_back(*f_ba);

        SemiNormEntry entry{{e1, e2, phi}, z2_norm_semi(A, {e1, e2, phi}), {}};
        if (parts.size() == 1) {
          entry.realizer = parts.front();
        } else if (parts.size() > 1) {
          entry.realizer.kind = SurfaceKind::Sum;
          for (const auto& p : parts) entry.realizer.label += (entry.realizer.label.empty() ? "" : " + ") + p.label;
          entry.realizer.components = std::move(parts);
        }
        table.push_back(std::move(entry));
      }
    }
  }
  return table;
}

std::vector<std::uint64_t> norm_multiset_semi(const GL2Matrix& A) {
  std::vector<std::uint64_t> norms;
  const int phi_max = b_even(A) ? 1 : 0;
  for (int phi = 0; phi <= phi_max; ++phi)
    for (int e1 : {0, 1})
      for (int e2 : {0, 1}) norms.push_back(z2_norm_semi(A, {e1, e2, phi}));
  std::sort(norms.begin(), norms.end());
  return norms;
}

ExtNat mog_semi(const GL2Matrix& A) {
  if (floor_mod(A.b(), 4) != 2) return ExtNat::infinity();
  return bredon_wood(A.b(), A.a()) + ExtNat(2);
}

std::uint64_t meg_semi(const GL2Matrix& /*A*/) { return 2; }

}  // namespace z2norm
