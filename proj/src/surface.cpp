#include "z2norm/surface.hpp"

namespace z2norm {

std::string to_string(SurfaceKind k) {
  switch (k) {
    case SurfaceKind::Empty: return "empty";
    case SurfaceKind::TorusFiber: return "torus fiber";
    case SurfaceKind::Torus: return "torus";
    case SurfaceKind::KleinBottle: return "Klein bottle";
    case SurfaceKind::NonOrientable: return "non-orientable";
    case SurfaceKind::Sum: return "sum";
  }
  return "?";
}

std::uint64_t z2_norm_of(const SurfaceDescription& s) {
  switch (s.kind) {
    case SurfaceKind::NonOrientable: return s.genus.value_or(2) > 2 ? *s.genus - 2 : 0;
    case SurfaceKind::Sum: {
      std::uint64_t total = 0;
      for (const auto& part : s.components) total += z2_norm_of(part);
      return total;
    }
    default: return 0;
  }
}

SurfaceDescription non_orientable_from_path(std::string label, std::uint64_t edges,
                                            std::optional<std::vector<Slope>> path, std::size_t cap) {
  SurfaceDescription s;
  s.kind = SurfaceKind::NonOrientable;
  s.label = std::move(label);
  s.genus = edges + 2;
  if (path && edges <= cap)
    s.certificate = std::move(path);
  else
    s.elided = true;
  return s;
}

}  // namespace z2norm
