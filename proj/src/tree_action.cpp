#include "z2norm/tree_action.hpp"

#include "z2norm/arith.hpp"
#include "z2norm/curve_complex.hpp"

namespace z2norm {

std::string to_string(ActionType t) {
  switch (t) {
    case ActionType::Rotation: return "rotation";
    case ActionType::Inversion: return "inversion";
    case ActionType::Translation: return "translation";
    case ActionType::NotFixed: return "not-fixed";
  }
  return "?";
}

bool ParityPermutation::is_identity() const {
  for (auto c : kParityClasses)
    if (!fixes(c)) return false;
  return true;
}

ParityPermutation parity_permutation(const GL2Matrix& A) {
  ParityPermutation perm{};
  for (auto c : kParityClasses) perm.image[static_cast<std::size_t>(c)] = parity_of(mat_act(A, base_vertex(c)));
  return perm;
}

TranslationData translation_length_orbit(const GL2Matrix& A, ParityClass cls, std::optional<Slope> base,
                                         std::size_t witness_cap) {
  if (!parity_permutation(A).fixes(cls)) return {cls, ExtNat::infinity(), ActionType::NotFixed, std::nullopt};

  const Slope v = base.value_or(base_vertex(cls));
  if (parity_of(v) != cls) throw DomainError("base vertex " + v.to_string() + " is not in class " + to_string(cls));
  const Slope fv = mat_act(A, v);
  const Slope ffv = mat_act(A, fv);
  const std::uint64_t d1 = distance(v, fv).value();

  TranslationData out{cls, 0, ActionType::Rotation, std::nullopt};
  if (ffv != v) {
    out.l = distance(v, ffv) - ExtNat(d1);
    if (out.l.value() > 0) out.type = ActionType::Translation;
  } else if (d1 % 2 == 1) {
    out.l = 1;
    out.type = ActionType::Inversion;
  }

  // The projection of v onto the axis (or fixed set, or inverted edge) sits
  // (d1 - l)/2 steps along the geodesic from v to f(v).
  if (d1 <= witness_cap) {
    const auto path = geodesic(v, fv);
    const std::size_t mid = (d1 - out.l.value()) / 2;
    auto realizes = [&](const Slope& w) { return distance(w, mat_act(A, w)) == out.l; };
    if (realizes(path[mid])) {
      out.witness = path[mid];
    } else {
      for (const auto& w : path) {
        if (realizes(w)) {
          out.witness = w;
          break;
        }
      }
    }
  }
  return out;
}

namespace {

// Shared shape of the three closed forms: when `twisted` vanishes f^2 fixes
// the base vertex and the length is the parity of step/2; otherwise it is
// d(v, f^2 v) - d(v, f v) = N(twisted, twisted_partner) - N(step, step_partner).
ExtNat closed_form(Int twisted, Int twisted_partner, Int step, Int step_partner) {
  if (twisted == 0) return static_cast<std::uint64_t>(mod2(step / 2));
  return bredon_wood(twisted, twisted_partner) - bredon_wood(step, step_partner);
}

}  // namespace

ExtNat translation_length_closed(const GL2Matrix& A, ParityClass cls) {
  using checked::add;
  using checked::mul;
  using checked::sub;
  const Int a = A.a(), b = A.b(), c = A.c(), d = A.d();
  switch (cls) {
    case ParityClass::Inf:
      if (mod2(a) != 1 || mod2(b) != 0) return ExtNat::infinity();
      return closed_form(mul(b, add(a, d)), add(mul(a, a), mul(b, c)), b, a);
    case ParityClass::Zero:
      if (mod2(c) != 0 || mod2(d) != 1) return ExtNat::infinity();
      return closed_form(mul(c, add(a, d)), add(mul(b, c), mul(d, d)), c, d);
    case ParityClass::One: {
      const Int ac = add(a, c), bd = add(b, d);
      if (mod2(ac) != 1 || mod2(bd) != 1) return ExtNat::infinity();
      const Int twisted = add(mul(sub(b, a), ac), mul(sub(d, c), bd));
      return closed_form(twisted, add(mul(a, ac), mul(c, bd)), sub(bd, ac), ac);
    }
  }
  return ExtNat::infinity();
}

std::array<ExtNat, 3> translation_lengths(const GL2Matrix& A) {
  return {translation_length_closed(A, ParityClass::Inf), translation_length_closed(A, ParityClass::Zero),
          translation_length_closed(A, ParityClass::One)};
}

std::optional<Slope> fixed_slope_in_class(const GL2Matrix& A, ParityClass cls) {
  for (Int sign : {Int{1}, Int{-1}}) {
    const Int m11 = checked::sub(A.a(), sign), m12 = A.c(), m21 = A.b(), m22 = checked::sub(A.d(), sign);
    if (checked::cross(m11, m22, m12, m21) != 0) continue;
    std::optional<Slope> v;
    if (m11 == 0 && m12 == 0 && m21 == 0 && m22 == 0) {
      v = base_vertex(cls);
    } else {
      Int x = checked::neg(m12), y = m11;
      if (x == 0 && y == 0) {
        x = m22;
        y = checked::neg(m21);
      }
      const Int g = gcd(x, y);
      v = Slope::make(x / g, y / g);
    }
    if (parity_of(*v) == cls) return v;
  }
  return std::nullopt;
}

}  // namespace z2norm
