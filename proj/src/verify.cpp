#include "z2norm/verify.hpp"

#include <algorithm>
#include <chrono>
#include <sstream>

#include "z2norm/arith.hpp"
#include "z2norm/bundle.hpp"
#include "z2norm/curve_complex.hpp"
#include "z2norm/semibundle.hpp"
#include "z2norm/tree_action.hpp"

namespace z2norm::verify {

Config Config::quick() {
  Config c;
  c.grid_bound = 10;
  c.grid_bfs_bound = 20;
  c.parity_max_p = 200;
  c.parity_q_per_p = 3;
  c.lens_max_p = 60;
  c.orbit_matrices = 200;
  c.semi_matrices = 100;
  c.conj_entry_bound = 6;
  c.conj_search_bound = 10;
  c.conj_negatives = 50;
  c.geodesic_pairs = 100;
  c.invariance_pairs = 100;
  c.slope_tuples = 200;
  return c;
}

namespace {

// Counts checks and keeps the first failure for the report line.
class Tally {
 public:
  void expect(bool ok, const std::string& what) {
    ++checks_;
    if (ok) return;
    if (failures_++ == 0) first_ = what;
  }
  bool ok() const { return failures_ == 0 && checks_ > 0; }
  std::string summary(const std::string& extra = {}) const {
    std::ostringstream os;
    os << checks_ << " checks, " << failures_ << " failures";
    if (!extra.empty()) os << "; " << extra;
    if (failures_ > 0) os << "; first: " << first_;
    return os.str();
  }

 private:
  std::size_t checks_ = 0;
  std::size_t failures_ = 0;
  std::string first_;
};

template <typename F>
Result timed(int id, std::string name, F&& body) {
  const auto start = std::chrono::steady_clock::now();
  Result r{id, std::move(name), false, {}};
  try {
    body(r);
  } catch (const std::exception& e) {
    r.passed = false;
    r.detail = std::string("exception: ") + e.what();
  }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return r;
}

std::string show(const GL2Matrix& A) { return "[" + A.to_string() + "]"; }

}  // namespace

Result oracle_equivalence(const Config& cfg, Execution exec) {
  return timed(1, "oracle equivalence: closed-form distance vs BFS", [&](Result& r) {
    const auto start = std::chrono::steady_clock::now();
    const auto g = oracle::grid_distance_agreement(cfg.grid_bound, cfg.grid_bfs_bound, exec);
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::ostringstream os;
    os << g.pairs << " same-parity pairs in |p|,|q|<=" << cfg.grid_bound << ", BFS (bound " << cfg.grid_bfs_bound
       << ") found " << g.bfs_found << ", unknown " << g.bfs_unknown << ", mismatches " << g.mismatches << ", "
       << secs << " s";
    if (g.mismatches) os << "; first: " << g.first_mismatch;
    r.detail = os.str();
    r.passed = g.mismatches == 0 && g.bfs_found > 0 && secs < cfg.grid_time_limit_seconds;
  });
}

Result bredon_wood_parity(const Config& cfg) {
  return timed(2, "Bredon-Wood parity N(p,q) = p/2 mod 2", [&](Result& r) {
    oracle::Rng rng(cfg.seed, 2);
    Tally t;
    for (Int p = -cfg.parity_max_p; p <= cfg.parity_max_p; p += 2) {
      if (p == 0) continue;
      for (std::size_t i = 0; i < cfg.parity_q_per_p;) {
        const Int q = rng.uniform(-1000000, 1000000);
        if (!coprime(p, q)) continue;
        ++i;
        const auto n = bredon_wood(p, q);
        t.expect(n.is_finite() && static_cast<int>(n.value() % 2) == mod2(p / 2),
                 "N(" + std::to_string(p) + "," + std::to_string(q) + ")=" + n.to_string());
      }
    }
    r.passed = t.ok();
    r.detail = t.summary();
  });
}

Result lens_invariance(const Config& cfg) {
  return timed(3, "lens invariance of N(p,q)", [&](Result& r) {
    Tally t;
    for (Int p = 2; p <= cfg.lens_max_p; p += 2) {
      for (Int q = 1; q < p; ++q) {
        if (!coprime(p, q)) continue;
        const Int q_inv = floor_mod(ext_gcd(q, p).x, p);
        const auto n = bredon_wood(p, q);
        const bool same = bredon_wood(p, q + p) == n && bredon_wood(p, -q) == n && bredon_wood(p, q_inv) == n;
        t.expect(same, "p=" + std::to_string(p) + " q=" + std::to_string(q));
      }
    }
    r.passed = t.ok();
    r.detail = t.summary();
  });
}

Result closed_vs_orbit(const Config& cfg) {
  return timed(4, "translation length: closed form vs orbit", [&](Result& r) {
    oracle::Rng rng(cfg.seed, 4);
    Tally t;
    std::size_t finite = 0;
    for (std::size_t i = 0; i < cfg.orbit_matrices; ++i) {
      const auto A = oracle::random_glz(rng, static_cast<std::size_t>(rng.uniform(0, static_cast<Int>(cfg.orbit_max_word))));
      for (auto cls : kParityClasses) {
        const ExtNat closed = translation_length_closed(A, cls);
        const auto orbit = translation_length_orbit(A, cls, std::nullopt, 0);
        t.expect(closed == orbit.l, show(A) + " class " + to_string(cls));
        if (closed.is_infinite()) continue;
        ++finite;
        for (std::size_t k = 0; k < cfg.orbit_alt_vertices; ++k) {
          const Slope v = oracle::random_slope_in_class(rng, cls, cfg.orbit_vertex_bound);
          t.expect(translation_length_orbit(A, cls, v, 0).l == closed,
                   show(A) + " class " + to_string(cls) + " base " + v.to_string());
        }
      }
    }
    r.passed = t.ok();
    r.detail = t.summary(std::to_string(finite) + " finite (matrix, class) cases");
  });
}

Result periodic_table(const Config& cfg) {
  return timed(5, "periodic matrices A1..A7", [&](Result& r) {
    oracle::Rng rng(cfg.seed, 5);
    Tally t;
    for (int k = 1; k <= 7; ++k) {
      const auto Ak = periodic_representative(k);
      const bool order_two = k == 2 || k == 3 || k == 4;
      const bool mog_three = k == 3 || k == 6;
      // The representative itself, then random conjugates of it.
      for (int trial = 0; trial <= 20; ++trial) {
        GL2Matrix A = Ak;
        if (trial > 0) {
          const auto P = oracle::random_glz(rng, static_cast<std::size_t>(rng.uniform(1, 8)));
          A = P * Ak * P.inverse();
        }
        const std::string tag = "A" + std::to_string(k) + " as " + show(A);
        t.expect(periodic_class(A) == k, tag + " class");
        t.expect(meg_bundle(A) == (order_two ? 2U : 4U), tag + " meg");
        t.expect(mog_bundle(A) == (mog_three ? ExtNat(3) : ExtNat::infinity()), tag + " mog");
      }
    }
    r.passed = t.ok();
    r.detail = t.summary();
  });
}

Result nil_family(const Config& cfg) {
  return timed(6, "Nil family [[+-1,0],[n,+-1]]", [&](Result& r) {
    Tally t;
    for (Int n = 1; n <= cfg.nil_max_n; ++n) {
      const ExtNat expected_mog = floor_mod(n, 4) == 2 ? ExtNat(static_cast<std::uint64_t>(n / 2 + 2)) : ExtNat::infinity();
      const auto B = GL2Matrix::from_rows(1, 0, n, 1);
      const auto Bp = GL2Matrix::from_rows(-1, 0, n, -1);
      t.expect(meg_bundle(B) == 4 && mog_bundle(B) == expected_mog, "B_" + std::to_string(n));
      t.expect(meg_bundle(Bp) == 2 && mog_bundle(Bp) == expected_mog, "B'_" + std::to_string(n));
      t.expect(classify_geometry(B) == GeometryClass::Nil && classify_geometry(Bp) == GeometryClass::Nil,
               "geometry n=" + std::to_string(n));
    }
    r.passed = t.ok();
    r.detail = t.summary();
  });
}

Result semibundle_theorems(const Config& cfg) {
  return timed(7, "semi-bundle norms, mog, meg", [&](Result& r) {
    oracle::Rng rng(cfg.seed, 7);
    Tally t;
    std::vector<GL2Matrix> sample = {GL2Matrix::identity(), GL2Matrix::from_rows(1, 0, 2, 1),
                                     GL2Matrix::from_rows(1, 0, 4, 1), GL2Matrix::from_rows(0, 1, 1, 0),
                                     GL2Matrix::from_rows(3, 1, 8, 3), GL2Matrix::from_rows(-1, 0, 0, 1)};
    for (std::size_t i = 0; i < cfg.semi_matrices; ++i)
      sample.push_back(oracle::random_glz(rng, static_cast<std::size_t>(rng.uniform(0, static_cast<Int>(cfg.semi_max_word)))));
    std::size_t odd_or_zero = 0, two_mod_four = 0, zero_mod_four = 0;
    for (const auto& A : sample) {
      t.expect(meg_semi(A) == 2, show(A) + " meg");
      const auto norms = norm_multiset_semi(A);
      t.expect(norms.size() == h2_structure_semi(A).order(), show(A) + " H2 order");
      const Int b = A.b();
      if (mod2(b) == 1 || b == 0) {
        ++odd_or_zero;
        t.expect(std::all_of(norms.begin(), norms.end(), [](auto n) { return n == 0; }), show(A) + " zero norms");
        t.expect(mog_semi(A).is_infinite(), show(A) + " mog inf");
      } else if (floor_mod(b, 4) == 2) {
        ++two_mod_four;
        const auto N = bredon_wood(b, A.a()).value();
        t.expect(N % 2 == 1, show(A) + " N odd");
        t.expect(norms.back() == N && std::count(norms.begin(), norms.end(), N) == 4, show(A) + " norms");
        t.expect(mog_semi(A) == ExtNat(N + 2), show(A) + " mog");
      } else {
        ++zero_mod_four;
        t.expect(mog_semi(A).is_infinite(), show(A) + " mog inf (b = 0 mod 4)");
        t.expect(bredon_wood(b, A.a()).value() % 2 == 0, show(A) + " N even");
      }
    }
    r.passed = t.ok();
    r.detail = t.summary(std::to_string(odd_or_zero) + " b odd/zero, " + std::to_string(two_mod_four) +
                         " b=2 mod 4, " + std::to_string(zero_mod_four) + " b=0 mod 4 (nonzero)");
  });
}

Result conjugacy_criterion(const Config& cfg, Execution exec) {
  return timed(8, "meg criterion: trace -2 <=> conjugate to [[-1,0],[n,-1]]", [&](Result& r) {
    const oracle::ConjugatorSearch search(cfg.conj_search_bound);
    Tally t;
    std::size_t positives = 0;
    const Int B = cfg.conj_entry_bound;
    for (Int a = -B; a <= B; ++a) {
      const Int d = -2 - a;
      if (d < -B || d > B) continue;
      const Int bc = a * d - 1;
      for (Int b = -B; b <= B; ++b) {
        for (Int c = -B; c <= B; ++c) {
          if (b * c != bc) continue;
          const auto A = GL2Matrix::from_rows(a, c, b, d);
          ++positives;
          t.expect(search.find(A, oracle::is_negative_shear, exec).has_value(), show(A) + " not reached");
        }
      }
    }
    oracle::Rng rng(cfg.seed, 8);
    std::size_t negatives = 0;
    while (negatives < cfg.conj_negatives) {
      const auto A = oracle::random_glz(rng, static_cast<std::size_t>(rng.uniform(1, 12)));
      if (A.det() != 1 || A.trace() == -2) continue;
      ++negatives;
      t.expect(!search.find(A, oracle::is_negative_shear, exec).has_value(), show(A) + " reached the form");
    }
    r.passed = t.ok();
    r.detail = t.summary(std::to_string(positives) + " trace -2 matrices, " + std::to_string(negatives) +
                         " others, " + std::to_string(search.candidates()) + " conjugators");
  });
}

Result geodesic_soundness(const Config& cfg) {
  return timed(9, "geodesic certificates", [&](Result& r) {
    oracle::Rng rng(cfg.seed, 9);
    Tally t;
    std::size_t longest = 0;
    for (std::size_t i = 0; i < cfg.geodesic_pairs; ++i) {
      const auto cls = kParityClasses[static_cast<std::size_t>(rng.uniform(0, 2))];
      const Slope u = oracle::random_slope_in_class(rng, cls, cfg.geodesic_bound);
      const Slope v = oracle::random_slope_in_class(rng, cls, cfg.geodesic_bound);
      const auto path = geodesic(u, v);
      const auto d = distance(u, v).value();
      longest = std::max<std::size_t>(longest, d);
      const std::string tag = u.to_string() + " -> " + v.to_string();
      t.expect(path.size() == d + 1, tag + " length");
      t.expect(path.front() == u && path.back() == v, tag + " endpoints");
      for (std::size_t k = 0; k + 1 < path.size(); ++k)
        t.expect(intersection_number(path[k], path[k + 1]) == 2, tag + " step " + std::to_string(k));
    }
    r.passed = t.ok();
    r.detail = t.summary("longest " + std::to_string(longest) + " edges");
  });
}

Result invariance_suite(const Config& cfg) {
  return timed(10, "conjugation, inverse, isometry and four-point invariance", [&](Result& r) {
    oracle::Rng rng(cfg.seed, 10);
    Tally t;
    for (std::size_t i = 0; i < cfg.invariance_pairs; ++i) {
      const auto A = oracle::random_glz(rng, static_cast<std::size_t>(rng.uniform(0, 12)));
      const auto P = oracle::random_glz(rng, static_cast<std::size_t>(rng.uniform(0, static_cast<Int>(cfg.invariance_conjugator_word))));
      const auto C = P * A * P.inverse();
      const auto Ai = A.inverse();
      const std::string tag = show(A) + " by " + show(P);
      t.expect(norm_multiset_bundle(A) == norm_multiset_bundle(C), tag + " norms");
      t.expect(mog_bundle(A) == mog_bundle(C), tag + " mog");
      t.expect(meg_bundle(A) == meg_bundle(C), tag + " meg");
      t.expect(classify_geometry(A) == classify_geometry(C), tag + " geometry");
      t.expect(order(A) == order(C), tag + " order");
      t.expect(norm_multiset_bundle(A) == norm_multiset_bundle(Ai), show(A) + " inverse norms");
      t.expect(mog_bundle(A) == mog_bundle(Ai) && meg_bundle(A) == meg_bundle(Ai), show(A) + " inverse mog/meg");
    }
    for (std::size_t i = 0; i < cfg.slope_tuples; ++i) {
      const auto cls = kParityClasses[static_cast<std::size_t>(rng.uniform(0, 2))];
      std::array<Slope, 4> s = {Slope::zero(), Slope::zero(), Slope::zero(), Slope::zero()};
      for (auto& v : s) v = oracle::random_slope_in_class(rng, cls, cfg.slope_tuple_bound);
      const auto A = oracle::random_glz(rng, static_cast<std::size_t>(rng.uniform(0, 8)));
      const std::string tag = s[0].to_string() + "," + s[1].to_string() + " under " + show(A);
      t.expect(distance(mat_act(A, s[0]), mat_act(A, s[1])) == distance(s[0], s[1]), tag + " isometry");
      t.expect(intersection_number(mat_act(A, s[0]), mat_act(A, s[1])) == intersection_number(s[0], s[1]),
               tag + " intersection");
      t.expect(oracle::check_four_point(s), tag + " four-point");
    }
    r.passed = t.ok();
    r.detail = t.summary();
  });
}

std::string format(const Result& r) {
  std::ostringstream os;
  os << (r.passed ? "[PASS] " : "[FAIL] ") << "AC" << r.id << " " << r.name << " -- " << r.detail << " ("
     << r.seconds << " s)";
  return os.str();
}

std::vector<Result> run_all(const Config& cfg, Execution exec, std::ostream& log) {
  std::vector<Result> results;
  auto record = [&](Result r) {
    log << format(r) << '\n' << std::flush;
    results.push_back(std::move(r));
  };
  record(oracle_equivalence(cfg, exec));
  record(bredon_wood_parity(cfg));
  record(lens_invariance(cfg));
  record(closed_vs_orbit(cfg));
  record(periodic_table(cfg));
  record(nil_family(cfg));
  record(semibundle_theorems(cfg));
  record(conjugacy_criterion(cfg, exec));
  record(geodesic_soundness(cfg));
  record(invariance_suite(cfg));
  return results;
}

}  // namespace z2norm::verify
