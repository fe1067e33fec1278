#pragma once

// Random PL systems and a floating-point sign-scan oracle that shares no code
// with the exact scanner.

#include <array>
#include <bit>
#include <cmath>
#include <random>
#include <vector>

#include "kbraid/dynamics.hpp"

namespace testsys {

using kbraid::Rational;

inline Rational random_rational(std::mt19937_64& rng, long range, long den) {
  Rational r(static_cast<long>(rng() % static_cast<unsigned long>(2 * range * den + 1)) - range * den, den);
  r.canonicalize();
  return r;
}

// n particles, breakpoints at multiples of 1/segments with random coordinates in [-2, 2].
inline kbraid::DynamicalSystem random_system(std::mt19937_64& rng, int n, int segments) {
  for (;;) {
    std::vector<kbraid::ParticleTrajectory> particles;
    for (int p = 0; p < n; ++p) {
      std::vector<kbraid::Breakpoint> bps;
      for (int s = 0; s <= segments; ++s) {
        bps.push_back({Rational(s, segments), {random_rational(rng, 2, 97), random_rational(rng, 2, 89)}});
      }
      particles.emplace_back(std::move(bps));
    }
    try {
      return kbraid::DynamicalSystem(std::move(particles));
    } catch (const kbraid::Error&) {
    }
  }
}

struct FloatEvent {
  std::uint64_t mask;
  double lo;
  double hi;
};

inline std::array<double, 2> float_position(const kbraid::ParticleTrajectory& p, double t) {
  const auto& bps = p.breakpoints();
  for (std::size_t i = 1; i < bps.size(); ++i) {
    const double t0 = bps[i - 1].time.get_d();
    const double t1 = bps[i].time.get_d();
    if (t <= t1 || i + 1 == bps.size()) {
      const double f = (t - t0) / (t1 - t0);
      const auto& a = bps[i - 1].position;
      const auto& b = bps[i].position;
      return {a.x.get_d() + f * (b.x.get_d() - a.x.get_d()), a.y.get_d() + f * (b.y.get_d() - a.y.get_d())};
    }
  }
  return {bps.back().position.x.get_d(), bps.back().position.y.get_d()};
}

inline double float_predicate(const std::vector<std::array<double, 2>>& pts, bool concyclic) {
  if (!concyclic) {
    const auto& a = pts[0];
    const auto& b = pts[1];
    const auto& c = pts[2];
    return (b[0] - a[0]) * (c[1] - a[1]) - (c[0] - a[0]) * (b[1] - a[1]);
  }
  double m[3][3];
  const auto& d = pts[3];
  for (int i = 0; i < 3; ++i) {
    const double dx = pts[i][0] - d[0];
    const double dy = pts[i][1] - d[1];
    m[i][0] = dx * dx + dy * dy;
    m[i][1] = dx;
    m[i][2] = dy;
  }
  return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
         m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
}

// Sign changes of the predicate between consecutive samples t = i / samples.
inline std::vector<FloatEvent> float_scan(const kbraid::DynamicalSystem& system, int arity, int samples) {
  const int n = system.particle_count();
  std::vector<std::vector<std::array<double, 2>>> track(static_cast<std::size_t>(samples) + 1);
  for (int s = 0; s <= samples; ++s) {
    const double t = static_cast<double>(s) / samples;
    for (const auto& p : system.particles()) track[static_cast<std::size_t>(s)].push_back(float_position(p, t));
  }
  std::vector<FloatEvent> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    if (std::popcount(mask) != arity) continue;
    std::vector<int> ids;
    for (int i = 0; i < n; ++i) {
      if ((mask >> i) & 1U) ids.push_back(i);
    }
    double prev = 0;
    for (int s = 0; s <= samples; ++s) {
      std::vector<std::array<double, 2>> pts;
      for (int i : ids) pts.push_back(track[static_cast<std::size_t>(s)][static_cast<std::size_t>(i)]);
      const double v = float_predicate(pts, arity == 4);
      if (s > 0 && ((prev < 0 && v > 0) || (prev > 0 && v < 0))) {
        out.push_back({mask, static_cast<double>(s - 1) / samples, static_cast<double>(s) / samples});
      }
      if (v != 0) prev = v;
    }
  }
  return out;
}

}  // namespace testsys
