#include "kbraid/dynamics.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <sstream>

namespace kbraid {

namespace {

std::string point_string(const RationalPoint& p) { return p.x.get_str() + "," + p.y.get_str(); }

bool overlaps(const IsolatingInterval& a, const IsolatingInterval& b) { return a.lo < b.hi && b.lo < a.hi; }

// Determinant of a square matrix of polynomials by cofactor expansion.
Polynomial determinant(const std::vector<std::vector<Polynomial>>& m) {
  const std::size_t size = m.size();
  if (size == 1) return m[0][0];
  if (size == 2) return m[0][0] * m[1][1] - m[0][1] * m[1][0];
  Polynomial acc;
  for (std::size_t col = 0; col < size; ++col) {
    std::vector<std::vector<Polynomial>> minor;
    for (std::size_t row = 1; row < size; ++row) {
      std::vector<Polynomial> r;
      for (std::size_t c = 0; c < size; ++c) {
        if (c != col) r.push_back(m[row][c]);
      }
      minor.push_back(std::move(r));
    }
    const Polynomial term = m[0][col] * determinant(minor);
    acc = (col % 2 == 0) ? acc + term : acc - term;
  }
  return acc;
}

}  // namespace

ParticleTrajectory::ParticleTrajectory(std::vector<Breakpoint> breakpoints) : breakpoints_(std::move(breakpoints)) {
  for (Breakpoint& b : breakpoints_) {
    b.time.canonicalize();
    b.position.x.canonicalize();
    b.position.y.canonicalize();
  }
  if (breakpoints_.size() < 2) throw Error(Errc::invalid_argument, "trajectory needs at least two breakpoints");
  if (breakpoints_.front().time != 0 || breakpoints_.back().time != 1) {
    throw Error(Errc::invalid_argument, "trajectory must start at t=0 and end at t=1");
  }
  for (std::size_t i = 1; i < breakpoints_.size(); ++i) {
    if (!(breakpoints_[i - 1].time < breakpoints_[i].time)) {
      throw Error(Errc::invalid_argument, "breakpoint times must strictly increase");
    }
  }
}

RationalPoint ParticleTrajectory::position_at(const Rational& t) const {
  if (t <= breakpoints_.front().time) return breakpoints_.front().position;
  if (t >= breakpoints_.back().time) return breakpoints_.back().position;
  const auto upper = std::upper_bound(breakpoints_.begin(), breakpoints_.end(), t,
                                      [](const Rational& value, const Breakpoint& b) { return value < b.time; });
  const Breakpoint& b = *upper;
  const Breakpoint& a = *(upper - 1);
  const Rational f = (t - a.time) / (b.time - a.time);
  return RationalPoint{a.position.x + f * (b.position.x - a.position.x),
                       a.position.y + f * (b.position.y - a.position.y)};
}

DynamicalSystem::DynamicalSystem(std::vector<ParticleTrajectory> particles) : particles_(std::move(particles)) {
  if (particles_.empty()) throw Error(Errc::invalid_argument, "a system needs at least one particle");
  if (particles_.size() > static_cast<std::size_t>(kMaxStrands)) {
    throw Error(Errc::invalid_argument, "too many particles");
  }
  std::set<Rational> times;
  for (const ParticleTrajectory& p : particles_) {
    for (const Breakpoint& b : p.breakpoints()) times.insert(b.time);
  }
  grid_.assign(times.begin(), times.end());
  for (const Rational& t : grid_) {
    const std::vector<RationalPoint> state = state_at(t);
    for (std::size_t i = 0; i < state.size(); ++i) {
      for (std::size_t j = i + 1; j < state.size(); ++j) {
        if (state[i] == state[j]) {
          throw Error(Errc::invalid_argument, "particles " + std::to_string(i + 1) + " and " + std::to_string(j + 1) +
                                                  " coincide at t=" + t.get_str());
        }
      }
    }
  }
}

std::vector<RationalPoint> DynamicalSystem::state_at(const Rational& t) const {
  std::vector<RationalPoint> out;
  out.reserve(particles_.size());
  for (const ParticleTrajectory& p : particles_) out.push_back(p.position_at(t));
  return out;
}

std::vector<LinearMotion> DynamicalSystem::motions_on_segment(std::size_t segment) const {
  const Rational& t0 = grid_.at(segment);
  const Rational& t1 = grid_.at(segment + 1);
  std::vector<LinearMotion> out;
  out.reserve(particles_.size());
  for (const ParticleTrajectory& p : particles_) {
    const RationalPoint a = p.position_at(t0);
    const RationalPoint b = p.position_at(t1);
    const Rational span = t1 - t0;
    const Rational vx = (b.x - a.x) / span;
    const Rational vy = (b.y - a.y) / span;
    out.push_back(LinearMotion{Polynomial::linear(a.x - vx * t0, vx), Polynomial::linear(a.y - vy * t0, vy)});
  }
  return out;
}

Polynomial PropertyDetector::event_polynomial(std::span<const LinearMotion> motions) const {
  if (static_cast<int>(motions.size()) != arity()) {
    throw Error(Errc::invalid_argument, std::string(name()) + " detector needs " + std::to_string(arity()) + " motions");
  }
  if (property_ == Property::collinear) {
    const LinearMotion& a = motions[0];
    const LinearMotion& b = motions[1];
    const LinearMotion& c = motions[2];
    return (b.x - a.x) * (c.y - a.y) - (c.x - a.x) * (b.y - a.y);
  }
  // Subtracting the last row of the 4x4 determinant leaves a 3x3 one.
  const LinearMotion& d = motions[3];
  const Polynomial dw = d.x * d.x + d.y * d.y;
  std::vector<std::vector<Polynomial>> rows;
  for (std::size_t i = 0; i < 3; ++i) {
    const LinearMotion& m = motions[i];
    rows.push_back({m.x * m.x + m.y * m.y - dw, m.x - d.x, m.y - d.y});
  }
  return determinant(rows);
}

bool PropertyDetector::holds_for_superset(std::span<const LinearMotion> motions, const Polynomial& square_free,
                                          const IsolatingInterval& interval) const {
  const auto k = static_cast<std::size_t>(arity());
  if (motions.size() != k + 1) throw Error(Errc::invalid_argument, "superset check needs arity + 1 motions");
  std::vector<LinearMotion> subset;
  for (std::size_t dropped = 0; dropped <= k; ++dropped) {
    subset.clear();
    for (std::size_t i = 0; i <= k; ++i) {
      if (i != dropped) subset.push_back(motions[i]);
    }
    if (!vanishes_at_root(event_polynomial(subset), square_free, interval)) return false;
  }
  return true;
}

PropertyDetector collinearity_detector() { return PropertyDetector(Property::collinear); }

PropertyDetector concyclicity_detector() { return PropertyDetector(Property::concyclic); }

EventScan isolate_event_times(const DynamicalSystem& system, const PropertyDetector& detector) {
  EventScan scan;
  scan.particle_count = system.particle_count();
  scan.arity = detector.arity();
  if (scan.particle_count < scan.arity) return scan;
  const Signature sig{scan.particle_count, scan.arity};
  const std::vector<Multiindex> tuples = enumerate_generators(sig);

  struct Tagged {
    CriticalEvent event;
    std::size_t id;
  };
  std::vector<Tagged> all;
  std::vector<std::pair<std::size_t, std::size_t>> same_time;  // by id

  for (std::size_t seg = 0; seg < system.segment_count(); ++seg) {
    const Rational& t0 = system.grid()[seg];
    const Rational& t1 = system.grid()[seg + 1];
    const std::vector<LinearMotion> motions = system.motions_on_segment(seg);
    const std::size_t first_in_segment = all.size();

    for (Multiindex m : tuples) {
      std::vector<LinearMotion> picked;
      for (int i : m.indices()) picked.push_back(motions[static_cast<std::size_t>(i - 1)]);
      const Polynomial p = detector.event_polynomial(picked);
      if (p.is_zero()) {
        throw Error(Errc::degenerate_input, "particles " + m.to_string() + " are " + detector.name() +
                                                " throughout [" + t0.get_str() + ", " + t1.get_str() + "]");
      }
      if (p.degree() == 0) continue;
      const Polynomial sf = square_free_part(p);
      for (const Rational* t : {&t0, &t1}) {
        if (sf.sign_at(*t) == 0) {
          throw Error(Errc::degenerate_input,
                      "particles " + m.to_string() + " are " + detector.name() + " at breakpoint t=" + t->get_str());
        }
      }
      const Polynomial multiple = gcd(p, p.derivative());
      for (IsolatingInterval iv : isolate_roots(sf, t0, t1)) {
        while (iv.width() > (t1 - t0) / 4) refine(sf, iv);
        CriticalEvent e;
        e.multiindex = m;
        e.segment = seg;
        e.interval = iv;
        e.square_free = sf;
        const int before = p.sign_at(iv.lo);
        const int after = p.sign_at(iv.hi);
        e.sign_change = before != after;
        e.direction = e.sign_change ? after : 0;
        e.simple = multiple.degree() <= 0 || SturmSequence(multiple).count_roots(iv.lo, iv.hi) == 0;
        all.push_back(Tagged{std::move(e), all.size()});
      }
    }

    // Separate overlapping intervals within the segment, or prove they share the root.
    for (std::size_t i = first_in_segment; i < all.size(); ++i) {
      for (std::size_t j = i + 1; j < all.size(); ++j) {
        CriticalEvent& a = all[i].event;
        CriticalEvent& b = all[j].event;
        if (!overlaps(a.interval, b.interval)) continue;
        const Polynomial common = gcd(a.square_free, b.square_free);
        if (common.degree() > 0) {
          const IsolatingInterval meet{std::max(a.interval.lo, b.interval.lo), std::min(a.interval.hi, b.interval.hi)};
          if (SturmSequence(common).count_roots(meet.lo, meet.hi) > 0) {
            same_time.emplace_back(all[i].id, all[j].id);
            continue;
          }
        }
        while (overlaps(a.interval, b.interval)) {
          if (a.interval.width() >= b.interval.width()) {
            refine(a.square_free, a.interval);
          } else {
            refine(b.square_free, b.interval);
          }
        }
      }
    }
  }

  std::sort(all.begin(), all.end(), [](const Tagged& a, const Tagged& b) {
    if (a.event.segment != b.event.segment) return a.event.segment < b.event.segment;
    if (a.event.interval.lo != b.event.interval.lo) return a.event.interval.lo < b.event.interval.lo;
    return a.event.multiindex < b.event.multiindex;
  });
  std::vector<std::size_t> position(all.size());
  for (std::size_t i = 0; i < all.size(); ++i) position[all[i].id] = i;
  for (auto [x, y] : same_time) {
    scan.simultaneous.emplace_back(std::min(position[x], position[y]), std::max(position[x], position[y]));
  }
  std::sort(scan.simultaneous.begin(), scan.simultaneous.end());
  for (Tagged& t : all) scan.events.push_back(std::move(t.event));
  return scan;
}

const char* to_string(ViolationKind kind) {
  switch (kind) {
    case ViolationKind::simultaneous:
      return "simultaneous";
    case ViolationKind::higher_tuple:
      return "higher-tuple";
    case ViolationKind::unstable:
      return "unstable";
  }
  return "unknown";
}

PleasantnessReport pleasantness_check(const DynamicalSystem& system, const PropertyDetector& detector,
                                      const EventScan& scan) {
  PleasantnessReport report;
  const int k = detector.arity();

  for (auto [i, j] : scan.simultaneous) {
    const Multiindex a = scan.events[i].multiindex;
    const Multiindex b = scan.events[j].multiindex;
    // Sharing k - 1 particles means a (k+1)-tuple, reported below.
    if (a.overlap(b) >= k - 1) continue;
    report.violations.push_back(
        Violation{ViolationKind::simultaneous, Multiindex::from_mask(a.mask() | b.mask()).indices(), {i, j}});
  }

  std::set<std::pair<std::uint64_t, std::size_t>> reported;  // (tuple, first event)
  for (std::size_t e = 0; e < scan.events.size(); ++e) {
    const CriticalEvent& ev = scan.events[e];
    const std::vector<LinearMotion> motions = system.motions_on_segment(ev.segment);
    for (int extra = 1; extra <= system.particle_count(); ++extra) {
      if (ev.multiindex.contains(extra)) continue;
      const Multiindex tuple = Multiindex::from_mask(ev.multiindex.mask() | (std::uint64_t{1} << (extra - 1)));
      std::vector<LinearMotion> picked;
      for (int i : tuple.indices()) picked.push_back(motions[static_cast<std::size_t>(i - 1)]);
      if (!detector.holds_for_superset(picked, ev.square_free, ev.interval)) continue;
      // Every k-subset of the tuple has an event here; report the tuple once.
      std::size_t first = e;
      for (auto [a, b] : scan.simultaneous) {
        if (b == e && (scan.events[a].multiindex.mask() & ~tuple.mask()) == 0) first = std::min(first, a);
      }
      if (!reported.emplace(tuple.mask(), first).second) continue;
      std::vector<std::size_t> involved{e};
      for (auto [a, b] : scan.simultaneous) {
        const std::size_t other = a == e ? b : (b == e ? a : SIZE_MAX);
        if (other != SIZE_MAX && (scan.events[other].multiindex.mask() & ~tuple.mask()) == 0) involved.push_back(other);
      }
      std::sort(involved.begin(), involved.end());
      report.violations.push_back(Violation{ViolationKind::higher_tuple, tuple.indices(), involved});
    }
  }

  for (std::size_t e = 0; e < scan.events.size(); ++e) {
    if (!scan.events[e].simple) {
      report.violations.push_back(Violation{ViolationKind::unstable, scan.events[e].multiindex.indices(), {e}});
    }
  }
  return report;
}

PleasantnessReport pleasantness_check(const DynamicalSystem& system, const PropertyDetector& detector) {
  return pleasantness_check(system, detector, isolate_event_times(system, detector));
}

Word event_word(const EventScan& scan) {
  Word word{make_signature(scan.particle_count, scan.arity), {}};
  for (const CriticalEvent& e : scan.events) word.letters.push_back(e.multiindex);
  return word;
}

Word type_of(const DynamicalSystem& system, const PropertyDetector& detector) {
  if (system.particle_count() < detector.arity()) {
    throw Error(Errc::invalid_argument, "type needs at least " + std::to_string(detector.arity()) + " particles");
  }
  const EventScan scan = isolate_event_times(system, detector);
  const PleasantnessReport report = pleasantness_check(system, detector, scan);
  if (!report.pleasant()) {
    const Violation& v = report.violations.front();
    std::string tuple;
    for (int i : v.particles) tuple += (tuple.empty() ? "" : " ") + std::to_string(i);
    throw Error(Errc::not_pleasant, std::string("system is not pleasant: ") + to_string(v.kind) + " at (" + tuple + ")");
  }
  return event_word(scan);
}

DynamicalSystem perturb(const DynamicalSystem& system, std::uint64_t seed, const Rational& magnitude) {
  if (sgn(magnitude) < 0) throw Error(Errc::invalid_argument, "perturbation magnitude must be non-negative");
  if (sgn(magnitude) == 0) return system;
  constexpr long kScale = 1L << 20;
  std::mt19937_64 rng(seed);
  const auto offset = [&]() -> Rational {
    const long r = static_cast<long>(rng() >> 43) - kScale;  // in [-2^20, 2^20)
    Rational fraction(r, kScale);
    fraction.canonicalize();
    return magnitude * fraction;
  };
  for (int attempt = 0; attempt < 64; ++attempt) {
    std::vector<ParticleTrajectory> moved;
    for (const ParticleTrajectory& p : system.particles()) {
      std::vector<Breakpoint> bps = p.breakpoints();
      for (std::size_t i = 1; i + 1 < bps.size(); ++i) {
        bps[i].position.x += offset();
        bps[i].position.y += offset();
      }
      moved.emplace_back(std::move(bps));
    }
    try {
      return DynamicalSystem(std::move(moved));
    } catch (const Error&) {
      // A collision at a breakpoint: draw again from the same stream.
    }
  }
  throw Error(Errc::degenerate_input, "could not perturb the system without collisions");
}

namespace {

Rational parse_rational(std::string_view token) {
  Rational value;
  if (token.empty() || value.set_str(std::string(token), 10) != 0 || value.get_den() == 0) {
    throw Error(Errc::parse_error, "bad rational \"" + std::string(token) + "\"");
  }
  value.canonicalize();
  return value;
}

}  // namespace

DynamicalSystem parse_system(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  int n = -1;
  std::vector<ParticleTrajectory> particles;
  while (std::getline(in, line)) {
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream tokens(line);
    std::string token;
    std::vector<std::string> parts;
    while (tokens >> token) parts.push_back(token);
    if (parts.empty()) continue;
    if (n < 0) {
      if (parts.size() != 1 || parts[0].rfind("n=", 0) != 0) throw Error(Errc::parse_error, "expected \"n=<n>\" first");
      try {
        n = std::stoi(parts[0].substr(2));
      } catch (const std::exception&) {
        throw Error(Errc::parse_error, "bad particle count");
      }
      if (n < 1 || n > kMaxStrands) throw Error(Errc::parse_error, "particle count out of range");
      continue;
    }
    std::vector<Breakpoint> bps;
    for (const std::string& part : parts) {
      const auto colon = part.find(':');
      const auto comma = part.find(',');
      if (colon == std::string::npos || comma == std::string::npos || comma < colon) {
        throw Error(Errc::parse_error, "breakpoint \"" + part + "\" is not t:x,y");
      }
      const std::string_view view(part);
      bps.push_back(Breakpoint{parse_rational(view.substr(0, colon)),
                               RationalPoint{parse_rational(view.substr(colon + 1, comma - colon - 1)),
                                             parse_rational(view.substr(comma + 1))}});
    }
    try {
      particles.emplace_back(std::move(bps));
    } catch (const Error& e) {
      throw Error(Errc::parse_error, "particle " + std::to_string(particles.size() + 1) + ": " + e.what());
    }
  }
  if (n < 0) throw Error(Errc::parse_error, "empty system file");
  if (static_cast<int>(particles.size()) != n) {
    throw Error(Errc::parse_error, "expected " + std::to_string(n) + " particles, found " + std::to_string(particles.size()));
  }
  try {
    return DynamicalSystem(std::move(particles));
  } catch (const Error& e) {
    throw Error(Errc::parse_error, e.what());
  }
}

std::string format_system(const DynamicalSystem& system) {
  std::string out = "n=" + std::to_string(system.particle_count()) + "\n";
  for (const ParticleTrajectory& p : system.particles()) {
    bool first = true;
    for (const Breakpoint& b : p.breakpoints()) {
      if (!first) out += ' ';
      out += b.time.get_str() + ":" + point_string(b.position);
      first = false;
    }
    out += '\n';
  }
  return out;
}

std::string format_events(const EventScan& scan) {
  std::string out;
  for (const CriticalEvent& e : scan.events) {
    out += e.interval.lo.get_str() + " " + e.interval.hi.get_str() + " " + e.multiindex.to_string() + " ";
    out += e.direction > 0 ? '+' : (e.direction < 0 ? '-' : '0');
    out += '\n';
  }
  return out;
}

}  // namespace kbraid
