#pragma once

// Piecewise-linear motions of n particles in the rational plane, exact
// detection of the moments at which k particles satisfy a property P
// (three on a line, four on a circle or line), and the type word of the motion.

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "kbraid/group.hpp"
#include "kbraid/polynomial.hpp"

namespace kbraid {

struct RationalPoint {
  Rational x;
  Rational y;

  friend bool operator==(const RationalPoint&, const RationalPoint&) = default;
};

struct Breakpoint {
  Rational time;
  RationalPoint position;
};

// Linear interpolation between breakpoints; times strictly increase from 0 to 1.
class ParticleTrajectory {
 public:
  explicit ParticleTrajectory(std::vector<Breakpoint> breakpoints);

  const std::vector<Breakpoint>& breakpoints() const { return breakpoints_; }
  RationalPoint position_at(const Rational& t) const;

 private:
  std::vector<Breakpoint> breakpoints_;
};

// Coordinates of one particle over one segment, as polynomials in t.
struct LinearMotion {
  Polynomial x;
  Polynomial y;
};

class DynamicalSystem {
 public:
  // Throws Errc::invalid_argument if two particles coincide at a breakpoint time.
  explicit DynamicalSystem(std::vector<ParticleTrajectory> particles);

  int particle_count() const { return static_cast<int>(particles_.size()); }
  const std::vector<ParticleTrajectory>& particles() const { return particles_; }

  // Union of all breakpoint times; segment i is [grid[i], grid[i + 1]].
  const std::vector<Rational>& grid() const { return grid_; }
  std::size_t segment_count() const { return grid_.size() - 1; }

  std::vector<RationalPoint> state_at(const Rational& t) const;
  std::vector<RationalPoint> initial_state() const { return state_at(Rational(0)); }
  std::vector<RationalPoint> terminal_state() const { return state_at(Rational(1)); }

  std::vector<LinearMotion> motions_on_segment(std::size_t segment) const;

 private:
  std::vector<ParticleTrajectory> particles_;
  std::vector<Rational> grid_;
};

enum class Property { collinear, concyclic };

class PropertyDetector {
 public:
  explicit PropertyDetector(Property property) : property_(property) {}

  Property property() const { return property_; }
  int arity() const { return property_ == Property::collinear ? 3 : 4; }
  const char* name() const { return property_ == Property::collinear ? "collinear" : "concyclic"; }

  // Vanishes exactly when the motions satisfy the property. Collinear: the
  // orientation determinant (degree <= 2). Concyclic: the determinant with rows
  // (x^2 + y^2, x, y, 1) (degree <= 4).
  Polynomial event_polynomial(std::span<const LinearMotion> motions) const;

  // Whether all arity() + 1 motions satisfy the property at the root that
  // `interval` isolates for `square_free`.
  bool holds_for_superset(std::span<const LinearMotion> motions, const Polynomial& square_free,
                          const IsolatingInterval& interval) const;

 private:
  Property property_;
};

PropertyDetector collinearity_detector();
PropertyDetector concyclicity_detector();

struct CriticalEvent {
  Multiindex multiindex;
  std::size_t segment = 0;
  IsolatingInterval interval;
  // Square-free part of the event polynomial on the segment.
  Polynomial square_free;
  bool sign_change = true;
  // +1 when the event polynomial goes from negative to positive, -1 the other way, 0 without change.
  int direction = 0;
  // False for a multiple root.
  bool simple = true;
};

struct EventScan {
  int particle_count = 0;
  int arity = 0;
  // Ordered by time; simultaneous events sit next to each other.
  std::vector<CriticalEvent> events;
  // Index pairs (i < j) of events at the same instant.
  std::vector<std::pair<std::size_t, std::size_t>> simultaneous;
};

// Throws Errc::degenerate_input if an event polynomial vanishes on a whole
// segment or has a root at a segment boundary.
EventScan isolate_event_times(const DynamicalSystem& system, const PropertyDetector& detector);

enum class ViolationKind {
  simultaneous,  // two events at one instant
  higher_tuple,  // k + 1 particles satisfy the property at once
  unstable,      // multiple root
};

const char* to_string(ViolationKind kind);

struct Violation {
  ViolationKind kind;
  std::vector<int> particles;
  std::vector<std::size_t> events;
};

struct PleasantnessReport {
  std::vector<Violation> violations;

  bool pleasant() const { return violations.empty(); }
};

PleasantnessReport pleasantness_check(const DynamicalSystem& system, const PropertyDetector& detector,
                                      const EventScan& scan);
PleasantnessReport pleasantness_check(const DynamicalSystem& system, const PropertyDetector& detector);

// Event multiindices in time order, without checking pleasantness.
Word event_word(const EventScan& scan);

// Type word of a pleasant system; throws Errc::not_pleasant otherwise.
Word type_of(const DynamicalSystem& system, const PropertyDetector& detector);

// Shifts every interior breakpoint position by a pseudo-random rational offset
// of at most `magnitude` per coordinate. Endpoint states are kept.
DynamicalSystem perturb(const DynamicalSystem& system, std::uint64_t seed, const Rational& magnitude);

// Text format: a line "n=<n>", then one line per particle of "t:x,y"
// breakpoints with rational components ("3", "-1/2"). '#' starts a comment.
DynamicalSystem parse_system(std::string_view text);
std::string format_system(const DynamicalSystem& system);

// One line per event: "t_lo t_hi (i j k) sign" with sign '+', '-' or '0'.
std::string format_events(const EventScan& scan);

}  // namespace kbraid
