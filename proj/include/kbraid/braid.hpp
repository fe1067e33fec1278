#pragma once

// Classical braids as motions of points in the plane, and the trisecant
// invariant c(D) they induce in G_n^3 (or the concyclicity variant in G_n^4).

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "kbraid/dynamics.hpp"
#include "kbraid/group.hpp"
#include "kbraid/reduce.hpp"

namespace kbraid {

struct ArtinLetter {
  int index = 1;  // sigma_index, crossing strands at positions index and index + 1
  int sign = 1;

  friend bool operator==(const ArtinLetter&, const ArtinLetter&) = default;
};

struct BraidWord {
  int n = 0;
  std::vector<ArtinLetter> letters;

  std::size_t size() const { return letters.size(); }
  bool empty() const { return letters.empty(); }

  friend bool operator==(const BraidWord&, const BraidWord&) = default;
};

// Validates 1 <= index < n and sign = +-1.
BraidWord make_braid(int n, std::vector<ArtinLetter> letters);

// Space-separated "s<i>" or "s<i>^-1"; "e" or blank for the empty braid.
BraidWord parse_artin(std::string_view text, int n);
std::string format_artin(const BraidWord& braid);

BraidWord concat(const BraidWord& a, const BraidWord& b);
BraidWord inverse(const BraidWord& braid);

// image[p - 1] is the final position of the strand starting at position p.
using Permutation = std::vector<int>;

Permutation identity_permutation(int n);
Permutation permutation_of(const BraidWord& braid);
// (a then b): compose(a, b)[p] = b[a[p]].
Permutation compose(const Permutation& a, const Permutation& b);
bool is_identity(const Permutation& p);
Permutation invert(const Permutation& p);

struct PurePower {
  BraidWord braid;
  int exponent = 1;
};

// Smallest power of the braid whose permutation is trivial.
PurePower pure_power(const BraidWord& braid);

enum class DetourShape {
  radial,  // step out, travel along the outer chord, step back in
  apex,    // two straight legs through a point outside the chord
};

struct RealizeOptions {
  DetourShape shape = DetourShape::radial;
};

// Rational points near the unit circle, in convex position, slot 1 first.
std::vector<RationalPoint> slot_points(int n);

// Strands start on slot_points(n). Each letter takes one unit of time; the two
// strands at positions i, i+1 swap, one along the chord and the other around
// it on the outside. sigma_i sends the strand at position i outside;
// sigma_i^-1 is its time reversal. Throws Errc::invalid_argument for n < 3.
DynamicalSystem realize(const BraidWord& braid, const RealizeOptions& options = {});

struct InvariantOptions {
  RealizeOptions realize;
  // Seeded perturbations tried when the realization is not pleasant.
  int retries = 3;
  std::uint64_t seed = 0;
};

// Type word of the realization under the collinearity detector.
// Throws Errc::not_pleasant if no retry gives a pleasant system.
Word invariant_c(const BraidWord& braid, const InvariantOptions& options = {});
// Same under the concyclicity detector; needs n >= 4.
Word invariant_c4(const BraidWord& braid, const InvariantOptions& options = {});

// invariant_c of a pure braid as a cyclic word. Throws Errc::invalid_argument otherwise.
CyclicWord closed_invariant(const BraidWord& braid, const InvariantOptions& options = {});

struct TrisecantCertificate {
  std::size_t events = 0;
  std::size_t lower_bound = 0;
  // False when the reduction ran out of budget; lower_bound is then the best length found.
  bool exact = true;
  bool ok = true;
  Word invariant;
};

TrisecantCertificate trisecant_certificate(const BraidWord& braid, const InvariantOptions& options = {},
                                           const ReduceOptions& reduce_options = {});
// {"events": .., "lower_bound": .., "exact": .., "ok": .., "invariant": ".."}
std::string to_json(const TrisecantCertificate& certificate);

enum class ArtinRelation {
  cancel,        // s_i s_i^-1 -> e, either order
  far_swap,      // s_i s_j -> s_j s_i for |i - j| >= 2
  yang_baxter,   // s_i s_j s_i -> s_j s_i s_j for |i - j| = 1, equal signs
};

// Throws Errc::move_not_applicable when the relation does not match at `position`.
BraidWord apply_artin_relation(const BraidWord& braid, ArtinRelation relation, std::size_t position);

// Every single-relation rewrite of the braid, in position order.
std::vector<BraidWord> artin_neighbors(const BraidWord& braid);

}  // namespace kbraid
