#pragma once

// Word algebra of the free k-braid group G_n^k.
//
// G_n^k is generated by involutions a_m, one for every k-subset m of
// {1..n}, subject to
//   a_m a_m = 1,
//   a_m a_m' = a_m' a_m            when |m ∩ m'| < k - 1,
//   a_{m1} ... a_{m(k+1)} = a_{m(k+1)} ... a_{m1}
// where m1..m(k+1) run over the k-subsets of a (k+1)-set U, each once.

#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "kbraid/error.hpp"

namespace kbraid {

inline constexpr int kMaxStrands = 64;

struct Signature {
  int n = 2;
  int k = 2;

  friend bool operator==(const Signature&, const Signature&) = default;
};

// Throws Errc::invalid_argument unless 2 <= k <= n <= kMaxStrands.
Signature make_signature(int n, int k);

// A subset of {1..n} stored as a bit mask, bit (i - 1) standing for index i.
class Multiindex {
 public:
  constexpr Multiindex() = default;

  static constexpr Multiindex from_mask(std::uint64_t mask) {
    Multiindex m;
    m.mask_ = mask;
    return m;
  }

  constexpr std::uint64_t mask() const { return mask_; }
  constexpr int size() const { return std::popcount(mask_); }
  constexpr bool contains(int index) const {
    return index >= 1 && index <= kMaxStrands && ((mask_ >> (index - 1)) & 1U) != 0;
  }
  constexpr int overlap(Multiindex other) const { return std::popcount(mask_ & other.mask_); }
  constexpr int max_index() const { return mask_ == 0 ? 0 : 64 - std::countl_zero(mask_); }

  // Increasing list of indices.
  std::vector<int> indices() const;

  // "(1 2 3)"
  std::string to_string() const;

  friend constexpr bool operator==(Multiindex a, Multiindex b) { return a.mask_ == b.mask_; }

  // Lexicographic order of the increasing index tuples.
  friend constexpr std::strong_ordering operator<=>(Multiindex a, Multiindex b) {
    if (a.mask_ == b.mask_) return std::strong_ordering::equal;
    const std::uint64_t diff = a.mask_ ^ b.mask_;
    const std::uint64_t low = diff & (~diff + 1);
    const bool a_has = (a.mask_ & low) != 0;
    const std::uint64_t other = a_has ? b.mask_ : a.mask_;
    // The tuple lacking the first differing index is a proper prefix when it
    // has nothing at or above that index.
    const bool other_is_prefix = (other & ~(low - 1)) == 0;
    if (a_has) return other_is_prefix ? std::strong_ordering::greater : std::strong_ordering::less;
    return other_is_prefix ? std::strong_ordering::less : std::strong_ordering::greater;
  }

 private:
  std::uint64_t mask_ = 0;
};

// Builds the sorted k-tuple from an unordered set of indices.
// Throws Errc::invalid_argument on wrong cardinality, out-of-range or repeated index.
Multiindex make_multiindex(std::span<const int> values, Signature sig);
Multiindex make_multiindex(std::initializer_list<int> values, Signature sig);

// Element representative of G_n^k; the empty word is the identity.
struct Word {
  Signature signature;
  std::vector<Multiindex> letters;

  std::size_t size() const { return letters.size(); }
  bool empty() const { return letters.empty(); }

  friend bool operator==(const Word&, const Word&) = default;
  friend std::strong_ordering operator<=>(const Word& a, const Word& b) {
    return std::lexicographical_compare_three_way(a.letters.begin(), a.letters.end(),
                                                  b.letters.begin(), b.letters.end());
  }
};

// Validates every letter against the signature.
Word make_word(Signature sig, std::vector<Multiindex> letters);

// Word considered up to rotation.
struct CyclicWord {
  Signature signature;
  std::vector<Multiindex> letters;

  std::size_t size() const { return letters.size(); }
  bool empty() const { return letters.empty(); }

  friend bool operator==(const CyclicWord& a, const CyclicWord& b);
};

// Occurrence count mod 2 of each generator, indexed by lexicographic rank.
// All three relation families preserve it, and so does conjugation.
struct ParityVector {
  Signature signature;
  std::vector<std::uint8_t> bits;

  friend bool operator==(const ParityVector&, const ParityVector&) = default;
};

struct Relation {
  Word left;
  Word right;
};

bool is_valid_letter(Multiindex m, Signature sig);

// True when a_a and a_b commute by far commutativity: |a ∩ b| < k - 1.
constexpr bool far_commute(Multiindex a, Multiindex b, int k) { return a.overlap(b) < k - 1; }

// True when the letters are exactly the k-subsets of one (k+1)-set, each once, in any order.
bool is_tetrahedron_block(std::span<const Multiindex> block, int k);

// All C(n, k) generators in lexicographic order.
std::vector<Multiindex> enumerate_generators(Signature sig);

// Position of m in enumerate_generators(sig).
std::size_t generator_rank(Multiindex m, Signature sig);

// One relation per (k+1)-subset U and per ordering of U up to reversal;
// (k+1)! * C(n, k+1) / 2 relations in total, empty when n < k + 1.
std::vector<Relation> enumerate_tetrahedron_relations(Signature sig);

// Relation moves. Each throws Errc::move_not_applicable when its pattern is absent.
Word apply_involution(const Word& word, std::size_t position);
Word apply_far_commutativity(const Word& word, std::size_t position);
Word apply_tetrahedron(const Word& word, std::size_t position);

// Every word one far-commutativity or tetrahedron move away, sorted and deduplicated.
std::vector<Word> neighbors(const Word& word);

ParityVector parity_vector(const Word& word);
ParityVector parity_vector(const CyclicWord& word);

// Renames strand i to image[i - 1]; image must be a permutation of 1..n.
Word relabel(const Word& word, std::span<const int> image);
CyclicWord relabel(const CyclicWord& word, std::span<const int> image);

Word concat(const Word& a, const Word& b);
// Inverse element: generators are involutions, so this is the reversed word.
Word inverse(const Word& word);

CyclicWord to_cyclic(const Word& word);

}  // namespace kbraid
