#pragma once

// Minimal representatives, canonical forms and comparison in G_n^k.
//
// Words are explored up to far commutativity: every node of the search is a
// commutation class, stored as its lexicographically least spelling. From a
// node the search applies tetrahedron reversals to any block that can be made
// contiguous, and cancels a_m a_m pairs once commutation brings them
// together. Length never increases, so each level is finite.

#include <cstddef>
#include <vector>

#include "kbraid/group.hpp"

namespace kbraid {

inline constexpr std::size_t kDefaultBudget = 1'000'000;

struct ReduceOptions {
  // Maximum number of commutation classes visited across all levels.
  std::size_t budget = kDefaultBudget;
};

struct Reduction {
  // Minimal-length words reached, one lexicographically least spelling per
  // commutation class, sorted. When `exhausted` they are the shortest seen so far.
  std::vector<Word> minimal;
  std::size_t visited = 0;
  bool exhausted = false;

  std::size_t length() const { return minimal.empty() ? 0 : minimal.front().size(); }
};

struct CyclicReduction {
  std::vector<CyclicWord> minimal;
  std::size_t visited = 0;
  bool exhausted = false;

  std::size_t length() const { return minimal.empty() ? 0 : minimal.front().size(); }
};

enum class Verdict { equal, distinct, unknown };

const char* to_string(Verdict v);

// Lexicographically least spelling of the commutation class of `word`.
Word commutation_normal_form(const Word& word);

// Removes a_m a_m pairs that commutation can make adjacent until none is left.
Word cancel_commuting_pairs(const Word& word);

Reduction reduce(const Word& word, const ReduceOptions& options = {});

// k = 2 only: least element of reduce(word). Throws Errc::unsupported_signature
// for k != 2 and Errc::budget_exhausted when the budget runs out.
Word canonical_form(const Word& word, const ReduceOptions& options = {});

// k = 2 compares canonical forms and never answers unknown. For k >= 3:
// equal when the reductions meet, distinct when parity vectors differ or the
// fully explored minimal lengths differ, unknown otherwise.
Verdict are_equal(const Word& a, const Word& b, const ReduceOptions& options = {});

struct Complexity {
  std::size_t length = 0;
  // False when the budget ran out; `length` is then only an upper bound.
  bool exact = true;
};

Complexity complexity(const Word& word, const ReduceOptions& options = {});

// Same search over conjugacy: rotations are moves and cancellation may wrap around.
CyclicReduction cyclic_reduce(const CyclicWord& word, const ReduceOptions& options = {});

// k = 2 only: least rotation of the least minimal cyclic word.
CyclicWord cyclic_canonical_form(const CyclicWord& word, const ReduceOptions& options = {});

// k = 2 compares cyclic canonical forms; k >= 3 intersects the cyclic
// reductions, falls back on parity and otherwise answers unknown.
Verdict are_conjugate(const CyclicWord& a, const CyclicWord& b, const ReduceOptions& options = {});

// Cross-check for k >= 3 on short words: also tries every single a_m a_m
// insertion into `a` before reducing. Answers equal or unknown.
Verdict insertion_oracle(const Word& a, const Word& b, const ReduceOptions& options = {});

}  // namespace kbraid
