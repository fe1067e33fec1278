#include "kbraid/group.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace kbraid {

namespace {

std::string describe(Signature sig) {
  return "n=" + std::to_string(sig.n) + " k=" + std::to_string(sig.k);
}

void require_position(const Word& word, std::size_t position, std::size_t span, const char* move) {
  if (position + span > word.size()) {
    throw Error(Errc::move_not_applicable, std::string(move) + ": position " +
                                               std::to_string(position) + " out of range");
  }
}

// Visits every k-subset of {1..n} as a mask, in lexicographic order.
template <typename Fn>
void for_each_subset(int n, int k, Fn&& fn) {
  std::vector<int> pick(static_cast<std::size_t>(k));
  std::iota(pick.begin(), pick.end(), 1);
  while (true) {
    std::uint64_t mask = 0;
    for (int i : pick) mask |= std::uint64_t{1} << (i - 1);
    fn(mask);
    int pos = k - 1;
    while (pos >= 0 && pick[static_cast<std::size_t>(pos)] == n - k + pos + 1) --pos;
    if (pos < 0) return;
    ++pick[static_cast<std::size_t>(pos)];
    for (int j = pos + 1; j < k; ++j) {
      pick[static_cast<std::size_t>(j)] = pick[static_cast<std::size_t>(j - 1)] + 1;
    }
  }
}

}  // namespace

Signature make_signature(int n, int k) {
  if (k < 2 || n < k || n > kMaxStrands) {
    throw Error(Errc::invalid_argument, "invalid signature " + describe(Signature{n, k}) +
                                            " (need 2 <= k <= n <= 64)");
  }
  return Signature{n, k};
}

std::vector<int> Multiindex::indices() const {
  std::vector<int> out;
  for (std::uint64_t rest = mask_; rest != 0; rest &= rest - 1) {
    out.push_back(std::countr_zero(rest) + 1);
  }
  return out;
}

std::string Multiindex::to_string() const {
  std::string out = "(";
  bool first = true;
  for (int i : indices()) {
    if (!first) out += ' ';
    out += std::to_string(i);
    first = false;
  }
  out += ')';
  return out;
}

bool is_valid_letter(Multiindex m, Signature sig) {
  return m.size() == sig.k && m.max_index() <= sig.n;
}

Multiindex make_multiindex(std::span<const int> values, Signature sig) {
  if (static_cast<int>(values.size()) != sig.k) {
    throw Error(Errc::invalid_argument, "multiindex needs " + std::to_string(sig.k) +
                                            " indices, got " + std::to_string(values.size()));
  }
  std::uint64_t mask = 0;
  for (int v : values) {
    if (v < 1 || v > sig.n) {
      throw Error(Errc::invalid_argument,
                  "index " + std::to_string(v) + " outside 1.." + std::to_string(sig.n));
    }
    const std::uint64_t bit = std::uint64_t{1} << (v - 1);
    if ((mask & bit) != 0) {
      throw Error(Errc::invalid_argument, "duplicate index " + std::to_string(v));
    }
    mask |= bit;
  }
  return Multiindex::from_mask(mask);
}

Multiindex make_multiindex(std::initializer_list<int> values, Signature sig) {
  return make_multiindex(std::span<const int>(values.begin(), values.size()), sig);
}

Word make_word(Signature sig, std::vector<Multiindex> letters) {
  for (Multiindex m : letters) {
    if (!is_valid_letter(m, sig)) {
      throw Error(Errc::invalid_argument,
                  "letter " + m.to_string() + " is not a generator of " + describe(sig));
    }
  }
  return Word{sig, std::move(letters)};
}

bool operator==(const CyclicWord& a, const CyclicWord& b) {
  if (a.signature != b.signature || a.letters.size() != b.letters.size()) return false;
  if (a.letters.empty()) return true;
  const std::size_t len = a.letters.size();
  for (std::size_t shift = 0; shift < len; ++shift) {
    bool same = true;
    for (std::size_t i = 0; i < len && same; ++i) {
      same = a.letters[i] == b.letters[(i + shift) % len];
    }
    if (same) return true;
  }
  return false;
}

bool is_tetrahedron_block(std::span<const Multiindex> block, int k) {
  if (static_cast<int>(block.size()) != k + 1) return false;
  std::uint64_t united = 0;
  for (std::size_t i = 0; i < block.size(); ++i) {
    if (block[i].size() != k) return false;
    for (std::size_t j = 0; j < i; ++j) {
      if (block[i] == block[j]) return false;
    }
    united |= block[i].mask();
  }
  // k+1 distinct k-subsets of a (k+1)-set are all of its k-subsets.
  return std::popcount(united) == k + 1;
}

std::vector<Multiindex> enumerate_generators(Signature sig) {
  std::vector<Multiindex> out;
  for_each_subset(sig.n, sig.k, [&](std::uint64_t mask) { out.push_back(Multiindex::from_mask(mask)); });
  return out;
}

std::size_t generator_rank(Multiindex m, Signature sig) {
  // Lexicographic rank via the combinatorial number system.
  const auto binom = [](int n, int r) -> std::size_t {
    if (r < 0 || n < r) return 0;
    std::size_t acc = 1;
    for (int i = 1; i <= r; ++i) acc = acc * static_cast<std::size_t>(n - r + i) / static_cast<std::size_t>(i);
    return acc;
  };
  std::size_t rank = 0;
  int previous = 0;
  int remaining = sig.k;
  for (int index : m.indices()) {
    for (int skipped = previous + 1; skipped < index; ++skipped) {
      rank += binom(sig.n - skipped, remaining - 1);
    }
    previous = index;
    --remaining;
  }
  return rank;
}

std::vector<Relation> enumerate_tetrahedron_relations(Signature sig) {
  std::vector<Relation> out;
  if (sig.n < sig.k + 1) return out;
  for_each_subset(sig.n, sig.k + 1, [&](std::uint64_t united) {
    std::vector<int> order = Multiindex::from_mask(united).indices();
    do {
      // Keep one ordering from each {ordering, reversal} pair.
      if (!std::lexicographical_compare(order.begin(), order.end(), order.rbegin(), order.rend())) {
        continue;
      }
      Relation rel{Word{sig, {}}, Word{sig, {}}};
      for (int dropped : order) {
        rel.left.letters.push_back(Multiindex::from_mask(united & ~(std::uint64_t{1} << (dropped - 1))));
      }
      rel.right.letters.assign(rel.left.letters.rbegin(), rel.left.letters.rend());
      out.push_back(std::move(rel));
    } while (std::next_permutation(order.begin(), order.end()));
  });
  return out;
}

Word apply_involution(const Word& word, std::size_t position) {
  require_position(word, position, 2, "involution");
  if (word.letters[position] != word.letters[position + 1]) {
    throw Error(Errc::move_not_applicable, "involution: letters at " + std::to_string(position) +
                                               " and " + std::to_string(position + 1) + " differ");
  }
  Word out = word;
  const auto first = out.letters.begin() + static_cast<std::ptrdiff_t>(position);
  out.letters.erase(first, first + 2);
  return out;
}

Word apply_far_commutativity(const Word& word, std::size_t position) {
  require_position(word, position, 2, "far commutativity");
  const Multiindex a = word.letters[position];
  const Multiindex b = word.letters[position + 1];
  if (!far_commute(a, b, word.signature.k)) {
    throw Error(Errc::move_not_applicable, "far commutativity: " + a.to_string() + " and " +
                                               b.to_string() + " share at least k-1 indices");
  }
  Word out = word;
  std::swap(out.letters[position], out.letters[position + 1]);
  return out;
}

Word apply_tetrahedron(const Word& word, std::size_t position) {
  const auto span = static_cast<std::size_t>(word.signature.k + 1);
  require_position(word, position, span, "tetrahedron");
  const std::span<const Multiindex> block(word.letters.data() + position, span);
  if (!is_tetrahedron_block(block, word.signature.k)) {
    throw Error(Errc::move_not_applicable,
                "tetrahedron: block at " + std::to_string(position) +
                    " is not the set of k-subsets of a (k+1)-set");
  }
  Word out = word;
  const auto first = out.letters.begin() + static_cast<std::ptrdiff_t>(position);
  std::reverse(first, first + static_cast<std::ptrdiff_t>(span));
  return out;
}

std::vector<Word> neighbors(const Word& word) {
  std::vector<Word> out;
  const int k = word.signature.k;
  const auto span = static_cast<std::size_t>(k + 1);
  for (std::size_t i = 0; i + 1 < word.size(); ++i) {
    if (far_commute(word.letters[i], word.letters[i + 1], k)) {
      out.push_back(apply_far_commutativity(word, i));
    }
    if (i + span <= word.size() &&
        is_tetrahedron_block(std::span<const Multiindex>(word.letters.data() + i, span), k)) {
      out.push_back(apply_tetrahedron(word, i));
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

namespace {

ParityVector parity_of(Signature sig, std::span<const Multiindex> letters) {
  ParityVector pv{sig, {}};
  pv.bits.assign(enumerate_generators(sig).size(), 0);
  for (Multiindex m : letters) pv.bits[generator_rank(m, sig)] ^= 1U;
  return pv;
}

std::vector<Multiindex> relabel_letters(std::span<const Multiindex> letters, Signature sig,
                                        std::span<const int> image) {
  if (static_cast<int>(image.size()) != sig.n) {
    throw Error(Errc::invalid_argument, "relabel: permutation has wrong size");
  }
  std::vector<bool> seen(static_cast<std::size_t>(sig.n) + 1, false);
  for (int v : image) {
    if (v < 1 || v > sig.n || seen[static_cast<std::size_t>(v)]) {
      throw Error(Errc::invalid_argument, "relabel: not a permutation of 1..n");
    }
    seen[static_cast<std::size_t>(v)] = true;
  }
  std::vector<Multiindex> out;
  out.reserve(letters.size());
  for (Multiindex m : letters) {
    std::uint64_t mask = 0;
    for (int i : m.indices()) mask |= std::uint64_t{1} << (image[static_cast<std::size_t>(i - 1)] - 1);
    out.push_back(Multiindex::from_mask(mask));
  }
  return out;
}

}  // namespace

ParityVector parity_vector(const Word& word) { return parity_of(word.signature, word.letters); }

ParityVector parity_vector(const CyclicWord& word) { return parity_of(word.signature, word.letters); }

Word relabel(const Word& word, std::span<const int> image) {
  return Word{word.signature, relabel_letters(word.letters, word.signature, image)};
}

CyclicWord relabel(const CyclicWord& word, std::span<const int> image) {
  return CyclicWord{word.signature, relabel_letters(word.letters, word.signature, image)};
}

Word concat(const Word& a, const Word& b) {
  if (a.signature != b.signature) {
    throw Error(Errc::signature_mismatch, "concat: " + describe(a.signature) + " vs " + describe(b.signature));
  }
  Word out = a;
  out.letters.insert(out.letters.end(), b.letters.begin(), b.letters.end());
  return out;
}

Word inverse(const Word& word) {
  return Word{word.signature, {word.letters.rbegin(), word.letters.rend()}};
}

CyclicWord to_cyclic(const Word& word) { return CyclicWord{word.signature, word.letters}; }

}  // namespace kbraid
