#include "kbraid/reduce.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <queue>
#include <set>
#include <unordered_set>

namespace kbraid {

namespace {

using Letters = std::vector<Multiindex>;

struct LettersHash {
  std::size_t operator()(const Letters& w) const noexcept {
    std::uint64_t h = 0xcbf29ce484222325ULL ^ w.size();
    for (Multiindex m : w) {
      h ^= m.mask() + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    }
    return static_cast<std::size_t>(h);
  }
};

using LettersSet = std::unordered_set<Letters, LettersHash>;

// Least spelling of the commutation class: Kahn's algorithm on the
// dependence order, always emitting the smallest available letter.
Letters normal_form(const Letters& w, int k) {
  const std::size_t len = w.size();
  std::vector<std::vector<std::size_t>> successors(len);
  std::vector<std::size_t> pending(len, 0);
  for (std::size_t i = 0; i < len; ++i) {
    for (std::size_t j = i + 1; j < len; ++j) {
      if (!far_commute(w[i], w[j], k)) {
        successors[i].push_back(j);
        ++pending[j];
      }
    }
  }
  using Entry = std::pair<Multiindex, std::size_t>;
  std::priority_queue<Entry, std::vector<Entry>, std::greater<>> ready;
  for (std::size_t i = 0; i < len; ++i) {
    if (pending[i] == 0) ready.emplace(w[i], i);
  }
  Letters out;
  out.reserve(len);
  while (!ready.empty()) {
    const auto [letter, i] = ready.top();
    ready.pop();
    out.push_back(letter);
    for (std::size_t j : successors[i]) {
      if (--pending[j] == 0) ready.emplace(w[j], j);
    }
  }
  return out;
}

bool has_cancellation(const Letters& w, int k) {
  for (std::size_t i = 0; i < w.size(); ++i) {
    for (std::size_t j = i + 1; j < w.size(); ++j) {
      if (w[j] == w[i]) return true;
      if (!far_commute(w[i], w[j], k)) break;
    }
  }
  return false;
}

// Cancellation in a partially commutative monoid of involutions is confluent,
// so the scan order does not affect the result.
Letters cancel_all(Letters w, int k) {
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i < w.size() && !changed; ++i) {
      for (std::size_t j = i + 1; j < w.size(); ++j) {
        if (w[j] == w[i]) {
          w.erase(w.begin() + static_cast<std::ptrdiff_t>(j));
          w.erase(w.begin() + static_cast<std::ptrdiff_t>(i));
          changed = true;
          break;
        }
        if (!far_commute(w[i], w[j], k)) break;
      }
    }
  }
  return w;
}

// Row-major bit matrix, one row per word position.
class BitMatrix {
 public:
  explicit BitMatrix(std::size_t size) : size_(size), stride_((size + 63) / 64), bits_(size * stride_, 0) {}

  void set(std::size_t row, std::size_t col) { bits_[row * stride_ + col / 64] |= std::uint64_t{1} << (col % 64); }
  bool test(std::size_t row, std::size_t col) const {
    return ((bits_[row * stride_ + col / 64] >> (col % 64)) & 1U) != 0;
  }
  void or_row(std::size_t into, std::size_t from) {
    for (std::size_t b = 0; b < stride_; ++b) bits_[into * stride_ + b] |= bits_[from * stride_ + b];
  }
  // Columns set in both `row` of this and `other_row` of `other`.
  std::vector<std::size_t> common(std::size_t row, const BitMatrix& other, std::size_t other_row,
                                  std::size_t limit) const {
    std::vector<std::size_t> out;
    for (std::size_t b = 0; b < stride_; ++b) {
      std::uint64_t word = bits_[row * stride_ + b] & other.bits_[other_row * stride_ + b];
      while (word != 0) {
        out.push_back(b * 64 + static_cast<std::size_t>(std::countr_zero(word)));
        if (out.size() > limit) return out;
        word &= word - 1;
      }
    }
    return out;
  }

 private:
  std::size_t size_;
  std::size_t stride_;
  std::vector<std::uint64_t> bits_;
};

// Tetrahedron reversals available anywhere in the commutation class of `w`.
// A block can be made contiguous iff nothing outside it lies between its
// first and last letter in the dependence order.
void tetrahedron_neighbors(const Letters& w, int k, std::vector<Letters>& out) {
  const std::size_t len = w.size();
  const auto block_size = static_cast<std::size_t>(k + 1);
  if (len < block_size) return;

  BitMatrix after(len);   // after[i] = positions forced after i
  BitMatrix before(len);  // before[j] = positions forced before j
  for (std::size_t i = len; i-- > 0;) {
    for (std::size_t j = i + 1; j < len; ++j) {
      if (after.test(i, j) || far_commute(w[i], w[j], k)) continue;
      after.set(i, j);
      after.or_row(i, j);
    }
  }
  for (std::size_t i = 0; i < len; ++i) {
    for (std::size_t j = i + 1; j < len; ++j) {
      if (after.test(i, j)) before.set(j, i);
    }
  }

  for (std::size_t first = 0; first < len; ++first) {
    for (std::size_t last = first + 1; last < len; ++last) {
      if (w[first] == w[last] || std::popcount(w[first].mask() | w[last].mask()) != k + 1) continue;
      if (!after.test(first, last)) continue;
      const std::vector<std::size_t> inner = after.common(first, before, last, block_size);
      if (inner.size() + 2 != block_size) continue;

      std::vector<std::size_t> positions;
      positions.push_back(first);
      positions.insert(positions.end(), inner.begin(), inner.end());
      positions.push_back(last);
      Letters block;
      for (std::size_t p : positions) block.push_back(w[p]);
      if (!is_tetrahedron_block(block, k)) continue;

      Letters moved;
      moved.reserve(len);
      std::vector<bool> in_block(len, false);
      for (std::size_t p : positions) in_block[p] = true;
      for (std::size_t p = 0; p < len; ++p) {
        if (!in_block[p] && !after.test(first, p)) moved.push_back(w[p]);
      }
      moved.insert(moved.end(), block.rbegin(), block.rend());
      for (std::size_t p = first + 1; p < len; ++p) {
        if (!in_block[p] && after.test(first, p)) moved.push_back(w[p]);
      }
      out.push_back(normal_form(moved, k));
    }
  }
}

// Moves each letter that can be brought to the front over to the back.
void rotation_neighbors(const Letters& w, int k, std::vector<Letters>& out) {
  for (std::size_t i = 0; i < w.size(); ++i) {
    bool minimal = true;
    for (std::size_t j = 0; j < i && minimal; ++j) minimal = far_commute(w[j], w[i], k);
    if (!minimal) continue;
    Letters rotated;
    rotated.reserve(w.size());
    for (std::size_t j = 0; j < w.size(); ++j) {
      if (j != i) rotated.push_back(w[j]);
    }
    rotated.push_back(w[i]);
    out.push_back(normal_form(rotated, k));
  }
}

// Rotations and cancellations only, applied greedily until neither helps.
Letters cyclic_cancel_all(Letters w, int k) {
  w = normal_form(cancel_all(w, k), k);
  std::vector<Letters> rotations;
  bool changed = true;
  while (changed) {
    changed = false;
    rotations.clear();
    rotation_neighbors(w, k, rotations);
    for (const Letters& r : rotations) {
      if (has_cancellation(r, k)) {
        w = normal_form(cancel_all(r, k), k);
        changed = true;
        break;
      }
    }
  }
  return w;
}

// Whether `b` is a cyclic shift of `a` up to commutation, exploring at most `budget` classes.
bool rotation_equivalent(const Letters& a, const Letters& b, int k, std::size_t budget) {
  if (a.size() != b.size()) return false;
  LettersSet seen{a};
  std::deque<Letters> queue{a};
  std::vector<Letters> next;
  while (!queue.empty() && seen.size() <= budget) {
    if (queue.front() == b) return true;
    next.clear();
    rotation_neighbors(queue.front(), k, next);
    queue.pop_front();
    for (Letters& w : next) {
      if (seen.insert(w).second) queue.push_back(std::move(w));
    }
  }
  return false;
}

struct SearchResult {
  std::vector<Letters> minimal;  // sorted
  std::size_t visited = 0;
  bool exhausted = false;
};

// Level-by-level search. Each level is the full closure of its seed set under
// length-preserving moves; the next level is seeded by every cancellation
// found in it, keeping the shortest results.
SearchResult search(const Letters& start, int k, std::size_t budget, bool cyclic) {
  SearchResult result;
  std::vector<Letters> level{cyclic ? cyclic_cancel_all(start, k) : normal_form(cancel_all(normal_form(start, k), k), k)};
  std::vector<Letters> scratch;
  while (true) {
    LettersSet seen;
    std::deque<const Letters*> queue;
    std::set<Letters> shorter;
    for (const Letters& seed : level) {
      auto [it, inserted] = seen.insert(seed);
      if (inserted) {
        ++result.visited;
        queue.push_back(&*it);
      }
    }
    while (!queue.empty() && !result.exhausted) {
      const Letters& node = *queue.front();
      queue.pop_front();
      if (has_cancellation(node, k)) shorter.insert(normal_form(cancel_all(node, k), k));
      scratch.clear();
      tetrahedron_neighbors(node, k, scratch);
      if (cyclic) rotation_neighbors(node, k, scratch);
      for (Letters& next : scratch) {
        auto [it, inserted] = seen.insert(std::move(next));
        if (!inserted) continue;
        if (++result.visited > budget) {
          result.exhausted = true;
          break;
        }
        queue.push_back(&*it);
      }
    }

    if (shorter.empty() || result.exhausted) {
      std::vector<Letters> pool(seen.begin(), seen.end());
      pool.insert(pool.end(), shorter.begin(), shorter.end());
      std::size_t best = SIZE_MAX;
      for (const Letters& w : pool) best = std::min(best, w.size());
      for (Letters& w : pool) {
        if (w.size() == best) result.minimal.push_back(std::move(w));
      }
      std::sort(result.minimal.begin(), result.minimal.end());
      result.minimal.erase(std::unique(result.minimal.begin(), result.minimal.end()), result.minimal.end());
      return result;
    }
    std::size_t best = SIZE_MAX;
    for (const Letters& w : shorter) best = std::min(best, w.size());
    level.clear();
    for (const Letters& w : shorter) {
      if (w.size() == best) level.push_back(w);
    }
  }
}

template <typename T>
bool sorted_intersect(const std::vector<T>& a, const std::vector<T>& b) {
  auto i = a.begin();
  auto j = b.begin();
  while (i != a.end() && j != b.end()) {
    if (*i < *j) {
      ++i;
    } else if (*j < *i) {
      ++j;
    } else {
      return true;
    }
  }
  return false;
}

void require_same_signature(Signature a, Signature b) {
  if (a != b) throw Error(Errc::signature_mismatch, "words belong to different groups");
}

void require_k2(Signature sig, const char* what) {
  if (sig.k != 2) {
    throw Error(Errc::unsupported_signature, std::string(what) + " is only available for k = 2");
  }
}

[[noreturn]] void budget_exhausted(std::size_t budget) {
  throw Error(Errc::budget_exhausted, "search budget of " + std::to_string(budget) + " classes exhausted");
}

}  // namespace

const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::equal:
      return "equal";
    case Verdict::distinct:
      return "distinct";
    case Verdict::unknown:
      return "unknown";
  }
  return "unknown";
}

Word commutation_normal_form(const Word& word) {
  return Word{word.signature, normal_form(word.letters, word.signature.k)};
}

Word cancel_commuting_pairs(const Word& word) {
  return Word{word.signature, cancel_all(word.letters, word.signature.k)};
}

Reduction reduce(const Word& word, const ReduceOptions& options) {
  SearchResult found = search(word.letters, word.signature.k, options.budget, false);
  Reduction out;
  out.visited = found.visited;
  out.exhausted = found.exhausted;
  for (Letters& w : found.minimal) out.minimal.push_back(Word{word.signature, std::move(w)});
  return out;
}

Word canonical_form(const Word& word, const ReduceOptions& options) {
  require_k2(word.signature, "canonical_form");
  Reduction r = reduce(word, options);
  if (r.exhausted) budget_exhausted(options.budget);
  return r.minimal.front();
}

Verdict are_equal(const Word& a, const Word& b, const ReduceOptions& options) {
  require_same_signature(a.signature, b.signature);
  if (parity_vector(a) != parity_vector(b)) return Verdict::distinct;
  if (a.signature.k == 2) {
    return canonical_form(a, options) == canonical_form(b, options) ? Verdict::equal : Verdict::distinct;
  }
  const int k = a.signature.k;
  if (normal_form(cancel_all(a.letters, k), k) == normal_form(cancel_all(b.letters, k), k)) return Verdict::equal;
  const Reduction ra = reduce(a, options);
  const Reduction rb = reduce(b, options);
  if (sorted_intersect(ra.minimal, rb.minimal)) return Verdict::equal;
  if (!ra.exhausted && !rb.exhausted && ra.length() != rb.length()) return Verdict::distinct;
  return Verdict::unknown;
}

Complexity complexity(const Word& word, const ReduceOptions& options) {
  const Reduction r = reduce(word, options);
  return Complexity{r.length(), !r.exhausted};
}

CyclicReduction cyclic_reduce(const CyclicWord& word, const ReduceOptions& options) {
  SearchResult found = search(word.letters, word.signature.k, options.budget, true);
  CyclicReduction out;
  out.visited = found.visited;
  out.exhausted = found.exhausted;
  for (Letters& w : found.minimal) out.minimal.push_back(CyclicWord{word.signature, std::move(w)});
  return out;
}

CyclicWord cyclic_canonical_form(const CyclicWord& word, const ReduceOptions& options) {
  require_k2(word.signature, "cyclic_canonical_form");
  CyclicReduction r = cyclic_reduce(word, options);
  if (r.exhausted) budget_exhausted(options.budget);
  return r.minimal.front();
}

Verdict are_conjugate(const CyclicWord& a, const CyclicWord& b, const ReduceOptions& options) {
  require_same_signature(a.signature, b.signature);
  if (parity_vector(a) != parity_vector(b)) return Verdict::distinct;
  if (a.signature.k == 2) {
    const CyclicWord ca = cyclic_canonical_form(a, options);
    const CyclicWord cb = cyclic_canonical_form(b, options);
    return ca.letters == cb.letters ? Verdict::equal : Verdict::distinct;
  }
  const int k = a.signature.k;
  if (rotation_equivalent(cyclic_cancel_all(a.letters, k), cyclic_cancel_all(b.letters, k), k, options.budget)) {
    return Verdict::equal;
  }
  const CyclicReduction ra = cyclic_reduce(a, options);
  const CyclicReduction rb = cyclic_reduce(b, options);
  std::vector<Letters> la;
  std::vector<Letters> lb;
  for (const CyclicWord& w : ra.minimal) la.push_back(w.letters);
  for (const CyclicWord& w : rb.minimal) lb.push_back(w.letters);
  return sorted_intersect(la, lb) ? Verdict::equal : Verdict::unknown;
}

Verdict insertion_oracle(const Word& a, const Word& b, const ReduceOptions& options) {
  require_same_signature(a.signature, b.signature);
  const Reduction rb = reduce(b, options);
  if (sorted_intersect(reduce(a, options).minimal, rb.minimal)) return Verdict::equal;
  for (Multiindex m : enumerate_generators(a.signature)) {
    for (std::size_t pos = 0; pos <= a.size(); ++pos) {
      Word grown = a;
      grown.letters.insert(grown.letters.begin() + static_cast<std::ptrdiff_t>(pos), 2, m);
      if (sorted_intersect(reduce(grown, options).minimal, rb.minimal)) return Verdict::equal;
    }
  }
  return Verdict::unknown;
}

}  // namespace kbraid
