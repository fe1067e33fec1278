#include <random>

#include "doctest.h"
#include "kbraid/reduce.hpp"
#include "kbraid/word_io.hpp"
#include "oracles.hpp"

using namespace kbraid;

namespace {

Word w(const char* text, int n, int k) { return parse_word(text, make_signature(n, k)); }
CyclicWord cw(const char* text, int n, int k) { return parse_cyclic_word(text, make_signature(n, k)); }

Word random_word(std::mt19937_64& rng, Signature s, std::size_t max_len) {
  const auto gens = enumerate_generators(s);
  Word word{s, {}};
  const std::size_t len = rng() % (max_len + 1);
  for (std::size_t i = 0; i < len; ++i) word.letters.push_back(gens[rng() % gens.size()]);
  return word;
}

// Applies one random relation move, including a_m a_m insertions.
Word random_move(std::mt19937_64& rng, const Word& word) {
  std::vector<Word> options = neighbors(word);
  for (std::size_t i = 0; i + 1 < word.size(); ++i) {
    if (word.letters[i] == word.letters[i + 1]) options.push_back(apply_involution(word, i));
  }
  const auto gens = enumerate_generators(word.signature);
  Word grown = word;
  grown.letters.insert(grown.letters.begin() + static_cast<std::ptrdiff_t>(rng() % (word.size() + 1)), 2,
                       gens[rng() % gens.size()]);
  options.push_back(grown);
  return options[rng() % options.size()];
}

const char* kAbcSquared = "(1 2) (1 3) (2 3) (1 2) (1 3) (2 3)";

}  // namespace

TEST_CASE("commutation normal form and pair cancellation") {
  CHECK(format_word(commutation_normal_form(w("(3 4) (1 2)", 4, 2))) == "(1 2) (3 4)");
  CHECK(format_word(commutation_normal_form(w("(2 4) (1 3) (1 2)", 4, 2))) == "(1 3) (2 4) (1 2)");
  CHECK(cancel_commuting_pairs(w("(1 2) (3 4) (1 2)", 4, 2)).letters == w("(3 4)", 4, 2).letters);
  CHECK(cancel_commuting_pairs(w("(1 2) (1 3) (1 2)", 3, 2)).size() == 3);
}

TEST_CASE("reduce examples") {
  const Reduction abc = reduce(w(kAbcSquared, 3, 2));
  REQUIRE(abc.minimal.size() == 1);
  CHECK(abc.minimal.front().empty());
  CHECK_FALSE(abc.exhausted);

  CHECK(reduce(w("(1 2) (1 2)", 3, 2)).minimal.front().empty());

  const Word stuck = w("(1 2) (1 3) (1 2) (1 3)", 3, 2);
  const Reduction r = reduce(stuck);
  const auto oracle_closure = oracle::exhaustive_closure(stuck);
  CHECK(oracle_closure.min_length == 4);
  CHECK(r.length() == 4);
  std::set<Word> expected;
  for (const Word& x : oracle_closure.shortest) expected.insert(commutation_normal_form(x));
  CHECK(std::set<Word>(r.minimal.begin(), r.minimal.end()) == expected);
}

TEST_CASE("reduce budget exhaustion is reported") {
  ReduceOptions tiny;
  tiny.budget = 1;
  // The tetrahedron move yields a second class, exceeding a budget of one.
  const Word two_classes = w("(1 2) (1 3) (2 3) (1 4)", 4, 2);
  const Reduction r = reduce(two_classes, tiny);
  CHECK(r.exhausted);
  CHECK_THROWS_AS(canonical_form(two_classes, tiny), Error);
  const Complexity c = complexity(two_classes, tiny);
  CHECK_FALSE(c.exact);
  CHECK(c.length == 4);
}

TEST_CASE("canonical_form examples") {
  CHECK(format_word(canonical_form(w("(2 4) (1 3)", 4, 2))) == "(1 3) (2 4)");
  CHECK(canonical_form(w(kAbcSquared, 3, 2)).empty());
  CHECK(format_word(canonical_form(w("(1 2) (1 3)", 3, 2))) == "(1 2) (1 3)");
  try {
    canonical_form(w("(1 2 3)", 4, 3));
    FAIL("expected unsupported signature");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::unsupported_signature);
  }
}

TEST_CASE("are_equal examples") {
  CHECK(are_equal(w("(1 2) (3 4)", 4, 2), w("(3 4) (1 2)", 4, 2)) == Verdict::equal);
  CHECK(are_equal(w("(1 2)", 3, 2), w("(1 3)", 3, 2)) == Verdict::distinct);
  CHECK(are_equal(w("(1 2 3) (1 2 4) (1 3 4) (2 3 4)", 4, 3), w("(2 3 4) (1 3 4) (1 2 4) (1 2 3)", 4, 3)) ==
        Verdict::equal);
  CHECK_THROWS_AS(are_equal(w("(1 2)", 3, 2), w("(1 2)", 4, 2)), Error);
}

TEST_CASE("complexity examples") {
  CHECK(complexity(w(kAbcSquared, 3, 2)).length == 0);
  CHECK(complexity(w("(1 2)", 3, 2)).length == 1);
  CHECK(complexity(w("(1 2) (1 3) (1 2) (1 3)", 3, 2)).length == 4);
  CHECK(complexity(w("e", 3, 2)).length == 0);
}

TEST_CASE("cyclic canonical form examples") {
  CHECK(format_cyclic_word(cyclic_canonical_form(cw("(1 2) (1 3) (1 2)", 3, 2))) == "(1 3)");
  CHECK(cyclic_canonical_form(cw("e", 3, 2)).empty());
  CHECK(cyclic_canonical_form(cw("(1 2) (3 4)", 4, 2)).letters ==
        cyclic_canonical_form(cw("(3 4) (1 2)", 4, 2)).letters);
  CHECK_THROWS_AS(cyclic_canonical_form(cw("(1 2 3)", 4, 3)), Error);
}

TEST_CASE("are_conjugate examples") {
  CHECK(are_conjugate(cw("(1 2) (1 3)", 3, 2), cw("(1 3) (1 2)", 3, 2)) == Verdict::equal);
  CHECK(are_conjugate(cw("(1 2)", 3, 2), cw("(1 3)", 3, 2)) == Verdict::distinct);

  // Oracle: literal closure over rotations, moves and wrap-around cancellation.
  const auto cyclic_closure = [](const CyclicWord& start) {
    std::set<std::vector<Multiindex>> seen{start.letters};
    std::deque<std::vector<Multiindex>> queue{start.letters};
    while (!queue.empty()) {
      const auto letters = queue.front();
      queue.pop_front();
      const Word as_word{start.signature, letters};
      std::vector<Word> next = neighbors(as_word);
      if (!letters.empty()) {
        Word rotated = as_word;
        std::rotate(rotated.letters.begin(), rotated.letters.begin() + 1, rotated.letters.end());
        next.push_back(rotated);
      }
      for (std::size_t i = 0; i + 1 < letters.size(); ++i) {
        if (letters[i] == letters[i + 1]) next.push_back(apply_involution(as_word, i));
      }
      for (const Word& v : next) {
        if (seen.insert(v.letters).second) queue.push_back(v.letters);
      }
    }
    return seen;
  };
  const CyclicWord a = cw("(1 2 3) (1 2 4) (1 3 4) (2 3 4)", 4, 3);
  const CyclicWord b = cw("(1 2 3) (2 3 4) (1 3 4) (1 2 4)", 4, 3);
  const auto ca = cyclic_closure(a);
  const auto cb = cyclic_closure(b);
  bool meet = false;
  for (const auto& x : ca) meet = meet || cb.count(x) > 0;
  CHECK(meet);  // rotation + tetrahedron reversal connect the two
  CHECK(are_conjugate(a, b) == Verdict::equal);
}

TEST_CASE("reduce agrees with exhaustive word-level search") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 400; ++trial) {
    const int n = 3 + static_cast<int>(rng() % 3);
    const int k = 2 + static_cast<int>(rng() % static_cast<unsigned>(n - 2));
    const Word word = random_word(rng, make_signature(n, k), 7);
    const auto truth = oracle::exhaustive_closure(word);
    const Reduction r = reduce(word);
    REQUIRE_FALSE(r.exhausted);
    CHECK_MESSAGE(r.length() == truth.min_length, format_word(word, true));
    std::set<Word> expected;
    for (const Word& x : truth.shortest) expected.insert(commutation_normal_form(x));
    CHECK_MESSAGE(std::set<Word>(r.minimal.begin(), r.minimal.end()) == expected, format_word(word, true));
  }
}

TEST_CASE("reduce properties") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 3 + static_cast<int>(rng() % 4);
    const int k = 2 + static_cast<int>(rng() % static_cast<unsigned>(std::min(n - 2, 2)));
    const Word word = random_word(rng, make_signature(n, k), 10);
    const Reduction r = reduce(word);
    REQUIRE_FALSE(r.exhausted);
    for (const Word& m : r.minimal) {
      CHECK(m.size() == r.length());
      CHECK(parity_vector(m) == parity_vector(word));
    }
    const Word& pick = r.minimal[rng() % r.minimal.size()];
    const Reduction again = reduce(pick);
    CHECK(std::find(again.minimal.begin(), again.minimal.end(), pick) != again.minimal.end());
  }
}

TEST_CASE("canonical form is constant along random move sequences (k = 2)") {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 3 + static_cast<int>(rng() % 4);
    const Word start = random_word(rng, make_signature(n, 2), 10);
    const Word canon = canonical_form(start);
    Word moved = start;
    const std::size_t steps = 1 + rng() % 20;
    for (std::size_t s = 0; s < steps; ++s) {
      moved = random_move(rng, moved);
      CHECK_MESSAGE(canonical_form(moved) == canon, format_word(start) << " -> " << format_word(moved));
    }
  }
}

TEST_CASE("are_equal matches the G_3^2 presentation oracle on short words") {
  oracle::G32Presentation truth(10);
  const Signature s = make_signature(3, 2);
  const auto gens = enumerate_generators(s);  // a = (1 2), b = (1 3), c = (2 3)
  std::vector<std::vector<int>> words{{}};
  for (std::size_t len = 1; len <= 4; ++len) {
    const std::size_t before = words.size();
    for (std::size_t i = 0; i < before; ++i) {
      if (words[i].size() + 1 != len) continue;
      for (int g = 0; g < 3; ++g) {
        auto next = words[i];
        next.push_back(g);
        words.push_back(next);
      }
    }
  }
  const auto to_word = [&](const std::vector<int>& code) {
    Word out{s, {}};
    for (int g : code) out.letters.push_back(gens[static_cast<std::size_t>(g)]);
    return out;
  };
  for (std::size_t i = 0; i < words.size(); ++i) {
    for (std::size_t j = i; j < words.size(); ++j) {
      const auto answer = truth.compare(words[i], words[j]);
      REQUIRE(answer != oracle::G32Presentation::Answer::undecided);
      const Verdict v = are_equal(to_word(words[i]), to_word(words[j]));
      CHECK((v == Verdict::equal) == (answer == oracle::G32Presentation::Answer::equal));
    }
  }
}

TEST_CASE("insertion oracle") {
  CHECK(insertion_oracle(w("(1 2 3)", 4, 3), w("(1 2 3)", 4, 3)) == Verdict::equal);
  CHECK(insertion_oracle(w("(1 2 3) (1 2 4) (1 3 4) (2 3 4)", 4, 3), w("(2 3 4) (1 3 4) (1 2 4) (1 2 3)", 4, 3)) ==
        Verdict::equal);
}
