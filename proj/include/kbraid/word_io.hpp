#pragma once

// Text format for words: optional header "n=<n> k=<k>:" followed by letters
// "(i1 i2 ... ik)" separated by whitespace. The identity is spelled "e".

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "kbraid/group.hpp"

namespace kbraid {

// The signature comes from the header, else from `sig`; both present must agree.
// Throws Errc::parse_error on malformed text.
Word parse_word(std::string_view text, std::optional<Signature> sig = std::nullopt);
CyclicWord parse_cyclic_word(std::string_view text, std::optional<Signature> sig = std::nullopt);

std::string format_word(const Word& word, bool with_header = false);
std::string format_cyclic_word(const CyclicWord& word, bool with_header = false);

// One relation per line: left word, TAB, right word.
std::string format_relations(const std::vector<Relation>& relations);

}  // namespace kbraid
