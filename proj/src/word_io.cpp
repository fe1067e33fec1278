#include "kbraid/word_io.hpp"

#include <cctype>
#include <charconv>

namespace kbraid {

namespace {

[[noreturn]] void fail(const std::string& message) { throw Error(Errc::parse_error, message); }

class Cursor {
 public:
  explicit Cursor(std::string_view text) : text_(text) {}

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])) != 0) ++pos_;
  }
  bool done() {
    skip_space();
    return pos_ >= text_.size();
  }
  char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }
  bool consume(std::string_view token) {
    if (text_.substr(pos_, token.size()) == token) {
      pos_ += token.size();
      return true;
    }
    return false;
  }
  void expect(char c) {
    skip_space();
    if (peek() != c) fail(std::string("expected '") + c + "' at offset " + std::to_string(pos_));
    ++pos_;
  }
  int integer() {
    skip_space();
    int value = 0;
    const auto [end, ec] = std::from_chars(text_.data() + pos_, text_.data() + text_.size(), value);
    if (ec != std::errc()) fail("expected integer at offset " + std::to_string(pos_));
    pos_ = static_cast<std::size_t>(end - text_.data());
    return value;
  }
  std::size_t position() const { return pos_; }
  void rewind(std::size_t pos) { pos_ = pos; }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
};

std::pair<Signature, std::vector<Multiindex>> parse_letters(std::string_view text, std::optional<Signature> sig) {
  Cursor cur(text);
  cur.skip_space();
  if (cur.consume("n=")) {
    const int n = cur.integer();
    cur.skip_space();
    if (!cur.consume("k=")) fail("header must read \"n=<n> k=<k>:\"");
    const int k = cur.integer();
    cur.expect(':');
    Signature header;
    try {
      header = make_signature(n, k);
    } catch (const Error& e) {
      fail(e.what());
    }
    if (sig && *sig != header) fail("header signature disagrees with the requested one");
    sig = header;
  }
  if (!sig) fail("word has no signature header and none was supplied");

  std::vector<Multiindex> letters;
  bool saw_identity = false;
  while (!cur.done()) {
    if (cur.peek() == 'e') {
      cur.consume("e");
      saw_identity = true;
      continue;
    }
    cur.expect('(');
    std::vector<int> values;
    cur.skip_space();
    while (cur.peek() != ')') {
      if (cur.peek() == '\0') fail("unterminated letter");
      values.push_back(cur.integer());
      cur.skip_space();
    }
    cur.expect(')');
    try {
      letters.push_back(make_multiindex(values, *sig));
    } catch (const Error& e) {
      fail(e.what());
    }
  }
  if (saw_identity && !letters.empty()) fail("\"e\" cannot be mixed with letters");
  return {*sig, std::move(letters)};
}

std::string format_letters(Signature sig, const std::vector<Multiindex>& letters, bool with_header) {
  std::string out;
  if (with_header) out = "n=" + std::to_string(sig.n) + " k=" + std::to_string(sig.k) + ": ";
  if (letters.empty()) return out + "e";
  for (std::size_t i = 0; i < letters.size(); ++i) {
    if (i != 0) out += ' ';
    out += letters[i].to_string();
  }
  return out;
}

}  // namespace

Word parse_word(std::string_view text, std::optional<Signature> sig) {
  auto [signature, letters] = parse_letters(text, sig);
  return Word{signature, std::move(letters)};
}

CyclicWord parse_cyclic_word(std::string_view text, std::optional<Signature> sig) {
  auto [signature, letters] = parse_letters(text, sig);
  return CyclicWord{signature, std::move(letters)};
}

std::string format_word(const Word& word, bool with_header) {
  return format_letters(word.signature, word.letters, with_header);
}

std::string format_cyclic_word(const CyclicWord& word, bool with_header) {
  return format_letters(word.signature, word.letters, with_header);
}

std::string format_relations(const std::vector<Relation>& relations) {
  std::string out;
  for (const Relation& rel : relations) {
    out += format_word(rel.left);
    out += '\t';
    out += format_word(rel.right);
    out += '\n';
  }
  return out;
}

}  // namespace kbraid
