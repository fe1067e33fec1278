#pragma once

#include <stdexcept>
#include <string>

namespace kbraid {

enum class Errc {
  invalid_argument,
  parse_error,
  move_not_applicable,
  unsupported_signature,
  signature_mismatch,
  budget_exhausted,
  degenerate_input,
  not_pleasant,
};

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what) : std::runtime_error(what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace kbraid
