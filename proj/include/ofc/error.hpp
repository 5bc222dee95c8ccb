#pragma once

#include <stdexcept>
#include <string>

namespace ofc {

// Domain error codes. The CLI prints the enumerator name verbatim, so these
// are part of the machine interface.
enum class Errc {
  empty_word,
  unpaired_label,
  not_four_valent,
  same_edge,
  not_intertwined,
  not_a_block,
  not_typed,
  no_toral_witness,
  disconnected,
  signature_mismatch,
  overflow,
  bad_argument,
};

inline const char* errc_name(Errc c) noexcept {
  switch (c) {
    case Errc::empty_word: return "EmptyWord";
    case Errc::unpaired_label: return "UnpairedLabel";
    case Errc::not_four_valent: return "NotFourValent";
    case Errc::same_edge: return "SameEdge";
    case Errc::not_intertwined: return "NotIntertwined";
    case Errc::not_a_block: return "NotABlock";
    case Errc::not_typed: return "NotTyped";
    case Errc::no_toral_witness: return "NoToralWitness";
    case Errc::disconnected: return "Disconnected";
    case Errc::signature_mismatch: return "SignatureMismatch";
    case Errc::overflow: return "Overflow";
    case Errc::bad_argument: return "BadArgument";
  }
  return "Unknown";
}

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& msg)
      : std::runtime_error(std::string(errc_name(code)) + ": " + msg), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& msg) { throw Error(code, msg); }

}  // namespace ofc

// Internal invariant check, active in all build types. These guard theorems
// the rest of the code relies on, not user input.
#define OFC_ASSERT(cond, what)                                      \
  do {                                                              \
    if (!(cond)) throw std::logic_error("invariant failed: " what); \
  } while (0)
