#pragma once

// Characteristic Sturmian prefixes, the window form of the Sturmian
// criterion, and the bridge to strings over the double Kronecker algebra.

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "stralg/bricks.hpp"
#include "stralg/words.hpp"

namespace stralg::sturmian {

/// (d1, d2, ...) with d1 >= 0 and dn >= 1 afterwards; `period` repeats
/// forever when nonempty.
struct DirectiveSequence {
  std::vector<unsigned> prefix;
  std::vector<unsigned> period;

  bool infinite() const { return !period.empty(); }
  /// k-th term, k >= 1; nullopt past the end of a finite sequence.
  std::optional<unsigned> term(std::size_t k) const;
  std::string to_string() const;
};

/// "1,(1)", "0,2,(1,3)", "2,1,1". Throws InputError.
DirectiveSequence parse_directive(std::string_view text);

inline constexpr std::size_t kMaxPrefix = 10'000'000;

/// Prefix of length n of the standard-word limit s_{-1} = b, s_0 = a,
/// s_k = s_{k-1}^{d_k} s_{k-2}. A finite sequence continues with its last
/// standard word repeated, and the window is then not certified aperiodic.
words::Window characteristic_prefix(const DirectiveSequence& d, std::size_t n);

struct SturmianViolation {
  words::Seq middle;  // w′ with both a w′ a and b w′ b occurring
  std::size_t a_pos = 0;
  std::size_t b_pos = 0;
};

/// Shortest w′ such that a w′ a and b w′ b are subwords of the window.
std::optional<SturmianViolation> sturmian_window_check(const words::Window& w);

enum class BridgeSide { right_infinite, bi_infinite };

/// Presentation text of the double Kronecker algebra.
std::string_view double_kronecker_text();

struct BridgeResult {
  words::Seq string;           // syllables over the double Kronecker algebra
  mia::PointedWord binary;     // parity word of the string
  BrickReport report;          // automaton method on the binary word
  std::optional<words::Seq> middle;  // w′ read back from the witness blocks
  bool sturmian_violation = false;   // criterion on w (bi-infinite) or on a·w / b·w
  bool consistent = false;           // witness found iff sturmian_violation
};

/// Substitutes a ↦ b1 a1', b ↦ a2' b2 and runs the windowed brick-word check.
BridgeResult bridge(const words::Window& w, BridgeSide side);

}  // namespace stralg::sturmian
