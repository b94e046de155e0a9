#pragma once

// Words over a signed alphabet A ⊔ A⁻¹: finite words, eventually periodic
// infinite words, and finite windows of generated infinite words.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace stralg::words {

/// A letter b or its formal inverse b⁻¹. `base` indexes the alphabet A.
struct Letter {
  std::uint32_t base = 0;
  bool inverse = false;

  constexpr Letter inverted() const { return {base, !inverse}; }
  constexpr std::uint32_t code() const { return 2 * base + (inverse ? 1U : 0U); }
  static constexpr Letter from_code(std::uint32_t c) { return {c / 2, (c & 1U) != 0}; }

  friend constexpr auto operator<=>(const Letter&, const Letter&) = default;
};

using Seq = std::vector<Letter>;

struct Finite {
  Seq letters;
  friend bool operator==(const Finite&, const Finite&) = default;
};

/// prefix · period^ω
struct RightInf {
  Seq prefix;
  Seq period;
  friend bool operator==(const RightInf&, const RightInf&) = default;
};

/// ^ω period · suffix
struct LeftInf {
  Seq period;
  Seq suffix;
  friend bool operator==(const LeftInf&, const LeftInf&) = default;
};

/// ^ω left_period · core · right_period^ω, taken up to shift.
struct BiInf {
  Seq left_period;
  Seq core;
  Seq right_period;
  friend bool operator==(const BiInf&, const BiInf&) = default;
};

/// A finite window of an infinite word. `open_left` / `open_right` say
/// whether the word continues past that edge; a closed edge is a genuine end.
struct Window {
  Seq letters;
  bool certified_aperiodic = false;
  std::string origin;
  bool open_left = false;
  bool open_right = true;
  friend bool operator==(const Window&, const Window&) = default;
};

using WordRep = std::variant<Finite, RightInf, LeftInf, BiInf, Window>;

// Letter sequences -------------------------------------------------------

Seq invert(std::span<const Letter> w);
/// Smallest u with w = u^k.
Seq primitive_root(std::span<const Letter> w);
bool is_primitive(std::span<const Letter> w);

/// Binary alphabet {0} with 1 = 0⁻¹; "0110" or "0 1 1 0".
Seq binary(std::string_view text);
std::string binary_string(std::span<const Letter> w);
/// Two-letter alphabet {a, b} (bases 0 and 1, direct letters only).
Seq ab(std::string_view text);
std::string ab_string(std::span<const Letter> w);

// Representations --------------------------------------------------------

/// Primitive periods and preperiods absorbed into periods where possible.
WordRep normalize(const WordRep& w);
bool same_word(const WordRep& a, const WordRep& b);

WordRep invert(const WordRep& w);

bool is_finite(const WordRep& w);
/// Letters of a finite rep (Finite or Window); throws otherwise.
const Seq& finite_letters(const WordRep& w);

/// First n letters of a right-unbounded rep read left to right
/// (Finite reps are truncated to their length).
Seq unfold_right(const WordRep& w, std::size_t n);
/// Last n letters of a left-infinite rep, in reading order.
Seq unfold_left(const WordRep& w, std::size_t n);

// Subwords ---------------------------------------------------------------

/// Occurrences of a finite needle. For Finite/Window offsets are positions
/// in the letter sequence. For RightInf the origin is the first prefix
/// letter and offsets cover [0, |prefix| + 2·period). For LeftInf the origin
/// is the first suffix letter and offsets cover [-2·period, |suffix|).
/// For BiInf the origin is the first core letter and offsets cover
/// [-2·left_period, |core| + 2·right_period). Occurrences in the periodic
/// part repeat with the reported period(s).
struct SubwordHits {
  std::vector<long long> offsets;
  std::size_t left_period = 0;
  std::size_t right_period = 0;
  bool empty() const { return offsets.empty(); }
};

SubwordHits find_subword(std::span<const Letter> needle, const WordRep& hay);

/// A finite stretch of a rep around its canonical anchor range.
/// `letters[origin]` is the letter at offset 0 (the origin used by
/// find_subword). Anchors lo..hi are the canonical offsets; `letters` covers
/// at least `margin` extra letters past both ends of that range wherever the
/// word continues. `left_end` / `right_end` say whether the first / last
/// letter of `letters` is a genuine end of the word.
struct Materialized {
  Seq letters;
  long long origin = 0;
  long long lo = 0;
  long long hi = 0;
  bool left_end = true;
  bool right_end = true;
  std::size_t left_period = 0;
  std::size_t right_period = 0;
};

Materialized materialize(const WordRep& w, std::size_t margin);

enum class Periodicity {
  finite,
  periodic,
  almost_periodic_left,
  almost_periodic_right,
  almost_periodic_two_sided,
  aperiodic_certified,
  unknown_window,
};

std::string_view to_string(Periodicity p);
Periodicity classify_periodicity(const WordRep& w);

/// p(k) for k = 1..max_len over a window of length >= 4·max_len.
std::vector<std::size_t> complexity_profile(const Window& w, std::size_t max_len);

}  // namespace stralg::words
