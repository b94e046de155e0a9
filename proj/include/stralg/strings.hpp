#pragma once

// Strings, infinite strings and bands over a string algebra.
//
// A syllable is a words::Letter whose base is an arrow index; `inverse`
// marks the formal inverse.

#include <compare>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "stralg/algebra.hpp"
#include "stralg/words.hpp"

namespace stralg::strings {

using algebra::StringAlgebra;
using algebra::VertexIdx;
using words::Letter;
using words::Seq;

// Syllable data derived from the algebra.
VertexIdx syl_source(const StringAlgebra& A, Letter s);
VertexIdx syl_target(const StringAlgebra& A, Letter s);
int syl_sigma(const StringAlgebra& A, Letter s);
int syl_eps(const StringAlgebra& A, Letter s);

/// A finite string: either 1_{(v,i)} or a nonempty syllable sequence with
/// cached endpoints and signs. Construct through make_string or zero().
class Str {
 public:
  static Str zero(VertexIdx v, int side);

  bool is_zero() const { return syl_.empty(); }
  std::size_t size() const { return syl_.size(); }
  const Seq& syllables() const { return syl_; }
  VertexIdx source() const { return s_; }
  VertexIdx target() const { return t_; }
  int sigma() const { return sigma_; }
  int eps() const { return eps_; }
  /// Side i of a zero-length string.
  int side() const { return eps_; }

  Str inverted() const;

  friend bool operator==(const Str&, const Str&) = default;
  friend std::strong_ordering operator<=>(const Str& a, const Str& b);

 private:
  friend Str make_string(const StringAlgebra&, const Seq&);
  Seq syl_;
  VertexIdx s_ = 0, t_ = 0;
  int sigma_ = 1, eps_ = -1;
};

enum class StringClause { composition, backtrack, relation };
std::string_view to_string(StringClause c);

struct StringIssue {
  StringClause clause;
  std::size_t position;  // index of the syllable completing the violation
  std::string message;
};

/// First violated clause of a nonempty syllable sequence, if any.
std::optional<StringIssue> check_string(const StringAlgebra& A, const Seq& syl);
/// Throws InputError naming the clause and position.
Str make_string(const StringAlgebra& A, const Seq& syl);

/// `b1 a1' a2' b2`, or `1(v2,+1)` for a zero-length string.
Str parse_string(const StringAlgebra& A, std::string_view text);
Seq parse_syllables(const StringAlgebra& A, std::string_view text);
std::string format_string(const StringAlgebra& A, const Str& x);
std::string format_syllables(const StringAlgebra& A, const Seq& s);

/// Zero-length string at gap g of a nonempty x (0 <= g <= |x|).
Str gap_string(const StringAlgebra& A, const Str& x, std::size_t g);

struct ConcatResult {
  std::optional<Str> value;
  std::string reason;  // set when undefined
};
ConcatResult concat(const StringAlgebra& A, const Str& x, const Str& y);

// Factor and image substrings --------------------------------------------

enum class SubClause {
  equal,     // u = x
  left,      // u followed by a boundary syllable is a left substring
  right,     // a boundary syllable followed by u is a right substring
  interior,  // boundary syllables on both sides
};
std::string_view to_string(SubClause c);

struct SubOccurrence {
  Str sub;
  long long begin = 0;  // span [begin, end) in syllable positions
  long long end = 0;
  SubClause clause = SubClause::equal;
  friend bool operator==(const SubOccurrence&, const SubOccurrence&) = default;
};

std::vector<SubOccurrence> enumerate_factor_substrings(const StringAlgebra& A, const Str& x);
std::vector<SubOccurrence> enumerate_image_substrings(const StringAlgebra& A, const Str& x);

/// An infinite string given by an eventually periodic rep (RightInf, LeftInf
/// or BiInf) of syllables, or a finite Window of a longer one.
struct InfStr {
  words::WordRep rep;
};

/// Validates every window up to preperiod + 2 periods. Throws InputError.
InfStr make_inf_string(const StringAlgebra& A, words::WordRep rep);
InfStr inverted(const InfStr& x);

/// Factor/image substrings of an infinite string of length <= max_len
/// whose start lies in the offset range reported by words::find_subword for
/// the same rep. Offsets use that function's origin convention.
std::vector<SubOccurrence> enumerate_factor_substrings(const StringAlgebra& A, const InfStr& x,
                                                       std::size_t max_len);
std::vector<SubOccurrence> enumerate_image_substrings(const StringAlgebra& A, const InfStr& x,
                                                      std::size_t max_len);

// Bands and enumeration ---------------------------------------------------

struct BandCheck {
  bool ok = false;
  std::vector<std::string> reasons;
};
BandCheck is_band(const StringAlgebra& A, const Str& x);

/// Least rotation of b or b⁻¹ that starts inverse and ends direct.
Str canonical_band(const StringAlgebra& A, const Str& b);

inline constexpr std::size_t kMaxEnumerationLength = 24;
inline constexpr std::size_t kMaxEnumerationCount = 2'000'000;

/// All strings of length <= max_len, sorted. Throws CapExceeded.
std::vector<Str> enumerate_strings(const StringAlgebra& A, std::size_t max_len);
/// All bands of length <= max_len in canonical form, sorted.
std::vector<Str> enumerate_bands(const StringAlgebra& A, std::size_t max_len);

}  // namespace stralg::strings
