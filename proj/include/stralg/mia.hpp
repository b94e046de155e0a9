#pragma once

// Multi-entry inverse automata and the pointed words they accept.

#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "stralg/report.hpp"
#include "stralg/words.hpp"

namespace stralg::mia {

using words::Letter;
using words::Seq;
using words::WordRep;
using StateId = std::uint32_t;
inline constexpr StateId kNone = std::numeric_limits<StateId>::max();

/// Deterministic partial automaton over A ⊔ A⁻¹ with initial states, an
/// involution on them and the projection e onto initial states.
class Mia {
 public:
  Mia() = default;
  explicit Mia(std::vector<std::string> letter_names);

  StateId add_state(std::string name);
  /// Declares v and w initial and mutually inverse (v == w is recorded as
  /// given; validate_mia flags it).
  void set_initial_pair(StateId v, StateId w);
  void set_e(StateId v, StateId target);
  void set_transition(StateId from, Letter b, StateId to);

  std::size_t num_states() const { return names_.size(); }
  std::size_t alphabet_size() const { return letters_.size(); }
  const std::vector<std::string>& letter_names() const { return letters_; }
  /// Base name, primed for inverse letters; the binary alphabet {0} prints
  /// its inverse letter as 1.
  std::string letter_name(Letter b) const;
  std::optional<Letter> find_letter(std::string_view token) const;
  bool is_binary() const { return letters_.size() == 1 && letters_[0] == "0"; }

  const std::string& name(StateId v) const { return names_[v]; }
  std::optional<StateId> find_state(std::string_view name) const;

  bool is_initial(StateId v) const { return inverse_[v] != kNone; }
  StateId initial_inverse(StateId v) const { return inverse_[v]; }
  StateId e(StateId v) const { return e_[v]; }
  std::vector<StateId> initial_states() const;

  StateId next(StateId v, Letter b) const {
    return b.code() < 2 * letters_.size() ? table_[v * 2 * letters_.size() + b.code()] : kNone;
  }

 private:
  std::vector<std::string> letters_;
  std::vector<std::string> names_;
  std::vector<StateId> inverse_;
  std::vector<StateId> e_;
  std::vector<StateId> table_;  // row-major: state × letter code
};

struct MiaIssue {
  int axiom = 0;  // 1, 2 or 3
  std::string message;
};

/// Exhaustive check of the three axioms; empty when valid.
std::vector<MiaIssue> validate_mia(const Mia& m);

/// t̃(v, w); kNone when undefined.
StateId run(const Mia& m, StateId v, std::span<const Letter> w);

// Pointed words -------------------------------------------------------------

/// (left, basepoint, right). `left` is Finite, LeftInf or a Window; `right` is
/// Finite, RightInf or a Window. BiInf is not used for either part.
struct PointedWord {
  WordRep left = words::Finite{};
  StateId base = 0;
  WordRep right = words::Finite{};
};

/// First failed condition of Definition-style validity, if any. Infinite
/// parts are checked until the run state repeats at period boundaries; the
/// triple condition is checked for right prefixes up to preperiod + 2 periods.
std::optional<std::string> check_word(const Mia& m, const PointedWord& w);
/// Throws InputError on an invalid word.
void require_word(const Mia& m, const PointedWord& w);

PointedWord invert(const Mia& m, const PointedWord& w);

/// Two-sided letter sequence of a word with finite parts.
Seq finite_word(const PointedWord& w);

bool equivalent(const Mia& m, const PointedWord& a, const PointedWord& b);

/// Moves the basepoint `shift` letters to the right (negative: left). Only
/// for words with finite parts or periodic infinite parts; the shift must
/// stay inside the word.
PointedWord shift_basepoint(const Mia& m, const PointedWord& w, long long shift);

struct Occurrence {
  long long anchor = 0;  // host gap offset matched with the needle basepoint
  long long begin = 0;   // host span [begin, end) covered by the needle
  long long end = 0;
  std::optional<Letter> before;
  std::optional<Letter> after;
};

struct OccurrenceKind {
  bool factor = false;
  bool image = false;
};

/// Occurrences of a finite needle in a finite or eventually periodic host.
/// Anchors of infinite hosts lie in the canonical range of words::materialize.
std::vector<Occurrence> subword_occurrences(const Mia& m, const PointedWord& needle, const PointedWord& host);
OccurrenceKind classify_occurrence(const Occurrence& occ);

// Witness search -------------------------------------------------------------

/// Letters with a label on every gap (labels.size() == letters.size() + 1).
/// With `circular` set, the segment is one period of a bi-infinite periodic
/// labelled word and labels.back() == labels.front().
struct LabelledSegment {
  Seq letters;
  std::vector<std::uint32_t> labels;
  bool left_end = true;
  bool right_end = true;
  bool circular = false;
  long long origin = 0;  // offset of letters[0] relative to the basepoint
};

struct WitnessHit {
  std::size_t length = 0;
  long long factor_begin = 0;  // host offsets
  long long image_begin = 0;   // host offsets of the image span
  bool inverse = false;        // image span read in the inverse host
};

/// Shortest common factor/image occurrence pair, scanning lengths
/// 0..max_len. `label_inverse` maps each label to the label of the same gap
/// in the inverse word. Spans needing a boundary letter past an open end are
/// skipped. The pair (whole word, whole word, same orientation) is excluded.
std::optional<WitnessHit> find_witness(const LabelledSegment& seg, const std::vector<std::uint32_t>& label_inverse,
                                       std::size_t max_len);

/// Gap labels of a word with finite or window parts; labels are state ids.
LabelledSegment word_segment(const Mia& m, const PointedWord& w);
/// One labelled period of a pure periodic two-sided word (left LeftInf with
/// empty suffix, right RightInf with empty prefix and the same period).
/// Throws Unsupported for other shapes.
LabelledSegment periodic_segment(const Mia& m, const PointedWord& w);

struct BrickOptions {
  /// Witness length bound for periodic words, in labelled periods.
  std::size_t period_multiple = 1;
};

/// Brick word test. Finite words: exact. Windows: exhaustive within the
/// window, scope "window N". Eventually periodic infinite parts: not brick.
BrickReport is_brick_word(const Mia& m, const PointedWord& w, const BrickOptions& opt = {});
/// Weak brick word test; supports finite words, windows and pure periodic
/// two-sided words.
BrickReport is_weak_brick_word(const Mia& m, const PointedWord& w, const BrickOptions& opt = {});

// Relabelling ---------------------------------------------------------------

/// Map of base letters A → A′ extended to inverses.
struct AlphabetMap {
  std::vector<std::uint32_t> image;
  std::vector<std::string> target_names;
  Letter operator()(Letter b) const { return {image[b.base], b.inverse}; }
};

/// Constant map onto the binary alphabet {0}.
AlphabetMap parity_map(const Mia& m);

/// Throws InputError when φ is not surjective.
bool check_local_bijection(const Mia& m, const AlphabetMap& phi);
Mia relabel(const Mia& m, const AlphabetMap& phi);
PointedWord transport_forward(const PointedWord& w, const AlphabetMap& phi);
/// Inverse of transport_forward, walking the unique preimage letter from
/// each state. Throws InputError when the word is not accepted.
PointedWord transport_backward(const Mia& m, const PointedWord& w, const AlphabetMap& phi);

// Text formats --------------------------------------------------------------

/// `alphabet ...` (optional), `state <id> [initial inv=<id>] e=<id>`,
/// `trans <state> <letter[']> <state>`.
std::string write_mia(const Mia& m);
Mia parse_mia(std::string_view text);
std::string to_dot(const Mia& m);

}  // namespace stralg::mia
