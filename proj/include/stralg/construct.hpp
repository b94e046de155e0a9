#pragma once

// The automaton of a string algebra, its binary relabelling, and the
// correspondence between strings and pointed words.

#include <map>
#include <variant>

#include "stralg/mia.hpp"
#include "stralg/strings.hpp"

namespace stralg::construct {

using strings::InfStr;
using strings::Str;
using strings::StringAlgebra;

/// M_Λ together with the string each state stands for. Letters are arrows:
/// letter base = arrow index.
struct StringMia {
  mia::Mia mia;
  std::vector<Str> states;
  std::map<Str, mia::StateId> index;

  mia::StateId state_of(const Str& x) const;
};

/// States: zero-length strings (ordered by vertex, +1 before -1), syllables
/// (by arrow, direct before inverse), then proper left substrings of length
/// >= 2 of relations and of inverse relations, sorted. Names: `1(v,+1)`,
/// `a1`, `a1'`, and longer states joined with dots (`a3.b`).
StringMia build_mia(const StringAlgebra& A);

struct ParityMia {
  StringMia base;
  mia::AlphabetMap delta;
  mia::Mia binary;
};

/// Throws InputError when there are no arrows.
ParityMia parity_mia(const StringAlgebra& A);

/// (x, 1_{(t(x), ε(x))}, ε) for finite x. Infinite strings keep their shape:
/// RightInf and Window reps become the right part based at the first gap,
/// LeftInf the left part based at the last gap, and BiInf is split at the
/// start of its core.
mia::PointedWord string_to_word(const StringAlgebra& A, const StringMia& M, const Str& x);
mia::PointedWord string_to_word(const StringAlgebra& A, const StringMia& M, const InfStr& x);
/// Pointed word of ∞b∞ based at the gap after one copy of b.
mia::PointedWord band_to_word(const StringAlgebra& A, const StringMia& M, const Str& b);

std::variant<Str, InfStr> word_to_string(const StringAlgebra& A, const StringMia& M, const mia::PointedWord& w);

}  // namespace stralg::construct
