#pragma once

// Brickness of string and band modules by three independent routes: the
// substring criterion on strings, the brick-word criterion on the binary
// automaton, and the endomorphism dimension.

#include <cstdint>
#include <vector>

#include "stralg/construct.hpp"
#include "stralg/endo.hpp"
#include "stralg/report.hpp"

namespace stralg::bricks {

using strings::InfStr;
using strings::Str;
using strings::StringAlgebra;

/// Finite x: all spans. Infinite periodic reps: not brick (not aperiodic).
/// Windows: exhaustive within the window; brick needs certified aperiodicity.
BrickReport string_brick_direct(const StringAlgebra& A, const Str& x);
BrickReport string_brick_direct(const StringAlgebra& A, const InfStr& x);

/// ℓ > 1 is never a brick. For ℓ = 1, witness lengths up to
/// bound_multiple·|b| are scanned over anchors in one period.
BrickReport band_brick_direct(const StringAlgebra& A, const Str& band, std::size_t l, std::uint64_t lambda,
                              std::size_t bound_multiple = 1);

/// Automata built once per algebra.
struct Automata {
  explicit Automata(const StringAlgebra& A);
  const StringAlgebra& algebra;
  construct::ParityMia parity;
};

struct AutomatonOptions {
  bool binary = true;      // evaluate on M_{Λδ}; false uses M_Λ directly
  bool spot_check = true;  // re-evaluate on shifted representatives
  std::size_t bound_multiple = 1;
};

BrickReport string_brick_automaton(const Automata& ctx, const Str& x, const AutomatonOptions& opt = {});
BrickReport string_brick_automaton(const Automata& ctx, const InfStr& x, const AutomatonOptions& opt = {});
BrickReport band_brick_automaton(const Automata& ctx, const Str& band, std::size_t l,
                                 const AutomatonOptions& opt = {});

BrickReport string_brick_endo(const StringAlgebra& A, const Str& x, std::uint32_t p = endo::kDefaultPrime);
BrickReport band_brick_endo(const StringAlgebra& A, const Str& band, std::size_t l, std::uint64_t lambda,
                            std::uint32_t p = endo::kDefaultPrime);

struct Agreement {
  std::vector<BrickReport> reports;  // direct, automaton, endo
  bool agree = true;
};

Agreement string_brick_all(const Automata& ctx, const Str& x);
Agreement band_brick_all(const Automata& ctx, const Str& band, std::size_t l, std::uint64_t lambda);

}  // namespace stralg::bricks
