#pragma once

// Rebuilding a quiver with relations from a binary automaton, and
// isomorphism of small presentations.

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "stralg/algebra.hpp"
#include "stralg/mia.hpp"

namespace stralg::recover {

using algebra::Path;
using algebra::Presentation;

/// Vertices are pairs {v, v⁻¹} of initial states, named q0, q1, ... in
/// order of their smallest state. Arrows x0, x1, ... come from initial
/// states v with a 0-transition, in state order.
struct RecoveredPresentation {
  Presentation presentation;
  std::vector<std::pair<mia::StateId, mia::StateId>> vertex_states;
  /// (v, e(t(v, 0))) for each arrow.
  std::vector<std::pair<mia::StateId, mia::StateId>> arrow_states;
};

/// Relations are the arrow paths that no run realizes, with every proper
/// prefix realized; a run realizes a path when each step starts at the
/// projection of the previous run state and every 0-step is defined.
/// Throws InputError on an invalid or non-binary automaton, CapExceeded when
/// realized paths grow past 4·|states|.
RecoveredPresentation recover_presentation(const mia::Mia& m);

struct Isomorphism {
  std::vector<algebra::VertexIdx> vertex_map;  // p1 vertex -> p2 vertex
  std::vector<algebra::ArrowIdx> arrow_map;    // p1 arrow -> p2 arrow
};

inline constexpr std::size_t kMaxIsoVertices = 12;

/// Bijections preserving endpoints and the normalized relation sets.
/// Throws CapExceeded above kMaxIsoVertices vertices.
std::optional<Isomorphism> presentations_isomorphic(const Presentation& p1, const Presentation& p2);

/// Each relation of one set contains a relation of the other as a
/// contiguous subpath, in both directions.
bool same_ideal(const std::vector<Path>& r1, const std::vector<Path>& r2);

std::string format_isomorphism(const Presentation& p1, const Presentation& p2, const Isomorphism& iso);

}  // namespace stralg::recover
