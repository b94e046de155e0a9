#include "stralg/construct.hpp"

#include <algorithm>
#include <set>

#include "stralg/error.hpp"

namespace stralg::construct {

using mia::StateId;
using strings::VertexIdx;
using words::Letter;
using words::Seq;

StateId StringMia::state_of(const Str& x) const {
  auto it = index.find(x);
  return it == index.end() ? mia::kNone : it->second;
}

namespace {

std::string state_name(const StringAlgebra& A, const Str& x) {
  if (x.is_zero()) return strings::format_string(A, x);
  std::string out;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (i) out += '.';
    out += strings::format_syllables(A, Seq{x.syllables()[i]});
  }
  return out;
}

}  // namespace

StringMia build_mia(const StringAlgebra& A) {
  std::vector<Str> states;
  for (VertexIdx v = 0; v < A.num_vertices(); ++v) {
    states.push_back(Str::zero(v, 1));
    states.push_back(Str::zero(v, -1));
  }
  for (std::uint32_t a = 0; a < A.num_arrows(); ++a) {
    states.push_back(strings::make_string(A, {{a, false}}));
    states.push_back(strings::make_string(A, {{a, true}}));
  }
  std::set<Str> longer;
  for (const auto& r : A.presentation().relations) {
    Seq direct;
    for (auto a : r) direct.push_back({a, false});
    const Seq inverse = words::invert(direct);
    for (std::size_t k = 2; k < r.size(); ++k) {
      longer.insert(strings::make_string(A, Seq(direct.begin(), direct.begin() + k)));
      longer.insert(strings::make_string(A, Seq(inverse.begin(), inverse.begin() + k)));
    }
  }
  states.insert(states.end(), longer.begin(), longer.end());

  std::vector<std::string> letters;
  for (std::uint32_t a = 0; a < A.num_arrows(); ++a) letters.push_back(A.arrow(a).id);
  StringMia M{mia::Mia(letters), states, {}};
  for (const auto& x : states) M.index.emplace(x, M.mia.add_state(state_name(A, x)));
  for (VertexIdx v = 0; v < A.num_vertices(); ++v)
    M.mia.set_initial_pair(M.state_of(Str::zero(v, 1)), M.state_of(Str::zero(v, -1)));

  for (StateId id = 0; id < states.size(); ++id) {
    const Str& x = states[id];
    M.mia.set_e(id, M.state_of(Str::zero(x.target(), x.eps())));
    for (std::uint32_t c = 0; c < 2 * A.num_arrows(); ++c) {
      const Letter b = Letter::from_code(c);
      Seq xb = x.syllables();
      xb.push_back(b);
      if (x.is_zero()) {
        // 1_{(v,i)} b is defined iff s(b) = v and ς(b) = -i.
        if (strings::syl_source(A, b) != x.source() || strings::syl_sigma(A, b) != -x.side()) continue;
      } else if (strings::check_string(A, xb)) {
        continue;
      }
      // Longest suffix of xb that is a state; the last syllable always is.
      for (std::size_t k = 0; k < xb.size(); ++k) {
        Str suffix = strings::make_string(A, Seq(xb.begin() + k, xb.end()));
        if (StateId to = M.state_of(suffix); to != mia::kNone) {
          M.mia.set_transition(id, b, to);
          break;
        }
      }
    }
  }
  return M;
}

ParityMia parity_mia(const StringAlgebra& A) {
  if (A.num_arrows() == 0) throw InputError("the parity automaton needs at least one arrow");
  ParityMia P{build_mia(A), {}, {}};
  P.delta = mia::parity_map(P.base.mia);
  P.binary = mia::relabel(P.base.mia, P.delta);
  return P;
}

namespace {

StateId gap_state(const StringAlgebra& A, const StringMia& M, const Seq& s, std::size_t g) {
  if (g > 0) return M.state_of(Str::zero(strings::syl_target(A, s[g - 1]), strings::syl_eps(A, s[g - 1])));
  return M.state_of(Str::zero(strings::syl_source(A, s[0]), -strings::syl_sigma(A, s[0])));
}

}  // namespace

mia::PointedWord string_to_word(const StringAlgebra&, const StringMia& M, const Str& x) {
  if (x.is_zero()) return {words::Finite{}, M.state_of(x), words::Finite{}};
  return {words::Finite{x.syllables()}, M.state_of(Str::zero(x.target(), x.eps())), words::Finite{}};
}

mia::PointedWord string_to_word(const StringAlgebra& A, const StringMia& M, const InfStr& x) {
  if (const auto* r = std::get_if<words::RightInf>(&x.rep)) {
    Seq first = words::unfold_right(x.rep, 1);
    return {words::Finite{}, gap_state(A, M, first, 0), *r};
  }
  if (const auto* w = std::get_if<words::Window>(&x.rep)) {
    if (w->letters.empty()) throw InputError("empty window");
    words::Window left;
    left.open_left = w->open_left;
    left.open_right = false;
    left.certified_aperiodic = w->certified_aperiodic;
    return {left, gap_state(A, M, w->letters, 0), *w};
  }
  if (const auto* l = std::get_if<words::LeftInf>(&x.rep)) {
    Seq last = words::unfold_left(x.rep, 1);
    return {*l, gap_state(A, M, last, 1), words::Finite{}};
  }
  if (const auto* b = std::get_if<words::BiInf>(&x.rep)) {
    Seq before = words::unfold_left(words::LeftInf{b->left_period, {}}, 1);
    return {words::LeftInf{b->left_period, {}}, gap_state(A, M, before, 1), words::RightInf{b->core, b->right_period}};
  }
  throw InputError("an infinite string needs an infinite representation");
}

mia::PointedWord band_to_word(const StringAlgebra&, const StringMia& M, const Str& b) {
  if (b.is_zero()) throw InputError("a band is never zero-length");
  return {words::LeftInf{b.syllables(), {}}, M.state_of(Str::zero(b.target(), b.eps())),
          words::RightInf{{}, b.syllables()}};
}

std::variant<Str, InfStr> word_to_string(const StringAlgebra& A, const StringMia& M, const mia::PointedWord& w) {
  mia::require_word(M.mia, w);
  const bool windowed = std::holds_alternative<words::Window>(w.left) || std::holds_alternative<words::Window>(w.right);
  const bool infinite =
      std::holds_alternative<words::LeftInf>(w.left) || std::holds_alternative<words::RightInf>(w.right);
  if (windowed && !infinite) {
    words::Window out;
    out.letters = mia::finite_word(w);
    if (const auto* l = std::get_if<words::Window>(&w.left)) out.open_left = l->open_left;
    if (const auto* r = std::get_if<words::Window>(&w.right)) {
      out.open_right = r->open_right;
      out.certified_aperiodic = r->certified_aperiodic;
      out.origin = r->origin;
    } else {
      out.open_right = false;
    }
    return strings::make_inf_string(A, out);
  }
  if (!infinite) {
    Seq s = mia::finite_word(w);
    if (s.empty()) return M.states[w.base];
    return strings::make_string(A, s);
  }
  const auto* l = std::get_if<words::LeftInf>(&w.left);
  const auto* r = std::get_if<words::RightInf>(&w.right);
  if (windowed) throw Unsupported("mixed window and periodic parts");
  Seq core = l ? l->suffix : words::finite_letters(w.left);
  const Seq& rest = r ? r->prefix : words::finite_letters(w.right);
  core.insert(core.end(), rest.begin(), rest.end());
  if (l && r) return strings::make_inf_string(A, words::BiInf{l->period, core, r->period});
  if (l) return strings::make_inf_string(A, words::LeftInf{l->period, core});
  return strings::make_inf_string(A, words::RightInf{core, r->period});
}

}  // namespace stralg::construct
