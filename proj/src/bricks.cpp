#include "stralg/bricks.hpp"

#include <algorithm>
#include <map>

#include "stralg/error.hpp"

namespace stralg::bricks {

using strings::SubClause;
using strings::SubOccurrence;
using words::Seq;

namespace {

// Shortest common factor/image pair among enumerated occurrences. The pair
// where both occurrences are the whole string in the same orientation is
// excluded.
std::optional<Witness> common_substring(const StringAlgebra& A, const std::vector<SubOccurrence>& factors,
                                        const std::vector<SubOccurrence>& images,
                                        const std::vector<SubOccurrence>& inverse_images, long long shift) {
  std::optional<Witness> best;
  std::size_t best_len = 0;
  auto consider = [&](const SubOccurrence& f, const SubOccurrence& i, bool inverse) {
    if (best && f.sub.size() >= best_len) return;
    Witness w;
    w.text = strings::format_string(A, f.sub);
    w.factor_begin = f.begin + shift;
    w.factor_end = f.end + shift;
    w.image_begin = i.begin + (inverse ? 0 : shift);
    w.image_end = i.end + (inverse ? 0 : shift);
    w.image_in_inverse = inverse;
    best = w;
    best_len = f.sub.size();
  };
  for (const auto& f : factors) {
    for (const auto& i : images)
      if (i.sub == f.sub && !(f.clause == SubClause::equal && i.clause == SubClause::equal)) {
        consider(f, i, false);
        break;
      }
    for (const auto& i : inverse_images)
      if (i.sub == f.sub) {
        consider(f, i, true);
        break;
      }
  }
  return best;
}

std::vector<std::uint32_t> zero_label_inverse(const StringAlgebra& A) {
  std::vector<std::uint32_t> inv(2 * A.num_vertices());
  for (std::uint32_t k = 0; k < inv.size(); ++k) inv[k] = k ^ 1U;
  return inv;
}

std::uint32_t zero_label(const Str& z) { return 2 * z.source() + (z.side() > 0 ? 1U : 0U); }

}  // namespace

BrickReport string_brick_direct(const StringAlgebra& A, const Str& x) {
  BrickReport rep;
  rep.method = Method::direct;
  rep.periodicity = "finite";
  rep.scope = "exact";
  const Str xi = x.inverted();
  // Offsets relative to the basepoint at the right end of x; x⁻¹ is based
  // at its left end.
  auto w = common_substring(A, strings::enumerate_factor_substrings(A, x), strings::enumerate_image_substrings(A, x),
                            strings::enumerate_image_substrings(A, xi), -static_cast<long long>(x.size()));
  rep.brick = !w;
  if (w) {
    rep.witness = w;
    rep.reason = "common factor/image substring";
  }
  return rep;
}

BrickReport string_brick_direct(const StringAlgebra& A, const InfStr& x) {
  BrickReport rep;
  rep.method = Method::direct;
  const auto* win = std::get_if<words::Window>(&x.rep);
  if (!win) {
    rep.periodicity = std::string(words::to_string(words::classify_periodicity(x.rep)));
    rep.scope = "exact";
    rep.brick = false;
    rep.reason = "string is not aperiodic";
    return rep;
  }
  mia::LabelledSegment seg;
  seg.letters = win->letters;
  seg.left_end = !win->open_left;
  seg.right_end = !win->open_right;
  for (std::size_t g = 0; g <= seg.letters.size(); ++g) {
    Str z = g > 0 ? Str::zero(strings::syl_target(A, seg.letters[g - 1]), strings::syl_eps(A, seg.letters[g - 1]))
                  : Str::zero(strings::syl_source(A, seg.letters[0]), -strings::syl_sigma(A, seg.letters[0]));
    seg.labels.push_back(zero_label(z));
  }
  auto hit = mia::find_witness(seg, zero_label_inverse(A), seg.letters.size());
  rep.periodicity = win->certified_aperiodic ? "aperiodic_certified" : "unknown_window";
  rep.scope = "window " + std::to_string(seg.letters.size());
  rep.brick = !hit && win->certified_aperiodic;
  if (hit) {
    Witness w;
    const auto f = static_cast<std::size_t>(hit->factor_begin);
    Seq sub(seg.letters.begin() + f, seg.letters.begin() + f + hit->length);
    w.text = hit->length ? strings::format_syllables(A, sub)
                         : strings::format_string(A, Str::zero(seg.labels[f] / 2, seg.labels[f] % 2 ? 1 : -1));
    w.factor_begin = hit->factor_begin;
    w.factor_end = hit->factor_begin + static_cast<long long>(hit->length);
    w.image_in_inverse = hit->inverse;
    w.image_begin = hit->inverse ? -(hit->image_begin + static_cast<long long>(hit->length)) : hit->image_begin;
    w.image_end = w.image_begin + static_cast<long long>(hit->length);
    rep.witness = w;
    rep.reason = "common factor/image substring";
  } else if (!rep.brick) {
    rep.reason = "aperiodicity not certified";
  }
  return rep;
}

BrickReport band_brick_direct(const StringAlgebra& A, const Str& band, std::size_t l, std::uint64_t lambda,
                              std::size_t bound_multiple) {
  (void)lambda;  // the verdict does not depend on the scalar
  BrickReport rep;
  rep.method = Method::direct;
  rep.periodicity = "periodic";
  rep.scope = "exact";
  if (!strings::is_band(A, band).ok) throw InputError("not a band");
  if (l != 1) {
    rep.brick = false;
    rep.reason = "l must be 1";
    return rep;
  }
  const std::size_t bound = bound_multiple * band.size();
  InfStr X = strings::make_inf_string(A, words::BiInf{band.syllables(), {}, band.syllables()});
  InfStr Xi = strings::inverted(X);
  auto w = common_substring(A, strings::enumerate_factor_substrings(A, X, bound),
                            strings::enumerate_image_substrings(A, X, bound),
                            strings::enumerate_image_substrings(A, Xi, bound), 0);
  rep.brick = !w;
  if (w) {
    rep.witness = w;
    rep.reason = "common factor/image substring";
  }
  return rep;
}

Automata::Automata(const StringAlgebra& A) : algebra(A), parity(construct::parity_mia(A)) {}

namespace {

const mia::Mia& pick(const Automata& ctx, const AutomatonOptions& opt) {
  return opt.binary ? ctx.parity.binary : ctx.parity.base.mia;
}

mia::PointedWord prepare(const Automata& ctx, const AutomatonOptions& opt, mia::PointedWord w) {
  return opt.binary ? mia::transport_forward(w, ctx.parity.delta) : w;
}

void require_same(const BrickReport& a, const BrickReport& b, const char* what) {
  if (a.brick != b.brick) throw Error(std::string("verdict changed under a basepoint shift: ") + what);
}

}  // namespace

BrickReport string_brick_automaton(const Automata& ctx, const Str& x, const AutomatonOptions& opt) {
  const auto& M = pick(ctx, opt);
  mia::PointedWord w = prepare(ctx, opt, construct::string_to_word(ctx.algebra, ctx.parity.base, x));
  mia::BrickOptions bopt{opt.bound_multiple};
  BrickReport rep = mia::is_brick_word(M, w, bopt);
  if (opt.spot_check && x.size() > 0) {
    const auto n = static_cast<long long>(x.size());
    for (long long s : {-n, -n / 2}) require_same(rep, mia::is_brick_word(M, mia::shift_basepoint(M, w, s), bopt), "string");
  }
  return rep;
}

BrickReport string_brick_automaton(const Automata& ctx, const InfStr& x, const AutomatonOptions& opt) {
  const auto& M = pick(ctx, opt);
  mia::PointedWord w = prepare(ctx, opt, construct::string_to_word(ctx.algebra, ctx.parity.base, x));
  return mia::is_brick_word(M, w, {opt.bound_multiple});
}

BrickReport band_brick_automaton(const Automata& ctx, const Str& band, std::size_t l, const AutomatonOptions& opt) {
  if (!strings::is_band(ctx.algebra, band).ok) throw InputError("not a band");
  if (l != 1) {
    BrickReport rep;
    rep.method = Method::automaton;
    rep.periodicity = "periodic";
    rep.scope = "exact";
    rep.reason = "l must be 1";
    return rep;
  }
  const auto& M = pick(ctx, opt);
  mia::PointedWord w = prepare(ctx, opt, construct::band_to_word(ctx.algebra, ctx.parity.base, band));
  mia::BrickOptions bopt{opt.bound_multiple};
  BrickReport rep = mia::is_weak_brick_word(M, w, bopt);
  if (opt.spot_check) require_same(rep, mia::is_weak_brick_word(M, mia::shift_basepoint(M, w, 1), bopt), "band");
  return rep;
}

BrickReport string_brick_endo(const StringAlgebra& A, const Str& x, std::uint32_t p) {
  BrickReport rep;
  rep.method = Method::endo;
  rep.periodicity = "finite";
  rep.scope = "exact";
  rep.end_dim = endo::end_dim(A, endo::string_module(A, x, p));
  rep.brick = *rep.end_dim == 1;
  if (!rep.brick) rep.reason = "endomorphism space has dimension " + std::to_string(*rep.end_dim);
  return rep;
}

BrickReport band_brick_endo(const StringAlgebra& A, const Str& band, std::size_t l, std::uint64_t lambda,
                            std::uint32_t p) {
  BrickReport rep;
  rep.method = Method::endo;
  rep.periodicity = "periodic";
  rep.scope = "exact";
  rep.end_dim = endo::end_dim(A, endo::band_module(A, band, l, lambda, p));
  rep.brick = *rep.end_dim == 1;
  if (!rep.brick) rep.reason = "endomorphism space has dimension " + std::to_string(*rep.end_dim);
  return rep;
}

namespace {

Agreement gather(std::vector<BrickReport> reps) {
  Agreement a;
  a.reports = std::move(reps);
  for (const auto& r : a.reports) a.agree = a.agree && r.brick == a.reports.front().brick;
  return a;
}

}  // namespace

Agreement string_brick_all(const Automata& ctx, const Str& x) {
  return gather({string_brick_direct(ctx.algebra, x), string_brick_automaton(ctx, x),
                 string_brick_endo(ctx.algebra, x)});
}

Agreement band_brick_all(const Automata& ctx, const Str& band, std::size_t l, std::uint64_t lambda) {
  return gather({band_brick_direct(ctx.algebra, band, l, lambda), band_brick_automaton(ctx, band, l),
                 band_brick_endo(ctx.algebra, band, l, lambda)});
}

}  // namespace stralg::bricks
