#include "stralg/words.hpp"

#include <algorithm>
#include <set>
#include <string>
#include <unordered_set>

#include "stralg/error.hpp"

namespace stralg::words {

namespace {

Seq rotate_left(Seq s, std::size_t k = 1) {
  if (!s.empty()) std::rotate(s.begin(), s.begin() + static_cast<long>(k % s.size()), s.end());
  return s;
}

Seq rotate_right(Seq s) {
  if (!s.empty()) std::rotate(s.rbegin(), s.rbegin() + 1, s.rend());
  return s;
}

Seq least_rotation(const Seq& s) {
  Seq best = s;
  Seq cur = s;
  for (std::size_t i = 1; i < s.size(); ++i) {
    cur = rotate_left(cur);
    best = std::min(best, cur);
  }
  return best;
}

void require_period(const Seq& p) {
  if (p.empty()) throw InputError("periodic word representation has an empty period");
}

// Repeat `period` to the left of `tail` until `n` letters precede it.
Seq left_periodic(const Seq& period, std::size_t n) {
  Seq out(n);
  for (std::size_t i = 0; i < n; ++i) {
    // i-th letter counted from the right end of the periodic part
    out[n - 1 - i] = period[period.size() - 1 - (i % period.size())];
  }
  return out;
}

Seq right_periodic(const Seq& period, std::size_t n) {
  Seq out(n);
  for (std::size_t i = 0; i < n; ++i) out[i] = period[i % period.size()];
  return out;
}

std::vector<long long> scan(std::span<const Letter> needle, std::span<const Letter> hay) {
  std::vector<long long> out;
  if (needle.size() > hay.size()) return out;
  for (std::size_t i = 0; i + needle.size() <= hay.size(); ++i) {
    if (std::equal(needle.begin(), needle.end(), hay.begin() + static_cast<long>(i))) {
      out.push_back(static_cast<long long>(i));
    }
  }
  return out;
}

Seq parse_two_letter(std::string_view text, char first, char second, bool signed_pair) {
  Seq out;
  for (char c : text) {
    if (c == ' ' || c == '\t' || c == ',') continue;
    if (c == first) {
      out.push_back({0, false});
    } else if (c == second) {
      out.push_back(signed_pair ? Letter{0, true} : Letter{1, false});
    } else {
      throw InputError(std::string("unexpected character '") + c + "' in word literal");
    }
  }
  return out;
}

}  // namespace

Seq invert(std::span<const Letter> w) {
  Seq out(w.rbegin(), w.rend());
  for (auto& l : out) l = l.inverted();
  return out;
}

Seq primitive_root(std::span<const Letter> w) {
  const std::size_t n = w.size();
  for (std::size_t d = 1; d < n; ++d) {
    if (n % d != 0) continue;
    bool ok = true;
    for (std::size_t i = d; i < n && ok; ++i) ok = w[i] == w[i - d];
    if (ok) return Seq(w.begin(), w.begin() + static_cast<long>(d));
  }
  return Seq(w.begin(), w.end());
}

bool is_primitive(std::span<const Letter> w) { return primitive_root(w).size() == w.size(); }

Seq binary(std::string_view text) { return parse_two_letter(text, '0', '1', true); }

std::string binary_string(std::span<const Letter> w) {
  std::string s;
  for (auto l : w) s += l.inverse ? '1' : '0';
  return s;
}

Seq ab(std::string_view text) { return parse_two_letter(text, 'a', 'b', false); }

std::string ab_string(std::span<const Letter> w) {
  std::string s;
  for (auto l : w) s += l.base == 0 ? 'a' : 'b';
  return s;
}

WordRep normalize(const WordRep& w) {
  return std::visit(
      [](const auto& rep) -> WordRep {
        using T = std::decay_t<decltype(rep)>;
        if constexpr (std::is_same_v<T, Finite> || std::is_same_v<T, Window>) {
          return rep;
        } else if constexpr (std::is_same_v<T, RightInf>) {
          require_period(rep.period);
          RightInf r{rep.prefix, primitive_root(rep.period)};
          while (!r.prefix.empty() && r.prefix.back() == r.period.back()) {
            r.period = rotate_right(std::move(r.period));
            r.prefix.pop_back();
          }
          return r;
        } else if constexpr (std::is_same_v<T, LeftInf>) {
          require_period(rep.period);
          LeftInf r{primitive_root(rep.period), rep.suffix};
          while (!r.suffix.empty() && r.suffix.front() == r.period.front()) {
            r.period = rotate_left(std::move(r.period));
            r.suffix.erase(r.suffix.begin());
          }
          return r;
        } else {
          require_period(rep.left_period);
          require_period(rep.right_period);
          BiInf r{primitive_root(rep.left_period), rep.core, primitive_root(rep.right_period)};
          std::size_t k = 0;
          while (k < r.core.size() && r.core[k] == r.left_period.front()) {
            r.left_period = rotate_left(std::move(r.left_period));
            ++k;
          }
          r.core.erase(r.core.begin(), r.core.begin() + static_cast<long>(k));
          while (!r.core.empty() && r.core.back() == r.right_period.back()) {
            r.right_period = rotate_right(std::move(r.right_period));
            r.core.pop_back();
          }
          if (r.core.empty()) {
            if (r.left_period == r.right_period) {
              r.left_period = least_rotation(r.left_period);
              r.right_period = r.left_period;
              return r;
            }
            // Extend the left periodic region into the right one as far as
            // the two patterns agree (bounded by Fine and Wilf).
            const std::size_t bound = r.left_period.size() + r.right_period.size();
            for (std::size_t i = 0; i < bound && r.right_period.front() == r.left_period.front(); ++i) {
              r.left_period = rotate_left(std::move(r.left_period));
              r.right_period = rotate_left(std::move(r.right_period));
            }
          }
          return r;
        }
      },
      w);
}

bool same_word(const WordRep& a, const WordRep& b) { return normalize(a) == normalize(b); }

WordRep invert(const WordRep& w) {
  return std::visit(
      [](const auto& rep) -> WordRep {
        using T = std::decay_t<decltype(rep)>;
        if constexpr (std::is_same_v<T, Finite>) {
          return Finite{invert(rep.letters)};
        } else if constexpr (std::is_same_v<T, RightInf>) {
          return LeftInf{invert(rep.period), invert(rep.prefix)};
        } else if constexpr (std::is_same_v<T, LeftInf>) {
          return RightInf{invert(rep.suffix), invert(rep.period)};
        } else if constexpr (std::is_same_v<T, BiInf>) {
          return BiInf{invert(rep.right_period), invert(rep.core), invert(rep.left_period)};
        } else {
          Window out = rep;
          out.letters = invert(rep.letters);
          out.open_left = rep.open_right;
          out.open_right = rep.open_left;
          return out;
        }
      },
      w);
}

bool is_finite(const WordRep& w) {
  return std::holds_alternative<Finite>(w) || std::holds_alternative<Window>(w);
}

const Seq& finite_letters(const WordRep& w) {
  if (const auto* f = std::get_if<Finite>(&w)) return f->letters;
  if (const auto* win = std::get_if<Window>(&w)) return win->letters;
  throw Unsupported("expected a finite word or a window");
}

Seq unfold_right(const WordRep& w, std::size_t n) {
  if (const auto* r = std::get_if<RightInf>(&w)) {
    require_period(r->period);
    Seq out(r->prefix.begin(), r->prefix.begin() + static_cast<long>(std::min(n, r->prefix.size())));
    if (n > r->prefix.size()) {
      Seq tail = right_periodic(r->period, n - r->prefix.size());
      out.insert(out.end(), tail.begin(), tail.end());
    }
    return out;
  }
  if (is_finite(w)) {
    const Seq& s = finite_letters(w);
    return Seq(s.begin(), s.begin() + static_cast<long>(std::min(n, s.size())));
  }
  throw Unsupported("unfold_right needs a finite or right-infinite word");
}

Seq unfold_left(const WordRep& w, std::size_t n) {
  if (const auto* l = std::get_if<LeftInf>(&w)) {
    require_period(l->period);
    if (n <= l->suffix.size()) return Seq(l->suffix.end() - static_cast<long>(n), l->suffix.end());
    Seq out = left_periodic(l->period, n - l->suffix.size());
    out.insert(out.end(), l->suffix.begin(), l->suffix.end());
    return out;
  }
  if (is_finite(w)) {
    const Seq& s = finite_letters(w);
    const std::size_t k = std::min(n, s.size());
    return Seq(s.end() - static_cast<long>(k), s.end());
  }
  throw Unsupported("unfold_left needs a finite or left-infinite word");
}

SubwordHits find_subword(std::span<const Letter> needle, const WordRep& hay) {
  SubwordHits hits;
  const auto m = static_cast<long long>(needle.size());
  if (is_finite(hay)) {
    hits.offsets = scan(needle, finite_letters(hay));
    return hits;
  }
  if (const auto* r = std::get_if<RightInf>(&hay)) {
    require_period(r->period);
    const auto limit = static_cast<long long>(r->prefix.size() + 2 * r->period.size());
    Seq mat = unfold_right(hay, static_cast<std::size_t>(limit + m));
    for (long long o : scan(needle, mat)) {
      if (o < limit) hits.offsets.push_back(o);
    }
    hits.right_period = r->period.size();
    return hits;
  }
  if (const auto* l = std::get_if<LeftInf>(&hay)) {
    require_period(l->period);
    const auto pre = static_cast<long long>(2 * l->period.size()) + m;
    Seq mat = left_periodic(l->period, static_cast<std::size_t>(pre));
    mat.insert(mat.end(), l->suffix.begin(), l->suffix.end());
    const long long lo = -static_cast<long long>(2 * l->period.size());
    for (long long o : scan(needle, mat)) {
      const long long rel = o - pre;
      if (rel >= lo) hits.offsets.push_back(rel);
    }
    hits.left_period = l->period.size();
    return hits;
  }
  const auto& b = std::get<BiInf>(hay);
  require_period(b.left_period);
  require_period(b.right_period);
  const auto pre = static_cast<long long>(2 * b.left_period.size()) + m;
  const auto post = static_cast<long long>(2 * b.right_period.size()) + m;
  Seq mat = left_periodic(b.left_period, static_cast<std::size_t>(pre));
  mat.insert(mat.end(), b.core.begin(), b.core.end());
  Seq tail = right_periodic(b.right_period, static_cast<std::size_t>(post));
  mat.insert(mat.end(), tail.begin(), tail.end());
  const long long lo = -static_cast<long long>(2 * b.left_period.size());
  const long long hi = static_cast<long long>(b.core.size() + 2 * b.right_period.size());
  for (long long o : scan(needle, mat)) {
    const long long rel = o - pre;
    if (rel >= lo && rel < hi) hits.offsets.push_back(rel);
  }
  hits.left_period = b.left_period.size();
  hits.right_period = b.right_period.size();
  return hits;
}

Materialized materialize(const WordRep& w, std::size_t margin) {
  Materialized m;
  if (const auto* win = std::get_if<Window>(&w)) {
    m.letters = win->letters;
    m.hi = static_cast<long long>(win->letters.size());
    m.left_end = !win->open_left;
    m.right_end = !win->open_right;
    return m;
  }
  if (const auto* f = std::get_if<Finite>(&w)) {
    m.letters = f->letters;
    m.hi = static_cast<long long>(f->letters.size());
    return m;
  }
  if (const auto* r = std::get_if<RightInf>(&w)) {
    require_period(r->period);
    m.hi = static_cast<long long>(r->prefix.size() + 2 * r->period.size());
    m.letters = unfold_right(w, static_cast<std::size_t>(m.hi) + margin);
    m.right_end = false;
    m.right_period = r->period.size();
    return m;
  }
  if (const auto* l = std::get_if<LeftInf>(&w)) {
    require_period(l->period);
    const std::size_t pre = 2 * l->period.size() + margin;
    m.letters = left_periodic(l->period, pre);
    m.letters.insert(m.letters.end(), l->suffix.begin(), l->suffix.end());
    m.origin = static_cast<long long>(pre);
    m.lo = -static_cast<long long>(2 * l->period.size());
    m.hi = static_cast<long long>(l->suffix.size());
    m.left_end = false;
    m.left_period = l->period.size();
    return m;
  }
  const auto& b = std::get<BiInf>(w);
  require_period(b.left_period);
  require_period(b.right_period);
  const std::size_t pre = 2 * b.left_period.size() + margin;
  m.letters = left_periodic(b.left_period, pre);
  m.letters.insert(m.letters.end(), b.core.begin(), b.core.end());
  Seq tail = right_periodic(b.right_period, 2 * b.right_period.size() + margin);
  m.letters.insert(m.letters.end(), tail.begin(), tail.end());
  m.origin = static_cast<long long>(pre);
  m.lo = -static_cast<long long>(2 * b.left_period.size());
  m.hi = static_cast<long long>(b.core.size() + 2 * b.right_period.size());
  m.left_end = m.right_end = false;
  m.left_period = b.left_period.size();
  m.right_period = b.right_period.size();
  return m;
}

std::string_view to_string(Periodicity p) {
  switch (p) {
    case Periodicity::finite: return "finite";
    case Periodicity::periodic: return "periodic";
    case Periodicity::almost_periodic_left: return "almost-periodic-left";
    case Periodicity::almost_periodic_right: return "almost-periodic-right";
    case Periodicity::almost_periodic_two_sided: return "almost-periodic-two-sided";
    case Periodicity::aperiodic_certified: return "aperiodic-certified";
    case Periodicity::unknown_window: return "unknown-window";
  }
  return "?";
}

Periodicity classify_periodicity(const WordRep& w) {
  const WordRep n = normalize(w);
  if (std::holds_alternative<Finite>(n)) return Periodicity::finite;
  if (const auto* win = std::get_if<Window>(&n)) {
    return win->certified_aperiodic ? Periodicity::aperiodic_certified : Periodicity::unknown_window;
  }
  if (const auto* r = std::get_if<RightInf>(&n)) {
    return r->prefix.empty() ? Periodicity::periodic : Periodicity::almost_periodic_right;
  }
  if (const auto* l = std::get_if<LeftInf>(&n)) {
    return l->suffix.empty() ? Periodicity::periodic : Periodicity::almost_periodic_left;
  }
  const auto& b = std::get<BiInf>(n);
  if (b.core.empty() && b.left_period == b.right_period) return Periodicity::periodic;
  return Periodicity::almost_periodic_two_sided;
}

std::vector<std::size_t> complexity_profile(const Window& w, std::size_t max_len) {
  if (w.letters.size() < 4 * max_len) {
    throw InputError("window of length " + std::to_string(w.letters.size()) +
                     " is too short for complexity up to " + std::to_string(max_len));
  }
  std::u32string codes;
  codes.reserve(w.letters.size());
  for (auto l : w.letters) codes.push_back(static_cast<char32_t>(l.code()));
  std::vector<std::size_t> out;
  for (std::size_t k = 1; k <= max_len; ++k) {
    std::unordered_set<std::u32string_view> seen;
    for (std::size_t i = 0; i + k <= codes.size(); ++i) seen.insert(std::u32string_view(codes).substr(i, k));
    out.push_back(seen.size());
  }
  return out;
}

}  // namespace stralg::words
