#include "stralg/mia.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <unordered_map>

#include "stralg/error.hpp"

namespace stralg::mia {

Mia::Mia(std::vector<std::string> letter_names) : letters_(std::move(letter_names)) {}

StateId Mia::add_state(std::string name) {
  const auto id = static_cast<StateId>(names_.size());
  names_.push_back(std::move(name));
  inverse_.push_back(kNone);
  e_.push_back(kNone);
  table_.insert(table_.end(), 2 * letters_.size(), kNone);
  return id;
}

void Mia::set_initial_pair(StateId v, StateId w) {
  inverse_[v] = w;
  inverse_[w] = v;
}

void Mia::set_e(StateId v, StateId target) { e_[v] = target; }

void Mia::set_transition(StateId from, Letter b, StateId to) {
  if (b.base >= letters_.size()) throw InputError("transition letter outside the alphabet");
  table_[from * 2 * letters_.size() + b.code()] = to;
}

std::string Mia::letter_name(Letter b) const {
  if (is_binary()) return b.inverse ? "1" : "0";
  return letters_[b.base] + (b.inverse ? "'" : "");
}

std::optional<Letter> Mia::find_letter(std::string_view token) const {
  if (is_binary()) {
    if (token == "0") return Letter{0, false};
    if (token == "1" || token == "0'") return Letter{0, true};
    return std::nullopt;
  }
  bool inv = !token.empty() && token.back() == '\'';
  if (inv) token.remove_suffix(1);
  for (std::size_t i = 0; i < letters_.size(); ++i)
    if (letters_[i] == token) return Letter{static_cast<std::uint32_t>(i), inv};
  return std::nullopt;
}

std::optional<StateId> Mia::find_state(std::string_view name) const {
  for (std::size_t i = 0; i < names_.size(); ++i)
    if (names_[i] == name) return static_cast<StateId>(i);
  return std::nullopt;
}

std::vector<StateId> Mia::initial_states() const {
  std::vector<StateId> out;
  for (StateId v = 0; v < names_.size(); ++v)
    if (is_initial(v)) out.push_back(v);
  return out;
}

std::vector<MiaIssue> validate_mia(const Mia& m) {
  std::vector<MiaIssue> out;
  const std::size_t n = m.num_states();
  for (StateId v = 0; v < n; ++v) {
    if (!m.is_initial(v)) continue;
    StateId w = m.initial_inverse(v);
    if (w == v) out.push_back({1, "initial state " + m.name(v) + " is its own inverse"});
    else if (w >= n || m.initial_inverse(w) != v) out.push_back({1, "inverse of " + m.name(v) + " is not an involution"});
  }
  for (StateId v = 0; v < n; ++v) {
    StateId ev = m.e(v);
    if (ev == kNone || ev >= n || !m.is_initial(ev)) out.push_back({2, "e(" + m.name(v) + ") is not an initial state"});
    else if (m.is_initial(v) && ev != v) out.push_back({2, "e(" + m.name(v) + ") differs from " + m.name(v)});
  }
  if (!out.empty()) return out;
  for (StateId v = 0; v < n; ++v)
    for (std::uint32_t c = 0; c < 2 * m.alphabet_size(); ++c) {
      Letter b = Letter::from_code(c);
      StateId to = m.next(v, b);
      if (to == kNone) continue;
      StateId to_e = m.next(m.e(v), b);
      const std::string where = "(" + m.name(v) + ", " + m.letter_name(b) + ")";
      if (to_e == kNone) out.push_back({3, "t" + where + " defined but t(e(v), b) is not"});
      else if (m.e(to) != m.e(to_e)) out.push_back({3, "e(t" + where + ") differs from e(t(e(v), b))"});
    }
  return out;
}

StateId run(const Mia& m, StateId v, std::span<const Letter> w) {
  for (auto b : w) {
    if (v == kNone) return kNone;
    v = m.next(v, b);
  }
  return v;
}

namespace {

bool is_left_shape(const WordRep& w) {
  return std::holds_alternative<words::Finite>(w) || std::holds_alternative<words::LeftInf>(w) ||
         std::holds_alternative<words::Window>(w);
}

bool is_right_shape(const WordRep& w) {
  return std::holds_alternative<words::Finite>(w) || std::holds_alternative<words::RightInf>(w) ||
         std::holds_alternative<words::Window>(w);
}

// Runs a finite, window or right-infinite rep from v. Periodic tails are
// followed until the state at a period boundary repeats.
bool accepts_right(const Mia& m, StateId v, const WordRep& w) {
  if (words::is_finite(w)) return run(m, v, words::finite_letters(w)) != kNone;
  const auto* r = std::get_if<words::RightInf>(&w);
  if (!r) throw Unsupported("expected a right-unbounded word");
  v = run(m, v, r->prefix);
  std::set<StateId> seen;
  while (v != kNone && seen.insert(v).second) v = run(m, v, r->period);
  return v != kNone;
}

// Materialized two-sided view of a pointed word around its basepoint.
struct TwoSided {
  Seq letters;
  long long origin = 0;  // index of the basepoint gap
  long long lo = 0;      // canonical anchor gap offsets, inclusive
  long long hi = 0;
  bool left_end = true;
  bool right_end = true;
};

TwoSided two_sided(const PointedWord& w, std::size_t margin) {
  TwoSided t;
  if (const auto* l = std::get_if<words::LeftInf>(&w.left)) {
    auto mat = words::materialize(w.left, margin);
    t.letters = mat.letters;
    t.lo = -static_cast<long long>(l->suffix.size() + 2 * l->period.size());
    t.left_end = false;
  } else {
    t.letters = words::finite_letters(w.left);
    t.lo = -static_cast<long long>(t.letters.size());
    if (const auto* win = std::get_if<words::Window>(&w.left)) t.left_end = !win->open_left;
  }
  t.origin = static_cast<long long>(t.letters.size());
  if (const auto* r = std::get_if<words::RightInf>(&w.right)) {
    t.hi = static_cast<long long>(r->prefix.size() + 2 * r->period.size());
    Seq right = words::unfold_right(w.right, static_cast<std::size_t>(t.hi) + margin);
    t.letters.insert(t.letters.end(), right.begin(), right.end());
    t.right_end = false;
  } else {
    const Seq& right = words::finite_letters(w.right);
    t.hi = static_cast<long long>(right.size());
    t.letters.insert(t.letters.end(), right.begin(), right.end());
    if (const auto* win = std::get_if<words::Window>(&w.right)) t.right_end = !win->open_right;
  }
  return t;
}

// Gap labels: e of the run state to the right of the basepoint, and the
// inverse of e of the inverse run to the left.
std::vector<StateId> gap_labels(const Mia& m, const TwoSided& t, StateId base) {
  const auto n = t.letters.size();
  const auto o = static_cast<std::size_t>(t.origin);
  std::vector<StateId> lab(n + 1, kNone);
  lab[o] = base;
  StateId v = base;
  for (std::size_t i = o; i < n; ++i) {
    v = m.next(v, t.letters[i]);
    if (v == kNone) throw InputError("word is not accepted to the right of the basepoint");
    lab[i + 1] = m.e(v);
  }
  v = m.initial_inverse(base);
  for (std::size_t i = o; i-- > 0;) {
    v = m.next(v, t.letters[i].inverted());
    if (v == kNone) throw InputError("word is not accepted to the left of the basepoint");
    lab[i] = m.initial_inverse(m.e(v));
  }
  return lab;
}

bool has_infinite_part(const PointedWord& w) {
  return std::holds_alternative<words::LeftInf>(w.left) || std::holds_alternative<words::RightInf>(w.right);
}

bool has_window_part(const PointedWord& w) {
  return std::holds_alternative<words::Window>(w.left) || std::holds_alternative<words::Window>(w.right);
}

std::size_t rep_size(const WordRep& w) {
  return std::visit(
      [](const auto& r) -> std::size_t {
        using T = std::decay_t<decltype(r)>;
        if constexpr (std::is_same_v<T, words::Finite> || std::is_same_v<T, words::Window>) return r.letters.size();
        else if constexpr (std::is_same_v<T, words::RightInf>) return r.prefix.size() + r.period.size();
        else if constexpr (std::is_same_v<T, words::LeftInf>) return r.period.size() + r.suffix.size();
        else return r.left_period.size() + r.core.size() + r.right_period.size();
      },
      w);
}

WordRep map_letters(const WordRep& w, const AlphabetMap& phi) {
  auto f = [&](const Seq& s) {
    Seq out;
    out.reserve(s.size());
    for (auto b : s) out.push_back(phi(b));
    return out;
  };
  return std::visit(
      [&](const auto& r) -> WordRep {
        using T = std::decay_t<decltype(r)>;
        if constexpr (std::is_same_v<T, words::Finite>) return words::Finite{f(r.letters)};
        else if constexpr (std::is_same_v<T, words::Window>) {
          auto c = r;
          c.letters = f(r.letters);
          return c;
        } else if constexpr (std::is_same_v<T, words::RightInf>) return words::RightInf{f(r.prefix), f(r.period)};
        else if constexpr (std::is_same_v<T, words::LeftInf>) return words::LeftInf{f(r.period), f(r.suffix)};
        else return words::BiInf{f(r.left_period), f(r.core), f(r.right_period)};
      },
      w);
}

WordRep combined(const PointedWord& w) {
  const auto* l = std::get_if<words::LeftInf>(&w.left);
  const auto* r = std::get_if<words::RightInf>(&w.right);
  Seq core = l ? l->suffix : words::finite_letters(w.left);
  if (r) core.insert(core.end(), r->prefix.begin(), r->prefix.end());
  else core.insert(core.end(), words::finite_letters(w.right).begin(), words::finite_letters(w.right).end());
  if (l && r) return words::BiInf{l->period, core, r->period};
  if (l) return words::LeftInf{l->period, core};
  if (r) return words::RightInf{core, r->period};
  return words::Finite{core};
}

}  // namespace

std::optional<std::string> check_word(const Mia& m, const PointedWord& w) {
  if (w.base >= m.num_states() || !m.is_initial(w.base)) return "basepoint is not an initial state";
  if (!is_left_shape(w.left)) return "left part must be finite, left-infinite or a window";
  if (!is_right_shape(w.right)) return "right part must be finite, right-infinite or a window";
  if (!accepts_right(m, w.base, w.right)) return "right part is not accepted from the basepoint";
  const WordRep left_inv = words::invert(w.left);
  const StateId vinv = m.initial_inverse(w.base);
  if (!accepts_right(m, vinv, left_inv)) return "inverse of the left part is not accepted from the inverse basepoint";
  // Triple condition on right prefixes.
  std::size_t limit = 0;
  if (const auto* r = std::get_if<words::RightInf>(&w.right)) limit = r->prefix.size() + 2 * r->period.size();
  else limit = words::finite_letters(w.right).size();
  const Seq right = words::unfold_right(w.right, limit);
  StateId v = w.base;
  for (std::size_t k = 0; k <= right.size(); ++k) {
    if (k > 0) v = m.next(v, right[k - 1]);
    StateId u = m.initial_inverse(m.e(v));
    Seq back = words::invert(std::span<const Letter>(right.data(), k));
    u = run(m, u, back);
    if (u == kNone || !accepts_right(m, u, left_inv))
      return "left word extended by the first " + std::to_string(k) + " right letters is rejected";
  }
  return std::nullopt;
}

void require_word(const Mia& m, const PointedWord& w) {
  if (auto issue = check_word(m, w)) throw InputError("invalid word: " + *issue);
}

PointedWord invert(const Mia& m, const PointedWord& w) {
  return PointedWord{words::invert(w.right), m.initial_inverse(w.base), words::invert(w.left)};
}

Seq finite_word(const PointedWord& w) {
  Seq out = words::finite_letters(w.left);
  const Seq& r = words::finite_letters(w.right);
  out.insert(out.end(), r.begin(), r.end());
  return out;
}

bool equivalent(const Mia& m, const PointedWord& a, const PointedWord& b) {
  if (std::holds_alternative<words::LeftInf>(a.left) != std::holds_alternative<words::LeftInf>(b.left)) return false;
  if (std::holds_alternative<words::RightInf>(a.right) != std::holds_alternative<words::RightInf>(b.right))
    return false;
  const std::size_t total = rep_size(a.left) + rep_size(a.right) + rep_size(b.left) + rep_size(b.right);
  const std::size_t margin = 4 * total + 8;
  TwoSided ta = two_sided(a, margin);
  TwoSided tb = two_sided(b, margin);
  const bool finite_left = !std::holds_alternative<words::LeftInf>(a.left);
  const bool finite_right = !std::holds_alternative<words::RightInf>(a.right);
  // d: position of a's basepoint in b's offsets.
  std::vector<long long> shifts;
  if (finite_left) shifts.push_back(tb.lo - ta.lo);
  else if (finite_right) shifts.push_back(tb.hi - ta.hi);
  else
    for (long long d = -static_cast<long long>(total); d <= static_cast<long long>(total); ++d) shifts.push_back(d);
  for (long long d : shifts) {
    bool same = true;
    // Compare wherever both materializations have letters.
    for (long long k = ta.lo - static_cast<long long>(margin) / 2; same && k < ta.hi + static_cast<long long>(margin) / 2; ++k) {
      long long ia = ta.origin + k, ib = tb.origin + k + d;
      bool ina = ia >= 0 && ia < static_cast<long long>(ta.letters.size());
      bool inb = ib >= 0 && ib < static_cast<long long>(tb.letters.size());
      if (finite_left && finite_right && ina != inb) same = false;
      else if (ina && inb && ta.letters[ia] != tb.letters[ib]) same = false;
    }
    if (!same) continue;
    if (d >= 0) {
      Seq bar(tb.letters.begin() + tb.origin, tb.letters.begin() + tb.origin + d);
      StateId s = run(m, b.base, bar);
      if (s != kNone && m.e(s) == a.base) return true;
    } else {
      Seq bar(ta.letters.begin() + ta.origin, ta.letters.begin() + ta.origin - d);
      StateId s = run(m, a.base, bar);
      if (s != kNone && m.e(s) == b.base) return true;
    }
  }
  return false;
}

namespace {

// Splits a right part: first k letters and the remaining rep.
std::pair<Seq, WordRep> take_right(const WordRep& right, std::size_t k) {
  if (const auto* r = std::get_if<words::RightInf>(&right)) {
    Seq head = words::unfold_right(right, k);
    std::size_t skip = k < r->prefix.size() ? 0 : (k - r->prefix.size()) % r->period.size();
    if (k < r->prefix.size()) return {head, words::RightInf{Seq(r->prefix.begin() + k, r->prefix.end()), r->period}};
    Seq per = r->period;
    std::rotate(per.begin(), per.begin() + skip, per.end());
    return {head, words::RightInf{{}, per}};
  }
  if (!std::holds_alternative<words::Finite>(right)) throw Unsupported("basepoint shifts need finite or periodic parts");
  const Seq& s = words::finite_letters(right);
  if (k > s.size()) throw InputError("basepoint shift leaves the word");
  return {Seq(s.begin(), s.begin() + k), words::Finite{Seq(s.begin() + k, s.end())}};
}

WordRep append_left(const WordRep& left, const Seq& tail) {
  if (const auto* l = std::get_if<words::LeftInf>(&left)) {
    Seq suf = l->suffix;
    suf.insert(suf.end(), tail.begin(), tail.end());
    return words::LeftInf{l->period, suf};
  }
  if (!std::holds_alternative<words::Finite>(left)) throw Unsupported("basepoint shifts need finite or periodic parts");
  Seq s = words::finite_letters(left);
  s.insert(s.end(), tail.begin(), tail.end());
  return words::Finite{s};
}

}  // namespace

PointedWord shift_basepoint(const Mia& m, const PointedWord& w, long long shift) {
  if (shift == 0) return w;
  if (shift < 0) {
    PointedWord inv = shift_basepoint(m, invert(m, w), -shift);
    return invert(m, inv);
  }
  auto [head, rest] = take_right(w.right, static_cast<std::size_t>(shift));
  StateId s = run(m, w.base, head);
  if (s == kNone) throw InputError("basepoint shift runs outside the automaton");
  return PointedWord{append_left(w.left, head), m.e(s), rest};
}

std::vector<Occurrence> subword_occurrences(const Mia& m, const PointedWord& needle, const PointedWord& host) {
  const Seq nl = words::finite_letters(needle.left);
  const Seq nr = words::finite_letters(needle.right);
  TwoSided t = two_sided(host, nl.size() + nr.size() + 2);
  auto lab = gap_labels(m, t, host.base);
  Seq pat = nl;
  pat.insert(pat.end(), nr.begin(), nr.end());
  std::vector<Occurrence> out;
  const auto n = static_cast<long long>(t.letters.size());
  for (long long g = t.lo; g <= t.hi; ++g) {
    long long gi = t.origin + g;
    long long b = gi - static_cast<long long>(nl.size());
    long long e = gi + static_cast<long long>(nr.size());
    if (b < 0 || e > n) continue;
    if (lab[gi] != needle.base) continue;
    if (!std::equal(pat.begin(), pat.end(), t.letters.begin() + b)) continue;
    Occurrence occ;
    occ.anchor = g;
    occ.begin = b - t.origin;
    occ.end = e - t.origin;
    if (b > 0) occ.before = t.letters[b - 1];
    if (e < n) occ.after = t.letters[e];
    out.push_back(occ);
  }
  return out;
}

OccurrenceKind classify_occurrence(const Occurrence& occ) {
  OccurrenceKind k;
  k.factor = (!occ.before || occ.before->inverse) && (!occ.after || !occ.after->inverse);
  k.image = (!occ.before || !occ.before->inverse) && (!occ.after || occ.after->inverse);
  return k;
}

namespace {

constexpr std::uint64_t kMod = (1ULL << 61) - 1;
constexpr std::uint64_t kBase = 1'000'003ULL;

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b) {
  unsigned __int128 p = static_cast<unsigned __int128>(a) * b;
  std::uint64_t lo = static_cast<std::uint64_t>(p & kMod);
  std::uint64_t hi = static_cast<std::uint64_t>(p >> 61);
  std::uint64_t r = lo + hi;
  return r >= kMod ? r - kMod : r;
}

struct RollingHash {
  std::vector<std::uint64_t> pre, pw;
  explicit RollingHash(const Seq& s) : pre(s.size() + 1, 0), pw(s.size() + 1, 1) {
    for (std::size_t i = 0; i < s.size(); ++i) {
      pre[i + 1] = (mulmod(pre[i], kBase) + s[i].code() + 1) % kMod;
      pw[i + 1] = mulmod(pw[i], kBase);
    }
  }
  std::uint64_t get(std::size_t a, std::size_t b) const {
    return (pre[b] + kMod - mulmod(pre[a], pw[b - a])) % kMod;
  }
};

struct KeyHash {
  std::size_t operator()(const std::pair<std::uint64_t, std::uint32_t>& k) const {
    return std::hash<std::uint64_t>()(k.first * 31 + k.second);
  }
};

}  // namespace

std::optional<WitnessHit> find_witness(const LabelledSegment& seg, const std::vector<std::uint32_t>& label_inverse,
                                       std::size_t max_len) {
  const std::size_t p = seg.letters.size();
  if (seg.labels.size() != p + 1) throw Error("labelled segment has the wrong number of labels");
  Seq ext;
  std::vector<std::uint32_t> lab;
  std::size_t s0 = 0, s1 = 0;  // span starts in [s0, s1]
  bool left_end = seg.left_end, right_end = seg.right_end;
  if (seg.circular) {
    if (p == 0) throw InputError("circular segment needs a nonempty period");
    const std::size_t reps = (max_len + 2) / p + 3;
    for (std::size_t r = 0; r < reps; ++r) ext.insert(ext.end(), seg.letters.begin(), seg.letters.end());
    for (std::size_t g = 0; g <= ext.size(); ++g) lab.push_back(seg.labels[g % p]);
    s0 = p;
    s1 = 2 * p - 1;
    left_end = right_end = false;
  } else {
    ext = seg.letters;
    lab = seg.labels;
    s1 = p;
  }
  const std::size_t n = ext.size();
  const long long base_off = seg.origin - static_cast<long long>(seg.circular ? p : 0);
  Seq rev = words::invert(ext);
  RollingHash hf(ext), hr(rev);
  auto inv_label = [&](std::uint32_t l) { return l < label_inverse.size() ? label_inverse[l] : kNone; };
  auto factor_ok = [&](std::size_t a, std::size_t b) {
    bool before = a > 0 ? ext[a - 1].inverse : left_end;
    bool after = b < n ? !ext[b].inverse : right_end;
    return before && after;
  };
  auto image_ok = [&](std::size_t a, std::size_t b) {
    bool before = a > 0 ? !ext[a - 1].inverse : left_end;
    bool after = b < n ? ext[b].inverse : right_end;
    return before && after;
  };
  using Key = std::pair<std::uint64_t, std::uint32_t>;
  for (std::size_t len = 0; len <= max_len && len <= n; ++len) {
    std::unordered_map<Key, std::vector<std::size_t>, KeyHash> factors;
    for (std::size_t a = s0; a <= s1 && a + len <= n; ++a)
      if (factor_ok(a, a + len)) factors[{hf.get(a, a + len), lab[a]}].push_back(a);
    if (factors.empty()) continue;
    for (std::size_t a = s0; a <= s1 && a + len <= n; ++a) {
      const std::size_t b = a + len;
      if (!image_ok(a, b)) continue;
      if (auto it = factors.find({hf.get(a, b), lab[a]}); it != factors.end())
        for (auto f : it->second) {
          if (!seg.circular && len == n && f == 0 && a == 0) continue;
          if (lab[f] == lab[a] && std::equal(ext.begin() + f, ext.begin() + f + len, ext.begin() + a))
            return WitnessHit{len, base_off + static_cast<long long>(f), base_off + static_cast<long long>(a), false};
        }
      const std::uint32_t end_label = inv_label(lab[b]);
      if (auto it = factors.find({hr.get(n - b, n - a), end_label}); it != factors.end())
        for (auto f : it->second) {
          bool eq = lab[f] == end_label;
          for (std::size_t k = 0; eq && k < len; ++k) eq = ext[f + k] == ext[b - 1 - k].inverted();
          if (eq) return WitnessHit{len, base_off + static_cast<long long>(f), base_off + static_cast<long long>(a), true};
        }
    }
  }
  return std::nullopt;
}

LabelledSegment word_segment(const Mia& m, const PointedWord& w) {
  if (has_infinite_part(w)) throw Unsupported("word_segment needs finite or window parts");
  TwoSided t = two_sided(w, 0);
  LabelledSegment seg;
  seg.labels = gap_labels(m, t, w.base);
  seg.letters = std::move(t.letters);
  seg.left_end = t.left_end;
  seg.right_end = t.right_end;
  seg.origin = -t.origin;
  return seg;
}

LabelledSegment periodic_segment(const Mia& m, const PointedWord& w) {
  if (!std::holds_alternative<words::LeftInf>(w.left) || !std::holds_alternative<words::RightInf>(w.right) ||
      words::classify_periodicity(combined(w)) != words::Periodicity::periodic)
    throw Unsupported("expected a pure periodic two-sided word");
  const auto norm = std::get<words::BiInf>(words::normalize(combined(w)));
  const Seq per = words::unfold_right(w.right, norm.right_period.size());
  // Labels at period boundaries follow u -> e(t̃(u, period)); the labelled
  // period is the cycle length of the basepoint under that map.
  std::vector<StateId> boundary{w.base};
  for (std::size_t k = 0; k <= m.num_states(); ++k) {
    StateId s = run(m, boundary.back(), per);
    if (s == kNone) throw InputError("periodic word is not accepted");
    if (m.e(s) == w.base) break;
    boundary.push_back(m.e(s));
    if (boundary.size() > m.num_states() + 1) throw Unsupported("labelled word is not purely periodic");
  }
  LabelledSegment seg;
  seg.circular = true;
  for (StateId start : boundary) {
    StateId v = start;
    seg.labels.push_back(start);
    for (std::size_t i = 0; i < per.size(); ++i) {
      v = m.next(v, per[i]);
      seg.letters.push_back(per[i]);
      if (i + 1 < per.size()) seg.labels.push_back(m.e(v));
    }
  }
  seg.labels.push_back(w.base);
  seg.left_end = seg.right_end = false;
  return seg;
}

namespace {

std::vector<std::uint32_t> label_inverses(const Mia& m) {
  std::vector<std::uint32_t> inv(m.num_states(), kNone);
  for (StateId v = 0; v < m.num_states(); ++v) inv[v] = m.initial_inverse(v);
  return inv;
}

Witness to_witness(const Mia& m, const LabelledSegment& seg, const WitnessHit& hit) {
  Witness w;
  const long long idx = hit.factor_begin - seg.origin;
  const std::size_t p = seg.letters.size();
  std::string letters;
  for (std::size_t k = 0; k < hit.length; ++k) {
    const std::size_t i = static_cast<std::size_t>(idx) + k;
    letters += (k ? " " : "") + m.letter_name(seg.letters[seg.circular ? i % p : i]);
  }
  const std::size_t li = static_cast<std::size_t>(idx);
  w.text = "[" + m.name(seg.labels[seg.circular ? li % p : li]) + "]" + (letters.empty() ? "" : " " + letters);
  w.factor_begin = hit.factor_begin;
  w.factor_end = hit.factor_begin + static_cast<long long>(hit.length);
  w.image_in_inverse = hit.inverse;
  if (hit.inverse) {
    w.image_begin = -(hit.image_begin + static_cast<long long>(hit.length));
    w.image_end = -hit.image_begin;
  } else {
    w.image_begin = hit.image_begin;
    w.image_end = hit.image_begin + static_cast<long long>(hit.length);
  }
  return w;
}

bool window_certified(const PointedWord& w) {
  bool cert = true;
  for (const WordRep* part : {&w.left, &w.right})
    if (const auto* win = std::get_if<words::Window>(part)) cert = cert && win->certified_aperiodic;
  return cert;
}

BrickReport scan_report(const Mia& m, const PointedWord& w, bool require_aperiodic, const BrickOptions& opt) {
  BrickReport rep;
  rep.method = Method::automaton;
  if (has_infinite_part(w)) {
    rep.periodicity = std::string(words::to_string(words::classify_periodicity(combined(w))));
    if (require_aperiodic) {
      rep.brick = false;
      rep.scope = "exact";
      rep.reason = "word is not aperiodic";
      return rep;
    }
    LabelledSegment seg = periodic_segment(m, w);
    auto hit = find_witness(seg, label_inverses(m), opt.period_multiple * seg.letters.size());
    rep.scope = "exact";
    rep.brick = !hit;
    if (hit) {
      rep.witness = to_witness(m, seg, *hit);
      rep.reason = "common factor/image subword";
    }
    return rep;
  }
  LabelledSegment seg = word_segment(m, w);
  auto hit = find_witness(seg, label_inverses(m), seg.letters.size());
  if (has_window_part(w)) {
    const bool cert = window_certified(w);
    rep.periodicity = cert ? "aperiodic_certified" : "unknown_window";
    rep.scope = "window " + std::to_string(seg.letters.size());
    rep.brick = !hit && (cert || !require_aperiodic);
    if (!hit && !rep.brick) rep.reason = "aperiodicity not certified";
  } else {
    rep.periodicity = "finite";
    rep.scope = "exact";
    rep.brick = !hit;
  }
  if (hit) {
    rep.witness = to_witness(m, seg, *hit);
    rep.reason = "common factor/image subword";
  }
  return rep;
}

}  // namespace

BrickReport is_brick_word(const Mia& m, const PointedWord& w, const BrickOptions& opt) {
  require_word(m, w);
  return scan_report(m, w, true, opt);
}

BrickReport is_weak_brick_word(const Mia& m, const PointedWord& w, const BrickOptions& opt) {
  require_word(m, w);
  return scan_report(m, w, false, opt);
}

AlphabetMap parity_map(const Mia& m) {
  AlphabetMap phi;
  phi.image.assign(m.alphabet_size(), 0);
  phi.target_names = {"0"};
  return phi;
}

bool check_local_bijection(const Mia& m, const AlphabetMap& phi) {
  if (phi.image.size() != m.alphabet_size()) throw InputError("alphabet map has the wrong domain size");
  std::vector<bool> hit(phi.target_names.size(), false);
  for (auto t : phi.image) {
    if (t >= hit.size()) throw InputError("alphabet map leaves the target alphabet");
    hit[t] = true;
  }
  if (std::find(hit.begin(), hit.end(), false) != hit.end()) throw InputError("alphabet map is not surjective");
  for (StateId v = 0; v < m.num_states(); ++v) {
    std::set<std::uint32_t> images;
    for (std::uint32_t c = 0; c < 2 * m.alphabet_size(); ++c) {
      Letter b = Letter::from_code(c);
      if (m.next(v, b) != kNone && !images.insert(phi(b).code()).second) return false;
    }
  }
  return true;
}

Mia relabel(const Mia& m, const AlphabetMap& phi) {
  if (!check_local_bijection(m, phi)) throw InputError("alphabet map is not a local bijection");
  Mia out(phi.target_names);
  for (StateId v = 0; v < m.num_states(); ++v) out.add_state(m.name(v));
  for (StateId v = 0; v < m.num_states(); ++v) {
    if (m.is_initial(v)) out.set_initial_pair(v, m.initial_inverse(v));
    out.set_e(v, m.e(v));
    for (std::uint32_t c = 0; c < 2 * m.alphabet_size(); ++c) {
      Letter b = Letter::from_code(c);
      if (StateId to = m.next(v, b); to != kNone) out.set_transition(v, phi(b), to);
    }
  }
  return out;
}

PointedWord transport_forward(const PointedWord& w, const AlphabetMap& phi) {
  return PointedWord{map_letters(w.left, phi), w.base, map_letters(w.right, phi)};
}

namespace {

std::pair<Seq, StateId> walk_back(const Mia& m, const AlphabetMap& phi, StateId v, const Seq& image) {
  Seq out;
  for (auto c : image) {
    std::optional<Letter> pick;
    for (std::uint32_t code = 0; code < 2 * m.alphabet_size() && !pick; ++code) {
      Letter b = Letter::from_code(code);
      if (phi(b) == c && m.next(v, b) != kNone) pick = b;
    }
    if (!pick) throw InputError("word has no preimage under the alphabet map");
    out.push_back(*pick);
    v = m.next(v, *pick);
  }
  return {out, v};
}

WordRep back_right(const Mia& m, const AlphabetMap& phi, StateId v, const WordRep& rep) {
  if (const auto* r = std::get_if<words::RightInf>(&rep)) {
    auto [prefix, s] = walk_back(m, phi, v, r->prefix);
    std::vector<StateId> boundary{s};
    std::vector<Seq> blocks;
    for (;;) {
      auto [blk, t] = walk_back(m, phi, boundary.back(), r->period);
      blocks.push_back(blk);
      auto it = std::find(boundary.begin(), boundary.end(), t);
      if (it != boundary.end()) {
        const auto j = static_cast<std::size_t>(it - boundary.begin());
        Seq per;
        for (std::size_t k = 0; k < j; ++k) prefix.insert(prefix.end(), blocks[k].begin(), blocks[k].end());
        for (std::size_t k = j; k < blocks.size(); ++k) per.insert(per.end(), blocks[k].begin(), blocks[k].end());
        return words::RightInf{prefix, per};
      }
      boundary.push_back(t);
    }
  }
  auto [letters, s] = walk_back(m, phi, v, words::finite_letters(rep));
  (void)s;
  if (const auto* win = std::get_if<words::Window>(&rep)) {
    auto c = *win;
    c.letters = letters;
    return c;
  }
  return words::Finite{letters};
}

}  // namespace

PointedWord transport_backward(const Mia& m, const PointedWord& w, const AlphabetMap& phi) {
  PointedWord out;
  out.base = w.base;
  out.right = back_right(m, phi, w.base, w.right);
  out.left = words::invert(back_right(m, phi, m.initial_inverse(w.base), words::invert(w.left)));
  return out;
}

std::string write_mia(const Mia& m) {
  std::ostringstream out;
  out << "alphabet";
  for (const auto& l : m.letter_names()) out << ' ' << l;
  out << '\n';
  for (StateId v = 0; v < m.num_states(); ++v) {
    out << "state " << m.name(v);
    if (m.is_initial(v)) out << " initial inv=" << m.name(m.initial_inverse(v));
    out << " e=" << m.name(m.e(v)) << '\n';
  }
  for (StateId v = 0; v < m.num_states(); ++v)
    for (std::uint32_t c = 0; c < 2 * m.alphabet_size(); ++c) {
      Letter b = Letter::from_code(c);
      if (StateId to = m.next(v, b); to != kNone)
        out << "trans " << m.name(v) << ' ' << m.letter_name(b) << ' ' << m.name(to) << '\n';
    }
  return out.str();
}

Mia parse_mia(std::string_view text) {
  struct Line {
    std::size_t no;
    std::vector<std::string> tok;
  };
  std::vector<Line> lines;
  std::size_t pos = 0, no = 0;
  while (pos <= text.size()) {
    std::size_t nl = text.find('\n', pos);
    if (nl == std::string_view::npos) nl = text.size();
    std::string line(text.substr(pos, nl - pos));
    pos = nl + 1;
    ++no;
    if (auto h = line.find('#'); h != std::string::npos) line.resize(h);
    std::istringstream in(line);
    Line l{no, {}};
    std::string t;
    while (in >> t) l.tok.push_back(t);
    if (!l.tok.empty()) lines.push_back(std::move(l));
  }
  auto fail = [](std::size_t line, const std::string& msg) -> void {
    throw InputError("line " + std::to_string(line) + ": " + msg);
  };

  std::vector<std::string> alphabet;
  bool have_alphabet = false;
  for (const auto& l : lines)
    if (l.tok[0] == "alphabet") {
      if (have_alphabet) fail(l.no, "duplicate alphabet line");
      alphabet.assign(l.tok.begin() + 1, l.tok.end());
      have_alphabet = true;
    }
  if (!have_alphabet) {
    std::vector<std::string> seen;
    bool binary = true;
    for (const auto& l : lines) {
      if (l.tok[0] != "trans" || l.tok.size() != 4) continue;
      std::string t = l.tok[2];
      binary = binary && (t == "0" || t == "1" || t == "0'");
      if (!t.empty() && t.back() == '\'') t.pop_back();
      if (std::find(seen.begin(), seen.end(), t) == seen.end()) seen.push_back(t);
    }
    alphabet = binary ? std::vector<std::string>{"0"} : seen;
  }
  Mia m(alphabet);
  for (const auto& l : lines) {
    if (l.tok[0] != "state") continue;
    if (l.tok.size() < 3) fail(l.no, "expected 'state <id> [initial inv=<id>] e=<id>'");
    if (m.find_state(l.tok[1])) fail(l.no, "duplicate state '" + l.tok[1] + "'");
    m.add_state(l.tok[1]);
  }
  auto state = [&](const std::string& name, std::size_t line) {
    auto s = m.find_state(name);
    if (!s) fail(line, "unknown state '" + name + "'");
    return *s;
  };
  for (const auto& l : lines) {
    const auto& t = l.tok;
    if (t[0] == "alphabet") continue;
    if (t[0] == "state") {
      StateId v = state(t[1], l.no);
      bool initial = false, have_e = false;
      for (std::size_t i = 2; i < t.size(); ++i) {
        if (t[i] == "initial") initial = true;
        else if (t[i].rfind("inv=", 0) == 0) {
          if (!initial) fail(l.no, "inv= requires 'initial'");
          m.set_initial_pair(v, state(t[i].substr(4), l.no));
        } else if (t[i].rfind("e=", 0) == 0) {
          m.set_e(v, state(t[i].substr(2), l.no));
          have_e = true;
        } else fail(l.no, "unexpected token '" + t[i] + "'");
      }
      if (initial && !m.is_initial(v)) fail(l.no, "initial state needs inv=<id>");
      if (!have_e) fail(l.no, "state needs e=<id>");
    } else if (t[0] == "trans") {
      if (t.size() != 4) fail(l.no, "expected 'trans <state> <letter> <state>'");
      auto b = m.find_letter(t[2]);
      if (!b) fail(l.no, "unknown letter '" + t[2] + "'");
      StateId from = state(t[1], l.no);
      if (m.next(from, *b) != kNone) fail(l.no, "duplicate transition");
      m.set_transition(from, *b, state(t[3], l.no));
    } else {
      fail(l.no, "unknown keyword '" + t[0] + "'");
    }
  }
  return m;
}

std::string to_dot(const Mia& m) {
  std::ostringstream out;
  out << "digraph mia {\n  rankdir=LR;\n";
  for (StateId v = 0; v < m.num_states(); ++v)
    out << "  s" << v << " [label=\"" << m.name(v) << "\", shape=" << (m.is_initial(v) ? "doublecircle" : "circle")
        << "];\n";
  for (StateId v = 0; v < m.num_states(); ++v)
    for (std::uint32_t c = 0; c < 2 * m.alphabet_size(); ++c) {
      Letter b = Letter::from_code(c);
      if (StateId to = m.next(v, b); to != kNone)
        out << "  s" << v << " -> s" << to << " [label=\"" << m.letter_name(b) << "\"];\n";
    }
  out << "}\n";
  return out.str();
}

}  // namespace stralg::mia
