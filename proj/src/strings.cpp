#include "stralg/strings.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "stralg/error.hpp"

namespace stralg::strings {

VertexIdx syl_source(const StringAlgebra& A, Letter s) {
  const auto& a = A.arrow(s.base);
  return s.inverse ? a.target : a.source;
}

VertexIdx syl_target(const StringAlgebra& A, Letter s) {
  const auto& a = A.arrow(s.base);
  return s.inverse ? a.source : a.target;
}

int syl_sigma(const StringAlgebra& A, Letter s) {
  const auto& sp = A.signs()[s.base];
  return s.inverse ? sp.eps : sp.sigma;
}

int syl_eps(const StringAlgebra& A, Letter s) {
  const auto& sp = A.signs()[s.base];
  return s.inverse ? sp.sigma : sp.eps;
}

Str Str::zero(VertexIdx v, int side) {
  Str x;
  x.s_ = x.t_ = v;
  x.sigma_ = -side;
  x.eps_ = side;
  return x;
}

Str Str::inverted() const {
  Str x;
  x.syl_ = words::invert(syl_);
  x.s_ = t_;
  x.t_ = s_;
  x.sigma_ = eps_;
  x.eps_ = sigma_;
  return x;
}

std::strong_ordering operator<=>(const Str& a, const Str& b) {
  if (auto c = a.size() <=> b.size(); c != 0) return c;
  if (auto c = a.syl_ <=> b.syl_; c != 0) return c;
  if (auto c = a.s_ <=> b.s_; c != 0) return c;
  return a.eps_ <=> b.eps_;
}

std::string_view to_string(StringClause c) {
  switch (c) {
    case StringClause::composition: return "composition";
    case StringClause::backtrack: return "backtrack";
    case StringClause::relation: return "relation";
  }
  return "?";
}

namespace {

// Checks the clauses completed by syllable j, given that syl[0..j) is valid.
std::optional<StringIssue> check_at(const StringAlgebra& A, const Seq& syl, std::size_t j) {
  const Letter cur = syl[j];
  if (j > 0) {
    const Letter prev = syl[j - 1];
    if (syl_target(A, prev) != syl_source(A, cur))
      return StringIssue{StringClause::composition, j, "syllables at positions " + std::to_string(j - 1) + " and " +
                                                           std::to_string(j) + " do not compose"};
    if (cur == prev.inverted())
      return StringIssue{StringClause::backtrack, j, "backtrack at position " + std::to_string(j)};
  }
  // Direct path read by the run ending at j: for an inverse run the arrows
  // are walked in reverse.
  algebra::Path path{cur.base};
  for (std::size_t k = j; k-- > 0 && path.size() < A.max_relation_length();) {
    if (syl[k].inverse != cur.inverse) break;
    if (cur.inverse)
      path.push_back(syl[k].base);
    else
      path.insert(path.begin(), syl[k].base);
    if (A.is_relation(path))
      return StringIssue{StringClause::relation, j, "relation violated by the run ending at position " + std::to_string(j)};
  }
  return std::nullopt;
}

Str gap_zero(const StringAlgebra& A, const Seq& s, std::size_t g) {
  if (g > 0) return Str::zero(syl_target(A, s[g - 1]), syl_eps(A, s[g - 1]));
  return Str::zero(syl_source(A, s[0]), -syl_sigma(A, s[0]));
}

void check_letters(const StringAlgebra& A, const Seq& syl) {
  for (auto l : syl)
    if (l.base >= A.num_arrows()) throw InputError("syllable refers to an unknown arrow index " + std::to_string(l.base));
}

}  // namespace

std::optional<StringIssue> check_string(const StringAlgebra& A, const Seq& syl) {
  check_letters(A, syl);
  for (std::size_t j = 0; j < syl.size(); ++j)
    if (auto issue = check_at(A, syl, j)) return issue;
  return std::nullopt;
}

Str make_string(const StringAlgebra& A, const Seq& syl) {
  if (syl.empty()) throw InputError("a string needs at least one syllable; use a zero-length literal");
  if (auto issue = check_string(A, syl))
    throw InputError("invalid string (" + std::string(to_string(issue->clause)) + "): " + issue->message);
  Str x;
  x.syl_ = syl;
  x.s_ = syl_source(A, syl.front());
  x.t_ = syl_target(A, syl.back());
  x.sigma_ = syl_sigma(A, syl.front());
  x.eps_ = syl_eps(A, syl.back());
  return x;
}

Seq parse_syllables(const StringAlgebra& A, std::string_view text) {
  Seq out;
  std::istringstream in{std::string(text)};
  std::string tok;
  while (in >> tok) {
    bool inv = false;
    if (!tok.empty() && tok.back() == '\'') {
      inv = true;
      tok.pop_back();
    }
    auto a = A.presentation().find_arrow(tok);
    if (!a) throw InputError("unknown arrow '" + tok + "' in string literal");
    out.push_back({*a, inv});
  }
  return out;
}

Str parse_string(const StringAlgebra& A, std::string_view text) {
  std::string t(text);
  t.erase(0, t.find_first_not_of(" \t"));
  t.erase(t.find_last_not_of(" \t") + 1);
  if (t.rfind("1(", 0) == 0 && t.back() == ')') {
    auto comma = t.find(',');
    if (comma == std::string::npos) throw InputError("zero-length literal must look like 1(v,+1)");
    std::string v = t.substr(2, comma - 2);
    std::string side = t.substr(comma + 1, t.size() - comma - 2);
    auto vi = A.presentation().find_vertex(v);
    if (!vi) throw InputError("unknown vertex '" + v + "' in zero-length literal");
    if (side == "+1" || side == "1") return Str::zero(*vi, 1);
    if (side == "-1") return Str::zero(*vi, -1);
    throw InputError("zero-length side must be +1 or -1");
  }
  return make_string(A, parse_syllables(A, t));
}

std::string format_syllables(const StringAlgebra& A, const Seq& s) {
  std::string out;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i) out += ' ';
    out += A.arrow(s[i].base).id;
    if (s[i].inverse) out += '\'';
  }
  return out;
}

std::string format_string(const StringAlgebra& A, const Str& x) {
  if (x.is_zero())
    return "1(" + A.presentation().vertices[x.source()] + "," + (x.side() > 0 ? "+1" : "-1") + ")";
  return format_syllables(A, x.syllables());
}

Str gap_string(const StringAlgebra& A, const Str& x, std::size_t g) {
  if (x.is_zero()) return x;
  return gap_zero(A, x.syllables(), g);
}

ConcatResult concat(const StringAlgebra& A, const Str& x, const Str& y) {
  if (x.target() != y.source()) return {std::nullopt, "t(x) differs from s(y)"};
  if (y.sigma() != -x.eps()) return {std::nullopt, "sign mismatch: sigma(y) must equal -eps(x)"};
  if (x.is_zero()) return {y, {}};
  if (y.is_zero()) return {x, {}};
  Seq joined = x.syllables();
  joined.insert(joined.end(), y.syllables().begin(), y.syllables().end());
  if (auto issue = check_string(A, joined)) return {std::nullopt, issue->message};
  return {make_string(A, joined), {}};
}

std::string_view to_string(SubClause c) {
  switch (c) {
    case SubClause::equal: return "equal";
    case SubClause::left: return "left";
    case SubClause::right: return "right";
    case SubClause::interior: return "interior";
  }
  return "?";
}

namespace {

// Spans [a, a+len) of `s` with a in [first, last], len <= max_len.
// Factor: inverse syllable before (or genuine left end), direct after (or
// genuine right end). Image is the mirror.
std::vector<SubOccurrence> spans(const StringAlgebra& A, const Seq& s, bool left_end, bool right_end,
                                 std::size_t first, std::size_t last, std::size_t max_len, long long origin,
                                 bool factor) {
  std::vector<SubOccurrence> out;
  for (std::size_t a = first; a <= last && a <= s.size(); ++a) {
    const bool has_before = a > 0;
    if (!has_before && !left_end) continue;
    if (has_before && s[a - 1].inverse != factor) continue;
    for (std::size_t len = 0; len <= max_len && a + len <= s.size(); ++len) {
      const std::size_t b = a + len;
      const bool has_after = b < s.size();
      if (!has_after && !right_end) break;
      if (has_after && s[b].inverse == factor) continue;
      SubOccurrence occ;
      occ.sub = len == 0 ? gap_zero(A, s, a) : make_string(A, Seq(s.begin() + a, s.begin() + b));
      occ.begin = static_cast<long long>(a) - origin;
      occ.end = static_cast<long long>(b) - origin;
      occ.clause = !has_before ? (!has_after ? SubClause::equal : SubClause::left)
                               : (!has_after ? SubClause::right : SubClause::interior);
      out.push_back(std::move(occ));
    }
  }
  return out;
}

std::vector<SubOccurrence> enumerate_finite(const StringAlgebra& A, const Str& x, bool factor) {
  if (x.is_zero()) return {SubOccurrence{x, 0, 0, SubClause::equal}};
  const auto& s = x.syllables();
  return spans(A, s, true, true, 0, s.size(), s.size(), 0, factor);
}

std::vector<SubOccurrence> enumerate_infinite(const StringAlgebra& A, const InfStr& x, std::size_t max_len,
                                              bool factor) {
  auto m = words::materialize(x.rep, max_len + 1);
  const auto first = static_cast<std::size_t>(m.origin + m.lo);
  const auto end = static_cast<std::size_t>(m.origin + m.hi);
  // A genuine right end also contributes its own gap.
  const std::size_t last = m.right_end && end == m.letters.size() ? end : end - 1;
  return spans(A, m.letters, m.left_end, m.right_end, first, last, max_len, m.origin, factor);
}

}  // namespace

std::vector<SubOccurrence> enumerate_factor_substrings(const StringAlgebra& A, const Str& x) {
  return enumerate_finite(A, x, true);
}

std::vector<SubOccurrence> enumerate_image_substrings(const StringAlgebra& A, const Str& x) {
  return enumerate_finite(A, x, false);
}

std::vector<SubOccurrence> enumerate_factor_substrings(const StringAlgebra& A, const InfStr& x, std::size_t max_len) {
  return enumerate_infinite(A, x, max_len, true);
}

std::vector<SubOccurrence> enumerate_image_substrings(const StringAlgebra& A, const InfStr& x, std::size_t max_len) {
  return enumerate_infinite(A, x, max_len, false);
}

InfStr make_inf_string(const StringAlgebra& A, words::WordRep rep) {
  if (std::holds_alternative<words::Finite>(rep)) throw InputError("an infinite string needs a periodic representation or a window");
  auto m = words::materialize(rep, 0);
  if (m.letters.empty()) throw InputError("empty infinite string");
  if (auto issue = check_string(A, m.letters))
    throw InputError("invalid infinite string (" + std::string(to_string(issue->clause)) + "): " + issue->message);
  if (std::holds_alternative<words::Window>(rep)) return InfStr{std::move(rep)};
  return InfStr{words::normalize(rep)};
}

InfStr inverted(const InfStr& x) { return InfStr{words::invert(x.rep)}; }

BandCheck is_band(const StringAlgebra& A, const Str& x) {
  BandCheck r;
  if (x.is_zero()) {
    r.reasons.push_back("zero-length string");
    return r;
  }
  const auto& s = x.syllables();
  if (x.source() != x.target()) r.reasons.push_back("not cyclic: s(x) differs from t(x)");
  if (!words::is_primitive(s)) r.reasons.push_back("not primitive");
  if (!s.front().inverse) r.reasons.push_back("first syllable is direct");
  if (s.back().inverse) r.reasons.push_back("last syllable is inverse");
  if (x.source() == x.target()) {
    // Enough copies that every relation-length window of the power is seen.
    const std::size_t copies = A.max_relation_length() / s.size() + 2;
    Seq pw;
    for (std::size_t k = 0; k < copies; ++k) pw.insert(pw.end(), s.begin(), s.end());
    if (check_string(A, pw)) r.reasons.push_back("powers are not strings");
  }
  r.ok = r.reasons.empty();
  return r;
}

Str canonical_band(const StringAlgebra& A, const Str& b) {
  std::optional<Seq> best;
  for (const Seq& base : {b.syllables(), words::invert(b.syllables())}) {
    Seq cur = base;
    for (std::size_t k = 0; k < cur.size(); ++k) {
      if (cur.front().inverse && !cur.back().inverse && (!best || cur < *best)) best = cur;
      std::rotate(cur.begin(), cur.begin() + 1, cur.end());
    }
  }
  if (!best) throw InputError("no rotation satisfies the band boundary clauses");
  return make_string(A, *best);
}

std::vector<Str> enumerate_strings(const StringAlgebra& A, std::size_t max_len) {
  if (max_len > kMaxEnumerationLength)
    throw CapExceeded("string enumeration length " + std::to_string(max_len) + " exceeds cap " +
                      std::to_string(kMaxEnumerationLength));
  std::vector<Str> out;
  for (VertexIdx v = 0; v < A.num_vertices(); ++v) {
    out.push_back(Str::zero(v, 1));
    out.push_back(Str::zero(v, -1));
  }
  Seq cur;
  auto dfs = [&](auto&& self) -> void {
    if (out.size() > kMaxEnumerationCount) throw CapExceeded("string enumeration exceeds the count cap");
    out.push_back(make_string(A, cur));
    if (cur.size() == max_len) return;
    for (std::uint32_t a = 0; a < A.num_arrows(); ++a)
      for (bool inv : {false, true}) {
        cur.push_back({a, inv});
        if (!check_at(A, cur, cur.size() - 1)) self(self);
        cur.pop_back();
      }
  };
  if (max_len > 0)
    for (std::uint32_t a = 0; a < A.num_arrows(); ++a)
      for (bool inv : {false, true}) {
        cur = {{a, inv}};
        dfs(dfs);
      }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Str> enumerate_bands(const StringAlgebra& A, std::size_t max_len) {
  std::set<Str> found;
  for (const auto& x : enumerate_strings(A, max_len))
    if (is_band(A, x).ok) found.insert(canonical_band(A, x));
  return {found.begin(), found.end()};
}

}  // namespace stralg::strings
