#include "stralg/sturmian.hpp"

#include <algorithm>
#include <sstream>
#include <unordered_map>

#include "stralg/error.hpp"

namespace stralg::sturmian {

using words::Letter;
using words::Seq;

std::optional<unsigned> DirectiveSequence::term(std::size_t k) const {
  if (k == 0) throw InputError("directive terms are numbered from 1");
  if (k <= prefix.size()) return prefix[k - 1];
  if (period.empty()) return std::nullopt;
  return period[(k - 1 - prefix.size()) % period.size()];
}

std::string DirectiveSequence::to_string() const {
  std::string out;
  for (auto t : prefix) out += (out.empty() ? "" : ",") + std::to_string(t);
  if (!period.empty()) {
    out += out.empty() ? "(" : ",(";
    for (std::size_t i = 0; i < period.size(); ++i) out += (i ? "," : "") + std::to_string(period[i]);
    out += ")";
  }
  return out;
}

namespace {

std::vector<unsigned> parse_terms(std::string_view text) {
  std::vector<unsigned> out;
  std::string item;
  std::istringstream in{std::string(text)};
  while (std::getline(in, item, ',')) {
    item.erase(std::remove_if(item.begin(), item.end(), [](char c) { return c == ' '; }), item.end());
    if (item.empty()) continue;
    if (!std::all_of(item.begin(), item.end(), [](char c) { return c >= '0' && c <= '9'; }) || item.size() > 9)
      throw InputError("directive term '" + item + "' is not a small nonnegative integer");
    out.push_back(static_cast<unsigned>(std::stoul(item)));
  }
  return out;
}

}  // namespace

DirectiveSequence parse_directive(std::string_view text) {
  DirectiveSequence d;
  const auto open = text.find('(');
  if (open == std::string_view::npos) {
    d.prefix = parse_terms(text);
  } else {
    const auto close = text.find(')', open);
    if (close == std::string_view::npos || text.find_first_not_of(" ", close + 1) != std::string_view::npos)
      throw InputError("directive period must be a final parenthesized group");
    d.prefix = parse_terms(text.substr(0, open));
    d.period = parse_terms(text.substr(open + 1, close - open - 1));
    if (d.period.empty()) throw InputError("empty directive period");
    // Primitive period.
    const std::size_t p = d.period.size();
    for (std::size_t q = 1; q < p; ++q)
      if (p % q == 0 && std::equal(d.period.begin() + q, d.period.end(), d.period.begin())) {
        d.period.resize(q);
        break;
      }
  }
  if (d.prefix.empty() && d.period.empty()) throw InputError("directive sequence needs at least one term");
  for (std::size_t k = 2; k <= d.prefix.size() + 2 * d.period.size(); ++k)
    if (auto t = d.term(k); t && *t == 0) throw InputError("directive terms after the first must be positive");
  return d;
}

words::Window characteristic_prefix(const DirectiveSequence& d, std::size_t n) {
  if (n == 0) throw InputError("prefix length must be positive");
  if (n > kMaxPrefix) throw CapExceeded("prefix length exceeds cap " + std::to_string(kMaxPrefix));
  std::string prev = "b", cur = "a";
  bool complete = false;
  for (std::size_t k = 1;; ++k) {
    auto t = d.term(k);
    if (!t) break;
    // Repetitions beyond what reaches length n do not change the prefix.
    const std::size_t need = n / cur.size() + 1;
    const std::size_t reps = std::min<std::size_t>(*t, need);
    std::string next;
    for (std::size_t r = 0; r < reps; ++r) next += cur;
    next += prev;
    prev = std::move(cur);
    cur = std::move(next);
    if (cur.size() >= n) {
      complete = true;
      break;
    }
  }
  words::Window w;
  w.origin = "characteristic " + d.to_string();
  w.open_left = false;
  w.open_right = true;
  std::string text = cur;
  if (!complete) {
    const std::string unit = cur;
    while (text.size() < n) text += unit;
    w.origin += " (periodic extension)";
  }
  text.resize(n);
  w.letters = words::ab(text);
  w.certified_aperiodic = complete && d.infinite();
  return w;
}

std::optional<SturmianViolation> sturmian_window_check(const words::Window& w) {
  const std::string s = words::ab_string(w.letters);
  const std::size_t n = s.size();
  constexpr std::uint64_t kB = 1'000'003ULL;
  std::vector<std::uint64_t> pre(n + 1, 0), pw(n + 1, 1);
  for (std::size_t i = 0; i < n; ++i) {
    pre[i + 1] = pre[i] * kB + static_cast<unsigned char>(s[i]);
    pw[i + 1] = pw[i] * kB;
  }
  auto hash = [&](std::size_t a, std::size_t len) { return pre[a + len] - pre[a] * pw[len]; };
  for (std::size_t len = 0; len + 2 <= n; ++len) {
    std::unordered_map<std::uint64_t, std::vector<std::size_t>> a_mid;
    for (std::size_t i = 0; i + len + 2 <= n; ++i)
      if (s[i] == 'a' && s[i + len + 1] == 'a') a_mid[hash(i + 1, len)].push_back(i);
    if (a_mid.empty()) continue;
    for (std::size_t j = 0; j + len + 2 <= n; ++j) {
      if (s[j] != 'b' || s[j + len + 1] != 'b') continue;
      auto it = a_mid.find(hash(j + 1, len));
      if (it == a_mid.end()) continue;
      for (auto i : it->second)
        if (s.compare(i + 1, len, s, j + 1, len) == 0)
          return SturmianViolation{Seq(w.letters.begin() + static_cast<long>(i + 1),
                                       w.letters.begin() + static_cast<long>(i + 1 + len)),
                                   i, j};
    }
  }
  return std::nullopt;
}

std::string_view double_kronecker_text() {
  return "vertex v1\n"
         "vertex v2\n"
         "vertex v3\n"
         "arrow a1 v2 v1\n"
         "arrow b1 v2 v1\n"
         "arrow a2 v3 v2\n"
         "arrow b2 v3 v2\n"
         "relation b2 a1\n"
         "relation a2 b1\n";
}

namespace {

struct Kronecker {
  algebra::StringAlgebra algebra{algebra::parse_presentation(double_kronecker_text())};
  bricks::Automata automata{algebra};
};

const Kronecker& kronecker() {
  static const Kronecker k;
  return k;
}

bool violates_with(const words::Window& w, Letter first) {
  words::Window ext = w;
  ext.letters.insert(ext.letters.begin(), first);
  return sturmian_window_check(ext).has_value();
}

}  // namespace

BridgeResult bridge(const words::Window& w, BridgeSide side) {
  const auto& K = kronecker();
  const auto& A = K.algebra;
  const auto& P = A.presentation();
  const Letter b1{*P.find_arrow("b1"), false}, a1i{*P.find_arrow("a1"), true};
  const Letter a2i{*P.find_arrow("a2"), true}, b2{*P.find_arrow("b2"), false};
  BridgeResult out;
  for (auto l : w.letters) {
    if (l.base == 0) {
      out.string.push_back(b1);
      out.string.push_back(a1i);
    } else {
      out.string.push_back(a2i);
      out.string.push_back(b2);
    }
  }
  if (out.string.empty()) throw InputError("empty window");
  words::Window sw;
  sw.letters = out.string;
  sw.certified_aperiodic = w.certified_aperiodic;
  sw.origin = w.origin;
  sw.open_right = w.open_right;
  sw.open_left = side == BridgeSide::bi_infinite;
  strings::InfStr x = strings::make_inf_string(A, sw);
  out.binary = mia::transport_forward(construct::string_to_word(A, K.automata.parity.base, x), K.automata.parity.delta);
  out.report = mia::is_brick_word(K.automata.parity.binary, out.binary);
  if (out.report.witness) {
    const auto& wt = *out.report.witness;
    const long long len = wt.factor_end - wt.factor_begin;
    if (wt.factor_begin % 2 == 0 && len % 2 == 0) {
      Seq mid(w.letters.begin() + wt.factor_begin / 2, w.letters.begin() + (wt.factor_begin + len) / 2);
      out.middle = mid;
    }
  }
  if (side == BridgeSide::bi_infinite)
    out.sturmian_violation = sturmian_window_check(w).has_value();
  else
    out.sturmian_violation = violates_with(w, Letter{0, false}) || violates_with(w, Letter{1, false});
  out.consistent = out.report.witness.has_value() == out.sturmian_violation;
  return out;
}

}  // namespace stralg::sturmian
