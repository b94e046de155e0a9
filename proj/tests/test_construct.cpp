#include <doctest.h>

#include <set>
#include <tuple>

#include "corpus.hpp"
#include "stralg/construct.hpp"
#include "stralg/error.hpp"

using namespace stralg;
using namespace stralg::construct;
using testsupport::load_algebra;

namespace {

using Edge = std::tuple<std::string, std::string, std::string>;  // from, letter, to

std::set<Edge> edges(const mia::Mia& m) {
  std::set<Edge> out;
  for (mia::StateId v = 0; v < m.num_states(); ++v)
    for (std::uint32_t c = 0; c < 2 * m.alphabet_size(); ++c) {
      auto b = words::Letter::from_code(c);
      auto t = m.next(v, b);
      if (t != mia::kNone) out.insert({m.name(v), m.letter_name(b), m.name(t)});
    }
  return out;
}

}  // namespace

TEST_CASE("gamma automaton matches the reference edge list") {
  auto A = load_algebra("gamma.alg");
  auto M = build_mia(A);
  CHECK(M.mia.num_states() == 28);
  CHECK(M.mia.initial_states().size() == 12);
  CHECK(mia::validate_mia(M.mia).empty());
  // Reference edges: 32 arrows, state names in traversal order.
  const std::set<Edge> reference = {
      {"a3.b", "c3'", "c3'"},         {"c3'", "c2", "c2"},           {"1(v6,-1)", "c2", "c2"},
      {"1(v2,+1)", "a1'", "a1'"},     {"1(v1,+1)", "b", "b"},         {"c2", "c1'", "c1'"},
      {"1(v3,-1)", "a2", "a2"},       {"a1'", "b", "b"},             {"b", "c3'", "c3'"},
      {"b", "c1", "c1"},              {"c1", "c2'", "c2'"},          {"1(v4,+1)", "c3'", "c3'"},
      {"1(v4,+1)", "c1", "c1"},       {"a3", "b", "a3.b"},           {"1(v3,+1)", "a3", "a3"},
      {"a2", "a1'", "a1'"},           {"1(v4,-1)", "b'", "b'"},      {"c2'", "c3", "c3"},
      {"1(v5,+1)", "c2'", "c2'"},     {"a3'", "a2", "a2"},           {"c3", "b'", "b'"},
      {"1(v5,-1)", "c1'", "c1'"},     {"1(v2,-1)", "a2'", "a2'"},    {"1(v1,-1)", "a3'", "a3'"},
      {"1(v1,-1)", "a1", "a1"},       {"b'", "a3'", "a3'"},          {"b'", "a1", "a1"},
      {"1(v6,+1)", "c3", "c3"},       {"c1'", "b'", "c1'.b'"},       {"a2'", "a3", "a3"},
      {"a1", "a2'", "a2'"},           {"c1'.b'", "a1", "a1"},
  };
  CHECK(reference.size() == 32);
  CHECK(edges(M.mia) == reference);
  // Spot transitions.
  const auto& m = M.mia;
  auto st = [&](const char* n) { return *m.find_state(n); };
  auto letter = [&](const char* n) { return *m.find_letter(n); };
  CHECK(m.next(st("a3"), letter("b")) == st("a3.b"));
  CHECK(m.next(st("a3.b"), letter("c1")) == mia::kNone);
  CHECK(m.next(st("b"), letter("c1")) == st("c1"));
  CHECK(m.next(st("b"), letter("c3'")) == st("c3'"));
}

TEST_CASE("lambda3 automaton size") {
  auto A = load_algebra("lambda3.alg");
  auto M = build_mia(A);
  CHECK(M.mia.num_states() == 14);
  CHECK(M.mia.initial_states().size() == 6);
  CHECK(mia::validate_mia(M.mia).empty());
  auto P = parity_mia(A);
  CHECK(mia::validate_mia(P.binary).empty());
  CHECK(P.binary.num_states() == 14);
}

TEST_CASE("projection e is the endpoint of the state") {
  auto A = load_algebra("gamma.alg");
  auto M = build_mia(A);
  for (mia::StateId v = 0; v < M.mia.num_states(); ++v) {
    const auto& x = M.states[v];
    CHECK(M.states[M.mia.e(v)] == strings::Str::zero(x.target(), x.eps()));
  }
}

TEST_CASE("automata of the random corpus are valid") {
  for (const auto& [name, p] : testsupport::full_corpus(9, 20)) {
    CAPTURE(name);
    strings::StringAlgebra A(p);
    auto P = parity_mia(A);
    CHECK(mia::validate_mia(P.base.mia).empty());
    CHECK(mia::validate_mia(P.binary).empty());
    CHECK(P.binary.initial_states().size() == 2 * p.vertices.size());
  }
}

TEST_CASE("strings and words correspond") {
  for (const auto& [name, p] : testsupport::full_corpus(9, 8)) {
    CAPTURE(name);
    strings::StringAlgebra A(p);
    auto P = parity_mia(A);
    for (const auto& x : strings::enumerate_strings(A, 5)) {
      auto w = string_to_word(A, P.base, x);
      CHECK_FALSE(mia::check_word(P.base.mia, w));
      CHECK_FALSE(mia::check_word(P.binary, mia::transport_forward(w, P.delta)));
      auto back = word_to_string(A, P.base, w);
      REQUIRE(std::holds_alternative<strings::Str>(back));
      CHECK(std::get<strings::Str>(back) == x);
      // The inverse string gives the inverse word up to equivalence.
      CHECK(mia::equivalent(P.base.mia, mia::invert(P.base.mia, w), string_to_word(A, P.base, x.inverted())));
    }
  }
}

TEST_CASE("infinite strings as words") {
  auto A = load_algebra("lambda3.alg");
  auto P = parity_mia(A);
  auto b = strings::parse_syllables(A, "a2' b2");
  auto w = string_to_word(A, P.base, strings::make_inf_string(A, words::RightInf{{}, b}));
  CHECK_FALSE(mia::check_word(P.base.mia, w));
  auto back = word_to_string(A, P.base, w);
  REQUIRE(std::holds_alternative<strings::InfStr>(back));
  CHECK(words::same_word(std::get<strings::InfStr>(back).rep, words::RightInf{{}, b}));
  auto bw = band_to_word(A, P.base, strings::parse_string(A, "a2' b2"));
  CHECK_FALSE(mia::check_word(P.base.mia, bw));
  CHECK_THROWS_AS(strings::make_inf_string(A, words::RightInf{{}, strings::parse_syllables(A, "b2 a1")}),
                  InputError);
}
