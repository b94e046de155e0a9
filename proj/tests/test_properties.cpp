#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

#include "corpus.hpp"
#include "oracles.hpp"
#include "stralg/bricks.hpp"
#include "stralg/recover.hpp"
#include "stralg/sturmian.hpp"

using namespace stralg;

namespace {

// Random arrow declaration order, same quiver and relations.
algebra::Presentation shuffled(const algebra::Presentation& p, std::mt19937_64& rng) {
  std::vector<algebra::ArrowIdx> perm(p.arrows.size());
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);
  algebra::Presentation q;
  q.vertices = p.vertices;
  std::vector<algebra::ArrowIdx> where(p.arrows.size());
  for (std::size_t i = 0; i < perm.size(); ++i) {
    q.arrows.push_back(p.arrows[perm[i]]);
    where[perm[i]] = static_cast<algebra::ArrowIdx>(i);
  }
  for (const auto& r : p.relations) {
    algebra::Path path;
    for (auto a : r) path.push_back(where[a]);
    q.relations.push_back(path);
  }
  algebra::normalize_relations(q);
  return q;
}

std::set<std::string> codes(const algebra::ValidationReport& r) {
  std::set<std::string> out;
  for (const auto& v : r.violations) out.insert(v.code);
  return out;
}

}  // namespace

TEST_CASE("presentation text roundtrip and normalization") {
  std::mt19937_64 rng(101);
  for (int t = 0; t < 300; ++t) {
    auto p = testsupport::random_presentation(rng, 5, 7, 4);
    CHECK(algebra::parse_presentation(algebra::print_presentation(p)) == p);
    auto q = p;
    algebra::normalize_relations(q);
    CHECK(q == p);
  }
}

TEST_CASE("validation does not depend on declaration order") {
  std::mt19937_64 rng(102);
  for (int t = 0; t < 300; ++t) {
    auto p = testsupport::random_presentation(rng, 4, 6, 3);
    auto q = shuffled(p, rng);
    auto rp = algebra::validate_string_algebra(p);
    auto rq = algebra::validate_string_algebra(q);
    CHECK(rp.is_string_algebra == rq.is_string_algebra);
    CHECK(rp.is_gentle == rq.is_gentle);
    CHECK(rp.admissibility_bound == rq.admissibility_bound);
    CHECK(codes(rp) == codes(rq));
    if (rp.is_string_algebra) CHECK(recover::presentations_isomorphic(p, q));
  }
}

TEST_CASE("string invariants") {
  for (const auto& [name, p] : testsupport::full_corpus(103, 12)) {
    CAPTURE(name);
    strings::StringAlgebra A(p);
    auto all = strings::enumerate_strings(A, 6);
    std::set<strings::Str> set(all.begin(), all.end());
    for (const auto& x : all) {
      CHECK(x.inverted().inverted() == x);
      CHECK(set.count(x.inverted()) == 1);
      if (x.is_zero()) continue;
      CHECK(strings::parse_string(A, strings::format_string(A, x)) == x);
      // Identities on both sides.
      auto l = strings::concat(A, strings::gap_string(A, x, 0), x);
      auto r = strings::concat(A, x, strings::gap_string(A, x, x.size()));
      REQUIRE(l.value);
      REQUIRE(r.value);
      CHECK(*l.value == x);
      CHECK(*r.value == x);
      // Every split concatenates back.
      for (std::size_t k = 1; k < x.size(); ++k) {
        const auto& s = x.syllables();
        auto a = strings::make_string(A, words::Seq(s.begin(), s.begin() + static_cast<long>(k)));
        auto b = strings::make_string(A, words::Seq(s.begin() + static_cast<long>(k), s.end()));
        auto ab = strings::concat(A, a, b);
        REQUIRE(ab.value);
        CHECK(*ab.value == x);
      }
    }
  }
}

TEST_CASE("automaton text roundtrip and recovery vertex count") {
  for (const auto& [name, p] : testsupport::full_corpus(104, 20)) {
    CAPTURE(name);
    strings::StringAlgebra A(p);
    auto P = construct::parity_mia(A);
    auto text = mia::write_mia(P.binary);
    auto back = mia::parse_mia(text);
    CHECK(mia::write_mia(back) == text);
    auto r = recover::recover_presentation(back);
    CHECK(2 * r.presentation.vertices.size() == back.initial_states().size());
  }
}

TEST_CASE("brick verdicts are stable under basepoint shifts and inversion") {
  std::mt19937_64 rng(105);
  for (const auto& [name, p] : testsupport::full_corpus(105, 6)) {
    CAPTURE(name);
    strings::StringAlgebra A(p);
    bricks::Automata ctx(A);
    const auto& m = ctx.parity.binary;
    for (const auto& x : strings::enumerate_strings(A, 5)) {
      auto w = mia::transport_forward(construct::string_to_word(A, ctx.parity.base, x), ctx.parity.delta);
      const bool want = mia::is_brick_word(m, w).brick;
      CHECK(mia::is_brick_word(m, mia::invert(m, w)).brick == want);
      const auto n = static_cast<long long>(x.size());
      for (int t = 0; t < 5; ++t) {
        const long long s = n ? -static_cast<long long>(rng() % static_cast<std::uint64_t>(n + 1)) : 0;
        CHECK(mia::is_brick_word(m, mia::shift_basepoint(m, w, s)).brick == want);
      }
    }
  }
}

TEST_CASE("sturmian windows from random directives are balanced") {
  std::mt19937_64 rng(106);
  for (int t = 0; t < 60; ++t) {
    sturmian::DirectiveSequence d;
    d.prefix.push_back(static_cast<unsigned>(rng() % 3));
    for (int k = 0; k < static_cast<int>(rng() % 3); ++k) d.prefix.push_back(1 + static_cast<unsigned>(rng() % 3));
    d.period.push_back(1 + static_cast<unsigned>(rng() % 3));
    auto w = sturmian::characteristic_prefix(d, 240);
    const auto s = words::ab_string(w.letters);
    CAPTURE(d.to_string());
    CHECK(oracle::balanced(s));
    CHECK_FALSE(sturmian::sturmian_window_check(w));
    auto prof = words::complexity_profile(w, 20);
    for (std::size_t k = 1; k <= 20; ++k) CHECK(prof[k - 1] == k + 1);
    CHECK(sturmian::bridge(w, sturmian::BridgeSide::bi_infinite).consistent);
  }
}
