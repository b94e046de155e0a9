#include <doctest.h>

#include <algorithm>
#include <set>

#include "corpus.hpp"
#include "oracles.hpp"
#include "stralg/error.hpp"
#include "stralg/strings.hpp"

using namespace stralg;
using namespace stralg::strings;
using testsupport::load_algebra;

namespace {

oracle::Walk to_walk(const Str& x) {
  oracle::Walk w;
  for (auto l : x.syllables()) w.push_back({l.base, l.inverse});
  return w;
}

// Least rotation of w or its inverse, as a class key.
oracle::Walk class_key(oracle::Walk w) {
  oracle::Walk inv;
  for (auto it = w.rbegin(); it != w.rend(); ++it) inv.push_back({it->first, !it->second});
  oracle::Walk best = w;
  for (auto* base : {&w, &inv})
    for (std::size_t k = 0; k < base->size(); ++k) {
      std::rotate(base->begin(), base->begin() + 1, base->end());
      best = std::min(best, *base);
    }
  return best;
}

bool oracle_band(const algebra::Presentation& p, const oracle::Walk& w) {
  const auto& a0 = p.arrows[w.front().first];
  const auto& an = p.arrows[w.back().first];
  const auto start = w.front().second ? a0.target : a0.source;
  const auto end = w.back().second ? an.source : an.target;
  if (start != end) return false;
  for (std::size_t q = 1; q < w.size(); ++q)
    if (w.size() % q == 0 && std::equal(w.begin() + q, w.end(), w.begin())) return false;
  oracle::Walk pw;
  for (int k = 0; k < 6; ++k) pw.insert(pw.end(), w.begin(), w.end());
  return oracle::is_string(p, pw);
}

}  // namespace

TEST_CASE("parse and format") {
  auto A = load_algebra("lambda3.alg");
  auto x = parse_string(A, "b1 a1' a2' b2");
  CHECK(x.size() == 4);
  CHECK(format_string(A, x) == "b1 a1' a2' b2");
  CHECK(format_string(A, x.inverted()) == "b2' a2 a1 b1'");
  auto z = parse_string(A, "1(v2,+1)");
  CHECK(z.is_zero());
  CHECK(format_string(A, z) == "1(v2,+1)");
  CHECK(format_string(A, z.inverted()) == "1(v2,-1)");
  CHECK_THROWS_AS(parse_string(A, "b1 zz"), InputError);
  CHECK_THROWS_AS(parse_string(A, "1(v9,+1)"), InputError);
}

TEST_CASE("string clauses") {
  auto A = load_algebra("lambda3.alg");
  auto bad = [&](const char* s) { return check_string(A, parse_syllables(A, s)); };
  CHECK_FALSE(bad("b1 a1'"));
  REQUIRE(bad("b2 a1"));
  CHECK(bad("b2 a1")->clause == StringClause::relation);
  CHECK(bad("a1' b2'")->clause == StringClause::relation);
  CHECK(bad("a1 a1'")->clause == StringClause::backtrack);
  CHECK(bad("a1 a2")->clause == StringClause::composition);
  CHECK(bad("a1 a2")->position == 1);
  CHECK_THROWS_AS(make_string(A, parse_syllables(A, "b2 a1")), InputError);
  CHECK_THROWS_AS(make_string(A, {}), InputError);
}

TEST_CASE("string endpoints and signs") {
  auto A = load_algebra("lambda3.alg");
  auto x = parse_string(A, "b1 a1'");
  CHECK(A.presentation().vertices[x.source()] == "v2");
  CHECK(A.presentation().vertices[x.target()] == "v2");
  CHECK(x.sigma() == -1);
  CHECK(x.eps() == 1);
}

TEST_CASE("gap strings") {
  auto A = load_algebra("lambda3.alg");
  auto x = parse_string(A, "b1 a1' a2' b2");
  CHECK(format_string(A, gap_string(A, x, 0)) == "1(v2,+1)");
  CHECK(format_string(A, gap_string(A, x, 2)) == "1(v2,+1)");
  CHECK(format_string(A, gap_string(A, x, 4)) == "1(v2,+1)");
}

TEST_CASE("concatenation") {
  auto A = load_algebra("lambda3.alg");
  auto a = parse_string(A, "b1 a1'");
  auto b = parse_string(A, "a2' b2");
  auto ab = concat(A, a, b);
  REQUIRE(ab.value);
  CHECK(format_string(A, *ab.value) == "b1 a1' a2' b2");
  CHECK_FALSE(concat(A, parse_string(A, "b2"), parse_string(A, "a1")).value);
  auto z = parse_string(A, "1(v2,+1)");
  auto za = concat(A, z, a);
  REQUIRE(za.value);
  CHECK(*za.value == a);
  CHECK_FALSE(concat(A, z.inverted(), a).value);
}

TEST_CASE("enumeration matches the brute-force oracle") {
  for (const auto& [name, p] : testsupport::full_corpus(5, 10)) {
    CAPTURE(name);
    StringAlgebra A(p);
    const std::size_t L = 6;
    auto lib = enumerate_strings(A, L);
    std::set<oracle::Walk> got;
    std::size_t zeros = 0;
    for (const auto& x : lib) {
      if (x.is_zero())
        ++zeros;
      else
        got.insert(to_walk(x));
    }
    CHECK(zeros == 2 * p.vertices.size());
    auto want = oracle::all_strings(p, L);
    CHECK(got.size() == lib.size() - zeros);
    CHECK(got == std::set<oracle::Walk>(want.begin(), want.end()));
    CHECK(std::is_sorted(lib.begin(), lib.end()));
  }
}

TEST_CASE("bands match the brute-force oracle") {
  for (const auto& [name, p] : testsupport::full_corpus(5, 10)) {
    CAPTURE(name);
    StringAlgebra A(p);
    const std::size_t L = 8;
    std::set<oracle::Walk> want;
    for (const auto& w : oracle::all_strings(p, L))
      if (oracle_band(p, w)) want.insert(class_key(w));
    std::set<oracle::Walk> got;
    auto bands = enumerate_bands(A, L);
    for (const auto& b : bands) {
      CHECK(is_band(A, b).ok);
      CHECK(canonical_band(A, b) == b);
      got.insert(class_key(to_walk(b)));
    }
    CHECK(got.size() == bands.size());
    CHECK(got == want);
  }
}

TEST_CASE("lambda3 bands of length 2 and 4") {
  auto A = load_algebra("lambda3.alg");
  std::vector<std::string> names;
  for (const auto& b : enumerate_bands(A, 4)) names.push_back(format_string(A, b));
  // Two length-2 bands (one per Kronecker half) and the mixed ones of length 4.
  CHECK(std::count_if(names.begin(), names.end(), [](const std::string& s) { return s.size() <= 6; }) == 2);
  CHECK(std::find(names.begin(), names.end(), "a2' b2") != names.end());
}

TEST_CASE("band checks") {
  auto A = load_algebra("lambda3.alg");
  CHECK(is_band(A, parse_string(A, "a2' b2")).ok);
  CHECK_FALSE(is_band(A, parse_string(A, "b2 a2'")).ok);
  CHECK_FALSE(is_band(A, parse_string(A, "a2' b2 a2' b2")).ok);
  CHECK_FALSE(is_band(A, parse_string(A, "b1 a1'")).ok);
  CHECK(format_string(A, canonical_band(A, parse_string(A, "b2 a2'"))) == "a2' b2");
}

TEST_CASE("enumeration caps") {
  auto A = load_algebra("lambda3.alg");
  CHECK_THROWS_AS(enumerate_strings(A, kMaxEnumerationLength + 1), CapExceeded);
}

TEST_CASE("substrings of a finite string") {
  auto A = load_algebra("lambda3.alg");
  auto x = parse_string(A, "b1 a1' a2' b2");
  auto f = enumerate_factor_substrings(A, x);
  auto im = enumerate_image_substrings(A, x);
  auto has = [&](const std::vector<SubOccurrence>& v, const char* s) {
    auto y = parse_string(A, s);
    return std::any_of(v.begin(), v.end(), [&](const SubOccurrence& o) { return o.sub == y; });
  };
  CHECK(has(f, "1(v2,+1)"));
  CHECK(has(im, "1(v2,+1)"));
  CHECK(has(f, "b1 a1' a2' b2"));
  CHECK(has(im, "b1 a1' a2' b2"));
}
