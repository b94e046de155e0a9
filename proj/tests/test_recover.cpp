#include <doctest.h>

#include <algorithm>

#include "corpus.hpp"
#include "stralg/construct.hpp"
#include "stralg/error.hpp"
#include "stralg/recover.hpp"

using namespace stralg;
using namespace stralg::recover;
using testsupport::load_presentation;

namespace {

RecoveredPresentation from_algebra(const algebra::Presentation& p) {
  strings::StringAlgebra A(p);
  return recover_presentation(construct::parity_mia(A).binary);
}

std::vector<std::size_t> lengths(const algebra::Presentation& p) {
  std::vector<std::size_t> out;
  for (const auto& r : p.relations) out.push_back(r.size());
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

TEST_CASE("lambda3 recovery") {
  auto r = from_algebra(load_presentation("lambda3.alg"));
  CHECK(r.presentation.vertices.size() == 3);
  CHECK(r.presentation.arrows.size() == 4);
  CHECK(lengths(r.presentation) == std::vector<std::size_t>{2, 2});
  auto iso = presentations_isomorphic(load_presentation("lambda3.alg"), r.presentation);
  REQUIRE(iso);
  CHECK(iso->vertex_map.size() == 3);
}

TEST_CASE("gamma recovery") {
  auto r = from_algebra(load_presentation("gamma.alg"));
  CHECK(r.presentation.vertices.size() == 6);
  CHECK(r.presentation.arrows.size() == 7);
  CHECK(lengths(r.presentation) == std::vector<std::size_t>{2, 2, 3});
  CHECK(presentations_isomorphic(load_presentation("gamma.alg"), r.presentation));
}

TEST_CASE("isomorphism search") {
  auto l3 = load_presentation("lambda3.alg");
  auto renamed = l3;
  for (auto& a : renamed.arrows) a.id = "z" + a.id;
  std::reverse(renamed.vertices.begin(), renamed.vertices.end());
  CHECK(presentations_isomorphic(l3, renamed));
  CHECK_FALSE(presentations_isomorphic(l3, load_presentation("gamma.alg")));
  // Same quiver, different relations.
  auto other = l3;
  other.relations = {{*l3.find_arrow("b2"), *l3.find_arrow("b1")}, {*l3.find_arrow("a2"), *l3.find_arrow("a1")}};
  algebra::normalize_relations(other);
  CHECK(presentations_isomorphic(l3, other));  // swap a1 and b1
  other.relations = {{*l3.find_arrow("b2"), *l3.find_arrow("a1")}};
  CHECK_FALSE(presentations_isomorphic(l3, other));
  algebra::Presentation big;
  for (int i = 0; i < 13; ++i) big.vertices.push_back("v" + std::to_string(i));
  CHECK_THROWS_AS(presentations_isomorphic(big, big), CapExceeded);
}

TEST_CASE("same ideal") {
  using algebra::Path;
  CHECK(same_ideal({{0, 1}}, {{0, 1}}));
  CHECK_FALSE(same_ideal({{0, 1}}, {{0, 1, 2}}));
  CHECK(same_ideal({{0, 1}, {0, 1, 2}}, {{0, 1}}));
}

TEST_CASE("roundtrip on the random corpus") {
  for (const auto& [name, p] : testsupport::full_corpus(23, 30)) {
    CAPTURE(name);
    auto r = from_algebra(p);
    CHECK(r.presentation.vertices.size() == p.vertices.size());
    auto iso = presentations_isomorphic(p, r.presentation);
    REQUIRE(iso);
    std::vector<algebra::Path> mapped;
    for (const auto& rel : p.relations) {
      algebra::Path q;
      for (auto a : rel) q.push_back(iso->arrow_map[a]);
      mapped.push_back(q);
    }
    CHECK(same_ideal(mapped, r.presentation.relations));
    std::vector<std::size_t> out(r.presentation.vertices.size(), 0);
    for (const auto& a : r.presentation.arrows) ++out[a.source];
    CHECK(*std::max_element(out.begin(), out.end()) <= 2);
  }
}

TEST_CASE("recovery rejects non-binary automata") {
  strings::StringAlgebra A(load_presentation("lambda3.alg"));
  CHECK_THROWS_AS(recover_presentation(construct::build_mia(A).mia), InputError);
}
