#include <doctest.h>

#include "corpus.hpp"
#include "stralg/construct.hpp"
#include "stralg/error.hpp"

using namespace stralg;
using namespace stralg::mia;
using testsupport::load_algebra;
using words::binary;

namespace {

struct Fixture {
  strings::StringAlgebra A = load_algebra("lambda3.alg");
  construct::ParityMia P = construct::parity_mia(A);
  PointedWord word(const char* s) {
    return construct::string_to_word(A, P.base, strings::parse_string(A, s));
  }
};

}  // namespace

TEST_CASE("text format roundtrip") {
  Fixture f;
  for (const Mia* m : {&f.P.base.mia, &f.P.binary}) {
    const auto text = write_mia(*m);
    const Mia back = parse_mia(text);
    CHECK(write_mia(back) == text);
    CHECK(back.num_states() == m->num_states());
    CHECK(validate_mia(back).empty());
  }
  CHECK(f.P.binary.is_binary());
  CHECK(f.P.binary.find_letter("1") == Letter{0, true});
  CHECK(f.P.binary.find_letter("0'") == Letter{0, true});
  CHECK(f.P.binary.letter_name({0, true}) == "1");
}

TEST_CASE("parse errors and axiom violations") {
  CHECK_THROWS_AS(parse_mia("state a initial inv=b e=a\n"), InputError);
  CHECK_THROWS_AS(parse_mia("frob\n"), InputError);
  // e of a non-initial state must be initial.
  auto m = parse_mia(
      "alphabet 0\nstate p initial inv=q e=p\nstate q initial inv=p e=q\nstate r e=r\ntrans p 0 r\n");
  auto issues = validate_mia(m);
  REQUIRE_FALSE(issues.empty());
  CHECK(issues.front().axiom == 2);
  // t(v, b) defined but not t(e(v), b).
  auto m3 = parse_mia(
      "alphabet 0\nstate p initial inv=q e=p\nstate q initial inv=p e=q\nstate r e=q\ntrans p 0 r\ntrans r 0 p\n");
  issues = validate_mia(m3);
  REQUIRE_FALSE(issues.empty());
  CHECK(issues.front().axiom == 3);
}

TEST_CASE("runs on the binary automaton") {
  Fixture f;
  const auto& m = f.P.binary;
  const StateId v2p = *m.find_state("1(v2,+1)");
  // b1 a1' a2' b2 is 0 1 1 0 from 1(v2,+1).
  CHECK(run(m, v2p, binary("0110")) != kNone);
  CHECK(m.e(run(m, v2p, binary("0110"))) == v2p);
  // Two direct steps b1 then a direct arrow out of v1 do not exist.
  CHECK(run(m, v2p, binary("00")) == kNone);
}

TEST_CASE("word checks, inversion and equivalence") {
  Fixture f;
  const auto& m = f.P.binary;
  auto w = transport_forward(f.word("b1 a1' a2' b2"), f.P.delta);
  CHECK_FALSE(check_word(m, w));
  CHECK(binary_string(finite_word(w)) == "0110");
  auto wi = invert(m, w);
  CHECK_FALSE(check_word(m, wi));
  CHECK(binary_string(finite_word(wi)) == "1001");
  for (long long s : {-4LL, -2LL, -1LL}) {
    auto shifted = shift_basepoint(m, w, s);
    CHECK_FALSE(check_word(m, shifted));
    CHECK(equivalent(m, w, shifted));
  }
  auto other = transport_forward(f.word("b1 a1'"), f.P.delta);
  CHECK_FALSE(equivalent(m, w, other));
  PointedWord bad{words::Finite{}, *m.find_state("1(v2,+1)"), words::Finite{binary("00")}};
  CHECK(check_word(m, bad));
  CHECK_THROWS_AS(require_word(m, bad), InputError);
}

TEST_CASE("transport roundtrip") {
  Fixture f;
  for (const char* s : {"b1 a1'", "b1 a1' a2' b2", "a2' b2", "1(v1,-1)"}) {
    auto w = f.word(s);
    auto b = transport_forward(w, f.P.delta);
    auto back = transport_backward(f.P.base.mia, b, f.P.delta);
    CHECK(finite_word(back) == finite_word(w));
    CHECK(back.base == w.base);
  }
  CHECK(check_local_bijection(f.P.base.mia, f.P.delta));
}

TEST_CASE("relabelled automaton equals the binary one") {
  Fixture f;
  CHECK(write_mia(relabel(f.P.base.mia, f.P.delta)) == write_mia(f.P.binary));
}

TEST_CASE("subword occurrences") {
  Fixture f;
  const auto& m = f.P.binary;
  auto host = transport_forward(f.word("b1 a1' a2' b2"), f.P.delta);
  PointedWord needle{words::Finite{}, *m.find_state("1(v2,+1)"), words::Finite{}};
  auto occ = subword_occurrences(m, needle, host);
  // Gaps 0, 2 and 4 carry 1(v2,+1).
  CHECK(occ.size() == 3);
  std::size_t factors = 0, images = 0;
  for (const auto& o : occ) {
    auto k = classify_occurrence(o);
    factors += k.factor;
    images += k.image;
  }
  CHECK(factors == 1);
  CHECK(images == 1);
}

TEST_CASE("brick words") {
  Fixture f;
  const auto& m = f.P.binary;
  auto a = transport_forward(f.word("b1 a1'"), f.P.delta);
  CHECK(is_brick_word(m, a).brick);
  auto ab = transport_forward(f.word("b1 a1' a2' b2"), f.P.delta);
  auto r = is_brick_word(m, ab);
  CHECK_FALSE(r.brick);
  REQUIRE(r.witness);
  CHECK(r.witness->factor_begin == r.witness->factor_end);
  CHECK(r.witness->text == "[1(v2,+1)]");
  // Periodic words are never brick words.
  auto band = transport_forward(construct::band_to_word(f.A, f.P.base, strings::parse_string(f.A, "a2' b2")),
                                f.P.delta);
  CHECK_FALSE(is_brick_word(m, band).brick);
  CHECK(is_weak_brick_word(m, band).brick);
}

TEST_CASE("witness scanner on hand-made segments") {
  // Letters 0 0 with labels A B A; A at both ends: a factor at the left end
  // (direct after) and an image at the right end (direct before).
  LabelledSegment seg;
  seg.letters = binary("00");
  seg.labels = {0, 1, 0};
  std::vector<std::uint32_t> inv = {0, 1};
  auto hit = find_witness(seg, inv, 2);
  REQUIRE(hit);
  CHECK(hit->length == 0);
  // Distinct labels everywhere: the only candidate is the whole word.
  seg.labels = {0, 1, 2};
  inv = {0, 1, 2};
  CHECK_FALSE(find_witness(seg, inv, 2));
}

TEST_CASE("dot export") {
  Fixture f;
  auto dot = to_dot(f.P.binary);
  CHECK(dot.find("digraph") != std::string::npos);
  CHECK(dot.find("doublecircle") != std::string::npos);
}
