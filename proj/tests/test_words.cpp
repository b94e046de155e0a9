#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "stralg/error.hpp"
#include "stralg/words.hpp"

using namespace stralg;
using namespace stralg::words;

TEST_CASE("binary and ab text") {
  CHECK(binary_string(binary("0110")) == "0110");
  CHECK(binary_string(binary("0 1 1 0")) == "0110");
  CHECK(binary("1")[0] == Letter{0, true});
  CHECK(ab_string(ab("abba")) == "abba");
  CHECK(ab("b")[0] == Letter{1, false});
}

TEST_CASE("inversion and primitive roots") {
  CHECK(binary_string(invert(binary("001"))) == "011");
  CHECK(binary_string(primitive_root(binary("010101"))) == "01");
  CHECK(is_primitive(binary("0011")));
  CHECK_FALSE(is_primitive(binary("0000")));
  CHECK(primitive_root(Seq{}).empty());
}

TEST_CASE("normalize absorbs preperiods") {
  // 1 (01)^ω = (10)^ω
  WordRep w = RightInf{binary("1"), binary("01")};
  auto n = normalize(w);
  REQUIRE(std::holds_alternative<RightInf>(n));
  CHECK(std::get<RightInf>(n).prefix.empty());
  CHECK(binary_string(std::get<RightInf>(n).period) == "10");
  CHECK(same_word(RightInf{{}, binary("0101")}, RightInf{binary("01"), binary("01")}));
  CHECK_FALSE(same_word(RightInf{{}, binary("01")}, RightInf{{}, binary("10")}));
}

TEST_CASE("periodicity classes") {
  CHECK(classify_periodicity(Finite{binary("01")}) == Periodicity::finite);
  CHECK(classify_periodicity(RightInf{{}, binary("01")}) == Periodicity::periodic);
  CHECK(classify_periodicity(RightInf{binary("1"), binary("0")}) == Periodicity::almost_periodic_right);
  CHECK(classify_periodicity(LeftInf{binary("0"), binary("1")}) == Periodicity::almost_periodic_left);
  CHECK(classify_periodicity(BiInf{binary("01"), {}, binary("01")}) == Periodicity::periodic);
  CHECK(classify_periodicity(BiInf{binary("0"), {}, binary("1")}) == Periodicity::almost_periodic_two_sided);
  Window w{binary("0110"), true, "test"};
  CHECK(classify_periodicity(w) == Periodicity::aperiodic_certified);
  w.certified_aperiodic = false;
  CHECK(classify_periodicity(w) == Periodicity::unknown_window);
  CHECK(to_string(Periodicity::periodic) == "periodic");
}

TEST_CASE("unfolding") {
  WordRep r = RightInf{binary("1"), binary("00")};
  CHECK(binary_string(unfold_right(r, 5)) == "10000");
  WordRep l = LeftInf{binary("01"), binary("1")};
  CHECK(binary_string(unfold_left(l, 5)) == "01011");
  CHECK(binary_string(unfold_right(Finite{binary("011")}, 10)) == "011");
}

TEST_CASE("subword offsets") {
  auto h = find_subword(binary("11"), Finite{binary("01110")});
  CHECK(h.offsets == std::vector<long long>{1, 2});
  // (001)^ω: "10" at 2 and 5 inside [0, 6).
  auto r = find_subword(binary("10"), RightInf{{}, binary("001")});
  CHECK(r.offsets == std::vector<long long>{2, 5});
  CHECK(r.right_period == 3);
  CHECK(find_subword(binary("11"), RightInf{{}, binary("0")}).empty());
}

TEST_CASE("materialize keeps the canonical range") {
  auto m = materialize(RightInf{binary("1"), binary("0")}, 3);
  CHECK(m.left_end);
  CHECK_FALSE(m.right_end);
  CHECK(m.origin == 0);
  CHECK(m.hi == 3);
  CHECK(m.letters.size() >= 6);
  auto b = materialize(BiInf{binary("0"), binary("1"), binary("0")}, 2);
  CHECK_FALSE(b.left_end);
  CHECK_FALSE(b.right_end);
  CHECK(b.letters[static_cast<std::size_t>(b.origin)] == Letter{0, true});
}

TEST_CASE("complexity of random windows matches the oracle") {
  std::mt19937_64 rng(11);
  for (int t = 0; t < 20; ++t) {
    std::string s;
    for (int i = 0; i < 60; ++i) s += (rng() % 3 == 0) ? 'b' : 'a';
    Window w{ab(s), false, "random"};
    auto got = complexity_profile(w, 12);
    auto want = oracle::factor_counts(s, 12);
    for (std::size_t k = 1; k <= 12; ++k) CHECK(got[k - 1] == want[k]);
  }
  CHECK_THROWS_AS(complexity_profile(Window{ab("ab"), false, ""}, 5), InputError);
}
