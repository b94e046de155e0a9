#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "stralg/error.hpp"
#include "stralg/sturmian.hpp"

using namespace stralg;
using namespace stralg::sturmian;

TEST_CASE("directive parsing") {
  auto d = parse_directive("1,(1)");
  CHECK(d.prefix == std::vector<unsigned>{1});
  CHECK(d.period == std::vector<unsigned>{1});
  CHECK(d.infinite());
  CHECK(d.term(5) == std::optional<unsigned>(1));
  auto e = parse_directive("0,2,(1,3,1,3)");
  CHECK(e.period == std::vector<unsigned>{1, 3});
  CHECK(e.to_string() == "0,2,(1,3)");
  auto f = parse_directive("2,1");
  CHECK_FALSE(f.infinite());
  CHECK_FALSE(f.term(3));
  CHECK_THROWS_AS(parse_directive(""), InputError);
  CHECK_THROWS_AS(parse_directive("1,0"), InputError);
  CHECK_THROWS_AS(parse_directive("(0)"), InputError);
  CHECK_THROWS_AS(parse_directive("1,x"), InputError);
  CHECK_THROWS_AS(parse_directive("(1),2"), InputError);
}

TEST_CASE("Fibonacci prefix matches the morphism") {
  auto w = characteristic_prefix(parse_directive("1,(1)"), 2000);
  CHECK(words::ab_string(w.letters) == oracle::fibonacci(2000));
  CHECK(w.certified_aperiodic);
  CHECK_FALSE(w.open_left);
  CHECK(w.open_right);
  auto p = words::complexity_profile(w, 50);
  for (std::size_t k = 1; k <= 50; ++k) CHECK(p[k - 1] == k + 1);
}

TEST_CASE("finite directives extend periodically") {
  auto w = characteristic_prefix(parse_directive("2,1"), 12);
  CHECK(words::ab_string(w.letters) == "aabaaabaaaba");
  CHECK_FALSE(w.certified_aperiodic);
  CHECK_THROWS_AS(characteristic_prefix(parse_directive("1"), kMaxPrefix + 1), CapExceeded);
}

TEST_CASE("window criterion agrees with balance") {
  std::mt19937_64 rng(3);
  for (int t = 0; t < 300; ++t) {
    std::string s;
    const int n = 4 + static_cast<int>(rng() % 20);
    for (int i = 0; i < n; ++i) s += rng() % 2 ? 'a' : 'b';
    words::Window w{words::ab(s), false, "random"};
    auto v = sturmian_window_check(w);
    CAPTURE(s);
    CHECK(v.has_value() == !oracle::balanced(s));
    if (v) {
      const std::string mid = words::ab_string(v->middle);
      CHECK(s.substr(v->a_pos, mid.size() + 2) == "a" + mid + "a");
      CHECK(s.substr(v->b_pos, mid.size() + 2) == "b" + mid + "b");
    }
  }
  for (const char* d : {"1,(1)", "0,2,(1,3)", "3,(2)", "1,1,(4,1)"}) {
    auto w = characteristic_prefix(parse_directive(d), 300);
    CHECK_FALSE(sturmian_window_check(w));
    CHECK(oracle::balanced(words::ab_string(w.letters)));
  }
}

TEST_CASE("bridge on Fibonacci") {
  auto w = characteristic_prefix(parse_directive("1,(1)"), 500);
  auto r = bridge(w, BridgeSide::bi_infinite);
  CHECK(r.consistent);
  CHECK_FALSE(r.report.witness);
  CHECK(r.report.brick);
  CHECK(r.string.size() == 1000);

  words::Window tail = w;
  tail.letters.erase(tail.letters.begin());
  auto rt = bridge(tail, BridgeSide::right_infinite);
  CHECK(rt.consistent);
  CHECK(rt.sturmian_violation);
  CHECK(rt.report.witness);
  CHECK_FALSE(rt.report.brick);
}

TEST_CASE("bridge consistency on random windows") {
  std::mt19937_64 rng(21);
  for (int t = 0; t < 200; ++t) {
    std::string s;
    const int n = 3 + static_cast<int>(rng() % 25);
    for (int i = 0; i < n; ++i) s += rng() % 3 ? 'a' : 'b';
    words::Window w{words::ab(s), true, "random"};
    for (auto side : {BridgeSide::bi_infinite, BridgeSide::right_infinite}) {
      auto r = bridge(w, side);
      CAPTURE(s);
      CHECK(r.consistent);
      if (side == BridgeSide::bi_infinite && r.middle) {
        const std::string mid = words::ab_string(*r.middle);
        CHECK(s.find("a" + mid + "a") != std::string::npos);
        CHECK(s.find("b" + mid + "b") != std::string::npos);
      }
    }
  }
}

TEST_CASE("double Kronecker text") {
  auto p = algebra::parse_presentation(double_kronecker_text());
  CHECK(p.vertices.size() == 3);
  CHECK(p.arrows.size() == 4);
  CHECK(algebra::validate_string_algebra(p).is_gentle);
}
