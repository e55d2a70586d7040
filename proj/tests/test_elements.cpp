#include <catch_amalgamated.hpp>

#include <random>
#include <thread>
#include <vector>

#include "garside/garside.hpp"
#include "support/oracles.hpp"

using namespace garside;
using braid::BraidContext;
using braid::Permutation;
using testsupport::burau_of;
using testsupport::El;
using testsupport::table_of;
using testsupport::word_permutation;

namespace {

Permutation of_word(int n, std::vector<int> word) { return Permutation::from_table(word_permutation(n, word)); }

El parse(const BraidContext& ctx, const char* text) { return braid::parse_element(ctx, text); }

std::vector<int> tau_table(const std::vector<int>& t) {
  const int n = static_cast<int>(t.size());
  std::vector<int> out(n);
  for (int j = 0; j < n; ++j) out[j] = n - 1 - t[n - 1 - j];
  return out;
}

}  // namespace

TEST_CASE("normalize: B3 example checked against the word oracle") {
  BraidContext ctx(3);
  const auto s1 = ctx.generator(1);
  const auto s2 = ctx.generator(2);
  std::vector<SignedSimple<Permutation>> parts{{s1}, {s2}, {s1}, {s1}};
  const El x = normalize(ctx, 0, parts);
  CHECK(x.inf() == 1);
  REQUIRE(x.factors().size() == 1);
  CHECK(x.factors()[0] == s1);
  CHECK(burau_of(x) == testsupport::burau_of(3, braid::BraidWord{0, {1, 2, 1, 1}}));
}

TEST_CASE("normalize: empty input is the identity") {
  BraidContext ctx(4);
  const El x = normalize(ctx, 0, std::vector<SignedSimple<Permutation>>{});
  CHECK(x.is_identity());
  CHECK(x.inf() == 0);
  CHECK(x.canonical_length() == 0);
}

TEST_CASE("normalize: the B5 example is already in left normal form") {
  BraidContext ctx(5);
  const auto a = of_word(5, {2, 1, 4, 3, 4});
  const auto b = of_word(5, {1});
  const El y = normalize(ctx, 1, std::vector<SignedSimple<Permutation>>{{a}, {b}});
  CHECK(y.inf() == 1);
  REQUIRE(y.factors().size() == 2);
  CHECK(y.factors()[0] == a);
  CHECK(y.factors()[1] == b);
  CHECK(inf_sup_len(y) == std::tuple<std::int64_t, std::int64_t, std::int64_t>{1, 3, 2});
}

TEST_CASE("invert: examples") {
  BraidContext ctx(3);
  CHECK(invert(El(ctx)).is_identity());
  const El x = parse(ctx, "D 1");
  const El xi = invert(x);
  CHECK(xi.inf() == -2);
  REQUIRE(xi.factors().size() == 1);
  CHECK(xi.factors()[0] == of_word(3, {2, 1}));
  CHECK(multiply(x, xi).is_identity());
  CHECK(burau_of(x) * burau_of(xi) == testsupport::Burau(3));
}

TEST_CASE("invert: round trip and inf/sup duality on random B5 elements") {
  BraidContext ctx(5);
  std::mt19937_64 rng(5);
  for (int k = 0; k < 1000; ++k) {
    const El x = testsupport::random_element(ctx, rng, 10);
    if (x.canonical_length() > 5) continue;
    const El xi = invert(x);
    CHECK(invert(xi) == x);
    CHECK(xi.inf() == -x.sup());
    CHECK(xi.sup() == -x.inf());
    CHECK(xi.canonical_length() == x.canonical_length());
  }
}

TEST_CASE("multiply and conjugate") {
  BraidContext b4(4);
  std::mt19937_64 rng(13);
  for (int k = 0; k < 300; ++k) {
    const El x = testsupport::random_element(b4, rng, 10);
    const El y = testsupport::random_element(b4, rng, 10);
    CHECK(multiply(x, invert(x)).is_identity());
    CHECK(multiply(invert(x), x).is_identity());
    CHECK(burau_of(multiply(x, y)) == burau_of(x) * burau_of(y));
    // conjugation by Δ is τ applied factorwise
    const El xd = conjugate(x, delta_power(b4, 1));
    REQUIRE(xd.factors().size() == x.factors().size());
    CHECK(xd.inf() == x.inf());
    for (std::size_t i = 0; i < x.factors().size(); ++i) {
      CHECK(table_of(xd.factors()[i]) == tau_table(table_of(x.factors()[i])));
    }
    CHECK(conjugate(x, y) == multiply(multiply(invert(y), x), y));
  }
  BraidContext b5(5);
  const El y = parse(b5, "D 2 1 4 3 4 1");
  const El ys = conjugate(y, parse(b5, "3 2 1"));
  CHECK(ys == parse(b5, "D 1 3 3 2 1 2"));
  CHECK(ys.inf() == 1);
  REQUIRE(ys.factors().size() == 2);
  CHECK(ys.factors()[0] == of_word(5, {1, 3}));
  CHECK(ys.factors()[1] == of_word(5, {3, 2, 1, 2}));
}

TEST_CASE("inf, sup and length") {
  BraidContext ctx(4);
  CHECK(inf_sup_len(El(ctx)) == std::tuple<std::int64_t, std::int64_t, std::int64_t>{0, 0, 0});
  for (int k = -3; k <= 3; ++k) {
    CHECK(inf_sup_len(delta_power(ctx, k)) == std::tuple<std::int64_t, std::int64_t, std::int64_t>{k, k, 0});
  }
}

TEST_CASE("initial and final factors") {
  BraidContext b4(4);
  for (int p = -2; p <= 2; ++p) {
    const El x = delta_power(b4, p);
    for (Side side : {Side::left, Side::right}) {
      CHECK(initial_factor(x, side) == b4.identity());
      CHECK(final_factor(x, side) == b4.delta());
    }
  }
  BraidContext b5(5);
  const El y = parse(b5, "D 2 1 4 3 4 1");
  CHECK(final_factor(y, Side::left) == of_word(5, {1}));
  CHECK(table_of(initial_factor(y, Side::left)) == tau_table(word_permutation(5, {2, 1, 4, 3, 4})));
  std::mt19937_64 rng(17);
  for (int k = 0; k < 300; ++k) {
    const El x = testsupport::random_element(b4, rng, 10);
    CHECK(initial_factor(invert(x), Side::left) == right_complement(b4, final_factor(x, Side::left)));
    CHECK(initial_factor(invert(x), Side::right) == left_complement(b4, final_factor(x, Side::right)));
  }
}

TEST_CASE("gcd and lcm of elements: examples") {
  BraidContext b3(3);
  const El s1 = parse(b3, "1");
  const El s2 = parse(b3, "2");
  for (Side side : {Side::left, Side::right}) {
    CHECK(gcd(s1, s1, side) == s1);
    CHECK(gcd(s1, s2, side).is_identity());
    CHECK(lcm(s1, s2, side) == delta_power(b3, 1));
    CHECK(lcm(s1, El(b3), side) == s1);
  }
}

TEST_CASE("gcd universal property over simple divisors, positive B3 pairs of length <= 2") {
  BraidContext b3(3);
  const auto simples = enumerate_simples(b3);
  std::vector<El> positives;
  for (const auto& a : simples) {
    for (const auto& b : simples) positives.push_back(multiply(from_simple(b3, a), from_simple(b3, b)));
  }
  for (const auto& a : positives) {
    if (a.canonical_length() > 2) continue;
    for (const auto& b : positives) {
      for (Side side : {Side::left, Side::right}) {
        const El g = gcd(a, b, side);
        CHECK(divides(g, a, side));
        CHECK(divides(g, b, side));
        for (const auto& c : simples) {
          const El ce = from_simple(b3, c);
          CHECK(divides(ce, g, side) == (divides(ce, a, side) && divides(ce, b, side)));
        }
        const El l = lcm(a, b, side);
        CHECK(divides(a, l, side));
        CHECK(divides(b, l, side));
      }
    }
  }
}

TEST_CASE("lcm is a common multiple for random positive B4 pairs") {
  BraidContext b4(4);
  std::mt19937_64 rng(19);
  for (int k = 0; k < 200; ++k) {
    const El a = testsupport::random_element(b4, rng, 8, true);
    const El b = testsupport::random_element(b4, rng, 8, true);
    CHECK(lcm(a, El(b4), Side::left) == a);
    for (Side side : {Side::left, Side::right}) {
      const El l = lcm(a, b, side);
      CHECK(divides(a, l, side));
      CHECK(divides(b, l, side));
      const El g = gcd(a, b, side);
      CHECK(divides(g, a, side));
      CHECK(divides(g, b, side));
    }
  }
}

TEST_CASE("positive part from the right normal form") {
  BraidContext b4(4);
  std::mt19937_64 rng(23);
  for (int k = 0; k < 1000; ++k) {
    const El x = testsupport::random_element(b4, rng, 10);
    CHECK(positive_part(x, x.sup()).is_identity());
    const auto& right = x.right_normal_form();
    El all(b4);
    for (const auto& f : right.factors) all = multiply_simple(all, f, Side::right);
    CHECK(positive_part(x, x.inf()) == all);
    const auto q = std::uniform_int_distribution<std::int64_t>(x.inf(), x.sup())(rng);
    CHECK(positive_part(x, q) == lcm(El(b4), multiply_delta(x, -q, Side::right), Side::left));
  }
  const El y = parse(b4, "1 2 3");
  CHECK_THROWS_AS(positive_part(y, y.sup() + 1), ContractViolation);
  CHECK_THROWS_AS(positive_part(y, y.inf() - 1), ContractViolation);
}

TEST_CASE("normal forms are weighted and unique under braid relations") {
  BraidContext b5(5);
  std::mt19937_64 rng(29);
  for (int k = 0; k < 300; ++k) {
    auto word = braid::random_word(rng, 5, std::uniform_int_distribution<std::size_t>(0, 12)(rng));
    const El x = braid::element_from_word(b5, word);
    CHECK(is_left_normal_form(b5, x.left_normal_form()));
    CHECK(is_right_normal_form(b5, x.right_normal_form()));
    CHECK(x.right_normal_form().delta_power == x.inf());
    CHECK(static_cast<std::int64_t>(x.right_normal_form().factors.size()) == x.canonical_length());
    CHECK(burau_of(x) == testsupport::burau_of(5, word));
    for (int r = 0; r < 10; ++r) testsupport::random_rewrite(word.letters, 5, rng);
    const El same = braid::element_from_word(b5, word);
    CHECK(same == x);
    CHECK(same.hash() == x.hash());
  }
}

TEST_CASE("cached right normal forms stay correct through simple multiplications") {
  BraidContext b5(5);
  std::mt19937_64 rng(31);
  for (int k = 0; k < 300; ++k) {
    const El x = testsupport::random_element(b5, rng, 10);
    (void)x.right_normal_form();
    const auto s = testsupport::random_simple(5, rng);
    for (Side side : {Side::left, Side::right}) {
      for (const El& y : {multiply_simple(x, s, side), multiply_inverse_simple(x, s, side), multiply_delta(x, 3, side)}) {
        REQUIRE(y.cached_right());
        CHECK(*y.cached_right() == detail::right_from_left(b5, y.left_normal_form()));
      }
    }
    const El c = conjugate_by_simple(x, s);
    CHECK(*c.cached_right() == detail::right_from_left(b5, c.left_normal_form()));
    CHECK(tau(x, 1).right_normal_form() == detail::right_from_left(b5, tau(x, 1).left_normal_form()));
  }
}

TEST_CASE("the right normal form cache is filled once under concurrent readers") {
  BraidContext b6(6);
  std::mt19937_64 rng(37);
  const El x = testsupport::random_element(b6, rng, 30);
  std::vector<const RightNormalForm<Permutation>*> seen(4);
  std::vector<std::thread> threads;
  for (int t = 0; t < 4; ++t) threads.emplace_back([&, t] { seen[t] = &x.right_normal_form(); });
  for (auto& th : threads) th.join();
  for (int t = 1; t < 4; ++t) CHECK(seen[t] == seen[0]);
  CHECK(*seen[0] == detail::right_from_left(b6, x.left_normal_form()));
}

TEST_CASE("invalid normal forms are rejected") {
  BraidContext b3(3);
  LeftNormalForm<Permutation> bad{0, {b3.generator(1), b3.generator(2)}};
  CHECK_THROWS_AS(El::from_left_normal_form(b3, bad), ContractViolation);
  LeftNormalForm<Permutation> with_delta{0, {b3.delta()}};
  CHECK_THROWS_AS(El::from_left_normal_form(b3, with_delta), ContractViolation);
  LeftNormalForm<Permutation> good{2, {b3.generator(1), b3.generator(1)}};
  CHECK(El::from_left_normal_form(b3, good).sup() == 4);
}
