#include <doctest.h>

#include <random>

#include "helpers.hpp"
#include "invschub/permutation.hpp"

using namespace invschub;
using testutil::all_perms;
using testutil::I;
using testutil::P;

TEST_SUITE_BEGIN("permutation");

TEST_CASE("composition convention and word products") {
  // (u v)(i) = u(v(i)); words multiply left to right
  CHECK(compose(Permutation::simple(1), Permutation::simple(2)) == P("2,3,1"));
  CHECK(compose(Permutation::simple(2), Permutation::simple(1)) == P("3,1,2"));
  CHECK(Permutation::from_word({1, 2}) == P("231"));
  CHECK(Permutation::from_word({2, 1}) == P("312"));
  CHECK(Permutation::from_word({2, 3}) == P("1342"));
  CHECK(Permutation::from_word({2, 1, 3, 2}) == P("3412"));
  CHECK(Permutation::from_word({}).is_identity());
}

TEST_CASE("application, inverse, support") {
  Permutation w = P("4,1,5,3,7,2,6");
  CHECK(w(1) == 4);
  CHECK(w(2) == 1);
  CHECK(w(7) == 6);
  CHECK(w(8) == 8);
  CHECK(w(-3) == -3);
  CHECK(inverse(w)(4) == 1);
  CHECK(compose(w, inverse(w)).is_identity());
  CHECK(w.min_support() == 1);
  CHECK(w.max_support() == 7);
  CHECK(P("1,2,3").is_identity());
}

TEST_CASE("length counts inversions") {
  CHECK(length(Permutation::identity()) == 0);
  CHECK(length(P("4,1,5,3,7,2,6")) == 8);
  CHECK(length(P("321")) == 3);
  CHECK(length(P("21")) == 1);
  CHECK(length(shift(P("321"), 5)) == 3);
  CHECK(length(shift(P("321"), -5)) == 3);
  // adding one simple reflection moves length by exactly one
  for (const Permutation& w : all_perms(5))
    for (int i = 1; i <= 4; ++i) {
      long long d = length(compose(w, Permutation::simple(i))) - length(w);
      CHECK((d == 1 || d == -1));
    }
}

TEST_CASE("descents") {
  CHECK(descents(P("4,1,5,3,7,2,6")) == std::vector<int>{1, 3, 5});
  CHECK(descents(P("4,1,5,3,7,2,6"), Side::left) == std::vector<int>{2, 3, 6});
  CHECK(descents(Permutation::identity()).empty());
  CHECK(has_descent(P("21"), 1));
  CHECK(!has_descent(P("21"), 2));
  // left descents are right descents of the inverse
  for (const Permutation& w : all_perms(4))
    CHECK(descents(w, Side::left) == descents(inverse(w), Side::right));
}

TEST_CASE("bruhat order matches the subword oracle exhaustively on S4") {
  auto s4 = all_perms(4);
  for (const Permutation& u : s4)
    for (const Permutation& v : s4)
      CHECK(bruhat_leq(u, v) == testutil::bruhat_leq_subword_oracle(u, v));
}

TEST_CASE("bruhat order matches the subword oracle on random S6 pairs") {
  auto s6 = all_perms(6);
  std::mt19937 rng(20240817);
  for (int trial = 0; trial < 300; ++trial) {
    const Permutation& u = s6[rng() % s6.size()];
    const Permutation& v = s6[rng() % s6.size()];
    CHECK(bruhat_leq(u, v) == testutil::bruhat_leq_subword_oracle(u, v));
  }
}

TEST_CASE("bruhat order ignores window shifts and padding") {
  CHECK(bruhat_leq(P("213"), P("231")));
  CHECK(!bruhat_leq(P("231"), P("213")));
  CHECK(!bruhat_leq(P("312"), P("231")));
  CHECK(bruhat_leq(shift(P("213"), 3), shift(P("231"), 3)));
  CHECK(bruhat_leq(P("21"), P("321")));
  CHECK(bruhat_leq(Permutation::identity(), P("4321")));
}

TEST_CASE("covers agree with length-one bruhat steps on S5") {
  auto s5 = all_perms(5);
  for (const Permutation& u : s5)
    for (int a = 1; a <= 5; ++a)
      for (int b = a + 1; b <= 5; ++b) {
        Transposition t(a, b);
        Permutation ut = compose(u, Permutation::transposition(a, b));
        bool expected = length(ut) == length(u) + 1 && bruhat_leq(u, ut);
        CHECK(covers(u, t) == expected);
      }
}

TEST_CASE("demazure product") {
  // s . s = s, and the product agrees with composition when lengths add
  Permutation s1 = Permutation::simple(1);
  CHECK(demazure(s1, s1) == s1);
  CHECK(demazure(s1, Permutation::simple(2)) == P("231"));
  CHECK(demazure(P("312"), P("231")) == P("321"));
  CHECK(demazure(inverse(P("231")), P("231")) == P("321"));
  CHECK(demazure(P("321"), P("321")) == P("321"));
  auto s4 = all_perms(4);
  std::mt19937 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    const Permutation& u = s4[rng() % s4.size()];
    const Permutation& v = s4[rng() % s4.size()];
    const Permutation& w = s4[rng() % s4.size()];
    CHECK(demazure(demazure(u, v), w) == demazure(u, demazure(v, w)));
    if (length(compose(u, v)) == length(u) + length(v))
      CHECK(demazure(u, v) == compose(u, v));
  }
}

TEST_CASE("flatten relabels patterns") {
  Permutation w = P("4,1,5,3,7,2,6");
  CHECK(flatten(w, {2, 3, 5}) == P("123"));          // images 1,5,7
  CHECK(flatten(w, {1, 4, 6}) == P("321"));          // images 4,3,2
  CHECK(flatten(w, {1, 2, 3, 4, 5, 6, 7}) == w);
  CHECK(flatten(Permutation::identity(), {3, 9, 12}) == Permutation::identity());
  // products flatten compatibly when the window is preserved by the right factor
  auto s5 = all_perms(5);
  std::mt19937 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    const Permutation& y = s5[rng() % s5.size()];
    std::vector<int> E = {1, 2, 3, 4, 5};
    const Permutation& z = s5[rng() % s5.size()];
    CHECK(flatten(compose(y, z), E) == compose(flatten(y, E), flatten(z, E)));
  }
}

TEST_CASE("shift conjugates all structure") {
  Permutation w = P("35142");
  CHECK(shift(w, 2)(3) == 5);   // old position 1
  CHECK(shift(w, 2)(4) == 7);   // old position 2
  CHECK(shift(w, 2)(5) == 3);
  CHECK(length(shift(w, 9)) == length(w));
  CHECK(shift(shift(w, 4), -4) == w);
  for (int a = 1; a <= 4; ++a)
    for (int b = a + 1; b <= 5; ++b)
      CHECK(covers(w, Transposition(a, b)) ==
            covers(shift(w, 3), Transposition(a + 3, b + 3)));
}

TEST_CASE("reduced words") {
  CHECK(reduced_words(Permutation::identity()) == std::vector<Word>{{}});
  CHECK(reduced_words(P("321")) == std::vector<Word>{{1, 2, 1}, {2, 1, 2}});
  CHECK(reduced_words(P("21")) == std::vector<Word>{{1}});
  CHECK(reduced_words(shift(P("21"), -3)) == std::vector<Word>{{-2}});
  CHECK(reduced_words(P("4321")).size() == 16);
  for (const Permutation& w : all_perms(4)) {
    auto words = reduced_words(w);
    CHECK(!words.empty());
    for (const Word& word : words) {
      CHECK(is_reduced_word(word));
      CHECK(Permutation::from_word(word) == w);
      CHECK(static_cast<long long>(word.size()) == length(w));
    }
    CHECK(std::is_sorted(words.begin(), words.end()));
    CHECK(Permutation::from_word(canonical_word(w)) == w);
  }
}

TEST_CASE("star symmetry interacts with length and covers") {
  for (const Permutation& w : all_perms(4)) {
    Permutation ws = testutil::star(w);
    CHECK(length(ws) == length(w));
    for (int a = 1; a <= 3; ++a)
      for (int b = a + 1; b <= 4; ++b)
        CHECK(covers(w, Transposition(a, b)) == covers(ws, Transposition(-b, -a)));
  }
}

TEST_SUITE_END();
