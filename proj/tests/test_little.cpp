#include <algorithm>
#include <set>
#include <vector>

#include "doctest.h"
#include "helpers.hpp"
#include "invschub/little.hpp"
#include "invschub/tau.hpp"

using namespace invschub;
using namespace testutil;

namespace {

// Every y-marked word arises by inserting one letter into a word for y; pad
// controls how far beyond the base alphabet the inserted letter may stray.
std::vector<MarkedWord> inserted_words(const std::vector<Word>& base, int pad) {
  std::vector<MarkedWord> out;
  for (const Word& w : base) {
    int lo = 1, hi = 2;
    if (!w.empty()) {
      lo = *std::min_element(w.begin(), w.end());
      hi = *std::max_element(w.begin(), w.end());
    }
    for (int c = lo - pad; c <= hi + pad; ++c)
      for (int t = 1; t <= static_cast<int>(w.size()) + 1; ++t) {
        Word a = w;
        a.insert(a.begin() + (t - 1), c);
        out.push_back({a, t});
      }
  }
  return out;
}

}  // namespace

TEST_SUITE_BEGIN("little");

TEST_CASE("deleting the marked letter") {
  MarkedWord mw{{2, 1, 3, 3}, 3};
  CHECK(delete_at(mw) == Word{2, 1, 3});
  CHECK(delete_at({{2, 1, 3, 3}, 1}) == Word{1, 3, 3});
  CHECK(delete_at({{5}, 1}).empty());
  CHECK_THROWS_AS(delete_at({{2, 1}, 0}), check_error);
  CHECK_THROWS_AS(delete_at({{2, 1}, 3}), check_error);
}

TEST_CASE("classification of marked words") {
  Involution y = I("(1,4)");
  CHECK(classify({{2, 1, 3, 3}, 3}, y) == WordStatus::not_word);
  CHECK(classify({{2, 1, 2, 3}, 1}, y) == WordStatus::nearly_reduced_strict);
  CHECK(classify({{2, 1, 3, 4}, 4}, y) == WordStatus::reduced);
  // the deletion must be a word for y
  CHECK_THROWS_AS(classify({{2, 1, 3, 3}, 1}, y), check_error);
  CHECK_THROWS_AS(classify({{2, 1, 3, 3}, 3}, I("(1,2)")), check_error);
  CHECK_THROWS_AS(classify({{2, 1, 3, 3}, 9}, y), check_error);

  auto yf = F({2, 1, 6, 5, 4, 3});
  CHECK(classify({{4, 5, 4}, 3}, yf) == WordStatus::semi_reduced);
  CHECK(classify({{4, 5, 3}, 2}, yf) == WordStatus::nearly_reduced_strict);
  CHECK(classify({{2, 4, 3}, 1}, yf) == WordStatus::reduced);
  CHECK(classify({{4, 5, 5}, 3}, yf) == WordStatus::not_word);
  CHECK_THROWS_AS(classify({{4, 5, 4}, 1}, yf), check_error);
}

TEST_CASE("single steps, frozen") {
  Involution y = I("(1,4)");
  MarkedWord a{{2, 1, 3, 3}, 3};
  CHECK(step_down(a, y) == MarkedWord{{2, 1, 2, 3}, 1});
  CHECK(step_up(a, y) == MarkedWord{{2, 1, 3, 4}, 4});
  CHECK(step_up(step_down(a, y), y) == a);
  CHECK(step_down(step_up(a, y), y) == a);

  auto yf = F({2, 1, 6, 5, 4, 3});
  CHECK(step_down({{4, 5, 4}, 3}, yf) == MarkedWord{{4, 5, 3}, 2});
  CHECK(step_up({{4, 5, 3}, 2}, yf) == MarkedWord{{4, 5, 4}, 3});
}

TEST_CASE("steps are mutually inverse, exhaustively") {
  for (const Involution& y : involutions_on(1, 4))
    for (const MarkedWord& mw : inserted_words(involution_words(y), 2)) {
      CHECK(step_up(step_down(mw, y), y) == mw);
      CHECK(step_down(step_up(mw, y), y) == mw);
    }
  for (const FpfInvolution& y : all_fpf(4))
    for (const MarkedWord& mw : inserted_words(fpf_words(y), 2)) {
      CHECK(step_up(step_down(mw, y), y) == mw);
      CHECK(step_down(step_up(mw, y), y) == mw);
    }
}

TEST_CASE("the semi-reduced state is reduced as a plain word and never repeats") {
  for (const FpfInvolution& y : all_fpf(6))
    for (const MarkedWord& mw : inserted_words(fpf_words(y), 2)) {
      // conjugating theta all the way to y forces the word to be reduced
      if (theta_conjugate(Permutation::from_word(mw.word)) == y)
        CHECK(is_reduced_word(mw.word));
      if (classify(mw, y) == WordStatus::semi_reduced)
        CHECK(classify(step_down(mw, y), y) != WordStatus::semi_reduced);
    }
}

TEST_CASE("bump, frozen") {
  Involution y = I("(2,5)");
  MarkedWord start{{3, 2, 4, 5}, 4};
  CHECK(classify(start, y) == WordStatus::reduced);  // bumping still moves
  MarkedWord four = start;
  for (int t = 0; t < 4; ++t) four = step_down(four, y);
  CHECK(four == MarkedWord{{2, 1, 3, 4}, 2});
  CHECK(bump(start, y) == four);

  auto yf = F({2, 1, 6, 5, 4, 3});
  MarkedWord cur{{4, 6, 5}, 2};
  std::vector<MarkedWord> chain{{{4, 5, 5}, 3}, {{4, 5, 4}, 3}, {{4, 5, 3}, 2},
                                {{4, 4, 3}, 1}, {{3, 4, 3}, 1}, {{2, 4, 3}, 1}};
  for (const MarkedWord& next : chain) {
    cur = step_down(cur, yf);
    CHECK(cur == next);
  }
  CHECK(bump({{4, 6, 5}, 2}, yf) == MarkedWord{{2, 4, 3}, 1});
}

TEST_CASE("the full bijection map, frozen") {
  CHECK(little_map(I("15432"), {5, 3, 4, 2, 3}) == Word{4, 2, 3, 1, 2});
  Involution y7 = I("3214765");
  Word b1 = little_map(y7, {4, 5, 6, 1, 2});
  CHECK(b1 == Word{3, 5, 6, 1, 2});
  CHECK(is_involution_word(b1, I("3412765")));
  Word b2 = little_map(y7, {4, 5, 6, 2, 1});
  CHECK(b2 == Word{3, 5, 6, 2, 1});
  CHECK(is_involution_word(b2, I("4231765")));

  // at the very bottom of the fpf order the image picks up a letter zero
  CHECK(little_map(FpfInvolution(), {2}) == Word{0});
}

TEST_CASE("the map rejects words that do not cover y") {
  Involution y = I("321");
  CHECK_THROWS_AS(little_map(y, {1, 2, 1}), check_error);  // not an involution word
  CHECK_THROWS_AS(little_map(y, {2, 1}), check_error);     // a word for y itself
  CHECK_THROWS_AS(little_map(y, {2}), check_error);        // a word below y
  CHECK_THROWS_AS(little_map(FpfInvolution(), {2, 1}), check_error);  // two ranks up
}

TEST_CASE("the map permutes the words over each cover interval") {
  // collect the words of all upper covers of y, map them, and confirm the
  // image lands among the words of the lower covers grouped by cycle
  Involution y = I("15432");
  BijectionReport r = verify_bijection(y, 3, 4);
  CHECK(r.plus_covers == 1);
  CHECK(r.minus_covers == 1);
  CHECK(r.words == 16);

  BijectionReport r2 = verify_bijection(I("(1,2)"), 1, 2);
  CHECK(r2.plus_covers == 1);
  CHECK(r2.minus_covers == 1);
  CHECK(r2.words == 2);

  BijectionReport r3 = verify_bijection(FpfInvolution(), 1, 2);
  CHECK(r3.plus_covers == 1);
  CHECK(r3.minus_covers == 1);
  CHECK(r3.words == 1);

  CHECK_THROWS_AS(verify_bijection(I("321"), 1, 2), check_error);  // (1,2) not a cycle
  CHECK_THROWS_AS(verify_bijection(FpfInvolution(), 2, 3), check_error);
}

TEST_CASE("bijection across every cycle, moderate ranks") {
  for (const Involution& y : involutions_on(1, 4))
    for (auto [p, q] : y.two_cycles()) {
      BijectionReport r = verify_bijection(y, p, q);
      CHECK(r.words > 0);
    }
  for (const FpfInvolution& y : all_fpf(4))
    for (auto [p, q] : y.cycles_in(1, 6)) {
      BijectionReport r = verify_bijection(y, p, q);
      CHECK(r.words > 0);
    }
  // a couple of bigger spot checks; the sweep suites cover the full ranks
  CHECK(verify_bijection(I("45312"), 1, 4).words > 0);
  CHECK(verify_bijection(I("45312"), 2, 5).words > 0);
  auto yf = F({2, 1, 6, 5, 4, 3});
  CHECK(verify_bijection(yf, 3, 6).words == 4);
  CHECK(verify_bijection(yf, 1, 2).words > 0);
}

TEST_SUITE_END();
