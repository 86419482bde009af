#include "invschub/little.hpp"

#include <algorithm>
#include <set>
#include <utility>

#include "invschub/tau.hpp"

namespace invschub {

Word delete_at(const MarkedWord& mw) {
  INVSCHUB_CHECK(mw.mark >= 1 && mw.mark <= static_cast<int>(mw.word.size()),
                 "the mark must point at a letter");
  Word out = mw.word;
  out.erase(out.begin() + (mw.mark - 1));
  return out;
}

namespace {

// The two flavors differ only in what "a word for y" and "reduced" mean, and
// in the fpf case there is the extra semi-reduced state where decrementing
// kept the full product conjugating theta to y.
struct InvMode {
  using Elem = Involution;
  static bool word_of(const Word& a, const Elem& y) { return is_involution_word(a, y); }
  static bool reduced_any(const Word& a) { return is_involution_word(a); }
  static bool semi(const Word&, const Elem&) { return false; }
};

struct FpfMode {
  using Elem = FpfInvolution;
  static bool word_of(const Word& a, const Elem& y) { return is_fpf_word(a, y); }
  static bool reduced_any(const Word& a) { return is_fpf_word(a); }
  static bool semi(const Word& a, const Elem& y) {
    return is_reduced_word(a) && theta_conjugate(Permutation::from_word(a)) == y;
  }
};

template <class M>
WordStatus status_impl(const Word& a, const typename M::Elem& y) {
  if (M::reduced_any(a)) return WordStatus::reduced;
  if (!is_reduced_word(a)) return WordStatus::not_word;
  if (M::semi(a, y)) return WordStatus::semi_reduced;
  return WordStatus::nearly_reduced_strict;
}

template <class M>
void require_marked(const MarkedWord& mw, const typename M::Elem& y) {
  INVSCHUB_CHECK(M::word_of(delete_at(mw), y), "deleting the mark must leave a word for y");
}

// Whether the mark may stay where it is after a decrement or increment.
template <class M>
bool keeps_mark(const Word& b, const typename M::Elem& y) {
  return M::reduced_any(b) || M::semi(b, y);
}

template <class M>
int other_marked_index(const Word& w, int i, const typename M::Elem& y) {
  int found = 0, j = 0;
  for (int t = 1; t <= static_cast<int>(w.size()); ++t) {
    if (t == i) continue;
    if (M::word_of(delete_at({w, t}), y)) {
      ++found;
      j = t;
    }
  }
  INVSCHUB_CHECK(found == 1, "expected exactly one other position whose deletion is a word for y");
  return j;
}

template <class M>
MarkedWord step_down_impl(const MarkedWord& mw, const typename M::Elem& y) {
  require_marked<M>(mw, y);
  MarkedWord b = mw;
  b.word[b.mark - 1] -= 1;
  if (!keeps_mark<M>(b.word, y)) b.mark = other_marked_index<M>(b.word, b.mark, y);
  return b;
}

template <class M>
MarkedWord step_up_impl(const MarkedWord& mw, const typename M::Elem& y) {
  require_marked<M>(mw, y);
  MarkedWord a = mw;
  if (!keeps_mark<M>(a.word, y)) a.mark = other_marked_index<M>(a.word, a.mark, y);
  a.word[a.mark - 1] += 1;
  return a;
}

// The reflection t with w == u t, for u the product of a word one letter
// short of a word for w: always a transposition, returned as (a, b), a < b.
std::pair<int, int> climbing_reflection(const Permutation& u, const Permutation& w) {
  Permutation t = compose(inverse(u), w);
  auto mv = t.moved();
  INVSCHUB_CHECK(mv.size() == 2, "a one-letter insertion must climb by a reflection");
  return {mv.front().first, mv.back().first};
}

// In a nearly reduced state the word is a reduced word for some w that
// covers both the atom under the current mark and the atom under the unique
// other mark.  When the reflection off one atom touches {p, q} from one
// side, the reflection off the other atom must touch {p, q} from the other.
template <class M>
void check_sides(const MarkedWord& cur, const typename M::Elem& y, int p, int q) {
  if (status_impl<M>(cur.word, y) != WordStatus::nearly_reduced_strict) return;
  int j = other_marked_index<M>(cur.word, cur.mark, y);
  Permutation u = Permutation::from_word(delete_at(cur));
  Permutation v = Permutation::from_word(delete_at({cur.word, j}));
  Permutation w = Permutation::from_word(cur.word);
  auto [a1, b1] = climbing_reflection(u, w);
  auto [a2, b2] = climbing_reflection(v, w);
  if (a1 == p || a1 == q)
    INVSCHUB_CHECK(b2 == p || b2 == q, "re-marking must move the climbing reflection across");
  if (b1 == p || b1 == q)
    INVSCHUB_CHECK(a2 == p || a2 == q, "re-marking must move the climbing reflection across");
}

template <class M>
MarkedWord bump_impl(const MarkedWord& mw, const typename M::Elem& y, const int* p, const int* q) {
  require_marked<M>(mw, y);
  auto [lo, hi] = std::minmax_element(mw.word.begin(), mw.word.end());
  long long cap = 4LL * static_cast<long long>(mw.word.size()) * (*hi - *lo + 2);
  MarkedWord cur = mw;
  for (long long n = 0; n < cap; ++n) {
    cur = step_down_impl<M>(cur, y);
    if (M::reduced_any(cur.word)) return cur;
    if (p != nullptr) check_sides<M>(cur, y, *p, *q);
  }
  check_failed("bump step budget",
               "bumping did not reach a reduced word within four steps per letter per unit of "
               "letter range; such a word would be worth a close look");
}

template <class M>
Word little_map_impl(const typename M::Elem& y, const Word& a, const int* p, const int* q) {
  INVSCHUB_CHECK(M::reduced_any(a), "the input must be a word for some element");
  int found = 0, i = 0;
  for (int t = 1; t <= static_cast<int>(a.size()); ++t)
    if (M::word_of(delete_at({a, t}), y)) {
      ++found;
      i = t;
    }
  INVSCHUB_CHECK(found == 1, "the input must be a word for an upper cover of y");
  return bump_impl<M>({a, i}, y, p, q).word;
}

template <class M, class Covers, class WordsOf>
BijectionReport verify_impl(const typename M::Elem& y, int p, int q, const Covers& plus,
                            const Covers& minus, WordsOf words_of) {
  std::set<Word> source, target, image;
  for (const auto& z : plus)
    for (const Word& a : words_of(z)) source.insert(a);
  for (const auto& z : minus)
    for (const Word& a : words_of(z)) target.insert(a);
  for (const Word& a : source) {
    Word b = little_map_impl<M>(y, a, &p, &q);
    INVSCHUB_CHECK(target.count(b) == 1, "every bumped word must be a word for a lower cover");
    INVSCHUB_CHECK(image.insert(b).second, "two words bumped to the same image");
  }
  INVSCHUB_CHECK(image == target, "bumping must reach every word of every lower cover");
  return {plus.size(), minus.size(), source.size()};
}

}  // namespace

WordStatus classify(const MarkedWord& mw, const Involution& y) {
  require_marked<InvMode>(mw, y);
  return status_impl<InvMode>(mw.word, y);
}

WordStatus classify(const MarkedWord& mw, const FpfInvolution& y) {
  require_marked<FpfMode>(mw, y);
  return status_impl<FpfMode>(mw.word, y);
}

MarkedWord step_down(const MarkedWord& mw, const Involution& y) {
  return step_down_impl<InvMode>(mw, y);
}

MarkedWord step_down(const MarkedWord& mw, const FpfInvolution& y) {
  return step_down_impl<FpfMode>(mw, y);
}

MarkedWord step_up(const MarkedWord& mw, const Involution& y) {
  return step_up_impl<InvMode>(mw, y);
}

MarkedWord step_up(const MarkedWord& mw, const FpfInvolution& y) {
  return step_up_impl<FpfMode>(mw, y);
}

MarkedWord bump(const MarkedWord& mw, const Involution& y) {
  return bump_impl<InvMode>(mw, y, nullptr, nullptr);
}

MarkedWord bump(const MarkedWord& mw, const FpfInvolution& y) {
  return bump_impl<FpfMode>(mw, y, nullptr, nullptr);
}

Word little_map(const Involution& y, const Word& a) {
  return little_map_impl<InvMode>(y, a, nullptr, nullptr);
}

Word little_map(const FpfInvolution& y, const Word& a) {
  return little_map_impl<FpfMode>(y, a, nullptr, nullptr);
}

BijectionReport verify_bijection(const Involution& y, int p, int q) {
  INVSCHUB_CHECK(p < q && y.perm()(p) == q, "labels must name a cycle (p, q) of y");
  return verify_impl<InvMode>(y, p, q, phi_plus(y, q), phi_minus(y, p),
                              [](const Involution& z) { return involution_words(z); });
}

BijectionReport verify_bijection(const FpfInvolution& y, int p, int q) {
  INVSCHUB_CHECK(p < q && y(p) == q, "labels must name a cycle (p, q) of y");
  return verify_impl<FpfMode>(y, p, q, psi(y, q, PsiSign::plus), psi(y, p, PsiSign::minus),
                              [](const FpfInvolution& z) { return fpf_words(z); });
}

}  // namespace invschub
