#pragma once

// Bumping operations on marked words.  Decrementing a marked letter and
// letting the mark slide to wherever the word stays deletable produces, after
// finitely many steps, a word for a lower cover; the resulting map is the
// bijection behind the cover-counting identities.  Everything comes in two
// flavors, one acting on words for involutions and one on words for
// fixed-point-free involutions, selected by the type of `y`.

#include <cstddef>
#include <vector>

#include "invschub/fpf.hpp"
#include "invschub/involution.hpp"
#include "invschub/permutation.hpp"

namespace invschub {

// A word together with a 1-based marked position.
struct MarkedWord {
  Word word;
  int mark = 1;
  bool operator==(const MarkedWord&) const = default;
};

// The word with the marked letter removed.
Word delete_at(const MarkedWord& mw);

enum class WordStatus {
  reduced,                // a word for some (fpf) involution
  semi_reduced,           // fpf only: the full product still conjugates theta to y
  nearly_reduced_strict,  // a reduced word, but a word for no (fpf) involution
  not_word,               // not even a reduced word
};

// Status of the full word.  Requires (and checks) that the deletion is a
// word for y; everything below shares that precondition.
WordStatus classify(const MarkedWord& mw, const Involution& y);
WordStatus classify(const MarkedWord& mw, const FpfInvolution& y);

// One bumping step down: decrement the marked letter, then re-mark.  The
// mark stays put when the new word is reduced (or, in the fpf case, when it
// is reduced or semi-reduced); otherwise it moves to the unique other
// position whose deletion is a word for y.  That position is found by full
// search, and the search finding zero or several candidates halts with a
// diagnostic.
MarkedWord step_down(const MarkedWord& mw, const Involution& y);
MarkedWord step_down(const MarkedWord& mw, const FpfInvolution& y);

// Inverse of step_down: re-mark by the same rule, then increment there.
MarkedWord step_up(const MarkedWord& mw, const Involution& y);
MarkedWord step_up(const MarkedWord& mw, const FpfInvolution& y);

// Iterate step_down until the word is reduced, taking at least one step.
// The step budget is 4 * length * letter-range; exceeding it halts with a
// diagnostic, since every known example re-marks each position at most once.
MarkedWord bump(const MarkedWord& mw, const Involution& y);
MarkedWord bump(const MarkedWord& mw, const FpfInvolution& y);

// The bijection on words of upper covers of y: locate the unique position
// whose deletion is a word for y, then bump.  Rejects words that are not
// words for an upper cover of y.
Word little_map(const Involution& y, const Word& a);
Word little_map(const FpfInvolution& y, const Word& a);

struct BijectionReport {
  std::size_t plus_covers = 0;
  std::size_t minus_covers = 0;
  std::size_t words = 0;  // count of words on each side
};

// Constructive check, for a cycle (p, q) of y, that bumping maps the words
// of the upper covers found at q bijectively onto the words of the lower
// covers found at p.  Along each bump it also checks that every reflection
// climbing off an intermediate atom keeps touching {p, q}, switching sides
// when the mark jumps.  Any mismatch halts with a diagnostic.
BijectionReport verify_bijection(const Involution& y, int p, int q);
BijectionReport verify_bijection(const FpfInvolution& y, int p, int q);

}  // namespace invschub
