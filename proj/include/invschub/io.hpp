#pragma once

#include <string>

#include "invschub/fpf.hpp"
#include "invschub/involution.hpp"
#include "invschub/permutation.hpp"

namespace invschub {

/// Accepted permutation forms:
///   one-line:   "4,1,5,3,7,2,6"
///   compact:    "4153726"            (single digits, window size <= 9)
///   cycles:     "(2,3)(4,7)"         (pair or longer cycles; negatives allowed)
/// One-line forms describe a window starting at 1.
Permutation parse_permutation(const std::string& text);
Involution parse_involution(const std::string& text);

/// One-line form over [1, max support] when the support is positive;
/// otherwise cycle form (the only unambiguous form for shifted windows).
std::string format_permutation(const Permutation& w);
/// Cycle-pair form "(2,5)(3,4)"; "()" for the identity.
std::string format_cycles(const Involution& y);

/// Fixed-point-free matchings in the same cycle or one-line forms; the even
/// canonical window is inferred from the pairs.  "()" names the base matching
/// of every odd integer with its successor.
FpfInvolution parse_fpf(const std::string& text);
/// Cycle-pair form of the window; "()" when the window is empty.
std::string format_fpf(const FpfInvolution& z);

std::string format_word(const Word& word);   // "3 2 4 5"
Word parse_word(const std::string& text);

}  // namespace invschub
