#pragma once

#include <vector>

#include "invschub/permutation.hpp"

namespace invschub {

/// A self-inverse permutation of the integers with finite support.
class Involution {
 public:
  Involution() = default;  // identity
  explicit Involution(const Permutation& p) : p_(p) {
    INVSCHUB_CHECK(p.is_involution(), "not an involution");
  }
  static Involution identity() { return {}; }
  static Involution from_pairs(const std::vector<std::pair<int, int>>& pairs);

  const Permutation& perm() const { return p_; }
  int operator()(int i) const { return p_(i); }
  bool is_identity() const { return p_.is_identity(); }

  /// The 2-cycles {a, b} with a < b, ascending by smaller element.
  std::vector<std::pair<int, int>> two_cycles() const;
  /// All cycles (a, y(a)) with a <= y(a) and a in [lo, hi]; fixed points included.
  std::vector<std::pair<int, int>> cycles_in(int lo, int hi) const;

  friend bool operator==(const Involution&, const Involution&) = default;
  friend auto operator<=>(const Involution&, const Involution&) = default;

 private:
  Permutation p_;
};

/// Number of 2-cycles.
int kappa(const Involution& y);

/// Common length of the minimal-length w with y = w^{-1} . w, equal to
/// (length(y) + kappa(y)) / 2.
long long hat_length(const Involution& y);

/// s_i . y . s_i under the Demazure product: moves by one cover in weak order.
Involution demazure_conjugate(int i, const Involution& y);

/// Minimal-length permutations w with y = demazure(w^{-1}, w), sorted.
/// Built directly: atoms are read off from the orders in which the cycles of y
/// can be closed, subject to the cover and cycle-ordering conditions.
std::vector<Permutation> atoms(const Involution& y);

/// Same set computed independently by peeling descents of y one at a time.
std::vector<Permutation> atoms_by_peeling(const Involution& y);

/// Union of the reduced words of the atoms, sorted lexicographically.
std::vector<Word> involution_words(const Involution& y);

bool is_atom_of(const Permutation& w, const Involution& y);
bool is_involution_word(const Word& word, const Involution& y);
/// The unique involution this word could witness, if the word is one.
bool is_involution_word(const Word& word);
Involution involution_of_word(const Word& word);  // demazure(w^{-1}, w) for w = product

/// Bruhat order restricted to involutions.
bool inv_bruhat_leq(const Involution& y, const Involution& z);
/// Covering in the restricted order: y < z with hat_length(z) = hat_length(y) + 1.
bool inv_covers(const Involution& y, const Involution& z);

}  // namespace invschub

template <>
struct std::hash<invschub::Involution> {
  size_t operator()(const invschub::Involution& y) const noexcept {
    return std::hash<invschub::Permutation>()(y.perm());
  }
};
