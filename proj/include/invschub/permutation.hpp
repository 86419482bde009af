#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace invschub {

// Always-on invariant check; failures indicate a bug in this library or a
// violated precondition, never ordinary bad user input.
struct check_error : std::logic_error {
  using std::logic_error::logic_error;
};
[[noreturn]] void check_failed(const char* expr, const std::string& msg);
#define INVSCHUB_CHECK(expr, msg)                        \
  do {                                                   \
    if (!(expr)) ::invschub::check_failed(#expr, (msg)); \
  } while (0)

/// A word in the simple transpositions: letter a stands for s_a = (a, a+1).
/// Letters may be any integer (windows can sit below 1).
using Word = std::vector<int>;

struct Transposition {
  int a;
  int b;  // a < b enforced
  Transposition(int a_, int b_) : a(a_), b(b_) {
    INVSCHUB_CHECK(a < b, "transposition endpoints must satisfy a < b");
  }
  friend bool operator==(const Transposition&, const Transposition&) = default;
  friend auto operator<=>(const Transposition&, const Transposition&) = default;
};

/// A permutation of the integers moving only finitely many points.
/// Canonical representation: the sorted list of (point, image) pairs for
/// exactly the points with w(i) != i, so equality is structural.
class Permutation {
 public:
  Permutation() = default;  // identity

  /// Build from an arbitrary point->image list (fixed points are dropped).
  static Permutation from_moved(std::vector<std::pair<int, int>> moved);

  /// Build from one-line notation: images[k] = w(start + k).
  static Permutation from_one_line(const std::vector<int>& images, int start = 1);

  static Permutation identity() { return {}; }
  static Permutation simple(int i) { return transposition(i, i + 1); }
  static Permutation transposition(int a, int b);
  static Permutation cycle(const std::vector<int>& pts);  // a1 -> a2 -> ... -> a1

  /// Product of simple transpositions in word order: s_{a1} s_{a2} ... s_{ak}.
  static Permutation from_word(const Word& word);

  int operator()(int i) const;

  const std::vector<std::pair<int, int>>& moved() const { return moved_; }
  bool is_identity() const { return moved_.empty(); }
  bool is_involution() const;

  /// Sorted list of non-fixed points.
  std::vector<int> support() const;
  /// Hull of the support; [1, 0] (empty) for the identity.
  int min_support() const;
  int max_support() const;

  /// One-line notation over [lo, hi]: result[k] = w(lo + k).
  std::vector<int> one_line(int lo, int hi) const;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  std::vector<std::pair<int, int>> moved_;
};

enum class Side { right, left };

/// (u * v)(i) = u(v(i)).
Permutation compose(const Permutation& u, const Permutation& v);
Permutation inverse(const Permutation& w);

/// Number of inversions: pairs i < j with w(i) > w(j).
long long length(const Permutation& w);

/// Simple reflections s_i that shorten w on the given side:
/// right descents are the i with w(i) > w(i+1).
std::vector<int> descents(const Permutation& w, Side side = Side::right);
bool has_descent(const Permutation& w, int i, Side side = Side::right);

/// Bruhat order, decided by the prefix-dominance criterion on a common window.
bool bruhat_leq(const Permutation& u, const Permutation& v);

/// Whether u lessdot u*t is a covering relation in Bruhat order:
/// u(a) < u(b) and no a < e < b with u(a) < u(e) < u(b).
bool covers(const Permutation& u, const Transposition& t);

/// Demazure (0-Hecke) product, the associative product with s_i . s_i = s_i.
Permutation demazure(const Permutation& u, const Permutation& v);
Permutation demazure_simple(const Permutation& u, int i);  // u . s_i

/// The pattern of w on a finite set E (ascending): relabel E and w(E) by rank.
/// Result is a permutation of [1, |E|].
Permutation flatten(const Permutation& w, const std::vector<int>& E);

/// Conjugate by the order-preserving shift i -> i + k.
Permutation shift(const Permutation& w, int k);

/// All reduced words, in lexicographic order.
std::vector<Word> reduced_words(const Permutation& w);
/// Some fixed reduced word (peeling the smallest right descent).
Word canonical_word(const Permutation& w);
bool is_reduced_word(const Word& word);

}  // namespace invschub

template <>
struct std::hash<invschub::Permutation> {
  size_t operator()(const invschub::Permutation& w) const noexcept {
    size_t h = 0x9e3779b97f4a7c15ull;
    for (auto [p, q] : w.moved()) {
      h ^= std::hash<long long>()((static_cast<long long>(p) << 32) ^ static_cast<unsigned>(q)) +
           0x9e3779b9 + (h << 6) + (h >> 2);
    }
    return h;
  }
};
