#pragma once

#include <optional>
#include <vector>

#include "invschub/involution.hpp"
#include "invschub/polynomial.hpp"

namespace invschub {

/// The base matching theta : i -> i - (-1)^i, pairing 2k-1 <-> 2k.
int theta(int i);

/// A fixed-point-free involution of the integers that agrees with theta
/// outside a bounded window.  Canonical form: the window is theta-aligned
/// ([lo, hi] with lo odd, hi even), contains every point where the element
/// differs from theta, and is trimmed as far as possible without shrinking
/// past the empty base window [1, 0].  Elements fixing no behaviour below 1
/// therefore carry windows [1, n] (the classical chain F_2 c F_4 c ...);
/// windows extend below 1 only for elements genuinely moving nonpositive
/// points, which cover scans near the left boundary do produce.
class FpfInvolution {
 public:
  FpfInvolution() = default;  // theta itself

  /// Listed 2-cycles; the window is the aligned hull of their support, and
  /// every window point left unlisted must pair with its theta partner.
  static FpfInvolution from_pairs(const std::vector<std::pair<int, int>>& pairs);
  /// One-line window notation: images[k] = z(start + k).  The window must be
  /// aligned and the images a fixed-point-free involution of it.
  static FpfInvolution from_one_line(const std::vector<int>& images, int start = 1);

  int operator()(int i) const;
  int window_lo() const { return lo_; }  // odd, always <= 1
  int window_hi() const { return hi_; }  // even, always >= 0; [1, 0] is theta
  bool is_theta() const { return hi_ < lo_; }

  /// The matching on the window as a finite involution (identity for theta).
  const Involution& window_matching() const { return m_; }
  /// The 2-cycles within the window, ascending by smaller element.
  std::vector<std::pair<int, int>> two_cycles() const { return m_.two_cycles(); }
  /// Cycles (a, z(a)) with a < z(a) and a in [lo, hi], theta tail included.
  std::vector<std::pair<int, int>> cycles_in(int lo, int hi) const;
  /// The element restricted to [lo, hi] (which must contain the window and be
  /// aligned) as a finite permutation.
  Permutation window_perm(int lo, int hi) const;

  friend bool operator==(const FpfInvolution&, const FpfInvolution&) = default;
  friend auto operator<=>(const FpfInvolution&, const FpfInvolution&) = default;

 private:
  Involution m_;  // support is exactly [lo_, hi_]
  int lo_ = 1, hi_ = 0;
};

/// w^{-1} . theta . w as a windowed element.
FpfInvolution theta_conjugate(const Permutation& w);

/// s_i . z . s_i.
FpfInvolution fpf_conjugate(const FpfInvolution& z, int i);

/// Half the number of inversions that are not cycles (the theta tail
/// contributes none).  Checked on every call against the independent count
/// 2*(nested cycle pairs) + (crossing cycle pairs), and against a recount on
/// a widened window.
long long fpf_length(const FpfInvolution& z);

/// Right descents i with (i, i+1) not a cycle of z; conjugating by one of
/// these is exactly what lowers fpf_length by 1.  Finite: the theta tail
/// contributes only cycle descents.
std::vector<int> fpf_descents(const FpfInvolution& z);
bool is_fpf_descent(const FpfInvolution& z, int i);

/// Minimal-length permutations w with z = w^{-1} . theta . w, sorted.
/// Computed by peeling fpf_descents one at a time (cycle descents leave the
/// length unchanged and are never peeled); every result is verified against
/// theta_conjugate.
std::vector<Permutation> fpf_atoms(const FpfInvolution& z);
/// Union of the reduced words of the atoms, sorted lexicographically.
std::vector<Word> fpf_words(const FpfInvolution& z);

bool is_fpf_atom(const Permutation& w, const FpfInvolution& z);
bool is_fpf_word(const Word& word, const FpfInvolution& z);
/// Whether the word is minimal for the element it conjugates theta to.
bool is_fpf_word(const Word& word);

/// The covering relation of the fixed-point-free Bruhat order: returns
/// t . y . t when that element covers y, absent otherwise.  For t = (i, j)
/// the cover test is
///   (a) y(i) < y(j) and no i < e < j has y(i) < y(e) < y(j), and
///   (b) on A = {i, j, y(i), y(j)} the flattened step is
///       (1,2)(3,4) -> (1,3)(2,4) or (1,3)(2,4) -> (1,4)(2,3).
/// When present, fpf_length rises by exactly one (asserted).
std::optional<FpfInvolution> fpf_cover(const FpfInvolution& y, const Transposition& t);

/// The order generated by the covers; decided as Bruhat order of the
/// restrictions to a common window, which agrees with it.
bool fpf_bruhat_leq(const FpfInvolution& y, const FpfInvolution& z);

enum class PsiSign { plus, minus };

/// psi(y, r, plus)  = { z : y lessdot z and z = (r, j) y (r, j) for j > r },
/// psi(y, r, minus) = { z : y lessdot z and z = (i, r) y (i, r) for i < r },
/// sorted.  Members may leave the positive windows (the minus scan can step
/// below 1); callers wanting that excluded filter on window_lo() >= 1.
std::vector<FpfInvolution> psi(const FpfInvolution& y, int r, PsiSign sign);

/// Sum of the Schubert polynomials of the atoms; homogeneous of degree
/// fpf_length(z).  Demands a positive window.  Memoized.
Polynomial fpf_schubert(const FpfInvolution& z);

struct FpfTransitionResult {
  std::vector<FpfInvolution> plus_set;   // psi(y, q, plus)
  std::vector<FpfInvolution> minus_set;  // psi(y, p, minus)
  Polynomial lhs;                        // (x_p + x_q) * fpf_schubert(y)
  Polynomial rhs;  // sum over plus_set - sum over minus_set, positive windows only
};

/// The transition identity at a cycle (p, q) = (p, y(p)) of y with p >= 1:
/// lhs == rhs is asserted before returning.
FpfTransitionResult transition_fpf(const FpfInvolution& y, int p, int q);

/// The reversal n ... 2 1, i.e. the matching (i, n+1-i), for even n: the
/// longest element of F_n.
FpfInvolution fpf_reversal(int n);

/// prod_{1 <= i < j <= n, i+j <= n} (x_i + x_j) for even positive n; equals
/// fpf_schubert(fpf_reversal(n)).
Polynomial longest_fpf_product(int n);

}  // namespace invschub

template <>
struct std::hash<invschub::FpfInvolution> {
  size_t operator()(const invschub::FpfInvolution& z) const noexcept {
    size_t h = std::hash<invschub::Involution>()(z.window_matching());
    return h * 1000003u + static_cast<size_t>(z.window_lo() + 64);
  }
};
