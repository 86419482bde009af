#include "invschub/fpf.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <set>

namespace invschub {

int theta(int i) { return i % 2 == 0 ? i - 1 : i + 1; }

namespace {

int align_down_odd(int x) { return x % 2 == 0 ? x - 1 : x; }
int align_up_even(int x) { return x % 2 == 0 ? x : x + 1; }

}  // namespace

FpfInvolution FpfInvolution::from_pairs(const std::vector<std::pair<int, int>>& pairs) {
  std::map<int, int> img;
  for (auto [a, b] : pairs) {
    INVSCHUB_CHECK(a != b, "matching pair must have distinct endpoints");
    INVSCHUB_CHECK(!img.count(a) && !img.count(b), "matching pairs must be disjoint");
    img[a] = b;
    img[b] = a;
  }
  int lo = 1, hi = 0;
  if (!img.empty()) {
    lo = std::min(1, align_down_odd(img.begin()->first));
    hi = std::max(0, align_up_even(img.rbegin()->first));
  }
  // Window points left unlisted must pair up exactly as theta does.
  for (int i = lo; i <= hi; i += 2) {
    bool have_a = img.count(i) != 0, have_b = img.count(i + 1) != 0;
    INVSCHUB_CHECK(have_a == have_b, "unmatched window point whose theta partner is matched");
    if (!have_a) {
      img[i] = i + 1;
      img[i + 1] = i;
    }
  }
  // Canonical trimming: drop boundary theta pairs, but never shrink past [1, 0].
  while (hi > 0 && lo <= hi && img[hi] == hi - 1) {
    img.erase(hi - 1);
    img.erase(hi);
    hi -= 2;
  }
  while (lo < 1 && lo <= hi && img[lo] == lo + 1) {
    img.erase(lo);
    img.erase(lo + 1);
    lo += 2;
  }
  if (lo > hi) {
    lo = 1;
    hi = 0;
  }
  FpfInvolution z;
  z.lo_ = lo;
  z.hi_ = hi;
  std::vector<std::pair<int, int>> cyc;
  for (auto [a, b] : img)
    if (a < b) cyc.emplace_back(a, b);
  z.m_ = Involution::from_pairs(cyc);
  return z;
}

FpfInvolution FpfInvolution::from_one_line(const std::vector<int>& images, int start) {
  INVSCHUB_CHECK(start % 2 != 0, "window must start at an odd index");
  INVSCHUB_CHECK(images.size() % 2 == 0, "window size must be even");
  int lo = start, hi = start + static_cast<int>(images.size()) - 1;
  std::vector<std::pair<int, int>> cyc;
  for (int i = lo; i <= hi; ++i) {
    int v = images[i - lo];
    INVSCHUB_CHECK(v >= lo && v <= hi, "image escapes the window");
    INVSCHUB_CHECK(v != i, "fixed point in a fixed-point-free window");
    INVSCHUB_CHECK(images[v - lo] == i, "window images do not form an involution");
    if (i < v) cyc.emplace_back(i, v);
  }
  return from_pairs(cyc);
}

int FpfInvolution::operator()(int i) const {
  if (i >= lo_ && i <= hi_) return m_(i);
  return theta(i);
}

std::vector<std::pair<int, int>> FpfInvolution::cycles_in(int lo, int hi) const {
  std::vector<std::pair<int, int>> out;
  for (int a = lo; a <= hi; ++a) {
    int b = (*this)(a);
    if (a < b) out.emplace_back(a, b);
  }
  return out;
}

Permutation FpfInvolution::window_perm(int lo, int hi) const {
  INVSCHUB_CHECK(lo <= lo_ && hi >= hi_, "window must contain the canonical one");
  INVSCHUB_CHECK(lo % 2 != 0 && hi % 2 == 0, "window must be aligned");
  std::vector<std::pair<int, int>> moved;
  for (int i = lo; i <= hi; ++i) moved.emplace_back(i, (*this)(i));
  return Permutation::from_moved(std::move(moved));
}

FpfInvolution theta_conjugate(const Permutation& w) {
  int lo = align_down_odd(std::min(w.min_support(), 1));
  int hi = align_up_even(std::max(w.max_support(), 0));
  Permutation wi = inverse(w);
  std::vector<std::pair<int, int>> cyc;
  for (int i = lo; i <= hi; ++i) {
    int j = wi(theta(w(i)));
    INVSCHUB_CHECK(i != j && j >= lo && j <= hi, "conjugating theta escaped the window");
    if (i < j) cyc.emplace_back(i, j);
  }
  return FpfInvolution::from_pairs(cyc);
}

FpfInvolution fpf_conjugate(const FpfInvolution& z, int i) {
  if (z(i) == i + 1) return z;  // (i, i+1) is a cycle, so s_i z s_i == z
  int lo = std::min(z.window_lo(), align_down_odd(i));
  int hi = std::max(z.window_hi(), align_up_even(i + 1));
  auto s = [i](int a) { return a == i ? i + 1 : a == i + 1 ? i : a; };
  std::vector<std::pair<int, int>> cyc;
  for (int a = lo; a <= hi; ++a) {
    int b = s(z(s(a)));
    if (a < b) cyc.emplace_back(a, b);
  }
  return FpfInvolution::from_pairs(cyc);
}

long long fpf_length(const FpfInvolution& z) {
  auto cyc = z.two_cycles();
  long long k = static_cast<long long>(cyc.size());
  long long non_cycle = length(z.window_matching().perm()) - k;
  INVSCHUB_CHECK(non_cycle % 2 == 0, "non-cycle inversions must pair up");
  long long half = non_cycle / 2;
  long long nested = 0, crossing = 0;
  for (size_t u = 0; u < cyc.size(); ++u)
    for (size_t v = u + 1; v < cyc.size(); ++v) {
      auto [a1, b1] = cyc[u];
      auto [a2, b2] = cyc[v];  // a1 < a2 < b2
      if (b2 < b1)
        ++nested;
      else if (a2 < b1 && b1 < b2)
        ++crossing;
    }
  INVSCHUB_CHECK(half == 2 * nested + crossing,
                 "inversion halving disagrees with the nesting/crossing count");
  // The theta tail must contribute nothing: recount on a widened window.
  Permutation wide = z.window_perm(z.window_lo() - 2, z.window_hi() + 2);
  INVSCHUB_CHECK((length(wide) - (k + 2)) / 2 == half, "widening the window changed the length");
  return half;
}

std::vector<int> fpf_descents(const FpfInvolution& z) {
  std::vector<int> out;
  for (int i = z.window_lo(); i < z.window_hi(); ++i)
    if (z(i) > z(i + 1) && z(i) != i + 1) out.push_back(i);
  return out;
}

bool is_fpf_descent(const FpfInvolution& z, int i) { return z(i) > z(i + 1) && z(i) != i + 1; }

namespace {

const std::vector<Permutation>& atoms_rec(const FpfInvolution& z,
                                          std::map<FpfInvolution, std::vector<Permutation>>& memo) {
  auto it = memo.find(z);
  if (it != memo.end()) return it->second;
  std::vector<Permutation> out;
  if (z.is_theta()) {
    out.push_back(Permutation::identity());
  } else {
    std::set<Permutation> acc;
    for (int i : fpf_descents(z)) {
      FpfInvolution down = fpf_conjugate(z, i);
      for (const Permutation& v : atoms_rec(down, memo)) {
        Permutation w = compose(v, Permutation::simple(i));
        INVSCHUB_CHECK(length(w) == length(v) + 1, "peeling a descent must lengthen the atom");
        acc.insert(w);
      }
    }
    out.assign(acc.begin(), acc.end());
  }
  return memo.emplace(z, std::move(out)).first->second;
}

}  // namespace

std::vector<Permutation> fpf_atoms(const FpfInvolution& z) {
  std::map<FpfInvolution, std::vector<Permutation>> memo;
  std::vector<Permutation> out = atoms_rec(z, memo);
  long long target = fpf_length(z);
  for (const Permutation& w : out) {
    INVSCHUB_CHECK(length(w) == target, "atom has the wrong length");
    INVSCHUB_CHECK(theta_conjugate(w) == z, "atom fails to conjugate theta to z");
  }
  return out;
}

std::vector<Word> fpf_words(const FpfInvolution& z) {
  std::vector<Word> out;
  for (const Permutation& w : fpf_atoms(z)) {
    auto words = reduced_words(w);
    out.insert(out.end(), words.begin(), words.end());
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool is_fpf_atom(const Permutation& w, const FpfInvolution& z) {
  return theta_conjugate(w) == z && length(w) == fpf_length(z);
}

bool is_fpf_word(const Word& word, const FpfInvolution& z) {
  return is_reduced_word(word) && is_fpf_atom(Permutation::from_word(word), z);
}

bool is_fpf_word(const Word& word) {
  if (!is_reduced_word(word)) return false;
  Permutation w = Permutation::from_word(word);
  return fpf_length(theta_conjugate(w)) == static_cast<long long>(word.size());
}

std::optional<FpfInvolution> fpf_cover(const FpfInvolution& y, const Transposition& t) {
  int i = t.a, j = t.b;
  int yi = y(i), yj = y(j);
  if (yi == j) return std::nullopt;  // t is a cycle of y, so t.y.t == y
  if (yi >= yj) return std::nullopt;
  for (int e = i + 1; e < j; ++e) {
    int ye = y(e);
    if (yi < ye && ye < yj) return std::nullopt;
  }
  std::vector<int> A{i, j, yi, yj};
  std::sort(A.begin(), A.end());
  auto rank = [&A](int x) {
    return static_cast<int>(std::lower_bound(A.begin(), A.end(), x) - A.begin());
  };
  auto zf = [&](int a) {
    // z = t y t
    int b = a == i ? j : a == j ? i : a;
    int c = y(b);
    return c == i ? j : c == j ? i : c;
  };
  // A perfect matching of four points is determined by the partner of the
  // smallest: rank 1 is (1,2)(3,4), rank 2 is (1,3)(2,4), rank 3 is (1,4)(2,3).
  int pat_y = rank(y(A[0]));
  int pat_z = rank(zf(A[0]));
  bool step_ok = (pat_y == 1 && pat_z == 2) || (pat_y == 2 && pat_z == 3);
  if (!step_ok) return std::nullopt;
  int lo = std::min(y.window_lo(), align_down_odd(A[0]));
  int hi = std::max(y.window_hi(), align_up_even(A[3]));
  std::vector<std::pair<int, int>> cyc;
  for (int a = lo; a <= hi; ++a) {
    int b = zf(a);
    if (a < b) cyc.emplace_back(a, b);
  }
  FpfInvolution z = FpfInvolution::from_pairs(cyc);
  INVSCHUB_CHECK(fpf_length(z) == fpf_length(y) + 1, "cover must raise the length by exactly one");
  return z;
}

bool fpf_bruhat_leq(const FpfInvolution& y, const FpfInvolution& z) {
  int lo = std::min(y.window_lo(), z.window_lo());
  int hi = std::max(y.window_hi(), z.window_hi());
  return bruhat_leq(y.window_perm(lo, hi), z.window_perm(lo, hi));
}

std::vector<FpfInvolution> psi(const FpfInvolution& y, int r, PsiSign sign) {
  std::vector<FpfInvolution> out;
  if (sign == PsiSign::plus) {
    // Covers live just beyond the window (or beyond r itself when r sits in
    // the theta tail), never further: scan one extra pair past the hull.
    int top = std::max(y.window_hi(), align_up_even(r)) + 2;
    for (int j = r + 1; j <= top; ++j)
      if (auto z = fpf_cover(y, Transposition(r, j))) out.push_back(*z);
  } else {
    int bot = std::min(y.window_lo(), align_down_odd(r)) - 2;
    for (int i = bot; i < r; ++i)
      if (auto z = fpf_cover(y, Transposition(i, r))) out.push_back(*z);
  }
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

std::mutex fpf_memo_mutex;

std::map<FpfInvolution, Polynomial>& fpf_memo() {
  static std::map<FpfInvolution, Polynomial> m;
  return m;
}

}  // namespace

Polynomial fpf_schubert(const FpfInvolution& z) {
  INVSCHUB_CHECK(z.window_lo() >= 1, "FPF Schubert polynomials need windows in {1, 2, ...}");
  {
    std::lock_guard<std::mutex> lock(fpf_memo_mutex);
    auto it = fpf_memo().find(z);
    if (it != fpf_memo().end()) return it->second;
  }
  Polynomial f;
  for (const Permutation& w : fpf_atoms(z)) f += schubert(w);
  std::lock_guard<std::mutex> lock(fpf_memo_mutex);
  return fpf_memo().emplace(z, std::move(f)).first->second;
}

FpfTransitionResult transition_fpf(const FpfInvolution& y, int p, int q) {
  INVSCHUB_CHECK(p >= 1 && p < q && y(p) == q,
                 "transition labels must name a cycle (p, y(p)) with p >= 1");
  FpfTransitionResult r;
  r.plus_set = psi(y, q, PsiSign::plus);
  r.minus_set = psi(y, p, PsiSign::minus);
  r.lhs = x_pair(p, q) * fpf_schubert(y);
  for (const FpfInvolution& z : r.plus_set)
    if (z.window_lo() >= 1) r.rhs += fpf_schubert(z);
  for (const FpfInvolution& z : r.minus_set)
    if (z.window_lo() >= 1) r.rhs -= fpf_schubert(z);
  INVSCHUB_CHECK(r.lhs == r.rhs, "transition identity violated");
  return r;
}

FpfInvolution fpf_reversal(int n) {
  INVSCHUB_CHECK(n >= 2 && n % 2 == 0, "the window size must be a positive even integer");
  std::vector<std::pair<int, int>> cyc;
  for (int i = 1; 2 * i <= n; ++i) cyc.emplace_back(i, n + 1 - i);
  return FpfInvolution::from_pairs(cyc);
}

Polynomial longest_fpf_product(int n) {
  INVSCHUB_CHECK(n >= 2 && n % 2 == 0, "the window size must be a positive even integer");
  Polynomial f = 1;
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; i + j <= n; ++j) f = f * x_pair(i, j);
  return f;
}

}  // namespace invschub
