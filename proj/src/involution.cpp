#include "invschub/involution.hpp"

#include <algorithm>
#include <set>

namespace invschub {

Involution Involution::from_pairs(const std::vector<std::pair<int, int>>& pairs) {
  std::vector<std::pair<int, int>> moved;
  for (auto [a, b] : pairs) {
    INVSCHUB_CHECK(a != b, "involution pair must have distinct endpoints");
    moved.emplace_back(a, b);
    moved.emplace_back(b, a);
  }
  return Involution(Permutation::from_moved(std::move(moved)));
}

std::vector<std::pair<int, int>> Involution::two_cycles() const {
  std::vector<std::pair<int, int>> out;
  for (auto [p, q] : p_.moved())
    if (p < q) out.emplace_back(p, q);
  return out;
}

std::vector<std::pair<int, int>> Involution::cycles_in(int lo, int hi) const {
  std::vector<std::pair<int, int>> out;
  for (int a = lo; a <= hi; ++a) {
    int b = p_(a);
    if (a <= b) out.emplace_back(a, b);
  }
  return out;
}

int kappa(const Involution& y) { return static_cast<int>(y.perm().moved().size()) / 2; }

long long hat_length(const Involution& y) { return (length(y.perm()) + kappa(y)) / 2; }

Involution demazure_conjugate(int i, const Involution& y) {
  Permutation s = Permutation::simple(i);
  if (has_descent(y.perm(), i)) return y;
  Permutation sy = compose(s, y.perm());
  Permutation ys = compose(y.perm(), s);
  return Involution(sy == ys ? ys : compose(sy, s));
}

namespace {

// Atom construction state: we list the elements of the support hull in the
// order of their images under the atom, i.e. we build u = w^{-1} one line at a
// time.  A 2-cycle (a, b) of y must contribute b strictly before a; while it
// is "open" (b listed, a not), no element of the open interval (a, b) may be
// listed, which is exactly the covering condition on w(a,b) < w.  Cycles
// (a, b), (a', b') with a < a' and b < b' must satisfy w(a) < w(b'), i.e. a is
// listed before b'.
struct AtomSearch {
  struct Cycle {
    int a, b;  // a <= b; a == b is a fixed point
  };
  std::vector<Cycle> cycles;
  std::vector<int> elem_cycle;             // hull offset -> cycle index
  std::vector<std::vector<int>> preceders; // cycle c: cycles d with d.a < c.a, d.b < c.b
  int lo = 0;
  std::vector<int> seq;
  std::vector<char> placed_elem;   // by hull offset
  std::vector<char> placed_min;    // cycle: minimum placed (cycle fully closed)
  std::vector<char> placed_max;    // cycle: maximum placed
  std::vector<int> open_cycles;    // 2-cycles with max placed, min pending
  std::vector<Permutation>* out = nullptr;

  bool can_place(int x) const {
    int ci = elem_cycle[x - lo];
    const Cycle& c = cycles[ci];
    if (x == c.a && c.a != c.b) {
      if (!placed_max[ci]) return false;  // b first within the cycle
    } else {
      // x == c.b (or a fixed point): every strictly smaller "comparable" cycle
      // must already have its minimum placed
      for (int d : preceders[ci])
        if (!placed_min[d]) return false;
    }
    for (int oc : open_cycles) {
      if (oc == ci) continue;
      if (cycles[oc].a < x && x < cycles[oc].b) return false;
    }
    return true;
  }

  void run() {
    size_t total = placed_elem.size();
    if (seq.size() == total) {
      // seq lists hull elements by increasing image; invert to get the atom
      std::vector<std::pair<int, int>> moved;
      for (size_t k = 0; k < seq.size(); ++k) moved.emplace_back(seq[k], lo + static_cast<int>(k));
      out->push_back(Permutation::from_moved(std::move(moved)));
      return;
    }
    for (size_t off = 0; off < total; ++off) {
      if (placed_elem[off]) continue;
      int x = lo + static_cast<int>(off);
      if (!can_place(x)) continue;
      int ci = elem_cycle[off];
      bool is_min = x == cycles[ci].a;
      bool is_max = x == cycles[ci].b;
      placed_elem[off] = 1;
      if (is_max) placed_max[ci] = 1;
      if (is_min) placed_min[ci] = 1;
      bool opened = is_max && !is_min;
      if (opened) open_cycles.push_back(ci);
      if (is_min && !is_max) std::erase(open_cycles, ci);
      seq.push_back(x);

      run();

      seq.pop_back();
      if (is_min && !is_max) open_cycles.push_back(ci);
      if (opened) std::erase(open_cycles, ci);
      if (is_min) placed_min[ci] = 0;
      if (is_max) placed_max[ci] = 0;
      placed_elem[off] = 0;
    }
  }
};

// Independent validation of the two structural conditions defining atoms.
bool satisfies_atom_conditions(const Permutation& w, const Involution& y, int lo, int hi) {
  auto cycles = y.cycles_in(lo, hi);
  for (auto [a, b] : cycles) {
    if (a == b) continue;
    Permutation v = compose(w, Permutation::transposition(a, b));
    if (!covers(v, Transposition(a, b))) return false;
  }
  for (auto [a, b] : cycles)
    for (auto [a2, b2] : cycles) {
      if (a == a2 && b == b2) continue;
      if (a < a2 && b < b2 && w(a) >= w(b2)) return false;
    }
  return true;
}

}  // namespace

std::vector<Permutation> atoms(const Involution& y) {
  if (y.is_identity()) return {Permutation::identity()};
  int lo = y.perm().min_support(), hi = y.perm().max_support();
  AtomSearch search;
  search.lo = lo;
  auto cyc = y.cycles_in(lo, hi);
  for (auto [a, b] : cyc) search.cycles.push_back({a, b});
  search.elem_cycle.assign(hi - lo + 1, -1);
  for (size_t ci = 0; ci < search.cycles.size(); ++ci) {
    search.elem_cycle[search.cycles[ci].a - lo] = static_cast<int>(ci);
    search.elem_cycle[search.cycles[ci].b - lo] = static_cast<int>(ci);
  }
  search.preceders.resize(search.cycles.size());
  for (size_t c = 0; c < search.cycles.size(); ++c)
    for (size_t d = 0; d < search.cycles.size(); ++d)
      if (d != c && search.cycles[d].a < search.cycles[c].a &&
          search.cycles[d].b < search.cycles[c].b)
        search.preceders[c].push_back(static_cast<int>(d));
  search.placed_elem.assign(hi - lo + 1, 0);
  search.placed_min.assign(search.cycles.size(), 0);
  search.placed_max.assign(search.cycles.size(), 0);
  std::vector<Permutation> out;
  search.out = &out;
  search.run();

  long long target = hat_length(y);
  for (const Permutation& w : out) {
    INVSCHUB_CHECK(satisfies_atom_conditions(w, y, lo, hi),
                   "atom search produced a non-atom");
    INVSCHUB_CHECK(length(w) == target, "atom search produced wrong length");
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Permutation> atoms_by_peeling(const Involution& y) {
  if (y.is_identity()) return {Permutation::identity()};
  std::set<Permutation> out;
  for (int i : descents(y.perm())) {
    // strip s_i: y = s_i . x . s_i with s_i not a descent of x
    Permutation s = Permutation::simple(i);
    Permutation sy = compose(s, y.perm());
    Permutation ys = compose(y.perm(), s);
    Involution x(sy == ys ? ys : compose(sy, s));
    for (const Permutation& v : atoms_by_peeling(x)) {
      Permutation w = compose(v, s);
      if (length(w) == length(v) + 1) out.insert(w);
    }
  }
  return {out.begin(), out.end()};
}

std::vector<Word> involution_words(const Involution& y) {
  std::vector<Word> out;
  for (const Permutation& w : atoms(y)) {
    auto words = reduced_words(w);
    out.insert(out.end(), words.begin(), words.end());
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool is_atom_of(const Permutation& w, const Involution& y) {
  return demazure(inverse(w), w) == y.perm() && length(w) == hat_length(y);
}

Involution involution_of_word(const Word& word) {
  Permutation w = Permutation::from_word(word);
  return Involution(demazure(inverse(w), w));
}

bool is_involution_word(const Word& word) {
  if (!is_reduced_word(word)) return false;
  Permutation w = Permutation::from_word(word);
  Involution y(demazure(inverse(w), w));
  return hat_length(y) == static_cast<long long>(word.size());
}

bool is_involution_word(const Word& word, const Involution& y) {
  if (!is_reduced_word(word)) return false;
  Permutation w = Permutation::from_word(word);
  return is_atom_of(w, y);
}

bool inv_bruhat_leq(const Involution& y, const Involution& z) {
  return bruhat_leq(y.perm(), z.perm());
}

bool inv_covers(const Involution& y, const Involution& z) {
  return hat_length(z) == hat_length(y) + 1 && inv_bruhat_leq(y, z);
}

}  // namespace invschub
