#include "invschub/permutation.hpp"

#include <algorithm>
#include <map>
#include <unordered_map>

namespace invschub {

void check_failed(const char* expr, const std::string& msg) {
  throw check_error("invariant violated: " + msg + " [" + expr + "]");
}

Permutation Permutation::from_moved(std::vector<std::pair<int, int>> moved) {
  std::erase_if(moved, [](const auto& pq) { return pq.first == pq.second; });
  std::sort(moved.begin(), moved.end());
  Permutation w;
  w.moved_ = std::move(moved);
  // validate bijectivity: points unique, images a permutation of the points
  std::vector<int> pts, imgs;
  for (auto [p, q] : w.moved_) {
    pts.push_back(p);
    imgs.push_back(q);
  }
  std::vector<int> sorted_imgs = imgs;
  std::sort(sorted_imgs.begin(), sorted_imgs.end());
  INVSCHUB_CHECK(std::adjacent_find(pts.begin(), pts.end()) == pts.end(),
                 "duplicate point in permutation map");
  INVSCHUB_CHECK(pts == sorted_imgs, "permutation map is not a bijection of its support");
  return w;
}

Permutation Permutation::from_one_line(const std::vector<int>& images, int start) {
  std::vector<std::pair<int, int>> moved;
  for (size_t k = 0; k < images.size(); ++k) moved.emplace_back(start + static_cast<int>(k), images[k]);
  return from_moved(std::move(moved));
}

Permutation Permutation::transposition(int a, int b) {
  INVSCHUB_CHECK(a != b, "transposition endpoints must differ");
  Permutation w;
  w.moved_ = {{std::min(a, b), std::max(a, b)}, {std::max(a, b), std::min(a, b)}};
  return w;
}

Permutation Permutation::cycle(const std::vector<int>& pts) {
  std::vector<std::pair<int, int>> moved;
  for (size_t k = 0; k < pts.size(); ++k) moved.emplace_back(pts[k], pts[(k + 1) % pts.size()]);
  return from_moved(std::move(moved));
}

Permutation Permutation::from_word(const Word& word) {
  Permutation w;
  for (int a : word) w = compose(w, simple(a));
  return w;
}

int Permutation::operator()(int i) const {
  auto it = std::lower_bound(moved_.begin(), moved_.end(), std::pair<int, int>{i, INT32_MIN});
  if (it != moved_.end() && it->first == i) return it->second;
  return i;
}

bool Permutation::is_involution() const {
  for (auto [p, q] : moved_)
    if ((*this)(q) != p) return false;
  return true;
}

std::vector<int> Permutation::support() const {
  std::vector<int> s;
  s.reserve(moved_.size());
  for (auto [p, q] : moved_) s.push_back(p);
  return s;
}

int Permutation::min_support() const { return moved_.empty() ? 1 : moved_.front().first; }
int Permutation::max_support() const { return moved_.empty() ? 0 : moved_.back().first; }

std::vector<int> Permutation::one_line(int lo, int hi) const {
  std::vector<int> r;
  for (int i = lo; i <= hi; ++i) r.push_back((*this)(i));
  return r;
}

Permutation compose(const Permutation& u, const Permutation& v) {
  std::vector<std::pair<int, int>> moved;
  for (auto [p, q] : v.moved()) moved.emplace_back(p, u(q));
  for (auto [p, q] : u.moved())
    if (v(p) == p) moved.emplace_back(p, q);  // p untouched by v, so (uv)(p) = u(p)
  return Permutation::from_moved(std::move(moved));
}

Permutation inverse(const Permutation& w) {
  std::vector<std::pair<int, int>> moved;
  for (auto [p, q] : w.moved()) moved.emplace_back(q, p);
  return Permutation::from_moved(std::move(moved));
}

long long length(const Permutation& w) {
  if (w.is_identity()) return 0;
  int lo = w.min_support(), hi = w.max_support();
  long long n = 0;
  std::vector<int> line = w.one_line(lo, hi);
  for (size_t i = 0; i < line.size(); ++i)
    for (size_t j = i + 1; j < line.size(); ++j)
      if (line[i] > line[j]) ++n;
  return n;
}

std::vector<int> descents(const Permutation& w, Side side) {
  const Permutation& v = side == Side::right ? w : inverse(w);
  if (v.is_identity()) return {};
  std::vector<int> d;
  for (int i = v.min_support() - 1; i <= v.max_support(); ++i)
    if (v(i) > v(i + 1)) d.push_back(i);
  return d;
}

bool has_descent(const Permutation& w, int i, Side side) {
  const Permutation& v = side == Side::right ? w : inverse(w);
  return v(i) > v(i + 1);
}

bool bruhat_leq(const Permutation& u, const Permutation& v) {
  if (u == v) return true;
  if (length(u) >= length(v)) return false;
  int lo = std::min(u.min_support(), v.min_support());
  int hi = std::max(u.max_support(), v.max_support());
  if (lo > hi) return true;
  std::vector<int> lu = u.one_line(lo, hi), lv = v.one_line(lo, hi);
  // prefix dominance: sorted prefixes of u are entrywise <= those of v
  std::vector<int> pu, pv;
  for (size_t k = 0; k + 1 < lu.size(); ++k) {
    pu.insert(std::upper_bound(pu.begin(), pu.end(), lu[k]), lu[k]);
    pv.insert(std::upper_bound(pv.begin(), pv.end(), lv[k]), lv[k]);
    for (size_t t = 0; t <= k; ++t)
      if (pu[t] > pv[t]) return false;
  }
  return true;
}

bool covers(const Permutation& u, const Transposition& t) {
  int ua = u(t.a), ub = u(t.b);
  if (ua >= ub) return false;
  for (int e = t.a + 1; e < t.b; ++e) {
    int ue = u(e);
    if (ua < ue && ue < ub) return false;
  }
  return true;
}

Permutation demazure_simple(const Permutation& u, int i) {
  if (has_descent(u, i)) return u;
  return compose(u, Permutation::simple(i));
}

Permutation demazure(const Permutation& u, const Permutation& v) {
  Permutation r = u;
  for (int a : canonical_word(v)) r = demazure_simple(r, a);
  return r;
}

Permutation flatten(const Permutation& w, const std::vector<int>& E) {
  INVSCHUB_CHECK(std::is_sorted(E.begin(), E.end()) &&
                     std::adjacent_find(E.begin(), E.end()) == E.end(),
                 "flatten window must be strictly increasing");
  std::vector<int> img;
  img.reserve(E.size());
  for (int e : E) img.push_back(w(e));
  std::vector<int> ranks = img;
  std::sort(ranks.begin(), ranks.end());
  std::vector<int> line;
  line.reserve(E.size());
  for (int v : img)
    line.push_back(static_cast<int>(std::lower_bound(ranks.begin(), ranks.end(), v) - ranks.begin()) + 1);
  return Permutation::from_one_line(line);
}

Permutation shift(const Permutation& w, int k) {
  std::vector<std::pair<int, int>> moved;
  for (auto [p, q] : w.moved()) moved.emplace_back(p + k, q + k);
  return Permutation::from_moved(std::move(moved));
}

Word canonical_word(const Permutation& w) {
  Word word;
  Permutation v = w;
  while (!v.is_identity()) {
    auto d = descents(v);
    word.push_back(d.front());
    v = compose(v, Permutation::simple(d.front()));
  }
  std::reverse(word.begin(), word.end());
  return word;
}

bool is_reduced_word(const Word& word) {
  return length(Permutation::from_word(word)) == static_cast<long long>(word.size());
}

namespace {
void reduced_words_rec(const Permutation& w,
                       std::unordered_map<Permutation, std::vector<Word>>& memo) {
  if (memo.count(w)) return;
  std::vector<Word> out;
  if (w.is_identity()) {
    out.push_back({});
  } else {
    for (int i : descents(w)) {
      Permutation v = compose(w, Permutation::simple(i));
      reduced_words_rec(v, memo);
      for (const Word& sub : memo.at(v)) {
        Word word = sub;
        word.push_back(i);
        out.push_back(std::move(word));
      }
    }
    std::sort(out.begin(), out.end());
  }
  memo.emplace(w, std::move(out));
}
}  // namespace

std::vector<Word> reduced_words(const Permutation& w) {
  std::unordered_map<Permutation, std::vector<Word>> memo;
  reduced_words_rec(w, memo);
  return memo.at(w);
}

}  // namespace invschub
