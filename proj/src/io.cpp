#include "invschub/io.hpp"

#include <algorithm>
#include <sstream>

namespace invschub {

namespace {

std::string strip(const std::string& s) {
  size_t a = s.find_first_not_of(" \t\r\n");
  if (a == std::string::npos) return "";
  size_t b = s.find_last_not_of(" \t\r\n");
  return s.substr(a, b - a + 1);
}

std::vector<int> parse_int_list(const std::string& s, char sep) {
  std::vector<int> out;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, sep)) {
    tok = strip(tok);
    if (tok.empty()) throw std::invalid_argument("empty entry in list: '" + s + "'");
    size_t used = 0;
    int v = std::stoi(tok, &used);
    if (used != tok.size()) throw std::invalid_argument("bad integer '" + tok + "'");
    out.push_back(v);
  }
  return out;
}

}  // namespace

Permutation parse_permutation(const std::string& raw) {
  std::string text = strip(raw);
  if (text.empty()) throw std::invalid_argument("empty permutation");
  if (text == "()" || text == "id") return Permutation::identity();
  if (text.front() == '(') {
    Permutation w;
    size_t pos = 0;
    while (pos < text.size()) {
      if (text[pos] != '(') throw std::invalid_argument("expected '(' in cycle form");
      size_t close = text.find(')', pos);
      if (close == std::string::npos) throw std::invalid_argument("unbalanced cycle form");
      auto pts = parse_int_list(text.substr(pos + 1, close - pos - 1), ',');
      if (pts.size() < 2) throw std::invalid_argument("cycle needs at least two points");
      w = compose(w, Permutation::cycle(pts));
      pos = close + 1;
      while (pos < text.size() && isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    }
    return w;
  }
  std::vector<int> line;
  if (text.find(',') != std::string::npos) {
    line = parse_int_list(text, ',');
  } else {
    for (char c : text) {
      if (!isdigit(static_cast<unsigned char>(c)))
        throw std::invalid_argument("bad compact permutation '" + text + "'");
      line.push_back(c - '0');
    }
    if (line.size() > 9) throw std::invalid_argument("compact form limited to windows of size 9");
  }
  std::vector<int> sorted = line;
  std::sort(sorted.begin(), sorted.end());
  for (size_t k = 0; k < sorted.size(); ++k)
    if (sorted[k] != static_cast<int>(k) + 1)
      throw std::invalid_argument("one-line form must list 1..n exactly once: '" + text + "'");
  return Permutation::from_one_line(line);
}

Involution parse_involution(const std::string& text) {
  Permutation w = parse_permutation(text);
  if (!w.is_involution()) throw std::invalid_argument("not an involution: '" + text + "'");
  return Involution(w);
}

std::string format_permutation(const Permutation& w) {
  if (w.is_identity()) return "1";
  if (w.min_support() >= 1) {
    std::string out;
    for (int i = 1; i <= w.max_support(); ++i) {
      if (i > 1) out += ",";
      out += std::to_string(w(i));
    }
    return out;
  }
  if (w.is_involution()) return format_cycles(Involution(w));
  // general shifted permutation: fall back to explicit cycles
  std::string out;
  std::vector<int> seen;
  for (auto [p, q] : w.moved()) {
    if (std::find(seen.begin(), seen.end(), p) != seen.end()) continue;
    out += "(";
    int i = p;
    bool first = true;
    do {
      if (!first) out += ",";
      first = false;
      out += std::to_string(i);
      seen.push_back(i);
      i = w(i);
    } while (i != p);
    out += ")";
  }
  return out;
}

std::string format_cycles(const Involution& y) {
  auto pairs = y.two_cycles();
  if (pairs.empty()) return "()";
  std::string out;
  for (auto [a, b] : pairs)
    out += "(" + std::to_string(a) + "," + std::to_string(b) + ")";
  return out;
}

FpfInvolution parse_fpf(const std::string& text) {
  Involution y = parse_involution(text);
  return FpfInvolution::from_pairs(y.two_cycles());
}

std::string format_fpf(const FpfInvolution& z) {
  auto pairs = z.two_cycles();
  if (pairs.empty()) return "()";
  std::string out;
  for (auto [a, b] : pairs)
    out += "(" + std::to_string(a) + "," + std::to_string(b) + ")";
  return out;
}

std::string format_word(const Word& word) {
  std::string out;
  for (size_t k = 0; k < word.size(); ++k) {
    if (k) out += " ";
    out += std::to_string(word[k]);
  }
  return out;
}

Word parse_word(const std::string& raw) {
  std::string text = strip(raw);
  Word out;
  std::stringstream ss(text);
  std::string tok;
  while (ss >> tok) {
    size_t used = 0;
    int v = std::stoi(tok, &used);
    if (used != tok.size()) throw std::invalid_argument("bad word letter '" + tok + "'");
    out.push_back(v);
  }
  return out;
}

}  // namespace invschub
