// Command-line front end: small queries print their answer to stdout, the
// verify command runs a sweep suite and reports in a canonical text form
// that is byte-identical across runs and worker counts.  --json renders the
// same data as a JSON object whose "text" fields feed back into the parsers.
//
// Exit codes: 0 success, 1 verification failure, 2 usage error.

#include <exception>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "invschub/fpf.hpp"
#include "invschub/inv_schubert.hpp"
#include "invschub/involution.hpp"
#include "invschub/io.hpp"
#include "invschub/little.hpp"
#include "invschub/permutation.hpp"
#include "invschub/polynomial.hpp"
#include "invschub/sweeps.hpp"
#include "invschub/tau.hpp"

using nlohmann::json;
using namespace invschub;

namespace {

json j_perm(const Permutation& w) {
  return {{"kind", "permutation"}, {"text", format_permutation(w)}};
}
json j_inv(const Involution& y) {
  return {{"kind", "involution"}, {"text", format_cycles(y)}};
}
json j_fpf(const FpfInvolution& z) {
  return {{"kind", "fpf"}, {"text", format_fpf(z)}};
}
json j_poly(const Polynomial& f) {
  return {{"kind", "polynomial"}, {"text", f.to_string()}};
}
json j_word(const Word& a) {
  return {{"kind", "word"}, {"text", format_word(a)}};
}
json j_marked(const MarkedWord& mw) {
  return {{"kind", "marked-word"}, {"word", format_word(mw.word)}, {"mark", mw.mark}};
}

void emit(bool as_json, const json& j, const std::string& plain) {
  if (as_json)
    std::cout << j.dump(2) << "\n";
  else
    std::cout << plain;
}

std::string join_lines(const std::vector<std::string>& xs) {
  std::string out;
  for (const std::string& x : xs) out += x + "\n";
  return out;
}

bool is_word_for(const Word& a, const Involution& y) {
  return is_involution_word(a, y);
}
bool is_word_for(const Word& a, const FpfInvolution& z) {
  return is_fpf_word(a, z);
}

// The position whose deletion leaves a word for the target, demanded unique.
template <class Target>
int infer_mark(const Word& word, const Target& y) {
  std::vector<int> hits;
  for (int t = 1; t <= static_cast<int>(word.size()); ++t)
    if (is_word_for(delete_at({word, t}), y)) hits.push_back(t);
  if (hits.size() == 1) return hits[0];
  throw CLI::ValidationError(
      "--mark", hits.empty()
                    ? "no position's deletion is a word for the target"
                    : std::to_string(hits.size()) +
                          " positions qualify; pass --mark explicitly");
}

struct Options {
  bool as_json = false;
  int workers = 1;
  int bound = 0;  // 0: leave the library default alone
  bool big = false;
};

int run(int argc, char** argv) {
  CLI::App app{"involution Schubert calculus: polynomials, atoms, covering"
               " maps and verification sweeps"};
  app.require_subcommand(1);
  Options opt;
  app.add_flag("--json", opt.as_json, "emit JSON instead of plain text");
  app.add_option("--workers", opt.workers, "worker threads for verify")
      ->check(CLI::PositiveNumber);
  app.add_option("--bound", opt.bound,
                 "cap on the Schubert recursion window (guards runaway inputs)")
      ->check(CLI::PositiveNumber);
  app.add_flag("--big", opt.big, "allow suites gated as large");

  std::string arg_u, arg_v, arg_word, arg_suite;
  std::string arg_inv, arg_fpf;
  int arg_i = 0, arg_j = 0, arg_r = 0, arg_p = 0, arg_mark = 0;
  bool flag_minus = false;

  auto* perm_length = app.add_subcommand("perm-length", "inversion count");
  perm_length->add_option("W", arg_u, "permutation")->required();

  auto* cmd_descents = app.add_subcommand("descents", "right and left descent sets");
  cmd_descents->add_option("W", arg_u, "permutation")->required();

  auto* cmd_bruhat = app.add_subcommand("bruhat", "is U <= V in Bruhat order");
  cmd_bruhat->add_option("U", arg_u, "lower permutation")->required();
  cmd_bruhat->add_option("V", arg_v, "upper permutation")->required();

  auto* cmd_schubert = app.add_subcommand("schubert", "Schubert polynomial");
  cmd_schubert->add_option("W", arg_u, "permutation")->required();

  auto* cmd_invs = app.add_subcommand("inv-schubert",
                                      "involution Schubert polynomial");
  cmd_invs->add_option("Y", arg_u, "involution")->required();

  auto* cmd_atoms = app.add_subcommand("atoms", "minimal-length witnesses");
  cmd_atoms->add_option("Y", arg_u, "involution")->required();

  auto* cmd_invwords = app.add_subcommand("invwords", "involution words");
  cmd_invwords->add_option("Y", arg_u, "involution")->required();

  auto* cmd_tau = app.add_subcommand("tau", "covering map along the pair (I, J)");
  cmd_tau->add_option("I", arg_i)->required();
  cmd_tau->add_option("J", arg_j)->required();
  cmd_tau->add_option("Y", arg_u, "involution")->required();

  auto* cmd_phi = app.add_subcommand("phi", "covers found scanning from a point");
  cmd_phi->add_flag("--minus", flag_minus, "scan below the point instead");
  cmd_phi->add_option("Y", arg_u, "involution")->required();
  cmd_phi->add_option("R", arg_r, "scan point")->required();

  auto* cmd_trans = app.add_subcommand(
      "transition", "transition identity at the cycle through P");
  cmd_trans->add_option("--inv", arg_inv, "involution");
  cmd_trans->add_option("--fpf", arg_fpf, "fixed-point-free involution");
  cmd_trans->add_option("P", arg_p, "smaller end of the cycle")->required();

  auto* cmd_fatoms = app.add_subcommand("fpf-atoms", "minimal conjugators");
  cmd_fatoms->add_option("Z", arg_u, "fixed-point-free involution")->required();

  auto* cmd_fschub = app.add_subcommand("fpf-schubert",
                                        "fixed-point-free Schubert polynomial");
  cmd_fschub->add_option("Z", arg_u, "fixed-point-free involution")->required();

  auto* cmd_bump = app.add_subcommand("bump", "run the bumping map on a marked word");
  cmd_bump->add_option("--inv", arg_inv, "involution target");
  cmd_bump->add_option("--fpf", arg_fpf, "fixed-point-free target");
  cmd_bump->add_option("--word", arg_word, "word, letters space separated")
      ->required();
  cmd_bump->add_option("--mark", arg_mark, "marked position (inferred when unique)");

  auto* cmd_verify = app.add_subcommand("verify", "run a verification suite");
  cmd_verify->add_option("SUITE", arg_suite, "suite name (see list-suites)")
      ->required();

  auto* cmd_list = app.add_subcommand("list-suites", "registered verification suites");

  for (auto* sub : app.get_subcommands({})) sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    // normalize CLI11's exit codes: 0 for --help, 2 for anything malformed
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  if (opt.bound > 0) set_schubert_window_cap(opt.bound);

  if (perm_length->parsed()) {
    Permutation w = parse_permutation(arg_u);
    emit(opt.as_json,
         {{"command", "perm-length"}, {"input", j_perm(w)}, {"length", length(w)}},
         std::to_string(length(w)) + "\n");
  } else if (cmd_descents->parsed()) {
    Permutation w = parse_permutation(arg_u);
    auto right = descents(w), left = descents(w, Side::left);
    json j{{"command", "descents"}, {"input", j_perm(w)},
           {"right", right}, {"left", left}};
    std::string plain = "right:";
    for (int i : right) plain += " " + std::to_string(i);
    plain += "\nleft:";
    for (int i : left) plain += " " + std::to_string(i);
    emit(opt.as_json, j, plain + "\n");
  } else if (cmd_bruhat->parsed()) {
    Permutation u = parse_permutation(arg_u);
    Permutation v = parse_permutation(arg_v);
    bool leq = bruhat_leq(u, v);
    emit(opt.as_json,
         {{"command", "bruhat"}, {"u", j_perm(u)}, {"v", j_perm(v)}, {"leq", leq}},
         std::string(leq ? "true" : "false") + "\n");
  } else if (cmd_schubert->parsed()) {
    Permutation w = parse_permutation(arg_u);
    Polynomial f = schubert(w);
    emit(opt.as_json,
         {{"command", "schubert"}, {"input", j_perm(w)}, {"polynomial", j_poly(f)}},
         f.to_string() + "\n");
  } else if (cmd_invs->parsed()) {
    Involution y = parse_involution(arg_u);
    Polynomial f = inv_schubert(y);
    emit(opt.as_json,
         {{"command", "inv-schubert"}, {"input", j_inv(y)}, {"polynomial", j_poly(f)}},
         f.to_string() + "\n");
  } else if (cmd_atoms->parsed()) {
    Involution y = parse_involution(arg_u);
    auto ws = atoms(y);
    json items = json::array();
    std::vector<std::string> lines;
    for (const Permutation& w : ws) {
      items.push_back(j_perm(w));
      lines.push_back(format_permutation(w));
    }
    emit(opt.as_json,
         {{"command", "atoms"}, {"input", j_inv(y)}, {"atoms", items}},
         join_lines(lines));
  } else if (cmd_invwords->parsed()) {
    Involution y = parse_involution(arg_u);
    json items = json::array();
    std::vector<std::string> lines;
    for (const Word& a : involution_words(y)) {
      items.push_back(j_word(a));
      lines.push_back(format_word(a));
    }
    emit(opt.as_json,
         {{"command", "invwords"}, {"input", j_inv(y)}, {"words", items}},
         join_lines(lines));
  } else if (cmd_tau->parsed()) {
    Involution y = parse_involution(arg_u);
    Involution z = tau(arg_i, arg_j, y);
    emit(opt.as_json,
         {{"command", "tau"}, {"i", arg_i}, {"j", arg_j}, {"input", j_inv(y)},
          {"target", j_inv(z)}, {"covers", tau_covers(arg_i, arg_j, y)}},
         format_cycles(z) + "\n");
  } else if (cmd_phi->parsed()) {
    Involution y = parse_involution(arg_u);
    auto zs = flag_minus ? phi_minus(y, arg_r) : phi_plus(y, arg_r);
    json items = json::array();
    std::vector<std::string> lines;
    for (const Involution& z : zs) {
      items.push_back(j_inv(z));
      lines.push_back(format_cycles(z));
    }
    emit(opt.as_json,
         {{"command", "phi"}, {"sign", flag_minus ? "minus" : "plus"},
          {"input", j_inv(y)}, {"r", arg_r}, {"covers", items}},
         join_lines(lines));
  } else if (cmd_trans->parsed()) {
    if (arg_inv.empty() == arg_fpf.empty())
      throw CLI::ValidationError("transition", "pass exactly one of --inv / --fpf");
    json jplus = json::array(), jminus = json::array();
    std::vector<std::string> plus_texts, minus_texts;
    json j{{"command", "transition"}, {"p", arg_p}};
    Polynomial lhs, rhs;
    if (!arg_inv.empty()) {
      Involution y = parse_involution(arg_inv);
      auto r = transition_inv(y, arg_p, y(arg_p));
      for (const Involution& z : r.plus_set) {
        jplus.push_back(j_inv(z));
        plus_texts.push_back(format_cycles(z));
      }
      for (const Involution& z : r.minus_set) {
        jminus.push_back(j_inv(z));
        minus_texts.push_back(format_cycles(z));
      }
      j["flavor"] = "inv";
      j["input"] = j_inv(y);
      j["q"] = y(arg_p);
      lhs = r.lhs;
      rhs = r.rhs;
    } else {
      FpfInvolution z = parse_fpf(arg_fpf);
      auto r = transition_fpf(z, arg_p, z(arg_p));
      for (const FpfInvolution& x : r.plus_set) {
        jplus.push_back(j_fpf(x));
        plus_texts.push_back(format_fpf(x));
      }
      for (const FpfInvolution& x : r.minus_set) {
        jminus.push_back(j_fpf(x));
        minus_texts.push_back(format_fpf(x));
      }
      j["flavor"] = "fpf";
      j["input"] = j_fpf(z);
      j["q"] = z(arg_p);
      lhs = r.lhs;
      rhs = r.rhs;
    }
    j["plus"] = jplus;
    j["minus"] = jminus;
    j["lhs"] = j_poly(lhs);
    j["rhs"] = j_poly(rhs);
    std::string plain = "lhs: " + lhs.to_string() + "\n";
    plain += "plus:";
    for (const std::string& t : plus_texts) plain += " " + t;
    plain += "\nminus:";
    for (const std::string& t : minus_texts) plain += " " + t;
    plain += "\nrhs: " + rhs.to_string() + "\n";
    emit(opt.as_json, j, plain);
  } else if (cmd_fatoms->parsed()) {
    FpfInvolution z = parse_fpf(arg_u);
    json items = json::array();
    std::vector<std::string> lines;
    for (const Permutation& w : fpf_atoms(z)) {
      items.push_back(j_perm(w));
      lines.push_back(format_permutation(w));
    }
    emit(opt.as_json,
         {{"command", "fpf-atoms"}, {"input", j_fpf(z)}, {"atoms", items}},
         join_lines(lines));
  } else if (cmd_fschub->parsed()) {
    FpfInvolution z = parse_fpf(arg_u);
    Polynomial f = fpf_schubert(z);
    emit(opt.as_json,
         {{"command", "fpf-schubert"}, {"input", j_fpf(z)}, {"polynomial", j_poly(f)}},
         f.to_string() + "\n");
  } else if (cmd_bump->parsed()) {
    if (arg_inv.empty() == arg_fpf.empty())
      throw CLI::ValidationError("bump", "pass exactly one of --inv / --fpf");
    Word word = parse_word(arg_word);
    json j{{"command", "bump"}};
    MarkedWord result;
    MarkedWord start;
    bool marked = cmd_bump->count("--mark") > 0;
    if (!arg_inv.empty()) {
      Involution y = parse_involution(arg_inv);
      start = {word, marked ? arg_mark : infer_mark(word, y)};
      result = bump(start, y);
      j["flavor"] = "inv";
      j["target"] = j_inv(y);
    } else {
      FpfInvolution z = parse_fpf(arg_fpf);
      start = {word, marked ? arg_mark : infer_mark(word, z)};
      result = bump(start, z);
      j["flavor"] = "fpf";
      j["target"] = j_fpf(z);
    }
    j["input"] = j_marked(start);
    j["result"] = j_marked(result);
    emit(opt.as_json, j,
         "word: " + format_word(result.word) + "\nmark: " +
             std::to_string(result.mark) + "\n");
  } else if (cmd_verify->parsed()) {
    SweepOptions sopts;
    sopts.workers = opt.workers;
    sopts.big = opt.big;
    sopts.log = &std::cerr;  // failures stream as they are found
    SweepReport report = run_suite(arg_suite, sopts);
    std::cerr << "# " << report.suite << ": " << report.wall_time << "s with "
              << sopts.workers << " worker(s)\n";
    if (opt.as_json) {
      json j{{"command", "verify"},
             {"suite", report.suite},
             {"universe", report.universe_size},
             {"checked", report.checked},
             {"failures", report.failures},
             {"result", report.passed() ? "pass" : "fail"}};
      std::cout << j.dump(2) << "\n";
    } else {
      std::cout << report.canonical_text();
    }
    return report.passed() ? 0 : 1;
  } else if (cmd_list->parsed()) {
    auto suites = list_suites();
    json items = json::array();
    std::string plain;
    for (const SuiteInfo& s : suites) {
      items.push_back({{"name", s.name}, {"description", s.description},
                       {"big", s.big}});
      plain += s.name + (s.big ? " [big]" : "") + ": " + s.description + "\n";
    }
    emit(opt.as_json, {{"command", "list-suites"}, {"suites", items}}, plain);
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const std::exception& e) {
    // bad arguments of every stripe: unparseable objects, unknown suites,
    // rank caps, post-parse validation
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
