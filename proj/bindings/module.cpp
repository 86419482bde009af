// Python bindings.  Thin and direct: the classes keep their C++ API, the
// free functions live at module level, and text formatting reuses the same
// parsers and formatters as the command-line tool, so objects print in the
// exact form the parsers accept.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "invschub/fpf.hpp"
#include "invschub/inv_schubert.hpp"
#include "invschub/involution.hpp"
#include "invschub/io.hpp"
#include "invschub/little.hpp"
#include "invschub/permutation.hpp"
#include "invschub/polynomial.hpp"
#include "invschub/sweeps.hpp"
#include "invschub/tau.hpp"

namespace py = pybind11;
using namespace invschub;

PYBIND11_MODULE(_core, m) {
  m.doc() = "involution Schubert calculus: permutations, polynomials, "
            "transition formulas and verification sweeps";
  m.attr("__version__") = "0.1.0";

  py::register_exception<check_error>(m, "CheckError");

  py::enum_<Side>(m, "Side")
      .value("right", Side::right)
      .value("left", Side::left);

  py::class_<Transposition>(m, "Transposition")
      .def(py::init<int, int>(), py::arg("a"), py::arg("b"))
      .def_readonly("a", &Transposition::a)
      .def_readonly("b", &Transposition::b)
      .def("__eq__", [](const Transposition& t, const Transposition& o) { return t == o; })
      .def("__repr__", [](const Transposition& t) {
        return "(" + std::to_string(t.a) + "," + std::to_string(t.b) + ")";
      });

  py::class_<Permutation>(m, "Permutation")
      .def(py::init<>())
      .def(py::init([](const std::vector<int>& images, int start) {
             return Permutation::from_one_line(images, start);
           }),
           py::arg("one_line"), py::arg("start") = 1)
      .def_static("from_moved", &Permutation::from_moved)
      .def_static("from_one_line", &Permutation::from_one_line,
                  py::arg("images"), py::arg("start") = 1)
      .def_static("identity", &Permutation::identity)
      .def_static("simple", &Permutation::simple)
      .def_static("transposition", &Permutation::transposition)
      .def_static("cycle", &Permutation::cycle)
      .def_static("from_word", &Permutation::from_word)
      .def("__call__", &Permutation::operator())
      .def("moved", &Permutation::moved)
      .def("is_identity", &Permutation::is_identity)
      .def("is_involution", &Permutation::is_involution)
      .def("support", &Permutation::support)
      .def("min_support", &Permutation::min_support)
      .def("max_support", &Permutation::max_support)
      .def("one_line", &Permutation::one_line, py::arg("lo"), py::arg("hi"))
      .def("__mul__", &compose)
      .def("__eq__", [](const Permutation& w, const Permutation& o) { return w == o; })
      .def("__lt__", [](const Permutation& w, const Permutation& o) { return w < o; })
      .def("__hash__", [](const Permutation& w) { return std::hash<Permutation>()(w); })
      .def("__repr__", [](const Permutation& w) { return format_permutation(w); });

  m.def("compose", &compose);
  m.def("inverse", &inverse);
  m.def("length", &length);
  m.def("descents",
        py::overload_cast<const Permutation&, Side>(&descents),
        py::arg("w"), py::arg("side") = Side::right);
  m.def("has_descent", &has_descent, py::arg("w"), py::arg("i"),
        py::arg("side") = Side::right);
  m.def("bruhat_leq", &bruhat_leq);
  m.def("covers", &covers);
  m.def("demazure", &demazure);
  m.def("demazure_simple", &demazure_simple);
  m.def("flatten", &flatten);
  m.def("shift", &shift);
  m.def("reduced_words", &reduced_words);
  m.def("canonical_word", &canonical_word);
  m.def("is_reduced_word", &is_reduced_word);

  py::class_<Involution>(m, "Involution")
      .def(py::init<>())
      .def(py::init<const Permutation&>())
      .def_static("identity", &Involution::identity)
      .def_static("from_pairs", &Involution::from_pairs)
      .def("__call__", &Involution::operator())
      .def("perm", &Involution::perm)
      .def("is_identity", &Involution::is_identity)
      .def("two_cycles", &Involution::two_cycles)
      .def("cycles_in", &Involution::cycles_in, py::arg("lo"), py::arg("hi"))
      .def("__eq__", [](const Involution& y, const Involution& o) { return y == o; })
      .def("__lt__", [](const Involution& y, const Involution& o) { return y < o; })
      .def("__hash__", [](const Involution& y) { return std::hash<Involution>()(y); })
      .def("__repr__", [](const Involution& y) { return format_cycles(y); });

  m.def("kappa", &kappa);
  m.def("hat_length", &hat_length);
  m.def("demazure_conjugate", &demazure_conjugate);
  m.def("atoms", &atoms);
  m.def("atoms_by_peeling", &atoms_by_peeling);
  m.def("involution_words", &involution_words);
  m.def("is_atom_of", &is_atom_of);
  m.def("is_involution_word",
        py::overload_cast<const Word&, const Involution&>(&is_involution_word));
  m.def("is_involution_word", py::overload_cast<const Word&>(&is_involution_word));
  m.def("involution_of_word", &involution_of_word);
  m.def("inv_bruhat_leq", &inv_bruhat_leq);
  m.def("inv_covers", &inv_covers);

  py::class_<Monomial>(m, "Monomial")
      .def(py::init<>())
      .def(py::init<std::vector<int>>())
      .def_static("one", &Monomial::one)
      .def_static("x", &Monomial::x, py::arg("var"), py::arg("exp") = 1)
      .def("exp", &Monomial::exp)
      .def("degree", &Monomial::degree)
      .def("max_var", &Monomial::max_var)
      .def("exps", &Monomial::exps)
      .def("__mul__", &Monomial::operator*)
      .def("__eq__", [](const Monomial& a, const Monomial& b) { return a == b; })
      .def("__lt__", [](const Monomial& a, const Monomial& b) { return a < b; })
      .def("__repr__", [](const Monomial& a) {
        return Polynomial::term(1, a).to_string();
      });

  py::class_<Polynomial>(m, "Polynomial")
      .def(py::init<>())
      .def(py::init<long long>())
      .def_static("term", &Polynomial::term)
      .def_static("x", &Polynomial::x)
      .def_static("parse", &Polynomial::parse)
      .def("is_zero", &Polynomial::is_zero)
      .def("degree", &Polynomial::degree)
      .def("coeff", &Polynomial::coeff)
      .def("is_homogeneous", &Polynomial::is_homogeneous)
      .def("terms",
           [](const Polynomial& f) {
             std::vector<std::pair<Monomial, long long>> out(f.terms().begin(),
                                                             f.terms().end());
             return out;
           })
      .def("act", &Polynomial::act)
      .def("__add__", &Polynomial::operator+)
      .def("__sub__",
           py::overload_cast<const Polynomial&>(&Polynomial::operator-, py::const_))
      .def("__neg__", py::overload_cast<>(&Polynomial::operator-, py::const_))
      .def("__mul__",
           py::overload_cast<const Polynomial&>(&Polynomial::operator*, py::const_))
      .def("__mul__", py::overload_cast<long long>(&Polynomial::operator*, py::const_))
      .def("__rmul__", py::overload_cast<long long>(&Polynomial::operator*, py::const_))
      .def("__eq__", [](const Polynomial& f, const Polynomial& g) { return f == g; })
      .def("__str__", &Polynomial::to_string)
      .def("__repr__", &Polynomial::to_string)
      .def("to_string", &Polynomial::to_string);

  m.def("ddiff", &ddiff);
  m.def("schubert", &schubert);
  m.def("schubert_window_cap", &schubert_window_cap);
  m.def("set_schubert_window_cap", &set_schubert_window_cap);
  m.def("x_pair", &x_pair);

  m.def("tau", &tau);
  m.def("tau_covers", &tau_covers);
  m.def("phi_plus", py::overload_cast<const Involution&, int>(&phi_plus));
  m.def("phi_plus", py::overload_cast<const Permutation&, int>(&phi_plus));
  m.def("phi_minus", py::overload_cast<const Involution&, int>(&phi_minus));
  m.def("phi_minus", py::overload_cast<const Permutation&, int>(&phi_minus));
  m.def("transition_target", &transition_target);
  m.def("mirror_pair", &mirror_pair);

  py::class_<TransitionResult>(m, "TransitionResult")
      .def_readonly("plus_set", &TransitionResult::plus_set)
      .def_readonly("minus_set", &TransitionResult::minus_set)
      .def_readonly("lhs", &TransitionResult::lhs)
      .def_readonly("rhs", &TransitionResult::rhs);

  m.def("inv_schubert", &inv_schubert);
  m.def("upsilon", &upsilon);
  m.def("longest_inv_product", &longest_inv_product);
  m.def("transition_inv", &transition_inv);

  py::class_<FpfInvolution>(m, "FpfInvolution")
      .def(py::init<>())
      .def_static("from_pairs", &FpfInvolution::from_pairs)
      .def_static("from_one_line", &FpfInvolution::from_one_line,
                  py::arg("images"), py::arg("start") = 1)
      .def("__call__", &FpfInvolution::operator())
      .def("window_lo", &FpfInvolution::window_lo)
      .def("window_hi", &FpfInvolution::window_hi)
      .def("is_theta", &FpfInvolution::is_theta)
      .def("window_matching", &FpfInvolution::window_matching)
      .def("two_cycles", &FpfInvolution::two_cycles)
      .def("cycles_in", &FpfInvolution::cycles_in, py::arg("lo"), py::arg("hi"))
      .def("window_perm", &FpfInvolution::window_perm, py::arg("lo"), py::arg("hi"))
      .def("__eq__",
           [](const FpfInvolution& z, const FpfInvolution& o) { return z == o; })
      .def("__lt__",
           [](const FpfInvolution& z, const FpfInvolution& o) { return z < o; })
      .def("__hash__",
           [](const FpfInvolution& z) { return std::hash<FpfInvolution>()(z); })
      .def("__repr__", [](const FpfInvolution& z) { return format_fpf(z); });

  py::enum_<PsiSign>(m, "PsiSign")
      .value("plus", PsiSign::plus)
      .value("minus", PsiSign::minus);

  py::class_<FpfTransitionResult>(m, "FpfTransitionResult")
      .def_readonly("plus_set", &FpfTransitionResult::plus_set)
      .def_readonly("minus_set", &FpfTransitionResult::minus_set)
      .def_readonly("lhs", &FpfTransitionResult::lhs)
      .def_readonly("rhs", &FpfTransitionResult::rhs);

  m.def("theta", &theta);
  m.def("theta_conjugate", &theta_conjugate);
  m.def("fpf_conjugate", &fpf_conjugate);
  m.def("fpf_length", &fpf_length);
  m.def("fpf_descents", &fpf_descents);
  m.def("is_fpf_descent", &is_fpf_descent);
  m.def("fpf_atoms", &fpf_atoms);
  m.def("fpf_words", &fpf_words);
  m.def("is_fpf_atom", &is_fpf_atom);
  m.def("is_fpf_word",
        py::overload_cast<const Word&, const FpfInvolution&>(&is_fpf_word));
  m.def("is_fpf_word", py::overload_cast<const Word&>(&is_fpf_word));
  m.def("fpf_cover", &fpf_cover);
  m.def("fpf_bruhat_leq", &fpf_bruhat_leq);
  m.def("psi", &psi);
  m.def("fpf_schubert", &fpf_schubert);
  m.def("transition_fpf", &transition_fpf);
  m.def("fpf_reversal", &fpf_reversal);
  m.def("longest_fpf_product", &longest_fpf_product);

  py::class_<MarkedWord>(m, "MarkedWord")
      .def(py::init([](Word word, int mark) {
             return MarkedWord{std::move(word), mark};
           }),
           py::arg("word"), py::arg("mark") = 1)
      .def_readwrite("word", &MarkedWord::word)
      .def_readwrite("mark", &MarkedWord::mark)
      .def("__eq__", [](const MarkedWord& a, const MarkedWord& b) { return a == b; })
      .def("__repr__", [](const MarkedWord& mw) {
        return format_word(mw.word) + " @ " + std::to_string(mw.mark);
      });

  py::enum_<WordStatus>(m, "WordStatus")
      .value("reduced", WordStatus::reduced)
      .value("semi_reduced", WordStatus::semi_reduced)
      .value("nearly_reduced_strict", WordStatus::nearly_reduced_strict)
      .value("not_word", WordStatus::not_word);

  m.def("delete_at", &delete_at);
  m.def("classify",
        py::overload_cast<const MarkedWord&, const Involution&>(&classify));
  m.def("classify",
        py::overload_cast<const MarkedWord&, const FpfInvolution&>(&classify));
  m.def("step_down",
        py::overload_cast<const MarkedWord&, const Involution&>(&step_down));
  m.def("step_down",
        py::overload_cast<const MarkedWord&, const FpfInvolution&>(&step_down));
  m.def("step_up",
        py::overload_cast<const MarkedWord&, const Involution&>(&step_up));
  m.def("step_up",
        py::overload_cast<const MarkedWord&, const FpfInvolution&>(&step_up));
  m.def("bump", py::overload_cast<const MarkedWord&, const Involution&>(&bump));
  m.def("bump", py::overload_cast<const MarkedWord&, const FpfInvolution&>(&bump));
  m.def("little_map",
        py::overload_cast<const Involution&, const Word&>(&little_map));
  m.def("little_map",
        py::overload_cast<const FpfInvolution&, const Word&>(&little_map));

  py::class_<BijectionReport>(m, "BijectionReport")
      .def_readonly("plus_covers", &BijectionReport::plus_covers)
      .def_readonly("minus_covers", &BijectionReport::minus_covers)
      .def_readonly("words", &BijectionReport::words);

  m.def("verify_bijection",
        py::overload_cast<const Involution&, int, int>(&verify_bijection));
  m.def("verify_bijection",
        py::overload_cast<const FpfInvolution&, int, int>(&verify_bijection));

  m.def("parse_permutation", &parse_permutation);
  m.def("parse_involution", &parse_involution);
  m.def("parse_fpf", &parse_fpf);
  m.def("parse_word", &parse_word);
  m.def("format_permutation", &format_permutation);
  m.def("format_cycles", &format_cycles);
  m.def("format_fpf", &format_fpf);
  m.def("format_word", &format_word);

  py::enum_<UniverseKind>(m, "UniverseKind")
      .value("perm", UniverseKind::perm)
      .value("inv", UniverseKind::inv)
      .value("fpf", UniverseKind::fpf);

  m.def("all_permutations", &all_permutations);
  m.def("all_involutions", &all_involutions);
  m.def("all_fpf_involutions", &all_fpf_involutions);
  m.def("universe_size", &universe_size);

  py::class_<SuiteInfo>(m, "SuiteInfo")
      .def_readonly("name", &SuiteInfo::name)
      .def_readonly("description", &SuiteInfo::description)
      .def_readonly("big", &SuiteInfo::big);

  py::class_<SweepReport>(m, "SweepReport")
      .def_readonly("suite", &SweepReport::suite)
      .def_readonly("universe_size", &SweepReport::universe_size)
      .def_readonly("checked", &SweepReport::checked)
      .def_readonly("failures", &SweepReport::failures)
      .def_readonly("wall_time", &SweepReport::wall_time)
      .def("passed", &SweepReport::passed)
      .def("canonical_text", &SweepReport::canonical_text);

  m.def("list_suites", &list_suites);
  m.def(
      "run_suite",
      [](const std::string& name, int workers, bool big) {
        SweepOptions opts;
        opts.workers = workers;
        opts.big = big;
        return run_suite(name, opts);
      },
      py::arg("name"), py::arg("workers") = 1, py::arg("big") = false,
      py::call_guard<py::gil_scoped_release>());
}
