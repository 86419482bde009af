#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include "invschub/fpf.hpp"
#include "invschub/involution.hpp"
#include "invschub/permutation.hpp"

namespace invschub {

/// Deterministic finite universes, ordered lexicographically by one-line
/// notation.  Every sweep walks one of these (or a fixed list of named
/// checks), so that runs are reproducible item by item.
std::vector<Permutation> all_permutations(int n);       // n <= 9
std::vector<Involution> all_involutions(int n);         // support in [1,n], n <= 10
std::vector<FpfInvolution> all_fpf_involutions(int n);  // window [1,n], n even <= 12

enum class UniverseKind { perm, inv, fpf };

/// Size of the corresponding universe, computed without materializing it.
/// Same rank caps as the enumerators.
long long universe_size(UniverseKind kind, int n);

/// Thrown for an unknown suite name or for a gated suite run without its
/// flag.  Callers should treat this as a usage error, distinct from a sweep
/// that ran and found failures.
struct suite_error : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct SuiteInfo {
  std::string name;
  std::string description;
  bool big = false;  // only runs when SweepOptions::big is set
};

/// Registered suites in registry order (aliases are not listed).
std::vector<SuiteInfo> list_suites();

struct SweepOptions {
  int workers = 1;
  bool big = false;             // unlock the hours-scale variants
  std::ostream* log = nullptr;  // failures are streamed here as they appear
};

/// Outcome of one suite run.  canonical_text() leaves the wall time out, so
/// the bytes agree across reruns and across worker counts.
struct SweepReport {
  std::string suite;
  long long universe_size = 0;
  long long checked = 0;
  std::vector<std::string> failures;  // merged in enumeration order
  double wall_time = 0.0;             // seconds

  bool passed() const { return failures.empty(); }
  std::string canonical_text() const;
};

/// Runs one suite, splitting the universe into contiguous index ranges over
/// the workers and merging failures back in enumeration order.  Accepts the
/// registered name or one of the aliases wy-n7 / wy-fpf-n8.
SweepReport run_suite(const std::string& name, const SweepOptions& opts = {});

}  // namespace invschub
