#pragma once

#include <cstddef>
#include <exception>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "gkmod/fundseries.hpp"

namespace gkmod {

enum ExitCode : int {
  exit_ok = 0,
  exit_internal = 1,
  exit_parse = 2,
  exit_validation = 3,
  exit_cap = 4,
  exit_verify_failed = 5,
};

const std::vector<std::string>& job_commands();

/// One job read from a configuration file. Keys:
///   lie_type        "A2", "B2", "A1xA1", ...
///   k               sl2 | cartan | levi | explicit
///   labels          Dynkin labels (k = sl2)
///   levi            1-based simple-root indices (k = levi)
///   restriction     rank(t) x rank(g) matrix (k = explicit)
///   k_simple_roots  t-coordinates of the simple roots of k (k = explicit)
///   k_coroots       coroot functionals on t* (k = explicit)
///   command         optional; must agree with the verb when both are given
///   mu | m          k-type highest weight; m is the sl2 shorthand mu = m rho
///   nu | omega      highest weight of E in h*, or its restriction to t
///   lambda          explicit parabolic parameter
///   cutoff          bound on ||delta + 2rho||^2 for fundseries tables
///   max_weyl        cap on Weyl group orders
/// Numbers are integers or "p/q" fractions.
struct JobSpec {
  std::string lie_type;
  std::string k_kind;
  std::vector<int> labels;
  std::set<int> levi;
  std::vector<RVector> restriction;
  std::vector<RVector> k_simple_roots;
  std::vector<RVector> k_coroots;
  std::string command;
  std::optional<RVector> mu;
  std::optional<Rational> m;
  std::optional<RVector> nu;
  std::optional<RVector> omega;
  std::optional<RVector> lambda;
  std::optional<Rational> cutoff;
  std::optional<std::size_t> max_weyl;
};

/// Throws ParseError on malformed text or unknown keys.
JobSpec parse_job(const std::string& text);
JobSpec load_job(const std::string& path);

struct JobResult {
  int exit_code = exit_ok;
  std::string human;
  std::string machine;  // JSON, keys sorted, fractions as "p/q"
};

/// Runs `job.command`. Library errors propagate; see exit_code_for.
JobResult run_job(const JobSpec& job);

int exit_code_for(const std::exception& err);

ReductivePair build_pair(const JobSpec& job);

}  // namespace gkmod
