#pragma once

#include "regalia/ainvariants.hpp"
#include "regalia/betti.hpp"
#include "regalia/extint.hpp"

#include <string>
#include <vector>

namespace regalia {

/// How a theorem hypothesis was established for a given input: machine
/// verified, asserted by the caller (recorded, unverifiable here), or
/// checked and found false.
enum class HypStatus { verified, asserted, failed };

struct Hypothesis {
  std::string name;
  HypStatus status = HypStatus::verified;
  std::string note;
};

/// One checked (in)equality, both sides exact extended integers.
struct Relation {
  std::string name;
  ExtInt lhs;
  std::string rel;  // "<=", "=" or ">="
  ExtInt rhs;
  bool satisfied = false;
};

/// Builds the relation and evaluates it.
Relation make_relation(std::string name, ExtInt lhs, std::string rel, ExtInt rhs);

enum class Verdict { holds, violated, vacuous, truncated };

std::string verdict_name(Verdict v);
std::string hyp_status_name(HypStatus s);

/// The outcome of running one theorem checker on one input.
///
/// Verdict policy (finalize):
///   - any failed hypothesis              -> vacuous (theorem says nothing);
///   - relations unsatisfied, every
///     hypothesis machine-verified        -> violated (build-stopping);
///   - relations unsatisfied, some
///     hypothesis merely asserted         -> vacuous + counterexample_candidate
///     (the input deserves scrutiny, but nothing proven false);
///   - relations unsatisfied because data
///     was cut by a resolution cap        -> truncated;
///   - everything satisfied               -> holds (or truncated if the data
///     was capped before the full claim could be evaluated).
struct TheoremReport {
  std::string theorem;  ///< checker id, e.g. "regfpd"
  std::string input;    ///< human-readable description of the instance
  std::vector<Hypothesis> hypotheses;
  std::vector<Relation> relations;
  Verdict verdict = Verdict::holds;
  bool counterexample_candidate = false;
  std::string note;

  void add_hypothesis(std::string name, HypStatus status, std::string note = "");
  void add_relation(std::string name, ExtInt lhs, std::string rel, ExtInt rhs);
  /// Applies the verdict policy; data_truncated records that a cap cut data
  /// the claim needed.
  void finalize(bool data_truncated = false);
  bool all_hypotheses_verified() const;
};

/// One-line JSON object (stable key order; deterministic bytes).
std::string report_json(const TheoremReport& r);
/// Aligned one-line human summary.
std::string report_summary(const TheoremReport& r);

/// {"betti": [[i, j, rank], ...], "reg": r} with entries sorted by (i, j).
std::string betti_json(const BettiTable& b);
/// {"a": {"0": a_0, ...}, "reg": r, "cd": c}; infinite values appear as the
/// strings "-inf"/"inf".
std::string ainvariants_json(const AInvariants& a);

}  // namespace regalia
