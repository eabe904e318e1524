#pragma once

#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace regalia {

/// Batch-session front end: parse a line-oriented script of ring / ideal /
/// module declarations and commands, run the commands, and emit one JSON
/// object per command (JSON lines) plus a human-readable summary.
///
/// Grammar — statements end with ';', '#' starts a comment:
///
///   ring   R = poly(QQ, 3);            # or poly(GF(p), n), p prime
///   ring   S = R/(x0*x1);              # quotient of a declared polynomial ring
///   ideal  I = (x0^2, x0*x1) in R;     # "in R" defaults to the last ring
///   module M = R/I;                    # cyclic module
///   module N = S/(x0);                 # cyclic with inline generators
///   module F = free(R, 0, -1);         # free module with generator twists
///   window -2..8;  seed 42;  cap 12;   # session-wide settings
///
///   [cmd] betti <module>  [--cap N];
///   [cmd] reg <module>    [--cap N];
///   [cmd] ainv <module>;
///   [cmd] tor <module> <module> ... [--imax N] [--cap N];
///   [cmd] frobenius <module> [--emax N];     # prime characteristic only
///   [cmd] power <ideal> [--mmax N];
///   [cmd] saturate <ideal>;
///   [cmd] kahler <ring>;
///   [cmd] verify <theorem> <args> [flags];
///
/// Theorem ids and their arguments:
///   regfpd M [--cap N]            regtor M N .. [--cap N]
///   rigidity M N .. [--cap N]     frobenius M [--emax N] [--assert ..]
///   power1 I [--mmax N]           power2 I [--jmax N] [--assert ..]
///   koszul M (f1, ..)             nonacyclic M (f1, ..)
///   betti_transfer M [--imax N] [--cap N]
///   intersect I J .. [--assert ..]
///   kahler S [--assert ..]
///
/// Hypotheses the engine cannot decide are vouched for per command with
/// `--assert name=true` (repeatable, or comma-separated):
///   frobenius: equidimensional          power2: generically_ci
///   intersect: proper, local_cm, small_singular_intersection
///   kahler: generically_ci, generically_reduced, reduced_ci_off_points
///
/// A <module> argument is a declared module name, a declared ring name (the
/// ring viewed as a module over its ambient polynomial ring), R/I with
/// declared names, or R/(f1, .., fk) with inline generators.  An <ideal>
/// argument is a declared ideal name.
struct SessionError {
  int line = 0;    // 1-based
  int column = 0;  // 1-based
  std::string message;
};

/// One line per error: "line L, column C: message".
std::string format_errors(const std::vector<SessionError>& errors);

struct SessionSpecImpl;

/// A parsed and validated session script.  Parsing never throws: syntax and
/// validation problems are collected into errors() with source positions.
class SessionSpec {
 public:
  SessionSpec() = default;

  bool ok() const { return errors_.empty(); }
  const std::vector<SessionError>& errors() const { return errors_; }
  int command_count() const;

  /// Settings from the script, if present (last occurrence wins).
  std::optional<std::pair<int, int>> window() const;
  std::optional<long long> seed() const;
  std::optional<int> cap() const;

 private:
  friend SessionSpec parse_session(const std::string& text);
  friend struct SessionRunner;
  std::shared_ptr<const SessionSpecImpl> impl_;
  std::vector<SessionError> errors_;
};

SessionSpec parse_session(const std::string& text);

/// Runtime overrides; unset fields fall back to the script's settings.
struct SessionOptions {
  std::optional<std::pair<int, int>> window;  // Hilbert-function display range
  std::optional<int> cap;                     // resolution length cap
  std::optional<long long> seed;              // recorded in the output
  bool parallel = false;  // run commands concurrently, output in script order
};

struct CommandOutput {
  int index = 0;        // 0-based position among the script's commands
  std::string name;     // "betti", "verify regtor", ...
  std::string input;    // rendered arguments, e.g. "R/I" or "M, N"
  std::string json;     // one JSON object on a single line
  std::string human;    // human-readable block
  std::string verdict;  // verify commands only ("holds", "vacuous", ...)
  bool violated = false;
  bool failed = false;  // the command threw; json carries the error message
};

/// Results of one session run.  Exit codes: 0 = clean (truncated data still
/// counts as clean), 1 = a violated verdict or a failed command, 2 = parse or
/// validation errors (nothing ran).
struct SessionResult {
  std::vector<SessionError> errors;
  std::vector<CommandOutput> commands;
  long long seed = 0;

  /// One JSON line per command, in script order, then one summary line.
  std::string json_lines() const;
  /// Human-readable report: one block per command plus a verdict table.
  std::string summary() const;
  int exit_code() const;
};

SessionResult run_session(const SessionSpec& spec, const SessionOptions& opts = {});

/// parse_session + run_session in one call.
SessionResult run_session_text(const std::string& text, const SessionOptions& opts = {});

}  // namespace regalia
