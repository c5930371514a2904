#pragma once

#include <chrono>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "orchard/io.hpp"
#include "orchard/sign_function.hpp"

namespace orchard {

enum class Proposition {
  Triple,                // triple parity identity, plus transitivity and <= 2 classes
  Flip,                  // a flip swaps classes exactly across the flipset
  Mu,                    // mu parity decides the relation (symmetric)
  Reduce,                // relation of reduce(f): trivial for even d, equal for odd d
  Augment,               // relation of augment(f): trivial iff n == d mod 2, else equal
  RrSign,                // reduce(reduce(f)) is the constant eps^C(n-d+1, 2)
  AaPositive,            // augment(augment(f)) is identically +1
  Homology,              // F2 complex homology is [1, 0, ..., 0] and rho * rho = 0
  TournamentClosedForm,  // closed-form n(i,j) and mod-4 criterion vs brute force
  ScoreParity,           // score parity partition equals the orchard partition
};

std::string_view to_string(Proposition p) noexcept;
/// Accepts the ids used on the command line ("triple", "rr-sign", ...).
Proposition parse_proposition(std::string_view id);
const std::vector<Proposition>& all_propositions();

/// One swept parameter point. For Homology only `n` is meaningful; the
/// tournament propositions use arity 2, antisymmetric.
struct SweepConfig {
  int n = 0;
  int arity = 0;
  SymmetryKind kind = SymmetryKind::Symmetric;
};

struct VerifyOptions {
  Proposition proposition = Proposition::Triple;
  int n_min = 4;
  int n_max = 8;
  /// d = arity - 1.
  int d_min = 1;
  int d_max = 3;
  int trials = 200;
  std::uint64_t seed = 1;
  /// Skip the desk-scale guardrails (n <= 12, C(n, arity) <= 10^6).
  bool unsafe = false;
};

/// What a failing trial hands back: a message and the data needed to re-run it.
struct TrialFailure {
  std::string detail;
  io::Json witness;
};

struct Failure {
  SweepConfig config;
  std::uint64_t trial = 0;
  std::uint64_t trial_seed = 0;
  TrialFailure failure;
};

struct ConfigResult {
  SweepConfig config;
  int trials = 0;
  int failures = 0;
  io::Json extra;  // per-proposition data, e.g. homology dimensions
};

struct VerificationReport {
  Proposition proposition = Proposition::Triple;
  std::uint64_t seed = 0;
  int trials = 0;
  std::vector<ConfigResult> configurations;
  std::vector<Failure> failures;  // at most max_recorded_failures kept
  int total_failures = 0;
  /// Wall-clock time; deliberately absent from to_json so reports stay
  /// byte-identical across runs.
  std::chrono::duration<double> elapsed{};

  bool passed() const noexcept { return total_failures == 0; }
};

inline constexpr int max_recorded_failures = 20;

/// Throws input_error on empty ranges, nonpositive trials or, unless
/// `unsafe`, ranges beyond the guardrails.
void check_guardrails(const VerifyOptions& options);

/// The configurations a proposition sweeps for the given ranges, in report order.
std::vector<SweepConfig> sweep_configs(const VerifyOptions& options);

/// Seed of one trial; depends only on (seed, proposition, config, trial).
std::uint64_t trial_seed(std::uint64_t seed, Proposition p, const SweepConfig& c,
                         std::uint64_t trial);

/// Runs a single trial; std::nullopt means the proposition held.
std::optional<TrialFailure> run_trial(Proposition p, const SweepConfig& c,
                                      std::uint64_t trial_seed);

using TrialFn =
    std::function<std::optional<TrialFailure>(const SweepConfig&, std::uint64_t trial_seed)>;

/// Generic sweep driver: every config gets `trials` trials of `fn`, seeded
/// by trial_seed(). Exposed separately so the report plumbing can be tested
/// with synthetic failures.
VerificationReport run_sweep(Proposition p, std::uint64_t seed, int trials,
                             const std::vector<SweepConfig>& configs, const TrialFn& fn);

VerificationReport verify(const VerifyOptions& options);

io::Json to_json(const VerificationReport& report);

}  // namespace orchard
