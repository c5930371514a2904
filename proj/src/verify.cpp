#include "orchard/verify.hpp"

#include <array>
#include <exception>

#include "orchard/errors.hpp"
#include "orchard/operators.hpp"
#include "orchard/random.hpp"
#include "orchard/relation.hpp"
#include "orchard/tournament.hpp"

namespace orchard {

namespace {

struct PropositionName {
  Proposition p;
  std::string_view id;
};

constexpr std::array<PropositionName, 10> kNames{{
    {Proposition::Triple, "triple"},
    {Proposition::Flip, "flip"},
    {Proposition::Mu, "mu"},
    {Proposition::Reduce, "reduce"},
    {Proposition::Augment, "augment"},
    {Proposition::RrSign, "rr-sign"},
    {Proposition::AaPositive, "aa-positive"},
    {Proposition::Homology, "homology"},
    {Proposition::TournamentClosedForm, "tournament-closed-form"},
    {Proposition::ScoreParity, "score-parity"},
}};

constexpr int kMaxN = 12;
constexpr std::uint64_t kMaxSlots = 1'000'000;

io::Json witness_for(const SignFunction& f) {
  io::Json w;
  w["function"] = io::to_json(f);
  return w;
}

TrialFailure fail(std::string detail, io::Json witness) {
  return TrialFailure{std::move(detail), std::move(witness)};
}

std::string pair_text(int a, int b) {
  return "(" + std::to_string(a) + "," + std::to_string(b) + ")";
}

std::optional<TrialFailure> check_triple(const SignFunction& f) {
  const auto profile = separation_profile(f);
  const int threshold = threshold_parity(f);
  const int n = f.n();
  auto rel = [&](int a, int b) { return static_cast<int>(profile.count(a, b) % 2) == threshold; };
  for (int a = 1; a <= n; ++a)
    for (int b = a + 1; b <= n; ++b)
      for (int c = b + 1; c <= n; ++c) {
        const auto sum = profile.count(a, b) + profile.count(b, c) + profile.count(a, c);
        if (static_cast<int>(sum % 2) != threshold)
          return fail("triple parity identity fails at " + pair_text(a, b) + "," +
                          std::to_string(c),
                      witness_for(f));
        // All three orderings of the transitivity implication.
        const bool ab = rel(a, b), bc = rel(b, c), ac = rel(a, c);
        if ((ab && bc && !ac) || (ab && ac && !bc) || (bc && ac && !ab))
          return fail("relation not transitive on {" + std::to_string(a) + "," +
                          std::to_string(b) + "," + std::to_string(c) + "}",
                      witness_for(f));
      }
  partition(f, profile);  // throws consistency_error if more than two classes
  return std::nullopt;
}

std::optional<TrialFailure> check_flip(const SignFunction& f, std::uint64_t ts) {
  Rng rng(derive_seed(ts, {1}));
  const auto F = colex_unrank(rng.below(binomial(f.n(), f.arity())), f.n(), f.arity());
  const auto before = partition(f);
  const auto after = partition(flip(f, F));
  for (int a = 1; a <= f.n(); ++a)
    for (int b = a + 1; b <= f.n(); ++b) {
      const bool across = F.contains(a) != F.contains(b);
      if (before.same_class(a, b) != (after.same_class(a, b) != across)) {
        auto w = witness_for(f);
        w["flipset"] = F.elements();
        return fail("flip law fails for pair " + pair_text(a, b), std::move(w));
      }
    }
  return std::nullopt;
}

std::optional<TrialFailure> check_mu(const SignFunction& f) {
  const auto profile = separation_profile(f);
  std::vector<std::uint64_t> m(static_cast<std::size_t>(f.n()) + 1);
  for (int x = 1; x <= f.n(); ++x) m[x] = mu(f, x);
  for (int a = 1; a <= f.n(); ++a)
    for (int b = a + 1; b <= f.n(); ++b) {
      const bool rel = profile.count(a, b) % 2 == 0;
      if (rel != (m[a] % 2 == m[b] % 2))
        return fail("mu parity disagrees with the relation at " + pair_text(a, b),
                    witness_for(f));
    }
  return std::nullopt;
}

std::optional<TrialFailure> check_reduce(const SignFunction& f) {
  const auto pr = partition(reduce(f));
  if (f.d() % 2 == 0) {
    if (!pr.is_single_class())
      return fail("reduced relation is not trivial for even d", witness_for(f));
  } else if (pr != partition(f)) {
    return fail("reduced relation differs from the original for odd d", witness_for(f));
  }
  return std::nullopt;
}

std::optional<TrialFailure> check_augment(const SignFunction& f) {
  const auto pa = partition(augment(f));
  if (f.n() % 2 == f.d() % 2) {
    if (!pa.is_single_class())
      return fail("augmented relation is not trivial for n == d mod 2", witness_for(f));
  } else if (pa != partition(f)) {
    return fail("augmented relation differs from the original", witness_for(f));
  }
  return std::nullopt;
}

std::optional<TrialFailure> check_rr_sign(const SignFunction& f) {
  const bool odd_exponent = binomial(f.n() - f.d() + 1, 2) % 2 == 1;
  const int expected = (f.kind() == SymmetryKind::Antisymmetric && odd_exponent) ? -1 : 1;
  const int got = double_reduce_constant(f);
  if (got != expected)
    return fail("R(R f) constant is " + std::to_string(got) + ", expected " +
                    std::to_string(expected),
                witness_for(f));
  return std::nullopt;
}

std::optional<TrialFailure> check_homology(int n) {
  const auto c = build_f2_complex(n);
  std::vector<int> expected(static_cast<std::size_t>(n), 0);
  expected[0] = 1;
  io::Json w;
  w["n"] = n;
  if (c.homology_dims != expected)
    return fail("homology is not that of a point", w);
  for (int k = 2; k <= n; ++k)
    if (!(c.rho(k - 1) * c.rho(k)).is_zero())
      return fail("rho_" + std::to_string(k - 1) + " * rho_" + std::to_string(k) + " != 0", w);
  return std::nullopt;
}

std::optional<TrialFailure> check_tournament(const Tournament& t, bool closed_form) {
  const auto f = tournament_to_signfn(t);
  auto witness = [&] {
    io::Json w;
    w["tournament"] = io::to_json(t);
    return w;
  };
  if (closed_form) {
    for (int i = 1; i <= t.n(); ++i)
      for (int j = i + 1; j <= t.n(); ++j) {
        if (closed_form_separation(t, i, j) != separation_count(f, i, j))
          return fail("closed-form separation differs at " + pair_text(i, j), witness());
        if (mod4_related(t, i, j) != related(f, i, j))
          return fail("mod-4 criterion differs at " + pair_text(i, j), witness());
      }
  } else if (score_parity_partition(t) != partition(f)) {
    return fail("score parity partition differs from the orchard partition", witness());
  }
  return std::nullopt;
}

}  // namespace

std::string_view to_string(Proposition p) noexcept {
  for (const auto& e : kNames)
    if (e.p == p) return e.id;
  return "?";
}

Proposition parse_proposition(std::string_view id) {
  for (const auto& e : kNames)
    if (e.id == id) return e.p;
  throw input_error("unknown proposition '" + std::string(id) + "'");
}

const std::vector<Proposition>& all_propositions() {
  static const std::vector<Proposition> all = [] {
    std::vector<Proposition> v;
    for (const auto& e : kNames) v.push_back(e.p);
    return v;
  }();
  return all;
}

std::vector<SweepConfig> sweep_configs(const VerifyOptions& o) {
  std::vector<SweepConfig> out;
  const auto p = o.proposition;
  if (p == Proposition::Homology) {
    for (int n = std::max(o.n_min, 1); n <= o.n_max; ++n) out.push_back({n, 0, SymmetryKind::Symmetric});
    return out;
  }
  if (p == Proposition::TournamentClosedForm || p == Proposition::ScoreParity) {
    for (int n = std::max(o.n_min, 3); n <= o.n_max; ++n)
      out.push_back({n, 2, SymmetryKind::Antisymmetric});
    return out;
  }
  for (auto kind : {SymmetryKind::Symmetric, SymmetryKind::Antisymmetric}) {
    if (p == Proposition::Mu && kind == SymmetryKind::Antisymmetric) continue;
    for (int n = o.n_min; n <= o.n_max; ++n)
      for (int d = std::max(o.d_min, 0); d <= o.d_max; ++d) {
        bool ok = false;
        switch (p) {
          case Proposition::Triple:
          case Proposition::Flip:
          case Proposition::Mu: ok = n >= d + 2; break;
          case Proposition::Reduce: ok = d >= 1 && n >= d + 2; break;
          case Proposition::Augment:
          case Proposition::AaPositive: ok = n >= d + 3; break;
          case Proposition::RrSign: ok = d >= 2 && n >= d + 1; break;
          default: break;
        }
        if (ok) out.push_back({n, d + 1, kind});
      }
  }
  return out;
}

void check_guardrails(const VerifyOptions& o) {
  if (o.n_min < 1 || o.n_min > o.n_max) throw input_error("empty or invalid n range");
  if (o.d_min < 0 || o.d_min > o.d_max) throw input_error("empty or invalid d range");
  if (o.trials < 1) throw input_error("trials must be positive");
  if (o.n_max > 60) throw input_error("n beyond 60 is not representable");
  if (o.unsafe) return;
  if (o.n_max > kMaxN)
    throw input_error("n up to " + std::to_string(o.n_max) + " exceeds the guardrail n <= " +
                      std::to_string(kMaxN) + " (use --unsafe to override)");
  for (const auto& c : sweep_configs(o)) {
    // Augmentation sweeps touch arities up to arity + 2.
    for (int a = c.arity; a <= std::min(c.n, c.arity + 2); ++a)
      if (binomial(c.n, a) > kMaxSlots)
        throw input_error("C(" + std::to_string(c.n) + "," + std::to_string(a) +
                          ") exceeds the guardrail of 10^6 (use --unsafe to override)");
  }
}

std::uint64_t trial_seed(std::uint64_t seed, Proposition p, const SweepConfig& c,
                         std::uint64_t trial) {
  return derive_seed(seed, {static_cast<std::uint64_t>(p), static_cast<std::uint64_t>(c.n),
                            static_cast<std::uint64_t>(c.arity),
                            static_cast<std::uint64_t>(c.kind), trial});
}

std::optional<TrialFailure> run_trial(Proposition p, const SweepConfig& c, std::uint64_t ts) {
  switch (p) {
    case Proposition::Homology: return check_homology(c.n);
    case Proposition::TournamentClosedForm: return check_tournament(Tournament::random(c.n, ts), true);
    case Proposition::ScoreParity: return check_tournament(Tournament::random(c.n, ts), false);
    default: break;
  }
  const auto f = random_sign_function(c.n, c.arity, c.kind, ts);
  switch (p) {
    case Proposition::Triple: return check_triple(f);
    case Proposition::Flip: return check_flip(f, ts);
    case Proposition::Mu: return check_mu(f);
    case Proposition::Reduce: return check_reduce(f);
    case Proposition::Augment: return check_augment(f);
    case Proposition::RrSign: return check_rr_sign(f);
    case Proposition::AaPositive:
      if (!double_augment_positive(f)) return fail("A(A f) has a negative value", witness_for(f));
      return std::nullopt;
    default: break;
  }
  throw std::logic_error("unhandled proposition");
}

VerificationReport run_sweep(Proposition p, std::uint64_t seed, int trials,
                             const std::vector<SweepConfig>& configs, const TrialFn& fn) {
  const auto start = std::chrono::steady_clock::now();
  VerificationReport report;
  report.proposition = p;
  report.seed = seed;
  report.trials = trials;
  for (const auto& c : configs) {
    ConfigResult result{c, trials, 0, io::Json()};
    for (int t = 0; t < trials; ++t) {
      const auto ts = trial_seed(seed, p, c, static_cast<std::uint64_t>(t));
      std::optional<TrialFailure> failure;
      try {
        failure = fn(c, ts);
      } catch (const std::exception& e) {
        // A self-check (consistency_error) firing is a falsification too.
        failure = TrialFailure{e.what(), io::Json()};
      }
      if (!failure) continue;
      ++result.failures;
      if (report.total_failures++ < max_recorded_failures)
        report.failures.push_back({c, static_cast<std::uint64_t>(t), ts, std::move(*failure)});
    }
    report.configurations.push_back(std::move(result));
  }
  report.elapsed = std::chrono::steady_clock::now() - start;
  return report;
}

VerificationReport verify(const VerifyOptions& options) {
  check_guardrails(options);
  const auto p = options.proposition;
  // Homology has no randomness; one trial per n.
  const int trials = p == Proposition::Homology ? 1 : options.trials;
  auto report = run_sweep(p, options.seed, trials, sweep_configs(options),
                          [p](const SweepConfig& c, std::uint64_t ts) { return run_trial(p, c, ts); });
  if (p == Proposition::Homology)
    for (auto& r : report.configurations)
      r.extra["homology_dims"] = build_f2_complex(r.config.n).homology_dims;
  return report;
}

io::Json to_json(const VerificationReport& report) {
  const bool homology = report.proposition == Proposition::Homology;
  const bool tournament = report.proposition == Proposition::TournamentClosedForm ||
                          report.proposition == Proposition::ScoreParity;
  auto config_json = [&](const SweepConfig& c) {
    io::Json j;
    j["n"] = c.n;
    if (!homology && !tournament) {
      j["d"] = c.arity - 1;
      j["arity"] = c.arity;
      j["kind"] = std::string(to_string(c.kind));
    }
    return j;
  };
  io::Json configs = io::Json::array();
  for (const auto& r : report.configurations) {
    auto j = config_json(r.config);
    j["trials"] = r.trials;
    j["failures"] = r.failures;
    if (!r.extra.is_null())
      for (auto it = r.extra.begin(); it != r.extra.end(); ++it) j[it.key()] = it.value();
    configs.push_back(std::move(j));
  }
  io::Json failures = io::Json::array();
  for (const auto& f : report.failures) {
    auto j = config_json(f.config);
    j["trial"] = f.trial;
    j["trial_seed"] = f.trial_seed;
    j["detail"] = f.failure.detail;
    if (!f.failure.witness.is_null()) j["witness"] = f.failure.witness;
    failures.push_back(std::move(j));
  }
  io::Json out;
  out["proposition"] = std::string(to_string(report.proposition));
  out["seed"] = report.seed;
  out["trials"] = report.trials;
  out["status"] = report.passed() ? "pass" : "fail";
  out["total_failures"] = report.total_failures;
  out["configurations"] = std::move(configs);
  out["failures"] = std::move(failures);
  return out;
}

}  // namespace orchard
