#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "lckcert/duality.hpp"

namespace lckcert {

/// (i/2)α₁∧ᾱ₁ ∧ … ∧ (i/2)α_p∧ᾱ_p with α_j = Σ_a alphas[j][a] Z^a.
struct Decomposable {
  std::vector<Vec<Gauss>> alphas;
  friend bool operator==(const Decomposable&, const Decomposable&) = default;
};

GradedForm decomposable_form(const Decomposable& g, const ComplexFrame& frame);

/// Axis products Z-subsets first (lexicographic), then seeded Gaussian-integer decomposables, for a
/// total of max(count, C(n,p)).
std::vector<Decomposable> strongly_positive_sample(int n, int p, std::size_t count, std::uint64_t seed);

enum class ConeMode { ExactPsd, ExactDualPsd, Sampled };
enum class Guarantee { Exact, Inner, Outer };

std::string to_string(ConeMode m);
std::string to_string(Guarantee g);

struct PositiveConeModel {
  int p = 1;
  ConeMode mode = ConeMode::ExactPsd;
  std::vector<Decomposable> generators;  // sampled mode only
  std::uint64_t seed = 0;
};

struct TransverseFeasible {
  GradedForm form;
  double margin = 0.0;
  Guarantee guarantee = Guarantee::Exact;
  Vec<Rational> weights;  // sampled: positive conic weights of the generators
};
struct TransverseInfeasible {
  Current T;
  std::optional<Current> S;
  Guarantee guarantee = Guarantee::Exact;
  Vec<Rational> generator_pairings;  // sampled: ⟨T, g_k⟩ ≥ 0
};
struct TransverseUndecided {
  double best_margin = 0.0;
  std::string reason;
};
using TransverseVerdict = std::variant<TransverseFeasible, TransverseInfeasible, TransverseUndecided>;

std::string verdict_name(const TransverseVerdict& v);

struct TransverseOptions {
  std::optional<ConeMode> mode;  // default: ExactPsd for p = 1, ExactDualPsd for p = n-1, else Sampled
  std::size_t sample_count = 0;  // 0: 2·dim Λ^{p,p}_ℝ + C(n,p)
};

/// Default cone model for (n, p) under the options; the generators are filled in sampled mode.
PositiveConeModel cone_model(int n, int p, const SolverConfig& cfg, const TransverseOptions& opts = {});

TransverseVerdict find_transverse(const TwistedComplex& tc, int p, const SolverConfig& cfg = {},
                                  const TransverseOptions& opts = {});

/// Exact modes: real, pure (p,p), d_θ-closed, PD avatar.
CheckResult verify_transverse_form(const TwistedComplex& tc, int p, const GradedForm& form);
/// Exact modes: nonzero real (p,p)-current with PSD avatar equal to Π_{p,p}(d_θ S).
CheckResult verify_transverse_certificate(const TwistedComplex& tc, int p, const Current& t, const Current& s);

/// Sampled mode: all weights positive and Σ weights_k g_k is d_θ-closed.
CheckResult verify_sampled_form(const TwistedComplex& tc, const std::vector<Decomposable>& gens,
                                const Vec<Rational>& weights, const GradedForm& form);
/// Sampled mode: T = Π_{p,p}(d_θ S), T ≠ 0, ⟨T, g_k⟩ ≥ 0 for every generator.
CheckResult verify_sampled_certificate(const TwistedComplex& tc, int p, const std::vector<Decomposable>& gens,
                                       const Current& t, const Current& s);

}  // namespace lckcert
