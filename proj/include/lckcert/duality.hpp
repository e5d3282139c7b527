#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "lckcert/slice.hpp"

namespace lckcert {

struct SolverConfig {
  double tolerance = 1e-8;
  int max_iterations = 20000;
  std::int64_t denominator_bound = 1000000;
  std::uint64_t seed = 0;
  /// Reference Hermitian form for normalizing certificates; the standard form (avatar I) if unset.
  std::optional<GradedForm> psi;
};

struct Certificate {
  Current T;                 // real (1,1)-current, PSD avatar
  std::optional<Current> S;  // real 3-current with T = Π_{1,1}(d_θ S)
};

struct Feasible {
  GradedForm metric;
  double eig_margin = 0.0;
  bool exact = true;
  double t_star = 0.0;
};
struct Infeasible {
  Certificate certificate;
  double t_star = 0.0;
};
struct Undecided {
  double best_margin = 0.0;
  std::string reason;
};
using Verdict = std::variant<Feasible, Infeasible, Undecided>;

/// "feasible" | "infeasible" | "undecided"
std::string verdict_name(const Verdict& v);

struct CheckResult {
  bool ok = false;
  std::string reason;  // "ok" or a short code such as "not_closed"
  explicit operator bool() const { return ok; }
};

/// Floating solution of max t s.t. H ⪰ tI, tr H = n, L(H) = 0 (primal) and the same problem over
/// the Frobenius complement of ker L (dual). Coordinates refer to hermitian_basis(n).
struct SdpResult {
  int n = 0;
  double t_star = 0.0;
  Vec<double> primal;
  bool primal_empty = false;
  double dual_t_star = 0.0;
  Vec<double> dual;
  bool dual_empty = false;
  bool hit_iteration_limit = false;
  long iterations = 0;
};

/// constraint has n² columns (Hermitian coordinates).
SdpResult sdp_feasibility(const QMatrix& constraint, const SolverConfig& cfg);

/// Exact outcome on a Hermitian slice (p = 1 or p = n-1).
struct SliceOutcome {
  enum class Kind { Feasible, Infeasible, Undecided } kind = Kind::Undecided;
  Vec<Rational> coordinates;     // feasible: kernel element, PD avatar
  HermitianMatrix dual_avatar;   // infeasible: PSD, nonzero, normalized against psi
  Vec<Rational> source;          // infeasible: e-coordinate functional t with G y = Lᵀ t
  double eig_margin = 0.0;
  double t_star = 0.0;
  double dual_t_star = 0.0;
  std::string reason;
};

/// psi_avatar is the slice avatar of the normalizing form.
SliceOutcome solve_slice(const HermitianSlice& slice, const SolverConfig& cfg, const HermitianMatrix& psi_avatar);

/// Adjoint of d_θ under pair: ⟨d_θ T, η⟩ = ⟨T, d_θ η⟩ (lowers the degree by one).
Current current_d_theta(const TwistedComplex& tc, const Current& t);
Current d_theta_pq(const TwistedComplex& tc, const Current& t, int p, int q);

Verdict find_lck(const TwistedComplex& tc, const SolverConfig& cfg = {});
Verdict find_lck(const LieModel& m, const Vec<Rational>& theta, const SolverConfig& cfg = {});

CheckResult verify_metric(const TwistedComplex& tc, const GradedForm& w);
CheckResult verify_metric(const LieModel& m, const Vec<Rational>& theta, const GradedForm& w);

struct CertificateCheck : CheckResult {
  std::optional<Current> S;  // the attached source, or a solved one when none was attached
};
CertificateCheck verify_certificate(const TwistedComplex& tc, const Certificate& cert);
CertificateCheck verify_certificate(const LieModel& m, const Vec<Rational>& theta, const Certificate& cert);

struct WirtingerReport {
  std::size_t samples = 0;
  std::size_t violations = 0;
  Rational min_value;
  Vec<Gauss> min_sample;
  std::optional<Vec<Gauss>> violation;
};

/// Pairs w against positive_generator(v) for seeded Gaussian-integer v; the first probe is the
/// rounded minimum eigenvector of the avatar.
WirtingerReport wirtinger_pairing_audit(const TwistedComplex& tc, const GradedForm& w, std::size_t samples,
                                        std::uint64_t seed);

/// Avatar of the normalizing form (standard form when cfg.psi is unset).
HermitianMatrix psi_avatar(const TwistedComplex& tc, const SolverConfig& cfg);

}  // namespace lckcert
