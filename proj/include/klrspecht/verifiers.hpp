#pragma once
// Executable checks of the removal theorems, duality and the dominated-hom
// statements. Every verifier computes both sides independently and compares
// graded dimensions exactly.

#include <functional>
#include <string>
#include <vector>

#include "klrspecht/hom.hpp"

namespace klr {

enum class Verdict { Pass, Fail, NotApplicable };
std::string verdict_string(Verdict v);

struct VerificationReport {
  std::string theorem;
  std::string instance;  ///< "e=… kappa=… lambda=… mu=… m=…"
  GradedDimension left, right;
  Verdict verdict = Verdict::NotApplicable;
  std::string witness;  ///< what failed, or why the instance does not apply

  bool failed() const { return verdict == Verdict::Fail; }
  std::string to_json() const;
};

/// Column removal: λ^(k) = μ^(k) = ∅ for k > m, equal first column lengths in
/// component m. Compares DHom(λ,μ) with DHom(λ_R(1,m), μ_R(1,m)).
template <class S>
VerificationReport verify_cr(const Multipartition& lambda, const Multipartition& mu, int m, const AlgebraConfig& cfg,
                             ModelCache<S>& cache);
/// Row removal: components before m empty, equal first rows in component m.
template <class S>
VerificationReport verify_rr(const Multipartition& lambda, const Multipartition& mu, int m, const AlgebraConfig& cfg,
                             ModelCache<S>& cache);
/// Final column removal: components before m empty, equal first rows d and
/// equal lengths of column d in component m.
template <class S>
VerificationReport verify_fcr(const Multipartition& lambda, const Multipartition& mu, int m, const AlgebraConfig& cfg,
                              ModelCache<S>& cache);
/// DHom(λ,μ) ≅ DHom(λ_L,μ_L) ⊗ DHom(λ_R,μ_R) when |λ_L| = |μ_L|, and product
/// homomorphisms span DHom(λ,μ).
template <class S>
VerificationReport verify_gcr(const Multipartition& lambda, const Multipartition& mu, int c, int m,
                              const AlgebraConfig& cfg, ModelCache<S>& cache);
/// DHom(λ,μ) ≅ DHom(λ_T,μ_T) ⊗ DHom(λ_B,μ_B) when |λ_T| = |μ_T|.
template <class S>
VerificationReport verify_grr(const Multipartition& lambda, const Multipartition& mu, int r, int m,
                              const AlgebraConfig& cfg, ModelCache<S>& cache);
/// DHom(S_λ^κ, S_μ^κ) ≅ DHom(S_{μ'}^{κ'}, S_{λ'}^{κ'}).
template <class S>
VerificationReport verify_duality(const Multipartition& lambda, const Multipartition& mu, const AlgebraConfig& cfg,
                                  ModelCache<S>& cache);
/// For e ≠ 2 and distinct κ: Hom and DHom have equal span, and End(S_λ) has
/// graded dimension 1 when λ = μ.
template <class S>
VerificationReport verify_domhom(const Multipartition& lambda, const Multipartition& mu, const AlgebraConfig& cfg,
                                 ModelCache<S>& cache);
/// Ungraded dim End(S_λ) ≥ 2.
template <class S>
VerificationReport verify_decomposable(const Multipartition& lambda, const AlgebraConfig& cfg, ModelCache<S>& cache);
/// DHom with the LexMax reduced words, moved into LexMin coordinates, has
/// the same dominated span and the same hom space.
template <class S>
VerificationReport verify_convention(const Multipartition& lambda, const Multipartition& mu, const AlgebraConfig& cfg,
                                     ModelCache<S>& cache);
/// Row-join candidates for every pair of basis homs of the two factors.
/// Fails only when hard is set; otherwise a non-hom is reported in witness
/// with verdict Pass.
template <class S>
VerificationReport verify_exprow(const Multipartition& lambda, const Multipartition& mu, int r, int m,
                                 const AlgebraConfig& cfg, ModelCache<S>& cache, bool hard = false);

/// Theorem ids accepted by run_sweep.
const std::vector<std::string>& theorem_ids();

struct SweepOptions {
  std::string theorem;
  AlgebraConfig cfg;
  int n_max = 4;
  int n_min = 0;
  int threads = 1;
};

struct SweepSummary {
  std::string theorem;
  int instances = 0, passes = 0, failures = 0, not_applicable = 0;
  std::string to_string() const;
};

/// Runs one verifier over every pair of multipartitions of level l = |κ| and
/// size n_min..n_max (and every split parameter). Pairs with different
/// content are skipped before any model is built. Reports are delivered to
/// sink in instance order, independent of threads.
template <class S>
SweepSummary run_sweep(const SweepOptions& opts, ModelCache<S>& cache,
                       const std::function<void(const VerificationReport&)>& sink);

}  // namespace klr
