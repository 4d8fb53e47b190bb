#pragma once
// Graded homomorphism spaces between column Specht modules, product
// homomorphisms and row-join candidates.

#include <memory>
#include <string>
#include <vector>

#include "klrspecht/specht.hpp"

namespace klr {

/// A homogeneous homomorphism S_λ → S_μ, stored as the image of z_λ.
template <class S>
struct HomElement {
  int degree = 0;
  SparseVector<S> image;  ///< coordinates over target->basis
};

template <class S>
struct HomBasis {
  Multipartition lambda, mu;
  AlgebraConfig cfg;
  bool dominated = false;
  std::shared_ptr<const SpechtModel<S>> target;  ///< null when the contents differ
  std::vector<HomElement<S>> basis;

  GradedDimension graded_dimension() const {
    GradedDimension g;
    for (const auto& h : basis) g.add(h.degree);
    return g;
  }
  std::vector<SparseVector<S>> images() const {
    std::vector<SparseVector<S>> out;
    for (const auto& h : basis) out.push_back(h.image);
    return out;
  }
};

/// The generators of Ann(z_λ) besides e(i_λ): y_r, psi_r for r ↓ r+1 in t_λ,
/// and every column Garnir element.
template <class S>
std::vector<AlgebraElement<S>> seed_annihilators(const Multipartition& lambda, const AlgebraConfig& cfg);

/// Does z_λ ↦ x extend to a homomorphism S_λ → model?
template <class S>
bool is_hom_image(const Multipartition& lambda, const SparseVector<S>& x, const SpechtModel<S>& model);

/// Hom(S_λ, S_μ) (or DHom when dominated) with a homogeneous basis, each
/// element normalized to coefficient 1 on its dominance-largest tableau.
template <class S>
HomBasis<S> hom_space(const Multipartition& lambda, const Multipartition& mu, const AlgebraConfig& cfg,
                      bool dominated, ModelCache<S>& cache, WordConvention conv = WordConvention::LexMin);

/// Σ a_s b_t v_{s#t}. left is a vector over Std(μ_L), right over Std(μ_R);
/// the result is a vector over the basis of target (a model of μ).
template <class S>
SparseVector<S> product_image(const SpechtModel<S>& left, const SparseVector<S>& a, const SpechtModel<S>& right,
                              const SparseVector<S>& b, const SpechtModel<S>& target, int c, int m);

/// φ_L # φ_R, checked against the constraints of S_λ. Throws
/// EngineInconsistency if the product is not a homomorphism.
template <class S>
HomElement<S> product_hom(const HomBasis<S>& left, const HomElement<S>& phi_l, const HomBasis<S>& right,
                          const HomElement<S>& phi_r, const Multipartition& lambda,
                          const SpechtModel<S>& target, int c, int m);

template <class S>
struct RowJoinCandidate {
  SparseVector<S> vector;  ///< in the v-basis of S_μ
  bool is_hom = false;
};

/// Σ a_t b_s f_{t#̄s}, where φ_B = Σ a_t f_t and φ_T = Σ b_s f_s. Reports
/// whether the result satisfies the constraints of S_λ.
template <class S>
RowJoinCandidate<S> row_join_candidate(const HomBasis<S>& bottom, const HomElement<S>& phi_b,
                                       const HomBasis<S>& top, const HomElement<S>& phi_t,
                                       const Multipartition& lambda, const SpechtModel<S>& target, int r, int m);

/// Image written as "v_<tableau>" terms, e.g. "v_1,2|3 + 2v_1,3|2".
template <class S>
std::string image_to_string(const SparseVector<S>& x, const SpechtModel<S>& model);

/// {"graded_dim": {"1": 1}, "basis": [{"degree": 1, "image": {"<tableau>": "1"}}]}
template <class S>
std::string hom_to_json(const HomBasis<S>& h);

}  // namespace klr
