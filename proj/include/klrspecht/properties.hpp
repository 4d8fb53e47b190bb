#pragma once
// Structural properties of tableau orders and of the standard basis,
// checked against independent oracles.

#include <random>
#include <string>
#include <vector>

#include "klrspecht/specht.hpp"

namespace klr {

struct PropertyResult {
  std::string name;
  long checked = 0;
  long violations = 0;
  std::string witness;  ///< first violation

  bool passed() const { return violations == 0; }
  void fail(const std::string& w) {
    if (violations++ == 0) witness = w;
  }
  void merge(const PropertyResult& o) {
    checked += o.checked;
    if (!o.passed() && passed()) witness = o.witness;
    violations += o.violations;
  }
};

/// All λ-tableaux that are row-strict (resp. column-strict).
std::vector<Tableau> row_strict_tableaux(const Multipartition& lambda);
std::vector<Tableau> column_strict_tableaux(const Multipartition& lambda);

/// Shape(t↓m)' as a multicomposition: node (r,c,k) goes to (c,r,l+1-k).
Multipartition conjugate_diagram(const Tableau& t, int m);

/// Row-strict s,t: s ⊴ t iff Shape(s↓m) ⊴ Shape(t↓m) for every m, where on
/// row-strict fillings s ⊴ t means w^t ⪯ w^s. Also checks that this order
/// agrees with tableau_dominates on standard pairs.
PropertyResult check_bruhat_vs_shapes(const Multipartition& lambda);
/// Column-strict s,t: s ⊴ t iff Shape(s↓m)' ⊵ Shape(t↓m)' for every m.
PropertyResult check_bruhat_vs_conjugate_shapes(const Multipartition& lambda);
/// Column- and row-dominated on 1..j against the shape criteria, for every
/// s ∈ Std(μ) and every j.
PropertyResult check_dominated_vs_shapes(const Multipartition& lambda, const Multipartition& mu);

/// Random reduced word for w (uniform choice among left descents at each step).
ReducedWord random_reduced_word(const Permutation& w, std::mt19937& rng);
/// Does the word contain a reduced expression for w as a subexpression?
bool has_reduced_subexpression(const ReducedWord& word, const Permutation& w);

/// On a column model:
///  - every reduced word for w_t sends z to v_t plus terms u ◁ t;
///  - psi_{j-1} v_t lies below t when j-1, j are adjacent in a row or column of t;
///  - y_i v_t lies strictly below t;
///  - psi_{j-1} v_t lies weakly below t when w_t^{-1}(j-1) > w_t^{-1}(j);
///  - v_t in psi_{j1}…psi_{jr} z forces a reduced subexpression for w_t
///    (random_words random words).
template <class S>
std::vector<PropertyResult> check_standard_basis(const SpechtModel<S>& model, std::mt19937& rng,
                                                 int random_words = 100);

}  // namespace klr
