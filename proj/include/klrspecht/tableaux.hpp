#pragma once
// Tableaux on multipartitions: the distinguished tableaux, residues,
// degree and codegree, dominance, dominated sets and the split/join maps.

#include <string>
#include <string_view>
#include <vector>

#include "klrspecht/combinatorics.hpp"
#include "klrspecht/symgroup.hpp"

namespace klr {

/// Per component, per row, the entries. Shape may be a multicomposition for
/// intermediate objects, but standard tableaux always have partition shape.
class Tableau {
 public:
  Tableau() = default;
  /// Checks that the entries are exactly 1..n and the rows fit the shape.
  Tableau(Multipartition shape, std::vector<std::vector<std::vector<int>>> rows);

  const Multipartition& shape() const { return shape_; }
  int size() const { return n_; }
  int level() const { return shape_.level(); }
  int entry(const Node& a) const { return rows_[a.comp - 1][a.row - 1][a.col - 1]; }
  /// Node holding entry k (1-based).
  const Node& node_of(int k) const { return where_[k - 1]; }
  const std::vector<std::vector<std::vector<int>>>& rows() const { return rows_; }

  bool is_row_strict() const;
  bool is_column_strict() const;
  bool is_standard() const { return is_row_strict() && is_column_strict(); }

  /// "1,3;2|4", empty component written "0".
  std::string to_string() const;
  static Tableau parse(std::string_view text);

  auto operator<=>(const Tableau& o) const { return rows_ <=> o.rows_; }
  bool operator==(const Tableau& o) const { return rows_ == o.rows_; }

 private:
  Multipartition shape_;
  std::vector<std::vector<std::vector<int>>> rows_;
  std::vector<Node> where_;
  int n_ = 0;
};

/// t_λ: down successive columns, starting with the last component.
Tableau t_col(const Multipartition& lambda);
/// t^λ: along successive rows, starting with the first component.
Tableau t_row(const Multipartition& lambda);

/// w t: replaces each entry k by w(k).
Tableau apply(const Permutation& w, const Tableau& t);
/// w_t with w_t t_λ = t.
Permutation perm_of_col(const Tableau& t);
/// w^t with w^t t^λ = t.
Permutation perm_of_row(const Tableau& t);

using ResidueSequence = std::vector<Residue>;
ResidueSequence residue_sequence(const Tableau& t, const AlgebraConfig& cfg);

/// Addable minus removable i-nodes of λ strictly below A, i = res A.
int d_below(const Multipartition& lambda, const Node& a, const AlgebraConfig& cfg);
/// Same, strictly above A.
int d_above(const Multipartition& lambda, const Node& a, const AlgebraConfig& cfg);
int degree(const Tableau& t, const AlgebraConfig& cfg);
int codegree(const Tableau& t, const AlgebraConfig& cfg);

/// Shape of the subtableau of entries ≤ m (a multicomposition in general).
Multipartition shape_upto(const Tableau& t, int m);
/// s ⊵ t iff w_s ⪰ w_t in the Bruhat order.
bool tableau_dominates(const Tableau& s, const Tableau& t);

/// A standard tableau with its degree data.
struct GradedTableau {
  Tableau tableau;
  int degree = 0;
  int codegree = 0;
};

/// Std(λ) in a fixed total order refining dominance: by l(w_t), then by the
/// one-line form of w_t.
std::vector<Tableau> enumerate_std(const Multipartition& lambda);
std::vector<GradedTableau> enumerate_std_graded(const Multipartition& lambda, const AlgebraConfig& cfg);
/// Std_λ(μ): standard μ-tableaux with each entry at least as far left as in t_λ.
std::vector<Tableau> enumerate_col_dominated(const Multipartition& lambda, const Multipartition& mu);
/// Std^λ(μ): standard μ-tableaux with each entry at least as high as in t^λ.
std::vector<Tableau> enumerate_row_dominated(const Multipartition& lambda, const Multipartition& mu);
/// Entries 1..j of t lie at least as far left as in t_λ.
bool is_col_dominated_upto(const Tableau& t, const Multipartition& lambda, int j);
bool is_col_dominated(const Tableau& t, const Multipartition& lambda);
bool is_row_dominated(const Tableau& t, const Multipartition& lambda);

/// Σ_{t ∈ Std(λ)} v^{codeg t} (or v^{deg t}) without listing Std(λ): the
/// node holding n is removable, so the sum recurses over removable nodes.
GradedDimension std_graded_dimension(const Multipartition& lambda, const AlgebraConfig& cfg, bool codeg = true);

/// Order used for all tableau lists (dominance compatible).
bool tableau_order_less(const Tableau& a, const Tableau& b);

Tableau conjugate_tableau(const Tableau& t);

/// t ↦ t⁺ of column removal: t is a tableau of level m; entries are raised
/// by k, a first column 1..k is put in component m, and l − m empty
/// components are appended.
Tableau add_first_column(const Tableau& t, int k, int m, int l);
/// t ↦ t⁺ of final column removal: a column n−k+1..n is appended to the
/// first component of t, and m − 1 empty components are prepended.
Tableau add_last_column(const Tableau& t, int k, int m);

/// t_L # t_R: t_L is a λ_L-tableau (level l − m + 1), t_R a λ_R-tableau
/// (level m); the join places t_L's entries as they are and t_R's raised by
/// n_L, glued at column c of component m.
Tableau lr_join_tableaux(const Tableau& left, const Tableau& right, int c, int m);
struct LRSplit {
  Tableau left, right;
};
/// Inverse of lr_join_tableaux on Std_LR. Throws std::domain_error when
/// t ∉ Std_LR(λ) for the given (c,m).
LRSplit lr_split(const Tableau& t, int c, int m);
bool in_std_lr(const Tableau& t, int c, int m);

/// t #̄ s: t a μ_B-tableau, s a μ_T-tableau; entries relabelled by the
/// order-preserving maps onto S_B and S_T read off t_λ.
Tableau row_join_tableaux(const Tableau& t, const Tableau& s, const Multipartition& lambda, int r, int m);
/// S_T and S_B for (λ, r, m).
void row_split_labels(const Multipartition& lambda, int r, int m, std::vector<int>& top, std::vector<int>& bottom);

}  // namespace klr
