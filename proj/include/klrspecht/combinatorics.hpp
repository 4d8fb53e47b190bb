#pragma once
// Multipartitions, nodes, residues and the root-lattice arithmetic that the
// degree functions need.

#include <compare>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "klrspecht/scalar.hpp"

namespace klr {

/// A residue. For finite e it is kept reduced to 0..e-1, for e = infinity it
/// is an arbitrary integer; AlgebraConfig::reduce does the normalization.
using Residue = long;

struct AlgebraConfig {
  int e = 0;                   ///< 0 encodes e = infinity
  std::vector<Residue> kappa;  ///< multicharge, one residue per component
  FieldSpec field;

  /// Validates and reduces kappa mod e.
  static AlgebraConfig make(int e, std::vector<Residue> kappa, FieldSpec field = {});

  bool infinite() const { return e == 0; }
  int level() const { return static_cast<int>(kappa.size()); }
  Residue reduce(long x) const;
  /// Cartan matrix entry a_ij.
  int cartan(Residue i, Residue j) const;
  /// i -> j in the quiver (single arrow), i.e. e != 2 and j = i - 1.
  bool arrow(Residue i, Residue j) const;
  /// Same config with another multicharge (reduced).
  AlgebraConfig with_kappa(std::vector<Residue> k) const { return make(e, std::move(k), field); }

  std::string e_string() const { return infinite() ? "inf" : std::to_string(e); }
  std::string kappa_string() const;
  bool operator==(const AlgebraConfig&) const = default;
};

/// "inf" or an integer >= 2.
int parse_e(std::string_view text);
std::vector<Residue> parse_kappa(std::string_view text);

using Partition = std::vector<int>;

/// An l-tuple of compositions; the usual case is partitions. Trailing zero
/// parts are trimmed, so equality is structural.
class Multipartition {
 public:
  Multipartition() = default;
  /// Throws unless every component is a partition.
  explicit Multipartition(std::vector<Partition> components);
  /// Allows compositions (zero parts inside are kept, trailing ones trimmed).
  static Multipartition composition(std::vector<Partition> components);
  /// Empty multipartition of level l.
  static Multipartition empty(int l) { return Multipartition(std::vector<Partition>(l)); }

  int level() const { return static_cast<int>(comps_.size()); }
  int size() const;
  /// Component m, 1-based.
  const Partition& component(int m) const { return comps_.at(m - 1); }
  const std::vector<Partition>& components() const { return comps_; }
  /// Row length (1-based row and component); 0 outside the diagram.
  int row(int m, int r) const;
  /// Column length (1-based column and component).
  int column(int m, int c) const;
  bool is_multipartition() const;

  /// "1,1|2,1,1,1|1", empty component written "0".
  std::string to_string() const;
  static Multipartition parse(std::string_view text);

  auto operator<=>(const Multipartition&) const = default;

 private:
  std::vector<Partition> comps_;
};

struct Node {
  int row = 1, col = 1, comp = 1;
  auto operator<=>(const Node&) const = default;
};

/// Partitions of n, lexicographically decreasing: (n), (n-1,1), ...
std::vector<Partition> partitions(int n);
/// All l-multipartitions of n, in a fixed deterministic order.
std::vector<Multipartition> multipartitions(int l, int n);

/// Nodes of [λ] in component order, then row, then column.
std::vector<Node> nodes(const Multipartition& lambda);
std::vector<Node> addable_nodes(const Multipartition& lambda);
std::vector<Node> removable_nodes(const Multipartition& lambda);
bool contains(const Multipartition& lambda, const Node& a);

/// Prefix-sum dominance; also accepts multicompositions. Throws on size or
/// level mismatch.
bool dominates(const Multipartition& lambda, const Multipartition& mu);
Multipartition conjugate(const Multipartition& lambda);
Partition conjugate_partition(const Partition& p);

Residue residue(const Node& a, const AlgebraConfig& cfg);

using RootContent = std::map<Residue, int>;
RootContent content(const Multipartition& lambda, const AlgebraConfig& cfg);
/// (Λ_κ|α) − ½(α|α).
int defect(const RootContent& alpha, const AlgebraConfig& cfg);
int defect(const Multipartition& lambda, const AlgebraConfig& cfg);

struct ColumnSplit {
  Multipartition left, right;
  std::vector<Residue> kappa_left, kappa_right;
};
struct RowSplit {
  Multipartition top, bottom;
  std::vector<Residue> kappa_top, kappa_bottom;
};

/// λ_L(c,m), λ_R(c,m) with κ_L = (κ_m,…,κ_l), κ_R = (κ_1,…,κ_{m−1},κ_m+c).
ColumnSplit split_columns(const Multipartition& lambda, int c, int m, const AlgebraConfig& cfg);
/// λ_T(r,m), λ_B(r,m) with κ_T = (κ_1,…,κ_m), κ_B = (κ_m−r,κ_{m+1},…,κ_l).
RowSplit split_rows(const Multipartition& lambda, int r, int m, const AlgebraConfig& cfg);
/// The multipartition λ#μ with left part λ_L and right part μ_R.
Multipartition lr_join(const Multipartition& lambda, const Multipartition& mu, int c, int m);
/// Inverse gluing of a left and a right part.
Multipartition glue_columns(const Multipartition& left, const Multipartition& right, int c);
Multipartition glue_rows(const Multipartition& top, const Multipartition& bottom);

/// Laurent polynomial in v with nonnegative integer coefficients.
class GradedDimension {
 public:
  GradedDimension() = default;
  static GradedDimension monomial(int degree, long coeff = 1);

  void add(int degree, long coeff = 1);
  long coeff(int degree) const;
  long total() const;
  bool is_zero() const { return terms_.empty(); }
  const std::map<int, long>& terms() const { return terms_; }

  GradedDimension operator+(const GradedDimension& o) const;
  GradedDimension operator*(const GradedDimension& o) const;
  /// The grading shift M<k>.
  GradedDimension shifted(int k) const;
  bool operator==(const GradedDimension&) const = default;

  /// Ascending degrees: "1 + v^2", "v", "2v^-1", "0".
  std::string to_string() const;
  static GradedDimension parse(std::string_view text);

 private:
  std::map<int, long> terms_;
};

}  // namespace klr
