#pragma once
// Concrete graded Specht modules: a basis indexed by standard tableaux and
// exact action matrices for every y_r and psi_r.

#include <map>
#include <memory>
#include <mutex>
#include <stdexcept>
#include <string>
#include <vector>

#include "klrspecht/combinatorics.hpp"
#include "klrspecht/klr_words.hpp"
#include "klrspecht/sparse.hpp"
#include "klrspecht/tableaux.hpp"

namespace klr {

/// Raised when a construction fails its own certification.
class EngineInconsistency : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Column-major sparse matrix: column j is the image of basis vector j.
template <class S>
struct SparseMatrix {
  std::vector<SparseVector<S>> columns;

  SparseVector<S> apply(const SparseVector<S>& v) const {
    Accumulator<S> acc;
    for (const auto& [j, c] : v) acc.add(c, columns[j]);
    return acc.finish();
  }
  /// Row vector times matrix.
  SparseVector<S> apply_transpose(const SparseVector<S>& row) const {
    std::vector<typename SparseVector<S>::Entry> out;
    for (std::size_t j = 0; j < columns.size(); ++j) {
      S s(0);
      bool any = false;
      for (const auto& [i, c] : row) {
        S x = columns[j].coeff(i);
        if (!x.is_zero()) { s += c * x; any = true; }
      }
      if (any && !s.is_zero()) out.emplace_back(static_cast<int>(j), s);
    }
    return SparseVector<S>::from_entries(std::move(out));
  }
};

enum class Orientation { Column, Row };

template <class S>
struct SpechtModel {
  Multipartition shape;
  AlgebraConfig cfg;
  Orientation orientation = Orientation::Column;
  WordConvention convention = WordConvention::LexMin;
  std::vector<Tableau> basis;
  std::vector<int> degrees;               ///< codeg (column) or deg (row)
  std::vector<ResidueSequence> residues;
  std::vector<SparseMatrix<S>> psi;       ///< psi[r-1]
  std::vector<SparseMatrix<S>> y;         ///< y[r-1]
  int seed = 0;                           ///< index of t_λ (column) or t^λ (row)
  std::map<Tableau, int> index;

  int n() const { return shape.size(); }
  int dim() const { return static_cast<int>(basis.size()); }
  int index_of(const Tableau& t) const {
    auto it = index.find(t);
    if (it == index.end()) throw std::out_of_range("tableau is not a basis label");
    return it->second;
  }
  GradedDimension graded_dimension() const {
    GradedDimension g;
    for (int d : degrees) g.add(d);
    return g;
  }
};

/// Builds S_λ from its presentation and certifies it (dimension equals
/// |Std(λ)|, every nonstandard coordinate is straightened). Throws
/// EngineInconsistency on failure. Requires an active ModP context when S
/// is ModP.
template <class S>
SpechtModel<S> build_column_model(const Multipartition& lambda, const AlgebraConfig& cfg,
                                  WordConvention conv = WordConvention::LexMin);
/// S^λ through (S^λ_κ)^sgn ≅ S_{λ'}^{κ'}, rescaled so that v^s = psi^s z^λ.
template <class S>
SpechtModel<S> build_row_model(const Multipartition& lambda, const AlgebraConfig& cfg,
                               WordConvention conv = WordConvention::LexMin);

/// κ' = (−κ_l, …, −κ_1).
AlgebraConfig conjugate_config(const AlgebraConfig& cfg);

/// Module action of an algebra element; e(i) projects onto basis vectors of
/// residue sequence i.
template <class S>
SparseVector<S> act(const AlgebraElement<S>& x, const SparseVector<S>& v, const SpechtModel<S>& model);
template <class S>
SparseVector<S> act_word(const Word& w, const SparseVector<S>& v, const SpechtModel<S>& model);

struct CheckResult {
  std::string name;
  bool passed = true;
  std::string witness;
};

struct ValidationReport {
  std::vector<CheckResult> checks;
  bool passed() const {
    for (const auto& c : checks)
      if (!c.passed) return false;
    return true;
  }
  const CheckResult* find(const std::string& name) const {
    for (const auto& c : checks)
      if (c.name == name) return &c;
    return nullptr;
  }
  std::string summary() const;
};

/// Checks every defining relation as a matrix identity, the seed relations,
/// dimension, graded dimension, homogeneity and the cyclotomic smoke test.
template <class S>
ValidationReport validate(const SpechtModel<S>& model);

/// P(s,t) = coefficient of v_{t^λ} in tau(psi^s) v_t. Rows and columns are
/// indexed like model.basis.
template <class S>
std::vector<SparseVector<S>> pairing_matrix(const SpechtModel<S>& model);
/// f_t for every t: column t of P^{-1}, written in the v-basis.
template <class S>
std::vector<SparseVector<S>> dual_basis_f(const SpechtModel<S>& model);

/// Shared cache of finished models keyed by (λ, e, κ, orientation, convention).
template <class S>
class ModelCache {
 public:
  std::shared_ptr<const SpechtModel<S>> column(const Multipartition& lambda, const AlgebraConfig& cfg,
                                               WordConvention conv = WordConvention::LexMin);
  std::shared_ptr<const SpechtModel<S>> row(const Multipartition& lambda, const AlgebraConfig& cfg,
                                            WordConvention conv = WordConvention::LexMin);
  std::size_t size() const;

 private:
  std::mutex mu_;
  std::map<std::string, std::shared_ptr<const SpechtModel<S>>> models_;
};

/// Text helpers for the model dump.
template <class S>
std::string model_to_json(const SpechtModel<S>& model);

}  // namespace klr
