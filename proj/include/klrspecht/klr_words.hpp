#pragma once
// Formal words in the KLR generators e(i), y_r, psi_r with exact
// coefficients, and the elements built from them (Garnir elements, psi_t).

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "klrspecht/combinatorics.hpp"
#include "klrspecht/symgroup.hpp"
#include "klrspecht/tableaux.hpp"

namespace klr {

/// One generator. An idempotent carries a residue pattern in which unset
/// positions are wildcards, so e(i)^{+k} (a sum over all compatible
/// extensions) is a single symbol acting as a projection.
struct GeneratorSymbol {
  enum Kind { Idempotent, Y, Psi };
  Kind kind = Psi;
  int index = 0;                                ///< r for y_r and psi_r
  std::vector<std::optional<Residue>> pattern;  ///< idempotents only

  static GeneratorSymbol psi(int r) { return {Psi, r, {}}; }
  static GeneratorSymbol y(int r) { return {Y, r, {}}; }
  static GeneratorSymbol e(const ResidueSequence& i);

  /// Does the idempotent fix a vector of residue sequence i?
  bool matches(const ResidueSequence& i) const;
  std::string to_string() const;
  auto operator<=>(const GeneratorSymbol&) const = default;
};

/// Product of generators; the rightmost letter acts first.
using Word = std::vector<GeneratorSymbol>;

Word psi_word(const ReducedWord& w);
std::string word_to_string(const Word& w);

/// Formal sum of words with coefficients in S.
template <class S>
class AlgebraElement {
 public:
  AlgebraElement() = default;
  explicit AlgebraElement(int n) : n_(n) {}
  static AlgebraElement from_word(int n, Word w, S c = S(1)) {
    AlgebraElement x(n);
    x.add(std::move(w), c);
    return x;
  }

  int n() const { return n_; }
  const std::map<Word, S>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  void add(Word w, const S& c) {
    if (c.is_zero()) return;
    auto [it, fresh] = terms_.try_emplace(std::move(w), c);
    if (!fresh) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }
  AlgebraElement& operator+=(const AlgebraElement& o) {
    for (const auto& [w, c] : o.terms_) add(w, c);
    return *this;
  }
  AlgebraElement operator+(const AlgebraElement& o) const { AlgebraElement r = *this; return r += o; }
  AlgebraElement operator-(const AlgebraElement& o) const { return *this + (S(-1) * o); }
  friend AlgebraElement operator*(const S& c, const AlgebraElement& x) {
    AlgebraElement r(x.n_);
    for (const auto& [w, a] : x.terms_) r.add(w, c * a);
    return r;
  }
  /// Concatenation product.
  AlgebraElement operator*(const AlgebraElement& o) const {
    AlgebraElement r(n_);
    for (const auto& [w1, a] : terms_)
      for (const auto& [w2, b] : o.terms_) {
        Word w = w1;
        w.insert(w.end(), w2.begin(), w2.end());
        r.add(std::move(w), a * b);
      }
    return r;
  }
  bool operator==(const AlgebraElement& o) const { return n_ == o.n_ && terms_ == o.terms_; }

  std::string to_string() const;

 private:
  int n_ = 0;
  std::map<Word, S> terms_;
};

/// Degree of the word acting on a vector with residue sequence seed;
/// nullopt when an idempotent in the word kills it.
std::optional<int> word_degree(const Word& word, const ResidueSequence& seed, const AlgebraConfig& cfg);
/// Residue sequence after the word acts (idempotents ignored).
ResidueSequence word_target_residues(const Word& word, ResidueSequence seed);

/// Anti-automorphism fixing the generators: reverses every word.
template <class S>
AlgebraElement<S> tau(const AlgebraElement<S>& x);
/// e(i) -> e(-i), y -> -y, psi -> -psi.
template <class S>
AlgebraElement<S> sgn_twist(const AlgebraElement<S>& x, const AlgebraConfig& cfg);
/// shift_k into H_n: indices move up by k, idempotent patterns are padded.
template <class S>
AlgebraElement<S> shift_word(const AlgebraElement<S>& x, int k, int target_n);

/// Combinatorial data of a column Garnir node.
struct GarnirData {
  Node node;
  int a = 0, b = 0;              ///< belt occupies a..b in t_λ
  Tableau garnir_tableau;        ///< T_A
  Permutation w;                 ///< w_A with w_A t_λ = T_A
  int bricks_right = 0;          ///< f: bricks in column c+1
  int bricks = 0;                ///< k: all bricks
  int brick_start = 0;           ///< first entry of brick 1 in T_A
  std::vector<Permutation> brick_swaps;  ///< w_1 … w_{k-1}
  std::vector<ReducedWord> cosets;       ///< reduced words of u ∈ D (in S_k)
};

bool is_column_garnir_node(const Multipartition& lambda, const Node& a);
std::vector<Node> column_garnir_nodes(const Multipartition& lambda);
GarnirData column_garnir_data(const Multipartition& lambda, const Node& a, const AlgebraConfig& cfg);

/// g_A = sum over u in D of tau_u psi_{T_A}, tau_j = (-1)^e psi_{w_j} + 1.
template <class S>
AlgebraElement<S> garnir_element_column(const Multipartition& lambda, const Node& a, const AlgebraConfig& cfg);

/// psi_t from the preferred reduced word of w_t (resp. w^t).
template <class S>
AlgebraElement<S> word_of_tableau_col(const Tableau& t, WordConvention conv = WordConvention::LexMin);
template <class S>
AlgebraElement<S> word_of_tableau_row(const Tableau& t, WordConvention conv = WordConvention::LexMin);

}  // namespace klr
