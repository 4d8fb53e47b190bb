#pragma once
// Permutations of {1..n}, reduced words, Bruhat and left orders.

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace klr {

/// One-line notation: w(1),…,w(n). Composition is (x*y)(i) = x(y(i)).
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(int n);  // identity
  /// Validates bijectivity.
  explicit Permutation(std::vector<int> images);
  static Permutation simple(int n, int r);  // s_r

  int n() const { return static_cast<int>(images_.size()); }
  int operator()(int i) const { return images_[i - 1]; }
  const std::vector<int>& images() const { return images_; }

  Permutation operator*(const Permutation& o) const;
  Permutation inverse() const;
  /// s_r * w (swaps the values r and r+1).
  Permutation left_mul_simple(int r) const;
  /// w * s_r (swaps positions r and r+1).
  Permutation right_mul_simple(int r) const;

  bool is_identity() const;
  std::string to_string() const;
  /// Injective key for n ≤ 16.
  std::uint64_t key() const;

  auto operator<=>(const Permutation&) const = default;

 private:
  std::vector<int> images_;
};

using ReducedWord = std::vector<int>;

/// How a preferred reduced word is chosen: lexicographically smallest (the
/// canonical choice) or largest (an alternate used to test independence of
/// the choice).
enum class WordConvention { LexMin, LexMax };

int length(const Permutation& w);
/// l(s_r w) < l(w)
bool is_left_descent(const Permutation& w, int r);
bool is_right_descent(const Permutation& w, int r);
ReducedWord canonical_reduced_word(const Permutation& w, WordConvention conv = WordConvention::LexMin);
/// s_{i1} s_{i2} … s_{ik}
Permutation evaluate(const ReducedWord& word, int n);
bool is_reduced(const ReducedWord& word, int n);

bool bruhat_leq(const Permutation& x, const Permutation& w);
/// l(w) = l(w x^{-1}) + l(x)
bool left_order_leq(const Permutation& x, const Permutation& w);
/// Image of w ∈ S_m under s_i ↦ s_{i+k} in S_n.
Permutation shift_perm(const Permutation& w, int k, int n);

/// One step of a braid path, applied to the current word at position pos
/// (0-based): a commutation swaps word[pos], word[pos+1]; a braid move
/// replaces (a, b, a) at pos with (b, a, b).
struct BraidMove {
  enum Kind { Commute, Braid } kind;
  int pos;
};

/// Turns the reduced word `word` into `target` (a reduced word of the same
/// permutation) by braid and commutation moves. The callback sees each move
/// together with the word just before the move is applied. Throws if the
/// words do not represent the same permutation.
void braid_path(ReducedWord word, const ReducedWord& target,
                const std::function<void(const BraidMove&, const ReducedWord&)>& on_move);
std::vector<BraidMove> braid_path(const ReducedWord& word, const ReducedWord& target);

}  // namespace klr
