#include "klrspecht/symgroup.hpp"

#include <algorithm>
#include <stdexcept>

namespace klr {

Permutation::Permutation(int n) : images_(n) {
  for (int i = 0; i < n; ++i) images_[i] = i + 1;
}

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size() + 1, false);
  for (int v : images_) {
    if (v < 1 || v > n() || seen[v]) throw std::invalid_argument("not a permutation");
    seen[v] = true;
  }
}

Permutation Permutation::simple(int n, int r) {
  if (r < 1 || r >= n) throw std::out_of_range("simple transposition index");
  Permutation s(n);
  std::swap(s.images_[r - 1], s.images_[r]);
  return s;
}

Permutation Permutation::operator*(const Permutation& o) const {
  if (n() != o.n()) throw std::invalid_argument("permutation size mismatch");
  Permutation p;
  p.images_.resize(n());
  for (int i = 0; i < n(); ++i) p.images_[i] = images_[o.images_[i] - 1];
  return p;
}

Permutation Permutation::inverse() const {
  Permutation p;
  p.images_.resize(n());
  for (int i = 0; i < n(); ++i) p.images_[images_[i] - 1] = i + 1;
  return p;
}

Permutation Permutation::left_mul_simple(int r) const {
  Permutation p = *this;
  for (int& v : p.images_) {
    if (v == r) v = r + 1;
    else if (v == r + 1) v = r;
  }
  return p;
}

Permutation Permutation::right_mul_simple(int r) const {
  Permutation p = *this;
  std::swap(p.images_[r - 1], p.images_[r]);
  return p;
}

bool Permutation::is_identity() const {
  for (int i = 0; i < n(); ++i)
    if (images_[i] != i + 1) return false;
  return true;
}

std::string Permutation::to_string() const {
  std::string s = "[";
  for (int i = 0; i < n(); ++i) s += (i ? "," : "") + std::to_string(images_[i]);
  return s + "]";
}

std::uint64_t Permutation::key() const {
  if (n() > 16) throw std::out_of_range("permutation key needs n <= 16");
  std::uint64_t k = 0;
  for (int v : images_) k = (k << 4) | static_cast<std::uint64_t>(v - 1);
  return k;
}

int length(const Permutation& w) {
  int inv = 0;
  for (int i = 1; i <= w.n(); ++i)
    for (int j = i + 1; j <= w.n(); ++j)
      if (w(i) > w(j)) ++inv;
  return inv;
}

bool is_left_descent(const Permutation& w, int r) {
  // r+1 sits to the left of r in one-line notation
  for (int v : w.images()) {
    if (v == r) return false;
    if (v == r + 1) return true;
  }
  return false;
}

bool is_right_descent(const Permutation& w, int r) { return w(r) > w(r + 1); }

ReducedWord canonical_reduced_word(const Permutation& w, WordConvention conv) {
  ReducedWord word;
  Permutation cur = w;
  int n = w.n();
  while (!cur.is_identity()) {
    int pick = 0;
    if (conv == WordConvention::LexMin) {
      for (int r = 1; r < n && !pick; ++r)
        if (is_left_descent(cur, r)) pick = r;
    } else {
      for (int r = n - 1; r >= 1 && !pick; --r)
        if (is_left_descent(cur, r)) pick = r;
    }
    word.push_back(pick);
    cur = cur.left_mul_simple(pick);
  }
  return word;
}

Permutation evaluate(const ReducedWord& word, int n) {
  Permutation p(n);
  for (auto it = word.rbegin(); it != word.rend(); ++it) p = p.left_mul_simple(*it);
  return p;
}

bool is_reduced(const ReducedWord& word, int n) {
  return length(evaluate(word, n)) == static_cast<int>(word.size());
}

bool bruhat_leq(const Permutation& x, const Permutation& w) {
  int n = x.n();
  if (w.n() != n) throw std::invalid_argument("bruhat_leq: size mismatch");
  // rank-matrix criterion, one running column of counts per threshold j
  std::vector<int> cx(n + 2, 0), cw(n + 2, 0);
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= x(i); ++j) ++cx[j];
    for (int j = 1; j <= w(i); ++j) ++cw[j];
    for (int j = 1; j <= n; ++j)
      if (cx[j] > cw[j]) return false;
  }
  return true;
}

bool left_order_leq(const Permutation& x, const Permutation& w) {
  return length(w) == length(w * x.inverse()) + length(x);
}

Permutation shift_perm(const Permutation& w, int k, int n) {
  if (k < 0 || k + w.n() > n) throw std::out_of_range("shift_perm: bad shift");
  std::vector<int> im(n);
  for (int i = 1; i <= n; ++i) im[i - 1] = (i > k && i <= k + w.n()) ? w(i - k) + k : i;
  return Permutation(std::move(im));
}

namespace {

using MoveFn = std::function<void(const BraidMove&, const ReducedWord&)>;

void apply_move(ReducedWord& word, const BraidMove& mv, const MoveFn& cb) {
  cb(mv, word);
  if (mv.kind == BraidMove::Commute) {
    std::swap(word[mv.pos], word[mv.pos + 1]);
  } else {
    int a = word[mv.pos], b = word[mv.pos + 1];
    word[mv.pos] = b;
    word[mv.pos + 1] = a;
    word[mv.pos + 2] = b;
  }
}

// Moves the letter j to position `start`, given that s_j is a left descent of
// the product of word[start..]. Only word[start..] is changed.
void bring_to_front(ReducedWord& word, int start, int j, const MoveFn& cb) {
  if (start >= static_cast<int>(word.size())) throw std::logic_error("braid_path: letter not a descent");
  int a = word[start];
  if (a == j) return;
  if (a - j >= 2 || j - a >= 2) {
    bring_to_front(word, start + 1, j, cb);
    apply_move(word, {BraidMove::Commute, start}, cb);
    return;
  }
  bring_to_front(word, start + 1, j, cb);
  bring_to_front(word, start + 2, a, cb);
  apply_move(word, {BraidMove::Braid, start}, cb);
}

}  // namespace

void braid_path(ReducedWord word, const ReducedWord& target, const MoveFn& on_move) {
  if (word.size() != target.size()) throw std::invalid_argument("braid_path: lengths differ");
  int n = 1;
  for (int x : word) n = std::max(n, x + 1);
  for (int x : target) n = std::max(n, x + 1);
  if (evaluate(word, n) != evaluate(target, n)) throw std::invalid_argument("braid_path: different permutations");
  for (std::size_t pos = 0; pos < target.size(); ++pos) bring_to_front(word, static_cast<int>(pos), target[pos], on_move);
}

std::vector<BraidMove> braid_path(const ReducedWord& word, const ReducedWord& target) {
  std::vector<BraidMove> moves;
  braid_path(word, target, [&](const BraidMove& m, const ReducedWord&) { moves.push_back(m); });
  return moves;
}

}  // namespace klr
