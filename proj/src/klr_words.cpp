#include "klrspecht/klr_words.hpp"

#include <algorithm>
#include <stdexcept>

#include "klrspecht/scalar.hpp"

namespace klr {

GeneratorSymbol GeneratorSymbol::e(const ResidueSequence& i) {
  GeneratorSymbol g{Idempotent, 0, {}};
  for (Residue r : i) g.pattern.emplace_back(r);
  return g;
}

bool GeneratorSymbol::matches(const ResidueSequence& i) const {
  if (pattern.size() != i.size()) return false;
  for (std::size_t k = 0; k < i.size(); ++k)
    if (pattern[k] && *pattern[k] != i[k]) return false;
  return true;
}

std::string GeneratorSymbol::to_string() const {
  switch (kind) {
    case Psi: return "psi" + std::to_string(index);
    case Y: return "y" + std::to_string(index);
    case Idempotent: {
      std::string s = "e(";
      for (std::size_t k = 0; k < pattern.size(); ++k) s += (k ? "," : "") + (pattern[k] ? std::to_string(*pattern[k]) : "*");
      return s + ")";
    }
  }
  return "?";
}

Word psi_word(const ReducedWord& w) {
  Word out;
  for (int r : w) out.push_back(GeneratorSymbol::psi(r));
  return out;
}

std::string word_to_string(const Word& w) {
  if (w.empty()) return "1";
  std::string s;
  for (std::size_t k = 0; k < w.size(); ++k) s += (k ? " " : "") + w[k].to_string();
  return s;
}

template <class S>
std::string AlgebraElement<S>::to_string() const {
  if (terms_.empty()) return "0";
  std::string s;
  for (const auto& [w, c] : terms_) {
    if (!s.empty()) s += " + ";
    s += "(" + c.to_string() + ") " + word_to_string(w);
  }
  return s;
}

std::optional<int> word_degree(const Word& word, const ResidueSequence& seed, const AlgebraConfig& cfg) {
  ResidueSequence cur = seed;
  int deg = 0;
  for (auto it = word.rbegin(); it != word.rend(); ++it) {
    switch (it->kind) {
      case GeneratorSymbol::Idempotent:
        if (!it->matches(cur)) return std::nullopt;
        break;
      case GeneratorSymbol::Y:
        deg += 2;
        break;
      case GeneratorSymbol::Psi: {
        int r = it->index;
        deg -= cfg.cartan(cur[r - 1], cur[r]);
        std::swap(cur[r - 1], cur[r]);
        break;
      }
    }
  }
  return deg;
}

ResidueSequence word_target_residues(const Word& word, ResidueSequence seed) {
  for (auto it = word.rbegin(); it != word.rend(); ++it)
    if (it->kind == GeneratorSymbol::Psi) std::swap(seed[it->index - 1], seed[it->index]);
  return seed;
}

template <class S>
AlgebraElement<S> tau(const AlgebraElement<S>& x) {
  AlgebraElement<S> r(x.n());
  for (const auto& [w, c] : x.terms()) r.add(Word(w.rbegin(), w.rend()), c);
  return r;
}

template <class S>
AlgebraElement<S> sgn_twist(const AlgebraElement<S>& x, const AlgebraConfig& cfg) {
  AlgebraElement<S> r(x.n());
  for (const auto& [w, c] : x.terms()) {
    Word out = w;
    S sign(1);
    for (auto& g : out) {
      if (g.kind == GeneratorSymbol::Idempotent) {
        for (auto& p : g.pattern)
          if (p) p = cfg.reduce(-*p);
      } else {
        sign = -sign;
      }
    }
    r.add(std::move(out), sign * c);
  }
  return r;
}

template <class S>
AlgebraElement<S> shift_word(const AlgebraElement<S>& x, int k, int target_n) {
  if (k < 0 || k + x.n() > target_n) throw std::out_of_range("shift_word: bad shift");
  AlgebraElement<S> r(target_n);
  for (const auto& [w, c] : x.terms()) {
    Word out = w;
    for (auto& g : out) {
      if (g.kind == GeneratorSymbol::Idempotent) {
        std::vector<std::optional<Residue>> p(target_n);
        for (std::size_t s = 0; s < g.pattern.size(); ++s) p[s + k] = g.pattern[s];
        g.pattern = std::move(p);
      } else {
        g.index += k;
      }
    }
    r.add(std::move(out), c);
  }
  return r;
}

bool is_column_garnir_node(const Multipartition& lambda, const Node& a) {
  return contains(lambda, a) && contains(lambda, Node{a.row, a.col + 1, a.comp});
}

std::vector<Node> column_garnir_nodes(const Multipartition& lambda) {
  std::vector<Node> out;
  for (const Node& a : nodes(lambda))
    if (is_column_garnir_node(lambda, a)) out.push_back(a);
  return out;
}

GarnirData column_garnir_data(const Multipartition& lambda, const Node& a, const AlgebraConfig& cfg) {
  if (!is_column_garnir_node(lambda, a)) throw std::invalid_argument("not a column Garnir node");
  GarnirData g;
  g.node = a;
  Tableau tl = t_col(lambda);
  int r = a.row, c = a.col, m = a.comp;
  int len = lambda.column(m, c);
  g.a = tl.entry(a);
  g.b = tl.entry(Node{r, c + 1, m});
  int e = cfg.e;
  int f = 0, k = 0;
  if (e != 0) {
    f = r / e;
    k = f + (len - r + 1) / e;
  }
  int h = k - f;  // bricks in column c
  g.bricks_right = f;
  g.bricks = k;
  // T_A fills the belt in the order: column c+1 rows above its bricks, the
  // bricks of column c, the bricks of column c+1, then the rest of column c.
  auto rows = tl.rows();
  int next = g.a;
  for (int s = 1; s <= r - f * e; ++s) rows[m - 1][s - 1][c] = next++;
  g.brick_start = next;
  for (int s = r; s < r + h * e; ++s) rows[m - 1][s - 1][c - 1] = next++;
  for (int s = r - f * e + 1; s <= r; ++s) rows[m - 1][s - 1][c] = next++;
  for (int s = r + h * e; s <= len; ++s) rows[m - 1][s - 1][c - 1] = next++;
  g.garnir_tableau = Tableau(lambda, std::move(rows));
  g.w = perm_of_col(g.garnir_tableau);

  int n = lambda.size();
  for (int j = 1; j < k; ++j) {
    std::vector<int> im(n);
    for (int x = 1; x <= n; ++x) im[x - 1] = x;
    int s0 = g.brick_start + (j - 1) * e;
    for (int i = 0; i < e; ++i) {
      im[s0 + i - 1] = s0 + e + i;
      im[s0 + e + i - 1] = s0 + i;
    }
    g.brick_swaps.emplace_back(std::move(im));
  }
  // minimal length left coset representatives of S_h x S_f in S_k
  if (k >= 2 && f >= 1 && h >= 1) {
    std::vector<int> choose(k, 0);
    std::fill(choose.begin(), choose.begin() + h, 1);
    do {
      std::vector<int> im;
      for (int v = 1; v <= k; ++v)
        if (choose[v - 1]) im.push_back(v);
      for (int v = 1; v <= k; ++v)
        if (!choose[v - 1]) im.push_back(v);
      Permutation u(im);
      g.cosets.push_back(canonical_reduced_word(u));
    } while (std::prev_permutation(choose.begin(), choose.end()));
  } else {
    g.cosets.push_back({});
  }
  return g;
}

template <class S>
AlgebraElement<S> garnir_element_column(const Multipartition& lambda, const Node& a, const AlgebraConfig& cfg) {
  GarnirData g = column_garnir_data(lambda, a, cfg);
  int n = lambda.size();
  AlgebraElement<S> base = AlgebraElement<S>::from_word(n, psi_word(canonical_reduced_word(g.w)));
  S sign = (cfg.e % 2 == 0) ? S(1) : S(-1);
  std::vector<AlgebraElement<S>> taus;
  for (const auto& sw : g.brick_swaps) {
    AlgebraElement<S> t = AlgebraElement<S>::from_word(n, psi_word(canonical_reduced_word(sw)), sign);
    t.add(Word{}, S(1));
    taus.push_back(std::move(t));
  }
  AlgebraElement<S> total(n);
  for (const auto& u : g.cosets) {
    AlgebraElement<S> term = AlgebraElement<S>::from_word(n, Word{});
    for (int j : u) term = term * taus[j - 1];
    total += term * base;
  }
  return total;
}

template <class S>
AlgebraElement<S> word_of_tableau_col(const Tableau& t, WordConvention conv) {
  return AlgebraElement<S>::from_word(t.size(), psi_word(canonical_reduced_word(perm_of_col(t), conv)));
}

template <class S>
AlgebraElement<S> word_of_tableau_row(const Tableau& t, WordConvention conv) {
  return AlgebraElement<S>::from_word(t.size(), psi_word(canonical_reduced_word(perm_of_row(t), conv)));
}

#define KLR_INSTANTIATE(S)                                                                              \
  template class AlgebraElement<S>;                                                                     \
  template AlgebraElement<S> tau(const AlgebraElement<S>&);                                             \
  template AlgebraElement<S> sgn_twist(const AlgebraElement<S>&, const AlgebraConfig&);                 \
  template AlgebraElement<S> shift_word(const AlgebraElement<S>&, int, int);                            \
  template AlgebraElement<S> garnir_element_column<S>(const Multipartition&, const Node&, const AlgebraConfig&); \
  template AlgebraElement<S> word_of_tableau_col<S>(const Tableau&, WordConvention);                   \
  template AlgebraElement<S> word_of_tableau_row<S>(const Tableau&, WordConvention);

KLR_INSTANTIATE(Rational)
KLR_INSTANTIATE(ModP)

}  // namespace klr
