#include "klrspecht/hom.hpp"

#include <map>
#include <stdexcept>

#include "json.hpp"

namespace klr {

template <class S>
std::vector<AlgebraElement<S>> seed_annihilators(const Multipartition& lambda, const AlgebraConfig& cfg) {
  int n = lambda.size();
  std::vector<AlgebraElement<S>> out;
  for (int r = 1; r <= n; ++r) out.push_back(AlgebraElement<S>::from_word(n, Word{GeneratorSymbol::y(r)}));
  Tableau t = t_col(lambda);
  for (int r = 1; r < n; ++r) {
    const Node& a = t.node_of(r);
    const Node& b = t.node_of(r + 1);
    if (a.comp == b.comp && a.col == b.col && b.row == a.row + 1)
      out.push_back(AlgebraElement<S>::from_word(n, Word{GeneratorSymbol::psi(r)}));
  }
  for (const Node& a : column_garnir_nodes(lambda)) out.push_back(garnir_element_column<S>(lambda, a, cfg));
  return out;
}

template <class S>
bool is_hom_image(const Multipartition& lambda, const SparseVector<S>& x, const SpechtModel<S>& model) {
  if (lambda.size() != model.n()) return false;
  ResidueSequence seed = residue_sequence(t_col(lambda), model.cfg);
  for (const auto& [i, c] : x)
    if (model.residues.at(i) != seed) return false;
  for (const auto& g : seed_annihilators<S>(lambda, model.cfg))
    if (!act(g, x, model).empty()) return false;
  return true;
}

template <class S>
HomBasis<S> hom_space(const Multipartition& lambda, const Multipartition& mu, const AlgebraConfig& cfg,
                      bool dominated, ModelCache<S>& cache, WordConvention conv) {
  HomBasis<S> h;
  h.lambda = lambda;
  h.mu = mu;
  h.cfg = cfg;
  h.dominated = dominated;
  if (lambda.level() != cfg.level() || mu.level() != cfg.level())
    throw std::invalid_argument("multipartition level differs from the multicharge");
  if (lambda.size() != mu.size() || content(lambda, cfg) != content(mu, cfg)) return h;

  h.target = cache.column(mu, cfg, conv);
  const SpechtModel<S>& model = *h.target;
  ResidueSequence seed = residue_sequence(t_col(lambda), cfg);
  int base = codegree(t_col(lambda), cfg);

  std::map<int, std::vector<int>> by_degree;
  for (int j = 0; j < model.dim(); ++j) {
    if (model.residues[j] != seed) continue;
    if (dominated && !is_col_dominated(model.basis[j], lambda)) continue;
    by_degree[model.degrees[j]].push_back(j);
  }
  if (by_degree.empty()) return h;

  std::vector<AlgebraElement<S>> constraints = seed_annihilators<S>(lambda, cfg);
  int stride = model.dim();
  for (const auto& [deg, cand] : by_degree) {
    std::vector<SparseVector<S>> columns;
    for (int j : cand) {
      std::vector<typename SparseVector<S>::Entry> stacked;
      SparseVector<S> ej = SparseVector<S>::unit(j);
      for (std::size_t k = 0; k < constraints.size(); ++k)
        for (const auto& [i, c] : act(constraints[k], ej, model))
          stacked.emplace_back(static_cast<int>(k) * stride + i, c);
      columns.push_back(SparseVector<S>::from_entries(std::move(stacked)));
    }
    // kernel vectors lead at their largest position, i.e. the most dominant tableau
    for (const auto& kv : kernel(columns)) {
      std::vector<typename SparseVector<S>::Entry> img;
      for (const auto& [pos, c] : kv) img.emplace_back(cand[pos], c);
      h.basis.push_back({deg - base, SparseVector<S>::from_entries(std::move(img))});
    }
  }
  return h;
}

template <class S>
SparseVector<S> product_image(const SpechtModel<S>& left, const SparseVector<S>& a, const SpechtModel<S>& right,
                              const SparseVector<S>& b, const SpechtModel<S>& target, int c, int m) {
  std::vector<typename SparseVector<S>::Entry> out;
  for (const auto& [s, x] : a)
    for (const auto& [t, y] : b)
      out.emplace_back(target.index_of(lr_join_tableaux(left.basis[s], right.basis[t], c, m)), x * y);
  return SparseVector<S>::from_entries(std::move(out));
}

template <class S>
HomElement<S> product_hom(const HomBasis<S>& left, const HomElement<S>& phi_l, const HomBasis<S>& right,
                          const HomElement<S>& phi_r, const Multipartition& lambda,
                          const SpechtModel<S>& target, int c, int m) {
  if (!left.target || !right.target) throw std::invalid_argument("product of homomorphisms from an empty space");
  HomElement<S> out;
  out.degree = phi_l.degree + phi_r.degree;
  out.image = product_image(*left.target, phi_l.image, *right.target, phi_r.image, target, c, m);
  if (!is_hom_image(lambda, out.image, target))
    throw EngineInconsistency("product homomorphism fails the relations of " + lambda.to_string());
  return out;
}

namespace {

/// Coordinates of x in the f-basis: a = P x.
template <class S>
SparseVector<S> f_coordinates(const SparseVector<S>& x, const std::vector<SparseVector<S>>& pairing) {
  std::vector<typename SparseVector<S>::Entry> out;
  for (std::size_t s = 0; s < pairing.size(); ++s) {
    S sum(0);
    for (const auto& [t, c] : x) sum += pairing[s].coeff(t) * c;
    if (!sum.is_zero()) out.emplace_back(static_cast<int>(s), sum);
  }
  return SparseVector<S>::from_entries(std::move(out));
}

}  // namespace

template <class S>
RowJoinCandidate<S> row_join_candidate(const HomBasis<S>& bottom, const HomElement<S>& phi_b,
                                       const HomBasis<S>& top, const HomElement<S>& phi_t,
                                       const Multipartition& lambda, const SpechtModel<S>& target, int r, int m) {
  RowJoinCandidate<S> out;
  if (!bottom.target || !top.target || phi_b.image.empty() || phi_t.image.empty()) {
    out.is_hom = true;
    return out;
  }
  const SpechtModel<S>& mb = *bottom.target;
  const SpechtModel<S>& mt = *top.target;
  SparseVector<S> a = f_coordinates(phi_b.image, pairing_matrix(mb));
  SparseVector<S> b = f_coordinates(phi_t.image, pairing_matrix(mt));
  std::vector<SparseVector<S>> f = dual_basis_f(target);
  Accumulator<S> acc;
  for (const auto& [t, x] : a)
    for (const auto& [s, y] : b)
      acc.add(x * y, f[target.index_of(row_join_tableaux(mb.basis[t], mt.basis[s], lambda, r, m))]);
  out.vector = acc.finish();
  out.is_hom = is_hom_image(lambda, out.vector, target);
  return out;
}

template <class S>
std::string image_to_string(const SparseVector<S>& x, const SpechtModel<S>& model) {
  if (x.empty()) return "0";
  std::string out;
  // most dominant first
  for (auto it = x.entries().rbegin(); it != x.entries().rend(); ++it) {
    std::string c = it->second.to_string();
    bool neg = !c.empty() && c[0] == '-';
    if (neg) c = c.substr(1);
    if (out.empty())
      out += neg ? "-" : "";
    else
      out += neg ? " - " : " + ";
    if (c != "1") out += c;
    out += "v_" + model.basis[it->first].to_string();
  }
  return out;
}

template <class S>
std::string hom_to_json(const HomBasis<S>& h) {
  nlohmann::ordered_json j;
  nlohmann::ordered_json gd = nlohmann::ordered_json::object();
  GradedDimension g = h.graded_dimension();
  for (const auto& [d, c] : g.terms()) gd[std::to_string(d)] = c;
  j["graded_dim"] = gd;
  nlohmann::ordered_json basis = nlohmann::ordered_json::array();
  for (const auto& e : h.basis) {
    nlohmann::ordered_json img = nlohmann::ordered_json::object();
    for (auto it = e.image.entries().rbegin(); it != e.image.entries().rend(); ++it)
      img[h.target->basis[it->first].to_string()] = exact_string(it->second);
    basis.push_back({{"degree", e.degree}, {"image", img}});
  }
  j["basis"] = basis;
  return j.dump();
}

#define HOM_INSTANTIATE(S)                                                                                        \
  template std::vector<AlgebraElement<S>> seed_annihilators<S>(const Multipartition&, const AlgebraConfig&);      \
  template bool is_hom_image<S>(const Multipartition&, const SparseVector<S>&, const SpechtModel<S>&);           \
  template HomBasis<S> hom_space<S>(const Multipartition&, const Multipartition&, const AlgebraConfig&, bool,     \
                                    ModelCache<S>&, WordConvention);                                              \
  template SparseVector<S> product_image<S>(const SpechtModel<S>&, const SparseVector<S>&, const SpechtModel<S>&, \
                                            const SparseVector<S>&, const SpechtModel<S>&, int, int);             \
  template HomElement<S> product_hom<S>(const HomBasis<S>&, const HomElement<S>&, const HomBasis<S>&,             \
                                        const HomElement<S>&, const Multipartition&, const SpechtModel<S>&, int,  \
                                        int);                                                                     \
  template RowJoinCandidate<S> row_join_candidate<S>(const HomBasis<S>&, const HomElement<S>&,                    \
                                                     const HomBasis<S>&, const HomElement<S>&,                    \
                                                     const Multipartition&, const SpechtModel<S>&, int, int);     \
  template std::string image_to_string<S>(const SparseVector<S>&, const SpechtModel<S>&);                         \
  template std::string hom_to_json<S>(const HomBasis<S>&);

HOM_INSTANTIATE(Rational)
HOM_INSTANTIATE(ModP)

}  // namespace klr
