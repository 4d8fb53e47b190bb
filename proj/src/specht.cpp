#include "klrspecht/specht.hpp"

#include <pthread.h>

#include <deque>
#include <exception>
#include <functional>
#include <optional>
#include <queue>
#include <sstream>
#include <unordered_map>

#include <json.hpp>

#include "klrspecht/scalar.hpp"

namespace klr {

namespace {

// Runs f on a thread with a large stack; the lazy action tables recurse on
// word length and the braid paths recurse on top of that.
void run_with_big_stack(const std::function<void()>& f) {
  struct Job {
    const std::function<void()>* f;
    std::exception_ptr error;
    unsigned modulus;
  } job{&f, nullptr, 0};
  try {
    job.modulus = ModP::modulus();
  } catch (...) {
    job.modulus = 0;
  }
  auto body = [](void* p) -> void* {
    auto* j = static_cast<Job*>(p);
    try {
      if (j->modulus) {
        ModP::Context ctx(j->modulus);
        (*j->f)();
      } else {
        (*j->f)();
      }
    } catch (...) {
      j->error = std::current_exception();
    }
    return nullptr;
  };
  pthread_attr_t attr;
  pthread_attr_init(&attr);
  pthread_attr_setstacksize(&attr, std::size_t(1) << 29);
  pthread_t th;
  if (pthread_create(&th, &attr, body, &job) != 0) {
    pthread_attr_destroy(&attr);
    body(&job);
  } else {
    pthread_join(th, nullptr);
    pthread_attr_destroy(&attr);
  }
  if (job.error) std::rethrow_exception(job.error);
}

long factorial(int n) {
  long f = 1;
  for (int k = 2; k <= n; ++k) f *= k;
  return f;
}

std::string seq_string(const ResidueSequence& i) {
  std::string s = "(";
  for (std::size_t k = 0; k < i.size(); ++k) s += (k ? "," : "") + std::to_string(i[k]);
  return s + ")";
}

// H e(i_λ) / (y_s, psi_j for j ↓ j+1 in t_λ): basis v_d = psi_{pref d} z over
// the minimal coset representatives d of the column Young subgroup.
template <class S>
class InducedModule {
 public:
  using Vec = SparseVector<S>;

  InducedModule(const Multipartition& lambda, const AlgebraConfig& cfg) : lambda_(lambda), cfg_(cfg) {
    n_ = lambda.size();
    tl_ = t_col(lambda);
    seed_res_ = residue_sequence(tl_, cfg);
    seed_deg_ = codegree(tl_, cfg);
    in_j_.assign(n_ + 1, false);
    for (int j = 1; j < n_; ++j) {
      Node a = tl_.node_of(j), b = tl_.node_of(j + 1);
      in_j_[j] = (a.comp == b.comp && a.col == b.col && b.row == a.row + 1);
    }
    register_elem(Permutation(n_));
  }

  int n() const { return n_; }
  std::size_t size() const { return elems_.size(); }
  bool standard(int i) const { return elems_[i].standard; }
  const Permutation& perm(int i) const { return elems_[i].d; }
  int length_of(int i) const { return elems_[i].len; }
  const ResidueSequence& res(int i) const { return elems_[i].res; }
  int deg(int i) const { return elems_[i].deg; }

  bool in_dj(const Permutation& d) const {
    for (int j = 1; j < n_; ++j)
      if (in_j_[j] && d(j) > d(j + 1)) return false;
    return true;
  }

  long dj_size() const {
    long total = factorial(n_);
    for (int m = 1; m <= lambda_.level(); ++m) {
      const Partition& p = lambda_.component(m);
      if (p.empty()) continue;
      for (int c = 1; c <= p[0]; ++c) total /= factorial(lambda_.column(m, c));
    }
    return total;
  }

  int register_elem(const Permutation& d) {
    auto key = d.key();
    auto it = index_.find(key);
    if (it != index_.end()) return it->second;
    if (!in_dj(d)) throw EngineInconsistency("coset representative expected: " + d.to_string());
    Elem el;
    el.d = d;
    el.word = canonical_reduced_word(d);
    el.len = static_cast<int>(el.word.size());
    Permutation inv = d.inverse();
    el.res.resize(n_);
    for (int k = 1; k <= n_; ++k) el.res[k - 1] = seed_res_[inv(k) - 1];
    el.deg = seed_deg_ + *word_degree(psi_word(el.word), seed_res_, cfg_);
    el.standard = apply(d, tl_).is_row_strict();
    el.psi.resize(n_ > 0 ? n_ - 1 : 0);
    el.y.resize(n_);
    el.busy_psi.assign(el.psi.size(), 0);
    el.busy_y.assign(n_, 0);
    elems_.push_back(std::move(el));
    int idx = static_cast<int>(elems_.size()) - 1;
    index_.emplace(key, idx);
    return idx;
  }

  Vec psi(int r, const Vec& v) {
    Accumulator<S> acc;
    for (const auto& [i, c] : v) acc.add(c, psi_basis(r, i));
    return acc.finish();
  }
  Vec y(int s, const Vec& v) {
    Accumulator<S> acc;
    for (const auto& [i, c] : v) acc.add(c, y_basis(s, i));
    return acc.finish();
  }
  /// Letters act right to left.
  Vec eval_word(const ReducedWord& w, Vec v) {
    for (auto it = w.rbegin(); it != w.rend() && !v.empty(); ++it) v = psi(*it, v);
    return v;
  }

  const Vec& psi_basis(int r, int i) {
    if (elems_[i].psi[r - 1]) return *elems_[i].psi[r - 1];
    if (elems_[i].busy_psi[r - 1]) throw EngineInconsistency("cyclic psi evaluation");
    elems_[i].busy_psi[r - 1] = 1;
    Vec out = compute_psi(r, i);
    elems_[i].busy_psi[r - 1] = 0;
    elems_[i].psi[r - 1] = std::move(out);
    return *elems_[i].psi[r - 1];
  }

  const Vec& y_basis(int s, int i) {
    if (elems_[i].y[s - 1]) return *elems_[i].y[s - 1];
    if (elems_[i].busy_y[s - 1]) throw EngineInconsistency("cyclic y evaluation");
    elems_[i].busy_y[s - 1] = 1;
    Vec out = compute_y(s, i);
    elems_[i].busy_y[s - 1] = 0;
    elems_[i].y[s - 1] = std::move(out);
    return *elems_[i].y[s - 1];
  }

  const Multipartition& shape() const { return lambda_; }
  const Tableau& t_lambda() const { return tl_; }
  bool in_j(int j) const { return in_j_[j]; }

 private:
  struct Elem {
    Permutation d;
    ReducedWord word;
    int len = 0;
    ResidueSequence res;
    int deg = 0;
    bool standard = false;
    std::vector<std::optional<Vec>> psi, y;
    std::vector<char> busy_psi, busy_y;
  };

  // (psi_{r+1} psi_r psi_{r+1} - psi_r psi_{r+1} psi_r) correction at r on
  // vectors of residue i, applied to v.
  Vec braid_correction(int r, const ResidueSequence& i, const Vec& v) {
    Residue a = i[r - 1], b = i[r], c = i[r + 1];
    if (a != c) return {};
    if (cfg_.arrow(a, b)) return v;
    if (cfg_.arrow(b, a)) return -v;
    if (cfg_.e == 2 && a != b) {
      Vec out = y(r, v);
      out.axpy(S(-2), y(r + 1, v));
      out += y(r + 2, v);
      return out;
    }
    return {};
  }

  Vec compute_psi(int r, int i) {
    Permutation d = elems_[i].d;
    Permutation x = d.left_mul_simple(r);
    if (!is_left_descent(d, r)) {
      ReducedWord w{r};
      ReducedWord dw = elems_[i].word;
      w.insert(w.end(), dw.begin(), dw.end());
      Vec result;
      ReducedWord target;
      if (in_dj(x)) {
        int xi = register_elem(x);
        target = elems_[xi].word;
        result = Vec::unit(xi);
      } else {
        int k = 0;
        for (int j = 1; j < n_; ++j)
          if (in_j_[j] && d(j) == r && d(j + 1) == r + 1) k = j;
        if (k == 0) throw EngineInconsistency("no column pair for a non-coset product");
        target = dw;
        target.push_back(k);
      }
      Accumulator<S> corr;
      braid_path(w, target, [&](const BraidMove& mv, const ReducedWord& cur) {
        if (mv.kind != BraidMove::Braid) return;
        int p = mv.pos;
        int a = cur[p], b = cur[p + 1];
        ReducedWord pre(cur.begin(), cur.begin() + p);
        ReducedWord suf(cur.begin() + p + 3, cur.end());
        ResidueSequence ri = word_target_residues(psi_word(suf), seed_res_);
        int rr = (b == a + 1) ? a : a - 1;
        Residue u = ri[rr - 1], m = ri[rr], w3 = ri[rr + 1];
        if (u != w3) return;
        bool live = cfg_.arrow(u, m) || cfg_.arrow(m, u) || (cfg_.e == 2 && u != m);
        if (!live) return;
        Vec sv = eval_word(suf, Vec::unit(0));
        Vec cv = braid_correction(rr, ri, sv);
        cv = eval_word(pre, std::move(cv));
        corr.add(b == a + 1 ? S(1) : S(-1), cv);
      });
      result += corr.finish();
      return result;
    }
    // down: v_d = psi_r v_x - C with psi_r v_x = v_d + C
    int xi = register_elem(x);
    Vec up = psi_basis(r, xi);
    Vec c = up - Vec::unit(i);
    const ResidueSequence& rx = elems_[xi].res;
    Residue a = rx[r - 1], b = rx[r];
    Vec ex = Vec::unit(xi);
    Vec q;
    if (a == b) {
    } else if (cfg_.arrow(a, b)) {
      q = y(r + 1, ex) - y(r, ex);
    } else if (cfg_.arrow(b, a)) {
      q = y(r, ex) - y(r + 1, ex);
    } else if (cfg_.e == 2) {
      Vec t = y(r + 1, ex) - y(r, ex);
      q = -(y(r + 1, t) - y(r, t));
    } else {
      q = ex;
    }
    q -= psi(r, c);
    return q;
  }

  Vec compute_y(int s, int i) {
    if (elems_[i].len == 0) return {};
    int j = elems_[i].word.front();
    int di = register_elem(elems_[i].d.left_mul_simple(j));
    const ResidueSequence& rd = elems_[di].res;
    bool delta = rd[j - 1] == rd[j];
    Vec ed = Vec::unit(di);
    if (s != j && s != j + 1) return psi(j, y(s, ed));
    if (s == j) {
      Vec out = psi(j, y(j + 1, ed));
      if (delta) out -= ed;
      return out;
    }
    Vec out = psi(j, y(j, ed));
    if (delta) out += ed;
    return out;
  }

  Multipartition lambda_;
  AlgebraConfig cfg_;
  int n_ = 0;
  Tableau tl_;
  ResidueSequence seed_res_;
  int seed_deg_ = 0;
  std::vector<bool> in_j_;
  std::deque<Elem> elems_;
  std::unordered_map<std::uint64_t, int> index_;
};

template <class S>
SparseVector<S> garnir_image(InducedModule<S>& mod, const AlgebraElement<S>& g) {
  Accumulator<S> acc;
  for (const auto& [w, c] : g.terms()) {
    ReducedWord letters;
    for (const auto& sym : w) {
      if (sym.kind != GeneratorSymbol::Psi) throw EngineInconsistency("Garnir element with non-psi letter");
      letters.push_back(sym.index);
    }
    acc.add(c, mod.eval_word(letters, SparseVector<S>::unit(0)));
  }
  return acc.finish();
}

template <class S>
void check_homogeneous(const InducedModule<S>& mod, const SparseVector<S>& v, const char* what) {
  if (v.empty()) return;
  int first = v.begin()->first;
  for (const auto& [i, c] : v)
    if (mod.res(i) != mod.res(first) || mod.deg(i) != mod.deg(first))
      throw EngineInconsistency(std::string("inhomogeneous vector in ") + what);
}

// Solves U x = y for upper triangular U given by columns (U(i,j) != 0 only
// for i <= j).
template <class S>
SparseVector<S> solve_upper(const std::vector<SparseVector<S>>& columns, const SparseVector<S>& y) {
  std::map<int, S> work;
  for (const auto& [i, c] : y) work.emplace(i, c);
  std::vector<typename SparseVector<S>::Entry> out;
  while (!work.empty()) {
    auto it = std::prev(work.end());
    int i = it->first;
    S c = it->second;
    work.erase(it);
    S diag = columns[i].coeff(i);
    if (diag.is_zero()) throw EngineInconsistency("singular triangular matrix");
    S x = c / diag;
    out.emplace_back(i, x);
    for (const auto& [k, u] : columns[i]) {
      if (k == i) continue;
      if (k > i) throw EngineInconsistency("matrix is not upper triangular");
      auto [w, fresh] = work.try_emplace(k, -(x * u));
      if (!fresh) {
        w->second -= x * u;
        if (w->second.is_zero()) work.erase(w);
      }
    }
  }
  return SparseVector<S>::from_entries(std::move(out));
}

template <class S>
SpechtModel<S> build_lexmin_column(const Multipartition& lambda, const AlgebraConfig& cfg) {
  if (lambda.level() != cfg.level()) throw std::invalid_argument("level of λ differs from the multicharge");
  SpechtModel<S> model;
  model.shape = lambda;
  model.cfg = cfg;
  model.orientation = Orientation::Column;
  model.convention = WordConvention::LexMin;
  int n = lambda.size();
  std::vector<Tableau> std_list = enumerate_std(lambda);

  InducedModule<S> mod(lambda, cfg);
  long target = mod.dj_size() - static_cast<long>(std_list.size());

  EchelonBasis<S> k_basis([&mod](int i) -> std::uint32_t {
    return (mod.standard(i) ? 0u : 0x80000000u) | static_cast<std::uint32_t>(mod.length_of(i));
  });
  std::queue<SparseVector<S>> frontier;
  auto insert = [&](const SparseVector<S>& v, const char* what) {
    if (v.empty()) return;
    check_homogeneous(mod, v, what);
    int row = k_basis.insert(v);
    if (row < 0) return;
    if (mod.standard(k_basis.pivot(row)))
      throw EngineInconsistency("straightening produced a relation among standard vectors of " + lambda.to_string());
    frontier.push(k_basis.rows()[row]);
  };
  for (const Node& a : column_garnir_nodes(lambda))
    insert(garnir_image(mod, garnir_element_column<S>(lambda, a, cfg)), "Garnir image");
  while (!frontier.empty() && static_cast<long>(k_basis.rank()) < target) {
    SparseVector<S> v = std::move(frontier.front());
    frontier.pop();
    for (int r = 1; r < n && static_cast<long>(k_basis.rank()) < target; ++r) insert(mod.psi(r, v), "psi closure");
    for (int s = 1; s <= n && static_cast<long>(k_basis.rank()) < target; ++s) insert(mod.y(s, v), "y closure");
  }
  if (static_cast<long>(k_basis.rank()) != target)
    throw EngineInconsistency("dimension certificate failed for " + lambda.to_string() + ": relation rank " +
                              std::to_string(k_basis.rank()) + ", expected " + std::to_string(target));

  std::unordered_map<int, int> coord;
  std::vector<int> elem_of;
  for (std::size_t k = 0; k < std_list.size(); ++k) {
    int idx = mod.register_elem(perm_of_col(std_list[k]));
    coord.emplace(idx, static_cast<int>(k));
    elem_of.push_back(idx);
    model.basis.push_back(std_list[k]);
    model.index.emplace(std_list[k], static_cast<int>(k));
    model.residues.push_back(residue_sequence(std_list[k], cfg));
    model.degrees.push_back(codegree(std_list[k], cfg));
    if (mod.deg(idx) != model.degrees.back() || mod.res(idx) != model.residues.back())
      throw EngineInconsistency("degree or residue mismatch at " + std_list[k].to_string());
  }
  model.seed = model.index_of(t_col(lambda));
  auto project = [&](const SparseVector<S>& v) {
    SparseVector<S> r = k_basis.reduce(v);
    std::vector<typename SparseVector<S>::Entry> out;
    for (const auto& [i, c] : r) {
      auto it = coord.find(i);
      if (it == coord.end()) throw EngineInconsistency("unreduced nonstandard coordinate");
      out.emplace_back(it->second, c);
    }
    return SparseVector<S>::from_entries(std::move(out));
  };
  model.psi.resize(n > 0 ? n - 1 : 0);
  model.y.resize(n);
  for (int r = 1; r < n; ++r)
    for (int idx : elem_of) model.psi[r - 1].columns.push_back(project(mod.psi_basis(r, idx)));
  for (int s = 1; s <= n; ++s)
    for (int idx : elem_of) model.y[s - 1].columns.push_back(project(mod.y_basis(s, idx)));
  return model;
}

// Rewrites a model in the basis b_t = B e_t (B upper unitriangular).
template <class S>
void change_basis(SpechtModel<S>& model, const std::vector<SparseVector<S>>& b) {
  auto conj = [&](SparseMatrix<S>& m) {
    SparseMatrix<S> out;
    for (const auto& col : b) out.columns.push_back(solve_upper(b, m.apply(col)));
    m = std::move(out);
  };
  for (auto& m : model.psi) conj(m);
  for (auto& m : model.y) conj(m);
}

template <class S>
void apply_convention(SpechtModel<S>& model, WordConvention conv,
                      const std::function<Permutation(const Tableau&)>& perm_of) {
  model.convention = conv;
  if (conv == WordConvention::LexMin) return;
  std::vector<SparseVector<S>> b;
  for (const Tableau& t : model.basis)
    b.push_back(act_word(psi_word(canonical_reduced_word(perm_of(t), conv)), SparseVector<S>::unit(model.seed), model));
  for (std::size_t k = 0; k < b.size(); ++k)
    if (!(b[k].coeff(static_cast<int>(k)) == S(1)))
      throw EngineInconsistency("alternate reduced word changes the leading term");
  change_basis(model, b);
}

}  // namespace

AlgebraConfig conjugate_config(const AlgebraConfig& cfg) {
  std::vector<Residue> k;
  for (auto it = cfg.kappa.rbegin(); it != cfg.kappa.rend(); ++it) k.push_back(-*it);
  return cfg.with_kappa(std::move(k));
}

template <class S>
SpechtModel<S> build_column_model(const Multipartition& lambda, const AlgebraConfig& cfg, WordConvention conv) {
  SpechtModel<S> model;
  run_with_big_stack([&] { model = build_lexmin_column<S>(lambda, cfg); });
  apply_convention(model, conv, [](const Tableau& t) { return perm_of_col(t); });
  return model;
}

template <class S>
SpechtModel<S> build_row_model(const Multipartition& lambda, const AlgebraConfig& cfg, WordConvention conv) {
  AlgebraConfig ccfg = conjugate_config(cfg);
  SpechtModel<S> col = build_column_model<S>(conjugate(lambda), ccfg, conv);
  SpechtModel<S> model;
  model.shape = lambda;
  model.cfg = cfg;
  model.orientation = Orientation::Row;
  model.convention = conv;
  std::vector<S> sign;
  for (std::size_t k = 0; k < col.basis.size(); ++k) {
    Tableau s = conjugate_tableau(col.basis[k]);
    model.basis.push_back(s);
    model.index.emplace(s, static_cast<int>(k));
    model.residues.push_back(residue_sequence(s, cfg));
    model.degrees.push_back(degree(s, cfg));
    sign.push_back(length(perm_of_col(col.basis[k])) % 2 ? S(-1) : S(1));
  }
  auto twist = [&](const SparseMatrix<S>& m) {
    SparseMatrix<S> out;
    for (std::size_t j = 0; j < m.columns.size(); ++j) {
      std::vector<typename SparseVector<S>::Entry> e;
      for (const auto& [i, c] : m.columns[j]) e.emplace_back(i, -(sign[i] * sign[j] * c));
      out.columns.push_back(SparseVector<S>::from_entries(std::move(e)));
    }
    return out;
  };
  for (const auto& m : col.psi) model.psi.push_back(twist(m));
  for (const auto& m : col.y) model.y.push_back(twist(m));
  model.seed = col.seed;
  if (!(model.basis[model.seed] == t_row(lambda))) throw EngineInconsistency("row seed is not t^λ");
  return model;
}

template <class S>
SparseVector<S> act_word(const Word& w, const SparseVector<S>& v, const SpechtModel<S>& model) {
  SparseVector<S> cur = v;
  for (auto it = w.rbegin(); it != w.rend() && !cur.empty(); ++it) {
    switch (it->kind) {
      case GeneratorSymbol::Idempotent: {
        std::vector<typename SparseVector<S>::Entry> keep;
        for (const auto& [i, c] : cur)
          if (it->matches(model.residues.at(i))) keep.emplace_back(i, c);
        cur = SparseVector<S>::from_entries(std::move(keep));
        break;
      }
      case GeneratorSymbol::Y:
        if (it->index < 1 || it->index > model.n()) throw std::out_of_range("y index out of range");
        cur = model.y[it->index - 1].apply(cur);
        break;
      case GeneratorSymbol::Psi:
        if (it->index < 1 || it->index >= model.n()) throw std::out_of_range("psi index out of range");
        cur = model.psi[it->index - 1].apply(cur);
        break;
    }
  }
  return cur;
}

template <class S>
SparseVector<S> act(const AlgebraElement<S>& x, const SparseVector<S>& v, const SpechtModel<S>& model) {
  if (x.n() != model.n()) throw std::invalid_argument("algebra element and module differ in n");
  Accumulator<S> acc;
  for (const auto& [w, c] : x.terms()) acc.add(c, act_word(w, v, model));
  return acc.finish();
}

std::string ValidationReport::summary() const {
  std::ostringstream out;
  for (const auto& c : checks) {
    out << (c.passed ? "pass " : "FAIL ") << c.name;
    if (!c.passed && !c.witness.empty()) out << ": " << c.witness;
    out << "\n";
  }
  return out.str();
}

template <class S>
ValidationReport validate(const SpechtModel<S>& model) {
  using Vec = SparseVector<S>;
  ValidationReport report;
  const int n = model.n();
  const int dim = model.dim();
  const AlgebraConfig& cfg = model.cfg;
  auto P = [&](int r, const Vec& v) { return model.psi[r - 1].apply(v); };
  auto Y = [&](int r, const Vec& v) { return model.y[r - 1].apply(v); };
  auto fail = [](CheckResult& c, const std::string& w) {
    if (c.passed) { c.passed = false; c.witness = w; }
  };
  auto where = [&](int t, const std::string& rel) { return rel + " on v_" + model.basis[t].to_string(); };

  CheckResult idem{"psi_r e(i) = e(s_r i) psi_r"}, ycomm{"y_r y_s = y_s y_r"}, psiy{"psi_r y_s = y_s psi_r"},
      psicomm{"psi_r psi_s = psi_s psi_r"}, ypsi{"y psi_r e(i)"}, sq{"psi_r^2 e(i)"}, braid{"braid relation"},
      homog{"homogeneity"}, cyc{"cyclotomic"};
  for (int t = 0; t < dim; ++t) {
    Vec et = Vec::unit(t);
    const ResidueSequence& i = model.residues[t];
    int d = model.degrees[t];
    for (int r = 1; r < n; ++r) {
      Vec pv = P(r, et);
      ResidueSequence si = i;
      std::swap(si[r - 1], si[r]);
      for (const auto& [k, c] : pv) {
        if (model.residues[k] != si) fail(idem, where(t, "psi_" + std::to_string(r)));
        if (model.degrees[k] != d - cfg.cartan(i[r - 1], i[r])) fail(homog, where(t, "psi_" + std::to_string(r)));
      }
    }
    for (int s = 1; s <= n; ++s) {
      Vec yv = Y(s, et);
      for (const auto& [k, c] : yv)
        if (model.residues[k] != i || model.degrees[k] != d + 2) fail(homog, where(t, "y_" + std::to_string(s)));
      for (int s2 = s + 1; s2 <= n; ++s2)
        if (!(Y(s, Y(s2, et)) == Y(s2, Y(s, et)))) fail(ycomm, where(t, "y" + std::to_string(s) + " y" + std::to_string(s2)));
      for (int r = 1; r < n; ++r)
        if (s != r && s != r + 1 && !(P(r, Y(s, et)) == Y(s, P(r, et))))
          fail(psiy, where(t, "psi" + std::to_string(r) + " y" + std::to_string(s)));
    }
    for (int r = 1; r < n; ++r)
      for (int s = r + 2; s < n; ++s)
        if (!(P(r, P(s, et)) == P(s, P(r, et)))) fail(psicomm, where(t, "psi" + std::to_string(r) + " psi" + std::to_string(s)));
    for (int r = 1; r < n; ++r) {
      Residue a = i[r - 1], b = i[r];
      Vec delta = (a == b) ? et : Vec{};
      if (!(Y(r, P(r, et)) == P(r, Y(r + 1, et)) - delta)) fail(ypsi, where(t, "y_r psi_r, r=" + std::to_string(r)));
      if (!(Y(r + 1, P(r, et)) == P(r, Y(r, et)) + delta)) fail(ypsi, where(t, "y_{r+1} psi_r, r=" + std::to_string(r)));
      Vec q;
      if (a == b) {
      } else if (cfg.arrow(a, b)) {
        q = Y(r + 1, et) - Y(r, et);
      } else if (cfg.arrow(b, a)) {
        q = Y(r, et) - Y(r + 1, et);
      } else if (cfg.e == 2) {
        Vec u = Y(r + 1, et) - Y(r, et);
        q = Y(r, u) - Y(r + 1, u);
      } else {
        q = et;
      }
      if (!(P(r, P(r, et)) == q)) fail(sq, where(t, "r=" + std::to_string(r)));
    }
    for (int r = 1; r + 1 < n; ++r) {
      Residue a = i[r - 1], b = i[r], c = i[r + 1];
      Vec corr;
      if (a == c) {
        if (cfg.arrow(a, b)) corr = et;
        else if (cfg.arrow(b, a)) corr = -et;
        else if (cfg.e == 2 && a != b) {
          corr = Y(r, et);
          corr.axpy(S(-2), Y(r + 1, et));
          corr += Y(r + 2, et);
        }
      }
      Vec lhs = P(r, P(r + 1, P(r, et)));
      Vec rhs = P(r + 1, P(r, P(r + 1, et))) + corr;
      if (!(lhs == rhs)) fail(braid, where(t, "r=" + std::to_string(r)));
    }
    if (n >= 1) {
      int level = 0;
      for (Residue k : cfg.kappa)
        if (k == i[0]) ++level;
      Vec v = et;
      for (int k = 0; k < level && !v.empty(); ++k) v = Y(1, v);
      if (!v.empty()) fail(cyc, where(t, "y_1^" + std::to_string(level)));
    }
  }
  for (auto* c : {&idem, &ycomm, &psiy, &psicomm, &ypsi, &sq, &braid, &homog, &cyc}) report.checks.push_back(*c);

  // seed relations
  CheckResult seed{"seed relations"};
  Vec z = Vec::unit(model.seed);
  bool column = model.orientation == Orientation::Column;
  Tableau t0 = column ? t_col(model.shape) : t_row(model.shape);
  if (model.residues[model.seed] != residue_sequence(t0, cfg)) fail(seed, "e(i) z");
  for (int r = 1; r <= n; ++r)
    if (!Y(r, z).empty()) fail(seed, "y_" + std::to_string(r) + " z");
  for (int r = 1; r < n; ++r) {
    Node a = t0.node_of(r), b = t0.node_of(r + 1);
    bool tied = column ? (a.comp == b.comp && a.col == b.col && b.row == a.row + 1)
                       : (a.comp == b.comp && a.row == b.row && b.col == a.col + 1);
    if (tied && !P(r, z).empty()) fail(seed, "psi_" + std::to_string(r) + " z");
  }
  if (column)
    for (const Node& a : column_garnir_nodes(model.shape))
      if (!act(garnir_element_column<S>(model.shape, a, cfg), z, model).empty())
        fail(seed, "g_A z at node (" + std::to_string(a.row) + "," + std::to_string(a.col) + "," + std::to_string(a.comp) + ")");
  report.checks.push_back(seed);

  CheckResult basis{"standard basis"};
  for (int t = 0; t < dim; ++t) {
    Permutation w = column ? perm_of_col(model.basis[t]) : perm_of_row(model.basis[t]);
    if (!(act_word(psi_word(canonical_reduced_word(w, model.convention)), z, model) == Vec::unit(t)))
      fail(basis, "psi word of " + model.basis[t].to_string());
  }
  report.checks.push_back(basis);

  CheckResult dimc{"dimension"};
  std::size_t expected = enumerate_std(model.shape).size();
  if (static_cast<std::size_t>(dim) != expected)
    fail(dimc, std::to_string(dim) + " != " + std::to_string(expected));
  report.checks.push_back(dimc);

  CheckResult gdim{"graded dimension"};
  GradedDimension want;
  for (const auto& g : enumerate_std_graded(model.shape, cfg)) want.add(column ? g.codegree : g.degree);
  if (!(model.graded_dimension() == want))
    fail(gdim, model.graded_dimension().to_string() + " != " + want.to_string());
  report.checks.push_back(gdim);
  return report;
}

template <class S>
std::vector<SparseVector<S>> pairing_matrix(const SpechtModel<S>& model) {
  if (model.orientation != Orientation::Column) throw std::invalid_argument("pairing needs a column model");
  int dim = model.dim();
  // transposes, so covectors can be pushed through
  std::vector<std::vector<std::vector<typename SparseVector<S>::Entry>>> rows(model.psi.size(),
                                                                             std::vector<std::vector<typename SparseVector<S>::Entry>>(dim));
  for (std::size_t r = 0; r < model.psi.size(); ++r)
    for (int j = 0; j < dim; ++j)
      for (const auto& [i, c] : model.psi[r].columns[j]) rows[r][i].emplace_back(j, c);
  std::vector<SparseMatrix<S>> tr(model.psi.size());
  for (std::size_t r = 0; r < model.psi.size(); ++r)
    for (int i = 0; i < dim; ++i) tr[r].columns.push_back(SparseVector<S>::from_entries(rows[r][i]));
  int top = model.index_of(t_row(model.shape));
  std::vector<SparseVector<S>> p;
  for (int s = 0; s < dim; ++s) {
    ReducedWord w = canonical_reduced_word(perm_of_row(model.basis[s]));
    SparseVector<S> cov = SparseVector<S>::unit(top);
    // coefficient of v_top in psi_{j1} ... psi_{jk} reversed, so the first
    // letter of w acts first: covector passes psi_{jk} first.
    for (auto it = w.rbegin(); it != w.rend() && !cov.empty(); ++it) cov = tr[*it - 1].apply(cov);
    p.push_back(std::move(cov));
  }
  return p;
}

template <class S>
std::vector<SparseVector<S>> dual_basis_f(const SpechtModel<S>& model) {
  std::vector<SparseVector<S>> prow = pairing_matrix(model);
  int dim = model.dim();
  std::vector<std::vector<typename SparseVector<S>::Entry>> cols(dim);
  for (int s = 0; s < dim; ++s)
    for (const auto& [t, c] : prow[s]) cols[t].emplace_back(s, c);
  std::vector<SparseVector<S>> pc;
  for (auto& c : cols) pc.push_back(SparseVector<S>::from_entries(std::move(c)));
  std::vector<SparseVector<S>> f;
  for (int t = 0; t < dim; ++t) f.push_back(solve_upper(pc, SparseVector<S>::unit(t)));
  return f;
}

namespace {
std::string cache_key(const char* kind, const Multipartition& lambda, const AlgebraConfig& cfg, WordConvention conv) {
  return std::string(kind) + ":" + lambda.to_string() + ":" + cfg.e_string() + ":" + cfg.kappa_string() + ":" +
         cfg.field.name() + (conv == WordConvention::LexMin ? ":min" : ":max");
}
}  // namespace

template <class S>
std::shared_ptr<const SpechtModel<S>> ModelCache<S>::column(const Multipartition& lambda, const AlgebraConfig& cfg,
                                                            WordConvention conv) {
  std::string key = cache_key("col", lambda, cfg, conv);
  {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = models_.find(key);
    if (it != models_.end()) return it->second;
  }
  auto m = std::make_shared<const SpechtModel<S>>(build_column_model<S>(lambda, cfg, conv));
  std::lock_guard<std::mutex> lock(mu_);
  return models_.emplace(key, m).first->second;
}

template <class S>
std::shared_ptr<const SpechtModel<S>> ModelCache<S>::row(const Multipartition& lambda, const AlgebraConfig& cfg,
                                                         WordConvention conv) {
  std::string key = cache_key("row", lambda, cfg, conv);
  {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = models_.find(key);
    if (it != models_.end()) return it->second;
  }
  auto m = std::make_shared<const SpechtModel<S>>(build_row_model<S>(lambda, cfg, conv));
  std::lock_guard<std::mutex> lock(mu_);
  return models_.emplace(key, m).first->second;
}

template <class S>
std::size_t ModelCache<S>::size() const {
  std::lock_guard<std::mutex> lock(const_cast<std::mutex&>(mu_));
  return models_.size();
}

template <class S>
std::string model_to_json(const SpechtModel<S>& model) {
  nlohmann::json j;
  j["lambda"] = model.shape.to_string();
  j["e"] = model.cfg.e_string();
  j["kappa"] = model.cfg.kappa_string();
  j["field"] = model.cfg.field.name();
  j["orientation"] = model.orientation == Orientation::Column ? "column" : "row";
  j["seed"] = model.seed;
  nlohmann::json basis = nlohmann::json::array();
  for (int k = 0; k < model.dim(); ++k)
    basis.push_back({{"tableau", model.basis[k].to_string()}, {"degree", model.degrees[k]}, {"residues", seq_string(model.residues[k])}});
  j["basis"] = basis;
  auto dump = [](const SparseMatrix<S>& m) {
    nlohmann::json triples = nlohmann::json::array();
    for (std::size_t c = 0; c < m.columns.size(); ++c)
      for (const auto& [r, x] : m.columns[c]) triples.push_back({r, static_cast<int>(c), exact_string(x)});
    return triples;
  };
  nlohmann::json psi = nlohmann::json::array(), y = nlohmann::json::array();
  for (const auto& m : model.psi) psi.push_back(dump(m));
  for (const auto& m : model.y) y.push_back(dump(m));
  j["psi"] = psi;
  j["y"] = y;
  return j.dump();
}

#define SPECHT_INSTANTIATE(S)                                                                                   \
  template SpechtModel<S> build_column_model<S>(const Multipartition&, const AlgebraConfig&, WordConvention); \
  template SpechtModel<S> build_row_model<S>(const Multipartition&, const AlgebraConfig&, WordConvention);    \
  template SparseVector<S> act<S>(const AlgebraElement<S>&, const SparseVector<S>&, const SpechtModel<S>&);    \
  template SparseVector<S> act_word<S>(const Word&, const SparseVector<S>&, const SpechtModel<S>&);            \
  template ValidationReport validate<S>(const SpechtModel<S>&);                                                \
  template std::vector<SparseVector<S>> pairing_matrix<S>(const SpechtModel<S>&);                              \
  template std::vector<SparseVector<S>> dual_basis_f<S>(const SpechtModel<S>&);                                \
  template class ModelCache<S>;                                                                                \
  template std::string model_to_json<S>(const SpechtModel<S>&);

SPECHT_INSTANTIATE(Rational)
SPECHT_INSTANTIATE(ModP)

}  // namespace klr
