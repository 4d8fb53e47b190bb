#include "klrspecht/verifiers.hpp"

#include <algorithm>
#include <atomic>
#include <optional>
#include <set>
#include <sstream>
#include <thread>
#include <type_traits>

#include "json.hpp"

namespace klr {

std::string verdict_string(Verdict v) {
  switch (v) {
    case Verdict::Pass: return "pass";
    case Verdict::Fail: return "fail";
    case Verdict::NotApplicable: return "not-applicable";
  }
  return "?";
}

std::string VerificationReport::to_json() const {
  nlohmann::ordered_json j;
  j["theorem"] = theorem;
  j["instance"] = instance;
  j["left"] = left.to_string();
  j["right"] = right.to_string();
  j["verdict"] = verdict_string(verdict);
  if (!witness.empty()) j["witness"] = witness;
  return j.dump();
}

std::string SweepSummary::to_string() const {
  std::ostringstream os;
  os << theorem << ": " << instances << " instances, " << passes << " pass, " << failures << " fail, "
     << not_applicable << " not applicable";
  return os.str();
}

namespace {

std::string describe(const AlgebraConfig& cfg, const Multipartition& lambda, const Multipartition& mu,
                     const std::string& extra = "") {
  std::string s = "e=" + cfg.e_string() + " kappa=" + cfg.kappa_string() + " lambda=" + lambda.to_string() +
                  " mu=" + mu.to_string();
  if (!extra.empty()) s += " " + extra;
  return s;
}

VerificationReport start(const char* id, std::string instance) {
  VerificationReport r;
  r.theorem = id;
  r.instance = std::move(instance);
  return r;
}

VerificationReport not_applicable(VerificationReport r, std::string why) {
  r.verdict = Verdict::NotApplicable;
  r.witness = std::move(why);
  return r;
}

void compare(VerificationReport& r) {
  r.verdict = r.left == r.right ? Verdict::Pass : Verdict::Fail;
  if (r.verdict == Verdict::Fail) r.witness = "graded dimensions differ: " + r.left.to_string() + " vs " + r.right.to_string();
}

bool empty_from(const Multipartition& x, int first) {
  for (int k = first; k <= x.level(); ++k)
    if (!x.component(k).empty()) return false;
  return true;
}

int first_row(const Multipartition& x, int m) { return x.row(m, 1); }
int first_col(const Multipartition& x, int m) { return x.column(m, 1); }

/// Images of ψ-basis vectors moved into another model's coordinates.
template <class S>
SparseVector<S> move_to(const SparseVector<S>& x, const std::vector<SparseVector<S>>& b) {
  Accumulator<S> acc;
  for (const auto& [t, c] : x) acc.add(c, b[t]);
  return acc.finish();
}

}  // namespace

template <class S>
VerificationReport verify_cr(const Multipartition& lambda, const Multipartition& mu, int m, const AlgebraConfig& cfg,
                             ModelCache<S>& cache) {
  auto r = start("cr", describe(cfg, lambda, mu, "m=" + std::to_string(m)));
  if (m < 1 || m > cfg.level()) return not_applicable(r, "m out of range");
  if (!empty_from(lambda, m + 1) || !empty_from(mu, m + 1)) return not_applicable(r, "components after m are not empty");
  int k = first_col(lambda, m);
  if (first_col(mu, m) != k) return not_applicable(r, "first columns differ in length");
  ColumnSplit ls = split_columns(lambda, 1, m, cfg), ms = split_columns(mu, 1, m, cfg);
  r.left = hom_space(lambda, mu, cfg, true, cache).graded_dimension();
  r.right = hom_space(ls.right, ms.right, cfg.with_kappa(ls.kappa_right), true, cache).graded_dimension();
  compare(r);
  return r;
}

template <class S>
VerificationReport verify_rr(const Multipartition& lambda, const Multipartition& mu, int m, const AlgebraConfig& cfg,
                             ModelCache<S>& cache) {
  auto r = start("rr", describe(cfg, lambda, mu, "m=" + std::to_string(m)));
  if (m < 1 || m > cfg.level()) return not_applicable(r, "m out of range");
  for (int k = 1; k < m; ++k)
    if (!lambda.component(k).empty() || !mu.component(k).empty())
      return not_applicable(r, "components before m are not empty");
  if (first_row(lambda, m) != first_row(mu, m)) return not_applicable(r, "first rows differ in length");
  RowSplit ls = split_rows(lambda, 1, m, cfg), ms = split_rows(mu, 1, m, cfg);
  r.left = hom_space(lambda, mu, cfg, true, cache).graded_dimension();
  r.right = hom_space(ls.bottom, ms.bottom, cfg.with_kappa(ls.kappa_bottom), true, cache).graded_dimension();
  compare(r);
  return r;
}

template <class S>
VerificationReport verify_fcr(const Multipartition& lambda, const Multipartition& mu, int m, const AlgebraConfig& cfg,
                              ModelCache<S>& cache) {
  auto r = start("fcr", describe(cfg, lambda, mu, "m=" + std::to_string(m)));
  if (m < 1 || m > cfg.level()) return not_applicable(r, "m out of range");
  for (int k = 1; k < m; ++k)
    if (!lambda.component(k).empty() || !mu.component(k).empty())
      return not_applicable(r, "components before m are not empty");
  int d = first_row(lambda, m);
  if (d == 0 || first_row(mu, m) != d) return not_applicable(r, "first rows differ or component m is empty");
  if (lambda.column(m, d) != mu.column(m, d)) return not_applicable(r, "final columns differ in length");
  ColumnSplit ls = split_columns(lambda, d - 1, m, cfg), ms = split_columns(mu, d - 1, m, cfg);
  r.left = hom_space(lambda, mu, cfg, true, cache).graded_dimension();
  r.right = hom_space(ls.left, ms.left, cfg.with_kappa(ls.kappa_left), true, cache).graded_dimension();
  compare(r);
  return r;
}

template <class S>
VerificationReport verify_gcr(const Multipartition& lambda, const Multipartition& mu, int c, int m,
                              const AlgebraConfig& cfg, ModelCache<S>& cache) {
  auto r = start("gcr", describe(cfg, lambda, mu, "c=" + std::to_string(c) + " m=" + std::to_string(m)));
  if (m < 1 || m > cfg.level() || c < 0) return not_applicable(r, "split parameters out of range");
  ColumnSplit ls = split_columns(lambda, c, m, cfg), ms = split_columns(mu, c, m, cfg);
  if (ls.left.size() != ms.left.size()) return not_applicable(r, "left parts differ in size");
  AlgebraConfig cl = cfg.with_kappa(ls.kappa_left), cr = cfg.with_kappa(ls.kappa_right);
  HomBasis<S> full = hom_space(lambda, mu, cfg, true, cache);
  HomBasis<S> hl = hom_space(ls.left, ms.left, cl, true, cache);
  HomBasis<S> hr = hom_space(ls.right, ms.right, cr, true, cache);
  r.left = full.graded_dimension();
  r.right = hl.graded_dimension() * hr.graded_dimension();
  compare(r);
  if (r.verdict == Verdict::Fail || hl.basis.empty() || hr.basis.empty()) return r;
  // every product is a homomorphism and together they span DHom
  auto target = full.target ? full.target : cache.column(mu, cfg);
  std::vector<SparseVector<S>> products;
  try {
    for (const auto& a : hl.basis)
      for (const auto& b : hr.basis) products.push_back(product_hom(hl, a, hr, b, lambda, *target, c, m).image);
  } catch (const EngineInconsistency& ex) {
    r.verdict = Verdict::Fail;
    r.witness = ex.what();
    return r;
  }
  if (!same_span(products, full.images())) {
    r.verdict = Verdict::Fail;
    r.witness = "product homomorphisms do not span DHom";
  }
  return r;
}

template <class S>
VerificationReport verify_grr(const Multipartition& lambda, const Multipartition& mu, int rr, int m,
                              const AlgebraConfig& cfg, ModelCache<S>& cache) {
  auto r = start("grr", describe(cfg, lambda, mu, "r=" + std::to_string(rr) + " m=" + std::to_string(m)));
  if (m < 1 || m > cfg.level() || rr < 0) return not_applicable(r, "split parameters out of range");
  RowSplit ls = split_rows(lambda, rr, m, cfg), ms = split_rows(mu, rr, m, cfg);
  if (ls.top.size() != ms.top.size()) return not_applicable(r, "top parts differ in size");
  r.left = hom_space(lambda, mu, cfg, true, cache).graded_dimension();
  r.right = hom_space(ls.top, ms.top, cfg.with_kappa(ls.kappa_top), true, cache).graded_dimension() *
            hom_space(ls.bottom, ms.bottom, cfg.with_kappa(ls.kappa_bottom), true, cache).graded_dimension();
  compare(r);
  return r;
}

template <class S>
VerificationReport verify_duality(const Multipartition& lambda, const Multipartition& mu, const AlgebraConfig& cfg,
                                  ModelCache<S>& cache) {
  auto r = start("homconj", describe(cfg, lambda, mu));
  r.left = hom_space(lambda, mu, cfg, true, cache).graded_dimension();
  r.right = hom_space(conjugate(mu), conjugate(lambda), conjugate_config(cfg), true, cache).graded_dimension();
  compare(r);
  return r;
}

template <class S>
VerificationReport verify_domhom(const Multipartition& lambda, const Multipartition& mu, const AlgebraConfig& cfg,
                                 ModelCache<S>& cache) {
  auto r = start("domhom", describe(cfg, lambda, mu));
  if (cfg.e == 2) return not_applicable(r, "requires e != 2");
  std::set<Residue> distinct(cfg.kappa.begin(), cfg.kappa.end());
  if (static_cast<int>(distinct.size()) != cfg.level()) return not_applicable(r, "requires distinct multicharge entries");
  HomBasis<S> full = hom_space(lambda, mu, cfg, false, cache);
  HomBasis<S> dom = hom_space(lambda, mu, cfg, true, cache);
  r.left = full.graded_dimension();
  r.right = dom.graded_dimension();
  r.verdict = Verdict::Pass;
  if (!same_span(full.images(), dom.images())) {
    r.verdict = Verdict::Fail;
    r.witness = "Hom and DHom differ: " + r.left.to_string() + " vs " + r.right.to_string();
  } else if (lambda == mu && !(r.left == GradedDimension::monomial(0))) {
    r.verdict = Verdict::Fail;
    r.witness = "End has graded dimension " + r.left.to_string();
  }
  return r;
}

template <class S>
VerificationReport verify_decomposable(const Multipartition& lambda, const AlgebraConfig& cfg, ModelCache<S>& cache) {
  auto r = start("decomposable", describe(cfg, lambda, lambda));
  r.left = hom_space(lambda, lambda, cfg, false, cache).graded_dimension();
  r.verdict = r.left.total() >= 2 ? Verdict::Pass : Verdict::Fail;
  r.witness = "ungraded dim End = " + std::to_string(r.left.total());
  return r;
}

template <class S>
VerificationReport verify_convention(const Multipartition& lambda, const Multipartition& mu, const AlgebraConfig& cfg,
                                     ModelCache<S>& cache) {
  auto r = start("dominatedbasis", describe(cfg, lambda, mu));
  HomBasis<S> h0 = hom_space(lambda, mu, cfg, true, cache, WordConvention::LexMin);
  HomBasis<S> h1 = hom_space(lambda, mu, cfg, true, cache, WordConvention::LexMax);
  r.left = h0.graded_dimension();
  r.right = h1.graded_dimension();
  compare(r);
  if (r.verdict == Verdict::Fail || !h0.target) return r;
  // LexMax basis vectors written in LexMin coordinates, recomputed from scratch
  const SpechtModel<S>& m0 = *h0.target;
  std::vector<SparseVector<S>> b;
  for (const Tableau& t : h1.target->basis)
    b.push_back(act_word(psi_word(canonical_reduced_word(perm_of_col(t), WordConvention::LexMax)),
                         SparseVector<S>::unit(m0.seed), m0));
  std::vector<SparseVector<S>> span0, span1;
  for (int j = 0; j < m0.dim(); ++j)
    if (is_col_dominated(m0.basis[j], lambda)) span0.push_back(SparseVector<S>::unit(j));
  for (int j = 0; j < h1.target->dim(); ++j)
    if (is_col_dominated(h1.target->basis[j], lambda)) span1.push_back(b[j]);
  if (!same_span(span0, span1)) {
    r.verdict = Verdict::Fail;
    r.witness = "dominated spans differ between reduced-word conventions";
    return r;
  }
  std::vector<SparseVector<S>> img1;
  for (const auto& x : h1.images()) img1.push_back(move_to(x, b));
  if (!same_span(h0.images(), img1)) {
    r.verdict = Verdict::Fail;
    r.witness = "DHom differs between reduced-word conventions";
  }
  return r;
}

template <class S>
VerificationReport verify_exprow(const Multipartition& lambda, const Multipartition& mu, int rr, int m,
                                 const AlgebraConfig& cfg, ModelCache<S>& cache, bool hard) {
  auto r = start("exprow", describe(cfg, lambda, mu, "r=" + std::to_string(rr) + " m=" + std::to_string(m)));
  if (m < 1 || m > cfg.level() || rr < 0) return not_applicable(r, "split parameters out of range");
  RowSplit ls = split_rows(lambda, rr, m, cfg), ms = split_rows(mu, rr, m, cfg);
  if (ls.top.size() != ms.top.size()) return not_applicable(r, "top parts differ in size");
  HomBasis<S> full = hom_space(lambda, mu, cfg, true, cache);
  HomBasis<S> ht = hom_space(ls.top, ms.top, cfg.with_kappa(ls.kappa_top), true, cache);
  HomBasis<S> hb = hom_space(ls.bottom, ms.bottom, cfg.with_kappa(ls.kappa_bottom), true, cache);
  r.left = full.graded_dimension();
  r.right = ht.graded_dimension() * hb.graded_dimension();
  r.verdict = Verdict::Pass;
  if (ht.basis.empty() || hb.basis.empty()) {
    r.witness = "no candidates";
    return r;
  }
  auto target = full.target ? full.target : cache.column(mu, cfg);
  int total = 0, homs = 0;
  std::string first_bad;
  for (const auto& b : hb.basis)
    for (const auto& t : ht.basis) {
      ++total;
      try {
        auto cand = row_join_candidate(hb, b, ht, t, lambda, *target, rr, m);
        if (cand.is_hom) ++homs;
        else if (first_bad.empty()) first_bad = image_to_string(cand.vector, *target);
      } catch (const std::exception& ex) {
        if (first_bad.empty()) first_bad = ex.what();
      }
    }
  r.witness = std::to_string(homs) + " of " + std::to_string(total) + " candidates are homomorphisms";
  if (!first_bad.empty()) r.witness += "; first non-hom: " + first_bad;
  if (hard && homs != total) r.verdict = Verdict::Fail;
  return r;
}

const std::vector<std::string>& theorem_ids() {
  static const std::vector<std::string> ids{"cr",     "rr",     "fcr",          "gcr",     "grr",
                                            "homconj", "domhom", "decomposable", "dominatedbasis", "exprow"};
  return ids;
}

template <class S>
SweepSummary run_sweep(const SweepOptions& opts, ModelCache<S>& cache,
                       const std::function<void(const VerificationReport&)>& sink) {
  const auto& ids = theorem_ids();
  if (std::find(ids.begin(), ids.end(), opts.theorem) == ids.end())
    throw std::invalid_argument("unknown theorem id: " + opts.theorem);
  const AlgebraConfig& cfg = opts.cfg;
  const std::string& th = opts.theorem;
  int l = cfg.level();

  std::vector<std::function<VerificationReport()>> jobs;
  for (int n = opts.n_min; n <= opts.n_max; ++n) {
    std::vector<Multipartition> all = multipartitions(l, n);
    for (const auto& lam : all) {
      RootContent cl = content(lam, cfg);
      for (const auto& mu : all) {
        if (th == "decomposable" && !(lam == mu)) continue;
        if (content(mu, cfg) != cl) continue;
        int width = 0, height = 0;
        for (int m = 1; m <= l; ++m) {
          width = std::max({width, lam.row(m, 1), mu.row(m, 1)});
          height = std::max({height, lam.column(m, 1), mu.column(m, 1)});
        }
        if (th == "homconj") jobs.push_back([=, &cache] { return verify_duality(lam, mu, cfg, cache); });
        else if (th == "domhom") jobs.push_back([=, &cache] { return verify_domhom(lam, mu, cfg, cache); });
        else if (th == "decomposable") jobs.push_back([=, &cache] { return verify_decomposable(lam, cfg, cache); });
        else if (th == "dominatedbasis") jobs.push_back([=, &cache] { return verify_convention(lam, mu, cfg, cache); });
        for (int m = 1; m <= l; ++m) {
          if (th == "cr") jobs.push_back([=, &cache] { return verify_cr(lam, mu, m, cfg, cache); });
          else if (th == "rr") jobs.push_back([=, &cache] { return verify_rr(lam, mu, m, cfg, cache); });
          else if (th == "fcr") jobs.push_back([=, &cache] { return verify_fcr(lam, mu, m, cfg, cache); });
          else if (th == "gcr")
            for (int c = 0; c <= width; ++c) jobs.push_back([=, &cache] { return verify_gcr(lam, mu, c, m, cfg, cache); });
          else if (th == "grr")
            for (int r = 0; r <= height; ++r) jobs.push_back([=, &cache] { return verify_grr(lam, mu, r, m, cfg, cache); });
          else if (th == "exprow")
            for (int r = 0; r <= height; ++r)
              jobs.push_back([=, &cache] { return verify_exprow(lam, mu, r, m, cfg, cache, false); });
        }
      }
    }
  }

  std::vector<std::optional<VerificationReport>> results(jobs.size());
  std::atomic<std::size_t> next{0};
  unsigned prime = ModP::modulus();
  auto worker = [&] {
    std::optional<ModP::Context> scope;
    if constexpr (std::is_same_v<S, ModP>) scope.emplace(prime);
    for (std::size_t k; (k = next++) < jobs.size();) {
      try {
        results[k] = jobs[k]();
      } catch (const EngineInconsistency& ex) {
        VerificationReport rep;
        rep.theorem = th;
        rep.instance = "job " + std::to_string(k);
        rep.verdict = Verdict::Fail;
        rep.witness = std::string("engine inconsistency: ") + ex.what();
        results[k] = rep;
      } catch (const std::exception& ex) {
        VerificationReport rep;
        rep.theorem = th;
        rep.instance = "job " + std::to_string(k);
        rep.verdict = Verdict::Fail;
        rep.witness = ex.what();
        results[k] = rep;
      }
    }
  };
  int threads = std::max(1, opts.threads);
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }

  SweepSummary s;
  s.theorem = th;
  for (const auto& rep : results) {
    ++s.instances;
    if (rep->verdict == Verdict::Pass) ++s.passes;
    else if (rep->verdict == Verdict::Fail) ++s.failures;
    else ++s.not_applicable;
    sink(*rep);
  }
  return s;
}

#define VERIFY_INSTANTIATE(S)                                                                                      \
  template VerificationReport verify_cr<S>(const Multipartition&, const Multipartition&, int, const AlgebraConfig&, \
                                           ModelCache<S>&);                                                        \
  template VerificationReport verify_rr<S>(const Multipartition&, const Multipartition&, int, const AlgebraConfig&, \
                                           ModelCache<S>&);                                                        \
  template VerificationReport verify_fcr<S>(const Multipartition&, const Multipartition&, int,                      \
                                            const AlgebraConfig&, ModelCache<S>&);                                 \
  template VerificationReport verify_gcr<S>(const Multipartition&, const Multipartition&, int, int,                 \
                                            const AlgebraConfig&, ModelCache<S>&);                                 \
  template VerificationReport verify_grr<S>(const Multipartition&, const Multipartition&, int, int,                 \
                                            const AlgebraConfig&, ModelCache<S>&);                                 \
  template VerificationReport verify_duality<S>(const Multipartition&, const Multipartition&, const AlgebraConfig&, \
                                                ModelCache<S>&);                                                   \
  template VerificationReport verify_domhom<S>(const Multipartition&, const Multipartition&, const AlgebraConfig&,  \
                                               ModelCache<S>&);                                                    \
  template VerificationReport verify_decomposable<S>(const Multipartition&, const AlgebraConfig&, ModelCache<S>&);  \
  template VerificationReport verify_convention<S>(const Multipartition&, const Multipartition&,                    \
                                                   const AlgebraConfig&, ModelCache<S>&);                          \
  template VerificationReport verify_exprow<S>(const Multipartition&, const Multipartition&, int, int,              \
                                               const AlgebraConfig&, ModelCache<S>&, bool);                        \
  template SweepSummary run_sweep<S>(const SweepOptions&, ModelCache<S>&,                                          \
                                     const std::function<void(const VerificationReport&)>&);

VERIFY_INSTANTIATE(Rational)
VERIFY_INSTANTIATE(ModP)

}  // namespace klr
