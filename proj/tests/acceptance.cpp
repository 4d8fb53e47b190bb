// Acceptance run: one PASS/FAIL line per criterion A1..A12, exact equality
// throughout. Exit status is the number of failed criteria.
#include <algorithm>
#include <chrono>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <thread>

#include "klrspecht/properties.hpp"
#include "klrspecht/verifiers.hpp"

using namespace klr;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;
};

struct SweepConfig {
  AlgebraConfig cfg;
  int n_max;
};

// the engine sweep: l=1 n<=6 for e=2,3 with κ=(0), l=2 n<=5 for e=3 κ=(0,1)
const std::vector<SweepConfig>& engine_sweep() {
  static const std::vector<SweepConfig> s{
      {AlgebraConfig::make(2, {0}), 6}, {AlgebraConfig::make(3, {0}), 6}, {AlgebraConfig::make(3, {0, 1}), 5}};
  return s;
}

int threads() { return static_cast<int>(std::clamp(std::thread::hardware_concurrency(), 1u, 8u)); }

std::string tag(const AlgebraConfig& cfg) { return "e=" + cfg.e_string() + " kappa=" + cfg.kappa_string(); }

/// Runs a theorem over the engine sweep; fails on any failed instance or if
/// no instance is eligible.
Outcome theorem_sweep(const std::string& th, ModelCache<Rational>& cache) {
  Outcome o;
  std::ostringstream d;
  for (const auto& sc : engine_sweep()) {
    std::string first_fail;
    SweepSummary s = run_sweep<Rational>({th, sc.cfg, sc.n_max, 0, threads()}, cache, [&](const VerificationReport& r) {
      if (r.failed() && first_fail.empty()) first_fail = r.to_json();
    });
    d << " [" << tag(sc.cfg) << ": " << s.passes << " pass, " << s.failures << " fail]";
    if (s.failures || s.passes == 0) o.ok = false;
    if (!first_fail.empty()) d << " first failure " << first_fail;
  }
  o.detail = th + d.str();
  return o;
}

template <class S>
std::string image(const HomBasis<S>& h) {
  if (h.basis.size() != 1) return "<" + std::to_string(h.basis.size()) + " basis homs>";
  return image_to_string(h.basis[0].image, *h.target);
}

Outcome a1(ModelCache<Rational>& cache) {
  auto cfg = AlgebraConfig::make(2, {0, 1, 0});
  auto lam = Multipartition::parse("1,1|2,1,1,1|1"), mu = Multipartition::parse("1|3,1|3");
  RowSplit rs = split_rows(lam, 1, 2, cfg), ms = split_rows(mu, 1, 2, cfg);
  auto top = hom_space(rs.top, ms.top, cfg.with_kappa(rs.kappa_top), true, cache);
  auto bottom = hom_space(rs.bottom, ms.bottom, cfg.with_kappa(rs.kappa_bottom), true, cache);
  auto full = hom_space(lam, mu, cfg, true, cache);
  auto nondom = hom_space(lam, mu, cfg, false, cache);

  const std::string s = "3|1,2,4", t = "2|1,3,4", u = "7|2,6,8;3|1,4,5", v = "7|4,6,8;5|1,2,3";
  auto f_of = [](const HomBasis<Rational>& h, const std::string& x) {
    auto f = dual_basis_f(*h.target);
    return image_to_string(f[h.target->index_of(Tableau::parse(x))], *h.target);
  };
  std::vector<std::pair<std::string, std::string>> checks{
      {top.graded_dimension().to_string(), "v"},
      {bottom.graded_dimension().to_string(), "1"},
      {full.graded_dimension().to_string(), "v"},
      {image(top), "v_" + s},
      {image(bottom), "v_" + t},
      {image(full), "v_" + u + " + 2v_" + v},
      {f_of(top, s), "v_" + s},
      {f_of(bottom, t), "v_" + t},
      {f_of(full, u), "v_" + u + " + 2v_" + v},
  };
  Outcome o;
  for (const auto& [got, want] : checks)
    if (got != want) {
      o.ok = false;
      o.detail += " got '" + got + "' want '" + want + "';";
    }
  if (o.ok)
    o.detail = "DHom top v, bottom 1, full v; z -> v_u + 2v_v; f_s=v_s, f_t=v_t, f_u=v_u+2v_v; full Hom " +
               nondom.graded_dimension().to_string();
  return o;
}

template <class F>
void for_engine_models(ModelCache<Rational>& cache, F&& body) {
  for (const auto& sc : engine_sweep())
    for (int n = 0; n <= sc.n_max; ++n)
      for (const auto& lam : multipartitions(sc.cfg.level(), n)) body(sc.cfg, lam, *cache.column(lam, sc.cfg));
}

Outcome a2(ModelCache<Rational>& cache) {
  Outcome o;
  int models = 0;
  for_engine_models(cache, [&](const AlgebraConfig& cfg, const Multipartition& lam, const SpechtModel<Rational>& m) {
    ++models;
    ValidationReport rep = validate(m);
    GradedDimension by_tableaux;
    auto std_list = enumerate_std(lam);
    for (const auto& t : std_list) by_tableaux.add(codegree(t, cfg));
    bool good = rep.passed() && m.dim() == static_cast<int>(std_list.size()) && m.graded_dimension() == by_tableaux;
    if (!good && o.ok) {
      o.ok = false;
      o.detail = "first failure " + lam.to_string() + " " + tag(cfg) + ": " + rep.summary();
    }
  });
  if (o.ok) o.detail = std::to_string(models) + " models: relations, seed relations, dimension, graded dimension";
  return o;
}

Outcome a3(ModelCache<Rational>& cache) {
  Outcome o;
  long count = 0;
  for_engine_models(cache, [&](const AlgebraConfig& cfg, const Multipartition& lam, const SpechtModel<Rational>& m) {
    int df = defect(lam, cfg);
    for (const auto& t : m.basis) {
      ++count;
      if (degree(t, cfg) + codegree(t, cfg) != df && o.ok) {
        o.ok = false;
        o.detail = "deg+codeg != defect at " + t.to_string() + " " + tag(cfg);
      }
    }
  });
  if (o.ok) o.detail = std::to_string(count) + " standard tableaux with deg + codeg = defect";
  return o;
}

Outcome a4() {
  PropertyResult row{"row-strict"}, col{"column-strict"}, dom{"dominated"};
  for (int l = 1; l <= 2; ++l)
    for (int n = 0; n <= (l == 1 ? 5 : 4); ++n) {
      auto all = multipartitions(l, n);
      for (const auto& lam : all) {
        row.merge(check_bruhat_vs_shapes(lam));
        col.merge(check_bruhat_vs_conjugate_shapes(lam));
        for (const auto& mu : all) dom.merge(check_dominated_vs_shapes(lam, mu));
      }
    }
  Outcome o;
  std::ostringstream d;
  for (const auto* r : {&row, &col, &dom}) {
    d << " " << r->name << " " << r->checked << " checks, " << r->violations << " violations;";
    if (!r->passed()) {
      o.ok = false;
      d << " first: " << r->witness << ";";
    }
  }
  o.detail = d.str();
  return o;
}

Outcome a5(ModelCache<Rational>& cache) {
  Outcome o;
  std::string first;
  auto cfg = AlgebraConfig::make(3, {0, 1});
  int ends = 0;
  SweepSummary s = run_sweep<Rational>({"domhom", cfg, 5, 0, threads()}, cache, [&](const VerificationReport& r) {
    if (r.failed() && first.empty()) first = r.to_json();
  });
  // End(S_λ) separately: every λ, not only those reached through the sweep
  for (int n = 0; n <= 5; ++n)
    for (const auto& lam : multipartitions(2, n)) {
      ++ends;
      if (!(hom_space(lam, lam, cfg, false, cache).graded_dimension() == GradedDimension::monomial(0)) && first.empty())
        first = "End(S_" + lam.to_string() + ") is not 1";
    }
  o.ok = first.empty() && s.failures == 0 && s.not_applicable == 0 && s.passes > 0;
  o.detail = "Hom = DHom on " + std::to_string(s.passes) + " pairs, End = 1 for " + std::to_string(ends) + " multipartitions";
  if (!first.empty()) o.detail += "; first failure " + first;
  return o;
}

Outcome combine(std::vector<Outcome> parts) {
  Outcome o;
  for (const auto& p : parts) {
    o.ok = o.ok && p.ok;
    o.detail += (o.detail.empty() ? "" : " | ") + p.detail;
  }
  return o;
}

// product homs span DHom is part of the gcr verifier
Outcome a7(ModelCache<Rational>& cache) { return combine({theorem_sweep("gcr", cache), theorem_sweep("grr", cache)}); }

Outcome a9(ModelCache<Rational>& cache) {
  auto r1 = verify_decomposable(Multipartition::parse("5,1,1"), AlgebraConfig::make(2, {0}), cache);
  auto r2 = verify_decomposable(Multipartition::parse("3|3"), AlgebraConfig::make(3, {0, 0}), cache);
  Outcome o;
  o.ok = r1.verdict == Verdict::Pass && r2.verdict == Verdict::Pass;
  o.detail = "(5,1^2) e=2: dim End = " + std::to_string(r1.left.total()) +
             "; (3|3) e=3 kappa=0,0: dim End = " + std::to_string(r2.left.total());
  return o;
}

Outcome a10(ModelCache<Rational>& cache) {
  std::mt19937 rng(2024);
  Outcome o;
  int checked = 0;
  for (const auto& sc : engine_sweep()) {
    std::vector<std::pair<Multipartition, Multipartition>> pairs;
    for (int n = 1; n <= sc.n_max; ++n) {
      auto all = multipartitions(sc.cfg.level(), n);
      for (const auto& lam : all)
        for (const auto& mu : all)
          if (content(lam, sc.cfg) == content(mu, sc.cfg)) pairs.emplace_back(lam, mu);
    }
    std::shuffle(pairs.begin(), pairs.end(), rng);
    pairs.resize(std::min<std::size_t>(pairs.size(), 60));
    for (const auto& [lam, mu] : pairs) {
      ++checked;
      auto r = verify_convention(lam, mu, sc.cfg, cache);
      if (r.failed() && o.ok) {
        o.ok = false;
        o.detail = "first failure " + r.to_json() + "; ";
      }
    }
  }
  o.detail += std::to_string(checked) + " random pairs: LexMax dominated span equals the LexMin one";
  return o;
}

Outcome a11(ModelCache<Rational>& cache) {
  std::mt19937 rng(99);
  std::vector<PropertyResult> total;
  for_engine_models(cache, [&](const AlgebraConfig&, const Multipartition&, const SpechtModel<Rational>& m) {
    auto rs = check_standard_basis(m, rng, 100);
    if (total.empty()) total = rs;
    else
      for (std::size_t k = 0; k < rs.size(); ++k) total[k].merge(rs[k]);
  });
  Outcome o;
  std::ostringstream d;
  for (const auto& r : total) {
    d << " " << r.name << ": " << r.checked << " checks;";
    if (!r.passed()) {
      o.ok = false;
      d << " " << r.violations << " violations, first " << r.witness << ";";
    }
  }
  o.detail = d.str();
  return o;
}

Outcome a12(ModelCache<Rational>& cache) {
  auto hard = verify_exprow(Multipartition::parse("1,1|2,1,1,1|1"), Multipartition::parse("1|3,1|3"), 1, 2,
                            AlgebraConfig::make(2, {0, 1, 0}), cache, true);
  Outcome o;
  o.ok = hard.verdict == Verdict::Pass;
  o.detail = "worked example: " + hard.witness + "; report-only sweep:";
  std::vector<SweepConfig> sweeps = engine_sweep();
  sweeps.push_back({AlgebraConfig::make(2, {0, 1}), 5});
  sweeps.push_back({AlgebraConfig::make(2, {0, 1, 0}), 5});
  for (const auto& sc : sweeps) {
    int with_candidates = 0, non_hom = 0;
    std::string first;
    run_sweep<Rational>({"exprow", sc.cfg, sc.n_max, 0, threads()}, cache, [&](const VerificationReport& r) {
      if (r.verdict != Verdict::Pass || r.witness == "no candidates") return;
      ++with_candidates;
      if (r.witness.find("first non-hom") != std::string::npos) {
        ++non_hom;
        if (first.empty()) first = r.instance;
      }
    });
    o.detail += " [" + tag(sc.cfg) + ": " + std::to_string(non_hom) + " of " + std::to_string(with_candidates) +
                " instances have a non-hom candidate" + (first.empty() ? "" : ", e.g. " + first) + "]";
  }
  return o;
}

}  // namespace

int main() {
  ModelCache<Rational> cache;
  std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"A1", [&] { return a1(cache); }},
      {"A2", [&] { return a2(cache); }},
      {"A3", [&] { return a3(cache); }},
      {"A4", [] { return a4(); }},
      {"A5", [&] { return a5(cache); }},
      {"A6", [&] { return combine({theorem_sweep("cr", cache), theorem_sweep("rr", cache), theorem_sweep("fcr", cache)}); }},
      {"A7", [&] { return a7(cache); }},
      {"A8", [&] { return theorem_sweep("homconj", cache); }},
      {"A9", [&] { return a9(cache); }},
      {"A10", [&] { return a10(cache); }},
      {"A11", [&] { return a11(cache); }},
      {"A12", [&] { return a12(cache); }},
  };
  int failed = 0;
  for (const auto& [name, run] : criteria) {
    auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = run();
    } catch (const std::exception& ex) {
      o = {false, std::string("exception: ") + ex.what()};
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    // runtime budgets: A1 one minute, A2 ten minutes
    if (name == "A1" && secs >= 60) o = {false, o.detail + "; over the 60 s budget"};
    if (name == "A2" && secs >= 600) o = {false, o.detail + "; over the 600 s budget"};
    if (!o.ok) ++failed;
    std::ostringstream t;
    t.precision(2);
    t << std::fixed << secs;
    std::cout << name << " " << (o.ok ? "PASS" : "FAIL") << " (" << t.str() << " s) " << o.detail << std::endl;
  }
  return failed;
}
