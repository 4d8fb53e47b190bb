#include "cli.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "CLI11.hpp"
#include "json.hpp"
#include "klrspecht/hom.hpp"
#include "klrspecht/verifiers.hpp"

namespace klr::cli {

namespace {

using ordered_json = nlohmann::ordered_json;

// the worked example with a row-join homomorphism
constexpr const char* kExampleE = "2";
constexpr const char* kExampleKappa = "0,1,0";
constexpr const char* kExampleLambda = "1,1|2,1,1,1|1";
constexpr const char* kExampleMu = "1|3,1|3";
constexpr int kExampleR = 1;
constexpr int kExampleM = 2;

struct Options {
  std::string e = "2";
  std::string kappa;
  std::string field = "Q";
  std::string lambda, mu;
  bool dominated = false;
  bool json = false;
  bool worked_example = false;
  bool row = false;
  bool hard = false;
  int m = 0, c = -1, r = -1;
  int l = 0, n = 4, n_min = 0;
  int threads = 1;
  long max_basis = 5000;
  std::string what = "std";
  std::string theorem;
  std::vector<std::string> files;
};

struct Usage : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

std::string seq_string(const std::vector<Residue>& seq) {
  std::string s = "(";
  for (std::size_t k = 0; k < seq.size(); ++k) s += (k ? "," : "") + std::to_string(seq[k]);
  return s + ")";
}

AlgebraConfig make_config(const Options& o) {
  std::vector<Residue> kappa;
  if (!o.kappa.empty()) kappa = parse_kappa(o.kappa);
  else kappa.assign(std::max(o.l, 1), 0);
  if (o.l > 0 && o.l != static_cast<int>(kappa.size()))
    throw Usage("--l " + std::to_string(o.l) + " does not match the multicharge level " + std::to_string(kappa.size()));
  return AlgebraConfig::make(parse_e(o.e), std::move(kappa), FieldSpec::parse(o.field));
}

Multipartition parse_shape(const std::string& text, const AlgebraConfig& cfg, const char* flag) {
  if (text.empty()) throw Usage(std::string(flag) + " is required");
  Multipartition x = Multipartition::parse(text);
  if (!x.is_multipartition()) throw Usage(std::string(flag) + " is not a multipartition");
  if (x.level() != cfg.level())
    throw Usage(std::string(flag) + " has level " + std::to_string(x.level()) + " but the multicharge has level " +
                std::to_string(cfg.level()));
  return x;
}

void apply_example(Options& o) {
  o.e = kExampleE;
  o.kappa = kExampleKappa;
  o.lambda = kExampleLambda;
  o.mu = kExampleMu;
  if (o.r < 0) o.r = kExampleR;
  if (o.m == 0) o.m = kExampleM;
}

/// Runs body with S = Rational or ModP (inside a modulus context).
template <class F>
int with_field(const AlgebraConfig& cfg, F&& body) {
  if (cfg.field.is_rational()) return body(Rational{});
  ModP::Context scope(cfg.field.prime);
  return body(ModP{});
}

// ---------------------------------------------------------------- specht-info

template <class S>
int cmd_specht_info(const Options& o, std::ostream& out) {
  AlgebraConfig cfg = make_config(o);
  Multipartition lambda = parse_shape(o.lambda, cfg, "--lambda");
  bool column = !o.row;
  // combinatorial count: no need to list Std(λ) for the headline numbers
  GradedDimension gd = std_graded_dimension(lambda, cfg, column);
  long dim = gd.total();
  Tableau seed = column ? t_col(lambda) : t_row(lambda);
  ResidueSequence iseq = residue_sequence(seed, cfg);

  std::shared_ptr<const SpechtModel<S>> model;
  if (dim <= o.max_basis) {
    ModelCache<S> cache;
    model = column ? cache.column(lambda, cfg) : cache.row(lambda, cfg);
    if (!(model->graded_dimension() == gd))
      throw EngineInconsistency("model graded dimension " + model->graded_dimension().to_string() +
                                " differs from the tableau count " + gd.to_string());
  }

  std::string seed_name = column ? "i_lambda" : "i^lambda";
  if (o.json) {
    ordered_json j;
    j["lambda"] = lambda.to_string();
    j["e"] = cfg.e_string();
    j["kappa"] = cfg.kappa_string();
    j["field"] = cfg.field.name();
    j["orientation"] = column ? "column" : "row";
    j["dim"] = dim;
    j["graded_dim"] = gd.to_string();
    j["defect"] = defect(lambda, cfg);
    j[seed_name] = seq_string(iseq);
    if (model) {
      ordered_json basis = ordered_json::array();
      for (int k = 0; k < model->dim(); ++k) {
        const Tableau& t = model->basis[k];
        basis.push_back({{"tableau", t.to_string()},
                         {"degree", degree(t, cfg)},
                         {"codegree", codegree(t, cfg)},
                         {"residues", seq_string(model->residues[k])}});
      }
      j["basis"] = basis;
    }
    out << j.dump() << "\n";
    return Ok;
  }

  out << "lambda: " << lambda.to_string() << "\n"
      << "e: " << cfg.e_string() << "  kappa: " << cfg.kappa_string() << "  field: " << cfg.field.name() << "\n"
      << "module: " << (column ? "column" : "row") << "\n"
      << "dim: " << dim << "\n"
      << "graded dim: " << gd.to_string() << "\n"
      << "defect: " << defect(lambda, cfg) << "\n"
      << seed_name << ": " << seq_string(iseq) << "\n";
  if (!model) {
    out << "basis: omitted (dim above --max-basis " << o.max_basis << ")\n";
    return Ok;
  }
  out << "basis (tableau, deg, codeg, residues):\n";
  for (int k = 0; k < model->dim(); ++k) {
    const Tableau& t = model->basis[k];
    out << "  " << t.to_string() << "  " << degree(t, cfg) << "  " << codegree(t, cfg) << "  "
        << seq_string(model->residues[k]) << "\n";
  }
  return Ok;
}

// ---------------------------------------------------------------------- hom

template <class S>
int cmd_hom(const Options& o, std::ostream& out) {
  AlgebraConfig cfg = make_config(o);
  Multipartition lambda = parse_shape(o.lambda, cfg, "--lambda");
  Multipartition mu = parse_shape(o.mu, cfg, "--mu");
  if (lambda.size() != mu.size()) throw Usage("--lambda and --mu have different sizes");
  ModelCache<S> cache;
  HomBasis<S> h = hom_space(lambda, mu, cfg, o.dominated, cache);
  if (o.json) {
    out << hom_to_json(h) << "\n";
    return Ok;
  }
  out << (o.dominated ? "DHom" : "Hom") << "(S_" << lambda.to_string() << ", S_" << mu.to_string()
      << "): graded dim " << h.graded_dimension().to_string() << "\n";
  for (const auto& b : h.basis)
    out << "  degree " << b.degree << ": z_lambda -> " << image_to_string(b.image, *h.target) << "\n";
  return Ok;
}

// ---------------------------------------------------------------- enumerate

int cmd_enumerate(const Options& o, std::ostream& out) {
  AlgebraConfig cfg = make_config(o);
  std::vector<std::string> items;
  if (o.what == "multipartitions") {
    for (const auto& x : multipartitions(cfg.level(), o.n)) items.push_back(x.to_string());
  } else {
    Multipartition lambda = parse_shape(o.lambda, cfg, "--lambda");
    std::vector<Tableau> ts;
    if (o.what == "std") ts = enumerate_std(lambda);
    else if (o.what == "col-dominated") ts = enumerate_col_dominated(lambda, parse_shape(o.mu, cfg, "--mu"));
    else if (o.what == "row-dominated") ts = enumerate_row_dominated(lambda, parse_shape(o.mu, cfg, "--mu"));
    else throw Usage("unknown --what '" + o.what + "'");
    for (const auto& t : ts) items.push_back(t.to_string());
  }
  if (o.json) {
    out << ordered_json(items).dump() << "\n";
  } else {
    for (const auto& s : items) out << s << "\n";
  }
  return Ok;
}

// ------------------------------------------------------------------- verify

template <class S>
std::vector<VerificationReport> single_instance(const Options& o, const AlgebraConfig& cfg, ModelCache<S>& cache) {
  const std::string& th = o.theorem;
  Multipartition lambda = parse_shape(o.lambda, cfg, "--lambda");
  Multipartition mu = o.mu.empty() ? lambda : parse_shape(o.mu, cfg, "--mu");
  std::vector<VerificationReport> reps;
  if (th == "homconj") return {verify_duality(lambda, mu, cfg, cache)};
  if (th == "domhom") return {verify_domhom(lambda, mu, cfg, cache)};
  if (th == "decomposable") return {verify_decomposable(lambda, cfg, cache)};
  if (th == "dominatedbasis") return {verify_convention(lambda, mu, cfg, cache)};

  std::vector<int> ms;
  if (o.m > 0) ms.push_back(o.m);
  else
    for (int m = 1; m <= cfg.level(); ++m) ms.push_back(m);
  int width = 0, height = 0;
  for (int m = 1; m <= cfg.level(); ++m) {
    width = std::max({width, lambda.row(m, 1), mu.row(m, 1)});
    height = std::max({height, lambda.column(m, 1), mu.column(m, 1)});
  }
  auto range = [](int given, int top) {
    std::vector<int> v;
    if (given >= 0) v.push_back(given);
    else
      for (int k = 0; k <= top; ++k) v.push_back(k);
    return v;
  };
  bool hard = o.hard || o.worked_example;
  for (int m : ms) {
    if (th == "cr") reps.push_back(verify_cr(lambda, mu, m, cfg, cache));
    else if (th == "rr") reps.push_back(verify_rr(lambda, mu, m, cfg, cache));
    else if (th == "fcr") reps.push_back(verify_fcr(lambda, mu, m, cfg, cache));
    else if (th == "gcr")
      for (int c : range(o.c, width)) reps.push_back(verify_gcr(lambda, mu, c, m, cfg, cache));
    else if (th == "grr")
      for (int r : range(o.r, height)) reps.push_back(verify_grr(lambda, mu, r, m, cfg, cache));
    else if (th == "exprow")
      for (int r : range(o.r, height)) reps.push_back(verify_exprow(lambda, mu, r, m, cfg, cache, hard));
  }
  return reps;
}

void print_report(const VerificationReport& rep, bool json, std::ostream& out) {
  if (json) {
    out << rep.to_json() << "\n";
    return;
  }
  std::string v = verdict_string(rep.verdict);
  std::transform(v.begin(), v.end(), v.begin(), ::toupper);
  out << v << "  " << rep.theorem << "  " << rep.instance << "  left=" << rep.left.to_string()
      << "  right=" << rep.right.to_string();
  if (!rep.witness.empty()) out << "  (" << rep.witness << ")";
  out << "\n";
}

template <class S>
int cmd_verify(Options o, std::ostream& out) {
  const auto& ids = theorem_ids();
  if (std::find(ids.begin(), ids.end(), o.theorem) == ids.end()) throw Usage("unknown theorem id '" + o.theorem + "'");
  if (o.worked_example) apply_example(o);
  AlgebraConfig cfg = make_config(o);
  ModelCache<S> cache;

  SweepSummary s;
  s.theorem = o.theorem;
  auto sink = [&](const VerificationReport& rep) {
    print_report(rep, o.json, out);
  };
  if (!o.lambda.empty()) {
    for (const auto& rep : single_instance(o, cfg, cache)) {
      ++s.instances;
      if (rep.verdict == Verdict::Pass) ++s.passes;
      else if (rep.verdict == Verdict::Fail) ++s.failures;
      else ++s.not_applicable;
      sink(rep);
    }
  } else {
    if (o.theorem == "decomposable") throw Usage("decomposable checks a given witness: pass --lambda");
    SweepOptions so{o.theorem, cfg, o.n, o.n_min, o.threads};
    s = run_sweep(so, cache, sink);
  }
  if (o.json) {
    ordered_json j;
    j["summary"] = {{"theorem", s.theorem},
                    {"instances", s.instances},
                    {"pass", s.passes},
                    {"fail", s.failures},
                    {"not_applicable", s.not_applicable}};
    out << j.dump() << "\n";
  } else {
    out << s.to_string() << "\n";
  }
  return s.failures ? VerificationFailure : Ok;
}

// ------------------------------------------------------------------- replay

/// One fixture per line: {"name", "args": [...], "exit": k, "contains": [...]}.
int cmd_replay(const Options& o, std::ostream& out) {
  int bad = 0, total = 0;
  for (const auto& file : o.files) {
    std::ifstream in(file);
    if (!in) throw Usage("cannot open fixture file " + file);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
      ++lineno;
      if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
      nlohmann::json fx = nlohmann::json::parse(line);
      std::string name = fx.value("name", file + ":" + std::to_string(lineno));
      auto args = fx.at("args").get<std::vector<std::string>>();
      if (!args.empty() && args.front() == "replay") throw Usage(name + ": fixtures may not replay fixtures");
      std::ostringstream o_out, o_err;
      int code = run_cli(args, o_out, o_err);
      std::string text = o_out.str();
      std::vector<std::string> problems;
      int want = fx.value("exit", 0);
      if (code != want) problems.push_back("exit " + std::to_string(code) + ", expected " + std::to_string(want));
      for (const auto& s : fx.value("contains", std::vector<std::string>{}))
        if (text.find(s) == std::string::npos) problems.push_back("missing \"" + s + "\"");
      for (const auto& s : fx.value("absent", std::vector<std::string>{}))
        if (text.find(s) != std::string::npos) problems.push_back("unexpected \"" + s + "\"");
      ++total;
      if (problems.empty()) {
        out << "ok    " << name << "\n";
        continue;
      }
      ++bad;
      out << "FAIL  " << name << ":";
      for (const auto& p : problems) out << " " << p << ";";
      out << "\n";
      if (!o_err.str().empty()) out << "      stderr: " << o_err.str();
    }
  }
  out << total - bad << " of " << total << " fixtures match\n";
  return bad ? VerificationFailure : Ok;
}

void add_config_options(CLI::App* sub, Options& o) {
  sub->add_option("--e", o.e, "quantum characteristic: integer >= 2 or inf")->capture_default_str();
  sub->add_option("--kappa", o.kappa, "multicharge, e.g. 0,1,0 (default: zeros of level --l)");
  sub->add_option("--field", o.field, "Q or F<p>")->capture_default_str();
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"graded Specht modules of KLR algebras: modules, homomorphisms, removal theorems", "klrspecht"};
  app.require_subcommand(1);

  auto* info = app.add_subcommand("specht-info", "dimension, graded dimension, defect and basis of S_lambda");
  add_config_options(info, o);
  info->add_option("--lambda", o.lambda, "multipartition, e.g. 1,1|2,1|0")->required();
  info->add_flag("--row", o.row, "row module S^lambda instead of the column module");
  info->add_option("--max-basis", o.max_basis, "list the basis only up to this dimension")->capture_default_str();
  info->add_flag("--json", o.json, "JSON output");

  auto* hom = app.add_subcommand("hom", "graded homomorphism space from S_lambda to S_mu");
  add_config_options(hom, o);
  hom->add_option("--lambda", o.lambda, "source multipartition");
  hom->add_option("--mu", o.mu, "target multipartition");
  hom->add_flag("--dominated", o.dominated, "dominated homomorphisms only");
  hom->add_flag("--paper-example", o.worked_example, "the worked e=2 example");
  hom->add_flag("--json", o.json, "JSON output");

  auto* en = app.add_subcommand("enumerate", "list multipartitions or tableaux");
  add_config_options(en, o);
  en->add_option("--what", o.what, "multipartitions | std | col-dominated | row-dominated")->capture_default_str();
  en->add_option("--lambda", o.lambda, "multipartition");
  en->add_option("--mu", o.mu, "second multipartition (dominated sets)");
  en->add_option("--l", o.l, "level");
  en->add_option("--n", o.n, "size")->capture_default_str();
  en->add_flag("--json", o.json, "JSON output");

  auto* ver = app.add_subcommand("verify", "check a theorem on one instance or over a sweep");
  add_config_options(ver, o);
  ver->add_option("theorem", o.theorem, "cr rr fcr gcr grr homconj domhom decomposable dominatedbasis exprow")
      ->required();
  ver->add_option("--lambda", o.lambda, "single instance: source");
  ver->add_option("--mu", o.mu, "single instance: target (default lambda)");
  ver->add_option("--m", o.m, "component of the split (default: all)");
  ver->add_option("--c", o.c, "column split parameter (default: all)");
  ver->add_option("--r", o.r, "row split parameter (default: all)");
  ver->add_option("--l", o.l, "sweep level (default: level of --kappa)");
  ver->add_option("--n", o.n, "sweep: largest size")->capture_default_str();
  ver->add_option("--n-min", o.n_min, "sweep: smallest size")->capture_default_str();
  ver->add_option("--threads", o.threads, "worker threads")->capture_default_str();
  ver->add_flag("--hard", o.hard, "exprow: a non-homomorphic candidate is a failure");
  ver->add_flag("--paper-example", o.worked_example, "the worked e=2 instance, exprow checked hard");
  ver->add_flag("--json", o.json, "JSONL output");

  auto* rep = app.add_subcommand("replay", "run fixture files of (invocation, expected output) pairs");
  rep->add_option("files", o.files, "JSONL fixture files")->required();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? Ok : UsageError;
  }

  try {
    if (info->parsed()) {
      AlgebraConfig cfg = make_config(o);
      return with_field(cfg, [&](auto s) { return cmd_specht_info<decltype(s)>(o, out); });
    }
    if (hom->parsed()) {
      if (o.worked_example) apply_example(o);
      AlgebraConfig cfg = make_config(o);
      return with_field(cfg, [&](auto s) { return cmd_hom<decltype(s)>(o, out); });
    }
    if (en->parsed()) return cmd_enumerate(o, out);
    if (ver->parsed()) {
      Options v = o;
      if (v.worked_example) apply_example(v);
      AlgebraConfig cfg = make_config(v);
      return with_field(cfg, [&](auto s) { return cmd_verify<decltype(s)>(o, out); });
    }
    if (rep->parsed()) return cmd_replay(o, out);
  } catch (const EngineInconsistency& e) {
    err << "internal inconsistency: " << e.what() << "\n";
    return Inconsistency;
  } catch (const std::invalid_argument& e) {
    err << "usage: " << e.what() << "\n";
    return UsageError;
  } catch (const std::out_of_range& e) {
    err << "usage: " << e.what() << "\n";
    return UsageError;
  } catch (const nlohmann::json::exception& e) {
    err << "usage: bad fixture: " << e.what() << "\n";
    return UsageError;
  } catch (const std::exception& e) {
    err << "internal inconsistency: " << e.what() << "\n";
    return Inconsistency;
  }
  return UsageError;
}

}  // namespace klr::cli
