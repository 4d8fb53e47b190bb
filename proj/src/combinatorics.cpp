#include "klrspecht/combinatorics.hpp"

#include <algorithm>
#include <charconv>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace klr {

namespace {

long parse_long(std::string_view s, const char* what) {
  while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
  while (!s.empty() && s.back() == ' ') s.remove_suffix(1);
  long v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || ec != std::errc() || ptr != s.data() + s.size())
    throw std::invalid_argument(std::string("cannot parse ") + what + " '" + std::string(s) + "'");
  return v;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  for (std::size_t k = 0; k <= s.size(); ++k) {
    if (k == s.size() || s[k] == sep) {
      out.push_back(s.substr(start, k - start));
      start = k + 1;
    }
  }
  return out;
}

void trim_zeros(Partition& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

}  // namespace

AlgebraConfig AlgebraConfig::make(int e, std::vector<Residue> kappa, FieldSpec field) {
  if (e != 0 && e < 2) throw std::invalid_argument("e must be at least 2 or infinity");
  if (kappa.empty()) throw std::invalid_argument("multicharge must have at least one entry");
  if (field.prime != 0 && !is_prime(field.prime)) throw std::invalid_argument("field characteristic must be prime");
  AlgebraConfig cfg;
  cfg.e = e;
  cfg.field = field;
  for (Residue k : kappa) cfg.kappa.push_back(cfg.reduce(k));
  return cfg;
}

Residue AlgebraConfig::reduce(long x) const {
  if (e == 0) return x;
  long r = x % e;
  return r < 0 ? r + e : r;
}

bool AlgebraConfig::arrow(Residue i, Residue j) const {
  return e != 2 && reduce(j) == reduce(i - 1);
}

int AlgebraConfig::cartan(Residue i, Residue j) const {
  i = reduce(i);
  j = reduce(j);
  int a = 0;
  if (i == j) a += 2;
  if (i == reduce(j + 1)) a -= 1;
  if (i == reduce(j - 1)) a -= 1;
  return a;
}

std::string AlgebraConfig::kappa_string() const {
  std::string s;
  for (std::size_t k = 0; k < kappa.size(); ++k) s += (k ? "," : "") + std::to_string(kappa[k]);
  return s;
}

int parse_e(std::string_view text) {
  if (text == "inf" || text == "infinity") return 0;
  long e = parse_long(text, "e");
  if (e < 2 || e > 1000) throw std::invalid_argument("e must be an integer in 2..1000 or 'inf'");
  return static_cast<int>(e);
}

std::vector<Residue> parse_kappa(std::string_view text) {
  std::vector<Residue> out;
  for (auto part : split(text, ',')) out.push_back(parse_long(part, "multicharge entry"));
  return out;
}

Multipartition::Multipartition(std::vector<Partition> components) : comps_(std::move(components)) {
  for (auto& p : comps_) {
    trim_zeros(p);
    for (std::size_t k = 0; k < p.size(); ++k) {
      if (p[k] <= 0 || (k > 0 && p[k] > p[k - 1]))
        throw std::invalid_argument("component is not a partition");
    }
  }
}

Multipartition Multipartition::composition(std::vector<Partition> components) {
  Multipartition m;
  m.comps_ = std::move(components);
  for (auto& p : m.comps_) {
    trim_zeros(p);
    for (int x : p)
      if (x < 0) throw std::invalid_argument("negative part");
  }
  return m;
}

int Multipartition::size() const {
  int n = 0;
  for (const auto& p : comps_)
    for (int x : p) n += x;
  return n;
}

int Multipartition::row(int m, int r) const {
  const auto& p = component(m);
  return (r >= 1 && r <= static_cast<int>(p.size())) ? p[r - 1] : 0;
}

int Multipartition::column(int m, int c) const {
  int len = 0;
  for (int x : component(m))
    if (x >= c) ++len;
  return len;
}

bool Multipartition::is_multipartition() const {
  for (const auto& p : comps_)
    for (std::size_t k = 0; k < p.size(); ++k)
      if (p[k] <= 0 || (k > 0 && p[k] > p[k - 1])) return false;
  return true;
}

std::string Multipartition::to_string() const {
  std::string s;
  for (std::size_t m = 0; m < comps_.size(); ++m) {
    if (m) s += '|';
    if (comps_[m].empty()) {
      s += '0';
      continue;
    }
    for (std::size_t k = 0; k < comps_[m].size(); ++k) s += (k ? "," : "") + std::to_string(comps_[m][k]);
  }
  return s;
}

Multipartition Multipartition::parse(std::string_view text) {
  std::vector<Partition> comps;
  for (auto part : split(text, '|')) {
    Partition p;
    for (auto x : split(part, ',')) {
      long v = parse_long(x, "part");
      if (v < 0) throw std::invalid_argument("negative part");
      p.push_back(static_cast<int>(v));
    }
    trim_zeros(p);
    comps.push_back(std::move(p));
  }
  return Multipartition(std::move(comps));
}

std::vector<Node> nodes(const Multipartition& lambda) {
  std::vector<Node> out;
  for (int m = 1; m <= lambda.level(); ++m) {
    const auto& p = lambda.component(m);
    for (int r = 1; r <= static_cast<int>(p.size()); ++r)
      for (int c = 1; c <= p[r - 1]; ++c) out.push_back({r, c, m});
  }
  return out;
}

bool contains(const Multipartition& lambda, const Node& a) {
  return a.comp >= 1 && a.comp <= lambda.level() && a.col >= 1 && a.col <= lambda.row(a.comp, a.row);
}

std::vector<Node> addable_nodes(const Multipartition& lambda) {
  std::vector<Node> out;
  for (int m = 1; m <= lambda.level(); ++m) {
    const auto& p = lambda.component(m);
    int rows = static_cast<int>(p.size());
    for (int r = 1; r <= rows + 1; ++r) {
      int len = lambda.row(m, r);
      if (r == 1 || lambda.row(m, r - 1) > len) out.push_back({r, len + 1, m});
    }
  }
  return out;
}

std::vector<Node> removable_nodes(const Multipartition& lambda) {
  std::vector<Node> out;
  for (int m = 1; m <= lambda.level(); ++m) {
    const auto& p = lambda.component(m);
    for (int r = 1; r <= static_cast<int>(p.size()); ++r)
      if (lambda.row(m, r + 1) < p[r - 1]) out.push_back({r, p[r - 1], m});
  }
  return out;
}

bool dominates(const Multipartition& lambda, const Multipartition& mu) {
  if (lambda.level() != mu.level()) throw std::invalid_argument("dominance: level mismatch");
  if (lambda.size() != mu.size()) throw std::invalid_argument("dominance: size mismatch");
  long before_l = 0, before_m = 0;
  for (int m = 1; m <= lambda.level(); ++m) {
    const auto& a = lambda.component(m);
    const auto& b = mu.component(m);
    std::size_t rows = std::max(a.size(), b.size());
    long sa = before_l, sb = before_m;
    if (sa < sb) return false;
    for (std::size_t r = 0; r < rows; ++r) {
      sa += r < a.size() ? a[r] : 0;
      sb += r < b.size() ? b[r] : 0;
      if (sa < sb) return false;
    }
    before_l = sa;
    before_m = sb;
  }
  return true;
}

Partition conjugate_partition(const Partition& p) {
  Partition q;
  if (p.empty()) return q;
  for (int c = 1; c <= p.front(); ++c) {
    int len = 0;
    for (int x : p)
      if (x >= c) ++len;
    q.push_back(len);
  }
  return q;
}

Multipartition conjugate(const Multipartition& lambda) {
  std::vector<Partition> comps;
  for (int m = lambda.level(); m >= 1; --m) comps.push_back(conjugate_partition(lambda.component(m)));
  return Multipartition::composition(std::move(comps));
}

Residue residue(const Node& a, const AlgebraConfig& cfg) {
  return cfg.reduce(cfg.kappa.at(a.comp - 1) + a.col - a.row);
}

RootContent content(const Multipartition& lambda, const AlgebraConfig& cfg) {
  RootContent out;
  for (const Node& a : nodes(lambda)) ++out[residue(a, cfg)];
  return out;
}

int defect(const RootContent& alpha, const AlgebraConfig& cfg) {
  long lam = 0;
  for (Residue k : cfg.kappa) {
    auto it = alpha.find(k);
    if (it != alpha.end()) lam += it->second;
  }
  long form = 0;
  for (const auto& [i, ci] : alpha)
    for (const auto& [j, cj] : alpha) form += static_cast<long>(ci) * cj * cfg.cartan(i, j);
  return static_cast<int>(lam - form / 2);
}

int defect(const Multipartition& lambda, const AlgebraConfig& cfg) { return defect(content(lambda, cfg), cfg); }

ColumnSplit split_columns(const Multipartition& lambda, int c, int m, const AlgebraConfig& cfg) {
  if (m < 1 || m > lambda.level() || c < 0) throw std::invalid_argument("split_columns: bad (c,m)");
  ColumnSplit s;
  Partition left, right;
  for (int x : lambda.component(m)) {
    left.push_back(std::min(x, c));
    right.push_back(std::max(x - c, 0));
  }
  std::vector<Partition> lc{left}, rc;
  for (int k = m + 1; k <= lambda.level(); ++k) lc.push_back(lambda.component(k));
  for (int k = 1; k < m; ++k) rc.push_back(lambda.component(k));
  rc.push_back(right);
  s.left = Multipartition(std::move(lc));
  s.right = Multipartition(std::move(rc));
  for (int k = m; k <= lambda.level(); ++k) s.kappa_left.push_back(cfg.kappa[k - 1]);
  for (int k = 1; k <= m; ++k) s.kappa_right.push_back(cfg.kappa[k - 1]);
  s.kappa_right.back() = cfg.reduce(s.kappa_right.back() + c);
  return s;
}

RowSplit split_rows(const Multipartition& lambda, int r, int m, const AlgebraConfig& cfg) {
  if (m < 1 || m > lambda.level() || r < 0) throw std::invalid_argument("split_rows: bad (r,m)");
  RowSplit s;
  const auto& p = lambda.component(m);
  Partition top(p.begin(), p.begin() + std::min<std::size_t>(r, p.size()));
  Partition bottom(p.begin() + std::min<std::size_t>(r, p.size()), p.end());
  std::vector<Partition> tc, bc{bottom};
  for (int k = 1; k < m; ++k) tc.push_back(lambda.component(k));
  tc.push_back(top);
  for (int k = m + 1; k <= lambda.level(); ++k) bc.push_back(lambda.component(k));
  s.top = Multipartition(std::move(tc));
  s.bottom = Multipartition(std::move(bc));
  for (int k = 1; k <= m; ++k) s.kappa_top.push_back(cfg.kappa[k - 1]);
  s.kappa_bottom.push_back(cfg.reduce(cfg.kappa[m - 1] - r));
  for (int k = m + 1; k <= lambda.level(); ++k) s.kappa_bottom.push_back(cfg.kappa[k - 1]);
  return s;
}

Multipartition glue_columns(const Multipartition& left, const Multipartition& right, int c) {
  int m = right.level();
  std::vector<Partition> comps;
  for (int k = 1; k < m; ++k) comps.push_back(right.component(k));
  const auto& a = left.component(1);
  const auto& b = right.component(m);
  Partition joined;
  for (std::size_t r = 0; r < std::max(a.size(), b.size()); ++r) {
    int x = r < a.size() ? a[r] : 0;
    int y = r < b.size() ? b[r] : 0;
    if (x > c || (y > 0 && x != c)) throw std::invalid_argument("glue_columns: parts do not fit at column " + std::to_string(c));
    joined.push_back(x + y);
  }
  comps.push_back(joined);
  for (int k = 2; k <= left.level(); ++k) comps.push_back(left.component(k));
  return Multipartition(std::move(comps));
}

Multipartition glue_rows(const Multipartition& top, const Multipartition& bottom) {
  int m = top.level();
  std::vector<Partition> comps;
  for (int k = 1; k < m; ++k) comps.push_back(top.component(k));
  Partition joined = top.component(m);
  for (int x : bottom.component(1)) joined.push_back(x);
  comps.push_back(joined);
  for (int k = 2; k <= bottom.level(); ++k) comps.push_back(bottom.component(k));
  return Multipartition(std::move(comps));
}

Multipartition lr_join(const Multipartition& lambda, const Multipartition& mu, int c, int m) {
  if (lambda.level() != mu.level()) throw std::invalid_argument("lr_join: level mismatch");
  if (m < 1 || m > lambda.level() || c < 0) throw std::invalid_argument("lr_join: bad (c,m)");
  int lc = c == 0 ? std::numeric_limits<int>::max() : lambda.column(m, c);
  int mc = c == 0 ? std::numeric_limits<int>::max() : mu.column(m, c);
  if (c > 0 && !(lc >= mc && mc >= mu.column(m, c + 1)))
    throw std::invalid_argument("lr_join: incompatible column lengths at column " + std::to_string(c));
  AlgebraConfig dummy = AlgebraConfig::make(0, std::vector<Residue>(lambda.level(), 0));
  auto sl = split_columns(lambda, c, m, dummy);
  auto sm = split_columns(mu, c, m, dummy);
  return glue_columns(sl.left, sm.right, c);
}

GradedDimension GradedDimension::monomial(int degree, long coeff) {
  GradedDimension g;
  g.add(degree, coeff);
  return g;
}

void GradedDimension::add(int degree, long coeff) {
  if (coeff == 0) return;
  long& x = terms_[degree];
  x += coeff;
  if (x == 0) terms_.erase(degree);
}

long GradedDimension::coeff(int degree) const {
  auto it = terms_.find(degree);
  return it == terms_.end() ? 0 : it->second;
}

long GradedDimension::total() const {
  long t = 0;
  for (const auto& [d, c] : terms_) t += c;
  return t;
}

GradedDimension GradedDimension::operator+(const GradedDimension& o) const {
  GradedDimension g = *this;
  for (const auto& [d, c] : o.terms_) g.add(d, c);
  return g;
}

GradedDimension GradedDimension::operator*(const GradedDimension& o) const {
  GradedDimension g;
  for (const auto& [d1, c1] : terms_)
    for (const auto& [d2, c2] : o.terms_) g.add(d1 + d2, c1 * c2);
  return g;
}

GradedDimension GradedDimension::shifted(int k) const {
  GradedDimension g;
  for (const auto& [d, c] : terms_) g.add(d + k, c);
  return g;
}

std::string GradedDimension::to_string() const {
  if (terms_.empty()) return "0";
  std::string s;
  for (const auto& [d, c] : terms_) {
    if (!s.empty()) s += " + ";
    std::string coeff = c == 1 && d != 0 ? "" : std::to_string(c);
    if (d == 0) s += coeff;
    else if (d == 1) s += coeff + "v";
    else s += coeff + "v^" + std::to_string(d);
  }
  return s;
}

GradedDimension GradedDimension::parse(std::string_view text) {
  GradedDimension g;
  std::string t;
  for (char ch : text)
    if (ch != ' ') t += ch;
  if (t == "0") return g;
  for (auto term : split(t, '+')) {
    if (term.empty()) throw std::invalid_argument("bad graded dimension '" + std::string(text) + "'");
    auto vpos = term.find('v');
    if (vpos == std::string_view::npos) {
      g.add(0, parse_long(term, "coefficient"));
      continue;
    }
    long c = vpos == 0 ? 1 : parse_long(term.substr(0, vpos), "coefficient");
    auto rest = term.substr(vpos + 1);
    long d = 1;
    if (!rest.empty()) {
      if (rest.front() != '^') throw std::invalid_argument("bad graded dimension term '" + std::string(term) + "'");
      d = parse_long(rest.substr(1), "degree");
    }
    g.add(static_cast<int>(d), c);
  }
  return g;
}

namespace {

void partitions_rec(int n, int max_part, Partition& cur, std::vector<Partition>& out) {
  if (n == 0) {
    out.push_back(cur);
    return;
  }
  for (int p = std::min(n, max_part); p >= 1; --p) {
    cur.push_back(p);
    partitions_rec(n - p, p, cur, out);
    cur.pop_back();
  }
}

void multi_rec(int l, int n, std::vector<Partition>& cur, std::vector<Multipartition>& out) {
  if (static_cast<int>(cur.size()) == l - 1) {
    for (const auto& p : partitions(n)) {
      cur.push_back(p);
      out.emplace_back(cur);
      cur.pop_back();
    }
    return;
  }
  for (int k = n; k >= 0; --k)
    for (const auto& p : partitions(k)) {
      cur.push_back(p);
      multi_rec(l, n - k, cur, out);
      cur.pop_back();
    }
}

}  // namespace

std::vector<Partition> partitions(int n) {
  std::vector<Partition> out;
  Partition cur;
  if (n >= 0) partitions_rec(n, n, cur, out);
  return out;
}

std::vector<Multipartition> multipartitions(int l, int n) {
  if (l < 1) throw std::invalid_argument("level must be positive");
  std::vector<Multipartition> out;
  std::vector<Partition> cur;
  multi_rec(l, n, cur, out);
  return out;
}

}  // namespace klr
