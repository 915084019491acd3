#include "qks/symfunc.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>
#include <stdexcept>

#include "qks/rsk.hpp"

namespace qks {

namespace {

int vec_sum(const std::vector<int>& v) { return std::accumulate(v.begin(), v.end(), 0); }

bool weakly_decreasing(const std::vector<int>& v) {
  for (size_t i = 1; i < v.size(); ++i)
    if (v[i - 1] < v[i]) return false;
  return true;
}

int perm_sign(const std::vector<int>& w) {
  int inv = 0;
  for (size_t i = 0; i < w.size(); ++i)
    for (size_t j = i + 1; j < w.size(); ++j)
      if (w[i] > w[j]) ++inv;
  return inv % 2 ? -1 : 1;
}

MultiPartition replace_at(const MultiPartition& mp, int i, Partition p) {
  std::vector<Partition> comps = mp.components();
  comps[i] = std::move(p);
  return MultiPartition(std::move(comps));
}

void add_scaled(TensorSym& out, const TensorSym& f, const ArrowLaurent& s) {
  for (const auto& [mp, c] : f.terms()) out.add_term(mp, c * s);
}

}  // namespace

LusztigDatum::LusztigDatum(int r, std::vector<DatumEntry> entries)
    : r_(r), entries_(std::move(entries)) {
  if (r_ < 1) throw std::invalid_argument("datum needs at least one node");
  for (const auto& e : entries_) {
    if (e.node < 0 || e.node >= r_) throw std::invalid_argument("datum entry node out of range");
    if (e.a < 1 || static_cast<int>(e.weight.size()) != e.a)
      throw std::invalid_argument("datum entry weight length must equal its block size");
    if (!weakly_decreasing(e.weight) || e.weight.back() < 0)
      throw std::invalid_argument("datum entry weight must be weakly decreasing and nonnegative");
  }
}

int LusztigDatum::total_size() const {
  int n = 0;
  for (const auto& e : entries_) n += vec_sum(e.weight);
  return n;
}

bool LusztigDatum::is_periodic() const {
  if (entries_.empty()) return true;
  if (entries_.back().node != r_ - 1) return false;
  for (size_t k = 0; k + 1 < entries_.size(); ++k)
    if (entries_[k + 1].node != (entries_[k].node + 1) % r_) return false;
  return true;
}

bool LusztigDatum::is_even() const { return entries_.empty() || entries_.front().node == 0; }

bool LusztigDatum::is_borel() const {
  return std::all_of(entries_.begin(), entries_.end(),
                     [](const DatumEntry& e) { return e.a == 1; });
}

bool LusztigDatum::is_rectangular() const {
  for (const auto& e : entries_)
    if (e.weight.front() != e.weight.back()) return false;
  return true;
}

bool LusztigDatum::is_concentrated(int node) const {
  for (const auto& e : entries_)
    if (e.node != node && vec_sum(e.weight) != 0) return false;
  return true;
}

bool LusztigDatum::is_dominant() const {
  std::vector<std::vector<int>> per_node(r_);
  for (const auto& e : entries_)
    per_node[e.node].insert(per_node[e.node].end(), e.weight.begin(), e.weight.end());
  return std::all_of(per_node.begin(), per_node.end(), weakly_decreasing);
}

bool LusztigDatum::is_balanced() const {
  if (!is_periodic()) return false;
  for (size_t k = 0; k + 1 < entries_.size(); ++k)
    if (entries_[k].node != r_ - 1 && entries_[k].a != entries_[k + 1].a) return false;
  return true;
}

std::string LusztigDatum::to_string() const {
  std::string s = "[";
  for (size_t k = 0; k < entries_.size(); ++k) {
    if (k) s += "; ";
    s += std::to_string(entries_[k].node) + ":(";
    for (int j = 0; j < entries_[k].a; ++j) {
      if (j) s += ",";
      s += std::to_string(entries_[k].weight[j]);
    }
    s += ")";
  }
  return s + "]";
}

RectTriple::RectTriple(int r, int i1, std::vector<int> mu, std::vector<int> eta)
    : r_(r), i1_(i1), mu_(std::move(mu)), eta_(std::move(eta)) {
  if (r_ < 1) throw std::invalid_argument("rectangle datum needs at least one node");
  if (i1_ < 0 || i1_ >= r_) throw std::invalid_argument("starting node out of range");
  if (mu_.size() != eta_.size())
    throw std::invalid_argument("rectangle widths and heights must have equal length");
  if (!weakly_decreasing(mu_) || (!mu_.empty() && mu_.back() < 0))
    throw std::invalid_argument("rectangle widths must be weakly decreasing and nonnegative");
  for (int e : eta_)
    if (e < 1) throw std::invalid_argument("rectangle heights must be positive");
}

int RectTriple::n() const { return vec_sum(eta_); }

int RectTriple::total_size() const {
  int n = 0;
  for (int k = 0; k < s(); ++k) n += mu_[k] * eta_[k];
  return n;
}

LusztigDatum RectTriple::datum() const {
  std::vector<DatumEntry> es;
  for (int k = 0; k < s(); ++k) {
    int start = k == 0 ? i1_ : 0;
    for (int node = start; node < r_; ++node) {
      DatumEntry e;
      e.node = node;
      e.a = eta_[k];
      e.weight.assign(eta_[k], node == r_ - 1 ? mu_[k] : 0);
      es.push_back(std::move(e));
    }
  }
  return LusztigDatum(r_, std::move(es));
}

std::string RectTriple::to_string() const {
  auto list = [](const std::vector<int>& v) {
    std::string s = "(";
    for (size_t i = 0; i < v.size(); ++i) {
      if (i) s += ",";
      s += std::to_string(v[i]);
    }
    return s + ")";
  };
  return "mu=" + list(mu_) + " eta=" + list(eta_) + " i1=" + std::to_string(i1_) +
         " r=" + std::to_string(r_);
}

TensorSym TensorSym::one(int r) {
  TensorSym f(r);
  f.add_term(MultiPartition(std::vector<Partition>(r)), ArrowLaurent::constant(r, 1));
  return f;
}

void TensorSym::add_term(const MultiPartition& mp, const ArrowLaurent& c) {
  if (c.is_zero()) return;
  assert(mp.r() == r_ && c.r() == r_);
  auto it = terms_.find(mp);
  if (it == terms_.end()) {
    terms_.emplace(mp, c);
  } else {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

ArrowLaurent TensorSym::coeff(const MultiPartition& mp) const {
  auto it = terms_.find(mp);
  return it == terms_.end() ? ArrowLaurent(r_) : it->second;
}

TensorSym& TensorSym::operator+=(const TensorSym& other) {
  assert(r_ == other.r_);
  for (const auto& [mp, c] : other.terms_) add_term(mp, c);
  return *this;
}

std::string TensorSym::to_string() const {
  if (terms_.empty()) return "0";
  std::string s;
  for (const auto& [mp, c] : terms_) {
    if (!s.empty()) s += " + ";
    s += "(" + c.to_string() + ")*s" + mp.to_string();
  }
  return s;
}

void TensorPoly::add_term(const MultiPartition& mp, const UniPoly& c) {
  if (c.is_zero()) return;
  auto it = terms.find(mp);
  if (it == terms.end()) {
    terms.emplace(mp, c);
  } else {
    it->second += c;
    if (it->second.is_zero()) terms.erase(it);
  }
}

TensorPoly& TensorPoly::operator+=(const TensorPoly& other) {
  for (const auto& [mp, c] : other.terms) add_term(mp, c);
  return *this;
}

TensorPoly& TensorPoly::operator-=(const TensorPoly& other) {
  for (const auto& [mp, c] : other.terms) add_term(mp, UniPoly() - c);
  return *this;
}

std::string TensorPoly::to_string() const {
  if (terms.empty()) return "0";
  std::string s;
  for (const auto& [mp, c] : terms) {
    if (!s.empty()) s += " + ";
    s += "(" + c.to_string() + ")*s" + mp.to_string();
  }
  return s;
}

TensorPoly specialize_uniform(const TensorSym& f) {
  TensorPoly out;
  out.r = f.r();
  for (const auto& [mp, c] : f.terms()) out.add_term(mp, c.specialize_uniform());
  return out;
}

TensorPoly conjugate_components(const TensorPoly& f) {
  TensorPoly out;
  out.r = f.r;
  for (const auto& [mp, c] : f.terms) {
    std::vector<Partition> comps;
    comps.reserve(f.r);
    for (int i = 0; i < f.r; ++i) comps.push_back(mp[i].conjugate());
    out.add_term(MultiPartition(std::move(comps)), c);
  }
  return out;
}

TensorPoly node_reversal(const TensorPoly& f) {
  TensorPoly out;
  out.r = f.r;
  for (const auto& [mp, c] : f.terms) {
    std::vector<Partition> comps;
    comps.reserve(f.r);
    for (int i = f.r - 1; i >= 0; --i) comps.push_back(mp[i]);
    out.add_term(MultiPartition(std::move(comps)), c);
  }
  return out;
}

TensorSym ts_mult_h(const TensorSym& f, int node, int k) {
  assert(k >= 0);
  if (k == 0) return f;
  TensorSym out(f.r());
  for (const auto& [mp, c] : f.terms())
    for (const auto& g : horizontal_strip_over(mp[node], k)) out.add_term(replace_at(mp, node, g), c);
  return out;
}

TensorSym ts_skew_h(const TensorSym& f, int node, int k) {
  assert(k >= 0);
  if (k == 0) return f;
  TensorSym out(f.r());
  for (const auto& [mp, c] : f.terms())
    for (const auto& g : horizontal_strip_under(mp[node], k)) out.add_term(replace_at(mp, node, g), c);
  return out;
}

TensorSym ts_skew_e(const TensorSym& f, int node, int k) {
  assert(k >= 0);
  if (k == 0) return f;
  TensorSym out(f.r());
  for (const auto& [mp, c] : f.terms())
    for (const auto& g : vertical_strip_under(mp[node], k)) out.add_term(replace_at(mp, node, g), c);
  return out;
}

TensorSym apply_H_single(const TensorSym& f, int node, int d) {
  const int r = f.r();
  const int next = (node + 1) % r;
  TensorSym out(r);
  int amax = 0, bmax = 0;
  for (const auto& [mp, c] : f.terms()) {
    amax = std::max(amax, mp[node].length());
    bmax = std::max(bmax, mp[next][0]);
  }
  for (int a = 0; a <= amax; ++a)
    for (int b = 0; b <= bmax; ++b) {
      int k = d + a + b;
      if (k < 0) continue;
      TensorSym g = ts_skew_h(f, next, b);
      g = ts_skew_e(g, node, a);
      if (g.is_zero()) continue;
      g = ts_mult_h(g, node, k);
      add_scaled(out, g, ArrowLaurent::arrow_power(r, node, b, a % 2 ? -1 : 1));
    }
  return out;
}

TensorSym apply_H_block(const TensorSym& f, int node, const std::vector<int>& beta) {
  const int r = f.r();
  const int a = static_cast<int>(beta.size());
  if (a == 0) return f;
  const int next = (node + 1) % r;

  // Alternation sum over the symmetric group on the block: w contributes
  // sign(w), and shifts the degree extracted for variable j by j - w(j).
  std::vector<std::pair<std::vector<int>, int>> perms;
  std::vector<int> w(a);
  std::iota(w.begin(), w.end(), 1);
  do {
    perms.emplace_back(w, perm_sign(w));
  } while (std::next_permutation(w.begin(), w.end()));

  TensorSym out(r);
  std::vector<int> av(a, 0), bv(a, 0);

  auto at_leaf = [&](const TensorSym& g) {
    int ta = vec_sum(av), tb = vec_sum(bv);
    long long esign = ta % 2 ? -1 : 1;
    for (const auto& [wp, sgn] : perms) {
      std::vector<int> k(a);
      bool ok = true;
      for (int j = 0; j < a; ++j) {
        k[j] = beta[j] - (j + 1) + wp[j] + av[j] + bv[j];
        if (k[j] < 0) {
          ok = false;
          break;
        }
      }
      if (!ok) continue;
      TensorSym cur = g;
      for (int j = 0; j < a; ++j) cur = ts_mult_h(cur, node, k[j]);
      add_scaled(out, cur, ArrowLaurent::arrow_power(r, node, tb, esign * sgn));
    }
  };

  // All adjoint factors act before any multiplication, so the e/h-adjoint
  // choices for the different variables can be enumerated as a prefix-shared
  // tree, with the alternation sum evaluated at each leaf.
  auto rec = [&](auto&& self, int j, const TensorSym& g) -> void {
    if (g.is_zero()) return;
    if (j == a) {
      at_leaf(g);
      return;
    }
    int amax = 0, bmax = 0;
    for (const auto& [mp, c] : g.terms()) {
      amax = std::max(amax, mp[node].length());
      bmax = std::max(bmax, mp[next][0]);
    }
    for (int aj = 0; aj <= amax; ++aj) {
      TensorSym ge = aj ? ts_skew_e(g, node, aj) : g;
      if (ge.is_zero()) continue;
      av[j] = aj;
      for (int bj = 0; bj <= bmax; ++bj) {
        TensorSym gh = bj ? ts_skew_h(ge, next, bj) : ge;
        if (gh.is_zero()) continue;
        bv[j] = bj;
        self(self, j + 1, gh);
      }
    }
    av[j] = bv[j] = 0;
  };
  rec(rec, 0, f);
  return out;
}

TensorSym apply_entry(const TensorSym& f, const DatumEntry& e) {
  return apply_H_block(f, e.node, e.weight);
}

TensorSym quiver_hl(const LusztigDatum& d) {
  TensorSym f = TensorSym::one(d.r());
  for (int k = d.length() - 1; k >= 0; --k) f = apply_entry(f, d.entry(k));
  return f;
}

ArrowLaurent ks_full(const TensorSym& h, const MultiPartition& lam) { return h.coeff(lam); }

std::optional<std::vector<int>> root_lattice_exponents(const LusztigDatum& d,
                                                       const MultiPartition& lam) {
  const int r = d.r();
  assert(lam.r() == r);
  std::vector<int> v(r, 0);
  for (int i = 0; i < r; ++i) v[i] = lam[i].size();
  for (const auto& e : d.entries()) v[e.node] -= vec_sum(e.weight);
  std::vector<int> acc(r, 0);
  std::partial_sum(v.begin(), v.end(), acc.begin());
  if (acc.back() != 0) return std::nullopt;
  acc.pop_back();
  return acc;
}

UniPoly reduced_ks(const ArrowLaurent& c, const LusztigDatum& d, const MultiPartition& lam) {
  auto ex = root_lattice_exponents(d, lam);
  if (!ex) {
    if (!c.is_zero())
      throw integrity_error("nonzero coefficient off the root lattice at " + lam.to_string());
    return UniPoly();
  }
  if (c.is_zero()) return UniPoly();
  std::vector<int> full = *ex;
  full.push_back(0);
  auto q = c.divided_by(full).as_cycle_polynomial();
  if (!q)
    throw integrity_error("coefficient at " + lam.to_string() +
                          " is not the dominance monomial times a loop polynomial");
  return *q;
}

UniPoly reduced_ks(const TensorSym& h, const LusztigDatum& d, const MultiPartition& lam) {
  return reduced_ks(h.coeff(lam), d, lam);
}

KsTables ks_tables_by_operators(const LusztigDatum& d) {
  KsTables out;
  TensorSym h = quiver_hl(d);
  const int n = d.total_size();
  for (const auto& [mp, c] : h.terms()) {
    assert(mp.size() == n);
    out.full.emplace(mp, c);
    UniPoly k = reduced_ks(h, d, mp);
    if (!k.is_zero()) out.reduced.emplace(mp, k);
  }
  return out;
}

long long multi_lr_coefficient(const Partition& lambda, const std::vector<Partition>& parts) {
  std::vector<Partition> blocks;
  int total = 0;
  for (const auto& p : parts)
    if (!p.empty()) {
      blocks.push_back(p);
      total += p.size();
    }
  if (total != lambda.size()) return 0;
  if (blocks.empty()) return lambda.empty() ? 1 : 0;
  if (blocks.size() == 1) return blocks[0] == lambda ? 1 : 0;
  return star_coefficient(lambda, blocks);
}

std::map<Partition, UniPoly> single_node_hl(const std::vector<int>& mu,
                                            const std::vector<int>& eta) {
  TensorSym h = quiver_hl(RectTriple(1, 0, mu, eta).datum());
  std::map<Partition, UniPoly> out;
  for (const auto& [mp, c] : h.terms()) {
    auto q = c.as_cycle_polynomial();
    assert(q.has_value());
    out.emplace(mp[0], *q);
  }
  return out;
}

TensorSym plethysm_weighted_sum(const std::map<Partition, UniPoly>& f, int r) {
  TensorSym out(r);
  for (const auto& [lam, c] : f) {
    if (c.is_zero()) continue;
    ArrowLaurent base(r);
    for (int dd = 0; dd <= c.degree(); ++dd)
      if (c.coeff(dd) != 0)
        base += ArrowLaurent::monomial(r, std::vector<int>(r, dd), c.coeff(dd));
    for (const auto& mp : all_multipartitions(r, lam.size())) {
      std::vector<Partition> blocks;
      for (int i = r - 1; i >= 0; --i) blocks.push_back(mp[i]);
      long long m = multi_lr_coefficient(lam, blocks);
      if (m == 0) continue;
      // Cells in slot i carry t_{i,i+1} ... t_{r-2,r-1}, so the exponent of
      // arrow j <= r-2 is the total size of slots 0..j.
      std::vector<int> exps(r, 0);
      int run = 0;
      for (int j = 0; j + 1 < r; ++j) {
        run += mp[j].size();
        exps[j] = run;
      }
      out.add_term(mp, base * ArrowLaurent::monomial(r, exps, m));
    }
  }
  return out;
}

TensorPoly induction_plethysm(const std::map<Partition, UniPoly>& g, int r) {
  TensorPoly out;
  out.r = r;
  for (const auto& [lam, c] : g) {
    if (c.is_zero()) continue;
    UniPoly cr = stretch_variable(c, r);
    for (const auto& mp : all_multipartitions(r, lam.size())) {
      std::vector<Partition> blocks;
      for (int i = r - 1; i >= 0; --i) blocks.push_back(mp[i]);
      long long m = multi_lr_coefficient(lam, blocks);
      if (m == 0) continue;
      int deg = 0;
      for (int i = 0; i < r; ++i) deg += i * mp[i].size();
      UniPoly term = cr.times_power(deg);
      out.add_term(mp, term * UniPoly::constant(m));
    }
  }
  return out;
}

LusztigDatum borel_datum(const MultiPartition& mu, int n) {
  const int r = mu.r();
  if (n < 0)
    for (int i = 0; i < r; ++i) n = std::max(n, mu[i].length());
  if (n < 0) n = 0;
  for (int i = 0; i < r; ++i)
    if (mu[i].length() > n) throw std::invalid_argument("component has more than n rows");
  std::vector<DatumEntry> es;
  es.reserve(static_cast<size_t>(n) * r);
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < r; ++i) {
      DatumEntry e;
      e.node = i;
      e.a = 1;
      e.weight = {mu[i][k]};
      es.push_back(std::move(e));
    }
  return LusztigDatum(r, std::move(es));
}

}  // namespace qks
