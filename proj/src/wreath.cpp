#include "qks/wreath.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>

namespace qks {

namespace {

long long factorial(int n) {
  long long f = 1;
  for (int k = 2; k <= n; ++k) f *= k;
  return f;
}

long long power(long long b, int e) {
  long long p = 1;
  while (e-- > 0) p *= b;
  return p;
}

// Monic coefficient vector (low to high) of the d-th cyclotomic polynomial,
// by dividing x^d - 1 by the cyclotomic polynomials of the proper divisors.
std::vector<long long> cyclotomic(int d) {
  std::vector<long long> num(d + 1, 0);
  num[0] = -1;
  num[d] = 1;
  for (int e = 1; e < d; ++e) {
    if (d % e != 0) continue;
    std::vector<long long> div = cyclotomic(e);
    // exact division, divisor monic
    std::vector<long long> quot(num.size() - div.size() + 1, 0);
    for (int k = static_cast<int>(quot.size()) - 1; k >= 0; --k) {
      long long c = num[k + div.size() - 1];
      quot[k] = c;
      for (size_t j = 0; j < div.size(); ++j) num[k + j] -= c * div[j];
    }
    for (long long c : num) assert(c == 0);
    num = std::move(quot);
  }
  return num;
}

// Remainder of v (coefficients low to high) modulo the monic polynomial phi.
std::vector<long long> mod_monic(std::vector<long long> v, const std::vector<long long>& phi) {
  const int deg = static_cast<int>(phi.size()) - 1;
  for (int k = static_cast<int>(v.size()) - 1; k >= deg; --k) {
    long long c = v[k];
    if (c == 0) continue;
    for (int j = 0; j <= deg; ++j) v[k - deg + j] -= c * phi[j];
  }
  v.resize(deg);
  return v;
}

}  // namespace

bool CycloPoly::is_zero() const {
  for (const auto& row : c_)
    for (long long v : row)
      if (v != 0) return false;
  return true;
}

void CycloPoly::add(int deg, int zeta_pow, long long v) {
  assert(deg >= 0);
  if (deg >= static_cast<int>(c_.size())) c_.resize(deg + 1, std::vector<long long>(r_, 0));
  zeta_pow %= r_;
  if (zeta_pow < 0) zeta_pow += r_;
  c_[deg][zeta_pow] += v;
}

void CycloPoly::accumulate(const CycloPoly& o, long long v, int zeta_pow) {
  assert(o.r_ == r_);
  for (int d = 0; d < static_cast<int>(o.c_.size()); ++d)
    for (int e = 0; e < r_; ++e)
      if (o.c_[d][e] != 0) add(d, e + zeta_pow, o.c_[d][e] * v);
}

CycloPoly operator*(const CycloPoly& a, const CycloPoly& b) {
  assert(a.r_ == b.r_);
  CycloPoly out(a.r_);
  for (int d = 0; d < static_cast<int>(a.c_.size()); ++d)
    for (int e = 0; e < a.r_; ++e) {
      if (a.c_[d][e] == 0) continue;
      for (int d2 = 0; d2 < static_cast<int>(b.c_.size()); ++d2)
        for (int e2 = 0; e2 < b.r_; ++e2)
          if (b.c_[d2][e2] != 0) out.add(d + d2, e + e2, a.c_[d][e] * b.c_[d2][e2]);
    }
  return out;
}

CycloPoly operator*(const CycloPoly& a, const UniPoly& f) {
  CycloPoly out(a.r_);
  for (int k = 0; k <= f.degree(); ++k) {
    if (f.coeff(k) == 0) continue;
    for (int d = 0; d < static_cast<int>(a.c_.size()); ++d)
      for (int e = 0; e < a.r_; ++e)
        if (a.c_[d][e] != 0) out.add(d + k, e, a.c_[d][e] * f.coeff(k));
  }
  return out;
}

CycloPoly CycloPoly::at_one() const {
  CycloPoly out(r_);
  for (const auto& row : c_)
    for (int e = 0; e < r_; ++e)
      if (row[e] != 0) out.add(0, e, row[e]);
  return out;
}

UniPoly CycloPoly::integer_quotient(long long div) const {
  assert(div != 0);
  const std::vector<long long> phi = cyclotomic(r_);
  std::vector<long long> coeffs;
  for (const auto& row : c_) {
    std::vector<long long> rem = mod_monic(row, phi);
    for (size_t j = 1; j < rem.size(); ++j)
      if (rem[j] != 0) throw integrity_error("cyclotomic coefficient is not an integer");
    long long v = rem.empty() ? 0 : rem[0];
    if (v % div != 0) throw integrity_error("coefficient not divisible by the group order");
    coeffs.push_back(v / div);
  }
  return UniPoly(std::move(coeffs));
}

ColoredPermutation compose(const ColoredPermutation& a, const ColoredPermutation& b, int r) {
  const int n = a.n();
  assert(b.n() == n);
  std::vector<int> winv(n);
  for (int k = 0; k < n; ++k) winv[a.perm[k]] = k;
  ColoredPermutation out;
  out.colors.resize(n);
  out.perm.resize(n);
  for (int k = 0; k < n; ++k) {
    out.perm[k] = a.perm[b.perm[k]];
    out.colors[k] = (a.colors[k] + b.colors[winv[k]]) % r;
  }
  return out;
}

ColoredPermutation inverse(const ColoredPermutation& g, int r) {
  const int n = g.n();
  ColoredPermutation out;
  out.colors.resize(n);
  out.perm.resize(n);
  for (int k = 0; k < n; ++k) out.perm[g.perm[k]] = k;
  for (int k = 0; k < n; ++k) out.colors[k] = (r - g.colors[g.perm[k]] % r) % r;
  return out;
}

Partition cycle_type(const std::vector<int>& perm) {
  const int n = static_cast<int>(perm.size());
  std::vector<bool> seen(n, false);
  std::vector<int> lens;
  for (int k = 0; k < n; ++k) {
    if (seen[k]) continue;
    int len = 0;
    for (int j = k; !seen[j]; j = perm[j]) {
      seen[j] = true;
      ++len;
    }
    lens.push_back(len);
  }
  std::sort(lens.begin(), lens.end(), std::greater<int>());
  return Partition(lens);
}

MultiPartition colored_cycle_type(const ColoredPermutation& g, int r) {
  const int n = g.n();
  std::vector<bool> seen(n, false);
  std::vector<std::vector<int>> lens(r);
  for (int k = 0; k < n; ++k) {
    if (seen[k]) continue;
    int len = 0, color = 0;
    for (int j = k; !seen[j]; j = g.perm[j]) {
      seen[j] = true;
      ++len;
      color += g.colors[j];
    }
    lens[color % r].push_back(len);
  }
  std::vector<Partition> comp;
  for (int i = 0; i < r; ++i) {
    std::sort(lens[i].begin(), lens[i].end(), std::greater<int>());
    comp.emplace_back(lens[i]);
  }
  return MultiPartition(std::move(comp));
}

ColoredPermutation class_representative(const MultiPartition& type) {
  ColoredPermutation g;
  for (int i = 0; i < type.r(); ++i)
    for (int j = 0; j < type[i].length(); ++j) {
      int start = g.n();
      int len = type[i][j];
      for (int k = 0; k < len; ++k) {
        g.perm.push_back(k + 1 < len ? start + k + 1 : start);
        g.colors.push_back(k == 0 ? i : 0);
      }
    }
  return g;
}

std::vector<ColoredPermutation> all_colored_permutations(int n, int r) {
  std::vector<int> base(n);
  std::iota(base.begin(), base.end(), 0);
  std::vector<std::vector<int>> perms;
  do {
    perms.push_back(base);
  } while (std::next_permutation(base.begin(), base.end()));

  std::vector<ColoredPermutation> out;
  std::vector<int> colors(n, 0);
  for (;;) {
    for (const auto& p : perms) out.push_back({colors, p});
    int k = 0;
    while (k < n && colors[k] == r - 1) colors[k++] = 0;
    if (k == n) break;
    ++colors[k];
  }
  return out;
}

long long wreath_class_size(const MultiPartition& type, int r) {
  int n = type.size();
  long long order = power(r, n) * factorial(n);
  long long centralizer = 1;
  for (int i = 0; i < type.r(); ++i) {
    int run = 1;
    for (int j = 0; j < type[i].length(); ++j) {
      centralizer *= static_cast<long long>(type[i][j]) * r;
      if (j > 0 && type[i][j] == type[i][j - 1])
        centralizer *= ++run;
      else
        run = 1;
    }
  }
  assert(order % centralizer == 0);
  return order / centralizer;
}

long long sn_character(const Partition& lam, const Partition& rho) {
  if (rho.length() == 0) return lam.length() == 0 ? 1 : 0;
  const int s = rho[0];
  Partition rest(std::vector<int>(rho.parts().begin() + 1, rho.parts().end()));
  long long total = 0;
  // Remove a border strip of size s spanning rows a..b.
  for (int a = 0; a < lam.length(); ++a) {
    int cum = 0;
    for (int b = a; b < lam.length(); ++b) {
      if (b > a) cum += lam[b - 1] - lam[b] + 1;
      int last = s - cum;  // cells removed from row b
      if (last < 1) break;
      if (last > lam[b]) continue;
      int stub = lam[b] - last;
      if (stub < lam[b + 1]) continue;
      std::vector<int> parts;
      for (int i = 0; i < lam.length(); ++i) {
        int v;
        if (i < a || i > b)
          v = lam[i];
        else if (i < b)
          v = lam[i + 1] - 1;
        else
          v = stub;
        if (v > 0) parts.push_back(v);
      }
      // rows a..b-1 were replaced by lam[i+1]-1, which keeps the parts sorted
      long long sign = (b - a) % 2 == 0 ? 1 : -1;
      total += sign * sn_character(Partition(parts), rest);
    }
  }
  return total;
}

CycloPoly bounded_monomial_trace(const ColoredPermutation& g, int r) {
  const int n = g.n();
  CycloPoly out(r);
  std::vector<int> m(n, 0);
  for (;;) {
    bool fixed = true;
    for (int k = 0; k < n && fixed; ++k)
      if (m[g.perm[k]] != m[k]) fixed = false;
    if (fixed) {
      int zeta = 0, deg = 0;
      for (int k = 0; k < n; ++k) {
        zeta += g.colors[g.perm[k]] * m[k];
        deg += m[k];
      }
      out.add(deg, zeta, 1);
    }
    int k = 0;
    while (k < n && m[k] == r - 1) m[k++] = 0;
    if (k == n) break;
    ++m[k];
  }
  return out;
}

SnClassFunction trivial_character(int n) {
  SnClassFunction cf;
  for (const auto& tau : all_partitions(n)) cf[tau] = UniPoly::constant(1);
  return cf;
}

SnClassFunction sign_character(int n) {
  SnClassFunction cf;
  for (const auto& tau : all_partitions(n))
    cf[tau] = UniPoly::constant((n - tau.length()) % 2 == 0 ? 1 : -1);
  return cf;
}

SnClassFunction regular_character(int n) {
  SnClassFunction cf;
  std::vector<int> ones(n, 1);
  cf[Partition(ones)] = UniPoly::constant(factorial(n));
  return cf;
}

namespace {

long long cycle_type_centralizer(const Partition& tau) {
  long long z = 1;
  int run = 1;
  for (int j = 0; j < tau.length(); ++j) {
    z *= tau[j];
    if (j > 0 && tau[j] == tau[j - 1])
      z *= ++run;
    else
      run = 1;
  }
  return z;
}

UniPoly divide_exact(const UniPoly& f, long long div) {
  std::vector<long long> c = f.coeffs();
  for (long long& v : c) {
    if (v % div != 0) throw integrity_error("character sum not divisible by the group order");
    v /= div;
  }
  return UniPoly(std::move(c));
}

}  // namespace

std::map<Partition, UniPoly> frobenius_sn(const SnClassFunction& cf, int n) {
  const long long fact = factorial(n);
  std::map<Partition, UniPoly> out;
  const std::vector<Partition> taus = all_partitions(n);
  for (const auto& lam : taus) {
    UniPoly acc;
    for (const auto& tau : taus) {
      auto it = cf.find(tau);
      if (it == cf.end() || it->second.is_zero()) continue;
      long long weight = (fact / cycle_type_centralizer(tau)) * sn_character(lam, tau);
      acc += it->second * UniPoly::constant(weight);
    }
    UniPoly q = divide_exact(acc, fact);
    if (!q.is_zero()) out[lam] = q;
  }
  return out;
}

TensorPoly frobenius_wreath(const WreathClassFunction& cf, int n, int r) {
  const long long order = power(r, n) * factorial(n);
  // phat-monomial expansion, Fourier-transformed on the fly into the
  // irreducible-indexed power sums: each part of color i picks a target j
  // with coefficient zeta^{-ij}.
  std::map<MultiPartition, CycloPoly> pexp;
  for (const auto& [type, tr] : cf) {
    if (tr.is_zero()) continue;
    const long long csize = wreath_class_size(type, r);
    std::vector<std::pair<int, int>> parts;  // (color, length)
    for (int i = 0; i < r; ++i)
      for (int j = 0; j < type[i].length(); ++j) parts.push_back({i, type[i][j]});
    std::vector<int> pick(parts.size(), 0);
    for (;;) {
      int zeta = 0;
      std::vector<std::vector<int>> comp(r);
      for (size_t k = 0; k < parts.size(); ++k) {
        zeta -= parts[k].first * pick[k];
        comp[pick[k]].push_back(parts[k].second);
      }
      std::vector<Partition> sorted;
      for (int i = 0; i < r; ++i) {
        std::sort(comp[i].begin(), comp[i].end(), std::greater<int>());
        sorted.emplace_back(comp[i]);
      }
      MultiPartition rho(std::move(sorted));
      auto [it, fresh] = pexp.try_emplace(rho, r);
      (void)fresh;
      it->second.accumulate(tr, csize, zeta);

      size_t k = 0;
      while (k < parts.size() && pick[k] == r - 1) pick[k++] = 0;
      if (k == parts.size()) break;
      ++pick[k];
    }
  }

  // The power-sum coefficients above are order * (rational); only after the
  // change of basis p_{rho^(i)} = sum_lam chi^lam(rho^(i)) s_lam do the
  // numerators combine into (order * integer) Schur multiplicities.
  std::map<MultiPartition, CycloPoly> sexp;
  for (const auto& [rho, cp] : pexp) {
    MultiPartition lam(r, Partition{});
    auto rec = [&](auto&& self, int i, long long chi) -> void {
      if (i == r) {
        auto [it, fresh] = sexp.try_emplace(lam, r);
        (void)fresh;
        it->second.accumulate(cp, chi);
        return;
      }
      for (const auto& li : all_partitions(rho[i].size())) {
        long long v = sn_character(li, rho[i]);
        if (v == 0) continue;
        lam[i] = li;
        self(self, i + 1, chi * v);
      }
      lam[i] = Partition{};
    };
    rec(rec, 0, 1);
  }

  TensorPoly out;
  out.r = r;
  for (const auto& [lam, cp] : sexp) {
    UniPoly c = cp.integer_quotient(order);
    if (!c.is_zero()) out.add_term(lam, c);
  }
  return out;
}

WreathClassFunction induced_character(const SnClassFunction& cf, int n, int r) {
  WreathClassFunction out;
  for (const auto& type : all_multipartitions(r, n)) {
    ColoredPermutation g = class_representative(type);
    auto it = cf.find(cycle_type(g.perm));
    if (it == cf.end() || it->second.is_zero()) continue;
    out.emplace(type, bounded_monomial_trace(g, r) * stretch_variable(it->second, r));
  }
  return out;
}

InductionCheck induction_frobenius(const SnClassFunction& cf, int n, int r) {
  InductionCheck chk;
  chk.by_group = frobenius_wreath(induced_character(cf, n, r), n, r);
  chk.by_plethysm = induction_plethysm(frobenius_sn(cf, n), r);
  return chk;
}

RmuCheck rmu_identity(const Partition& mu, int r) {
  const std::vector<int> ones(mu.length(), 1);
  std::map<Partition, UniPoly> frob;  // conjugated column-rectangle expansion
  for (const auto& [lam, c] : single_node_hl(ones, mu.parts())) frob[lam.conjugate()] = c;

  RmuCheck chk;
  chk.induced = conjugate_components(induction_plethysm(frob, r));
  RectTriple triple(r, 0, ones, mu.parts());
  chk.quiver = node_reversal(specialize_uniform(quiver_hl(triple.datum())));
  return chk;
}

}  // namespace qks
