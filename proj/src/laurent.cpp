#include "qks/laurent.hpp"

#include <cassert>

namespace qks {

UniPoly UniPoly::monomial(int deg, long long v) {
  assert(deg >= 0);
  std::vector<long long> c(deg + 1, 0);
  c[deg] = v;
  return UniPoly(std::move(c));
}

long long UniPoly::eval_at_one() const {
  long long s = 0;
  for (long long v : c_) s += v;
  return s;
}

bool UniPoly::nonnegative() const {
  for (long long v : c_)
    if (v < 0) return false;
  return true;
}

UniPoly& UniPoly::operator+=(const UniPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), 0);
  for (size_t k = 0; k < o.c_.size(); ++k) c_[k] += o.c_[k];
  trim();
  return *this;
}

UniPoly& UniPoly::operator-=(const UniPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), 0);
  for (size_t k = 0; k < o.c_.size(); ++k) c_[k] -= o.c_[k];
  trim();
  return *this;
}

UniPoly operator*(const UniPoly& a, const UniPoly& b) {
  if (a.is_zero() || b.is_zero()) return UniPoly();
  std::vector<long long> c(a.c_.size() + b.c_.size() - 1, 0);
  for (size_t i = 0; i < a.c_.size(); ++i)
    for (size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
  return UniPoly(std::move(c));
}

UniPoly UniPoly::times_power(int k) const {
  assert(k >= 0);
  if (is_zero()) return UniPoly();
  std::vector<long long> c(k, 0);
  c.insert(c.end(), c_.begin(), c_.end());
  return UniPoly(std::move(c));
}

std::string UniPoly::to_string(const std::string& var) const {
  if (is_zero()) return "0";
  std::string s;
  for (int k = 0; k <= degree(); ++k) {
    long long v = c_[k];
    if (v == 0) continue;
    if (!s.empty()) s += v > 0 ? " + " : " - ";
    else if (v < 0) s += "-";
    long long av = v < 0 ? -v : v;
    if (av != 1 || k == 0) s += std::to_string(av);
    if (k > 0) {
      if (av != 1) s += "*";
      s += var;
      if (k > 1) s += "^" + std::to_string(k);
    }
  }
  return s;
}

UniPoly stretch_variable(const UniPoly& f, int m) {
  assert(m >= 1);
  if (f.is_zero()) return UniPoly();
  std::vector<long long> c(static_cast<size_t>(f.degree()) * m + 1, 0);
  for (int k = 0; k <= f.degree(); ++k) c[static_cast<size_t>(k) * m] = f.coeff(k);
  return UniPoly(std::move(c));
}

ArrowLaurent ArrowLaurent::constant(int r, long long v) {
  ArrowLaurent f(r);
  f.insert(std::vector<int>(r, 0), v);
  return f;
}

ArrowLaurent ArrowLaurent::monomial(int r, const std::vector<int>& exps, long long v) {
  assert(static_cast<int>(exps.size()) == r);
  ArrowLaurent f(r);
  f.insert(exps, v);
  return f;
}

ArrowLaurent ArrowLaurent::arrow_power(int r, int i, int e, long long v) {
  assert(i >= 0 && i < r);
  std::vector<int> exps(r, 0);
  exps[i] = e;
  return monomial(r, exps, v);
}

long long ArrowLaurent::coeff(const std::vector<int>& exps) const {
  auto it = terms_.find(exps);
  return it == terms_.end() ? 0 : it->second;
}

void ArrowLaurent::insert(const std::vector<int>& e, long long v) {
  if (v == 0) return;
  auto [it, fresh] = terms_.emplace(e, v);
  if (!fresh) {
    it->second += v;
    if (it->second == 0) terms_.erase(it);
  }
}

ArrowLaurent& ArrowLaurent::operator+=(const ArrowLaurent& o) {
  assert(r_ == o.r_ || is_zero() || o.is_zero());
  if (r_ == 0) r_ = o.r_;
  for (const auto& [e, v] : o.terms_) insert(e, v);
  return *this;
}

ArrowLaurent& ArrowLaurent::operator-=(const ArrowLaurent& o) {
  assert(r_ == o.r_ || is_zero() || o.is_zero());
  if (r_ == 0) r_ = o.r_;
  for (const auto& [e, v] : o.terms_) insert(e, -v);
  return *this;
}

ArrowLaurent operator*(const ArrowLaurent& a, const ArrowLaurent& b) {
  assert(a.r_ == b.r_);
  ArrowLaurent f(a.r_);
  std::vector<int> e(a.r_);
  for (const auto& [ea, va] : a.terms_)
    for (const auto& [eb, vb] : b.terms_) {
      for (int i = 0; i < a.r_; ++i) e[i] = ea[i] + eb[i];
      f.insert(e, va * vb);
    }
  return f;
}

ArrowLaurent& ArrowLaurent::scale(long long v) {
  if (v == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, c] : terms_) c *= v;
  return *this;
}

ArrowLaurent ArrowLaurent::divided_by(const std::vector<int>& exps) const {
  assert(static_cast<int>(exps.size()) == r_);
  ArrowLaurent f(r_);
  std::vector<int> e(r_);
  for (const auto& [ea, v] : terms_) {
    for (int i = 0; i < r_; ++i) e[i] = ea[i] - exps[i];
    f.insert(e, v);
  }
  return f;
}

UniPoly ArrowLaurent::specialize_uniform() const {
  UniPoly p;
  for (const auto& [e, v] : terms_) {
    int deg = 0;
    for (int x : e) {
      assert(x >= 0);
      deg += x;
    }
    p += UniPoly::monomial(deg, v);
  }
  return p;
}

std::optional<UniPoly> ArrowLaurent::as_cycle_polynomial() const {
  UniPoly p;
  for (const auto& [e, v] : terms_) {
    for (int i = 1; i < r_; ++i)
      if (e[i] != e[0]) return std::nullopt;
    if (e[0] < 0) return std::nullopt;
    p += UniPoly::monomial(e[0], v);
  }
  return p;
}

bool ArrowLaurent::nonnegative() const {
  for (const auto& [e, v] : terms_)
    if (v < 0) return false;
  return true;
}

std::string ArrowLaurent::to_string() const {
  if (terms_.empty()) return "0";
  std::string s;
  for (const auto& [e, v] : terms_) {
    if (!s.empty()) s += v > 0 ? " + " : " - ";
    else if (v < 0) s += "-";
    long long av = v < 0 ? -v : v;
    std::string mono;
    for (int i = 0; i < r_; ++i) {
      if (e[i] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += "t" + std::to_string(i) + std::to_string((i + 1) % r_);
      if (e[i] != 1) mono += "^" + std::to_string(e[i]);
    }
    if (mono.empty() || av != 1) s += std::to_string(av);
    if (!mono.empty()) {
      if (av != 1) s += "*";
      s += mono;
    }
  }
  return s;
}

}  // namespace qks
