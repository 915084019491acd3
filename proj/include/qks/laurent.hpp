#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace qks {

// Raised when an exactness guarantee fails (non-polynomial quotient,
// negative coefficient where positivity is promised, non-integral trace).
class integrity_error : public std::runtime_error {
 public:
  explicit integrity_error(const std::string& what) : std::runtime_error(what) {}
};

// Polynomial in one variable with integer coefficients; coeffs[k] is the
// coefficient of t^k.  Trailing zeros are trimmed, so zero has empty coeffs.
class UniPoly {
 public:
  UniPoly() = default;
  explicit UniPoly(std::vector<long long> coeffs) : c_(std::move(coeffs)) { trim(); }
  static UniPoly constant(long long v) { return UniPoly({v}); }
  static UniPoly monomial(int deg, long long v = 1);

  bool is_zero() const { return c_.empty(); }
  int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
  long long coeff(int k) const {
    return (k >= 0 && k < static_cast<int>(c_.size())) ? c_[k] : 0;
  }
  const std::vector<long long>& coeffs() const { return c_; }
  long long eval_at_one() const;
  bool nonnegative() const;

  UniPoly& operator+=(const UniPoly& o);
  UniPoly& operator-=(const UniPoly& o);
  friend UniPoly operator+(UniPoly a, const UniPoly& b) { return a += b; }
  friend UniPoly operator-(UniPoly a, const UniPoly& b) { return a -= b; }
  friend UniPoly operator*(const UniPoly& a, const UniPoly& b);
  UniPoly times_power(int k) const;  // multiply by t^k
  friend bool operator==(const UniPoly&, const UniPoly&) = default;

  std::string to_string(const std::string& var = "t") const;

 private:
  void trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }
  std::vector<long long> c_;
};

// Substitute t -> t^m (m >= 1).
UniPoly stretch_variable(const UniPoly& f, int m);

// Laurent polynomial in the r arrow variables t_{i,i+1} of the cyclic quiver
// (arrow i runs i -> i+1 mod r; for r=1 the single variable is t_{00}).
// Exponent vectors are indexed by the tail node i.
class ArrowLaurent {
 public:
  ArrowLaurent() : r_(0) {}
  explicit ArrowLaurent(int r) : r_(r) {}
  static ArrowLaurent constant(int r, long long v);
  static ArrowLaurent monomial(int r, const std::vector<int>& exps, long long v = 1);
  // Power of the single arrow variable t_{i,i+1}.
  static ArrowLaurent arrow_power(int r, int i, int e, long long v = 1);

  int r() const { return r_; }
  bool is_zero() const { return terms_.empty(); }
  const std::map<std::vector<int>, long long>& terms() const { return terms_; }
  long long coeff(const std::vector<int>& exps) const;

  ArrowLaurent& operator+=(const ArrowLaurent& o);
  ArrowLaurent& operator-=(const ArrowLaurent& o);
  friend ArrowLaurent operator+(ArrowLaurent a, const ArrowLaurent& b) { return a += b; }
  friend ArrowLaurent operator-(ArrowLaurent a, const ArrowLaurent& b) { return a -= b; }
  friend ArrowLaurent operator*(const ArrowLaurent& a, const ArrowLaurent& b);
  ArrowLaurent& scale(long long v);
  friend bool operator==(const ArrowLaurent&, const ArrowLaurent&) = default;

  // Divide by the monomial with the given exponents (shifts exponents down;
  // results may be Laurent).
  ArrowLaurent divided_by(const std::vector<int>& exps) const;

  // Substitute every arrow variable by the same t.  Requires all exponents
  // nonnegative.
  UniPoly specialize_uniform() const;

  // Interpret as a polynomial in the full cycle t_{01} t_{12} ... t_{r-1,0}:
  // succeeds iff every term's exponent vector is a constant >= 0.
  std::optional<UniPoly> as_cycle_polynomial() const;

  bool nonnegative() const;
  std::string to_string() const;

 private:
  void insert(const std::vector<int>& e, long long v);
  int r_;
  std::map<std::vector<int>, long long> terms_;
};

}  // namespace qks
