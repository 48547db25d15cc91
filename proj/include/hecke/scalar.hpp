#ifndef HECKE_SCALAR_HPP
#define HECKE_SCALAR_HPP

#include <gmpxx.h>

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"

namespace hecke {

enum class Variant { NonDegenerate, Degenerate };

inline const char* variant_name(Variant v) {
  return v == Variant::NonDegenerate ? "nondeg" : "deg";
}

struct DomainMismatchError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct NotSeparatedError : std::domain_error {
  using std::domain_error::domain_error;
};

// Ground-ring description: the Hecke parameter q (non-degenerate only) and the
// l cyclotomic parameters Q_1..Q_l (resp. u_1..u_l).
class ParamSet {
public:
  static ParamSet nondegenerate(int ell);
  static ParamSet degenerate(int ell);

  Variant variant() const { return variant_; }
  int ell() const { return ell_; }
  const std::string& hecke_symbol() const { return hecke_symbol_; }
  const std::string& cyclo_symbol(int s) const { return cyclo_symbols_.at(s - 1); }

  bool compatible(const ParamSet& o) const {
    return variant_ == o.variant_ && ell_ == o.ell_;
  }

private:
  ParamSet(Variant v, int ell, std::string hecke, std::vector<std::string> cyclo);

  Variant variant_;
  int ell_;
  std::string hecke_symbol_;
  std::vector<std::string> cyclo_symbols_;
};

// Exponent vector of one monomial: q-exponent (integer, may be negative) and
// one natural exponent per cyclotomic parameter. Ordered lexicographically on
// (q, Q_1, .., Q_l) so polynomial maps are canonical.
struct Monomial {
  int q_exp = 0;
  std::vector<int> cyc_exp;

  bool operator==(const Monomial& o) const = default;
  bool operator<(const Monomial& o) const {
    if (q_exp != o.q_exp) return q_exp < o.q_exp;
    return cyc_exp < o.cyc_exp;
  }
};

class Specialization;

// Exact coefficient: a Z-linear combination of monomials in q^{±1}, Q_1..Q_l
// (symbolic mode), or a single exact rational (specialized mode). Values are
// immutable; all operations return fresh scalars.
class Scalar {
public:
  Scalar() = default;

  static Scalar zero(const ParamSet& p);
  static Scalar one(const ParamSet& p);
  static Scalar integer(long v, const ParamSet& p);
  static Scalar integer(const mpz_class& v, const ParamSet& p);
  static Scalar q_power(int k, const ParamSet& p);
  static Scalar cyclo(int s, const ParamSet& p);  // Q_s resp. u_s
  static Scalar monomial(const mpz_class& coeff, const Monomial& m, const ParamSet& p);
  static Scalar rational(const mpq_class& v, const ParamSet& p);

  Variant variant() const { return variant_; }
  int ell() const { return ell_; }
  bool rational_mode() const { return rational_mode_; }
  bool is_zero() const;
  bool is_compatible(const Scalar& o) const {
    return variant_ == o.variant_ && ell_ == o.ell_ && rational_mode_ == o.rational_mode_;
  }

  const std::map<Monomial, mpz_class>& terms() const { return terms_; }
  const mpq_class& rational_value() const;

  Scalar operator-() const;
  Scalar operator+(const Scalar& o) const;
  Scalar operator-(const Scalar& o) const;
  Scalar operator*(const Scalar& o) const;
  Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
  Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
  Scalar& operator*=(const Scalar& o) { return *this = *this * o; }
  bool operator==(const Scalar& o) const;
  bool operator!=(const Scalar& o) const { return !(*this == o); }

  // Rational-mode only; throws on symbolic operands or zero divisor.
  Scalar divided_by(const Scalar& o) const;

  Scalar specialized(const Specialization& sp) const;

  std::string to_string() const;
  nlohmann::json to_json() const;
  static Scalar from_string(const std::string& text, const ParamSet& p);
  static Scalar from_json(const nlohmann::json& j, const ParamSet& p);

private:
  void check_compatible(const Scalar& o) const;
  void purge_zeros();

  Variant variant_ = Variant::NonDegenerate;
  int ell_ = 1;
  bool rational_mode_ = false;
  std::map<Monomial, mpz_class> terms_;
  mpq_class value_ = 0;
};

// Exact rational evaluation point. q_value must avoid {0,1} in the
// non-degenerate variant.
class Specialization {
public:
  Specialization(Variant variant, mpq_class q_value, std::vector<mpq_class> param_values);
  static Specialization nondegenerate(mpq_class q_value, std::vector<mpq_class> q_params);
  static Specialization degenerate(std::vector<mpq_class> u_params);

  Variant variant() const { return variant_; }
  int ell() const { return static_cast<int>(param_values_.size()); }
  const mpq_class& q_value() const { return q_value_; }
  const mpq_class& param_value(int s) const { return param_values_.at(s - 1); }
  const std::vector<mpq_class>& param_values() const { return param_values_; }

  nlohmann::json to_json() const;

private:
  Variant variant_;
  mpq_class q_value_;
  std::vector<mpq_class> param_values_;
};

// Sufficient genericity test for the seminormal machinery at sizes <= n:
// non-degenerate: prod_{i<j} prod_{|d|<n} (q^d Q_i - Q_j) != 0 and
// 1 + q + ... + q^{k-1} != 0 for k <= n; degenerate: u_i - u_j is never an
// integer of absolute value < n for i != j.
bool is_separated(const Specialization& sp, int n, const ParamSet& params);

mpq_class q_int_pow(const mpq_class& base, int e);

}  // namespace hecke

#endif
