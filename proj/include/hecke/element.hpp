#ifndef HECKE_ELEMENT_HPP
#define HECKE_ELEMENT_HPP

#include <map>
#include <vector>

#include "json.hpp"
#include "perm.hpp"
#include "scalar.hpp"

namespace hecke {

// One normal-form basis word L_1^{c_1}...L_n^{c_n} T_w (resp. L^c w).
struct BasisKey {
  std::vector<int> exps;
  Perm w;

  bool operator==(const BasisKey& o) const = default;
  bool operator<(const BasisKey& o) const {
    if (exps != o.exps) return exps < o.exps;
    return w < o.w;
  }
};

// Sparse linear combination of basis keys. Canonical: no zero coefficients,
// so equality is structural map equality.
class Element {
public:
  Element() = default;
  Element(Variant variant, int n, int ell) : variant_(variant), n_(n), ell_(ell) {}

  Variant variant() const { return variant_; }
  int n() const { return n_; }
  int ell() const { return ell_; }
  bool is_zero() const { return terms_.empty(); }
  int term_count() const { return static_cast<int>(terms_.size()); }
  const std::map<BasisKey, Scalar>& terms() const { return terms_; }

  bool compatible(const Element& o) const {
    return variant_ == o.variant_ && n_ == o.n_ && ell_ == o.ell_;
  }

  void add_term(const BasisKey& key, const Scalar& coeff);
  Scalar coefficient(const BasisKey& key, const ParamSet& params) const;

  Element operator+(const Element& o) const;
  Element operator-(const Element& o) const;
  Element& operator+=(const Element& o);
  Element& operator-=(const Element& o);
  Element scaled(const Scalar& s) const;
  bool operator==(const Element& o) const {
    return compatible(o) && terms_ == o.terms_;
  }

  nlohmann::json to_json() const;

private:
  Variant variant_ = Variant::NonDegenerate;
  int n_ = 0;
  int ell_ = 1;
  std::map<BasisKey, Scalar> terms_;
};

// Every normal-form basis key of the algebra, in a fixed deterministic order.
std::vector<BasisKey> all_basis_keys(int n, int ell);

}  // namespace hecke

#endif
