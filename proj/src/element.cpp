#include "hecke/element.hpp"

#include <stdexcept>

namespace hecke {

void Element::add_term(const BasisKey& key, const Scalar& coeff) {
  if (static_cast<int>(key.exps.size()) != n_ || key.w.size() != n_)
    throw std::invalid_argument("add_term: key size mismatch");
  if (coeff.is_zero()) return;
  auto it = terms_.find(key);
  if (it == terms_.end()) {
    terms_.emplace(key, coeff);
    return;
  }
  it->second += coeff;
  if (it->second.is_zero()) terms_.erase(it);
}

Scalar Element::coefficient(const BasisKey& key, const ParamSet& params) const {
  auto it = terms_.find(key);
  if (it != terms_.end()) return it->second;
  return Scalar::zero(params);
}

Element Element::operator+(const Element& o) const {
  Element r = *this;
  r += o;
  return r;
}

Element Element::operator-(const Element& o) const {
  Element r = *this;
  r -= o;
  return r;
}

Element& Element::operator+=(const Element& o) {
  if (!compatible(o)) throw DomainMismatchError("element addition: parameter mismatch");
  for (const auto& [key, coeff] : o.terms_) add_term(key, coeff);
  return *this;
}

Element& Element::operator-=(const Element& o) {
  if (!compatible(o)) throw DomainMismatchError("element subtraction: parameter mismatch");
  for (const auto& [key, coeff] : o.terms_) add_term(key, -coeff);
  return *this;
}

Element Element::scaled(const Scalar& s) const {
  Element r(variant_, n_, ell_);
  if (s.is_zero()) return r;
  for (const auto& [key, coeff] : terms_) r.terms_.emplace(key, coeff * s);
  return r;
}

nlohmann::json Element::to_json() const {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& [key, coeff] : terms_)
    out.push_back(nlohmann::json{
        {"c", key.exps}, {"w", key.w.to_json()}, {"coeff", coeff.to_string()}});
  return out;
}

std::vector<BasisKey> all_basis_keys(int n, int ell) {
  std::vector<std::vector<int>> exps{{}};
  for (int i = 0; i < n; ++i) {
    std::vector<std::vector<int>> next;
    for (const auto& e : exps)
      for (int c = 0; c < ell; ++c) {
        auto e2 = e;
        e2.push_back(c);
        next.push_back(std::move(e2));
      }
    exps = std::move(next);
  }
  std::vector<BasisKey> keys;
  for (const auto& e : exps)
    for (const Perm& w : all_permutations(n)) keys.push_back(BasisKey{e, w});
  return keys;
}

}  // namespace hecke
