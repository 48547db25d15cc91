#ifndef HECKE_PERM_HPP
#define HECKE_PERM_HPP

#include <string>
#include <vector>

#include "json.hpp"

namespace hecke {

// Permutation of {1..n} in one-line notation. Products compose left to right:
// (u * v)(i) = v(u(i)), matching words sigma_{i1}...sigma_{ik} applied with
// sigma_{i1} first. Right multiplication by sigma_i swaps the values i, i+1.
class Perm {
public:
  Perm() = default;
  explicit Perm(std::vector<int> one_line);
  static Perm identity(int n);
  static Perm transposition(int n, int i);  // sigma_i = (i, i+1)

  int size() const { return static_cast<int>(img_.size()); }
  int operator()(int i) const { return img_[i - 1]; }
  const std::vector<int>& one_line() const { return img_; }

  bool is_identity() const;
  bool operator==(const Perm& o) const = default;
  bool operator<(const Perm& o) const { return img_ < o.img_; }

  Perm inverse() const;
  int length() const;  // inversion count
  // Strips the smallest right descent each step; letters multiply back to *this.
  std::vector<int> reduced_word() const;

  // True when length(w sigma_i) = length(w) + 1.
  bool right_ascent(int i) const;

  nlohmann::json to_json() const { return img_; }
  static Perm from_json(const nlohmann::json& j) { return Perm(j.get<std::vector<int>>()); }
  std::string to_string() const;

private:
  std::vector<int> img_;
};

Perm compose(const Perm& u, const Perm& v);
Perm compose_word(int n, const std::vector<int>& letters);

// Subword characterization, implemented through the standard rank-matrix
// criterion; agreement with brute-force subword search is tested for small n.
bool bruhat_leq(const Perm& u, const Perm& w);

// All elements of the Young subgroup S_composition inside S_n.
std::vector<Perm> young_subgroup(const std::vector<int>& composition, int n);

// beta_{c,k} = sigma_c sigma_{c+1} ... sigma_k (identity when c > k).
Perm beta_word(int c, int k, int n);
// gamma_{k,d} = sigma_k sigma_{k-1} ... sigma_d (identity when d > k).
Perm gamma_word(int k, int d, int n);

std::vector<Perm> all_permutations(int n);

}  // namespace hecke

#endif
