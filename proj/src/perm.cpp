#include "hecke/perm.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace hecke {

Perm::Perm(std::vector<int> one_line) : img_(std::move(one_line)) {
  std::vector<bool> seen(img_.size(), false);
  for (int v : img_) {
    if (v < 1 || v > static_cast<int>(img_.size()) || seen[v - 1])
      throw std::invalid_argument("Perm: not a bijection on {1..n}");
    seen[v - 1] = true;
  }
}

Perm Perm::identity(int n) {
  std::vector<int> img(n);
  std::iota(img.begin(), img.end(), 1);
  return Perm(std::move(img));
}

Perm Perm::transposition(int n, int i) {
  if (i < 1 || i >= n) throw std::out_of_range("transposition: index out of range");
  Perm p = identity(n);
  std::swap(p.img_[i - 1], p.img_[i]);
  return p;
}

bool Perm::is_identity() const {
  for (int i = 1; i <= size(); ++i)
    if (img_[i - 1] != i) return false;
  return true;
}

Perm Perm::inverse() const {
  std::vector<int> inv(img_.size());
  for (int i = 1; i <= size(); ++i) inv[img_[i - 1] - 1] = i;
  return Perm(std::move(inv));
}

int Perm::length() const {
  int count = 0;
  for (int i = 0; i < size(); ++i)
    for (int j = i + 1; j < size(); ++j)
      if (img_[i] > img_[j]) ++count;
  return count;
}

bool Perm::right_ascent(int i) const {
  // length grows iff the value i sits left of the value i+1
  int pi = 0, pj = 0;
  for (int k = 0; k < size(); ++k) {
    if (img_[k] == i) pi = k;
    if (img_[k] == i + 1) pj = k;
  }
  return pi < pj;
}

std::vector<int> Perm::reduced_word() const {
  std::vector<int> word;
  Perm w = *this;
  while (!w.is_identity()) {
    int i = 1;
    while (w.right_ascent(i)) ++i;
    // w = w' sigma_i with l(w') = l(w) - 1; peel sigma_i off the right
    word.push_back(i);
    for (int k = 0; k < w.size(); ++k) {
      if (w.img_[k] == i)
        w.img_[k] = i + 1;
      else if (w.img_[k] == i + 1)
        w.img_[k] = i;
    }
  }
  std::reverse(word.begin(), word.end());
  return word;
}

std::string Perm::to_string() const {
  std::string out = "[";
  for (int i = 0; i < size(); ++i) {
    if (i) out += ",";
    out += std::to_string(img_[i]);
  }
  return out + "]";
}

Perm compose(const Perm& u, const Perm& v) {
  if (u.size() != v.size()) throw std::invalid_argument("compose: size mismatch");
  std::vector<int> img(u.size());
  for (int i = 1; i <= u.size(); ++i) img[i - 1] = v(u(i));
  return Perm(std::move(img));
}

Perm compose_word(int n, const std::vector<int>& letters) {
  Perm w = Perm::identity(n);
  for (int i : letters) w = compose(w, Perm::transposition(n, i));
  return w;
}

bool bruhat_leq(const Perm& u, const Perm& w) {
  if (u.size() != w.size()) throw std::invalid_argument("bruhat_leq: size mismatch");
  int n = u.size();
  // u <= w iff #{a <= i : u(a) >= j} <= #{a <= i : w(a) >= j} for all i, j.
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) {
      int cu = 0, cw = 0;
      for (int a = 1; a <= i; ++a) {
        if (u(a) >= j) ++cu;
        if (w(a) >= j) ++cw;
      }
      if (cu > cw) return false;
    }
  return true;
}

namespace {

void block_perms(const std::vector<int>& starts, const std::vector<int>& sizes, size_t idx, int n,
                 Perm acc, std::vector<Perm>& out) {
  if (idx == sizes.size()) {
    out.push_back(std::move(acc));
    return;
  }
  int start = starts[idx], len = sizes[idx];
  std::vector<int> vals(len);
  std::iota(vals.begin(), vals.end(), start);
  std::sort(vals.begin(), vals.end());
  do {
    Perm next = acc;
    std::vector<int> img = next.one_line();
    for (int k = 0; k < len; ++k) img[start - 1 + k] = vals[k];
    block_perms(starts, sizes, idx + 1, n, Perm(std::move(img)), out);
  } while (std::next_permutation(vals.begin(), vals.end()));
}

}  // namespace

std::vector<Perm> young_subgroup(const std::vector<int>& composition, int n) {
  int total = 0;
  std::vector<int> starts, sizes;
  for (int part : composition) {
    if (part < 0) throw std::invalid_argument("young_subgroup: negative part");
    if (part == 0) continue;
    starts.push_back(total + 1);
    sizes.push_back(part);
    total += part;
  }
  if (total != n) throw std::invalid_argument("young_subgroup: parts must sum to n");
  std::vector<Perm> out;
  block_perms(starts, sizes, 0, n, Perm::identity(n), out);
  std::sort(out.begin(), out.end());
  return out;
}

Perm beta_word(int c, int k, int n) {
  if (c < 1 || c > n - 1 || k < 1 || k > n - 1)
    throw std::out_of_range("beta_word: index out of range");
  if (c > k) return Perm::identity(n);
  std::vector<int> letters;
  for (int i = c; i <= k; ++i) letters.push_back(i);
  return compose_word(n, letters);
}

Perm gamma_word(int k, int d, int n) {
  if (d < 1 || d > n - 1 || k < 1 || k > n - 1)
    throw std::out_of_range("gamma_word: index out of range");
  if (d > k) return Perm::identity(n);
  std::vector<int> letters;
  for (int i = k; i >= d; --i) letters.push_back(i);
  return compose_word(n, letters);
}

std::vector<Perm> all_permutations(int n) {
  std::vector<int> img(n);
  std::iota(img.begin(), img.end(), 1);
  std::vector<Perm> out;
  do {
    out.push_back(Perm(img));
  } while (std::next_permutation(img.begin(), img.end()));
  return out;
}

}  // namespace hecke
