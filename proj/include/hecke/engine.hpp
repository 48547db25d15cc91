#ifndef HECKE_ENGINE_HPP
#define HECKE_ENGINE_HPP

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <vector>

#include "element.hpp"
#include "perm.hpp"
#include "scalar.hpp"
#include "tableau.hpp"

namespace hecke {

// The unique split h = mu(middle) + sum_k buckets[k] L_n^k. The buckets are
// contractual; the middle pairs are one valid representative whose mu-image
// is contractual.
struct MackeyDecomposition {
  std::vector<std::pair<Element, Element>> middle;  // elements over n-1
  std::vector<Element> buckets;                     // p_0 .. p_{ell-1}, over n-1
};

// Relation-driven normal-form arithmetic for one algebra H_{ell,n}, either
// variant. Right multiplication by a generator is the primitive everything
// else folds through; rewrites that overflow an L-exponent are reduced via
// the cyclotomic relation (index 1) or the index-lowering recursion.
//
// Elements are immutable values; an Engine instance is safe to share across
// threads (memo caches are internally locked).
class Engine {
public:
  Engine(Variant variant, int n, int ell);
  Engine(Variant variant, int n, int ell, const Specialization& sp);
  ~Engine();

  Variant variant() const { return variant_; }
  int n() const { return n_; }
  int ell() const { return ell_; }
  const ParamSet& params() const { return params_; }
  const std::optional<Specialization>& specialization() const { return spec_; }
  const Engine& child() const;  // engine for H_{ell,n-1}

  // Scalars in this engine's mode.
  Scalar sc_zero() const { return zero_sc_; }
  Scalar sc_one() const { return one_sc_; }
  Scalar sc_int(long v) const;
  Scalar sc_q(int power) const;       // non-degenerate only
  Scalar sc_cyclo(int s) const;       // Q_s resp. u_s

  Element zero() const { return Element(variant_, n_, ell_); }
  Element unit() const;
  Element from_key(const BasisKey& key, const Scalar& coeff) const;
  Element gen_t(int i) const;       // T_i (i >= 1), resp. s_i
  Element gen_t0() const;           // T_0 = L_1 (non-degenerate)
  Element gen_l(int k) const;       // L_k
  Element t_word(const Perm& w) const;

  Element mul(const Element& a, const Element& b) const;
  Element rmul_gen(const Element& a, int i) const;  // by T_i / s_i
  Element rmul_l(const Element& a, int k) const;    // by L_k
  Element star(const Element& a) const;

  MackeyDecomposition decompose(const Element& h) const;
  Element reconstruct(const MackeyDecomposition& dec) const;
  // Mirrored factorization (distinguished left coset representatives); the
  // buckets must agree with decompose().
  MackeyDecomposition decompose_mirrored(const Element& h) const;

  Element epsilon(const Element& h) const;  // bucket 0 resp. ell-1, over n-1
  Scalar tau_direct(const Element& h) const;
  Scalar tau_iterated(const Element& h) const;

  Element embed(const Element& smaller) const;  // from H_{ell,n-1}

  nlohmann::json element_to_json(const Element& a) const;
  Element element_from_json(const nlohmann::json& j) const;

private:
  struct BucketSink;

  void init_scalars();
  const std::vector<int>& word_of(const Perm& w) const;
  // T_w L_j in normal form; memoized.
  Element push_l(const Perm& w, int j) const;
  // Normal form of coeff * L^c T_w with arbitrary natural exponents.
  Element reduce_key(const std::vector<int>& exps, const Perm& w, const Scalar& coeff) const;
  void raw_add(Element& out, std::vector<int> exps, const Perm& w, const Scalar& coeff) const;
  void decompose_into(const Element& h, BucketSink& sink, bool mirrored) const;
  void load_or_build_word_cache();

  Variant variant_;
  int n_;
  int ell_;
  ParamSet params_;
  std::optional<Specialization> spec_;

  Scalar zero_sc_, one_sc_, q_sc_, q_inv_sc_, q_minus_one_sc_;
  std::vector<Scalar> cyclo_sc_;
  std::vector<Scalar> cyclotomic_reduction_;  // L_1^ell = sum_k coef[k] L_1^k

  mutable std::unique_ptr<Engine> child_;
  mutable std::mutex child_mutex_;
  mutable std::map<std::pair<Perm, int>, Element> push_cache_;
  mutable std::mutex push_mutex_;
  mutable std::map<Perm, std::vector<int>> word_cache_;
  mutable std::mutex word_mutex_;
};

}  // namespace hecke

#endif
