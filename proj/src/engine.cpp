#include "hecke/engine.hpp"

#include <cstdint>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <stdexcept>

namespace hecke {

namespace {

ParamSet make_params(Variant v, int ell) {
  return v == Variant::NonDegenerate ? ParamSet::nondegenerate(ell) : ParamSet::degenerate(ell);
}

Perm restrict_perm(const Perm& w) {
  std::vector<int> img(w.one_line().begin(), w.one_line().end() - 1);
  return Perm(std::move(img));
}

Perm extend_perm(const Perm& w) {
  std::vector<int> img = w.one_line();
  img.push_back(w.size() + 1);
  return Perm(std::move(img));
}

constexpr std::uint32_t kWordCacheVersion = 1;

}  // namespace

Engine::Engine(Variant variant, int n, int ell)
    : variant_(variant), n_(n), ell_(ell), params_(make_params(variant, ell)) {
  if (n < 0 || ell < 1) throw std::invalid_argument("Engine: bad size parameters");
  init_scalars();
}

Engine::Engine(Variant variant, int n, int ell, const Specialization& sp)
    : variant_(variant), n_(n), ell_(ell), params_(make_params(variant, ell)), spec_(sp) {
  if (n < 0 || ell < 1) throw std::invalid_argument("Engine: bad size parameters");
  if (sp.variant() != variant || sp.ell() != ell)
    throw DomainMismatchError("Engine: specialization does not match variant/ell");
  init_scalars();
}

Engine::~Engine() = default;

void Engine::init_scalars() {
  zero_sc_ = spec_ ? Scalar::rational(0, params_) : Scalar::zero(params_);
  one_sc_ = sc_int(1);
  if (variant_ == Variant::NonDegenerate) {
    q_sc_ = sc_q(1);
    q_inv_sc_ = sc_q(-1);
    q_minus_one_sc_ = q_sc_ - one_sc_;
  }
  cyclo_sc_.clear();
  for (int s = 1; s <= ell_; ++s) cyclo_sc_.push_back(sc_cyclo(s));

  // Coefficients of prod_s (x - cyc_s); the top power rewrites as
  // L_1^ell = -sum_{k<ell} poly[k] L_1^k.
  std::vector<Scalar> poly{one_sc_};
  for (int s = 1; s <= ell_; ++s) {
    std::vector<Scalar> next(poly.size() + 1, zero_sc_);
    for (size_t k = 0; k < poly.size(); ++k) {
      next[k + 1] += poly[k];
      next[k] -= poly[k] * cyclo_sc_[s - 1];
    }
    poly = std::move(next);
  }
  cyclotomic_reduction_.clear();
  for (int k = 0; k < ell_; ++k) cyclotomic_reduction_.push_back(-poly[k]);

  load_or_build_word_cache();
}

Scalar Engine::sc_int(long v) const {
  return spec_ ? Scalar::rational(mpq_class(v), params_) : Scalar::integer(v, params_);
}

Scalar Engine::sc_q(int power) const {
  if (variant_ == Variant::Degenerate)
    throw DomainMismatchError("sc_q: degenerate variant has no Hecke parameter");
  return spec_ ? Scalar::rational(q_int_pow(spec_->q_value(), power), params_)
               : Scalar::q_power(power, params_);
}

Scalar Engine::sc_cyclo(int s) const {
  return spec_ ? Scalar::rational(spec_->param_value(s), params_) : Scalar::cyclo(s, params_);
}

const Engine& Engine::child() const {
  if (n_ == 0) throw std::out_of_range("child: no algebra below n = 0");
  std::lock_guard<std::mutex> lock(child_mutex_);
  if (!child_) {
    child_ = spec_ ? std::make_unique<Engine>(variant_, n_ - 1, ell_, *spec_)
                   : std::make_unique<Engine>(variant_, n_ - 1, ell_);
  }
  return *child_;
}

Element Engine::unit() const {
  return from_key(BasisKey{std::vector<int>(n_, 0), Perm::identity(n_)}, one_sc_);
}

Element Engine::from_key(const BasisKey& key, const Scalar& coeff) const {
  Element out = zero();
  for (int e : key.exps)
    if (e < 0 || e >= ell_) throw std::invalid_argument("from_key: exponent out of range");
  out.add_term(key, coeff);
  return out;
}

Element Engine::gen_t(int i) const {
  if (i < 1 || i >= n_) throw std::out_of_range("gen_t: index out of range");
  return from_key(BasisKey{std::vector<int>(n_, 0), Perm::transposition(n_, i)}, one_sc_);
}

Element Engine::gen_t0() const {
  if (variant_ == Variant::Degenerate)
    throw DomainMismatchError("gen_t0: degenerate variant uses gen_l(1)");
  return gen_l(1);
}

Element Engine::gen_l(int k) const {
  if (k < 1 || k > n_) throw std::out_of_range("gen_l: index out of range");
  std::vector<int> exps(n_, 0);
  exps[k - 1] = 1;
  if (ell_ == 1) return reduce_key(exps, Perm::identity(n_), one_sc_);
  return from_key(BasisKey{std::move(exps), Perm::identity(n_)}, one_sc_);
}

Element Engine::t_word(const Perm& w) const {
  if (w.size() != n_) throw std::invalid_argument("t_word: size mismatch");
  return from_key(BasisKey{std::vector<int>(n_, 0), w}, one_sc_);
}

const std::vector<int>& Engine::word_of(const Perm& w) const {
  std::lock_guard<std::mutex> lock(word_mutex_);
  auto it = word_cache_.find(w);
  if (it == word_cache_.end()) it = word_cache_.emplace(w, w.reduced_word()).first;
  return it->second;
}

Element Engine::rmul_gen(const Element& a, int i) const {
  if (i < 1 || i >= n_) throw std::out_of_range("rmul_gen: index out of range");
  Element out = zero();
  for (const auto& [key, coeff] : a.terms()) {
    Perm wi = compose(key.w, Perm::transposition(n_, i));
    if (variant_ == Variant::Degenerate || key.w.right_ascent(i)) {
      out.add_term(BasisKey{key.exps, wi}, coeff);
    } else {
      out.add_term(key, coeff * q_minus_one_sc_);
      out.add_term(BasisKey{key.exps, wi}, coeff * q_sc_);
    }
  }
  return out;
}

Element Engine::push_l(const Perm& w, int j) const {
  {
    std::lock_guard<std::mutex> lock(push_mutex_);
    auto it = push_cache_.find({w, j});
    if (it != push_cache_.end()) return it->second;
  }
  Element result = zero();
  if (w.is_identity()) {
    std::vector<int> exps(n_, 0);
    exps[j - 1] = 1;
    result = reduce_key(exps, w, one_sc_);
  } else {
    std::vector<int> word = word_of(w);
    int i = word.back();
    Perm w2 = compose(w, Perm::transposition(n_, i));
    if (variant_ == Variant::NonDegenerate) {
      if (j == i) {
        // T_i L_i = L_{i+1} T_i - (q-1) L_{i+1}
        result = rmul_gen(push_l(w2, i + 1), i) - push_l(w2, i + 1).scaled(q_minus_one_sc_);
      } else if (j == i + 1) {
        // T_i L_{i+1} = L_i T_i + (q-1) L_{i+1}
        result = rmul_gen(push_l(w2, i), i) + push_l(w2, i + 1).scaled(q_minus_one_sc_);
      } else {
        result = rmul_gen(push_l(w2, j), i);
      }
    } else {
      if (j == i) {
        // s_i L_i = L_{i+1} s_i - 1
        result = rmul_gen(push_l(w2, i + 1), i) - t_word(w2);
      } else if (j == i + 1) {
        // s_i L_{i+1} = L_i s_i + 1
        result = rmul_gen(push_l(w2, i), i) + t_word(w2);
      } else {
        result = rmul_gen(push_l(w2, j), i);
      }
    }
  }
  std::lock_guard<std::mutex> lock(push_mutex_);
  return push_cache_.emplace(std::make_pair(w, j), std::move(result)).first->second;
}

void Engine::raw_add(Element& out, std::vector<int> exps, const Perm& w,
                     const Scalar& coeff) const {
  bool clean = true;
  for (int e : exps)
    if (e >= ell_) clean = false;
  if (clean) {
    out.add_term(BasisKey{std::move(exps), w}, coeff);
  } else {
    out += reduce_key(exps, w, coeff);
  }
}

Element Engine::reduce_key(const std::vector<int>& exps, const Perm& w,
                           const Scalar& coeff) const {
  int j = 0;
  for (int k = n_; k >= 1; --k)
    if (exps[k - 1] >= ell_) {
      j = k;
      break;
    }
  if (j == 0) return from_key(BasisKey{exps, w}, coeff);

  Element out = zero();
  int cj = exps[j - 1];
  if (j == 1) {
    // cyclotomic relation: L_1^ell = sum_k red[k] L_1^k
    for (int k = 0; k < ell_; ++k) {
      if (cyclotomic_reduction_[k].is_zero()) continue;
      std::vector<int> e2 = exps;
      e2[0] = cj - ell_ + k;
      out += reduce_key(e2, w, coeff * cyclotomic_reduction_[k]);
    }
    return out;
  }

  std::vector<int> base = exps;
  base[j - 1] = 0;
  auto finish = [&](Element e) {
    for (int i : word_of(w)) e = rmul_gen(e, i);
    out += e;
  };

  if (variant_ == Variant::NonDegenerate) {
    // L_j^c = q^{-1} T_{j-1} L_{j-1}^c T_{j-1}
    //       + q^{-1}(q-1) sum_{k=1}^{c-1} L_j^k L_{j-1}^{c-k} T_{j-1}
    Element part = rmul_gen(reduce_key(base, Perm::identity(n_), coeff * q_inv_sc_), j - 1);
    for (int r = 0; r < cj; ++r) part = rmul_l(part, j - 1);
    finish(rmul_gen(part, j - 1));
    for (int k = 1; k < cj; ++k) {
      std::vector<int> e2 = base;
      e2[j - 1] = k;
      e2[j - 2] += cj - k;
      finish(rmul_gen(
          reduce_key(e2, Perm::identity(n_), coeff * q_inv_sc_ * q_minus_one_sc_), j - 1));
    }
    return out;
  }

  // L_j^c = s L_{j-1}^c s + s L_{j-1}^{c-1}
  //       + sum_{k=0}^{c-2} L_j^k L_{j-1}^{c-1-k} s + sum_{k=0}^{c-2} L_j^k L_{j-1}^{c-2-k}
  Element part = rmul_gen(reduce_key(base, Perm::identity(n_), coeff), j - 1);
  for (int r = 0; r < cj; ++r) part = rmul_l(part, j - 1);
  finish(rmul_gen(part, j - 1));

  part = rmul_gen(reduce_key(base, Perm::identity(n_), coeff), j - 1);
  for (int r = 0; r < cj - 1; ++r) part = rmul_l(part, j - 1);
  finish(part);

  for (int k = 0; k <= cj - 2; ++k) {
    std::vector<int> e2 = base;
    e2[j - 1] = k;
    e2[j - 2] += cj - 1 - k;
    finish(rmul_gen(reduce_key(e2, Perm::identity(n_), coeff), j - 1));
    std::vector<int> e3 = base;
    e3[j - 1] = k;
    e3[j - 2] += cj - 2 - k;
    finish(reduce_key(e3, Perm::identity(n_), coeff));
  }
  return out;
}

Element Engine::rmul_l(const Element& a, int k) const {
  if (k < 1 || k > n_) throw std::out_of_range("rmul_l: index out of range");
  if (k == 1) {
    Element out = zero();
    for (const auto& [key, coeff] : a.terms()) {
      Element pushed = push_l(key.w, 1);
      for (const auto& [pkey, pcoeff] : pushed.terms()) {
        std::vector<int> exps = key.exps;
        for (int t = 0; t < n_; ++t) exps[t] += pkey.exps[t];
        raw_add(out, std::move(exps), pkey.w, coeff * pcoeff);
      }
    }
    return out;
  }
  if (variant_ == Variant::NonDegenerate) {
    Element t = rmul_gen(a, k - 1).scaled(q_inv_sc_);
    return rmul_gen(rmul_l(t, k - 1), k - 1);
  }
  Element t = rmul_gen(a, k - 1);
  return rmul_gen(rmul_l(t, k - 1), k - 1) + t;
}

Element Engine::mul(const Element& a, const Element& b) const {
  if (a.variant() != variant_ || a.n() != n_ || a.ell() != ell_ || !a.compatible(b))
    throw DomainMismatchError("mul: element/engine parameter mismatch");
  Element out = zero();
  for (const auto& [key, coeff] : b.terms()) {
    Element tmp = a.scaled(coeff);
    for (int k = 1; k <= n_; ++k)
      for (int r = 0; r < key.exps[k - 1]; ++r) tmp = rmul_l(tmp, k);
    for (int i : word_of(key.w)) tmp = rmul_gen(tmp, i);
    out += tmp;
  }
  return out;
}

Element Engine::star(const Element& a) const {
  Element out = zero();
  for (const auto& [key, coeff] : a.terms()) {
    Element rev = t_word(key.w.inverse());
    bool pure = true;
    for (int e : key.exps)
      if (e != 0) pure = false;
    if (pure) {
      out += rev.scaled(coeff);
    } else {
      out += mul(rev, from_key(BasisKey{key.exps, Perm::identity(n_)}, coeff));
    }
  }
  return out;
}

struct Engine::BucketSink {
  std::vector<Element> buckets;
  std::vector<std::pair<Element, Element>>* middle = nullptr;
};

void Engine::decompose_into(const Element& h, BucketSink& sink, bool mirrored) const {
  if (n_ < 1) throw std::out_of_range("decompose: n must be >= 1");
  if (h.variant() != variant_ || h.n() != n_ || h.ell() != ell_)
    throw DomainMismatchError("decompose: element/engine parameter mismatch");
  const Engine& sub = child();
  sink.buckets.assign(ell_, sub.zero());
  for (const auto& [key, coeff] : h.terms()) {
    int cn = key.exps[n_ - 1];
    std::vector<int> lower(key.exps.begin(), key.exps.end() - 1);
    if (key.w(n_) == n_) {
      // L_n^{cn} commutes past T_w; the key routes whole into bucket cn.
      sink.buckets[cn].add_term(BasisKey{lower, restrict_perm(key.w)}, coeff);
      continue;
    }
    Perm u, v;
    if (!mirrored) {
      int d = key.w(n_);
      u = restrict_perm(compose(key.w, gamma_word(n_ - 1, d, n_).inverse()));
      v = d <= n_ - 2 ? gamma_word(n_ - 2, d, n_ - 1) : Perm::identity(n_ - 1);
    } else {
      int c = key.w.inverse()(n_);
      v = restrict_perm(compose(beta_word(c, n_ - 1, n_).inverse(), key.w));
      u = c <= n_ - 2 ? beta_word(c, n_ - 2, n_ - 1) : Perm::identity(n_ - 1);
    }
    // L^c T_w = L'^{c'} T_u (L_n^{cn} T_{n-1}) T_v with u, v in S_{n-1}
    Element left = sub.from_key(BasisKey{lower, u}, coeff);
    if (sink.middle) {
      std::vector<int> re(n_ - 1, 0);
      re[n_ - 2] = cn;
      sink.middle->push_back({left, sub.from_key(BasisKey{std::move(re), v}, sub.one_sc_)});
    }
    if (variant_ == Variant::NonDegenerate) {
      // L_n^c T_{n-1} = T_{n-1} L_{n-1}^c + (q-1) sum_{k=1}^{c} L_n^k L_{n-1}^{c-k}
      for (int k = 1; k <= cn; ++k) {
        std::vector<int> re(n_ - 1, 0);
        re[n_ - 2] = cn - k;
        sink.buckets[k] += sub.mul(left.scaled(sub.q_minus_one_sc_),
                                   sub.from_key(BasisKey{std::move(re), v}, sub.one_sc_));
      }
    } else {
      // L_n^c s_{n-1} = s_{n-1} L_{n-1}^c + sum_{k=0}^{c-1} L_n^k L_{n-1}^{c-1-k}
      for (int k = 0; k <= cn - 1; ++k) {
        std::vector<int> re(n_ - 1, 0);
        re[n_ - 2] = cn - 1 - k;
        sink.buckets[k] += sub.mul(left, sub.from_key(BasisKey{std::move(re), v}, sub.one_sc_));
      }
    }
  }
}

MackeyDecomposition Engine::decompose(const Element& h) const {
  MackeyDecomposition dec;
  BucketSink sink;
  sink.middle = &dec.middle;
  decompose_into(h, sink, false);
  dec.buckets = std::move(sink.buckets);
  return dec;
}

MackeyDecomposition Engine::decompose_mirrored(const Element& h) const {
  MackeyDecomposition dec;
  BucketSink sink;
  sink.middle = &dec.middle;
  decompose_into(h, sink, true);
  dec.buckets = std::move(sink.buckets);
  return dec;
}

Element Engine::reconstruct(const MackeyDecomposition& dec) const {
  Element out = zero();
  for (const auto& [left, right] : dec.middle)
    out += mul(mul(embed(left), gen_t(n_ - 1)), embed(right));
  for (int k = 0; k < ell_; ++k) {
    std::vector<int> exps(n_, 0);
    exps[n_ - 1] = k;
    out += mul(embed(dec.buckets[k]), from_key(BasisKey{std::move(exps), Perm::identity(n_)},
                                               one_sc_));
  }
  return out;
}

Element Engine::epsilon(const Element& h) const {
  BucketSink sink;
  decompose_into(h, sink, false);
  return sink.buckets[variant_ == Variant::NonDegenerate ? 0 : ell_ - 1];
}

Scalar Engine::tau_direct(const Element& h) const {
  if (h.variant() != variant_ || h.n() != n_ || h.ell() != ell_)
    throw DomainMismatchError("tau_direct: element/engine parameter mismatch");
  int target = variant_ == Variant::NonDegenerate ? 0 : ell_ - 1;
  BasisKey key{std::vector<int>(n_, target), Perm::identity(n_)};
  return h.coefficient(key, params_).is_zero() && spec_
             ? Scalar::rational(0, params_)
             : h.coefficient(key, params_);
}

Scalar Engine::tau_iterated(const Element& h) const {
  Element cur = h;
  const Engine* eng = this;
  while (eng->n_ > 0) {
    cur = eng->epsilon(cur);
    eng = &eng->child();
  }
  BasisKey empty{std::vector<int>{}, Perm::identity(0)};
  Scalar c = cur.coefficient(empty, params_);
  if (spec_ && !c.rational_mode()) c = Scalar::rational(0, params_);
  return c;
}

Element Engine::embed(const Element& smaller) const {
  if (smaller.variant() != variant_ || smaller.n() != n_ - 1 || smaller.ell() != ell_)
    throw DomainMismatchError("embed: element is not one size below");
  Element out = zero();
  for (const auto& [key, coeff] : smaller.terms()) {
    std::vector<int> exps = key.exps;
    exps.push_back(0);
    out.add_term(BasisKey{std::move(exps), extend_perm(key.w)}, coeff);
  }
  return out;
}

nlohmann::json Engine::element_to_json(const Element& a) const { return a.to_json(); }

Element Engine::element_from_json(const nlohmann::json& j) const {
  Element out = zero();
  for (const auto& t : j) {
    BasisKey key{t.at("c").get<std::vector<int>>(), Perm::from_json(t.at("w"))};
    std::string cs = t.at("coeff").get<std::string>();
    Scalar coeff = spec_ ? Scalar::rational(mpq_class(cs), params_)
                         : Scalar::from_string(cs, params_);
    out.add_term(key, coeff);
  }
  return out;
}

void Engine::load_or_build_word_cache() {
  const char* dir = std::getenv("HECKE_CACHE_DIR");
  if (!dir || n_ > 6) return;
  std::filesystem::path path =
      std::filesystem::path(dir) / ("words_n" + std::to_string(n_) + ".bin");
  auto read_u32 = [](std::istream& in) {
    std::uint32_t v = 0;
    in.read(reinterpret_cast<char*>(&v), sizeof(v));
    return v;
  };
  {
    std::ifstream in(path, std::ios::binary);
    if (in) {
      char magic[4] = {};
      in.read(magic, 4);
      if (std::string(magic, 4) == "HKWT" && read_u32(in) == kWordCacheVersion &&
          read_u32(in) == static_cast<std::uint32_t>(n_)) {
        std::uint32_t count = read_u32(in);
        std::map<Perm, std::vector<int>> table;
        bool ok = true;
        for (std::uint32_t r = 0; r < count && ok; ++r) {
          std::vector<int> img(n_);
          for (int& x : img) {
            std::uint8_t b = 0;
            in.read(reinterpret_cast<char*>(&b), 1);
            x = b;
          }
          std::uint8_t len = 0;
          in.read(reinterpret_cast<char*>(&len), 1);
          std::vector<int> word(len);
          for (int& x : word) {
            std::uint8_t b = 0;
            in.read(reinterpret_cast<char*>(&b), 1);
            x = b;
          }
          if (!in) {
            ok = false;
            break;
          }
          table.emplace(Perm(std::move(img)), std::move(word));
        }
        if (ok && in) {
          word_cache_ = std::move(table);
          return;
        }
      }
      // Unreadable or mismatched version: ignore and rebuild below.
    }
  }
  for (const Perm& w : all_permutations(n_)) word_cache_.emplace(w, w.reduced_word());
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) return;
  auto write_u32 = [&out](std::uint32_t v) {
    out.write(reinterpret_cast<const char*>(&v), sizeof(v));
  };
  out.write("HKWT", 4);
  write_u32(kWordCacheVersion);
  write_u32(static_cast<std::uint32_t>(n_));
  write_u32(static_cast<std::uint32_t>(word_cache_.size()));
  for (const auto& [w, word] : word_cache_) {
    for (int x : w.one_line()) {
      auto b = static_cast<std::uint8_t>(x);
      out.write(reinterpret_cast<const char*>(&b), 1);
    }
    auto len = static_cast<std::uint8_t>(word.size());
    out.write(reinterpret_cast<const char*>(&len), 1);
    for (int x : word) {
      auto b = static_cast<std::uint8_t>(x);
      out.write(reinterpret_cast<const char*>(&b), 1);
    }
  }
}

}  // namespace hecke
