#include "hecke/tableau.hpp"

#include <algorithm>
#include <stdexcept>

namespace hecke {

bool node_precedes(const Node& y, const Node& x) {
  if (y.comp != x.comp) return y.comp > x.comp;
  return y.col < x.col;
}

MultiPartition::MultiPartition(std::vector<std::vector<int>> components)
    : comps_(std::move(components)) {
  if (comps_.empty()) throw std::invalid_argument("MultiPartition: ell must be >= 1");
  for (auto& comp : comps_) {
    for (size_t r = 0; r < comp.size(); ++r) {
      if (comp[r] <= 0) throw std::invalid_argument("MultiPartition: rows must be positive");
      if (r > 0 && comp[r] > comp[r - 1])
        throw std::invalid_argument("MultiPartition: rows must weakly decrease");
    }
  }
}

MultiPartition MultiPartition::empty(int ell) {
  return MultiPartition(std::vector<std::vector<int>>(ell));
}

int MultiPartition::size() const {
  int n = 0;
  for (const auto& comp : comps_)
    for (int row : comp) n += row;
  return n;
}

int MultiPartition::row_length(int l, int r) const {
  const auto& comp = comps_.at(l - 1);
  return r <= static_cast<int>(comp.size()) ? comp[r - 1] : 0;
}

bool MultiPartition::contains(const Node& nd) const {
  if (nd.comp < 1 || nd.comp > ell() || nd.row < 1 || nd.col < 1) return false;
  return nd.col <= row_length(nd.comp, nd.row);
}

std::vector<int> MultiPartition::offsets() const {
  std::vector<int> a(ell());
  for (int s = 2; s <= ell(); ++s) {
    int total = 0;
    for (int row : comps_[s - 2]) total += row;
    a[s - 1] = a[s - 2] + total;
  }
  return a;
}

std::vector<int> MultiPartition::as_composition() const {
  std::vector<int> parts;
  for (const auto& comp : comps_)
    for (int row : comp) parts.push_back(row);
  return parts;
}

std::vector<Node> MultiPartition::addable_nodes() const {
  std::vector<Node> out;
  for (int l = 1; l <= ell(); ++l) {
    const auto& comp = comps_[l - 1];
    for (int r = 1; r <= static_cast<int>(comp.size()) + 1; ++r) {
      int len = row_length(l, r);
      int above = r == 1 ? len + 1 : row_length(l, r - 1);
      if (len < above) out.push_back(Node{r, len + 1, l});
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Node> MultiPartition::removable_nodes() const {
  std::vector<Node> out;
  for (int l = 1; l <= ell(); ++l) {
    const auto& comp = comps_[l - 1];
    for (int r = 1; r <= static_cast<int>(comp.size()); ++r) {
      int len = comp[r - 1];
      if (len > row_length(l, r + 1)) out.push_back(Node{r, len, l});
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

MultiPartition MultiPartition::with_node(const Node& nd) const {
  auto comps = comps_;
  auto& comp = comps.at(nd.comp - 1);
  if (nd.row == static_cast<int>(comp.size()) + 1) {
    comp.push_back(1);
  } else {
    comp.at(nd.row - 1) += 1;
  }
  MultiPartition out(std::move(comps));
  if (!out.contains(nd) || out.row_length(nd.comp, nd.row) != nd.col)
    throw std::invalid_argument("with_node: node is not addable");
  return out;
}

MultiPartition MultiPartition::without_node(const Node& nd) const {
  if (row_length(nd.comp, nd.row) != nd.col || row_length(nd.comp, nd.row + 1) >= nd.col)
    throw std::invalid_argument("without_node: node is not removable");
  auto comps = comps_;
  auto& comp = comps.at(nd.comp - 1);
  comp[nd.row - 1] -= 1;
  while (!comp.empty() && comp.back() == 0) comp.pop_back();
  return MultiPartition(std::move(comps));
}

std::string MultiPartition::to_string() const {
  std::string out = "(";
  for (int l = 1; l <= ell(); ++l) {
    if (l > 1) out += ",";
    out += "(";
    const auto& comp = comps_[l - 1];
    for (size_t r = 0; r < comp.size(); ++r) {
      if (r) out += ",";
      out += std::to_string(comp[r]);
    }
    out += ")";
  }
  return out + ")";
}

namespace {

void partitions_of(int m, int max_part, std::vector<int>& cur,
                   std::vector<std::vector<int>>& out) {
  if (m == 0) {
    out.push_back(cur);
    return;
  }
  for (int p = std::min(m, max_part); p >= 1; --p) {
    cur.push_back(p);
    partitions_of(m - p, p, cur, out);
    cur.pop_back();
  }
}

std::vector<std::vector<int>> partitions_of(int m) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  partitions_of(m, m == 0 ? 1 : m, cur, out);
  return out;
}

// Cumulative prefix-sum key whose descending lexicographic order refines
// dominance.
std::vector<int> dominance_key(const MultiPartition& lam, int n) {
  std::vector<int> key;
  int before = 0;
  for (int l = 1; l <= lam.ell(); ++l) {
    int acc = before;
    for (int r = 1; r <= n; ++r) {
      acc += lam.row_length(l, r);
      key.push_back(acc);
    }
    before = acc;
  }
  return key;
}

}  // namespace

std::vector<MultiPartition> enum_multipartitions(int n, int ell) {
  if (n < 0 || ell < 1) throw std::invalid_argument("enum_multipartitions: bad arguments");
  std::vector<MultiPartition> out;
  std::vector<std::vector<int>> comps(ell);
  auto rec = [&](auto&& self, int l, int left) -> void {
    if (l == ell) {
      for (const auto& last : partitions_of(left)) {
        comps[l - 1] = last;
        out.push_back(MultiPartition(comps));
      }
      return;
    }
    for (int m = 0; m <= left; ++m)
      for (const auto& part : partitions_of(m)) {
        comps[l - 1] = part;
        self(self, l + 1, left - m);
      }
  };
  rec(rec, 1, n);
  std::stable_sort(out.begin(), out.end(), [n](const MultiPartition& a, const MultiPartition& b) {
    return dominance_key(a, n) > dominance_key(b, n);
  });
  return out;
}

bool dominance_geq(const MultiPartition& a, const MultiPartition& b) {
  if (a.ell() != b.ell() || a.size() != b.size())
    throw std::invalid_argument("dominance_geq: mismatched n or ell");
  int n = a.size();
  auto ka = dominance_key(a, n), kb = dominance_key(b, n);
  for (size_t i = 0; i < ka.size(); ++i)
    if (ka[i] < kb[i]) return false;
  return true;
}

StdTableau::StdTableau(MultiPartition shape, std::vector<std::vector<std::vector<int>>> rows)
    : shape_(std::move(shape)), rows_(std::move(rows)) {
  int n = shape_.size();
  pos_.assign(n, Node{});
  std::vector<bool> seen(n, false);
  if (static_cast<int>(rows_.size()) != shape_.ell())
    throw std::invalid_argument("StdTableau: component count mismatch");
  for (int l = 1; l <= shape_.ell(); ++l) {
    const auto& comp = rows_[l - 1];
    if (static_cast<int>(comp.size()) != static_cast<int>(shape_.component(l).size()))
      throw std::invalid_argument("StdTableau: row count mismatch");
    for (int r = 1; r <= static_cast<int>(comp.size()); ++r) {
      if (static_cast<int>(comp[r - 1].size()) != shape_.row_length(l, r))
        throw std::invalid_argument("StdTableau: row length mismatch");
      for (int c = 1; c <= static_cast<int>(comp[r - 1].size()); ++c) {
        int v = comp[r - 1][c - 1];
        if (v < 1 || v > n || seen[v - 1])
          throw std::invalid_argument("StdTableau: filling is not a bijection");
        seen[v - 1] = true;
        pos_[v - 1] = Node{r, c, l};
        if (c > 1 && comp[r - 1][c - 2] > v)
          throw std::invalid_argument("StdTableau: rows must increase");
        if (r > 1 && comp[r - 2][c - 1] > v)
          throw std::invalid_argument("StdTableau: columns must increase");
      }
    }
  }
}

StdTableau StdTableau::superstandard(const MultiPartition& shape) {
  std::vector<std::vector<std::vector<int>>> rows(shape.ell());
  int next = 1;
  for (int l = 1; l <= shape.ell(); ++l) {
    for (int r = 1; r <= static_cast<int>(shape.component(l).size()); ++r) {
      std::vector<int> row(shape.row_length(l, r));
      for (auto& v : row) v = next++;
      rows[l - 1].push_back(std::move(row));
    }
  }
  return StdTableau(shape, std::move(rows));
}

int StdTableau::entry_at(const Node& nd) const {
  if (!shape_.contains(nd)) throw std::out_of_range("entry_at: node outside diagram");
  return rows_[nd.comp - 1][nd.row - 1][nd.col - 1];
}

StdTableau StdTableau::restricted(int k) const {
  if (k < 0 || k > size()) throw std::out_of_range("restricted: k out of range");
  std::vector<std::vector<std::vector<int>>> rows(shape_.ell());
  std::vector<std::vector<int>> comps(shape_.ell());
  for (int l = 1; l <= shape_.ell(); ++l) {
    for (const auto& row : rows_[l - 1]) {
      std::vector<int> kept;
      for (int v : row)
        if (v <= k) kept.push_back(v);
      if (!kept.empty()) {
        comps[l - 1].push_back(static_cast<int>(kept.size()));
        rows[l - 1].push_back(std::move(kept));
      }
    }
  }
  return StdTableau(MultiPartition(std::move(comps)), std::move(rows));
}

std::string StdTableau::to_string() const {
  std::string out = "(";
  for (int l = 1; l <= shape_.ell(); ++l) {
    if (l > 1) out += ",";
    out += "(";
    for (size_t r = 0; r < rows_[l - 1].size(); ++r) {
      if (r) out += ";";
      for (size_t c = 0; c < rows_[l - 1][r].size(); ++c) {
        if (c) out += ",";
        out += std::to_string(rows_[l - 1][r][c]);
      }
    }
    out += ")";
  }
  return out + ")";
}

nlohmann::json StdTableau::to_json() const {
  return nlohmann::json{{"shape", shape_.to_json()}, {"filling", rows_}};
}

StdTableau StdTableau::from_json(const nlohmann::json& j) {
  return StdTableau(MultiPartition::from_json(j.at("shape")),
                    j.at("filling").get<std::vector<std::vector<std::vector<int>>>>());
}

namespace {

void grow_tableaux(const MultiPartition& target, const MultiPartition& shape,
                   std::vector<std::vector<std::vector<int>>>& rows, int next,
                   std::vector<StdTableau>& out) {
  if (next > target.size()) {
    out.push_back(StdTableau(shape, rows));
    return;
  }
  for (const Node& nd : shape.addable_nodes()) {
    if (target.row_length(nd.comp, nd.row) < nd.col) continue;
    auto& comp = rows[nd.comp - 1];
    if (nd.row == static_cast<int>(comp.size()) + 1) comp.push_back({});
    comp[nd.row - 1].push_back(next);
    grow_tableaux(target, shape.with_node(nd), rows, next + 1, out);
    comp[nd.row - 1].pop_back();
    if (comp.back().empty()) comp.pop_back();
  }
}

}  // namespace

std::vector<StdTableau> std_tableaux(const MultiPartition& shape) {
  std::vector<StdTableau> out;
  std::vector<std::vector<std::vector<int>>> rows(shape.ell());
  grow_tableaux(shape, MultiPartition::empty(shape.ell()), rows, 1, out);
  return out;
}

Perm tableau_perm(const StdTableau& t) {
  StdTableau super = StdTableau::superstandard(t.shape());
  std::vector<int> img(t.size());
  for (int k = 1; k <= t.size(); ++k) img[k - 1] = t.entry_at(super.node_of(k));
  return Perm(std::move(img));
}

int superstandard_index(const StdTableau& t) {
  if (t.size() == 0) throw std::out_of_range("superstandard_index: empty tableau");
  StdTableau super = StdTableau::superstandard(t.shape());
  return super.entry_at(t.node_of(t.size()));
}

bool dominance_geq(const StdTableau& s, const StdTableau& t) {
  if (s.size() != t.size() || s.shape().ell() != t.shape().ell())
    throw std::invalid_argument("dominance_geq: mismatched n or ell");
  for (int k = 1; k <= s.size(); ++k)
    if (!dominance_geq(s.restricted(k).shape(), t.restricted(k).shape())) return false;
  return true;
}

bool pair_dominance_geq(const StdTableau& s, const StdTableau& t, const StdTableau& u,
                        const StdTableau& v) {
  return dominance_geq(s, u) && dominance_geq(t, v);
}

bool pair_dominance_gt(const StdTableau& s, const StdTableau& t, const StdTableau& u,
                       const StdTableau& v) {
  return pair_dominance_geq(s, t, u, v) && !(s == u && t == v);
}

std::vector<Node> addable_preceding(const StdTableau& t, int i) {
  Node cell = t.node_of(i);
  std::vector<Node> out;
  for (const Node& nd : t.restricted(i).shape().addable_nodes())
    if (node_precedes(nd, cell)) out.push_back(nd);
  return out;
}

std::vector<Node> removable_preceding(const StdTableau& t, int i) {
  Node cell = t.node_of(i);
  std::vector<Node> out;
  for (const Node& nd : t.restricted(i - 1).shape().removable_nodes())
    if (node_precedes(nd, cell)) out.push_back(nd);
  return out;
}

Scalar node_residue(const Node& nd, const ParamSet& params) {
  if (params.variant() == Variant::NonDegenerate)
    return Scalar::q_power(nd.diagonal(), params) * Scalar::cyclo(nd.comp, params);
  return Scalar::integer(nd.diagonal(), params) + Scalar::cyclo(nd.comp, params);
}

Scalar residue(const StdTableau& t, int k, const ParamSet& params) {
  return node_residue(t.node_of(k), params);
}

mpq_class node_residue_value(const Node& nd, const Specialization& sp) {
  if (sp.variant() == Variant::NonDegenerate)
    return q_int_pow(sp.q_value(), nd.diagonal()) * sp.param_value(nd.comp);
  return mpq_class(nd.diagonal()) + sp.param_value(nd.comp);
}

std::vector<mpq_class> residue_values(int k, const Specialization& sp) {
  std::vector<mpq_class> vals;
  for (int d = -(k - 1); d <= k - 1; ++d)
    for (int l = 1; l <= sp.ell(); ++l) {
      Node nd = d >= 0 ? Node{1, 1 + d, l} : Node{1 - d, 1, l};
      mpq_class v = node_residue_value(nd, sp);
      if (std::find(vals.begin(), vals.end(), v) == vals.end()) vals.push_back(v);
    }
  return vals;
}

long same_row_pairs(const MultiPartition& shape) {
  long total = 0;
  for (int l = 1; l <= shape.ell(); ++l)
    for (int row : shape.component(l)) total += static_cast<long>(row) * (row - 1) / 2;
  return total;
}

Scalar murphy_trace(const StdTableau& t, const ParamSet& params) {
  int n = t.size();
  if (params.variant() == Variant::Degenerate) {
    for (int j = 1; j <= n; ++j)
      if (t.node_of(j).comp != 1) return Scalar::zero(params);
    return Scalar::one(params);
  }
  long q_exp = 0;
  for (int k = 1; k <= n; ++k) q_exp += k - superstandard_index(t.restricted(k));
  Scalar out = Scalar::q_power(static_cast<int>(q_exp), params);
  for (int j = 1; j <= n; ++j)
    for (int i = t.node_of(j).comp + 1; i <= params.ell(); ++i)
      out *= -Scalar::cyclo(i, params);
  return out;
}

namespace {

mpq_class separated_div(const mpq_class& num, const mpq_class& den) {
  if (den == 0) throw NotSeparatedError("coefficient denominator vanished");
  return num / den;
}

}  // namespace

mpq_class seminormal_norm(const StdTableau& t, const Specialization& sp) {
  mpq_class out = 1;
  if (sp.variant() == Variant::NonDegenerate) {
    long e = tableau_perm(t).length() + same_row_pairs(t.shape());
    out = q_int_pow(sp.q_value(), static_cast<int>(e));
  }
  for (int i = 1; i <= t.size(); ++i) {
    mpq_class ri = node_residue_value(t.node_of(i), sp);
    for (const Node& nd : addable_preceding(t, i)) out *= ri - node_residue_value(nd, sp);
    for (const Node& nd : removable_preceding(t, i))
      out = separated_div(out, ri - node_residue_value(nd, sp));
  }
  return out;
}

mpq_class restriction_coeff(const StdTableau& t, const Specialization& sp, CoeffForm form) {
  int n = t.size();
  if (n < 1) throw std::out_of_range("restriction_coeff: empty tableau");
  Node cell = t.node_of(n);
  MultiPartition below = t.restricted(n - 1).shape();
  mpq_class rn = node_residue_value(cell, sp);
  bool nondeg = sp.variant() == Variant::NonDegenerate;

  std::vector<Node> rem = below.removable_nodes();
  std::vector<Node> add;
  for (const Node& nd : below.addable_nodes())
    if (!(nd == cell)) add.push_back(nd);

  mpq_class out = 1;
  if (form == CoeffForm::NormRatio) {
    out = separated_div(seminormal_norm(t, sp), seminormal_norm(t.restricted(n - 1), sp));
    for (const Node& nd : rem) {
      mpq_class r = node_residue_value(nd, sp);
      out *= nondeg ? mpq_class(separated_div(rn, r) - 1) : mpq_class(rn - r);
    }
    for (const Node& nd : add) {
      mpq_class r = node_residue_value(nd, sp);
      out = separated_div(out, nondeg ? mpq_class(separated_div(rn, r) - 1) : mpq_class(rn - r));
    }
  } else {
    if (nondeg) {
      int e = n - superstandard_index(t) + cell.col - 1;
      out = q_int_pow(sp.q_value(), e);
      for (const Node& nd : add) out *= node_residue_value(nd, sp);
      for (const Node& nd : rem) out = separated_div(out, node_residue_value(nd, sp));
    }
    for (const Node& nd : rem)
      if (!node_precedes(nd, cell)) out *= rn - node_residue_value(nd, sp);
    for (const Node& nd : add)
      if (!node_precedes(nd, cell)) out = separated_div(out, rn - node_residue_value(nd, sp));
  }
  if (nondeg && (t.shape().ell() - 1) % 2 == 1) out = -out;
  return out;
}

mpq_class seminormal_trace(const StdTableau& t, const Specialization& sp) {
  mpq_class out = 1;
  for (int k = 1; k <= t.size(); ++k) out *= restriction_coeff(t.restricted(k), sp, CoeffForm::NormRatio);
  return out;
}

}  // namespace hecke
