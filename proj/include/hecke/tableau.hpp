#ifndef HECKE_TABLEAU_HPP
#define HECKE_TABLEAU_HPP

#include <string>
#include <vector>

#include "json.hpp"
#include "perm.hpp"
#include "scalar.hpp"

namespace hecke {

// A cell (row, col, component), all 1-based.
struct Node {
  int row = 0;
  int col = 0;
  int comp = 0;

  bool operator==(const Node& o) const = default;
  // Reading order used for enumeration: component, then row, then column.
  bool operator<(const Node& o) const {
    if (comp != o.comp) return comp < o.comp;
    if (row != o.row) return row < o.row;
    return col < o.col;
  }
  int diagonal() const { return col - row; }
};

// y precedes x when y lies in a later component, or in the same component in
// an earlier column.
bool node_precedes(const Node& y, const Node& x);

class MultiPartition {
public:
  explicit MultiPartition(std::vector<std::vector<int>> components);
  static MultiPartition empty(int ell);

  int ell() const { return static_cast<int>(comps_.size()); }
  int size() const;  // n
  const std::vector<int>& component(int l) const { return comps_.at(l - 1); }
  const std::vector<std::vector<int>>& components() const { return comps_; }
  int row_length(int l, int r) const;
  bool contains(const Node& nd) const;

  // Component offsets a_s = |lambda^(1)| + ... + |lambda^(s-1)|, a_1 = 0.
  std::vector<int> offsets() const;
  // The positive parts of all components, read in order.
  std::vector<int> as_composition() const;

  std::vector<Node> addable_nodes() const;
  std::vector<Node> removable_nodes() const;
  MultiPartition with_node(const Node& nd) const;
  MultiPartition without_node(const Node& nd) const;

  bool operator==(const MultiPartition& o) const { return comps_ == o.comps_; }
  bool operator<(const MultiPartition& o) const { return comps_ < o.comps_; }

  std::string to_string() const;
  nlohmann::json to_json() const { return comps_; }
  static MultiPartition from_json(const nlohmann::json& j) {
    return MultiPartition(j.get<std::vector<std::vector<int>>>());
  }

private:
  std::vector<std::vector<int>> comps_;
};

// Complete, duplicate-free, in a fixed total order refining dominance
// (more dominant shapes first).
std::vector<MultiPartition> enum_multipartitions(int n, int ell);

bool dominance_geq(const MultiPartition& a, const MultiPartition& b);

class StdTableau {
public:
  StdTableau(MultiPartition shape, std::vector<std::vector<std::vector<int>>> rows);
  // Fills 1..n row by row through component 1, then component 2, ...
  static StdTableau superstandard(const MultiPartition& shape);

  const MultiPartition& shape() const { return shape_; }
  int size() const { return static_cast<int>(pos_.size()); }
  Node node_of(int j) const { return pos_.at(j - 1); }
  int entry_at(const Node& nd) const;
  const std::vector<std::vector<std::vector<int>>>& rows() const { return rows_; }

  StdTableau restricted(int k) const;

  bool operator==(const StdTableau& o) const { return rows_ == o.rows_; }
  bool operator<(const StdTableau& o) const { return pos_ < o.pos_; }

  std::string to_string() const;
  nlohmann::json to_json() const;
  static StdTableau from_json(const nlohmann::json& j);

private:
  MultiPartition shape_;
  std::vector<std::vector<std::vector<int>>> rows_;
  std::vector<Node> pos_;
};

// All standard fillings, enumerated in lexicographic order of the sequence of
// entry positions (so the superstandard tableau comes first).
std::vector<StdTableau> std_tableaux(const MultiPartition& shape);

// The permutation carrying the superstandard filling to t: d(k) = t(node)
// where node holds k in the superstandard tableau.
Perm tableau_perm(const StdTableau& t);

// Index k such that the maximal entry of t occupies the cell that holds k in
// the superstandard tableau; equals size(t) exactly when the maximal entry is
// in superstandard position.
int superstandard_index(const StdTableau& t);

bool dominance_geq(const StdTableau& s, const StdTableau& t);
bool pair_dominance_geq(const StdTableau& s, const StdTableau& t, const StdTableau& u,
                        const StdTableau& v);
bool pair_dominance_gt(const StdTableau& s, const StdTableau& t, const StdTableau& u,
                       const StdTableau& v);

// Addable nodes of Shape(t restricted to i) strictly preceding the cell of i.
std::vector<Node> addable_preceding(const StdTableau& t, int i);
// Removable nodes of Shape(t restricted to i-1) strictly preceding the cell of i.
std::vector<Node> removable_preceding(const StdTableau& t, int i);

// q^{col-row} Q_comp, resp. (col-row) + u_comp.
Scalar node_residue(const Node& nd, const ParamSet& params);
Scalar residue(const StdTableau& t, int k, const ParamSet& params);
mpq_class node_residue_value(const Node& nd, const Specialization& sp);

// All residue values attachable to entry k (union over shapes of any size >= k).
std::vector<mpq_class> residue_values(int k, const Specialization& sp);

// Number of same-row cell pairs, sum of binom(row, 2).
long same_row_pairs(const MultiPartition& shape);

// Closed form for the symmetrizing trace of a diagonal Murphy element; covers
// both variants (power of q times a product of -Q_i, resp. a 0/1 indicator).
Scalar murphy_trace(const StdTableau& t, const ParamSet& params);

enum class CoeffForm { NormRatio, Restricted };

// Structure constant of the diagonal seminormal idempotent, f_tt^2 = norm * f_tt.
mpq_class seminormal_norm(const StdTableau& t, const Specialization& sp);
// Scalar relating the top-level restriction of a seminormal element to the
// smaller seminormal element. Both displayed closed forms are implemented.
mpq_class restriction_coeff(const StdTableau& t, const Specialization& sp, CoeffForm form);
// Product of restriction coefficients over all levels; the seminormal trace.
mpq_class seminormal_trace(const StdTableau& t, const Specialization& sp);

}  // namespace hecke

#endif
