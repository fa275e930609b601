#pragma once

// Robinson-Schensted correspondence and tableau combinatorics.

#include <vector>

#include <json.hpp>

#include "hecke/laurent.hpp"
#include "hecke/weyl.hpp"

namespace hecke {

/// Young tableau stored row by row; row lengths weakly decrease.
using Tableau = std::vector<std::vector<int>>;
/// Partition as weakly decreasing positive parts.
using Shape = std::vector<int>;

struct TableauPair {
  Tableau P;  // insertion tableau
  Tableau Q;  // recording tableau
  bool operator==(const TableauPair&) const = default;
};

/// Row insertion of the one-line word w(1), ..., w(n).
TableauPair rs(const Perm& w);
/// Inverse of rs; throws std::invalid_argument on mismatched or
/// non-standard tableaux.
Perm inverse_rs(const Tableau& P, const Tableau& Q);

Shape shape_of(const Tableau& T);
Shape shape(const Perm& w);
bool is_standard(const Tableau& T);
/// lambda <= mu in dominance order (partial sums of lambda bounded by mu's).
bool dominance_leq(const Shape& lambda, const Shape& mu);
/// Number of standard Young tableaux of the given shape.
Integer hook_length_count(const Shape& lambda);
/// All partitions of n, in reverse lexicographic order ((n) first).
std::vector<Shape> partitions(int n);
/// All standard Young tableaux of the given shape, in a fixed order.
std::vector<Tableau> standard_tableaux(const Shape& lambda);

/// {u : Q_u = Q_w}, sorted by LengthLexLess.
std::vector<Perm> left_cell_of(const Perm& w);
/// {u : P_u = P_w}, sorted by LengthLexLess.
std::vector<Perm> right_cell_of(const Perm& w);
/// The unique involution with recording tableau Q.
Perm duflo_involution_of_left_cell(const Tableau& Q);

/// Compact text form: rows joined by '/', e.g. "13/24".
std::string tableau_to_string(const Tableau& T);
nlohmann::ordered_json tableau_to_json(const Tableau& T);
Tableau tableau_from_json(const nlohmann::ordered_json& j);

}  // namespace hecke
