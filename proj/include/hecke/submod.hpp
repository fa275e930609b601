#pragma once

// Cyclic left submodules H g of the regular module, decided exactly over
// A = Z[v, v^-1]: rank over Q(v), membership with certificates, and the
// comparisons with the coideal spans LM_w and LN_w.

#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "hecke/cells.hpp"
#include "hecke/hecke.hpp"

namespace hecke {

enum class CoordBasis { kKL, kDualKL };

std::string to_string(CoordBasis b);

struct MembershipVerdict {
  bool member = false;
  /// For members: target = sum_z certificate[z] * generator[z].
  Coords certificate;
  /// For nonmembers decided by the lattice: the irreducible remainder of the
  /// shifted target (Z[v] coordinates). Empty for rank witnesses.
  Coords normal_form;
  /// The target raises the rank over Q(v).
  bool rank_witness = false;
  /// (p, a) such that the target leaves the span after v -> a in F_p.
  std::optional<std::pair<int, int>> fp_obstruction;
};

/// A-span of a list of coordinate rows. The reduction data (unit pivots and
/// a saturated strong Groebner basis of the rest) is built on first use and
/// reused for every later query; a const instance is safe to share.
class SubmoduleBasis {
 public:
  SubmoduleBasis(WeylGroupPtr W, CoordBasis basis, std::vector<Coords> generators);
  ~SubmoduleBasis();
  SubmoduleBasis(SubmoduleBasis&&) noexcept;

  const WeylGroup& group() const { return *W_; }
  const WeylGroupPtr& group_ptr() const { return W_; }
  CoordBasis basis() const { return basis_; }
  const std::vector<Coords>& generators() const { return gens_; }

  int rank_over_fraction_field() const;
  MembershipVerdict membership(const Coords& target) const;
  bool contains(const Coords& target) const { return membership(target).member; }
  /// Generating set of the saturated module: unit-pivot rows followed by the
  /// Groebner elements (the latter shifted back into A).
  std::vector<Coords> lattice_basis() const;

 private:
  struct Reduced;
  const Reduced& reduced() const;

  WeylGroupPtr W_;
  CoordBasis basis_;
  std::vector<Coords> gens_;
  mutable std::once_flag once_;
  mutable std::unique_ptr<Reduced> red_;
};

/// H * KL(w), rows are KL coordinates of KL(z) KL(w).
SubmoduleBasis cyclic_submodule_kl(const HeckeAlgebra& H, int w);
/// H * dual(w), rows are dual-KL coordinates of KL(z) dual(w).
SubmoduleBasis cyclic_submodule_dual(const HeckeAlgebra& H, int w);
/// H * g for an arbitrary element, in KL coordinates.
SubmoduleBasis cyclic_submodule(const HeckeAlgebra& H, const HeckeElt& g);

/// Rank over Q(v) of a list of rows, by fraction-free elimination.
int rank_over_fraction_field(std::vector<Coords> rows);
/// Membership of an integer vector in the Z-span of integer rows.
bool lattice_contains(const std::vector<IntCoords>& rows, const IntCoords& target);
/// Basis of {k in Z^m : sum_i k_i rows[i] = 0}.
std::vector<std::vector<Integer>> integer_left_kernel(const std::vector<std::vector<Integer>>& rows);

struct SpanComparison {
  bool equal = false;
  int rank = 0;       // rank over Q(v) of the cyclic module
  int span_size = 0;  // number of basis elements spanning the coideal module
  std::vector<int> missing;  // spanning elements outside the cyclic module
};

/// H KL(w) = LM_w? Also asserts that every generator lies in LM_w and
/// throws std::logic_error otherwise.
SpanComparison equals_lm(const HeckeAlgebra& H, const CellData& C, int w);
/// H dual(w) = LN_w? Asserts that every generator lies in LN_w.
SpanComparison equals_ln_dual(const HeckeAlgebra& H, const CellData& C, int w);

/// a with KL(w)^2 = a KL(w), if it exists.
std::optional<LaurentPoly> quasi_idempotent_check(const HeckeAlgebra& H, int w);
/// sum over x in W' of v^(l(w0') - 2 l(x)).
LaurentPoly parabolic_quasi_idempotent_scalar(const Parabolic& J);

/// {x : x >=_L w} equals {a w : l(a w) = l(a) + l(w)}.
bool corollary_3345_hypothesis(const WeylGroup& W, const CellData& C, int w);

struct Cor3345Survey {
  std::vector<int> passing;
  std::vector<int> parabolic_longest;
  std::vector<int> passing_not_parabolic;
  std::vector<int> parabolic_not_passing;
};
Cor3345Survey corollary_3345_survey(const WeylGroup& W, const CellData& C);

nlohmann::ordered_json to_json(const WeylGroup& W, const MembershipVerdict& v);
nlohmann::ordered_json to_json(const WeylGroup& W, const SpanComparison& s);
nlohmann::ordered_json to_json(const WeylGroup& W, const Cor3345Survey& s);

}  // namespace hecke
