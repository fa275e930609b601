#pragma once

// Kazhdan-Lusztig preorders, cells, Lusztig's a-function and the index sets
// spanning LM_w, LN_w and RN_w.

#include <memory>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <boost/dynamic_bitset.hpp>
#include <json.hpp>

#include "hecke/hecke.hpp"

namespace hecke {

enum class Order { kLeft, kRight, kTwoSided };

std::string to_string(Order o);
/// Accepts "left", "right", "two-sided" (also "twosided", "J").
Order order_from_string(std::string_view s);

/// x <= y when KL(y) occurs in KL(w) KL(x) (left), KL(x) KL(w) (right) or
/// KL(w1) KL(x) KL(w2) (two-sided). Generated by simple reflections through
/// the mu-graph and closed transitively.
class Preorder {
 public:
  Preorder(const KLCache& kl, Order order);

  Order order() const { return order_; }
  int size() const { return static_cast<int>(reach_.size()); }
  bool leq(int x, int y) const { return reach_[x][y]; }
  bool less(int x, int y) const { return leq(x, y) && !leq(y, x); }
  bool equiv(int x, int y) const { return class_[x] == class_[y]; }

  /// Classes are numbered by their smallest member; members ascend.
  const std::vector<std::vector<int>>& classes() const { return classes_; }
  int class_of(int x) const { return class_[x]; }
  /// Covering pairs (lower class, upper class) of the induced partial order.
  const std::vector<std::pair<int, int>>& hasse() const { return hasse_; }

  /// {u : u >= w} and {u : u <= w}, ascending.
  std::vector<int> up_set(int w) const;
  std::vector<int> down_set(int w) const;

  /// One-step successors before closure; exposed for cross-checks.
  const std::vector<std::vector<int>>& edges() const { return edges_; }

 private:
  Order order_;
  std::vector<std::vector<int>> edges_;
  std::vector<boost::dynamic_bitset<>> reach_;
  std::vector<int> class_;
  std::vector<std::vector<int>> classes_;
  std::vector<std::pair<int, int>> hasse_;
};

/// The three preorders of one group, built once and shared read-only.
class CellData {
 public:
  explicit CellData(KLCachePtr kl);
  const KLCache& kl() const { return *kl_; }
  const Preorder& get(Order o) const;
  const Preorder& left() const { return left_; }
  const Preorder& right() const { return right_; }
  const Preorder& two_sided() const { return two_sided_; }

  std::vector<int> lm_set(int w) const { return left_.up_set(w); }
  std::vector<int> ln_set(int w) const { return left_.down_set(w); }
  std::vector<int> rn_set(int w) const { return right_.down_set(w); }

 private:
  KLCachePtr kl_;
  Preorder left_;
  Preorder right_;
  Preorder two_sided_;
};

using CellDataPtr = std::shared_ptr<const CellData>;

/// a(z) for every index z: the largest v-degree among the gamma_{x,y}^z,
/// i.e. over all products with KL(z) as output.
std::vector<int> a_function(const HeckeAlgebra& H);

struct PropertyCheck {
  std::string name;
  bool asserted = true;  // false: reported only
  bool passed = true;
  long long checked = 0;
  std::vector<std::string> witnesses;  // first few counterexamples
};

nlohmann::ordered_json to_json(const PropertyCheck& c);

/// Checks the listed a-function properties exhaustively. Monotonicity is
/// asserted as x <= y => a(x) <= a(y) for all three orders; a <= l and
/// a(w0') = l(w0') are asserted. Strict monotonicity, the first-index
/// reading of the definition and the top-degree bullets are reported only.
std::vector<PropertyCheck> afunction_property_report(const HeckeAlgebra& H, const CellData& C,
                                                     const std::vector<int>& a);

/// Hasse diagram of the left order restricted to involutions, as DOT. Nodes
/// are labelled by the tableau of the involution, e.g. "13/24".
std::string involution_hasse_dot(const WeylGroup& W, const Preorder& left);
/// Covering pairs (lower, upper) among involutions, as group indices.
std::vector<std::pair<int, int>> involution_hasse_edges(const WeylGroup& W, const Preorder& left);

nlohmann::ordered_json cells_to_json(const WeylGroup& W, const Preorder& P);

}  // namespace hecke
