#pragma once

// The Hecke algebra of S_n (or of a standard parabolic subgroup) over
// Z[v, v^-1]: standard, KL, dual KL and tilting bases, structure constants
// and the ring symmetries.

#include <filesystem>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "hecke/laurent.hpp"
#include "hecke/weyl.hpp"

namespace hecke {

/// Dense coordinate vector indexed by group element index. Which basis the
/// entries refer to is up to the caller; zero entries are simply absent terms.
using Coords = std::vector<LaurentPoly>;
using IntCoords = std::vector<Integer>;

bool is_zero(const Coords& c);
Coords unit_coords(int size, int x);
IntCoords eval_at_one(const Coords& c);
bool is_zero(const IntCoords& c);

/// Element of the Hecke algebra, always stored in the standard basis.
class HeckeElt {
 public:
  HeckeElt() = default;
  explicit HeckeElt(WeylGroupPtr W);
  HeckeElt(WeylGroupPtr W, Coords standard);
  static HeckeElt basis(WeylGroupPtr W, int x);

  const WeylGroupPtr& group() const { return W_; }
  const WeylGroup& weyl() const { return *W_; }
  const Coords& coords() const { return c_; }
  const LaurentPoly& operator[](int x) const { return c_[x]; }
  const LaurentPoly& coeff(const Perm& w) const { return c_[W_->index(w)]; }
  bool is_zero() const { return hecke::is_zero(c_); }
  /// Indices with nonzero standard coordinate, ascending.
  std::vector<int> support() const;

  HeckeElt& operator+=(const HeckeElt& o);
  HeckeElt& operator-=(const HeckeElt& o);
  HeckeElt& add_scaled(const HeckeElt& o, const LaurentPoly& a);
  friend HeckeElt operator+(HeckeElt a, const HeckeElt& b) { return a += b; }
  friend HeckeElt operator-(HeckeElt a, const HeckeElt& b) { return a -= b; }
  friend HeckeElt operator*(const LaurentPoly& a, const HeckeElt& b);
  bool operator==(const HeckeElt& o) const;

  /// e.g. "H_{231}+vH_{213}"; zero prints as "0".
  std::string to_string() const;

 private:
  void check_same(const HeckeElt& o) const;

  WeylGroupPtr W_;
  Coords c_;
};

/// Image of a HeckeElt in the v = 1 specialization, i.e. the group ring.
class IntHeckeElt {
 public:
  IntHeckeElt() = default;
  IntHeckeElt(WeylGroupPtr W, IntCoords c) : W_(std::move(W)), c_(std::move(c)) {}
  const WeylGroupPtr& group() const { return W_; }
  const IntCoords& coords() const { return c_; }
  const Integer& operator[](int x) const { return c_[x]; }
  bool is_zero() const { return hecke::is_zero(c_); }
  bool operator==(const IntHeckeElt& o) const { return c_ == o.c_; }
  /// Product in the group ring (H_s^2 = H_e at v = 1).
  friend IntHeckeElt operator*(const IntHeckeElt& a, const IntHeckeElt& b);

 private:
  WeylGroupPtr W_;
  IntCoords c_;
};

/// KL polynomials h_{x,y} for one group, with the mu-graph derived from them.
class KLCache {
 public:
  /// Computes every h_{x,y} by the H_s-recursion with mu-correction.
  static std::shared_ptr<const KLCache> build(WeylGroupPtr W);
  /// Cache documents use the std::map-backed json type: keys come out sorted
  /// and large objects load in n log n.
  static std::shared_ptr<const KLCache> from_json(const nlohmann::json& j, WeylGroupPtr W);
  static std::shared_ptr<const KLCache> load(const std::filesystem::path& file, WeylGroupPtr W);
  /// Loads kl-cache-sN.json from dir when present, otherwise builds it and
  /// (if dir is nonempty) writes it there.
  static std::shared_ptr<const KLCache> load_or_build(int n, const std::filesystem::path& dir);
  static std::filesystem::path file_name(int n);

  const WeylGroupPtr& group() const { return W_; }
  const WeylGroup& weyl() const { return *W_; }
  int size() const { return W_->size(); }

  const LaurentPoly& h(int x, int y) const { return h_[x][y]; }
  /// Standard coordinates of the KL basis element indexed x.
  const Coords& row(int x) const { return h_[x]; }
  /// Symmetrized mu; zero for incomparable or equal pairs.
  Integer mu(int x, int y) const;
  /// All (z, mu(x,z)) with mu(x,z) != 0, z ascending.
  const std::vector<std::pair<int, Integer>>& mu_edges(int x) const { return mu_[x]; }

  /// Throws std::runtime_error naming the first violated invariant.
  void validate() const;
  nlohmann::json to_json() const;
  void save(const std::filesystem::path& file) const;

  struct DegreeStats {
    long long nonzero_offdiagonal = 0;
    long long degree_equals_length_gap = 0;
    long long degree_below_length_gap = 0;
  };
  DegreeStats degree_stats() const;

 private:
  explicit KLCache(WeylGroupPtr W);
  void build_mu();

  WeylGroupPtr W_;
  std::vector<Coords> h_;
  std::vector<std::vector<std::pair<int, Integer>>> mu_;
};

using KLCachePtr = std::shared_ptr<const KLCache>;

/// Hecke algebra of a group with its KL data. Basis conversions and the
/// W-graph action kernels live here. Lazily built tables are guarded, so a
/// const instance can be shared between threads.
class HeckeAlgebra {
 public:
  explicit HeckeAlgebra(KLCachePtr kl);
  static std::shared_ptr<HeckeAlgebra> for_rank(int n);
  static std::shared_ptr<HeckeAlgebra> for_parabolic(const Parabolic& J);

  const WeylGroupPtr& group_ptr() const { return kl_->group(); }
  const WeylGroup& group() const { return kl_->weyl(); }
  const KLCache& kl() const { return *kl_; }
  const KLCachePtr& kl_ptr() const { return kl_; }
  int size() const { return group().size(); }
  int index(const Perm& w) const { return group().index(w); }

  HeckeElt zero() const { return HeckeElt(group_ptr()); }
  HeckeElt one() const { return standard(0); }
  HeckeElt standard(int x) const { return HeckeElt::basis(group_ptr(), x); }
  HeckeElt kl_element(int x) const { return HeckeElt(group_ptr(), kl_->row(x)); }
  /// beta(H_{x w0}-KL element) * H_{w0}.
  const HeckeElt& dual_kl_element(int x) const;
  /// H_{w0} * KL element of w0 x.
  const HeckeElt& tilting_element(int x) const;

  HeckeElt mul(const HeckeElt& a, const HeckeElt& b) const;
  HeckeElt mul_simple_right(const HeckeElt& a, int slot) const;
  HeckeElt mul_simple_left(int slot, const HeckeElt& a) const;

  Coords to_kl_coords(const HeckeElt& a) const;
  Coords to_dual_kl_coords(const HeckeElt& a) const;
  Coords to_tilting_coords(const HeckeElt& a) const;
  HeckeElt from_kl_coords(const Coords& c) const;
  HeckeElt from_dual_kl_coords(const Coords& c) const;

  LaurentPoly tau(const HeckeElt& a) const;
  LaurentPoly form(const HeckeElt& a, const HeckeElt& b) const;
  HeckeElt star(const HeckeElt& a) const;
  HeckeElt beta(const HeckeElt& a) const;
  HeckeElt bar(const HeckeElt& a) const;
  IntHeckeElt specialize(const HeckeElt& a) const;

  LaurentPoly gamma(int x, int y, int w) const;
  LaurentPoly gamma_hat(int x, int y, int w) const;
  LaurentPoly gamma_hat_via_prop271(int x, int y, int w) const;
  /// Dual-KL coordinate at y of (dual w)(KL x).
  LaurentPoly m_coeff(int w, int x, int y) const;
  /// Dual-KL coordinate at y of (KL x)(dual w).
  LaurentPoly n_coeff(int x, int w, int y) const;

  // W-graph kernels on coordinate vectors. "kl" kernels act on KL
  // coordinates, "dual" kernels on dual-KL coordinates; slot selects the
  // simple reflection s and the KL element of s is the multiplier.
  Coords kl_left_simple(int slot, const Coords& c) const;
  Coords kl_right_simple(const Coords& c, int slot) const;
  Coords dual_left_simple(int slot, const Coords& c) const;
  Coords dual_right_simple(const Coords& c, int slot) const;

  /// P[x] = (KL x) * c for all indices x <= upto (all when upto < 0).
  std::vector<Coords> kl_left_products(const Coords& c, int upto = -1) const;
  /// P[x] = c * (KL x).
  std::vector<Coords> kl_right_products(const Coords& c, int upto = -1) const;
  std::vector<Coords> dual_left_products(const Coords& c, int upto = -1) const;
  std::vector<Coords> dual_right_products(const Coords& c, int upto = -1) const;

 private:
  enum class Side { kLeft, kRight };
  template <class Kernel>
  std::vector<Coords> products(const Coords& c, int upto, Side side, Kernel kernel) const;
  const HeckeElt& bar_standard(int x) const;

  KLCachePtr kl_;
  struct Lazy {
    std::once_flag dual_once;
    std::vector<HeckeElt> dual;
    std::once_flag bar_once;
    std::vector<HeckeElt> bar;
    std::once_flag tilt_once;
    std::vector<HeckeElt> tilt;
  };
  std::unique_ptr<Lazy> lazy_;
};

using HeckeAlgebraPtr = std::shared_ptr<HeckeAlgebra>;

/// Sparse JSON view of a coordinate vector: {"<one-line>": poly, ...} in
/// index order.
nlohmann::ordered_json coords_to_json(const WeylGroup& W, const Coords& c);
std::string coords_to_string(const WeylGroup& W, const Coords& c, const std::string& symbol);

}  // namespace hecke
