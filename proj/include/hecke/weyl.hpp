#pragma once

// The symmetric group S_n as a Coxeter group of type A.

#include <array>
#include <compare>
#include <cstdint>
#include <functional>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace hecke {

/// Element of S_n in one-line notation: value w(i) at position i, 1-based.
/// Products compose as functions, (xy)(i) = x(y(i)), so w*s_i swaps the
/// entries in positions i and i+1 while s_i*w swaps the values i and i+1.
class Perm {
 public:
  static constexpr int kMaxRank = 16;

  Perm() = default;
  static Perm identity(int n);
  static Perm from_one_line(std::span<const int> images);
  /// Simple transposition s_i = (i, i+1), 1 <= i < n.
  static Perm simple(int i, int n);
  /// Product of simple reflections s_{word[0]} ... s_{word[k-1]}.
  static Perm from_word(std::span<const int> word, int n);
  /// Parses one-line text ("2314") or a reduced word ("s1 s2", "s1,s2");
  /// "e" is the identity.
  static Perm parse(std::string_view text, int n);

  int rank() const { return n_; }
  /// w(i) for 1 <= i <= n.
  int operator()(int i) const { return img_[i - 1]; }
  std::vector<int> one_line() const;
  std::string to_string() const;

  Perm compose(const Perm& y) const;
  Perm inverse() const;
  int length() const;
  bool is_involution() const { return *this == inverse(); }

  std::vector<int> right_descents() const;
  std::vector<int> left_descents() const;
  bool has_right_descent(int i) const { return img_[i - 1] > img_[i]; }
  bool has_left_descent(int i) const;
  /// Reduced word, lexicographically first among those obtained by peeling
  /// the smallest right descent.
  std::vector<int> reduced_word() const;

  /// Packed key; injective on permutations of equal rank.
  std::uint64_t key() const;

  bool operator==(const Perm& o) const { return n_ == o.n_ && img_ == o.img_; }
  /// Lexicographic on one-line notation (rank first).
  std::strong_ordering operator<=>(const Perm& o) const;

 private:
  std::uint8_t n_ = 0;
  std::array<std::uint8_t, kMaxRank> img_{};
};

Perm compose(const Perm& x, const Perm& y);
Perm inverse(const Perm& x);
int length(const Perm& w);
/// x <= y in the Bruhat order (Ehresmann tableau criterion).
bool bruhat_leq(const Perm& x, const Perm& y);
Perm longest_element(int n);
std::vector<Perm> all_elements(int n);

/// The fixed total order used for deterministic iteration: length first,
/// then lexicographic one-line.
struct LengthLexLess {
  bool operator()(const Perm& a, const Perm& b) const;
};

/// Standard parabolic subgroup generated by {s_i : i in J}.
class Parabolic {
 public:
  Parabolic() = default;
  Parabolic(int n, std::vector<int> J);
  static Parabolic full(int n);
  static Parabolic trivial(int n) { return Parabolic(n, {}); }
  /// All 2^(n-1) standard parabolics, ordered by bitmask.
  static std::vector<Parabolic> all(int n);

  int rank() const { return n_; }
  const std::vector<int>& simples() const { return J_; }
  bool contains_simple(int i) const;
  /// Consecutive blocks [a, b] (1-based, inclusive) permuted by the subgroup.
  std::vector<std::pair<int, int>> blocks() const;
  std::string to_string() const;

  bool operator==(const Parabolic&) const = default;

 private:
  int n_ = 0;
  std::vector<int> J_;
};

Perm parabolic_longest(const Parabolic& J);
std::vector<Perm> parabolic_elements(const Parabolic& J);

enum class CosetSide {
  kLeft,   // cosets W'w
  kRight,  // cosets wW'
};

std::vector<Perm> coset_min_representatives(const Parabolic& J, CosetSide side);
Perm coset_min_representative(const Parabolic& J, const Perm& w, CosetSide side);
Perm coset_max_representative(const Parabolic& J, const Perm& w, CosetSide side);

/// Finite Coxeter group realized inside S_n as the standard parabolic W_J
/// (W_J = S_n when J is everything), with multiplication tables over its
/// elements. Elements are indexed 0..size()-1 in LengthLexLess order, so
/// index 0 is the identity and the last index is the longest element.
class WeylGroup {
 public:
  explicit WeylGroup(int n);
  explicit WeylGroup(Parabolic J);

  int rank() const { return J_.rank(); }
  const Parabolic& parabolic() const { return J_; }
  bool is_full() const { return static_cast<int>(J_.simples().size()) == rank() - 1; }
  int size() const { return static_cast<int>(elems_.size()); }
  const Perm& elem(int i) const { return elems_[i]; }
  const std::vector<Perm>& elements() const { return elems_; }
  /// Index of w; throws std::out_of_range when w is not in the group.
  int index(const Perm& w) const;
  bool contains(const Perm& w) const;

  /// Simple reflections of the group, as indices i of s_i.
  const std::vector<int>& simples() const { return J_.simples(); }
  int num_simples() const { return static_cast<int>(J_.simples().size()); }
  /// Slot k of simples() is s_i with i = simple_at(k).
  int simple_at(int k) const { return J_.simples()[k]; }
  int slot_of(int i) const;

  int length(int x) const { return len_[x]; }
  int inverse(int x) const { return inv_[x]; }
  /// Index of s*w and w*s for the simple in slot k.
  int lmul(int k, int x) const { return lmul_[k][x]; }
  int rmul(int k, int x) const { return rmul_[k][x]; }
  bool left_descent(int k, int x) const { return len_[lmul_[k][x]] < len_[x]; }
  bool right_descent(int k, int x) const { return len_[rmul_[k][x]] < len_[x]; }
  int mul(int x, int y) const;
  int identity() const { return 0; }
  int longest() const { return size() - 1; }
  /// Reduced word as slots (not simple indices).
  std::vector<int> reduced_slots(int x) const;
  bool bruhat_leq(int x, int y) const;

 private:
  void build();

  Parabolic J_;
  std::vector<Perm> elems_;
  std::unordered_map<std::uint64_t, int> index_;
  std::vector<int> len_;
  std::vector<int> inv_;
  std::vector<std::vector<int>> lmul_;
  std::vector<std::vector<int>> rmul_;
};

using WeylGroupPtr = std::shared_ptr<const WeylGroup>;

}  // namespace hecke

template <>
struct std::hash<hecke::Perm> {
  std::size_t operator()(const hecke::Perm& p) const noexcept {
    return std::hash<std::uint64_t>{}(p.key() * 31 + static_cast<std::uint64_t>(p.rank()));
  }
};
