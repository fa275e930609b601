#pragma once

// Combinatorial Kahrstrom conditions: searches for x != y with
// dual(w) KL(x) = dual(w) KL(y) != 0 (graded) or the same after v -> 1
// (ungraded), and scanners for the related propositions and conjectures.

#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <json.hpp>

#include "hecke/cells.hpp"
#include "hecke/hecke.hpp"

namespace hecke {

enum class KhMode { kGraded, kUngraded, kBoth };

std::string to_string(KhMode m);
/// Accepts "graded", "ungraded", "both".
KhMode kh_mode_from_string(std::string_view s);

/// Shared read-only data for one group: the products dual(w) KL(x) in
/// dual-KL coordinates, computed per w on first use.
class KhContext {
 public:
  KhContext(HeckeAlgebraPtr H, std::shared_ptr<const CellData> C);

  const HeckeAlgebra& algebra() const { return *H_; }
  const WeylGroup& group() const { return H_->group(); }
  const CellData& cells() const { return *C_; }
  int size() const { return H_->size(); }

  /// P[x] = dual(w) KL(x), dual-KL coordinates.
  const std::vector<Coords>& products(int w) const;
  /// The same at v = 1.
  const std::vector<IntCoords>& products_at_one(int w) const;
  /// Computes the rows for all w, spread over `jobs` threads.
  void precompute(int jobs) const;

 private:
  struct Row {
    std::once_flag once;
    std::vector<Coords> graded;
    std::vector<IntCoords> ungraded;
  };
  void fill(int w) const;

  HeckeAlgebraPtr H_;
  std::shared_ptr<const CellData> C_;
  std::unique_ptr<Row[]> rows_;
};

struct KhVerdict {
  int w = 0;
  bool graded = false;
  bool ungraded = false;
  /// All pairs x < y (search order) realizing each condition.
  std::vector<std::pair<int, int>> graded_witnesses;
  std::vector<std::pair<int, int>> ungraded_witnesses;
};

/// Searches pairs with x ~_L y and dual(w) KL(x) != 0, ordered by
/// (l(x) + l(y), x, y). Throws std::logic_error if the nonvanishing
/// criterion (w >=_L x^-1) disagrees with a computed product, or if a graded
/// witness is not an ungraded one.
KhVerdict kahrstrom_verdict(const KhContext& ctx, int w);
/// Same verdict from all pairs x < y, without any pruning.
KhVerdict kahrstrom_reference(const KhContext& ctx, int w);
bool kh_graded(const KhContext& ctx, int w);
bool kh_ungraded(const KhContext& ctx, int w);
std::vector<KhVerdict> kahrstrom_all(const KhContext& ctx, int jobs = 1);

/// Result of one scan. Checks with asserted = true are proved statements;
/// the others are open conjectures whose counterexamples are listed in full.
struct ScanReport {
  std::string scan;
  int n = 0;
  KhMode mode = KhMode::kBoth;
  long long witnesses = 0;
  std::vector<PropertyCheck> checks;
  std::vector<std::string> counterexamples;
};

/// 0 when every check passes, 1 when an asserted check fails, otherwise 2
/// when a conjecture has a counterexample.
int exit_code(const std::vector<ScanReport>& reports);

/// Witnesses (w, x, y) transported to w' ~_L w with the same x, y.
ScanReport scan_left_cell_invariance(const KhContext& ctx, KhMode mode, int jobs = 1);
/// Witnesses (w, x, y) varied to (x', y') with x' ~_R x, y' ~_R y, x' ~_L y'.
ScanReport scan_witness_variation(const KhContext& ctx, KhMode mode, int jobs = 1);

/// Equal nonzero products force x ~_L y (varying the KL factor) and x ~_R y
/// (varying the dual factor). Exhaustive over all triples when samples is 0,
/// otherwise `samples` uniformly random triples from a fixed seed.
ScanReport check_necessary_conditions(const KhContext& ctx, long long samples = 0,
                                      unsigned long long seed = 0x5eed2024ULL);

/// For every w in W_J: condition (a) is the Kahrstrom condition of w inside
/// W_J, condition (b) that of w w0' w0 in S_n. Also checks that the KL
/// polynomials of W_J agree with those of S_n.
ScanReport parabolic_induction_check(const KhContext& big, const Parabolic& J, KhMode mode);

nlohmann::ordered_json to_json(const WeylGroup& W, const KhVerdict& v);
nlohmann::ordered_json to_json(const ScanReport& r);

}  // namespace hecke
