#pragma once

#include <map>
#include <string>

#include "hecke/hecke.hpp"

namespace testing_support {

/// Shared algebra per rank; tests only read from it.
inline hecke::HeckeAlgebraPtr algebra_ptr(int n) {
  static std::map<int, hecke::HeckeAlgebraPtr> cache;
  auto& slot = cache[n];
  if (!slot) slot = hecke::HeckeAlgebra::for_rank(n);
  return slot;
}

inline const hecke::HeckeAlgebra& algebra(int n) { return *algebra_ptr(n); }

inline int idx(const hecke::HeckeAlgebra& H, const std::string& w) {
  return H.index(hecke::Perm::parse(w, H.group().rank()));
}

inline hecke::LaurentPoly vpow(int k) { return hecke::LaurentPoly::monomial(k); }

/// v + v^-1.
inline hecke::LaurentPoly qnum() { return hecke::LaurentPoly{{1, 1}, {-1, 1}}; }

}  // namespace testing_support
