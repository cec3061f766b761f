#pragma once

// Extension fields F_{q^l} over a table field F_q, used to host roots of
// x^n - beta. Elements are coefficient vectors over F_q in the basis
// 1, y, ..., y^(l-1), packed base q. The defining polynomial is the smallest
// primitive polynomial of degree l, so y itself generates the unit group.

#include <cstdint>
#include <memory>
#include <optional>
#include <vector>

#include "ringcode/gf.hpp"

namespace ringcode::gf {

class ExtensionField {
 public:
  static constexpr std::uint64_t kMaxOrder = 1u << 22;

  ExtensionField(FieldPtr base, unsigned ell);

  const FieldPtr& base() const { return base_; }
  unsigned degree() const { return ell_; }
  std::uint32_t order() const { return Q_; }
  const Poly& modulus() const { return modulus_; }

  Elt add(Elt a, Elt b) const;
  Elt neg(Elt a) const;
  Elt sub(Elt a, Elt b) const { return add(a, neg(b)); }
  Elt mul(Elt a, Elt b) const {
    if (a == 0 || b == 0) return 0;
    return exp_[log_[a] + log_[b]];
  }
  Elt inv(Elt a) const;
  Elt pow(Elt a, std::int64_t k) const;
  std::uint64_t element_order(Elt a) const;

  Elt embed(Elt x) const { return x; }
  /// Preimage in F_q when y^q = y, otherwise absent.
  std::optional<Elt> descend(Elt y) const;

 private:
  FieldPtr base_;
  unsigned ell_;
  std::uint32_t Q_;
  Poly modulus_;
  std::vector<Elt> exp_;
  std::vector<std::uint32_t> log_;
};

using ExtensionPtr = std::shared_ptr<const ExtensionField>;

}  // namespace ringcode::gf
