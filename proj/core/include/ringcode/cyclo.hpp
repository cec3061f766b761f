#pragma once

// Factorization of x^n - beta over F_q through q-cyclotomic cosets modulo rn,
// the symmetric / asymmetric classification of cosets, and the
// conjugate-reciprocal (dagger) operator.

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ringcode/extension.hpp"
#include "ringcode/gf.hpp"

namespace ringcode::cyclo {

struct Coset {
  unsigned rep = 0;  // smallest member
  std::vector<unsigned> members;  // rep, rep*q, rep*q^2, ...
  bool symmetric = false;
  std::size_t partner = 0;  // index of the coset containing -p^m * rep
  unsigned degree() const { return static_cast<unsigned>(members.size()); }
};

struct CosetStructure {
  gf::FieldPtr field;
  unsigned p = 0, m = 0, e = 0;
  unsigned n = 0;
  unsigned N = 0;   // p^e * n
  unsigned pe = 1;  // p^e
  Elt alpha = 0;
  unsigned r = 1;   // order of alpha
  Elt beta = 0;
  gf::ExtensionPtr ext;
  Elt delta = 0;  // element of ext
  std::vector<Coset> cosets;
  std::vector<Poly> polys;  // M_i over F_q, same order as cosets

  std::optional<std::size_t> index_of_rep(unsigned rep) const;
  std::optional<std::size_t> index_of_poly(const Poly& f) const;
  /// Largest admissible exponent, 2p^e.
  unsigned max_exponent() const { return 2 * pe; }
};

using CosetPtr = std::shared_ptr<const CosetStructure>;

/// beta = alpha^f with p^e f = 1 (mod r), 1 <= f <= p^m.
Elt beta_from_alpha(const gf::GaloisField& field, Elt alpha, unsigned e);

CosetPtr build_cosets(gf::FieldPtr field, Elt alpha, unsigned n, unsigned e);

/// Monic associate of the conjugated reciprocal.
Poly dagger(const gf::GaloisField& field, const Poly& f);

/// Ascending comma-separated coefficient list, e.g. "1,w^5,1".
std::string format_coefficients(const gf::GaloisField& field, const Poly& f);
/// Human form, e.g. "x^2 + w^5*x + 1".
std::string format_polynomial(const gf::GaloisField& field, const Poly& f);
/// Parses sums of terms such as "x^4+w^7x^3+wx^2+w^3*x+1" (like terms are combined).
Poly parse_polynomial(const gf::GaloisField& field, std::string_view text);

}  // namespace ringcode::cyclo
