// Buchberger's algorithm with the normal selection strategy and the two
// classical pair-elimination criteria, plus the quotient-ring utilities
// built on reduced bases: vector-space dimension, normal forms, and
// minimal polynomials of coordinates.

#ifndef FACTO_GROEBNER_HPP
#define FACTO_GROEBNER_HPP

#include <optional>
#include <vector>

#include "poly.hpp"

namespace facto {

struct GroebnerOptions {
  // Reduction steps (single leading-term cancellations) allowed before the
  // computation aborts with a Budget error.
  std::uint64_t step_budget = 1'000'000;
  // When nonzero, compute modulo the monomial ideal m^N (all terms of
  // degree >= N are treated as zero): the result together with m^N is a
  // basis of (I + m^N).  Used for local multiplicities.
  unsigned truncate_degree = 0;
};

class GroebnerBasis {
public:
  GroebnerBasis(FieldPtr field, int nvars, std::vector<Polynomial> gens)
      : field_(std::move(field)), nvars_(nvars), gens_(std::move(gens)) {}

  const FieldPtr& field() const { return field_; }
  int nvars() const { return nvars_; }
  const std::vector<Polynomial>& generators() const { return gens_; }
  bool is_unit_ideal() const;

private:
  FieldPtr field_;
  int nvars_;
  std::vector<Polynomial> gens_;
};

// Reduced Groebner basis of the ideal generated by `gens` in grevlex order.
// The result is canonical: independent of generator order and scaling.
GroebnerBasis buchberger(const std::vector<Polynomial>& gens,
                         const GroebnerOptions& opts = {});

// Fully reduced normal form of h modulo the (reduced) basis.
Polynomial normal_form(const Polynomial& h, const GroebnerBasis& gb);

// Number of monomials outside the leading-term ideal; nullopt when that
// count is infinite (the ideal is not zero-dimensional).
std::optional<std::uint64_t> quotient_dimension(const GroebnerBasis& gb);

// Monomials of degree < bound outside the leading-term ideal: the quotient
// dimension of (I + m^bound) when gb came from a truncated run.
std::uint64_t truncated_quotient_dimension(const GroebnerBasis& gb, unsigned bound);

// All standard monomials (quotient vector-space basis); requires finite
// dimension.
std::vector<Exponents> standard_monomials(const GroebnerBasis& gb);

// True iff the leading-term ideal contains a pure power of every variable;
// for a homogeneous ideal this certifies an empty projective zero set.
bool is_irrelevant(const GroebnerBasis& gb);

// Monic minimal polynomial of the residue class of x_var in the quotient
// ring (which must be finite-dimensional).  Degree 0 only for the unit
// ideal.
UniPoly minimal_polynomial_of_variable(const GroebnerBasis& gb, int var);

}  // namespace facto

#endif
