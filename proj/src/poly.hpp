// Sparse multivariate polynomials over an exact field, kept in graded
// reverse lexicographic order, plus projective points and the ".poly"
// text format.

#ifndef FACTO_POLY_HPP
#define FACTO_POLY_HPP

#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "field.hpp"

namespace facto {

using Exponents = std::vector<unsigned>;

unsigned total_degree(const Exponents& e);
// Graded reverse lexicographic comparison: higher total degree wins; on a
// tie the monomial whose trailing difference entry is negative wins.
// Returns <0, 0, >0 like strcmp, with >0 meaning a comes after b in
// descending order (a is the larger monomial).
int grevlex_cmp(const Exponents& a, const Exponents& b);

// Degree-e exponent tuples in nvars variables, in descending grevlex order.
std::vector<Exponents> monomials_of_degree(int nvars, int e);

struct Term {
  Exponents exps;
  Coeff coeff;
};

class Polynomial {
public:
  Polynomial() = default;
  static Polynomial zero(FieldPtr field, int nvars);
  static Polynomial constant(FieldPtr field, int nvars, const Coeff& c);
  static Polynomial variable(FieldPtr field, int nvars, int i, unsigned exp = 1);
  static Polynomial monomial(FieldPtr field, int nvars, Exponents e, const Coeff& c);
  // Terms need not be normalized; zero coefficients are dropped and equal
  // monomials merged.
  static Polynomial from_terms(FieldPtr field, int nvars, std::vector<Term> terms);

  const FieldPtr& field() const { return field_; }
  int nvars() const { return nvars_; }
  // Terms in descending grevlex order; the first one is the leading term.
  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  // -1 for the zero polynomial.
  int degree() const;
  bool is_homogeneous() const;
  const Term& leading_term() const;

  Polynomial operator+(const Polynomial& o) const;
  Polynomial operator-(const Polynomial& o) const;
  Polynomial operator-() const;
  Polynomial operator*(const Polynomial& o) const;
  bool operator==(const Polynomial& o) const;
  bool operator!=(const Polynomial& o) const { return !(*this == o); }

  Polynomial pow(unsigned n) const;
  Polynomial scaled(const Coeff& c) const;
  Polynomial derivative(int var) const;
  Polynomial homogeneous_component(int deg) const;
  Coeff evaluate(std::span<const Coeff> point) const;
  // Substitute one variable by a field value; the variable count is kept.
  Polynomial substitute(int var, const Coeff& value) const;
  // Remove a variable that no longer occurs; remaining ones are renumbered.
  Polynomial drop_variable(int var) const;
  // Place this polynomial into a larger variable set: var_map[i] is the new
  // index of old variable i.
  Polynomial embed(const std::vector<int>& var_map, int new_nvars) const;
  // Simultaneous shift x_i -> x_i + offset[i].
  Polynomial translated(std::span<const Coeff> offsets) const;
  // Coefficient-wise move to another field (Q -> F_p reduction or
  // F_p -> F_{p^e} embedding).
  Polynomial map_field(const FieldPtr& target) const;
  // Over Q: divide by the integer content and normalize the sign of the
  // leading coefficient; over finite fields: make monic.
  Polynomial normalized_primitive() const;
  Polynomial monic() const;
  // Drop every term of total degree >= bound.
  Polynomial truncated_below(unsigned bound) const;

  bool divisible_by_some_variable(const std::vector<int>& vars) const;

  std::string str() const;

private:
  void normalize();

  FieldPtr field_;
  int nvars_ = 0;
  std::vector<Term> terms_;
};

std::ostream& operator<<(std::ostream& os, const Polynomial& p);

// Grammar (whitespace-insensitive):
//   poly    := ['-'] term (('+'|'-') term)*
//   term    := coeff | coeff '*' factors | factors
//   factors := var ('^' nat)? ('*' var ('^' nat)?)*
//   var     := 'x' nat
//   coeff   := integer | integer '/' positive-integer
Polynomial parse_polynomial(const std::string& text, int nvars, const FieldPtr& field);

class ProjectivePoint {
public:
  // Normalizes so the first nonzero coordinate is 1; errors if all
  // coordinates vanish.
  ProjectivePoint(FieldPtr field, std::vector<Coeff> coords);

  const FieldPtr& field() const { return field_; }
  const std::vector<Coeff>& coords() const { return coords_; }
  size_t ncoords() const { return coords_.size(); }
  // Index of the first nonzero (= 1) coordinate.
  int pivot() const { return pivot_; }

  bool operator==(const ProjectivePoint& o) const;
  bool operator!=(const ProjectivePoint& o) const { return !(*this == o); }
  // Canonical order: by pivot, then coordinate-wise.
  bool before(const ProjectivePoint& o) const;

  ProjectivePoint map_field(const FieldPtr& target) const;
  std::string str() const;

private:
  FieldPtr field_;
  std::vector<Coeff> coords_;
  int pivot_ = 0;
};

// Affine local equation of V(f) at p: the chart is the pivot coordinate of
// p, the point moves to the origin, and the result lives in nvars-1
// variables (the non-pivot ones, in order).  f must be homogeneous.
Polynomial translate_and_dehomogenize(const Polynomial& f, const ProjectivePoint& p);

// True iff every monomial of f is divisible by one of the given variables,
// i.e. the coordinate subspace {x_i = 0 : i in vars} lies inside V(f).
bool in_coordinate_ideal(const Polynomial& f, const std::vector<int>& vars);

// ".poly" files: header line "nvars=<n> field=<Q|Fp:p>" followed by one
// polynomial (may span several lines).
struct PolyFile {
  Polynomial poly;
};
PolyFile read_poly_file(const std::string& path);
PolyFile read_poly_text(const std::string& content);
std::string write_poly_text(const Polynomial& p);
void write_poly_file(const std::string& path, const Polynomial& p);

}  // namespace facto

#endif
