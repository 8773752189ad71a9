#include "poly.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <map>
#include <numeric>
#include <ostream>
#include <sstream>
#include <tuple>

namespace facto {

unsigned total_degree(const Exponents& e) {
  return std::accumulate(e.begin(), e.end(), 0u);
}

int grevlex_cmp(const Exponents& a, const Exponents& b) {
  unsigned da = total_degree(a), db = total_degree(b);
  if (da != db) return da < db ? -1 : 1;
  for (size_t i = a.size(); i-- > 0;) {
    if (a[i] != b[i]) return a[i] > b[i] ? -1 : 1;
  }
  return 0;
}

std::vector<Exponents> monomials_of_degree(int nvars, int e) {
  std::vector<Exponents> out;
  if (nvars == 0) {
    if (e == 0) out.push_back({});
    return out;
  }
  Exponents cur(nvars, 0);
  auto rec = [&](auto&& self, int var, int left) -> void {
    if (var == nvars - 1) {
      cur[var] = static_cast<unsigned>(left);
      out.push_back(cur);
      return;
    }
    for (int v = left; v >= 0; --v) {
      cur[var] = static_cast<unsigned>(v);
      self(self, var + 1, left - v);
    }
    cur[var] = 0;
  };
  rec(rec, 0, e);
  std::sort(out.begin(), out.end(),
            [](const Exponents& a, const Exponents& b) { return grevlex_cmp(a, b) > 0; });
  return out;
}

namespace {

struct GrevlexLess {
  bool operator()(const Exponents& a, const Exponents& b) const {
    return grevlex_cmp(a, b) < 0;
  }
};

void check_same_ring(const Polynomial& a, const Polynomial& b) {
  if (!a.field() || !b.field())
    throw Error(ErrorKind::InvalidArgument, "operation on an uninitialized polynomial");
  if (!a.field()->same(*b.field()))
    throw Error(ErrorKind::FieldMismatch,
                "polynomials over different fields: " + a.field()->name() + " vs " + b.field()->name());
  if (a.nvars() != b.nvars())
    throw Error(ErrorKind::FieldMismatch, "polynomials with different variable counts");
}

}  // namespace

Polynomial Polynomial::zero(FieldPtr field, int nvars) {
  Polynomial p;
  p.field_ = std::move(field);
  p.nvars_ = nvars;
  return p;
}

Polynomial Polynomial::constant(FieldPtr field, int nvars, const Coeff& c) {
  return monomial(std::move(field), nvars, Exponents(nvars, 0), c);
}

Polynomial Polynomial::variable(FieldPtr field, int nvars, int i, unsigned exp) {
  if (i < 0 || i >= nvars)
    throw Error(ErrorKind::InvalidArgument, "variable index out of range: x" + std::to_string(i));
  Exponents e(nvars, 0);
  e[i] = exp;
  Coeff one = field->one();
  return monomial(std::move(field), nvars, std::move(e), one);
}

Polynomial Polynomial::monomial(FieldPtr field, int nvars, Exponents e, const Coeff& c) {
  Polynomial p;
  p.field_ = std::move(field);
  p.nvars_ = nvars;
  if (!p.field_->is_zero(c)) p.terms_.push_back(Term{std::move(e), c});
  return p;
}

Polynomial Polynomial::from_terms(FieldPtr field, int nvars, std::vector<Term> terms) {
  Polynomial p;
  p.field_ = std::move(field);
  p.nvars_ = nvars;
  p.terms_ = std::move(terms);
  p.normalize();
  return p;
}

void Polynomial::normalize() {
  const Field& F = *field_;
  std::map<Exponents, Coeff, GrevlexLess> acc;
  for (auto& t : terms_) {
    if (static_cast<int>(t.exps.size()) != nvars_)
      throw Error(ErrorKind::InvalidArgument, "exponent tuple length mismatch");
    auto it = acc.find(t.exps);
    if (it == acc.end())
      acc.emplace(std::move(t.exps), std::move(t.coeff));
    else
      it->second = F.add(it->second, t.coeff);
  }
  terms_.clear();
  for (auto it = acc.rbegin(); it != acc.rend(); ++it) {
    if (!F.is_zero(it->second)) terms_.push_back(Term{it->first, it->second});
  }
}

int Polynomial::degree() const {
  if (terms_.empty()) return -1;
  return static_cast<int>(total_degree(terms_.front().exps));
}

bool Polynomial::is_homogeneous() const {
  if (terms_.empty()) return true;
  unsigned d = total_degree(terms_.front().exps);
  for (const auto& t : terms_)
    if (total_degree(t.exps) != d) return false;
  return true;
}

const Term& Polynomial::leading_term() const {
  if (terms_.empty()) throw Error(ErrorKind::InvalidArgument, "leading term of zero");
  return terms_.front();
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
  check_same_ring(*this, o);
  const Field& F = *field_;
  std::vector<Term> out;
  out.reserve(terms_.size() + o.terms_.size());
  size_t i = 0, j = 0;
  while (i < terms_.size() && j < o.terms_.size()) {
    int c = grevlex_cmp(terms_[i].exps, o.terms_[j].exps);
    if (c > 0) {
      out.push_back(terms_[i++]);
    } else if (c < 0) {
      out.push_back(o.terms_[j++]);
    } else {
      Coeff s = F.add(terms_[i].coeff, o.terms_[j].coeff);
      if (!F.is_zero(s)) out.push_back(Term{terms_[i].exps, std::move(s)});
      ++i;
      ++j;
    }
  }
  for (; i < terms_.size(); ++i) out.push_back(terms_[i]);
  for (; j < o.terms_.size(); ++j) out.push_back(o.terms_[j]);
  Polynomial r;
  r.field_ = field_;
  r.nvars_ = nvars_;
  r.terms_ = std::move(out);
  return r;
}

Polynomial Polynomial::operator-() const {
  Polynomial r = *this;
  for (auto& t : r.terms_) t.coeff = field_->neg(t.coeff);
  return r;
}

Polynomial Polynomial::operator-(const Polynomial& o) const { return *this + (-o); }

Polynomial Polynomial::operator*(const Polynomial& o) const {
  check_same_ring(*this, o);
  const Field& F = *field_;
  std::map<Exponents, Coeff, GrevlexLess> acc;
  for (const auto& a : terms_) {
    for (const auto& b : o.terms_) {
      Exponents e(nvars_);
      for (int k = 0; k < nvars_; ++k) e[k] = a.exps[k] + b.exps[k];
      Coeff c = F.mul(a.coeff, b.coeff);
      auto it = acc.find(e);
      if (it == acc.end())
        acc.emplace(std::move(e), std::move(c));
      else
        it->second = F.add(it->second, c);
    }
  }
  Polynomial r;
  r.field_ = field_;
  r.nvars_ = nvars_;
  for (auto it = acc.rbegin(); it != acc.rend(); ++it)
    if (!F.is_zero(it->second)) r.terms_.push_back(Term{it->first, it->second});
  return r;
}

bool Polynomial::operator==(const Polynomial& o) const {
  if (!field_ || !o.field_) return field_ == o.field_;
  if (!field_->same(*o.field_) || nvars_ != o.nvars_ || terms_.size() != o.terms_.size())
    return false;
  for (size_t i = 0; i < terms_.size(); ++i) {
    if (terms_[i].exps != o.terms_[i].exps) return false;
    if (!field_->equal(terms_[i].coeff, o.terms_[i].coeff)) return false;
  }
  return true;
}

Polynomial Polynomial::pow(unsigned n) const {
  Polynomial r = constant(field_, nvars_, field_->one());
  Polynomial base = *this;
  while (n) {
    if (n & 1) r = r * base;
    if (n >>= 1) base = base * base;
  }
  return r;
}

Polynomial Polynomial::scaled(const Coeff& c) const {
  const Field& F = *field_;
  if (F.is_zero(c)) return zero(field_, nvars_);
  Polynomial r = *this;
  for (auto& t : r.terms_) t.coeff = F.mul(t.coeff, c);
  return r;
}

Polynomial Polynomial::derivative(int var) const {
  if (var < 0 || var >= nvars_)
    throw Error(ErrorKind::InvalidArgument, "derivative variable out of range");
  const Field& F = *field_;
  std::vector<Term> out;
  for (const auto& t : terms_) {
    if (t.exps[var] == 0) continue;
    Coeff c = F.mul(t.coeff, F.from_integer(static_cast<long long>(t.exps[var])));
    if (F.is_zero(c)) continue;
    Exponents e = t.exps;
    e[var] -= 1;
    out.push_back(Term{std::move(e), std::move(c)});
  }
  Polynomial r;
  r.field_ = field_;
  r.nvars_ = nvars_;
  r.terms_ = std::move(out);
  r.normalize();
  return r;
}

Polynomial Polynomial::homogeneous_component(int deg) const {
  Polynomial r;
  r.field_ = field_;
  r.nvars_ = nvars_;
  if (deg < 0) return r;
  for (const auto& t : terms_)
    if (static_cast<int>(total_degree(t.exps)) == deg) r.terms_.push_back(t);
  return r;
}

Coeff Polynomial::evaluate(std::span<const Coeff> point) const {
  if (static_cast<int>(point.size()) != nvars_)
    throw Error(ErrorKind::InvalidArgument, "evaluation point has wrong number of coordinates");
  const Field& F = *field_;
  // power cache per variable
  std::vector<std::vector<Coeff>> pows(nvars_);
  for (int i = 0; i < nvars_; ++i) pows[i].push_back(F.one());
  Coeff acc = F.zero();
  for (const auto& t : terms_) {
    Coeff v = t.coeff;
    for (int i = 0; i < nvars_; ++i) {
      unsigned e = t.exps[i];
      if (e == 0) continue;
      auto& table = pows[i];
      while (table.size() <= e) table.push_back(F.mul(table.back(), point[i]));
      v = F.mul(v, table[e]);
    }
    acc = F.add(acc, v);
  }
  return acc;
}

Polynomial Polynomial::substitute(int var, const Coeff& value) const {
  if (var < 0 || var >= nvars_)
    throw Error(ErrorKind::InvalidArgument, "substitution variable out of range");
  const Field& F = *field_;
  std::vector<Coeff> pows{F.one()};
  std::vector<Term> out;
  for (const auto& t : terms_) {
    unsigned e = t.exps[var];
    while (pows.size() <= e) pows.push_back(F.mul(pows.back(), value));
    Coeff c = F.mul(t.coeff, pows[e]);
    if (F.is_zero(c)) continue;
    Exponents ex = t.exps;
    ex[var] = 0;
    out.push_back(Term{std::move(ex), std::move(c)});
  }
  Polynomial r;
  r.field_ = field_;
  r.nvars_ = nvars_;
  r.terms_ = std::move(out);
  r.normalize();
  return r;
}

Polynomial Polynomial::drop_variable(int var) const {
  std::vector<Term> out;
  for (const auto& t : terms_) {
    if (t.exps[var] != 0)
      throw Error(ErrorKind::InvalidArgument, "cannot drop a variable that still occurs");
    Exponents e;
    e.reserve(nvars_ - 1);
    for (int i = 0; i < nvars_; ++i)
      if (i != var) e.push_back(t.exps[i]);
    out.push_back(Term{std::move(e), t.coeff});
  }
  Polynomial r;
  r.field_ = field_;
  r.nvars_ = nvars_ - 1;
  r.terms_ = std::move(out);
  r.normalize();
  return r;
}

Polynomial Polynomial::embed(const std::vector<int>& var_map, int new_nvars) const {
  if (static_cast<int>(var_map.size()) != nvars_)
    throw Error(ErrorKind::InvalidArgument, "variable map length mismatch");
  std::vector<Term> out;
  for (const auto& t : terms_) {
    Exponents e(new_nvars, 0);
    for (int i = 0; i < nvars_; ++i) {
      if (var_map[i] < 0 || var_map[i] >= new_nvars)
        throw Error(ErrorKind::InvalidArgument, "variable map target out of range");
      e[var_map[i]] += t.exps[i];
    }
    out.push_back(Term{std::move(e), t.coeff});
  }
  Polynomial r;
  r.field_ = field_;
  r.nvars_ = new_nvars;
  r.terms_ = std::move(out);
  r.normalize();
  return r;
}

Polynomial Polynomial::translated(std::span<const Coeff> offsets) const {
  if (static_cast<int>(offsets.size()) != nvars_)
    throw Error(ErrorKind::InvalidArgument, "offset count mismatch");
  const Field& F = *field_;
  // cache (x_i + a_i)^k
  std::vector<std::vector<Polynomial>> pows(nvars_);
  for (int i = 0; i < nvars_; ++i)
    pows[i].push_back(constant(field_, nvars_, F.one()));
  auto shifted_power = [&](int i, unsigned e) -> const Polynomial& {
    auto& table = pows[i];
    while (table.size() <= e) {
      Polynomial lin = variable(field_, nvars_, i) + constant(field_, nvars_, offsets[i]);
      table.push_back(table.back() * lin);
    }
    return table[e];
  };
  Polynomial acc = zero(field_, nvars_);
  for (const auto& t : terms_) {
    Polynomial prod = constant(field_, nvars_, t.coeff);
    for (int i = 0; i < nvars_; ++i)
      if (t.exps[i] > 0) prod = prod * shifted_power(i, t.exps[i]);
    acc = acc + prod;
  }
  return acc;
}

Polynomial Polynomial::map_field(const FieldPtr& target) const {
  const Field& src = *field_;
  const Field& dst = *target;
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const auto& t : terms_) {
    Coeff c;
    if (src.kind() == Field::Kind::Rationals) {
      c = dst.kind() == Field::Kind::Rationals ? t.coeff : dst.from_mpq(std::get<mpq_class>(t.coeff));
    } else if (src.kind() == Field::Kind::Prime) {
      if (dst.characteristic() != src.characteristic())
        throw Error(ErrorKind::FieldMismatch, "cannot map between different characteristics");
      c = dst.embed_from_prime(t.coeff);
    } else {
      if (!dst.same(src)) throw Error(ErrorKind::FieldMismatch, "unsupported field map");
      c = t.coeff;
    }
    out.push_back(Term{t.exps, std::move(c)});
  }
  Polynomial r;
  r.field_ = target;
  r.nvars_ = nvars_;
  r.terms_ = std::move(out);
  r.normalize();
  return r;
}

Polynomial Polynomial::normalized_primitive() const {
  if (terms_.empty()) return *this;
  const Field& F = *field_;
  if (F.kind() != Field::Kind::Rationals) return monic();
  // integer content of the coefficient list, sign fixed by the leading term
  mpz_class num_gcd = 0, den_lcm = 1;
  for (const auto& t : terms_) {
    const mpq_class& q = std::get<mpq_class>(t.coeff);
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), q.get_num().get_mpz_t());
    mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), q.get_den().get_mpz_t());
  }
  mpq_class scale(den_lcm, num_gcd);
  scale.canonicalize();
  Polynomial r = scaled(Coeff(scale));
  if (sgn(std::get<mpq_class>(r.terms_.front().coeff)) < 0) r = -r;
  return r;
}

Polynomial Polynomial::monic() const {
  if (terms_.empty()) return *this;
  return scaled(field_->inv(terms_.front().coeff));
}

Polynomial Polynomial::truncated_below(unsigned bound) const {
  // terms are sorted by descending degree, so drop a prefix
  size_t first = 0;
  while (first < terms_.size() && total_degree(terms_[first].exps) >= bound) ++first;
  Polynomial r;
  r.field_ = field_;
  r.nvars_ = nvars_;
  r.terms_.assign(terms_.begin() + first, terms_.end());
  return r;
}

bool Polynomial::divisible_by_some_variable(const std::vector<int>& vars) const {
  for (const auto& t : terms_) {
    bool hit = false;
    for (int v : vars) {
      if (v >= 0 && v < nvars_ && t.exps[v] > 0) {
        hit = true;
        break;
      }
    }
    if (!hit) return false;
  }
  return true;
}

bool in_coordinate_ideal(const Polynomial& f, const std::vector<int>& vars) {
  return f.divisible_by_some_variable(vars);
}

// ---------------------------------------------------------------------------
// printing

std::string Polynomial::str() const {
  if (terms_.empty()) return "0";
  const Field& F = *field_;
  std::string out;
  bool first = true;
  for (const auto& t : terms_) {
    std::string cs = F.str(t.coeff);
    bool negative = false;
    if (F.kind() == Field::Kind::Rationals && sgn(std::get<mpq_class>(t.coeff)) < 0) {
      negative = true;
      cs = F.str(F.neg(t.coeff));
    }
    if (first) {
      if (negative) out += "-";
      first = false;
    } else {
      out += negative ? " - " : " + ";
    }
    std::string vars;
    for (int i = 0; i < nvars_; ++i) {
      if (t.exps[i] == 0) continue;
      if (!vars.empty()) vars += "*";
      vars += "x" + std::to_string(i);
      if (t.exps[i] > 1) vars += "^" + std::to_string(t.exps[i]);
    }
    bool unit_coeff = cs == "1";
    bool needs_parens = F.kind() == Field::Kind::PrimePower && cs.find('+') != std::string::npos;
    if (vars.empty()) {
      out += needs_parens ? "(" + cs + ")" : cs;
    } else if (unit_coeff) {
      out += vars;
    } else {
      out += (needs_parens ? "(" + cs + ")" : cs) + "*" + vars;
    }
  }
  return out;
}

std::ostream& operator<<(std::ostream& os, const Polynomial& p) { return os << p.str(); }

// ---------------------------------------------------------------------------
// parsing

namespace {

class Parser {
public:
  Parser(const std::string& text, int nvars, FieldPtr field)
      : text_(text), nvars_(nvars), field_(std::move(field)) {}

  Polynomial run() {
    std::vector<Term> terms;
    skip_ws();
    bool neg = accept('-');
    parse_term(terms, neg);
    skip_ws();
    while (pos_ < text_.size()) {
      char c = text_[pos_];
      if (c == '+' || c == '-') {
        ++pos_;
        parse_term(terms, c == '-');
        skip_ws();
      } else {
        fail("expected '+' or '-'");
      }
    }
    if (terms.empty()) fail("empty polynomial");
    return Polynomial::from_terms(field_, nvars_, std::move(terms));
  }

private:
  [[noreturn]] void fail(const std::string& what) const {
    throw Error(ErrorKind::Parse,
                "polynomial syntax error at position " + std::to_string(pos_) + ": " + what);
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  bool peek_digit() {
    skip_ws();
    return pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]));
  }

  bool peek_var() {
    skip_ws();
    return pos_ < text_.size() && text_[pos_] == 'x';
  }

  std::string read_digits() {
    skip_ws();
    size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (pos_ == start) fail("expected a number");
    return text_.substr(start, pos_ - start);
  }

  unsigned read_nat() {
    std::string d = read_digits();
    try {
      unsigned long v = std::stoul(d);
      if (v > 1u << 20) fail("exponent too large");
      return static_cast<unsigned>(v);
    } catch (const std::exception&) {
      fail("number out of range");
    }
  }

  Coeff read_coeff() {
    std::string num = read_digits();
    mpz_class n(num);
    if (accept('/')) {
      std::string den = read_digits();
      mpz_class d(den);
      if (d == 0) fail("zero denominator");
      return field_->from_mpq(mpq_class(n, d));
    }
    return field_->from_mpz(n);
  }

  void read_factor(Exponents& e) {
    skip_ws();
    if (pos_ >= text_.size() || text_[pos_] != 'x') fail("expected a variable");
    ++pos_;
    unsigned idx = read_nat();
    if (static_cast<int>(idx) >= nvars_)
      fail("variable x" + std::to_string(idx) + " exceeds nvars=" + std::to_string(nvars_));
    unsigned exp = 1;
    if (accept('^')) exp = read_nat();
    e[idx] += exp;
  }

  void parse_term(std::vector<Term>& out, bool negate) {
    skip_ws();
    Coeff c = field_->one();
    Exponents e(nvars_, 0);
    bool saw_coeff = false;
    if (peek_digit()) {
      c = read_coeff();
      saw_coeff = true;
    }
    // term := coeff | coeff '*' factors | factors
    bool want_factors = !saw_coeff || accept('*');
    if (want_factors) {
      read_factor(e);
      while (accept('*')) read_factor(e);
    }
    if (negate) c = field_->neg(c);
    out.push_back(Term{std::move(e), std::move(c)});
  }

  const std::string& text_;
  size_t pos_ = 0;
  int nvars_;
  FieldPtr field_;
};

}  // namespace

Polynomial parse_polynomial(const std::string& text, int nvars, const FieldPtr& field) {
  if (nvars < 0) throw Error(ErrorKind::InvalidArgument, "nvars must be nonnegative");
  return Parser(text, nvars, field).run();
}

// ---------------------------------------------------------------------------
// projective points

ProjectivePoint::ProjectivePoint(FieldPtr field, std::vector<Coeff> coords)
    : field_(std::move(field)), coords_(std::move(coords)) {
  const Field& F = *field_;
  pivot_ = -1;
  for (size_t i = 0; i < coords_.size(); ++i) {
    if (!F.is_zero(coords_[i])) {
      pivot_ = static_cast<int>(i);
      break;
    }
  }
  if (pivot_ < 0)
    throw Error(ErrorKind::InvalidArgument, "projective point with all coordinates zero");
  Coeff scale = F.inv(coords_[pivot_]);
  for (auto& c : coords_) c = F.mul(c, scale);
}

bool ProjectivePoint::operator==(const ProjectivePoint& o) const {
  if (!field_->same(*o.field_) || coords_.size() != o.coords_.size()) return false;
  for (size_t i = 0; i < coords_.size(); ++i)
    if (!field_->equal(coords_[i], o.coords_[i])) return false;
  return true;
}

bool ProjectivePoint::before(const ProjectivePoint& o) const {
  if (pivot_ != o.pivot_) return pivot_ < o.pivot_;
  if (!field_->same(*o.field_)) {
    // mixed result sets: rational points first, then by extension degree
    auto key = [](const Field& f) {
      return std::tuple(static_cast<int>(f.kind()), f.characteristic(), f.ext_degree());
    };
    return key(*field_) < key(*o.field_);
  }
  for (size_t i = 0; i < coords_.size() && i < o.coords_.size(); ++i) {
    if (!field_->equal(coords_[i], o.coords_[i])) return field_->less(coords_[i], o.coords_[i]);
  }
  return coords_.size() < o.coords_.size();
}

ProjectivePoint ProjectivePoint::map_field(const FieldPtr& target) const {
  const Field& src = *field_;
  const Field& dst = *target;
  std::vector<Coeff> out;
  out.reserve(coords_.size());
  for (const auto& c : coords_) {
    if (src.kind() == Field::Kind::Rationals && dst.kind() != Field::Kind::Rationals)
      out.push_back(dst.from_mpq(std::get<mpq_class>(c)));
    else if (src.kind() == Field::Kind::Prime && dst.kind() != Field::Kind::Rationals)
      out.push_back(dst.embed_from_prime(c));
    else if (src.same(dst))
      out.push_back(c);
    else
      throw Error(ErrorKind::FieldMismatch, "unsupported point field map");
  }
  return ProjectivePoint(target, std::move(out));
}

std::string ProjectivePoint::str() const {
  std::string out = "[";
  for (size_t i = 0; i < coords_.size(); ++i) {
    if (i) out += ":";
    out += field_->str(coords_[i]);
  }
  return out + "]";
}

Polynomial translate_and_dehomogenize(const Polynomial& f, const ProjectivePoint& p) {
  if (!f.is_homogeneous())
    throw Error(ErrorKind::InvalidArgument, "local equation requires a homogeneous polynomial");
  if (static_cast<size_t>(f.nvars()) != p.ncoords())
    throw Error(ErrorKind::InvalidArgument, "point dimension does not match the polynomial");
  if (!f.field()->same(*p.field()))
    throw Error(ErrorKind::FieldMismatch, "point and polynomial over different fields");
  int chart = p.pivot();
  Polynomial g = f.substitute(chart, f.field()->one()).drop_variable(chart);
  // shift the remaining coordinates so p becomes the origin
  std::vector<Coeff> offsets;
  offsets.reserve(p.ncoords() - 1);
  for (size_t i = 0; i < p.ncoords(); ++i)
    if (static_cast<int>(i) != chart) offsets.push_back(p.coords()[i]);
  return g.translated(offsets);
}

// ---------------------------------------------------------------------------
// .poly files

PolyFile read_poly_text(const std::string& content) {
  std::istringstream in(content);
  std::string header;
  if (!std::getline(in, header)) throw Error(ErrorKind::Parse, "empty .poly input");
  std::istringstream hs(header);
  std::string tok;
  int nvars = -1;
  FieldPtr field;
  while (hs >> tok) {
    auto eq = tok.find('=');
    if (eq == std::string::npos)
      throw Error(ErrorKind::Parse, ".poly header entries must look like key=value");
    std::string key = tok.substr(0, eq), value = tok.substr(eq + 1);
    if (key == "nvars") {
      nvars = std::stoi(value);
    } else if (key == "field") {
      if (value == "Q") {
        field = Field::rationals();
      } else if (value.rfind("Fp:", 0) == 0) {
        field = Field::prime(std::stoull(value.substr(3)));
      } else {
        throw Error(ErrorKind::Parse, "unknown field spec '" + value + "' (use Q or Fp:p)");
      }
    } else {
      throw Error(ErrorKind::Parse, "unknown .poly header key '" + key + "'");
    }
  }
  if (nvars < 0 || !field) throw Error(ErrorKind::Parse, ".poly header needs nvars= and field=");
  std::string body, line;
  while (std::getline(in, line)) body += line + " ";
  return PolyFile{parse_polynomial(body, nvars, field)};
}

PolyFile read_poly_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::InvalidArgument, "cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return read_poly_text(ss.str());
}

std::string write_poly_text(const Polynomial& p) {
  const Field& F = *p.field();
  std::string fieldspec;
  switch (F.kind()) {
    case Field::Kind::Rationals:
      fieldspec = "Q";
      break;
    case Field::Kind::Prime:
      fieldspec = "Fp:" + std::to_string(F.prime_p());
      break;
    default:
      throw Error(ErrorKind::InvalidArgument, ".poly files support Q and prime fields only");
  }
  return "nvars=" + std::to_string(p.nvars()) + " field=" + fieldspec + "\n" + p.str() + "\n";
}

void write_poly_file(const std::string& path, const Polynomial& p) {
  std::ofstream out(path);
  if (!out) throw Error(ErrorKind::InvalidArgument, "cannot write " + path);
  out << write_poly_text(p);
}

}  // namespace facto
