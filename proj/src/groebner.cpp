#include "groebner.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <set>

namespace facto {

namespace {

bool divides(const Exponents& a, const Exponents& b) {
  for (size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

Exponents lcm_exps(const Exponents& a, const Exponents& b) {
  Exponents r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = std::max(a[i], b[i]);
  return r;
}

bool coprime(const Exponents& a, const Exponents& b) {
  for (size_t i = 0; i < a.size(); ++i)
    if (a[i] > 0 && b[i] > 0) return false;
  return true;
}

struct Budget {
  std::uint64_t left;
  // 0 disables truncation; otherwise terms of degree >= cut are dropped.
  unsigned cut = 0;
  void spend() {
    if (left == 0)
      throw Error(ErrorKind::Budget, "Groebner reduction step budget exhausted");
    --left;
  }
  Polynomial trim(Polynomial p) const {
    return cut == 0 ? p : p.truncated_below(cut);
  }
};

// Fully reduce h against basis; every reducible term is rewritten, so the
// result has no term divisible by any leading monomial.
Polynomial reduce_full(Polynomial h, const std::vector<Polynomial>& basis, Budget& budget) {
  const FieldPtr field = h.field();
  const Field& F = *field;
  h = budget.trim(std::move(h));
  Polynomial out = Polynomial::zero(field, h.nvars());
  while (!h.is_zero()) {
    const Term& lt = h.leading_term();
    const Polynomial* reducer = nullptr;
    for (const auto& g : basis) {
      if (!g.is_zero() && divides(g.leading_term().exps, lt.exps)) {
        reducer = &g;
        break;
      }
    }
    if (reducer == nullptr) {
      // move the irreducible leading term to the output
      out = out + Polynomial::monomial(field, h.nvars(), lt.exps, lt.coeff);
      h = h - Polynomial::monomial(field, h.nvars(), lt.exps, lt.coeff);
      continue;
    }
    budget.spend();
    Exponents shift(lt.exps.size());
    const Exponents& ge = reducer->leading_term().exps;
    for (size_t i = 0; i < shift.size(); ++i) shift[i] = lt.exps[i] - ge[i];
    Coeff factor = F.div(lt.coeff, reducer->leading_term().coeff);
    Polynomial sub = *reducer * Polynomial::monomial(field, h.nvars(), shift, factor);
    h = budget.trim(h - sub);
  }
  return out;
}

Polynomial s_polynomial(const Polynomial& f, const Polynomial& g) {
  const FieldPtr field = f.field();
  const Field& F = *field;
  const Term& fl = f.leading_term();
  const Term& gl = g.leading_term();
  Exponents l = lcm_exps(fl.exps, gl.exps);
  Exponents sf(l.size()), sg(l.size());
  for (size_t i = 0; i < l.size(); ++i) {
    sf[i] = l[i] - fl.exps[i];
    sg[i] = l[i] - gl.exps[i];
  }
  Polynomial a = f * Polynomial::monomial(field, f.nvars(), sf, F.inv(fl.coeff));
  Polynomial b = g * Polynomial::monomial(field, g.nvars(), sg, F.inv(gl.coeff));
  return a - b;
}

// Tidy a freshly reduced element before it joins the basis: primitive over
// Q (content out, positive lead), monic over finite fields.
Polynomial tidy(const Polynomial& p) { return p.normalized_primitive(); }

}  // namespace

bool GroebnerBasis::is_unit_ideal() const {
  for (const auto& g : gens_)
    if (!g.is_zero() && g.degree() == 0) return true;
  return false;
}

GroebnerBasis buchberger(const std::vector<Polynomial>& gens, const GroebnerOptions& opts) {
  if (gens.empty()) throw Error(ErrorKind::InvalidArgument, "Groebner basis of no generators");
  FieldPtr field = gens.front().field();
  int nvars = gens.front().nvars();
  if (!field) throw Error(ErrorKind::InvalidArgument, "uninitialized generator");
  for (const auto& g : gens) {
    if (!g.field()->same(*field) || g.nvars() != nvars)
      throw Error(ErrorKind::FieldMismatch, "generators live in different rings");
  }
  Budget budget{opts.step_budget, opts.truncate_degree};

  std::vector<Polynomial> basis;
  for (const auto& g : gens) {
    Polynomial t = budget.trim(g);
    if (!t.is_zero()) basis.push_back(tidy(t));
  }
  if (basis.empty()) {
    if (opts.truncate_degree > 0)
      // everything fell into m^N: represent the (trivial) polynomial part
      return GroebnerBasis(field, nvars, {});
    throw Error(ErrorKind::InvalidArgument, "Groebner basis of the zero ideal");
  }

  struct Pair {
    size_t i, j;
    Exponents lcm;
  };
  auto pair_less = [](const Pair& a, const Pair& b) {
    int c = grevlex_cmp(a.lcm, b.lcm);
    if (c != 0) return c < 0;
    if (a.i != b.i) return a.i < b.i;
    return a.j < b.j;
  };
  std::vector<Pair> pending;
  std::set<std::pair<size_t, size_t>> handled;

  // In a truncated run the basis implicitly contains every monomial of
  // degree N; their pairs with g are covered by reducing the multiples
  // that push lm(g) up to degree exactly N.
  std::vector<Polynomial> boundary;
  auto push_boundary_for = [&](const Polynomial& g) {
    if (opts.truncate_degree == 0) return;
    unsigned lead_deg = total_degree(g.leading_term().exps);
    if (lead_deg >= opts.truncate_degree) return;
    unsigned deficit = opts.truncate_degree - lead_deg;
    for (const auto& mu : monomials_of_degree(nvars, static_cast<int>(deficit)))
      boundary.push_back(g * Polynomial::monomial(field, nvars, mu, field->one()));
  };

  auto push_pairs_for = [&](size_t j) {
    for (size_t i = 0; i < j; ++i) {
      pending.push_back(Pair{i, j, lcm_exps(basis[i].leading_term().exps,
                                            basis[j].leading_term().exps)});
    }
    push_boundary_for(basis[j]);
  };
  for (size_t j = 0; j < basis.size(); ++j) push_pairs_for(j);

  while (!pending.empty() || !boundary.empty()) {
    if (!boundary.empty()) {
      Polynomial work = std::move(boundary.back());
      boundary.pop_back();
      Polynomial rem = reduce_full(std::move(work), basis, budget);
      if (!rem.is_zero()) {
        basis.push_back(tidy(rem));
        push_pairs_for(basis.size() - 1);
      }
      continue;
    }
    auto it = std::min_element(pending.begin(), pending.end(), pair_less);
    Pair pr = *it;
    pending.erase(it);
    handled.insert({pr.i, pr.j});

    const Exponents& li = basis[pr.i].leading_term().exps;
    const Exponents& lj = basis[pr.j].leading_term().exps;
    // first criterion: coprime leading monomials reduce to zero
    if (coprime(li, lj)) continue;
    // chain criterion: some k with lm_k | lcm(i,j) and both side pairs done
    bool skip = false;
    for (size_t k = 0; k < basis.size() && !skip; ++k) {
      if (k == pr.i || k == pr.j) continue;
      if (!divides(basis[k].leading_term().exps, pr.lcm)) continue;
      auto key_ik = std::minmax(pr.i, k);
      auto key_jk = std::minmax(pr.j, k);
      if (handled.count({key_ik.first, key_ik.second}) &&
          handled.count({key_jk.first, key_jk.second}))
        skip = true;
    }
    if (skip) continue;

    Polynomial rem = reduce_full(s_polynomial(basis[pr.i], basis[pr.j]), basis, budget);
    if (rem.is_zero()) continue;
    basis.push_back(tidy(rem));
    push_pairs_for(basis.size() - 1);
  }

  // minimalize: drop generators whose lead is divisible by another lead
  std::vector<Polynomial> minimal;
  for (size_t i = 0; i < basis.size(); ++i) {
    bool redundant = false;
    for (size_t j = 0; j < basis.size() && !redundant; ++j) {
      if (i == j) continue;
      const Exponents& li = basis[i].leading_term().exps;
      const Exponents& lj = basis[j].leading_term().exps;
      if (divides(lj, li) && (li != lj || j < i)) redundant = true;
    }
    if (!redundant) minimal.push_back(basis[i]);
  }
  // reduce tails against the other elements and normalize
  std::vector<Polynomial> reduced;
  for (size_t i = 0; i < minimal.size(); ++i) {
    std::vector<Polynomial> others;
    for (size_t j = 0; j < minimal.size(); ++j)
      if (j != i) others.push_back(minimal[j]);
    Polynomial r = others.empty() ? minimal[i] : reduce_full(minimal[i], others, budget);
    reduced.push_back(r.monic());
  }
  std::sort(reduced.begin(), reduced.end(), [](const Polynomial& a, const Polynomial& b) {
    return grevlex_cmp(a.leading_term().exps, b.leading_term().exps) < 0;
  });
  return GroebnerBasis(field, nvars, std::move(reduced));
}

Polynomial normal_form(const Polynomial& h, const GroebnerBasis& gb) {
  Budget budget{std::numeric_limits<std::uint64_t>::max()};
  return reduce_full(h, gb.generators(), budget);
}

namespace {

// leading exponents with a pure power per variable, or nullopt
std::optional<Exponents> pure_power_bounds(const GroebnerBasis& gb) {
  int n = gb.nvars();
  Exponents bound(n, 0);
  std::vector<bool> found(n, false);
  for (const auto& g : gb.generators()) {
    const Exponents& e = g.leading_term().exps;
    int var = -1;
    bool pure = true;
    for (int i = 0; i < n; ++i) {
      if (e[i] > 0) {
        if (var >= 0) {
          pure = false;
          break;
        }
        var = i;
      }
    }
    if (pure && var >= 0) {
      if (!found[var] || e[var] < bound[var]) {
        bound[var] = e[var];
        found[var] = true;
      }
    }
    if (pure && var < 0) {
      // constant generator: unit ideal, dimension 0
      return Exponents(n, 0);
    }
  }
  for (int i = 0; i < n; ++i)
    if (!found[i]) return std::nullopt;
  return bound;
}

void enumerate_standard(const GroebnerBasis& gb, const Exponents& bound,
                        std::vector<Exponents>* collect, std::uint64_t* count) {
  int n = gb.nvars();
  const auto& gens = gb.generators();
  std::vector<const Exponents*> leads;
  leads.reserve(gens.size());
  for (const auto& g : gens) leads.push_back(&g.leading_term().exps);
  Exponents cur(n, 0);
  // DFS over the box below the pure-power staircase
  auto rec = [&](auto&& self, int var) -> void {
    if (var == n) {
      for (const Exponents* l : leads)
        if (divides(*l, cur)) return;
      if (collect) collect->push_back(cur);
      ++*count;
      return;
    }
    for (unsigned e = 0; e < std::max(bound[var], 1u); ++e) {
      cur[var] = e;
      self(self, var + 1);
    }
    cur[var] = 0;
  };
  rec(rec, 0);
}

}  // namespace

std::optional<std::uint64_t> quotient_dimension(const GroebnerBasis& gb) {
  auto bound = pure_power_bounds(gb);
  if (!bound) return std::nullopt;
  std::uint64_t count = 0;
  enumerate_standard(gb, *bound, nullptr, &count);
  return count;
}

std::uint64_t truncated_quotient_dimension(const GroebnerBasis& gb, unsigned bound) {
  int n = gb.nvars();
  std::vector<const Exponents*> leads;
  for (const auto& g : gb.generators())
    if (!g.is_zero()) leads.push_back(&g.leading_term().exps);
  std::uint64_t count = 0;
  Exponents cur(n, 0);
  auto rec = [&](auto&& self, int var, unsigned used) -> void {
    if (var == n) {
      for (const Exponents* l : leads)
        if (divides(*l, cur)) return;
      ++count;
      return;
    }
    for (unsigned e = 0; used + e < bound; ++e) {
      cur[var] = e;
      self(self, var + 1, used + e);
    }
    cur[var] = 0;
  };
  rec(rec, 0, 0);
  return count;
}

std::vector<Exponents> standard_monomials(const GroebnerBasis& gb) {
  auto bound = pure_power_bounds(gb);
  if (!bound)
    throw Error(ErrorKind::Degenerate, "quotient ring is infinite-dimensional");
  std::vector<Exponents> mons;
  std::uint64_t count = 0;
  enumerate_standard(gb, *bound, &mons, &count);
  std::sort(mons.begin(), mons.end(),
            [](const Exponents& a, const Exponents& b) { return grevlex_cmp(a, b) < 0; });
  return mons;
}

bool is_irrelevant(const GroebnerBasis& gb) {
  return pure_power_bounds(gb).has_value();
}

UniPoly minimal_polynomial_of_variable(const GroebnerBasis& gb, int var) {
  if (var < 0 || var >= gb.nvars())
    throw Error(ErrorKind::InvalidArgument, "variable index out of range");
  FieldPtr K = gb.field();
  const Field& F = *K;
  std::vector<Exponents> mons = standard_monomials(gb);
  size_t dim = mons.size();
  if (dim == 0) {
    // unit ideal: the quotient is the zero ring
    return uni_constant(K, F.one());
  }
  std::map<Exponents, size_t> index;
  for (size_t i = 0; i < dim; ++i) index[mons[i]] = i;

  auto to_vec = [&](const Polynomial& p) {
    std::vector<Coeff> v(dim, F.zero());
    for (const auto& t : p.terms()) {
      auto it = index.find(t.exps);
      if (it == index.end())
        throw Error(ErrorKind::InvalidArgument, "normal form outside the standard basis");
      v[it->second] = t.coeff;
    }
    return v;
  };

  // Krylov iteration: rows are NF(x^k), augmented with the history of which
  // power each row came from so the first dependency yields the minimal
  // polynomial's coefficients.
  size_t max_steps = dim + 1;
  std::vector<std::vector<Coeff>> rows;          // reduced rows
  std::vector<size_t> pivot_of_row;              // pivot column of each reduced row
  Polynomial x = Polynomial::variable(K, gb.nvars(), var);
  Polynomial cur = Polynomial::constant(K, gb.nvars(), F.one());
  cur = normal_form(cur, gb);
  for (size_t step = 0; step < max_steps; ++step) {
    if (step > 0) cur = normal_form(cur * x, gb);
    std::vector<Coeff> row = to_vec(cur);
    std::vector<Coeff> hist(max_steps, F.zero());
    hist[step] = F.one();
    // eliminate against existing rows
    for (size_t r = 0; r < rows.size(); ++r) {
      size_t pc = pivot_of_row[r];
      if (F.is_zero(row[pc])) continue;
      Coeff factor = row[pc];
      for (size_t c = 0; c < dim; ++c)
        row[c] = F.sub(row[c], F.mul(factor, rows[r][c]));
      for (size_t c = 0; c < max_steps; ++c)
        hist[c] = F.sub(hist[c], F.mul(factor, rows[r][dim + c]));
    }
    size_t pivot = dim;
    for (size_t c = 0; c < dim; ++c) {
      if (!F.is_zero(row[c])) {
        pivot = c;
        break;
      }
    }
    if (pivot == dim) {
      // dependency found: hist holds the minimal polynomial coefficients
      std::vector<Coeff> coeffs(hist.begin(), hist.begin() + step + 1);
      return uni_monic(uni_of_coeffs(K, std::move(coeffs)));
    }
    Coeff s = F.inv(row[pivot]);
    std::vector<Coeff> stored(dim + max_steps, F.zero());
    for (size_t c = 0; c < dim; ++c) stored[c] = F.mul(row[c], s);
    for (size_t c = 0; c < max_steps; ++c) stored[dim + c] = F.mul(hist[c], s);
    rows.push_back(std::move(stored));
    pivot_of_row.push_back(pivot);
  }
  throw Error(ErrorKind::Degenerate, "minimal polynomial iteration did not terminate");
}

}  // namespace facto
