#include "necklace/poly.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <unordered_set>

#include "necklace/error.hpp"
#include "necklace/ratfunc.hpp"

namespace necklace {

VarsPtr make_vars(VarList names) {
  if (names.size() > kMaxVars)
    throw Error(ErrorCode::InvalidArgument, "at most " + std::to_string(kMaxVars) + " variables supported");
  std::unordered_set<std::string> seen;
  for (const auto& n : names) {
    if (!seen.insert(n).second) throw Error(ErrorCode::InvalidArgument, "duplicate variable name '" + n + "'");
  }
  return std::make_shared<const VarList>(std::move(names));
}

int total_degree(const Monomial& m) { return std::accumulate(m.begin(), m.end(), 0); }

bool grlex_greater(const Monomial& a, const Monomial& b) {
  int da = total_degree(a), db = total_degree(b);
  if (da != db) return da > db;
  return a > b;
}

const VarsPtr& Poly::empty_vars() {
  static const VarsPtr empty = std::make_shared<const VarList>();
  return empty;
}

Poly Poly::constant(VarsPtr vars, const Scalar& c) {
  Poly p(std::move(vars));
  if (!c.is_zero()) p.terms_.push_back({Monomial{}, c});
  return p;
}

Poly Poly::variable(VarsPtr vars, std::size_t index) {
  if (index >= vars->size()) throw Error(ErrorCode::InvalidArgument, "variable index out of range");
  Monomial m{};
  m[index] = 1;
  return monomial(std::move(vars), m, Scalar(1));
}

Poly Poly::monomial(VarsPtr vars, const Monomial& exp, const Scalar& c) {
  Poly p(std::move(vars));
  if (!c.is_zero()) p.terms_.push_back({exp, c});
  return p;
}

Poly Poly::from_terms(VarsPtr vars, std::vector<Term> terms) {
  Poly p(std::move(vars));
  std::sort(terms.begin(), terms.end(), [](const Term& a, const Term& b) { return grlex_greater(a.exp, b.exp); });
  for (auto& t : terms) {
    if (!p.terms_.empty() && p.terms_.back().exp == t.exp) {
      p.terms_.back().coeff += t.coeff;
    } else {
      p.terms_.push_back(std::move(t));
    }
  }
  p.prune();
  return p;
}

void Poly::prune() {
  std::erase_if(terms_, [](const Term& t) { return t.coeff.is_zero(); });
}

bool Poly::is_constant() const { return terms_.empty() || (terms_.size() == 1 && necklace::total_degree(terms_[0].exp) == 0); }

Scalar Poly::constant_term() const {
  if (!terms_.empty() && necklace::total_degree(terms_.back().exp) == 0) return terms_.back().coeff;
  return Scalar(0);
}

int Poly::total_degree() const { return terms_.empty() ? -1 : necklace::total_degree(terms_.front().exp); }

int Poly::degree_in(std::size_t var) const {
  int d = terms_.empty() ? -1 : 0;
  for (const auto& t : terms_) d = std::max<int>(d, t.exp[var]);
  return d;
}

Poly Poly::derivative(std::size_t var) const {
  std::vector<Term> out;
  for (const auto& t : terms_) {
    if (t.exp[var] == 0) continue;
    Term d{t.exp, t.coeff * Scalar(static_cast<long>(t.exp[var]))};
    d.exp[var] -= 1;
    out.push_back(std::move(d));
  }
  return from_terms(vars_, std::move(out));
}

Poly Poly::scaled(const Scalar& c) const {
  if (c.is_zero()) return Poly(vars_);
  Poly p = *this;
  for (auto& t : p.terms_) t.coeff *= c;
  return p;
}

Poly Poly::conj() const {
  Poly p = *this;
  for (auto& t : p.terms_) t.coeff = t.coeff.conj();
  return p;
}

Poly Poly::pow(unsigned k) const {
  Poly result = constant(vars_, Scalar(1));
  Poly base = *this;
  while (k > 0) {
    if (k & 1U) result = result * base;
    k >>= 1U;
    if (k > 0) base = base * base;
  }
  return result;
}

Poly Poly::with_vars(const VarsPtr& vars) const {
  if (vars == vars_) return *this;
  std::array<std::size_t, kMaxVars> map{};
  for (std::size_t i = 0; i < vars_->size(); ++i) {
    auto it = std::find(vars->begin(), vars->end(), (*vars_)[i]);
    if (it == vars->end()) {
      if (involves(i)) throw Error(ErrorCode::InvalidArgument, "variable '" + (*vars_)[i] + "' missing in target list");
      map[i] = kMaxVars;
    } else {
      map[i] = static_cast<std::size_t>(it - vars->begin());
    }
  }
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const auto& t : terms_) {
    Term n{Monomial{}, t.coeff};
    for (std::size_t i = 0; i < vars_->size(); ++i) {
      if (t.exp[i] != 0) n.exp[map[i]] = t.exp[i];
    }
    out.push_back(std::move(n));
  }
  return from_terms(vars, std::move(out));
}

std::pair<Poly, Poly> align(const Poly& a, const Poly& b) {
  if (a.vars_ == b.vars_) return {a, b};
  if (*a.vars_ == *b.vars_) {
    Poly bb = b;
    bb.vars_ = a.vars_;
    return {a, bb};
  }
  VarList merged = *a.vars_;
  for (std::size_t i = 0; i < b.vars_->size(); ++i) {
    const auto& name = (*b.vars_)[i];
    if (std::find(merged.begin(), merged.end(), name) == merged.end() && b.involves(i)) merged.push_back(name);
  }
  if (merged.size() == a.vars_->size()) return {a, b.with_vars(a.vars_)};
  if (merged.size() > kMaxVars) throw Error(ErrorCode::InvalidArgument, "too many variables after merge");
  VarsPtr vars = make_vars(std::move(merged));
  return {a.with_vars(vars), b.with_vars(vars)};
}

Poly Poly::operator-() const {
  Poly p = *this;
  for (auto& t : p.terms_) t.coeff = -t.coeff;
  return p;
}

namespace {

template <class Combine>
Poly merge_terms(const Poly& a, const Poly& b, Combine combine_b) {
  std::vector<Poly::Term> out;
  out.reserve(a.terms().size() + b.terms().size());
  auto ia = a.terms().begin(), ea = a.terms().end();
  auto ib = b.terms().begin(), eb = b.terms().end();
  while (ia != ea || ib != eb) {
    if (ib == eb || (ia != ea && grlex_greater(ia->exp, ib->exp))) {
      out.push_back(*ia++);
    } else if (ia == ea || grlex_greater(ib->exp, ia->exp)) {
      out.push_back({ib->exp, combine_b(Scalar(0), ib->coeff)});
      ++ib;
    } else {
      Scalar c = combine_b(ia->coeff, ib->coeff);
      if (!c.is_zero()) out.push_back({ia->exp, std::move(c)});
      ++ia;
      ++ib;
    }
  }
  return Poly::from_terms(a.vars(), std::move(out));
}

}  // namespace

Poly& Poly::operator+=(const Poly& o) {
  if (o.is_zero()) return *this;
  auto [a, b] = align(*this, o);
  *this = merge_terms(a, b, [](const Scalar& x, const Scalar& y) { return x + y; });
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  if (o.is_zero()) return *this;
  auto [a, b] = align(*this, o);
  *this = merge_terms(a, b, [](const Scalar& x, const Scalar& y) { return x - y; });
  return *this;
}

Poly operator*(const Poly& lhs, const Poly& rhs) {
  auto [a, b] = align(lhs, rhs);
  if (a.is_zero() || b.is_zero()) return Poly(a.vars());
  std::vector<Poly::Term> out;
  out.reserve(a.terms().size() * b.terms().size());
  for (const auto& s : a.terms()) {
    for (const auto& t : b.terms()) {
      Poly::Term p{s.exp, s.coeff * t.coeff};
      for (std::size_t i = 0; i < kMaxVars; ++i) p.exp[i] = static_cast<std::uint16_t>(p.exp[i] + t.exp[i]);
      out.push_back(std::move(p));
    }
  }
  return Poly::from_terms(a.vars(), std::move(out));
}

bool operator==(const Poly& lhs, const Poly& rhs) {
  auto [a, b] = align(lhs, rhs);
  if (a.terms().size() != b.terms().size()) return false;
  for (std::size_t i = 0; i < a.terms().size(); ++i) {
    if (a.terms()[i].exp != b.terms()[i].exp || a.terms()[i].coeff != b.terms()[i].coeff) return false;
  }
  return true;
}

Scalar Poly::eval(std::span<const Scalar> point) const {
  if (point.size() < nvars()) throw Error(ErrorCode::InvalidArgument, "evaluation point has too few coordinates");
  Scalar sum(0);
  for (const auto& t : terms_) {
    Scalar v = t.coeff;
    for (std::size_t i = 0; i < nvars(); ++i) {
      for (int k = 0; k < t.exp[i]; ++k) v *= point[i];
    }
    sum += v;
  }
  return sum;
}

std::complex<double> Poly::eval(std::span<const std::complex<double>> point) const {
  if (point.size() < nvars()) throw Error(ErrorCode::InvalidArgument, "evaluation point has too few coordinates");
  std::complex<double> sum = 0;
  for (const auto& t : terms_) {
    std::complex<double> v = t.coeff.to_complex();
    for (std::size_t i = 0; i < nvars(); ++i) {
      for (int k = 0; k < t.exp[i]; ++k) v *= point[i];
    }
    sum += v;
  }
  return sum;
}

std::complex<double> Poly::eval(std::span<const double> point) const {
  std::vector<std::complex<double>> z(point.begin(), point.end());
  return eval(std::span<const std::complex<double>>(z));
}

namespace {

// powers[i][k] = base_i^k for k <= max exponent of variable i in p.
std::vector<std::vector<Poly>> power_table(const Poly& p, std::span<const Poly> bases, const VarsPtr& vars) {
  std::vector<std::vector<Poly>> powers(p.nvars());
  for (std::size_t i = 0; i < p.nvars(); ++i) {
    int d = std::max(p.degree_in(i), 0);
    powers[i].push_back(Poly::constant(vars, Scalar(1)));
    for (int k = 1; k <= d; ++k) powers[i].push_back(powers[i].back() * bases[i]);
  }
  return powers;
}

}  // namespace

Poly Poly::compose_poly(std::span<const Poly> values) const {
  if (values.size() < nvars()) throw Error(ErrorCode::InvalidArgument, "compose: too few substitution values");
  VarsPtr vars = values.empty() ? vars_ : values[0].vars();
  auto powers = power_table(*this, values, vars);
  Poly sum(vars);
  for (const auto& t : terms_) {
    Poly term = constant(vars, t.coeff);
    for (std::size_t i = 0; i < nvars(); ++i) {
      if (t.exp[i] > 0) term = term * powers[i][t.exp[i]];
    }
    sum += term;
  }
  return sum;
}

RatFunc Poly::compose(std::span<const RatFunc> values) const {
  if (values.size() < nvars()) throw Error(ErrorCode::InvalidArgument, "compose: too few substitution values");
  std::vector<Poly> nums, dens;
  for (std::size_t i = 0; i < nvars(); ++i) {
    nums.push_back(values[i].num());
    dens.push_back(values[i].den());
  }
  VarsPtr vars = values.empty() ? vars_ : values[0].num().vars();
  // Bring everything over the common denominator prod_i den_i^maxdeg_i.
  auto num_pows = power_table(*this, nums, vars);
  auto den_pows = power_table(*this, dens, vars);
  Poly numerator(vars);
  Poly denominator = constant(vars, Scalar(1));
  for (std::size_t i = 0; i < nvars(); ++i) denominator = denominator * den_pows[i].back();
  for (const auto& t : terms_) {
    Poly term = constant(vars, t.coeff);
    for (std::size_t i = 0; i < nvars(); ++i) {
      int top = static_cast<int>(den_pows[i].size()) - 1;
      if (t.exp[i] > 0) term = term * num_pows[i][t.exp[i]];
      if (top - t.exp[i] > 0) term = term * den_pows[i][top - t.exp[i]];
    }
    numerator += term;
  }
  return RatFunc(numerator, denominator);
}

std::string Poly::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& t : terms_) {
    const Scalar& c = t.coeff;
    bool negative = c.is_real() ? sgn(c.re()) < 0 : (sgn(c.re()) == 0 && sgn(c.im()) < 0);
    Scalar mag = negative ? -c : c;
    std::string coeff = mag.pretty();
    if (!mag.is_real() && sgn(mag.re()) != 0) coeff = "(" + coeff + ")";
    bool has_vars = necklace::total_degree(t.exp) > 0;
    if (first) {
      if (negative) os << "-";
    } else {
      os << (negative ? " - " : " + ");
    }
    first = false;
    bool unit = mag.is_one();
    if (!unit || !has_vars) os << coeff;
    bool need_star = !unit;
    for (std::size_t i = 0; i < nvars(); ++i) {
      if (t.exp[i] == 0) continue;
      if (need_star) os << "*";
      os << (*vars_)[i];
      if (t.exp[i] > 1) os << "^" << t.exp[i];
      need_star = true;
    }
  }
  return os.str();
}

Poly monic(const Poly& p) {
  if (p.is_zero()) return p;
  const Scalar& lc = p.leading().coeff;
  if (lc.is_one()) return p;
  return p.scaled(lc.inverse());
}

std::optional<Poly> divide_exact(const Poly& num, const Poly& den) {
  if (den.is_zero()) throw Error(ErrorCode::ZeroDenominator, "division by the zero polynomial");
  auto [a, b] = align(num, den);
  Poly quotient(a.vars());
  if (a.is_zero()) return quotient;
  if (b.is_constant()) return a.scaled(b.leading().coeff.inverse());
  const auto& lt = b.leading();
  Scalar inv = lt.coeff.inverse();
  std::vector<Poly::Term> q;
  Poly r = a;
  while (!r.is_zero()) {
    const auto& rt = r.leading();
    Poly::Term step{Monomial{}, rt.coeff * inv};
    for (std::size_t i = 0; i < kMaxVars; ++i) {
      if (rt.exp[i] < lt.exp[i]) return std::nullopt;
      step.exp[i] = static_cast<std::uint16_t>(rt.exp[i] - lt.exp[i]);
    }
    Poly m = Poly::monomial(a.vars(), step.exp, step.coeff);
    q.push_back(step);
    r -= m * b;
  }
  return Poly::from_terms(a.vars(), std::move(q));
}

std::vector<Poly> coefficients_in(const Poly& p, std::size_t var) {
  int d = p.degree_in(var);
  std::vector<std::vector<Poly::Term>> buckets(static_cast<std::size_t>(std::max(d, 0)) + 1);
  for (const auto& t : p.terms()) {
    Poly::Term c = t;
    c.exp[var] = 0;
    buckets[t.exp[var]].push_back(std::move(c));
  }
  std::vector<Poly> out;
  out.reserve(buckets.size());
  for (auto& b : buckets) out.push_back(Poly::from_terms(p.vars(), std::move(b)));
  return out;
}

namespace {

Poly from_coefficients(const std::vector<Poly>& coeffs, std::size_t var, const VarsPtr& vars) {
  std::vector<Poly::Term> terms;
  for (std::size_t k = 0; k < coeffs.size(); ++k) {
    for (const auto& t : coeffs[k].terms()) {
      Poly::Term n = t;
      n.exp[var] = static_cast<std::uint16_t>(k);
      terms.push_back(std::move(n));
    }
  }
  return Poly::from_terms(vars, std::move(terms));
}

void trim(std::vector<Poly>& c) {
  while (!c.empty() && c.back().is_zero()) c.pop_back();
}

Poly gcd_impl(const Poly& a, const Poly& b);

Poly content_in(const Poly& p, std::size_t var) {
  Poly g(p.vars());
  for (const auto& c : coefficients_in(p, var)) {
    if (c.is_zero()) continue;
    g = gcd_impl(g, c);
    if (g.is_constant()) break;
  }
  return g;
}

Poly primitive_part(const Poly& p, std::size_t var) {
  Poly c = content_in(p, var);
  auto q = divide_exact(p, c);
  return monic(*q);
}

// Pseudo-remainder of a by b as polynomials in `var`.
Poly pseudo_remainder(const Poly& a, const Poly& b, std::size_t var) {
  std::vector<Poly> r = coefficients_in(a, var);
  std::vector<Poly> d = coefficients_in(b, var);
  trim(r);
  trim(d);
  const std::size_t db = d.size() - 1;
  const Poly& lc = d.back();
  while (!r.empty() && r.size() - 1 >= db) {
    std::size_t shift = r.size() - 1 - db;
    Poly lead = r.back();
    for (auto& c : r) c = c * lc;
    for (std::size_t k = 0; k <= db; ++k) r[k + shift] -= lead * d[k];
    trim(r);
  }
  return from_coefficients(r, var, a.vars());
}

Poly gcd_impl(const Poly& a, const Poly& b) {
  if (a.is_zero()) return monic(b);
  if (b.is_zero()) return monic(a);
  if (a.is_constant() || b.is_constant()) return Poly::constant(a.vars(), Scalar(1));
  std::size_t var = 0;
  while (var < a.nvars() && !a.involves(var) && !b.involves(var)) ++var;
  if (!a.involves(var)) return gcd_impl(a, content_in(b, var));
  if (!b.involves(var)) return gcd_impl(content_in(a, var), b);

  Poly ca = content_in(a, var);
  Poly cb = content_in(b, var);
  Poly g = gcd_impl(ca, cb);
  Poly pa = monic(*divide_exact(a, ca));
  Poly pb = monic(*divide_exact(b, cb));
  if (pa.degree_in(var) < pb.degree_in(var)) std::swap(pa, pb);
  for (;;) {
    Poly r = pseudo_remainder(pa, pb, var);
    if (r.is_zero()) break;
    if (r.degree_in(var) == 0) {
      pb = Poly::constant(a.vars(), Scalar(1));
      break;
    }
    pa = std::move(pb);
    pb = primitive_part(r, var);
  }
  return monic(g * pb);
}

}  // namespace

Poly gcd(const Poly& lhs, const Poly& rhs) {
  if (lhs.is_zero() && rhs.is_zero()) throw Error(ErrorCode::BothZero, "gcd of two zero polynomials");
  auto [a, b] = align(lhs, rhs);
  return gcd_impl(a, b);
}

}  // namespace necklace
