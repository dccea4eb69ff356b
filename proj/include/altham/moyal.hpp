#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <boost/rational.hpp>

#include <algorithm>
#include <compare>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>

#include "altham/core.hpp"

namespace altham::moyal {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::rational<BigInt>;

class LabelMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class DegreeOverflow : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

inline constexpr int kMaxDegree = 16;  // per variable; factorial term growth

/// Exact complex number over the rationals.
struct RatComplex {
  Rational re{0};
  Rational im{0};

  RatComplex() = default;
  RatComplex(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}

  friend RatComplex operator+(const RatComplex& a, const RatComplex& b) {
    return {a.re + b.re, a.im + b.im};
  }
  friend RatComplex operator-(const RatComplex& a, const RatComplex& b) {
    return {a.re - b.re, a.im - b.im};
  }
  friend RatComplex operator*(const RatComplex& a, const RatComplex& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  RatComplex operator-() const { return {-re, -im}; }
  bool operator==(const RatComplex&) const = default;
};

template <class C>
struct CoeffOps;

template <>
struct CoeffOps<RatComplex> {
  static RatComplex zero() { return {}; }
  static RatComplex from_int(long v) { return {Rational(BigInt(v)), Rational(0)}; }
  static RatComplex times_i(const RatComplex& c) { return {-c.im, c.re}; }
  static RatComplex div_int(const RatComplex& c, long v) {
    const Rational d{BigInt(1), BigInt(v)};
    return {c.re * d, c.im * d};
  }
  static RatComplex mul_int(const RatComplex& c, long v) {
    const Rational d{BigInt(v)};
    return {c.re * d, c.im * d};
  }
  static RatComplex conj(const RatComplex& c) { return {c.re, -c.im}; }
  static bool is_zero(const RatComplex& c) {
    return c.re == Rational(0) && c.im == Rational(0);
  }
  static Complex to_complex(const RatComplex& c) {
    return {boost::rational_cast<double>(c.re), boost::rational_cast<double>(c.im)};
  }
};

template <>
struct CoeffOps<Complex> {
  static Complex zero() { return {0.0, 0.0}; }
  static Complex from_int(long v) { return {static_cast<double>(v), 0.0}; }
  static Complex times_i(const Complex& c) { return c * Complex(0.0, 1.0); }
  static Complex div_int(const Complex& c, long v) { return c / static_cast<double>(v); }
  static Complex mul_int(const Complex& c, long v) { return c * static_cast<double>(v); }
  static Complex conj(const Complex& c) { return std::conj(c); }
  static bool is_zero(const Complex& c) { return c == Complex(0.0, 0.0); }
  static Complex to_complex(const Complex& c) { return c; }
};

/// Exponents of the two phase-space variables and of hbar.
struct Monomial {
  int i = 0;
  int j = 0;
  int h = 0;
  auto operator<=>(const Monomial&) const = default;
};

struct VarLabels {
  std::string v1 = "q";
  std::string v2 = "p";
  bool operator==(const VarLabels&) const = default;
};

/// Polynomial observable in two formal phase-space variables with an
/// hbar grading. Immutable value type; zero coefficients are never stored.
template <class C>
class PhasePoly {
 public:
  using Ops = CoeffOps<C>;
  using TermMap = std::map<Monomial, C>;

  PhasePoly() = default;
  explicit PhasePoly(VarLabels labels) : labels_(std::move(labels)) {}

  static PhasePoly constant(C value, VarLabels labels = {}) {
    PhasePoly p(std::move(labels));
    p.add_term({0, 0, 0}, std::move(value));
    return p;
  }
  static PhasePoly var1(VarLabels labels = {}) {
    PhasePoly p(std::move(labels));
    p.add_term({1, 0, 0}, Ops::from_int(1));
    return p;
  }
  static PhasePoly var2(VarLabels labels = {}) {
    PhasePoly p(std::move(labels));
    p.add_term({0, 1, 0}, Ops::from_int(1));
    return p;
  }

  const VarLabels& labels() const { return labels_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  void add_term(const Monomial& m, C coeff) {
    if (m.i > kMaxDegree || m.j > kMaxDegree)
      throw DegreeOverflow("phase polynomial degree exceeds " +
                           std::to_string(kMaxDegree) + " in one variable");
    auto it = terms_.find(m);
    if (it == terms_.end()) {
      if (!Ops::is_zero(coeff)) terms_.emplace(m, std::move(coeff));
      return;
    }
    it->second = it->second + coeff;
    if (Ops::is_zero(it->second)) terms_.erase(it);
  }

  int degree1() const {
    int d = 0;
    for (const auto& [m, c] : terms_) d = std::max(d, m.i);
    return d;
  }
  int degree2() const {
    int d = 0;
    for (const auto& [m, c] : terms_) d = std::max(d, m.j);
    return d;
  }
  int total_degree() const {
    int d = 0;
    for (const auto& [m, c] : terms_) d = std::max(d, m.i + m.j);
    return d;
  }
  int hbar_degree_min() const {
    int d = -1;
    for (const auto& [m, c] : terms_) d = (d < 0) ? m.h : std::min(d, m.h);
    return d;  // -1 for the zero polynomial
  }

  /// Partial derivative; var is 1 or 2.
  PhasePoly derivative(int var) const {
    PhasePoly out(labels_);
    for (const auto& [m, c] : terms_) {
      if (var == 1 && m.i > 0)
        out.add_term({m.i - 1, m.j, m.h}, Ops::mul_int(c, m.i));
      else if (var == 2 && m.j > 0)
        out.add_term({m.i, m.j - 1, m.h}, Ops::mul_int(c, m.j));
    }
    return out;
  }

  /// Multiplies by hbar^k (k may be negative; throws if a term would drop
  /// below grade zero).
  PhasePoly shift_hbar(int k) const {
    PhasePoly out(labels_);
    for (const auto& [m, c] : terms_) {
      if (m.h + k < 0)
        throw std::domain_error("hbar grade would become negative");
      out.add_term({m.i, m.j, m.h + k}, c);
    }
    return out;
  }

  /// Keeps only the terms of hbar grade h.
  PhasePoly hbar_component(int h) const {
    PhasePoly out(labels_);
    for (const auto& [m, c] : terms_)
      if (m.h == h) out.add_term({m.i, m.j, 0}, c);
    return out;
  }

  /// Substitutes a numeric value for hbar (RatComplex polys take a Rational).
  PhasePoly substitute_hbar(const C& value) const {
    PhasePoly out(labels_);
    for (const auto& [m, c] : terms_) {
      C scale = Ops::from_int(1);
      for (int k = 0; k < m.h; ++k) scale = scale * value;
      out.add_term({m.i, m.j, 0}, c * scale);
    }
    return out;
  }

  PhasePoly conjugate() const {
    PhasePoly out(labels_);
    for (const auto& [m, c] : terms_) out.add_term(m, Ops::conj(c));
    return out;
  }

  friend PhasePoly operator+(const PhasePoly& a, const PhasePoly& b) {
    check_labels(a, b);
    PhasePoly out = a;
    for (const auto& [m, c] : b.terms_) out.add_term(m, c);
    return out;
  }
  friend PhasePoly operator-(const PhasePoly& a, const PhasePoly& b) {
    check_labels(a, b);
    PhasePoly out = a;
    for (const auto& [m, c] : b.terms_) out.add_term(m, -c);
    return out;
  }
  friend PhasePoly operator*(const PhasePoly& a, const PhasePoly& b) {
    check_labels(a, b);
    PhasePoly out(a.labels_);
    for (const auto& [ma, ca] : a.terms_)
      for (const auto& [mb, cb] : b.terms_)
        out.add_term({ma.i + mb.i, ma.j + mb.j, ma.h + mb.h}, ca * cb);
    return out;
  }
  PhasePoly operator-() const {
    PhasePoly out(labels_);
    for (const auto& [m, c] : terms_) out.add_term(m, -c);
    return out;
  }
  friend PhasePoly operator*(const C& s, const PhasePoly& p) {
    PhasePoly out(p.labels_);
    for (const auto& [m, c] : p.terms_) out.add_term(m, s * c);
    return out;
  }
  bool operator==(const PhasePoly& other) const {
    return labels_ == other.labels_ && terms_ == other.terms_;
  }

  static void check_labels(const PhasePoly& a, const PhasePoly& b) {
    if (!(a.labels_ == b.labels_))
      throw LabelMismatch("cannot combine observables from the (" +
                          a.labels_.v1 + "," + a.labels_.v2 + ") and (" +
                          b.labels_.v1 + "," + b.labels_.v2 + ") systems");
  }

 private:
  VarLabels labels_;
  TermMap terms_;
};

using PhasePolyQ = PhasePoly<RatComplex>;
using PhasePolyD = PhasePoly<Complex>;

PhasePolyD to_numeric(const PhasePolyQ& p);

namespace detail {
inline long binomial(int n, int k) {
  long r = 1;
  for (int t = 0; t < k; ++t) r = r * (n - t) / (t + 1);
  return r;
}
}  // namespace detail

/// Moyal star product with formal hbar:
///   f * g = sum_n (i hbar / 2)^n / n! sum_k (-1)^k C(n,k)
///           (d1^{n-k} d2^k f) (d2^{n-k} d1^k g).
/// The series terminates at n = min(total degrees).
template <class C>
PhasePoly<C> star(const PhasePoly<C>& f, const PhasePoly<C>& g) {
  PhasePoly<C>::check_labels(f, g);
  PhasePoly<C> out(f.labels());
  const int n_max = std::min(f.total_degree(), g.total_degree());

  // Cache the mixed partials d1^a d2^b of each factor.
  std::map<std::pair<int, int>, PhasePoly<C>> df, dg;
  df[{0, 0}] = f;
  dg[{0, 0}] = g;
  auto partial = [](std::map<std::pair<int, int>, PhasePoly<C>>& cache, int a,
                    int b) -> const PhasePoly<C>& {
    auto it = cache.find({a, b});
    if (it != cache.end()) return it->second;
    if (a > 0) {
      const auto& prev = cache.at({a - 1, b});
      return cache.emplace(std::make_pair(a, b), prev.derivative(1)).first->second;
    }
    const auto& prev = cache.at({a, b - 1});
    return cache.emplace(std::make_pair(a, b), prev.derivative(2)).first->second;
  };
  for (int a = 0; a <= n_max; ++a)
    for (int b = 0; a + b <= n_max; ++b) {
      if (a || b) {
        partial(df, a, b);
        partial(dg, a, b);
      }
    }

  using Ops = CoeffOps<C>;
  C prefactor = Ops::from_int(1);  // (i/2)^n / n!
  for (int n = 0; n <= n_max; ++n) {
    if (n > 0) {
      prefactor = Ops::div_int(Ops::times_i(prefactor), 2);
      prefactor = Ops::div_int(prefactor, n);
    }
    for (int k = 0; k <= n; ++k) {
      const auto& lhs = df.at({n - k, k});
      const auto& rhs = dg.at({k, n - k});
      if (lhs.is_zero() || rhs.is_zero()) continue;
      C coeff = Ops::mul_int(prefactor, detail::binomial(n, k));
      if (k % 2 == 1) coeff = -coeff;
      out = out + (coeff * (lhs * rhs)).shift_hbar(n);
    }
  }
  return out;
}

template <class C>
PhasePoly<C> star_commutator(const PhasePoly<C>& f, const PhasePoly<C>& g) {
  return star(f, g) - star(g, f);
}

/// d1 f d2 g - d2 f d1 g.
template <class C>
PhasePoly<C> poisson_bracket(const PhasePoly<C>& f, const PhasePoly<C>& g) {
  PhasePoly<C>::check_labels(f, g);
  return f.derivative(1) * g.derivative(2) - f.derivative(2) * g.derivative(1);
}

struct ClassicalLimitReport {
  PhasePolyQ limit;             // hbar -> 0 of (1/i hbar)[f, g]*
  PhasePolyQ poisson;
  PhasePolyQ difference;        // must be identically zero
  bool matches = false;
  int first_correction_order = 0;   // order in hbar^2 of the first correction; 0 = none
  PhasePolyQ first_correction;
};

ClassicalLimitReport classical_limit_check(const PhasePolyQ& f,
                                           const PhasePolyQ& g);

struct DerivationReport {
  bool degree_ok = false;       // H quadratic
  PhasePolyQ residual;          // Gamma(f*g) - (Gamma f)*g - f*(Gamma g)
  bool zero = false;
  std::string message;
};

/// Gamma f := {f, H}. Exact identity for quadratic H; rejects deg H > 2.
DerivationReport derivation_check(const PhasePolyQ& h, const PhasePolyQ& f,
                                  const PhasePolyQ& g);

/// Truncated exponential series of the star dynamics df/dt = (1/i hbar)
/// (f * f_H - f_H * f); exact rotation for the oscillator Hamiltonian.
PhasePolyD star_evolution_step(const PhasePolyD& h, const PhasePolyD& f,
                               double dt, int order);

/// Star-product handle bound to a coordinate system's labels; refuses
/// operands carrying other labels.
class StarProduct {
 public:
  explicit StarProduct(VarLabels labels) : labels_(std::move(labels)) {}

  const VarLabels& labels() const { return labels_; }

  template <class C>
  PhasePoly<C> operator()(const PhasePoly<C>& f, const PhasePoly<C>& g) const {
    if (!(f.labels() == labels_) || !(g.labels() == labels_))
      throw LabelMismatch("operand labels do not match this product's (" +
                          labels_.v1 + "," + labels_.v2 + ") system");
    return star(f, g);
  }

 private:
  VarLabels labels_;
};

/// The supported label sets are ("q","p") and ("Q","P").
StarProduct alternative_product(const VarLabels& labels);

/// Text format: sum of `c * q^i p^j [hbar^k]` terms, complex c as `(re,im)`.
/// Decimal literals parse exactly into rationals.
PhasePolyQ parse_poly(const std::string& text, const VarLabels& labels = {});
std::string format_poly(const PhasePolyQ& p);
std::string format_poly(const PhasePolyD& p);

}  // namespace altham::moyal
