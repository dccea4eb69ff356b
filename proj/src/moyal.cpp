#include "altham/moyal.hpp"

#include <cctype>
#include <cmath>
#include <cstdio>
#include <sstream>

namespace altham::moyal {

PhasePolyD to_numeric(const PhasePolyQ& p) {
  PhasePolyD out(p.labels());
  for (const auto& [m, c] : p.terms())
    out.add_term(m, CoeffOps<RatComplex>::to_complex(c));
  return out;
}

ClassicalLimitReport classical_limit_check(const PhasePolyQ& f,
                                           const PhasePolyQ& g) {
  ClassicalLimitReport rep;
  rep.poisson = poisson_bracket(f, g);

  const PhasePolyQ comm = star_commutator(f, g);
  // (1/i hbar) [f, g]*: every commutator term carries hbar grade >= 1.
  PhasePolyQ scaled(f.labels());
  for (const auto& [m, c] : comm.terms()) {
    if (m.h < 1)
      throw std::logic_error("star commutator produced an hbar-free term");
    // 1/i = -i
    scaled.add_term({m.i, m.j, m.h - 1}, -CoeffOps<RatComplex>::times_i(c));
  }
  rep.limit = scaled.hbar_component(0);
  rep.difference = rep.limit - rep.poisson;
  rep.matches = rep.difference.is_zero();

  rep.first_correction_order = 0;
  const int max_grade = [&] {
    int d = 0;
    for (const auto& [m, c] : scaled.terms()) d = std::max(d, m.h);
    return d;
  }();
  for (int h = 1; h <= max_grade; ++h) {
    PhasePolyQ comp = scaled.hbar_component(h);
    if (!comp.is_zero()) {
      rep.first_correction_order = h;
      rep.first_correction = comp;
      break;
    }
  }
  return rep;
}

DerivationReport derivation_check(const PhasePolyQ& h, const PhasePolyQ& f,
                                  const PhasePolyQ& g) {
  DerivationReport rep;
  if (h.total_degree() > 2) {
    rep.degree_ok = false;
    rep.message = "H has total degree " + std::to_string(h.total_degree()) +
                  " > 2: the star product does not admit this flow as a "
                  "derivation";
    auto gamma = [&](const PhasePolyQ& x) { return poisson_bracket(x, h); };
    rep.residual = gamma(f * g) - gamma(f) * g - f * gamma(g);
    rep.zero = rep.residual.is_zero();
    return rep;
  }
  rep.degree_ok = true;
  auto gamma = [&](const PhasePolyQ& x) { return poisson_bracket(x, h); };
  rep.residual = gamma(star(f, g)) - star(gamma(f), g) - star(f, gamma(g));
  rep.zero = rep.residual.is_zero();
  if (!rep.zero) rep.message = "derivation residual is nonzero";
  return rep;
}

namespace {

// (1/i hbar)(f * H - H * f) with the hbar grade shifted down once; exact
// polynomial for any H, hbar-free whenever H is quadratic.
PhasePolyD star_derivation(const PhasePolyD& h, const PhasePolyD& f) {
  const PhasePolyD comm = star(f, h) - star(h, f);
  PhasePolyD out(f.labels());
  for (const auto& [m, c] : comm.terms()) {
    if (m.h < 1)
      throw std::logic_error("star commutator produced an hbar-free term");
    out.add_term({m.i, m.j, m.h - 1}, -CoeffOps<Complex>::times_i(c));
  }
  return out;
}

}  // namespace

PhasePolyD star_evolution_step(const PhasePolyD& h, const PhasePolyD& f,
                               double dt, int order) {
  if (h.total_degree() > 2)
    throw InvalidInput("star_evolution_step: H must be quadratic");
  if (order < 0) throw InvalidInput("star_evolution_step: order must be >= 0");

  PhasePolyD result = f;
  PhasePolyD term = f;
  double factor = 1.0;
  for (int k = 1; k <= order; ++k) {
    term = star_derivation(h, term);
    factor *= dt / static_cast<double>(k);
    result = result + Complex(factor, 0.0) * term;
    if (term.is_zero()) break;
  }
  return result;
}

StarProduct alternative_product(const VarLabels& labels) {
  const VarLabels qp{"q", "p"};
  const VarLabels QP{"Q", "P"};
  if (!(labels == qp) && !(labels == QP))
    throw InvalidInput("alternative_product: supported label sets are (q,p) "
                       "and (Q,P)");
  return StarProduct(labels);
}

namespace {

struct Lexer {
  const std::string& text;
  std::size_t pos = 0;

  void skip_ws() {
    while (pos < text.size() &&
           (std::isspace(static_cast<unsigned char>(text[pos])) ||
            text[pos] == '*'))
      ++pos;
  }
  bool done() {
    skip_ws();
    return pos >= text.size();
  }
  char peek() {
    skip_ws();
    return pos < text.size() ? text[pos] : '\0';
  }
  bool consume(char c) {
    skip_ws();
    if (pos < text.size() && text[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }
};

bool is_number_start(char c) {
  return std::isdigit(static_cast<unsigned char>(c)) || c == '.';
}

// Exact decimal -> rational: "-1.25e-2" = -125/10000 * 10^0 etc.
Rational rational_from_decimal(Lexer& lex) {
  lex.skip_ws();
  std::size_t start = lex.pos;
  const std::string& s = lex.text;
  auto take_digits = [&] {
    while (lex.pos < s.size() &&
           std::isdigit(static_cast<unsigned char>(s[lex.pos])))
      ++lex.pos;
  };
  if (lex.pos < s.size() && (s[lex.pos] == '+' || s[lex.pos] == '-')) ++lex.pos;
  take_digits();
  BigInt numerator = 0;
  BigInt denominator = 1;
  bool any_digit = false;
  bool negative = false;
  std::size_t i = start;
  if (s[i] == '+' || s[i] == '-') {
    negative = (s[i] == '-');
    ++i;
  }
  for (; i < lex.pos; ++i) {
    numerator = numerator * 10 + (s[i] - '0');
    any_digit = true;
  }
  if (lex.pos < s.size() && s[lex.pos] == '.') {
    ++lex.pos;
    std::size_t frac_start = lex.pos;
    take_digits();
    for (i = frac_start; i < lex.pos; ++i) {
      numerator = numerator * 10 + (s[i] - '0');
      denominator *= 10;
      any_digit = true;
    }
  }
  if (!any_digit)
    throw InvalidInput("polynomial: expected a number at position " +
                       std::to_string(start));
  if (lex.pos < s.size() && (s[lex.pos] == 'e' || s[lex.pos] == 'E')) {
    ++lex.pos;
    bool exp_neg = false;
    if (lex.pos < s.size() && (s[lex.pos] == '+' || s[lex.pos] == '-')) {
      exp_neg = (s[lex.pos] == '-');
      ++lex.pos;
    }
    std::size_t e_start = lex.pos;
    take_digits();
    long exponent = 0;
    for (i = e_start; i < lex.pos; ++i) exponent = exponent * 10 + (s[i] - '0');
    BigInt p10 = 1;
    for (long k = 0; k < exponent; ++k) p10 *= 10;
    if (exp_neg)
      denominator *= p10;
    else
      numerator *= p10;
  }
  Rational r(numerator, denominator);
  return negative ? -r : r;
}

int parse_exponent(Lexer& lex) {
  if (!lex.consume('^')) return 1;
  lex.skip_ws();
  std::size_t start = lex.pos;
  while (lex.pos < lex.text.size() &&
         std::isdigit(static_cast<unsigned char>(lex.text[lex.pos])))
    ++lex.pos;
  if (lex.pos == start) throw InvalidInput("polynomial: expected an exponent");
  return std::stoi(lex.text.substr(start, lex.pos - start));
}

bool match_word(Lexer& lex, const std::string& word) {
  lex.skip_ws();
  if (lex.text.compare(lex.pos, word.size(), word) != 0) return false;
  const std::size_t after = lex.pos + word.size();
  if (after < lex.text.size() &&
      std::isalnum(static_cast<unsigned char>(lex.text[after])) &&
      lex.text[after] != '^')
    return false;
  lex.pos = after;
  return true;
}

}  // namespace

PhasePolyQ parse_poly(const std::string& text, const VarLabels& labels) {
  PhasePolyQ poly(labels);
  Lexer lex{text};
  bool first = true;
  while (!lex.done()) {
    Rational sign(1);
    if (lex.consume('-'))
      sign = Rational(-1);
    else if (!lex.consume('+') && !first)
      throw InvalidInput("polynomial: expected '+' or '-' between terms");
    first = false;

    RatComplex coeff{Rational(1), Rational(0)};
    bool have_coeff = false;
    if (lex.consume('(')) {
      Rational re = rational_from_decimal(lex);
      if (!lex.consume(','))
        throw InvalidInput("polynomial: expected ',' inside complex literal");
      Rational im = rational_from_decimal(lex);
      if (!lex.consume(')'))
        throw InvalidInput("polynomial: expected ')' after complex literal");
      coeff = RatComplex{re, im};
      have_coeff = true;
    } else if (is_number_start(lex.peek())) {
      coeff = RatComplex{rational_from_decimal(lex), Rational(0)};
      have_coeff = true;
    }

    Monomial mono;
    bool have_factor = false;
    for (;;) {
      if (match_word(lex, "hbar")) {
        mono.h += parse_exponent(lex);
        have_factor = true;
      } else if (match_word(lex, labels.v1)) {
        mono.i += parse_exponent(lex);
        have_factor = true;
      } else if (match_word(lex, labels.v2)) {
        mono.j += parse_exponent(lex);
        have_factor = true;
      } else {
        break;
      }
    }
    if (!have_coeff && !have_factor)
      throw InvalidInput("polynomial: empty term near position " +
                         std::to_string(lex.pos));
    coeff.re = coeff.re * sign;
    coeff.im = coeff.im * sign;
    poly.add_term(mono, coeff);
  }
  return poly;
}

namespace {

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

std::string format_rational(const Rational& r) {
  std::ostringstream os;
  os << r.numerator();
  if (r.denominator() != 1) os << "/" << r.denominator();
  return os.str();
}

template <class C, class FormatCoeff>
std::string format_impl(const PhasePoly<C>& p, FormatCoeff&& fmt) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : p.terms()) {
    if (!first) os << " + ";
    first = false;
    os << fmt(c);
    if (m.i > 0) {
      os << " " << p.labels().v1;
      if (m.i > 1) os << "^" << m.i;
    }
    if (m.j > 0) {
      os << " " << p.labels().v2;
      if (m.j > 1) os << "^" << m.j;
    }
    if (m.h > 0) {
      os << " hbar";
      if (m.h > 1) os << "^" << m.h;
    }
  }
  return os.str();
}

}  // namespace

std::string format_poly(const PhasePolyQ& p) {
  return format_impl(p, [](const RatComplex& c) {
    return "(" + format_rational(c.re) + "," + format_rational(c.im) + ")";
  });
}

std::string format_poly(const PhasePolyD& p) {
  return format_impl(p, [](const Complex& c) {
    return "(" + format_double(c.real()) + "," + format_double(c.imag()) + ")";
  });
}

}  // namespace altham::moyal
