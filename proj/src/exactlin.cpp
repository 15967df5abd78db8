#include "zinbiel/exactlin.hpp"

#include <cctype>
#include <numeric>
#include <set>
#include <sstream>

namespace zinbiel {

namespace {

bool all_digits(std::string_view s) {
  return !s.empty() &&
         std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c) != 0; });
}

Integer gcd(Integer a, Integer b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    Integer t = a % b;
    a = std::move(b);
    b = std::move(t);
  }
  return a;
}

Integer lcm(const Integer& a, const Integer& b) {
  if (a == 0 || b == 0) return Integer(0);
  Integer g = gcd(a, b);
  Integer l = (a / g) * b;
  return l < 0 ? Integer(-l) : l;
}

int total_degree(const std::vector<int>& e) { return std::accumulate(e.begin(), e.end(), 0); }

// Terms sorted leading-first.
std::vector<std::pair<std::vector<int>, Rational>> sorted_terms(const Poly& p) {
  std::vector<std::pair<std::vector<int>, Rational>> terms(p.terms().begin(), p.terms().end());
  std::sort(terms.begin(), terms.end(),
            [](const auto& a, const auto& b) { return graded_greater(a.first, b.first); });
  return terms;
}

bool poly_less(const Poly& a, const Poly& b) {
  const auto ta = sorted_terms(a);
  const auto tb = sorted_terms(b);
  for (std::size_t n = 0; n < std::min(ta.size(), tb.size()); ++n) {
    if (ta[n].first != tb[n].first) return graded_greater(ta[n].first, tb[n].first);
    if (ta[n].second != tb[n].second) return ta[n].second < tb[n].second;
  }
  return ta.size() < tb.size();
}

}  // namespace

Rational parse_rational(std::string_view text) {
  std::string_view s = text;
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  bool negative = false;
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  const auto slash = s.find('/');
  const std::string_view num = s.substr(0, slash);
  const std::string_view den = slash == std::string_view::npos ? std::string_view("1") : s.substr(slash + 1);
  if (!all_digits(num) || !all_digits(den))
    throw InputError("malformed rational literal '" + std::string(text) + "'");
  Integer n{std::string(num)};
  Integer d{std::string(den)};
  if (d == 0) throw InputError("zero denominator in rational literal '" + std::string(text) + "'");
  if (negative) n = -n;
  return Rational(n, d);
}

std::string to_string(const Rational& q) { return q.str(); }

Vector clear_denominators(const Vector& v) {
  Integer common(1);
  for (Index i = 0; i < v.size(); ++i) common = lcm(common, boost::multiprecision::denominator(v(i)));
  Integer content(0);
  for (Index i = 0; i < v.size(); ++i) {
    const Rational scaled = v(i) * Rational(common);
    content = gcd(content, boost::multiprecision::numerator(scaled));
  }
  if (content == 0) return v;
  return v * Rational(common, content);
}

std::vector<Vector> nullspace(const Matrix& m) {
  std::vector<Vector> basis = kernel_basis<Rational>(m);
  for (auto& v : basis) v = clear_denominators(v);
  return basis;
}

bool graded_greater(const std::vector<int>& a, const std::vector<int>& b) {
  const int da = total_degree(a);
  const int db = total_degree(b);
  if (da != db) return da > db;
  return a > b;
}

Poly normalized(const Poly& p) {
  if (p.is_zero()) return p;
  Integer common(1);
  for (const auto& [e, c] : p.terms()) common = lcm(common, boost::multiprecision::denominator(c));
  Integer content(0);
  for (const auto& [e, c] : p.terms())
    content = gcd(content, boost::multiprecision::numerator(c * Rational(common)));
  Rational scale(common, content);
  if (sorted_terms(p).front().second < 0) scale = -scale;
  return p * scale;
}

std::string to_string(const Poly& p) {
  if (p.is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [e, c] : sorted_terms(p)) {
    const bool negative = c < 0;
    const Rational magnitude = negative ? Rational(-c) : c;
    if (first)
      out << (negative ? "-" : "");
    else
      out << (negative ? " - " : " + ");
    first = false;

    std::vector<std::string> factors;
    for (std::size_t v = 0; v < e.size(); ++v) {
      if (e[v] == 0) continue;
      factors.push_back(p.variables()[v] + (e[v] > 1 ? "^" + std::to_string(e[v]) : ""));
    }
    if (factors.empty() || magnitude != 1) factors.insert(factors.begin(), to_string(magnitude));
    for (std::size_t f = 0; f < factors.size(); ++f) out << (f ? "*" : "") << factors[f];
  }
  return out.str();
}

std::vector<std::string> indexed_names(std::string_view prefix, std::size_t n) {
  std::vector<std::string> names;
  names.reserve(n);
  for (std::size_t i = 1; i <= n; ++i) names.push_back(std::string(prefix) + std::to_string(i));
  return names;
}

std::vector<Poly> canonical_polynomial_set(std::vector<Poly> polys) {
  std::vector<Poly> out;
  for (auto& p : polys) {
    if (p.is_zero()) continue;
    Poly q = normalized(p);
    if (std::find(out.begin(), out.end(), q) == out.end()) out.push_back(std::move(q));
  }
  std::sort(out.begin(), out.end(), poly_less);
  return out;
}

std::vector<Poly> poly_expand_quadratic(std::span<const Matrix> family, const MatrixBilinearForm& form) {
  if (family.empty()) return {};
  const Index rows = family.front().rows();
  const Index cols = family.front().cols();
  for (const auto& b : family)
    if (b.rows() != rows || b.cols() != cols)
      throw ShapeError("poly_expand_quadratic: family members have different shapes");

  const auto vars = indexed_names("t", family.size());
  const std::size_t p = family.size();
  std::vector<Poly> entries;
  std::vector<std::vector<Matrix>> pairs(p, std::vector<Matrix>(p));
  for (std::size_t i = 0; i < p; ++i)
    for (std::size_t j = 0; j < p; ++j) pairs[i][j] = form(family[i], family[j]);

  const Index out_rows = pairs[0][0].rows();
  const Index out_cols = pairs[0][0].cols();
  for (Index r = 0; r < out_rows; ++r)
    for (Index c = 0; c < out_cols; ++c) {
      Poly poly(vars);
      for (std::size_t i = 0; i < p; ++i)
        for (std::size_t j = 0; j < p; ++j) {
          std::vector<int> e(p, 0);
          ++e[i];
          ++e[j];
          poly.add_term(std::move(e), pairs[i][j](r, c));
        }
      entries.push_back(std::move(poly));
    }
  return canonical_polynomial_set(std::move(entries));
}

std::vector<Poly> poly_expand_quadratic(std::span<const Matrix> family, QuadraticConstraint constraint) {
  switch (constraint) {
    case QuadraticConstraint::SquareIsZero:
      return poly_expand_quadratic(family, [](const Matrix& a, const Matrix& b) -> Matrix {
        if (a.cols() != b.rows()) throw ShapeError("square-is-zero needs square matrices");
        return a * b;
      });
  }
  throw std::logic_error("unhandled quadratic constraint");
}

}  // namespace zinbiel
