#include "p1/forms.hpp"

#include "p1/error.hpp"
#include "p1/linalg.hpp"

namespace p1 {

namespace {

using Poly = std::vector<Rational>;  // low degree first, no trailing zeros

void trim(Poly& p) {
  while (!p.empty() && sgn(p.back()) == 0) p.pop_back();
}

Poly dehomogenize(const BinaryForm& f) {
  Poly p = f.coeffs();
  trim(p);
  return p;
}

Poly derivative(const Poly& p) {
  Poly d;
  for (std::size_t k = 1; k < p.size(); ++k) d.push_back(p[k] * static_cast<unsigned long>(k));
  trim(d);
  return d;
}

Poly poly_mod(Poly a, const Poly& b) {
  while (a.size() >= b.size()) {
    const Rational f = a.back() / b.back();
    const std::size_t shift = a.size() - b.size();
    for (std::size_t i = 0; i < b.size(); ++i) a[i + shift] -= f * b[i];
    trim(a);
    if (a.empty()) break;
  }
  return a;
}

Poly poly_gcd(Poly a, Poly b) {
  while (!b.empty()) {
    Poly r = poly_mod(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

}  // namespace

Rational resultant(const BinaryForm& f, const BinaryForm& g) {
  const std::size_t m = f.degree(), n = g.degree();
  if (m == 0 || n == 0) throw PreconditionError("resultant: declared degrees must be at least 1");
  Matrix s(m + n, m + n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k <= m; ++k) s(i, i + k) = f[m - k];
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t k = 0; k <= n; ++k) s(n + i, i + k) = g[n - k];
  return determinant(s);
}

BinaryForm x_derivative(const BinaryForm& f) {
  if (f.degree() == 0) throw PreconditionError("x_derivative: degree must be at least 1");
  std::vector<Rational> c(f.degree());
  for (std::size_t k = 1; k <= f.degree(); ++k) c[k - 1] = f[k] * static_cast<unsigned long>(k);
  return BinaryForm(f.degree() - 1, std::move(c));
}

Rational discriminant(const BinaryForm& f) {
  const std::size_t d = f.degree();
  if (d < 2) throw PreconditionError("discriminant: degree must be at least 2");
  if (sgn(f[d]) == 0) throw PreconditionError("discriminant: leading coefficient vanishes");
  Rational r = resultant(f, x_derivative(f)) / f[d];
  if ((d * (d - 1) / 2) % 2 == 1) r = -r;
  return r;
}

BinaryForm depressed_quartic(const Rational& a, const Rational& b) { return BinaryForm(4, {b, a, 0, 0, 1}); }

DiscriminantFit quartic_discriminant_identity(std::size_t trials, std::uint64_t seed) {
  if (trials < 6) throw PreconditionError("quartic_discriminant_identity: at least 6 trials required");
  Rng rng(seed);
  DiscriminantFit fit;
  bool have_u = false;
  while (fit.samples < trials) {
    Rational a(Integer(rng.uniform(-20, 20)), Integer(rng.uniform(1, 9)));
    Rational b(Integer(rng.uniform(-20, 20)), Integer(rng.uniform(1, 9)));
    a.canonicalize();
    b.canonicalize();
    const Rational shape = 256 * b * b * b - 27 * a * a * a * a;
    if (sgn(shape) == 0) continue;
    Rational ratio = discriminant(depressed_quartic(a, b)) / shape;
    ratio.canonicalize();
    if (!have_u) {
      fit.u = ratio;
      have_u = true;
    } else if (ratio != fit.u) {
      throw Error("identity refuted");
    }
    ++fit.samples;
  }
  fit.verified = true;
  return fit;
}

std::size_t distinct_root_count(const BinaryForm& f) {
  if (f.is_zero()) throw PreconditionError("distinct_root_count: zero form");
  const Poly g = dehomogenize(f);
  const std::size_t deg_g = g.size() - 1;
  std::size_t count = deg_g - (poly_gcd(g, derivative(g)).size() - 1);
  // The coefficient of s^d vanishes exactly when t = 0 is a root.
  if (sgn(f[f.degree()]) == 0) ++count;
  return count;
}

BinaryForm random_form(std::size_t degree, Rng& rng, std::int64_t height) {
  std::vector<Rational> c(degree + 1);
  for (auto& x : c) x = Integer(rng.uniform(-height, height));
  return BinaryForm(degree, std::move(c));
}

BinaryForm critical_value_form(const BinaryForm& alpha, const BinaryForm& beta) {
  if (alpha.degree() != 3 || beta.degree() != 4)
    throw PreconditionError("critical_value_form: expected alpha of degree 3 and beta of degree 4");
  return Rational(256) * (beta * beta * beta) - Rational(27) * (alpha * alpha * alpha * alpha);
}

std::size_t point_condition_rank(std::size_t d1, std::size_t d2, const std::vector<std::pair<Point, Point>>& points) {
  for (std::size_t a = 0; a < points.size(); ++a) {
    const auto& [p, q] = points[a];
    if ((sgn(p.s) == 0 && sgn(p.t) == 0) || (sgn(q.s) == 0 && sgn(q.t) == 0))
      throw PreconditionError("point_condition_rank: (0,0) is not a point of P^1");
    for (std::size_t b = 0; b < a; ++b)
      if (same_point(p, points[b].first) && same_point(q, points[b].second))
        throw PreconditionError("point_condition_rank: repeated point");
  }
  Matrix m(points.size(), (d1 + 1) * (d2 + 1));
  for (std::size_t a = 0; a < points.size(); ++a)
    for (std::size_t i = 0; i <= d1; ++i)
      for (std::size_t j = 0; j <= d2; ++j)
        m(a, i * (d2 + 1) + j) = monomial_value(d1, i, points[a].first) * monomial_value(d2, j, points[a].second);
  return rank(m);
}

std::vector<std::pair<Point, Point>> random_point_pairs(std::size_t count, Rng& rng, std::int64_t height) {
  auto coord = [&] { return Rational(Integer(rng.uniform(-height, height))); };
  auto point = [&] {
    for (;;) {
      Point p{coord(), coord()};
      if (sgn(p.s) != 0 || sgn(p.t) != 0) return p;
    }
  };
  std::vector<std::pair<Point, Point>> pts;
  while (pts.size() < count) {
    Point a = point(), b = point();
    bool repeated = false;
    for (const auto& [c, e] : pts) repeated = repeated || (same_point(a, c) && same_point(b, e));
    if (!repeated) pts.emplace_back(std::move(a), std::move(b));
  }
  return pts;
}

}  // namespace p1
