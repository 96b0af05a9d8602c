#include "p1/constructions.hpp"

#include "p1/random.hpp"

namespace p1 {

namespace {

BinaryForm constant(long c) { return BinaryForm(0, {Rational(c)}); }

std::vector<std::size_t> indices_with_degree_at_most(const SplittingType& a, const Integer& bound) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < a.rank(); ++i)
    if (a.degrees()[i] <= bound) out.push_back(i);
  return out;
}

std::vector<std::size_t> all_indices(const SplittingType& a) {
  std::vector<std::size_t> out(a.rank());
  for (std::size_t i = 0; i < a.rank(); ++i) out[i] = i;
  return out;
}

}  // namespace

std::vector<Point> off_tau_points(std::uint64_t seed, std::size_t count) {
  Rng rng(seed);
  std::vector<Point> pts;
  while (pts.size() < count) {
    Point p{Rational(Integer(rng.uniform(-100, 100))), Rational(Integer(rng.uniform(1, 100)))};
    p.s.canonicalize();
    p.t.canonicalize();
    bool clash = false;
    for (const auto& q : kTauPoints) clash = clash || same_point(p, q);
    for (const auto& q : pts) clash = clash || same_point(p, q);
    if (!clash) pts.push_back(p);
  }
  return pts;
}

Sampled<GradedMap> general_automorphism(const SplittingType& a, std::uint64_t seed, std::int64_t height) {
  return resample(seed, [&](std::uint64_t s) -> std::optional<GradedMap> {
    GradedMap g = random_general(a, a, s, height);
    // det g has degree 0, so full rank at one point means full rank everywhere.
    if (rank_at_point(g, Point{1, 1}) != a.rank()) return std::nullopt;
    return g;
  });
}

GradedMap sharp_inclusion() {
  GradedMap m(SplittingType{6, 5, 5, 4, 4, 4}, SplittingType{6, 5, 5, 5, 5, 5});
  for (std::size_t i = 0; i < 3; ++i) m.set_entry(i, i, constant(1));
  m.set_entry(3, 3, BinaryForm(1, {0, 1}));   // s
  m.set_entry(4, 4, BinaryForm(1, {-1, 1}));  // s - t
  m.set_entry(5, 5, BinaryForm(1, {1, 0}));   // t
  return m;
}

GradedMap flat_inclusion() {
  GradedMap m(SplittingType{6, 6, 6, 4, 4, 2}, SplittingType{6, 6, 6, 5, 4, 4});
  for (std::size_t i = 0; i < 3; ++i) m.set_entry(i, i, constant(1));
  m.set_entry(4, 3, constant(1));
  m.set_entry(5, 4, constant(1));
  m.set_entry(3, 5, BinaryForm(3, {0, -1, 1, 0}));  // s^2 t - s t^2
  return m;
}

Sampled<GradedMap> sigma2_sharp(std::uint64_t seed, std::int64_t height) {
  auto g = general_automorphism(SplittingType{6, 5, 5, 4, 4, 4}, seed, height);
  return {compose(sharp_inclusion(), g.value), g.seed_used};
}

Sampled<GradedMap> sigma2_flat(std::uint64_t seed, std::int64_t height) {
  auto g = general_automorphism(SplittingType{6, 6, 6, 4, 4, 2}, seed, height);
  return {compose(flat_inclusion(), g.value), g.seed_used};
}

GradedMap c_composite(const GradedMap& sigma2) {
  return compose(sym2_map(sigma2), c_map(sym2_root_rank3(sigma2.source())));
}

GradedMap flat_split_block(const GradedMap& sigma2) {
  const GradedMap comp = c_composite(sigma2);
  return restrict_map(comp, indices_with_degree_at_most(comp.target(), 8),
                      indices_with_degree_at_most(comp.source(), 8));
}

bool flat_split_off(const GradedMap& sigma2) {
  const GradedMap block = flat_split_block(sigma2);
  if (block.rows() != 3 || block.cols() != 3) return false;
  return rank_at_point(block, Point{1, 1}) == 3;
}

std::vector<Rational> cd_model_j(const GradedMap& sigma2, const Point& b, std::uint64_t seed) {
  const Matrix s = evaluate(sigma2, b);
  const std::size_t r2 = sigma2.rows();
  std::vector<std::vector<Rational>> image;
  for (std::size_t c = 0; c < s.cols(); ++c) image.push_back(s.column(c));
  const std::size_t h = span_rank(image, r2);
  if (h + 1 != r2) throw PreconditionError("cd_model_j: sigma2 must have corank 1 at b");

  std::vector<Rational> w(r2);
  for (std::size_t k = 0; k < r2; ++k) {
    std::vector<Rational> e(r2);
    e[k] = 1;
    auto probe = image;
    probe.push_back(e);
    if (span_rank(probe, r2) > h) {
      w = e;
      break;
    }
  }

  const SymBasis T = sym_basis(2, sigma2.target());
  std::vector<Rational> j = sym2_product(T, w, w);
  Rng rng(seed);
  for (std::size_t a = 0; a < image.size(); ++a)
    for (std::size_t c = a; c < image.size(); ++c) {
      const Rational coef = Integer(rng.uniform(-10, 10));
      if (sgn(coef) == 0) continue;
      const auto prod = sym2_product(T, image[a], image[c]);
      for (std::size_t k = 0; k < j.size(); ++k) j[k] += coef * prod[k];
    }
  return j;
}

GradedMap conic_split_block(const SplittingType& v1, const GradedMap& ell) {
  const GradedMap mult = multiplication_map(v1, 2, ell);
  return restrict_map(mult, indices_with_degree_at_most(mult.target(), 8), all_indices(mult.source()));
}

Sampled<GradedMap> general_conic(std::uint64_t seed, std::int64_t height) {
  const SplittingType v1{1, 3, 3};
  const SplittingType s2 = sym(2, v1);
  return resample(seed, [&](std::uint64_t s) -> std::optional<GradedMap> {
    GradedMap ell = random_general(SplittingType{2}, s2, s, height);
    const GradedMap block = conic_split_block(v1, ell);
    if (block.rows() != block.cols() || rank_at_point(block, Point{1, 1}) != block.rows()) return std::nullopt;
    return ell;
  });
}

}  // namespace p1
