#pragma once

// Seeded "general" morphisms used by the audits, and the resample protocol.
//
// Every general choice is drawn with random_general and then validated.
// A failed validation retries with seed + 1, up to kMaxResamples attempts,
// after which GenericityError("genericity not achieved") is raised.

#include <array>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "p1/error.hpp"
#include "p1/graded_map.hpp"

namespace p1 {

inline constexpr int kMaxResamples = 32;
inline constexpr std::int64_t kDefaultHeight = 10;

template <class T>
struct Sampled {
  T value;
  std::uint64_t seed_used;
};

/// Calls attempt(seed), attempt(seed + 1), ... until one returns a value.
template <class F>
auto resample(std::uint64_t seed, F&& attempt) -> Sampled<typename decltype(attempt(seed))::value_type> {
  for (int k = 0; k < kMaxResamples; ++k) {
    const std::uint64_t s = seed + static_cast<std::uint64_t>(k);
    if (auto v = attempt(s)) return {std::move(*v), s};
  }
  throw GenericityError("genericity not achieved");
}

/// supp tau = {0, 1, oo} as the points (0:1), (1:1), (1:0).
inline const std::array<Point, 3> kTauPoints = {Point{0, 1}, Point{1, 1}, Point{1, 0}};

/// `count` distinct points (a : b) off {0, 1, oo}, drawn from the seed.
std::vector<Point> off_tau_points(std::uint64_t seed, std::size_t count);

/// A general automorphism of a split bundle (determinant a nonzero constant).
Sampled<GradedMap> general_automorphism(const SplittingType& a, std::uint64_t seed,
                                        std::int64_t height = kDefaultHeight);

/// O(6) + O(5)^2 + O(4)^3 -> O(6) + O(5)^5: identity on O(6) + O(5)^2 and
/// diag(s, s - t, t) from O(4)^3 to the last three O(5).
GradedMap sharp_inclusion();

/// O(6)^3 + O(4)^2 + O(2) -> O(6)^3 + O(5) + O(4)^2: identity on O(6)^3 and
/// O(4)^2, multiplication by s t (s - t) from O(2) to O(5).
GradedMap flat_inclusion();

/// sigma2 = inclusion o (general automorphism of S^2 V1).
Sampled<GradedMap> sigma2_sharp(std::uint64_t seed, std::int64_t height = kDefaultHeight);
Sampled<GradedMap> sigma2_flat(std::uint64_t seed, std::int64_t height = kDefaultHeight);

/// S^2(sigma2) o c, with V1 read off from the source of sigma2.
GradedMap c_composite(const GradedMap& sigma2);

/// The composite O(8)^3 -> S^2 Wedge^2 V1 -> S^2 V2 -> O(8)^3 for the flat
/// data; null when sigma2 does not have that shape.
GradedMap flat_split_block(const GradedMap& sigma2);

/// True iff flat_split_block(sigma2) is an isomorphism.
bool flat_split_off(const GradedMap& sigma2);

/// Model of j = (-delta, 0, id) in S^2 V2(b) coordinates at a point b where
/// sigma2(b) has corank 1: a seeded element of S^2(im sigma2(b)) plus w^2 for
/// a coordinate vector w outside im sigma2(b).
std::vector<Rational> cd_model_j(const GradedMap& sigma2, const Point& b, std::uint64_t seed);

/// For ell: L -> S^2 V1, the composite of S^2 V1 (x) L -> S^4 V1 with the
/// projection to the summands of degree at most 8.
GradedMap conic_split_block(const SplittingType& v1, const GradedMap& ell);

/// General L = O(2) -> S^2 V1 with V1 = O(1) + O(3)^2 whose split-off block
/// is an isomorphism.
Sampled<GradedMap> general_conic(std::uint64_t seed, std::int64_t height = kDefaultHeight);

}  // namespace p1
