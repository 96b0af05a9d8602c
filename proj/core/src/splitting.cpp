#include "p1/splitting.hpp"

#include <algorithm>
#include <functional>
#include <ostream>

#include "p1/error.hpp"

namespace p1 {

namespace {

void canonicalize(std::vector<Integer>& v) { std::sort(v.begin(), v.end(), std::greater<>()); }

void check_materializable(const Integer& rank, const char* op) {
  if (rank > Integer(static_cast<unsigned long>(kMaxMaterializedRank)))
    throw Error(std::string(op) + ": result rank " + rank.get_str() + " exceeds materialization limit");
}

// Appends the sums over all size-n index multisets (repeat = true) or
// subsets (repeat = false) of `degrees` to `out`.
void enumerate_sums(const std::vector<Integer>& degrees, std::size_t n, bool repeat,
                    std::vector<Integer>& out) {
  const std::size_t r = degrees.size();
  std::function<void(std::size_t, std::size_t, const Integer&)> rec =
      [&](std::size_t depth, std::size_t start, const Integer& acc) {
        if (depth == n) {
          out.push_back(acc);
          return;
        }
        for (std::size_t i = start; i < r; ++i) {
          rec(depth + 1, repeat ? i : i + 1, acc + degrees[i]);
        }
      };
  rec(0, 0, Integer(0));
}

}  // namespace

SplittingType::SplittingType(std::vector<Integer> degrees) : degrees_(std::move(degrees)) {
  canonicalize(degrees_);
}

SplittingType::SplittingType(std::initializer_list<long> degrees) {
  degrees_.reserve(degrees.size());
  for (long d : degrees) degrees_.emplace_back(d);
  canonicalize(degrees_);
}

SplittingType SplittingType::repeated(const Integer& d, std::size_t multiplicity) {
  return SplittingType(std::vector<Integer>(multiplicity, d));
}

Integer SplittingType::degree() const {
  Integer s = 0;
  for (const auto& d : degrees_) s += d;
  return s;
}

const Integer& SplittingType::max_degree() const {
  if (degrees_.empty()) throw PreconditionError("max_degree of the zero bundle");
  return degrees_.front();
}

const Integer& SplittingType::min_degree() const {
  if (degrees_.empty()) throw PreconditionError("min_degree of the zero bundle");
  return degrees_.back();
}

SheafSummary::SheafSummary(SplittingType bundle, Integer torsion_length)
    : bundle_(std::move(bundle)), torsion_length_(std::move(torsion_length)) {
  if (sgn(torsion_length_) < 0) throw PreconditionError("torsion length must be nonnegative");
}

SplittingType direct_sum(const SplittingType& a, const SplittingType& b) {
  std::vector<Integer> v = a.degrees();
  v.insert(v.end(), b.degrees().begin(), b.degrees().end());
  return SplittingType(std::move(v));
}

SplittingType tensor(const SplittingType& a, const SplittingType& b) {
  check_materializable(Integer(static_cast<unsigned long>(a.rank())) * static_cast<unsigned long>(b.rank()),
                       "tensor");
  std::vector<Integer> v;
  v.reserve(a.rank() * b.rank());
  for (const auto& x : a.degrees())
    for (const auto& y : b.degrees()) v.push_back(x + y);
  return SplittingType(std::move(v));
}

SplittingType dual(const SplittingType& a) {
  std::vector<Integer> v;
  v.reserve(a.rank());
  for (const auto& x : a.degrees()) v.push_back(-x);
  return SplittingType(std::move(v));
}

SplittingType twist(const SplittingType& a, const Integer& d) {
  std::vector<Integer> v;
  v.reserve(a.rank());
  for (const auto& x : a.degrees()) v.push_back(x + d);
  return SplittingType(std::move(v));
}

SplittingType sym(std::size_t n, const SplittingType& a) {
  if (n == 0) return SplittingType{0};
  if (a.empty()) return {};
  const auto r = static_cast<long>(a.rank());
  check_materializable(binomial(r + static_cast<long>(n) - 1, static_cast<long>(n)), "sym");
  std::vector<Integer> v;
  enumerate_sums(a.degrees(), n, true, v);
  return SplittingType(std::move(v));
}

SplittingType wedge(std::size_t k, const SplittingType& a) {
  if (k == 0) return SplittingType{0};
  if (k > a.rank()) return {};
  check_materializable(binomial(static_cast<long>(a.rank()), static_cast<long>(k)), "wedge");
  std::vector<Integer> v;
  enumerate_sums(a.degrees(), k, false, v);
  return SplittingType(std::move(v));
}

SplittingType det(const SplittingType& a) { return SplittingType::line(a.degree()); }

Integer h0(const SplittingType& a) {
  Integer s = 0;
  for (const auto& d : a.degrees())
    if (d >= -1) s += d + 1;
  return s;
}

Integer h1(const SplittingType& a) {
  Integer s = 0;
  for (const auto& d : a.degrees())
    if (d <= -2) s += -d - 1;
  return s;
}

Integer chi(const SplittingType& a) {
  return a.degree() + static_cast<unsigned long>(a.rank());
}

Integer h0(const SheafSummary& s) { return h0(s.bundle()) + s.torsion_length(); }
Integer h1(const SheafSummary& s) { return h1(s.bundle()); }
Integer chi(const SheafSummary& s) { return chi(s.bundle()) + s.torsion_length(); }

Integer hom_dim(const SplittingType& a, const SplittingType& b) { return h0(tensor(dual(a), b)); }

Integer aut_dim(const SplittingType& a) {
  if (a.empty()) throw PreconditionError("aut_dim: the zero bundle has no automorphism group");
  return hom_dim(a, a);
}

Integer rel_aut_dim(const SplittingType& a) {
  if (a.empty()) throw PreconditionError("rel_aut_dim: the zero bundle has no projectivization");
  return aut_dim(a) - 1;
}

Integer ext1_from_torsion(const Integer& tau_degree, const SplittingType& e) {
  if (sgn(tau_degree) <= 0) throw PreconditionError("ext1_from_torsion: tau degree must be positive");
  const SplittingType shifted = twist(e, tau_degree);
  if (sgn(h1(e)) != 0 || sgn(h1(shifted)) != 0)
    throw PreconditionError("ext1_from_torsion: long-exact-sequence regime not satisfied");
  Integer via_sequence = h0(shifted) - h0(e);
  Integer local = tau_degree * static_cast<unsigned long>(e.rank());
  if (via_sequence != local)
    throw InternalError("ext1_from_torsion: long exact sequence and local count disagree");
  return via_sequence;
}

std::string to_string(const SplittingType& a) {
  std::string s = "[";
  for (std::size_t i = 0; i < a.rank(); ++i) {
    if (i) s += ",";
    s += a.degrees()[i].get_str();
  }
  return s + "]";
}

std::ostream& operator<<(std::ostream& os, const SplittingType& a) { return os << to_string(a); }

std::ostream& operator<<(std::ostream& os, const SheafSummary& s) {
  os << s.bundle();
  if (!s.torsion_free()) os << "+T(" << s.torsion_length().get_str() << ")";
  return os;
}

}  // namespace p1
