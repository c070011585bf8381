#include "mirrorkit/klyachko.hpp"

#include <algorithm>
#include <limits>
#include <string>

namespace mirrorkit {

// ---------------------------------------------------------------- Subspace

Subspace Subspace::zero(Index ambient) { return Subspace(ambient, RatMatrix(0, ambient)); }

Subspace Subspace::full(Index ambient) {
  return Subspace(ambient, RatMatrix::Identity(ambient, ambient));
}

Subspace Subspace::span(const RatMatrix& rows) { return Subspace(rows.cols(), row_echelon_basis(rows)); }

Subspace Subspace::span(Index ambient, std::span<const RatVector> vectors) {
  RatMatrix rows(static_cast<Index>(vectors.size()), ambient);
  for (std::size_t i = 0; i < vectors.size(); ++i) {
    if (vectors[i].size() != ambient) throw DimensionError("spanning vector has wrong dimension");
    rows.row(static_cast<Index>(i)) = vectors[i].transpose();
  }
  return span(rows);
}

Subspace Subspace::kernel_of(const RatVector& functional) {
  const RatMatrix kernel = nullspace(RatMatrix(functional.transpose()));
  return span(RatMatrix(kernel.transpose()));
}

bool Subspace::contains(const RatVector& v) const {
  if (v.size() != ambient_) throw DimensionError("vector has wrong dimension");
  RatMatrix stacked(dim() + 1, ambient_);
  stacked.topRows(dim()) = basis_;
  stacked.row(dim()) = v.transpose();
  return rank(stacked) == dim();
}

bool Subspace::contains(const Subspace& other) const {
  if (other.ambient_ != ambient_) throw DimensionError("subspaces of different spaces");
  return (*this + other).dim() == dim();
}

Subspace operator+(const Subspace& a, const Subspace& b) {
  if (a.ambient_ != b.ambient_) throw DimensionError("subspaces of different spaces");
  RatMatrix stacked(a.dim() + b.dim(), a.ambient_);
  stacked.topRows(a.dim()) = a.basis_;
  stacked.bottomRows(b.dim()) = b.basis_;
  return Subspace::span(stacked);
}

Subspace intersect(const Subspace& a, const Subspace& b) {
  if (a.ambient_ != b.ambient_) throw DimensionError("subspaces of different spaces");
  if (a.dim() == 0 || b.dim() == 0) return Subspace::zero(a.ambient_);
  // sum_i x_i a_i = sum_j y_j b_j  <=>  [A^T | -B^T] (x, y) = 0.
  RatMatrix system(a.ambient_, a.dim() + b.dim());
  system.leftCols(a.dim()) = a.basis_.transpose();
  system.rightCols(b.dim()) = -b.basis_.transpose();
  const RatMatrix kernel = nullspace(system);
  const RatMatrix vectors = (a.basis_.transpose() * kernel.topRows(a.dim())).transpose();
  return Subspace::span(vectors);
}

Subspace direct_sum(const Subspace& a, const Subspace& b) {
  RatMatrix rows = RatMatrix::Zero(a.dim() + b.dim(), a.ambient_ + b.ambient_);
  rows.topLeftCorner(a.dim(), a.ambient_) = a.basis_;
  rows.bottomRightCorner(b.dim(), b.ambient_) = b.basis_;
  return Subspace::span(rows);
}

bool operator==(const Subspace& a, const Subspace& b) {
  if (a.ambient_ != b.ambient_ || a.dim() != b.dim()) return false;
  for (Index i = 0; i < a.dim(); ++i)
    for (Index j = 0; j < a.ambient_; ++j)
      if (a.basis_(i, j) != b.basis_(i, j)) return false;
  return true;
}

// -------------------------------------------------------------- Filtration

Filtration::Filtration(std::size_t ray, std::map<long, Subspace> levels) : ray_(ray), rank_(0) {
  if (levels.empty()) throw CompatibilityError("filtration of ray " + std::to_string(ray) + " has no levels");
  rank_ = levels.begin()->second.ambient();
  if (rank_ < 1) throw CompatibilityError("filtration on a zero-dimensional space");
  if (levels.begin()->second.dim() != rank_)
    throw CompatibilityError("filtration of ray " + std::to_string(ray) + " does not start at the full space");

  const Subspace* previous = nullptr;
  for (const auto& [level, space] : levels) {
    if (space.ambient() != rank_) throw DimensionError("filtration levels of mixed dimension");
    if (previous && !previous->contains(space))
      throw CompatibilityError("filtration of ray " + std::to_string(ray) + " is not decreasing at level " +
                               std::to_string(level));
    previous = &space;
  }

  // Keep only levels where the space strictly drops at the next level.
  for (auto it = levels.begin(); it != levels.end(); ++it) {
    if (it->second.dim() == 0) continue;
    auto next = std::next(it);
    if (next != levels.end() && next->second == it->second) continue;
    levels_.emplace(it->first, it->second);
  }
}

Subspace Filtration::at(long i) const {
  auto it = levels_.lower_bound(i);
  if (it == levels_.end()) return Subspace::zero(rank_);
  return it->second;
}

std::vector<long> Filtration::jump_indices() const {
  std::vector<long> out;
  for (const auto& entry : levels_) out.push_back(entry.first);
  return out;
}

// ------------------------------------------------------- decompositions

namespace {

using Levels = std::vector<long>;

long to_level(const Integer& v) {
  if (!v.fits_slong_p()) throw std::overflow_error("filtration level out of range");
  return v.get_si();
}

class ConeSplitter {
 public:
  ConeSplitter(const Fan& fan, std::size_t cone, const std::vector<Filtration>& filtrations, Index rank)
      : fan_(fan), cone_(cone), rays_(fan.maximal_cones()[cone]), filtrations_(filtrations), rank_(rank) {}

  Decomposition split() {
    const std::size_t d = rays_.size();
    std::vector<std::vector<long>> candidates;
    for (std::size_t ray : rays_) candidates.push_back(filtrations_[ray].jump_indices());

    Decomposition pieces;
    Index total = 0;
    Levels a(d);
    std::vector<std::size_t> pos(d, 0);
    for (;;) {
      for (std::size_t j = 0; j < d; ++j) a[j] = candidates[j][pos[j]];
      const Index expected = inclusion_exclusion(a);
      if (expected < 0) fail("negative piece dimension " + std::to_string(expected));
      if (expected > 0) {
        Subspace piece = complement(a);
        if (piece.dim() != expected)
          fail("piece dimension " + std::to_string(piece.dim()) + " differs from the inclusion-exclusion count " +
               std::to_string(expected));
        total += expected;
        pieces.emplace(weight_of(a), std::move(piece));
      }
      std::size_t j = d;
      while (j > 0 && pos[j - 1] + 1 == candidates[j - 1].size()) pos[--j] = 0;
      if (j == 0) break;
      ++pos[j - 1];
    }

    if (total != rank_) fail("pieces have total dimension " + std::to_string(total));
    Subspace all = Subspace::zero(rank_);
    for (const auto& [m, piece] : pieces) all = all + piece;
    if (all.dim() != rank_) fail("pieces do not form a direct sum");
    return pieces;
  }

 private:
  [[noreturn]] void fail(const std::string& why) const {
    throw CompatibilityError("filtrations are incompatible on cone " + std::to_string(cone_) + ": " + why);
  }

  const Subspace& level_set(const Levels& a) {
    auto it = cache_.find(a);
    if (it != cache_.end()) return it->second;
    Subspace s = Subspace::full(rank_);
    for (std::size_t j = 0; j < rays_.size() && s.dim() > 0; ++j) s = intersect(s, filtrations_[rays_[j]].at(a[j]));
    return cache_.emplace(a, std::move(s)).first->second;
  }

  Index inclusion_exclusion(const Levels& a) {
    const std::size_t d = rays_.size();
    Index sum = 0;
    for (std::size_t mask = 0; mask < (std::size_t{1} << d); ++mask) {
      Levels shifted = a;
      int parity = 0;
      for (std::size_t j = 0; j < d; ++j)
        if (mask & (std::size_t{1} << j)) {
          ++shifted[j];
          ++parity;
        }
      const Index dim = level_set(shifted).dim();
      sum += (parity % 2 == 0) ? dim : -dim;
    }
    return sum;
  }

  // Complement in F(a) of sum_j F(a + e_j), chosen greedily from the echelon basis.
  Subspace complement(const Levels& a) {
    Subspace higher = Subspace::zero(rank_);
    for (std::size_t j = 0; j < rays_.size(); ++j) {
      Levels up = a;
      ++up[j];
      higher = higher + level_set(up);
    }
    const Subspace& whole = level_set(a);
    std::vector<RatVector> chosen;
    for (Index r = 0; r < whole.dim(); ++r) {
      const RatVector v = whole.basis().row(r).transpose();
      if (higher.contains(v)) continue;
      chosen.push_back(v);
      higher = higher + Subspace::span(rank_, std::span<const RatVector>(&chosen.back(), 1));
    }
    return Subspace::span(rank_, chosen);
  }

  MVector weight_of(const Levels& a) const {
    RatVector rhs(static_cast<Index>(a.size()));
    for (std::size_t j = 0; j < a.size(); ++j) rhs[static_cast<Index>(j)] = Rational(a[j]);
    auto m = solve_unique(to_rational(fan_.cone_matrix(cone_)), rhs);
    if (!m) fail("cone is not simplicial");
    return MVector(to_integer(*m));
  }

  const Fan& fan_;
  std::size_t cone_;
  const Cone& rays_;
  const std::vector<Filtration>& filtrations_;
  Index rank_;
  std::map<Levels, Subspace> cache_;
};

}  // namespace

EquivariantBundle make_bundle(FanPtr fan, std::vector<Filtration> filtrations) {
  if (!fan) throw FanError("bundle without a fan");
  if (filtrations.size() != fan->ray_count())
    throw CompatibilityError("expected " + std::to_string(fan->ray_count()) + " filtrations, got " +
                             std::to_string(filtrations.size()));
  if (!fan->is_smooth()) throw FanError("Klyachko decompositions need a smooth fan");
  const Index rank = filtrations.front().rank();
  for (std::size_t r = 0; r < filtrations.size(); ++r) {
    if (filtrations[r].ray() != r) throw CompatibilityError("filtration " + std::to_string(r) + " is for another ray");
    if (filtrations[r].rank() != rank) throw CompatibilityError("filtrations of different ranks");
  }

  EquivariantBundle e;
  e.fan_ = std::move(fan);
  e.rank_ = rank;
  e.filtrations_ = std::move(filtrations);
  for (std::size_t c = 0; c < e.fan_->cone_count(); ++c)
    e.decompositions_.push_back(ConeSplitter(*e.fan_, c, e.filtrations_, rank).split());
  if (auto failure = reconstruction_failure(e)) throw CompatibilityError(*failure);
  return e;
}

const Decomposition& decomposition(const EquivariantBundle& e, std::size_t cone) { return e.decomposition(cone); }

std::set<MVector> weights(const EquivariantBundle& e, std::size_t cone) {
  std::set<MVector> out;
  for (const auto& entry : e.decomposition(cone)) out.insert(entry.first);
  return out;
}

WeightMultiset weight_multiset(const EquivariantBundle& e, std::size_t cone) {
  WeightMultiset out;
  for (const auto& [m, piece] : e.decomposition(cone)) out.emplace(m, piece.dim());
  return out;
}

MVector weight_sum(const EquivariantBundle& e, std::size_t cone) {
  MVector sum = MVector::zero(e.fan()->dimension());
  for (const auto& [m, piece] : e.decomposition(cone)) sum += Integer(static_cast<long>(piece.dim())) * m;
  return sum;
}

std::optional<std::string> reconstruction_failure(const EquivariantBundle& e) {
  const Fan& fan = *e.fan();
  for (std::size_t c = 0; c < fan.cone_count(); ++c) {
    const Decomposition& pieces = e.decomposition(c);
    for (std::size_t ray : fan.maximal_cones()[c]) {
      const Filtration& filt = e.filtrations()[ray];
      for (long i = filt.lower_bound() - 1; i <= filt.upper_bound() + 1; ++i) {
        Subspace sum = Subspace::zero(e.rank());
        for (const auto& [m, piece] : pieces)
          if (pair(m, fan.rays()[ray]) >= i) sum = sum + piece;
        if (!(sum == filt.at(i)))
          return "reconstruction fails on cone " + std::to_string(c) + ", ray " + std::to_string(ray) + ", level " +
                 std::to_string(i);
      }
    }
  }
  return std::nullopt;
}

EquivariantBundle line_bundle(const ToricDivisor& d) {
  std::vector<Filtration> filtrations;
  for (std::size_t r = 0; r < d.coefficients.size(); ++r)
    filtrations.emplace_back(r, std::map<long, Subspace>{{to_level(d.coefficients[r]), Subspace::full(1)}});
  return make_bundle(d.fan, std::move(filtrations));
}

EquivariantBundle direct_sum(std::span<const EquivariantBundle> summands) {
  if (summands.empty()) throw std::invalid_argument("direct sum of no bundles");
  const FanPtr& fan = summands.front().fan();
  for (const auto& s : summands)
    if (!(*s.fan() == *fan)) throw FanError("direct sum of bundles on different fans");

  std::vector<Filtration> filtrations;
  for (std::size_t r = 0; r < fan->ray_count(); ++r) {
    std::set<long> keys;
    for (const auto& s : summands)
      for (long k : s.filtrations()[r].jump_indices()) keys.insert(k);
    std::map<long, Subspace> levels;
    for (long k : keys) {
      Subspace total = summands.front().filtrations()[r].at(k);
      for (std::size_t s = 1; s < summands.size(); ++s) total = direct_sum(total, summands[s].filtrations()[r].at(k));
      levels.emplace(k, std::move(total));
    }
    filtrations.emplace_back(r, std::move(levels));
  }
  return make_bundle(fan, std::move(filtrations));
}

EquivariantBundle cotangent_bundle(const FanPtr& fan) {
  const Index n = fan->dimension();
  std::vector<Filtration> filtrations;
  for (std::size_t r = 0; r < fan->ray_count(); ++r) {
    std::map<long, Subspace> levels;
    levels.emplace(-1, Subspace::full(n));
    levels.emplace(0, Subspace::kernel_of(fan->rays()[r].rational()));
    filtrations.emplace_back(r, std::move(levels));
  }
  return make_bundle(fan, std::move(filtrations));
}

std::set<MVector> cotangent_weights_closed_form(Index n, std::size_t k) {
  auto dual = [n](std::size_t j) { return MVector::basis(n, static_cast<Index>(j) - 1); };
  std::set<MVector> out;
  if (k == 0) {
    for (std::size_t i = 1; i <= static_cast<std::size_t>(n); ++i) out.insert(-dual(i));
    return out;
  }
  out.insert(dual(k));
  for (std::size_t i = 1; i <= static_cast<std::size_t>(n); ++i)
    if (i != k) out.insert(dual(k) - dual(i));
  return out;
}

}  // namespace mirrorkit
