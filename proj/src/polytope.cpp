#include "mirrorkit/polytope.hpp"

#include <algorithm>
#include <functional>
#include <set>

namespace mirrorkit {
namespace {

// Calls f on each k-subset of {0..n-1} in lexicographic order.
void for_each_combination(std::size_t n, std::size_t k,
                          const std::function<void(const std::vector<std::size_t>&)>& f) {
  if (k > n) return;
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  for (;;) {
    f(idx);
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
    if (i == 0) return;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

bool rat_less(const RatVector& a, const RatVector& b) { return lex_less(a, b); }
bool rat_equal(const RatVector& a, const RatVector& b) { return equal(a, b); }

Integer floor_of(const Rational& q) {
  Integer out;
  mpz_fdiv_q(out.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return out;
}

Integer ceil_of(const Rational& q) {
  Integer out;
  mpz_cdiv_q(out.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return out;
}

}  // namespace

Index affine_dimension(std::span<const RatVector> points) {
  if (points.empty()) return -1;
  const Index d = points.front().size();
  RatMatrix diffs(static_cast<Index>(points.size()) - 1, d);
  for (std::size_t i = 1; i < points.size(); ++i)
    diffs.row(static_cast<Index>(i) - 1) = (points[i] - points.front()).transpose();
  return rank(diffs);
}

template <class Tag>
Polytope<Tag> Polytope<Tag>::hull(std::span<const RatVector> input) {
  if (input.empty()) throw DegeneracyError("convex hull of an empty point set");
  const Index d = input.front().size();
  if (d < 1) throw DimensionError("ambient dimension must be at least 1");
  for (const auto& p : input)
    if (p.size() != d) throw DimensionError("points of mixed dimension");

  std::vector<RatVector> points(input.begin(), input.end());
  std::sort(points.begin(), points.end(), rat_less);
  points.erase(std::unique(points.begin(), points.end(), rat_equal), points.end());
  if (affine_dimension(points) != d)
    throw DegeneracyError("points do not affinely span the ambient space");

  using Normal = LatticeVector<Dual<Tag>>;
  std::vector<Facet<Tag>> facets;
  auto known = [&](const Normal& n) {
    return std::any_of(facets.begin(), facets.end(), [&](const Facet<Tag>& f) { return f.normal == n; });
  };

  // Every facet is spanned by d affinely independent input points.
  for_each_combination(points.size(), static_cast<std::size_t>(d), [&](const std::vector<std::size_t>& s) {
    RatMatrix diffs(d - 1, d);
    for (Index j = 1; j < d; ++j)
      diffs.row(j - 1) = (points[s[static_cast<std::size_t>(j)]] - points[s[0]]).transpose();
    const RatMatrix kernel = nullspace(diffs);
    if (kernel.cols() != 1) return;
    Normal normal(primitive_multiple(kernel.col(0)));
    const Rational level = pair_rational<Tag>(points[s[0]], normal);

    bool above = false, below = false;
    for (const auto& p : points) {
      const Rational v = pair_rational<Tag>(p, normal);
      if (v > level) above = true;
      if (v < level) below = true;
    }
    if (above && below) return;
    Facet<Tag> facet{below ? -normal : normal, below ? Rational(-level) : level};
    if (!known(facet.normal)) facets.push_back(std::move(facet));
  });

  Polytope out;
  out.dimension_ = d;
  for (const auto& p : points) {
    RatMatrix tight(0, d);
    for (const auto& f : facets) {
      if (f.evaluate(p) != f.offset) continue;
      tight.conservativeResize(tight.rows() + 1, Eigen::NoChange);
      tight.row(tight.rows() - 1) = f.normal.rational().transpose();
    }
    if (rank(tight) == d) out.vertices_.push_back(p);
  }
  std::sort(facets.begin(), facets.end(),
            [](const Facet<Tag>& a, const Facet<Tag>& b) { return a.normal < b.normal; });
  out.facets_ = std::move(facets);
  return out;
}

template <class Tag>
bool Polytope<Tag>::is_integral() const {
  return std::all_of(vertices_.begin(), vertices_.end(), [](const RatVector& v) { return mirrorkit::is_integral(v); });
}

template <class Tag>
std::vector<LatticeVector<Tag>> Polytope<Tag>::lattice_vertices() const {
  std::vector<LatticeVector<Tag>> out;
  out.reserve(vertices_.size());
  for (const auto& v : vertices_) out.emplace_back(to_integer(v));
  return out;
}

template <class Tag>
bool Polytope<Tag>::contains(const RatVector& x) const {
  return std::all_of(facets_.begin(), facets_.end(),
                     [&](const Facet<Tag>& f) { return f.evaluate(x) >= f.offset; });
}

template <class Tag>
bool Polytope<Tag>::contains_in_interior(const RatVector& x) const {
  return std::all_of(facets_.begin(), facets_.end(),
                     [&](const Facet<Tag>& f) { return f.evaluate(x) > f.offset; });
}

template <class Tag>
std::vector<std::size_t> Polytope<Tag>::facet_vertices(std::size_t f) const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < vertices_.size(); ++i)
    if (facets_.at(f).evaluate(vertices_[i]) == facets_[f].offset) out.push_back(i);
  return out;
}

template <class Tag>
Polytope<Tag> convex_hull(std::span<const LatticeVector<Tag>> points) {
  std::vector<RatVector> rational;
  rational.reserve(points.size());
  for (const auto& p : points) rational.push_back(p.rational());
  return Polytope<Tag>::hull(rational);
}

template <class Tag>
Polytope<Dual<Tag>> polar_dual(const Polytope<Tag>& p) {
  if (!p.contains_in_interior(RatVector::Zero(p.dimension())))
    throw OriginNotInteriorError("polar dual requires the origin in the interior");
  // Facet <x,u> >= c with c < 0 dualizes to the vertex u / (-c).
  std::vector<RatVector> dual_vertices;
  for (const auto& f : p.facets()) {
    RatVector v = f.normal.rational();
    const Rational scale = -f.offset;
    for (Index i = 0; i < v.size(); ++i) v[i] /= scale;
    dual_vertices.push_back(std::move(v));
  }
  return Polytope<Dual<Tag>>::hull(dual_vertices);
}

template <class Tag>
bool is_reflexive(const Polytope<Tag>& p) {
  if (!p.is_integral()) return false;
  if (!p.contains_in_interior(RatVector::Zero(p.dimension()))) return false;
  return polar_dual(p).is_integral();
}

template <class Tag>
bool is_fano_polytope(const Polytope<Tag>& p) {
  if (!is_reflexive(p)) return false;
  const Index d = p.dimension();
  for (std::size_t f = 0; f < p.facets().size(); ++f) {
    const auto on_facet = p.facet_vertices(f);
    if (static_cast<Index>(on_facet.size()) != d) return false;
    IntMatrix basis(d, d);
    for (Index j = 0; j < d; ++j) basis.col(j) = to_integer(p.vertices()[on_facet[static_cast<std::size_t>(j)]]);
    const Integer det = determinant(basis);
    if (det != 1 && det != -1) return false;
  }
  return true;
}

template <class Tag>
std::vector<std::vector<std::size_t>> faces(const Polytope<Tag>& p, Index k) {
  if (k < 0 || k > p.dimension())
    throw std::out_of_range("face dimension " + std::to_string(k) + " outside [0, " +
                            std::to_string(p.dimension()) + "]");
  std::vector<std::size_t> all(p.vertices().size());
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
  if (k == p.dimension()) return {all};

  // Proper faces are exactly the nonempty intersections of facets.
  std::set<std::vector<std::size_t>> closed;
  std::vector<std::vector<std::size_t>> frontier;
  for (std::size_t f = 0; f < p.facets().size(); ++f) {
    auto vs = p.facet_vertices(f);
    if (closed.insert(vs).second) frontier.push_back(vs);
  }
  while (!frontier.empty()) {
    std::vector<std::vector<std::size_t>> next;
    const std::vector<std::vector<std::size_t>> snapshot(closed.begin(), closed.end());
    for (const auto& a : frontier) {
      for (const auto& b : snapshot) {
        std::vector<std::size_t> both;
        std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(both));
        if (!both.empty() && closed.insert(both).second) next.push_back(std::move(both));
      }
    }
    frontier = std::move(next);
  }

  std::vector<std::vector<std::size_t>> out;
  for (const auto& face : closed) {
    std::vector<RatVector> pts;
    for (std::size_t i : face) pts.push_back(p.vertices()[i]);
    if (affine_dimension(pts) == k) out.push_back(face);
  }
  return out;
}

template <class Tag>
std::vector<LatticeVector<Tag>> lattice_points(const Polytope<Tag>& p) {
  const Index d = p.dimension();
  IntVector lo(d), hi(d);
  for (Index i = 0; i < d; ++i) {
    lo[i] = floor_of(p.vertices().front()[i]);
    hi[i] = ceil_of(p.vertices().front()[i]);
    for (const auto& v : p.vertices()) {
      if (floor_of(v[i]) < lo[i]) lo[i] = floor_of(v[i]);
      if (ceil_of(v[i]) > hi[i]) hi[i] = ceil_of(v[i]);
    }
  }

  // Odometer over the bounding box; last coordinate varies fastest.
  std::vector<LatticeVector<Tag>> out;
  IntVector x = lo;
  for (;;) {
    if (p.contains(x.cast<Rational>())) out.emplace_back(x);
    Index i = d - 1;
    while (i >= 0 && x[i] == hi[i]) {
      x[i] = lo[i];
      --i;
    }
    if (i < 0) break;
    x[i] += 1;
  }
  return out;
}

#define MIRRORKIT_INSTANTIATE_POLYTOPE(Tag)                                                      \
  template class Polytope<Tag>;                                                                  \
  template Polytope<Tag> convex_hull<Tag>(std::span<const LatticeVector<Tag>>);                  \
  template Polytope<Dual<Tag>> polar_dual<Tag>(const Polytope<Tag>&);                            \
  template bool is_reflexive<Tag>(const Polytope<Tag>&);                                         \
  template bool is_fano_polytope<Tag>(const Polytope<Tag>&);                                     \
  template std::vector<std::vector<std::size_t>> faces<Tag>(const Polytope<Tag>&, Index);        \
  template std::vector<LatticeVector<Tag>> lattice_points<Tag>(const Polytope<Tag>&);

MIRRORKIT_INSTANTIATE_POLYTOPE(MTag)
MIRRORKIT_INSTANTIATE_POLYTOPE(NTag)

#undef MIRRORKIT_INSTANTIATE_POLYTOPE

}  // namespace mirrorkit
