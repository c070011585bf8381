#include "mirrorkit/exact.hpp"

#include <algorithm>
#include <utility>

namespace mirrorkit {

std::string to_string(const Integer& value) { return value.get_str(); }

std::string to_string(const Rational& value) {
  if (value.get_den() == 1) return value.get_num().get_str();
  return value.get_num().get_str() + "/" + value.get_den().get_str();
}

Rational parse_rational(const std::string& text) {
  Rational r;
  if (r.set_str(text, 10) != 0) throw std::invalid_argument("not a rational: " + text);
  if (r.get_den() == 0) throw std::invalid_argument("zero denominator: " + text);
  r.canonicalize();
  return r;
}

bool is_integral(const Rational& value) { return value.get_den() == 1; }

bool is_integral(const RatVector& v) {
  for (Index i = 0; i < v.size(); ++i)
    if (!is_integral(v[i])) return false;
  return true;
}

IntVector to_integer(const RatVector& v) {
  IntVector out(v.size());
  for (Index i = 0; i < v.size(); ++i) {
    if (!is_integral(v[i])) throw ExactnessError("non-integral entry " + to_string(v[i]));
    out[i] = v[i].get_num();
  }
  return out;
}

RatVector to_rational(const IntVector& v) { return v.cast<Rational>(); }
RatMatrix to_rational(const IntMatrix& m) { return m.cast<Rational>(); }

Integer content(const IntVector& v) {
  Integer g = 0;
  for (Index i = 0; i < v.size(); ++i) {
    Integer next;
    mpz_gcd(next.get_mpz_t(), g.get_mpz_t(), v[i].get_mpz_t());
    g = next;
  }
  return g;
}

IntVector primitive(const IntVector& v) {
  const Integer g = content(v);
  if (g == 0 || g == 1) return v;
  IntVector out(v.size());
  for (Index i = 0; i < v.size(); ++i) out[i] = v[i] / g;
  return out;
}

IntVector primitive_multiple(const RatVector& v) {
  Integer lcm = 1;
  for (Index i = 0; i < v.size(); ++i) {
    Integer next;
    mpz_lcm(next.get_mpz_t(), lcm.get_mpz_t(), v[i].get_den().get_mpz_t());
    lcm = next;
  }
  IntVector scaled(v.size());
  for (Index i = 0; i < v.size(); ++i) scaled[i] = v[i].get_num() * (lcm / v[i].get_den());
  return primitive(scaled);
}

RatMatrix row_echelon_basis(const RatMatrix& rows) {
  RatMatrix a = rows;
  const auto pivots = reduce_row_echelon(a);
  return a.topRows(static_cast<Index>(pivots.size()));
}

RatMatrix nullspace(const RatMatrix& a) {
  RatMatrix r = a;
  const auto pivots = reduce_row_echelon(r);
  std::vector<bool> is_pivot(static_cast<std::size_t>(a.cols()), false);
  for (Index p : pivots) is_pivot[static_cast<std::size_t>(p)] = true;

  RatMatrix basis(a.cols(), a.cols() - static_cast<Index>(pivots.size()));
  Index out = 0;
  for (Index free = 0; free < a.cols(); ++free) {
    if (is_pivot[static_cast<std::size_t>(free)]) continue;
    RatVector v = RatVector::Zero(a.cols());
    v[free] = 1;
    for (std::size_t k = 0; k < pivots.size(); ++k) v[pivots[k]] = -r(static_cast<Index>(k), free);
    basis.col(out++) = v;
  }
  return basis;
}

std::optional<AffineSolution> solve_affine(const RatMatrix& a, const RatVector& b) {
  RatMatrix aug(a.rows(), a.cols() + 1);
  aug.leftCols(a.cols()) = a;
  aug.col(a.cols()) = b;
  const auto pivots = reduce_row_echelon(aug);
  if (!pivots.empty() && pivots.back() == a.cols()) return std::nullopt;

  AffineSolution sol;
  sol.particular = RatVector::Zero(a.cols());
  for (std::size_t k = 0; k < pivots.size(); ++k)
    sol.particular[pivots[k]] = aug(static_cast<Index>(k), a.cols());
  sol.directions = nullspace(a);
  return sol;
}

std::optional<RatVector> solve_unique(const RatMatrix& a, const RatVector& b) {
  if (a.rows() != a.cols()) throw std::invalid_argument("solve_unique: matrix not square");
  auto sol = solve_affine(a, b);
  if (!sol || sol->directions.cols() != 0) return std::nullopt;
  return sol->particular;
}

Integer determinant(const IntMatrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("determinant: matrix not square");
  const Index n = m.rows();
  if (n == 0) return 1;
  IntMatrix a = m;
  Integer sign = 1;
  Integer previous = 1;
  for (Index k = 0; k + 1 < n; ++k) {
    if (a(k, k) == 0) {
      Index swap = -1;
      for (Index r = k + 1; r < n; ++r) {
        if (a(r, k) != 0) {
          swap = r;
          break;
        }
      }
      if (swap < 0) return 0;
      a.row(k).swap(a.row(swap));
      sign = -sign;
    }
    for (Index i = k + 1; i < n; ++i) {
      for (Index j = k + 1; j < n; ++j) {
        Integer t = a(i, j) * a(k, k) - a(i, k) * a(k, j);
        mpz_divexact(a(i, j).get_mpz_t(), t.get_mpz_t(), previous.get_mpz_t());
      }
    }
    previous = a(k, k);
  }
  return sign * a(n - 1, n - 1);
}

namespace {

Integer floor_div(const Integer& a, const Integer& b) {
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

// Row op on the working matrix and on the left transform together.
void add_row_multiple(SmithForm& s, Index target, Index source, const Integer& factor) {
  s.diagonal.row(target) -= factor * s.diagonal.row(source);
  s.left.row(target) -= factor * s.left.row(source);
}

void add_col_multiple(SmithForm& s, Index target, Index source, const Integer& factor) {
  s.diagonal.col(target) -= factor * s.diagonal.col(source);
  s.right.col(target) -= factor * s.right.col(source);
}

}  // namespace

Index SmithForm::rank() const {
  Index r = 0;
  for (Index i = 0; i < std::min(diagonal.rows(), diagonal.cols()); ++i)
    if (diagonal(i, i) != 0) ++r;
  return r;
}

std::vector<Integer> SmithForm::invariant_factors() const {
  std::vector<Integer> out;
  for (Index i = 0; i < rank(); ++i) out.push_back(diagonal(i, i));
  return out;
}

SmithForm smith_normal_form(const IntMatrix& a) {
  const Index rows = a.rows();
  const Index cols = a.cols();
  SmithForm s{IntMatrix::Identity(rows, rows), a, IntMatrix::Identity(cols, cols)};
  IntMatrix& d = s.diagonal;

  for (Index t = 0; t < std::min(rows, cols); ++t) {
    for (;;) {
      // Smallest nonzero entry of the trailing block becomes the pivot.
      Index pr = -1, pc = -1;
      for (Index i = t; i < rows; ++i)
        for (Index j = t; j < cols; ++j)
          if (d(i, j) != 0 && (pr < 0 || abs(d(i, j)) < abs(d(pr, pc)))) {
            pr = i;
            pc = j;
          }
      if (pr < 0) return s;
      if (pr != t) {
        d.row(pr).swap(d.row(t));
        s.left.row(pr).swap(s.left.row(t));
      }
      if (pc != t) {
        d.col(pc).swap(d.col(t));
        s.right.col(pc).swap(s.right.col(t));
      }

      bool clean = true;
      for (Index i = t + 1; i < rows; ++i) {
        if (d(i, t) == 0) continue;
        add_row_multiple(s, i, t, floor_div(d(i, t), d(t, t)));
        if (d(i, t) != 0) clean = false;
      }
      for (Index j = t + 1; j < cols; ++j) {
        if (d(t, j) == 0) continue;
        add_col_multiple(s, j, t, floor_div(d(t, j), d(t, t)));
        if (d(t, j) != 0) clean = false;
      }
      if (!clean) continue;

      // Divisibility: fold an offending row into row t and retry.
      Index offending = -1;
      for (Index i = t + 1; i < rows && offending < 0; ++i)
        for (Index j = t + 1; j < cols; ++j)
          if (d(i, j) % d(t, t) != 0) {
            offending = i;
            break;
          }
      if (offending < 0) break;
      add_row_multiple(s, t, offending, Integer(-1));
    }
    if (d(t, t) < 0) {
      d.row(t) *= Integer(-1);
      s.left.row(t) *= Integer(-1);
    }
  }
  return s;
}

}  // namespace mirrorkit
