// Grothendieck-group calculus for line bundles on P^n.
//
// K0(P^n) is free on [O], [O(1)], ..., [O(n)]; every other [O(k)] is reduced
// into this basis with the Koszul relation
//   sum_j (-1)^j C(n+1, j) [O(k - j)] = 0.
#pragma once

#include "mirrorkit/klyachko.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace mirrorkit {

class MutationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class K0Class {
 public:
  /// coefficients[k] multiplies [O(k)], k = 0..n.
  K0Class(Index n, std::vector<Integer> coefficients);
  static K0Class zero(Index n);

  Index n() const { return n_; }
  const std::vector<Integer>& coefficients() const { return coefficients_; }

  Integer rank() const;
  Integer c1() const;
  Integer chi() const;

  /// The degree k if this is the class of O(k).
  std::optional<long> as_line_bundle() const;

  friend K0Class operator+(const K0Class& a, const K0Class& b);
  friend K0Class operator-(const K0Class& a, const K0Class& b);
  friend K0Class operator*(const Integer& s, const K0Class& a);
  friend bool operator==(const K0Class& a, const K0Class& b) = default;

 private:
  Index n_;
  std::vector<Integer> coefficients_;
};

std::string to_string(const K0Class& c);

/// chi(O(k)) = C(n+k, n) as a polynomial in k (valid for k >= -n, where it
/// agrees with the cohomology count).
Integer chi_line_bundle(Index n, long k);

K0Class line_bundle_class(Index n, long k);
/// Tensor product with O(k).
K0Class twist(const K0Class& c, long k);

/// dim Hom(O(a), O(b)) on P^n, counted as lattice points of the (b-a)-dilated
/// standard simplex.
Integer hom_dimension(Index n, long a, long b);

/// [L_E F] = dim Hom(E, F) [E] - [F] for line bundle classes E, F.
K0Class left_mutation(const K0Class& e, const K0Class& f);

/// Degree of det E on P^n read off the Klyachko weights: for each ray, the
/// pairing of the weight sum at a cone containing it with the ray generator.
Integer klyachko_degree(const EquivariantBundle& e);

struct MutationCheck {
  std::string name;
  std::vector<Integer> lhs;
  std::vector<Integer> rhs;
  bool pass;
};

struct MutationReport {
  Index n;
  std::vector<MutationCheck> checks;
  bool pass;
};

/// Checks that twisting L_O(O(1)) by O(-1) gives the class of Omega^1 on P^n,
/// with rank and c1 of Omega^1 taken from its Klyachko data, and the Euler
/// identity [Omega^1] + [O] = (n+1)[O(-1)] in (rank, c1, chi).
MutationReport verify_beilinson_mutation(Index n = 2);

}  // namespace mirrorkit
