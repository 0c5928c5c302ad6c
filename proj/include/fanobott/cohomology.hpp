// Degree-two computations in H^*(X) = Z[x_1..x_d] / (x_i^2 - (sum_{k<i} n_ki x_k) x_i).
//
// Degree-two classes are written in the square-free basis {x_i x_j : i < j};
// every x_j^2 rewrites uniquely into it.

#pragma once

#include <stdexcept>
#include <vector>

#include "fanobott/matrix.hpp"

namespace fanobott {

/// Coefficients a_1..a_d of a_1 x_1 + ... + a_d x_d, indexed by i-1.
using LinearForm = std::vector<int>;

class QuadCoefficients {
 public:
  explicit QuadCoefficients(int dim);

  int dim() const { return dim_; }
  /// Coefficient of x_i x_j, i < j.
  int operator()(int i, int j) const { return c_[index(i, j)]; }
  int& operator()(int i, int j) { return c_[index(i, j)]; }
  bool is_zero() const;

 private:
  std::size_t index(int i, int j) const;

  int dim_;
  std::vector<int> c_;
};

/// (sum a_i x_i)^2 reduced to the square-free basis:
/// c(i,j) = a_j (a_j n_ij + 2 a_i).
QuadCoefficients square_reduce(const FanoBottMatrix& a, const LinearForm& form);

/// Nonzero with gcd of coefficients equal to 1.
bool is_primitive(const LinearForm& form);
/// The representative of +-form whose first nonzero coefficient is positive.
LinearForm normalize_sign(LinearForm form);

/// Square-vanishing element: primitive with zero square.
bool is_sve(const FanoBottMatrix& a, const LinearForm& form);

/// x_p - 2 * sign * x_q where sign = n_pq.
struct PartneredForm {
  int p;
  int q;
  int sign;

  LinearForm form(int dim) const;
  friend bool operator==(const PartneredForm&, const PartneredForm&) = default;
};

/// All square-vanishing elements up to sign, split into
///   g        leaves x_p that admit a partner x_p - 2 n_pq x_q,
///   g_prime  those partners,
///   h        the remaining leaves.
struct SveInventory {
  std::vector<int> g;
  std::vector<PartneredForm> g_prime;
  std::vector<int> h;
  int maximal_basis_number = 0;

  /// Every element of the inventory as a sign-normalized linear form.
  std::vector<LinearForm> forms(int dim) const;
};

SveInventory enumerate_sve(const FanoBottMatrix& a);

class NotALeafColumn : public std::invalid_argument {
 public:
  explicit NotALeafColumn(int column);
};

/// Deletes row and column alpha; the ring-side quotient by x_alpha.
FanoBottMatrix quotient_by_leaf(const FanoBottMatrix& a, int alpha);

/// Leaf counts seen while repeatedly cutting every current leaf.
std::vector<int> peel_signature(const FanoBottMatrix& a);

/// Rank over Z/2 of the submatrix with rows in `rows` and the remaining
/// columns. Indices are 1-based; duplicates are ignored.
int cut_rank_gf2(const FanoBottMatrix& a, const std::vector<int>& rows);

}  // namespace fanobott
