// Ray generators of the fan of a Fano Bott manifold and the row-matching
// certificate for diffeomorphism.

#pragma once

#include <stdexcept>
#include <vector>

#include "fanobott/matrix.hpp"
#include "fanobott/ops.hpp"

namespace fanobott {

/// 2d x d matrix whose rows are v_1^+..v_d^+ followed by v_1^-..v_d^-.
/// Ray i^+ sits at row i and ray i^- at row d+i; antipodal pairs
/// {v_i^+, v_i^-} are the primitive collections.
class RayMatrix {
 public:
  RayMatrix() = default;
  explicit RayMatrix(IntMatrix rows);

  int dim() const { return rows_.cols(); }
  const IntMatrix& matrix() const { return rows_; }
  std::vector<int> plus(int i) const { return rows_.row(i); }
  std::vector<int> minus(int i) const { return rows_.row(dim() + i); }

  friend bool operator==(const RayMatrix&, const RayMatrix&) = default;

 private:
  IntMatrix rows_;
};

class RelationCheckFailed : public std::logic_error {
 public:
  explicit RelationCheckFailed(int i);
};

/// Top half E, bottom half -E + A. Checks v_i^+ + v_i^- = v_phi(i)^sigma(i).
RayMatrix rays(const FanoBottMatrix& a);

/// 2 for roots (v^+ + v^- = 0), 1 otherwise.
std::vector<int> primitive_relation_degrees(const FanoBottMatrix& a);

/// Op1 on rays: rows permuted inside each half, columns permuted alike.
RayMatrix permute_rays(const RayMatrix& m, const Permutation& perm);

/// Op2 on rays: right multiplication by T_k, whose rows are e^i except
/// row k = -e^k + (row k of a), followed by swapping the labels of v_k^+
/// and v_k^- so that the top half stays E.
RayMatrix flip_column_rays(const RayMatrix& m, const FanoBottMatrix& a, int k);

RayMatrix right_multiply(const RayMatrix& m, const IntMatrix& t);

class ShapeMismatch : public std::invalid_argument {
 public:
  ShapeMismatch();
};

/// Per-ray sign s with row = s * row' (0 where no sign works).
struct RowSignMatch {
  bool matches = false;
  std::vector<int> plus_signs;
  std::vector<int> minus_signs;
  /// First failing row in 1..2d, 0 when everything matches.
  int first_mismatch = 0;
};

/// Row i^+ is compared with row i^+ and i^- with i^-, so the antipodal
/// pairing (and with it the cross-polytope complex) is preserved.
RowSignMatch rows_match_up_to_sign(const RayMatrix& m, const RayMatrix& other);

struct DiffeoCertificate {
  OpSequence witness;
  RayMatrix source;       // M for the source matrix
  RayMatrix transformed;  // M'' after the Op1/Op2 prefix of the witness
  RayMatrix target;       // M' for the target matrix
  /// Roots-children k whose root edge still disagrees; one diagonal each.
  std::vector<int> flipped_subtrees;
  std::vector<std::vector<int>> diagonals;
  RowSignMatch signs;
};

class CertificateFailed : public std::runtime_error {
 public:
  CertificateFailed(int row, const std::string& reason);
  int row() const { return row_; }

 private:
  int row_;
};

/// Applies the Op1/Op2 prefix of `witness` to M as unimodular
/// transformations, then the sign-flip diagonals I_j for every subtree below
/// a root edge whose sign still differs from `target`, and checks that the
/// rows agree with M' up to sign. Throws CertificateFailed otherwise.
DiffeoCertificate certify_diffeo(const FanoBottMatrix& source, const FanoBottMatrix& target,
                                 const OpSequence& witness);

}  // namespace fanobott
