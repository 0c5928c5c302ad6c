#include "fanobott/fan.hpp"

#include <algorithm>

#include "fanobott/forest.hpp"

namespace fanobott {

RayMatrix::RayMatrix(IntMatrix rows) : rows_(std::move(rows)) {
  if (rows_.rows() != 2 * rows_.cols()) throw std::invalid_argument("ray matrix must be 2d x d");
}

RelationCheckFailed::RelationCheckFailed(int i)
    : std::logic_error("primitive relation " + std::to_string(i) + " does not hold") {}

namespace {

std::vector<int> add(std::vector<int> a, const std::vector<int>& b) {
  for (std::size_t i = 0; i < a.size(); ++i) a[i] += b[i];
  return a;
}

std::vector<int> negated(std::vector<int> a) {
  for (int& v : a) v = -v;
  return a;
}

}  // namespace

RayMatrix rays(const FanoBottMatrix& a) {
  const int d = a.dim();
  IntMatrix m(2 * d, d);
  for (int i = 1; i <= d; ++i) {
    m(i, i) = 1;
    m(d + i, i) = -1;
    for (int j = i + 1; j <= d; ++j) m(d + i, j) = a(i, j);
  }
  RayMatrix r(std::move(m));

  const PhiSigma ps = to_phi_sigma(a);
  for (int i = 1; i <= d; ++i) {
    const int up = ps.phi[i - 1];
    std::vector<int> expected(d, 0);
    if (up <= d) expected = *ps.sigma[i - 1] == Sign::Plus ? r.plus(up) : r.minus(up);
    if (add(r.plus(i), r.minus(i)) != expected) throw RelationCheckFailed(i);
  }
  return r;
}

std::vector<int> primitive_relation_degrees(const FanoBottMatrix& a) {
  std::vector<int> out(a.dim());
  for (int i = 1; i <= a.dim(); ++i) out[i - 1] = a.row_is_zero(i) ? 2 : 1;
  return out;
}

RayMatrix permute_rays(const RayMatrix& m, const Permutation& perm) {
  const int d = m.dim();
  if (static_cast<int>(perm.size()) != d || !is_permutation(perm))
    throw std::invalid_argument("not a permutation of the ray dimension");
  IntMatrix out(2 * d, d);
  for (int half = 0; half < 2; ++half)
    for (int i = 1; i <= d; ++i)
      for (int j = 1; j <= d; ++j)
        out(half * d + perm[i - 1], perm[j - 1]) = m.matrix()(half * d + i, j);
  return RayMatrix(std::move(out));
}

RayMatrix right_multiply(const RayMatrix& m, const IntMatrix& t) {
  return RayMatrix(m.matrix() * t);
}

RayMatrix flip_column_rays(const RayMatrix& m, const FanoBottMatrix& a, int k) {
  const int d = m.dim();
  IntMatrix t = IntMatrix::identity(d);
  t(k, k) = -1;
  for (int j = k + 1; j <= d; ++j) t(k, j) = a(k, j);
  IntMatrix out = m.matrix() * t;
  for (int j = 1; j <= d; ++j) std::swap(out(k, j), out(d + k, j));
  return RayMatrix(std::move(out));
}

ShapeMismatch::ShapeMismatch() : std::invalid_argument("ray matrices differ in shape") {}

RowSignMatch rows_match_up_to_sign(const RayMatrix& m, const RayMatrix& other) {
  if (m.matrix().rows() != other.matrix().rows() || m.dim() != other.dim()) throw ShapeMismatch();
  const int d = m.dim();
  RowSignMatch res;
  res.plus_signs.assign(d, 0);
  res.minus_signs.assign(d, 0);
  for (int r = 1; r <= 2 * d; ++r) {
    const auto row = m.matrix().row(r);
    const auto target = other.matrix().row(r);
    int s = 0;
    if (row == target) {
      s = 1;
    } else if (negated(row) == target) {
      s = -1;
    }
    (r <= d ? res.plus_signs[r - 1] : res.minus_signs[r - d - 1]) = s;
    if (s == 0 && res.first_mismatch == 0) res.first_mismatch = r;
  }
  res.matches = res.first_mismatch == 0;
  return res;
}

CertificateFailed::CertificateFailed(int row, const std::string& reason)
    : std::runtime_error("certificate failed at row " + std::to_string(row) + ": " + reason),
      row_(row) {}

DiffeoCertificate certify_diffeo(const FanoBottMatrix& source, const FanoBottMatrix& target,
                                 const OpSequence& witness) {
  if (source.dim() != target.dim()) throw DimensionMismatch(source.dim(), target.dim());
  const int d = source.dim();

  DiffeoCertificate cert;
  cert.witness = witness;
  cert.source = rays(source);
  cert.target = rays(target);

  FanoBottMatrix current = source;
  RayMatrix m = cert.source;
  for (std::size_t i = 0; i < witness.steps.size(); ++i) {
    const OpStep& step = witness.steps[i];
    if (std::holds_alternative<Op3>(step)) break;
    try {
      FanoBottMatrix next = apply_step(current, step);
      if (const auto* s1 = std::get_if<Op1>(&step)) {
        m = permute_rays(m, s1->perm);
      } else {
        m = flip_column_rays(m, current, std::get<Op2>(step).k);
      }
      current = std::move(next);
    } catch (const std::exception& e) {
      throw StepFailed(i, e.what());
    }
  }
  if (m != rays(current))
    throw CertificateFailed(0, "unimodular transformations disagree with the replayed matrix");
  cert.transformed = m;

  const SignedRootedForest mid = from_matrix(current);
  const SignedRootedForest goal = from_matrix(target);
  IntMatrix product = IntMatrix::identity(d);
  for (int r : goal.roots()) {
    if (!mid.is_root(r)) continue;
    for (int c : goal.children(r)) {
      if (mid.parent(c) != r || mid.sign(c) == goal.sign(c)) continue;
      std::vector<int> diag(d, 1);
      for (int v : mid.descendants(c)) diag[v - 1] = -1;
      IntMatrix flip(d, d);
      for (int i = 1; i <= d; ++i) flip(i, i) = diag[i - 1];
      product = product * flip;
      cert.flipped_subtrees.push_back(c);
      cert.diagonals.push_back(std::move(diag));
    }
  }

  cert.signs = rows_match_up_to_sign(right_multiply(m, product), cert.target);
  if (!cert.signs.matches)
    throw CertificateFailed(cert.signs.first_mismatch, "rows differ beyond sign");
  return cert;
}

}  // namespace fanobott
