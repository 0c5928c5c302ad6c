#include "fanobott/matrix.hpp"

#include <sstream>

namespace fanobott {

IntMatrix::IntMatrix(int rows, int cols)
    : rows_(rows), cols_(cols), data_(static_cast<std::size_t>(rows) * cols, 0) {
  if (rows < 0 || cols < 0) throw std::invalid_argument("negative matrix shape");
}

IntMatrix IntMatrix::identity(int n) {
  IntMatrix m(n, n);
  for (int i = 1; i <= n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<std::vector<int>>& rows) {
  const int r = static_cast<int>(rows.size());
  const int c = r == 0 ? 0 : static_cast<int>(rows.front().size());
  IntMatrix m(r, c);
  for (int i = 1; i <= r; ++i) {
    const auto& row = rows[i - 1];
    if (static_cast<int>(row.size()) != c) {
      throw std::invalid_argument("ragged matrix: row " + std::to_string(i) + " has " +
                                  std::to_string(row.size()) + " entries, expected " +
                                  std::to_string(c));
    }
    for (int j = 1; j <= c; ++j) m(i, j) = row[j - 1];
  }
  return m;
}

std::vector<int> IntMatrix::row(int i) const {
  std::vector<int> out(cols_);
  for (int j = 1; j <= cols_; ++j) out[j - 1] = (*this)(i, j);
  return out;
}

std::vector<std::vector<int>> IntMatrix::to_rows() const {
  std::vector<std::vector<int>> out;
  out.reserve(rows_);
  for (int i = 1; i <= rows_; ++i) out.push_back(row(i));
  return out;
}

IntMatrix IntMatrix::operator*(const IntMatrix& rhs) const {
  if (cols_ != rhs.rows_) throw std::invalid_argument("matrix product shape mismatch");
  IntMatrix out(rows_, rhs.cols_);
  for (int i = 1; i <= rows_; ++i) {
    for (int k = 1; k <= cols_; ++k) {
      const int a = (*this)(i, k);
      if (a == 0) continue;
      for (int j = 1; j <= rhs.cols_; ++j) out(i, j) += a * rhs(k, j);
    }
  }
  return out;
}

std::string to_string(Violation v) {
  switch (v) {
    case Violation::NotUpperTriangular:
      return "not_upper_triangular";
    case Violation::EntryOutOfRange:
      return "entry_out_of_range";
    case Violation::RowConditionViolated:
      return "row_condition_violated";
  }
  return "unknown";
}

std::string Rejection::message() const {
  std::ostringstream os;
  switch (violation) {
    case Violation::NotUpperTriangular:
      os << "entry (" << row << "," << column << ") below or on the diagonal is nonzero";
      break;
    case Violation::EntryOutOfRange:
      os << "entry (" << row << "," << column << ") is not in {-1,0,1}";
      break;
    case Violation::RowConditionViolated:
      os << "row " << row << " is neither zero, a unit row e^q, nor -e^q + (row q)";
      break;
  }
  return os.str();
}

InvalidMatrix::InvalidMatrix(Rejection r) : std::invalid_argument(r.message()), rejection_(r) {}

namespace {

// Matches row p against the three admissible shapes. Assumes entries left of
// and on the diagonal were already checked.
bool row_condition_holds(const IntMatrix& g, int p) {
  const int d = g.rows();
  int q = p + 1;
  while (q <= d && g(p, q) == 0) ++q;
  if (q > d) return true;  // zero row
  if (g(p, q) == 1) {
    for (int r = q + 1; r <= d; ++r)
      if (g(p, r) != 0) return false;
    return true;
  }
  if (g(p, q) == -1) {
    for (int r = q + 1; r <= d; ++r)
      if (g(p, r) != g(q, r)) return false;
    return true;
  }
  return false;
}

}  // namespace

std::optional<Rejection> check(const IntMatrix& grid) {
  if (!grid.is_square()) throw std::invalid_argument("grid is not square");
  const int d = grid.rows();
  for (int p = 1; p <= d; ++p) {
    for (int j = 1; j <= p; ++j)
      if (grid(p, j) != 0) return Rejection{Violation::NotUpperTriangular, p, j};
    for (int j = p + 1; j <= d; ++j) {
      const int v = grid(p, j);
      if (v < -1 || v > 1) return Rejection{Violation::EntryOutOfRange, p, j};
    }
    if (!row_condition_holds(grid, p)) return Rejection{Violation::RowConditionViolated, p};
  }
  return std::nullopt;
}

FanoBottMatrix validate(const IntMatrix& grid) {
  if (auto r = check(grid)) throw InvalidMatrix(*r);
  return FanoBottMatrix(grid);
}

FanoBottMatrix FanoBottMatrix::zero(int d) {
  if (d < 0) throw std::invalid_argument("negative dimension");
  return FanoBottMatrix(IntMatrix(d, d));
}

bool FanoBottMatrix::row_is_zero(int p) const {
  for (int j = p + 1; j <= dim(); ++j)
    if (entries_(p, j) != 0) return false;
  return true;
}

bool FanoBottMatrix::column_is_zero(int q) const {
  for (int i = 1; i < q; ++i)
    if (entries_(i, q) != 0) return false;
  return true;
}

RowStructure row_structure(const FanoBottMatrix& a, int p) {
  if (p < 1 || p > a.dim()) throw std::out_of_range("row index out of range");
  for (int q = p + 1; q <= a.dim(); ++q) {
    const int v = a(p, q);
    if (v == 1) return {RowStructure::Kind::Plus, q};
    if (v == -1) return {RowStructure::Kind::MinusCopy, q};
  }
  return {};
}

InvalidPhi::InvalidPhi(int vertex, const std::string& what)
    : std::invalid_argument("vertex " + std::to_string(vertex) + ": " + what), vertex_(vertex) {}

PhiSigma to_phi_sigma(const FanoBottMatrix& a) {
  const int d = a.dim();
  PhiSigma ps{d, std::vector<int>(d, d + 1), std::vector<std::optional<Sign>>(d)};
  for (int i = 1; i <= d; ++i) {
    const RowStructure rs = row_structure(a, i);
    if (rs.kind == RowStructure::Kind::Zero) continue;
    ps.phi[i - 1] = rs.target;
    ps.sigma[i - 1] = rs.kind == RowStructure::Kind::Plus ? Sign::Plus : Sign::Minus;
  }
  return ps;
}

namespace {

void check_phi_sigma(const PhiSigma& ps) {
  const int d = ps.dim;
  if (static_cast<int>(ps.phi.size()) != d || static_cast<int>(ps.sigma.size()) != d)
    throw std::invalid_argument("phi/sigma length does not match dimension");
  for (int i = 1; i <= d; ++i) {
    const int target = ps.phi[i - 1];
    if (target <= i || target > d + 1) throw InvalidPhi(i, "phi(i) must satisfy i < phi(i) <= d+1");
    if (ps.sigma[i - 1].has_value() != (target <= d))
      throw InvalidPhi(i, "sigma(i) must be defined exactly when phi(i) <= d");
  }
}

}  // namespace

FanoBottMatrix from_phi_sigma(const PhiSigma& ps) {
  check_phi_sigma(ps);
  const int d = ps.dim;
  IntMatrix m(d, d);
  for (int i = 1; i <= d; ++i) {
    // Walk the upward path from i. While every edge so far is minus, the
    // next ancestor j gets -1 if the edge into it is minus and +1 if it is
    // plus; a plus edge ends the run.
    int v = i;
    while (ps.phi[v - 1] <= d) {
      const int up = ps.phi[v - 1];
      const Sign s = *ps.sigma[v - 1];
      m(i, up) = s == Sign::Plus ? 1 : -1;
      if (s == Sign::Plus) break;
      v = up;
    }
  }
  return validate(m);
}

namespace {

void fill_rows(int p, IntMatrix& m, const std::function<void(const FanoBottMatrix&)>& visit) {
  const int d = m.rows();
  if (p == 0) {
    visit(validate(m));
    return;
  }
  for (int j = p + 1; j <= d; ++j) m(p, j) = 0;
  fill_rows(p - 1, m, visit);
  for (int q = p + 1; q <= d; ++q) {
    for (int j = p + 1; j <= d; ++j) m(p, j) = j == q ? 1 : 0;
    fill_rows(p - 1, m, visit);
  }
  for (int q = p + 1; q <= d; ++q) {
    for (int j = p + 1; j <= d; ++j) m(p, j) = j < q ? 0 : (j == q ? -1 : m(q, j));
    fill_rows(p - 1, m, visit);
  }
  for (int j = p + 1; j <= d; ++j) m(p, j) = 0;
}

}  // namespace

void for_each_matrix(int d, const std::function<void(const FanoBottMatrix&)>& visit) {
  if (d < 1) throw std::invalid_argument("dimension must be positive");
  IntMatrix m(d, d);
  // Row d is always zero; start from row d-1.
  fill_rows(d - 1, m, visit);
}

std::vector<FanoBottMatrix> enumerate(int d) {
  std::vector<FanoBottMatrix> out;
  out.reserve(static_cast<std::size_t>(fano_bott_count(d)));
  for_each_matrix(d, [&](const FanoBottMatrix& a) { out.push_back(a); });
  return out;
}

std::uint64_t fano_bott_count(int d) {
  std::uint64_t n = 1;
  for (int k = 2 * d - 1; k > 1; k -= 2) n *= static_cast<std::uint64_t>(k);
  return n;
}

FanoBottMatrix direct_sum(const FanoBottMatrix& a, const FanoBottMatrix& b) {
  const int da = a.dim();
  const int d = da + b.dim();
  IntMatrix m(d, d);
  for (int i = 1; i <= da; ++i)
    for (int j = 1; j <= da; ++j) m(i, j) = a(i, j);
  for (int i = 1; i <= b.dim(); ++i)
    for (int j = 1; j <= b.dim(); ++j) m(da + i, da + j) = b(i, j);
  return validate(m);
}

}  // namespace fanobott
