#include "fanobott/cohomology.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <set>

namespace fanobott {

QuadCoefficients::QuadCoefficients(int dim)
    : dim_(dim), c_(static_cast<std::size_t>(dim) * dim, 0) {}

std::size_t QuadCoefficients::index(int i, int j) const {
  if (i < 1 || j > dim_ || i >= j) throw std::out_of_range("need 1 <= i < j <= dim");
  return static_cast<std::size_t>(i - 1) * dim_ + (j - 1);
}

bool QuadCoefficients::is_zero() const {
  return std::all_of(c_.begin(), c_.end(), [](int v) { return v == 0; });
}

QuadCoefficients square_reduce(const FanoBottMatrix& a, const LinearForm& form) {
  const int d = a.dim();
  if (static_cast<int>(form.size()) != d) throw std::invalid_argument("form length != dim");
  QuadCoefficients c(d);
  for (int j = 2; j <= d; ++j) {
    const int aj = form[j - 1];
    for (int i = 1; i < j; ++i) c(i, j) = aj * (aj * a(i, j) + 2 * form[i - 1]);
  }
  return c;
}

bool is_primitive(const LinearForm& form) {
  int g = 0;
  for (int v : form) g = std::gcd(g, v);
  return g == 1;
}

LinearForm normalize_sign(LinearForm form) {
  auto first = std::find_if(form.begin(), form.end(), [](int v) { return v != 0; });
  if (first != form.end() && *first < 0)
    for (int& v : form) v = -v;
  return form;
}

bool is_sve(const FanoBottMatrix& a, const LinearForm& form) {
  return is_primitive(form) && square_reduce(a, form).is_zero();
}

LinearForm PartneredForm::form(int dim) const {
  LinearForm f(dim, 0);
  f[p - 1] = 1;
  f[q - 1] = -2 * sign;
  return f;
}

std::vector<LinearForm> SveInventory::forms(int dim) const {
  std::vector<LinearForm> out;
  auto unit = [dim](int p) {
    LinearForm f(dim, 0);
    f[p - 1] = 1;
    return f;
  };
  for (int p : g) out.push_back(unit(p));
  for (int p : h) out.push_back(unit(p));
  for (const auto& pf : g_prime) out.push_back(pf.form(dim));
  std::sort(out.begin(), out.end());
  return out;
}

SveInventory enumerate_sve(const FanoBottMatrix& a) {
  const int d = a.dim();
  SveInventory inv;
  std::vector<bool> partnered(d + 1, false);
  for (int p = 1; p <= d; ++p) {
    if (!a.column_is_zero(p)) continue;
    for (int q = p + 1; q <= d; ++q) {
      if (a(p, q) == 0) continue;
      bool alone = true;
      for (int i = 1; i < q && alone; ++i)
        if (i != p && a(i, q) != 0) alone = false;
      if (!alone) continue;
      inv.g_prime.push_back({p, q, a(p, q)});
      partnered[p] = true;
    }
  }
  for (int p = 1; p <= d; ++p) {
    if (!a.column_is_zero(p)) continue;
    (partnered[p] ? inv.g : inv.h).push_back(p);
  }
  inv.maximal_basis_number = static_cast<int>(inv.g.size() + inv.h.size());
  return inv;
}

NotALeafColumn::NotALeafColumn(int column)
    : std::invalid_argument("column " + std::to_string(column) + " is not zero") {}

FanoBottMatrix quotient_by_leaf(const FanoBottMatrix& a, int alpha) {
  const int d = a.dim();
  if (alpha < 1 || alpha > d || !a.column_is_zero(alpha)) throw NotALeafColumn(alpha);
  IntMatrix m(d - 1, d - 1);
  auto src = [alpha](int i) { return i < alpha ? i : i + 1; };
  for (int i = 1; i < d; ++i)
    for (int j = 1; j < d; ++j) m(i, j) = a(src(i), src(j));
  return validate(m);
}

std::vector<int> peel_signature(const FanoBottMatrix& a) {
  std::vector<int> sig;
  FanoBottMatrix current = a;
  while (current.dim() > 0) {
    std::vector<int> leaf_columns;
    for (int p = 1; p <= current.dim(); ++p)
      if (current.column_is_zero(p)) leaf_columns.push_back(p);
    sig.push_back(static_cast<int>(leaf_columns.size()));
    for (auto it = leaf_columns.rbegin(); it != leaf_columns.rend(); ++it)
      current = quotient_by_leaf(current, *it);
  }
  return sig;
}

int cut_rank_gf2(const FanoBottMatrix& a, const std::vector<int>& rows) {
  const int d = a.dim();
  std::set<int> in_s;
  for (int r : rows) {
    if (r < 1 || r > d) throw std::out_of_range("row index out of range");
    in_s.insert(r);
  }
  std::vector<int> cols;
  for (int j = 1; j <= d; ++j)
    if (!in_s.count(j)) cols.push_back(j);

  const std::size_t words = (cols.size() + 63) / 64;
  std::vector<std::vector<std::uint64_t>> m;
  for (int r : in_s) {
    std::vector<std::uint64_t> bits(words, 0);
    for (std::size_t c = 0; c < cols.size(); ++c)
      if (a(r, cols[c]) & 1) bits[c / 64] |= std::uint64_t{1} << (c % 64);
    m.push_back(std::move(bits));
  }

  int rank = 0;
  for (std::size_t c = 0; c < cols.size() && rank < static_cast<int>(m.size()); ++c) {
    const std::size_t w = c / 64;
    const std::uint64_t bit = std::uint64_t{1} << (c % 64);
    auto pivot = std::find_if(m.begin() + rank, m.end(),
                              [&](const auto& row) { return (row[w] & bit) != 0; });
    if (pivot == m.end()) continue;
    std::iter_swap(m.begin() + rank, pivot);
    for (std::size_t r = 0; r < m.size(); ++r) {
      if (static_cast<int>(r) == rank || !(m[r][w] & bit)) continue;
      for (std::size_t k = 0; k < words; ++k) m[r][k] ^= m[rank][k];
    }
    ++rank;
  }
  return rank;
}

}  // namespace fanobott
