// Upper triangular matrices of Fano Bott manifolds.
//
// All vertex labels, row and column indices in the public API are 1-based,
// matching the usual notation n_ij for the entries of A(X).

#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace fanobott {

enum class Sign : std::uint8_t { Plus, Minus };

constexpr Sign flipped(Sign s) { return s == Sign::Plus ? Sign::Minus : Sign::Plus; }
constexpr int to_int(Sign s) { return s == Sign::Plus ? 1 : -1; }
constexpr char to_char(Sign s) { return s == Sign::Plus ? '+' : '-'; }

/// Dense integer matrix with 1-based element access.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(int rows, int cols);

  static IntMatrix identity(int n);
  /// Throws std::invalid_argument on ragged input.
  static IntMatrix from_rows(const std::vector<std::vector<int>>& rows);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  int operator()(int i, int j) const { return data_[index(i, j)]; }
  int& operator()(int i, int j) { return data_[index(i, j)]; }

  std::vector<int> row(int i) const;
  std::vector<std::vector<int>> to_rows() const;

  IntMatrix operator*(const IntMatrix& rhs) const;

  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;
  friend auto operator<=>(const IntMatrix&, const IntMatrix&) = default;

 private:
  std::size_t index(int i, int j) const {
    return static_cast<std::size_t>(i - 1) * static_cast<std::size_t>(cols_) +
           static_cast<std::size_t>(j - 1);
  }

  int rows_ = 0;
  int cols_ = 0;
  std::vector<int> data_;
};

enum class Violation { NotUpperTriangular, EntryOutOfRange, RowConditionViolated };

std::string to_string(Violation v);

/// Why a grid is not in FB(d). `column` is 0 for row-level violations.
struct Rejection {
  Violation violation;
  int row;
  int column = 0;

  std::string message() const;
  friend bool operator==(const Rejection&, const Rejection&) = default;
};

class InvalidMatrix : public std::invalid_argument {
 public:
  explicit InvalidMatrix(Rejection r);
  const Rejection& rejection() const { return rejection_; }

 private:
  Rejection rejection_;
};

class FanoBottMatrix;

/// First offending row of a square grid, or nullopt if the grid is in FB(d).
/// Throws std::invalid_argument if the grid is not square.
std::optional<Rejection> check(const IntMatrix& grid);

/// Throws InvalidMatrix naming the lowest failing row.
FanoBottMatrix validate(const IntMatrix& grid);

/// A strictly upper triangular {0,±1} matrix in which every row is zero, a
/// unit row e^q, or -e^q + (row q) for some q after the row. Instances only
/// come out of validate(), so every value satisfies these conditions.
class FanoBottMatrix {
 public:
  static FanoBottMatrix zero(int d);

  int dim() const { return entries_.rows(); }
  int operator()(int i, int j) const { return entries_(i, j); }
  const IntMatrix& entries() const { return entries_; }

  bool row_is_zero(int p) const;
  bool column_is_zero(int q) const;

  friend bool operator==(const FanoBottMatrix&, const FanoBottMatrix&) = default;
  friend auto operator<=>(const FanoBottMatrix&, const FanoBottMatrix&) = default;

 private:
  explicit FanoBottMatrix(IntMatrix m) : entries_(std::move(m)) {}
  friend FanoBottMatrix validate(const IntMatrix& grid);

  IntMatrix entries_;
};

struct RowStructure {
  enum class Kind : std::uint8_t { Zero, Plus, MinusCopy };

  Kind kind = Kind::Zero;
  int target = 0;  // q; 0 for Kind::Zero

  friend auto operator<=>(const RowStructure&, const RowStructure&) = default;
};

RowStructure row_structure(const FanoBottMatrix& a, int p);

/// phi(i) is the parent of i, with d+1 for roots; sigma(i) is set exactly
/// where phi(i) <= d. Both vectors are indexed by i-1.
struct PhiSigma {
  int dim = 0;
  std::vector<int> phi;
  std::vector<std::optional<Sign>> sigma;

  friend bool operator==(const PhiSigma&, const PhiSigma&) = default;
};

class InvalidPhi : public std::invalid_argument {
 public:
  InvalidPhi(int vertex, const std::string& what);
  int vertex() const { return vertex_; }

 private:
  int vertex_;
};

PhiSigma to_phi_sigma(const FanoBottMatrix& a);

/// Reads every entry off upward paths: n_ij = 1 for a path of minus edges
/// capped by one plus edge, -1 for an all-minus path, 0 otherwise.
FanoBottMatrix from_phi_sigma(const PhiSigma& ps);

/// Visits FB(d) in lexicographic order of row choices, row d-1 slowest.
/// Within a row: Zero, then Plus(q) for increasing q, then MinusCopy(q).
void for_each_matrix(int d, const std::function<void(const FanoBottMatrix&)>& visit);
std::vector<FanoBottMatrix> enumerate(int d);

/// (2d-1)!!
std::uint64_t fano_bott_count(int d);

FanoBottMatrix direct_sum(const FanoBottMatrix& a, const FanoBottMatrix& b);

}  // namespace fanobott
