// The three operations on FB(d), replayable operation sequences, and the
// exhaustive closure used as ground truth for small dimensions.

#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "fanobott/forest.hpp"
#include "fanobott/matrix.hpp"

namespace fanobott {

/// Conjugation by the permutation matrix of `perm`.
struct Op1 {
  Permutation perm;
  friend bool operator==(const Op1&, const Op1&) = default;
};

/// Negate column k and add A(k,j) times column k to every other column j.
struct Op2 {
  int k;
  friend bool operator==(const Op2&, const Op2&) = default;
};

/// Flip the edge between root l and its child k.
struct Op3 {
  int k;
  int l;
  friend bool operator==(const Op3&, const Op3&) = default;
};

using OpStep = std::variant<Op1, Op2, Op3>;

struct OpSequence {
  std::vector<OpStep> steps;
  std::string source_sha;
  std::string target_sha;
};

/// entry(pi(i), pi(j)) of the result is entry(i, j) of `a`. The result need
/// not be upper triangular.
IntMatrix op1(const IntMatrix& a, const Permutation& perm);

FanoBottMatrix op2(const FanoBottMatrix& a, int k);

class Op3PreconditionFailed : public std::invalid_argument {
 public:
  Op3PreconditionFailed(int k, int l, const std::string& reason);
  int k() const { return k_; }
  int l() const { return l_; }

 private:
  int k_;
  int l_;
};

/// Requires row l to be zero and row k to be +-e^l.
bool op3_applicable(const FanoBottMatrix& a, int k, int l);
FanoBottMatrix op3(const FanoBottMatrix& a, int k, int l);

/// Applies one step; Op1 results are validated and may throw InvalidMatrix.
FanoBottMatrix apply_step(const FanoBottMatrix& a, const OpStep& step);

class StepFailed : public std::runtime_error {
 public:
  StepFailed(std::size_t index, const std::string& reason);
  std::size_t index() const { return index_; }

 private:
  std::size_t index_;
};

FanoBottMatrix replay(const FanoBottMatrix& a, const std::vector<OpStep>& steps);

OpStep inverse(const OpStep& step);

struct Generators {
  bool permutations = true;
  bool column_flips = true;
  bool root_edge_flips = true;
};

/// Connected components of FB(d) under the chosen generators, with states
/// listed in enumeration order. Class ids are numbered by first occurrence.
struct ClosurePartition {
  std::vector<FanoBottMatrix> states;
  std::vector<int> class_of;
  int class_count = 0;
};

/// Requires 1 <= d <= 5.
ClosurePartition bfs_closure_classes(int d, Generators gens = {});

/// True when two labelings of the same items induce the same partition.
bool same_partition(const std::vector<int>& a, const std::vector<int>& b);

class DimensionMismatch : public std::invalid_argument {
 public:
  DimensionMismatch(int a, int b);
};

/// A sequence taking `a` to `b`: one Op1 realizing the canonical
/// isomorphism, then Op2 at every vertex whose child signs disagree as a
/// group, then (Diffeo mode) Op3 on each root edge still disagreeing.
/// Returns nullopt when the canonical codes differ. Mode must be Variety
/// or Diffeo.
std::optional<OpSequence> find_witness(const FanoBottMatrix& a, const FanoBottMatrix& b,
                                       Mode mode = Mode::Diffeo);

}  // namespace fanobott
