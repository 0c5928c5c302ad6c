// Signed rooted forests T_X and their canonical forms.

#pragma once

#include <compare>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "fanobott/matrix.hpp"

namespace fanobott {

/// Image vector of a permutation of [n]: perm[i-1] = pi(i).
using Permutation = std::vector<int>;

Permutation identity_permutation(int n);
Permutation inverse(const Permutation& p);
/// (outer o inner)(i) = outer(inner(i)).
Permutation compose(const Permutation& outer, const Permutation& inner);
bool is_permutation(const Permutation& p);

/// Vertices 1..d, each either a root or attached to a parent by a signed edge.
class SignedRootedForest {
 public:
  SignedRootedForest() = default;
  /// parents[v-1] is the parent of v or 0 for a root; signs[v-1] is the sign
  /// of the edge to the parent and must be empty exactly at roots. Throws
  /// std::invalid_argument on cycles, dangling parents or sign mismatches.
  SignedRootedForest(std::vector<int> parents, std::vector<std::optional<Sign>> signs);

  int size() const { return static_cast<int>(parents_.size()); }
  bool is_root(int v) const { return parents_[v - 1] == 0; }
  std::optional<int> parent(int v) const;
  std::optional<Sign> sign(int v) const { return signs_[v - 1]; }

  const std::vector<int>& parents() const { return parents_; }
  const std::vector<std::optional<Sign>>& signs() const { return signs_; }

  std::vector<int> children(int v) const;
  std::vector<int> roots() const;
  bool is_leaf(int v) const;
  /// Vertices of the subtree hanging from v, v included, in increasing order.
  std::vector<int> descendants(int v) const;
  /// parent(v) > v for every non-root v.
  bool is_label_ordered() const;

  friend bool operator==(const SignedRootedForest&, const SignedRootedForest&) = default;

 private:
  std::vector<int> parents_;
  std::vector<std::optional<Sign>> signs_;
};

SignedRootedForest from_matrix(const FanoBottMatrix& a);

class LabelOrderViolated : public std::invalid_argument {
 public:
  explicit LabelOrderViolated(int vertex);
  int vertex() const { return vertex_; }

 private:
  int vertex_;
};

/// Throws LabelOrderViolated on the first v with parent(v) < v.
FanoBottMatrix to_matrix(const SignedRootedForest& t);

/// Vertex v of t becomes perm(v).
SignedRootedForest relabel(const SignedRootedForest& t, const Permutation& perm);

struct Relabeling {
  SignedRootedForest forest;
  Permutation permutation;  // old label -> new label
};

/// Children before parents; among the vertices whose children are all
/// placed, the smallest original label goes first. Identity on ordered input.
Relabeling relabel_topological(const SignedRootedForest& t);

std::vector<int> leaves(const SignedRootedForest& t);

class NotALeaf : public std::invalid_argument {
 public:
  explicit NotALeaf(int vertex);
  int vertex() const { return vertex_; }

 private:
  int vertex_;
};

/// Deletes leaf v; labels above v shift down by one.
SignedRootedForest leaf_cut(const SignedRootedForest& t, int v);

SignedRootedForest flip_child_signs(const SignedRootedForest& t, int v);
SignedRootedForest flip_edge_sign(const SignedRootedForest& t, int child);

/// Equivalence groups acting on forests:
///   RootedIso  rooted-forest isomorphism, signs ignored;
///   Variety    isomorphism plus simultaneous flip of all child edges at any vertex;
///   Diffeo     Variety plus independent flips of edges incident to roots.
enum class Mode { RootedIso, Variety, Diffeo };

std::string_view to_string(Mode m);
std::optional<Mode> parse_mode(std::string_view s);

struct CanonicalCode {
  Mode mode = Mode::Variety;
  std::string text;

  friend bool operator==(const CanonicalCode&, const CanonicalCode&) = default;
  friend auto operator<=>(const CanonicalCode&, const CanonicalCode&) = default;
};

/// A canonical code together with the normalization that realizes it.
struct CanonicalForm {
  CanonicalCode code;
  /// labeling[v-1] is the canonical (post-order) label of v.
  Permutation labeling;
  /// flipped[v-1]: whether the child edges of v were flipped as a group.
  std::vector<bool> flipped;
  /// Relabeled by `labeling`, group flips applied, signs erased to + where
  /// the mode ignores them. Always label-ordered.
  SignedRootedForest normalized;
};

CanonicalForm canonicalize(const SignedRootedForest& t, Mode mode);
CanonicalCode canonical_code(const SignedRootedForest& t, Mode mode);
bool equivalent(const SignedRootedForest& a, const SignedRootedForest& b, Mode mode);

std::string render_dot(const SignedRootedForest& t);

}  // namespace fanobott
