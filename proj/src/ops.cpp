#include "fanobott/ops.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>

#include "fanobott/io.hpp"

namespace fanobott {

IntMatrix op1(const IntMatrix& a, const Permutation& perm) {
  if (!a.is_square() || static_cast<int>(perm.size()) != a.rows() || !is_permutation(perm))
    throw std::invalid_argument("op1 needs a permutation of the matrix dimension");
  IntMatrix out(a.rows(), a.cols());
  for (int i = 1; i <= a.rows(); ++i)
    for (int j = 1; j <= a.cols(); ++j) out(perm[i - 1], perm[j - 1]) = a(i, j);
  return out;
}

FanoBottMatrix op2(const FanoBottMatrix& a, int k) {
  const int d = a.dim();
  if (k < 1 || k > d) throw std::out_of_range("op2: k out of range");
  IntMatrix out = a.entries();
  for (int j = 1; j <= d; ++j) {
    const int factor = j == k ? 0 : a(k, j);
    for (int i = 1; i <= d; ++i) {
      if (j == k) {
        out(i, j) = -a(i, k);
      } else if (factor != 0) {
        out(i, j) = a(i, j) + factor * a(i, k);
      }
    }
  }
  return validate(out);
}

Op3PreconditionFailed::Op3PreconditionFailed(int k, int l, const std::string& reason)
    : std::invalid_argument("op3(" + std::to_string(k) + "," + std::to_string(l) + "): " + reason),
      k_(k),
      l_(l) {}

namespace {

std::optional<std::string> op3_problem(const FanoBottMatrix& a, int k, int l) {
  const int d = a.dim();
  if (k < 1 || k > d || l < 1 || l > d || k == l) return "indices out of range";
  if (!a.row_is_zero(l)) return "row " + std::to_string(l) + " is not zero";
  for (int j = 1; j <= d; ++j) {
    const int v = a(k, j);
    if ((j == l && v == 0) || (j != l && v != 0))
      return "row " + std::to_string(k) + " is not +-e^" + std::to_string(l);
  }
  return std::nullopt;
}

}  // namespace

bool op3_applicable(const FanoBottMatrix& a, int k, int l) { return !op3_problem(a, k, l); }

FanoBottMatrix op3(const FanoBottMatrix& a, int k, int l) {
  if (auto why = op3_problem(a, k, l)) throw Op3PreconditionFailed(k, l, *why);
  IntMatrix out = a.entries();
  for (int i = 1; i <= a.dim(); ++i) {
    if (i == l) continue;
    if (i == k) {
      out(i, l) = -a(k, l);
    } else if (a(i, k) != 0) {
      out(i, l) = a(i, k) * a(i, l);
    }
  }
  return validate(out);
}

FanoBottMatrix apply_step(const FanoBottMatrix& a, const OpStep& step) {
  if (const auto* s = std::get_if<Op1>(&step)) return validate(op1(a.entries(), s->perm));
  if (const auto* s = std::get_if<Op2>(&step)) return op2(a, s->k);
  const auto& s3 = std::get<Op3>(step);
  return op3(a, s3.k, s3.l);
}

StepFailed::StepFailed(std::size_t index, const std::string& reason)
    : std::runtime_error("step " + std::to_string(index) + " failed: " + reason), index_(index) {}

FanoBottMatrix replay(const FanoBottMatrix& a, const std::vector<OpStep>& steps) {
  FanoBottMatrix current = a;
  for (std::size_t i = 0; i < steps.size(); ++i) {
    try {
      current = apply_step(current, steps[i]);
    } catch (const std::exception& e) {
      throw StepFailed(i, e.what());
    }
  }
  return current;
}

OpStep inverse(const OpStep& step) {
  if (const auto* s = std::get_if<Op1>(&step)) return Op1{inverse(s->perm)};
  return step;
}

ClosurePartition bfs_closure_classes(int d, Generators gens) {
  if (d < 1 || d > 5) throw std::invalid_argument("closure search supports 1 <= d <= 5");
  ClosurePartition part;
  part.states = enumerate(d);
  std::map<IntMatrix, int> index;
  for (std::size_t i = 0; i < part.states.size(); ++i)
    index.emplace(part.states[i].entries(), static_cast<int>(i));

  std::vector<Permutation> perms;
  if (gens.permutations) {
    Permutation p = identity_permutation(d);
    do perms.push_back(p);
    while (std::next_permutation(p.begin(), p.end()));
  }

  auto neighbours = [&](const FanoBottMatrix& a) {
    std::vector<int> out;
    if (gens.column_flips)
      for (int k = 1; k <= d; ++k) out.push_back(index.at(op2(a, k).entries()));
    if (gens.root_edge_flips)
      for (int k = 1; k <= d; ++k)
        for (int l = 1; l <= d; ++l)
          if (op3_applicable(a, k, l)) out.push_back(index.at(op3(a, k, l).entries()));
    for (const auto& p : perms) {
      IntMatrix m = op1(a.entries(), p);
      if (!check(m)) out.push_back(index.at(m));
    }
    return out;
  };

  part.class_of.assign(part.states.size(), -1);
  for (std::size_t start = 0; start < part.states.size(); ++start) {
    if (part.class_of[start] != -1) continue;
    const int id = part.class_count++;
    std::deque<int> queue{static_cast<int>(start)};
    part.class_of[start] = id;
    while (!queue.empty()) {
      const int cur = queue.front();
      queue.pop_front();
      for (int nb : neighbours(part.states[cur])) {
        if (part.class_of[nb] != -1) continue;
        part.class_of[nb] = id;
        queue.push_back(nb);
      }
    }
  }
  return part;
}

bool same_partition(const std::vector<int>& a, const std::vector<int>& b) {
  if (a.size() != b.size()) return false;
  std::map<int, int> ab;
  std::map<int, int> ba;
  for (std::size_t i = 0; i < a.size(); ++i) {
    auto [it1, new1] = ab.emplace(a[i], b[i]);
    auto [it2, new2] = ba.emplace(b[i], a[i]);
    if (it1->second != b[i] || it2->second != a[i]) return false;
  }
  return true;
}

DimensionMismatch::DimensionMismatch(int a, int b)
    : std::invalid_argument("dimension mismatch: " + std::to_string(a) + " vs " +
                            std::to_string(b)) {}

std::optional<OpSequence> find_witness(const FanoBottMatrix& a, const FanoBottMatrix& b,
                                       Mode mode) {
  if (a.dim() != b.dim()) throw DimensionMismatch(a.dim(), b.dim());
  if (mode == Mode::RootedIso)
    throw std::invalid_argument("rooted isomorphism is not realized by the operations");

  const SignedRootedForest ta = from_matrix(a);
  const SignedRootedForest tb = from_matrix(b);
  const CanonicalForm ca = canonicalize(ta, mode);
  const CanonicalForm cb = canonicalize(tb, mode);
  if (ca.code != cb.code) return std::nullopt;

  OpSequence seq;
  seq.source_sha = matrix_digest(a);
  seq.target_sha = matrix_digest(b);

  const Permutation perm = compose(inverse(cb.labeling), ca.labeling);
  if (perm != identity_permutation(a.dim())) seq.steps.emplace_back(Op1{perm});
  const SignedRootedForest moved = relabel(ta, perm);

  // After relabeling both forests have the same parent map; only signs differ.
  for (int v = 1; v <= b.dim(); ++v) {
    if (mode == Mode::Diffeo && tb.is_root(v)) continue;
    const auto kids = tb.children(v);
    if (!kids.empty() && moved.sign(kids.front()) != tb.sign(kids.front()))
      seq.steps.emplace_back(Op2{v});
  }
  if (mode == Mode::Diffeo) {
    for (int r : tb.roots())
      for (int c : tb.children(r))
        if (moved.sign(c) != tb.sign(c)) seq.steps.emplace_back(Op3{c, r});
  }

  if (replay(a, seq.steps) != b)
    throw std::logic_error("witness construction did not reach the target");
  return seq;
}

}  // namespace fanobott
