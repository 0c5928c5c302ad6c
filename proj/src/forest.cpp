#include "fanobott/forest.hpp"

#include <algorithm>
#include <functional>
#include <queue>
#include <sstream>

namespace fanobott {

Permutation identity_permutation(int n) {
  Permutation p(n);
  for (int i = 0; i < n; ++i) p[i] = i + 1;
  return p;
}

bool is_permutation(const Permutation& p) {
  std::vector<bool> seen(p.size(), false);
  for (int x : p) {
    if (x < 1 || x > static_cast<int>(p.size()) || seen[x - 1]) return false;
    seen[x - 1] = true;
  }
  return true;
}

Permutation inverse(const Permutation& p) {
  Permutation inv(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) inv[p[i] - 1] = static_cast<int>(i) + 1;
  return inv;
}

Permutation compose(const Permutation& outer, const Permutation& inner) {
  if (outer.size() != inner.size()) throw std::invalid_argument("permutation size mismatch");
  Permutation out(inner.size());
  for (std::size_t i = 0; i < inner.size(); ++i) out[i] = outer[inner[i] - 1];
  return out;
}

SignedRootedForest::SignedRootedForest(std::vector<int> parents,
                                       std::vector<std::optional<Sign>> signs)
    : parents_(std::move(parents)), signs_(std::move(signs)) {
  const int d = size();
  if (static_cast<int>(signs_.size()) != d)
    throw std::invalid_argument("parents and signs differ in length");
  for (int v = 1; v <= d; ++v) {
    const int p = parents_[v - 1];
    if (p < 0 || p > d || p == v)
      throw std::invalid_argument("vertex " + std::to_string(v) + " has invalid parent");
    if ((p == 0) == signs_[v - 1].has_value())
      throw std::invalid_argument("vertex " + std::to_string(v) +
                                  ": sign must be present exactly on non-roots");
  }
  // Every upward walk must reach a root within d steps.
  for (int v = 1; v <= d; ++v) {
    int u = v;
    for (int steps = 0; parents_[u - 1] != 0; ++steps) {
      if (steps > d) throw std::invalid_argument("parent relation has a cycle");
      u = parents_[u - 1];
    }
  }
}

std::optional<int> SignedRootedForest::parent(int v) const {
  const int p = parents_[v - 1];
  if (p == 0) return std::nullopt;
  return p;
}

std::vector<int> SignedRootedForest::children(int v) const {
  std::vector<int> out;
  for (int u = 1; u <= size(); ++u)
    if (parents_[u - 1] == v) out.push_back(u);
  return out;
}

std::vector<int> SignedRootedForest::roots() const {
  std::vector<int> out;
  for (int v = 1; v <= size(); ++v)
    if (parents_[v - 1] == 0) out.push_back(v);
  return out;
}

bool SignedRootedForest::is_leaf(int v) const {
  return std::find(parents_.begin(), parents_.end(), v) == parents_.end();
}

std::vector<int> SignedRootedForest::descendants(int v) const {
  std::vector<int> out;
  for (int u = 1; u <= size(); ++u) {
    int w = u;
    while (w != 0 && w != v) w = parents_[w - 1];
    if (w == v) out.push_back(u);
  }
  return out;
}

bool SignedRootedForest::is_label_ordered() const {
  for (int v = 1; v <= size(); ++v) {
    const int p = parents_[v - 1];
    if (p != 0 && p < v) return false;
  }
  return true;
}

SignedRootedForest from_matrix(const FanoBottMatrix& a) {
  const PhiSigma ps = to_phi_sigma(a);
  std::vector<int> parents(a.dim());
  for (int i = 1; i <= a.dim(); ++i) parents[i - 1] = ps.phi[i - 1] <= a.dim() ? ps.phi[i - 1] : 0;
  return SignedRootedForest(std::move(parents), ps.sigma);
}

LabelOrderViolated::LabelOrderViolated(int vertex)
    : std::invalid_argument("vertex " + std::to_string(vertex) +
                            " has a parent with a smaller label"),
      vertex_(vertex) {}

FanoBottMatrix to_matrix(const SignedRootedForest& t) {
  const int d = t.size();
  PhiSigma ps{d, std::vector<int>(d, d + 1), t.signs()};
  for (int v = 1; v <= d; ++v) {
    const int p = t.parents()[v - 1];
    if (p == 0) continue;
    if (p < v) throw LabelOrderViolated(v);
    ps.phi[v - 1] = p;
  }
  return from_phi_sigma(ps);
}

SignedRootedForest relabel(const SignedRootedForest& t, const Permutation& perm) {
  if (static_cast<int>(perm.size()) != t.size() || !is_permutation(perm))
    throw std::invalid_argument("not a permutation of the vertex set");
  std::vector<int> parents(t.size());
  std::vector<std::optional<Sign>> signs(t.size());
  for (int v = 1; v <= t.size(); ++v) {
    const int p = t.parents()[v - 1];
    parents[perm[v - 1] - 1] = p == 0 ? 0 : perm[p - 1];
    signs[perm[v - 1] - 1] = t.sign(v);
  }
  return SignedRootedForest(std::move(parents), std::move(signs));
}

Relabeling relabel_topological(const SignedRootedForest& t) {
  const int d = t.size();
  std::vector<int> pending(d, 0);
  for (int v = 1; v <= d; ++v)
    if (const int p = t.parents()[v - 1]; p != 0) ++pending[p - 1];

  std::priority_queue<int, std::vector<int>, std::greater<>> ready;
  for (int v = 1; v <= d; ++v)
    if (pending[v - 1] == 0) ready.push(v);

  Permutation perm(d, 0);
  int next = 1;
  while (!ready.empty()) {
    const int v = ready.top();
    ready.pop();
    perm[v - 1] = next++;
    if (const int p = t.parents()[v - 1]; p != 0 && --pending[p - 1] == 0) ready.push(p);
  }
  return {relabel(t, perm), perm};
}

std::vector<int> leaves(const SignedRootedForest& t) {
  std::vector<int> out;
  for (int v = 1; v <= t.size(); ++v)
    if (t.is_leaf(v)) out.push_back(v);
  return out;
}

NotALeaf::NotALeaf(int vertex)
    : std::invalid_argument("vertex " + std::to_string(vertex) + " is not a leaf"),
      vertex_(vertex) {}

SignedRootedForest leaf_cut(const SignedRootedForest& t, int v) {
  if (v < 1 || v > t.size() || !t.is_leaf(v)) throw NotALeaf(v);
  auto shift = [v](int u) { return u > v ? u - 1 : u; };
  std::vector<int> parents;
  std::vector<std::optional<Sign>> signs;
  for (int u = 1; u <= t.size(); ++u) {
    if (u == v) continue;
    const int p = t.parents()[u - 1];
    parents.push_back(p == 0 ? 0 : shift(p));
    signs.push_back(t.sign(u));
  }
  return SignedRootedForest(std::move(parents), std::move(signs));
}

SignedRootedForest flip_child_signs(const SignedRootedForest& t, int v) {
  auto signs = t.signs();
  for (int u : t.children(v)) signs[u - 1] = flipped(*signs[u - 1]);
  return SignedRootedForest(t.parents(), std::move(signs));
}

SignedRootedForest flip_edge_sign(const SignedRootedForest& t, int child) {
  if (t.is_root(child)) throw std::invalid_argument("a root has no parent edge");
  auto signs = t.signs();
  signs[child - 1] = flipped(*signs[child - 1]);
  return SignedRootedForest(t.parents(), std::move(signs));
}

std::string_view to_string(Mode m) {
  switch (m) {
    case Mode::RootedIso:
      return "rooted";
    case Mode::Variety:
      return "variety";
    case Mode::Diffeo:
      return "diffeo";
  }
  return "unknown";
}

std::optional<Mode> parse_mode(std::string_view s) {
  if (s == "rooted" || s == "rooted-iso") return Mode::RootedIso;
  if (s == "variety") return Mode::Variety;
  if (s == "diffeo") return Mode::Diffeo;
  return std::nullopt;
}

namespace {

struct Token {
  const std::string* code;
  Sign sign;
  int child;
};

// Orders by child code, then sign (+ before -), then label for stability.
bool token_less(const Token& a, const Token& b) {
  if (int c = a.code->compare(*b.code); c != 0) return c < 0;
  if (a.sign != b.sign) return a.sign < b.sign;
  return a.child < b.child;
}

// Lexicographic comparison of two sorted token lists, labels ignored.
bool tokens_less(const std::vector<Token>& a, const std::vector<Token>& b) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (int c = a[i].code->compare(*b[i].code); c != 0) return c < 0;
    if (a[i].sign != b[i].sign) return a[i].sign < b[i].sign;
  }
  return false;
}

std::vector<int> children_first_order(const SignedRootedForest& t) {
  std::vector<int> order;
  std::vector<std::vector<int>> kids(t.size() + 1);
  for (int v = 1; v <= t.size(); ++v)
    if (const int p = t.parents()[v - 1]; p != 0) kids[p].push_back(v);
  std::vector<std::pair<int, std::size_t>> stack;
  for (int r : t.roots()) {
    stack.emplace_back(r, 0);
    while (!stack.empty()) {
      auto& [v, next] = stack.back();
      if (next < kids[v].size()) {
        const int c = kids[v][next++];
        stack.emplace_back(c, 0);
      } else {
        order.push_back(v);
        stack.pop_back();
      }
    }
  }
  return order;
}

}  // namespace

CanonicalForm canonicalize(const SignedRootedForest& t, Mode mode) {
  const int d = t.size();
  std::vector<std::string> code(d + 1);
  std::vector<std::vector<Token>> ordered(d + 1);
  std::vector<bool> flips(d, false);
  std::vector<bool> signed_children(d + 1, false);

  std::vector<std::vector<int>> kids(d + 1);
  for (int v = 1; v <= d; ++v)
    if (const int p = t.parents()[v - 1]; p != 0) kids[p].push_back(v);

  for (int v : children_first_order(t)) {
    const bool use_signs = mode == Mode::Variety || (mode == Mode::Diffeo && !t.is_root(v));
    signed_children[v] = use_signs;

    std::vector<Token> as_is;
    for (int c : kids[v])
      as_is.push_back({&code[c], use_signs ? *t.sign(c) : Sign::Plus, c});
    std::sort(as_is.begin(), as_is.end(), token_less);

    std::vector<Token> chosen = as_is;
    if (use_signs) {
      std::vector<Token> swapped = as_is;
      for (auto& tok : swapped) tok.sign = flipped(tok.sign);
      std::sort(swapped.begin(), swapped.end(), token_less);
      if (tokens_less(swapped, as_is)) {
        chosen = std::move(swapped);
        flips[v - 1] = true;
      }
    }

    std::string text = "(";
    for (const auto& tok : chosen) {
      if (use_signs) text += to_char(tok.sign);
      text += *tok.code;
    }
    text += ')';
    code[v] = std::move(text);
    ordered[v] = std::move(chosen);
  }

  std::vector<int> roots = t.roots();
  std::sort(roots.begin(), roots.end(), [&](int a, int b) {
    if (int c = code[a].compare(code[b]); c != 0) return c < 0;
    return a < b;
  });

  CanonicalForm form;
  form.code.mode = mode;
  for (int r : roots) form.code.text += code[r];
  form.flipped = std::move(flips);

  // Post-order labels: each subtree's children in canonical order, then itself.
  form.labeling.assign(d, 0);
  int next = 1;
  std::function<void(int)> assign = [&](int v) {
    for (const auto& tok : ordered[v]) assign(tok.child);
    form.labeling[v - 1] = next++;
  };
  for (int r : roots) assign(r);

  std::vector<int> parents(d, 0);
  std::vector<std::optional<Sign>> signs(d);
  for (int v = 1; v <= d; ++v) {
    for (const auto& tok : ordered[v]) {
      const int c = form.labeling[tok.child - 1];
      parents[c - 1] = form.labeling[v - 1];
      signs[c - 1] = signed_children[v] ? tok.sign : Sign::Plus;
    }
  }
  form.normalized = SignedRootedForest(std::move(parents), std::move(signs));
  return form;
}

CanonicalCode canonical_code(const SignedRootedForest& t, Mode mode) {
  return canonicalize(t, mode).code;
}

bool equivalent(const SignedRootedForest& a, const SignedRootedForest& b, Mode mode) {
  return a.size() == b.size() && canonical_code(a, mode) == canonical_code(b, mode);
}

std::string render_dot(const SignedRootedForest& t) {
  std::ostringstream os;
  os << "digraph forest {\n";
  for (int v = 1; v <= t.size(); ++v) {
    os << "  v" << v;
    if (t.is_root(v)) os << " [shape=doublecircle]";
    os << ";\n";
  }
  for (int v = 1; v <= t.size(); ++v) {
    if (t.is_root(v)) continue;
    os << "  v" << t.parents()[v - 1] << " -> v" << v << " [label=\"" << to_char(*t.sign(v))
       << "\"];\n";
  }
  os << "}\n";
  return os.str();
}

}  // namespace fanobott
