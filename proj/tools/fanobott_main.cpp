// fanobott: command-line front end for Fano Bott classification.
//
// Exit codes: 0 success / affirmative, 1 negative result (invalid matrix,
// not equivalent, failed certificate, oracle disagreement), 2 usage or I/O.

#include <algorithm>
#include <array>
#include <fstream>
#include <iostream>
#include <iterator>
#include <map>
#include <sstream>
#include <thread>

#include <CLI11.hpp>

#include "fanobott/cohomology.hpp"
#include "fanobott/fan.hpp"
#include "fanobott/forest.hpp"
#include "fanobott/io.hpp"
#include "fanobott/matrix.hpp"
#include "fanobott/ops.hpp"

namespace {

using namespace fanobott;

constexpr int kOk = 0;
constexpr int kNegative = 1;
constexpr int kUsage = 2;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Options {
  bool inline_json = false;
  int dim = 0;
  bool count_only = false;
  std::string mode = "diffeo";
  int jobs = 1;
  std::vector<std::string> inputs;
};

std::string read_source(const std::string& arg, bool inline_json) {
  if (inline_json) return arg;
  if (arg == "-") {
    return std::string(std::istreambuf_iterator<char>(std::cin), {});
  }
  std::ifstream in(arg);
  if (!in) throw UsageError("cannot read " + arg);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

json parse_json(const std::string& arg, bool inline_json) {
  try {
    return json::parse(read_source(arg, inline_json));
  } catch (const json::parse_error& e) {
    throw UsageError("malformed JSON in " + (inline_json ? std::string("inline input") : arg));
  }
}

FanoBottMatrix load_matrix(const std::string& arg, bool inline_json) {
  const IntMatrix grid = grid_from_json(parse_json(arg, inline_json));
  if (auto r = check(grid)) throw UsageError("input is not in FB(d): " + r->message());
  return validate(grid);
}

Mode load_mode(const std::string& s) {
  if (auto m = parse_mode(s)) return *m;
  throw UsageError("unknown mode \"" + s + "\" (expected variety, diffeo or rooted)");
}

void need_inputs(const Options& o, std::size_t n) {
  if (o.inputs.size() != n)
    throw UsageError("expected " + std::to_string(n) + " input(s), got " +
                     std::to_string(o.inputs.size()));
}

void print(const json& j) { std::cout << j.dump(2) << '\n'; }

std::vector<CanonicalCode> codes_for(const std::vector<FanoBottMatrix>& all, Mode mode,
                                     int jobs) {
  std::vector<CanonicalCode> codes(all.size());
  const std::size_t workers = static_cast<std::size_t>(std::max(1, jobs));
  const std::size_t chunk = (all.size() + workers - 1) / workers;
  std::vector<std::thread> pool;
  for (std::size_t w = 0; w < workers; ++w) {
    const std::size_t begin = w * chunk;
    const std::size_t end = std::min(all.size(), begin + chunk);
    if (begin >= end) break;
    pool.emplace_back([&, begin, end] {
      for (std::size_t i = begin; i < end; ++i)
        codes[i] = canonical_code(from_matrix(all[i]), mode);
    });
  }
  for (auto& t : pool) t.join();
  return codes;
}

std::vector<int> classes_by_code(const std::vector<CanonicalCode>& codes) {
  std::map<CanonicalCode, int> ids;
  std::vector<int> out;
  out.reserve(codes.size());
  for (const auto& c : codes) out.push_back(ids.emplace(c, static_cast<int>(ids.size())).first->second);
  return out;
}

int cmd_validate(const Options& o) {
  need_inputs(o, 1);
  const IntMatrix grid = grid_from_json(parse_json(o.inputs[0], o.inline_json));
  if (auto r = check(grid)) {
    print(json{{"valid", false}, {"error", to_json(*r)}});
    return kNegative;
  }
  print(json{{"valid", true}, {"matrix", to_json(validate(grid))}});
  return kOk;
}

int cmd_enumerate(const Options& o) {
  if (o.dim < 1) throw UsageError("-d must be positive");
  if (o.count_only) {
    std::uint64_t n = 0;
    for_each_matrix(o.dim, [&](const FanoBottMatrix&) { ++n; });
    std::cout << n << '\n';
    return kOk;
  }
  for_each_matrix(o.dim, [](const FanoBottMatrix& a) { std::cout << to_json(a).dump() << '\n'; });
  return kOk;
}

int cmd_classify(const Options& o) {
  if (o.dim < 1) throw UsageError("-d must be positive");
  const Mode mode = load_mode(o.mode);
  const auto all = enumerate(o.dim);
  const auto codes = codes_for(all, mode, o.jobs);

  std::map<CanonicalCode, std::size_t> slot;
  json classes = json::array();
  for (std::size_t i = 0; i < all.size(); ++i) {
    auto [it, fresh] = slot.emplace(codes[i], classes.size());
    if (fresh) {
      classes.push_back(json{{"code", codes[i].text},
                             {"size", 0},
                             {"representative", to_json(all[i].entries())}});
    }
    classes[it->second]["size"] = classes[it->second]["size"].get<int>() + 1;
  }
  print(json{{"dim", o.dim},
             {"mode", std::string(to_string(mode))},
             {"matrices", all.size()},
             {"class_count", classes.size()},
             {"classes", classes}});
  return kOk;
}

int cmd_canon(const Options& o) {
  need_inputs(o, 1);
  const Mode mode = load_mode(o.mode);
  const auto a = load_matrix(o.inputs[0], o.inline_json);
  std::cout << canonical_code(from_matrix(a), mode).text << '\n';
  return kOk;
}

int cmd_equiv(const Options& o) {
  need_inputs(o, 2);
  const Mode mode = load_mode(o.mode);
  const auto a = load_matrix(o.inputs[0], o.inline_json);
  const auto b = load_matrix(o.inputs[1], o.inline_json);
  const bool same = equivalent(from_matrix(a), from_matrix(b), mode);
  std::cout << (same ? "true" : "false") << '\n';
  return same ? kOk : kNegative;
}

int cmd_witness(const Options& o) {
  need_inputs(o, 2);
  const Mode mode = load_mode(o.mode);
  if (mode == Mode::RootedIso) throw UsageError("witnesses exist only for variety or diffeo");
  const auto a = load_matrix(o.inputs[0], o.inline_json);
  const auto b = load_matrix(o.inputs[1], o.inline_json);
  if (a.dim() != b.dim()) throw UsageError("matrices differ in dimension");
  const auto w = find_witness(a, b, mode);
  if (!w) {
    print(json{{"equivalent", false}});
    return kNegative;
  }
  print(to_json(*w));
  return kOk;
}

int cmd_certify(const Options& o) {
  need_inputs(o, 3);
  const auto a = load_matrix(o.inputs[0], o.inline_json);
  const auto b = load_matrix(o.inputs[1], o.inline_json);
  if (a.dim() != b.dim()) throw UsageError("matrices differ in dimension");
  const OpSequence w = witness_from_json(parse_json(o.inputs[2], o.inline_json));
  try {
    print(to_json(certify_diffeo(a, b, w)));
    return kOk;
  } catch (const CertificateFailed& e) {
    print(json{{"certified", false}, {"row", e.row()}, {"reason", e.what()}});
    return kNegative;
  } catch (const StepFailed& e) {
    print(json{{"certified", false}, {"step", e.index()}, {"reason", e.what()}});
    return kNegative;
  }
}

int cmd_sve(const Options& o) {
  need_inputs(o, 1);
  print(to_json(enumerate_sve(load_matrix(o.inputs[0], o.inline_json))));
  return kOk;
}

int cmd_peel(const Options& o) {
  need_inputs(o, 1);
  std::cout << json(peel_signature(load_matrix(o.inputs[0], o.inline_json))).dump() << '\n';
  return kOk;
}

int cmd_forest_dot(const Options& o) {
  need_inputs(o, 1);
  std::cout << render_dot(from_matrix(load_matrix(o.inputs[0], o.inline_json)));
  return kOk;
}

int cmd_oracle(const Options& o) {
  if (o.dim < 1 || o.dim > 5) throw UsageError("oracle supports 1 <= d <= 5");
  const auto full = bfs_closure_classes(o.dim);
  const auto variety_bfs = bfs_closure_classes(o.dim, {true, true, false});
  const auto diffeo = classes_by_code(codes_for(full.states, Mode::Diffeo, o.jobs));
  const auto variety = classes_by_code(codes_for(full.states, Mode::Variety, o.jobs));
  const bool diffeo_ok = same_partition(full.class_of, diffeo);
  const bool variety_ok = same_partition(variety_bfs.class_of, variety);
  auto count = [](const std::vector<int>& ids) {
    return ids.empty() ? 0 : *std::max_element(ids.begin(), ids.end()) + 1;
  };
  print(json{{"dim", o.dim},
             {"matrices", full.states.size()},
             {"diffeo", {{"bfs_classes", full.class_count},
                         {"code_classes", count(diffeo)},
                         {"agree", diffeo_ok}}},
             {"variety", {{"bfs_classes", variety_bfs.class_count},
                          {"code_classes", count(variety)},
                          {"agree", variety_ok}}}});
  return diffeo_ok && variety_ok ? kOk : kNegative;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Classify Fano Bott manifolds via signed rooted forests"};
  app.fallthrough();
  app.require_subcommand(1);
  Options opt;
  app.add_flag("--inline", opt.inline_json, "Treat inputs as JSON text instead of file paths");

  // scalar positionals, so bracketed JSON text is not split into a list
  std::array<std::string, 3> raw;
  std::map<CLI::App*, std::size_t> arity;
  auto inputs = [&](CLI::App* sub, std::initializer_list<const char*> names) {
    std::size_t i = 0;
    for (const char* name : names)
      sub->add_option(name, raw[i++], "Path, '-' for stdin, or JSON text with --inline")->required();
    arity[sub] = i;
  };
  auto mode = [&](CLI::App* sub, const std::string& fallback) {
    opt.mode = fallback;
    sub->add_option("--mode,-m", opt.mode, "variety | diffeo | rooted")->capture_default_str();
  };
  auto jobs = [&](CLI::App* sub) {
    sub->add_option("--jobs,-j", opt.jobs, "Worker threads")->check(CLI::PositiveNumber);
  };

  std::map<CLI::App*, int (*)(const Options&)> handlers;

  auto* validate_cmd = app.add_subcommand("validate", "Check membership in FB(d)");
  inputs(validate_cmd, {"matrix"});
  handlers[validate_cmd] = cmd_validate;

  auto* enumerate_cmd = app.add_subcommand("enumerate", "List FB(d), one matrix per line");
  enumerate_cmd->add_option("-d,--dim", opt.dim, "Dimension")->required();
  enumerate_cmd->add_flag("--count", opt.count_only, "Print only the number of matrices");
  handlers[enumerate_cmd] = cmd_enumerate;

  auto* classify_cmd = app.add_subcommand("classify", "Group FB(d) into canonical classes");
  classify_cmd->add_option("-d,--dim", opt.dim, "Dimension")->required();
  classify_cmd->add_option("--mode,-m", opt.mode, "variety | diffeo | rooted")->required();
  jobs(classify_cmd);
  handlers[classify_cmd] = cmd_classify;

  auto* canon_cmd = app.add_subcommand("canon", "Print the canonical code of a matrix");
  inputs(canon_cmd, {"matrix"});
  canon_cmd->add_option("--mode,-m", opt.mode, "variety | diffeo | rooted")->required();
  handlers[canon_cmd] = cmd_canon;

  auto* equiv_cmd = app.add_subcommand("equiv", "Decide equivalence of two matrices");
  inputs(equiv_cmd, {"a", "b"});
  equiv_cmd->add_option("--mode,-m", opt.mode, "variety | diffeo | rooted")->required();
  handlers[equiv_cmd] = cmd_equiv;

  auto* witness_cmd = app.add_subcommand("witness", "Emit an operation sequence A -> B");
  inputs(witness_cmd, {"a", "b"});
  mode(witness_cmd, "diffeo");
  handlers[witness_cmd] = cmd_witness;

  auto* certify_cmd = app.add_subcommand("certify", "Check a ray-matrix diffeomorphism certificate");
  inputs(certify_cmd, {"a", "b", "witness"});
  handlers[certify_cmd] = cmd_certify;

  auto* sve_cmd = app.add_subcommand("sve", "List square-vanishing elements");
  inputs(sve_cmd, {"matrix"});
  handlers[sve_cmd] = cmd_sve;

  auto* peel_cmd = app.add_subcommand("peel", "Leaf counts under repeated leaf cutting");
  inputs(peel_cmd, {"matrix"});
  handlers[peel_cmd] = cmd_peel;

  auto* dot_cmd = app.add_subcommand("forest-dot", "Render the signed rooted forest as DOT");
  inputs(dot_cmd, {"matrix"});
  handlers[dot_cmd] = cmd_forest_dot;

  auto* oracle_cmd = app.add_subcommand("oracle", "Cross-check canonical codes against BFS closure");
  oracle_cmd->add_option("-d,--dim", opt.dim, "Dimension (at most 5)")->required();
  jobs(oracle_cmd);
  handlers[oracle_cmd] = cmd_oracle;

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    for (const auto& [sub, handler] : handlers) {
      if (!sub->parsed()) continue;
      if (auto it = arity.find(sub); it != arity.end())
        opt.inputs.assign(raw.begin(), raw.begin() + static_cast<std::ptrdiff_t>(it->second));
      return handler(opt);
    }
  } catch (const std::exception& e) {
    std::cerr << "fanobott: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}
