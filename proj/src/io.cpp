#include "fanobott/io.hpp"

#include <openssl/evp.h>

#include <array>
#include <cstdio>

namespace fanobott {

json to_json(const IntMatrix& m) { return m.to_rows(); }

json to_json(const FanoBottMatrix& a) {
  return json{{"dim", a.dim()}, {"entries", to_json(a.entries())}};
}

json to_json(const Rejection& r) {
  json j{{"row", r.row}, {"violation", to_string(r.violation)}};
  if (r.column != 0) j["column"] = r.column;
  j["message"] = r.message();
  return j;
}

json to_json(const SignedRootedForest& t) {
  json signs = json::array();
  for (const auto& s : t.signs()) signs.push_back(s ? std::string(1, to_char(*s)) : "");
  return json{{"size", t.size()}, {"parents", t.parents()}, {"signs", signs}};
}

namespace {

json step_to_json(const OpStep& step) {
  if (const auto* s = std::get_if<Op1>(&step)) return json{{"op", "p"}, {"perm", s->perm}};
  if (const auto* s = std::get_if<Op2>(&step)) return json{{"op", "2"}, {"k", s->k}};
  const auto& s = std::get<Op3>(step);
  return json{{"op", "3"}, {"k", s.k}, {"l", s.l}};
}

OpStep step_from_json(const json& j) {
  const std::string op = j.at("op").get<std::string>();
  if (op == "p") return Op1{j.at("perm").get<Permutation>()};
  if (op == "2") return Op2{j.at("k").get<int>()};
  if (op == "3") return Op3{j.at("k").get<int>(), j.at("l").get<int>()};
  throw FormatError("unknown op \"" + op + "\"");
}

}  // namespace

json to_json(const OpSequence& seq) {
  json steps = json::array();
  for (const auto& s : seq.steps) steps.push_back(step_to_json(s));
  return json{{"steps", steps}, {"source_sha", seq.source_sha}, {"target_sha", seq.target_sha}};
}

json to_json(const SveInventory& inv) {
  json partners = json::array();
  for (const auto& pf : inv.g_prime)
    partners.push_back(json{{"p", pf.p}, {"q", pf.q}, {"sign", pf.sign}});
  return json{{"h", inv.h},
              {"g", inv.g},
              {"g_prime", partners},
              {"maximal_basis_number", inv.maximal_basis_number}};
}

json to_json(const DiffeoCertificate& cert) {
  return json{{"witness", to_json(cert.witness)},
              {"M", to_json(cert.source.matrix())},
              {"M_transformed", to_json(cert.transformed.matrix())},
              {"M_target", to_json(cert.target.matrix())},
              {"flipped_subtrees", cert.flipped_subtrees},
              {"diagonals", cert.diagonals},
              {"row_signs", json{{"plus", cert.signs.plus_signs}, {"minus", cert.signs.minus_signs}}},
              {"certified", cert.signs.matches}};
}

IntMatrix grid_from_json(const json& j) {
  try {
    const json& rows = j.is_object() ? j.at("entries") : j;
    if (!rows.is_array()) throw FormatError("matrix entries must be an array of rows");
    IntMatrix m = IntMatrix::from_rows(rows.get<std::vector<std::vector<int>>>());
    if (!m.is_square()) throw FormatError("matrix is not square");
    if (j.is_object() && j.contains("dim") && j.at("dim").get<int>() != m.rows())
      throw FormatError("\"dim\" does not match the number of rows");
    return m;
  } catch (const json::exception& e) {
    throw FormatError(std::string("bad matrix JSON: ") + e.what());
  } catch (const std::invalid_argument& e) {
    throw FormatError(e.what());
  }
}

SignedRootedForest forest_from_json(const json& j) {
  try {
    auto parents = j.at("parents").get<std::vector<int>>();
    const auto raw = j.at("signs").get<std::vector<std::string>>();
    if (j.contains("size") && j.at("size").get<std::size_t>() != parents.size())
      throw FormatError("\"size\" does not match \"parents\"");
    std::vector<std::optional<Sign>> signs;
    for (const auto& s : raw) {
      if (s.empty()) {
        signs.emplace_back();
      } else if (s == "+") {
        signs.emplace_back(Sign::Plus);
      } else if (s == "-" || s == "−") {
        signs.emplace_back(Sign::Minus);
      } else {
        throw FormatError("bad sign \"" + s + "\"");
      }
    }
    return SignedRootedForest(std::move(parents), std::move(signs));
  } catch (const json::exception& e) {
    throw FormatError(std::string("bad forest JSON: ") + e.what());
  } catch (const std::invalid_argument& e) {
    throw FormatError(e.what());
  }
}

OpSequence witness_from_json(const json& j) {
  try {
    OpSequence seq;
    for (const auto& s : j.at("steps")) seq.steps.push_back(step_from_json(s));
    seq.source_sha = j.value("source_sha", "");
    seq.target_sha = j.value("target_sha", "");
    return seq;
  } catch (const json::exception& e) {
    throw FormatError(std::string("bad witness JSON: ") + e.what());
  }
}

std::string matrix_digest(const FanoBottMatrix& a) {
  const std::string text = to_json(a).dump();
  std::array<unsigned char, EVP_MAX_MD_SIZE> md{};
  unsigned int len = 0;
  if (EVP_Digest(text.data(), text.size(), md.data(), &len, EVP_sha256(), nullptr) != 1)
    throw std::runtime_error("SHA-256 failed");
  std::string hex;
  hex.reserve(2 * len);
  for (unsigned int i = 0; i < len; ++i) {
    char buf[3];
    std::snprintf(buf, sizeof buf, "%02x", md[i]);
    hex += buf;
  }
  return hex;
}

}  // namespace fanobott
