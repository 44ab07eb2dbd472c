#include "arf/json_io.hpp"

#include <algorithm>
#include <sstream>

namespace arf {

namespace {

std::vector<Int> int_array(const Json& j, const char* what) {
  if (!j.is_array()) throw Error("malformed_input", {}, std::string(what) + " must be an array");
  std::vector<Int> out;
  out.reserve(j.size());
  for (const Json& x : j) {
    if (!x.is_number_integer()) throw Error("malformed_input", {}, std::string(what) + " must hold integers");
    out.push_back(x.get<Int>());
  }
  return out;
}

}  // namespace

Json sequence_json(const Seq& q) {
  if (q.empty()) return Json::array({1});
  return Json(q);
}

Json collection_json(const Collection& e) {
  Json j = Json::array();
  for (const Seq& q : e) j.push_back(sequence_json(q));
  return j;
}

Json vec_json(const Vec& v) { return Json(v); }

Json vectors_json(const std::vector<Vec>& vs) {
  Json j = Json::array();
  for (const Vec& v : vs) j.push_back(vec_json(v));
  return j;
}

Json matrix_json(const Matrix& m) {
  Json j = Json::array();
  for (const std::vector<Int>& row : m) j.push_back(Json(row));
  return j;
}

Json level_json(const Level& k) { return k.is_finite() ? Json(k.value) : Json(nullptr); }

Json matrix_report_json(const MatrixReport& r) {
  Json j{{"ok", r.ok}};
  if (!r.ok) {
    j["issue"] = r.issue;
    j["at"] = r.issue == "triple" ? Json::array({r.i, r.j, r.k}) : Json::array({r.i, r.j});
  }
  return j;
}

Json vector_set_report_json(const VectorSetReport& r) {
  Json pairs = Json::array();
  for (auto [i, j] : r.pair_failures) pairs.push_back(Json::array({i, j}));
  return Json{{"ok", r.ok}, {"gcd_failures", r.gcd_failures}, {"pair_failures", pairs}};
}

Json closure_result_json(const ClosureResult& r) {
  Json pairs = Json::array();
  for (const PairDiagnostic& d : r.pairs) {
    pairs.push_back(Json{{"i", d.i}, {"j", d.j}, {"in_u", d.in_u}, {"k", level_json(d.k)}, {"p", d.p}});
  }
  return Json{{"sequences", collection_json(r.sequences)},
              {"matrix", matrix_json(r.matrix)},
              {"conductor", conductor(r.sequences, r.matrix)},
              {"diagnostics", Json{{"pairs", pairs}}}};
}

Json small_elements_json(const SmallElements& s) {
  return Json{{"conductor", s.conductor}, {"elements", vectors_json(s.elements)}};
}

Json character_data_json(const CharacterData& c) {
  return Json{{"restriction", c.restriction}, {"pchar", c.pchar}, {"characters", c.chars}};
}

Json generator_report_json(const GeneratorReport& r) {
  Json failed = Json::array();
  if (std::any_of(r.missing_chars.begin(), r.missing_chars.end(), [](const auto& v) { return !v.empty(); })) {
    failed.push_back("characters");
  }
  bool pair_p = false, pair_bound = false;
  Json pairs = Json::array();
  for (const PairCheck& c : r.pairs) {
    if (!c.ok) (c.in_p ? pair_p : pair_bound) = true;
    Json entry{{"q", c.q}, {"r", c.r},           {"in_p", c.in_p},         {"all_equal", c.all_equal},
               {"ok", c.ok}, {"required", c.required}};
    entry["realized"] = c.defined ? Json(c.realized) : Json(nullptr);
    pairs.push_back(std::move(entry));
  }
  if (pair_p) failed.push_back("pair_P");
  if (pair_bound) failed.push_back("pair_bound");
  Json missing = Json::array();
  for (const std::vector<Int>& v : r.missing_chars) missing.push_back(Json(v));
  return Json{{"valid", r.valid}, {"failed", failed}, {"missing_characters", missing}, {"pairs", pairs}};
}

Json generator_set_json(const GeneratorSet& g) {
  return Json{{"vectors", vectors_json(g.vectors)},
              {"tuples", vectors_json(g.tuples)},
              {"permutation", g.permutation}};
}

Json error_json(const Error& e) {
  return Json{{"error", e.code()}, {"args", e.args()}, {"message", e.what()}};
}

Seq parse_raw_sequence(const Json& j) {
  std::vector<Int> entries = int_array(j, "sequence");
  for (Int x : entries) {
    if (x < 1) throw Error("malformed_input", {x}, "sequence entries must be positive");
  }
  return canonical(std::move(entries));
}

Seq parse_sequence(const Json& j) { return validate_sequence(parse_raw_sequence(j)); }

Collection parse_collection(const Json& j) {
  if (!j.is_array() || j.empty()) throw Error("malformed_input", {}, "collection must be a nonempty array");
  Collection e;
  e.reserve(j.size());
  for (const Json& q : j) e.push_back(parse_sequence(q));
  return e;
}

Vec parse_vec(const Json& j) { return int_array(j, "vector"); }

std::vector<Vec> parse_vectors(const Json& j) {
  if (!j.is_array()) throw Error("malformed_input", {}, "vector list must be an array");
  std::vector<Vec> out;
  out.reserve(j.size());
  for (const Json& v : j) out.push_back(parse_vec(v));
  return out;
}

Matrix parse_matrix(const Json& j) {
  if (!j.is_array() || j.empty()) throw Error("malformed_input", {}, "matrix must be a nonempty array");
  Matrix m;
  m.reserve(j.size());
  for (const Json& row : j) m.push_back(int_array(row, "matrix row"));
  return m;
}

std::string dump(const Json& j) { return j.dump() + "\n"; }

std::string render_dot(const Collection& e, const Matrix& m, Int depth, const std::string& name) {
  // Nodes arrive level by level; a level starts whenever branch 1 reappears.
  std::vector<std::vector<TreeNode>> levels;
  for (TreeNode& node : tree_nodes(e, m, depth)) {
    if (node.branches[0] == 1) levels.emplace_back();
    levels.back().push_back(std::move(node));
  }
  auto id = [](size_t level, const TreeNode& node) {
    return "n" + std::to_string(level + 1) + "_" + std::to_string(node.branches[0]);
  };
  std::ostringstream out;
  out << "digraph " << name << " {\n  node [shape=box];\n";
  for (size_t l = 0; l < levels.size(); ++l) {
    for (const TreeNode& node : levels[l]) {
      out << "  " << id(l, node) << " [label=\"(";
      for (size_t i = 0; i < node.coords.size(); ++i) out << (i ? "," : "") << node.coords[i];
      out << ")\"];\n";
    }
  }
  for (size_t l = 1; l < levels.size(); ++l) {
    for (const TreeNode& node : levels[l]) {
      for (const TreeNode& parent : levels[l - 1]) {
        if (std::find(parent.branches.begin(), parent.branches.end(), node.branches[0]) != parent.branches.end()) {
          out << "  " << id(l - 1, parent) << " -> " << id(l, node) << ";\n";
          break;
        }
      }
    }
  }
  out << "}\n";
  return out.str();
}

}  // namespace arf
