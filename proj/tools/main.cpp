#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <string>

#include "arf/json_io.hpp"

namespace arf {

namespace {

Json read_input(const std::string& path) {
  std::string text;
  if (path == "-") {
    text.assign(std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>());
  } else {
    std::ifstream in(path);
    if (!in) throw Error("malformed_input", {}, "cannot open " + path);
    text.assign(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
  }
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw Error("malformed_input", {}, e.what());
  }
}

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) {
    throw Error("malformed_input", {}, std::string("input needs the \"") + key + "\" field");
  }
  return j.at(key);
}

Matrix checked_matrix(const Collection& e, const Json& j) {
  Matrix m = parse_matrix(field(j, "matrix"));
  MatrixReport report = validate_tree_matrix(e, m);
  if (!report.ok) throw Error("invalid_matrix", {report.i, report.j, report.k}, "matrix is not a valid tree (" + report.issue + ")");
  return m;
}

Int default_depth(const Collection& e, const Matrix& m) {
  const Int n = static_cast<Int>(e.size());
  Int depth = 1;
  for (Int i = 1; i <= n; ++i) {
    Int l = static_cast<Int>(e[i - 1].size());
    for (Int j = 1; j <= n; ++j) {
      if (j != i) l = std::max(l, m[std::min(i, j) - 1][std::max(i, j) - 1]);
    }
    depth = std::max(depth, l + 1);
  }
  return depth;
}

Json validate_report(const Json& in) {
  if (in.is_object() && in.contains("sequence")) {
    try {
      return Json{{"ok", true}, {"sequence", sequence_json(parse_sequence(in.at("sequence")))}};
    } catch (const Error& e) {
      return Json{{"ok", false}, {"error", error_json(e)}};
    }
  }
  if (in.is_object() && in.contains("vectors")) {
    try {
      return vector_set_report_json(validate_vector_set(parse_vectors(in.at("vectors"))));
    } catch (const Error& e) {
      return Json{{"ok", false}, {"error", error_json(e)}};
    }
  }
  if (in.is_object() && in.contains("small")) {
    try {
      return Json{{"ok", true}, {"small", small_elements_json(validate_small(parse_vectors(in.at("small"))))}};
    } catch (const Error& e) {
      return Json{{"ok", false}, {"error", error_json(e)}};
    }
  }
  if (in.is_object() && in.contains("collection")) {
    try {
      Collection e = parse_collection(in.at("collection"));
      return matrix_report_json(validate_tree_matrix(e, parse_matrix(field(in, "matrix"))));
    } catch (const Error& e) {
      return Json{{"ok", false}, {"error", error_json(e)}};
    }
  }
  throw Error("malformed_input", {}, "expected a \"sequence\", \"vectors\", \"small\", or \"collection\" field");
}

}  // namespace

int run(int argc, char** argv) {
  CLI::App app{"Arf good semigroups: closures, tree enumeration, and generator sets"};
  app.require_subcommand(1);
  std::string input = "-";
  std::string format = "json";
  Int depth = 0;
  bool untwisted = false, all = false;

  auto add_common = [&](CLI::App* sc, bool tree_output) {
    sc->add_option("--input", input, "input file, or - for standard input")->capture_default_str();
    sc->add_option("--format", format, "output format")->check(CLI::IsMember({"json", "dot"}))->capture_default_str();
    if (tree_output) sc->add_option("--depth", depth, "levels to render in dot output");
    return sc;
  };

  CLI::App* closure_vectors = add_common(app.add_subcommand("closure-vectors", "Arf closure of a finite vector set"), false);
  CLI::App* closure_good = add_common(app.add_subcommand("closure-good", "Arf closure of a good semigroup given its small elements"), false);
  CLI::App* duval = add_common(app.add_subcommand("duval", "multiplicity sequence of the Arf closure of a set of integers"), false);
  CLI::App* enumerate = add_common(app.add_subcommand("enumerate", "enumerate the trees over a collection of branches"), true);
  enumerate->add_flag("--untwisted", untwisted, "only consecutive-gluing level vectors");
  enumerate->add_flag("--all", all, "every tree matrix over every branch order");
  CLI::App* expand = add_common(app.add_subcommand("expand", "small elements and conductor of a tree"), true);
  CLI::App* contains_cmd = add_common(app.add_subcommand("contains", "membership of a vector in a tree's semigroup"), false);
  CLI::App* characters_cmd = add_common(app.add_subcommand("characters", "restriction numbers, principal character levels, characters"), false);
  CLI::App* check_generators = add_common(app.add_subcommand("check-generators", "decide whether index tuples generate a tree"), false);
  CLI::App* build_generators_cmd = add_common(app.add_subcommand("build-generators", "construct a generator set for a tree"), false);
  CLI::App* solve_d = add_common(app.add_subcommand("solve-d", "vector set realizing a distance vector"), false);
  CLI::App* validate = add_common(app.add_subcommand("validate", "validate a sequence, vector set, small set, or tree"), false);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);
    std::cerr << dump(Json{{"error", "usage"}, {"message", e.what()}});
    return 1;
  }

  CLI::App* active = app.get_subcommands().front();
  if (format == "dot" && active != enumerate && active != expand) {
    std::cerr << dump(Json{{"error", "usage"}, {"message", "dot output is only available for enumerate and expand"}});
    return 1;
  }
  if (active == enumerate && untwisted == all) {
    std::cerr << dump(Json{{"error", "usage"}, {"message", "enumerate needs exactly one of --untwisted or --all"}});
    return 1;
  }

  try {
    const Json in = read_input(input);
    if (active == closure_vectors) {
      std::cout << dump(closure_result_json(arf_closure_of_vectors(parse_vectors(field(in, "vectors")))));
    } else if (active == closure_good) {
      std::cout << dump(closure_result_json(arf_closure_of_good_semigroup(parse_vectors(field(in, "small")))));
    } else if (active == duval) {
      std::cout << dump(Json{{"sequence", sequence_json(duval_closure(parse_vec(field(in, "values"))))}});
    } else if (active == enumerate) {
      Collection e = parse_collection(field(in, "collection"));
      std::vector<Matrix> matrices;
      if (untwisted) {
        for (const Vec& d : enumerate_untwisted(e)) matrices.push_back(untwisted_to_matrix(e, d));
      } else {
        matrices = enumerate_all(e);
      }
      if (format == "dot") {
        for (size_t t = 0; t < matrices.size(); ++t) {
          std::cout << render_dot(e, matrices[t], depth > 0 ? depth : default_depth(e, matrices[t]), "t" + std::to_string(t));
        }
      } else if (untwisted) {
        std::vector<Vec> out;
        for (const Matrix& m : matrices) {
          Vec d(e.size() - 1);
          for (size_t i = 0; i + 1 < e.size(); ++i) d[i] = m[i][i + 1];
          out.push_back(std::move(d));
        }
        std::cout << dump(Json{{"vectors", vectors_json(out)}});
      } else {
        Json out = Json::array();
        for (const Matrix& m : matrices) out.push_back(matrix_json(m));
        std::cout << dump(Json{{"matrices", out}});
      }
    } else if (active == expand) {
      Collection e = parse_collection(field(in, "collection"));
      Matrix m = checked_matrix(e, in);
      if (format == "dot") {
        std::cout << render_dot(e, m, depth > 0 ? depth : default_depth(e, m), "tree");
      } else {
        std::cout << dump(small_elements_json(expand_small(e, m)));
      }
    } else if (active == contains_cmd) {
      Collection e = parse_collection(field(in, "collection"));
      Matrix m = checked_matrix(e, in);
      std::cout << dump(Json{{"contains", contains(e, m, parse_vec(field(in, "vector")))}});
    } else if (active == characters_cmd) {
      std::cout << dump(character_data_json(characters(parse_sequence(field(in, "sequence")))));
    } else if (active == check_generators) {
      Collection e = parse_collection(field(in, "collection"));
      Matrix m = parse_matrix(field(in, "matrix"));
      std::cout << dump(generator_report_json(check_generator_set(e, m, parse_vectors(field(in, "tuples")))));
    } else if (active == build_generators_cmd) {
      Collection e = parse_collection(field(in, "collection"));
      Matrix m = parse_matrix(field(in, "matrix"));
      std::cout << dump(generator_set_json(build_generators(e, m)));
    } else if (active == solve_d) {
      std::cout << dump(Json{{"vectors", vectors_json(solve_distance_vector(parse_vec(field(in, "d"))))}});
    } else if (active == validate) {
      Json report = validate_report(in);
      std::cout << dump(report);
      return report.contains("ok") && report.at("ok").get<bool>() ? 0 : 2;
    }
  } catch (const Error& e) {
    std::cerr << dump(error_json(e));
    return 2;
  }
  return 0;
}

}  // namespace arf

int main(int argc, char** argv) { return arf::run(argc, argv); }
