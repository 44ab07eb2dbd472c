#pragma once

#include <json.hpp>

#include "arf/closure.hpp"
#include "arf/generators.hpp"

namespace arf {

using Json = nlohmann::json;

// Sequences print in canonical form; the all-ones sequence prints as [1].
Json sequence_json(const Seq& q);
Json collection_json(const Collection& e);
Json vec_json(const Vec& v);
Json vectors_json(const std::vector<Vec>& vs);
Json matrix_json(const Matrix& m);
Json level_json(const Level& k);  // integer, or null when unbounded

Json matrix_report_json(const MatrixReport& r);
Json vector_set_report_json(const VectorSetReport& r);
Json closure_result_json(const ClosureResult& r);
Json small_elements_json(const SmallElements& s);
Json character_data_json(const CharacterData& c);
Json generator_report_json(const GeneratorReport& r);
Json generator_set_json(const GeneratorSet& g);
Json error_json(const Error& e);

// Parsers throw Error("malformed_input", ...) on shape problems; sequences
// and collections are validated unless the raw variant is used.
Seq parse_raw_sequence(const Json& j);
Seq parse_sequence(const Json& j);
Collection parse_collection(const Json& j);
Vec parse_vec(const Json& j);
std::vector<Vec> parse_vectors(const Json& j);
Matrix parse_matrix(const Json& j);

// Compact canonical text: sorted keys, one trailing newline.
std::string dump(const Json& j);

// One DOT digraph for the tree's node diagram down to the given depth.
std::string render_dot(const Collection& e, const Matrix& m, Int depth, const std::string& name);

}  // namespace arf
