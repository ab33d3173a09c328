#pragma once

#include <json.hpp>
#include <stdexcept>
#include <string>

#include "qcsp/games.hpp"
#include "qcsp/geometry.hpp"
#include "qcsp/patterns.hpp"
#include "qcsp/quantum.hpp"
#include "qcsp/structure.hpp"

namespace qcsp {

using Json = nlohmann::json;

/// Malformed or inconsistent input document. The message names the offending
/// location (parser line/column, or the JSON path of the bad entry).
class InputError : public std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// Reads a JSON document from a file path, from "-" (standard input), or
/// directly from the argument when it starts with '{' or '['.
Json read_json(const std::string &source);

// Structures: {"signature":[{"name":"R","arity":2}],"domain":3,
//              "relations":{"R":[[0,1],[1,2]]}}

Json structure_to_json(const RelationalStructure &s);
RelationalStructure structure_from_json(const Json &j);
RelationalStructure load_structure(const std::string &source);

Json vertex_map_to_json(const VertexMap &f);
VertexMap vertex_map_from_json(const Json &j);

Json pattern_to_json(const SigmaPattern &p);

// Strategies: {"variant":"alice","k":2,"answers":{"R":[[tuple,answer,message],...]},
//              "bob":[[x,message,y],...]}
// The "none" variant drops the message from both lists. For "bob" the message
// in an answer entry is the one Alice received, and every (tuple, message)
// pair is listed.

Json strategy_to_json(const Strategy &s, const RelationalStructure &x);
/// Throws InputError unless the tables are total for X and the answers are
/// tuples over Y of the right arity.
Strategy strategy_from_json(const Json &j, const RelationalStructure &x,
                            const RelationalStructure &y);

Json counterexample_to_json(const Counterexample &c, const RelationalStructure &x);

// Complex matrices are arrays of rows of [re, im] pairs.

Json matrix_to_json(const CMatrix &m);
CMatrix cmatrix_from_json(const Json &j);
Json matrix_to_json(const RMatrix &m);
Json vector_to_json(const CVector &v);
CVector cvector_from_json(const Json &j);

/// {"projectors":[matrix, ...]}
Json pvm_to_json(const PVM &p);
PVM pvm_from_json(const Json &j);

/// {"dimension":d,"state":[[re,im],...],"alice":{"R":[[tuple,pvm],...]},"bob":[pvm,...]}
Json quantum_strategy_to_json(const QuantumStrategy &s, const RelationalStructure &x);
QuantumStrategy quantum_strategy_from_json(const Json &j, const RelationalStructure &x);

Json coloring_to_json(const SphereColoring &c);
SphereColoring coloring_from_json(const Json &j);

}  // namespace qcsp
