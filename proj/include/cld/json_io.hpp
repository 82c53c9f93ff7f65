#ifndef CLD_JSON_IO_HPP
#define CLD_JSON_IO_HPP

#include <json.hpp>

#include "cld/admissible.hpp"
#include "cld/composite.hpp"
#include "cld/connectives.hpp"
#include "cld/proposition.hpp"

namespace cld {

// Insertion-ordered JSON so emitted documents are byte-stable.
using json = nlohmann::ordered_json;

// {"probs": ["3/8", "1/8", "1/8", "3/8"]}. Parsing accepts integers and
// reduced or unreduced fractions; emission is always lowest terms.
json to_json(const Proposition& p);
Proposition proposition_from_json(const json& j);

// {"rows": 4, "col_map": [2, 1, 3, 4]} with 1-based entries; the dense 0/1
// grid is added under "dense" on request.
json to_json(const AdmissibleMatrix& g, bool include_dense = false);
AdmissibleMatrix admissible_from_json(const json& j);

// {"p": "1/2", "q": "1/2", "C": "1/8"}
json to_json(const PqcForm& f);
PqcForm pqc_from_json(const json& j);

// The selector format plus an "input_dims" array.
json to_json(const ConnectiveSpec& spec);
ConnectiveSpec connective_from_json(const json& j);

} // namespace cld

#endif
