#ifndef ILC_JSON_HPP_
#define ILC_JSON_HPP_

#include <json.hpp>

#include "ilc/delta.hpp"
#include "ilc/eval.hpp"
#include "ilc/term.hpp"

namespace ilc {

using Json = nlohmann::json;

class JsonError : public Error {
 public:
  using Error::Error;
};

// Every node is an object with a "kind" member; see docs/json-schema.md.
Json to_json(const Term& t);
Json to_json(const Context& c);
Json to_json(const Delta& d);
Json to_json(const EvalOutcome& outcome);

// Throw JsonError on malformed input.
Term term_from_json(const Json& j);
Context context_from_json(const Json& j);
Delta delta_from_json(const Json& j);
EvalOutcome outcome_from_json(const Json& j);

}  // namespace ilc

#endif  // ILC_JSON_HPP_
