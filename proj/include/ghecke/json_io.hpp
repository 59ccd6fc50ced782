#pragma once

#include "ghecke/cherednik.hpp"
#include "ghecke/criterion.hpp"
#include "ghecke/ggha.hpp"
#include "ghecke/module_rep.hpp"
#include "ghecke/simplicity.hpp"

#include <json.hpp>

namespace ghk {

using json = nlohmann::json;

json to_json(const Cyclo& c);           // text form "a0 + a1*z"
json to_json(const Perm& w);            // one-line, 1-based
json to_json(const GroupElem& g);       // {t: [...], w: [...]}
json to_json(const TChar& pi);          // n-index array
json to_json(const CherElem& e);        // [{x, g, y, c}]
json to_json(const GghaElem& e);        // [{w, t, d, c}]
json to_json(const ModuleRep& m);       // {dim, basis, generators, params}
json to_json(const SimplicityReport& r);
json to_json(const CriterionReport& r);
json to_json(const SweepSummary& s);

/// CSV table with columns nu, pi, kbar0, criterion, oracle, factors.
std::string sweep_csv(const SweepSummary& s);

}  // namespace ghk
