#pragma once
// JSON readers and writers for the three interchange documents.
//
// Model:      {"worlds":["M","N"],"actual":"M",
//              "rel":[["M","M"],["N","N"],["M","N"]],
//              "valuation":{"M":{"p":true}}}
// Proof:      {"system":"gt","hypotheses":["p"],
//              "lines":[{"formula":"p","by":"hyp"},
//                       {"formula":"p -> q -> p","by":"ax"},
//                       {"formula":"q -> p","by":{"mp":[2,1]}}]}
// Derivation: {"system":"get4","start":"",
//              "steps":[{"rule":"R1","result":"({})"},
//                       {"rule":"R4_complete_odd","result":"(())","hint":[0,0]}]}
//
// Formulas and graphs embed as text in their concrete grammars; line indices
// are 1-based; the empty start string is the empty graph.

#include "gt/hilbert.hpp"
#include "gt/kripke.hpp"
#include "gt/rewrite.hpp"

#include <string>

namespace gt {

struct DocumentError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

KripkeModel model_from_json(const std::string& text);
std::string model_to_json(const KripkeModel& m);

ProofDocument proof_from_json(const std::string& text);
std::string proof_to_json(const ProofDocument& doc);

DerivationDocument derivation_from_json(const std::string& text);
std::string derivation_to_json(const DerivationDocument& doc);

}  // namespace gt
