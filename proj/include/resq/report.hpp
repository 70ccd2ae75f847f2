#pragma once

#include "resq/congruence.hpp"
#include "resq/integer.hpp"
#include "resq/lucas.hpp"
#include "resq/matrix.hpp"
#include "resq/modular.hpp"

#include <json.hpp>

#include <string>

namespace resq {

/// Insertion-ordered so that serialized documents are byte-stable.
using Json = nlohmann::ordered_json;

inline constexpr const char* kToolVersion = "resq 1.0.0";

/// Large integers travel as decimal strings.
inline Json to_json(const Integer& n) { return n.get_str(); }

/// "inf" or the exponent as a number.
Json to_json(const Valuation& v);
Json to_json(const Residues& residues);
Json to_json(const IntMatrix& m);
Json to_json(const ModMatrix& m);
Json to_json(const CongruenceReport& r);
Json to_json(const ModAnalysis& a);

/// Top-level document: command, version, inputs, results.
Json make_document(const std::string& command, Json inputs, Json results);

}  // namespace resq
