#pragma once

#include <string>

#include <json.hpp>

#include "ramper/obstruction.hpp"
#include "ramper/pell.hpp"

namespace ramper {

using json = nlohmann::ordered_json;

// Decimal "num/den", the "/den" dropped for integers.
std::string rational_to_string(const mpq_class& q);
mpq_class rational_from_string(const std::string& s);

// {"x": "num/den", "y": "num/den", "p": int}
json quad_to_json(const QuadElem& e);

// {"valuation": int, "digits": [d0, d1, ...], "precision": int}, pi-adic.
json ramified_to_json(const RamifiedElem& e);

// {"x": "...", "y": "..."} with decimal strings; the solutions grow without
// bound, so no integer field.  Position in the emitted array carries the index.
json pell_to_json(const PellSolution& s);

json certificate_to_json(const Certificate& c);
json refutation_to_json(const RefutationLog& log);

// {"p", "g", "a", "c", "d", "value"}: the digit expansion of the period plus
// the data it was computed from.
json period_to_json(const MinimalPeriod& m, const QuadElem& a, long c);

// Field order is part of the format:
// p, g, pell_index, v, b, n, a, c, precision, alpha, minimal_period, d,
// certificate, witness_refutation, conclusion, schema_version.
json report_to_json(const ObstructionReport& r);

// Two-space-indented dump with trailing newline; the byte-level output for
// both files and stdout, so equal reports serialize identically.
std::string dump_json(const json& j);

}  // namespace ramper
