#pragma once

// Batch front end: structured JSON case files in, machine- and
// human-readable reports out. Strict field validation by default; no
// floating point is accepted anywhere (big integers and rationals travel as
// strings). Exit codes: 0 = ran with verdicts, 2 = input error, 3 = an
// internal invariant violation.

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "genusbound/adjunction.hpp"

namespace genusbound {

using Json = nlohmann::ordered_json;

enum class QueryKind { genus_bound, max_insertion_degree, blowup, l_invariant, complete_primitive };

const char* query_kind_name(QueryKind q);

struct SpinCEntry {
    SpinCData data;
    InsertionData insertion;
    std::optional<Int> d_s;

    bool operator==(const SpinCEntry&) const = default;
};

struct CaseFile {
    QueryKind query = QueryKind::genus_bound;
    std::optional<ManifoldData> manifold;
    std::optional<SurfaceData> surface;
    std::optional<IntVec> a_vector;  // coefficients for complete_primitive
    std::vector<SpinCEntry> spinc;
    std::optional<BlowUpSpec> blowup;

    bool operator==(const CaseFile&) const = default;
};

struct FieldError {
    std::string path;     // JSON-pointer-like location
    std::string rule;     // stable rule id, e.g. "wu_parity", "unknown_field"
    std::string message;
};

struct ParseOptions {
    bool strict_fields = true;  // reject unknown fields
};

struct ParseResult {
    std::vector<CaseFile> cases;
    bool batch = false;  // input was a JSON array
    std::vector<FieldError> errors;

    bool ok() const { return errors.empty(); }
};

// Parses one case object or a batch array. All structural and semantic
// violations are collected with paths instead of throwing.
ParseResult parse_cases(const std::string& text, const ParseOptions& opts = {});

// Canonical JSON form of a parsed case; parse(serialize(c)) == c.
Json serialize_case(const CaseFile& c);

struct RunOptions {
    bool strict_characteristic = false;  // escalate the mod-8 warning to an error
};

// Evaluates one case. Throws InputError for inconsistent data discovered at
// run time and InternalError if a module invariant breaks.
Json run_query(const CaseFile& c, const RunOptions& opts = {});

// Plain-text rendering of a report produced by run_query.
std::string render_table(const Json& report);

// Oracle-backed property suites behind --self-check; returns true when every
// suite passes and writes one line per suite to out.
bool run_self_check(std::uint64_t seed, std::ostream& out);

}  // namespace genusbound
