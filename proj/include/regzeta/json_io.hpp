#ifndef REGZETA_JSON_IO_HPP
#define REGZETA_JSON_IO_HPP

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "regzeta/oracle.hpp"
#include "regzeta/zeta.hpp"

namespace regzeta {

using Json = nlohmann::ordered_json;

/* Every document is {schema_version, meta, ...tables} with deterministic key
   and element order; big integers and rationals are decimal strings so
   consumers never overflow. */
enum class DocKind { Types, Orbits, Zeta, Verify };

// Conventions recorded in meta.convention_notes of every document.
const std::vector<std::string>& convention_notes();

/* One X_n row of the types listing: mass = number of minimal polynomials of
   this type, core = centralizer core polynomial, both in the field-size
   variable; *_at filled when a numeric q was requested. */
struct TypeRow {
    TypeTriple tau;
    QPoly mass;
    QPoly core;
    std::optional<BigInt> mass_at;
    std::optional<BigInt> core_at;
};

std::vector<TypeRow> type_rows(int n, const std::optional<BigInt>& q);

Json types_doc(int n, const std::optional<BigInt>& q, const std::vector<TypeRow>& rows);
Json orbits_doc(const GroupKind& kind, const Fq& F, const std::vector<OrbitFamily>& fams);
Json zeta_doc(const GroupKind& kind, const Fq& F, const RegZetaSeries& series,
              const Ledger& ledger, int levels);
Json verify_doc(const GroupKind& kind, const Fq& F, const CompareReport& rep);

std::string render_json(const Json& doc);
// CSV of the document's primary array (types/families/ledger/diffs), one header line.
std::string render_csv(DocKind kind, const Json& doc);
// Human-readable table.
std::string render_text(DocKind kind, const Json& doc);

}  // namespace regzeta

#endif
