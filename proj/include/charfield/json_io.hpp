#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "charfield/blocks.hpp"
#include "charfield/chartab.hpp"
#include "charfield/cyclotomic.hpp"
#include "charfield/fields.hpp"
#include "charfield/reports.hpp"

namespace charfield {

/// Keys keep insertion order so emitted documents are stable and readable.
using Json = nlohmann::ordered_json;

Json to_json(const CycElt& x);
/// {"n", "terms": [[exp, "num/den"], ...]}; exponents must be Zumbroich basis members.
CycElt cyc_from_json(const Json& j);

Json to_json(const AbelianField& f);

Json to_json(const CharacterTable& table);
/// Parses and validates (orthogonality, sum of squared degrees, trivial row
/// first). Throws std::invalid_argument with the reason on rejection.
CharacterTable table_from_json(const Json& j);
CharacterTable read_table_file(const std::string& path);

Json to_json(const BlockPartition& blocks, const CharacterTable& table);
Json to_json(const CharacterFieldReport& report, bool with_sigma);
Json to_json(const GroupCheck& check);
Json to_json(const RealizerCertificate& cert);
Json sigma_json(const CharacterTable& table, const std::vector<SigmaRow>& rows);

/// CSV with header d,in_F2,expected.
std::string corollary_c_csv(const std::vector<CorollaryCRow>& rows);

}  // namespace charfield
