#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "sdg/automatic.hpp"
#include "sdg/engine.hpp"

namespace sdg {

/// CSV export with a header row: columns n, sg.
std::string table_csv(const SgTable& table);

/// JSON export: {"schema":1,"spec":{...},"values":[...]} with values
/// listed for n = 1..n_max.
std::string table_json(const SgTable& table);

/// DFAO export: {"schema":1,"base":...,"states":...,"transitions":[[...]],
/// "outputs":[...],"digit_order":"lsd","validated_to":...}.
std::string dfao_json(const Dfao& dfao);

/// Parse an overrides file: lines "index,value" with indices contiguous
/// from 1 and values in {0,1,2}. Blank lines and lines starting with '#'
/// are ignored. Malformed input raises ConfigError.
std::vector<SgValue> parse_overrides(std::istream& in);

}  // namespace sdg
