#include "sdg/io.hpp"

#include <istream>
#include <sstream>

#include "json.hpp"

namespace sdg {

namespace {

nlohmann::json spec_json(const GameSpec& spec) {
    nlohmann::json j;
    j["a"] = spec.a;
    j["b"] = spec.b;
    if (spec.boundary.kind == Boundary::Kind::VirtualValue) {
        j["boundary"] = {{"kind", "virtual"}, {"value", spec.boundary.virtual_value}};
    } else {
        j["boundary"] = {{"kind", "subtract-disallowed"}};
    }
    j["overrides"] = spec.overrides;
    return j;
}

}  // namespace

std::string table_csv(const SgTable& table) {
    std::ostringstream os;
    os << "n,sg\n";
    for (std::uint64_t n = 1; n <= table.n_max(); ++n) {
        os << n << ',' << static_cast<int>(table.value(n)) << '\n';
    }
    return os.str();
}

std::string table_json(const SgTable& table) {
    nlohmann::json j;
    j["schema"] = 1;
    j["spec"] = spec_json(table.spec());
    std::vector<int> values(table.values().begin(), table.values().end());
    j["values"] = values;
    return j.dump();
}

std::string dfao_json(const Dfao& dfao) {
    nlohmann::json j;
    j["schema"] = 1;
    j["base"] = dfao.base;
    j["states"] = dfao.state_count();
    j["start"] = dfao.start;
    j["transitions"] = dfao.transitions;
    std::vector<int> outputs(dfao.outputs.begin(), dfao.outputs.end());
    j["outputs"] = outputs;
    j["digit_order"] = "lsd";
    j["validated_to"] = dfao.validated_to;
    return j.dump();
}

std::vector<SgValue> parse_overrides(std::istream& in) {
    std::vector<SgValue> out;
    std::string line;
    std::uint64_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty() || line[0] == '#') continue;
        std::uint64_t index = 0, value = 0;
        char comma = 0;
        std::istringstream ls(line);
        if (!(ls >> index >> comma >> value) || comma != ',') {
            throw ConfigError("overrides line " + std::to_string(lineno) + ": expected index,value");
        }
        std::string rest;
        if (ls >> rest) {
            throw ConfigError("overrides line " + std::to_string(lineno) + ": trailing junk");
        }
        if (index != out.size() + 1) {
            throw ConfigError("overrides line " + std::to_string(lineno) +
                              ": indices must be contiguous from 1");
        }
        if (value > 2) {
            throw ConfigError("overrides line " + std::to_string(lineno) +
                              ": value must be in {0,1,2}");
        }
        out.push_back(static_cast<SgValue>(value));
    }
    return out;
}

}  // namespace sdg
