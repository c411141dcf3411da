#include "rectsyz/serialize.hpp"

namespace rectsyz {

nlohmann::json to_json(const Partition& p) { return nlohmann::json(p.parts()); }

Partition partition_from_json(const nlohmann::json& j) {
    return Partition(j.get<std::vector<int>>());
}

nlohmann::json to_json(const EquivariantPolynomial& p) {
    nlohmann::json out = nlohmann::json::array();
    for (const auto& term : p.terms()) {
        out.push_back({{"row", to_json(term.label.row)},
                       {"col", to_json(term.label.col)},
                       {"z", term.zdeg},
                       {"w", term.wdeg},
                       {"mult", term.mult}});
    }
    return out;
}

EquivariantPolynomial equivariant_from_json(const nlohmann::json& j) {
    EquivariantPolynomial out;
    for (const auto& item : j) {
        out.add_term({partition_from_json(item.at("row")), partition_from_json(item.at("col"))},
                     item.at("z").get<int>(), item.at("w").get<int>(),
                     item.at("mult").get<long long>());
    }
    return out;
}

nlohmann::json to_json(const BettiTable& t) {
    nlohmann::json out = nlohmann::json::array();
    for (const auto& [key, value] : t.entries())
        out.push_back({{"i", key.first}, {"j", key.second}, {"value", value}});
    return out;
}

BettiTable betti_table_from_json(const nlohmann::json& j) {
    BettiTable out;
    for (const auto& item : j)
        out.add(item.at("i").get<int>(), item.at("j").get<int>(), item.at("value").get<long long>());
    return out;
}

}  // namespace rectsyz
