#ifndef RECTSYZ_SERIALIZE_HPP
#define RECTSYZ_SERIALIZE_HPP

#include <json.hpp>

#include "rectsyz/rep_ring.hpp"

namespace rectsyz {

/// Partitions serialize as arrays of parts: [9,7,6,5,3,2], [] when empty.
nlohmann::json to_json(const Partition& p);
Partition partition_from_json(const nlohmann::json& j);

/// Equivariant polynomials serialize as a list of
/// {"row": [...], "col": [...], "z": ..., "w": ..., "mult": ...}.
nlohmann::json to_json(const EquivariantPolynomial& p);
EquivariantPolynomial equivariant_from_json(const nlohmann::json& j);

/// Betti tables serialize as a list of {"i": ..., "j": ..., "value": ...}.
nlohmann::json to_json(const BettiTable& t);
BettiTable betti_table_from_json(const nlohmann::json& j);

}  // namespace rectsyz

#endif
