#pragma once

#include <string>

#include <nlohmann/json.hpp>

#include "piecework/heap.hpp"
#include "piecework/nat.hpp"
#include "piecework/structures.hpp"

namespace piecework {

// {"alphabet": tag, "layers": [[piece,...],...]}; integer pieces as
// numbers, block/path pieces as integer arrays.
nlohmann::json heap_to_json(const Heap& h);
Heap heap_from_json(const nlohmann::json& j);

// {"mode": "tree"|"forest", "points": [[x1,x2],...]}
nlohmann::json point_set_to_json(const PointSet& ps);
PointSet point_set_from_json(const nlohmann::json& j);

// One point per line: "x1 x2".
std::string point_set_to_text(const PointSet& ps);
PointSet point_set_from_text(const std::string& text, PointSet::Mode mode);

// Hasse diagram of the occurrence poset, nodes labeled by their pieces.
std::string heap_to_dot(const Heap& h);

} // namespace piecework
