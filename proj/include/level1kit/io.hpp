#pragma once

#include <string>
#include <string_view>

#include "level1kit/network.hpp"
#include "level1kit/systems.hpp"

namespace level1 {

/// Extended Newick. A hybrid is a node tagged `#H<k>` that occurs exactly
/// twice; at most one occurrence has children. Branch lengths (`:x`) and
/// internal labels are accepted and ignored. Throws SyntaxError (with byte
/// offset), HybridTagMismatch, and any validation error.
Network parse_enewick(std::string_view text);

/// Deterministic serialization: children and gall sides in canonical order,
/// hybrid tags numbered in output order. Labels with reserved characters are
/// single-quoted.
std::string write_enewick(const Network& network);

/// One triplet per line, `a,b|c`. Blank lines and lines starting with '#'
/// are skipped. The taxon list is the sorted set of names used.
TripletSystem parse_triplets(std::string_view text);
std::string write_triplets(const TripletSystem& system);

/// One cluster per line, comma-separated taxa.
ClusterSystem parse_clusters(std::string_view text);
std::string write_clusters(const ClusterSystem& system);

/// Whole file contents; throws std::runtime_error when unreadable.
std::string read_file(const std::string& path);

}  // namespace level1
