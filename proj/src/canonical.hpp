#pragma once

#include <string>

#include "level1kit/network.hpp"

namespace level1::detail {

// Canonical encoding of the pendant subnetwork at v, where v is the network
// root or the head of a cut arc. A gall lists its two side sequences with the
// smaller one first.
std::string encode(const Network& net, VertexId v);

}  // namespace level1::detail
