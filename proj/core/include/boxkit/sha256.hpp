#ifndef BOXKIT_SHA256_HPP
#define BOXKIT_SHA256_HPP

#include <string>
#include <string_view>

namespace boxkit {

// SHA-256 digest as a lowercase hex string. Used for content ids of graphs
// so certificates and profiles can be matched to their source graph.
std::string sha256_hex(std::string_view data);

}  // namespace boxkit

#endif
