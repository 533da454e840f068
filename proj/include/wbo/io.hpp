#ifndef WBO_IO_HPP
#define WBO_IO_HPP

#include <string>
#include <string_view>

#include "wbo/decomposition.hpp"
#include "wbo/graph.hpp"
#include "wbo/rayless.hpp"

namespace wbo {

// Text formats, one directive per line (';' also separates directives),
// '#' starts a comment, "omega" is the only infinity literal.
//
// graph:         vertex <id> | edge <u> <v> <mult>
// orientation:   arc <u> <v> <mult>            (validated against a base graph)
// star:          core { vertex/edge/separator ... }
//                template <name> copies <n|omega> { vertex/edge/attach ... }
// decomposition: fragment <name> { vertex/edge ... }
// symbolic:      core { arc ... }
//                class <template> <index> copies <n|omega> { arc ... }

ExtMultigraph parse_graph(std::string_view text);
std::string format_graph(const ExtMultigraph& g);

Orientation parse_orientation(std::string_view text, const ExtMultigraph& base);
std::string format_orientation(const Orientation& d);

StarRayless parse_star(std::string_view text);
std::string format_star(const StarRayless& s);

Decomposition parse_decomposition(std::string_view text, const ExtMultigraph& base);
std::string format_decomposition(const Decomposition& d);

SymbolicOrientation parse_symbolic_orientation(std::string_view text, const StarRayless& s);
std::string format_symbolic_orientation(const SymbolicOrientation& o, const StarRayless& s);

std::string read_file(const std::string& path);
void write_file(const std::string& path, std::string_view content);

}  // namespace wbo

#endif
