#pragma once

// Line-based certificates:
//   problem <tag>
//   value <v>
//   set <v1> <v2> ...        (1-indexed vertices; may repeat for several sets)
//   color <vertex> <class>   (both 1-indexed)
//   orient <tail> <head>
// Lines starting with '#' are comments.

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "oddsolve/graph.hpp"
#include "oddsolve/parity.hpp"

namespace oddsolve {

struct Certificate {
  std::string problem;
  std::optional<std::size_t> value;
  std::vector<std::vector<Vertex>> sets;                 ///< 0-based
  std::vector<std::pair<Vertex, std::uint32_t>> colors;  ///< 0-based vertex and class
  std::vector<Edge> arcs;                                ///< 0-based (tail, head)
};

/// Tags accepted by verify_certificate.
std::vector<std::string> certificate_tags();

Certificate set_certificate(std::string_view problem, const VertexSet& s);
Certificate coloring_certificate(std::string_view problem, const std::vector<std::uint32_t>& color);
Certificate orientation_certificate(const Orientation& o);

std::string write_certificate(const Certificate& c);
/// Throws ParseError.
Certificate parse_certificate(std::string_view text);

struct VerifyResult {
  bool ok = false;
  std::string message;
  std::optional<Vertex> vertex;  ///< 0-based violated vertex, when there is one
};

/// Checks the certificate against g by degree counting only. `problem`
/// overrides the tag stored in the certificate when nonempty; the two must
/// agree when both are present.
VerifyResult verify_certificate(const Graph& g, const Certificate& c, std::string_view problem = {});

}  // namespace oddsolve
