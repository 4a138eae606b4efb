#pragma once

#include <compare>
#include <cstdint>
#include <string>

#include "bookturan/graph.hpp"

namespace bookturan {

// Canonical forms are computed by partition refinement plus backtracking and
// take one machine word per row, so they are capped at 64 vertices. Family
// constructions and closed-form counts are not affected by this cap.
inline constexpr int max_certificate_order = 64;

// Opaque canonical form of a graph. Two graphs have equal certificates if
// and only if they are isomorphic. The payload is the graph6 string of the
// canonically relabeled graph, so it doubles as a portable serialization.
struct Certificate {
    std::string value;

    friend bool operator==(const Certificate&, const Certificate&) = default;
    friend std::strong_ordering operator<=>(const Certificate&, const Certificate&) = default;
};

Certificate canonical_certificate(const Graph& g);

// The canonically relabeled copy of g itself.
Graph canonical_form(const Graph& g);

bool are_isomorphic(const Graph& a, const Graph& b);

namespace detail {
// Canonical graph6 straight from single-word adjacency rows (n <= 64).
// Bit v of rows[u] is the (u,v) adjacency.
std::string canonical_graph6_rows(int n, const std::uint64_t* rows);
}  // namespace detail

}  // namespace bookturan
