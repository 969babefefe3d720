#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "sdg/engine.hpp"

namespace sdg {

/// One vertex of the subsequent-block digraph: two sample SG values of a
/// block (x, y) and the value z the next block depends on via division.
struct Triple {
    SgValue x = 0, y = 0, z = 0;
    bool operator==(const Triple&) const = default;
};

/// The 27-vertex digraph modeling subsequent blocks: from (x,y,z) there is
/// an edge to (mex{x,z}, mex{y,z}, z') for each z' in {0,1,2}.
class TripleDigraph {
  public:
    static constexpr int kVertices = 27;
    using Adjacency = std::array<std::array<int, 3>, kVertices>;

    /// Rule-built digraph.
    static TripleDigraph build();
    /// Arbitrary adjacency (negative controls, mutation experiments).
    explicit TripleDigraph(Adjacency out) : out_(out) {}

    static int index(Triple t) { return t.x * 9 + t.y * 3 + t.z; }
    static Triple vertex(int idx) {
        return {static_cast<SgValue>(idx / 9), static_cast<SgValue>(idx / 3 % 3),
                static_cast<SgValue>(idx % 3)};
    }

    const std::array<int, 3>& out(int v) const { return out_[v]; }
    std::vector<std::pair<int, int>> edges() const;
    int edge_count() const { return kVertices * 3; }

    bool is_sink(int v) const;  // x != y, all successors have x == y
    std::vector<Triple> sinks() const;

    /// No edge from a z=0 vertex to a z!=0 vertex among non-sink x!=y
    /// vertices (the dotted-line layering).
    bool layer_check() const;

    struct Escape {
        bool bounded = false;
        std::size_t longest_walk = 0;        // states visited before absorption
        std::vector<Triple> witness;         // longest walk, or a cycle if unbounded
    };
    /// True iff every walk whose z-run lengths respect the caps reaches an
    /// x == y vertex within (cap_zero + cap_nonzero + 2) * 27 steps, by
    /// exhaustive search of the digraph x run-length product automaton.
    /// An absent cap means unbounded runs are admissible.
    Escape bounded_escape(std::optional<unsigned> cap_zero,
                          std::optional<unsigned> cap_nonzero) const;

    std::string to_dot() const;

  private:
    Adjacency out_{};
};

}  // namespace sdg
