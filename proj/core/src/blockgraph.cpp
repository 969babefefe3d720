#include "sdg/blockgraph.hpp"

#include <algorithm>
#include <sstream>

namespace sdg {

namespace {

inline SgValue mex2(SgValue a, SgValue b) {
    return static_cast<SgValue>(mex({static_cast<unsigned>(a), static_cast<unsigned>(b)}));
}

}  // namespace

TripleDigraph TripleDigraph::build() {
    Adjacency out{};
    for (int v = 0; v < kVertices; ++v) {
        const Triple t = vertex(v);
        const SgValue nx = mex2(t.x, t.z);
        const SgValue ny = mex2(t.y, t.z);
        for (SgValue zp = 0; zp < 3; ++zp) {
            out[v][zp] = index({nx, ny, zp});
        }
    }
    return TripleDigraph(out);
}

std::vector<std::pair<int, int>> TripleDigraph::edges() const {
    std::vector<std::pair<int, int>> es;
    es.reserve(kVertices * 3);
    for (int v = 0; v < kVertices; ++v) {
        for (int w : out_[v]) es.emplace_back(v, w);
    }
    return es;
}

bool TripleDigraph::is_sink(int v) const {
    const Triple t = vertex(v);
    if (t.x == t.y) return false;
    return std::all_of(out_[v].begin(), out_[v].end(), [](int w) {
        const Triple u = vertex(w);
        return u.x == u.y;
    });
}

std::vector<Triple> TripleDigraph::sinks() const {
    std::vector<Triple> out;
    for (int v = 0; v < kVertices; ++v) {
        if (is_sink(v)) out.push_back(vertex(v));
    }
    return out;
}

bool TripleDigraph::layer_check() const {
    for (int v = 0; v < kVertices; ++v) {
        const Triple t = vertex(v);
        if (t.x == t.y || is_sink(v) || t.z != 0) continue;
        for (int w : out_[v]) {
            const Triple u = vertex(w);
            if (u.x != u.y && !is_sink(w) && u.z != 0) return false;
        }
    }
    return true;
}

TripleDigraph::Escape TripleDigraph::bounded_escape(std::optional<unsigned> cap_zero,
                                                    std::optional<unsigned> cap_nonzero) const {
    // Product automaton over x != y vertices: state = (vertex, current z-run
    // length). Reaching an x == y vertex is absorption; an admissible cycle
    // means walks of unbounded length exist.
    const bool capped = cap_zero.has_value() && cap_nonzero.has_value();
    auto cap_of = [&](const Triple& t) -> unsigned {
        return t.z == 0 ? *cap_zero : *cap_nonzero;
    };

    if (!capped) {
        // Any cycle among x != y vertices disproves bounded escape.
        std::array<int, kVertices> color{};  // 0 white, 1 gray, 2 black
        std::vector<int> stack;
        std::vector<Triple> cycle;
        auto dfs = [&](auto&& self, int v) -> bool {
            color[v] = 1;
            stack.push_back(v);
            for (int w : out_[v]) {
                const Triple u = vertex(w);
                if (u.x == u.y) continue;
                if (color[w] == 1) {
                    auto it = std::find(stack.begin(), stack.end(), w);
                    for (; it != stack.end(); ++it) cycle.push_back(vertex(*it));
                    return true;
                }
                if (color[w] == 0 && self(self, w)) return true;
            }
            color[v] = 2;
            stack.pop_back();
            return false;
        };
        for (int v = 0; v < kVertices; ++v) {
            const Triple t = vertex(v);
            if (t.x != t.y && color[v] == 0 && dfs(dfs, v)) {
                return {false, 0, cycle};
            }
        }
        return {true, 0, {}};
    }

    const unsigned max_cap = std::max(*cap_zero, *cap_nonzero);
    const auto nstates = static_cast<std::size_t>(kVertices) * max_cap;
    auto sid = [&](int v, unsigned run) { return static_cast<std::size_t>(v) * max_cap + run - 1; };

    std::vector<std::vector<std::size_t>> succ(nstates);
    std::vector<bool> valid(nstates, false);
    for (int v = 0; v < kVertices; ++v) {
        const Triple t = vertex(v);
        if (t.x == t.y) continue;
        for (unsigned run = 1; run <= cap_of(t); ++run) {
            const std::size_t s = sid(v, run);
            valid[s] = true;
            for (int w : out_[v]) {
                const Triple u = vertex(w);
                if (u.x == u.y) continue;  // absorbed
                const unsigned next_run = (u.z == 0) == (t.z == 0) ? run + 1 : 1;
                if (next_run <= cap_of(u)) succ[s].push_back(sid(w, next_run));
            }
        }
    }

    // Longest path over the product DAG; a cycle is a failure witness.
    std::vector<int> state(nstates, 0);  // 0 unvisited, 1 on stack, 2 done
    std::vector<std::size_t> depth(nstates, 0);
    std::vector<std::size_t> next_best(nstates, SIZE_MAX);
    std::vector<std::size_t> cyc;
    std::vector<std::size_t> stack;
    auto dfs = [&](auto&& self, std::size_t s) -> bool {
        state[s] = 1;
        stack.push_back(s);
        std::size_t best = 0;
        for (std::size_t w : succ[s]) {
            if (state[w] == 1) {
                auto it = std::find(stack.begin(), stack.end(), w);
                cyc.assign(it, stack.end());
                return true;
            }
            if (state[w] == 0 && self(self, w)) return true;
            if (depth[w] + 1 > best) {
                best = depth[w] + 1;
                next_best[s] = w;
            }
        }
        depth[s] = best;
        state[s] = 2;
        stack.pop_back();
        return false;
    };
    for (std::size_t s = 0; s < nstates; ++s) {
        if (valid[s] && state[s] == 0 && dfs(dfs, s)) {
            std::vector<Triple> witness;
            for (std::size_t w : cyc) witness.push_back(vertex(static_cast<int>(w / max_cap)));
            return {false, 0, witness};
        }
    }

    std::size_t longest = 0;
    std::size_t start = SIZE_MAX;
    for (int v = 0; v < kVertices; ++v) {
        const Triple t = vertex(v);
        if (t.x == t.y) continue;
        const std::size_t s = sid(v, 1);
        if (depth[s] + 1 > longest) {
            longest = depth[s] + 1;
            start = s;
        }
    }
    std::vector<Triple> walk;
    for (std::size_t s = start; s != SIZE_MAX; s = next_best[s]) {
        walk.push_back(vertex(static_cast<int>(s / max_cap)));
        if (depth[s] == 0) break;
    }
    const std::size_t limit = (static_cast<std::size_t>(*cap_zero) + *cap_nonzero + 2) * kVertices;
    return {longest <= limit, longest, walk};
}

std::string TripleDigraph::to_dot() const {
    std::ostringstream os;
    os << "digraph blocks {\n";
    for (int v = 0; v < kVertices; ++v) {
        const Triple t = vertex(v);
        os << "  v" << v << " [label=\"(" << int(t.x) << "," << int(t.y) << "," << int(t.z)
           << ")\"";
        if (is_sink(v)) os << " style=filled fillcolor=gray";
        os << "];\n";
    }
    for (const auto& [u, w] : edges()) os << "  v" << u << " -> v" << w << ";\n";
    os << "}\n";
    return os.str();
}

}  // namespace sdg
