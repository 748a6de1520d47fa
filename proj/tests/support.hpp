// Helpers shared by the test suites: compact word literals, exhaustive word
// enumeration, random presentation generators and a DOT graph reader used to
// validate exported graphs.
#pragma once

#include <algorithm>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "spa/presentation.hpp"
#include "spa/words.hpp"

namespace spa::testing {

inline Word wd(const Signature& sig, const std::string& compact) {
    std::vector<std::uint32_t> idx;
    for (char c : compact) idx.push_back(sig.index_of(std::string(1, c)));
    return Word(sig, std::move(idx));
}

inline std::vector<Word> words_up_to(const Signature& sig, std::size_t max_len) {
    std::vector<Word> out{Word(sig)};
    std::size_t start = 0;
    for (std::size_t len = 1; len <= max_len; ++len) {
        const std::size_t end = out.size();
        for (std::size_t i = start; i < end; ++i) {
            for (std::uint32_t s = 0; s < sig.size(); ++s) {
                out.push_back(concat(out[i], Word(sig, std::vector<std::uint32_t>{s})));
            }
        }
        start = end;
    }
    return out;
}

inline Word random_word(std::mt19937& rng, const Signature& sig, std::size_t min_len,
                        std::size_t max_len) {
    std::uniform_int_distribution<std::size_t> len_dist(min_len, max_len);
    std::uniform_int_distribution<std::uint32_t> sym_dist(
        0, static_cast<std::uint32_t>(sig.size()) - 1);
    std::vector<std::uint32_t> idx(len_dist(rng));
    for (auto& i : idx) i = sym_dist(rng);
    return Word(sig, std::move(idx));
}

struct RandomPresentationLimits {
    std::size_t max_symbols = 3;
    std::size_t max_generators = 3;
    std::size_t max_relations = 4;
    std::size_t max_word_length = 6;
};

inline Presentation random_presentation(std::mt19937& rng,
                                        const RandomPresentationLimits& limits = {}) {
    static const std::vector<std::string> op_names{"f", "g", "h", "k", "l"};
    static const std::vector<std::string> gen_names{"a", "b", "c", "d", "e"};
    std::uniform_int_distribution<std::size_t> ops_dist(1, limits.max_symbols);
    std::uniform_int_distribution<std::size_t> gens_dist(1, limits.max_generators);
    const std::size_t n_ops = ops_dist(rng);
    const std::size_t n_gens = gens_dist(rng);
    std::vector<OpSymbol> ops;
    for (std::size_t i = 0; i < n_ops; ++i) ops.emplace_back(op_names[i]);
    Signature sig(ops);
    std::vector<GeneratorId> gens;
    for (std::size_t i = 0; i < n_gens; ++i) gens.emplace_back(gen_names[i]);

    std::uniform_int_distribution<std::size_t> rel_dist(0, limits.max_relations);
    std::uniform_int_distribution<std::size_t> gen_dist(0, n_gens - 1);
    auto random_term = [&] {
        return Term(random_word(rng, sig, 0, limits.max_word_length), gens[gen_dist(rng)]);
    };
    std::vector<Relation> rels;
    const std::size_t n_rels = rel_dist(rng);
    for (std::size_t i = 0; i < n_rels; ++i) rels.push_back({random_term(), random_term()});
    return Presentation(sig, std::move(gens), std::move(rels));
}

struct DotEdge {
    std::string src;
    std::string dst;
    std::string label;
};

struct DotGraph {
    std::vector<std::string> nodes;
    std::vector<DotEdge> edges;
};

inline std::vector<std::string> quoted_strings(const std::string& line) {
    std::vector<std::string> out;
    std::size_t i = 0;
    while ((i = line.find('"', i)) != std::string::npos) {
        const std::size_t j = line.find('"', i + 1);
        if (j == std::string::npos) break;
        out.push_back(line.substr(i + 1, j - i - 1));
        i = j + 1;
    }
    return out;
}

inline DotGraph parse_dot(const std::string& text) {
    DotGraph g;
    std::size_t pos = 0;
    bool first = true;
    while (pos < text.size()) {
        std::size_t nl = text.find('\n', pos);
        if (nl == std::string::npos) nl = text.size();
        const std::string line = text.substr(pos, nl - pos);
        pos = nl + 1;
        if (first) {  // digraph header
            first = false;
            continue;
        }
        auto quotes = quoted_strings(line);
        if (line.find("->") != std::string::npos && quotes.size() >= 3) {
            g.edges.push_back({quotes[0], quotes[1], quotes[2]});
        } else if (!quotes.empty() && line.find('[') != std::string::npos) {
            g.nodes.push_back(quotes[0]);
        }
    }
    return g;
}

/// Lengths of all directed cycles. In the graphs under test the in-degree is
/// at most one, so cycles are vertex-disjoint and every non-trivial strongly
/// connected component is a single simple cycle; this also verifies that.
inline std::vector<std::size_t> cycle_lengths(const DotGraph& g) {
    std::map<std::string, std::vector<std::string>> adj;
    for (const auto& e : g.edges) adj[e.src].push_back(e.dst);

    // Tarjan's strongly connected components.
    std::map<std::string, int> index, low;
    std::vector<std::string> stack;
    std::map<std::string, bool> on_stack;
    std::vector<std::vector<std::string>> components;
    int counter = 0;

    struct Frame {
        std::string node;
        std::size_t next_child = 0;
    };
    for (const auto& start : g.nodes) {
        if (index.count(start)) continue;
        std::vector<Frame> frames{{start}};
        index[start] = low[start] = counter++;
        stack.push_back(start);
        on_stack[start] = true;
        while (!frames.empty()) {
            Frame& f = frames.back();
            const auto& children = adj[f.node];
            if (f.next_child < children.size()) {
                const std::string& child = children[f.next_child++];
                if (!index.count(child)) {
                    index[child] = low[child] = counter++;
                    stack.push_back(child);
                    on_stack[child] = true;
                    frames.push_back({child});
                } else if (on_stack[child]) {
                    low[f.node] = std::min(low[f.node], index[child]);
                }
            } else {
                if (low[f.node] == index[f.node]) {
                    std::vector<std::string> comp;
                    while (true) {
                        std::string v = stack.back();
                        stack.pop_back();
                        on_stack[v] = false;
                        comp.push_back(v);
                        if (v == f.node) break;
                    }
                    components.push_back(std::move(comp));
                }
                const std::string done = f.node;
                frames.pop_back();
                if (!frames.empty()) {
                    low[frames.back().node] = std::min(low[frames.back().node], low[done]);
                }
            }
        }
    }

    std::vector<std::size_t> lengths;
    for (const auto& comp : components) {
        if (comp.size() == 1) {
            const auto& v = comp.front();
            const auto& children = adj[v];
            if (std::count(children.begin(), children.end(), v) > 0) lengths.push_back(1);
            continue;
        }
        // Each component vertex must have exactly one in-component successor.
        for (const auto& v : comp) {
            std::size_t internal = 0;
            for (const auto& child : adj[v]) {
                if (std::find(comp.begin(), comp.end(), child) != comp.end()) ++internal;
            }
            if (internal != 1) return {};  // not a disjoint union of simple cycles
        }
        lengths.push_back(comp.size());
    }
    std::sort(lengths.begin(), lengths.end());
    return lengths;
}

}  // namespace spa::testing
