#ifndef GSEARCH_TEST_UTIL_HPP
#define GSEARCH_TEST_UTIL_HPP

#include <random>
#include <vector>

#include "gsearch/digraph.hpp"

namespace gsearch::testutil {

// Random simple digraph on n vertices, each arc present with probability p.
inline Digraph randomDigraph(std::mt19937& rng, std::size_t n, double p) {
    std::bernoulli_distribution arc(p);
    Digraph g(n);
    for (std::size_t u = 0; u < n; ++u)
        for (std::size_t v = 0; v < n; ++v)
            if (u != v && arc(rng)) g.addEdge(u, v);
    return g;
}

// All subsets of a ground set of size n (n <= ~16), as VertexSets.
inline std::vector<VertexSet> allSubsets(std::size_t n) {
    std::vector<VertexSet> out;
    for (std::uint64_t mask = 0; mask < (std::uint64_t(1) << n); ++mask) {
        VertexSet s(n);
        for (std::size_t v = 0; v < n; ++v)
            if ((mask >> v) & 1) s.add(v);
        out.push_back(s);
    }
    return out;
}

inline VertexSet randomSubset(std::mt19937& rng, std::size_t n, double p) {
    std::bernoulli_distribution in(p);
    VertexSet s(n);
    for (std::size_t v = 0; v < n; ++v)
        if (in(rng)) s.add(v);
    return s;
}

}  // namespace gsearch::testutil

#endif
