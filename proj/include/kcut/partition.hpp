#pragma once

#include <cstdint>
#include <vector>

#include "kcut/graph.hpp"

namespace kcut {

// Partition of {0..n-1} into k nonempty blocks, stored as a restricted
// growth string: block_of[0] == 0 and
// block_of[v] <= 1 + max(block_of[0..v-1]).
struct Partition {
    int k = 0;
    std::vector<uint8_t> block_of;

    bool operator==(const Partition& o) const {
        return k == o.k && block_of == o.block_of;
    }
};

// Throws std::invalid_argument unless p is a canonical restricted growth
// string on n vertices with exactly p.k blocks.
void validate_partition(const Partition& p, int n);

// Blocks in label order; each block's vertices ascending.
std::vector<std::vector<int>> partition_blocks(const Partition& p);

// Canonical partition from an arbitrary block labeling (relabels to a
// restricted growth string).
Partition partition_from_labels(const std::vector<int>& labels);

// Edges of g with endpoints in different blocks, sorted.
// Throws std::invalid_argument if p.block_of.size() != g.order().
std::vector<Edge> crossing_edges(const Graph& g, const Partition& p);

// Witness that removing `removed_edges` leaves at least k components.
struct CutCertificate {
    int k = 0;
    Partition partition;
    std::vector<Edge> removed_edges;  // sorted
    int components_after = 0;         // equals k for optimal certificates
};

// Throws internal_error unless: partition is canonical with k blocks,
// removed_edges == crossing_edges(g, partition), components_after matches
// the real component count of g minus removed_edges, and
// components_after >= k.
void validate_certificate(const Graph& g, const CutCertificate& cert);

} // namespace kcut
