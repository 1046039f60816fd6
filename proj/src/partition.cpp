#include "kcut/partition.hpp"

#include <algorithm>
#include <stdexcept>

#include "kcut/errors.hpp"

namespace kcut {

void validate_partition(const Partition& p, int n) {
    if (static_cast<int>(p.block_of.size()) != n)
        throw std::invalid_argument("partition covers " +
                                    std::to_string(p.block_of.size()) +
                                    " vertices, graph has " + std::to_string(n));
    if (n == 0) {
        if (p.k != 0) throw std::invalid_argument("empty partition must have k = 0");
        return;
    }
    int maxb = -1;
    for (int v = 0; v < n; ++v) {
        int b = p.block_of[v];
        if (b > maxb + 1)
            throw std::invalid_argument(
                "not a restricted growth string at vertex " + std::to_string(v));
        maxb = std::max(maxb, b);
    }
    if (maxb + 1 != p.k)
        throw std::invalid_argument("partition has " + std::to_string(maxb + 1) +
                                    " blocks, expected " + std::to_string(p.k));
}

std::vector<std::vector<int>> partition_blocks(const Partition& p) {
    std::vector<std::vector<int>> blocks(p.k);
    for (int v = 0; v < static_cast<int>(p.block_of.size()); ++v)
        blocks[p.block_of[v]].push_back(v);
    return blocks;
}

Partition partition_from_labels(const std::vector<int>& labels) {
    Partition p;
    p.block_of.resize(labels.size());
    std::vector<int> relabel;
    for (size_t v = 0; v < labels.size(); ++v) {
        int lab = labels[v];
        int b = -1;
        for (size_t i = 0; i < relabel.size(); ++i)
            if (relabel[i] == lab) { b = static_cast<int>(i); break; }
        if (b == -1) {
            b = static_cast<int>(relabel.size());
            relabel.push_back(lab);
        }
        p.block_of[v] = static_cast<uint8_t>(b);
    }
    p.k = static_cast<int>(relabel.size());
    return p;
}

std::vector<Edge> crossing_edges(const Graph& g, const Partition& p) {
    if (static_cast<int>(p.block_of.size()) != g.order())
        throw std::invalid_argument("partition covers " +
                                    std::to_string(p.block_of.size()) +
                                    " vertices, graph has " +
                                    std::to_string(g.order()));
    std::vector<Edge> out;
    for (const Edge& e : g.edges())
        if (p.block_of[e.u] != p.block_of[e.v]) out.push_back(e);
    return out;
}

void validate_certificate(const Graph& g, const CutCertificate& cert) {
    try {
        validate_partition(cert.partition, g.order());
    } catch (const std::invalid_argument& e) {
        throw internal_error(std::string("certificate partition invalid: ") +
                             e.what());
    }
    if (cert.partition.k != cert.k)
        throw internal_error("certificate k = " + std::to_string(cert.k) +
                             " but partition has " +
                             std::to_string(cert.partition.k) + " blocks");
    std::vector<Edge> cross = crossing_edges(g, cert.partition);
    if (cross != cert.removed_edges)
        throw internal_error("certificate removed_edges do not match the "
                             "partition's crossing edges");
    Graph h = remove_edges(g, cert.removed_edges);
    int comps = components(h).count;
    if (comps != cert.components_after)
        throw internal_error("certificate claims " +
                             std::to_string(cert.components_after) +
                             " components after removal, actual " +
                             std::to_string(comps));
    if (comps < cert.k)
        throw internal_error("certificate leaves " + std::to_string(comps) +
                             " components, fewer than k = " +
                             std::to_string(cert.k));
}

} // namespace kcut
