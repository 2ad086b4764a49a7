#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "tempoviz/temporal_graph.hpp"

namespace tempoviz {

// A path as a node sequence over a VertexTable; length = edge count = size - 1.
using PathKey = std::vector<VertexId>;

using PathCounts = std::map<PathKey, std::uint64_t>;

// Multiset of paths with integer frequencies, indexed by length 1..max_length.
// The vertex table carries every vertex of the originating data, including
// vertices that no stored path traverses.
class PathCollection {
public:
    PathCollection() = default;

    PathCollection(VertexTable table, int max_length, std::optional<Timestamp> delta)
        : table_(std::move(table)), max_length_(max_length), delta_(delta),
          by_length_(static_cast<std::size_t>(max_length) + 1) {
        if (max_length < 1) throw std::invalid_argument("max_length must be >= 1");
    }

    const VertexTable& vertices() const { return table_; }
    VertexTable& mutable_vertices() { return table_; }
    int max_length() const { return max_length_; }
    std::optional<Timestamp> delta() const { return delta_; }

    void add(const PathKey& nodes, std::uint64_t count) {
        const int len = static_cast<int>(nodes.size()) - 1;
        if (len < 1 || len > max_length_) throw std::invalid_argument("path length out of range");
        if (count == 0) return;
        by_length_[static_cast<std::size_t>(len)][nodes] += count;
    }

    // Counts of all paths of one length, keyed by node sequence.
    const PathCounts& paths_of_length(int len) const {
        static const PathCounts empty;
        if (len < 1 || len > max_length_) return empty;
        return by_length_[static_cast<std::size_t>(len)];
    }

    std::uint64_t count_of(const PathKey& nodes) const {
        const int len = static_cast<int>(nodes.size()) - 1;
        const auto& m = paths_of_length(len);
        auto it = m.find(nodes);
        return it == m.end() ? 0 : it->second;
    }

    std::uint64_t total_occurrences() const {
        std::uint64_t total = 0;
        for (int l = 1; l <= max_length_; ++l)
            for (const auto& [k, c] : paths_of_length(l)) total += c;
        return total;
    }

    std::uint64_t total_occurrences_of_length(int len) const {
        std::uint64_t total = 0;
        for (const auto& [k, c] : paths_of_length(len)) total += c;
        return total;
    }

    bool empty() const {
        for (int l = 1; l <= max_length_; ++l)
            if (!paths_of_length(l).empty()) return false;
        return true;
    }

    std::string format_path(const PathKey& nodes, char sep = ',') const {
        std::string out;
        for (std::size_t i = 0; i < nodes.size(); ++i) {
            if (i) out.push_back(sep);
            out += table_.name_of(nodes[i]);
        }
        return out;
    }

private:
    VertexTable table_;
    int max_length_ = 1;
    std::optional<Timestamp> delta_;
    std::vector<PathCounts> by_length_;  // index = length; [0] unused
};

}  // namespace tempoviz
