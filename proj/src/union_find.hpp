#pragma once

#include <cstddef>
#include <numeric>
#include <vector>

namespace normalsurf::detail {

class UnionFind {
public:
    explicit UnionFind(std::size_t n = 0) : parent_(n), rank_(n, 0) {
        std::iota(parent_.begin(), parent_.end(), std::size_t{0});
    }

    std::size_t add() {
        parent_.push_back(parent_.size());
        rank_.push_back(0);
        return parent_.size() - 1;
    }

    std::size_t find(std::size_t x) {
        while (parent_[x] != x) {
            parent_[x] = parent_[parent_[x]];
            x = parent_[x];
        }
        return x;
    }

    bool unite(std::size_t a, std::size_t b) {
        a = find(a);
        b = find(b);
        if (a == b) return false;
        if (rank_[a] < rank_[b]) std::swap(a, b);
        parent_[b] = a;
        if (rank_[a] == rank_[b]) ++rank_[a];
        return true;
    }

    std::size_t size() const { return parent_.size(); }

    /// Dense labels 0..k-1 for the classes, numbered by first appearance.
    std::vector<std::size_t> labels(std::size_t* classCount = nullptr) {
        std::vector<std::size_t> label(parent_.size());
        std::vector<std::size_t> rootLabel(parent_.size(), static_cast<std::size_t>(-1));
        std::size_t next = 0;
        for (std::size_t i = 0; i < parent_.size(); ++i) {
            const std::size_t r = find(i);
            if (rootLabel[r] == static_cast<std::size_t>(-1)) rootLabel[r] = next++;
            label[i] = rootLabel[r];
        }
        if (classCount) *classCount = next;
        return label;
    }

private:
    std::vector<std::size_t> parent_;
    std::vector<unsigned char> rank_;
};

}  // namespace normalsurf::detail
