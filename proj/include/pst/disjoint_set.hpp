#pragma once

#include <cstddef>
#include <numeric>
#include <utility>
#include <vector>

namespace pst {

/// Union by size without path compression, so unions can be rolled back in
/// LIFO order during backtracking.
class DisjointSet {
public:
    explicit DisjointSet(std::size_t n) : parent_(n), size_(n, 1), components_(n) {
        std::iota(parent_.begin(), parent_.end(), 0);
    }

    [[nodiscard]] int find(int x) const {
        while (parent_[x] != x) {
            x = parent_[x];
        }
        return x;
    }

    /// Returns false if a and b were already joined.
    bool unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a == b) {
            return false;
        }
        if (size_[a] < size_[b]) {
            std::swap(a, b);
        }
        parent_[b] = a;
        size_[a] += size_[b];
        history_.push_back(b);
        --components_;
        return true;
    }

    /// Undo the most recent successful unite().
    void rollback() {
        const int b = history_.back();
        history_.pop_back();
        const int a = parent_[b];
        size_[a] -= size_[b];
        parent_[b] = b;
        ++components_;
    }

    [[nodiscard]] std::size_t components() const noexcept { return components_; }

private:
    std::vector<int> parent_;
    std::vector<int> size_;
    std::vector<int> history_;
    std::size_t components_;
};

}  // namespace pst
