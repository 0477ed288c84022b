#pragma once

#include <atomic>
#include <cstdint>
#include <memory>
#include <vector>

namespace terrex {

// Plain disjoint-set with path halving and union by size.
class UnionFind {
  public:
    explicit UnionFind(std::size_t n) : parent_(n), size_(n, 1) {
        for (std::size_t i = 0; i < n; ++i) parent_[i] = static_cast<std::uint32_t>(i);
    }

    std::uint32_t find(std::uint32_t x) {
        while (parent_[x] != x) {
            parent_[x] = parent_[parent_[x]];
            x = parent_[x];
        }
        return x;
    }

    // Returns true if the two sets were distinct.
    bool unite(std::uint32_t a, std::uint32_t b) {
        a = find(a);
        b = find(b);
        if (a == b) return false;
        if (size_[a] < size_[b]) std::swap(a, b);
        parent_[b] = a;
        size_[a] += size_[b];
        return true;
    }

  private:
    std::vector<std::uint32_t> parent_;
    std::vector<std::uint32_t> size_;
};

// Disjoint-set with an undo trail. No path compression so links can be
// popped; union by rank keeps finds logarithmic.
class RollbackUnionFind {
  public:
    explicit RollbackUnionFind(std::size_t n) : parent_(n), rank_(n, 0) {
        for (std::size_t i = 0; i < n; ++i) parent_[i] = static_cast<std::uint32_t>(i);
    }

    std::uint32_t find(std::uint32_t x) const {
        while (parent_[x] != x) x = parent_[x];
        return x;
    }

    // Returns the surviving root, or kSame if already united.
    static constexpr std::uint32_t kSame = 0xffffffffu;

    std::uint32_t unite(std::uint32_t a, std::uint32_t b) {
        a = find(a);
        b = find(b);
        if (a == b) return kSame;
        if (rank_[a] < rank_[b]) std::swap(a, b);
        parent_[b] = a;
        bool bumped = false;
        if (rank_[a] == rank_[b]) {
            ++rank_[a];
            bumped = true;
        }
        trail_.push_back({b, a, bumped});
        return a;
    }

    std::size_t mark() const { return trail_.size(); }

    void rollback(std::size_t mark) {
        while (trail_.size() > mark) {
            const Link l = trail_.back();
            trail_.pop_back();
            parent_[l.child] = l.child;
            if (l.rank_bumped) --rank_[l.parent];
        }
    }

  private:
    struct Link {
        std::uint32_t child;
        std::uint32_t parent;
        bool rank_bumped;
    };
    std::vector<std::uint32_t> parent_;
    std::vector<std::uint32_t> rank_;
    std::vector<Link> trail_;
};

// Lock-free disjoint-set for the OpenMP kernels. Roots are hooked towards
// smaller indices with CAS; concurrent path halving is benign.
class AtomicUnionFind {
  public:
    explicit AtomicUnionFind(std::size_t n)
        : parent_(std::make_unique<std::atomic<std::uint32_t>[]>(n)), n_(n) {
        for (std::size_t i = 0; i < n; ++i)
            parent_[i].store(static_cast<std::uint32_t>(i), std::memory_order_relaxed);
    }

    std::uint32_t find(std::uint32_t x) {
        std::uint32_t p = parent_[x].load(std::memory_order_relaxed);
        while (p != x) {
            const std::uint32_t gp = parent_[p].load(std::memory_order_relaxed);
            parent_[x].compare_exchange_weak(p, gp, std::memory_order_relaxed);
            x = p;
            p = parent_[x].load(std::memory_order_relaxed);
        }
        return x;
    }

    void unite(std::uint32_t a, std::uint32_t b) {
        while (true) {
            a = find(a);
            b = find(b);
            if (a == b) return;
            if (a < b) std::swap(a, b);  // hook the larger root under the smaller
            std::uint32_t expected = a;
            if (parent_[a].compare_exchange_strong(expected, b, std::memory_order_relaxed)) return;
        }
    }

    std::size_t size() const { return n_; }

  private:
    std::unique_ptr<std::atomic<std::uint32_t>[]> parent_;
    std::size_t n_;
};

}  // namespace terrex
