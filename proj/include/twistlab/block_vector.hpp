// Finitely supported sequences of C^n blocks, stored top-component first:
// block = (x_{n-1}, ..., x_0). Canonical form: coordinates ascending, no
// all-zero blocks.
#pragma once

#include <algorithm>
#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

#include <twistlab/common.hpp>

namespace twistlab {

class BlockVector {
public:
    struct Entry {
        std::size_t k;
        std::vector<complex> block; // (x_{n-1}, ..., x_0)
    };

    explicit BlockVector(std::size_t n) : n_(n) {
        if (n == 0) throw std::invalid_argument("BlockVector: n must be >= 1");
    }

    std::size_t block_size() const { return n_; }
    const std::vector<Entry>& entries() const { return entries_; }
    std::size_t support_size() const { return entries_.size(); }
    bool zero() const { return entries_.empty(); }

    // Inserts or replaces the block at coordinate k; all-zero blocks are
    // dropped to keep the canonical form.
    void set(std::size_t k, std::vector<complex> block) {
        if (block.size() != n_)
            throw std::invalid_argument("BlockVector::set: wrong block length");
        auto it = std::lower_bound(
            entries_.begin(), entries_.end(), k,
            [](const Entry& e, std::size_t kk) { return e.k < kk; });
        const bool is_zero = std::all_of(block.begin(), block.end(),
                                         [](complex v) { return v == complex{}; });
        if (it != entries_.end() && it->k == k) {
            if (is_zero)
                entries_.erase(it);
            else
                it->block = std::move(block);
        } else if (!is_zero) {
            entries_.insert(it, Entry{k, std::move(block)});
        }
    }

    const std::vector<complex>* block_at(std::size_t k) const {
        auto it = std::lower_bound(
            entries_.begin(), entries_.end(), k,
            [](const Entry& e, std::size_t kk) { return e.k < kk; });
        return (it != entries_.end() && it->k == k) ? &it->block : nullptr;
    }

    // Drops the top component of every block: the (n-1)-block prefix vector.
    BlockVector prefix() const {
        if (n_ < 2) throw std::logic_error("BlockVector::prefix: n must be >= 2");
        BlockVector p(n_ - 1);
        for (const Entry& e : entries_)
            p.set(e.k, std::vector<complex>(e.block.begin() + 1, e.block.end()));
        return p;
    }

    // Component sequence x_j over the support of this vector, j counted from
    // the bottom (j = 0 is the last stored entry of each block).
    complex component(std::size_t k, std::size_t j) const {
        const auto* b = block_at(k);
        return b ? (*b)[n_ - 1 - j] : complex{};
    }

    friend BlockVector operator*(complex lambda, const BlockVector& v) {
        BlockVector r(v.n_);
        if (lambda == complex{}) return r;
        for (const Entry& e : v.entries_) {
            std::vector<complex> b = e.block;
            for (complex& c : b) c *= lambda;
            r.set(e.k, std::move(b));
        }
        return r;
    }

    friend BlockVector operator+(const BlockVector& a, const BlockVector& b) {
        if (a.n_ != b.n_)
            throw std::invalid_argument("BlockVector: block size mismatch");
        BlockVector r = a;
        for (const Entry& e : b.entries_) {
            std::vector<complex> sum = e.block;
            if (const auto* ab = r.block_at(e.k))
                for (std::size_t j = 0; j < sum.size(); ++j) sum[j] += (*ab)[j];
            r.set(e.k, std::move(sum));
        }
        return r;
    }

    friend bool operator==(const BlockVector& a, const BlockVector& b) {
        if (a.n_ != b.n_ || a.entries_.size() != b.entries_.size()) return false;
        for (std::size_t i = 0; i < a.entries_.size(); ++i)
            if (a.entries_[i].k != b.entries_[i].k ||
                a.entries_[i].block != b.entries_[i].block)
                return false;
        return true;
    }

private:
    std::size_t n_;
    std::vector<Entry> entries_;
};

} // namespace twistlab
