#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "lecactus/errors.hpp"

namespace lecactus {

// Integer partition: weakly decreasing positive parts.
class Partition {
public:
    Partition() = default;
    explicit Partition(std::vector<int> parts);

    const std::vector<int>& parts() const { return parts_; }
    int part(int i) const { return parts_[i]; }
    int ell() const { return static_cast<int>(parts_.size()); }
    int sum() const { return sum_; }

    // A partition describes a union of chains when it has at least two
    // parts, or is the single part (1).
    bool chain_union_admissible() const {
        return ell() > 1 || (ell() == 1 && sum_ == 1);
    }

    std::string to_string() const;

    friend bool operator==(const Partition&, const Partition&) = default;

private:
    std::vector<int> parts_;
    int sum_ = 0;
};

// Square boolean matrix with one bit per entry, row-major in 64-bit words.
class BitMatrix {
public:
    BitMatrix() = default;
    explicit BitMatrix(int n)
        : n_(n), words_((n + 63) / 64), bits_(static_cast<size_t>(n) * words_) {}

    bool get(int r, int c) const {
        return (bits_[static_cast<size_t>(r) * words_ + (c >> 6)] >> (c & 63)) & 1u;
    }
    void set(int r, int c) {
        bits_[static_cast<size_t>(r) * words_ + (c >> 6)] |= uint64_t{1} << (c & 63);
    }
    // row(dst) |= row(src)
    void or_row_into(int src, int dst) {
        const uint64_t* s = &bits_[static_cast<size_t>(src) * words_];
        uint64_t* d = &bits_[static_cast<size_t>(dst) * words_];
        for (int w = 0; w < words_; ++w) d[w] |= s[w];
    }
    int size() const { return n_; }

private:
    int n_ = 0;
    int words_ = 0;
    std::vector<uint64_t> bits_;
};

// Finite poset over elements 0..size-1. Immutable after construction.
//
// covers() holds the Hasse diagram; leq() is the precomputed
// reflexive-transitive closure. Construction rejects cover sets that are
// cyclic or contain transitively implied pairs.
//
// Elements produced by disjoint_union/ordinal_sum are numbered with the
// left operand's elements first, so block boundaries in ordinal sums are
// index ranges.
class Poset {
public:
    Poset() = default;

    static Poset chain(int n);
    static Poset antichain(int m);
    // Validates: indices in range, acyclic, covers form a Hasse diagram.
    static Poset from_covers(int n, std::vector<std::pair<int, int>> covers);

    int size() const { return n_; }
    bool empty() const { return n_ == 0; }

    bool leq(int a, int b) const { return leq_.get(a, b); }
    bool less(int a, int b) const { return a != b && leq_.get(a, b); }
    bool incomparable(int a, int b) const { return !leq_.get(a, b) && !leq_.get(b, a); }

    const std::vector<std::pair<int, int>>& covers() const { return covers_; }
    const std::vector<int>& upper_covers(int e) const { return up_[e]; }
    const std::vector<int>& lower_covers(int e) const { return down_[e]; }

    std::vector<int> minimal_elements() const;
    std::vector<int> maximal_elements() const;

    // Chain membership, present on posets built by chain()/antichain()/
    // chain_union() and preserved by disjoint_union. 1-based chain ids.
    bool has_chain_ids() const { return !chain_of_.empty(); }
    int chain_id(int e) const { return chain_of_[e]; }
    int chain_count() const { return num_chains_; }
    std::vector<int> chain_sizes() const;

    // Structural equality (same size and cover set), not isomorphism.
    friend bool operator==(const Poset& a, const Poset& b) {
        return a.n_ == b.n_ && a.covers_ == b.covers_;
    }

private:
    void finalize();  // sorts covers, builds adjacency and closure

    int n_ = 0;
    std::vector<std::pair<int, int>> covers_;
    std::vector<std::vector<int>> up_, down_;
    BitMatrix leq_;
    std::vector<int> chain_of_;
    int num_chains_ = 0;

    friend Poset disjoint_union(const Poset&, const Poset&);
    friend Poset ordinal_sum(const Poset&, const Poset&);
    friend Poset chain_union(const Partition&);
};

// Side-by-side union: no relations between the two operands.
Poset disjoint_union(const Poset& p, const Poset& q);

// Stacks q entirely above p; covers run from maximal elements of p to
// minimal elements of q.
Poset ordinal_sum(const Poset& p, const Poset& q);

// D_lambda: disjoint union of chains with the given part sizes, chain ids
// recorded in partition order. Throws InadmissiblePartition for a single
// chain of size > 1.
Poset chain_union(const Partition& lambda);

// Ferrers poset of a partition: cells (r,c) with covers to the cell on the
// right and the cell below. Linear extensions are standard Young tableaux.
Poset ferrers(const Partition& lambda);

// Decomposition of a poset into an ordinal sum of chain-union blocks, when
// it has one. Blocks are listed bottom-up; elements carry their block and
// 1-based within-block chain id. Every poset expressible as an ordinal sum
// of disjoint unions of chains decomposes uniquely into ordinal-
// indecomposable blocks.
struct ChainUnionBlocks {
    std::vector<Partition> block_partitions;
    std::vector<int> block_of_element;   // 0-based block index
    std::vector<int> chain_of_element;   // 1-based chain id within the block
    std::vector<int> block_sizes;
    std::vector<int> prefix_size;        // elements strictly below block b
};
std::optional<ChainUnionBlocks> decompose_chain_union_sum(const Poset& p);

// Text format: "n <size>" then one "cover <a> <b>" line per cover pair,
// 0-based. '#' starts a comment.
Poset parse_poset_text(const std::string& text);
std::string poset_to_text(const Poset& p);

}  // namespace lecactus
