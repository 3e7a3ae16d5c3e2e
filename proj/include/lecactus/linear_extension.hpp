#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "lecactus/poset.hpp"

namespace lecactus {

// Bijective order-preserving labeling of a poset by 1..n. Keeps the inverse
// table alongside; label(e) and element_of(v) are both O(1).
class LinearExtension {
public:
    LinearExtension() = default;
    // Validates bijectivity onto 1..n. Order-compatibility is the poset's
    // business; use is_linear_extension for the full check.
    explicit LinearExtension(std::vector<int> labels);

    static LinearExtension trusted(std::vector<int> labels, std::vector<int> inverse) {
        LinearExtension f;
        f.labels_ = std::move(labels);
        f.inverse_ = std::move(inverse);
        return f;
    }

    int size() const { return static_cast<int>(labels_.size()); }
    int label(int e) const { return labels_[e]; }
    int element_of(int v) const { return inverse_[v - 1]; }

    const std::vector<int>& labels() const { return labels_; }
    const std::vector<int>& inverse() const { return inverse_; }

    friend bool operator==(const LinearExtension& a, const LinearExtension& b) {
        return a.labels_ == b.labels_;
    }
    // Lexicographic on the label sequence in element order.
    friend bool operator<(const LinearExtension& a, const LinearExtension& b) {
        return a.labels_ < b.labels_;
    }

private:
    std::vector<int> labels_;   // element -> label
    std::vector<int> inverse_;  // label-1 -> element
};

bool is_linear_extension(const Poset& p, const std::vector<int>& labels);

// Lazy stream over all linear extensions of a poset, each yielded exactly
// once, in lexicographic order of the label sequence read in element order.
// Single-consumer; independent streams over the same poset are fine.
//
// Internally a DFS assigns labels to elements in index order. Candidate
// labels are filtered by an exact feasibility test (precedence-tightened
// label windows plus an earliest-deadline schedule of the unassigned
// elements), so the search never enters a subtree without a completion.
class LinearExtensionStream {
public:
    explicit LinearExtensionStream(const Poset& p);

    // Fills `out` with the next extension; false when exhausted.
    bool next(LinearExtension& out);

private:
    bool feasible_with_pin(int elem, int v);
    void push_frame();

    const Poset* poset_;
    int n_;
    std::vector<int> labels_;       // 0 = unassigned
    std::vector<bool> used_;        // used_[v-1]
    std::vector<int> topo_;
    struct Frame {
        std::vector<int> candidates;
        size_t next = 0;
    };
    std::vector<Frame> stack_;
    bool done_ = false;
    bool empty_emitted_ = false;
    // scratch for the feasibility test
    std::vector<int> lo_, hi_, slot_order_;
};

template <typename F>
void for_each_linear_extension(const Poset& p, F&& fn) {
    LinearExtensionStream stream(p);
    LinearExtension f;
    while (stream.next(f)) fn(f);
}

std::vector<LinearExtension> all_linear_extensions(const Poset& p);

// Counts extensions, stopping at cap+1; nullopt means "more than cap".
std::optional<uint64_t> count_linear_extensions(const Poset& p, uint64_t cap);

}  // namespace lecactus
