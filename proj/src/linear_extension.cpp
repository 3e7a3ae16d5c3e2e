#include "lecactus/linear_extension.hpp"

#include <algorithm>
#include <queue>

namespace lecactus {

LinearExtension::LinearExtension(std::vector<int> labels) : labels_(std::move(labels)) {
    const int n = static_cast<int>(labels_.size());
    inverse_.assign(n, -1);
    for (int e = 0; e < n; ++e) {
        int v = labels_[e];
        if (v < 1 || v > n || inverse_[v - 1] != -1)
            throw InvalidIndices("labels are not a bijection onto 1..n");
        inverse_[v - 1] = e;
    }
}

bool is_linear_extension(const Poset& p, const std::vector<int>& labels) {
    const int n = p.size();
    if (static_cast<int>(labels.size()) != n) return false;
    std::vector<bool> seen(n, false);
    for (int v : labels) {
        if (v < 1 || v > n || seen[v - 1]) return false;
        seen[v - 1] = true;
    }
    for (auto [a, b] : p.covers())
        if (labels[a] > labels[b]) return false;
    return true;
}

LinearExtensionStream::LinearExtensionStream(const Poset& p) : poset_(&p), n_(p.size()) {
    labels_.assign(n_, 0);
    used_.assign(n_, false);
    lo_.resize(n_);
    hi_.resize(n_);
    slot_order_.resize(n_);

    // Topological order for the window propagation passes.
    std::vector<int> indeg(n_, 0);
    for (int e = 0; e < n_; ++e) indeg[e] = static_cast<int>(p.lower_covers(e).size());
    std::queue<int> ready;
    for (int e = 0; e < n_; ++e)
        if (indeg[e] == 0) ready.push(e);
    while (!ready.empty()) {
        int e = ready.front();
        ready.pop();
        topo_.push_back(e);
        for (int u : p.upper_covers(e))
            if (--indeg[u] == 0) ready.push(u);
    }

    if (n_ > 0) push_frame();
}

// Exact completability test for the current partial labeling with one extra
// pin. Label windows are tightened along covers in both directions; a
// partial labeling completes to a linear extension iff the unit-slot
// earliest-deadline schedule of the windows succeeds.
bool LinearExtensionStream::feasible_with_pin(int elem, int v) {
    if (used_[v - 1]) return false;
    if (poset_->covers().empty()) return true;  // no constraints at all

    labels_[elem] = v;
    bool ok = true;
    for (int u = 0; u < n_; ++u) {
        lo_[u] = labels_[u] ? labels_[u] : 1;
        hi_[u] = labels_[u] ? labels_[u] : n_;
    }
    for (int u : topo_)
        for (int w : poset_->upper_covers(u)) lo_[w] = std::max(lo_[w], lo_[u] + 1);
    for (auto it = topo_.rbegin(); it != topo_.rend(); ++it)
        for (int w : poset_->upper_covers(*it)) hi_[*it] = std::min(hi_[*it], hi_[w] - 1);
    for (int u = 0; u < n_ && ok; ++u)
        if (lo_[u] > hi_[u]) ok = false;

    if (ok) {
        // slot_order_ doubles as the scheduled flag (generation counter
        // would be overkill at these sizes)
        std::fill(slot_order_.begin(), slot_order_.end(), 0);
        for (int t = 1; t <= n_ && ok; ++t) {
            int best = -1;
            for (int u = 0; u < n_; ++u) {
                if (slot_order_[u] || lo_[u] > t) continue;
                if (best == -1 || hi_[u] < hi_[best]) best = u;
            }
            if (best == -1 || hi_[best] < t)
                ok = false;
            else
                slot_order_[best] = t;
        }
    }

    labels_[elem] = 0;
    return ok;
}

void LinearExtensionStream::push_frame() {
    const int elem = static_cast<int>(stack_.size());
    Frame fr;
    for (int v = 1; v <= n_; ++v)
        if (feasible_with_pin(elem, v)) fr.candidates.push_back(v);
    stack_.push_back(std::move(fr));
}

bool LinearExtensionStream::next(LinearExtension& out) {
    if (done_) return false;
    if (n_ == 0) {
        done_ = true;
        out = LinearExtension(std::vector<int>{});
        return true;
    }
    while (!stack_.empty()) {
        Frame& fr = stack_.back();
        const int elem = static_cast<int>(stack_.size()) - 1;
        if (labels_[elem] != 0) {  // undo this frame's previous pick
            used_[labels_[elem] - 1] = false;
            labels_[elem] = 0;
        }
        if (fr.next < fr.candidates.size()) {
            int v = fr.candidates[fr.next++];
            labels_[elem] = v;
            used_[v - 1] = true;
            if (elem == n_ - 1) {
                std::vector<int> inv(n_);
                for (int e = 0; e < n_; ++e) inv[labels_[e] - 1] = e;
                out = LinearExtension::trusted(labels_, std::move(inv));
                return true;
            }
            push_frame();
        } else {
            stack_.pop_back();
        }
    }
    done_ = true;
    return false;
}

std::vector<LinearExtension> all_linear_extensions(const Poset& p) {
    std::vector<LinearExtension> out;
    for_each_linear_extension(p, [&](const LinearExtension& f) { out.push_back(f); });
    return out;
}

std::optional<uint64_t> count_linear_extensions(const Poset& p, uint64_t cap) {
    LinearExtensionStream stream(p);
    LinearExtension f;
    uint64_t count = 0;
    while (stream.next(f)) {
        if (++count > cap) return std::nullopt;
    }
    return count;
}

}  // namespace lecactus
