#include "lecactus/poset.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <sstream>

namespace lecactus {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] < 1)
            throw InadmissiblePartition("partition parts must be positive");
        if (i > 0 && parts_[i] > parts_[i - 1])
            throw InadmissiblePartition("partition parts must be weakly decreasing");
        sum_ += parts_[i];
    }
}

std::string Partition::to_string() const {
    std::string s = "[";
    for (size_t i = 0; i < parts_.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(parts_[i]);
    }
    return s + "]";
}

void Poset::finalize() {
    std::sort(covers_.begin(), covers_.end());
    up_.assign(n_, {});
    down_.assign(n_, {});
    for (auto [a, b] : covers_) {
        up_[a].push_back(b);
        down_[b].push_back(a);
    }

    // Closure by DP over a topological order; rejects cycles.
    std::vector<int> indeg(n_, 0), topo;
    topo.reserve(n_);
    for (int e = 0; e < n_; ++e) indeg[e] = static_cast<int>(down_[e].size());
    std::queue<int> ready;
    for (int e = 0; e < n_; ++e)
        if (indeg[e] == 0) ready.push(e);
    while (!ready.empty()) {
        int e = ready.front();
        ready.pop();
        topo.push_back(e);
        for (int u : up_[e])
            if (--indeg[u] == 0) ready.push(u);
    }
    if (static_cast<int>(topo.size()) != n_)
        throw ParseError("cover relation is cyclic");

    leq_ = BitMatrix(n_);
    for (int i = n_ - 1; i >= 0; --i) {
        int e = topo[i];
        leq_.set(e, e);
        for (int u : up_[e]) leq_.or_row_into(u, e);
    }
}

Poset Poset::chain(int n) {
    if (n < 0) throw InvalidIndices("chain size must be non-negative");
    Poset p;
    p.n_ = n;
    for (int e = 0; e + 1 < n; ++e) p.covers_.emplace_back(e, e + 1);
    p.finalize();
    p.chain_of_.assign(n, 1);
    p.num_chains_ = n > 0 ? 1 : 0;
    return p;
}

Poset Poset::antichain(int m) {
    if (m < 0) throw InvalidIndices("antichain size must be non-negative");
    Poset p;
    p.n_ = m;
    p.finalize();
    p.chain_of_.resize(m);
    std::iota(p.chain_of_.begin(), p.chain_of_.end(), 1);
    p.num_chains_ = m;
    return p;
}

Poset Poset::from_covers(int n, std::vector<std::pair<int, int>> covers) {
    if (n < 0) throw InvalidIndices("poset size must be non-negative");
    Poset p;
    p.n_ = n;
    p.covers_ = std::move(covers);
    for (auto [a, b] : p.covers_) {
        if (a < 0 || a >= n || b < 0 || b >= n)
            throw InvalidIndices("cover index out of range");
        if (a == b) throw ParseError("cover relation is cyclic");
    }
    std::sort(p.covers_.begin(), p.covers_.end());
    if (std::adjacent_find(p.covers_.begin(), p.covers_.end()) != p.covers_.end())
        throw ParseError("duplicate cover pair");
    p.finalize();
    // Hasse condition: no cover pair may hold transitively via a third element.
    for (auto [a, b] : p.covers_)
        for (int z = 0; z < n; ++z)
            if (z != a && z != b && p.less(a, z) && p.less(z, b))
                throw ParseError("covers are not a Hasse diagram: (" +
                                 std::to_string(a) + "," + std::to_string(b) +
                                 ") is transitively implied");
    return p;
}

std::vector<int> Poset::minimal_elements() const {
    std::vector<int> out;
    for (int e = 0; e < n_; ++e)
        if (down_[e].empty()) out.push_back(e);
    return out;
}

std::vector<int> Poset::maximal_elements() const {
    std::vector<int> out;
    for (int e = 0; e < n_; ++e)
        if (up_[e].empty()) out.push_back(e);
    return out;
}

std::vector<int> Poset::chain_sizes() const {
    std::vector<int> sizes(num_chains_, 0);
    for (int e = 0; e < n_; ++e) sizes[chain_of_[e] - 1]++;
    return sizes;
}

Poset disjoint_union(const Poset& p, const Poset& q) {
    Poset r;
    r.n_ = p.n_ + q.n_;
    r.covers_ = p.covers_;
    for (auto [a, b] : q.covers_) r.covers_.emplace_back(a + p.n_, b + p.n_);
    r.finalize();
    if (p.has_chain_ids() && q.has_chain_ids()) {
        r.chain_of_ = p.chain_of_;
        for (int e = 0; e < q.n_; ++e) r.chain_of_.push_back(q.chain_of_[e] + p.num_chains_);
        r.num_chains_ = p.num_chains_ + q.num_chains_;
    } else if (r.n_ == 0) {
        r.num_chains_ = 0;
    }
    return r;
}

Poset ordinal_sum(const Poset& p, const Poset& q) {
    if (p.empty()) return q;
    if (q.empty()) return p;
    Poset r;
    r.n_ = p.n_ + q.n_;
    r.covers_ = p.covers_;
    for (auto [a, b] : q.covers_) r.covers_.emplace_back(a + p.n_, b + p.n_);
    for (int a : p.maximal_elements())
        for (int b : q.minimal_elements()) r.covers_.emplace_back(a, b + p.n_);
    r.finalize();
    return r;
}

Poset chain_union(const Partition& lambda) {
    if (!lambda.chain_union_admissible())
        throw InadmissiblePartition("chain union needs at least two chains (or a single element)");
    Poset r;  // empty partition gives the empty poset
    for (int part : lambda.parts()) r = disjoint_union(r, Poset::chain(part));
    return r;
}

Poset ferrers(const Partition& lambda) {
    // Row-major cell numbering.
    std::vector<int> row_start(lambda.ell() + 1, 0);
    for (int r = 0; r < lambda.ell(); ++r) row_start[r + 1] = row_start[r] + lambda.part(r);
    std::vector<std::pair<int, int>> covers;
    for (int r = 0; r < lambda.ell(); ++r) {
        for (int c = 0; c < lambda.part(r); ++c) {
            int cell = row_start[r] + c;
            if (c + 1 < lambda.part(r)) covers.emplace_back(cell, cell + 1);
            if (r + 1 < lambda.ell() && c < lambda.part(r + 1))
                covers.emplace_back(cell, row_start[r + 1] + c);
        }
    }
    return Poset::from_covers(lambda.sum(), std::move(covers));
}

std::optional<ChainUnionBlocks> decompose_chain_union_sum(const Poset& p) {
    const int n = p.size();
    ChainUnionBlocks out;
    out.block_of_element.assign(n, -1);
    out.chain_of_element.assign(n, 0);
    if (n == 0) return out;

    // Ordinal summands are the connected components of the incomparability
    // graph; elements of distinct components are comparable by definition,
    // and the component order is forced.
    std::vector<int> comp(n, -1);
    int num_comp = 0;
    for (int s = 0; s < n; ++s) {
        if (comp[s] != -1) continue;
        comp[s] = num_comp;
        std::vector<int> stack{s};
        while (!stack.empty()) {
            int e = stack.back();
            stack.pop_back();
            for (int f = 0; f < n; ++f)
                if (comp[f] == -1 && p.incomparable(e, f)) {
                    comp[f] = num_comp;
                    stack.push_back(f);
                }
        }
        ++num_comp;
    }

    // Order components by any cross-pair; each must be a disjoint union of
    // chains (every Hasse in/out degree at most one).
    std::vector<int> rep(num_comp, -1);
    for (int e = 0; e < n; ++e)
        if (rep[comp[e]] == -1) rep[comp[e]] = e;
    std::vector<int> order(num_comp);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(),
              [&](int a, int b) { return p.less(rep[a], rep[b]); });

    std::vector<int> rank(num_comp);
    for (int i = 0; i < num_comp; ++i) rank[order[i]] = i;

    out.block_sizes.assign(num_comp, 0);
    for (int e = 0; e < n; ++e) {
        out.block_of_element[e] = rank[comp[e]];
        out.block_sizes[rank[comp[e]]]++;
    }
    out.prefix_size.assign(num_comp, 0);
    for (int b = 1; b < num_comp; ++b)
        out.prefix_size[b] = out.prefix_size[b - 1] + out.block_sizes[b - 1];

    // Within a block, in/out degree <= 1 makes the Hasse components chains.
    // Cross-block covers are exactly max(lower) -> min(upper), so count only
    // covers internal to a block.
    std::vector<int> updeg(n, 0), downdeg(n, 0);
    for (auto [a, b] : p.covers()) {
        if (out.block_of_element[a] != out.block_of_element[b]) continue;
        if (++updeg[a] > 1 || ++downdeg[b] > 1) return std::nullopt;
    }

    // Identify chains per block: walk up from within-block minimal elements.
    out.block_partitions.reserve(num_comp);
    for (int b = 0; b < num_comp; ++b) {
        std::vector<std::pair<int, int>> chains;  // (size, -head) for ordering
        std::vector<std::vector<int>> members;
        for (int e = 0; e < n; ++e) {
            if (out.block_of_element[e] != b) continue;
            bool is_chain_bottom = true;
            for (int d : p.lower_covers(e))
                if (out.block_of_element[d] == b) is_chain_bottom = false;
            if (!is_chain_bottom) continue;
            std::vector<int> chain{e};
            int cur = e;
            for (;;) {
                int next = -1;
                for (int u : p.upper_covers(cur))
                    if (out.block_of_element[u] == b) next = u;
                if (next == -1) break;
                chain.push_back(next);
                cur = next;
            }
            chains.emplace_back(static_cast<int>(chain.size()), -e);
            members.push_back(std::move(chain));
        }
        // Chains numbered by decreasing size, ties by smallest head index,
        // so the block partition reads off weakly decreasing.
        std::vector<int> idx(chains.size());
        std::iota(idx.begin(), idx.end(), 0);
        std::sort(idx.begin(), idx.end(), [&](int x, int y) {
            return std::pair(-chains[x].first, -chains[x].second) <
                   std::pair(-chains[y].first, -chains[y].second);
        });
        std::vector<int> parts;
        for (size_t c = 0; c < idx.size(); ++c) {
            parts.push_back(chains[idx[c]].first);
            for (int e : members[idx[c]]) out.chain_of_element[e] = static_cast<int>(c) + 1;
        }
        Partition mu{parts};
        if (!mu.chain_union_admissible()) return std::nullopt;
        out.block_partitions.push_back(std::move(mu));
    }
    return out;
}

Poset parse_poset_text(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    int n = -1;
    std::vector<std::pair<int, int>> covers;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        std::string tok;
        if (!(ls >> tok)) continue;
        if (tok == "n") {
            if (n != -1) throw ParseError("line " + std::to_string(lineno) + ": duplicate size line");
            if (!(ls >> n) || n < 0)
                throw ParseError("line " + std::to_string(lineno) + ": bad size");
        } else if (tok == "cover") {
            int a, b;
            if (n == -1) throw ParseError("cover line before size line");
            if (!(ls >> a >> b))
                throw ParseError("line " + std::to_string(lineno) + ": bad cover line");
            covers.emplace_back(a, b);
        } else {
            throw ParseError("line " + std::to_string(lineno) + ": unknown directive '" + tok + "'");
        }
        if (ls >> tok) throw ParseError("line " + std::to_string(lineno) + ": trailing tokens");
    }
    if (n == -1) throw ParseError("missing size line 'n <size>'");
    return Poset::from_covers(n, std::move(covers));
}

std::string poset_to_text(const Poset& p) {
    std::string out = "n " + std::to_string(p.size()) + "\n";
    for (auto [a, b] : p.covers())
        out += "cover " + std::to_string(a) + " " + std::to_string(b) + "\n";
    return out;
}

}  // namespace lecactus
