#pragma once

// Partition-algebra diagrams: set-partitions of {1..r} ∪ {1'..r'}.
//
// Node k (1-based, northern) is stored at index k-1 and node k' (southern)
// at index r+k-1.  Blocks are labelled in order of first appearance along
// 1, 1', 2, 2', ..., which is also the canonical block order: by minimum
// node, with a northern node preceding the southern node of the same value.

#include <map>
#include <numeric>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "cellkernel/combinatorics.hpp"
#include "cellkernel/ring.hpp"

namespace cellkernel {

namespace detail {

class UnionFind {
public:
    explicit UnionFind(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), std::size_t{0}); }
    std::size_t find(std::size_t a) {
        while (parent_[a] != a) a = parent_[a] = parent_[parent_[a]];
        return a;
    }
    void unite(std::size_t a, std::size_t b) {
        a = find(a);
        b = find(b);
        if (a != b) parent_[std::max(a, b)] = std::min(a, b);
    }

private:
    std::vector<std::size_t> parent_;
};

}  // namespace detail

class Diagram {
public:
    Diagram() = default;

    /// Builds from arbitrary block labels, one per node (northern nodes first).
    static Diagram from_labels(int r, const std::vector<int>& labels) {
        if (r < 0 || labels.size() != static_cast<std::size_t>(2 * r)) throw DomainError("diagram needs 2r node labels");
        Diagram x;
        x.r_ = r;
        x.labels_.assign(labels.size(), -1);
        std::map<int, int> relabel;
        for (int v = 0; v < r; ++v)
            for (int idx : {v, r + v}) {
                auto [it, inserted] = relabel.try_emplace(labels[idx], static_cast<int>(relabel.size()));
                x.labels_[idx] = it->second;
            }
        return x;
    }

    /// Blocks given as lists of node indices (0..r-1 northern, r..2r-1 southern).
    static Diagram from_blocks(int r, const std::vector<std::vector<int>>& blocks) {
        std::vector<int> labels(static_cast<std::size_t>(2 * r), -1);
        for (std::size_t b = 0; b < blocks.size(); ++b) {
            if (blocks[b].empty()) throw DomainError("diagram blocks must be non-empty");
            for (int node : blocks[b]) {
                if (node < 0 || node >= 2 * r) throw DomainError("diagram node out of range");
                if (labels[node] != -1) throw DomainError("diagram blocks must be disjoint");
                labels[node] = static_cast<int>(b);
            }
        }
        for (int l : labels)
            if (l == -1) throw DomainError("diagram blocks must cover all 2r nodes");
        return from_labels(r, labels);
    }

    static Diagram identity(int r) {
        std::vector<int> labels(static_cast<std::size_t>(2 * r));
        for (int k = 0; k < r; ++k) labels[k] = labels[r + k] = k;
        return from_labels(r, labels);
    }

    int strands() const { return r_; }
    int block_of(int node_index) const { return labels_.at(node_index); }
    int num_blocks() const {
        int m = 0;
        for (int l : labels_) m = std::max(m, l + 1);
        return m;
    }

    std::vector<std::vector<int>> blocks() const {
        std::vector<std::vector<int>> out(static_cast<std::size_t>(num_blocks()));
        for (int i = 0; i < 2 * r_; ++i) out[labels_[i]].push_back(i);
        return out;
    }

    /// "1,2,4,2',5'|1'|3|..." in canonical order.
    std::string to_string() const {
        std::string s;
        for (const auto& block : blocks()) {
            if (!s.empty()) s += '|';
            bool first = true;
            for (int node : block) {
                if (!first) s += ',';
                first = false;
                s += node < r_ ? std::to_string(node + 1) : std::to_string(node - r_ + 1) + "'";
            }
        }
        return s;
    }

    /// Parses the "|"-separated block grammar.  The strand count is the largest
    /// node value unless given explicitly.
    static Diagram parse(std::string_view text, int r = -1) {
        std::vector<std::vector<std::pair<int, bool>>> raw;
        int max_value = 0;
        std::size_t pos = 0;
        while (true) {
            auto bar = text.find('|', pos);
            auto block_text = text.substr(pos, bar == std::string_view::npos ? std::string_view::npos : bar - pos);
            std::vector<std::pair<int, bool>> block;
            std::size_t p = 0;
            while (true) {
                auto comma = block_text.find(',', p);
                auto tok = block_text.substr(p, comma == std::string_view::npos ? std::string_view::npos : comma - p);
                while (!tok.empty() && tok.front() == ' ') tok.remove_prefix(1);
                while (!tok.empty() && tok.back() == ' ') tok.remove_suffix(1);
                bool primed = !tok.empty() && tok.back() == '\'';
                if (primed) tok.remove_suffix(1);
                if (tok.empty() || tok.find_first_not_of("0123456789") != std::string_view::npos)
                    throw ParseError("bad diagram node in '" + std::string(text) + "'");
                int value = std::stoi(std::string(tok));
                if (value < 1) throw ParseError("diagram nodes start at 1");
                max_value = std::max(max_value, value);
                block.emplace_back(value, primed);
                if (comma == std::string_view::npos) break;
                p = comma + 1;
            }
            raw.push_back(std::move(block));
            if (bar == std::string_view::npos) break;
            pos = bar + 1;
        }
        if (r < 0) r = max_value;
        if (max_value > r) throw ParseError("diagram node exceeds strand count");
        std::vector<std::vector<int>> blocks;
        for (const auto& block : raw) {
            std::vector<int> nodes;
            for (auto [value, primed] : block) nodes.push_back(primed ? r + value - 1 : value - 1);
            blocks.push_back(std::move(nodes));
        }
        try {
            return from_blocks(r, blocks);
        } catch (const DomainError& e) {
            throw ParseError(std::string(e.what()) + " in '" + std::string(text) + "'");
        }
    }

    friend auto operator<=>(const Diagram&, const Diagram&) = default;

private:
    int r_ = 0;
    std::vector<int> labels_;
};

inline std::ostream& operator<<(std::ostream& os, const Diagram& x) { return os << x.to_string(); }

struct DiagramProduct {
    int middle_components;  // exponent m of delta
    Diagram diagram;
};

/// Stacks x above y; counts the components made only of middle nodes.
inline DiagramProduct multiply_diagrams(const Diagram& x, const Diagram& y) {
    const int r = x.strands();
    if (y.strands() != r) throw DomainError("multiplying diagrams with different strand counts");
    // virtual nodes: 0..r-1 top, r..2r-1 middle, 2r..3r-1 bottom
    detail::UnionFind uf(static_cast<std::size_t>(3 * r));
    for (const auto& block : x.blocks())
        for (std::size_t i = 1; i < block.size(); ++i) uf.unite(block[0], block[i]);
    for (const auto& block : y.blocks())
        for (std::size_t i = 1; i < block.size(); ++i) uf.unite(r + block[0], r + block[i]);

    std::vector<bool> touches_outer(static_cast<std::size_t>(3 * r), false);
    for (int i = 0; i < r; ++i) {
        touches_outer[uf.find(i)] = true;
        touches_outer[uf.find(2 * r + i)] = true;
    }
    int m = 0;
    for (int i = r; i < 2 * r; ++i)
        if (uf.find(i) == static_cast<std::size_t>(i) && !touches_outer[i]) ++m;

    std::vector<int> labels(static_cast<std::size_t>(2 * r));
    for (int i = 0; i < r; ++i) {
        labels[i] = static_cast<int>(uf.find(i));
        labels[r + i] = static_cast<int>(uf.find(2 * r + i));
    }
    return {m, Diagram::from_labels(r, labels)};
}

/// Blocks {a, sigma(a)'}: maps in S_r are read on the right, so
/// diagram(tau * sigma) == diagram(sigma) . diagram(tau) with no delta factor.
inline Diagram permutation_to_diagram(const Permutation& sigma) {
    const int r = sigma.degree();
    std::vector<int> labels(static_cast<std::size_t>(2 * r));
    for (int a = 1; a <= r; ++a) {
        labels[a - 1] = a;
        labels[r + sigma(a) - 1] = a;
    }
    return Diagram::from_labels(r, labels);
}

/// x lies in P_{r+1/2} inside P_{r+1}: nodes r+1 and (r+1)' share a block.
inline bool is_half_diagram(const Diagram& x) {
    const int m = x.strands();
    if (m < 1) return false;
    return x.block_of(m - 1) == x.block_of(2 * m - 1);
}

/// All Bell(2r) diagrams with r strands.
inline std::vector<Diagram> all_diagrams(int r) {
    std::vector<Diagram> out;
    for (const auto& rgs : restricted_growth_strings(2 * r)) out.push_back(Diagram::from_labels(r, rgs));
    return out;
}

/// Basis diagrams of P_{r+1/2}, as diagrams with r+1 strands.
inline std::vector<Diagram> half_diagrams(int r) {
    std::vector<Diagram> out;
    for (auto& x : all_diagrams(r + 1))
        if (is_half_diagram(x)) out.push_back(std::move(x));
    return out;
}

/// Element of P_r(delta): a sparse combination of diagrams.
template <class Ring>
class DiagramAlgElem {
public:
    using value_type = typename Ring::value_type;

    DiagramAlgElem(int r, long delta, Ring ring) : r_(r), delta_(delta), ring_(std::move(ring)) {}

    static DiagramAlgElem basis(const Diagram& x, long delta, Ring ring) {
        DiagramAlgElem e(x.strands(), delta, ring);
        e.add_term(x, e.ring_.one());
        return e;
    }

    int strands() const { return r_; }
    long delta() const { return delta_; }
    const Ring& ring() const { return ring_; }
    const std::map<Diagram, value_type>& terms() const { return terms_; }

    void add_term(const Diagram& x, const value_type& c) {
        if (x.strands() != r_) throw DomainError("diagram term with wrong strand count");
        if (ring_.is_zero(c)) return;
        auto [it, inserted] = terms_.try_emplace(x, c);
        if (!inserted) {
            it->second += c;
            if (ring_.is_zero(it->second)) terms_.erase(it);
        }
    }

    DiagramAlgElem& operator+=(const DiagramAlgElem& o) {
        check_compatible(o);
        for (const auto& [x, c] : o.terms_) add_term(x, c);
        return *this;
    }
    friend DiagramAlgElem operator+(DiagramAlgElem a, const DiagramAlgElem& b) { return a += b; }

    /// Bilinear extension of stacking, each product weighted by delta^m.
    friend DiagramAlgElem operator*(const DiagramAlgElem& a, const DiagramAlgElem& b) {
        a.check_compatible(b);
        DiagramAlgElem out(a.r_, a.delta_, a.ring_);
        for (const auto& [x, c] : a.terms_)
            for (const auto& [y, e] : b.terms_) {
                auto [m, z] = multiply_diagrams(x, y);
                value_type scale = a.ring_.one();
                for (int k = 0; k < m; ++k) scale *= a.ring_.from_int(a.delta_);
                out.add_term(z, c * e * scale);
            }
        return out;
    }

    friend bool operator==(const DiagramAlgElem& a, const DiagramAlgElem& b) {
        return a.r_ == b.r_ && a.delta_ == b.delta_ && a.terms_ == b.terms_;
    }

private:
    void check_compatible(const DiagramAlgElem& o) const {
        if (r_ != o.r_ || delta_ != o.delta_ || !(ring_ == o.ring_))
            throw DomainError("diagram algebra elements with different parameters");
    }

    int r_;
    long delta_;
    Ring ring_;
    std::map<Diagram, value_type> terms_;
};

}  // namespace cellkernel
