#pragma once

// Tensor space V^{⊗r} with V = k^n, the value-permuting action of W_d on the
// left and the diagram action of the partition algebra on the right.
//
// For eps = 1/2 the space is identified with V^{⊗r} ⊗ v_n; then d = n - 1
// and W_d acts on values 1..n fixing n.

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "cellkernel/combinatorics.hpp"
#include "cellkernel/diagram.hpp"
#include "cellkernel/linalg.hpp"
#include "cellkernel/ring.hpp"
#include "json.hpp"

namespace cellkernel {

/// Parameters (n, r, eps, ring) of one representation; d = n - 2 eps.
struct Instance {
    int n = 1;
    int r = 1;
    bool half = false;  // eps = 1/2
    RingSpec ring = RationalRing{};

    Instance() = default;
    Instance(int n_, int r_, bool half_, RingSpec ring_ = RationalRing{}) : n(n_), r(r_), half(half_), ring(std::move(ring_)) {
        if (n < 1 || r < 1) throw DomainError("instance requires n >= 1 and r >= 1");
        if (d() < 1) throw DomainError("instance requires d = n - 2 eps >= 1");
    }

    int d() const { return half ? n - 1 : n; }
    std::string eps_string() const { return half ? "1/2" : "0"; }

    /// Sorting key: (d, r, eps, n) then ring name.
    std::string key() const {
        char buf[64];
        std::snprintf(buf, sizeof buf, "%02d/%02d/%d/%02d/", d(), r, half ? 1 : 0, n);
        return buf + ring_name(ring);
    }

    nlohmann::json to_json() const {
        return {{"n", n}, {"r", r}, {"eps", eps_string()}, {"d", d()}, {"ring", ring_name(ring)}};
    }

    static Instance from_json(const nlohmann::json& j) {
        const auto eps = j.at("eps").get<std::string>();
        if (eps != "0" && eps != "1/2") throw ParseError("eps must be \"0\" or \"1/2\"");
        return Instance(j.at("n").get<int>(), j.at("r").get<int>(), eps == "1/2", parse_ring(j.at("ring").get<std::string>()));
    }
};

/// Runs f(ring) with the concrete ring policy of `spec`.
template <class F>
decltype(auto) with_ring(const RingSpec& spec, F&& f) {
    return std::visit([&](const auto& ring) -> decltype(auto) { return f(ring); }, spec);
}

inline long int_pow(long base, int e) {
    long p = 1;
    for (int i = 0; i < e; ++i) p *= base;
    return p;
}

// ---------------------------------------------------------------------------
// Multi-indices

class TensorIndex {
public:
    TensorIndex() = default;
    explicit TensorIndex(std::vector<int> entries) : entries_(std::move(entries)) {}

    int degree() const { return static_cast<int>(entries_.size()); }
    int operator[](std::size_t place) const { return entries_[place]; }
    const std::vector<int>& entries() const { return entries_; }

    void check_range(int n) const {
        for (int v : entries_)
            if (v < 1 || v > n)
                throw DomainError("tensor index " + to_string() + " has entries outside 1.." + std::to_string(n));
    }

    /// sum (i_k - 1) n^{r-k}: row-major, leftmost place most significant.
    std::size_t flat(int n) const {
        std::size_t f = 0;
        for (int v : entries_) f = f * static_cast<std::size_t>(n) + static_cast<std::size_t>(v - 1);
        return f;
    }

    static TensorIndex from_flat(std::size_t f, int n, int r) {
        std::vector<int> e(static_cast<std::size_t>(r));
        for (int k = r - 1; k >= 0; --k) {
            e[k] = static_cast<int>(f % static_cast<std::size_t>(n)) + 1;
            f /= static_cast<std::size_t>(n);
        }
        return TensorIndex(std::move(e));
    }

    std::string to_string() const { return "(" + detail::join_ints(entries_) + ")"; }
    static TensorIndex parse(std::string_view s) {
        return TensorIndex(detail::parse_int_list(detail::strip_brackets(s, '(', ')')));
    }

    friend auto operator<=>(const TensorIndex&, const TensorIndex&) = default;

private:
    std::vector<int> entries_;
};

/// I(n, r) in flat order.
inline std::vector<TensorIndex> all_indices(int n, int r) {
    const long total = int_pow(n, r);
    std::vector<TensorIndex> out;
    out.reserve(static_cast<std::size_t>(total));
    for (long f = 0; f < total; ++f) out.push_back(TensorIndex::from_flat(static_cast<std::size_t>(f), n, r));
    return out;
}

/// Sparse tensor: basis multi-index -> nonzero coefficient.
template <class Ring>
class TensorVec {
public:
    using value_type = typename Ring::value_type;

    TensorVec(int n, int r, Ring ring) : n_(n), r_(r), ring_(std::move(ring)) {}

    static TensorVec basis(const TensorIndex& idx, int n, Ring ring) {
        idx.check_range(n);
        TensorVec v(n, idx.degree(), ring);
        v.add_term(idx, v.ring_.one());
        return v;
    }

    int n() const { return n_; }
    int r() const { return r_; }
    const Ring& ring() const { return ring_; }
    const std::map<TensorIndex, value_type>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    void add_term(const TensorIndex& idx, const value_type& c) {
        if (idx.degree() != r_) throw DomainError("tensor term of wrong degree");
        if (ring_.is_zero(c)) return;
        auto [it, inserted] = terms_.try_emplace(idx, c);
        if (!inserted) {
            it->second += c;
            if (ring_.is_zero(it->second)) terms_.erase(it);
        }
    }

    TensorVec& operator+=(const TensorVec& o) {
        if (o.n_ != n_ || o.r_ != r_) throw DomainError("adding tensors of different shape");
        for (const auto& [idx, c] : o.terms_) add_term(idx, c);
        return *this;
    }

    friend TensorVec operator*(const value_type& c, const TensorVec& v) {
        TensorVec out(v.n_, v.r_, v.ring_);
        for (const auto& [idx, x] : v.terms_) out.add_term(idx, c * x);
        return out;
    }

    friend bool operator==(const TensorVec& a, const TensorVec& b) {
        return a.n_ == b.n_ && a.r_ == b.r_ && a.terms_ == b.terms_;
    }

    std::string to_string() const {
        if (terms_.empty()) return "0";
        std::string s;
        for (const auto& [idx, c] : terms_) {
            if (!s.empty()) s += " + ";
            s += ring_.to_string(c) + "*" + idx.to_string();
        }
        return s;
    }

private:
    int n_, r_;
    Ring ring_;
    std::map<TensorIndex, value_type> terms_;
};

// ---------------------------------------------------------------------------
// Actions

/// w as an element of W_n: degree-d permutations fix n in the half case.
inline Permutation weyl_element(const Permutation& w, const Instance& inst) {
    if (w.degree() == inst.n) {
        if (inst.half && w(inst.n) != inst.n)
            throw DomainError("W_{n-1} elements must fix n, got " + w.to_string());
        return w;
    }
    if (inst.half && w.degree() == inst.d()) return w.extended(inst.n);
    throw DomainError("permutation " + w.to_string() + " does not act on values 1.." + std::to_string(inst.n));
}

/// w (v_{j1} ⊗ ... ⊗ v_{jr}) = v_{w(j1)} ⊗ ... ⊗ v_{w(jr)}.
inline TensorIndex weyl_act(const Permutation& w, const TensorIndex& idx, const Instance& inst) {
    idx.check_range(inst.n);
    const auto g = weyl_element(w, inst);
    std::vector<int> out(idx.entries().size());
    for (std::size_t k = 0; k < out.size(); ++k) out[k] = g(idx[k]);
    return TensorIndex(std::move(out));
}

template <class Ring>
TensorVec<Ring> weyl_act(const Permutation& w, const TensorVec<Ring>& v, const Instance& inst) {
    TensorVec<Ring> out(v.n(), v.r(), v.ring());
    for (const auto& [idx, c] : v.terms()) out.add_term(weyl_act(w, idx, inst), c);
    return out;
}

/// Place permutation, sigma read on the right: position k receives i_{sigma^-1(k)}.
inline TensorIndex place_permute(const TensorIndex& idx, const Permutation& sigma) {
    if (sigma.degree() != idx.degree()) throw DomainError("place permutation degree must equal tensor degree");
    std::vector<int> out(idx.entries().size());
    for (int k = 1; k <= sigma.degree(); ++k) out[sigma(k) - 1] = idx[k - 1];
    return TensorIndex(std::move(out));
}

/// 1 iff the values (in on northern nodes, out on southern) are constant on every block.
inline int kron_delta(const Diagram& x, const TensorIndex& in, const TensorIndex& out) {
    const int r = x.strands();
    if (in.degree() != r || out.degree() != r) throw DomainError("kron_delta: index degree does not match diagram");
    std::vector<int> value(static_cast<std::size_t>(x.num_blocks()), 0);
    for (int node = 0; node < 2 * r; ++node) {
        const int v = node < r ? in[node] : out[node - r];
        int& slot = value[x.block_of(node)];
        if (slot == 0) slot = v;
        else if (slot != v) return 0;
    }
    return 1;
}

/// Calls f(out) for every out with kron_delta(x, in, out) == 1.
template <class F>
void for_each_delta_output(const Diagram& x, const TensorIndex& in, int n, F&& f) {
    const int r = x.strands();
    std::vector<int> forced(static_cast<std::size_t>(x.num_blocks()), 0);
    for (int a = 0; a < r; ++a) {
        int& slot = forced[x.block_of(a)];
        if (slot == 0) slot = in[a];
        else if (slot != in[a]) return;
    }
    std::vector<int> free_blocks;
    for (int b = 0; b < x.num_blocks(); ++b)
        if (forced[b] == 0) free_blocks.push_back(b);
    std::vector<int> value = forced;
    for (int b : free_blocks) value[b] = 1;
    while (true) {
        std::vector<int> out(static_cast<std::size_t>(r));
        for (int a = 0; a < r; ++a) out[a] = value[x.block_of(r + a)];
        f(TensorIndex(std::move(out)));
        std::size_t k = 0;
        for (; k < free_blocks.size(); ++k) {
            if (++value[free_blocks[k]] <= n) break;
            value[free_blocks[k]] = 1;
        }
        if (k == free_blocks.size()) return;
    }
}

/// (v_I)^x = sum over J of delta(x; I, J) v_J, extended linearly (delta = n).
template <class Ring>
TensorVec<Ring> right_act_diagram(const TensorVec<Ring>& v, const Diagram& x) {
    if (x.strands() != v.r()) throw DomainError("diagram strand count does not match tensor degree");
    TensorVec<Ring> out(v.n(), v.r(), v.ring());
    for (const auto& [idx, c] : v.terms())
        for_each_delta_output(x, idx, v.n(), [&](const TensorIndex& j) { out.add_term(j, c); });
    return out;
}

/// Action of a half diagram (r+1 strands) on V^{⊗r} ≅ V^{⊗r} ⊗ v_n.
template <class Ring>
TensorVec<Ring> right_act_half(const TensorVec<Ring>& v, const Diagram& x) {
    const int r = v.r(), n = v.n();
    if (x.strands() != r + 1) throw DomainError("half diagram must have r + 1 strands");
    if (!is_half_diagram(x)) throw DomainError("diagram " + x.to_string() + " is not in the half partition algebra");
    TensorVec<Ring> lifted(n, r + 1, v.ring());
    for (const auto& [idx, c] : v.terms()) {
        auto e = idx.entries();
        e.push_back(n);
        lifted.add_term(TensorIndex(std::move(e)), c);
    }
    const auto acted = right_act_diagram(lifted, x);
    TensorVec<Ring> out(n, r, v.ring());
    for (const auto& [idx, c] : acted.terms()) {
        if (idx[r] != n) throw std::logic_error("half diagram action left V^{⊗r} ⊗ v_n");
        auto e = idx.entries();
        e.pop_back();
        out.add_term(TensorIndex(std::move(e)), c);
    }
    return out;
}

// ---------------------------------------------------------------------------
// Value-types

/// Set-partition of places, blocks sorted by minimum place.
class ValueType {
public:
    ValueType() = default;
    explicit ValueType(std::vector<std::vector<int>> blocks) : blocks_(std::move(blocks)) {
        int total = 0;
        for (auto& b : blocks_) {
            if (b.empty()) throw DomainError("value-type blocks must be non-empty");
            std::sort(b.begin(), b.end());
            total += static_cast<int>(b.size());
        }
        std::sort(blocks_.begin(), blocks_.end());
        std::vector<bool> seen(static_cast<std::size_t>(total), false);
        for (const auto& b : blocks_)
            for (int p : b) {
                if (p < 1 || p > total || seen[p - 1]) throw DomainError("value-type must partition 1..r");
                seen[p - 1] = true;
            }
    }

    /// From a restricted growth string over places.
    static ValueType from_labels(const std::vector<int>& labels) {
        std::map<int, std::vector<int>> groups;
        for (std::size_t p = 0; p < labels.size(); ++p) groups[labels[p]].push_back(static_cast<int>(p) + 1);
        std::vector<std::vector<int>> blocks;
        for (auto& [label, b] : groups) blocks.push_back(std::move(b));
        return ValueType(std::move(blocks));
    }

    int length() const { return static_cast<int>(blocks_.size()); }
    int places() const {
        int total = 0;
        for (const auto& b : blocks_) total += static_cast<int>(b.size());
        return total;
    }
    const std::vector<std::vector<int>>& blocks() const { return blocks_; }

    std::string to_string() const {
        std::string s = "{";
        for (std::size_t i = 0; i < blocks_.size(); ++i) {
            if (i) s += ',';
            s += "{" + detail::join_ints(blocks_[i]) + "}";
        }
        return s + "}";
    }

    friend auto operator<=>(const ValueType&, const ValueType&) = default;

private:
    std::vector<std::vector<int>> blocks_;
};

/// Groups places by equal value.
inline ValueType value_type(const TensorIndex& idx) {
    std::map<int, std::vector<int>> groups;
    for (int p = 0; p < idx.degree(); ++p) groups[idx[p]].push_back(p + 1);
    std::vector<std::vector<int>> blocks;
    for (auto& [v, b] : groups) blocks.push_back(std::move(b));
    return ValueType(std::move(blocks));
}

/// All set-partitions of {1..m} as value-types, in restricted-growth order.
inline std::vector<ValueType> all_value_types(int m) {
    std::vector<ValueType> out;
    for (const auto& rgs : restricted_growth_strings(m)) out.push_back(ValueType::from_labels(rgs));
    return out;
}

/// Indices of a given value-type.  Plain: Lambda partitions {1..r} and every
/// index of length r with that value-type is returned.  Half: Lambda
/// partitions {1..r+1} and the returned indices have length r, their
/// extension by n having value-type Lambda.  Sorted; empty when l(Lambda) > n.
inline std::vector<TensorIndex> orbit_basis(const ValueType& lambda, int n, bool half) {
    std::vector<TensorIndex> out;
    const int l = lambda.length();
    if (l > n) return out;
    const int places = lambda.places();
    const int r = half ? places - 1 : places;
    if (r < 1) throw DomainError("orbit_basis: value-type too small");
    std::vector<int> assignment(static_cast<std::size_t>(l), 0);
    std::vector<bool> used(static_cast<std::size_t>(n) + 1, false);
    // In the half case the block holding place r+1 is pinned to n.
    int pinned = -1;
    if (half)
        for (int b = 0; b < l; ++b)
            if (std::find(lambda.blocks()[b].begin(), lambda.blocks()[b].end(), places) != lambda.blocks()[b].end())
                pinned = b;
    if (pinned >= 0) {
        assignment[pinned] = n;
        used[n] = true;
    }
    auto emit = [&] {
        std::vector<int> e(static_cast<std::size_t>(places));
        for (int b = 0; b < l; ++b)
            for (int p : lambda.blocks()[b]) e[p - 1] = assignment[b];
        e.resize(static_cast<std::size_t>(r));
        out.emplace_back(std::move(e));
    };
    auto rec = [&](auto&& self, int b) -> void {
        if (b == l) {
            emit();
            return;
        }
        if (b == pinned) {
            self(self, b + 1);
            return;
        }
        for (int v = 1; v <= n; ++v) {
            if (used[v]) continue;
            used[v] = true;
            assignment[b] = v;
            self(self, b + 1);
            used[v] = false;
        }
    };
    rec(rec, 0);
    std::sort(out.begin(), out.end());
    return out;
}

// ---------------------------------------------------------------------------
// Matrices of the representations

namespace detail {

inline void check_action_guard(int d, long dim, const Limits& limits) {
    if (d > limits.max_action_d)
        throw SizeLimitError("W_" + std::to_string(d) + " action exceeds the size guard (max d = " +
                             std::to_string(limits.max_action_d) + ")");
    if (dim > limits.max_tensor_dim)
        throw SizeLimitError("module dimension " + std::to_string(dim) + " exceeds the size guard (" +
                             std::to_string(limits.max_tensor_dim) + ")");
}

}  // namespace detail

/// Matrix of Phi_{n,r+eps}: one row per w in W_d (lexicographic), one column
/// per pair (in, out) at flat(in) * n^r + flat(out); entry 1 iff w.in = out.
template <class Ring>
SparseMatrix<Ring> phi_matrix(const Instance& inst, const Ring& ring, const Limits& limits = default_limits()) {
    const long dim = int_pow(inst.n, inst.r);
    detail::check_action_guard(inst.d(), dim, limits);
    const auto group = all_permutations(inst.d(), limits);
    const auto indices = all_indices(inst.n, inst.r);
    SparseMatrix<Ring> m(group.size(), static_cast<std::size_t>(dim * dim), ring);
    for (std::size_t g = 0; g < group.size(); ++g) {
        const auto w = weyl_element(group[g], inst);
        for (const auto& idx : indices)
            m.add(g, idx.flat(inst.n) * static_cast<std::size_t>(dim) + weyl_act(w, idx, inst).flat(inst.n), ring.one());
    }
    m.finalize();
    return m;
}

/// Row-standard tableaux of shape lambda, encoded as the row index of each
/// entry 1..d, in lexicographic order.
inline std::vector<std::vector<int>> tabloids(const WeakComposition& lambda) {
    std::vector<int> rows;
    for (int i = 0; i < lambda.length(); ++i) rows.insert(rows.end(), static_cast<std::size_t>(lambda.parts()[i]), i);
    std::vector<std::vector<int>> out;
    do {
        out.push_back(rows);
    } while (std::next_permutation(rows.begin(), rows.end()));
    return out;
}

/// Left W_d action on the tabloid basis of M^lambda, laid out like phi_matrix.
template <class Ring>
SparseMatrix<Ring> perm_module_matrix(const WeakComposition& lambda, int d, const Ring& ring,
                                      const Limits& limits = default_limits()) {
    if (lambda.size() != d) throw DomainError("perm_module_matrix: composition does not sum to d");
    std::uint64_t dim = factorial(d);
    for (int p : lambda.parts()) dim /= factorial(p);
    detail::check_action_guard(d, static_cast<long>(dim), limits);
    const auto basis = tabloids(lambda);
    std::map<std::vector<int>, std::size_t> position;
    for (std::size_t i = 0; i < basis.size(); ++i) position.emplace(basis[i], i);
    const auto group = all_permutations(d, limits);
    SparseMatrix<Ring> m(group.size(), basis.size() * basis.size(), ring);
    for (std::size_t g = 0; g < group.size(); ++g) {
        const auto& w = group[g];
        for (std::size_t i = 0; i < basis.size(); ++i) {
            std::vector<int> image(basis[i].size());
            for (int k = 1; k <= d; ++k) image[w(k) - 1] = basis[i][k - 1];
            m.add(g, i * basis.size() + position.at(image), ring.one());
        }
    }
    m.finalize();
    return m;
}

/// Phi(w) as an n^r x n^r matrix acting on column vectors: A[out][in].
template <class Ring>
Matrix<Ring> weyl_action_matrix(const Permutation& w, const Instance& inst, const Ring& ring) {
    const auto dim = static_cast<std::size_t>(int_pow(inst.n, inst.r));
    Matrix<Ring> a(dim, dim, ring);
    for (const auto& idx : all_indices(inst.n, inst.r)) a(weyl_act(w, idx, inst).flat(inst.n), idx.flat(inst.n)) = ring.one();
    return a;
}

/// Matrix of v -> v^x on V^{⊗r} (plain or half), acting on column vectors.
template <class Ring>
Matrix<Ring> diagram_action_matrix(const Diagram& x, const Instance& inst, const Ring& ring) {
    const auto dim = static_cast<std::size_t>(int_pow(inst.n, inst.r));
    Matrix<Ring> b(dim, dim, ring);
    for (const auto& idx : all_indices(inst.n, inst.r)) {
        const auto v = TensorVec<Ring>::basis(idx, inst.n, ring);
        const auto image = inst.half ? right_act_half(v, x) : right_act_diagram(v, x);
        for (const auto& [j, c] : image.terms()) b(j.flat(inst.n), idx.flat(inst.n)) = c;
    }
    return b;
}

}  // namespace cellkernel
