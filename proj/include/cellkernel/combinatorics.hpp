#pragma once

// Partitions, compositions, permutations and tableaux of the symmetric group.
//
// Conventions:
//   * Permutations are stored in one-line notation, images[k-1] = w(k), and
//     compose as maps on the left: (v * w)(k) = v(w(k)).
//   * partitions_of() lists partitions in reverse-lexicographic order,
//     standard_tableaux() orders tableaux lexicographically by the sequence
//     (row of 1, row of 2, ..., row of d).

#include <algorithm>
#include <compare>
#include <cstdint>
#include <numeric>
#include <span>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "cellkernel/error.hpp"

namespace cellkernel {

namespace detail {

inline std::vector<int> parse_int_list(std::string_view s, char sep = ',') {
    std::vector<int> out;
    if (s.empty()) return out;
    std::size_t pos = 0;
    while (true) {
        std::size_t next = s.find(sep, pos);
        std::string_view tok = s.substr(pos, next == std::string_view::npos ? std::string_view::npos : next - pos);
        while (!tok.empty() && tok.front() == ' ') tok.remove_prefix(1);
        while (!tok.empty() && tok.back() == ' ') tok.remove_suffix(1);
        if (tok.empty() || tok.find_first_not_of("-0123456789") != std::string_view::npos)
            throw ParseError("bad integer list '" + std::string(s) + "'");
        out.push_back(std::stoi(std::string(tok)));
        if (next == std::string_view::npos) break;
        pos = next + 1;
    }
    return out;
}

inline std::string join_ints(std::span<const int> xs, char sep = ',') {
    std::string out;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        if (i) out += sep;
        out += std::to_string(xs[i]);
    }
    return out;
}

inline std::string_view strip_brackets(std::string_view s, char open, char close) {
    while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
    while (!s.empty() && s.back() == ' ') s.remove_suffix(1);
    if (s.size() < 2 || s.front() != open || s.back() != close)
        throw ParseError("expected '" + std::string(1, open) + "...'" + std::string(1, close) + " in '" + std::string(s) + "'");
    return s.substr(1, s.size() - 2);
}

}  // namespace detail

inline std::uint64_t factorial(int n) {
    std::uint64_t f = 1;
    for (int k = 2; k <= n; ++k) f *= static_cast<std::uint64_t>(k);
    return f;
}

/// n (n-1) ... (n-l+1); zero when l > n.
inline std::uint64_t falling_factorial(int n, int l) {
    if (l > n) return 0;
    std::uint64_t f = 1;
    for (int k = 0; k < l; ++k) f *= static_cast<std::uint64_t>(n - k);
    return f;
}

// ---------------------------------------------------------------------------
// Partition

class Partition {
public:
    Partition() = default;
    explicit Partition(std::vector<int> parts) : parts_(std::move(parts)) {
        for (std::size_t i = 0; i < parts_.size(); ++i) {
            if (parts_[i] < 1) throw DomainError("partition parts must be positive");
            if (i && parts_[i] > parts_[i - 1]) throw DomainError("partition parts must be weakly decreasing");
        }
    }

    std::span<const int> parts() const { return parts_; }
    int size() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }
    int rows() const { return static_cast<int>(parts_.size()); }
    int cols() const { return parts_.empty() ? 0 : parts_.front(); }
    int operator[](std::size_t i) const { return i < parts_.size() ? parts_[i] : 0; }

    std::string to_string() const { return detail::join_ints(parts_); }
    static Partition parse(std::string_view s) { return Partition(detail::parse_int_list(s)); }

    friend auto operator<=>(const Partition&, const Partition&) = default;

private:
    std::vector<int> parts_;
};

inline std::ostream& operator<<(std::ostream& os, const Partition& p) { return os << '(' << p.to_string() << ')'; }

/// Weak composition with trailing zeros trimmed.
class WeakComposition {
public:
    WeakComposition() = default;
    explicit WeakComposition(std::vector<int> parts) : parts_(std::move(parts)) {
        for (int p : parts_)
            if (p < 0) throw DomainError("composition parts must be non-negative");
        while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
    }
    WeakComposition(const Partition& p) : parts_(p.parts().begin(), p.parts().end()) {}  // NOLINT

    std::span<const int> parts() const { return parts_; }
    int size() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }
    int length() const { return static_cast<int>(parts_.size()); }

    std::string to_string() const { return detail::join_ints(parts_); }
    friend auto operator<=>(const WeakComposition&, const WeakComposition&) = default;

private:
    std::vector<int> parts_;
};

/// All partitions of d, reverse-lexicographic starting with (d).
inline std::vector<Partition> partitions_of(int d) {
    if (d < 0) throw DomainError("partitions_of: d must be non-negative");
    std::vector<Partition> out;
    std::vector<int> cur;
    auto rec = [&](auto&& self, int remaining, int max_part) -> void {
        if (remaining == 0) {
            out.emplace_back(cur);
            return;
        }
        for (int p = std::min(remaining, max_part); p >= 1; --p) {
            cur.push_back(p);
            self(self, remaining - p, p);
            cur.pop_back();
        }
    };
    rec(rec, d, d);
    return out;
}

inline Partition transpose(const Partition& lambda) {
    std::vector<int> t;
    for (int c = 0; c < lambda.cols(); ++c) {
        int len = 0;
        for (int part : lambda.parts())
            if (part > c) ++len;
        t.push_back(len);
    }
    return Partition(std::move(t));
}

/// lambda ⊵ mu: every partial sum of lambda is at least the matching one of mu.
inline bool dominates(const Partition& lambda, const Partition& mu) {
    if (lambda.size() != mu.size())
        throw DomainError("dominates: partitions of different sizes " + lambda.to_string() + " and " + mu.to_string());
    int a = 0, b = 0;
    const std::size_t len = std::max(lambda.parts().size(), mu.parts().size());
    for (std::size_t i = 0; i < len; ++i) {
        a += lambda[i];
        b += mu[i];
        if (a < b) return false;
    }
    return true;
}

/// The hook (d-r, 1^r).
inline Partition alpha(int d, int r) {
    if (r < 1 || d <= r) throw DomainError("alpha(d, r) requires d > r >= 1");
    std::vector<int> parts{d - r};
    parts.insert(parts.end(), static_cast<std::size_t>(r), 1);
    return Partition(std::move(parts));
}

/// {(d-l, 1^l) : l = 1..r}, most dominant first.
inline std::vector<Partition> hook_set(int d, int r) {
    if (r < 1 || d <= r + 1) throw DomainError("hook_set(d, r) requires d > r + 1 and r >= 1");
    std::vector<Partition> out;
    for (int l = 1; l <= r; ++l) out.push_back(alpha(d, l));
    return out;
}

/// S(r, l): set-partitions of an r-set into exactly l blocks.
inline std::uint64_t stirling2(int r, int l) {
    if (r < 0 || l < 0) throw DomainError("stirling2: arguments must be non-negative");
    if (l > r) return 0;
    std::vector<std::uint64_t> row(static_cast<std::size_t>(r) + 1, 0);
    row[0] = 1;  // S(0,0)
    for (int m = 1; m <= r; ++m) {
        for (int k = m; k >= 1; --k) row[k] = static_cast<std::uint64_t>(k) * row[k] + row[k - 1];
        row[0] = 0;
    }
    return row[l];
}

/// Set-partitions of {0..m-1} as restricted growth strings, in lexicographic order.
inline std::vector<std::vector<int>> restricted_growth_strings(int m) {
    std::vector<std::vector<int>> out;
    if (m == 0) {
        out.emplace_back();
        return out;
    }
    std::vector<int> a(static_cast<std::size_t>(m), 0);
    auto rec = [&](auto&& self, int pos, int max_label) -> void {
        if (pos == m) {
            out.push_back(a);
            return;
        }
        for (int b = 0; b <= max_label + 1; ++b) {
            a[pos] = b;
            self(self, pos + 1, std::max(max_label, b));
        }
    };
    a[0] = 0;
    rec(rec, 1, 0);
    return out;
}

// ---------------------------------------------------------------------------
// Permutation

class Permutation {
public:
    Permutation() = default;
    explicit Permutation(std::vector<int> images) : images_(std::move(images)) {
        std::vector<bool> seen(images_.size(), false);
        for (int v : images_) {
            if (v < 1 || v > static_cast<int>(images_.size()) || seen[v - 1])
                throw DomainError("not a permutation: [" + detail::join_ints(images_) + "]");
            seen[v - 1] = true;
        }
    }

    static Permutation identity(int d) {
        std::vector<int> im(static_cast<std::size_t>(d));
        std::iota(im.begin(), im.end(), 1);
        return Permutation(std::move(im), unchecked{});
    }

    /// Transposition (a b) in Sym_d.
    static Permutation transposition(int d, int a, int b) {
        auto p = identity(d);
        std::swap(p.images_.at(a - 1), p.images_.at(b - 1));
        return p;
    }

    int degree() const { return static_cast<int>(images_.size()); }
    int operator()(int k) const { return images_[k - 1]; }
    std::span<const int> images() const { return images_; }

    bool is_identity() const {
        for (int k = 0; k < degree(); ++k)
            if (images_[k] != k + 1) return false;
        return true;
    }

    Permutation inverse() const {
        std::vector<int> inv(images_.size());
        for (int k = 0; k < degree(); ++k) inv[images_[k] - 1] = k + 1;
        return Permutation(std::move(inv), unchecked{});
    }

    /// (v * w)(k) = v(w(k)).
    friend Permutation operator*(const Permutation& v, const Permutation& w) {
        if (v.degree() != w.degree()) throw DomainError("composing permutations of different degree");
        std::vector<int> im(v.images_.size());
        for (std::size_t k = 0; k < im.size(); ++k) im[k] = v.images_[w.images_[k] - 1];
        return Permutation(std::move(im), unchecked{});
    }

    int sign() const {
        std::vector<bool> seen(images_.size(), false);
        int parity = 0;
        for (int k = 0; k < degree(); ++k) {
            if (seen[k]) continue;
            int len = 0;
            for (int j = k; !seen[j]; j = images_[j] - 1) {
                seen[j] = true;
                ++len;
            }
            parity += len - 1;
        }
        return parity % 2 ? -1 : 1;
    }

    /// Extend to degree m >= degree() by fixing the new points.
    Permutation extended(int m) const {
        auto im = images_;
        for (int k = degree() + 1; k <= m; ++k) im.push_back(k);
        return Permutation(std::move(im), unchecked{});
    }

    /// Index in the lexicographic listing of Sym_d (Lehmer code).
    std::size_t rank() const {
        std::size_t r = 0;
        const int d = degree();
        for (int i = 0; i < d; ++i) {
            int smaller = 0;
            for (int j = i + 1; j < d; ++j)
                if (images_[j] < images_[i]) ++smaller;
            r += static_cast<std::size_t>(smaller) * factorial(d - 1 - i);
        }
        return r;
    }

    std::string to_string() const { return "[" + detail::join_ints(images_) + "]"; }
    static Permutation parse(std::string_view s) {
        try {
            return Permutation(detail::parse_int_list(detail::strip_brackets(s, '[', ']')));
        } catch (const DomainError& e) {
            throw ParseError(e.what());
        }
    }

    friend auto operator<=>(const Permutation&, const Permutation&) = default;

private:
    struct unchecked {};
    Permutation(std::vector<int> images, unchecked) : images_(std::move(images)) {}

    std::vector<int> images_;
};

inline std::ostream& operator<<(std::ostream& os, const Permutation& p) { return os << p.to_string(); }

/// Sym_d in lexicographic order of one-line notation; position i has rank() == i.
inline std::vector<Permutation> all_permutations(int d, const Limits& limits = default_limits()) {
    if (d < 0) throw DomainError("all_permutations: negative degree");
    if (d > limits.max_d)
        throw SizeLimitError("Sym_" + std::to_string(d) + " exceeds the size guard (max d = " +
                             std::to_string(limits.max_d) + ")");
    std::vector<int> im(static_cast<std::size_t>(d));
    std::iota(im.begin(), im.end(), 1);
    std::vector<Permutation> out;
    out.reserve(factorial(d));
    do {
        out.emplace_back(im);
    } while (std::next_permutation(im.begin(), im.end()));
    return out;
}

// ---------------------------------------------------------------------------
// Tableau

class Tableau {
public:
    Tableau() = default;
    /// Rows must have weakly decreasing lengths and contain each of 1..d once.
    explicit Tableau(std::vector<std::vector<int>> rows) : rows_(std::move(rows)) {
        std::vector<int> lengths;
        int d = 0;
        for (const auto& row : rows_) {
            lengths.push_back(static_cast<int>(row.size()));
            d += static_cast<int>(row.size());
        }
        shape_ = Partition(lengths);
        std::vector<bool> seen(static_cast<std::size_t>(d), false);
        for (const auto& row : rows_)
            for (int e : row) {
                if (e < 1 || e > d || seen[e - 1]) throw DomainError("tableau entries must be a permutation of 1..d");
                seen[e - 1] = true;
            }
    }

    const Partition& shape() const { return shape_; }
    int size() const { return shape_.size(); }
    const std::vector<std::vector<int>>& rows() const { return rows_; }

    bool is_row_standard() const {
        for (const auto& row : rows_)
            if (!std::is_sorted(row.begin(), row.end())) return false;
        return true;
    }

    bool is_standard() const {
        if (!is_row_standard()) return false;
        for (std::size_t i = 1; i < rows_.size(); ++i)
            for (std::size_t j = 0; j < rows_[i].size(); ++j)
                if (rows_[i][j] < rows_[i - 1][j]) return false;
        return true;
    }

    /// Row index (0-based) of each entry 1..d.
    std::vector<int> row_indices() const {
        std::vector<int> idx(static_cast<std::size_t>(size()));
        for (std::size_t i = 0; i < rows_.size(); ++i)
            for (int e : rows_[i]) idx[e - 1] = static_cast<int>(i);
        return idx;
    }

    /// w t: replace every entry k by w(k).
    Tableau permuted(const Permutation& w) const {
        if (w.degree() != size()) throw DomainError("permutation degree does not match tableau");
        auto rows = rows_;
        for (auto& row : rows)
            for (int& e : row) e = w(e);
        return Tableau(std::move(rows));
    }

    std::string to_string() const {
        std::string s = "[";
        for (std::size_t i = 0; i < rows_.size(); ++i) {
            if (i) s += ',';
            s += "[" + detail::join_ints(rows_[i]) + "]";
        }
        return s + "]";
    }

    static Tableau parse(std::string_view s) {
        auto body = detail::strip_brackets(s, '[', ']');
        std::vector<std::vector<int>> rows;
        std::size_t pos = 0;
        while (pos < body.size()) {
            if (body[pos] == ',' || body[pos] == ' ') {
                ++pos;
                continue;
            }
            if (body[pos] != '[') throw ParseError("bad tableau '" + std::string(s) + "'");
            auto close = body.find(']', pos);
            if (close == std::string_view::npos) throw ParseError("bad tableau '" + std::string(s) + "'");
            rows.push_back(detail::parse_int_list(body.substr(pos + 1, close - pos - 1)));
            pos = close + 1;
        }
        return Tableau(std::move(rows));
    }

    friend bool operator==(const Tableau& a, const Tableau& b) { return a.rows_ == b.rows_; }

private:
    Partition shape_;
    std::vector<std::vector<int>> rows_;
};

inline std::ostream& operator<<(std::ostream& os, const Tableau& t) { return os << t.to_string(); }

/// t^lambda: 1..d written along the rows.
inline Tableau row_reading_tableau(const Partition& lambda) {
    std::vector<std::vector<int>> rows;
    int next = 1;
    for (int len : lambda.parts()) {
        std::vector<int> row;
        for (int j = 0; j < len; ++j) row.push_back(next++);
        rows.push_back(std::move(row));
    }
    return Tableau(std::move(rows));
}

/// Standard tableaux of shape lambda, ordered by (row of 1, row of 2, ...).
inline std::vector<Tableau> standard_tableaux(const Partition& lambda) {
    const int d = lambda.size();
    const int k = lambda.rows();
    std::vector<Tableau> out;
    std::vector<std::vector<int>> rows(static_cast<std::size_t>(k));
    auto rec = [&](auto&& self, int entry) -> void {
        if (entry > d) {
            out.emplace_back(rows);
            return;
        }
        for (int i = 0; i < k; ++i) {
            const auto len = static_cast<int>(rows[i].size());
            if (len >= lambda[i]) continue;
            if (i > 0 && static_cast<int>(rows[i - 1].size()) <= len) continue;
            rows[i].push_back(entry);
            self(self, entry + 1);
            rows[i].pop_back();
        }
    };
    rec(rec, 1);
    return out;
}

/// The unique d(t) with t = d(t) t^lambda.
inline Permutation d_of(const Tableau& t) {
    if (!t.is_row_standard()) throw DomainError("d_of requires a row-standard tableau, got " + t.to_string());
    std::vector<int> im(static_cast<std::size_t>(t.size()));
    int k = 1;
    for (const auto& row : t.rows())
        for (int e : row) im[k++ - 1] = e;
    return Permutation(std::move(im));
}

/// Row sets C_1, C_2, ... of t^lambda (possibly empty for zero parts).
inline std::vector<std::vector<int>> composition_rows(const WeakComposition& lambda) {
    std::vector<std::vector<int>> rows;
    int next = 1;
    for (int len : lambda.parts()) {
        std::vector<int> row;
        for (int j = 0; j < len; ++j) row.push_back(next++);
        rows.push_back(std::move(row));
    }
    return rows;
}

/// Elements of the row stabilizer of t^lambda, sorted lexicographically.
inline std::vector<Permutation> young_subgroup(const WeakComposition& lambda, int d,
                                               const Limits& limits = default_limits()) {
    if (lambda.size() != d)
        throw DomainError("young_subgroup: composition (" + lambda.to_string() + ") does not sum to " + std::to_string(d));
    std::uint64_t order = 1;
    for (int p : lambda.parts()) order *= factorial(p);
    if (order > factorial(limits.max_d))
        throw SizeLimitError("Young subgroup of order " + std::to_string(order) + " exceeds the size guard");

    std::vector<Permutation> out{Permutation::identity(d)};
    for (const auto& block : composition_rows(lambda)) {
        if (block.size() < 2) continue;
        std::vector<int> images = block;
        std::vector<Permutation> next;
        next.reserve(out.size() * factorial(static_cast<int>(block.size())));
        do {
            for (const auto& w : out) {
                auto im = std::vector<int>(w.images().begin(), w.images().end());
                for (std::size_t j = 0; j < block.size(); ++j) im[block[j] - 1] = images[j];
                next.emplace_back(std::move(im));
            }
        } while (std::next_permutation(images.begin(), images.end()));
        out = std::move(next);
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace cellkernel
