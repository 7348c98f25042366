#pragma once

// Sparse arithmetic in the group algebra kSym_d and Murphy's bases
//
//     x_st = d(s)^-1 x_lambda d(t),    y_st = d(s)^-1 y_lambda d(t),
//
// where x_lambda (y_lambda) is the plain (signed) sum over the Young subgroup.

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "cellkernel/combinatorics.hpp"
#include "cellkernel/ring.hpp"
#include "json.hpp"

namespace cellkernel {

template <class Ring>
class GroupAlgElem {
public:
    using value_type = typename Ring::value_type;
    using terms_type = std::map<Permutation, value_type>;

    GroupAlgElem(int d, Ring ring) : d_(d), ring_(std::move(ring)) {}

    static GroupAlgElem basis(const Permutation& w, Ring ring) {
        GroupAlgElem e(w.degree(), ring);
        e.terms_.emplace(w, ring.one());
        return e;
    }
    static GroupAlgElem identity(int d, Ring ring) { return basis(Permutation::identity(d), std::move(ring)); }

    int degree() const { return d_; }
    const Ring& ring() const { return ring_; }
    const terms_type& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }

    value_type coefficient(const Permutation& w) const {
        auto it = terms_.find(w);
        return it == terms_.end() ? ring_.zero() : it->second;
    }

    /// Adds c*w, dropping the term if it cancels.
    void add_term(const Permutation& w, const value_type& c) {
        if (w.degree() != d_) throw DomainError("group algebra term of wrong degree");
        if (ring_.is_zero(c)) return;
        auto [it, inserted] = terms_.try_emplace(w, c);
        if (!inserted) {
            it->second += c;
            if (ring_.is_zero(it->second)) terms_.erase(it);
        }
    }

    GroupAlgElem& operator+=(const GroupAlgElem& o) {
        check_compatible(o);
        for (const auto& [w, c] : o.terms_) add_term(w, c);
        return *this;
    }
    GroupAlgElem& operator-=(const GroupAlgElem& o) {
        check_compatible(o);
        for (const auto& [w, c] : o.terms_) add_term(w, -c);
        return *this;
    }
    friend GroupAlgElem operator+(GroupAlgElem a, const GroupAlgElem& b) { return a += b; }
    friend GroupAlgElem operator-(GroupAlgElem a, const GroupAlgElem& b) { return a -= b; }

    friend GroupAlgElem operator*(const value_type& c, const GroupAlgElem& a) {
        GroupAlgElem out(a.d_, a.ring_);
        for (const auto& [w, x] : a.terms_) out.add_term(w, c * x);
        return out;
    }

    /// Convolution product, extending (v*w)(k) = v(w(k)) bilinearly.
    friend GroupAlgElem operator*(const GroupAlgElem& a, const GroupAlgElem& b) {
        a.check_compatible(b);
        GroupAlgElem out(a.d_, a.ring_);
        for (const auto& [v, x] : a.terms_)
            for (const auto& [w, y] : b.terms_) out.add_term(v * w, x * y);
        return out;
    }

    friend bool operator==(const GroupAlgElem& a, const GroupAlgElem& b) {
        return a.d_ == b.d_ && a.terms_ == b.terms_;
    }

    /// Dense coefficients indexed by Permutation::rank().
    std::vector<value_type> coefficient_vector() const {
        std::vector<value_type> v(factorial(d_), ring_.zero());
        for (const auto& [w, c] : terms_) v[w.rank()] = c;
        return v;
    }

    static GroupAlgElem from_coefficients(int d, const std::vector<value_type>& coeffs, Ring ring,
                                          const Limits& limits = default_limits()) {
        if (coeffs.size() != factorial(d)) throw DomainError("coefficient vector has wrong length");
        GroupAlgElem out(d, ring);
        const auto group = all_permutations(d, limits);
        for (std::size_t i = 0; i < coeffs.size(); ++i) out.add_term(group[i], coeffs[i]);
        return out;
    }

    nlohmann::json to_json() const {
        nlohmann::json terms = nlohmann::json::array();
        for (const auto& [w, c] : terms_) terms.push_back({{"perm", w.to_string()}, {"coeff", ring_.to_string(c)}});
        return {{"ring", ring_.name()}, {"d", d_}, {"terms", terms}};
    }

    static GroupAlgElem from_json(const nlohmann::json& j, Ring ring) {
        if (j.at("ring").get<std::string>() != ring.name()) throw ParseError("ring tag mismatch");
        GroupAlgElem out(j.at("d").get<int>(), ring);
        for (const auto& t : j.at("terms"))
            out.add_term(Permutation::parse(t.at("perm").get<std::string>()), ring.parse(t.at("coeff").get<std::string>()));
        return out;
    }

private:
    void check_compatible(const GroupAlgElem& o) const {
        if (d_ != o.d_) throw DomainError("group algebra elements of different degree");
        if (!(ring_ == o.ring_)) throw DomainError("group algebra elements over different rings");
    }

    int d_;
    Ring ring_;
    terms_type terms_;
};

template <class Ring>
GroupAlgElem<Ring> young_sum(const WeakComposition& lambda, int d, const Ring& ring, bool signed_sum,
                             const Limits& limits = default_limits()) {
    GroupAlgElem<Ring> out(d, ring);
    for (const auto& w : young_subgroup(lambda, d, limits))
        out.add_term(w, ring.from_int(signed_sum ? w.sign() : 1));
    return out;
}

/// x_lambda = sum of W_lambda.
template <class Ring>
GroupAlgElem<Ring> x_element(const WeakComposition& lambda, int d, const Ring& ring,
                             const Limits& limits = default_limits()) {
    return young_sum(lambda, d, ring, false, limits);
}

/// y_lambda = signed sum of W_lambda.
template <class Ring>
GroupAlgElem<Ring> y_element(const WeakComposition& lambda, int d, const Ring& ring,
                             const Limits& limits = default_limits()) {
    return young_sum(lambda, d, ring, true, limits);
}

enum class MurphyKind { x, y };

inline const char* to_string(MurphyKind k) { return k == MurphyKind::x ? "x" : "y"; }

/// x_st or y_st for row-standard s, t of equal shape.  With maps on the left
/// this is d(s) (x_lambda or y_lambda) d(t)^-1, so that x_tt is the sum over
/// the row stabilizer of t.
template <class Ring>
GroupAlgElem<Ring> murphy_element(MurphyKind kind, const Tableau& s, const Tableau& t, const Ring& ring,
                                  const Limits& limits = default_limits()) {
    if (s.shape() != t.shape())
        throw DomainError("murphy_element: tableaux of different shapes " + s.to_string() + ", " + t.to_string());
    const int d = s.size();
    const auto left = d_of(s);
    const auto right = d_of(t).inverse();
    GroupAlgElem<Ring> out(d, ring);
    for (const auto& w : young_subgroup(s.shape(), d, limits))
        out.add_term(left * w * right, ring.from_int(kind == MurphyKind::y ? w.sign() : 1));
    return out;
}

template <class Ring>
struct MurphyBasisEntry {
    Partition shape;
    Tableau s;
    Tableau t;
    GroupAlgElem<Ring> element;
};

/// All x_st (or y_st), s and t standard; d! entries.
template <class Ring>
std::vector<MurphyBasisEntry<Ring>> murphy_basis(int d, MurphyKind kind, const Ring& ring,
                                                 const Limits& limits = default_limits()) {
    if (d < 1) throw DomainError("murphy_basis requires d >= 1");
    if (d > limits.max_d) throw SizeLimitError("murphy_basis: d = " + std::to_string(d) + " exceeds the size guard");
    std::vector<MurphyBasisEntry<Ring>> out;
    for (const auto& lambda : partitions_of(d)) {
        const auto tableaux = standard_tableaux(lambda);
        for (const auto& s : tableaux)
            for (const auto& t : tableaux) out.push_back({lambda, s, t, murphy_element(kind, s, t, ring, limits)});
    }
    return out;
}

/// w -> w^-1, extended linearly; an anti-automorphism.
template <class Ring>
GroupAlgElem<Ring> star_involution(const GroupAlgElem<Ring>& a) {
    GroupAlgElem<Ring> out(a.degree(), a.ring());
    for (const auto& [w, c] : a.terms()) out.add_term(w.inverse(), c);
    return out;
}

/// w -> sgn(w) w, extended linearly; a ring automorphism.
template <class Ring>
GroupAlgElem<Ring> sign_involution(const GroupAlgElem<Ring>& a) {
    GroupAlgElem<Ring> out(a.degree(), a.ring());
    for (const auto& [w, c] : a.terms()) out.add_term(w, w.sign() > 0 ? c : -c);
    return out;
}

using ShapeFilter = std::function<bool(const Partition&)>;

/// True iff lambda in Omega and mu ⊵ lambda always give mu in Omega.
inline bool is_upward_closed(int d, const ShapeFilter& omega) {
    const auto shapes = partitions_of(d);
    for (const auto& lambda : shapes) {
        if (!omega(lambda)) continue;
        for (const auto& mu : shapes)
            if (dominates(mu, lambda) && !omega(mu)) return false;
    }
    return true;
}

/// {lambda : rows(lambda) < d - r}, the shapes of the kernel's cell ideal.
inline ShapeFilter fewer_rows_than(int bound) {
    return [bound](const Partition& lambda) { return lambda.rows() < bound; };
}

/// y_st with [s] = [t] in Omega, in murphy_basis order.
template <class Ring>
std::vector<GroupAlgElem<Ring>> cell_ideal_y(int d, const ShapeFilter& omega, const Ring& ring,
                                             const Limits& limits = default_limits()) {
    if (!is_upward_closed(d, omega)) throw DomainError("cell_ideal_y: shape set is not upward-closed under dominance");
    std::vector<GroupAlgElem<Ring>> out;
    for (const auto& lambda : partitions_of(d)) {
        if (!omega(lambda)) continue;
        const auto tableaux = standard_tableaux(lambda);
        for (const auto& s : tableaux)
            for (const auto& t : tableaux) out.push_back(murphy_element(MurphyKind::y, s, t, ring, limits));
    }
    return out;
}

}  // namespace cellkernel
