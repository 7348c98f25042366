#pragma once

// Executable checks of the structural statements about tensor space as a
// W_d-module: its kernel is the y-cell ideal of shapes with fewer than d - r
// rows, that ideal is also the annihilator of M^{alpha(d,r)}, and the
// surrounding decomposition, faithfulness and duality facts.  Each check
// returns a CheckReport; failures always carry a witness.

#include <functional>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "cellkernel/combinatorics.hpp"
#include "cellkernel/diagram.hpp"
#include "cellkernel/group_algebra.hpp"
#include "cellkernel/linalg.hpp"
#include "cellkernel/ring.hpp"
#include "cellkernel/tensor.hpp"
#include "json.hpp"

namespace cellkernel {

struct CheckReport {
    std::string name;
    nlohmann::json instance = nlohmann::json::object();
    bool pass = false;
    nlohmann::json ranks = nlohmann::json::object();  // computed quantities
    std::optional<std::string> witness;

    nlohmann::json to_json() const {
        nlohmann::json j{{"check", name}, {"instance", instance}, {"pass", pass}, {"ranks", ranks}};
        if (witness) j["witness"] = *witness;
        return j;
    }

    /// Records the outcome; a failure without a witness gets a generic one.
    void finish(bool ok, std::string failure_witness = {}) {
        pass = ok;
        if (!ok) witness = failure_witness.empty() ? std::string("check failed; see ranks") : std::move(failure_witness);
    }
};

namespace detail {

template <class Ring>
std::string vector_string(const std::vector<typename Ring::value_type>& v, const Ring& ring) {
    std::string s = "[";
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + ring.to_string(v[i]);
    return s + "]";
}

template <class Ring>
Matrix<Ring> coefficient_matrix(const std::vector<GroupAlgElem<Ring>>& elems, int d, const Ring& ring) {
    Matrix<Ring> m(0, factorial(d), ring);
    for (const auto& e : elems) m.append_row(e.coefficient_vector());
    return m;
}

/// First basis row of `a` outside `b`, serialized; empty if a ⊆ b.
template <class Ring>
std::string first_row_outside(const RowSpace<Ring>& a, const RowSpace<Ring>& b) {
    for (std::size_t i = 0; i < a.rank(); ++i)
        if (!b.contains(a.basis().row(i))) return vector_string(a.basis().row(i), a.ring());
    return {};
}

template <class Ring>
std::string span_difference_witness(const RowSpace<Ring>& a, const RowSpace<Ring>& b) {
    auto w = first_row_outside(a, b);
    if (!w.empty()) return "kernel vector outside the cell ideal: " + w;
    w = first_row_outside(b, a);
    if (!w.empty()) return "cell ideal vector outside the kernel: " + w;
    return "spans differ";
}

inline void require_non_faithful_range(const Instance& inst) {
    if (inst.d() <= inst.r + 1)
        throw DomainError("this check requires d > r + 1 (got d = " + std::to_string(inst.d()) +
                          ", r = " + std::to_string(inst.r) + ")");
}

inline std::uint64_t sum_f_squared(int d, const std::function<bool(const Partition&)>& keep) {
    std::uint64_t total = 0;
    for (const auto& lambda : partitions_of(d))
        if (keep(lambda)) {
            const auto f = standard_tableaux(lambda).size();
            total += f * f;
        }
    return total;
}

}  // namespace detail

/// Sum of f_lambda^2 over shapes with fewer than d - r rows.
inline std::uint64_t predicted_kernel_rank(int d, int r) {
    return detail::sum_f_squared(d, [&](const Partition& l) { return l.rows() < d - r; });
}

/// Left null space of Phi_{n,r+eps} over the given ring.
template <class Ring>
RowSpace<Ring> kernel_of_phi(const Instance& inst, const Ring& ring, const Limits& limits = default_limits()) {
    return left_nullspace(phi_matrix(inst, ring, limits));
}

/// Coefficient span of the y-cell ideal {rows < d - r}.
template <class Ring>
RowSpace<Ring> cell_ideal_space(int d, int r, const Ring& ring, const Limits& limits = default_limits()) {
    const auto ideal = cell_ideal_y(d, fewer_rows_than(d - r), ring, limits);
    return RowSpace<Ring>(detail::coefficient_matrix(ideal, d, ring));
}

// ---------------------------------------------------------------------------

/// ker Phi equals the cell ideal spanned by y_st with fewer than d - r rows
/// (span equality over fields, lattice equality over Z).
inline CheckReport check_kernel_cell_ideal(const Instance& inst, const Limits& limits = default_limits()) {
    detail::require_non_faithful_range(inst);
    CheckReport report{"kernel_cell_ideal", inst.to_json()};
    with_ring(inst.ring, [&](const auto& ring) {
        const auto kernel = kernel_of_phi(inst, ring, limits);
        const auto ideal = cell_ideal_space(inst.d(), inst.r, ring, limits);
        const auto expected = predicted_kernel_rank(inst.d(), inst.r);
        report.ranks = {{"kernel", kernel.rank()}, {"cell_ideal", ideal.rank()}, {"predicted", expected},
                        {"group_order", factorial(inst.d())}};
        const bool equal = kernel == ideal;
        if (!equal) {
            report.finish(false, detail::span_difference_witness(kernel, ideal));
            return;
        }
        report.finish(kernel.rank() == expected, "kernel rank differs from the sum of f_lambda^2");
    });
    return report;
}

/// Every y_st of the cell ideal acts as zero on every basis tensor (computed
/// by direct action, independently of any null-space computation).
inline CheckReport check_cell_ideal_annihilates(const Instance& inst, const Limits& limits = default_limits()) {
    detail::require_non_faithful_range(inst);
    CheckReport report{"cell_ideal_annihilates", inst.to_json()};
    with_ring(inst.ring, [&](const auto& ring) {
        using R = std::decay_t<decltype(ring)>;
        const auto ideal = cell_ideal_y(inst.d(), fewer_rows_than(inst.d() - inst.r), ring, limits);
        const auto indices = all_indices(inst.n, inst.r);
        std::size_t checked = 0;
        for (const auto& y : ideal)
            for (const auto& idx : indices) {
                TensorVec<R> image(inst.n, inst.r, ring);
                for (const auto& [w, c] : y.terms()) image.add_term(weyl_act(w, idx, inst), c);
                ++checked;
                if (!image.is_zero()) {
                    report.ranks = {{"ideal_elements", ideal.size()}};
                    report.finish(false, "element " + y.to_json().dump() + " maps " + idx.to_string() + " to " +
                                             image.to_string());
                    return;
                }
            }
        report.ranks = {{"ideal_elements", ideal.size()}, {"products_checked", checked}};
        report.finish(true);
    });
    return report;
}

/// ker Phi = ann M^{alpha(d,r)}.
inline CheckReport check_annihilator_transfer(const Instance& inst, const Limits& limits = default_limits()) {
    detail::require_non_faithful_range(inst);
    CheckReport report{"annihilator_transfer", inst.to_json()};
    with_ring(inst.ring, [&](const auto& ring) {
        const auto kernel = kernel_of_phi(inst, ring, limits);
        const auto hook = alpha(inst.d(), inst.r);
        const auto ann = left_nullspace(perm_module_matrix(hook, inst.d(), ring, limits));
        report.ranks = {{"kernel", kernel.rank()}, {"annihilator", ann.rank()}, {"alpha", hook.to_string()}};
        report.finish(kernel == ann, detail::span_difference_witness(kernel, ann));
    });
    return report;
}

/// Kernel ranks agree over Z, Q, F_2, F_3, F_5, and the integer kernel
/// reduced mod p spans the F_p kernel.
inline CheckReport check_rank_independence(int n, int r, bool half, const Limits& limits = default_limits()) {
    const Instance inst(n, r, half, IntegerRing{});
    CheckReport report{"rank_independence", inst.to_json()};
    report.instance.erase("ring");
    const auto integral = kernel_of_phi(inst, IntegerRing{}, limits);
    const auto rational = kernel_of_phi(inst, RationalRing{}, limits);
    report.ranks["Z"] = integral.rank();
    report.ranks["Q"] = rational.rank();
    bool ok = integral.rank() == rational.rank() && is_saturated(integral.basis());
    report.ranks["Z_saturated"] = is_saturated(integral.basis());
    std::string witness;
    for (std::uint64_t p : {2u, 3u, 5u}) {
        const PrimeField field(p);
        const auto modular = kernel_of_phi(inst, field, limits);
        const auto reduced = RowSpace<PrimeField>(reduce_mod(integral.basis(), field));
        report.ranks[field.name()] = modular.rank();
        if (modular.rank() != integral.rank()) {
            ok = false;
            witness = "rank over " + field.name() + " differs from rank over Z";
        } else if (!(reduced == modular)) {
            ok = false;
            witness = "integral kernel mod " + std::to_string(p) + " does not span the kernel over " + field.name();
        }
    }
    report.finish(ok, witness);
    return report;
}

/// Over Q: rank ker Phi = sum of f_lambda^2 over lambda not dominating
/// alpha(d,r), which equals the rows < d - r count through f_lambda = f_{lambda^t}.
inline CheckReport check_char0_semisimple(const Instance& inst, const Limits& limits = default_limits()) {
    detail::require_non_faithful_range(inst);
    if (!std::holds_alternative<RationalRing>(inst.ring)) throw DomainError("check_char0_semisimple requires the ring Q");
    CheckReport report{"char0_semisimple", inst.to_json()};
    const int d = inst.d();
    const auto hook = alpha(d, inst.r);
    const auto kernel = kernel_of_phi(inst, RationalRing{}, limits);
    const auto not_dominating = detail::sum_f_squared(d, [&](const Partition& l) { return !dominates(l, hook); });
    const auto transposed =
        detail::sum_f_squared(d, [&](const Partition& l) { return !dominates(transpose(hook), l); });
    const auto fewer_rows = predicted_kernel_rank(d, inst.r);
    const auto image_rank = factorial(d) - kernel.rank();
    report.ranks = {{"kernel", kernel.rank()},         {"image", image_rank},
                    {"not_dominating_alpha", not_dominating}, {"not_below_alpha_transpose", transposed},
                    {"fewer_rows", fewer_rows}};
    const bool ok = kernel.rank() == not_dominating && not_dominating == transposed && transposed == fewer_rows &&
                    image_rank == factorial(d) - not_dominating;
    report.finish(ok, "kernel rank " + std::to_string(kernel.rank()) + " vs predicted " + std::to_string(not_dominating));
    return report;
}

/// Value-type decomposition of V^{⊗r} (or V^{⊗r} ⊗ v_n): Stirling
/// multiplicities, orbit sizes, the 1/n rank ratio, transitivity, and the
/// total n^r.
inline CheckReport check_decomposition(const Instance& inst, const Limits& limits = default_limits()) {
    CheckReport report{"decomposition", inst.to_json()};
    report.instance.erase("ring");
    const int n = inst.n, r = inst.r;
    const int places = inst.half ? r + 1 : r;
    const auto types = all_value_types(places);
    std::map<int, std::uint64_t> count_by_length;
    std::set<TensorIndex> covered;
    std::uint64_t total = 0;
    std::string witness;
    const bool can_act = inst.d() <= limits.max_d;
    const auto group = can_act ? all_permutations(inst.d(), limits) : std::vector<Permutation>{};
    for (const auto& lambda : types) {
        ++count_by_length[lambda.length()];
        const auto orbit = orbit_basis(lambda, n, inst.half);
        const std::uint64_t expected =
            inst.half ? (lambda.length() > n ? 0 : falling_factorial(n - 1, lambda.length() - 1))
                      : falling_factorial(n, lambda.length());
        if (orbit.size() != expected && witness.empty())
            witness = "orbit of " + lambda.to_string() + " has size " + std::to_string(orbit.size());
        if (inst.half && orbit.size() * static_cast<std::uint64_t>(n) != orbit_basis(lambda, n, false).size() &&
            witness.empty())
            witness = "rank ratio 1/n fails for " + lambda.to_string();
        for (const auto& idx : orbit) {
            auto full = idx.entries();
            if (inst.half) full.push_back(n);
            if (value_type(TensorIndex(full)) != lambda && witness.empty())
                witness = idx.to_string() + " does not have value-type " + lambda.to_string();
            if (!covered.insert(idx).second && witness.empty()) witness = idx.to_string() + " lies in two orbits";
        }
        if (can_act && !orbit.empty()) {
            std::set<TensorIndex> reached;
            for (const auto& w : group) reached.insert(weyl_act(w, orbit.front(), inst));
            if (reached != std::set<TensorIndex>(orbit.begin(), orbit.end()) && witness.empty())
                witness = "W_d is not transitive on the orbit of " + lambda.to_string();
        }
        total += orbit.size();
    }
    nlohmann::json multiplicities = nlohmann::json::object();
    std::uint64_t formula_total = 0;
    for (int l = 1; l <= places; ++l) {
        const auto stirling = stirling2(places, l);
        multiplicities[std::to_string(l)] = count_by_length[l];
        if (count_by_length[l] != stirling && witness.empty())
            witness = "number of value-types with " + std::to_string(l) + " parts is not S(" + std::to_string(places) +
                      "," + std::to_string(l) + ")";
        formula_total += stirling * (inst.half ? falling_factorial(n - 1, l - 1) : falling_factorial(n, l));
    }
    const auto dim = static_cast<std::uint64_t>(int_pow(n, r));
    report.ranks = {{"dimension", dim},
                    {"orbit_total", total},
                    {"stirling_total", formula_total},
                    {"multiplicities", multiplicities},
                    {"transitivity_checked", can_act}};
    if (witness.empty() && (total != dim || formula_total != dim || covered.size() != dim))
        witness = "orbit sizes do not add up to n^r";
    report.finish(witness.empty(), witness);
    return report;
}

/// Phi_{n,r+eps} is faithful exactly when d <= r + 1.
inline CheckReport check_faithful(const Instance& inst, const Limits& limits = default_limits()) {
    CheckReport report{"faithful", inst.to_json()};
    with_ring(inst.ring, [&](const auto& ring) {
        const auto kernel = kernel_of_phi(inst, ring, limits);
        const bool predicted = inst.d() <= inst.r + 1;
        report.ranks = {{"kernel", kernel.rank()}, {"predicted_faithful", predicted}};
        report.finish((kernel.rank() == 0) == predicted,
                      kernel.rank() ? "kernel vector " + detail::vector_string(kernel.basis().row(0), ring) : "kernel is zero");
    });
    return report;
}

/// The image of kW_d in End(V^{⊗r}) equals the commutant of the (half)
/// partition algebra action.
inline CheckReport check_schur_weyl(const Instance& inst, const Limits& limits = default_limits()) {
    if (std::holds_alternative<IntegerRing>(inst.ring)) throw DomainError("check_schur_weyl requires a field");
    const long dim = int_pow(inst.n, inst.r);
    if (dim > 81) throw SizeLimitError("check_schur_weyl: n^r = " + std::to_string(dim) + " exceeds 81");
    CheckReport report{"schur_weyl", inst.to_json()};
    with_ring(inst.ring, [&](const auto& ring) {
        using R = std::decay_t<decltype(ring)>;
        if constexpr (R::is_field) {
            const auto diagrams = inst.half ? half_diagrams(inst.r) : all_diagrams(inst.r);
            std::vector<Matrix<R>> mats;
            for (const auto& x : diagrams) mats.push_back(diagram_action_matrix(x, inst, ring));
            const auto comm = commutant(mats, ring);
            Matrix<R> comm_rows(0, static_cast<std::size_t>(dim * dim), ring);
            for (const auto& c : comm) comm_rows.append_row(flatten(c));
            Matrix<R> image_rows(0, static_cast<std::size_t>(dim * dim), ring);
            for (const auto& w : all_permutations(inst.d(), limits))
                image_rows.append_row(flatten(weyl_action_matrix(w, inst, ring)));
            const RowSpace<R> comm_space(comm_rows), image_space(image_rows);
            report.ranks = {{"commutant", comm_space.rank()}, {"image", image_space.rank()},
                            {"diagrams", diagrams.size()}};
            auto witness = detail::first_row_outside(comm_space, image_space);
            if (witness.empty()) witness = detail::first_row_outside(image_space, comm_space);
            report.finish(comm_space == image_space, "matrix in one span but not the other: " + witness);
        }
    });
    return report;
}

/// y_lambda . v = F_S sum sgn(w_i) w_i . v for v with distinct values, where
/// S = W_lambda ∩ W_B is the stabilizer; in particular S != 1 forces zero.
template <class Ring = IntegerRing>
CheckReport check_when_zero(int d, const Partition& lambda, const TensorIndex& idx, const Ring& ring = Ring{},
                            const Limits& limits = default_limits()) {
    if (lambda.size() != d) throw DomainError("check_when_zero: lambda must be a partition of d");
    const int l = idx.degree();
    if (l < 1 || l > d) throw DomainError("check_when_zero: need 1 <= l <= d");
    idx.check_range(d);
    std::set<int> values(idx.entries().begin(), idx.entries().end());
    if (static_cast<int>(values.size()) != l) throw DomainError("check_when_zero: tensor values must be distinct");

    const Instance inst(d, l, false, RingSpec{IntegerRing{}});
    CheckReport report{"when_zero", {{"d", d}, {"lambda", lambda.to_string()}, {"v", idx.to_string()}}};
    const auto v = TensorVec<Ring>::basis(idx, d, ring);
    const auto group = young_subgroup(lambda, d, limits);

    TensorVec<Ring> lhs(d, l, ring);
    for (const auto& w : group) lhs.add_term(weyl_act(w, idx, inst), ring.from_int(w.sign()));

    std::vector<Permutation> stabilizer;
    for (const auto& w : group) {
        bool fixes = true;
        for (int value : values) fixes = fixes && w(value) == value;
        if (fixes) stabilizer.push_back(w);
    }
    // |S| should be the product of |C_j ∩ B|! over the rows C_j.
    std::uint64_t product = 1;
    for (const auto& row : composition_rows(lambda)) {
        int in_b = 0;
        for (int k : row) in_b += values.count(k) ? 0 : 1;
        product *= factorial(in_b);
    }
    long f_s = 0;
    for (const auto& s : stabilizer) f_s += s.sign();

    std::map<TensorIndex, Permutation> representatives;  // one w per coset wS
    for (const auto& w : group) representatives.try_emplace(weyl_act(w, idx, inst), w);
    TensorVec<Ring> rhs(d, l, ring);
    for (const auto& [image, w] : representatives) rhs.add_term(image, ring.from_int(f_s * w.sign()));

    const bool nontrivial = stabilizer.size() > 1;
    report.ranks = {{"stabilizer_order", stabilizer.size()}, {"F_S", f_s}, {"cosets", representatives.size()},
                    {"annihilated", lhs.is_zero()}};
    std::string witness;
    if (stabilizer.size() != product) witness = "stabilizer is not the product of W_{C_j ∩ B}";
    else if (f_s != (nontrivial ? 0 : 1)) witness = "F_S = " + std::to_string(f_s);
    else if (!(lhs == rhs)) witness = "y_lambda v = " + lhs.to_string() + " but F_S-formula gives " + rhs.to_string();
    else if (nontrivial && !lhs.is_zero()) witness = "nontrivial stabilizer yet y_lambda v = " + lhs.to_string();
    report.finish(witness.empty(), witness);
    return report;
}

/// check_when_zero over every tensor with distinct values in {1..d}, of every
/// length 1..d; the first failure is reported.
inline CheckReport check_when_zero_all(int d, const Partition& lambda, const Limits& limits = default_limits()) {
    CheckReport report{"when_zero", {{"d", d}, {"lambda", lambda.to_string()}, {"v", "all"}}};
    std::size_t vectors = 0, annihilated = 0;
    for (int l = 1; l <= d; ++l)
        for (const auto& idx : all_indices(d, l)) {
            std::set<int> values(idx.entries().begin(), idx.entries().end());
            if (static_cast<int>(values.size()) != l) continue;
            const auto single = check_when_zero(d, lambda, idx, IntegerRing{}, limits);
            ++vectors;
            if (single.ranks["annihilated"].get<bool>()) ++annihilated;
            if (!single.pass) {
                report.ranks = {{"vectors", vectors}};
                report.finish(false, "v = " + idx.to_string() + ": " + *single.witness);
                return report;
            }
        }
    report.ranks = {{"vectors", vectors}, {"annihilated", annihilated}};
    report.finish(true);
    return report;
}

/// Solves z x_{alpha(d,r)} = x_lambda for lambda ⊵ alpha(d,r).
template <class Ring = IntegerRing>
CheckReport check_hook_embedding(int d, int r, const Partition& lambda, const Ring& ring = Ring{},
                                 const Limits& limits = default_limits()) {
    const auto hook = alpha(d, r);
    if (!dominates(lambda, hook))
        throw DomainError("check_hook_embedding: " + lambda.to_string() + " does not dominate " + hook.to_string());
    CheckReport report{"hook_embedding",
                       {{"d", d}, {"r", r}, {"lambda", lambda.to_string()}, {"ring", ring.name()}}};
    const auto x_hook = x_element(hook, d, ring, limits);
    const auto x_lambda = x_element(lambda, d, ring, limits);
    const auto group = all_permutations(d, limits);
    Matrix<Ring> right_mult(0, group.size(), ring);
    for (const auto& w : group) right_mult.append_row((GroupAlgElem<Ring>::basis(w, ring) * x_hook).coefficient_vector());
    const auto z = solve_left(right_mult, x_lambda.coefficient_vector());
    if (!z) {
        report.finish(false, "no z with z x_alpha = x_lambda over " + ring.name());
        return report;
    }
    const auto zelem = GroupAlgElem<Ring>::from_coefficients(d, *z, ring, limits);
    const bool verified = zelem * x_hook == x_lambda;
    report.ranks = {{"solution_terms", zelem.size()}, {"solution", zelem.to_json()["terms"]}};
    report.finish(verified, "solution " + zelem.to_json().dump() + " does not satisfy z x_alpha = x_lambda");
    return report;
}

/// Stabilizers and orbit sizes of the generators of H_n(l), l = 1..n.
inline CheckReport check_h_module_isos(int n, const Limits& limits = default_limits()) {
    CheckReport report{"h_module_isos", {{"n", n}}};
    const auto group = all_permutations(n, limits);
    std::string witness;
    nlohmann::json orbits = nlohmann::json::object();
    for (int l = 1; l <= n; ++l) {
        std::vector<int> gen;
        for (int k = n - l + 1; k <= n; ++k) gen.push_back(k);
        const Instance inst(n, l, false, RingSpec{IntegerRing{}});
        const TensorIndex g(gen);
        std::set<TensorIndex> orbit;
        std::vector<Permutation> stabilizer;
        for (const auto& w : group) {
            auto image = weyl_act(w, g, inst);
            if (image == g) stabilizer.push_back(w);
            orbit.insert(std::move(image));
        }
        orbits[std::to_string(l)] = {{"orbit", orbit.size()}, {"stabilizer", stabilizer.size()}};
        if (orbit.size() != factorial(n) / factorial(n - l) && witness.empty())
            witness = "orbit of H_n(" + std::to_string(l) + ") has size " + std::to_string(orbit.size());
        if (orbit.size() * stabilizer.size() != factorial(n) && witness.empty()) witness = "orbit-stabilizer fails";
        if (l <= n - 1) {
            std::vector<int> hook{n - l};
            hook.insert(hook.end(), static_cast<std::size_t>(l), 1);
            const auto young = young_subgroup(WeakComposition(hook), n, limits);
            if (young != stabilizer && witness.empty())
                witness = "stabilizer of H_n(" + std::to_string(l) + ") is not W_(n-l,1^l)";
        }
        if (l >= n - 1 && stabilizer.size() != 1 && witness.empty())
            witness = "stabilizer of H_n(" + std::to_string(l) + ") is not trivial";
    }
    report.ranks = {{"orbits", orbits}};
    report.finish(witness.empty(), witness);
    return report;
}

/// The y-basis transition matrix from the permutation basis is unimodular.
inline CheckReport check_murphy_unimodular(int d, const Limits& limits = default_limits()) {
    CheckReport report{"murphy_unimodular", {{"d", d}, {"ring", "Z"}}};
    const IntegerRing ring;
    std::vector<GroupAlgElem<IntegerRing>> elems;
    for (auto& entry : murphy_basis(d, MurphyKind::y, ring, limits)) elems.push_back(std::move(entry.element));
    const auto m = detail::coefficient_matrix(elems, d, ring);
    const auto det = abs_determinant(m);
    const bool lattice_full = canonical_basis(m) == Matrix<IntegerRing>::identity(factorial(d), ring);
    report.ranks = {{"size", elems.size()}, {"abs_det", det.get_str()}, {"hnf_identity", lattice_full}};
    report.finish(elems.size() == factorial(d) && det == 1 && lattice_full, "|det| = " + det.get_str());
    return report;
}

/// s y and y s stay in the span of the cell ideal {rows < d - r} for every
/// simple transposition s.
template <class Ring>
CheckReport check_cell_ideal_two_sided(int d, int r, const Ring& ring, const Limits& limits = default_limits()) {
    CheckReport report{"cell_ideal_two_sided", {{"d", d}, {"r", r}, {"ring", ring.name()}}};
    const auto ideal = cell_ideal_y(d, fewer_rows_than(d - r), ring, limits);
    const RowSpace<Ring> span(detail::coefficient_matrix(ideal, d, ring));
    std::size_t products = 0;
    for (int i = 1; i < d; ++i) {
        const auto s = GroupAlgElem<Ring>::basis(Permutation::transposition(d, i, i + 1), ring);
        for (const auto& y : ideal)
            for (const auto& prod : {s * y, y * s}) {
                ++products;
                if (!span.contains(prod.coefficient_vector())) {
                    report.ranks = {{"ideal_rank", span.rank()}};
                    report.finish(false, "product " + prod.to_json().dump() + " leaves the ideal");
                    return report;
                }
            }
    }
    report.ranks = {{"ideal_rank", span.rank()}, {"products", products}};
    report.finish(true);
    return report;
}

/// For any mu: the intersection over lambda ⊵ mu of ann M^lambda is spanned
/// by the y_st whose shape is not dominated by mu^t.
template <class Ring>
CheckReport check_general_mu(int d, const Partition& mu, const Ring& ring, const Limits& limits = default_limits()) {
    CheckReport report{"general_mu", {{"d", d}, {"mu", mu.to_string()}, {"ring", ring.name()}}};
    const auto shapes = partitions_of(d);
    // Stack the module matrices side by side: the common left kernel is the
    // intersection of annihilators.
    std::vector<SparseMatrix<Ring>> blocks;
    std::size_t total_cols = 0;
    for (const auto& lambda : shapes)
        if (dominates(lambda, mu)) {
            blocks.push_back(perm_module_matrix(lambda, d, ring, limits));
            total_cols += blocks.back().cols();
        }
    SparseMatrix<Ring> stacked(factorial(d), total_cols, ring);
    std::size_t offset = 0;
    for (const auto& b : blocks) {
        for (std::size_t i = 0; i < b.rows(); ++i)
            for (const auto& [j, v] : b.row(i)) stacked.add(i, offset + j, v);
        offset += b.cols();
    }
    stacked.finalize();
    const auto ann = left_nullspace(stacked);
    const auto mu_t = transpose(mu);
    const auto ideal = cell_ideal_y(d, [&](const Partition& l) { return !dominates(mu_t, l); }, ring, limits);
    const RowSpace<Ring> span(detail::coefficient_matrix(ideal, d, ring));
    report.ranks = {{"annihilator", ann.rank()}, {"cell_ideal", span.rank()}, {"modules", blocks.size()}};
    report.finish(ann == span, detail::span_difference_witness(ann, span));
    return report;
}

// ---------------------------------------------------------------------------
// Diagram-algebra soundness

/// (xy)z = x(yz) on seeded random triples of diagrams with r strands.
inline CheckReport check_diagram_associativity(int r, int triples, std::uint64_t seed, long delta = 3) {
    CheckReport report{"diagram_associativity", {{"r", r}, {"triples", triples}, {"seed", seed}, {"delta", delta}}};
    std::mt19937_64 rng(seed);
    const auto diagrams = all_diagrams(r);
    std::uniform_int_distribution<std::size_t> pick(0, diagrams.size() - 1);
    const IntegerRing ring;
    for (int t = 0; t < triples; ++t) {
        const auto x = DiagramAlgElem<IntegerRing>::basis(diagrams[pick(rng)], delta, ring);
        const auto y = DiagramAlgElem<IntegerRing>::basis(diagrams[pick(rng)], delta, ring);
        const auto z = DiagramAlgElem<IntegerRing>::basis(diagrams[pick(rng)], delta, ring);
        if (!((x * y) * z == x * (y * z))) {
            report.finish(false, "non-associative triple " + x.terms().begin()->first.to_string() + " ; " +
                                     y.terms().begin()->first.to_string() + " ; " + z.terms().begin()->first.to_string());
            return report;
        }
    }
    report.ranks = {{"diagrams", diagrams.size()}};
    report.finish(true);
    return report;
}

/// Products of half diagrams are half diagrams.
inline CheckReport check_half_closure(int r) {
    CheckReport report{"half_closure", {{"r", r}}};
    const auto halves = half_diagrams(r);
    for (const auto& x : halves)
        for (const auto& y : halves) {
            const auto [m, z] = multiply_diagrams(x, y);
            if (!is_half_diagram(z)) {
                report.finish(false, x.to_string() + " * " + y.to_string() + " = " + z.to_string());
                return report;
            }
        }
    report.ranks = {{"half_diagrams", halves.size()}, {"pairs", halves.size() * halves.size()}};
    report.finish(true);
    return report;
}

/// diagram(tau * sigma) = diagram(sigma) . diagram(tau) with no delta factor.
inline CheckReport check_permutation_homomorphism(int r) {
    CheckReport report{"permutation_homomorphism", {{"r", r}}};
    const auto group = all_permutations(r);
    for (const auto& sigma : group)
        for (const auto& tau : group) {
            const auto [m, z] = multiply_diagrams(permutation_to_diagram(sigma), permutation_to_diagram(tau));
            if (m != 0 || z != permutation_to_diagram(tau * sigma)) {
                report.finish(false, "sigma = " + sigma.to_string() + ", tau = " + tau.to_string());
                return report;
            }
        }
    report.ranks = {{"pairs", group.size() * group.size()}};
    report.finish(true);
    return report;
}

}  // namespace cellkernel
