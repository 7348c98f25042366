#pragma once

// cellkernel command-line front end.  run() is the whole program; main() only
// forwards argv, so the golden tests can drive it in-process.

#include <atomic>
#include <exception>
#include <functional>
#include <iostream>
#include <mutex>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "cellkernel/cellkernel.hpp"

namespace cellkernel::cli {

enum class Format { json, csv, pretty };

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Thrown when at least one verified statement failed (exit 1).
struct CheckFailed : std::runtime_error {
    using std::runtime_error::runtime_error;
};

namespace detail {

inline Format parse_format(const std::string& s) {
    if (s == "json") return Format::json;
    if (s == "csv") return Format::csv;
    if (s == "pretty") return Format::pretty;
    throw UsageError("unknown format '" + s + "' (expected json, csv or pretty)");
}

inline bool parse_eps(const std::string& s) {
    if (s == "0") return false;
    if (s == "half" || s == "1/2") return true;
    throw UsageError("--eps must be 0 or half, got '" + s + "'");
}

inline RingSpec ring_or_usage(const std::string& s) {
    try {
        return parse_ring(s);
    } catch (const DomainError& e) {
        throw UsageError(e.what());
    }
}

inline std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) out += c == '"' ? std::string("\"\"") : std::string(1, c);
    return out + "\"";
}

/// "[1,2,3] - [1,3,2] + 2*[2,1,3]"
template <class Ring>
std::string format_element(const GroupAlgElem<Ring>& a) {
    if (a.size() == 0) return "0";
    std::string s;
    const auto& ring = a.ring();
    for (const auto& [w, c] : a.terms()) {
        std::string coeff = ring.to_string(c);
        bool negative = !coeff.empty() && coeff.front() == '-';
        if (negative) coeff.erase(0, 1);
        if (s.empty()) s += negative ? "-" : "";
        else s += negative ? " - " : " + ";
        if (coeff != "1") s += coeff + "*";
        s += w.to_string();
    }
    return s;
}

template <class Ring>
std::string matrix_rows(const Matrix<Ring>& m) {
    std::string s;
    for (std::size_t i = 0; i < m.rows(); ++i) {
        s += i ? "; " : "";
        for (std::size_t j = 0; j < m.cols(); ++j) s += (j ? " " : "") + m.ring().to_string(m(i, j));
    }
    return s;
}

template <class Ring>
nlohmann::json matrix_json(const Matrix<Ring>& m) {
    auto rows = nlohmann::json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        auto row = nlohmann::json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(m.ring().to_string(m(i, j)));
        rows.push_back(std::move(row));
    }
    return rows;
}

/// Runs tasks on `jobs` threads; results come back in task order.
inline std::vector<CheckReport> run_pool(const std::vector<std::function<CheckReport()>>& tasks, int jobs) {
    std::vector<std::optional<CheckReport>> results(tasks.size());
    std::vector<std::exception_ptr> errors(tasks.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next++; i < tasks.size(); i = next++) {
            try {
                results[i] = tasks[i]();
            } catch (...) {
                errors[i] = std::current_exception();
            }
        }
    };
    std::vector<std::thread> threads;
    const int n = std::max(1, std::min<int>(jobs, static_cast<int>(tasks.size())));
    for (int t = 1; t < n; ++t) threads.emplace_back(worker);
    worker();
    for (auto& t : threads) t.join();
    std::vector<CheckReport> out;
    for (std::size_t i = 0; i < tasks.size(); ++i) {
        if (errors[i]) std::rethrow_exception(errors[i]);
        out.push_back(std::move(*results[i]));
    }
    return out;
}

}  // namespace detail

struct Options {
    Format format = Format::json;
    int jobs = 1;
    Limits limits = default_limits();
};

// ---------------------------------------------------------------------------
// kernel

inline int cmd_kernel(const Instance& inst, bool allow_faithful, const Options& opt, std::ostream& out) {
    if (inst.d() <= inst.r + 1 && !allow_faithful)
        throw UsageError("kernel requires d > r + 1 (d = " + std::to_string(inst.d()) +
                         "); pass --allow-faithful to compute anyway");
    with_ring(inst.ring, [&](const auto& ring) {
        using R = std::decay_t<decltype(ring)>;
        const auto kernel = kernel_of_phi(inst, ring, opt.limits);
        const int d = inst.d();
        const auto predicted = d > inst.r + 1 ? predicted_kernel_rank(d, inst.r) : 0;
        std::vector<GroupAlgElem<R>> basis;
        for (std::size_t i = 0; i < kernel.rank(); ++i)
            basis.push_back(GroupAlgElem<R>::from_coefficients(d, kernel.basis().row(i), ring, opt.limits));
        switch (opt.format) {
        case Format::json: {
            auto elems = nlohmann::json::array();
            for (const auto& b : basis) elems.push_back(b.to_json());
            out << nlohmann::json{{"instance", inst.to_json()},
                                  {"rank", kernel.rank()},
                                  {"predicted", predicted},
                                  {"basis", elems}}
                       .dump()
                << "\n";
            break;
        }
        case Format::csv:
            out << "vector,perm,coeff\n";
            for (std::size_t i = 0; i < basis.size(); ++i)
                for (const auto& [w, c] : basis[i].terms())
                    out << i + 1 << "," << detail::csv_field(w.to_string()) << "," << ring.to_string(c) << "\n";
            break;
        case Format::pretty:
            out << "Phi_{" << inst.n << "," << inst.r << (inst.half ? "+1/2" : "") << "} on W_" << d << " over "
                << ring.name() << ": kernel rank " << kernel.rank() << " (predicted " << predicted << ")\n";
            for (std::size_t i = 0; i < basis.size(); ++i)
                out << "  k" << i + 1 << " = " << detail::format_element(basis[i]) << "\n";
            break;
        }
    });
    return 0;
}

// ---------------------------------------------------------------------------
// verify

struct VerifyPlan {
    std::vector<std::string> checks;  // empty = all
    int max_d = 5;
    std::optional<RingSpec> ring;
};

inline const std::vector<std::string>& check_names() {
    static const std::vector<std::string> names{
        "kernel_cell_ideal", "cell_ideal_annihilates", "annihilator_transfer", "rank_independence",
        "char0_semisimple",  "decomposition",          "faithful",             "schur_weyl",
        "when_zero",         "hook_embedding",         "h_module_isos",        "murphy_unimodular",
        "cell_ideal_two_sided", "general_mu",          "diagram_associativity", "half_closure",
        "permutation_homomorphism"};
    return names;
}

inline constexpr std::uint64_t kAssociativitySeed = 20240917;

/// Tasks for one named check, in a fixed order.
inline std::vector<std::function<CheckReport()>> plan_check(const std::string& name, const VerifyPlan& plan,
                                                            const Limits& limits) {
    std::vector<std::function<CheckReport()>> tasks;
    const int D = plan.max_d;
    auto rings_or = [&](std::vector<RingSpec> defaults) {
        if (plan.ring) return std::vector<RingSpec>{*plan.ring};
        return defaults;
    };
    const std::vector<RingSpec> grid_rings{IntegerRing{}, RationalRing{}, PrimeField(2), PrimeField(3)};
    struct GridPoint {
        int n, r;
        bool half;
    };
    std::vector<GridPoint> grid;
    for (bool half : {false, true})
        for (int d = 3; d <= D; ++d)
            for (int r = 1; r <= 3; ++r)
                if (d > r + 1) grid.push_back({d + (half ? 1 : 0), r, half});

    auto each_field_ring = [](const std::vector<RingSpec>& rings) {
        std::vector<RingSpec> out;
        for (const auto& r : rings)
            if (!std::holds_alternative<IntegerRing>(r)) out.push_back(r);
        return out;
    };

    if (name == "kernel_cell_ideal" || name == "cell_ideal_annihilates" || name == "annihilator_transfer") {
        const auto rings = name == "annihilator_transfer" ? rings_or({IntegerRing{}, RationalRing{}}) : rings_or(grid_rings);
        for (const auto& g : grid)
            for (const auto& ring : rings) {
                const Instance inst(g.n, g.r, g.half, ring);
                if (name == "kernel_cell_ideal") tasks.push_back([=] { return check_kernel_cell_ideal(inst, limits); });
                else if (name == "cell_ideal_annihilates")
                    tasks.push_back([=] { return check_cell_ideal_annihilates(inst, limits); });
                else tasks.push_back([=] { return check_annihilator_transfer(inst, limits); });
            }
    } else if (name == "rank_independence") {
        for (const auto& g : grid) tasks.push_back([=] { return check_rank_independence(g.n, g.r, g.half, limits); });
    } else if (name == "char0_semisimple") {
        if (!plan.ring || std::holds_alternative<RationalRing>(*plan.ring))
            for (const auto& g : grid)
                tasks.push_back([=] { return check_char0_semisimple(Instance(g.n, g.r, g.half, RationalRing{}), limits); });
    } else if (name == "decomposition") {
        for (bool half : {false, true})
            for (int n = 1; n <= 4; ++n)
                for (int r = 1; r <= 4; ++r) {
                    if (half && n < 2) continue;
                    const Instance inst(n, r, half, RationalRing{});
                    if (inst.d() <= D) tasks.push_back([=] { return check_decomposition(inst, limits); });
                }
    } else if (name == "faithful") {
        for (bool half : {false, true})
            for (int n = 1; n <= 5; ++n)
                for (int r = 1; r <= 4; ++r) {
                    if (half && n < 2) continue;
                    for (const auto& ring : rings_or({RationalRing{}})) {
                        const Instance inst(n, r, half, ring);
                        if (inst.d() <= D) tasks.push_back([=] { return check_faithful(inst, limits); });
                    }
                }
    } else if (name == "schur_weyl") {
        const std::vector<GridPoint> points{{2, 2, false}, {3, 1, false}, {3, 2, false}, {3, 1, true}, {4, 1, true}};
        for (const auto& p : points)
            for (const auto& ring : each_field_ring(rings_or({RationalRing{}, PrimeField(2)}))) {
                const Instance inst(p.n, p.r, p.half, ring);
                if (inst.d() <= D) tasks.push_back([=] { return check_schur_weyl(inst, limits); });
            }
    } else if (name == "when_zero") {
        for (int d = 1; d <= std::min(D, 5); ++d)
            for (const auto& lambda : partitions_of(d))
                tasks.push_back([=] { return check_when_zero_all(d, lambda, limits); });
    } else if (name == "hook_embedding") {
        for (const auto& ring : rings_or({IntegerRing{}}))
            for (int d = 3; d <= std::min(D, 5); ++d)
                for (int r = 1; r < d - 1; ++r)
                    for (const auto& lambda : partitions_of(d))
                        if (dominates(lambda, alpha(d, r)))
                            tasks.push_back([=] {
                                return with_ring(ring, [&](const auto& k) {
                                    return check_hook_embedding(d, r, lambda, k, limits);
                                });
                            });
    } else if (name == "h_module_isos") {
        for (int n = 1; n <= D; ++n) tasks.push_back([=] { return check_h_module_isos(n, limits); });
    } else if (name == "murphy_unimodular") {
        for (int d = 1; d <= std::min(D, 6); ++d) tasks.push_back([=] { return check_murphy_unimodular(d, limits); });
    } else if (name == "cell_ideal_two_sided") {
        for (const auto& ring : rings_or(grid_rings))
            for (int d = 3; d <= std::min(D, 5); ++d)
                for (int r = 1; r < d - 1; ++r)
                    tasks.push_back([=] {
                        return with_ring(ring, [&](const auto& k) { return check_cell_ideal_two_sided(d, r, k, limits); });
                    });
    } else if (name == "general_mu") {
        for (const auto& ring : rings_or({RationalRing{}, PrimeField(2)}))
            for (int d = 1; d <= std::min(D, 4); ++d)
                for (const auto& mu : partitions_of(d))
                    tasks.push_back([=] {
                        return with_ring(ring, [&](const auto& k) { return check_general_mu(d, mu, k, limits); });
                    });
    } else if (name == "diagram_associativity") {
        for (int r = 1; r <= 4; ++r)
            tasks.push_back([=] { return check_diagram_associativity(r, 200, kAssociativitySeed + r); });
    } else if (name == "half_closure") {
        for (int r = 1; r <= 3; ++r) tasks.push_back([=] { return check_half_closure(r); });
    } else if (name == "permutation_homomorphism") {
        for (int r = 1; r <= 3; ++r) tasks.push_back([=] { return check_permutation_homomorphism(r); });
    } else {
        throw UsageError("unknown check '" + name + "'");
    }
    return tasks;
}

inline std::vector<CheckReport> run_verify(const VerifyPlan& plan, int jobs, const Limits& limits) {
    if (plan.max_d < 1) throw UsageError("--max-d must be positive");
    if (plan.max_d > limits.max_action_d)
        throw SizeLimitError("--max-d " + std::to_string(plan.max_d) + " exceeds the size guard " +
                             std::to_string(limits.max_action_d) + " (set CELLKERNEL_MAX_D to raise it)");
    std::vector<std::function<CheckReport()>> tasks;
    for (const auto& name : plan.checks.empty() ? check_names() : plan.checks) {
        auto more = plan_check(name, plan, limits);
        tasks.insert(tasks.end(), std::make_move_iterator(more.begin()), std::make_move_iterator(more.end()));
    }
    return detail::run_pool(tasks, jobs);
}

inline int cmd_verify(const VerifyPlan& plan, const Options& opt, std::ostream& out, std::ostream& err) {
    const auto reports = run_verify(plan, opt.jobs, opt.limits);
    std::size_t failed = 0;
    if (opt.format == Format::csv) out << "check,instance,pass,ranks,witness\n";
    for (const auto& rep : reports) {
        failed += rep.pass ? 0 : 1;
        switch (opt.format) {
        case Format::json:
            out << rep.to_json().dump() << "\n";
            break;
        case Format::csv:
            out << rep.name << "," << detail::csv_field(rep.instance.dump()) << "," << (rep.pass ? "true" : "false")
                << "," << detail::csv_field(rep.ranks.dump()) << "," << detail::csv_field(rep.witness.value_or(""))
                << "\n";
            break;
        case Format::pretty:
            out << (rep.pass ? "PASS " : "FAIL ") << rep.name << " " << rep.instance.dump();
            if (rep.witness) out << "\n     witness: " << *rep.witness;
            out << "\n";
            break;
        }
    }
    err << reports.size() << " checks, " << failed << " failed\n";
    return failed ? 1 : 0;
}

// ---------------------------------------------------------------------------
// murphy, diagram mul, decompose, commutant

inline int cmd_murphy(int d, MurphyKind kind, const RingSpec& ring_spec, const Options& opt, std::ostream& out) {
    with_ring(ring_spec, [&](const auto& ring) {
        const auto basis = murphy_basis(d, kind, ring, opt.limits);
        if (opt.format == Format::csv) out << "shape,s,t,perm,coeff\n";
        for (const auto& e : basis) {
            switch (opt.format) {
            case Format::json:
                out << nlohmann::json{{"shape", e.shape.to_string()},
                                      {"s", e.s.to_string()},
                                      {"t", e.t.to_string()},
                                      {"element", e.element.to_json()}}
                           .dump()
                    << "\n";
                break;
            case Format::csv:
                for (const auto& [w, c] : e.element.terms())
                    out << detail::csv_field(e.shape.to_string()) << "," << detail::csv_field(e.s.to_string()) << ","
                        << detail::csv_field(e.t.to_string()) << "," << detail::csv_field(w.to_string()) << ","
                        << ring.to_string(c) << "\n";
                break;
            case Format::pretty:
                out << to_string(kind) << "_{" << e.s.to_string() << "," << e.t.to_string() << "} = "
                    << detail::format_element(e.element) << "\n";
                break;
            }
        }
    });
    return 0;
}

inline int cmd_diagram_mul(const std::string& left, const std::string& right, long delta, const Options& opt,
                           std::ostream& out) {
    Diagram x, y;
    try {
        x = Diagram::parse(left);
        y = Diagram::parse(right);
        if (x.strands() != y.strands()) {
            const int r = std::max(x.strands(), y.strands());
            x = Diagram::parse(left, r);
            y = Diagram::parse(right, r);
        }
    } catch (const ParseError& e) {
        throw UsageError(e.what());
    }
    const auto [m, z] = multiply_diagrams(x, y);
    mpz_class coeff;
    mpz_ui_pow_ui(coeff.get_mpz_t(), static_cast<unsigned long>(std::labs(delta)), static_cast<unsigned long>(m));
    if (delta < 0 && m % 2 == 1) coeff = -coeff;
    switch (opt.format) {
    case Format::json:
        out << nlohmann::json{{"left", x.to_string()},
                              {"right", y.to_string()},
                              {"delta", delta},
                              {"middle_components", m},
                              {"coefficient", coeff.get_str()},
                              {"product", z.to_string()}}
                   .dump()
            << "\n";
        break;
    case Format::csv:
        out << "left,right,delta,middle_components,coefficient,product\n"
            << detail::csv_field(x.to_string()) << "," << detail::csv_field(y.to_string()) << "," << delta << "," << m
            << "," << coeff.get_str() << "," << detail::csv_field(z.to_string()) << "\n";
        break;
    case Format::pretty:
        if (m == 0) out << z.to_string() << "\n";
        else out << coeff.get_str() << " * " << z.to_string() << "\n";
        break;
    }
    return 0;
}

inline int cmd_decompose(int n, int r, bool half, const Options& opt, std::ostream& out) {
    const Instance inst(n, r, half, RationalRing{});
    const int places = half ? r + 1 : r;
    const auto types = all_value_types(places);
    std::map<int, std::uint64_t> mult;
    std::uint64_t total = 0;
    if (opt.format == Format::csv) out << "value_type,parts,orbit_size\n";
    if (opt.format == Format::pretty)
        out << "value-types of V^{(x)" << r << "}" << (half ? " (x) v_" + std::to_string(n) : "") << ", n = " << n
            << ", acting group W_" << inst.d() << "\n";
    for (const auto& lambda : types) {
        const auto size = orbit_basis(lambda, n, half).size();
        total += size;
        if (size) ++mult[lambda.length()];
        switch (opt.format) {
        case Format::json:
            out << nlohmann::json{{"value_type", lambda.to_string()}, {"parts", lambda.length()}, {"orbit_size", size}}
                       .dump()
                << "\n";
            break;
        case Format::csv:
            out << detail::csv_field(lambda.to_string()) << "," << lambda.length() << "," << size << "\n";
            break;
        case Format::pretty:
            out << "  " << lambda.to_string() << "  parts " << lambda.length() << "  orbit " << size << "\n";
            break;
        }
    }
    nlohmann::json m = nlohmann::json::object();
    for (const auto& [l, c] : mult) m[std::to_string(l)] = c;
    if (opt.format == Format::json)
        out << nlohmann::json{{"instance", inst.to_json()}, {"dimension", total}, {"multiplicities", m}}.dump() << "\n";
    else if (opt.format == Format::pretty)
        out << "dimension " << total << ", nonzero orbits by number of parts " << m.dump() << "\n";
    return 0;
}

inline int cmd_commutant(const Instance& inst, const Options& opt, std::ostream& out) {
    if (std::holds_alternative<IntegerRing>(inst.ring)) throw UsageError("commutant requires a field (Q or Fp:P)");
    const long dim = int_pow(inst.n, inst.r);
    if (dim > 81) throw SizeLimitError("commutant: n^r = " + std::to_string(dim) + " exceeds 81");
    with_ring(inst.ring, [&](const auto& ring) {
        using R = std::decay_t<decltype(ring)>;
        if constexpr (R::is_field) {
            std::vector<Matrix<R>> mats;
            for (const auto& x : inst.half ? half_diagrams(inst.r) : all_diagrams(inst.r))
                mats.push_back(diagram_action_matrix(x, inst, ring));
            const auto basis = commutant(mats, ring);
            switch (opt.format) {
            case Format::json: {
                auto elems = nlohmann::json::array();
                for (const auto& b : basis) elems.push_back(detail::matrix_json(b));
                out << nlohmann::json{{"instance", inst.to_json()}, {"dimension", basis.size()}, {"basis", elems}}.dump()
                    << "\n";
                break;
            }
            case Format::csv:
                out << "matrix,rows\n";
                for (std::size_t i = 0; i < basis.size(); ++i)
                    out << i + 1 << "," << detail::csv_field(detail::matrix_rows(basis[i])) << "\n";
                break;
            case Format::pretty:
                out << "commutant of the " << (inst.half ? "half " : "") << "partition algebra on V^{(x)" << inst.r
                    << "}, n = " << inst.n << ", over " << ring.name() << ": dimension " << basis.size() << "\n";
                for (std::size_t i = 0; i < basis.size(); ++i)
                    out << "  E" << i + 1 << " = [" << detail::matrix_rows(basis[i]) << "]\n";
                break;
            }
        }
    });
    return 0;
}

// ---------------------------------------------------------------------------

inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"cellkernel: Murphy bases, partition algebras and the kernel of W_d on tensor space"};
    app.require_subcommand(1);
    std::string format = "json";
    int jobs = 1;
    app.add_option("--format", format, "json, csv or pretty");
    app.add_option("--jobs", jobs, "worker threads for verify")->check(CLI::PositiveNumber);

    int n = 0, r = 0, d = 0;
    std::string eps = "0", ring = "Z";
    bool allow_faithful = false;
    auto* kernel = app.add_subcommand("kernel", "kernel of W_d on V^{(x)r} (x) v_n^eps");
    kernel->add_option("--n", n)->required();
    kernel->add_option("--r", r)->required();
    kernel->add_option("--eps", eps, "0 or half");
    kernel->add_option("--ring", ring, "Z, Q or Fp:P");
    kernel->add_flag("--allow-faithful", allow_faithful);

    VerifyPlan plan;
    bool all = false;
    std::string verify_ring;
    auto* verify = app.add_subcommand("verify", "run the theorem checks");
    verify->add_flag("--all", all);
    verify->add_option("--check", plan.checks, "check name (repeatable)");
    verify->add_option("--max-d", plan.max_d);
    verify->add_option("--ring", verify_ring, "restrict ring-dependent checks to one ring");
    verify->add_option("--jobs", jobs)->check(CLI::PositiveNumber);

    std::string basis_kind = "y", murphy_ring = "Z";
    auto* murphy = app.add_subcommand("murphy", "dump a Murphy basis");
    murphy->add_option("--d", d)->required();
    murphy->add_option("--basis", basis_kind, "x or y");
    murphy->add_option("--ring", murphy_ring);

    std::string left, right;
    long delta = 0;
    auto* diagram = app.add_subcommand("diagram", "diagram algebra arithmetic");
    diagram->require_subcommand(1);
    auto* mul = diagram->add_subcommand("mul", "multiply two diagrams");
    mul->add_option("--left", left)->required();
    mul->add_option("--right", right)->required();
    mul->add_option("--delta", delta)->required();

    auto* decompose = app.add_subcommand("decompose", "value-type orbit table");
    decompose->add_option("--n", n)->required();
    decompose->add_option("--r", r)->required();
    decompose->add_option("--eps", eps);

    std::string comm_ring = "Q";
    auto* comm = app.add_subcommand("commutant", "commutant of the partition algebra action");
    comm->add_option("--n", n)->required();
    comm->add_option("--r", r)->required();
    comm->add_option("--eps", eps);
    comm->add_option("--ring", comm_ring);

    for (auto* sub : {kernel, verify, murphy, mul, decompose, comm}) sub->add_option("--format", format);

    std::vector<const char*> argv{"cellkernel"};
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << "\n" << app.help();
        return 2;
    }

    try {
        Options opt;
        opt.jobs = jobs;
        if (mul->parsed() && !app.get_option("--format")->count() && !mul->get_option("--format")->count())
            format = "pretty";
        opt.format = detail::parse_format(format);

        if (kernel->parsed())
            return cmd_kernel(Instance(n, r, detail::parse_eps(eps), detail::ring_or_usage(ring)), allow_faithful, opt,
                              out);
        if (verify->parsed()) {
            if (all == !plan.checks.empty()) throw UsageError("verify needs exactly one of --all or --check NAME");
            for (const auto& name : plan.checks)
                if (std::find(check_names().begin(), check_names().end(), name) == check_names().end())
                    throw UsageError("unknown check '" + name + "'");
            if (!verify_ring.empty()) plan.ring = detail::ring_or_usage(verify_ring);
            return cmd_verify(plan, opt, out, err);
        }
        if (murphy->parsed()) {
            if (basis_kind != "x" && basis_kind != "y") throw UsageError("--basis must be x or y");
            return cmd_murphy(d, basis_kind == "x" ? MurphyKind::x : MurphyKind::y, detail::ring_or_usage(murphy_ring),
                              opt, out);
        }
        if (mul->parsed()) return cmd_diagram_mul(left, right, delta, opt, out);
        if (decompose->parsed()) return cmd_decompose(n, r, detail::parse_eps(eps), opt, out);
        if (comm->parsed())
            return cmd_commutant(Instance(n, r, detail::parse_eps(eps), detail::ring_or_usage(comm_ring)), opt, out);
    } catch (const UsageError& e) {
        err << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const SizeLimitError& e) {
        err << "size guard: " << e.what() << "\n";
        return 2;
    } catch (const DomainError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}

}  // namespace cellkernel::cli
