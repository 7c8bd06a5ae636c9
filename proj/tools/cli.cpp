#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdlib>
#include <optional>
#include <ostream>
#include <random>
#include <sstream>

#include "amalgam/amalgam.hpp"
#include "amalgam/errors.hpp"
#include "amalgam/fayers.hpp"
#include "amalgam/fekete.hpp"
#include "amalgam/io.hpp"
#include "amalgam/linalg.hpp"
#include "amalgam/tableaux.hpp"
#include "amalgam/vandermonde.hpp"

namespace amalgam::cli {

namespace {

using nlohmann::json;

// Exit with a message on stderr; raised for violated flag combinations after parsing.
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Mismatch {};

struct Context {
    std::ostream& out;
    std::ostream& err;
    bool ci = false;
    unsigned threads = 1;
    std::size_t syt_cap = kDefaultSytCap;
};

std::size_t syt_cap_from_env() {
    const char* env = std::getenv("AMALGAM_SYT_CAP");
    if (!env || !*env) return kDefaultSytCap;
    char* end = nullptr;
    const unsigned long long v = std::strtoull(env, &end, 10);
    if (*end != '\0' || v == 0) throw UsageError(std::string("AMALGAM_SYT_CAP must be a positive integer, got '") + env + "'");
    return static_cast<std::size_t>(v);
}

std::uint64_t resolve_seed(const Context& ctx, const std::optional<std::uint64_t>& seed, const std::string& what) {
    if (seed) return *seed;
    if (ctx.ci) throw UsageError(what + " is randomized; --ci requires --seed");
    std::random_device rd;
    const std::uint64_t s = (static_cast<std::uint64_t>(rd()) << 32) ^ rd();
    ctx.err << "seed = " << s << "\n";
    return s;
}

std::string rat(const Rational& q) { return to_string(q); }

Rational random_rational(SeededEntries& rng) {
    Rational q(Integer(static_cast<long>(rng.entry())), Integer(static_cast<long>(rng.uniform_int(1, 9))));
    q.canonicalize();
    return q;
}

PointSet<Rational> random_points(std::size_t r, std::size_t count, SeededEntries& rng) {
    PointSet<Rational> pts(count);
    for (auto& p : pts)
        for (std::size_t c = 0; c < r; ++c) p.push_back(random_rational(rng));
    return pts;
}

std::vector<Rational> parse_rationals(const std::string& text) {
    std::vector<Rational> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) out.push_back(parse_rational(item));
    if (out.empty()) throw ParseError("empty list");
    return out;
}

// ---- tableaux and coefficient matrices ----

void print_basis_matrix(const Context& ctx, const BasisMatrix& b) {
    auto& o = ctx.out;
    o << "{\n  \"m\": " << b.m << ",\n  \"n\": " << b.n << ",\n  \"row_basis\": [";
    for (std::size_t i = 0; i < b.row_basis.size(); ++i) o << (i ? ", " : "") << json(to_text(b.row_basis[i])).dump();
    o << "],\n  \"col_basis\": [";
    for (std::size_t i = 0; i < b.col_basis.size(); ++i) o << (i ? ", " : "") << json(to_text(b.col_basis[i])).dump();
    o << "],\n  \"matrix\": [\n";
    for (std::size_t i = 0; i < b.entries.rows(); ++i) {
        o << "    [";
        for (std::size_t j = 0; j < b.entries.cols(); ++j) o << (j ? ", " : "") << b.entries(i, j);
        o << "]" << (i + 1 < b.entries.rows() ? "," : "") << "\n";
    }
    o << "  ]\n}\n";
}

// ---- verification helpers ----

template <class T>
json expansion_json(const TermExpansion<T>& e) {
    json terms = json::array();
    for (const auto& t : e.terms) {
        std::string value;
        if constexpr (std::is_same_v<T, Poly>) {
            value = t.value.to_string();
        } else {
            value = rat(t.value);
        }
        terms.push_back({{"coef", t.coef}, {"alpha", to_text(t.alpha)}, {"beta", to_text(t.beta)}, {"value", value}});
    }
    return terms;
}

struct T3Options {
    std::size_t m = 0, n = 0;
    std::optional<std::uint64_t> seed;
    std::string a_file, b_file;
    bool symbolic = false;
    bool allow_large = false;
    bool corrupt = false;
    std::string corrupt_entry = "1,1";
    std::size_t trials = 1;
    bool print_terms = false;
};

BasisMatrix coefficient_matrix(const Context& ctx, const T3Options& o) {
    BasisMatrix phi = phi_matrix(o.m, o.n, ctx.syt_cap);
    if (o.corrupt) {
        const auto at = o.corrupt_entry.find(',');
        if (at == std::string::npos) throw UsageError("--corrupt-entry expects i,j");
        const auto i = std::stoul(o.corrupt_entry.substr(0, at));
        const auto j = std::stoul(o.corrupt_entry.substr(at + 1));
        if (i < 1 || j < 1 || i > phi.entries.rows() || j > phi.entries.cols()) {
            throw UsageError("--corrupt-entry outside the " + std::to_string(phi.entries.rows()) + "x" +
                             std::to_string(phi.entries.cols()) + " matrix");
        }
        phi.entries(i - 1, j - 1) += 1;
        ctx.err << "corrupted coefficient (" << i << "," << j << ") -> " << phi.entries(i - 1, j - 1) << "\n";
    }
    return phi;
}

int verify_t3(const Context& ctx, const T3Options& o) {
    const BasisMatrix phi = coefficient_matrix(ctx, o);
    if (o.symbolic) {
        if (o.m * o.n > 6 && !o.allow_large) {
            throw ResourceError("symbolic verification is limited to mn <= 6 (use --allow-large)");
        }
        const auto p = symbolic_pair(o.m, o.n);
        const auto e = phi_expansion(p, &phi, ctx.syt_cap);
        const Poly d = det(star(p));
        const Poly diff = e.total - d;
        ctx.out << "symbolic m=" << o.m << " n=" << o.n << ": " << e.terms.size() << " terms, det(A*B) has " << d.size()
                << " monomials\n";
        if (o.print_terms) ctx.out << expansion_json(e).dump(2) << "\n";
        if (!diff.is_zero()) {
            ctx.out << "MISMATCH expansion - det(A*B) = " << diff.to_string() << "\n";
            return kMismatch;
        }
        ctx.out << "expansion - det(A*B) = 0\n";
        return kOk;
    }

    std::vector<AmalgamPair<Rational>> pairs;
    if (!o.a_file.empty() || !o.b_file.empty()) {
        if (o.a_file.empty() || o.b_file.empty()) throw UsageError("--A and --B go together");
        auto p = make_amalgam_pair(io::matrix_from_json(io::read_json_file(o.a_file)),
                                   io::matrix_from_json(io::read_json_file(o.b_file)));
        if (p.m != o.m || p.n != o.n) throw UsageError("matrix files do not match m and n");
        pairs.push_back(std::move(p));
    } else {
        SeededEntries rng(resolve_seed(ctx, o.seed, "verify-t3"));
        for (std::size_t t = 0; t < o.trials; ++t) pairs.push_back(random_pair(o.m, o.n, rng));
    }
    for (std::size_t t = 0; t < pairs.size(); ++t) {
        const auto e = phi_expansion(pairs[t], &phi, ctx.syt_cap);
        const Rational d = det(star(pairs[t]));
        if (o.print_terms) ctx.out << expansion_json(e).dump(2) << "\n";
        if (e.total != d) {
            ctx.out << "trial " << t + 1 << ": MISMATCH det(A*B) = " << rat(d) << ", expansion = " << rat(e.total) << "\n";
            return kMismatch;
        }
        ctx.out << "trial " << t + 1 << ": det(A*B) = " << rat(d) << " = expansion (" << e.terms.size() << " terms)\n";
    }
    ctx.out << "all " << pairs.size() << " trials agree\n";
    return kOk;
}

struct T4Options {
    std::size_t m = 0, n = 0;
    std::string alpha, beta;
    std::optional<std::uint64_t> seed;
    std::size_t trials = 1;
    std::size_t perm_cap = kDefaultPermCap;
};

int verify_t4(const Context& ctx, const T4Options& o) {
    const Tableau one = trivial_tableau(o.m, o.n);
    const Tableau alpha = o.alpha.empty() ? one : parse_tableau(o.alpha);
    const Tableau beta = o.beta.empty() ? conjugate(one) : parse_tableau(o.beta);
    const int pair_value = pairing(alpha, beta);
    const bool trivial_pair = alpha == one && beta == conjugate(one);
    const Integer h = hook_product(o.m, o.n);
    PermSumOptions opts{o.perm_cap, ctx.threads};
    SeededEntries rng(resolve_seed(ctx, o.seed, "verify-t4"));
    std::optional<Rational> first_ratio;
    for (std::size_t t = 0; t < o.trials; ++t) {
        const auto p = random_pair(o.m, o.n, rng);
        const Rational d = det(star(p));
        const Rational s = perm_sum(p, alpha, beta, opts);
        ctx.out << "trial " << t + 1 << ": perm_sum = " << rat(s) << ", det(A*B) = " << rat(d);
        if (d == 0) {
            ctx.out << " (singular draw)\n";
            if (s != 0) {
                ctx.out << "MISMATCH nonzero sum against a zero determinant\n";
                return kMismatch;
            }
            continue;
        }
        const Rational ratio = s / d;
        ctx.out << ", ratio = " << rat(ratio) << "\n";
        const bool bad = !is_integral(ratio) || (trivial_pair && ratio != Rational(h)) ||
                         (pair_value == 0 && ratio != 0) || (first_ratio && *first_ratio != ratio);
        if (bad) {
            ctx.out << "MISMATCH expected "
                    << (trivial_pair ? "H = " + to_string(h) : pair_value == 0 ? std::string("0") : "a stable integer")
                    << "\n";
            return kMismatch;
        }
        first_ratio = ratio;
    }
    ctx.out << "pairing = " << pair_value << (trivial_pair ? ", H = " + to_string(h) : "") << "\n";
    return kOk;
}

// ---- Vandermonde ----

struct VdmOptions {
    std::vector<std::size_t> degrees;
    std::optional<std::size_t> split;
    std::string order = "kron";
    std::string points;
    std::optional<std::uint64_t> seed;
    bool symbolic = false;
    std::string expand = "both";
};

int vdm(const Context& ctx, const VdmOptions& o) {
    VdmSpec spec{o.degrees, o.split, o.order == "deglex" ? MonomialOrder::deglex : MonomialOrder::kron};
    if (!spec.split && spec.dimension() >= 2) spec.split = 1;
    spec.validate();
    const bool want1 = o.expand == "t1" || o.expand == "both";
    const bool want2 = o.expand == "t2" || o.expand == "both";
    if (spec.order == MonomialOrder::deglex) {
        // expansions need kron order; report the determinant and its relation to kron order
        VdmSpec kron = spec;
        kron.order = MonomialOrder::kron;
        const auto dl = monomials(spec);
        const auto kr = monomials(kron);
        Permutation perm;
        for (const auto& e : dl) perm.push_back(static_cast<std::uint32_t>(std::find(kr.begin(), kr.end(), e) - kr.begin() + 1));
        ctx.out << "column order sign relative to kron = " << permutation_sign(perm) << "\n";
        if (o.symbolic) {
            ctx.out << "det V = " << det(build_vdm(spec, symbolic_points(spec.dimension(), spec.count()))).to_string() << "\n";
        }
        return kOk;
    }
    if (spec.dimension() < 2) throw UsageError("expansions need at least two coordinates to split");

    if (o.symbolic) {
        const auto pts = symbolic_points(spec.dimension(), spec.count());
        const Poly d = det(build_vdm(spec, pts));
        int rc = kOk;
        if (want1) {
            const auto e = vdm_expand_tableaux(spec, pts, ctx.syt_cap);
            ctx.out << "det V = " << factored_expansion(spec, e) << "\n";
            const bool ok = e.total == d;
            ctx.out << "tableau expansion " << (ok ? "matches" : "DOES NOT match") << " det V\n";
            if (!ok) rc = kMismatch;
        }
        if (want2) {
            const Poly s = vdm_expand_perm(spec, pts, PermSumOptions{kDefaultPermCap, ctx.threads});
            const bool ok = s == d;
            ctx.out << "permutation-sum expansion " << (ok ? "matches" : "DOES NOT match") << " det V\n";
            if (!ok) rc = kMismatch;
        }
        return rc;
    }

    PointSet<Rational> pts;
    if (!o.points.empty()) {
        pts = io::points_from_json(io::read_json_file(o.points));
    } else {
        SeededEntries rng(resolve_seed(ctx, o.seed, "vdm"));
        pts = random_points(spec.dimension(), spec.count(), rng);
    }
    const Rational d = det(build_vdm(spec, pts));
    ctx.out << "det V = " << rat(d) << "\n";
    int rc = kOk;
    if (want1) {
        const auto e = vdm_expand_tableaux(spec, pts, ctx.syt_cap);
        ctx.out << "tableau expansion = " << rat(e.total) << " (" << e.terms.size() << " terms)\n";
        if (e.total != d) rc = kMismatch;
    }
    if (want2) {
        const Rational s = vdm_expand_perm(spec, pts, PermSumOptions{kDefaultPermCap, ctx.threads});
        ctx.out << "permutation-sum expansion = " << rat(s) << "\n";
        if (s != d) rc = kMismatch;
    }
    if (rc != kOk) ctx.out << "MISMATCH\n";
    return rc;
}

struct HomOptions {
    std::size_t N = 2;
    std::size_t r = 2;
    std::string points;
    std::optional<std::uint64_t> seed;
    bool kernel = false;
    std::string extract;
};

std::string monomial_text(const Exponent& e) {
    std::string s;
    for (std::size_t c = 0; c < e.size(); ++c) {
        if (e[c] == 0) continue;
        if (!s.empty()) s += "*";
        s += coordinate_letter(c);
        if (e[c] > 1) s += "^" + std::to_string(e[c]);
    }
    return s.empty() ? "1" : s;
}

int vdm_hom(const Context& ctx, const HomOptions& o) {
    if (!o.extract.empty()) {
        Extraction ex;
        std::string relation;
        if (o.extract == "separated") {
            ex = separated_conic_extraction();
            relation = "det V^hom";
        } else if (o.extract == "mixed") {
            ex = mixed_conic_extraction(false);
            relation = "-det V^hom";
        } else if (o.extract == "mixed-origin") {
            ex = mixed_conic_extraction(true);
            relation = "-det V^hom(p1..p5, 0)";
        } else {
            throw UsageError("--extract must be separated, mixed or mixed-origin");
        }
        const auto e = hom_via_amalgam_minor(ex, ctx.syt_cap);
        ctx.out << "coefficient = " << relation << " = sum of " << e.terms.size() << " terms:\n" << to_text(e) << "\n";
        const bool ok = e.total == extraction_direct(ex);
        ctx.out << "term sum " << (ok ? "matches" : "DOES NOT match") << " the direct minor\n";
        return ok ? kOk : kMismatch;
    }
    PointSet<Rational> pts;
    if (!o.points.empty()) {
        pts = io::points_from_json(io::read_json_file(o.points));
    } else {
        SeededEntries rng(resolve_seed(ctx, o.seed, "vdm-hom"));
        pts = random_points(o.r, hom_count(o.N, o.r), rng);
    }
    const auto m = build_vdm_hom(o.N, o.r, pts);
    ctx.out << "det V^hom = " << rat(det(m)) << "\n";
    if (o.kernel) {
        const auto mons = hom_monomials(o.N, o.r);
        const auto basis = hom_kernel(m);
        ctx.out << "kernel dimension = " << basis.size() << "\n";
        for (const auto& v : basis) {
            std::string line;
            for (std::size_t k = 0; k < v.size(); ++k) {
                if (v[k] == 0) continue;
                line += (line.empty() ? "" : " + ") + ("(" + rat(v[k]) + ")*" + monomial_text(mons[k]));
            }
            ctx.out << "  " << line << "\n";
        }
    }
    return kOk;
}

// ---- Fekete ----

struct FeketeOptions {
    std::string set;
    std::string weights;
    std::vector<std::size_t> degrees;
    std::vector<std::size_t> n_list;
    std::size_t budget = 12;
    std::size_t starts = 4;
    std::optional<std::uint64_t> seed;
};

std::uint64_t fekete_seed(const Context& ctx, const std::optional<std::uint64_t>& seed) {
    if (seed) return *seed;
    if (ctx.ci) throw UsageError("--ci requires --seed");
    return 0;
}

int fekete_cmd(const Context& ctx, const FeketeOptions& o) {
    const auto k = fekete::from_json(io::read_json_file(o.set));
    fekete::SearchOptions so{o.budget, fekete_seed(ctx, o.seed), o.starts, ctx.threads};
    if (!o.degrees.empty()) {
        const auto res = fekete::fekete_search(k, o.degrees, so);
        const Rational D = fekete::degree_D(o.degrees);
        ctx.out << "N,D,log_abs_det,estimate\n";
        char buf[160];
        std::snprintf(buf, sizeof buf, ",%s,%.12g,%.12g\n", to_string(D).c_str(), res.log_det,
                      D == 0 ? 1.0 : std::exp(res.log_det / D.get_d()));
        ctx.out << buf;
        return kOk;
    }
    if (o.n_list.empty()) throw UsageError("give --N-list or --degrees");
    std::vector<Rational> w = o.weights.empty() ? std::vector<Rational>(k.dimension(), Rational(1)) : parse_rationals(o.weights);
    ctx.out << fekete::to_csv(fekete::transfinite_estimate(k, w, o.n_list, so));
    return kOk;
}

struct MultOptions {
    std::string set1, set2, weights;
    std::size_t N = 0;
    std::size_t budget = 12;
    std::size_t starts = 4;
    std::optional<std::uint64_t> seed;
};

int multiplicativity_cmd(const Context& ctx, const MultOptions& o) {
    const auto k1 = fekete::from_json(io::read_json_file(o.set1));
    const auto k2 = fekete::from_json(io::read_json_file(o.set2));
    std::vector<Rational> w = o.weights.empty() ? std::vector<Rational>(k1.dimension() + k2.dimension(), Rational(1))
                                                : parse_rationals(o.weights);
    fekete::SearchOptions so{o.budget, fekete_seed(ctx, o.seed), o.starts, ctx.threads};
    const auto rep = fekete::multiplicativity_check(k1, k2, w, o.N, so);
    char buf[512];
    std::snprintf(buf, sizeof buf,
                  "N = %zu\nlhs t_w(K1 x K2) = %.10g\nt_w'(K1) = %.10g\nt_w''(K2) = %.10g\n"
                  "exponents = %s + %s\nrhs = %.10g\nlhs / rhs = %.10g\npaired configuration estimate = %.10g\n",
                  rep.N, rep.lhs, rep.t1, rep.t2, to_string(rep.exponent1).c_str(), to_string(rep.exponent2).c_str(),
                  rep.rhs, rep.lhs / rep.rhs, rep.product_estimate);
    ctx.out << buf;
    ctx.out << "exact paired identity" << (rep.exact_complex ? " (|det|^2)" : "") << ": "
            << (rep.exact_identity ? "holds" : "FAILS") << (rep.exact_nonzero ? "" : " (zero determinant)") << "\n";
    return rep.exact_identity ? kOk : kMismatch;
}

template <class T>
std::vector<T> reversed(std::vector<T> v) {
    std::reverse(v.begin(), v.end());
    return v;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    Context ctx{out, err};
    CLI::App app{"Exact determinant identities for amalgamated matrices and Vandermonde determinants"};
    app.name("amalgam");
    app.require_subcommand(1);
    app.add_flag("--ci", ctx.ci, "Reject randomized runs without --seed");
    app.add_option("--threads", ctx.threads, "Worker threads for permutation sums and multistart search")
        ->check(CLI::Range(1u, 256u));

    std::size_t m = 0, n = 0;
    auto* syt = app.add_subcommand("syt", "List the standard tableaux of shape n^m");
    syt->add_option("m", m, "rows")->required()->check(CLI::PositiveNumber);
    syt->add_option("n", n, "columns")->required()->check(CLI::PositiveNumber);

    auto* fay = app.add_subcommand("fayers", "Print the pairing matrix F");
    fay->add_option("m", m)->required()->check(CLI::PositiveNumber);
    fay->add_option("n", n)->required()->check(CLI::PositiveNumber);

    auto* phi = app.add_subcommand("phi", "Print the coefficient matrix Phi");
    phi->add_option("m", m)->required()->check(CLI::PositiveNumber);
    phi->add_option("n", n)->required()->check(CLI::PositiveNumber);

    T3Options t3;
    auto* v3 = app.add_subcommand("verify-t3", "Check det(A*B) against the tableau expansion");
    v3->add_option("m", t3.m)->required()->check(CLI::PositiveNumber);
    v3->add_option("n", t3.n)->required()->check(CLI::PositiveNumber);
    v3->add_option("--seed", t3.seed, "Seed for random integer entries in [-9, 9]");
    v3->add_option("--A", t3.a_file, "Matrix A as JSON");
    v3->add_option("--B", t3.b_file, "Matrix B as JSON");
    v3->add_option("--trials", t3.trials, "Random pairs to check")->check(CLI::PositiveNumber);
    v3->add_flag("--symbolic", t3.symbolic, "Verify with indeterminate entries");
    v3->add_flag("--allow-large", t3.allow_large, "Lift the mn <= 6 guard on symbolic runs");
    v3->add_flag("--corrupt-phi", t3.corrupt, "Negative control: add 1 to one coefficient");
    v3->add_option("--corrupt-entry", t3.corrupt_entry, "Entry i,j (1-based) changed by --corrupt-phi");
    v3->add_flag("--terms", t3.print_terms, "Print the expansion terms as JSON");

    T4Options t4;
    auto* v4 = app.add_subcommand("verify-t4", "Check the permutation sum against det(A*B)");
    v4->add_option("m", t4.m)->required()->check(CLI::PositiveNumber);
    v4->add_option("n", t4.n)->required()->check(CLI::PositiveNumber);
    v4->add_option("--alpha", t4.alpha, "Tableau of shape n^m (default: the column-filled tableau)");
    v4->add_option("--beta", t4.beta, "Tableau of shape m^n (default: conjugate of the column-filled tableau)");
    v4->add_option("--seed", t4.seed);
    v4->add_option("--trials", t4.trials)->check(CLI::PositiveNumber);
    v4->add_option("--perm-cap", t4.perm_cap, "Largest mn accepted");

    T4Options kp;
    auto* ka = app.add_subcommand("kappa", "Measure the integer ratio of the permutation sum to det(A*B)");
    ka->add_option("m", kp.m)->required()->check(CLI::PositiveNumber);
    ka->add_option("n", kp.n)->required()->check(CLI::PositiveNumber);
    ka->add_option("--alpha", kp.alpha)->required();
    ka->add_option("--beta", kp.beta)->required();
    ka->add_option("--seed", kp.seed);
    ka->add_option("--perm-cap", kp.perm_cap);

    VdmOptions vo;
    auto* vd = app.add_subcommand("vdm", "Multivariable Vandermonde determinant and its expansions");
    vd->add_option("--degrees", vo.degrees, "N_1,...,N_r")->required()->delimiter(',');
    vd->add_option("--split", vo.split, "k: first factor takes coordinates 1..k (default 1)");
    vd->add_option("--order", vo.order)->check(CLI::IsMember({"kron", "deglex"}));
    vd->add_option("--points", vo.points, "Points file [{\"z\": [...]}, ...]");
    vd->add_option("--seed", vo.seed, "Random rational points");
    vd->add_flag("--symbolic", vo.symbolic, "Indeterminate points x_i, y_i, ...");
    vd->add_option("--expand", vo.expand)->check(CLI::IsMember({"t1", "t2", "both"}));

    HomOptions ho;
    auto* vh = app.add_subcommand("vdm-hom", "Homogeneous Vandermonde determinant, kernel and extractions");
    vh->add_option("--N", ho.N, "Total degree bound");
    vh->add_option("--r", ho.r, "Number of variables")->check(CLI::PositiveNumber);
    vh->add_option("--points", ho.points);
    vh->add_option("--seed", ho.seed);
    vh->add_flag("--kernel", ho.kernel, "Print an exact kernel basis");
    vh->add_option("--extract", ho.extract, "separated | mixed | mixed-origin: conic determinant from a 9x9 amalgam");

    FeketeOptions fo;
    auto* fk = app.add_subcommand("fekete", "Fekete-point search and transfinite diameter estimates (CSV)");
    fk->add_option("--set", fo.set, "Compact set descriptor (JSON)")->required();
    fk->add_option("--weights", fo.weights, "w_1,...,w_r (rationals, default all 1)");
    fk->add_option("--degrees", fo.degrees, "Explicit N_1,...,N_r for a single search")->delimiter(',');
    fk->add_option("--N-list", fo.n_list, "Values of N")->delimiter(',');
    fk->add_option("--budget", fo.budget, "Exchange sweeps per start")->check(CLI::PositiveNumber);
    fk->add_option("--starts", fo.starts)->check(CLI::PositiveNumber);
    fk->add_option("--seed", fo.seed);

    MultOptions mo;
    auto* mu = app.add_subcommand("multiplicativity", "Compare t_w(K1 x K2) with the product of factor estimates");
    mu->add_option("--set1", mo.set1)->required();
    mu->add_option("--set2", mo.set2)->required();
    mu->add_option("--weights", mo.weights);
    mu->add_option("--N", mo.N)->required()->check(CLI::PositiveNumber);
    mu->add_option("--budget", mo.budget)->check(CLI::PositiveNumber);
    mu->add_option("--starts", mo.starts)->check(CLI::PositiveNumber);
    mu->add_option("--seed", mo.seed);

    try {
        auto rev = reversed(args);
        app.parse(rev);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return kUsage;
    }

    try {
        ctx.syt_cap = syt_cap_from_env();
        if (syt->parsed()) {
            for (const auto& t : enumerate_syt(m, n, ctx.syt_cap)) out << to_text(t) << "\n";
            return kOk;
        }
        if (fay->parsed()) {
            print_basis_matrix(ctx, fayers_matrix(m, n, ctx.syt_cap));
            return kOk;
        }
        if (phi->parsed()) {
            print_basis_matrix(ctx, phi_matrix(m, n, ctx.syt_cap));
            return kOk;
        }
        if (v3->parsed()) return verify_t3(ctx, t3);
        if (v4->parsed()) return verify_t4(ctx, t4);
        if (ka->parsed()) {
            const Integer k = kappa(kp.m, kp.n, parse_tableau(kp.alpha), parse_tableau(kp.beta),
                                    resolve_seed(ctx, kp.seed, "kappa"), PermSumOptions{kp.perm_cap, ctx.threads});
            out << "kappa = " << to_string(k) << "\n";
            return kOk;
        }
        if (vd->parsed()) return vdm(ctx, vo);
        if (vh->parsed()) return vdm_hom(ctx, ho);
        if (fk->parsed()) return fekete_cmd(ctx, fo);
        if (mu->parsed()) return multiplicativity_cmd(ctx, mo);
    } catch (const UsageError& e) {
        err << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const ResourceError& e) {
        err << "resource limit: " << e.what() << "\n";
        return kResource;
    } catch (const ConsistencyError& e) {
        err << "consistency failure: " << e.what() << "\n";
        return kMismatch;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return kUsage;
    }
    return kUsage;
}

}  // namespace amalgam::cli
