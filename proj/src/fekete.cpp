#include "amalgam/fekete.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <numbers>
#include <numeric>
#include <thread>

#include "amalgam/errors.hpp"
#include "amalgam/linalg.hpp"
#include "amalgam/kernels.hpp"
#include "amalgam/random.hpp"

namespace amalgam::fekete {

namespace {

bool finite(Complex z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); }

}  // namespace

void CompactSet::validate() const {
    std::visit(
        [](const auto& k) {
            using K = std::decay_t<decltype(k)>;
            if constexpr (std::is_same_v<K, Interval>) {
                if (!std::isfinite(k.a) || !std::isfinite(k.b)) throw DomainError("interval is unbounded");
                if (k.a > k.b) throw DomainError("interval has a > b");
            } else if constexpr (std::is_same_v<K, Disk>) {
                if (!finite(k.center) || !std::isfinite(k.radius)) throw DomainError("disk is unbounded");
                if (k.radius < 0) throw DomainError("disk has negative radius");
            } else if constexpr (std::is_same_v<K, Cloud>) {
                if (k.points.empty()) throw DomainError("point cloud is empty");
                const std::size_t d = k.points.front().size();
                if (d == 0) throw DomainError("cloud points have no coordinates");
                for (const auto& p : k.points) {
                    if (p.size() != d) throw DomainError("cloud points differ in dimension");
                    for (auto z : p) {
                        if (!finite(z)) throw DomainError("cloud point is not finite");
                    }
                }
            } else {
                if (k.factors.empty()) throw DomainError("product has no factors");
                for (const auto& f : k.factors) f.validate();
            }
        },
        kind);
}

std::size_t CompactSet::dimension() const {
    return std::visit(
        [](const auto& k) -> std::size_t {
            using K = std::decay_t<decltype(k)>;
            if constexpr (std::is_same_v<K, Cloud>) {
                return k.points.empty() ? 0 : k.points.front().size();
            } else if constexpr (std::is_same_v<K, Product>) {
                std::size_t d = 0;
                for (const auto& f : k.factors) d += f.dimension();
                return d;
            } else {
                return 1;
            }
        },
        kind);
}

CompactSet interval(double a, double b) { return CompactSet{Interval{a, b}}; }
CompactSet disk(Complex center, double radius) { return CompactSet{Disk{center, radius}}; }
CompactSet product(std::vector<CompactSet> factors) { return CompactSet{Product{std::move(factors)}}; }

namespace {

Complex complex_from_json(const nlohmann::json& j) {
    if (j.is_number()) return {j.get<double>(), 0.0};
    if (j.is_array() && j.size() == 2 && j[0].is_number() && j[1].is_number()) {
        return {j[0].get<double>(), j[1].get<double>()};
    }
    throw ParseError("expected a number or a [re, im] pair, got " + j.dump());
}

nlohmann::json complex_to_json(Complex z) {
    if (z.imag() == 0) return z.real();
    return nlohmann::json::array({z.real(), z.imag()});
}

}  // namespace

CompactSet from_json(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("kind") || !j["kind"].is_string()) {
        throw ParseError("set descriptor needs a string field 'kind'");
    }
    const auto kind = j["kind"].get<std::string>();
    CompactSet out;
    try {
        if (kind == "interval") {
            out = interval(j.at("a").get<double>(), j.at("b").get<double>());
        } else if (kind == "disk") {
            out = disk(j.contains("center") ? complex_from_json(j["center"]) : Complex{}, j.at("radius").get<double>());
        } else if (kind == "cloud") {
            Cloud c;
            for (const auto& p : j.at("points")) {
                std::vector<Complex> pt;
                if (p.is_array()) {
                    for (const auto& z : p) pt.push_back(complex_from_json(z));
                } else {
                    pt.push_back(complex_from_json(p));
                }
                c.points.push_back(std::move(pt));
            }
            out = CompactSet{std::move(c)};
        } else if (kind == "product") {
            std::vector<CompactSet> fs;
            for (const auto& f : j.at("factors")) fs.push_back(from_json(f));
            out = product(std::move(fs));
        } else {
            throw ParseError("unknown set kind '" + kind + "'");
        }
    } catch (const nlohmann::json::exception& e) {
        throw ParseError("malformed '" + kind + "' descriptor: " + e.what());
    }
    out.validate();
    return out;
}

nlohmann::json to_json(const CompactSet& k) {
    return std::visit(
        [](const auto& s) -> nlohmann::json {
            using K = std::decay_t<decltype(s)>;
            if constexpr (std::is_same_v<K, Interval>) {
                return {{"kind", "interval"}, {"a", s.a}, {"b", s.b}};
            } else if constexpr (std::is_same_v<K, Disk>) {
                return {{"kind", "disk"}, {"center", complex_to_json(s.center)}, {"radius", s.radius}};
            } else if constexpr (std::is_same_v<K, Cloud>) {
                nlohmann::json pts = nlohmann::json::array();
                for (const auto& p : s.points) {
                    nlohmann::json q = nlohmann::json::array();
                    for (auto z : p) q.push_back(complex_to_json(z));
                    pts.push_back(std::move(q));
                }
                return {{"kind", "cloud"}, {"points", std::move(pts)}};
            } else {
                nlohmann::json fs = nlohmann::json::array();
                for (const auto& f : s.factors) fs.push_back(to_json(f));
                return {{"kind", "product"}, {"factors", std::move(fs)}};
            }
        },
        k.kind);
}

Rational degree_D(const std::vector<std::size_t>& degrees) {
    if (degrees.empty()) throw ShapeError("degree list is empty");
    Integer prod = 1;
    Integer sum = 0;
    for (auto d : degrees) {
        if (d == 0) throw ShapeError("degrees must be at least 1");
        prod *= static_cast<unsigned long>(d);
        sum += static_cast<unsigned long>(d);
    }
    Rational out(prod * (sum - static_cast<unsigned long>(degrees.size())), 2);
    out.canonicalize();
    return out;
}

namespace {

std::size_t count_of(const std::vector<std::size_t>& degrees) {
    return std::accumulate(degrees.begin(), degrees.end(), std::size_t{1}, std::multiplies<>());
}

// Kron-ordered monomial row of one point, written into split arrays of length ∏N.
void monomial_row(const std::vector<std::size_t>& degrees, const std::vector<Complex>& z, double* re, double* im) {
    std::size_t len = 1;
    re[0] = 1;
    im[0] = 0;
    for (std::size_t c = 0; c < degrees.size(); ++c) {
        const Complex zc = z[c];
        for (std::size_t p = 1; p < degrees[c]; ++p) {
            for (std::size_t idx = 0; idx < len; ++idx) {
                const Complex prev(re[idx + (p - 1) * len], im[idx + (p - 1) * len]);
                const Complex v = prev * zc;
                re[idx + p * len] = v.real();
                im[idx + p * len] = v.imag();
            }
        }
        len *= degrees[c];
    }
}

struct Lu {
    std::vector<Complex> a;  // packed LU, row-major
    std::vector<std::size_t> perm;
    double log_det = -std::numeric_limits<double>::infinity();
    bool singular = true;
};

Lu factor(std::vector<Complex> a, std::size_t n) {
    Lu lu;
    lu.perm.resize(n);
    std::iota(lu.perm.begin(), lu.perm.end(), std::size_t{0});
    double log_det = 0;
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t p = k;
        double best = std::abs(a[k * n + k]);
        for (std::size_t i = k + 1; i < n; ++i) {
            const double v = std::abs(a[i * n + k]);
            if (v > best) {
                best = v;
                p = i;
            }
        }
        if (best == 0 || !std::isfinite(best)) {
            lu.a = std::move(a);
            return lu;
        }
        if (p != k) {
            for (std::size_t j = 0; j < n; ++j) std::swap(a[p * n + j], a[k * n + j]);
            std::swap(lu.perm[p], lu.perm[k]);
        }
        log_det += std::log(best);
        const Complex piv = a[k * n + k];
        for (std::size_t i = k + 1; i < n; ++i) {
            const Complex f = a[i * n + k] / piv;
            a[i * n + k] = f;
            if (f == Complex{}) continue;
            for (std::size_t j = k + 1; j < n; ++j) a[i * n + j] -= f * a[k * n + j];
        }
    }
    lu.a = std::move(a);
    lu.log_det = log_det;
    lu.singular = false;
    return lu;
}

// H = (V^{-1})^T, i.e. row j of H is column j of V^{-1}.
void inverse_transpose(const Lu& lu, std::size_t n, std::vector<double>& hre, std::vector<double>& him) {
    std::vector<Complex> x(n);
    for (std::size_t col = 0; col < n; ++col) {
        // solve V x = e_col
        for (std::size_t i = 0; i < n; ++i) x[i] = lu.perm[i] == col ? Complex(1, 0) : Complex(0, 0);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t k = 0; k < i; ++k) x[i] -= lu.a[i * n + k] * x[k];
        for (std::size_t i = n; i-- > 0;) {
            for (std::size_t k = i + 1; k < n; ++k) x[i] -= lu.a[i * n + k] * x[k];
            x[i] /= lu.a[i * n + i];
        }
        // x is column `col` of V^{-1}; it becomes row `col` of H
        for (std::size_t k = 0; k < n; ++k) {
            hre[col * n + k] = x[k].real();
            him[col * n + k] = x[k].imag();
        }
    }
}

// One coordinate block of K: an interval, a disk or a cloud, occupying coordinates
// [offset, offset + dim).
struct Block {
    std::variant<Interval, Disk, Cloud> set;
    std::size_t offset;
    std::size_t dim;
};

void flatten(const CompactSet& k, std::vector<Block>& out, std::size_t& offset) {
    std::visit(
        [&](const auto& s) {
            using K = std::decay_t<decltype(s)>;
            if constexpr (std::is_same_v<K, Product>) {
                for (const auto& f : s.factors) flatten(f, out, offset);
            } else {
                const std::size_t d = CompactSet{s}.dimension();
                out.push_back(Block{s, offset, d});
                offset += d;
            }
        },
        k.kind);
}

constexpr std::size_t kGlobalSteps = 32;
constexpr int kLocalSteps = 4;
constexpr std::size_t kDiskRadii = 8;

void candidates(const Block& b, const std::vector<Complex>& current, int level, std::vector<std::vector<Complex>>& out) {
    out.clear();
    std::visit(
        [&](const auto& s) {
            using K = std::decay_t<decltype(s)>;
            if constexpr (std::is_same_v<K, Interval>) {
                const double h0 = (s.b - s.a) / static_cast<double>(kGlobalSteps);
                if (h0 == 0) {
                    out.push_back({Complex(s.a, 0)});
                    return;
                }
                if (level == 0) {
                    for (std::size_t k = 0; k <= kGlobalSteps; ++k) {
                        out.push_back({Complex(k == kGlobalSteps ? s.b : s.a + h0 * static_cast<double>(k), 0)});
                    }
                    return;
                }
                const double h = std::ldexp(h0, -level);
                const double x = current[0].real();
                for (int t = -kLocalSteps; t <= kLocalSteps; ++t) {
                    out.push_back({Complex(std::clamp(x + h * t, s.a, s.b), 0)});
                }
            } else if constexpr (std::is_same_v<K, Disk>) {
                const double dr0 = s.radius / static_cast<double>(kDiskRadii);
                const double dt0 = 2 * std::numbers::pi / static_cast<double>(kGlobalSteps);
                if (s.radius == 0) {
                    out.push_back({s.center});
                    return;
                }
                if (level == 0) {
                    out.push_back({s.center});
                    for (std::size_t k = 1; k <= kDiskRadii; ++k) {
                        const double r = k == kDiskRadii ? s.radius : dr0 * static_cast<double>(k);
                        for (std::size_t l = 0; l < kGlobalSteps; ++l) {
                            out.push_back({s.center + std::polar(r, dt0 * static_cast<double>(l))});
                        }
                    }
                    return;
                }
                const Complex rel = current[0] - s.center;
                const double r0 = std::abs(rel);
                const double t0 = std::arg(rel);
                const double dr = std::ldexp(dr0, -level);
                const double dt = std::ldexp(dt0, -level);
                for (int a = -kLocalSteps; a <= kLocalSteps; ++a) {
                    const double r = std::clamp(r0 + dr * a, 0.0, s.radius);
                    for (int c = -kLocalSteps; c <= kLocalSteps; ++c) out.push_back({s.center + std::polar(r, t0 + dt * c)});
                }
            } else {
                for (const auto& p : s.points) out.push_back(p);
            }
        },
        b.set);
}

// Per-block starting samples, clustered toward the boundary.
std::vector<Complex> random_sample(const Block& b, SeededEntries& rng) {
    return std::visit(
        [&](const auto& s) -> std::vector<Complex> {
            using K = std::decay_t<decltype(s)>;
            if constexpr (std::is_same_v<K, Interval>) {
                const double u = rng.unit();
                return {Complex(s.a + (s.b - s.a) * 0.5 * (1 - std::cos(std::numbers::pi * u)), 0)};
            } else if constexpr (std::is_same_v<K, Disk>) {
                const double r = s.radius * std::pow(rng.unit(), 0.25);
                return {s.center + std::polar(r, 2 * std::numbers::pi * rng.unit())};
            } else {
                const auto idx = static_cast<std::size_t>(rng.uniform_int(0, static_cast<std::int64_t>(s.points.size()) - 1));
                return s.points[idx];
            }
        },
        b.set);
}

// Node k of N along a one-dimensional block: Chebyshev-Lobatto on intervals, equal angles near
// the rim of disks, with a small jitter.
Complex tensor_node(const Block& b, std::size_t k, std::size_t N, SeededEntries& rng) {
    return std::visit(
        [&](const auto& s) -> Complex {
            using K = std::decay_t<decltype(s)>;
            const double jitter = rng.unit() - 0.5;
            if constexpr (std::is_same_v<K, Interval>) {
                if (N == 1) return {0.5 * (s.a + s.b), 0};
                const double t = std::numbers::pi * (static_cast<double>(k) + 0.1 * jitter) / static_cast<double>(N - 1);
                const double x = s.a + (s.b - s.a) * 0.5 * (1 - std::cos(t));
                return {std::clamp(x, s.a, s.b), 0};
            } else if constexpr (std::is_same_v<K, Disk>) {
                const double t = 2 * std::numbers::pi * (static_cast<double>(k) + 0.1 * jitter) / static_cast<double>(N);
                return s.center + std::polar(s.radius * (1 - 0.02 * rng.unit()), t);
            } else {
                return {};
            }
        },
        b.set);
}

struct SearchState {
    const std::vector<std::size_t>& degrees;
    const std::vector<Block>& blocks;
    const simd::Kernels& kern;
    std::size_t n;
    std::size_t r;
    std::vector<std::vector<Complex>> pts;
    std::vector<double> vre, vim, hre, him;
    double log_det = 0;

    bool refresh() {
        std::vector<Complex> a(n * n);
        for (std::size_t i = 0; i < n * n; ++i) a[i] = {vre[i], vim[i]};
        const Lu lu = factor(std::move(a), n);
        if (lu.singular) return false;
        log_det = lu.log_det;
        inverse_transpose(lu, n, hre, him);
        return true;
    }

    void set_row(std::size_t i) { monomial_row(degrees, pts[i], &vre[i * n], &vim[i * n]); }
};

bool all_one_dimensional(const std::vector<Block>& blocks) {
    return std::all_of(blocks.begin(), blocks.end(),
                       [](const Block& b) { return b.dim == 1 && !std::holds_alternative<Cloud>(b.set); });
}

void initialise(SearchState& st, std::size_t start, std::size_t attempt, SeededEntries& rng) {
    const bool tensor = start == 0 && attempt == 0 && all_one_dimensional(st.blocks) && st.blocks.size() == st.r;
    for (std::size_t i = 0; i < st.n; ++i) {
        st.pts[i].assign(st.r, Complex{});
        std::size_t rest = i;
        for (std::size_t c = 0; c < st.blocks.size(); ++c) {
            const auto& b = st.blocks[c];
            if (tensor) {
                const std::size_t N = st.degrees[c];
                st.pts[i][b.offset] = tensor_node(b, rest % N, N, rng);
                rest /= N;
            } else {
                const auto s = random_sample(b, rng);
                std::copy(s.begin(), s.end(), st.pts[i].begin() + static_cast<std::ptrdiff_t>(b.offset));
            }
        }
    }
    // distinct cloud points where the cloud is large enough
    for (const auto& b : st.blocks) {
        const auto* cloud = std::get_if<Cloud>(&b.set);
        if (!cloud || cloud->points.size() < st.n) continue;
        std::vector<std::size_t> idx(cloud->points.size());
        std::iota(idx.begin(), idx.end(), std::size_t{0});
        for (std::size_t i = idx.size(); i > 1; --i) {
            std::swap(idx[i - 1], idx[static_cast<std::size_t>(rng.uniform_int(0, static_cast<std::int64_t>(i) - 1))]);
        }
        for (std::size_t i = 0; i < st.n; ++i) {
            std::copy(cloud->points[idx[i]].begin(), cloud->points[idx[i]].end(),
                      st.pts[i].begin() + static_cast<std::ptrdiff_t>(b.offset));
        }
    }
    for (std::size_t i = 0; i < st.n; ++i) st.set_row(i);
}

SearchResult run_start(const std::vector<std::size_t>& degrees, const std::vector<Block>& blocks, std::size_t r,
                       std::size_t budget, std::uint64_t seed, std::size_t start) {
    const std::size_t n = count_of(degrees);
    SeededEntries rng(seed);
    SearchState st{degrees, blocks, simd::active_kernels(), n, r, std::vector<std::vector<Complex>>(n),
                   std::vector<double>(n * n), std::vector<double>(n * n), std::vector<double>(n * n),
                   std::vector<double>(n * n)};
    bool ok = false;
    for (std::size_t attempt = 0; attempt < 64 && !ok; ++attempt) {
        initialise(st, start, attempt, rng);
        ok = st.refresh();
    }
    if (!ok) {
        throw DegenerateInputError("could not find a configuration with nonzero Vandermonde determinant");
    }
    SearchResult best{st.pts, st.log_det};

    std::vector<std::vector<Complex>> cand;
    std::vector<double> rowre(n), rowim(n), bestre(n), bestim(n), ure(n), uim(n);
    std::vector<simd::ComplexSum> w(n);
    for (std::size_t sweep = 0; sweep < budget; ++sweep) {
        const int level = static_cast<int>(std::min<std::size_t>(sweep / 4, 2));
        for (std::size_t i = 0; i < n; ++i) {
            for (const auto& b : blocks) {
                const std::vector<Complex> current(st.pts[i].begin() + static_cast<std::ptrdiff_t>(b.offset),
                                                   st.pts[i].begin() + static_cast<std::ptrdiff_t>(b.offset + b.dim));
                candidates(b, current, level, cand);
                double best_mag = 1.0 + 1e-12;
                simd::ComplexSum best_d{0, 0};
                std::vector<Complex> best_point;
                std::vector<Complex> trial = st.pts[i];
                for (const auto& c : cand) {
                    std::copy(c.begin(), c.end(), trial.begin() + static_cast<std::ptrdiff_t>(b.offset));
                    monomial_row(degrees, trial, rowre.data(), rowim.data());
                    const auto d = st.kern.dot(rowre.data(), rowim.data(), &st.hre[i * n], &st.him[i * n], n);
                    const double mag = std::hypot(d.re, d.im);
                    if (mag > best_mag) {
                        best_mag = mag;
                        best_d = d;
                        best_point = trial;
                        bestre = rowre;
                        bestim = rowim;
                    }
                }
                if (best_point.empty()) continue;
                // Sherman-Morrison update of H after replacing row i by the winning row
                for (std::size_t k = 0; k < n; ++k) {
                    ure[k] = bestre[k] - st.vre[i * n + k];
                    uim[k] = bestim[k] - st.vim[i * n + k];
                }
                for (std::size_t j = 0; j < n; ++j) w[j] = st.kern.dot(ure.data(), uim.data(), &st.hre[j * n], &st.him[j * n], n);
                const Complex dinv = 1.0 / Complex(best_d.re, best_d.im);
                for (std::size_t j = 0; j < n; ++j) {
                    if (j == i) continue;
                    const Complex c = -Complex(w[j].re, w[j].im) * dinv;
                    st.kern.axpy(&st.hre[j * n], &st.him[j * n], c.real(), c.imag(), &st.hre[i * n], &st.him[i * n], n);
                }
                for (std::size_t k = 0; k < n; ++k) {
                    const Complex h = Complex(st.hre[i * n + k], st.him[i * n + k]) * dinv;
                    st.hre[i * n + k] = h.real();
                    st.him[i * n + k] = h.imag();
                }
                std::copy(bestre.begin(), bestre.end(), st.vre.begin() + static_cast<std::ptrdiff_t>(i * n));
                std::copy(bestim.begin(), bestim.end(), st.vim.begin() + static_cast<std::ptrdiff_t>(i * n));
                st.pts[i] = std::move(best_point);
                st.log_det += std::log(best_mag);
            }
        }
        // re-factor to shed accumulated rounding in H
        if (st.refresh() && st.log_det > best.log_det) best = SearchResult{st.pts, st.log_det};
    }
    return best;
}

}  // namespace

double log_abs_det(const std::vector<std::size_t>& degrees, const std::vector<std::vector<Complex>>& points) {
    const std::size_t n = count_of(degrees);
    if (points.size() != n) {
        throw ShapeError("expected " + std::to_string(n) + " points, got " + std::to_string(points.size()));
    }
    std::vector<double> re(n), im(n);
    std::vector<Complex> a(n * n);
    for (std::size_t i = 0; i < n; ++i) {
        if (points[i].size() != degrees.size()) throw ShapeError("point has the wrong number of coordinates");
        monomial_row(degrees, points[i], re.data(), im.data());
        for (std::size_t k = 0; k < n; ++k) a[i * n + k] = {re[k], im[k]};
    }
    return factor(std::move(a), n).log_det;
}

SearchResult fekete_search(const CompactSet& k, const std::vector<std::size_t>& degrees, const SearchOptions& opts) {
    k.validate();
    if (opts.budget == 0) throw ArgumentError("search budget must be positive");
    if (opts.starts == 0) throw ArgumentError("need at least one start");
    const std::size_t r = k.dimension();
    if (degrees.size() != r) {
        throw ShapeError("degree list of length " + std::to_string(degrees.size()) + " for a set of dimension " +
                         std::to_string(r));
    }
    for (auto d : degrees) {
        if (d == 0) throw ShapeError("degrees must be at least 1");
    }
    std::vector<Block> blocks;
    std::size_t offset = 0;
    flatten(k, blocks, offset);

    std::vector<std::optional<SearchResult>> results(opts.starts);
    std::vector<std::exception_ptr> errors(opts.starts);
    auto work = [&](std::size_t s) {
        try {
            results[s] = run_start(degrees, blocks, r, opts.budget, derive_seed(opts.seed, s), s);
        } catch (...) {
            errors[s] = std::current_exception();
        }
    };
    const unsigned workers = std::max(1u, std::min<unsigned>(opts.threads, static_cast<unsigned>(opts.starts)));
    if (workers == 1) {
        for (std::size_t s = 0; s < opts.starts; ++s) work(s);
    } else {
        std::vector<std::jthread> pool;
        for (unsigned t = 0; t < workers; ++t) {
            pool.emplace_back([&, t] {
                for (std::size_t s = t; s < opts.starts; s += workers) work(s);
            });
        }
    }
    std::optional<SearchResult> best;
    for (std::size_t s = 0; s < opts.starts; ++s) {
        if (results[s] && (!best || results[s]->log_det > best->log_det)) best = std::move(results[s]);
    }
    if (!best) std::rethrow_exception(errors.front());
    return *best;
}

TransfiniteEstimate transfinite_estimate(const CompactSet& k, const std::vector<Rational>& w,
                                         const std::vector<std::size_t>& n_list, const SearchOptions& opts) {
    if (w.size() != k.dimension()) {
        throw ShapeError(std::to_string(w.size()) + " weights for a set of dimension " + std::to_string(k.dimension()));
    }
    for (const auto& wi : w) {
        if (wi <= 0) throw ArgumentError("weights must be positive");
    }
    TransfiniteEstimate out;
    out.weights = w;
    for (auto N : n_list) {
        std::vector<std::size_t> degrees;
        bool integral = true;
        for (const auto& wi : w) {
            const Rational d = wi * static_cast<unsigned long>(N);
            if (!is_integral(d) || d < 1) {
                integral = false;
                break;
            }
            degrees.push_back(d.get_num().get_ui());
        }
        if (!integral) continue;
        const Rational D = degree_D(degrees);
        if (D == 0) continue;
        SearchOptions o = opts;
        o.seed = derive_seed(opts.seed, N);
        auto res = fekete_search(k, degrees, o);
        EstimateRow row{N, degrees, D, res.log_det, std::exp(res.log_det / D.get_d())};
        out.rows.push_back(std::move(row));
        out.best = std::move(res);
    }
    if (out.rows.empty()) throw ArgumentError("no N in the list makes every w_i N a positive integer with D > 0");
    return out;
}

std::vector<std::vector<Complex>> pair_configurations(const std::vector<std::vector<Complex>>& p1,
                                                      const std::vector<std::vector<Complex>>& p2) {
    std::vector<std::vector<Complex>> out;
    out.reserve(p1.size() * p2.size());
    for (const auto& b : p2) {
        for (const auto& a : p1) {
            std::vector<Complex> z = a;
            z.insert(z.end(), b.begin(), b.end());
            out.push_back(std::move(z));
        }
    }
    return out;
}

namespace {

Rational snap(double x) {
    Rational q(Integer(static_cast<long>(std::llround(std::ldexp(x, 16)))), Integer(65536));
    q.canonicalize();
    return q;
}

struct GaussRational {
    Rational re;
    Rational im;
};

// Real and imaginary parts of the Vandermonde matrix at exact points.
std::pair<Matrix<Rational>, Matrix<Rational>> exact_vdm(const std::vector<std::size_t>& degrees,
                                                        const std::vector<std::vector<GaussRational>>& pts) {
    const std::size_t n = count_of(degrees);
    Matrix<Rational> re(pts.size(), n);
    Matrix<Rational> im(pts.size(), n);
    for (std::size_t i = 0; i < pts.size(); ++i) {
        std::vector<GaussRational> row(n);
        row[0] = {1, 0};
        std::size_t len = 1;
        for (std::size_t c = 0; c < degrees.size(); ++c) {
            const auto& z = pts[i][c];
            for (std::size_t p = 1; p < degrees[c]; ++p) {
                for (std::size_t idx = 0; idx < len; ++idx) {
                    const auto& prev = row[idx + (p - 1) * len];
                    row[idx + p * len] = {prev.re * z.re - prev.im * z.im, prev.re * z.im + prev.im * z.re};
                }
            }
            len *= degrees[c];
        }
        for (std::size_t k = 0; k < n; ++k) {
            re(i, k) = row[k].re;
            im(i, k) = row[k].im;
        }
    }
    return {std::move(re), std::move(im)};
}

// det of a rational matrix with dyadic entries: clear each row's denominators, then Bareiss.
Rational det_row_scaled(const Matrix<Rational>& m) {
    Matrix<Integer> a(m.rows(), m.cols());
    Integer scale = 1;
    for (std::size_t i = 0; i < m.rows(); ++i) {
        Integer l = 1;
        for (std::size_t j = 0; j < m.cols(); ++j) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m(i, j).get_den_mpz_t());
        for (std::size_t j = 0; j < m.cols(); ++j) a(i, j) = m(i, j).get_num() * (l / m(i, j).get_den());
        scale *= l;
    }
    Rational out(det(a), scale);
    out.canonicalize();
    return out;
}

// |det|^2 for a complex matrix X + iY via the real matrix [[X, -Y], [Y, X]].
Rational abs2_det(const Matrix<Rational>& x, const Matrix<Rational>& y) {
    const std::size_t n = x.rows();
    Matrix<Rational> big(2 * n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            big(i, j) = x(i, j);
            big(i, j + n) = -y(i, j);
            big(i + n, j) = y(i, j);
            big(i + n, j + n) = x(i, j);
        }
    }
    return det_row_scaled(big);
}

Rational rational_pow(const Rational& q, std::size_t e) {
    Rational out(Integer(1));
    mpz_pow_ui(out.get_num_mpz_t(), q.get_num_mpz_t(), e);
    mpz_pow_ui(out.get_den_mpz_t(), q.get_den_mpz_t(), e);
    out.canonicalize();
    return out;
}

std::vector<std::vector<GaussRational>> snap_all(const std::vector<std::vector<Complex>>& pts) {
    std::vector<std::vector<GaussRational>> out;
    for (const auto& p : pts) {
        std::vector<GaussRational> q;
        for (auto z : p) q.push_back({snap(z.real()), snap(z.imag())});
        out.push_back(std::move(q));
    }
    return out;
}

}  // namespace

ExactCheck exact_product_identity(const std::vector<std::size_t>& deg1, const std::vector<std::vector<Complex>>& p1,
                                  const std::vector<std::size_t>& deg2, const std::vector<std::vector<Complex>>& p2) {
    const std::size_t m = count_of(deg1);
    const std::size_t n = count_of(deg2);
    if (p1.size() != m || p2.size() != n) throw ShapeError("factor configurations have the wrong size");
    const auto q1 = snap_all(p1);
    const auto q2 = snap_all(p2);
    std::vector<std::vector<GaussRational>> q;
    for (const auto& b : q2) {
        for (const auto& a : q1) {
            auto z = a;
            z.insert(z.end(), b.begin(), b.end());
            q.push_back(std::move(z));
        }
    }
    std::vector<std::size_t> deg = deg1;
    deg.insert(deg.end(), deg2.begin(), deg2.end());

    auto real_only = [](const std::vector<std::vector<GaussRational>>& pts) {
        for (const auto& p : pts)
            for (const auto& z : p)
                if (z.im != 0) return false;
        return true;
    };
    const auto [x, y] = exact_vdm(deg, q);
    const auto [x1, y1] = exact_vdm(deg1, q1);
    const auto [x2, y2] = exact_vdm(deg2, q2);
    ExactCheck out;
    if (real_only(q)) {
        const Rational lhs = det_row_scaled(x);
        const Rational rhs = rational_pow(det_row_scaled(x1), n) * rational_pow(det_row_scaled(x2), m);
        out.holds = lhs == rhs;
        out.nonzero = lhs != 0;
    } else {
        out.complex_mode = true;
        const Rational lhs = abs2_det(x, y);
        const Rational rhs = rational_pow(abs2_det(x1, y1), n) * rational_pow(abs2_det(x2, y2), m);
        out.holds = lhs == rhs;
        out.nonzero = lhs != 0;
    }
    return out;
}

MultiplicativityReport multiplicativity_check(const CompactSet& k1, const CompactSet& k2, const std::vector<Rational>& w,
                                              std::size_t N, const SearchOptions& opts) {
    k1.validate();
    k2.validate();
    const std::size_t d1 = k1.dimension();
    const std::size_t d2 = k2.dimension();
    if (w.size() != d1 + d2) {
        throw ShapeError(std::to_string(w.size()) + " weights for a product of dimension " + std::to_string(d1 + d2));
    }
    const std::vector<Rational> w1(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(d1));
    const std::vector<Rational> w2(w.begin() + static_cast<std::ptrdiff_t>(d1), w.end());
    const Rational s1 = std::accumulate(w1.begin(), w1.end(), Rational(0));
    const Rational s2 = std::accumulate(w2.begin(), w2.end(), Rational(0));

    MultiplicativityReport rep;
    rep.N = N;
    rep.exponent1 = s1 / (s1 + s2);
    rep.exponent2 = s2 / (s1 + s2);

    SearchOptions o = opts;
    o.seed = derive_seed(opts.seed, 1);
    const auto whole = transfinite_estimate(product({k1, k2}), w, {N}, o);
    o.seed = derive_seed(opts.seed, 2);
    const auto first = transfinite_estimate(k1, w1, {N}, o);
    o.seed = derive_seed(opts.seed, 3);
    const auto second = transfinite_estimate(k2, w2, {N}, o);

    rep.lhs = whole.estimate();
    rep.t1 = first.estimate();
    rep.t2 = second.estimate();
    rep.rhs = std::pow(rep.t1, rep.exponent1.get_d()) * std::pow(rep.t2, rep.exponent2.get_d());

    const auto paired = pair_configurations(first.best.points, second.best.points);
    rep.product_log_det = log_abs_det(whole.rows.back().degrees, paired);
    rep.product_estimate = std::exp(rep.product_log_det / whole.rows.back().D.get_d());
    const auto exact =
        exact_product_identity(first.rows.back().degrees, first.best.points, second.rows.back().degrees, second.best.points);
    rep.exact_identity = exact.holds;
    rep.exact_complex = exact.complex_mode;
    rep.exact_nonzero = exact.nonzero;
    return rep;
}

std::string to_csv(const TransfiniteEstimate& e) {
    std::string out = "N,D,log_abs_det,estimate\n";
    char buf[128];
    for (const auto& r : e.rows) {
        std::snprintf(buf, sizeof buf, "%zu,%s,%.12g,%.12g\n", r.N, to_string(r.D).c_str(), r.log_det, r.estimate);
        out += buf;
    }
    return out;
}

}  // namespace amalgam::fekete
