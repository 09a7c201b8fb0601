#pragma once

// Experimental harness for the bialgebraic classification: sample algebraic
// varieties, push through the coordinatewise Gamma map, estimate the
// dimension of the Zariski closure from the numerical rank of a monomial
// feature matrix, classify trivially bialgebraic defining systems, and run
// the negative-integer decay probe.

#include <Eigen/Dense>
#include <Eigen/SVD>
#include <algorithm>
#include <complex>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "gammalab/almost_integer.hpp"
#include "gammalab/errors.hpp"
#include "gammalab/expression.hpp"
#include "gammalab/gamma_core.hpp"
#include "gammalab/rng.hpp"

namespace gammalab {

struct VarietySpec {
    enum class Kind { parametrized, implicit };
    Kind kind = Kind::parametrized;
    int ambient_dim = 0;
    std::vector<std::string> param_names;  // parametrized
    std::vector<std::string> coord_exprs;  // parametrized: one per coordinate
    std::vector<std::string> equations;    // implicit
    std::string description;

    void validate() const {
        if (kind == Kind::parametrized) {
            if (static_cast<int>(coord_exprs.size()) != ambient_dim)
                throw argument_error("VarietySpec: coordinate count != ambient_dim");
            if (param_names.empty() ||
                static_cast<int>(param_names.size()) >= ambient_dim)
                throw argument_error(
                    "VarietySpec: need 1 <= #parameters < ambient_dim (proper subvariety)");
        } else {
            if (equations.empty())
                throw argument_error("VarietySpec: implicit spec needs at least one equation");
        }
    }
};

/// Text format: "param <names> : <expr> ; <expr> ; ..."  or
/// "implicit : <poly> ; <poly> ; ...", e.g. "param z : z ; z+1 ; z+2".
inline VarietySpec parse_variety(const std::string& text) {
    const auto colon = text.find(':');
    if (colon == std::string::npos)
        throw argument_error("parse_variety: expected '<kind> ... : ...'");
    std::string head = text.substr(0, colon);
    std::string body = text.substr(colon + 1);
    auto split = [](const std::string& s, char sep) {
        std::vector<std::string> out;
        std::size_t start = 0;
        while (start <= s.size()) {
            const auto p = s.find(sep, start);
            std::string piece = s.substr(start, p == std::string::npos ? p : p - start);
            const auto a = piece.find_first_not_of(" \t");
            const auto b = piece.find_last_not_of(" \t");
            if (a != std::string::npos) out.push_back(piece.substr(a, b - a + 1));
            if (p == std::string::npos) break;
            start = p + 1;
        }
        return out;
    };
    std::vector<std::string> head_words = split(head, ' ');
    if (head_words.empty()) throw argument_error("parse_variety: empty kind");
    VarietySpec spec;
    spec.description = text;
    if (head_words[0] == "param" || head_words[0] == "parametrized") {
        spec.kind = VarietySpec::Kind::parametrized;
        spec.param_names.assign(head_words.begin() + 1, head_words.end());
        if (spec.param_names.empty()) spec.param_names = {"z"};
        spec.coord_exprs = split(body, ';');
        spec.ambient_dim = static_cast<int>(spec.coord_exprs.size());
    } else if (head_words[0] == "implicit") {
        spec.kind = VarietySpec::Kind::implicit;
        spec.equations = split(body, ';');
        int n = 0;
        for (const auto& eq : spec.equations) n = std::max(n, parse_multipoly(eq).nvars);
        spec.ambient_dim = n;
    } else {
        throw argument_error("parse_variety: kind must be 'param' or 'implicit'");
    }
    spec.validate();
    return spec;
}

/// Axis-aligned box in parameter space (same box for every parameter).
struct SampleRegion {
    double re_lo = 1.0, re_hi = 5.0, im_lo = -2.0, im_hi = 2.0;
};

/// Deterministic parameter draws mapped through the coordinate functions,
/// rejecting points with any coordinate within 1e-6 of a non-positive
/// integer (the domain of the n-fold Gamma map).
inline std::vector<std::vector<std::complex<double>>> sample_variety(
    const VarietySpec& spec, int count, const SampleRegion& region, std::uint64_t seed) {
    spec.validate();
    if (spec.kind != VarietySpec::Kind::parametrized)
        throw argument_error(
            "sample_variety: implicit specs must be locally parametrized by the caller");
    if (count < 20) throw argument_error("sample_variety: count must be >= 20");
    std::vector<ExprPtr> coords;
    for (const auto& e : spec.coord_exprs)
        coords.push_back(parse_expression(e, spec.param_names));
    rng gen(seed);
    std::vector<std::vector<std::complex<double>>> out;
    long attempts = 0;
    const long max_attempts = 10000L * count;
    while (static_cast<int>(out.size()) < count) {
        if (++attempts > max_attempts)
            throw sampling_error(
                "sample_variety: region appears to lie inside the excluded pole set");
        std::vector<std::complex<double>> params(spec.param_names.size());
        for (auto& p : params)
            p = {gen.uniform(region.re_lo, region.re_hi),
                 gen.uniform(region.im_lo, region.im_hi)};
        std::vector<std::complex<double>> pt;
        bool ok = true;
        for (const auto& c : coords) {
            std::complex<double> v;
            try {
                v = eval_expr(c, params);
            } catch (const error&) {
                ok = false;
                break;
            }
            if (pole_distance(v) < 1e-6) {
                ok = false;
                break;
            }
            pt.push_back(v);
        }
        if (ok) out.push_back(std::move(pt));
    }
    return out;
}

struct PushedPoints {
    std::vector<std::vector<ComplexSample>> points;  // coordinatewise Gamma values
    std::vector<std::size_t> skipped;                // indices rejected at a pole
    double max_error_estimate = 0.0;
};

/// Coordinatewise Gamma in log-safe form.
inline PushedPoints gamma_push(const std::vector<std::vector<std::complex<double>>>& pts,
                               const PrecisionConfig& cfg = {}) {
    PushedPoints out;
    for (std::size_t i = 0; i < pts.size(); ++i) {
        std::vector<ComplexSample> row;
        bool ok = true;
        double err = 0.0;
        for (const auto& z : pts[i]) {
            try {
                GammaValue g = eval_gamma(z, cfg);
                err = std::max(err, g.error_estimate);
                row.push_back(g.value);
            } catch (const pole_error&) {
                ok = false;
                break;
            }
        }
        if (ok) {
            out.points.push_back(std::move(row));
            out.max_error_estimate = std::max(out.max_error_estimate, err);
        } else {
            out.skipped.push_back(i);
        }
    }
    return out;
}

struct RelationReport {
    int degree_bound = 0;
    int ambient_dim = 0;
    long sample_count = 0;
    std::vector<double> singular_values;  // descending, from the full degree
    double rank_tol = 0.0;
    int est_dimension = 0;
    std::vector<int> rank_profile;  // numerical rank at degree 1..D
    std::vector<double> coordinate_scales;  // applied log rescaling, recorded
    // kernel relation on the original (unscaled) coordinates, unit norm
    std::optional<std::vector<std::pair<std::vector<int>, std::complex<double>>>>
        kernel_coeffs;
    double kernel_holdout_residual = 0.0;
};

namespace detail {

/// Multi-indices of total degree <= D in n variables, graded order.
inline std::vector<std::vector<int>> monomials_up_to(int n, int D) {
    std::vector<std::vector<int>> out;
    if (n == 0) return out;
    std::vector<int> work(n, 0);
    auto fill = [&](auto&& self, int pos, int remaining) -> void {
        if (pos == n - 1) {
            work[pos] = remaining;
            out.push_back(work);
            return;
        }
        for (int e = remaining; e >= 0; --e) {
            work[pos] = e;
            self(self, pos + 1, remaining - e);
        }
        work[pos] = 0;
    };
    for (int d = 0; d <= D; ++d) fill(fill, 0, d);
    return out;
}

inline long long binom_ll(int n, int k) {
    if (k < 0 || k > n) return 0;
    long long r = 1;
    for (int j = 1; j <= k; ++j) r = r * (n - k + j) / j;
    return r;
}

}  // namespace detail

/// Numerical algebraic-dependence detection: evaluate all monomials of
/// total degree <= D on the points, take the SVD, and read the rank at the
/// relative tolerance. The dimension estimate compares the observed rank
/// profile with the reference profile C(d + D', D') of a generic
/// d-dimensional sample: independent affine-linear relations cut the
/// ambient dimension directly, and any remaining deficiency at the top
/// degree signals one more hypersurface condition. Estimated, never proven.
inline RelationReport relation_rank(const std::vector<std::vector<ComplexSample>>& pts,
                                    int D, double tol = 1e-8) {
    if (pts.empty()) throw argument_error("relation_rank: no points");
    const int n = static_cast<int>(pts.front().size());
    if (D < 1) throw argument_error("relation_rank: degree bound must be >= 1");
    const auto monos = detail::monomials_up_to(n, D);
    const long n_mono = static_cast<long>(monos.size());
    const long N = static_cast<long>(pts.size());
    if (N < 3 * n_mono)
        throw argument_error("relation_rank: need at least 3x as many points as monomials");

    // log rescaling per coordinate, recorded in the report
    std::vector<double> scale_log(n, 0.0);
    for (const auto& row : pts)
        for (int j = 0; j < n; ++j) scale_log[j] += row[j].log_abs;
    for (int j = 0; j < n; ++j) scale_log[j] /= static_cast<double>(N);
    double dyn_range = 0.0;
    for (const auto& row : pts)
        for (int j = 0; j < n; ++j)
            dyn_range = std::max(dyn_range, std::abs(row[j].log_abs - scale_log[j]));
    if (dyn_range > 30.0)
        throw conditioning_error(
            "relation_rank: coordinate log-magnitudes span more than 30; "
            "choose a tighter sampling region");

    // feature matrix on the held-in split, scaled coordinates
    const long N_fit = N - N / 5;
    Eigen::MatrixXcd A(N_fit, n_mono);
    for (long i = 0; i < N_fit; ++i)
        for (long k = 0; k < n_mono; ++k) {
            double la = 0.0, ar = 0.0;
            for (int j = 0; j < n; ++j) {
                la += monos[k][j] * (pts[i][j].log_abs - scale_log[j]);
                ar += monos[k][j] * pts[i][j].arg_cont;
            }
            A(i, k) = std::exp(la) * std::complex<double>(std::cos(ar), std::sin(ar));
        }
    // column equilibration: rank-neutral, keeps the tolerance meaningful
    std::vector<double> col_norm(n_mono, 1.0);
    for (long k = 0; k < n_mono; ++k) {
        const double nk = A.col(k).norm();
        if (nk > 0.0) {
            col_norm[k] = nk;
            A.col(k) /= nk;
        }
    }

    RelationReport rep;
    rep.degree_bound = D;
    rep.ambient_dim = n;
    rep.sample_count = N;
    rep.rank_tol = tol;
    rep.coordinate_scales = scale_log;

    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(A, Eigen::ComputeThinV);
    const auto& sv = svd.singularValues();
    for (int i = 0; i < sv.size(); ++i) rep.singular_values.push_back(sv(i));

    // rank profile at each degree prefix (monomials are graded)
    for (int d = 1; d <= D; ++d) {
        long cols = 0;
        for (const auto& mi : monos) {
            int t = 0;
            for (int e : mi) t += e;
            if (t <= d) ++cols;
        }
        Eigen::JacobiSVD<Eigen::MatrixXcd> svd_d(A.leftCols(cols));
        const auto& s = svd_d.singularValues();
        int rank = 0;
        for (int i = 0; i < s.size(); ++i)
            if (s(i) > tol * s(0)) ++rank;
        rep.rank_profile.push_back(rank);
    }

    const int rank_D = rep.rank_profile.back();
    const long full_D = detail::binom_ll(n + D, D);
    const int rank_1 = rep.rank_profile.front();
    const int linear_relations = static_cast<int>(n + 1 - rank_1);
    const int n_eff = n - linear_relations;
    const long expect_eff = detail::binom_ll(n_eff + D, D);
    int est = n_eff;
    if (rank_D < std::min<long>(expect_eff, N_fit)) est = n_eff - 1;
    rep.est_dimension = std::max(0, std::min(est, n));

    if (rank_D < full_D) {
        // kernel vector: right-singular vector of the smallest singular value
        Eigen::VectorXcd v = svd.matrixV().col(n_mono - 1);
        // unscale: undo the column equilibration, then the coordinate
        // rescaling exp(-<mi, s>), back to the original monomials
        std::vector<std::pair<std::vector<int>, std::complex<double>>> kernel;
        double norm = 0.0;
        std::vector<std::complex<double>> coeffs(n_mono);
        for (long k = 0; k < n_mono; ++k) {
            double ls = 0.0;
            for (int j = 0; j < n; ++j) ls += monos[k][j] * scale_log[j];
            coeffs[k] = v(k) / col_norm[k] * std::exp(-ls);
            norm += std::norm(coeffs[k]);
        }
        norm = std::sqrt(norm);
        for (long k = 0; k < n_mono; ++k) {
            const std::complex<double> c = coeffs[k] / norm;
            if (std::abs(c) > 1e-13) kernel.emplace_back(monos[k], c);
        }
        // validate on the held-out split: relative residual of the relation
        double worst = 0.0;
        for (long i = N_fit; i < N; ++i) {
            std::complex<double> acc(0.0, 0.0);
            double scale = 0.0;
            for (const auto& [mi, cf] : kernel) {
                double la = 0.0, ar = 0.0;
                for (int j = 0; j < n; ++j) {
                    la += mi[j] * pts[i][j].log_abs;
                    ar += mi[j] * pts[i][j].arg_cont;
                }
                const std::complex<double> term =
                    cf * std::exp(la) * std::complex<double>(std::cos(ar), std::sin(ar));
                acc += term;
                scale = std::max(scale, std::abs(term));
            }
            if (scale > 0.0) worst = std::max(worst, std::abs(acc) / scale);
        }
        rep.kernel_holdout_residual = worst;
        if (worst <= 1e-6) rep.kernel_coeffs = std::move(kernel);
    }
    return rep;
}

// --------------------------------------------------------------------------
//  trivially bialgebraic classifier
// --------------------------------------------------------------------------

struct TrivialClassification {
    bool trivially_bialgebraic = false;
    std::vector<std::vector<int>> equality_classes;  // 1-based coordinate indices
    std::map<int, std::complex<double>> pinned;      // X_i = w
    std::string reason;
};

/// True iff every equation normalizes to X_i - X_k or X_i - w.
inline TrivialClassification classify_trivially_bialgebraic(
    const std::vector<MultiPoly>& equations) {
    TrivialClassification out;
    if (equations.empty())
        throw argument_error("classify_trivially_bialgebraic: no equations");
    int n = 0;
    for (const auto& eq : equations) n = std::max(n, eq.nvars);

    std::vector<int> parent(n + 1);
    for (int i = 0; i <= n; ++i) parent[i] = i;
    std::function<int(int)> find = [&](int a) {
        return parent[a] == a ? a : parent[a] = find(parent[a]);
    };

    for (const auto& eq : equations) {
        std::vector<std::pair<std::vector<int>, std::complex<double>>> monos(
            eq.coeffs.begin(), eq.coeffs.end());
        if (monos.empty()) {
            out.reason = "zero equation";
            return out;
        }
        auto degree_of = [](const std::vector<int>& mi) {
            int d = 0;
            for (int e : mi) d += e;
            return d;
        };
        auto linear_index = [&](const std::vector<int>& mi) -> int {
            // returns 1-based variable index when mi is a single X_j, else 0
            int idx = 0;
            for (std::size_t j = 0; j < mi.size(); ++j) {
                if (mi[j] == 0) continue;
                if (mi[j] != 1 || idx != 0) return 0;
                idx = static_cast<int>(j) + 1;
            }
            return idx;
        };
        bool form_ok = false;
        if (monos.size() == 1) {
            // c * X_i  ->  X_i = 0 (constant pin)
            const int i1 = linear_index(monos[0].first);
            if (i1 > 0) {
                out.pinned[i1] = {0.0, 0.0};
                form_ok = true;
            }
        } else if (monos.size() == 2) {
            const int d0 = degree_of(monos[0].first), d1 = degree_of(monos[1].first);
            if (d0 == 1 && d1 == 1) {
                const int i0 = linear_index(monos[0].first);
                const int i1 = linear_index(monos[1].first);
                // X_i = X_k needs coefficients in ratio -1 after normalization
                if (i0 > 0 && i1 > 0 && i0 != i1 &&
                    std::abs(monos[0].second + monos[1].second) <
                        1e-12 * std::abs(monos[0].second)) {
                    const int a = find(i0), b = find(i1);
                    parent[std::max(a, b)] = std::min(a, b);
                    form_ok = true;
                }
            } else if ((d0 == 0) != (d1 == 0)) {
                const auto& lin = d0 == 0 ? monos[1] : monos[0];
                const auto& cst = d0 == 0 ? monos[0] : monos[1];
                const int i1 = linear_index(lin.first);
                if (i1 > 0) {
                    out.pinned[i1] = -cst.second / lin.second;
                    form_ok = true;
                }
            }
        }
        if (!form_ok) {
            out.reason = "an equation is not of the form X_i - X_k or X_i - w";
            return out;
        }
    }
    out.trivially_bialgebraic = true;
    out.reason = "all equations are coordinate equalities or constant pins";
    std::map<int, std::vector<int>> classes;
    for (int i = 1; i <= n; ++i) classes[find(i)].push_back(i);
    for (auto& [root, members] : classes)
        if (members.size() > 1) out.equality_classes.push_back(members);
    return out;
}

inline TrivialClassification classify_trivially_bialgebraic(
    const std::vector<std::string>& equations, int nvars = 0) {
    std::vector<MultiPoly> polys;
    int n = nvars;
    for (const auto& t : equations) n = std::max(n, parse_multipoly(t).nvars);
    for (const auto& t : equations) polys.push_back(parse_multipoly(t, n));
    for (auto& p : polys) p.nvars = n;
    return classify_trivially_bialgebraic(polys);
}

// --------------------------------------------------------------------------
//  negative-integer decay probe
// --------------------------------------------------------------------------

struct DecayRow {
    long n = 0;
    std::complex<double> branch_value{0.0, 0.0};
    long long nearest_int = 0;
    double gap = 0.0;
    std::optional<double> bound_log;  // log(2 pi |c_i|) - log Gamma(l_n)
    std::optional<std::string> note;
};

struct DecayTable {
    std::vector<DecayRow> rows;
    std::optional<std::complex<double>> stabilized_c;  // Gamma(branch) limit, if any
    FitResult fit;
    double fit_C = 1.0;
};

/// Evaluate a curve branch at -n for n in [n_from, n_to], record the gap to
/// the nearest integer (ties up), attach the Lemma 3.2 bound when the
/// Gamma-image of the branch stabilizes near a nonzero constant, and feed
/// the sequence -branch(-n) to the almost-integer fit.
inline DecayTable negative_integer_probe(const std::string& branch_expr, long n_from,
                                         long n_to, double fit_C = 1.0,
                                         const PrecisionConfig& cfg = {}) {
    if (n_to - n_from + 1 < 10)
        throw argument_error("negative_integer_probe: need at least 10 rows");
    const ExprPtr branch = parse_expression(branch_expr, {"x"});
    DecayTable table;
    table.fit_C = fit_C;
    std::vector<std::complex<double>> gamma_values;
    std::vector<std::pair<long long, std::complex<double>>> fit_samples;
    for (long n = n_from; n <= n_to; ++n) {
        DecayRow row;
        row.n = n;
        std::complex<double> b;
        try {
            const std::complex<double> arg(-static_cast<double>(n), 0.0);
            b = eval_expr(branch, std::span<const std::complex<double>>(&arg, 1));
        } catch (const error& e) {
            row.note = std::string("branch undefined: ") + e.what();
            table.rows.push_back(row);
            continue;
        }
        row.branch_value = b;
        row.nearest_int = nearest_integer_tie_up(b.real());
        row.gap = std::abs(b - std::complex<double>(static_cast<double>(row.nearest_int), 0.0));
        try {
            const GammaValue g = eval_gamma(b, cfg);
            if (std::isfinite(g.value.log_abs))
                gamma_values.push_back(g.value.value());
        } catch (const error&) {
            // pole of Gamma at the branch value: no image value to track
        }
        fit_samples.emplace_back(n, -b);
        table.rows.push_back(row);
    }

    // stabilization of the Gamma image over the later half
    if (gamma_values.size() >= 4) {
        const std::size_t half = gamma_values.size() / 2;
        bool stable = true;
        for (std::size_t i = half + 1; i < gamma_values.size(); ++i) {
            const double a = std::abs(gamma_values[i]), b2 = std::abs(gamma_values[i - 1]);
            if (!(a > 1e-8 && a < 1e8) ||
                std::abs(gamma_values[i] - gamma_values[i - 1]) > 0.1 * std::max(a, b2)) {
                stable = false;
                break;
            }
        }
        if (stable) table.stabilized_c = gamma_values.back();
    }
    if (table.stabilized_c) {
        const double log2pic =
            std::log(2.0 * engine_traits<double>::pi() * std::abs(*table.stabilized_c));
        for (auto& row : table.rows) {
            if (row.note) continue;
            const long long ell = -row.nearest_int;
            if (ell >= 1)
                row.bound_log =
                    log2pic - engine_d::log_gamma_real(static_cast<double>(ell));
        }
    }
    if (fit_samples.size() >= 10) table.fit = almost_integer_fit(fit_samples, fit_C);
    return table;
}

// --------------------------------------------------------------------------
//  hypersurface demo (X2^2 + X1 X2 = X1 X3 on the Gamma image of (z, z+1, z+2))
// --------------------------------------------------------------------------

struct HypersurfaceStats {
    long sample_count = 0;
    double max_rel_residual = 0.0;
    double median_rel_residual = 0.0;
    bool pass = false;  // max <= 1e-9
};

inline HypersurfaceStats hypersurface_demo(int count, std::uint64_t seed,
                                           const SampleRegion& region = {},
                                           const PrecisionConfig& cfg = {}) {
    if (count < 50) throw argument_error("hypersurface_demo: count must be >= 50");
    rng gen(seed);
    std::vector<double> residuals;
    long made = 0, attempts = 0;
    while (made < count) {
        if (++attempts > 10000L * count)
            throw sampling_error("hypersurface_demo: region inside the excluded set");
        const std::complex<double> z{gen.uniform(region.re_lo, region.re_hi),
                                     gen.uniform(region.im_lo, region.im_hi)};
        if (pole_distance(z) < 1e-6 || pole_distance(z + 1.0) < 1e-6 ||
            pole_distance(z + 2.0) < 1e-6)
            continue;
        // log-safe: terms X2^2, X1 X2, X1 X3 as sums of log Gamma
        ComplexSample l1, l2, l3;
        try {
            const GammaValue g1 = eval_gamma(z, cfg);
            const GammaValue g2 = eval_gamma(z + 1.0, cfg);
            const GammaValue g3 = eval_gamma(z + 2.0, cfg);
            l1 = g1.value;
            l2 = g2.value;
            l3 = g3.value;
        } catch (const pole_error&) {
            continue;
        }
        const double la = 2.0 * l2.log_abs;
        const double lb = l1.log_abs + l2.log_abs;
        const double lc = l1.log_abs + l3.log_abs;
        const double s = std::max({la, lb, lc});
        auto term = [&](double lmag, double ang) {
            return std::exp(lmag - s) * std::complex<double>(std::cos(ang), std::sin(ang));
        };
        const std::complex<double> t1 = term(la, 2.0 * l2.arg_cont);
        const std::complex<double> t2 = term(lb, l1.arg_cont + l2.arg_cont);
        const std::complex<double> t3 = term(lc, l1.arg_cont + l3.arg_cont);
        const double denom = std::max({std::abs(t1), std::abs(t2), std::abs(t3)});
        residuals.push_back(std::abs(t1 + t2 - t3) / denom);
        ++made;
    }
    std::sort(residuals.begin(), residuals.end());
    HypersurfaceStats st;
    st.sample_count = made;
    st.max_rel_residual = residuals.back();
    st.median_rel_residual = residuals[residuals.size() / 2];
    st.pass = st.max_rel_residual <= 1e-9;
    return st;
}

}  // namespace gammalab
