#include "sqwalk/character.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <string>

#include <Eigen/Dense>

#include "sqwalk/errors.hpp"

namespace sqwalk {

namespace {

using Complex = std::complex<double>;

constexpr double kRowOrthoTol = 1e-8;
constexpr double kColOrthoTol = 1e-7;
constexpr double kDegreeSnapTol = 1e-6;
constexpr double kLatticeTol = 1e-8;
constexpr double kRealRowTol = 1e-8;
// Above this many classes, checking candidates against every class matrix is
// replaced by checks against extra random combinations.
constexpr int kFullVerifyClassLimit = 200;

std::vector<std::vector<int>> class_members(const ClassPartition& cls, int order) {
    std::vector<std::vector<int>> members(cls.num_classes);
    for (int e = 0; e < order; ++e)
        members[cls.class_of[e]].push_back(e);
    return members;
}

// cnt[j*s + k] = number of pairs (x in K_i, y in K_j) with x*y in K_k.
// Dividing column k by |K_k| yields the class-algebra structure constants,
// exactly (the division is integral).
void product_counts(const GroupTable& g, const ClassPartition& cls,
                    const std::vector<int>& members_i, std::vector<int64_t>& cnt) {
    const int s = cls.num_classes;
    std::fill(cnt.begin(), cnt.end(), int64_t{0});
    for (int x : members_i) {
        const int32_t* row = g.mul.data() + static_cast<std::size_t>(x) * g.order;
        for (int y = 0; y < g.order; ++y)
            ++cnt[static_cast<std::size_t>(cls.class_of[y]) * s + cls.class_of[row[y]]];
    }
}

// w = A_i * v for the structure-constant matrix A_i hiding inside cnt.
void apply_class_matrix(const std::vector<int64_t>& cnt, const ClassPartition& cls,
                        const std::vector<Complex>& v, std::vector<Complex>& w) {
    const int s = cls.num_classes;
    for (int j = 0; j < s; ++j) {
        Complex acc = 0.0;
        const int64_t* row = cnt.data() + static_cast<std::size_t>(j) * s;
        for (int k = 0; k < s; ++k)
            if (row[k] != 0)
                acc += static_cast<double>(row[k]) / cls.class_sizes[k] * v[k];
        w[j] = acc;
    }
}

double residual_vs_scaled(const std::vector<Complex>& w, const std::vector<Complex>& v,
                          Complex scale) {
    double resid = 0.0;
    double magnitude = 1.0;
    for (std::size_t j = 0; j < w.size(); ++j) {
        resid = std::max(resid, std::abs(w[j] - scale * v[j]));
        magnitude = std::max(magnitude, std::abs(w[j]));
    }
    return resid / magnitude;
}

Complex fs_weighted_sum(const ClassPartition& cls, const SquaringProfile& profile, int order,
                        std::span<const Complex> chi) {
    // (1/|G|) sum over classes of |K| * r(rep) * chi(class): the square-root
    // counts pulled back through the class structure.
    Complex acc = 0.0;
    for (int c = 0; c < cls.num_classes; ++c)
        acc += static_cast<double>(cls.class_sizes[c]) * profile.r[cls.representatives[c]] *
               chi[c];
    return acc / static_cast<double>(order);
}

bool snap_indicator(Complex raw, int& out) {
    if (std::abs(raw.imag()) > kLatticeTol)
        return false;
    long nearest = std::lround(raw.real());
    if (nearest < -1 || nearest > 1)
        return false;
    if (std::abs(raw.real() - static_cast<double>(nearest)) > kLatticeTol)
        return false;
    out = static_cast<int>(nearest);
    return true;
}

bool row_is_real(std::span<const Complex> chi) {
    for (const Complex& z : chi)
        if (std::abs(z.imag()) > kRealRowTol)
            return false;
    return true;
}

struct BuildFailure {
    std::string reason;
};

struct CandidateRow {
    std::vector<Complex> chi;
    int degree = 0;
    int fs = 0;
};

long long round6(double x) { return std::llround(x * 1e6); }

bool row_less(const CandidateRow& a, const CandidateRow& b) {
    if (a.degree != b.degree)
        return a.degree < b.degree;
    for (std::size_t c = 0; c < a.chi.size(); ++c) {
        auto ar = round6(a.chi[c].real()), br = round6(b.chi[c].real());
        if (ar != br)
            return ar < br;
        auto ai = round6(a.chi[c].imag()), bi = round6(b.chi[c].imag());
        if (ai != bi)
            return ai < bi;
    }
    return false;
}

} // namespace

CharacterTable character_table(const GroupTable& g, const ClassPartition& cls,
                               const CharacterOptions& options) {
    const int s = cls.num_classes;
    const int n = g.order;
    if (s > options.max_classes)
        throw OrderCapExceeded("group has " + std::to_string(s) +
                               " conjugacy classes; the dense character solver is capped at " +
                               std::to_string(options.max_classes));

    const auto members = class_members(cls, n);
    const SquaringProfile profile = squaring_profile(g);

    // The structure-constant counts are exact integers and seed-independent;
    // cache them when they fit.
    const bool cache_counts = s <= kFullVerifyClassLimit;
    std::vector<std::vector<int64_t>> cnt_cache;
    if (cache_counts) {
        cnt_cache.resize(s);
        for (int i = 0; i < s; ++i) {
            cnt_cache[i].assign(static_cast<std::size_t>(s) * s, 0);
            product_counts(g, cls, members[i], cnt_cache[i]);
        }
    }

    std::vector<int64_t> cnt_scratch(static_cast<std::size_t>(s) * s);
    auto counts_for = [&](int i) -> const std::vector<int64_t>& {
        if (cache_counts)
            return cnt_cache[i];
        product_counts(g, cls, members[i], cnt_scratch);
        return cnt_scratch;
    };

    auto build_combination = [&](uint64_t seed) {
        std::mt19937_64 rng(seed);
        std::uniform_real_distribution<double> coeff(-1.0, 1.0);
        Eigen::MatrixXd m = Eigen::MatrixXd::Zero(s, s);
        for (int i = 0; i < s; ++i) {
            const double ci = coeff(rng);
            const auto& cnt = counts_for(i);
            for (int j = 0; j < s; ++j)
                for (int k = 0; k < s; ++k) {
                    int64_t c = cnt[static_cast<std::size_t>(j) * s + k];
                    if (c != 0)
                        m(j, k) += ci * (static_cast<double>(c) / cls.class_sizes[k]);
                }
        }
        return m;
    };

    std::string last_reason = "no attempt made";

    for (int attempt = 0; attempt < options.max_attempts; ++attempt) {
        const uint64_t attempt_seed = options.seed + static_cast<uint64_t>(attempt);
        Eigen::MatrixXd m = build_combination(attempt_seed);
        Eigen::EigenSolver<Eigen::MatrixXd> solver(m, /*computeEigenvectors=*/true);
        if (solver.info() != Eigen::Success) {
            last_reason = "eigensolver did not converge";
            continue;
        }
        const Eigen::MatrixXcd vecs = solver.eigenvectors();

        // Normalize candidates so the identity-class component is 1; that
        // component is the class size over the degree, which is never 0.
        std::vector<std::vector<Complex>> omegas;
        omegas.reserve(s);
        bool bad = false;
        for (int col = 0; col < s && !bad; ++col) {
            Complex pivot = vecs(0, col);
            if (std::abs(pivot) < 1e-10 * vecs.col(col).norm()) {
                bad = true;
                break;
            }
            std::vector<Complex> omega(s);
            for (int j = 0; j < s; ++j)
                omega[j] = vecs(j, col) / pivot;
            omegas.push_back(std::move(omega));
        }
        if (bad) {
            last_reason = "candidate eigenvector vanishes on the identity class";
            continue;
        }

        // Every candidate must be a simultaneous eigenvector; its eigenvalue
        // for A_i is its own i-th component.
        std::vector<Complex> w(s);
        bool verified = true;
        if (cache_counts) {
            for (int i = 0; i < s && verified; ++i) {
                const auto& cnt = counts_for(i);
                for (const auto& omega : omegas) {
                    apply_class_matrix(cnt, cls, omega, w);
                    if (residual_vs_scaled(w, omega, omega[i]) > 1e-8) {
                        verified = false;
                        break;
                    }
                }
            }
        } else {
            // Too many classes for the exhaustive check; three independent
            // random combinations pin the eigenbasis with the same effect.
            for (int probe = 1; probe <= 3 && verified; ++probe) {
                Eigen::MatrixXd mprobe =
                    build_combination(attempt_seed + 0x9e3779b9ull * probe);
                for (const auto& omega : omegas) {
                    Eigen::VectorXcd v(s);
                    for (int j = 0; j < s; ++j)
                        v(j) = omega[j];
                    Eigen::VectorXcd wv = mprobe * v;
                    std::vector<Complex> wstd(wv.data(), wv.data() + s);
                    if (residual_vs_scaled(wstd, omega, wv(0)) > 1e-8) {
                        verified = false;
                        break;
                    }
                }
            }
        }
        if (!verified) {
            last_reason = "candidate is not a simultaneous eigenvector (degenerate split)";
            continue;
        }

        // Degrees from the norm relation, then character values.
        std::vector<CandidateRow> rows;
        rows.reserve(s);
        bool ok = true;
        long long degree_square_sum = 0;
        for (const auto& omega : omegas) {
            double denom = 0.0;
            for (int j = 0; j < s; ++j)
                denom += std::norm(omega[j]) / cls.class_sizes[j];
            double d_raw = std::sqrt(static_cast<double>(n) / denom);
            long d = std::lround(d_raw);
            if (d < 1 || std::abs(d_raw - static_cast<double>(d)) >
                             kDegreeSnapTol * std::max(1.0, d_raw)) {
                ok = false;
                last_reason = "degree " + std::to_string(d_raw) + " does not snap to an integer";
                break;
            }
            CandidateRow row;
            row.degree = static_cast<int>(d);
            degree_square_sum += d * d;
            row.chi.resize(s);
            for (int j = 0; j < s; ++j)
                row.chi[j] = static_cast<double>(d) * omega[j] /
                             static_cast<double>(cls.class_sizes[j]);
            rows.push_back(std::move(row));
        }
        if (!ok)
            continue;
        if (degree_square_sum != n) {
            last_reason = "degree squares sum to " + std::to_string(degree_square_sum) +
                          ", expected " + std::to_string(n);
            continue;
        }

        // Orthogonality gates.
        double row_resid = 0.0;
        for (int a = 0; a < s; ++a)
            for (int b = a; b < s; ++b) {
                Complex ip = 0.0;
                for (int c = 0; c < s; ++c)
                    ip += static_cast<double>(cls.class_sizes[c]) * rows[a].chi[c] *
                          std::conj(rows[b].chi[c]);
                ip /= static_cast<double>(n);
                row_resid = std::max(row_resid, std::abs(ip - (a == b ? 1.0 : 0.0)));
            }
        if (row_resid > kRowOrthoTol) {
            last_reason = "row orthonormality residual " + std::to_string(row_resid);
            continue;
        }
        double col_resid = 0.0;
        for (int c = 0; c < s; ++c)
            for (int c2 = c; c2 < s; ++c2) {
                Complex ip = 0.0;
                for (int a = 0; a < s; ++a)
                    ip += rows[a].chi[c] * std::conj(rows[a].chi[c2]);
                double expect = c == c2 ? static_cast<double>(n) / cls.class_sizes[c] : 0.0;
                col_resid = std::max(col_resid, std::abs(ip - expect));
            }
        if (col_resid > kColOrthoTol) {
            last_reason = "column orthogonality residual " + std::to_string(col_resid);
            continue;
        }

        // Indicators, with the real-rows-only sanity cross-check.
        ok = true;
        for (auto& row : rows) {
            Complex raw = fs_weighted_sum(cls, profile, n, row.chi);
            if (!snap_indicator(raw, row.fs)) {
                ok = false;
                last_reason = "indicator off the {-1,0,1} lattice";
                break;
            }
            if ((std::abs(row.fs) == 1) != row_is_real(row.chi)) {
                ok = false;
                last_reason = "indicator/realness mismatch";
                break;
            }
        }
        if (!ok)
            continue;

        // Principal character first, the rest by (degree, rounded values).
        int principal = -1;
        for (int a = 0; a < s; ++a) {
            bool all_one = true;
            for (int c = 0; c < s && all_one; ++c)
                all_one = std::abs(rows[a].chi[c] - 1.0) < 1e-8;
            if (all_one) {
                principal = a;
                break;
            }
        }
        if (principal < 0) {
            last_reason = "no principal character found";
            continue;
        }
        std::swap(rows[0], rows[principal]);
        std::sort(rows.begin() + 1, rows.end(), row_less);

        CharacterTable table;
        table.group_order = n;
        table.num_classes = s;
        table.principal_index = 0;
        table.values.resize(static_cast<std::size_t>(s) * s);
        table.degrees.resize(s);
        table.fs_indicators.resize(s);
        for (int a = 0; a < s; ++a) {
            table.degrees[a] = rows[a].degree;
            table.fs_indicators[a] = rows[a].fs;
            for (int c = 0; c < s; ++c)
                table.values[static_cast<std::size_t>(a) * s + c] = rows[a].chi[c];
        }
        return table;
    }

    throw EigensplitFailure("character table not separated after " +
                            std::to_string(options.max_attempts) + " attempts; last failure: " +
                            last_reason);
}

int fs_indicator(const GroupTable& g, const ClassPartition& cls, const SquaringProfile& profile,
                 std::span<const Complex> chi) {
    if (static_cast<int>(chi.size()) != cls.num_classes)
        throw Error(ErrorKind::Usage, "character row length does not match the class count");
    Complex raw = fs_weighted_sum(cls, profile, g.order, chi);
    int snapped = 0;
    if (!snap_indicator(raw, snapped))
        throw IndicatorOffLattice("indicator value (" + std::to_string(raw.real()) + ", " +
                                  std::to_string(raw.imag()) +
                                  "i) is not within 1e-8 of {-1, 0, 1}");
    return snapped;
}

std::vector<int> real_nonprincipal(const CharacterTable& table) {
    std::vector<int> out;
    for (int a = 0; a < table.num_classes; ++a)
        if (a != table.principal_index && table.fs_indicators[a] != 0)
            out.push_back(a);
    return out;
}

std::vector<int> linear_real(const CharacterTable& table) {
    std::vector<int> out;
    for (int a : real_nonprincipal(table))
        if (table.degrees[a] == 1)
            out.push_back(a);
    return out;
}

nlohmann::ordered_json character_table_json(const CharacterTable& table,
                                            const ClassPartition& cls, const GroupTable& g) {
    nlohmann::ordered_json doc;
    doc["group_order"] = table.group_order;
    doc["num_classes"] = table.num_classes;
    auto classes = nlohmann::ordered_json::array();
    for (int c = 0; c < cls.num_classes; ++c) {
        classes.push_back({{"size", cls.class_sizes[c]},
                           {"representative", g.elements[cls.representatives[c]].cycle_string()}});
    }
    doc["classes"] = std::move(classes);
    auto rows = nlohmann::ordered_json::array();
    for (int a = 0; a < table.num_classes; ++a) {
        auto row = nlohmann::ordered_json::array();
        for (int c = 0; c < table.num_classes; ++c) {
            auto z = table.value(a, c);
            row.push_back({z.real(), z.imag()});
        }
        rows.push_back(std::move(row));
    }
    doc["rows"] = std::move(rows);
    doc["degrees"] = table.degrees;
    doc["fs_indicators"] = table.fs_indicators;
    doc["principal_index"] = table.principal_index;
    return doc;
}

} // namespace sqwalk
