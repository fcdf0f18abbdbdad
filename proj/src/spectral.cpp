#include "spectral.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>

#include "errors.hpp"

namespace ksat {

namespace {

constexpr long kPowerIterationCap = 1'000'000;
constexpr double kRayleighRelTol = 1e-13;
constexpr double kResidualTol = 1e-10;
constexpr double kJacobiOffTol = 1e-12;
constexpr int kJacobiSweepCap = 100;

// One multiply by A + I over adjacency bitsets.
void shifted_matvec(const Graph& g, const std::array<double, kMaxVertices>& x,
                    std::array<double, kMaxVertices>& y) {
    const int n = g.order();
    for (int v = 0; v < n; ++v) {
        double acc = x[v];
        for_each_bit(g.row(v), [&](int u) { acc += x[u]; });
        y[v] = acc;
    }
}

double norm2(const std::array<double, kMaxVertices>& x, int n) {
    double s = 0;
    for (int i = 0; i < n; ++i) s += x[i] * x[i];
    return std::sqrt(s);
}

// Cyclic Jacobi on a dense symmetric matrix, diagonal returned unsorted.
// Rotations sweep the upper triangle until the off-diagonal Frobenius norm
// falls below kJacobiOffTol.
std::vector<double> jacobi_eigenvalues(std::vector<double> a, int n, double* residual_out) {
    auto at = [&](int i, int j) -> double& { return a[i * n + j]; };
    auto off_norm = [&]() {
        double s = 0;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) s += at(i, j) * at(i, j);
        return std::sqrt(2.0 * s);
    };

    int sweeps = 0;
    double off = off_norm();
    while (off >= kJacobiOffTol) {
        if (++sweeps > kJacobiSweepCap)
            throw NumericError("Jacobi eigensolver exceeded its sweep cap");
        for (int p = 0; p < n - 1; ++p) {
            for (int q = p + 1; q < n; ++q) {
                double apq = at(p, q);
                if (apq == 0.0) continue;
                double theta = (at(q, q) - at(p, p)) / (2.0 * apq);
                double t = 1.0 / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
                if (theta < 0.0) t = -t;
                double c = 1.0 / std::sqrt(t * t + 1.0);
                double s = t * c;
                double tau = s / (1.0 + c);

                at(p, p) -= t * apq;
                at(q, q) += t * apq;
                at(p, q) = 0.0;
                for (int k = 0; k < n; ++k) {
                    if (k == p || k == q) continue;
                    double& akp = k < p ? at(k, p) : at(p, k);
                    double& akq = k < q ? at(k, q) : at(q, k);
                    double g1 = akp, g2 = akq;
                    akp = g1 - s * (g2 + g1 * tau);
                    akq = g2 + s * (g1 - g2 * tau);
                }
            }
        }
        off = off_norm();
    }
    if (residual_out) *residual_out = off;

    std::vector<double> values(n);
    for (int i = 0; i < n; ++i) values[i] = at(i, i);
    return values;
}

std::vector<double> adjacency_dense(const Graph& g) {
    const int n = g.order();
    std::vector<double> a(n * n, 0.0);
    for (int v = 0; v < n; ++v)
        for_each_bit(g.row(v), [&](int u) { a[v * n + u] = 1.0; });
    return a;
}

}  // namespace

Spectrum full_spectrum(const Graph& g) {
    Spectrum sp;
    sp.method = SpectralMethod::FullSolver;
    sp.values = jacobi_eigenvalues(adjacency_dense(g), g.order(), &sp.residual);
    std::sort(sp.values.begin(), sp.values.end(), std::greater<>());
    return sp;
}

RadiusResult spectral_radius_detail(const Graph& g) {
    const int n = g.order();
    RadiusResult result;

    std::array<double, kMaxVertices> x{}, y{};
    for (int i = 0; i < n; ++i) x[i] = 1.0 / std::sqrt(static_cast<double>(n));

    double rayleigh = 0.0, prev = -1.0;
    for (long it = 1; it <= kPowerIterationCap; ++it) {
        shifted_matvec(g, x, y);
        rayleigh = 0.0;
        for (int i = 0; i < n; ++i) rayleigh += x[i] * y[i];
        result.iterations = it;

        if (std::abs(rayleigh - prev) <= kRayleighRelTol * std::max(1.0, std::abs(rayleigh))) {
            // Rayleigh stagnation alone can be a plateau; accept only with a
            // small eigen-residual, which certifies distance to a true
            // eigenvalue of the symmetric matrix.
            double res = 0.0;
            for (int i = 0; i < n; ++i) {
                double d = y[i] - rayleigh * x[i];
                res += d * d;
            }
            res = std::sqrt(res);
            if (res <= kResidualTol) {
                result.value = rayleigh - 1.0;
                result.method = SpectralMethod::PowerIteration;
                result.residual = res;
                return result;
            }
        }
        prev = rayleigh;

        double len = norm2(y, n);
        if (len == 0.0) break;  // cannot happen for A + I, defensive exit to the solver
        for (int i = 0; i < n; ++i) x[i] = y[i] / len;
    }

    Spectrum sp = full_spectrum(g);
    result.value = sp.values.front();
    result.method = SpectralMethod::FullSolver;
    result.residual = sp.residual;
    return result;
}

double spectral_radius(const Graph& g) { return spectral_radius_detail(g).value; }

double rayleigh_degree_bound(const Graph& g) {
    return std::sqrt(static_cast<double>(g.sum_degree_squares()) / static_cast<double>(g.order()));
}

QuotientMatrix quotient_matrix(const Graph& g, const std::vector<int>& cell_of) {
    const int n = g.order();
    if (static_cast<int>(cell_of.size()) != n)
        throw std::invalid_argument("partition must assign a cell to each of the " +
                                    std::to_string(n) + " vertices");
    int s = 0;
    for (int c : cell_of) {
        if (c < 0) throw std::invalid_argument("cell ids must be nonnegative");
        s = std::max(s, c + 1);
    }

    QuotientMatrix q;
    q.cells = s;
    q.cell_of = cell_of;
    q.cell_sizes.assign(s, 0);
    std::vector<std::uint64_t> cell_mask(s, 0);
    for (int v = 0; v < n; ++v) {
        ++q.cell_sizes[cell_of[v]];
        cell_mask[cell_of[v]] |= bit(v);
    }
    for (long size : q.cell_sizes)
        if (size == 0) throw std::invalid_argument("every cell of the partition must be nonempty");

    q.average.assign(s * s, Rational{});
    q.value.assign(s * s, 0.0);
    q.equitable = true;
    for (int i = 0; i < s; ++i) {
        for (int j = 0; j < s; ++j) {
            long long total = 0;
            long first = -1;
            bool uniform = true;
            for_each_bit(cell_mask[i], [&](int v) {
                long cnt = popcount64(g.row(v) & cell_mask[j]);
                total += cnt;
                if (first < 0)
                    first = cnt;
                else if (cnt != first)
                    uniform = false;
            });
            if (!uniform) q.equitable = false;
            long long den = q.cell_sizes[i];
            long long gg = std::gcd(total, den);
            Rational r{total / gg, den / gg};
            q.average[i * s + j] = r;
            q.value[i * s + j] =
                static_cast<double>(total) / static_cast<double>(den);
        }
    }
    return q;
}

double quotient_spectral_radius(const QuotientMatrix& q) {
    const int s = q.cells;
    if (s == 1) return q.value[0];
    if (s == 2) {
        double a = q.value[0], b = q.value[1], c = q.value[2], d = q.value[3];
        return 0.5 * (a + d + std::sqrt((a - d) * (a - d) + 4.0 * b * c));
    }
    // e_ij = |cell_i| * q_ij is symmetric, so D^(1/2) Q D^(-1/2) is a
    // symmetric matrix with the same spectrum as Q.
    std::vector<double> b(s * s, 0.0);
    for (int i = 0; i < s; ++i) {
        for (int j = i; j < s; ++j) {
            double e = q.value[i * s + j] *
                       static_cast<double>(q.cell_sizes[i]);
            double v = e / std::sqrt(static_cast<double>(q.cell_sizes[i]) *
                                     static_cast<double>(q.cell_sizes[j]));
            b[i * s + j] = v;
            b[j * s + i] = v;
        }
    }
    auto values = jacobi_eigenvalues(std::move(b), s, nullptr);
    return *std::max_element(values.begin(), values.end());
}

double s_graph_spectral_radius(int n, int r) {
    if (r < 2 || r >= n)
        throw std::invalid_argument("closed form requires 2 <= r < n, got n=" +
                                    std::to_string(n) + " r=" + std::to_string(r));
    double rm2 = static_cast<double>(r - 2);
    double disc = rm2 * rm2 + 4.0 * static_cast<double>(r - 1) * static_cast<double>(n - r + 1);
    return 0.5 * (rm2 + std::sqrt(disc));
}

LambdaMinReport lambda_min_check(const Graph& g, int r) {
    if (r < 2) throw std::invalid_argument("clique parameter r must be at least 2");
    if (g.edge_count() < 1)
        throw std::invalid_argument("smallest-eigenvalue bound needs at least one edge");
    if (contains_clique(g, r + 1))
        throw std::invalid_argument("smallest-eigenvalue bound requires a K_{r+1}-free graph");

    LambdaMinReport report;
    report.lambda_min = full_spectrum(g).values.back();
    double m = static_cast<double>(g.edge_count());
    double n = static_cast<double>(g.order());
    report.bound = -std::pow(2.0, r + 1) * std::pow(m, r) / (r * std::pow(n, 2 * r - 1));
    report.holds = report.lambda_min < report.bound;
    return report;
}

}  // namespace ksat
