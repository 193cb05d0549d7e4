#include "spanpoly/roots.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <limits>
#include <numbers>
#include <string>

#include "spanpoly/error.hpp"

namespace spanpoly {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();
constexpr int kMaxSweeps = 2000;

Complex poly_eval(const std::vector<Complex>& c, Complex z) {
    Complex acc(0.0, 0.0);
    for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * z + *it;
    return acc;
}

std::vector<Complex> derivative(const std::vector<Complex>& c) {
    std::vector<Complex> d;
    if (c.size() <= 1) return d;
    d.resize(c.size() - 1);
    for (std::size_t j = 1; j < c.size(); ++j) d[j - 1] = c[j] * static_cast<double>(j);
    return d;
}

// sum_j |c_j| |z|^j: the backward-error scale at z.
double magnitude_scale(const std::vector<Complex>& c, Complex z) {
    double az = std::abs(z);
    double acc = 0.0;
    double p = 1.0;
    for (const Complex& cj : c) {
        acc += std::abs(cj) * p;
        p *= az;
    }
    return acc;
}

double cauchy_bound(const std::vector<Complex>& c) {
    double an = std::abs(c.back());
    double m = 0.0;
    for (std::size_t j = 0; j + 1 < c.size(); ++j) m = std::max(m, std::abs(c[j]) / an);
    return 1.0 + m;
}

// Monic expansion from a root multiset, ascending order (c[j] multiplies
// z^j); O(n^2), fine at desk degrees.
std::vector<Complex> monic_from_roots(const std::vector<RootSet::Root>& roots) {
    std::vector<Complex> c{Complex(1.0, 0.0)};
    for (const auto& r : roots) {
        for (unsigned k = 0; k < r.multiplicity; ++k) {
            c.push_back(c.back());
            for (std::size_t j = c.size() - 2; j >= 1; --j) c[j] = c[j - 1] - r.value * c[j];
            c[0] = -r.value * c[0];
        }
    }
    return c;
}

// max_j |a_j - b_j| / max_j |a_j| for equal-length coefficient vectors.
double coeff_mismatch(const std::vector<Complex>& a, const std::vector<Complex>& b) {
    double scale = 0.0;
    for (const Complex& x : a) scale = std::max(scale, std::abs(x));
    if (scale == 0.0) scale = 1.0;
    double worst = 0.0;
    for (std::size_t j = 0; j < a.size(); ++j) worst = std::max(worst, std::abs(a[j] - b[j]));
    return worst / scale;
}

double reconstruction_error(const std::vector<Complex>& monic_input,
                            const std::vector<RootSet::Root>& roots) {
    return coeff_mismatch(monic_input, monic_from_roots(roots));
}

// Newton refinement on the given coefficient vector (typically p^{(m-1)}
// when polishing an m-fold root of p).
Complex newton_polish(const std::vector<Complex>& c, Complex z, int iters) {
    std::vector<Complex> d = derivative(c);
    for (int i = 0; i < iters; ++i) {
        Complex fz = poly_eval(c, z);
        Complex dz = poly_eval(d, z);
        if (std::abs(dz) == 0.0) break;
        Complex step = fz / dz;
        z -= step;
        if (std::abs(step) <= kEps * (1.0 + std::abs(z))) break;
    }
    return z;
}

struct UnionFind {
    std::vector<std::size_t> parent;
    explicit UnionFind(std::size_t n) : parent(n) {
        for (std::size_t i = 0; i < n; ++i) parent[i] = i;
    }
    std::size_t find(std::size_t x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    void unite(std::size_t a, std::size_t b) { parent[find(a)] = find(b); }
};

}  // namespace

RootSet find_roots(std::vector<Complex> coeffs) {
    // trim float zeros at the top
    while (!coeffs.empty() && coeffs.back() == Complex(0.0, 0.0)) coeffs.pop_back();
    if (coeffs.empty()) throw_argument("find_roots: zero polynomial has no root set");

    RootSet out;
    std::size_t r = 0;
    while (r < coeffs.size() && coeffs[r] == Complex(0.0, 0.0)) ++r;
    out.origin_multiplicity = static_cast<unsigned>(r);
    std::vector<Complex> c(coeffs.begin() + static_cast<std::ptrdiff_t>(r), coeffs.end());

    const std::size_t n = c.size() - 1;
    if (n == 0) {
        out.residual = 0.0;
        out.verified = true;
        return out;
    }

    const double bound = cauchy_bound(c);
    std::vector<Complex> z(n);
    if (n == 1) {
        z[0] = -c[0] / c[1];
    } else {
        // jittered circle at the Cauchy bound
        const double golden = 0.7639320225002102;
        for (std::size_t k = 0; k < n; ++k) {
            double angle = 2.0 * std::numbers::pi * (static_cast<double>(k) + 0.5) /
                               static_cast<double>(n) +
                           0.5 + golden * static_cast<double>(k % 3);
            z[k] = bound * Complex(std::cos(angle), std::sin(angle));
        }
        const std::vector<Complex> d = derivative(c);
        for (int sweep = 0; sweep < kMaxSweeps; ++sweep) {
            double max_step = 0.0;
            bool all_converged = true;
            for (std::size_t i = 0; i < n; ++i) {
                Complex fz = poly_eval(c, z[i]);
                double backward = 8.0 * kEps * magnitude_scale(c, z[i]);
                if (std::abs(fz) <= backward) continue;
                all_converged = false;
                Complex dz = poly_eval(d, z[i]);
                Complex newton;
                if (std::abs(dz) == 0.0) {
                    newton = Complex(bound * 1e-3, bound * 1e-3);
                } else {
                    newton = fz / dz;
                }
                Complex sum(0.0, 0.0);
                for (std::size_t j = 0; j < n; ++j) {
                    if (j == i) continue;
                    Complex diff = z[i] - z[j];
                    if (std::abs(diff) == 0.0) diff = Complex(kEps * bound, kEps * bound);
                    sum += 1.0 / diff;
                }
                Complex denom = 1.0 - newton * sum;
                Complex step = std::abs(denom) == 0.0 ? newton : newton / denom;
                z[i] -= step;
                max_step = std::max(max_step, std::abs(step));
            }
            if (all_converged || max_step < 1e-13 * bound) break;
        }
        // sweep exhaustion falls through; the residual validation below
        // decides whether that is fatal
    }

    // inclusion radii for cluster detection; |p(z)| is floored at the
    // evaluation-noise scale, since near a multiple root the computed value
    // is pure cancellation noise and the raw Newton correction would
    // underestimate the cluster extent
    const std::vector<Complex> d1 = derivative(c);
    std::vector<double> radius(n);
    for (std::size_t i = 0; i < n; ++i) {
        double fz = std::max(std::abs(poly_eval(c, z[i])), 4.0 * kEps * magnitude_scale(c, z[i]));
        Complex dz = poly_eval(d1, z[i]);
        double rad = std::abs(dz) == 0.0 ? bound : static_cast<double>(n) * fz / std::abs(dz);
        radius[i] = std::max(rad, 16.0 * kEps * (1.0 + std::abs(z[i])));
    }
    UnionFind uf(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (std::abs(z[i] - z[j]) <= 3.0 * (radius[i] + radius[j])) uf.unite(i, j);
    if (std::getenv("SPZ_ROOT_DEBUG")) {
        for (std::size_t i = 0; i < n; ++i)
            std::fprintf(stderr, "dbg i=%zu z=(%.9f,%.2e) rad=%.3e comp=%zu\n", i,
                         z[i].real(), z[i].imag(), radius[i], uf.find(i));
    }

    std::vector<std::vector<std::size_t>> components(n);
    for (std::size_t i = 0; i < n; ++i) components[uf.find(i)].push_back(i);

    // monic input for reconstruction comparisons
    std::vector<Complex> monic(c);
    for (Complex& x : monic) x /= c.back();

    std::vector<RootSet::Root> raw;
    raw.reserve(n);
    for (std::size_t i = 0; i < n; ++i) raw.push_back({z[i], 1});

    std::vector<RootSet::Root> merged;
    std::vector<std::vector<Complex>> deriv_cache;  // c, c', c'', ...
    deriv_cache.push_back(c);
    for (const auto& comp : components) {
        if (comp.empty()) continue;
        if (comp.size() == 1) {
            Complex p = newton_polish(c, z[comp[0]], 3);
            if (std::abs(poly_eval(c, p)) > std::abs(poly_eval(c, z[comp[0]]))) p = z[comp[0]];
            merged.push_back({p, 1});
            continue;
        }
        const unsigned m = static_cast<unsigned>(comp.size());
        Complex centroid(0.0, 0.0);
        for (std::size_t i : comp) centroid += z[i];
        centroid /= static_cast<double>(m);
        while (deriv_cache.size() < m) deriv_cache.push_back(derivative(deriv_cache.back()));
        Complex center = newton_polish(deriv_cache[m - 1], centroid, 30);

        std::vector<RootSet::Root> variant_merged{{center, m}};
        std::vector<RootSet::Root> variant_raw;
        for (std::size_t i : comp) variant_raw.push_back({z[i], 1});

        // complete each variant with the other points so the comparison is global
        auto complete = [&](std::vector<RootSet::Root> part) {
            for (const auto& other : components) {
                if (&other == &comp || other.empty()) continue;
                for (std::size_t i : other) part.push_back({z[i], 1});
            }
            return part;
        };
        double err_merged = reconstruction_error(monic, complete(variant_merged));
        double err_raw = reconstruction_error(monic, complete(variant_raw));
        if (std::getenv("SPZ_ROOT_DEBUG"))
            std::fprintf(stderr, "dbg merge m=%u centroid=(%.9f,%.2e) center=(%.9f,%.2e) em=%.3e er=%.3e accept=%d\n",
                         m, centroid.real(), centroid.imag(), center.real(), center.imag(),
                         err_merged, err_raw, err_merged <= std::max(err_raw * 4.0, 1e-12));
        if (err_merged <= std::max(err_raw * 4.0, 1e-12)) {
            merged.push_back({center, m});
        } else {
            for (std::size_t i : comp) {
                Complex p = newton_polish(c, z[i], 3);
                if (std::abs(poly_eval(c, p)) > std::abs(poly_eval(c, z[i]))) p = z[i];
                merged.push_back({p, 1});
            }
        }
    }

    std::sort(merged.begin(), merged.end(), [](const RootSet::Root& a, const RootSet::Root& b) {
        if (a.value.real() != b.value.real()) return a.value.real() < b.value.real();
        return a.value.imag() < b.value.imag();
    });
    out.roots = std::move(merged);

    // validation: normalized residuals plus root-sum/product against the
    // cofactor coefficients
    double worst = 0.0;
    for (const auto& root : out.roots) {
        double scale = magnitude_scale(c, root.value);
        if (scale == 0.0) scale = 1.0;
        worst = std::max(worst, std::abs(poly_eval(c, root.value)) / scale);
    }
    out.residual = worst;

    Complex sum(0.0, 0.0), prod(1.0, 0.0);
    for (const auto& root : out.roots) {
        sum += root.value * static_cast<double>(root.multiplicity);
        for (unsigned k = 0; k < root.multiplicity; ++k) prod *= root.value;
    }
    Complex expect_sum = -c[n - 1] / c[n];
    Complex expect_prod = c[0] / c[n];
    if (n % 2 == 1) expect_prod = -expect_prod;
    bool sums_ok = std::abs(sum - expect_sum) <= 1e-8 * (1.0 + std::abs(expect_sum)) &&
                   std::abs(prod - expect_prod) <= 1e-8 * (1.0 + std::abs(expect_prod));
    out.verified = sums_ok && out.residual <= 1e-8;

    if (!out.verified && out.residual > 1e-6) {
        throw_numeric("find_roots: iteration failed to certify (residual " +
                      std::to_string(out.residual) + ", best root near " +
                      std::to_string(out.roots.empty() ? 0.0 : out.roots[0].value.real()) + ")");
    }
    return out;
}

RootSet find_roots(const UniPoly& p) {
    if (p.is_zero()) throw_argument("find_roots: zero polynomial has no root set");
    std::vector<Complex> coeffs;

    // strip the exact origin multiplicity before any float conversion
    std::size_t r = 0;
    while (r < p.coeffs().size() && p.coeffs()[r].is_zero()) ++r;
    coeffs.reserve(p.coeffs().size() - r);
    for (std::size_t j = r; j < p.coeffs().size(); ++j) coeffs.push_back(p.coeffs()[j].to_complex());
    RootSet rs = find_roots(std::move(coeffs));
    rs.origin_multiplicity += static_cast<unsigned>(r);
    return rs;
}

}  // namespace spanpoly
