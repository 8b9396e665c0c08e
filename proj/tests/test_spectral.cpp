#include <catch_amalgamated.hpp>

#include <cmath>
#include <numbers>

#include "kronrad/complex_matrix.hpp"
#include "kronrad/generate.hpp"
#include "kronrad/rng.hpp"
#include "kronrad/spectral.hpp"

using namespace kronrad;

namespace {

// independent oracle: eigenvalues of a circulant are the DFT of its first row
std::vector<cplx> circulant_eigs(const std::vector<cplx>& first) {
    const std::size_t n = first.size();
    std::vector<cplx> out(n);
    for (std::size_t k = 0; k < n; ++k) {
        cplx s{};
        for (std::size_t j = 0; j < n; ++j) {
            const double ang = 2.0 * std::numbers::pi * static_cast<double>(j * k) /
                               static_cast<double>(n);
            s += first[j] * cplx{std::cos(ang), std::sin(ang)};
        }
        out[k] = s;
    }
    return out;
}

double match_sets(std::vector<cplx> a, std::vector<cplx> b) {
    REQUIRE(a.size() == b.size());
    double worst = 0.0;
    for (const cplx& x : a) {
        double best = 1e300;
        std::size_t arg = 0;
        for (std::size_t i = 0; i < b.size(); ++i)
            if (std::abs(x - b[i]) < best) { best = std::abs(x - b[i]); arg = i; }
        worst = std::max(worst, best);
        b.erase(b.begin() + static_cast<std::ptrdiff_t>(arg));
    }
    return worst;
}

} // namespace

TEST_CASE("hermitian eigensolver on known spectra") {
    // 2x2 closed form oracle
    const CMatrix h{{cplx{2, 0}, cplx{1, 1}}, {cplx{1, -1}, cplx{3, 0}}};
    const auto eg = hermitian_eigs(h);
    const double tr = 5.0, det = 6.0 - 2.0;
    const double disc = std::sqrt(tr * tr - 4.0 * det);
    REQUIRE(std::abs(eg.values[0] - 0.5 * (tr - disc)) < 1e-12);
    REQUIRE(std::abs(eg.values[1] - 0.5 * (tr + disc)) < 1e-12);

    // eigenvectors reconstruct the matrix
    const std::size_t n = 2;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            cplx s{};
            for (std::size_t k = 0; k < n; ++k)
                s += eg.values[k] * eg.vectors(i, k) * std::conj(eg.vectors(j, k));
            REQUIRE(std::abs(s - h(i, j)) < 1e-12);
        }
}

TEST_CASE("hermitian eigensolver matches a planted spectrum") {
    Rng rng(3, 0);
    const std::size_t n = 6;
    const CMatrix u = random_unitary(rng, n);
    std::vector<cplx> d(n);
    for (std::size_t i = 0; i < n; ++i) d[i] = cplx{rng.uniform(-5, 5), 0.0};
    const CMatrix h = u * CMatrix::diagonal(d) * u.adjoint();
    auto eg = hermitian_eigs(h);
    std::vector<double> want;
    for (const cplx& z : d) want.push_back(z.real());
    std::sort(want.begin(), want.end());
    for (std::size_t i = 0; i < n; ++i) REQUIRE(std::abs(eg.values[i] - want[i]) < 1e-10);
}

TEST_CASE("general eigenvalues against the Fourier oracle") {
    Rng rng(5, 0);
    for (std::size_t n = 2; n <= 6; ++n) {
        std::vector<cplx> first(n);
        for (cplx& z : first) z = random_cplx(rng);
        const double err = match_sets(eigenvalues(circulant(first)), circulant_eigs(first));
        REQUIRE(err < 1e-9);
    }
}

TEST_CASE("companion eigenvalues are polynomial roots") {
    // z^2 - 2
    const auto ev = eigenvalues(companion(Poly({cplx{-2, 0}, cplx{0, 0}})));
    const double s2 = std::sqrt(2.0);
    REQUIRE(match_sets(ev, {cplx{s2, 0}, cplx{-s2, 0}}) < 1e-12);

    // z^3 = 1: cube roots of unity
    const auto ev3 = eigenvalues(companion(Poly({cplx{-1, 0}, cplx{0, 0}, cplx{0, 0}})));
    std::vector<cplx> roots;
    for (int k = 0; k < 3; ++k) {
        const double ang = 2.0 * std::numbers::pi * k / 3.0;
        roots.emplace_back(std::cos(ang), std::sin(ang));
    }
    REQUIRE(match_sets(ev3, roots) < 1e-10);
}

TEST_CASE("eigenvalues of a defective matrix") {
    // Jordan block: double eigenvalue 0
    const CMatrix j{{cplx{0, 0}, cplx{1, 0}}, {cplx{0, 0}, cplx{0, 0}}};
    for (const cplx& ev : eigenvalues(j)) REQUIRE(std::abs(ev) < 1e-8);
}

TEST_CASE("singular values: golden ratio oracle") {
    const CMatrix a{{cplx{1, 0}, cplx{1, 0}}, {cplx{0, 0}, cplx{1, 0}}};
    const double phi = 0.5 * (1.0 + std::sqrt(5.0));
    REQUIRE(std::abs(spectral_norm(a) - phi) < 1e-12);
    const auto sv = singular_values(a);
    REQUIRE(std::abs(sv[0] * sv[1] - 1.0) < 1e-12); // |det| = 1
}

TEST_CASE("spectral radius and norm basics") {
    const CMatrix d = CMatrix::diagonal({cplx{3, 0}, cplx{0, -4}, cplx{1, 1}});
    REQUIRE(std::abs(spectral_radius(d) - 4.0) < 1e-10);
    REQUIRE(std::abs(spectral_norm(d) - 4.0) < 1e-10);
}

TEST_CASE("rank and null space") {
    Rng rng(9, 0);
    const CMatrix p = random_psd(rng, 4, 2);
    // singular values pass through the Gram matrix, so zeros only resolve
    // to about sqrt(machine eps) times the norm
    REQUIRE(numerical_rank(p, 1e-7 * std::max(1.0, spectral_norm(p))) == 2);

    const auto basis = null_space_basis(p, 1e-7 * std::max(1.0, spectral_norm(p)));
    REQUIRE(basis.size() == 2);
    for (const auto& v : basis) {
        const auto pv = p.apply(v);
        double r = 0.0;
        for (const cplx& z : pv) r += std::norm(z);
        REQUIRE(std::sqrt(r) < 1e-7);
    }

    REQUIRE(null_space_basis(CMatrix::identity(3), 1e-10).empty());
}

TEST_CASE("hermitian square root and operator absolute value") {
    Rng rng(21, 0);
    const CMatrix p = random_psd(rng, 3, 3);
    const CMatrix r = hermitian_sqrt(p);
    REQUIRE(spectral_norm(r * r - p) < 1e-10 * std::max(1.0, spectral_norm(p)));

    const CMatrix a = random_matrix(rng, 3, 3);
    const CMatrix abs_a = matrix_abs(a);
    REQUIRE(spectral_norm(abs_a * abs_a - a.adjoint() * a) <
            1e-9 * std::max(1.0, spectral_norm(a) * spectral_norm(a)));
}

TEST_CASE("max modulus structure: semisimple vs defective") {
    const CMatrix diag = CMatrix::diagonal({cplx{2, 0}, cplx{-2, 0}, cplx{1, 0}});
    const SpectralData sd = max_modulus_structure(diag);
    REQUIRE(sd.partially_diagonalizable);
    REQUIRE(sd.members.size() == 2);
    for (const auto& m : sd.members) {
        REQUIRE(m.algebraic == 1);
        REQUIRE(m.geometric == 1);
    }

    const CMatrix j{{cplx{0, 0}, cplx{1, 0}}, {cplx{0, 0}, cplx{0, 0}}};
    const SpectralData js = max_modulus_structure(j);
    REQUIRE_FALSE(js.partially_diagonalizable);

    // clustered double eigenvalue on a normal matrix stays semisimple
    const CMatrix two = CMatrix::diagonal({cplx{1, 0}, cplx{1, 0}});
    const SpectralData ts = max_modulus_structure(two);
    REQUIRE(ts.partially_diagonalizable);
    REQUIRE(ts.members.size() == 1);
    REQUIRE(ts.members.front().algebraic == 2);
    REQUIRE(ts.members.front().geometric == 2);
}
