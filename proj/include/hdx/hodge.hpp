/**
 * Hodge theory for a finite cochain complex given by its coboundary
 * matrices: upper/lower/full Laplacians, dense symmetric spectra, the
 * three-way orthogonal decomposition of a cochain, exact Betti numbers,
 * and the two spectral-gap notions (restricted minimum and first nonzero
 * eigenvalue), which coincide exactly when the cohomology at that degree
 * vanishes.
 *
 * The inner product throughout is the one making the simplex dual basis
 * orthonormal, so adjoints are plain transposes.
 */

#ifndef HDX_HODGE_HPP
#define HDX_HODGE_HPP

#include <algorithm>
#include <cmath>
#include <optional>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "hdx/errors.hpp"
#include "hdx/exact.hpp"
#include "hdx/simplicial_complex.hpp"

namespace hdx {

/// Numerical tolerances used across the library.
namespace tol {
constexpr double num = 1e-9;        // reconstruction / orthogonality budget
constexpr double eig_rel = 1e-10;   // relative eigenpair residual budget
constexpr double sym_rel = 1e-12;   // relative symmetry budget
constexpr double chain_rel = 1e-12; // relative dd=0 budget for real inputs
} // namespace tol

/** Default zero threshold: 1e-9 x max(1, lambda_max). */
inline double default_zero_tol(double lambda_max) {
    return 1e-9 * std::max(1.0, lambda_max);
}

/**
 * A finite cochain complex in matrix form.
 *
 * dims[l] is the dimension of C^l for l = 0..top(); d[l] maps C^l to
 * C^{l+1}.  When the coboundaries have exact entries (integer simplicial
 * matrices, evaluated group-ring matrices) the parallel d_exact copy is
 * kept and is the arbiter for every rank decision.
 */
struct CochainComplexMatrices {
    std::vector<Index> dims;
    std::vector<Eigen::MatrixXd> d;
    std::vector<RatMat> d_exact; // empty, or one entry per coboundary

    int top() const { return static_cast<int>(dims.size()) - 1; }

    bool has_exact() const { return !d_exact.empty(); }

    bool degree_in_range(int l) const { return l >= 0 && l <= top(); }

    /** Coboundary out of degree l; zero map at the top of the truncation. */
    const Eigen::MatrixXd* coboundary(int l) const {
        if (l < 0 || l >= static_cast<int>(d.size()))
            return nullptr;
        return &d[static_cast<std::size_t>(l)];
    }

    const RatMat* coboundary_exact(int l) const {
        if (!has_exact() || l < 0 || l >= static_cast<int>(d_exact.size()))
            return nullptr;
        return &d_exact[static_cast<std::size_t>(l)];
    }

    static CochainComplexMatrices from_rational(std::vector<Index> dims,
                                                std::vector<RatMat> coboundaries) {
        CochainComplexMatrices m;
        m.dims = std::move(dims);
        m.d_exact = std::move(coboundaries);
        m.d.reserve(m.d_exact.size());
        for (const RatMat& a : m.d_exact)
            m.d.push_back(a.to_double());
        m.validate();
        return m;
    }

    static CochainComplexMatrices from_integer(std::vector<Index> dims,
                                               const std::vector<IntMat>& coboundaries) {
        std::vector<RatMat> rs;
        rs.reserve(coboundaries.size());
        for (const IntMat& a : coboundaries)
            rs.push_back(RatMat::from_int(a));
        return from_rational(std::move(dims), std::move(rs));
    }

    /** Integer coboundaries of a simplicial complex, all degrees. */
    static CochainComplexMatrices from_complex(const SimplicialComplex& k) {
        std::vector<Index> dims;
        std::vector<IntMat> cobs;
        for (int l = 0; l <= k.dim(); ++l)
            dims.push_back(k.size(l));
        for (int l = 0; l + 1 <= k.dim(); ++l)
            cobs.push_back(coboundary_matrix(k, l));
        if (dims.empty())
            dims.push_back(0);
        return from_integer(std::move(dims), cobs);
    }

    /** Real coboundaries without an exact copy (dd = 0 checked in floating point). */
    static CochainComplexMatrices from_real(std::vector<Index> dims,
                                            std::vector<Eigen::MatrixXd> coboundaries) {
        CochainComplexMatrices m;
        m.dims = std::move(dims);
        m.d = std::move(coboundaries);
        m.validate();
        return m;
    }

private:
    void validate() const {
        if (dims.empty())
            throw DimensionMismatch("cochain complex needs at least one degree");
        if (d.size() + 1 != dims.size())
            throw DimensionMismatch("cochain complex: expected one coboundary per "
                                    "consecutive degree pair");
        for (std::size_t l = 0; l < d.size(); ++l) {
            if (d[l].rows() != dims[l + 1] || d[l].cols() != dims[l])
                throw DimensionMismatch("coboundary at degree " + std::to_string(l) +
                                        " has inconsistent shape");
        }
        if (has_exact()) {
            for (std::size_t l = 0; l + 1 < d_exact.size(); ++l) {
                if (!(d_exact[l + 1] * d_exact[l]).is_zero())
                    throw Error("chain identity dd = 0 violated at degree " +
                                std::to_string(l));
            }
        } else {
            for (std::size_t l = 0; l + 1 < d.size(); ++l) {
                if (d[l].size() == 0 || d[l + 1].size() == 0)
                    continue;
                const Eigen::MatrixXd prod = d[l + 1] * d[l];
                const double scale = std::max(
                    1.0, d[l + 1].cwiseAbs().maxCoeff() * d[l].cwiseAbs().maxCoeff() *
                             static_cast<double>(dims[l + 1]));
                if (prod.size() > 0 && prod.cwiseAbs().maxCoeff() > tol::chain_rel * scale)
                    throw Error("chain identity dd = 0 violated at degree " +
                                std::to_string(l));
            }
        }
    }
};

/** Upper Laplacian at degree l: d_l^T d_l (zero map at the top degree). */
inline Eigen::MatrixXd upper_laplacian(const CochainComplexMatrices& m, int l) {
    if (!m.degree_in_range(l))
        throw DegreeOutOfRange("upper_laplacian: degree " + std::to_string(l));
    const Eigen::MatrixXd* dl = m.coboundary(l);
    if (dl == nullptr || dl->size() == 0)
        return Eigen::MatrixXd::Zero(m.dims[static_cast<std::size_t>(l)],
                                     m.dims[static_cast<std::size_t>(l)]);
    return dl->transpose() * (*dl);
}

/** Lower Laplacian at degree l: d_{l-1} d_{l-1}^T (zero map at the bottom). */
inline Eigen::MatrixXd lower_laplacian(const CochainComplexMatrices& m, int l) {
    if (!m.degree_in_range(l))
        throw DegreeOutOfRange("lower_laplacian: degree " + std::to_string(l));
    const Eigen::MatrixXd* dlm1 = m.coboundary(l - 1);
    if (dlm1 == nullptr || dlm1->size() == 0)
        return Eigen::MatrixXd::Zero(m.dims[static_cast<std::size_t>(l)],
                                     m.dims[static_cast<std::size_t>(l)]);
    return (*dlm1) * dlm1->transpose();
}

inline Eigen::MatrixXd full_laplacian(const CochainComplexMatrices& m, int l) {
    return upper_laplacian(m, l) + lower_laplacian(m, l);
}

/**
 * All eigenvalues of a real symmetric matrix, ascending with multiplicity.
 *
 * Rejects inputs whose asymmetry exceeds the relative symmetry budget, and
 * verifies the solver's per-pair residual against the eigenpair budget.
 */
inline std::vector<double> spectrum(const Eigen::MatrixXd& s) {
    if (s.rows() != s.cols())
        throw NotSymmetric("spectrum: matrix is not square");
    const Index n = s.rows();
    if (n == 0)
        return {};
    const double entry_scale = std::max(1.0, s.cwiseAbs().maxCoeff());
    if ((s - s.transpose()).cwiseAbs().maxCoeff() > tol::sym_rel * entry_scale)
        throw NotSymmetric("spectrum: matrix is not symmetric within tolerance");

    const Eigen::MatrixXd sym = 0.5 * (s + s.transpose());
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(sym);
    if (es.info() != Eigen::Success)
        throw Error("spectrum: eigensolver did not converge");

    const Eigen::VectorXd& lam = es.eigenvalues();
    const double op_norm = std::max(std::abs(lam(0)), std::abs(lam(n - 1)));
    if (op_norm > 0) {
        const Eigen::MatrixXd resid =
            sym * es.eigenvectors() - es.eigenvectors() * lam.asDiagonal();
        if (resid.colwise().norm().maxCoeff() > tol::eig_rel * op_norm)
            throw Error("spectrum: eigenpair residual exceeds tolerance");
    }
    return std::vector<double>(lam.data(), lam.data() + n);
}

/** Smallest eigenvalue exceeding zero_tol, or absent if none. */
inline std::optional<double> first_nonzero(const std::vector<double>& spec,
                                           double zero_tol) {
    for (double x : spec)
        if (x > zero_tol)
            return x;
    return std::nullopt;
}

/**
 * The essential gap of a nonnegative spectrum: the smallest eigenvalue
 * exceeding zero_tol, absent when the spectrum is entirely zero.  An
 * eigenvalue below -zero_tol raises NegativeSpectrum.
 */
inline std::optional<double> essential_gap(const std::vector<double>& spec,
                                           double zero_tol) {
    for (double x : spec)
        if (x < -zero_tol)
            throw NegativeSpectrum("essential_gap: eigenvalue " + std::to_string(x) +
                                   " below -zero_tol");
    return first_nonzero(spec, zero_tol);
}

/** Multiset union of spectra: the spectrum of the block-diagonal direct sum. */
inline std::vector<double> sigma_union(const std::vector<std::vector<double>>& spectra) {
    std::vector<double> merged;
    for (const auto& s : spectra)
        merged.insert(merged.end(), s.begin(), s.end());
    std::sort(merged.begin(), merged.end());
    return merged;
}

/** Block-diagonal assembly of square matrices. */
inline Eigen::MatrixXd block_diag(const std::vector<Eigen::MatrixXd>& blocks) {
    Index n = 0;
    for (const auto& b : blocks) {
        if (b.rows() != b.cols())
            throw DimensionMismatch("block_diag: blocks must be square");
        n += b.rows();
    }
    Eigen::MatrixXd out = Eigen::MatrixXd::Zero(n, n);
    Index at = 0;
    for (const auto& b : blocks) {
        out.block(at, at, b.rows(), b.rows()) = b;
        at += b.rows();
    }
    return out;
}

/** Rayleigh quotient <Sv,v>/<v,v>; the zero vector is rejected. */
inline double rayleigh_quotient(const Eigen::MatrixXd& s, const Eigen::VectorXd& v) {
    if (s.rows() != s.cols() || s.cols() != v.size())
        throw DimensionMismatch("rayleigh_quotient: incompatible shapes");
    const double nn = v.squaredNorm();
    if (nn == 0.0)
        throw ZeroVector("rayleigh_quotient: zero vector");
    return v.dot(s * v) / nn;
}

/**
 * Exact Betti number at degree l: dim ker d_l - rank d_{l-1}, both ranks
 * over the rationals.  Requires the exact coboundary copies.
 */
inline int betti_exact(const CochainComplexMatrices& m, int l) {
    if (!m.degree_in_range(l))
        throw DegreeOutOfRange("betti_exact: degree " + std::to_string(l));
    if (!m.has_exact())
        throw Error("betti_exact: complex carries no exact coboundaries");
    const RatMat* dl = m.coboundary_exact(l);
    const RatMat* dlm1 = m.coboundary_exact(l - 1);
    const Index rank_out = dl ? rational_rank(*dl) : 0;
    const Index rank_in = dlm1 ? rational_rank(*dlm1) : 0;
    return static_cast<int>(m.dims[static_cast<std::size_t>(l)] - rank_out - rank_in);
}

/** The three mutually orthogonal pieces of a cochain. */
struct HodgeParts {
    Eigen::VectorXd harmonic;
    Eigen::VectorXd exact;
    Eigen::VectorXd coexact;
};

/**
 * Orthogonal decomposition c = harmonic + exact + coexact with
 * exact in im d_{l-1}, coexact in im d_l^T, and harmonic in ker Delta_l.
 */
inline HodgeParts hodge_decompose(const CochainComplexMatrices& m, int l,
                                  const Eigen::VectorXd& c) {
    if (!m.degree_in_range(l))
        throw DegreeOutOfRange("hodge_decompose: degree " + std::to_string(l));
    if (c.size() != m.dims[static_cast<std::size_t>(l)])
        throw DimensionMismatch("hodge_decompose: cochain has wrong length");

    HodgeParts parts;
    parts.exact = Eigen::VectorXd::Zero(c.size());
    parts.coexact = Eigen::VectorXd::Zero(c.size());

    const Eigen::MatrixXd* din = m.coboundary(l - 1);
    if (din != nullptr && din->cols() > 0) {
        Eigen::CompleteOrthogonalDecomposition<Eigen::MatrixXd> cod(*din);
        parts.exact = (*din) * cod.solve(c);
    }
    const Eigen::MatrixXd* dout = m.coboundary(l);
    if (dout != nullptr && dout->rows() > 0) {
        const Eigen::MatrixXd dt = dout->transpose();
        Eigen::CompleteOrthogonalDecomposition<Eigen::MatrixXd> cod(dt);
        parts.coexact = dt * cod.solve(c);
    }
    parts.harmonic = c - parts.exact - parts.coexact;
    return parts;
}

/**
 * The two gap notions at degree l.
 *
 * restricted_min is the minimum eigenvalue of the upper Laplacian
 * compressed onto the orthogonal complement of im d_{l-1} (absent when the
 * complement is trivial).  first_nonzero is the smallest eigenvalue of the
 * full upper Laplacian exceeding zero_tol.  The two agree exactly when the
 * degree-l cohomology vanishes.
 */
struct UpperGap {
    std::optional<double> restricted_min;
    std::optional<double> first_nonzero;
    Index complement_dim = 0;
    double zero_tol = 0.0;
};

namespace detail {

/** Rank of the incoming coboundary: rational when exact data is present. */
inline Index incoming_rank(const CochainComplexMatrices& m, int l) {
    if (l <= 0)
        return 0;
    if (const RatMat* e = m.coboundary_exact(l - 1))
        return rational_rank(*e);
    const Eigen::MatrixXd* din = m.coboundary(l - 1);
    if (din == nullptr || din->size() == 0)
        return 0;
    Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr(*din);
    qr.setThreshold(1e-10);
    return qr.rank();
}

/** Orthonormal basis of the complement of im d_{l-1} inside C^l. */
inline Eigen::MatrixXd complement_basis(const CochainComplexMatrices& m, int l,
                                        Index rank_in) {
    const Index n = m.dims[static_cast<std::size_t>(l)];
    if (rank_in == 0)
        return Eigen::MatrixXd::Identity(n, n);
    const Eigen::MatrixXd* din = m.coboundary(l - 1);
    Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr(*din);
    Eigen::MatrixXd q = qr.householderQ() * Eigen::MatrixXd::Identity(n, n);
    return q.rightCols(n - rank_in);
}

} // namespace detail

inline UpperGap spectral_gap_upper(const CochainComplexMatrices& m, int l,
                                   std::optional<double> zero_tol_override = {}) {
    if (!m.degree_in_range(l))
        throw DegreeOutOfRange("spectral_gap_upper: degree " + std::to_string(l));
    const Eigen::MatrixXd up = upper_laplacian(m, l);
    const std::vector<double> spec = spectrum(up);

    UpperGap gap;
    gap.zero_tol = zero_tol_override
                       ? *zero_tol_override
                       : default_zero_tol(spec.empty() ? 0.0 : spec.back());
    gap.first_nonzero = first_nonzero(spec, gap.zero_tol);

    const Index rank_in = detail::incoming_rank(m, l);
    gap.complement_dim = m.dims[static_cast<std::size_t>(l)] - rank_in;
    if (gap.complement_dim > 0) {
        const Eigen::MatrixXd q = detail::complement_basis(m, l, rank_in);
        const Eigen::MatrixXd compressed = q.transpose() * up * q;
        gap.restricted_min = spectrum(compressed).front();
    }
    return gap;
}

/**
 * Per-degree spectral summary.  eigenvalues is the full-Laplacian spectrum;
 * betti_exact comes from rational ranks and must agree with the count of
 * eigenvalues at or below zero_tol (a mismatch is an internal error, not a
 * mathematical outcome).
 */
struct SpectrumReport {
    int degree = 0;
    std::vector<double> eigenvalues;
    double zero_tol = 0.0;
    int betti_exact = 0;
    std::optional<double> gap_restricted;
    std::optional<double> first_nonzero_upper;
    std::optional<double> first_nonzero_lower;
    std::optional<double> essential_gap;
};

inline SpectrumReport spectrum_report(const CochainComplexMatrices& m, int l,
                                      std::optional<double> zero_tol_override = {}) {
    if (!m.degree_in_range(l))
        throw DegreeOutOfRange("spectrum_report: degree " + std::to_string(l));
    SpectrumReport rep;
    rep.degree = l;
    rep.eigenvalues = spectrum(full_laplacian(m, l));
    rep.zero_tol = zero_tol_override
                       ? *zero_tol_override
                       : default_zero_tol(rep.eigenvalues.empty() ? 0.0
                                                                  : rep.eigenvalues.back());
    rep.betti_exact = betti_exact(m, l);

    const auto zero_count = static_cast<int>(
        std::count_if(rep.eigenvalues.begin(), rep.eigenvalues.end(),
                      [&](double x) { return x <= rep.zero_tol; }));
    if (zero_count != rep.betti_exact)
        throw Error("spectrum_report: floating zero-eigenvalue count " +
                    std::to_string(zero_count) + " disagrees with exact Betti number " +
                    std::to_string(rep.betti_exact) + " at degree " + std::to_string(l));

    const UpperGap gap = spectral_gap_upper(m, l, rep.zero_tol);
    rep.gap_restricted = gap.restricted_min;
    rep.first_nonzero_upper = gap.first_nonzero;
    rep.first_nonzero_lower = first_nonzero(spectrum(lower_laplacian(m, l)), rep.zero_tol);
    rep.essential_gap = essential_gap(rep.eigenvalues, rep.zero_tol);
    return rep;
}

} // namespace hdx

#endif // HDX_HODGE_HPP
