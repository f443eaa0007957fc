#pragma once

// Certified complex roots of squarefree rational polynomials: simultaneous
// (Aberth) refinement in doubles for starting points, dyadic-rational Newton
// polishing, then an exact Weierstrass certification pass.  The inclusion
// disks D(z_i, deg * |W_i|) with W_i = P(z_i)/prod_{j!=i}(z_i - z_j) cover
// all roots of the monic P; once pairwise disjoint, each disk holds exactly
// one root.  All disk data is exact rational, so downstream comparisons are
// rigorous.

#include <cmath>
#include <complex>
#include <vector>

#include "multdep/cdisk.hpp"
#include "multdep/errors.hpp"
#include "multdep/polynomial.hpp"

namespace multdep {

namespace detail {

inline std::vector<std::complex<double>> aberth_initial(const std::vector<double>& c) {
    const std::size_t d = c.size() - 1;
    double lead = c.back();
    double radius = 0.0;
    for (std::size_t i = 0; i < d; ++i)
        radius = std::max(radius, std::pow(std::abs(c[i] / lead), 1.0 / static_cast<double>(d - i)));
    radius = 2.0 * radius + 1.0;
    std::vector<std::complex<double>> z(d);
    for (std::size_t i = 0; i < d; ++i) {
        double angle = 2.0 * M_PI * static_cast<double>(i) / static_cast<double>(d) + 0.41;
        z[i] = std::polar(radius, angle);
    }
    return z;
}

inline std::complex<double> eval_dd(const std::vector<double>& c, std::complex<double> x,
                                    std::complex<double>* deriv) {
    std::complex<double> p = 0.0, dp = 0.0;
    for (std::size_t i = c.size(); i-- > 0;) {
        dp = dp * x + p;
        p = p * x + c[i];
    }
    if (deriv) *deriv = dp;
    return p;
}

inline std::vector<std::complex<double>> aberth_double(const std::vector<double>& c) {
    auto z = aberth_initial(c);
    const std::size_t d = z.size();
    for (int iter = 0; iter < 400; ++iter) {
        double worst = 0.0;
        for (std::size_t i = 0; i < d; ++i) {
            std::complex<double> dp;
            std::complex<double> p = eval_dd(c, z[i], &dp);
            if (p == std::complex<double>(0.0)) continue;
            std::complex<double> newton = dp == std::complex<double>(0.0) ? 0.0 : p / dp;
            std::complex<double> sum = 0.0;
            for (std::size_t j = 0; j < d; ++j)
                if (j != i) sum += 1.0 / (z[i] - z[j]);
            std::complex<double> denom = 1.0 - newton * sum;
            std::complex<double> step = denom == std::complex<double>(0.0) ? newton : newton / denom;
            z[i] -= step;
            worst = std::max(worst, std::abs(step) / std::max(1.0, std::abs(z[i])));
        }
        if (worst < 1e-14) break;
    }
    return z;
}

inline QComplex eval_qc(const std::vector<Integer>& c, const QComplex& x, QComplex* deriv) {
    QComplex p, dp;
    for (std::size_t i = c.size(); i-- > 0;) {
        dp = dp * x + p;
        p = p * x + QComplex(Rational(c[i]));
    }
    if (deriv) *deriv = dp;
    return p;
}

}  // namespace detail

// Disjoint certified disks, one per root.  prec_bits bounds the final disk
// radii: radius_i <= 2^-prec_bits * max(1, |center_i|).
inline std::vector<Disk> certified_roots(const QPoly& f, long prec_bits = 128) {
    if (f.degree() < 1) return {};
    IntegerPoly ip = to_integer_poly(f);
    const std::vector<Integer>& P = ip.coeffs;
    const std::size_t d = static_cast<std::size_t>(f.degree());

    // variable scaling 2^t so double arithmetic sees tame coefficients
    long t = 0;
    {
        double lead_bits = static_cast<double>(mpz_sizeinbase(P.back().get_mpz_t(), 2));
        for (std::size_t i = 0; i < d; ++i) {
            if (is_zero(P[i])) continue;
            double bits = static_cast<double>(mpz_sizeinbase(P[i].get_mpz_t(), 2));
            long ti = static_cast<long>(std::ceil((bits - lead_bits) / static_cast<double>(d - i)));
            t = std::max(t, ti);
        }
    }
    std::vector<Integer> scaled = P;
    if (t > 0) {
        // g(y) = P(2^t y): coefficients a_i * 2^{t i}
        for (std::size_t i = 0; i <= d; ++i) {
            Integer pw;
            mpz_ui_pow_ui(pw.get_mpz_t(), 2, static_cast<unsigned long>(t) * i);
            scaled[i] = P[i] * pw;
        }
    }
    std::vector<double> cd(d + 1);
    double leadmag = mpz_get_d(scaled[d].get_mpz_t());
    for (std::size_t i = 0; i <= d; ++i) cd[i] = mpz_get_d(scaled[i].get_mpz_t()) / leadmag;
    auto zd = detail::aberth_double(cd);

    Integer scale_back(1);
    mpz_ui_pow_ui(scale_back.get_mpz_t(), 2, static_cast<unsigned long>(t));
    Rational s(scale_back);

    // dyadic seeds in the original variable
    std::vector<QComplex> z(d);
    for (std::size_t i = 0; i < d; ++i)
        z[i] = QComplex(to_dyadic(Rational(zd[i].real()) * s, 64), to_dyadic(Rational(zd[i].imag()) * s, 64));

    const Rational lead(P.back());
    auto certify = [&](long bits) -> std::vector<Disk> {
        std::vector<Disk> disks(d);
        for (std::size_t i = 0; i < d; ++i) {
            QComplex val = detail::eval_qc(P, z[i], nullptr);
            QComplex prod(Rational(1), Rational(0));
            for (std::size_t j = 0; j < d; ++j)
                if (j != i) prod = prod * (z[i] - z[j]);
            QComplex w = val / (QComplex(lead) * prod);
            Rational r = times_int(w.abs_upper(bits), static_cast<long>(d));
            disks[i] = Disk{z[i], r};
        }
        return disks;
    };
    auto all_good = [&](const std::vector<Disk>& disks, long target_bits) {
        Rational eps = make_rational(Integer(1), [&] {
            Integer p;
            mpz_ui_pow_ui(p.get_mpz_t(), 2, static_cast<unsigned long>(target_bits));
            return p;
        }());
        for (std::size_t i = 0; i < d; ++i) {
            Rational bound = std::max(Rational(1), disks[i].center.abs_upper()) * eps;
            if (disks[i].radius > bound) return false;
            for (std::size_t j = i + 1; j < d; ++j)
                if (!disks_disjoint(disks[i], disks[j])) return false;
        }
        return true;
    };

    long work_bits = 64;
    for (int round = 0; round < 24; ++round) {
        auto disks = certify(work_bits + 32);
        if (all_good(disks, prec_bits)) return disks;
        // one Newton pass per root at doubled working precision
        work_bits = std::min(work_bits * 2, work_bits + 4096);
        for (std::size_t i = 0; i < d; ++i) {
            QComplex dp;
            QComplex p = detail::eval_qc(P, z[i], &dp);
            if (is_zero(dp.norm2())) continue;
            z[i] = to_dyadic(z[i] - p / dp, work_bits);
        }
    }
    throw precision_error("certified_roots: requested precision unachievable within the iteration cap");
}

// max |root| over the certified disks (each holds exactly one root).
inline CertReal max_root_abs(const std::vector<Disk>& disks) {
    CertReal out{Rational(0), Rational(0)};
    bool first = true;
    for (const Disk& disk : disks) {
        Rational lo = disk.abs_lower(), hi = disk.abs_upper();
        if (first) {
            out = {lo, hi};
            first = false;
        } else {
            out.lo = std::max(out.lo, lo);
            out.hi = std::max(out.hi, hi);
        }
    }
    return out;
}

}  // namespace multdep
