#pragma once

#include <random>

#include "qwave/ensemble.hpp"
#include "qwave/filter_bank.hpp"
#include "qwave/sv_matrix.hpp"

namespace qtest {

using namespace qwave;

inline Quaternion rand_q(std::mt19937_64& g) {
    std::uniform_real_distribution<double> d(-1, 1);
    return {d(g), d(g), d(g), d(g)};
}

inline Quaternion rand_spinor(std::mt19937_64& g) { return spinor_part(rand_q(g)); }
inline Quaternion rand_vector(std::mt19937_64& g) { return vector_part(rand_q(g)); }

inline SVMatrix rand_sv(std::mt19937_64& g) { return {rand_spinor(g), rand_vector(g), rand_vector(g), rand_spinor(g)}; }

inline SVBlockMatrix rand_block(int m, std::mt19937_64& g) {
    SVBlockMatrix a(m);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) a.set_block(i, j, rand_sv(g));
    return a;
}

inline FilterBank rand_bank(int eta, std::mt19937_64& g) {
    FilterBank fb(eta);
    for (auto& f : fb.a)
        for (auto& q : f) q = rand_q(g);
    return fb;
}

inline Ensemble rand_consistent(int eta, std::mt19937_64& g) { return symmetrize(random_raw_ensemble(eta, g)); }

inline double max_diff(const Ensemble& a, const Ensemble& b) {
    double r = 0;
    for (size_t i = 0; i < a.size(); ++i) r = std::max(r, (a[i] - b[i]).cwiseAbs().maxCoeff());
    return r;
}

inline double max_diff(const SVBlockMatrix& a, const SVBlockMatrix& b) {
    double r = 0;
    for (int i = 0; i < a.dim(); ++i)
        for (int j = 0; j < a.dim(); ++j) r = std::max(r, abs(a.at(i, j) - b.at(i, j)));
    return r;
}

// diag(e, conj e) applied on the left of every SV block, in quaternion form
inline SVBlockMatrix phase_act(const Quaternion& e, const SVBlockMatrix& b) {
    SVBlockMatrix r(b.blocks());
    for (int i = 0; i < b.dim(); ++i)
        for (int j = 0; j < b.dim(); ++j) r.at(i, j) = (i % 2 == 0 ? e : conj(e)) * b.at(i, j);
    return r;
}

// (F B)_j by the double sum over quaternion entries; sign -1 gives the conjugate phases
inline Ensemble direct_dft(const Ensemble& b, double scale = 1.0) {
    const int eta = b.eta();
    Ensemble r(eta);
    for (int j1 = 0; j1 < eta; ++j1)
        for (int j2 = 0; j2 < eta; ++j2) {
            SVBlockMatrix s(4);
            for (int k1 = 0; k1 < eta; ++k1)
                for (int k2 = 0; k2 < eta; ++k2) {
                    const double t = 2 * M_PI * wedge_coeff(j1, j2, k1, k2) / eta;
                    s += phase_act(phase(t), b.entry(k1, k2));
                }
            r.set_entry(j1, j2, s * scale);
        }
    return r;
}

}  // namespace qtest
