#include "bettic/classifier.hpp"

#include <stdexcept>

#include "bettic/extremal.hpp"
#include "bettic/hochster.hpp"

namespace bettic {

static void require_full_support(const Complex& K, const char* what) {
    if (!K.full_support())
        throw std::domain_error(std::string(what) + " requires every vertex of [m] to be used");
}

JoinDecomposition decompose(const Complex& K) {
    require_full_support(K, "decompose");
    JoinDecomposition out;
    const std::vector<Simplex> nonfaces = minimal_non_faces(K);
    Simplex used = 0;
    for (Simplex nf : nonfaces) {
        if (nf & used) {
            out.residual = true;
            out.sphere_factors.clear();
            out.cone_vertices = 0;
            return out;
        }
        used |= nf;
        out.sphere_factors.push_back(nf);
    }
    out.cone_vertices = full_mask(K.m()) & ~used;
    return out;
}

bool is_tight_numeric(const Complex& K, const FieldSpec& F, int threads) {
    require_full_support(K, "tightness");
    const long long value = d_total(K, F, threads);
    return mpz_class(static_cast<long>(value)) == tight_bound(K.m(), K.dim());
}

bool is_tight_structural(const Complex& K) {
    return !decompose(K).residual;
}

int tightness_necessary_dim(int m) {
    if (m < 1) throw std::range_error("tightness_necessary_dim: need m >= 1");
    return (m - 1) / 2;
}

} // namespace bettic
