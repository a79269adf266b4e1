#include "bettic/sperner.hpp"

#include <stdexcept>
#include <string>

namespace bettic {

bool is_sperner(const SpernerFamily& F) {
    for (Simplex a : F.members)
        if ((a & ~F.ground) != 0) throw std::range_error("family member outside the ground set");
    for (std::size_t i = 0; i < F.members.size(); ++i) {
        for (std::size_t j = 0; j < F.members.size(); ++j) {
            if (i == j) continue;
            if ((F.members[i] & F.members[j]) == F.members[i]) return false; // i inside j (or equal)
        }
    }
    return true;
}

bool is_sperner_over(const SpernerFamily& F, Simplex Y) {
    if (!is_sperner(F)) return false;
    for (Simplex a : F.members)
        if ((a & Y) == 0) return false;
    return true;
}

static mpz_class binom(long n, long k) {
    if (k < 0 || k > n || n < 0) return 0;
    mpz_class b;
    mpz_bin_uiui(b.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return b;
}

mpz_class sperner_max(int n) {
    if (n < 0) throw std::range_error("sperner_max: n must be nonnegative");
    return binom(n, n / 2);
}

mpz_class f_bound(int n, int k) {
    if (n < 1 || k < 1 || k > n) throw std::range_error("f_bound: need 1 <= k <= n");
    const long half_up = (n + 1) / 2;
    return binom(n, half_up) - binom(n - k, half_up);
}

bool is_near_cone(const Complex& K) {
    if (K.m() < 1) throw std::range_error("near-cone predicate needs vertex 1 in the universe");
    const Simplex one = vertex_bit(1);
    for (Simplex S : K.faces()) {
        if (S & one) continue;
        Simplex rem = S;
        while (rem) {
            Simplex j = rem & (~rem + 1);
            if (!K.contains((S & ~j) | one)) return false;
            rem &= rem - 1;
        }
    }
    return true;
}

bool is_shifted(const Complex& K) {
    // single-vertex decreases generate the dominance order
    for (Simplex S : K.faces()) {
        for (int v : simplex_vertices(S)) {
            for (int w = 1; w < v; ++w) {
                if (S & vertex_bit(w)) continue;
                if (!K.contains((S & ~vertex_bit(v)) | vertex_bit(w))) return false;
            }
        }
    }
    return true;
}

SpernerFamily b_delta(const Complex& K) {
    if (!is_near_cone(K)) throw std::domain_error("B(K) is defined for near-cones only");
    const Simplex one = vertex_bit(1);
    SpernerFamily F;
    F.ground = full_mask(K.m()) & ~one;
    for (Simplex S : K.faces())
        if (!K.contains(S | one)) F.members.push_back(S);
    return F;
}

Complex near_cone_from_family(const SpernerFamily& family, Simplex spine, int m) {
    const Simplex ground = full_mask(m) & ~vertex_bit(1);
    if ((spine & ~ground) != 0) throw std::range_error("spine must lie in {2..m}");
    const int d = card(spine);
    auto render = [](Simplex s) {
        std::string out = "{";
        bool first = true;
        for (int v : simplex_vertices(s)) {
            if (!first) out += ',';
            out += std::to_string(v);
            first = false;
        }
        return out + "}";
    };
    for (Simplex a : family.members) {
        if ((a & ~ground) != 0) throw std::range_error("family member outside {2..m}");
        if ((a & spine) == a)
            throw std::domain_error("family member " + render(a) + " is contained in the spine");
        if (card(a) > d + 1)
            throw std::domain_error("family member of " + std::to_string(card(a)) +
                                    " vertices exceeds the spine dimension bound " + std::to_string(d + 1));
    }
    SpernerFamily checked = family;
    checked.ground = ground;
    if (!is_sperner(checked)) throw std::domain_error("input family is not an antichain");

    const Simplex one = vertex_bit(1);
    std::vector<Simplex> faces;
    // cone over E(F) minus the family's own (maximal) faces
    for (Simplex member : family.members) {
        Simplex sub = member;
        while (true) {
            if (sub != member) {
                bool in_family = false;
                for (Simplex other : family.members)
                    if (other == sub) in_family = true;
                if (!in_family) {
                    faces.push_back(sub);
                    faces.push_back(sub | one);
                }
            }
            if (sub == 0) break;
            sub = (sub - 1) & member;
        }
        faces.push_back(member); // the family itself stays, uncoupled from the apex
    }
    if (family.members.empty()) faces.push_back(0);
    faces.push_back(one | spine); // the simplex on {1} and the spine
    return Complex::build(m, faces);
}

} // namespace bettic
