#include "bettic/complex.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_set>

namespace bettic {

std::vector<Simplex> subsets_of_card(Simplex mask, int k) {
    std::vector<Simplex> out;
    const std::vector<int> verts = simplex_vertices(mask);
    const int n = static_cast<int>(verts.size());
    if (k < 0 || k > n) return out;
    if (k == 0) {
        out.push_back(0);
        return out;
    }
    std::vector<int> idx(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) idx[static_cast<std::size_t>(i)] = i;
    while (true) {
        Simplex s = 0;
        for (int i : idx) s |= vertex_bit(verts[static_cast<std::size_t>(i)]);
        out.push_back(s);
        int i = k - 1;
        while (i >= 0 && idx[static_cast<std::size_t>(i)] == n - k + i) --i;
        if (i < 0) break;
        ++idx[static_cast<std::size_t>(i)];
        for (int j = i + 1; j < k; ++j) idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
    }
    return out;
}

// ---------------------------------------------------------------------------
// construction
// ---------------------------------------------------------------------------

static std::vector<Simplex> antichain_maxima(std::vector<Simplex> faces) {
    std::sort(faces.begin(), faces.end());
    faces.erase(std::unique(faces.begin(), faces.end()), faces.end());
    std::vector<Simplex> maxima;
    for (std::size_t i = 0; i < faces.size(); ++i) {
        bool dominated = false;
        for (std::size_t j = 0; j < faces.size(); ++j) {
            if (i != j && (faces[i] & faces[j]) == faces[i] && faces[i] != faces[j]) {
                dominated = true;
                break;
            }
        }
        if (!dominated) maxima.push_back(faces[i]);
    }
    return maxima;
}

Complex::Complex(int m, std::vector<Simplex> facets) : m_(m), facets_(std::move(facets)) {
    std::sort(facets_.begin(), facets_.end(), size_lex_less);
    support_ = 0;
    for (Simplex f : facets_) support_ |= f;
    full_support_ = (support_ == full_mask(m_));
}

Complex Complex::build(int m, const std::vector<Simplex>& faces, bool strict) {
    if (m < 0 || m > kMaxVertices)
        throw std::range_error("vertex universe size must be between 0 and 64");
    for (Simplex f : faces) {
        if ((f & ~full_mask(m)) != 0)
            throw std::range_error("face has a vertex outside [m]");
    }
    if (m == 0 && !faces.empty()) {
        for (Simplex f : faces)
            if (f != 0) throw std::range_error("nonempty face on an empty universe");
    }
    std::vector<Simplex> maxima = antichain_maxima(faces);
    if (maxima.empty()) maxima.push_back(0); // the empty complex {emptyset}
    if (strict) {
        std::vector<Simplex> sorted(faces);
        std::sort(sorted.begin(), sorted.end());
        if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
            throw std::invalid_argument("strict build: duplicate input face");
        if (maxima.size() != faces.size())
            throw std::invalid_argument("strict build: input contains a dominated face");
    }
    return Complex(m, std::move(maxima));
}

Complex Complex::build(int m, const std::vector<std::vector<int>>& faces, bool strict) {
    std::vector<Simplex> masks;
    masks.reserve(faces.size());
    for (const auto& f : faces) {
        Simplex s = 0;
        for (int v : f) {
            if (v < 1 || v > m) throw std::range_error("vertex " + std::to_string(v) + " outside [1," + std::to_string(m) + "]");
            s |= vertex_bit(v);
        }
        masks.push_back(s);
    }
    return build(m, masks, strict);
}

Complex Complex::from_antichain(int m, std::vector<Simplex> facets) {
    if (facets.empty()) facets.push_back(0);
    return Complex(m, std::move(facets));
}

// ---------------------------------------------------------------------------
// queries
// ---------------------------------------------------------------------------

int Complex::dim() const {
    int d = -1;
    for (Simplex f : facets_) d = std::max(d, card(f) - 1);
    return d;
}

int Complex::mdim() const {
    int d = kMaxVertices;
    for (Simplex f : facets_) d = std::min(d, card(f) - 1);
    return d == kMaxVertices ? -1 : d;
}

bool Complex::contains(Simplex sigma) const {
    for (Simplex f : facets_)
        if ((sigma & f) == sigma) return true;
    return false;
}

std::vector<Simplex> Complex::faces() const {
    std::unordered_set<Simplex> seen;
    for (Simplex f : facets_) {
        // enumerate all subsets of f
        Simplex sub = f;
        while (true) {
            seen.insert(sub);
            if (sub == 0) break;
            sub = (sub - 1) & f;
        }
    }
    std::vector<Simplex> out(seen.begin(), seen.end());
    std::sort(out.begin(), out.end(), size_lex_less);
    return out;
}

std::vector<Simplex> Complex::faces_of_dim(int i) const {
    std::unordered_set<Simplex> seen;
    for (Simplex f : facets_) {
        if (card(f) < i + 1) continue;
        for (Simplex s : subsets_of_card(f, i + 1)) seen.insert(s);
    }
    std::vector<Simplex> out(seen.begin(), seen.end());
    std::sort(out.begin(), out.end(), lex_less_same_card);
    return out;
}

std::vector<long long> Complex::f_vector() const {
    const int d = dim();
    std::vector<long long> f(static_cast<std::size_t>(d + 1), 0);
    if (d < 0) return f;
    // guard against face-set blowups well past desk scale
    double bound = 0;
    for (Simplex fc : facets_) bound += static_cast<double>(1ull << std::min(card(fc), 62));
    if (bound > double(1ull << 26))
        throw capacity_error("f-vector face enumeration too large for this universe");
    for (Simplex face : faces())
        if (face != 0) ++f[static_cast<std::size_t>(card(face) - 1)];
    return f;
}

// ---------------------------------------------------------------------------
// operations
// ---------------------------------------------------------------------------

Complex restrict_to(const Complex& K, Simplex J) {
    if ((J & ~full_mask(K.m())) != 0) throw std::range_error("restriction set not inside [m]");
    std::vector<Simplex> masked;
    masked.reserve(K.facets().size());
    for (Simplex f : K.facets()) masked.push_back(f & J);
    std::vector<Simplex> maxima = antichain_maxima(std::move(masked));
    for (Simplex& f : maxima) f = compress_into(f, J);
    return Complex::from_antichain(card(J), std::move(maxima));
}

Complex link(const Complex& K, Simplex sigma) {
    if (!K.contains(sigma)) throw std::domain_error("link: sigma is not a face");
    const Simplex rest = full_mask(K.m()) & ~sigma;
    std::vector<Simplex> fac;
    for (Simplex f : K.facets())
        if ((f & sigma) == sigma) fac.push_back(compress_into(f & ~sigma, rest));
    return Complex::from_antichain(K.m() - card(sigma), std::move(fac));
}

Complex star(const Complex& K, Simplex sigma) {
    if (!K.contains(sigma)) throw std::domain_error("star: sigma is not a face");
    std::vector<Simplex> fac;
    for (Simplex f : K.facets())
        if ((f & sigma) == sigma) fac.push_back(f);
    return Complex::from_antichain(K.m(), std::move(fac));
}

Complex join(const Complex& K, const Complex& L) {
    std::vector<Simplex> fac;
    fac.reserve(K.facets().size() * L.facets().size());
    if (K.m() + L.m() > kMaxVertices) throw capacity_error("join exceeds the 64-vertex universe");
    for (Simplex f : K.facets())
        for (Simplex g : L.facets()) fac.push_back(f | (g << K.m()));
    return Complex::from_antichain(K.m() + L.m(), std::move(fac));
}

Complex delete_vertex(const Complex& K, int w) {
    if (w < 1 || w > K.m()) throw std::range_error("delete_vertex: vertex outside [m]");
    return restrict_to(K, full_mask(K.m()) & ~vertex_bit(w));
}

Complex complex_union(const Complex& K, const Complex& L) {
    if (K.m() != L.m()) throw std::range_error("union requires a common universe");
    std::vector<Simplex> fac(K.facets());
    fac.insert(fac.end(), L.facets().begin(), L.facets().end());
    return Complex::from_antichain(K.m(), antichain_maxima(std::move(fac)));
}

Complex complex_intersection(const Complex& K, const Complex& L) {
    if (K.m() != L.m()) throw std::range_error("intersection requires a common universe");
    std::vector<Simplex> fac;
    for (Simplex f : K.facets())
        for (Simplex g : L.facets()) fac.push_back(f & g);
    return Complex::from_antichain(K.m(), antichain_maxima(std::move(fac)));
}

std::vector<Simplex> minimal_non_faces(const Complex& K) {
    const int m = K.m();
    if (m > 24) throw capacity_error("minimal non-face enumeration capped at 24 vertices");
    std::vector<Simplex> out;
    const int maxsize = std::min(m, K.dim() + 2); // removing a vertex from a minimal non-face gives a face
    for (int s = 1; s <= maxsize; ++s) {
        for (Simplex cand : subsets_of_card(full_mask(m), s)) {
            if (K.contains(cand)) continue;
            bool minimal = true;
            Simplex rem = cand;
            while (rem) {
                Simplex low = rem & (~rem + 1);
                if (!K.contains(cand & ~low)) {
                    minimal = false;
                    break;
                }
                rem &= rem - 1;
            }
            if (minimal) out.push_back(cand);
        }
    }
    std::sort(out.begin(), out.end(), size_lex_less);
    return out;
}

ComplexMetrics metrics(const Complex& K) {
    return ComplexMetrics{K.dim(), K.mdim(), K.f_vector()};
}

bool is_pure(const Complex& K) { return K.dim() == K.mdim(); }

bool is_connected(const Complex& K) {
    if (K.is_empty_complex()) return true; // vacuous
    const auto& fac = K.facets();
    std::vector<std::size_t> parent(fac.size());
    for (std::size_t i = 0; i < fac.size(); ++i) parent[i] = i;
    auto find = [&](std::size_t x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (std::size_t i = 0; i < fac.size(); ++i)
        for (std::size_t j = i + 1; j < fac.size(); ++j)
            if (fac[i] & fac[j]) parent[find(i)] = find(j);
    std::size_t root = find(0);
    for (std::size_t i = 1; i < fac.size(); ++i)
        if (find(i) != root) return false;
    return true;
}

bool is_pseudomanifold(const Complex& K) {
    const int n = K.dim();
    if (!is_pure(K)) return false;
    const std::vector<Simplex> top = K.faces_of_dim(n);
    // (ii) every (n-1)-face lies in exactly two n-faces
    for (Simplex ridge : K.faces_of_dim(n - 1)) {
        int count = 0;
        for (Simplex t : top)
            if ((ridge & t) == ridge) ++count;
        if (count != 2) return false;
    }
    // (iii) strong connectivity of the n-faces through (n-1)-faces
    if (top.empty()) return false;
    std::vector<char> seen(top.size(), 0);
    std::vector<std::size_t> stack{0};
    seen[0] = 1;
    while (!stack.empty()) {
        std::size_t i = stack.back();
        stack.pop_back();
        for (std::size_t j = 0; j < top.size(); ++j) {
            if (!seen[j] && card(top[i] & top[j]) == n) {
                seen[j] = 1;
                stack.push_back(j);
            }
        }
    }
    for (char c : seen)
        if (!c) return false;
    return true;
}

std::string facet_list_string(const Complex& K) {
    std::string out;
    for (Simplex f : K.facets()) {
        out += '[';
        bool first = true;
        for (int v : simplex_vertices(f)) {
            if (!first) out += ',';
            out += std::to_string(v);
            first = false;
        }
        out += ']';
    }
    return out;
}

} // namespace bettic
