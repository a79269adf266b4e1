#include "bettic/homology.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

namespace bettic {

// All faces grouped by degree; faces[i] holds the (i-1)-faces (so faces[0]
// is the singleton list {emptyset}), each level sorted lexicographically.
static std::vector<std::vector<Simplex>> faces_by_degree(const std::vector<Simplex>& facets) {
    int dim = -1;
    for (Simplex f : facets) dim = std::max(dim, card(f) - 1);
    std::vector<std::unordered_set<Simplex>> seen(static_cast<std::size_t>(dim + 2));
    for (Simplex f : facets) {
        Simplex sub = f;
        while (true) {
            seen[static_cast<std::size_t>(card(sub))].insert(sub);
            if (sub == 0) break;
            sub = (sub - 1) & f;
        }
    }
    std::vector<std::vector<Simplex>> out(static_cast<std::size_t>(dim + 2));
    for (std::size_t lvl = 0; lvl < out.size(); ++lvl) {
        out[lvl].assign(seen[lvl].begin(), seen[lvl].end());
        std::sort(out[lvl].begin(), out[lvl].end(), lex_less_same_card);
    }
    return out;
}

// Rank of del_i given the (i-1)- and i-face lists.
static int boundary_rank(const std::vector<Simplex>& rows_faces,
                         const std::vector<Simplex>& cols_faces, const FieldSpec& F) {
    const int rows = static_cast<int>(rows_faces.size());
    const int cols = static_cast<int>(cols_faces.size());
    if (rows == 0 || cols == 0) return 0;

    std::unordered_map<Simplex, int> row_index;
    row_index.reserve(rows_faces.size() * 2);
    for (int r = 0; r < rows; ++r) row_index.emplace(rows_faces[static_cast<std::size_t>(r)], r);

    if (F.is_f2()) {
        const int words = (cols + 63) / 64;
        std::vector<std::vector<std::uint64_t>> bits(
            static_cast<std::size_t>(rows), std::vector<std::uint64_t>(static_cast<std::size_t>(words), 0));
        for (int c = 0; c < cols; ++c) {
            Simplex sigma = cols_faces[static_cast<std::size_t>(c)];
            Simplex rem = sigma;
            while (rem) {
                Simplex low = rem & (~rem + 1);
                int r = row_index.at(sigma & ~low);
                bits[static_cast<std::size_t>(r)][c >> 6] ^= std::uint64_t{1} << (c & 63);
                rem &= rem - 1;
            }
        }
        return rank_f2_packed(bits, cols);
    }

    // signed boundary for Fp / rationals
    if (F.is_fp()) {
        const std::uint32_t p = F.prime();
        std::vector<std::uint32_t> a(static_cast<std::size_t>(rows) * cols, 0);
        for (int c = 0; c < cols; ++c) {
            Simplex sigma = cols_faces[static_cast<std::size_t>(c)];
            int pos = 0;
            Simplex rem = sigma;
            while (rem) {
                Simplex low = rem & (~rem + 1);
                int r = row_index.at(sigma & ~low);
                a[static_cast<std::size_t>(r) * cols + c] = (pos % 2 == 0) ? 1u : p - 1u;
                rem &= rem - 1;
                ++pos;
            }
        }
        return rank_fp_dense(a, rows, cols, p);
    }

    std::vector<std::int64_t> a(static_cast<std::size_t>(rows) * cols, 0);
    for (int c = 0; c < cols; ++c) {
        Simplex sigma = cols_faces[static_cast<std::size_t>(c)];
        int pos = 0;
        Simplex rem = sigma;
        while (rem) {
            Simplex low = rem & (~rem + 1);
            int r = row_index.at(sigma & ~low);
            a[static_cast<std::size_t>(r) * cols + c] = (pos % 2 == 0) ? 1 : -1;
            rem &= rem - 1;
            ++pos;
        }
    }
    return rank_q_dense(a, rows, cols);
}

std::vector<long long> betti_from_facets(const std::vector<Simplex>& facets, const FieldSpec& F) {
    // cones have no reduced homology; restriction sweeps hit this constantly
    Simplex apex = ~Simplex{0};
    int dim = -1;
    for (Simplex f : facets) {
        apex &= f;
        dim = std::max(dim, card(f) - 1);
    }
    if (apex != 0) return std::vector<long long>(static_cast<std::size_t>(dim + 2), 0);

    double face_bound = 0;
    for (Simplex f : facets) face_bound += static_cast<double>(1ull << std::min(card(f), 62));
    if (face_bound > double(1ull << 26))
        throw capacity_error("face enumeration too large for homology at this scale");

    const auto levels = faces_by_degree(facets); // levels[k] = (k-1)-faces
    const int top = static_cast<int>(levels.size()); // dim + 2
    // ranks[k] = rank of del_{k-1} : C_{k-1} -> C_{k-2}
    std::vector<int> ranks(static_cast<std::size_t>(top + 1), 0);
    for (int k = 1; k < top; ++k)
        ranks[static_cast<std::size_t>(k)] =
            boundary_rank(levels[static_cast<std::size_t>(k - 1)], levels[static_cast<std::size_t>(k)], F);
    std::vector<long long> betti(static_cast<std::size_t>(top), 0);
    for (int k = 0; k < top; ++k) {
        betti[static_cast<std::size_t>(k)] = static_cast<long long>(levels[static_cast<std::size_t>(k)].size()) -
                                             ranks[static_cast<std::size_t>(k)] -
                                             ranks[static_cast<std::size_t>(k + 1)];
    }
    return betti;
}

SparseMatrix boundary_matrix(const Complex& K, int i, const FieldSpec& F) {
    const int d = K.dim();
    if (i < -1 || i > d + 1) throw std::range_error("boundary degree out of range");
    SparseMatrix M;
    const std::vector<Simplex> cols_faces = (i <= d) ? K.faces_of_dim(i) : std::vector<Simplex>{};
    const std::vector<Simplex> rows_faces = (i - 1 >= -1) ? K.faces_of_dim(i - 1) : std::vector<Simplex>{};
    M.cols = static_cast<int>(cols_faces.size());
    M.rows = static_cast<int>(rows_faces.size());
    std::unordered_map<Simplex, int> row_index;
    for (int r = 0; r < M.rows; ++r) row_index.emplace(rows_faces[static_cast<std::size_t>(r)], r);
    for (int c = 0; c < M.cols; ++c) {
        Simplex sigma = cols_faces[static_cast<std::size_t>(c)];
        int pos = 0;
        Simplex rem = sigma;
        while (rem) {
            Simplex low = rem & (~rem + 1);
            M.entries.push_back({row_index.at(sigma & ~low), c, (pos % 2 == 0) ? 1 : -1});
            rem &= rem - 1;
            ++pos;
        }
    }
    // F is accepted for interface symmetry; entries are universal integers.
    (void)F;
    return M;
}

BettiTable reduced_betti(const Complex& K, const FieldSpec& F) {
    BettiTable t;
    t.field = F;
    t.by_degree = betti_from_facets(K.facets(), F);
    return t;
}

long long tb_reduced(const Complex& K, const FieldSpec& F) {
    long long total = 0;
    for (long long b : betti_from_facets(K.facets(), F)) total += b;
    return total;
}

long long tb_unreduced(const Complex& K, const FieldSpec& F) {
    if (K.is_empty_complex()) return 0;
    return tb_reduced(K, F) + 1;
}

long long reduced_euler(const Complex& K) {
    long long chi = -1;
    int sign = 1;
    for (long long fi : K.f_vector()) {
        chi += sign * fi;
        sign = -sign;
    }
    return chi;
}

} // namespace bettic
