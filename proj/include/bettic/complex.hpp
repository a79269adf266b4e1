#ifndef BETTIC_COMPLEX_HPP
#define BETTIC_COMPLEX_HPP

#include <string>
#include <vector>

#include "bettic/simplex.hpp"

namespace bettic {

// A finite simplicial complex on vertex set [m], stored as its facet
// antichain.  The empty complex {emptyset} is represented by the single
// facet 0; a complex with no faces at all is not representable.  Values are
// immutable after construction and safe to share across threads.
class Complex {
  public:
    // Downward closure of `faces`; dominated input faces are dropped so the
    // stored facets form an antichain.  With strict = true a dominated or
    // duplicated input face is an error instead.
    static Complex build(int m, const std::vector<Simplex>& faces, bool strict = false);
    static Complex build(int m, const std::vector<std::vector<int>>& faces, bool strict = false);

    // The caller guarantees `facets` is already an antichain (used by the
    // enumerator, where normalization would be wasted work).
    static Complex from_antichain(int m, std::vector<Simplex> facets);

    int m() const { return m_; }
    const std::vector<Simplex>& facets() const { return facets_; }
    bool full_support() const { return full_support_; }
    Simplex support() const { return support_; }

    int dim() const;   // -1 for {emptyset}
    int mdim() const;  // minimal facet dimension
    bool is_empty_complex() const { return facets_.size() == 1 && facets_[0] == 0; }

    // sigma is a face iff it is contained in some facet.
    bool contains(Simplex sigma) const;

    // All faces (including the empty simplex), sorted by (size, lex).
    std::vector<Simplex> faces() const;
    // Faces of dimension i (i.e. of size i+1), sorted lexicographically.
    std::vector<Simplex> faces_of_dim(int i) const;

    // f-vector (f_0, ..., f_dim); empty for {emptyset}.
    std::vector<long long> f_vector() const;

    bool operator==(const Complex& o) const { return m_ == o.m_ && facets_ == o.facets_; }

  private:
    Complex(int m, std::vector<Simplex> facets);
    int m_;
    std::vector<Simplex> facets_; // sorted by (size, lex), never empty
    Simplex support_;
    bool full_support_;
};

// --- combinatorial operations ----------------------------------------------

// Full subcomplex K|_J, re-indexed onto {1..|J|} in inherited vertex order.
Complex restrict_to(const Complex& K, Simplex J);

// Faces disjoint from sigma whose union with sigma is a face, on the
// re-indexed universe [m] minus sigma.  sigma must be a face.
Complex link(const Complex& K, Simplex sigma);

// Faces tau with tau united with sigma a face, on the unchanged universe [m].
Complex star(const Complex& K, Simplex sigma);

// Join: L's vertices are shifted past K's universe.
Complex join(const Complex& K, const Complex& L);

// restrict_to(K, [m] minus {w}).
Complex delete_vertex(const Complex& K, int w);

// Union / intersection of face sets; both arguments on the same universe.
Complex complex_union(const Complex& K, const Complex& L);
Complex complex_intersection(const Complex& K, const Complex& L);

// All inclusion-minimal non-faces; empty iff K is the full simplex on [m].
std::vector<Simplex> minimal_non_faces(const Complex& K);

struct ComplexMetrics {
    int dim;
    int mdim;
    std::vector<long long> f_vector;
};
ComplexMetrics metrics(const Complex& K);

bool is_pure(const Complex& K);
bool is_connected(const Complex& K);
// Conditions: pure of dimension n, every (n-1)-face in exactly two n-faces,
// and the n-faces strongly connected through shared (n-1)-faces.
bool is_pseudomanifold(const Complex& K);

// Serialized facet list "[1,2][1,3]..." with (size, lex) facet order;
// the byte-stable interchange ordering.
std::string facet_list_string(const Complex& K);

} // namespace bettic

#endif
