#ifndef BETTIC_HOCHSTER_HPP
#define BETTIC_HOCHSTER_HPP

#include <utility>
#include <vector>

#include <gmpxx.h>

#include "bettic/complex.hpp"
#include "bettic/field.hpp"

namespace bettic {

// Bigraded Betti numbers beta^{-i,2j}: for every J inside [m] the reduced
// homology of the full subcomplex K|_J in degree |J|-i-1 contributes to
// entry (i, j=|J|).  Entry (0,0) is always 1 (the J = emptyset term).
class BigradedTable {
  public:
    BigradedTable(int m, FieldSpec field)
        : m_(m), field_(std::move(field)),
          cells_(static_cast<std::size_t>((m + 1) * (m + 1)), 0) {}

    int m() const { return m_; }
    const FieldSpec& field() const { return field_; }

    long long entry(int i, int j) const {
        if (i < 0 || i > m_ || j < 0 || j > m_) return 0;
        return cells_[static_cast<std::size_t>(i) * (m_ + 1) + j];
    }
    void add(int i, int j, long long v) {
        cells_[static_cast<std::size_t>(i) * (m_ + 1) + j] += v;
    }
    void merge(const BigradedTable& o) {
        for (std::size_t k = 0; k < cells_.size(); ++k) cells_[k] += o.cells_[k];
    }
    long long total() const {
        long long t = 0;
        for (long long v : cells_) t += v;
        return t;
    }
    // Nonzero entries as ((i, j), value), ordered by (i, j).
    std::vector<std::pair<std::pair<int, int>, long long>> nonzero() const;

  private:
    int m_;
    FieldSpec field_;
    std::vector<long long> cells_;
};

// Sweep capacity for the 2^m subset enumerations below.
inline constexpr int kSweepMaxVertices = 24;

// Hochster sweep: the table of all beta^{-i,2j}(K) over F.
// threads = 0 picks the hardware count; results are identical for any count.
BigradedTable bigraded(const Complex& K, const FieldSpec& F, int threads = 1);

// Total bigraded Betti number: the sum over all J of the reduced total Betti
// number of K|_J (equivalently the entry sum of bigraded()).
long long d_total(const Complex& K, const FieldSpec& F, int threads = 1);

// Weighted Betti average: (1/(m+1)) * sum_J betti_i(K|_J) / C(m,|J|),
// as an exact rational.
mpq_class tau(const Complex& K, const FieldSpec& F, int i, int threads = 1);

} // namespace bettic

#endif
