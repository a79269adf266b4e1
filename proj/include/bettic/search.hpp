#ifndef BETTIC_SEARCH_HPP
#define BETTIC_SEARCH_HPP

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "bettic/canonical.hpp"
#include "bettic/complex.hpp"
#include "bettic/field.hpp"

namespace bettic {

// --- exhaustive enumeration -------------------------------------------------

inline constexpr int kEnumFreeMax = 5;  // exhaustive without ceremony
inline constexpr int kEnumGatedMax = 6; // behind the long-running flag

// One representative per isomorphism class of complexes with vertex set [m]
// (full support) and dimension exactly d, or every dimension when d is
// absent.  The callback may return false to stop early.  m = 6 requires
// allow_long; larger m is out of capacity.
void enumerate(int m, std::optional<int> d, bool allow_long,
               const std::function<bool(const Complex&)>& yield);

// Convenience: count of isomorphism classes.
long long count_classes(int m, std::optional<int> d, bool allow_long = false);

// Every labeled complex (no isomorphism reduction), for label-sensitive
// sweeps like the shifted-complex suite.  Capped at m <= 5.
void enumerate_labeled(int m, std::optional<int> d, bool require_full_support,
                       const std::function<bool(const Complex&)>& yield);

// --- extremal scans ----------------------------------------------------------

enum class Objective { TB_MAX, D_MIN, D_MAX, TIGHT_ALL };

Objective parse_objective(const std::string& name);
std::string objective_name(Objective o);

struct ScanReport {
    int m = 0;
    std::optional<int> d;
    Objective objective = Objective::TB_MAX;
    FieldSpec field = FieldSpec::f2();
    long long extremal_value = 0; // witness count for TIGHT_ALL
    std::vector<Complex> witnesses;        // canonical representatives, sorted
    std::vector<std::string> witness_keys; // their canonical keys
    long long enumerated = 0;              // isomorphism classes examined
    double elapsed_seconds = 0;
};

using ProgressFn = std::function<void(long long classes_seen)>;

// Evaluates the objective on every class of the enumeration and returns the
// extremal value with the full attaining set.  Deterministic for any thread
// count (associative-commutative reduction, canonical witness order).
ScanReport scan(int m, std::optional<int> d, Objective objective, const FieldSpec& F,
                int threads = 1, bool allow_long = false, const ProgressFn& progress = nullptr);

// --- theorem verifiers --------------------------------------------------------

struct VerifyParams {
    std::optional<int> m;
    std::optional<int> m_max;
    std::optional<int> n_max;
    std::optional<int> d;
    int samples = 1000;
    std::uint64_t seed = 0;
    FieldSpec field = FieldSpec::f2();
    int threads = 1;
    bool allow_long = false;
};

struct VerifyReport {
    std::string id;
    bool pass = false;
    long long checked = 0;
    std::vector<std::string> counterexamples;
    std::vector<std::string> notes;
};

// Known ids: BK-1.2, TB-2.2, MV-2.1, SPERNER-2.8, SIGMA-2.9, BOUNDS-2.10,
// TIGHT-3.12, LINKS-3.10, MV-4.1, DMAX-4.2, G-5.1.
VerifyReport verify(const std::string& theorem_id, const VerifyParams& params);

std::vector<std::string> verifier_ids();

// Seeded random subcomplex of the full simplex on [m]; support may be
// partial.  Shared by the sampled verifiers and the property suites.
Complex random_subcomplex(int m, std::uint64_t& state);

} // namespace bettic

#endif
