#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ncmod/algebra.hpp"
#include "ncmod/amodule.hpp"
#include "ncmod/genmatrix.hpp"
#include "ncmod/hom.hpp"
#include "ncmod/json_io.hpp"
#include "ncmod/ncpoly.hpp"

namespace ncmod {

/// splitmix64: the fixed arithmetic recurrence, so every run of every build
/// draws identical streams from identical seeds.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ull);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }

    /// Uniform value in [lo, hi], inclusive.
    long range(long lo, long hi) {
        return lo + static_cast<long>(next() % static_cast<std::uint64_t>(hi - lo + 1));
    }

private:
    std::uint64_t state_;
};

/// Per-trial sub-seed, independent of execution order.
std::uint64_t split_seed(std::uint64_t seed, std::uint64_t index);

/// Small random rational: numerator in [-3, 3], denominator in {1, 2}.
Rational gen_rational(SplitMix64& prng);
Rational gen_nonzero_rational(SplitMix64& prng);
AlgElem gen_element(const Algebra::Ptr& algebra, SplitMix64& prng);
AlgMatrix gen_matrix(const Algebra::Ptr& algebra, std::size_t rows, std::size_t cols,
                     SplitMix64& prng);
DMatrix gen_qmatrix(std::size_t rows, std::size_t cols, SplitMix64& prng);
/// At most 4 terms, word length 1..4, nonzero coefficients.
NCPoly gen_ncpoly(const std::vector<std::string>& vars, SplitMix64& prng);
OrientedVector gen_vector(const Algebra::Ptr& algebra, Orientation o, std::size_t n,
                          SplitMix64& prng);
/// Unipotent upper-triangular basis of A^n; always verifies.
Basis gen_basis(const Algebra::Ptr& algebra, Orientation o, std::size_t n, SplitMix64& prng);

struct SuiteFailure {
    std::string law;
    std::string inputs;
    std::string detail;
};

/// Deterministic record of one suite run; passed iff failures is empty.
struct SuiteReport {
    std::string suite;
    std::string algebra;
    std::uint64_t trials = 0;
    std::uint64_t seed = 0;
    bool passed = false;
    std::vector<SuiteFailure> failures;
};

Json report_to_json(const SuiteReport& report);

/// All suite names in the order `--suite all` runs them.
std::vector<std::string> suite_names();

/// True when the suite has something meaningful to do over the algebra
/// (expected-rejection modes count as meaningful).
bool suite_compatible(const std::string& suite, const Algebra::Ptr& algebra);

/**
 * Runs one named property suite over one algebra with seeded trials.
 * `dims` scales matrix sizes / module ranks where the suite uses them.
 * Unknown names and incompatible combinations raise DomainError;
 * trials must be >= 1.
 */
SuiteReport run_suite(const std::string& suite, const std::string& algebra,
                      std::uint64_t trials, std::uint64_t seed,
                      std::optional<std::size_t> dims = std::nullopt);

/// Every suite compatible with the algebra, in suite_names() order.
std::vector<SuiteReport> run_all_suites(const std::string& algebra, std::uint64_t trials,
                                        std::uint64_t seed,
                                        std::optional<std::size_t> dims = std::nullopt);

/// Which matrix-product form reproduces hom composition, per orientation;
/// identified empirically across seeded trials ("cr(g,h)" etc.).
struct StarIdentification {
    std::string left_column;
    std::string left_row;
    std::string right_column;
    std::string right_row;
};
StarIdentification identify_star_forms(const Algebra::Ptr& algebra, std::uint64_t trials,
                                       std::uint64_t seed);

/// Basis pair (i, j) whose left and right shifts fail to commute, if any.
std::optional<std::pair<std::size_t, std::size_t>>
find_noncommuting_shift_pair(const Algebra::Ptr& algebra);

/// Basis triple with nonzero associator, if any.
std::optional<std::array<std::size_t, 3>>
find_nonzero_associator_triple(const Algebra::Ptr& algebra);

/// Coefficients and components for which left- and right-side contraction
/// give different vectors, found by seeded search.
struct SideActionWitness {
    std::vector<AlgElem> coeffs;
    std::vector<std::vector<AlgElem>> comps;
    OrientedVector left_value;
    OrientedVector right_value;
};
std::optional<SideActionWitness> find_side_action_witness(const Algebra::Ptr& algebra,
                                                          std::uint64_t trials,
                                                          std::uint64_t seed);

} // namespace ncmod
