#pragma once

#include <cstdint>
#include <stdexcept>
#include <utility>
#include <vector>

#include "kaplansky/group_ring.hpp"

namespace kaplansky {

// Which of the four components a symmetric-candidate enumeration targets.
enum class ComponentRole { p, q, r, s };

enum class SearchStrategy { full, ansatz };

// Exponent box for candidate supports.  The full strategy uses all three
// ranges; the ansatz strategy constrains z-exponents only.
struct SearchBox {
    PrimeChar characteristic;
    std::int32_t xmin = -1, xmax = 1;
    std::int32_t ymin = -1, ymax = 1;
    std::int32_t zmin = -1, zmax = 1;
    SearchStrategy strategy = SearchStrategy::full;
    // Upper bound on the number of candidate/key evaluations a search may
    // attempt before refusing to run.
    std::uint64_t pair_ceiling = 50'000'000;

    void validate() const; // throws std::invalid_argument on lo > hi
};

// Thrown when a requested search would exceed the box's evaluation ceiling.
class BoxTooLarge : public std::runtime_error {
public:
    BoxTooLarge(std::uint64_t estimated_pairs, std::uint64_t ceiling);
    std::uint64_t estimated_pairs() const { return estimated_; }
    std::uint64_t ceiling() const { return ceiling_; }

private:
    std::uint64_t estimated_;
    std::uint64_t ceiling_;
};

struct SearchHit {
    GroupRingElem element;
    std::pair<Laurent, Laurent> ps_key;
    std::pair<Laurent, Laurent> qr_key;
    bool canonical = false;

    friend bool operator==(const SearchHit&, const SearchHit&) = default;
};

struct SearchStats {
    std::uint64_t left_candidates = 0;   // (p,s) pairs resp. (f1,f6,f7) tuples
    std::uint64_t right_candidates = 0;  // (q,r) pairs resp. (f2..f5) tuples
    std::uint64_t key_matches = 0;       // exact key equalities, incl. trivial
    std::uint64_t trivial_discarded = 0; // matches that were trivial units
    std::uint64_t unverified_matches = 0;// key matches failing verify_unit (expected 0)
    std::uint64_t verified_hits = 0;     // nontrivial verified, before dedup
};

struct SearchResult {
    std::vector<SearchHit> hits; // canonical, deduplicated, sorted
    SearchStats stats;
};

// Number of symmetric candidates (including the zero polynomial) the role
// admits inside the box; saturates at UINT64_MAX instead of overflowing.
std::uint64_t symmetric_candidate_count(ComponentRole role, const SearchBox& box);

// All Laurent polynomials supported inside the box that satisfy the role's
// xy-constraint (p_xy = x^-1 y^-1 p, q_xy = y q, r_xy = x^-1 r, s_xy = s).
// Each candidate is emitted exactly once, in a deterministic order; cells
// whose constraint partner falls outside the box are forced to zero.
std::vector<Laurent> enumerate_symmetric(ComponentRole role, const SearchBox& box);

// Scale the element by the inverse of its leading coefficient (first nonzero
// component in p,q,r,s order, lexicographically least exponent) so hits that
// differ by a global scalar collide.  The join keys are quadratic in the
// element and the scalar squares to 1, so they are left untouched.
SearchHit canonicalize(SearchHit hit);
GroupRingElem canonicalize(const GroupRingElem& u);

// Full meet-in-the-middle search over xy-symmetric quadruples in the box:
// hash-join of (p,s) pair keys against (q,r) pair keys, exact key recheck on
// every hash match, verify_unit on every joined quadruple, trivial matches
// discarded, results canonicalized/deduplicated/sorted.  Requires
// strategy == full.
SearchResult search_units(const SearchBox& box, unsigned threads = 1);

// Search restricted to elements assembled from seven z-only polynomials with
// exponents in [zmin, zmax]: hash-join of (f1,f6,f7) tuples against
// (f2,f3,f4,f5) tuples on the coupled residuals of the f-system, with the
// single-side residuals used as local filters.  Requires strategy == ansatz.
SearchResult ansatz_search(const SearchBox& box, unsigned threads = 1);

} // namespace kaplansky
