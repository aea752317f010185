#ifndef RHOMIN_VERIFY_HPP
#define RHOMIN_VERIFY_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "rhomin/enumerate.hpp"
#include "rhomin/graph.hpp"

namespace rhomin {

enum class ClaimStatus { confirmed, refuted, exception };

std::string to_string(ClaimStatus s);

// Exhaustive-minimum report for one isomorphism class family.
struct MinimizerReport {
    int n = 0;
    std::optional<int> gamma;
    bool trees_only = true;
    std::uint64_t class_size = 0;
    std::vector<std::string> winners;  // canonical graph6, sorted
    double rho_estimate = 0.0;         // floating estimate of the minimum
    std::string rho_lo, rho_hi;        // exact rational bracket of the winner
    std::string runner_up_gap;         // exact rational lower bound, "0" if no runner-up
    bool exact = false;                // exact playoff ran
};

struct VerificationReport {
    std::string claim_id;
    std::string range;
    ClaimStatus status = ClaimStatus::confirmed;
    std::vector<std::string> winners;  // graph6 when meaningful
    std::string rho_lo, rho_hi;        // exact bracket when meaningful
    std::vector<std::string> exceptions;  // offending instances (graph6 or text)
    std::vector<std::string> evidence;    // deterministic per-instance lines
};

// Number of worker threads used by class sweeps (>=1); reports are identical
// for every value.  Defaults to RHOMIN_THREADS or the hardware count.
void set_sweep_threads(int threads);
int sweep_threads();

// Two-phase exhaustive minimization: floating pre-filter (candidates within
// 1e-6 of the running minimum survive), then an exact playoff among the
// survivors when `exact` is set.  Throws std::invalid_argument on an empty
// class.
MinimizerReport find_minimizers(const ClassQuery& q, bool exact = true);

// Over all connected graphs on n <= 9 vertices: the exact winner of every
// nonempty gamma-class is a tree.
VerificationReport verify_minimizer_is_tree(int n);

// Tree classes gamma = 1, 2, ceil(n/3): winners are the star, the balanced
// double broom, and the path, each unique.
VerificationReport verify_gamma_small(int n);

// Tree class gamma = 3 for 11 <= n <= 18: winner matches the long
// double-broom family member for n mod 3, plus the pairwise regime table
// and the valley ordering in the family parameter a.
VerificationReport verify_gamma3(int n);

// Tree minimizers with 2 <= gamma < ceil(n/3), n <= 16: some minimum
// dominating set attains pairwise distance exactly 3.
VerificationReport verify_distance_three(int n);

// Even n <= 16: every tree with gamma = n/2 is a pendant-per-vertex corona,
// the unique minimizer is the comb over a path, and lifting preserves the
// spectral-radius order of the cores.
VerificationReport verify_corona_even(int n);

// Odd n, 5 <= n <= 15: certified winner of the gamma = floor(n/2) tree class
// (all connected graphs too for n <= 9) reported against h_prime(n).
VerificationReport check_conjecture_odd(int n);

// Randomized strict-direction property suites for the graph surgeries:
// lemma_id in {"slide", "shift", "subdivide", "balance", "subgraph"}.
VerificationReport verify_lemma_suite(const std::string& lemma_id, int trials,
                                      std::uint64_t seed);

// Exact polynomial identities and closed-form cross-checks: the three
// quintic families against characteristic polynomials (11 <= n <= max_n),
// difference-polynomial factorizations and root formulas, the corona
// characteristic identity and lift, and the hub Perron ratio.
std::vector<VerificationReport> verify_identity_suite(int max_n = 25);

std::string to_json(const MinimizerReport& r);
std::string to_json(const VerificationReport& r);
std::string to_csv(const std::vector<VerificationReport>& reports);

}  // namespace rhomin

#endif
