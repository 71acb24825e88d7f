/**
 * Independent checks of a candidate decomposition against singular
 * cohomology of the underlying space, the fixed set and the orbit space.
 *
 *  - quotient row:    H^{p,0}(X) = H^p_sing(X/C2), with X/C2 built as a
 *                     cellular model and its Betti numbers computed over F2;
 *  - rho-localization: free summands Sigma^{p,q} M2 correspond, through
 *                     p - q, to the singular cohomology of X^{C2};
 *  - forgetful LES:   exactness of ... -> H^{p-1,q} -rho-> H^{p,q+1} ->
 *                     H^p_sing(X) -> H^{p,q} -rho-> ... as a rank identity;
 *  - β-recovery:      β = 2 #Sigma^{1,0}A_0 + #Sigma^{1,0}M2 + #Sigma^{1,1}M2;
 *  - top class:       a unique free summand with p >= 2, at (2, codim of the
 *                     largest fixed component).
 */
#ifndef C2COH_VERIFY_HPP
#define C2COH_VERIFY_HPP

#include <string>
#include <vector>

#include <json.hpp>

#include "c2coh/algebra.hpp"
#include "c2coh/surface.hpp"

namespace c2coh {

struct Finding {
    std::string check;
    nlohmann::json location;
    nlohmann::json expected;
    nlohmann::json actual;
    bool ok = true;
};

struct Report {
    std::vector<Finding> findings;

    bool passed() const;
    std::vector<Finding> violations() const;
    void append(const Report& other);
    /// JSON list of {check, location, expected, actual, ok}.
    nlohmann::json to_json(bool violations_only = false) const;
};

Report check_quotient_row(const Decomposition& d, const InvariantProfile& pr);
Report check_rho_localization(const Decomposition& d, const InvariantProfile& pr);
/// Lists only violations.
Report check_forgetful_les(const Decomposition& d, const SingProfile& sing, const Window& w = kDefaultWindow);
/// Nonfree and trivial profiles only (std::invalid_argument otherwise).
Report check_beta_recovery(const Decomposition& d, const InvariantProfile& pr);
/// Nonfree and trivial profiles only (std::invalid_argument otherwise).
Report check_top_class(const Decomposition& d, const InvariantProfile& pr);

struct CheckOutcome {
    std::string name;
    bool applicable = true;
    bool passed = true;
};

struct Verification {
    InvariantProfile profile;
    Decomposition decomposition;
    std::vector<CheckOutcome> checks;
    Report report;

    bool passed() const;
    nlohmann::json to_json() const;
};

/// Runs every applicable check on d as a candidate for H^{*,*} of a surface with profile pr.
Verification verify_decomposition(const Decomposition& d, const InvariantProfile& pr,
                                  const Window& les_window = kDefaultWindow);

/// invariants -> closed_form -> verify_decomposition. Throws ValidationError.
Verification verify_all(const SurgeryWord& w, const Window& les_window = kDefaultWindow);

struct Mutation {
    std::string description;
    Decomposition mutated;
};

/**
 * Every single-summand change of d: removing one copy of each summand
 * present, and inserting one Sigma^{p,q} M2 (p in [-1,3], q in [-2,4]) or
 * one Sigma^{p,0} A_n (n in [0,3], p in [-1,3]).
 */
std::vector<Mutation> single_summand_mutations(const Decomposition& d);

}  // namespace c2coh

#endif  // C2COH_VERIFY_HPP
