/**
 * Cohomology of C2-surfaces as Decompositions over M2.
 *
 * closed_form() dispatches on the invariant profile. transform() is an
 * independent route: it rewrites the answer for Y into the answer for Y
 * after one surgery, one rule per surgery and case. Folding transform over
 * a word must land on closed_form of the folded profile.
 */
#ifndef C2COH_ENGINE_HPP
#define C2COH_ENGINE_HPP

#include <stdexcept>

#include "c2coh/algebra.hpp"
#include "c2coh/surface.hpp"

namespace c2coh {

class TransformError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Unreduced H^{*,*}(X; Z/2). Throws ValidationError for invalid profiles.
Decomposition closed_form(const InvariantProfile& pr);

/// Removes the Sigma^{0,0} M2 coming from the basepoint. Free surfaces have
/// no such summand and are rejected with std::invalid_argument.
Decomposition reduced(const Decomposition& d, const InvariantProfile& pr);

/**
 * Cohomology of Y after the surgery `op`, given d_y = H(Y) in closed-form
 * shape. Throws ValidationError if op is illegal on pr_y and TransformError
 * if d_y lacks a summand the rule must remove.
 */
Decomposition transform(const Decomposition& d_y, const InvariantProfile& pr_y, const SurgeryOp& op);

/// Folds transform over w.ops starting from closed_form(base profile).
Decomposition incremental(const SurgeryWord& w);

/// H^{*,*}(Y x C2) = A_0 tensor H*_sing(Y).
Decomposition free_orbit_product(const SingProfile& sing);

}  // namespace c2coh

#endif  // C2COH_ENGINE_HPP
