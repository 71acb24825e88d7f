#include "c2coh/engine.hpp"

namespace c2coh {

namespace {

const Summand kUnit = Summand::free(0, 0);
const Summand kS10 = Summand::free(1, 0);
const Summand kS11 = Summand::free(1, 1);
const Summand kS20 = Summand::free(2, 0);
const Summand kS21 = Summand::free(2, 1);
const Summand kS22 = Summand::free(2, 2);
const Summand kS10A0 = Summand::antipodal(0, 1);

}  // namespace

Decomposition closed_form(const InvariantProfile& pr) {
    if (auto err = validate_profile(pr)) throw *err;
    const Natural beta = pr.beta, F = pr.F, C = pr.C;
    Decomposition d;
    switch (pr.kind) {
        case ProfileKind::Trivial:
            // M2 tensor H*_sing(X).
            d.add(kUnit).add(kS10, beta).add(kS20);
            break;
        case ProfileKind::FreeSphere:
            d.add(kS10A0, beta / 2).add(Summand::antipodal(2, 0));
            break;
        case ProfileKind::FreeTorus:
            d.add(kS10A0, (beta - 2) / 2).add(Summand::antipodal(1, 0)).add(Summand::antipodal(1, 1));
            break;
        case ProfileKind::Nonfree:
            d.add(kUnit);
            if (C == 0) {
                d.add(kS11, F - 2).add(kS10A0, (beta + 2 - F) / 2).add(kS22);
            } else {
                // Validity gives beta >= F + 2C - 2, so the A_0 count is >= 0.
                d.add(kS11, F + C - 1).add(kS10, C - 1).add(kS10A0, (beta + 2 - F - 2 * C) / 2).add(kS21);
            }
            break;
    }
    return d.canonical();
}

Decomposition reduced(const Decomposition& d, const InvariantProfile& pr) {
    if (pr.is_free())
        throw std::invalid_argument("reduced form is undefined for free surfaces (no fixed basepoint)");
    Decomposition out = d.canonical();
    if (!out.remove(kUnit)) throw std::invalid_argument("decomposition has no Σ^{0,0}M2 summand");
    return out;
}

namespace {

void replace(Decomposition& d, const Summand& gone, const char* rule) {
    if (!d.remove(gone))
        throw TransformError(std::string(rule) + ": expected a " + gone.to_string() + " summand to rewrite");
}

void require_free_shape(const Decomposition& d, const char* rule) {
    for (const auto& t : d.canonical().terms())
        if (t.summand.is_free())
            throw TransformError(std::string(rule) + ": free surface answer contains " + t.summand.to_string());
}

}  // namespace

Decomposition transform(const Decomposition& d_y, const InvariantProfile& pr_y, const SurgeryOp& op) {
    // Also rejects FM on free Y and anything on trivial Y.
    (void)apply_op(pr_y, op);

    Decomposition d = d_y.canonical();
    switch (op.kind) {
        case OpKind::ConnSum:
            d.add(kS10A0, op.surface.beta());
            return d;
        case OpKind::DCC:
            d.add(kS10A0);
            return d;
        case OpKind::AT11:
            if (pr_y.is_free()) {
                require_free_shape(d, "AT11 on free Y");
                return Decomposition{{kUnit, 1}, {kS10A0, (pr_y.beta + 2) / 2}, {kS22, 1}}.canonical();
            }
            d.add(kS11, 2);
            return d;
        case OpKind::AT10:
            if (pr_y.is_free()) {
                require_free_shape(d, "AT10 on free Y");
                return Decomposition{{kUnit, 1}, {kS10A0, (pr_y.beta + 2) / 2}, {kS21, 1}}.canonical();
            }
            if (pr_y.C >= 1) {
                d.add(kS11).add(kS10);
                return d;
            }
            // Sigma^{2,2} -> Sigma^{1,1} + Sigma^{2,1}, plus the Sigma^{1,1} of the
            // wedge summand S^{1,1} in Y-tilde.
            replace(d, kS22, "AT10 with C(Y) = 0");
            d.add(kS11, 2).add(kS21);
            return d;
        case OpKind::FM:
            if (pr_y.C >= 1) {
                d.add(kS10);
                return d;
            }
            replace(d, kS22, "FM with C(Y) = 0");
            d.add(kS11).add(kS21);
            return d;
    }
    return d;
}

Decomposition incremental(const SurgeryWord& w) {
    if (auto err = validate(w)) throw *err;
    InvariantProfile pr = base_profile(w.base);
    Decomposition d = closed_form(pr);
    for (const auto& op : w.ops) {
        d = transform(d, pr, op);
        pr = apply_op(pr, op);
    }
    return d;
}

Decomposition free_orbit_product(const SingProfile& sing) {
    Decomposition d;
    d.add(Summand::antipodal(0, 0), sing.h0).add(Summand::antipodal(0, 1), sing.h1).add(Summand::antipodal(0, 2), sing.h2);
    return d.canonical();
}

}  // namespace c2coh
