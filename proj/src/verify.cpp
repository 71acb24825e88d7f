#include "c2coh/verify.hpp"

#include <map>
#include <stdexcept>

#include "c2coh/engine.hpp"
#include "c2coh/f2.hpp"

namespace c2coh {

bool Report::passed() const {
    for (const auto& f : findings)
        if (!f.ok) return false;
    return true;
}

std::vector<Finding> Report::violations() const {
    std::vector<Finding> out;
    for (const auto& f : findings)
        if (!f.ok) out.push_back(f);
    return out;
}

void Report::append(const Report& other) {
    findings.insert(findings.end(), other.findings.begin(), other.findings.end());
}

nlohmann::json Report::to_json(bool violations_only) const {
    nlohmann::json out = nlohmann::json::array();
    for (const auto& f : findings) {
        if (violations_only && f.ok) continue;
        out.push_back({{"check", f.check}, {"location", f.location}, {"expected", f.expected},
                       {"actual", f.actual}, {"ok", f.ok}});
    }
    return out;
}

namespace {

nlohmann::json at(int p, int q) { return {{"p", p}, {"q", q}}; }

Finding compare(std::string check, nlohmann::json location, Natural expected, Natural actual) {
    return {std::move(check), std::move(location), expected, actual, expected == actual};
}

}  // namespace

Report check_quotient_row(const Decomposition& d, const InvariantProfile& pr) {
    const QuotientShape shape = quotient_shape(pr);
    const SingProfile quotient = betti_f2(surface_with_boundary_model(shape.beta_closed, shape.boundary_circles));
    Report r;
    for (int p = -1; p <= 3; ++p)
        r.findings.push_back(compare("quotient_row", at(p, 0), quotient[p], d.dim_at({p, 0})));
    return r;
}

Report check_rho_localization(const Decomposition& d, const InvariantProfile& pr) {
    const SingProfile fixed = fixed_sing(pr);
    std::map<int, Natural> expected{{0, fixed.h0}, {1, fixed.h1}, {2, fixed.h2}};
    std::map<int, Natural> actual{{0, 0}, {1, 0}, {2, 0}};
    for (const auto& t : d.canonical().terms()) {
        if (!t.summand.is_free()) continue;  // A_n is rho-torsion
        actual[t.summand.shift.p - t.summand.shift.q] += t.count;
    }
    Report r;
    for (const auto& [degree, count] : actual)
        r.findings.push_back(compare("rho_localization", {{"degree", degree}}, expected[degree], count));
    return r;
}

Report check_forgetful_les(const Decomposition& d, const SingProfile& sing, const Window& w) {
    if (!w.valid()) throw std::invalid_argument("inverted window range " + w.to_string());
    Report r;
    for (int p = w.p_min; p <= w.p_max; ++p) {
        for (int q = w.q_min; q <= w.q_max; ++q) {
            // dim H^p_sing = dim coker(rho into (p,q+1)) + dim ker(rho out of (p,q)).
            const long long predicted = static_cast<long long>(d.dim_at({p, q + 1})) +
                                        static_cast<long long>(d.dim_at({p, q})) -
                                        static_cast<long long>(d.rank_at({p - 1, q}, Generator::Rho)) -
                                        static_cast<long long>(d.rank_at({p, q}, Generator::Rho));
            const long long expected = static_cast<long long>(sing[p]);
            if (predicted != expected)
                r.findings.push_back({"forgetful_les", at(p, q), expected, predicted, false});
        }
    }
    return r;
}

namespace {

void require_nonfree_or_trivial(const InvariantProfile& pr, const char* check) {
    if (pr.is_free()) throw std::invalid_argument(std::string(check) + " does not apply to free actions");
}

}  // namespace

Report check_beta_recovery(const Decomposition& d, const InvariantProfile& pr) {
    require_nonfree_or_trivial(pr, "beta_recovery");
    const Natural recovered = 2 * d.count(Summand::antipodal(0, 1)) + d.count(Summand::free(1, 0)) +
                              d.count(Summand::free(1, 1));
    Report r;
    r.findings.push_back(compare("beta_recovery", {{"summand", "2·#Σ^{1,0}A0 + #Σ^{1,0}M2 + #Σ^{1,1}M2"}},
                                 pr.beta, recovered));
    return r;
}

Report check_top_class(const Decomposition& d, const InvariantProfile& pr) {
    require_nonfree_or_trivial(pr, "top_class");
    // Weight equals the codimension of the largest fixed component.
    const int weight = pr.is_trivial() ? 0 : (pr.C > 0 ? 1 : 2);
    const Summand want = Summand::free(2, weight);

    Natural top_count = 0;
    std::vector<Summand> tops;
    for (const auto& t : d.canonical().terms()) {
        if (t.summand.is_free() && t.summand.shift.p >= 2) {
            top_count += t.count;
            tops.push_back(t.summand);
        }
    }
    Report r;
    r.findings.push_back(compare("top_class", {{"summand", "Σ^{i,j}M2 with i ≥ 2"}}, 1, top_count));
    const std::string found = tops.size() == 1 ? tops.front().to_string() : std::to_string(tops.size()) + " kinds";
    r.findings.push_back({"top_class", {{"summand", want.to_string()}}, want.to_string(), found,
                          top_count == 1 && tops.front() == want});
    return r;
}

bool Verification::passed() const {
    for (const auto& c : checks)
        if (!c.passed) return false;
    return true;
}

nlohmann::json Verification::to_json() const {
    nlohmann::json summary = nlohmann::json::object();
    for (const auto& c : checks) summary[c.name] = c.applicable ? (c.passed ? "pass" : "fail") : "n/a";
    return {{"profile", c2coh::to_json(profile)},
            {"decomposition", c2coh::to_json(decomposition)},
            {"passed", passed()},
            {"checks", summary},
            {"report", report.to_json()}};
}

Verification verify_decomposition(const Decomposition& d, const InvariantProfile& pr, const Window& les_window) {
    Verification v{pr, d.canonical(), {}, {}};
    auto run = [&](const char* name, const Report& r) {
        v.checks.push_back({name, true, r.passed()});
        v.report.append(r);
    };
    run("quotient_row", check_quotient_row(d, pr));
    run("rho_localization", check_rho_localization(d, pr));
    run("forgetful_les", check_forgetful_les(d, underlying_sing(pr), les_window));
    if (pr.is_free()) {
        v.checks.push_back({"beta_recovery", false, true});
        v.checks.push_back({"top_class", false, true});
    } else {
        run("beta_recovery", check_beta_recovery(d, pr));
        run("top_class", check_top_class(d, pr));
    }
    return v;
}

Verification verify_all(const SurgeryWord& w, const Window& les_window) {
    const InvariantProfile pr = invariants(w);
    return verify_decomposition(closed_form(pr), pr, les_window);
}

std::vector<Mutation> single_summand_mutations(const Decomposition& d) {
    std::vector<Mutation> out;
    const Decomposition base = d.canonical();
    for (const auto& t : base.terms()) {
        Decomposition m = base;
        m.remove(t.summand);
        out.push_back({"drop " + t.summand.to_string(), std::move(m)});
    }
    for (int p = -1; p <= 3; ++p)
        for (int q = -2; q <= 4; ++q) {
            const Summand s = Summand::free(p, q);
            out.push_back({"add " + s.to_string(), direct_sum(base, {{s, 1}})});
        }
    for (unsigned n = 0; n <= 3; ++n)
        for (int p = -1; p <= 3; ++p) {
            const Summand s = Summand::antipodal(n, p);
            out.push_back({"add " + s.to_string(), direct_sum(base, {{s, 1}})});
        }
    return out;
}

}  // namespace c2coh
