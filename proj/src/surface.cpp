#include "c2coh/surface.hpp"

#include <algorithm>
#include <cassert>
#include <cctype>
#include <deque>
#include <map>
#include <set>
#include <sstream>

namespace c2coh {

std::string ClosedSurface::to_string() const {
    return std::string(orientable ? "T[" : "N[") + std::to_string(genus) + "]";
}

std::string BaseSpace::to_string() const {
    switch (kind) {
        case BaseKind::S22: return "S22";
        case BaseKind::S21: return "S21";
        case BaseKind::S2a: return "S2a";
        case BaseKind::T1anti: return "T1a";
        case BaseKind::T1rot: return "T1r";
        case BaseKind::Trivial: return "triv:" + surface.to_string();
    }
    return "?";
}

std::string SurgeryOp::to_string() const {
    switch (kind) {
        case OpKind::ConnSum: return "CS(" + surface.to_string() + ")";
        case OpKind::DCC: return "DCC";
        case OpKind::AT11: return "AT11";
        case OpKind::AT10: return "AT10";
        case OpKind::FM: return "FM";
    }
    return "?";
}

std::string SurgeryWord::to_string() const {
    std::string out = base.to_string();
    for (const auto& op : ops) out += " + " + op.to_string();
    return out;
}

// ---------------------------------------------------------------------------
// Parser
// ---------------------------------------------------------------------------

namespace {

class WordParser {
public:
    explicit WordParser(const std::string& text) : text_(text) {}

    SurgeryWord parse() {
        SurgeryWord w;
        w.base = parse_base();
        while (pos_ < text_.size()) {
            expect(" + ");
            w.ops.push_back(parse_op());
        }
        return w;
    }

private:
    bool accept(const char* lit) {
        const std::string_view s(lit);
        if (text_.compare(pos_, s.size(), s) == 0) {
            pos_ += s.size();
            return true;
        }
        return false;
    }

    void expect(const char* lit) {
        if (!accept(lit)) throw ParseError(pos_, std::string("expected \"") + lit + "\"");
    }

    unsigned parse_number() {
        const std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        if (start == pos_) throw ParseError(pos_, "expected a nonnegative integer");
        if (pos_ - start > 6) throw ParseError(start, "integer too large");
        return static_cast<unsigned>(std::stoul(text_.substr(start, pos_ - start)));
    }

    ClosedSurface parse_surface() {
        const std::size_t start = pos_;
        if (accept("T[")) {
            const unsigned g = parse_number();
            expect("]");
            return ClosedSurface::torus(g);
        }
        if (accept("N[")) {
            const std::size_t at = pos_;
            const unsigned s = parse_number();
            if (s == 0) throw ParseError(at, "nonorientable genus must be at least 1");
            expect("]");
            return ClosedSurface::nonorientable(s);
        }
        throw ParseError(start, "expected a surface T[<g>] or N[<s>]");
    }

    BaseSpace parse_base() {
        if (accept("S22")) return {BaseKind::S22, {}};
        if (accept("S21")) return {BaseKind::S21, {}};
        if (accept("S2a")) return {BaseKind::S2a, {}};
        if (accept("T1a")) return {BaseKind::T1anti, {}};
        if (accept("T1r")) return {BaseKind::T1rot, {}};
        if (accept("triv:")) return {BaseKind::Trivial, parse_surface()};
        throw ParseError(pos_, "expected a base space (S22, S21, S2a, T1a, T1r, triv:T[g], triv:N[s])");
    }

    SurgeryOp parse_op() {
        if (accept("AT11")) return SurgeryOp::at11();
        if (accept("AT10")) return SurgeryOp::at10();
        if (accept("FM")) return SurgeryOp::fm();
        if (accept("DCC")) return SurgeryOp::dcc();
        if (accept("CS(")) {
            const ClosedSurface s = parse_surface();
            expect(")");
            return SurgeryOp::conn_sum(s);
        }
        throw ParseError(pos_, "expected a surgery (AT11, AT10, FM, DCC, CS(T[g]), CS(N[s]))");
    }

    const std::string& text_;
    std::size_t pos_ = 0;
};

}  // namespace

SurgeryWord parse_word(const std::string& text) { return WordParser(text).parse(); }

// ---------------------------------------------------------------------------
// Profiles
// ---------------------------------------------------------------------------

std::string InvariantProfile::to_string() const {
    std::ostringstream out;
    switch (kind) {
        case ProfileKind::Trivial: out << "trivial"; break;
        case ProfileKind::FreeSphere: out << "free/sphere"; break;
        case ProfileKind::FreeTorus: out << "free/torus"; break;
        case ProfileKind::Nonfree: out << "nonfree"; break;
    }
    out << " β=" << beta << " F=" << F << " C=" << C;
    return out.str();
}

namespace {

std::string describe_index(std::optional<std::size_t> idx) {
    return idx ? "op " + std::to_string(*idx) : "profile";
}

}  // namespace

ValidationError::ValidationError(std::optional<std::size_t> op_index, std::string reason)
    : std::runtime_error(describe_index(op_index) + ": " + reason),
      op_index_(op_index),
      reason_(std::move(reason)) {}

InvariantProfile base_profile(const BaseSpace& base) {
    switch (base.kind) {
        case BaseKind::S22: return {ProfileKind::Nonfree, 0, 2, 0};
        case BaseKind::S21: return {ProfileKind::Nonfree, 0, 0, 1};
        case BaseKind::S2a: return {ProfileKind::FreeSphere, 0, 0, 0};
        case BaseKind::T1anti:
        case BaseKind::T1rot: return {ProfileKind::FreeTorus, 2, 0, 0};
        case BaseKind::Trivial: return {ProfileKind::Trivial, base.surface.beta(), 0, 0};
    }
    return {};
}

InvariantProfile apply_op(const InvariantProfile& pr, const SurgeryOp& op,
                          std::optional<std::size_t> op_index) {
    if (pr.is_trivial()) throw ValidationError(op_index, "surgery on trivial action");
    InvariantProfile out = pr;
    switch (op.kind) {
        case OpKind::ConnSum:
            // Nonequivariantly X #_2 Y = Y # X # Y.
            out.beta += 2 * op.surface.beta();
            break;
        case OpKind::DCC:
            out.beta += 2;
            break;
        case OpKind::AT11:
            out.beta += 2;
            out.F += 2;
            out.kind = ProfileKind::Nonfree;
            break;
        case OpKind::AT10:
            out.beta += 2;
            out.C += 1;
            out.kind = ProfileKind::Nonfree;
            break;
        case OpKind::FM:
            if (pr.F == 0) throw ValidationError(op_index, "FM needs an isolated fixed point");
            out.beta += 1;
            out.F -= 1;
            out.C += 1;
            break;
    }
    return out;
}

std::optional<ValidationError> validate(const SurgeryWord& w) {
    if (w.base.kind == BaseKind::Trivial && w.base.surface.orientable == false && w.base.surface.genus == 0)
        return ValidationError(std::nullopt, "nonorientable genus must be at least 1");
    InvariantProfile pr = base_profile(w.base);
    for (std::size_t i = 0; i < w.ops.size(); ++i) {
        const auto& op = w.ops[i];
        if (op.kind == OpKind::ConnSum && !op.surface.orientable && op.surface.genus == 0)
            return ValidationError(i, "nonorientable genus must be at least 1");
        try {
            pr = apply_op(pr, op, i);
        } catch (const ValidationError& e) {
            return e;
        }
    }
    return std::nullopt;
}

std::optional<ValidationError> validate_profile(const InvariantProfile& pr) {
    auto fail = [](const std::string& why) { return ValidationError(std::nullopt, why); };
    switch (pr.kind) {
        case ProfileKind::Trivial:
        case ProfileKind::FreeSphere:
        case ProfileKind::FreeTorus:
            if (pr.F != 0 || pr.C != 0) return fail("F = 0 and C = 0 for free and trivial actions");
            if (pr.kind == ProfileKind::FreeSphere && pr.beta % 2 != 0) return fail("β even for free actions");
            if (pr.kind == ProfileKind::FreeTorus && (pr.beta % 2 != 0 || pr.beta < 2))
                return fail("β even and β ≥ 2 for free torus-type actions");
            return std::nullopt;
        case ProfileKind::Nonfree:
            if (pr.F == 0 && pr.C == 0) return fail("F + C ≥ 1 for nonfree actions");
            if (pr.beta % 2 != pr.F % 2) return fail("β ≡ F (mod 2)");
            if (pr.C == 0) {
                if (pr.F < 2) return fail("F ≥ 2 when C = 0");
                // X -> X/C2 is then a double cover branched at F points of a closed surface.
                if (pr.F % 2 != 0) return fail("F even when C = 0");
                if (pr.beta + 2 < pr.F) return fail("β ≥ F−2 when C = 0");
            } else if (pr.beta + 2 < pr.F + 2 * pr.C) {
                return fail("β ≥ F+2C−2");
            }
            return std::nullopt;
    }
    return fail("unknown profile kind");
}

InvariantProfile invariants(const SurgeryWord& w) {
    if (auto err = validate(w)) throw *err;
    InvariantProfile pr = base_profile(w.base);
    for (std::size_t i = 0; i < w.ops.size(); ++i) pr = apply_op(pr, w.ops[i], i);
    assert(!validate_profile(pr));
    return pr;
}

SingProfile underlying_sing(const InvariantProfile& pr) { return {1, pr.beta, 1}; }

SingProfile fixed_sing(const InvariantProfile& pr) {
    if (pr.is_trivial()) return underlying_sing(pr);
    return {pr.F + pr.C, pr.C, 0};
}

QuotientShape quotient_shape(const InvariantProfile& pr) {
    if (pr.is_trivial()) return {pr.beta, 0};
    // chi(X) = 2 chi(X/C2) - chi(X^C2); fixed circles become boundary circles
    // of X/C2 and isolated fixed points are interior points.
    const long long chi_x = 2 - static_cast<long long>(pr.beta);
    const long long twice_chi_q = chi_x + static_cast<long long>(pr.F);
    assert(twice_chi_q % 2 == 0);
    const long long chi_closed = twice_chi_q / 2 + static_cast<long long>(pr.C);
    const long long beta_closed = 2 - chi_closed;
    assert(beta_closed >= 0);
    return {static_cast<Natural>(beta_closed), pr.C};
}

SingProfile quotient_sing(const InvariantProfile& pr) {
    if (pr.is_trivial()) return underlying_sing(pr);
    const long long chi_x = 2 - static_cast<long long>(pr.beta);
    const long long twice_chi_q = chi_x + static_cast<long long>(pr.F);
    assert(twice_chi_q % 2 == 0);
    const long long chi_q = twice_chi_q / 2;
    const long long h0 = 1;
    const long long h2 = pr.C == 0 ? 1 : 0;
    const long long h1 = h0 + h2 - chi_q;
    assert(h1 >= 0);
    return {static_cast<Natural>(h0), static_cast<Natural>(h1), static_cast<Natural>(h2)};
}

namespace {

const char* kind_name(ProfileKind k) {
    switch (k) {
        case ProfileKind::Trivial: return "trivial";
        case ProfileKind::FreeSphere:
        case ProfileKind::FreeTorus: return "free";
        case ProfileKind::Nonfree: return "nonfree";
    }
    return "?";
}

}  // namespace

nlohmann::json to_json(const InvariantProfile& pr) {
    nlohmann::json j = {{"kind", kind_name(pr.kind)}};
    if (pr.kind == ProfileKind::FreeSphere) j["subtype"] = "sphere";
    if (pr.kind == ProfileKind::FreeTorus) j["subtype"] = "torus";
    j["beta"] = pr.beta;
    j["F"] = pr.F;
    j["C"] = pr.C;
    return j;
}

InvariantProfile profile_from_json(const nlohmann::json& j) {
    auto bad = [](const std::string& why) { return std::invalid_argument("malformed profile JSON: " + why); };
    if (!j.is_object()) throw bad("expected an object");
    for (const auto& [key, _] : j.items())
        if (key != "kind" && key != "subtype" && key != "beta" && key != "F" && key != "C")
            throw bad("unexpected key '" + key + "'");
    if (!j.contains("kind") || !j["kind"].is_string()) throw bad("missing string field 'kind'");

    InvariantProfile pr;
    const std::string kind = j["kind"].get<std::string>();
    if (kind == "trivial") pr.kind = ProfileKind::Trivial;
    else if (kind == "nonfree") pr.kind = ProfileKind::Nonfree;
    else if (kind == "free") {
        if (!j.contains("subtype") || !j["subtype"].is_string()) throw bad("free profiles need 'subtype'");
        const std::string sub = j["subtype"].get<std::string>();
        if (sub == "sphere") pr.kind = ProfileKind::FreeSphere;
        else if (sub == "torus") pr.kind = ProfileKind::FreeTorus;
        else throw bad("subtype must be 'sphere' or 'torus'");
    } else {
        throw bad("kind must be 'trivial', 'free' or 'nonfree'");
    }
    if (kind != "free" && j.contains("subtype")) throw bad("'subtype' is only allowed for free profiles");

    auto field = [&](const char* name, Natural def) -> Natural {
        if (!j.contains(name)) return def;
        if (!j[name].is_number_unsigned()) throw bad(std::string("'") + name + "' must be a natural number");
        return j[name].get<Natural>();
    };
    if (!j.contains("beta")) throw bad("missing field 'beta'");
    pr.beta = field("beta", 0);
    pr.F = field("F", 0);
    pr.C = field("C", 0);
    return pr;
}

// ---------------------------------------------------------------------------
// Enumeration
// ---------------------------------------------------------------------------

std::vector<SurgeryOp> surgery_alphabet(Natural beta_max, bool include_identity_sum) {
    std::vector<SurgeryOp> ops = {SurgeryOp::at11(), SurgeryOp::at10(), SurgeryOp::fm(), SurgeryOp::dcc()};
    if (include_identity_sum) ops.push_back(SurgeryOp::conn_sum(ClosedSurface::torus(0)));
    for (unsigned g = 1; 4 * Natural{g} <= beta_max; ++g) ops.push_back(SurgeryOp::conn_sum(ClosedSurface::torus(g)));
    for (unsigned s = 1; 2 * Natural{s} <= beta_max; ++s)
        ops.push_back(SurgeryOp::conn_sum(ClosedSurface::nonorientable(s)));
    return ops;
}

std::vector<BaseSpace> nontrivial_bases() {
    return {{BaseKind::S22, {}}, {BaseKind::S21, {}}, {BaseKind::S2a, {}}, {BaseKind::T1anti, {}}, {BaseKind::T1rot, {}}};
}

namespace {

std::vector<BaseSpace> trivial_bases(Natural beta_max) {
    std::vector<BaseSpace> out;
    for (unsigned g = 0; 2 * Natural{g} <= beta_max; ++g) out.push_back({BaseKind::Trivial, ClosedSurface::torus(g)});
    for (unsigned s = 1; s <= beta_max; ++s) out.push_back({BaseKind::Trivial, ClosedSurface::nonorientable(s)});
    return out;
}

void extend_words(SurgeryWord& w, const InvariantProfile& pr, std::size_t ops_left, Natural beta_max,
                  const std::vector<SurgeryOp>& alphabet,
                  const std::function<void(const SurgeryWord&, const InvariantProfile&)>& visit) {
    visit(w, pr);
    if (ops_left == 0) return;
    for (const auto& op : alphabet) {
        if (op.kind == OpKind::FM && pr.F == 0) continue;
        const InvariantProfile next = apply_op(pr, op);
        if (next.beta > beta_max) continue;
        w.ops.push_back(op);
        extend_words(w, next, ops_left - 1, beta_max, alphabet, visit);
        w.ops.pop_back();
    }
}

}  // namespace

void for_each_word(std::size_t max_ops, Natural beta_max,
                   const std::function<void(const SurgeryWord&, const InvariantProfile&)>& visit) {
    const auto alphabet = surgery_alphabet(beta_max, true);
    for (const auto& base : trivial_bases(beta_max)) visit(SurgeryWord{base, {}}, base_profile(base));
    for (const auto& base : nontrivial_bases()) {
        const InvariantProfile pr = base_profile(base);
        if (pr.beta > beta_max) continue;
        SurgeryWord w{base, {}};
        extend_words(w, pr, max_ops, beta_max, alphabet, visit);
    }
}

std::vector<InvariantProfile> scan_profiles(Natural beta_max) {
    std::vector<InvariantProfile> out;
    for (Natural beta = 0; beta <= beta_max; ++beta) {
        for (ProfileKind kind : {ProfileKind::Trivial, ProfileKind::FreeSphere, ProfileKind::FreeTorus}) {
            const InvariantProfile pr{kind, beta, 0, 0};
            if (!validate_profile(pr)) out.push_back(pr);
        }
        // Nonfree: F <= β + 2 and 2C <= β + 2 follow from the inequalities.
        for (Natural F = 0; F <= beta + 2; ++F)
            for (Natural C = 0; 2 * C <= beta + 2; ++C) {
                const InvariantProfile pr{ProfileKind::Nonfree, beta, F, C};
                if (!validate_profile(pr)) out.push_back(pr);
            }
    }
    std::sort(out.begin(), out.end());
    return out;
}

ProfileEnumeration enumerate_profiles(Natural beta_max) {
    // Breadth-first over words. Which surgeries are legal next and what they
    // do depends only on the current profile, so words reaching a profile
    // already seen are pruned without losing any reachable profile.
    std::map<InvariantProfile, SurgeryWord> seen;
    for (const auto& base : trivial_bases(beta_max)) seen.emplace(base_profile(base), SurgeryWord{base, {}});

    const auto alphabet = surgery_alphabet(beta_max);
    const std::size_t depth_cap = word_depth_bound(beta_max);
    std::deque<std::pair<SurgeryWord, InvariantProfile>> frontier;
    for (const auto& base : nontrivial_bases()) {
        const InvariantProfile pr = base_profile(base);
        if (pr.beta > beta_max || seen.count(pr)) continue;
        seen.emplace(pr, SurgeryWord{base, {}});
        frontier.emplace_back(SurgeryWord{base, {}}, pr);
    }
    while (!frontier.empty()) {
        auto [word, pr] = std::move(frontier.front());
        frontier.pop_front();
        if (word.ops.size() >= depth_cap) continue;
        for (const auto& op : alphabet) {
            if (op.kind == OpKind::FM && pr.F == 0) continue;
            const InvariantProfile next = apply_op(pr, op);
            if (next.beta > beta_max || seen.count(next)) continue;
            SurgeryWord longer = word;
            longer.ops.push_back(op);
            seen.emplace(next, longer);
            frontier.emplace_back(std::move(longer), next);
        }
    }

    ProfileEnumeration result;
    for (auto& [pr, w] : seen) result.reached.push_back({pr, w});
    result.by_inequality = scan_profiles(beta_max);

    std::set<InvariantProfile> scanned(result.by_inequality.begin(), result.by_inequality.end());
    for (const auto& e : result.reached)
        if (!scanned.count(e.profile)) result.unexpected.push_back(e.profile);
    for (const auto& pr : result.by_inequality)
        if (!seen.count(pr)) result.unreached.push_back(pr);
    return result;
}

}  // namespace c2coh
