/**
 * C2-surfaces described by surgery words, and the numerical invariants
 * (beta, F, C) the cohomology depends on.
 *
 * A word names one of the basic C2-surfaces and a sequence of equivariant
 * surgeries applied to it. The surface itself is never modeled; each
 * surgery is folded into its effect on the invariant profile.
 */
#ifndef C2COH_SURFACE_HPP
#define C2COH_SURFACE_HPP

#include <compare>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

#include "c2coh/algebra.hpp"

namespace c2coh {

/// Nonequivariant closed surface: T[g] (orientable genus g) or N[s].
struct ClosedSurface {
    bool orientable = true;
    unsigned genus = 0;  // g for T[g], s >= 1 for N[s]

    static ClosedSurface torus(unsigned g) { return {true, g}; }
    static ClosedSurface nonorientable(unsigned s) { return {false, s}; }

    /// dim H^1_sing(-; Z/2).
    Natural beta() const { return orientable ? 2 * Natural{genus} : Natural{genus}; }
    std::string to_string() const;

    friend bool operator==(const ClosedSurface&, const ClosedSurface&) = default;
};

enum class BaseKind { S22, S21, S2a, T1anti, T1rot, Trivial };

struct BaseSpace {
    BaseKind kind = BaseKind::S22;
    ClosedSurface surface{};  // only for Trivial

    std::string to_string() const;
    friend bool operator==(const BaseSpace&, const BaseSpace&) = default;
};

enum class OpKind { ConnSum, DCC, AT11, AT10, FM };

struct SurgeryOp {
    OpKind kind = OpKind::DCC;
    ClosedSurface surface{};  // only for ConnSum

    static SurgeryOp conn_sum(ClosedSurface s) { return {OpKind::ConnSum, s}; }
    static SurgeryOp dcc() { return {OpKind::DCC, {}}; }
    static SurgeryOp at11() { return {OpKind::AT11, {}}; }
    static SurgeryOp at10() { return {OpKind::AT10, {}}; }
    static SurgeryOp fm() { return {OpKind::FM, {}}; }

    std::string to_string() const;
    friend bool operator==(const SurgeryOp&, const SurgeryOp&) = default;
};

struct SurgeryWord {
    BaseSpace base;
    std::vector<SurgeryOp> ops;

    /// Renders in the word DSL, e.g. "S21 + AT10".
    std::string to_string() const;
    friend bool operator==(const SurgeryWord&, const SurgeryWord&) = default;
};

/// Raised by parse_word; `position` is a 0-based character offset.
class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t position, const std::string& what)
        : std::runtime_error("parse error at position " + std::to_string(position) + ": " + what),
          position_(position) {}
    std::size_t position() const { return position_; }

private:
    std::size_t position_;
};

/**
 * Parses the word DSL:
 *
 *   word := base (" + " op)*
 *   base := "S22" | "S21" | "S2a" | "T1a" | "T1r" | "triv:T[<g>]" | "triv:N[<s>]"
 *   op   := "AT11" | "AT10" | "FM" | "DCC" | "CS(T[<g>])" | "CS(N[<s>])"
 */
SurgeryWord parse_word(const std::string& text);

// ---------------------------------------------------------------------------

enum class ProfileKind { Trivial = 0, FreeSphere = 1, FreeTorus = 2, Nonfree = 3 };

/// (kind, beta, F, C). Free profiles carry their sphere/torus subtype in kind.
struct InvariantProfile {
    ProfileKind kind = ProfileKind::Nonfree;
    Natural beta = 0;
    Natural F = 0;  // isolated fixed points
    Natural C = 0;  // fixed circles

    bool is_free() const { return kind == ProfileKind::FreeSphere || kind == ProfileKind::FreeTorus; }
    bool is_trivial() const { return kind == ProfileKind::Trivial; }
    bool is_nonfree() const { return kind == ProfileKind::Nonfree; }

    std::string to_string() const;
    friend auto operator<=>(const InvariantProfile&, const InvariantProfile&) = default;
};

/// mod-2 Betti numbers of a space of dimension at most two.
struct SingProfile {
    Natural h0 = 0;
    Natural h1 = 0;
    Natural h2 = 0;

    Natural operator[](int degree) const {
        switch (degree) {
            case 0: return h0;
            case 1: return h1;
            case 2: return h2;
            default: return 0;
        }
    }
    friend bool operator==(const SingProfile&, const SingProfile&) = default;
};

/**
 * A rejected word or profile. For words, `op_index` is the index of the
 * offending surgery (std::nullopt for problems with the base itself).
 */
class ValidationError : public std::runtime_error {
public:
    ValidationError(std::optional<std::size_t> op_index, std::string reason);
    std::optional<std::size_t> op_index() const { return op_index_; }
    const std::string& reason() const { return reason_; }

private:
    std::optional<std::size_t> op_index_;
    std::string reason_;
};

InvariantProfile base_profile(const BaseSpace& base);

/// Effect of one surgery on the profile; throws ValidationError if illegal.
InvariantProfile apply_op(const InvariantProfile& pr, const SurgeryOp& op,
                          std::optional<std::size_t> op_index = std::nullopt);

/// Checks every prefix of the word. Returns the first violation, if any.
std::optional<ValidationError> validate(const SurgeryWord& w);
std::optional<ValidationError> validate_profile(const InvariantProfile& pr);

/// Folds the word into its profile. Throws ValidationError.
InvariantProfile invariants(const SurgeryWord& w);

SingProfile underlying_sing(const InvariantProfile& pr);
SingProfile fixed_sing(const InvariantProfile& pr);
SingProfile quotient_sing(const InvariantProfile& pr);

/// Closed surface obtained by capping the boundary circles of X/C2, and the
/// number of caps. For a trivial action this is X itself with no caps.
struct QuotientShape {
    Natural beta_closed = 0;
    Natural boundary_circles = 0;
};
QuotientShape quotient_shape(const InvariantProfile& pr);

nlohmann::json to_json(const InvariantProfile& pr);
/// Accepts {"kind": "trivial"|"free"|"nonfree", "subtype": "sphere"|"torus"
/// (free only), "beta", "F", "C"}. Throws std::invalid_argument; does not
/// check realizability (see validate_profile).
InvariantProfile profile_from_json(const nlohmann::json& j);

// ---------------------------------------------------------------------------
// Enumeration
// ---------------------------------------------------------------------------

/// Every op is β-increasing, so words reaching β <= beta_max have at most
/// beta_max ops; the cap leaves slack for that argument.
constexpr std::size_t word_depth_bound(Natural beta_max) { return static_cast<std::size_t>(beta_max) + 2; }

/// Surgery alphabet whose ops can keep β within beta_max. CS(T[0]) is
/// included only when `include_identity_sum` is set.
std::vector<SurgeryOp> surgery_alphabet(Natural beta_max, bool include_identity_sum = false);

/// The five nontrivial base spaces in fixed order.
std::vector<BaseSpace> nontrivial_bases();

/**
 * Calls `visit` for every word over surgery_alphabet(beta_max, true) with
 * at most max_ops surgeries whose every prefix validates and whose final
 * β is at most beta_max (trivial bases included, with no ops).
 */
void for_each_word(std::size_t max_ops, Natural beta_max,
                   const std::function<void(const SurgeryWord&, const InvariantProfile&)>& visit);

/// All profiles passing validate_profile with β <= beta_max, sorted.
std::vector<InvariantProfile> scan_profiles(Natural beta_max);

struct CatalogEntry {
    InvariantProfile profile;
    SurgeryWord witness;  // shortest word found, first in base/op order
};

struct ProfileEnumeration {
    std::vector<CatalogEntry> reached;             // via words, sorted by profile
    std::vector<InvariantProfile> by_inequality;   // via scan_profiles
    std::vector<InvariantProfile> unreached;       // in the scan but not reached by words
    std::vector<InvariantProfile> unexpected;      // reached by words but rejected by the scan

    bool agree() const { return unreached.empty() && unexpected.empty(); }
};

ProfileEnumeration enumerate_profiles(Natural beta_max);

}  // namespace c2coh

#endif  // C2COH_SURFACE_HPP
