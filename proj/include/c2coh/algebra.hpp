/**
 * Bidegree-wise arithmetic for the coefficient ring M2 = H^{*,*}(pt; Z/2),
 * the antipodal modules A_n = tau^{-1} M2 / (rho^{n+1}), and finite direct
 * sums of their shifts.
 *
 * Every module here is a Z/2-vector space of dimension 0 or 1 in each
 * bidegree, so dimensions and multiplication ranks are total functions of
 * the bidegree. Nothing is ever materialized on a grid except for output.
 */
#ifndef C2COH_ALGEBRA_HPP
#define C2COH_ALGEBRA_HPP

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

namespace c2coh {

using Natural = std::uint64_t;

/// An element (p, q) of RO(C2): p is the topological dimension, q the weight.
struct Bidegree {
    int p = 0;
    int q = 0;

    constexpr Bidegree& operator+=(Bidegree o) { p += o.p; q += o.q; return *this; }
    constexpr Bidegree& operator-=(Bidegree o) { p -= o.p; q -= o.q; return *this; }
    friend constexpr Bidegree operator+(Bidegree a, Bidegree b) { return a += b; }
    friend constexpr Bidegree operator-(Bidegree a, Bidegree b) { return a -= b; }
    friend constexpr auto operator<=>(const Bidegree&, const Bidegree&) = default;
};

inline constexpr Bidegree kRhoDegree{1, 1};
inline constexpr Bidegree kTauDegree{0, 1};

enum class Generator { Rho, Tau };

// ---------------------------------------------------------------------------
// M2
// ---------------------------------------------------------------------------
//
// Top cone: rho^i tau^j sits at (i, i + j), i.e. p >= 0 and q >= p.
// Bottom cone: theta/(rho^i tau^j) sits at (-i, -2 - i - j), i.e. p <= 0 and
// q <= p - 2. theta itself is at (0, -2).
//
// rho * theta/(rho^i tau^j) = theta/(rho^{i-1} tau^j) when i >= 1 and zero
// otherwise, so rho acts nontrivially on the bottom cone exactly when p <= -1.
// tau similarly needs j >= 1, which is q <= p - 3.

constexpr bool in_top_cone(Bidegree b) { return b.p >= 0 && b.q >= b.p; }
constexpr bool in_bottom_cone(Bidegree b) { return b.p <= 0 && b.q <= b.p - 2; }

constexpr Natural m2_dim(Bidegree b) { return (in_top_cone(b) || in_bottom_cone(b)) ? 1 : 0; }

constexpr Natural m2_rho_rank(Bidegree b) {
    return (in_top_cone(b) || (b.p <= -1 && b.q <= b.p - 2)) ? 1 : 0;
}

constexpr Natural m2_tau_rank(Bidegree b) {
    return (in_top_cone(b) || (b.p <= 0 && b.q <= b.p - 3)) ? 1 : 0;
}

// ---------------------------------------------------------------------------
// A_n: basis rho^k tau^j, 0 <= k <= n, j in Z. Columns p = 0..n, every weight.
// ---------------------------------------------------------------------------

constexpr Natural an_dim(unsigned n, Bidegree b) {
    return (b.p >= 0 && b.p <= static_cast<int>(n)) ? 1 : 0;
}

constexpr Natural an_rho_rank(unsigned n, Bidegree b) {
    return (b.p >= 0 && b.p <= static_cast<int>(n) - 1) ? 1 : 0;
}

constexpr Natural an_tau_rank(unsigned n, Bidegree b) { return an_dim(n, b); }

// ---------------------------------------------------------------------------
// Summands and decompositions
// ---------------------------------------------------------------------------

enum class SummandKind { FreeM2 = 0, Antipodal = 1 };

/// Sigma^{shift} M2 or Sigma^{shift} A_n.
struct Summand {
    SummandKind kind = SummandKind::FreeM2;
    unsigned n = 0;  // only meaningful for Antipodal
    Bidegree shift{};

    static constexpr Summand free(int p, int q) { return {SummandKind::FreeM2, 0, {p, q}}; }
    static constexpr Summand antipodal(unsigned n, int p, int q = 0) {
        return {SummandKind::Antipodal, n, {p, q}};
    }

    bool is_free() const { return kind == SummandKind::FreeM2; }

    /// tau acts invertibly on A_n, so Sigma^{p,q} A_n ~ Sigma^{p,0} A_n.
    Summand canonical() const {
        Summand s = *this;
        if (s.kind == SummandKind::Antipodal) s.shift.q = 0;
        else s.n = 0;
        return s;
    }

    Natural dim_at(Bidegree b) const;
    Natural rank_at(Bidegree b, Generator g) const;

    /// Human-readable form, e.g. "Σ^{1,1}M2" or "A2".
    std::string to_string() const;

    // Canonical order: FreeM2 before Antipodal, then (p, q, n).
    friend bool operator<(const Summand& a, const Summand& b) {
        if (a.kind != b.kind) return a.kind < b.kind;
        if (a.shift != b.shift) return a.shift < b.shift;
        return a.n < b.n;
    }
    friend bool operator==(const Summand& a, const Summand& b) {
        return a.kind == b.kind && a.shift == b.shift && a.n == b.n;
    }
};

struct Term {
    Summand summand;
    Natural count = 1;

    friend bool operator==(const Term&, const Term&) = default;
};

/**
 * A finite formal direct sum of shifted M2 and A_n summands.
 *
 * Terms are kept exactly as supplied; canonical() merges equal summands,
 * drops zero counts, normalizes antipodal weights and sorts. Equality is
 * multiset equality after canonicalization.
 */
class Decomposition {
public:
    Decomposition() = default;
    Decomposition(std::initializer_list<Term> terms) : terms_(terms) {}
    explicit Decomposition(std::vector<Term> terms) : terms_(std::move(terms)) {}

    const std::vector<Term>& terms() const& { return terms_; }
    std::vector<Term> terms() && { return std::move(terms_); }
    bool empty() const;

    /// Total number of summands counted with multiplicity.
    Natural size() const;
    Natural count(const Summand& s) const;

    Natural dim_at(Bidegree b) const;
    Natural rank_at(Bidegree b, Generator g) const;

    Decomposition canonical() const;

    /// Mutating helpers used by the engine; both keep the result canonical.
    Decomposition& add(const Summand& s, Natural count = 1);
    /// Removes `count` copies of s. Returns false (and leaves *this alone)
    /// when fewer than `count` copies are present.
    bool remove(const Summand& s, Natural count = 1);

    std::string to_string() const;

    friend bool operator==(const Decomposition& a, const Decomposition& b);

private:
    std::vector<Term> terms_;
};

Decomposition canonicalize(const Decomposition& d);
Decomposition direct_sum(const Decomposition& a, const Decomposition& b);
Decomposition suspend(const Decomposition& d, Bidegree s);

inline Natural dim_at(const Decomposition& d, Bidegree b) { return d.dim_at(b); }
inline Natural rank_at(const Decomposition& d, Bidegree b, Generator g) { return d.rank_at(b, g); }

/// Closed rectangle of bidegrees p in [p_min, p_max], q in [q_min, q_max].
struct Window {
    int p_min = -2;
    int p_max = 6;
    int q_min = -8;
    int q_max = 8;

    bool valid() const { return p_min <= p_max && q_min <= q_max; }

    /// Parses "pmin:pmax,qmin:qmax". Throws std::invalid_argument.
    static Window parse(const std::string& text);
    std::string to_string() const;
};

inline constexpr Window kDefaultWindow{-2, 6, -8, 8};

/**
 * Dot-grid picture of d: one line per weight from q_max down to q_min, one
 * character per topological dimension from p_min to p_max. '.' is zero,
 * '1'-'9' the dimension, '+' anything from ten up. Rows end in '\n'.
 */
std::string render_grid(const Decomposition& d, const Window& w);

/// Same picture with a weight label on each row and a p-axis footer.
std::string render_labeled_grid(const Decomposition& d, const Window& w);

/// {"free": [[p,q,count],...], "antipodal": [[p,n,count],...]} in canonical order.
nlohmann::json to_json(const Decomposition& d);
/// Inverse of to_json. Throws std::invalid_argument on malformed input.
Decomposition decomposition_from_json(const nlohmann::json& j);

}  // namespace c2coh

#endif  // C2COH_ALGEBRA_HPP
