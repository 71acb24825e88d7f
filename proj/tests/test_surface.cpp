#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

#include "c2coh/surface.hpp"

using namespace c2coh;

namespace {

InvariantProfile nonfree(Natural beta, Natural F, Natural C) { return {ProfileKind::Nonfree, beta, F, C}; }

InvariantProfile of(const std::string& word) { return invariants(parse_word(word)); }

std::string reason_of(const std::optional<ValidationError>& e) { return e ? e->reason() : "ok"; }

}  // namespace

TEST_CASE("closed surfaces") {
    CHECK(ClosedSurface::torus(0).beta() == 0);
    CHECK(ClosedSurface::torus(3).beta() == 6);
    CHECK(ClosedSurface::nonorientable(5).beta() == 5);
    CHECK(ClosedSurface::torus(2).to_string() == "T[2]");
    CHECK(ClosedSurface::nonorientable(1).to_string() == "N[1]");
}

TEST_CASE("parse_word accepts the grammar") {
    const SurgeryWord w = parse_word("S21 + AT10");
    CHECK(w.base.kind == BaseKind::S21);
    REQUIRE(w.ops.size() == 1);
    CHECK(w.ops[0].kind == OpKind::AT10);

    const SurgeryWord v = parse_word("triv:N[3]");
    CHECK(v.base.kind == BaseKind::Trivial);
    CHECK(v.base.surface == ClosedSurface::nonorientable(3));

    for (const char* text : {"S22", "S2a + CS(T[1])", "T1a + DCC + DCC", "T1r + AT11 + FM", "S22 + FM + CS(N[2])",
                             "triv:T[0]", "S21 + AT10 + AT11 + FM + CS(T[12])"})
        CHECK(parse_word(text).to_string() == text);
}

TEST_CASE("parse_word rejects malformed words with a position") {
    auto position_of = [](const std::string& text) -> std::optional<std::size_t> {
        try {
            parse_word(text);
        } catch (const ParseError& e) {
            return e.position();
        }
        return std::nullopt;
    };
    CHECK(position_of("") == 0u);
    CHECK(position_of("S23") == 0u);
    CHECK(position_of("S21+AT10") == 3u);
    CHECK(position_of("S21 +AT10") == 3u);
    CHECK(position_of("S21 + ") == 6u);
    CHECK(position_of("S21 + XY") == 6u);
    CHECK(position_of("S21 + CS(T[1]") == 13u);
    CHECK(position_of("S21 + CS(T[])") == 11u);
    CHECK(position_of("triv:N[0]") == 7u);
    CHECK(position_of("triv:K[1]") == 5u);
    CHECK(position_of("S21 + AT10 ") == 10u);
    CHECK(position_of(" S21") == 0u);
}

TEST_CASE("invariants of named words") {
    CHECK(of("S22 + FM") == nonfree(1, 1, 1));
    CHECK(of("S21 + AT10") == nonfree(2, 0, 2));
    CHECK(of("S2a + CS(T[1])") == InvariantProfile{ProfileKind::FreeSphere, 4, 0, 0});
    CHECK(of("T1a + DCC") == InvariantProfile{ProfileKind::FreeTorus, 4, 0, 0});
    CHECK(of("T1r") == InvariantProfile{ProfileKind::FreeTorus, 2, 0, 0});
    CHECK(of("S2a + AT11") == nonfree(2, 2, 0));
    CHECK(of("S2a + AT10") == nonfree(2, 0, 1));
    CHECK(of("triv:T[2]") == InvariantProfile{ProfileKind::Trivial, 4, 0, 0});
    CHECK(of("S22 + AT11 + AT11 + AT11 + CS(T[1])") == nonfree(10, 8, 0));
}

TEST_CASE("validate") {
    auto err = validate(parse_word("triv:T[2] + AT11"));
    REQUIRE(err);
    CHECK(err->reason() == "surgery on trivial action");
    CHECK(err->op_index() == 0u);

    err = validate(parse_word("S21 + FM"));
    REQUIRE(err);
    CHECK(err->reason() == "FM needs an isolated fixed point");

    CHECK_FALSE(validate(parse_word("S22 + FM + FM")));
    err = validate(parse_word("S22 + FM + FM + FM"));
    REQUIRE(err);
    CHECK(err->op_index() == 2u);

    err = validate(parse_word("S2a + FM"));
    REQUIRE(err);
    CHECK(err->reason() == "FM needs an isolated fixed point");

    CHECK_THROWS_AS(invariants(parse_word("S21 + FM")), ValidationError);
}

TEST_CASE("validate_profile") {
    CHECK_FALSE(validate_profile(nonfree(14, 8, 0)));
    CHECK(reason_of(validate_profile(nonfree(1, 2, 0))) == "β ≡ F (mod 2)");
    CHECK(reason_of(validate_profile(nonfree(0, 0, 2))) == "β ≥ F+2C−2");
    CHECK(reason_of(validate_profile(nonfree(1, 3, 0))) == "F even when C = 0");
    CHECK(reason_of(validate_profile(nonfree(0, 0, 0))) != "ok");
    CHECK(reason_of(validate_profile(nonfree(0, 4, 0))) == "β ≥ F−2 when C = 0");
    CHECK(reason_of(validate_profile({ProfileKind::FreeSphere, 3, 0, 0})) != "ok");
    CHECK(reason_of(validate_profile({ProfileKind::FreeTorus, 0, 0, 0})) != "ok");
    CHECK(reason_of(validate_profile({ProfileKind::Trivial, 2, 1, 0})) != "ok");
    CHECK_FALSE(validate_profile({ProfileKind::Trivial, 3, 0, 0}));
}

TEST_CASE("singular profiles") {
    CHECK(quotient_sing(nonfree(2, 0, 2)) == SingProfile{1, 1, 0});
    CHECK(quotient_sing({ProfileKind::FreeSphere, 0, 0, 0}) == SingProfile{1, 1, 1});
    CHECK(quotient_sing(nonfree(14, 8, 0)) == SingProfile{1, 4, 1});
    CHECK(fixed_sing(nonfree(1, 1, 1)) == SingProfile{2, 1, 0});
    CHECK(underlying_sing(nonfree(14, 8, 0)) == SingProfile{1, 14, 1});
    CHECK(fixed_sing({ProfileKind::Trivial, 2, 0, 0}) == SingProfile{1, 2, 1});
    CHECK(quotient_shape(nonfree(2, 0, 2)).beta_closed == 0);
    CHECK(quotient_shape(nonfree(2, 0, 2)).boundary_circles == 2);
}

TEST_CASE("profile properties across the scan") {
    const auto scan = scan_profiles(20);
    REQUIRE_FALSE(scan.empty());
    for (const auto& pr : scan) {
        CAPTURE(pr.to_string());
        const SingProfile fix = fixed_sing(pr);
        const SingProfile quo = quotient_sing(pr);
        if (pr.is_nonfree()) {
            CHECK((2 + pr.F - pr.beta) % 2 == 0);
            CHECK(fix.h0 - fix.h1 == pr.F);
            // chi(X) = 2 chi(X/C2) - chi(X^C2), recomputed independently.
            const long long chi_x = 2 - static_cast<long long>(pr.beta);
            const long long chi_q = static_cast<long long>(quo.h0) - static_cast<long long>(quo.h1) +
                                    static_cast<long long>(quo.h2);
            CHECK(chi_x == 2 * chi_q - static_cast<long long>(pr.F));
            CHECK(quo.h2 == (pr.C == 0 ? 1u : 0u));
        }
        if (pr.is_free()) {
            CHECK(quo.h1 == pr.beta / 2 + 1);
            CHECK(fix == SingProfile{0, 0, 0});
        }
        CHECK(profile_from_json(to_json(pr)) == pr);
    }
}

TEST_CASE("profile JSON") {
    CHECK(to_json(nonfree(14, 8, 0)).dump() == R"({"C":0,"F":8,"beta":14,"kind":"nonfree"})");
    CHECK(to_json(InvariantProfile{ProfileKind::FreeTorus, 2, 0, 0}).dump() ==
          R"({"C":0,"F":0,"beta":2,"kind":"free","subtype":"torus"})");
    const auto parse = [](const char* s) { return profile_from_json(nlohmann::json::parse(s)); };
    CHECK(parse(R"({"kind":"nonfree","beta":14,"F":8,"C":0})") == nonfree(14, 8, 0));
    CHECK_THROWS_AS(parse(R"({"kind":"free","beta":2})"), std::invalid_argument);
    CHECK_THROWS_AS(parse(R"({"kind":"nonfree","beta":-1})"), std::invalid_argument);
    CHECK_THROWS_AS(parse(R"({"kind":"nonfree","beta":1,"G":1})"), std::invalid_argument);
    CHECK_THROWS_AS(parse(R"({"kind":"weird","beta":1})"), std::invalid_argument);
    CHECK_THROWS_AS(parse(R"({"kind":"nonfree","F":1})"), std::invalid_argument);
}

TEST_CASE("order-insensitivity of surgeries") {
    std::mt19937 rng(7);
    const auto alphabet = surgery_alphabet(12, true);
    const auto bases = nontrivial_bases();
    int compared = 0;
    for (int trial = 0; trial < 2000; ++trial) {
        SurgeryWord w{bases[rng() % bases.size()], {}};
        const std::size_t len = rng() % 5;
        for (std::size_t k = 0; k < len; ++k) w.ops.push_back(alphabet[rng() % alphabet.size()]);
        if (validate(w)) continue;
        const InvariantProfile pr = invariants(w);
        std::vector<std::size_t> perm(w.ops.size());
        for (std::size_t k = 0; k < perm.size(); ++k) perm[k] = k;
        do {
            SurgeryWord v{w.base, {}};
            for (auto k : perm) v.ops.push_back(w.ops[k]);
            if (validate(v)) continue;
            CHECK(invariants(v) == pr);
            ++compared;
        } while (std::next_permutation(perm.begin(), perm.end()));
    }
    CHECK(compared > 1000);
}

TEST_CASE("enumerate_profiles small cases") {
    const auto e0 = enumerate_profiles(0);
    CHECK(e0.agree());
    std::set<InvariantProfile> got0;
    for (const auto& entry : e0.reached) got0.insert(entry.profile);
    CHECK(got0 == std::set<InvariantProfile>{nonfree(0, 2, 0), nonfree(0, 0, 1),
                                             {ProfileKind::FreeSphere, 0, 0, 0},
                                             {ProfileKind::Trivial, 0, 0, 0}});

    const auto e1 = enumerate_profiles(1);
    CHECK(e1.agree());
    bool x3 = false;
    for (const auto& entry : e1.reached) {
        CHECK(entry.profile != nonfree(1, 3, 0));
        if (entry.profile == nonfree(1, 1, 1)) {
            x3 = true;
            CHECK(entry.witness.to_string() == "S22 + FM");
        }
    }
    CHECK(x3);

    const auto e2 = enumerate_profiles(2);
    bool x1 = false;
    for (const auto& entry : e2.reached)
        if (entry.profile == nonfree(2, 0, 2)) {
            x1 = true;
            CHECK(entry.witness.to_string() == "S21 + AT10");
        }
    CHECK(x1);
}

TEST_CASE("enumeration: witnesses fold to their profiles, paths agree") {
    for (Natural b : {3u, 8u, 20u}) {
        const auto e = enumerate_profiles(b);
        CHECK(e.agree());
        CHECK(e.unreached.empty());
        CHECK(e.unexpected.empty());
        CHECK(e.reached.size() == e.by_inequality.size());
        for (const auto& entry : e.reached) {
            CHECK(invariants(entry.witness) == entry.profile);
            CHECK(entry.witness.ops.size() <= word_depth_bound(b));
        }
    }
}

TEST_CASE("for_each_word yields valid words only, and reaches every scanned profile") {
    std::set<InvariantProfile> seen;
    std::size_t words = 0;
    for_each_word(4, 6, [&](const SurgeryWord& w, const InvariantProfile& pr) {
        ++words;
        CHECK_FALSE(validate(w));
        CHECK(invariants(w) == pr);
        CHECK(pr.beta <= 6);
        seen.insert(pr);
    });
    CHECK(words > 100);
    for (const auto& pr : scan_profiles(6)) {
        CAPTURE(pr.to_string());
        CHECK(seen.count(pr) == 1);
    }
}
