#include "c2coh/cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <iomanip>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "c2coh/engine.hpp"
#include "c2coh/verify.hpp"

namespace c2coh {

ParsedInput parse_input(const std::string& text) {
    const auto first = text.find_first_not_of(" \t\n");
    if (first != std::string::npos && text[first] == '{') {
        nlohmann::json j;
        try {
            j = nlohmann::json::parse(text);
        } catch (const nlohmann::json::parse_error& e) {
            throw ParseError(e.byte == 0 ? 0 : e.byte - 1, "invalid profile JSON");
        }
        ParsedInput in{profile_from_json(j), std::nullopt};
        if (auto err = validate_profile(in.profile)) throw *err;
        return in;
    }
    SurgeryWord w = parse_word(text);
    return {invariants(w), std::move(w)};
}

Decomposition apply_injection(const Decomposition& d, const std::string& spec) {
    const auto colon = spec.find(':');
    if (colon == std::string::npos) throw std::invalid_argument("injection must look like ACTION:A,B, got '" + spec + "'");
    const std::string action = spec.substr(0, colon);
    int a = 0, b = 0;
    char comma = 0;
    std::istringstream in(spec.substr(colon + 1));
    if (!(in >> a >> comma >> b) || comma != ',' || !(in >> std::ws).eof())
        throw std::invalid_argument("injection arguments must be two integers 'A,B', got '" + spec + "'");

    Summand s;
    if (action == "drop" || action == "add") {
        s = Summand::free(a, b);
    } else if (action == "drop-a" || action == "add-a") {
        if (b < 0) throw std::invalid_argument("antipodal n must be nonnegative in '" + spec + "'");
        s = Summand::antipodal(static_cast<unsigned>(b), a);
    } else {
        throw std::invalid_argument("unknown injection '" + action + "' (use drop, add, drop-a, add-a)");
    }

    Decomposition out = d.canonical();
    if (action.rfind("add", 0) == 0) return out.add(s);
    if (!out.remove(s)) throw std::invalid_argument("cannot drop " + s.to_string() + ": no such summand");
    return out;
}

Window default_window() {
    if (const char* env = std::getenv("ESC_WINDOW"); env != nullptr && *env != '\0') return Window::parse(env);
    return kDefaultWindow;
}

namespace {

std::string describe(const InvariantProfile& pr) { return pr.to_string(); }

int cmd_compute(const std::string& input, bool want_reduced, bool grid, const std::string& window_text,
                const std::string& format, std::ostream& out) {
    const ParsedInput in = parse_input(input);
    Decomposition d = closed_form(in.profile);
    if (want_reduced) d = reduced(d, in.profile);

    if (grid) {
        const Window w = window_text.empty() ? default_window() : Window::parse(window_text);
        out << render_labeled_grid(d, w);
        return kExitOk;
    }
    if (format == "text") {
        if (in.word) out << in.word->to_string() << '\n';
        out << describe(in.profile) << '\n';
        out << (want_reduced ? "H~ = " : "H = ") << d.to_string() << '\n';
        return kExitOk;
    }
    out << to_json(d).dump() << '\n';
    return kExitOk;
}

int cmd_verify(const std::string& input, const std::string& window_text, const std::vector<std::string>& injections,
               const std::string& format, std::ostream& out) {
    const ParsedInput in = parse_input(input);
    const Window w = window_text.empty() ? default_window() : Window::parse(window_text);
    Decomposition d = closed_form(in.profile);
    for (const auto& spec : injections) d = apply_injection(d, spec);

    const Verification v = verify_decomposition(d, in.profile, w);
    if (format == "text") {
        out << describe(in.profile) << '\n' << "H = " << v.decomposition.to_string() << '\n';
        for (const auto& c : v.checks)
            out << "  " << std::left << std::setw(18) << c.name << (c.applicable ? (c.passed ? "pass" : "FAIL") : "n/a")
                << '\n';
        for (const auto& f : v.report.violations())
            out << "  violation " << f.check << " at " << f.location.dump() << ": expected " << f.expected.dump()
                << ", got " << f.actual.dump() << '\n';
        out << (v.passed() ? "PASS" : "FAIL") << '\n';
    } else {
        nlohmann::json j = v.to_json();
        if (in.word) j["input"] = in.word->to_string();
        out << j.dump() << '\n';
    }
    return v.passed() ? kExitOk : kExitVerificationFailed;
}

int cmd_catalog(Natural beta_max, const std::string& format, std::ostream& out, std::ostream& err) {
    const ProfileEnumeration e = enumerate_profiles(beta_max);
    bool all_pass = e.agree();

    nlohmann::json rows = nlohmann::json::array();
    std::vector<std::array<std::string, 4>> table;
    for (const auto& entry : e.reached) {
        const Verification v = verify_all(entry.witness);
        all_pass = all_pass && v.passed();
        rows.push_back({{"witness", entry.witness.to_string()},
                        {"profile", to_json(entry.profile)},
                        {"decomposition", to_json(v.decomposition)},
                        {"verified", v.passed()}});
        table.push_back({entry.witness.to_string(), describe(entry.profile), v.decomposition.to_string(),
                         v.passed() ? "ok" : "FAIL"});
    }
    auto to_list = [](const std::vector<InvariantProfile>& prs) {
        nlohmann::json j = nlohmann::json::array();
        for (const auto& pr : prs) j.push_back(to_json(pr));
        return j;
    };

    if (format == "json") {
        out << nlohmann::json{{"beta_max", beta_max},
                              {"agree", e.agree()},
                              {"unreached", to_list(e.unreached)},
                              {"unexpected", to_list(e.unexpected)},
                              {"rows", rows}}
                   .dump()
            << '\n';
    } else {
        std::size_t w0 = 7, w1 = 7;
        for (const auto& row : table) {
            w0 = std::max(w0, row[0].size());
            w1 = std::max(w1, row[1].size());
        }
        out << std::left << std::setw(static_cast<int>(w0)) << "witness" << "  " << std::setw(static_cast<int>(w1))
            << "profile" << "  status  decomposition\n";
        for (const auto& row : table)
            out << std::setw(static_cast<int>(w0)) << row[0] << "  " << std::setw(static_cast<int>(w1)) << row[1]
                << "  " << std::setw(6) << row[3] << "  " << row[2] << '\n';
        out << table.size() << " profiles\n";
    }
    for (const auto& pr : e.unreached) err << "profile satisfies the inequalities but no word reaches it: " << describe(pr) << '\n';
    for (const auto& pr : e.unexpected) err << "word reaches a profile rejected by the inequalities: " << describe(pr) << '\n';
    return all_pass ? kExitOk : kExitVerificationFailed;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"RO(C2)-graded Bredon cohomology of C2-surfaces in constant Z/2 coefficients", "c2coh"};
    app.require_subcommand(1);

    std::string input, window_text, format = "json";
    bool want_reduced = false, grid = false;
    std::vector<std::string> injections;
    Natural beta_max = 0;

    auto* compute = app.add_subcommand("compute", "Print the decomposition of H^{*,*}(X) over M2");
    compute->add_option("input", input, "surgery word (e.g. \"S21 + AT10\") or profile JSON")->required();
    compute->add_flag("--reduced", want_reduced, "drop the Σ^{0,0}M2 summand (nonfree and trivial actions)");
    compute->add_flag("--grid", grid, "render the dot grid instead");
    compute->add_option("--window", window_text, "pmin:pmax,qmin:qmax");
    compute->add_option("--format", format, "json or text")->check(CLI::IsMember({"json", "text"}));

    auto* verify = app.add_subcommand("verify", "Check the decomposition against singular-cohomology oracles");
    verify->add_option("input", input, "surgery word or profile JSON")->required();
    verify->add_option("--window", window_text, "LES window pmin:pmax,qmin:qmax");
    verify->add_option("--inject", injections, "corrupt the decomposition first: drop:P,Q add:P,Q drop-a:P,N add-a:P,N")
        ->expected(1)
        ->allow_extra_args(false)
        ->multi_option_policy(CLI::MultiOptionPolicy::TakeAll);
    verify->add_option("--format", format, "json or text")->check(CLI::IsMember({"json", "text"}));

    auto* catalog = app.add_subcommand("catalog", "List every profile with β <= BETA_MAX with a witness word");
    catalog->add_option("beta_max", beta_max, "largest β-genus")->required();
    catalog->add_option("--format", format, "json or text")->check(CLI::IsMember({"text", "json"}));

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << e.what() << '\n';
        return kExitUsage;
    }
    if (catalog->parsed() && catalog->count("--format") == 0) format = "text";

    try {
        if (compute->parsed()) return cmd_compute(input, want_reduced, grid, window_text, format, out);
        if (verify->parsed()) return cmd_verify(input, window_text, injections, format, out);
        return cmd_catalog(beta_max, format, out, err);
    } catch (const ParseError& e) {
        err << e.what() << '\n';
    } catch (const ValidationError& e) {
        err << "invalid input: " << e.what() << '\n';
    } catch (const std::invalid_argument& e) {
        err << e.what() << '\n';
    }
    return kExitUsage;
}

}  // namespace c2coh
