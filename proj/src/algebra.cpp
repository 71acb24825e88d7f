#include "c2coh/algebra.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace c2coh {

Natural Summand::dim_at(Bidegree b) const {
    const Bidegree local = b - shift;
    return kind == SummandKind::FreeM2 ? m2_dim(local) : an_dim(n, local);
}

Natural Summand::rank_at(Bidegree b, Generator g) const {
    const Bidegree local = b - shift;
    if (kind == SummandKind::FreeM2)
        return g == Generator::Rho ? m2_rho_rank(local) : m2_tau_rank(local);
    return g == Generator::Rho ? an_rho_rank(n, local) : an_tau_rank(n, local);
}

std::string Summand::to_string() const {
    std::ostringstream out;
    const Summand c = canonical();
    if (c.shift != Bidegree{0, 0}) out << "Σ^{" << c.shift.p << ',' << c.shift.q << '}';
    if (c.kind == SummandKind::FreeM2) out << "M2";
    else out << 'A' << c.n;
    return out.str();
}

bool Decomposition::empty() const { return size() == 0; }

Natural Decomposition::size() const {
    Natural total = 0;
    for (const auto& t : terms_) total += t.count;
    return total;
}

Natural Decomposition::count(const Summand& s) const {
    const Summand key = s.canonical();
    Natural total = 0;
    for (const auto& t : terms_)
        if (t.summand.canonical() == key) total += t.count;
    return total;
}

Natural Decomposition::dim_at(Bidegree b) const {
    Natural total = 0;
    for (const auto& t : terms_) total += t.count * t.summand.dim_at(b);
    return total;
}

Natural Decomposition::rank_at(Bidegree b, Generator g) const {
    Natural total = 0;
    for (const auto& t : terms_) total += t.count * t.summand.rank_at(b, g);
    return total;
}

Decomposition Decomposition::canonical() const {
    std::vector<Term> out;
    out.reserve(terms_.size());
    for (const auto& t : terms_)
        if (t.count != 0) out.push_back({t.summand.canonical(), t.count});
    std::sort(out.begin(), out.end(),
              [](const Term& a, const Term& b) { return a.summand < b.summand; });
    std::vector<Term> merged;
    for (const auto& t : out) {
        if (!merged.empty() && merged.back().summand == t.summand) merged.back().count += t.count;
        else merged.push_back(t);
    }
    return Decomposition(std::move(merged));
}

Decomposition& Decomposition::add(const Summand& s, Natural count) {
    terms_.push_back({s, count});
    *this = canonical();
    return *this;
}

bool Decomposition::remove(const Summand& s, Natural count) {
    Decomposition c = canonical();
    const Summand key = s.canonical();
    for (auto& t : c.terms_) {
        if (t.summand == key) {
            if (t.count < count) return false;
            t.count -= count;
            *this = c.canonical();
            return true;
        }
    }
    return count == 0;
}

std::string Decomposition::to_string() const {
    const Decomposition c = canonical();
    if (c.terms_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& t : c.terms_) {
        if (!first) out << " ⊕ ";
        first = false;
        if (t.count == 1) out << t.summand.to_string();
        else out << '(' << t.summand.to_string() << ")^" << t.count;
    }
    return out.str();
}

bool operator==(const Decomposition& a, const Decomposition& b) {
    return a.canonical().terms_ == b.canonical().terms_;
}

Decomposition canonicalize(const Decomposition& d) { return d.canonical(); }

Decomposition direct_sum(const Decomposition& a, const Decomposition& b) {
    std::vector<Term> all = a.terms();
    all.insert(all.end(), b.terms().begin(), b.terms().end());
    return Decomposition(std::move(all)).canonical();
}

Decomposition suspend(const Decomposition& d, Bidegree s) {
    std::vector<Term> shifted = d.terms();
    for (auto& t : shifted) t.summand.shift += s;
    return Decomposition(std::move(shifted)).canonical();
}

// ---------------------------------------------------------------------------

Window Window::parse(const std::string& text) {
    Window w;
    char c1 = 0, c2 = 0, c3 = 0;
    std::istringstream in(text);
    if (!(in >> w.p_min >> c1 >> w.p_max >> c2 >> w.q_min >> c3 >> w.q_max) || c1 != ':' ||
        c2 != ',' || c3 != ':')
        throw std::invalid_argument("window must look like pmin:pmax,qmin:qmax, got '" + text + "'");
    in >> std::ws;
    if (!in.eof()) throw std::invalid_argument("trailing characters in window '" + text + "'");
    if (!w.valid()) throw std::invalid_argument("inverted window range '" + text + "'");
    return w;
}

std::string Window::to_string() const {
    std::ostringstream out;
    out << p_min << ':' << p_max << ',' << q_min << ':' << q_max;
    return out.str();
}

namespace {

char glyph(Natural dim) {
    if (dim == 0) return '.';
    if (dim >= 10) return '+';
    return static_cast<char>('0' + dim);
}

void require_valid(const Window& w) {
    if (!w.valid()) throw std::invalid_argument("inverted window range " + w.to_string());
}

}  // namespace

std::string render_grid(const Decomposition& d, const Window& w) {
    require_valid(w);
    std::string out;
    for (int q = w.q_max; q >= w.q_min; --q) {
        for (int p = w.p_min; p <= w.p_max; ++p) out += glyph(d.dim_at({p, q}));
        out += '\n';
    }
    return out;
}

std::string render_labeled_grid(const Decomposition& d, const Window& w) {
    require_valid(w);
    std::ostringstream out;
    for (int q = w.q_max; q >= w.q_min; --q) {
        out.width(4);
        out << q << " |";
        for (int p = w.p_min; p <= w.p_max; ++p) out << ' ' << glyph(d.dim_at({p, q}));
        out << '\n';
    }
    out << "     +";
    for (int p = w.p_min; p <= w.p_max; ++p) out << "--";
    out << "\n  p: " << w.p_min << " .. " << w.p_max << '\n';
    return out.str();
}

// ---------------------------------------------------------------------------

nlohmann::json to_json(const Decomposition& d) {
    nlohmann::json free = nlohmann::json::array();
    nlohmann::json anti = nlohmann::json::array();
    for (const auto& t : d.canonical().terms()) {
        const auto& s = t.summand;
        if (s.is_free()) free.push_back({s.shift.p, s.shift.q, t.count});
        else anti.push_back({s.shift.p, s.n, t.count});
    }
    return {{"free", free}, {"antipodal", anti}};
}

Decomposition decomposition_from_json(const nlohmann::json& j) {
    auto bad = [](const std::string& why) {
        return std::invalid_argument("malformed decomposition JSON: " + why);
    };
    if (!j.is_object()) throw bad("expected an object");
    for (const auto& [key, _] : j.items())
        if (key != "free" && key != "antipodal") throw bad("unexpected key '" + key + "'");

    std::vector<Term> terms;
    auto read_rows = [&](const char* key, bool free) {
        if (!j.contains(key)) return;
        const auto& rows = j.at(key);
        if (!rows.is_array()) throw bad(std::string(key) + " must be an array");
        for (const auto& row : rows) {
            if (!row.is_array() || row.size() != 3 || !row[0].is_number_integer() ||
                !row[1].is_number_integer() || !row[2].is_number_unsigned())
                throw bad(std::string(key) + " entries must be [int, int, count]");
            const int a = row[0].get<int>();
            if (free) {
                terms.push_back({Summand::free(a, row[1].get<int>()), row[2].get<Natural>()});
            } else {
                if (row[1].get<long long>() < 0) throw bad("antipodal n must be nonnegative");
                terms.push_back({Summand::antipodal(row[1].get<unsigned>(), a), row[2].get<Natural>()});
            }
        }
    };
    read_rows("free", true);
    read_rows("antipodal", false);
    return Decomposition(std::move(terms)).canonical();
}

}  // namespace c2coh
