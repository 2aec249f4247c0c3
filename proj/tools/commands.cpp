#include "commands.hpp"

#include "CLI11.hpp"
#include "json.hpp"
#include "tokuyama/exactalg.hpp"
#include "tokuyama/gtpatterns.hpp"
#include "tokuyama/padic.hpp"
#include "tokuyama/report.hpp"
#include "tokuyama/rootdata.hpp"
#include "tokuyama/tableaux.hpp"
#include "tokuyama/whittaker.hpp"

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>

namespace tokuyama::tool {

namespace {

using cli::Report;
using exactalg::HalfInt;
using exactalg::LaurentPoly;
using exactalg::Var;
using IntVec = std::vector<std::int64_t>;
using Json = nlohmann::ordered_json;

struct UsageError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct Params {
    int rank = 0;
    IntVec lambda, mu, k;
    std::int64_t p = 3;
    std::int64_t q = 0;
    double tol = 1e-6;
    std::int64_t dmax = 3;
    std::int64_t kmax = 4;
    std::uint64_t budget = 10'000'000;
    std::string format;
    bool timing = false;
    // enumerate
    bool circle_only = false;
    std::string prefix;
    int index = 0;
    std::string rel = "le";
    std::string weighting;
    std::string flavor = "B";
    // coeff
    std::vector<std::string> z;
    std::optional<std::int64_t> t_exp;
    bool t0 = false;
};

// ---- output -----------------------------------------------------------------

std::string csv_cell(const Json& v) {
    std::string s = v.is_string() ? v.get<std::string>() : v.dump();
    bool quote = s.find_first_of(",\"\n") != std::string::npos;
    if (!quote) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + "\"";
}

void emit(const std::vector<Json>& records, const std::string& format, std::ostream& out) {
    if (format == "json") {
        out << (records.size() == 1 ? records[0] : Json(records)).dump(2) << "\n";
    } else if (format == "jsonl") {
        for (const auto& r : records) out << r.dump() << "\n";
    } else if (format == "csv") {
        if (records.empty()) return;
        std::vector<std::string> keys;
        for (const auto& [key, _] : records[0].items()) keys.push_back(key);
        for (std::size_t i = 0; i < keys.size(); ++i) out << (i ? "," : "") << csv_cell(keys[i]);
        out << "\n";
        for (const auto& r : records) {
            for (std::size_t i = 0; i < keys.size(); ++i)
                out << (i ? "," : "") << (r.contains(keys[i]) ? csv_cell(r[keys[i]]) : "");
            out << "\n";
        }
    } else {
        for (std::size_t n = 0; n < records.size(); ++n) {
            if (n) out << "\n";
            for (const auto& [key, v] : records[n].items()) out << key << ": " << (v.is_string() ? v.get<std::string>() : v.dump()) << "\n";
        }
    }
}

Json report_json(const Report& rep, const Params& P) {
    Json j = rep.to_json();
    if (!P.timing) j.erase("runtime_ms");
    return j;
}

// ---- validation ---------------------------------------------------------------

void require(bool ok, const std::string& msg) {
    if (!ok) throw UsageError(msg);
}

void need_lambda(const Params& P) {
    require(P.rank >= 1, "--rank must be at least 1");
    require(P.lambda.size() == static_cast<std::size_t>(P.rank), "--lambda needs exactly --rank entries");
    for (auto x : P.lambda) require(x >= 0, "--lambda entries must be nonnegative");
}

// Rank-r mu with positive entries (the shifted weight lambda + rho).
void need_mu(const Params& P, std::size_t min_rank, bool positive) {
    require(!P.mu.empty(), "--mu is required");
    require(P.mu.size() >= min_rank, "--mu has too few entries for this command");
    require(P.rank == 0 || P.mu.size() == static_cast<std::size_t>(P.rank), "--rank disagrees with the length of --mu");
    for (auto x : P.mu) require(positive ? x >= 1 : x >= 0, positive ? "--mu entries must be positive" : "--mu entries must be nonnegative");
}

void need_prime(const Params& P) {
    require(P.p >= 2, "--p must be a prime");
    for (std::int64_t f = 2; f * f <= P.p; ++f) require(P.p % f != 0, "--p must be a prime");
}

struct TooMany {};

// Number of patterns with the top row of mu passing the filter, or throws BudgetExceeded past the cap.
std::uint64_t count_patterns(const IntVec& mu, std::uint64_t budget, const gtpatterns::PatternFilter& filter = {}) {
    std::uint64_t n = 0;
    try {
        gtpatterns::for_each_filtered(mu, filter, [&](const gtpatterns::GTPattern&) {
            if (++n > budget) throw TooMany{};
        });
    } catch (const TooMany&) {
        throw padic::BudgetExceeded("more than " + std::to_string(budget) + " patterns; raise --budget");
    }
    return n;
}

IntVec weight_top(const IntVec& lambda) { return rootdata::upsilon(rootdata::shift_rho(lambda)); }

template <class F>
void for_each_vector(std::size_t len, std::int64_t lo, std::int64_t hi, F f) {
    IntVec v(len, lo);
    std::function<void(std::size_t)> rec = [&](std::size_t i) {
        if (i == len) {
            f(v);
            return;
        }
        for (std::int64_t x = lo; x <= hi; ++x) {
            v[i] = x;
            rec(i + 1);
        }
    };
    rec(0);
}

// One report for a sweep; failing and unevaluable cases become mismatches.
Report aggregate(const std::string& claim, Json params, const std::vector<Report>& parts) {
    Report rep;
    rep.claim = claim;
    rep.params = std::move(params);
    std::int64_t failures = 0, errors = 0;
    double ms = 0;
    for (const auto& part : parts) {
        ms += part.runtime_ms;
        if (part.pass()) continue;
        Json m;
        m["params"] = part.params;
        m["verdict"] = part.verdict();
        m["lhs"] = part.lhs;
        m["rhs"] = part.rhs;
        if (!part.error.empty()) m["error"] = part.error;
        rep.mismatches.push_back(m);
        (part.error.empty() ? failures : errors) += 1;
    }
    rep.notes["cases"] = parts.size();
    rep.notes["failures"] = failures;
    rep.notes["unevaluable"] = errors;
    rep.runtime_ms = ms;
    return rep;
}

// ---- verify -------------------------------------------------------------------

Report verify(const std::string& claim, const Params& P) {
    if (claim == "theorem1" || claim == "corollary2" || claim == "gh" || claim == "prop3") {
        need_lambda(P);
        count_patterns(weight_top(P.lambda), P.budget);
        if (claim == "theorem1") return gtpatterns::theorem1_check(P.lambda, P.rank);
        if (claim == "corollary2") return tableaux::corollary2_check(P.lambda, P.rank);
        if (claim == "gh") return whittaker::gh_check(P.lambda, P.rank);
        return whittaker::prop3_check(P.lambda, P.rank);
    }
    if (claim == "lemma10-equiv") {
        need_mu(P, 1, false);
        count_patterns(P.mu, P.budget);
        return gtpatterns::lemma10_equiv_check(P.mu);
    }
    if (claim == "prop4") {
        need_mu(P, 2, true);
        need_prime(P);
        require(P.dmax >= 0, "--dmax must be nonnegative");
        return padic::prop4_check(P.mu, P.p, P.dmax, P.tol, P.budget);
    }
    if (claim == "lemma3") {
        need_mu(P, 1, true);
        return padic::lemma3_check(P.mu);
    }
    if (claim == "prop5") {
        need_mu(P, 2, true);
        require(P.k.size() <= 1, "prop5 takes a single --k (the last weighting coordinate)");
        if (P.k.size() == 1) {
            require(P.k[0] >= 0, "--k must be nonnegative");
            return padic::prop5_check(P.mu, P.k[0]);
        }
        require(P.kmax >= 0, "--kmax must be nonnegative");
        std::vector<Report> parts;
        for (std::int64_t k = 0; k <= P.kmax; ++k) parts.push_back(padic::prop5_check(P.mu, k));
        return aggregate(claim, {{"mu", P.mu}, {"kmax", P.kmax}}, parts);
    }
    if (claim == "prop6") {
        need_mu(P, 2, true);
        need_prime(P);
        if (!P.k.empty()) {
            require(P.k.size() == P.mu.size(), "--k needs as many entries as --mu");
            for (auto x : P.k) require(x >= 0, "--k entries must be nonnegative");
            return padic::prop6_check(P.mu, P.k, P.p, P.tol, P.budget);
        }
        require(P.kmax >= 0, "--kmax must be nonnegative");
        std::vector<Report> parts;
        for_each_vector(P.mu.size(), 0, P.kmax, [&](const IntVec& k) {
            parts.push_back(padic::prop6_check(P.mu, k, P.p, P.tol, P.budget));
        });
        Report rep = aggregate(claim, {{"mu", P.mu}, {"p", P.p}, {"kmax", P.kmax}}, parts);
        for (const auto& part : parts)
            if (part.notes.contains("budget_exceeded")) rep.error = part.error;
        return rep;
    }
    throw UsageError("unknown claim '" + claim +
                     "'; expected one of theorem1, corollary2, prop3, prop4, prop5, prop6, gh, lemma3, lemma10-equiv");
}

// ---- enumerate ----------------------------------------------------------------

std::string class_name(gtpatterns::EntryClass c) {
    switch (c) {
        case gtpatterns::EntryClass::maximal: return "maximal";
        case gtpatterns::EntryClass::minimal: return "minimal";
        case gtpatterns::EntryClass::generic: return "generic";
        case gtpatterns::EntryClass::degenerate: return "degenerate";
    }
    return "";
}

bool in_circle(const gtpatterns::GTPattern& p) {
    return !gtpatterns::has_degenerate_entry(p) && gtpatterns::c_parity_condition(p);
}

Json gt_record(const gtpatterns::GTPattern& p) {
    Json j;
    j["rows"] = p.rows();
    auto s = gtpatterns::stats(p);
    j["stats"] = {{"gen", s.gen}, {"max", s.max}, {"max1", s.max1}};
    Json entries = Json::array();
    for (const auto& e : p.entries()) {
        std::ostringstream name;
        name << (e.is_b ? "b(" : "a(") << e.i << "," << e.j << ")";
        entries.push_back({{"entry", name.str()}, {"value", p.value(e)}, {"class", class_name(gtpatterns::classify(p, e))},
                           {"c", gtpatterns::c_stat(p, e)}});
    }
    j["entries"] = entries;
    j["wt"] = gtpatterns::wt(p);
    bool circ = in_circle(p);
    j["in_gt_circle"] = circ;
    // Outside the image of upsilon a pattern can meet the parity condition with odd max1; G is undefined there.
    j["G"] = circ && s.max1 % 2 == 0 ? Json(gtpatterns::g_weight(p).pretty()) : Json(nullptr);
    return j;
}

Json tableau_record(const tableaux::Tableau& s) {
    Json j;
    Json rows = Json::array();
    for (const auto& row : s.rows()) {
        Json names = Json::array();
        for (int letter : row) names.push_back(tableaux::letter_name(letter));
        rows.push_back(names);
    }
    j["rows"] = rows;
    auto st = tableaux::statistics(s);
    j["str"] = st.str;
    j["hgtbar"] = st.hgtbar;
    j["l"] = IntVec(st.l.begin() + 1, st.l.end());
    j["l_sum"] = st.l_sum;
    j["wt"] = st.wt;
    bool circ = tableaux::in_st_circle(s);
    j["in_st_circle"] = circ;
    j["term"] = circ ? Json(tableaux::corollary_term(s).pretty()) : Json(nullptr);
    return j;
}

padic::Rel parse_rel(const std::string& s) {
    if (s == "le") return padic::Rel::le;
    if (s == "lt") return padic::Rel::lt;
    if (s == "eq") return padic::Rel::eq;
    if (s == "ge") return padic::Rel::ge;
    if (s == "gt") return padic::Rel::gt;
    if (s == "any") return padic::Rel::any;
    throw UsageError("--rel must be one of le, lt, eq, ge, gt, any");
}

Json decorated(const padic::DecoratedArray& a) {
    return {{"entries", a.entries}, {"boxed", a.boxed}, {"circled", a.circled}};
}

// "11,7,4,3,1/9,5,3,1" -> rows b_1, a_1.
std::vector<IntVec> parse_prefix(const std::string& text) {
    std::vector<IntVec> rows;
    if (text.empty()) return rows;
    std::stringstream rs(text);
    std::string row;
    while (std::getline(rs, row, '/')) {
        IntVec v;
        std::stringstream es(row);
        std::string item;
        while (std::getline(es, item, ',')) {
            try {
                std::size_t pos = 0;
                v.push_back(std::stoll(item, &pos));
                require(pos == item.size(), "bad --prefix entry '" + item + "'");
            } catch (const std::logic_error& e) {
                if (dynamic_cast<const UsageError*>(&e)) throw;
                throw UsageError("bad --prefix entry '" + item + "'");
            }
        }
        rows.push_back(v);
    }
    return rows;
}

void check_budget(std::size_t n, const Params& P) {
    if (n > P.budget) throw padic::BudgetExceeded("more than " + std::to_string(P.budget) + " records; raise --budget");
}

std::vector<Json> enumerate(const std::string& kind, const Params& P) {
    std::vector<Json> out;
    if (kind == "gt") {
        need_mu(P, 1, false);
        gtpatterns::PatternFilter filter{parse_prefix(P.prefix), P.circle_only};
        count_patterns(P.mu, P.budget, filter);
        gtpatterns::for_each_filtered(P.mu, filter, [&](const gtpatterns::GTPattern& p) { out.push_back(gt_record(p)); });
        return out;
    }
    if (kind == "tableaux") {
        need_mu(P, 1, false);
        count_patterns(P.mu, P.budget);
        for (const auto& s : tableaux::enumerate_tableaux(gtpatterns::top_row(P.mu), static_cast<int>(P.mu.size()))) {
            if (P.circle_only && !tableaux::in_st_circle(s)) continue;
            out.push_back(tableau_record(s));
        }
        return out;
    }
    if (kind == "omega") {
        need_mu(P, 2, true);
        int r = static_cast<int>(P.mu.size());
        int i = P.index == 0 ? r : P.index;
        require(i >= 1 && i <= r, "--i must lie in 1..rank");
        auto rel = parse_rel(P.rel);
        std::vector<IntVec> set;
        if (P.weighting.empty()) {
            require(rel == padic::Rel::le || rel == padic::Rel::lt || rel == padic::Rel::eq,
                    "without --weighting the relation must bound d_i (le, lt or eq)");
            set = padic::omega(P.mu, rel, i);
        } else {
            require(P.weighting == "A" || P.weighting == "B", "--weighting must be A or B");
            require(P.k.size() == 1 && P.k[0] >= 0, "--weighting needs a single nonnegative --k");
            set = padic::omega(P.mu, rel, i, P.weighting == "A" ? padic::Weighting::A : padic::Weighting::B, P.k[0]);
        }
        check_budget(set.size(), P);
        for (const auto& s : set) {
            auto t = padic::totally_resonant(s);
            out.push_back({{"s", s}, {"t", t}, {"k_A", padic::k_A(s)}, {"k_B", padic::k_B(s)},
                           {"i_box", padic::i_box(s, P.mu)}, {"G_Delta", padic::g_delta_B(t, P.mu).pretty()}});
        }
        return out;
    }
    if (kind == "cq") {
        if (P.flavor == "C") {
            need_mu(P, 2, false);
            std::vector<IntVec> set;
            if (P.k.empty()) {
                set = padic::cq_c(P.mu);
            } else {
                require(P.k.size() == P.mu.size(), "--k needs as many entries as --mu");
                set = padic::cq_c_with_weighting(P.mu, P.k);
            }
            check_budget(set.size(), P);
            for (const auto& d : set)
                out.push_back({{"d", d}, {"k", padic::weighting_C(d)}, {"decorations", decorated(padic::decorate_C(d, P.mu))},
                               {"G_Delta_C", padic::g_delta_C(d, P.mu).pretty()}});
            return out;
        }
        require(P.flavor == "B", "--flavor must be B or C");
        need_mu(P, 2, true);
        std::vector<IntVec> ks;
        if (!P.k.empty()) {
            require(P.k.size() == P.mu.size(), "--k needs as many entries as --mu");
            ks.push_back(P.k);
        } else {
            require(P.kmax >= 0, "--kmax must be nonnegative");
            for_each_vector(P.mu.size(), 0, P.kmax, [&](const IntVec& k) { ks.push_back(k); });
        }
        int r = static_cast<int>(P.mu.size());
        for (const auto& k : ks) {
            auto set = padic::cq1_with_weighting(P.mu, k);
            check_budget(out.size() + set.size(), P);
            for (const auto& d : set) {
                auto closed = padic::closed_form_G(d, P.mu);
                out.push_back({{"k", k}, {"d", d}, {"L", padic::l_vector(d, r)},
                               {"preconditions", padic::brute_preconditions(d, P.mu)},
                               {"decorations", decorated(padic::decorate_B(d, P.mu))},
                               {"G_Delta", padic::g_delta_B(d, P.mu).pretty()},
                               {"closed_form", closed ? Json(closed->pretty()) : Json(nullptr)}});
            }
        }
        return out;
    }
    throw UsageError("unknown kind '" + kind + "'; expected gt, tableaux, omega or cq");
}

// ---- coeff --------------------------------------------------------------------

HalfInt parse_half(const std::string& s) {
    try {
        std::size_t pos = 0;
        auto slash = s.find('/');
        if (slash == std::string::npos) {
            std::int64_t v = std::stoll(s, &pos);
            require(pos == s.size(), "bad exponent '" + s + "'");
            return HalfInt(v);
        }
        require(s.substr(slash + 1) == "2", "exponents must be integers or halves, got '" + s + "'");
        std::int64_t twice = std::stoll(s.substr(0, slash), &pos);
        require(pos == slash, "bad exponent '" + s + "'");
        return HalfInt::from_twice(twice);
    } catch (const std::logic_error& e) {
        if (dynamic_cast<const UsageError*>(&e)) throw;
        throw UsageError("bad exponent '" + s + "'");
    }
}

Json coeff(const Params& P, LaurentPoly& result) {
    need_lambda(P);
    require(!(P.t0 && P.t_exp), "--t0 and --t-exp cannot be combined");
    require(!(P.t0 && P.q != 0), "--t0 and --q cannot be combined");
    require(P.q == 0 || P.q >= 2, "--q must be at least 2");
    std::vector<std::pair<Var, HalfInt>> constraints;
    Json cons = Json::array();
    for (const auto& item : P.z) {
        auto eq = item.find('=');
        require(eq != std::string::npos, "--z takes i=e, e.g. 2=11/2");
        int i = 0;
        try {
            i = std::stoi(item.substr(0, eq));
        } catch (const std::logic_error&) {
            throw UsageError("bad --z index in '" + item + "'");
        }
        require(i >= 1 && i <= P.rank, "--z index out of range");
        auto e = parse_half(item.substr(eq + 1));
        constraints.push_back({Var::z(i), e});
        cons.push_back(item);
    }
    if (P.t_exp) constraints.push_back({Var::t(), HalfInt(*P.t_exp)});
    LaurentPoly poly = rootdata::deformed_denominator(P.rank) * rootdata::character(P.lambda, P.rank);
    if (P.t0) poly = exactalg::substitute(poly, {{Var::t(), mpq_class(0)}});
    result = exactalg::coefficient_of(poly, constraints);
    Json values = Json::array();
    if (P.q != 0) {
        // t = -q^-1 symbolically, then each z-monomial's q-polynomial at q = P.q.
        result = exactalg::substitute(result, {{Var::t(), LaurentPoly::q(P.rank, -1, -1)}});
        std::map<exactalg::Monomial, mpq_class> by_z;
        for (const auto& [m, c] : result.terms()) {
            auto e = exactalg::exponent_of(m, Var::q());
            require(e.is_integer(), "--q cannot evaluate half-integral powers of q");
            std::int64_t n = e.to_integer();
            mpz_class power;
            mpz_pow_ui(power.get_mpz_t(), mpz_class(static_cast<long>(P.q)).get_mpz_t(), static_cast<unsigned long>(std::llabs(n)));
            mpq_class term = n >= 0 ? mpq_class(c * power) : mpq_class(c, power);
            term.canonicalize();
            auto zm = m;
            exactalg::set_exponent(zm, Var::q(), HalfInt(0));
            by_z[zm] += term;
        }
        for (auto it = by_z.rbegin(); it != by_z.rend(); ++it)
            if (it->second != 0)
                values.push_back({{"monomial", LaurentPoly::monomial(it->first).pretty()}, {"value", it->second.get_str()}});
    }
    Json j;
    j["rank"] = P.rank;
    j["lambda"] = P.lambda;
    j["constraints"] = cons;
    if (P.t_exp) j["t_exp"] = *P.t_exp;
    j["t0"] = P.t0;
    if (P.q != 0) j["q"] = P.q;
    j["coefficient"] = result.serialize();
    j["pretty"] = result.pretty();
    if (P.q != 0) j["values_at_q"] = values;
    return j;
}

// ---- wiring -------------------------------------------------------------------

void add_common(CLI::App* app, Params& P, std::string& format) {
    app->add_option("--rank", P.rank, "rank r");
    app->add_option("--budget", P.budget, "cap on patterns, records or exponential-sum work");
    app->add_option("--format", format, "output format")->check(CLI::IsMember({"json", "jsonl", "csv", "text"}));
    app->add_flag("--timing", P.timing, "include runtime_ms in reports");
}

void add_numeric(CLI::App* app, Params& P) {
    app->add_option("--p", P.p, "prime for exponential sums");
    app->add_option("--tol", P.tol, "absolute tolerance for numeric comparisons");
    app->add_option("--dmax", P.dmax, "largest d_i in the prop4 sweep");
    app->add_option("--kmax", P.kmax, "largest weighting entry when --k is omitted");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact verification of a Tokuyama-type formula for Spin(2r+1) and its p-adic ingredients"};
    app.require_subcommand(1);
    Params P;
    std::string claim, kind;
    std::string verify_format = "json", enumerate_format = "jsonl", coeff_format = "text";

    auto* v = app.add_subcommand("verify", "check one claim and print a report");
    v->add_option("claim", claim, "theorem1 corollary2 prop3 prop4 prop5 prop6 gh lemma3 lemma10-equiv")->required();
    v->add_option("--lambda", P.lambda, "dominant weight, comma separated")->delimiter(',');
    v->add_option("--mu", P.mu, "mu = lambda + rho (or a top-row vector for lemma10-equiv)")->delimiter(',');
    v->add_option("--k", P.k, "weighting vector")->delimiter(',');
    add_numeric(v, P);
    add_common(v, P, verify_format);

    auto* e = app.add_subcommand("enumerate", "dump patterns, tableaux, Omega sets or CQ arrays");
    e->add_option("kind", kind, "gt tableaux omega cq")->required();
    e->add_option("--mu", P.mu, "vector whose partial sums form the top row (gt, tableaux, cq C) or mu (omega, cq B)")
        ->delimiter(',');
    e->add_option("--k", P.k, "weighting vector")->delimiter(',');
    e->add_option("--kmax", P.kmax, "largest weighting entry when --k is omitted");
    e->add_flag("--circle-only", P.circle_only, "only patterns in GT° or tableaux in ST°");
    e->add_option("--prefix", P.prefix, "gt: fix rows b_1, a_1, ... e.g. 11,7,4,3,1/9,5,3,1");
    e->add_option("--i", P.index, "Omega index (default r)");
    e->add_option("--rel", P.rel, "Omega relation: le lt eq ge gt any");
    e->add_option("--weighting", P.weighting, "Omega weighting filter A or B, with --k");
    e->add_option("--flavor", P.flavor, "CQ flavor B or C");
    add_common(e, P, enumerate_format);

    auto* c = app.add_subcommand("coeff", "coefficient of a monomial in D_B(z;t) chi_lambda(z)");
    c->add_option("--lambda", P.lambda, "dominant weight, comma separated")->delimiter(',');
    c->add_option("--z", P.z, "exponent constraint i=e, e.g. 2=11/2 (repeatable)");
    c->add_option("--t-exp", P.t_exp, "exponent constraint on t");
    c->add_flag("--t0", P.t0, "set t = 0 first");
    c->add_option("--q", P.q, "substitute t = -q^-1 and also evaluate at this q");
    add_common(c, P, coeff_format);

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp& ex) {
        app.exit(ex, out, err);
        return exit_pass;
    } catch (const CLI::CallForAllHelp& ex) {
        app.exit(ex, out, err);
        return exit_pass;
    } catch (const CLI::ParseError& ex) {
        app.exit(ex, out, err);
        return exit_usage;
    }

    P.format = v->parsed() ? verify_format : (e->parsed() ? enumerate_format : coeff_format);
    try {
        if (v->parsed()) {
            Report rep = verify(claim, P);
            emit({report_json(rep, P)}, P.format, out);
            if (rep.pass()) return exit_pass;
            return rep.error.empty() ? exit_fail : exit_usage;
        }
        if (e->parsed()) {
            emit(enumerate(kind, P), P.format, out);
            return exit_pass;
        }
        LaurentPoly result;
        Json j = coeff(P, result);
        if (P.format == "text") {
            out << result.pretty() << "\n";
            for (const auto& v : j.value("values_at_q", Json::array()))
                out << v["monomial"].get<std::string>() << " : " << v["value"].get<std::string>() << "\n";
        }
        else
            emit({j}, P.format, out);
        return exit_pass;
    } catch (const padic::BudgetExceeded& ex) {
        err << "budget exceeded: " << ex.what() << "\n";
        return exit_usage;
    } catch (const std::invalid_argument& ex) {
        err << "usage: " << ex.what() << "\n";
        return exit_usage;
    } catch (const std::exception& ex) {
        err << "error: " << ex.what() << "\n";
        return exit_usage;
    }
}

}  // namespace tokuyama::tool
