// SPDX-License-Identifier: Apache-2.0
#include <arcspace/cli.hpp>

#include <fstream>
#include <functional>
#include <optional>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include <arcspace/deformation.hpp>
#include <arcspace/factorization.hpp>
#include <arcspace/fibration.hpp>
#include <arcspace/lifting.hpp>
#include <arcspace/linearization.hpp>
#include <arcspace/parse.hpp>
#include <arcspace/triviality.hpp>

#include "acceptance/criteria.hpp"

namespace arcspace
{

namespace
{

using json = nlohmann::ordered_json;

constexpr int default_precision = 32;

struct UsageError : Error {
    explicit UsageError(const std::string &msg) : Error("UsageError", msg) {}
};

struct Options {
    std::string file;
    std::optional<int> N;
    std::optional<int> d;
    std::string minor;
    bool json = false;
    std::string gauge;
    std::string y, ybar, z, a2;
    std::string exponents;
    std::optional<int> lmax;
    std::optional<int> params;
    std::optional<int> nilorder;
    bool polys = false;
    std::optional<int> criterion;
};

// Text and JSON built side by side; only one is printed.
struct Report {
    std::vector<std::string> lines;
    json doc = json::object();

    void line(const std::string &s)
    {
        lines.push_back(s);
    }
};

SystemFile load(const Options &o, bool required = true)
{
    if (o.file.empty()) {
        if (required) {
            throw UsageError("this command needs a system file (-f FILE)");
        }
        return SystemFile{};
    }
    std::ifstream in(o.file);
    if (!in) {
        throw Error("IOError", "cannot read " + o.file);
    }
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_system(ss.str());
}

int precision(const Options &o, const SystemFile &f)
{
    const int n = o.N.value_or(f.N.value_or(default_precision));
    if (n < 1) {
        throw UsageError("precision must be at least 1");
    }
    return n;
}

std::vector<int> parse_int_list(std::string s)
{
    std::vector<int> out;
    for (char &c : s) {
        if (c == '{' || c == '}' || c == ',') {
            c = ' ';
        }
    }
    std::istringstream is(s);
    std::string tok;
    while (is >> tok) {
        try {
            std::size_t used = 0;
            out.push_back(std::stoi(tok, &used));
            if (used != tok.size()) {
                throw std::invalid_argument(tok);
            }
        } catch (const std::exception &) {
            throw UsageError("'" + tok + "' is not an integer");
        }
    }
    if (out.empty()) {
        throw UsageError("empty integer list");
    }
    return out;
}

MinorSelection selection(const Options &o, const SystemFile &f)
{
    if (!o.minor.empty()) {
        return MinorSelection(parse_int_list(o.minor), f.system.m);
    }
    if (f.minor) {
        return MinorSelection(*f.minor, f.system.m);
    }
    std::vector<int> cols;
    for (std::size_t i = 1; i <= f.system.k(); ++i) {
        cols.push_back(static_cast<int>(i));
    }
    return MinorSelection(cols, f.system.m);
}

Gauge gauge(const Options &o, const SystemFile &f)
{
    const std::string g = !o.gauge.empty() ? o.gauge : f.gauge.value_or("monomial");
    if (g == "monomial") {
        return Gauge::Monomial;
    }
    if (g == "minor") {
        return Gauge::Minor;
    }
    throw UsageError("gauge must be 'minor' or 'monomial'");
}

// Vector from a flag literal, else from the file.
TruncatedVec vec_arg(const std::string &flag, const std::string &name, const SystemFile &f, int N)
{
    if (!flag.empty()) {
        return parse_series_vec(flag, N);
    }
    if (f.vectors.count(name) != 0) {
        return f.vector(name, N);
    }
    throw UsageError("missing vector --" + name + " (or '" + name + " = (...)' in the file)");
}

int stratum_d(const Options &o, const SystemFile &f)
{
    if (o.d) {
        return *o.d;
    }
    if (f.d) {
        return *f.d;
    }
    throw UsageError("missing stratum order -d");
}

json series_json(const TruncatedSeries &s)
{
    return json{{"series", to_string(s, false)}, {"precision", s.precision()}};
}

json vec_json(const TruncatedVec &v)
{
    json a = json::array();
    for (const auto &s : v) {
        a.push_back(series_json(s));
    }
    return a;
}

std::string vec_text(const TruncatedVec &v)
{
    return to_string(v, true);
}

void footer(Report &r, int n_work, int output, const std::string &note = "")
{
    r.line("# precision: N_work=" + std::to_string(n_work) + ", output=" + std::to_string(output)
           + ", slack=" + std::to_string(n_work - output) + (note.empty() ? "" : ", " + note));
    r.doc["precision"] = json{{"n_work", n_work}, {"output", output}, {"slack", n_work - output}};
}

void cmd_stratify(const Options &o, Report &r)
{
    const SystemFile f = load(o);
    const int N = precision(o, f);
    const TruncatedVec y = vec_arg(o.y, "y", f, N);
    std::vector<MinorSelection> sels;
    if (!o.minor.empty() || f.minor) {
        sels.push_back(selection(o, f));
    } else {
        sels = MinorSelection::all(f.system.k(), f.system.m);
    }
    r.line("# " + f.system.str());
    r.line("# y = " + vec_text(y));
    json rows = json::array();
    bool any = false;
    for (const auto &sel : sels) {
        const auto d = stratum_of(y, f.system, sel);
        any = any || d.has_value();
        const std::string res = d ? "Finite(" + std::to_string(*d) + ")" : "NoStratum";
        r.line("minor " + sel.str() + ": " + res);
        rows.push_back(json{{"minor", sel.cols()}, {"stratum", d ? json(*d) : json(nullptr)}});
    }
    if (!any) {
        r.line("no minor is nonzero at y");
    }
    r.doc["command"] = "stratify";
    r.doc["minors"] = rows;
    footer(r, N, min_precision(y));
}

void cmd_zdstar(const Options &o, Report &r)
{
    const SystemFile f = load(o);
    const int d = stratum_d(o, f);
    const MinorSelection sel = selection(o, f);
    r.doc["command"] = "zdstar";
    r.doc["d"] = d;
    r.doc["minor"] = sel.cols();
    if (!o.z.empty() || f.vectors.count("z") != 0) {
        const int N = precision(o, f);
        const StratumFrame frame(f.system, sel, DivisionWeights::canonical(f.system.m, f.system.k()), d, gauge(o, f),
                                 N);
        const TruncatedVec z = vec_arg(o.z, "z", f, N);
        const bool member = zdstar_member(frame, z);
        r.line("# membership of z = " + to_string(z, false) + " in Z_" + std::to_string(d) + "*, minor " + sel.str());
        r.line(std::string("member: ") + (member ? "true" : "false"));
        r.doc["z"] = vec_json(z);
        r.doc["member"] = member;
        footer(r, N, N);
        return;
    }
    const ZdStarSystem sys = zdstar_equations(f.system, sel, d);
    r.line("# Z_" + std::to_string(d) + "* for " + f.system.str() + " minor " + sel.str());
    std::istringstream fixed(sys.fixed_text());
    std::istringstream eqs(sys.to_text());
    json fz = json::array();
    json eq = json::array();
    for (std::string l; std::getline(fixed, l);) {
        r.line(l);
        fz.push_back(l);
    }
    for (std::string l; std::getline(eqs, l);) {
        r.line(l);
        if (l.find("!=") == std::string::npos) {
            eq.push_back(l);
        }
    }
    r.doc["fixed"] = fz;
    r.doc["equations"] = eq;
    r.doc["inequation"] = sys.inequation.str(sys.names, TermOrder::FirstVariableLargest) + " != 0";
    footer(r, 2 * d, 2 * d, "coefficients t^0..t^" + std::to_string(2 * d));
}

void cmd_factorize(const Options &o, Report &r)
{
    const SystemFile f = load(o);
    const int N = precision(o, f);
    const MinorSelection sel = selection(o, f);
    const TruncatedVec y = vec_arg(o.y, "y", f, N);
    int d = 0;
    if (o.d || f.d) {
        d = stratum_d(o, f);
    } else {
        const auto s = stratum_of(y, f.system, sel);
        if (!s) {
            throw NoMinor("minor " + sel.str() + " vanishes at y to precision " + std::to_string(N));
        }
        d = *s;
    }
    const FactorizationChart chart(f.system, sel, d, gauge(o, f), N);
    const FactorPoint p = phi_big(chart, y);
    r.line("# Phi_" + std::to_string(d) + " for " + f.system.str() + " minor " + sel.str() + ", gauge "
           + to_string(chart.frame().gauge()));
    r.line("d = " + std::to_string(d));
    r.line("z = " + to_string(p.z, false));
    r.line("a2 = " + vec_text(p.a2));
    r.doc["command"] = "factorize";
    r.doc["d"] = d;
    r.doc["z"] = vec_json(p.z);
    r.doc["a2"] = vec_json(p.a2);
    footer(r, N, p.a2.empty() ? N : min_precision(p.a2));
}

void cmd_unfactorize(const Options &o, Report &r)
{
    const SystemFile f = load(o);
    const int N = precision(o, f);
    const MinorSelection sel = selection(o, f);
    const int d = stratum_d(o, f);
    FactorPoint p{vec_arg(o.z, "z", f, N), {}};
    if (f.system.m > f.system.k()) {
        p.a2 = vec_arg(o.a2, "a2", f, N);
    }
    const FactorizationChart chart(f.system, sel, d, gauge(o, f), N);
    const TruncatedVec y = phi_big_inverse(chart, p);
    r.line("# Phi_" + std::to_string(d) + "^-1 for " + f.system.str() + " minor " + sel.str() + ", gauge "
           + to_string(chart.frame().gauge()));
    r.line("y = " + vec_text(y));
    r.doc["command"] = "unfactorize";
    r.doc["d"] = d;
    r.doc["y"] = vec_json(y);
    footer(r, N, min_precision(y));
}

void cmd_lift(const Options &o, Report &r)
{
    const SystemFile f = load(o);
    const int N = precision(o, f);
    const MinorSelection sel = selection(o, f);
    const TruncatedVec ybar = vec_arg(o.ybar, "ybar", f, N);
    const LiftResult res = newton_lift(f.system, sel, ybar, N);
    const LiftReport &rep = res.report;
    r.line("# Newton lift for " + f.system.str() + " minor " + sel.str());
    r.line("ybar = " + to_string(ybar, false));
    r.line("y = " + vec_text(res.y));
    r.line("e0 = " + rep.e0.str());
    r.line("d = " + std::to_string(rep.d));
    json trace = json::array();
    for (const auto &st : rep.trace) {
        r.line("step " + std::to_string(st.iteration) + ": ord f = " + st.order.str());
        trace.push_back(json{{"iteration", st.iteration},
                             {"order", st.order.is_finite() ? json(st.order.value()) : json(nullptr)},
                             {"zero_to_precision", !st.order.is_finite()},
                             {"text", st.order.str()}});
    }
    r.line("agreement = " + std::to_string(rep.agreement));
    r.line(std::string("quadratic = ") + (rep.quadratic() ? "true" : "false"));
    r.doc["command"] = "lift";
    r.doc["y"] = vec_json(res.y);
    r.doc["e0"] = rep.e0.str();
    r.doc["d"] = rep.d;
    r.doc["trace"] = trace;
    r.doc["agreement"] = rep.agreement;
    r.doc["quadratic"] = rep.quadratic();
    footer(r, rep.internal_precision, N);
}

void cmd_deform(const Options &o, Report &r)
{
    SystemFile f = load(o);
    if (o.params) {
        f.params = *o.params;
    }
    if (o.nilorder) {
        f.nilorder = *o.nilorder;
    }
    const NilRing ring = f.nil_ring();
    const int N = precision(o, f);
    r.doc["command"] = "deform";
    r.doc["params"] = ring.p;
    r.doc["nilorder"] = ring.M;
    r.line("# deformations over Q[s1..s" + std::to_string(ring.p) + "]/m^" + std::to_string(ring.M + 1));
    bool did = false;
    if (!f.deform.empty()) {
        const NilVec yt = f.deform_template(N);
        const auto rel = deformation_relations(f.system, yt);
        json a = json::array();
        r.line("relations:");
        for (const auto &e : rel) {
            r.line("  " + e.str() + " = 0");
            a.push_back(e.str());
        }
        r.doc["relations"] = a;
        did = true;
    }
    if (f.gval) {
        if (!f.D) {
            throw UsageError("Weierstrass mode needs 'D = <degree>' in the file");
        }
        const NilSeries g = nil_series_from_poly(*f.gval, ring, N);
        const WeierstrassData w = weierstrass_data(g, *f.D);
        json u = json::array();
        for (std::size_t i = 0; i < w.u.size(); ++i) {
            r.line("u" + std::to_string(i) + " = " + w.u[i].str());
            u.push_back(w.u[i].str());
        }
        r.line("rounds = " + std::to_string(w.rounds));
        r.doc["u"] = u;
        r.doc["rounds"] = w.rounds;
        if (f.F) {
            const auto rel = membership_relations(nil_series_from_poly(*f.F, ring, N), g, *f.D);
            json a = json::array();
            r.line("membership relations:");
            for (const auto &e : rel) {
                r.line("  " + e.str() + " = 0");
                a.push_back(e.str());
            }
            r.doc["membership"] = a;
        }
        did = true;
    }
    if (!did) {
        throw UsageError("the file has neither 'deform' template lines nor a 'gval' divisor");
    }
    footer(r, N, N);
}

void cmd_brieskorn(const Options &o, Report &r)
{
    if (o.exponents.empty() || !o.lmax) {
        throw UsageError("brieskorn needs --exponents and --lmax");
    }
    const BrieskornSpec spec(parse_int_list(o.exponents), *o.lmax);
    const IndependenceReport rep = derivative_independence(spec);
    const BrieskornRing ring(spec);
    std::string ex;
    for (int c : spec.c) {
        ex += (ex.empty() ? "" : ",") + std::to_string(c);
    }
    r.line("# Brieskorn exponents (" + ex + "), l <= " + std::to_string(spec.lmax));
    json rows = json::array();
    for (const auto &row : rep.rows) {
        std::string l = "l=" + std::to_string(row.ell) + " terms=" + std::to_string(row.terms)
                        + " derivatives=" + std::to_string(row.count) + " rank=" + std::to_string(row.rank) + " "
                        + (row.independent ? "independent" : "dependent")
                        + (row.distinct_monomials ? " distinct" : " overlapping");
        json jr{{"l", row.ell},         {"terms", row.terms},
                {"derivatives", row.count}, {"rank", row.rank},
                {"independent", row.independent}, {"distinct_monomials", row.distinct_monomials}};
        if (o.polys) {
            const std::string F = brieskorn_F(spec, row.ell).str(ring.names(), TermOrder::FirstVariableLargest);
            l += "  F = " + F;
            jr["F"] = F;
        }
        r.line(l);
        rows.push_back(jr);
    }
    r.line(rep.conclusion());
    r.doc["command"] = "brieskorn";
    r.doc["rows"] = rows;
    r.doc["conclusion"] = rep.conclusion();
}

int cmd_selftest(const Options &o, Report &r)
{
    std::vector<acceptance::CriterionResult> rs;
    if (o.criterion) {
        rs.push_back(acceptance::run_criterion(*o.criterion));
    } else {
        rs = acceptance::run_all();
    }
    json a = json::array();
    for (const auto &c : rs) {
        r.line(acceptance::format(c));
        a.push_back(json{{"id", c.id},
                         {"title", c.title},
                         {"pass", c.pass},
                         {"known_erratum", c.known_erratum},
                         {"detail", c.detail},
                         {"seconds", c.seconds}});
    }
    r.doc["command"] = "selftest";
    r.doc["criteria"] = a;
    return acceptance::acceptable(rs) ? 0 : 1;
}

} // namespace

int run_cli(const std::vector<std::string> &args, std::ostream &out, std::ostream &err)
{
    CLI::App app{"power-series solutions of polynomial systems", "arcspace"};
    app.require_subcommand(1);
    Options o;

    auto common = [&](CLI::App *sub) {
        sub->add_option("-f,--file", o.file, "system file");
        sub->add_option("-N,--precision", o.N, "working precision N_work (default 32)");
        sub->add_option("--minor", o.minor, "minor columns, e.g. 1 or 1,2");
        sub->add_option("--gauge", o.gauge, "minor or monomial");
        sub->add_flag("--json", o.json, "JSON output");
    };
    auto *stratify = app.add_subcommand("stratify", "order of the minor at an arc");
    common(stratify);
    stratify->add_option("--y", o.y, "arc, e.g. \"(t^2, t, t^3)\"");

    auto *zdstar = app.add_subcommand("zdstar", "equations of Z_d*, or membership of --z");
    common(zdstar);
    zdstar->add_option("-d", o.d, "stratum order");
    zdstar->add_option("--z", o.z, "remainder vector to test");

    auto *factorize = app.add_subcommand("factorize", "solution -> (z, a2)");
    common(factorize);
    factorize->add_option("-d", o.d, "stratum order (default: order of the minor at y)");
    factorize->add_option("--y", o.y, "solution arc");

    auto *unfactorize = app.add_subcommand("unfactorize", "(z, a2) -> solution");
    common(unfactorize);
    unfactorize->add_option("-d", o.d, "stratum order");
    unfactorize->add_option("--z", o.z, "remainder in Z_d*");
    unfactorize->add_option("--a2", o.a2, "free coordinates");

    auto *lift = app.add_subcommand("lift", "Newton lifting of an approximate solution");
    common(lift);
    lift->add_option("--ybar", o.ybar, "approximate solution");

    auto *deform = app.add_subcommand("deform", "deformation relations and Weierstrass polynomials");
    common(deform);
    deform->add_option("--params", o.params, "number of parameters p");
    deform->add_option("--nilorder", o.nilorder, "nilpotency order M");

    auto *brieskorn = app.add_subcommand("brieskorn", "derivative independence for Brieskorn arc spaces");
    brieskorn->add_option("--exponents", o.exponents, "exponents c1,..,cm")->required();
    brieskorn->add_option("--lmax", o.lmax, "degree cutoff")->required();
    brieskorn->add_flag("--polys", o.polys, "print every F_l");
    brieskorn->add_flag("--json", o.json, "JSON output");

    auto *selftest = app.add_subcommand("selftest", "run the acceptance criteria");
    selftest->add_option("--criterion", o.criterion, "run a single criterion");
    selftest->add_flag("--json", o.json, "JSON output");

    auto fail = [&](const std::string &kind, const std::string &msg, int code) {
        if (o.json) {
            out << json{{"error", json{{"class", kind}, {"message", msg}}}}.dump(2) << "\n";
        }
        err << "error: " << kind << ": " << msg << "\n";
        return code;
    };

    try {
        std::vector<std::string> rev(args.rbegin(), args.rend());
        app.parse(rev);
    } catch (const CLI::CallForHelp &e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForAllHelp &e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError &e) {
        return fail("UsageError", e.what(), 2);
    }

    Report r;
    int code = 0;
    try {
        if (stratify->parsed()) {
            cmd_stratify(o, r);
        } else if (zdstar->parsed()) {
            cmd_zdstar(o, r);
        } else if (factorize->parsed()) {
            cmd_factorize(o, r);
        } else if (unfactorize->parsed()) {
            cmd_unfactorize(o, r);
        } else if (lift->parsed()) {
            cmd_lift(o, r);
        } else if (deform->parsed()) {
            cmd_deform(o, r);
        } else if (brieskorn->parsed()) {
            cmd_brieskorn(o, r);
        } else if (selftest->parsed()) {
            code = cmd_selftest(o, r);
        }
    } catch (const ParseError &e) {
        return fail(e.kind(), e.what(), 2);
    } catch (const UsageError &e) {
        return fail(e.kind(), e.what(), 2);
    } catch (const Error &e) {
        return fail(e.kind(), e.what(), e.kind() == "IOError" ? 2 : 1);
    }
    if (o.json) {
        out << r.doc.dump(2) << "\n";
    } else {
        for (const auto &l : r.lines) {
            out << l << "\n";
        }
    }
    return code;
}

} // namespace arcspace
