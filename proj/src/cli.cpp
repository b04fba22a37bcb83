#include "watermelon/cli.hpp"

#include "watermelon/asym.hpp"
#include "watermelon/formulas.hpp"
#include "watermelon/lgv.hpp"
#include "watermelon/oracle.hpp"
#include "watermelon/stats.hpp"
#include "watermelon/tableaux.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <future>
#include <iostream>
#include <sstream>

namespace watermelon {

using ojson = nlohmann::ordered_json;

ContactPolynomial compute_route(const std::string& method, const WalkerSpec& spec, const WatermelonSpec* melon)
{
    spec.validate();
    if (spec.t == 0) return oracle_base_case(spec);
    if (method == "oracle") return enumerate_contact_polynomial(spec);
    if (method == "det-general") return z_det_general(spec);
    if (!melon) throw DomainError("method '" + method + "' needs a watermelon instance (--y)");
    const long t = melon->t, y = melon->y, n = melon->n;
    if (method == "det-watermelon") return z_det_watermelon(t, y, n);
    if (method == "thm8") return z_thm8(t, y, n);
    if (method == "thm9") return z_thm9(t, y, n).assembled;
    if (method == "thm4" || method == "det-dev0") {
        if (y != 0) throw DomainError("method '" + method + "' needs y = 0");
        return method == "thm4" ? z_thm4(t / 2, n) : z_det_deviation0(t / 2, n);
    }
    throw DomainError("unknown method '" + method + "'");
}

std::vector<std::string> routes_for(const WatermelonSpec& melon)
{
    std::vector<std::string> r{"oracle", "det-general", "det-watermelon", "thm8", "thm9"};
    if (melon.y == 0 && melon.t >= 2) {
        r.push_back("thm4");
        r.push_back("det-dev0");
    }
    return r;
}

std::string polynomial_json(const ContactPolynomial& p, int n, int t, const int* y)
{
    ojson j;
    j["n"] = n;
    j["t"] = t;
    j["y"] = y ? ojson(*y) : ojson(nullptr);
    ojson c = ojson::object();
    for (const auto& [k, v] : p.sparse()) c[std::to_string(k)] = v.get_str();
    j["coeffs"] = c;
    return j.dump();
}

std::string format_double(double v)
{
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

namespace {

struct Usage : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct InstanceArgs {
    int n = 1;
    int t = 0;
    int y = -1;
    std::vector<int> a, e;

    void add_to(CLI::App* cmd, bool allow_lists)
    {
        cmd->add_option("--n", n, "number of walkers")->required();
        cmd->add_option("--t", t, "walk length")->required();
        cmd->add_option("--y", y, "deviation (watermelon instance)");
        if (allow_lists) {
            cmd->add_option("--a", a, "start heights (general instance)");
            cmd->add_option("--e", e, "end heights (general instance)");
        }
    }

    bool watermelon() const { return y >= 0; }
    WatermelonSpec melon() const
    {
        if (!watermelon()) throw Usage("--y is required");
        WatermelonSpec m{n, t, y};
        m.validate();
        return m;
    }
    WalkerSpec walkers() const
    {
        if (watermelon()) return melon().walkers();
        if (a.empty() || e.empty()) throw Usage("give either --y or both --a and --e");
        WalkerSpec w{n, t, a, e};
        w.validate();
        return w;
    }
};

bool is_decimal(const std::string& s) { return s.find_first_of(".eE") != std::string::npos; }

double parse_double(const std::string& s)
{
    try {
        std::size_t used = 0;
        double v = std::stod(s, &used);
        if (used != s.size()) throw Usage("bad number '" + s + "'");
        return v;
    } catch (const std::logic_error&) {
        throw Usage("bad number '" + s + "'");
    }
}

double kappa_as_double(const std::string& s) { return is_decimal(s) ? parse_double(s) : parse_rational(s).get_d(); }

int cmd_exact(const InstanceArgs& inst, const std::string& method, std::ostream& out)
{
    WalkerSpec w = inst.walkers();
    WatermelonSpec m;
    const WatermelonSpec* mp = nullptr;
    if (inst.watermelon()) {
        m = inst.melon();
        mp = &m;
    }
    ContactPolynomial z = compute_route(method, w, mp);
    out << polynomial_json(z, w.n, w.t, mp ? &inst.y : nullptr) << '\n';
    return 0;
}

struct PointResult {
    WatermelonSpec spec;
    std::vector<std::pair<std::string, bool>> routes;
    std::string first_difference;
};

PointResult check_point(const WatermelonSpec& m, const std::string& corrupt)
{
    PointResult res{m, {}, {}};
    const WalkerSpec w = m.walkers();
    ContactPolynomial ref;
    for (const auto& route : routes_for(m)) {
        ContactPolynomial z = compute_route(route, w, &m);
        if (route == corrupt) z.add_term(0, 1);
        if (route == "oracle") ref = z;
        bool same = z == ref;
        if (!same && res.first_difference.empty()) {
            long top = std::max(z.degree(), ref.degree());
            for (long k = 0; k <= top; ++k)
                if (z.coeff(k) != ref.coeff(k)) {
                    std::ostringstream os;
                    os << "n=" << m.n << " t=" << m.t << " y=" << m.y << " route " << route << ": coefficient of kappa^" << k
                       << " is " << z.coeff(k) << ", oracle has " << ref.coeff(k);
                    res.first_difference = os.str();
                    break;
                }
        }
        res.routes.emplace_back(route, same);
    }
    return res;
}

int cmd_crosscheck(int max_n, int max_t, int max_y, int min_t, const std::string& corrupt, std::ostream& out)
{
    std::vector<WatermelonSpec> grid;
    for (int n = 1; n <= max_n; ++n)
        for (int y = 0; y <= max_y; ++y)
            for (int t = std::max(y, min_t); t <= max_t; ++t)
                if ((t - y) % 2 == 0) grid.push_back({n, t, y});
    std::vector<std::future<PointResult>> jobs;
    for (const auto& m : grid) jobs.push_back(std::async(std::launch::async, check_point, m, corrupt));
    std::string first;
    std::size_t failed = 0;
    for (auto& j : jobs) {
        PointResult r = j.get();
        bool ok = r.first_difference.empty();
        out << "n=" << r.spec.n << " t=" << r.spec.t << " y=" << r.spec.y << " ";
        for (const auto& [name, same] : r.routes) out << " " << name << (same ? ":ok" : ":DIFF");
        out << "  " << (ok ? "PASS" : "FAIL") << '\n';
        if (!ok) {
            ++failed;
            if (first.empty()) first = r.first_difference;
        }
    }
    if (failed) {
        out << "FAIL " << failed << " of " << grid.size() << " instances; first difference: " << first << '\n';
        return 1;
    }
    out << "PASS " << grid.size() << " instances\n";
    return 0;
}

int cmd_contacts(const InstanceArgs& inst, const std::string& kappa_s, const std::string& method, const std::string& format,
                 std::ostream& out)
{
    WatermelonSpec m = inst.melon();
    ContactPolynomial z = compute_route(method, m.walkers(), &m);
    ojson j;
    j["n"] = m.n;
    j["t"] = m.t;
    j["y"] = m.y;
    j["kappa"] = kappa_s;
    std::string mean;
    if (is_decimal(kappa_s)) {
        double k = parse_double(kappa_s);
        if (!(k > 0)) throw DomainError("kappa must be positive");
        mean = format_double(normalized_mean(z, k));
        j["mean"] = mean;
    } else {
        Rational k = parse_rational(kappa_s);
        if (sgn(k) <= 0) throw DomainError("kappa must be positive");
        Rational mr = normalized_mean(z, k);
        mean = to_string(mr);
        j["mean"] = mean;
        j["mean_decimal"] = format_double(mr.get_d());
        std::string closed;
        if (k == 1) closed = to_string(mean_kappa1(m.t, m.y, m.n));
        if (k == 2 && m.y == 0 && m.t >= 2) closed = to_string(mean_kappa2_y0(m.t / 2, m.n));
        if (!closed.empty()) {
            j["closed_form"] = closed;
            if (closed != mean) {
                out << (format == "json" ? j.dump() : mean) << '\n';
                return 1;
            }
        }
    }
    if (format == "json") out << j.dump() << '\n';
    else if (format == "csv") out << "n,t,y,kappa,mean\n" << m.n << ',' << m.t << ',' << m.y << ',' << kappa_s << ',' << mean << '\n';
    else out << mean << '\n';
    return 0;
}

int cmd_asym(const InstanceArgs& inst, const std::string& kappa_s, bool report, int doublings, const std::string& format,
             std::ostream& out, std::ostream& err)
{
    const double kappa = kappa_as_double(kappa_s);
    const long n = inst.n, t = inst.t, y = std::max(inst.y, 0);
    if (!report) {
        AsymptoticEstimate a = z_asym_leading(t, y, n, kappa);
        ojson j;
        j["n"] = n;
        j["t"] = t;
        j["y"] = y;
        j["kappa"] = kappa_s;
        j["regime"] = to_string(a.regime);
        j["value"] = format_double(a.value);
        j["log_value"] = format_double(a.log_value);
        j["growth_rate"] = format_double(a.growth_rate);
        j["critical_exponent"] = format_double(a.critical_exponent);
        j["constant"] = format_double(a.constant);
        j["mean"] = format_double(mean_asym(t, y, n, kappa));
        out << j.dump() << '\n';
        return 0;
    }
    std::vector<long> ts;
    for (int i = 0; i <= doublings; ++i) ts.push_back(t << i);
    ConvergenceReport rep = convergence_report(y, n, kappa, ts);
    if (format == "json") {
        ojson j;
        j["n"] = n;
        j["y"] = y;
        j["kappa"] = kappa_s;
        ojson rows = ojson::array();
        for (const auto& r : rep.rows)
            rows.push_back({{"t", r.t},
                            {"log_exact", format_double(r.log_exact)},
                            {"log_asym", format_double(r.log_asym)},
                            {"ratio_minus_one", format_double(r.ratio_minus_one)}});
        j["rows"] = rows;
        j["shrinking"] = rep.shrinking;
        out << j.dump() << '\n';
    } else {
        out << "t,log_exact,log_asym,ratio_minus_one\n";
        for (const auto& r : rep.rows)
            out << r.t << ',' << format_double(r.log_exact) << ',' << format_double(r.log_asym) << ','
                << format_double(r.ratio_minus_one) << '\n';
    }
    if (!rep.shrinking) {
        err << "FAIL: |ratio - 1| does not shrink as t doubles\n";
        return 1;
    }
    return 0;
}

std::string family_codes(const PathFamily& f)
{
    std::string s;
    for (const auto& p : f.paths) s += (s.empty() ? "" : " ") + (p.empty() ? std::string("-") : path_code(p));
    return s;
}

int cmd_bijection(const InstanceArgs& inst, long index, const std::vector<std::string>& codes, std::ostream& out)
{
    WatermelonSpec m = inst.melon();
    PathFamily fam;
    if (!codes.empty()) {
        for (const auto& c : codes) fam.paths.push_back(parse_path_code(c));
    } else {
        if (index < 0) throw Usage("give --family or --paths");
        bool found = false;
        long i = 0;
        enumerate_families(m.walkers(), [&](const PathFamily& f) {
            if (i++ == index) {
                fam = f;
                found = true;
                return false;
            }
            return true;
        });
        if (!found) throw DomainError("family index out of range");
    }
    Prop6Trace trace;
    SemistandardTableau start = walkers_to_tableau(m, fam);
    PathFamily image = prop6_forward(m, fam, &trace);
    out << "family: " << family_codes(fam) << '\n';
    out << "contacts of the first walk: " << contacts(m.walkers(), fam) << '\n';
    out << "tableau:\n" << format_tableau(start);
    for (std::size_t r = 0; r < trace.after_round.size(); ++r)
        out << "after slide " << r + 1 << ":\n" << format_tableau(trace.after_round[r]);
    out << "after removals:\n" << format_tableau(trace.before_shift);
    out << "after subtracting 1:\n" << format_tableau(trace.image);
    out << "image family: " << family_codes(image) << '\n';
    if (!(prop6_inverse(m, image) == fam)) {
        out << "inverse: MISMATCH\n";
        return 1;
    }
    out << "inverse: ok\n";
    return 0;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"exact and asymptotic partition functions of vicious walkers with wall contacts", "watermelon"};
    app.require_subcommand(1);

    InstanceArgs exact_inst, contacts_inst, asym_inst, bij_inst;
    std::string method = "oracle", contacts_method = "thm8", kappa = "1", format = "text", corrupt;
    int max_n = 3, max_t = 12, max_y = 4, min_t = 1, doublings = 2;
    long family = -1;
    bool report = false;
    std::vector<std::string> codes;

    auto* exact = app.add_subcommand("exact", "contact polynomial by one route");
    exact_inst.add_to(exact, true);
    exact->add_option("--method", method)
        ->check(CLI::IsMember({"oracle", "det-general", "det-watermelon", "det-dev0", "thm4", "thm8", "thm9"}));

    auto* cross = app.add_subcommand("crosscheck", "compare all exact routes on a grid");
    cross->add_option("--max-n", max_n);
    cross->add_option("--max-t", max_t);
    cross->add_option("--max-y", max_y);
    cross->add_option("--min-t", min_t, "smallest t (0 includes the empty walk)");
    cross->add_option("--corrupt", corrupt, "test fixture: perturb the named route")->group("");

    auto* cont = app.add_subcommand("contacts", "normalized mean number of contacts");
    contacts_inst.add_to(cont, false);
    cont->add_option("--kappa", kappa, "p/q for exact, decimal for floating");
    cont->add_option("--method", contacts_method)
        ->check(CLI::IsMember({"oracle", "det-general", "det-watermelon", "det-dev0", "thm4", "thm8", "thm9"}));
    cont->add_option("--format", format)->check(CLI::IsMember({"text", "json", "csv"}));

    auto* asym = app.add_subcommand("asym", "leading asymptotics and convergence table");
    asym_inst.add_to(asym, false);
    asym->add_option("--kappa", kappa);
    asym->add_flag("--report", report, "ratio table at t, 2t, 4t, ...");
    asym->add_option("--doublings", doublings);
    asym->add_option("--format", format)->check(CLI::IsMember({"text", "json", "csv"}));

    auto* bij = app.add_subcommand("bijection", "trace the contact-removing bijection on one family");
    bij_inst.add_to(bij, false);
    bij->add_option("--family", family, "0-based index in enumeration order");
    bij->add_option("--paths", codes, "explicit family, one code per walker (3 = up, 4 = down)");

    std::vector<std::string> rev(args.rbegin(), args.rend());
    if (!rev.empty()) rev.pop_back();  // program name
    try {
        app.parse(rev);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << e.what() << '\n';
        return 2;
    }

    try {
        if (*exact) return cmd_exact(exact_inst, method, out);
        if (*cross) return cmd_crosscheck(max_n, max_t, max_y, min_t, corrupt, out);
        if (*cont) return cmd_contacts(contacts_inst, kappa, contacts_method, format, out);
        if (*asym) return cmd_asym(asym_inst, kappa, report, doublings, format, out, err);
        if (*bij) return cmd_bijection(bij_inst, family, codes, out);
    } catch (const Usage& e) {
        err << "usage error: " << e.what() << '\n';
        return 2;
    } catch (const DomainError& e) {
        err << "domain error: " << e.what() << '\n';
        return 2;
    }
    return 2;
}

}  // namespace watermelon
