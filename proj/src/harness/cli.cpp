#include <pqeuler/cli.hpp>

#include <pqeuler/checks.hpp>
#include <pqeuler/contfrac.hpp>
#include <pqeuler/families.hpp>
#include <pqeuler/json_io.hpp>
#include <pqeuler/maps.hpp>
#include <pqeuler/qeuler.hpp>
#include <pqeuler/stats.hpp>

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <optional>

namespace pqeuler
{

namespace
{

constexpr int exit_ok = 0;
constexpr int exit_fail = 1;
constexpr int exit_usage = 2;

class UsageError : public std::invalid_argument
{
public:
    using std::invalid_argument::invalid_argument;
};

std::string joined(const std::vector<std::string> &v)
{
    std::string out;
    for (const auto &s : v) {
        out += (out.empty() ? "" : ", ") + s;
    }
    return out;
}

std::string word_string(const std::vector<int> &w)
{
    std::string out;
    for (int v : w) {
        out += (out.empty() ? "" : " ") + std::to_string(v);
    }
    return out;
}

struct StatsOptions {
    std::string perm;
    bool json = false;
};

struct VerifyOptions {
    std::string id;
    std::optional<int> n, order;
    bool json = false, all = false, list = false;
};

struct CfOptions {
    std::string name;
    int order = 8;
    bool json = false, list = false;
    std::string method = "cf";
};

struct TableOptions {
    std::string what = "poly";
    std::string family = "S";
    std::string weight = "x^wex*y^fix*q^cros*p^nest*s^inv";
    int n = 4;
    bool json = false;
    std::string method = "cf";
};

struct BijOptions {
    std::string name, perm;
    bool verify = false, json = false;
    int n = 6;
};

struct ExportOptions {
    int n = 10;
    std::string output;
    std::string method = "cf";
};

EulerMethod parse_method(const std::string &m)
{
    if (m == "cf") {
        return EulerMethod::cf;
    }
    if (m == "enumerate") {
        return EulerMethod::enumerate;
    }
    throw UsageError("unknown method '" + m + "' (cf, enumerate)");
}

int cmd_stats(const StatsOptions &o, std::ostream &out)
{
    const StatRecord r = basic_stats(Permutation::parse(o.perm));
    out << (o.json ? r.to_json().dump() : r.to_string()) << '\n';
    return exit_ok;
}

int cmd_verify(const VerifyOptions &o, std::ostream &out)
{
    if (o.list) {
        for (const auto &c : check_registry()) {
            out << c.id << " (" << c.param_name << ", default " << c.default_param << "): " << c.description
                << '\n';
        }
        return exit_ok;
    }
    std::vector<CheckReport> reports;
    if (o.all) {
        for (const auto &c : check_registry()) {
            reports.push_back(run_check(c.id));
        }
    } else {
        if (o.id.empty()) {
            throw UsageError("verify needs a check id, --all or --list");
        }
        check_info(o.id);
        if (o.n && o.order) {
            throw UsageError("give either --n or --order, not both");
        }
        reports.push_back(run_check(o.id, o.n ? o.n : o.order));
    }
    bool all_pass = true;
    if (o.json) {
        nlohmann::json j = nlohmann::json::array();
        for (const auto &r : reports) {
            j.push_back(r.to_json());
        }
        out << (reports.size() == 1 ? j[0].dump(2) : j.dump(2)) << '\n';
    }
    for (const auto &r : reports) {
        all_pass = all_pass && r.pass;
        if (!o.json) {
            out << r.summary() << '\n';
        }
    }
    return all_pass ? exit_ok : exit_fail;
}

int cmd_cf(const CfOptions &o, std::ostream &out)
{
    if (o.list) {
        for (const auto &n : preset_names()) {
            out << n << '\n';
        }
        return exit_ok;
    }
    if (o.name.empty()) {
        throw UsageError("cf needs a preset name (one of: " + joined(preset_names()) + ")");
    }
    const Preset p = preset(o.name);
    LaurentSeries s;
    if (o.method == "cf") {
        s = expand(p, o.order);
    } else if (o.method == "dp") {
        s = expand_by_paths(p, o.order, SumMethod::dp);
    } else if (o.method == "enumerate") {
        s = expand_by_paths(p, o.order, SumMethod::enumerate);
    } else {
        throw UsageError("unknown method '" + o.method + "' (cf, dp, enumerate)");
    }
    out << (o.json ? to_json(s).dump() : s.to_string()) << '\n';
    return exit_ok;
}

int cmd_table(const TableOptions &o, std::ostream &out)
{
    if (o.what == "euler") {
        const auto table = euler_table(o.n, parse_method(o.method));
        if (o.json) {
            out << table.to_json().dump(2) << '\n';
            return exit_ok;
        }
        for (const auto &row : table.rows) {
            out << "n=" << row.n << " E=" << row.e << " E(p,q)=" << row.e_pq.to_string()
                << " E(q)=" << row.e_q.to_string() << " E*(q)=" << row.e_star_q.to_string() << '\n';
        }
        return exit_ok;
    }
    if (o.what != "poly") {
        throw UsageError("unknown table '" + o.what + "' (poly, euler)");
    }
    const auto family = parse_family(o.family);
    if (!family) {
        throw UsageError("unknown family '" + o.family + "' (S, D, Dstar, A, Astar, Aprime, Adoubleprime)");
    }
    const LaurentPoly p = stat_polynomial(*family, o.n, Weight::parse(o.weight));
    if (o.json) {
        out << nlohmann::json{{"family", o.family}, {"n", o.n}, {"weight", o.weight}, {"polynomial", to_json(p)}}.dump()
            << '\n';
    } else {
        out << p.to_string() << '\n';
    }
    return exit_ok;
}

int cmd_bij(const BijOptions &o, std::ostream &out)
{
    const auto &names = map_names();
    if (std::find(names.begin(), names.end(), o.name) == names.end()) {
        throw UsageError("unknown map '" + o.name + "' (one of: " + joined(names) + ")");
    }
    if (o.verify) {
        const CheckReport r = verify_map(o.name, o.n);
        out << (o.json ? r.to_json().dump(2) : r.summary()) << '\n';
        return r.pass ? exit_ok : exit_fail;
    }
    if (o.perm.empty()) {
        throw UsageError("bij needs a permutation or --verify");
    }
    const Permutation sigma = Permutation::parse(o.perm);
    nlohmann::json j{{"map", o.name}, {"input", sigma.to_string()}};
    std::string text;
    if (o.name == "fv" || o.name == "fv_star") {
        const DyckDiagramme d = o.name == "fv" ? fv(sigma) : fv_star(sigma);
        text = d.to_string();
        j["path"] = d.path.to_string();
        j["xi"] = d.xi;
    } else if (o.name == "fz") {
        const LaguerreHistory h = fz(sigma);
        text = h.to_string();
        j["path"] = h.path.to_string();
        j["xi"] = h.xi;
    } else if (o.name == "csz") {
        CszTrace trace;
        const Permutation tau = csz(sigma, &trace);
        text = tau.to_string() + "\n  f:  " + word_string(trace.f) + "\n  f': " + word_string(trace.f_prime)
               + "\n  g:  " + word_string(trace.g) + "\n  g': " + word_string(trace.g_prime)
               + "\n  emb: " + word_string(trace.emb);
        j["image"] = tau.to_string();
        j["biwords"] = trace.to_json();
    } else {
        const Permutation tau = o.name == "phi" ? invol_phi(sigma) : invol_psi(sigma);
        text = tau.to_string();
        j["image"] = text;
    }
    if (!j.contains("image")) {
        j["image"] = text;
    }
    out << (o.json ? j.dump() : text) << '\n';
    return exit_ok;
}

int cmd_export(const ExportOptions &o, std::ostream &out)
{
    const std::string text = euler_table(o.n, parse_method(o.method)).to_json().dump(2) + "\n";
    if (o.output.empty()) {
        out << text;
        return exit_ok;
    }
    std::ofstream file(o.output);
    if (!file || !(file << text)) {
        throw UsageError("cannot write " + o.output);
    }
    return exit_ok;
}

} // namespace

int run_cli(const std::vector<std::string> &args, std::ostream &out, std::ostream &err)
{
    CLI::App app{"Permutation statistics, continued fractions and q-Euler numbers", "pqeuler"};
    app.require_subcommand(1);

    StatsOptions so;
    auto *stats = app.add_subcommand("stats", "Print all statistics of a permutation");
    stats->add_option("perm", so.perm, "Permutation, e.g. 231 or 10,2,1,...")->required();
    stats->add_flag("--json", so.json, "JSON output");

    VerifyOptions vo;
    auto *verify = app.add_subcommand("verify", "Run an identity check");
    verify->add_option("id", vo.id, "Check id");
    verify->add_option("--n", vo.n, "Size parameter");
    verify->add_option("--order", vo.order, "Series order parameter");
    verify->add_flag("--json", vo.json, "JSON report");
    verify->add_flag("--all", vo.all, "Run every check at its default parameter");
    verify->add_flag("--list", vo.list, "List check ids");

    CfOptions co;
    auto *cf = app.add_subcommand("cf", "Expand a continued fraction preset");
    cf->add_option("preset", co.name, "Preset name");
    cf->add_option("--order", co.order, "Truncation order")->check(CLI::Range(0, 40));
    cf->add_option("--method", co.method, "cf, dp or enumerate");
    cf->add_flag("--json", co.json, "JSON output");
    cf->add_flag("--list", co.list, "List preset names");

    TableOptions to;
    auto *table = app.add_subcommand("table", "Statistic polynomial of a family, or the Euler table");
    table->add_option("--what", to.what, "poly or euler");
    table->add_option("--family", to.family, "S, D, Dstar, A, Astar, Aprime, Adoubleprime");
    table->add_option("--n", to.n, "Size")->check(CLI::Range(0, 40));
    table->add_option("--weight", to.weight, "Monomial weight, e.g. x^wex*y^fix*q^cros");
    table->add_option("--method", to.method, "cf or enumerate (euler table)");
    table->add_flag("--json", to.json, "JSON output");

    BijOptions bo;
    auto *bij = app.add_subcommand("bij", "Apply or certify a bijection or involution");
    bij->add_option("name", bo.name, "fv, fv_star, fz, csz, phi, psi")->required();
    bij->add_option("perm", bo.perm, "Permutation");
    bij->add_flag("--verify", bo.verify, "Exhaustive certificate on all inputs of size --n");
    bij->add_option("--n", bo.n, "Size for --verify");
    bij->add_flag("--json", bo.json, "JSON output");

    ExportOptions eo;
    auto *exp = app.add_subcommand("export", "Write the Euler table as JSON");
    exp->add_option("--n", eo.n, "Largest index")->check(CLI::Range(0, 12));
    exp->add_option("--output,-o", eo.output, "Output file (default stdout)");
    exp->add_option("--method", eo.method, "cf or enumerate");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp &e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForAllHelp &e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError &e) {
        app.exit(e, out, err);
        return exit_usage;
    }

    try {
        if (stats->parsed()) {
            return cmd_stats(so, out);
        }
        if (verify->parsed()) {
            return cmd_verify(vo, out);
        }
        if (cf->parsed()) {
            return cmd_cf(co, out);
        }
        if (table->parsed()) {
            return cmd_table(to, out);
        }
        if (bij->parsed()) {
            return cmd_bij(bo, out);
        }
        if (exp->parsed()) {
            return cmd_export(eo, out);
        }
    } catch (const std::invalid_argument &e) {
        err << "error: " << e.what() << '\n';
        return exit_usage;
    } catch (const std::out_of_range &e) {
        err << "error: " << e.what() << '\n';
        return exit_usage;
    } catch (const std::length_error &e) {
        err << "error: " << e.what() << '\n';
        return exit_usage;
    }
    err << "error: no subcommand\n";
    return exit_usage;
}

} // namespace pqeuler
