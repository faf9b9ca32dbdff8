#include <CLI11.hpp>

#include <json.hpp>

#include <array>
#include <iostream>
#include <span>
#include <string>
#include <vector>

#include "eulergen/exactmath.hpp"
#include "eulergen/integrate.hpp"
#include "eulergen/oeis.hpp"
#include "eulergen/powerseries.hpp"
#include "eulergen/report.hpp"
#include "eulergen/triangles.hpp"
#include "eulergen/twobase.hpp"

namespace {

using eulergen::CheckReport;
using eulergen::exactmath::Rational;
using nlohmann::json;

Rational parse_rational_flag(const std::string& text, const char* flag) {
    try {
        return Rational::parse(text);
    } catch (const std::invalid_argument&) {
        throw CLI::ValidationError(std::string(flag) + ": expected an integer or p/q, got '" +
                                   text + "'");
    }
}

void print_report_tsv(const CheckReport& report) {
    std::cout << "identity\t" << report.identity << '\n';
    if (!report.params.empty()) std::cout << "params\t" << report.params << '\n';
    std::cout << "conjecture\t" << (report.conjecture ? "true" : "false") << '\n';
    std::cout << "n\texpected\tcomputed\tpass\n";
    for (const auto& item : report.items)
        std::cout << item.n << '\t' << item.expected << '\t' << item.computed << '\t'
                  << (item.pass ? "true" : "false") << '\n';
    std::cout << "pass\t" << (report.pass() ? "true" : "false") << '\n';
    if (report.conjecture)
        std::cout << "note\tconjecture evidence only; the identity is unproven\n";
}

json report_to_json(const CheckReport& report) {
    json items = json::array();
    for (const auto& item : report.items)
        items.push_back({{"n", item.n},
                         {"expected", item.expected},
                         {"computed", item.computed},
                         {"pass", item.pass}});
    return json{{"identity", report.identity},
                {"params", report.params},
                {"items", items},
                {"conjecture", report.conjecture},
                {"pass", report.pass()}};
}

int emit_report(const CheckReport& report, const std::string& format) {
    if (format == "json")
        std::cout << report_to_json(report).dump(2) << '\n';
    else
        print_report_tsv(report);
    return report.pass() ? 0 : 1;
}

std::vector<std::vector<std::string>> rows_as_strings(const eulergen::triangles::Triangle& t) {
    std::vector<std::vector<std::string>> rows;
    for (long n = 1; n <= t.rows(); ++n) {
        std::vector<std::string> row;
        for (const auto& v : t.row(n)) row.push_back(v.str());
        rows.push_back(std::move(row));
    }
    return rows;
}

void emit_rows(const std::vector<std::vector<std::string>>& rows, const std::string& format,
               json header) {
    if (format == "json") {
        json out = std::move(header);
        out["rows"] = rows;
        std::cout << out.dump(2) << '\n';
        return;
    }
    for (const auto& row : rows) {
        for (std::size_t k = 0; k < row.size(); ++k)
            std::cout << (k ? "\t" : "") << row[k];
        std::cout << '\n';
    }
}

int run_triangle(const std::string& w1, const std::string& w2, long rows,
                 const std::string& format) {
    eulergen::triangles::Triangle t(
        {parse_rational_flag(w1, "--w1"), parse_rational_flag(w2, "--w2")}, rows);
    emit_rows(rows_as_strings(t), format, json{{"w1", w1}, {"w2", w2}});
    return 0;
}

int run_mtriangle(long rows, const std::string& format) {
    auto m = eulergen::triangles::m_triangle(rows);
    std::vector<std::vector<std::string>> out;
    for (long n = 1; n <= rows; ++n) {
        std::vector<std::string> row;
        for (const auto& v : m.row(n)) row.push_back(v.str());
        out.push_back(std::move(row));
    }
    emit_rows(out, format, json::object());
    return 0;
}

int run_rowsums(const std::string& w1, const std::string& w2, long rows,
                const std::string& format) {
    eulergen::triangles::TriangleParams params{parse_rational_flag(w1, "--w1"),
                                               parse_rational_flag(w2, "--w2")};
    eulergen::triangles::Triangle t(params, rows);
    if (format == "json") {
        json items = json::array();
        for (long n = 1; n <= rows; ++n)
            items.push_back({{"n", n},
                             {"sum", eulergen::triangles::row_sum(t, n).str()},
                             {"product", eulergen::triangles::row_sum_closed_form(params, n).str()}});
        std::cout << json{{"w1", w1}, {"w2", w2}, {"items", items}}.dump(2) << '\n';
        return 0;
    }
    std::cout << "n\tsum\tproduct\n";
    for (long n = 1; n <= rows; ++n)
        std::cout << n << '\t' << eulergen::triangles::row_sum(t, n).str() << '\t'
                  << eulergen::triangles::row_sum_closed_form(params, n).str() << '\n';
    return 0;
}

int run_bernoulli(long n_max, const std::string& method, const std::string& format) {
    auto values = method == "series"
                      ? eulergen::powerseries::bernoulli_from_series(static_cast<std::size_t>(n_max))
                      : eulergen::exactmath::bernoulli_oracle(static_cast<std::size_t>(n_max));
    if (format == "json") {
        json items = json::array();
        for (std::size_t n = 0; n < values.size(); ++n)
            items.push_back({{"n", n}, {"value", values[n].str()}});
        std::cout << json{{"method", method}, {"items", items}}.dump(2) << '\n';
        return 0;
    }
    for (std::size_t n = 0; n < values.size(); ++n)
        std::cout << n << '\t' << values[n].str() << '\n';
    return 0;
}

struct OeisFlags {
    std::string fixtures;
    bool offline = false;
    bool network = false;
};

eulergen::oeis::SequenceRecord fetch_with_flags(const std::string& id, const OeisFlags& flags) {
    auto config = eulergen::oeis::default_config();
    if (!flags.fixtures.empty()) config.fixture_dir = flags.fixtures;
    auto mode = (flags.network && !flags.offline) ? eulergen::oeis::FetchMode::network
                                                  : eulergen::oeis::FetchMode::fixture;
    return eulergen::oeis::fetch_sequence(id, mode, config);
}

int run_oeis_check(const std::string& id, long rows, const OeisFlags& flags,
                   const std::string& format) {
    auto record = fetch_with_flags(id, flags);
    CheckReport report;
    if (id == "A059364") {
        eulergen::oeis::ReadOrder order;
        if (rows == 0) rows = eulergen::oeis::complete_rows(record, order);
        report = eulergen::oeis::compare_m_triangle_abs(eulergen::triangles::m_triangle(rows),
                                                        record, order, rows);
    } else {
        int order_of_id = id == "A008292" ? 1 : id == "A008517" ? 2 : id == "A219512" ? 3 : 0;
        if (order_of_id == 0)
            throw std::invalid_argument("no comparison rule for " + id +
                                        " (supported: A008292, A008517, A219512, A059364)");
        eulergen::oeis::ReadOrder order{1, order_of_id == 1 ? 1 : 0};
        if (rows == 0) rows = eulergen::oeis::complete_rows(record, order);
        report = eulergen::oeis::compare_triangle(
            eulergen::triangles::classic_triangle(order_of_id, rows), record, order, rows);
    }
    return emit_report(report, format);
}

int run_probe(long n_max, const OeisFlags& flags) {
    auto record = fetch_with_flags("A160468", flags);
    std::cout << eulergen::oeis::probe_a160468(n_max, record);
    return 0;
}

}  // namespace

int run(int argc, char** argv) {
    CLI::App app{"exact generalized Eulerian triangles, Bernoulli integrals and "
                 "derivative identities"};
    app.require_subcommand(1);
    int exit_code = 0;

    // triangle
    auto* triangle = app.add_subcommand("triangle", "print rows of the G(n,k) triangle");
    struct {
        std::string w1, w2, format = "tsv";
        long rows = 0;
    } tri;
    triangle->add_option("--w1", tri.w1, "first parameter, integer or p/q")->required();
    triangle->add_option("--w2", tri.w2, "second parameter, integer or p/q")->required();
    triangle->add_option("--rows", tri.rows, "number of rows")->required()->check(CLI::PositiveNumber);
    triangle->add_option("--format", tri.format)->check(CLI::IsMember({"tsv", "json"}));
    triangle->callback([&] { exit_code = run_triangle(tri.w1, tri.w2, tri.rows, tri.format); });

    // mtriangle
    auto* mtriangle = app.add_subcommand("mtriangle", "print rows of the M(n,k) triangle");
    struct {
        std::string format = "tsv";
        long rows = 0;
    } mtri;
    mtriangle->add_option("--rows", mtri.rows)->required()->check(CLI::PositiveNumber);
    mtriangle->add_option("--format", mtri.format)->check(CLI::IsMember({"tsv", "json"}));
    mtriangle->callback([&] { exit_code = run_mtriangle(mtri.rows, mtri.format); });

    // rowsums
    auto* rowsums = app.add_subcommand(
        "rowsums", "print row sums next to the closed-form products");
    struct {
        std::string w1, w2, format = "tsv";
        long rows = 0;
    } rs;
    rowsums->add_option("--w1", rs.w1)->required();
    rowsums->add_option("--w2", rs.w2)->required();
    rowsums->add_option("--rows", rs.rows)->required()->check(CLI::PositiveNumber);
    rowsums->add_option("--format", rs.format)->check(CLI::IsMember({"tsv", "json"}));
    rowsums->callback([&] { exit_code = run_rowsums(rs.w1, rs.w2, rs.rows, rs.format); });

    // bernoulli
    auto* bernoulli = app.add_subcommand("bernoulli", "print B_0..B_n");
    struct {
        long n = 0;
        std::string method = "recurrence", format = "tsv";
    } bern;
    bernoulli->add_option("--n", bern.n)->required()->check(CLI::NonNegativeNumber);
    bernoulli->add_option("--method", bern.method)
        ->check(CLI::IsMember({"series", "recurrence"}));
    bernoulli->add_option("--format", bern.format)->check(CLI::IsMember({"tsv", "json"}));
    bernoulli->callback([&] { exit_code = run_bernoulli(bern.n, bern.method, bern.format); });

    // verify <identity>
    auto* verify = app.add_subcommand("verify", "run an exact verification");
    verify->require_subcommand(1);
    std::string verify_format = "tsv";

    auto* theorem1 = verify->add_subcommand("theorem1",
                                            "n-fold derivative equals r^n G_n termwise");
    struct {
        std::string w1, w2, r = "1", a = "0", b = "1";
        long n_max = 12;
        bool real_form = false;
    } th;
    theorem1->add_option("--w1", th.w1)->required();
    theorem1->add_option("--w2", th.w2)->required();
    theorem1->add_option("--r", th.r);
    theorem1->add_option("--a", th.a);
    theorem1->add_option("--b", th.b);
    theorem1->add_option("--n-max", th.n_max)->check(CLI::PositiveNumber);
    theorem1->add_flag("--real-form", th.real_form);
    theorem1->add_option("--format", verify_format)->check(CLI::IsMember({"tsv", "json"}));
    theorem1->callback([&] {
        eulergen::twobase::OdeSpec ode{
            parse_rational_flag(th.r, "--r"),  parse_rational_flag(th.a, "--a"),
            parse_rational_flag(th.b, "--b"),  parse_rational_flag(th.w1, "--w1"),
            parse_rational_flag(th.w2, "--w2"), th.real_form};
        exit_code = emit_report(eulergen::twobase::verify_theorem1(ode, th.n_max), verify_format);
    });

    struct SimpleVerify {
        const char* name;
        const char* help;
        const char* bound_flag;
        long bound;
        CheckReport (*fn)(long);
    };
    const SimpleVerify simple[] = {
        {"c4", "alternating Eulerian integrals equal -B_{n+1}", "--n-max", 60,
         &eulergen::integrate::verify_c4},
        {"e4", "alternating binomial-weighted row sums", "--n-max", 60,
         &eulergen::integrate::verify_e4},
        {"q4", "second-order integral conjecture (evidence only)", "--n-max", 40,
         &eulergen::integrate::verify_q4},
        {"gv", "squared sech-derivative integrals equal Bernoulli numbers", "--m-max", 15,
         &eulergen::integrate::gv_verify},
        {"example2", "interval integrals for the sine parameters", "--n-max", 24,
         &eulergen::integrate::verify_example2},
        {"example3", "closed-form series against exact integrals", "--n-max", 30,
         &eulergen::integrate::verify_example3},
    };
    std::array<long, std::size(simple)> bounds;
    for (std::size_t i = 0; i < std::size(simple); ++i) {
        const auto& sv = simple[i];
        bounds[i] = sv.bound;
        long* bound = &bounds[i];
        auto* cmd = verify->add_subcommand(sv.name, sv.help);
        cmd->add_option(sv.bound_flag, *bound)->check(CLI::PositiveNumber);
        cmd->add_option("--format", verify_format)->check(CLI::IsMember({"tsv", "json"}));
        auto fn = sv.fn;
        cmd->callback([&exit_code, &verify_format, fn, bound] {
            exit_code = emit_report(fn(*bound), verify_format);
        });
    }

    // oeis check / probe
    auto* oeis_cmd = app.add_subcommand("oeis", "cross-check against OEIS b-files");
    oeis_cmd->require_subcommand(1);
    OeisFlags oeis_flags;
    std::string oeis_format = "tsv";

    auto* check = oeis_cmd->add_subcommand("check", "compare a triangle against a sequence");
    struct {
        std::string id;
        long rows = 0;
    } chk;
    check->add_option("--id", chk.id, "A008292, A008517, A219512 or A059364")->required();
    check->add_option("--rows", chk.rows, "rows to compare (default: all fixture rows)")
        ->check(CLI::PositiveNumber);
    check->add_flag("--offline", oeis_flags.offline, "force fixture mode (the default)");
    check->add_flag("--network", oeis_flags.network, "allow fetching and caching b-files");
    check->add_option("--fixtures", oeis_flags.fixtures, "fixture directory");
    check->add_option("--format", oeis_format)->check(CLI::IsMember({"tsv", "json"}));
    check->callback(
        [&] { exit_code = run_oeis_check(chk.id, chk.rows, oeis_flags, oeis_format); });

    auto* probe = oeis_cmd->add_subcommand(
        "probe-a160468", "dump odd (1/2,1)-triangle rows next to A160468 for inspection");
    long probe_n_max = 7;
    probe->add_option("--n-max", probe_n_max)->check(CLI::PositiveNumber);
    probe->add_flag("--offline", oeis_flags.offline);
    probe->add_flag("--network", oeis_flags.network);
    probe->add_option("--fixtures", oeis_flags.fixtures);
    probe->callback([&] { exit_code = run_probe(probe_n_max, oeis_flags); });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return exit_code;
}

int main(int argc, char** argv) { return run(argc, argv); }
