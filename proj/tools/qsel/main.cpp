// qsel: evaluate staircase-poset statistics, Jackson integrals, and the
// identity verifiers from the command line.
//
// Exit codes: 0 success / all checks pass, 1 a verification failed,
// 2 usage or parameter errors.

#include <fstream>
#include <iostream>
#include <sstream>

#include "json.hpp"

#include "CLI11.hpp"
#include "qsel/errors.hpp"
#include "qsel/jackson.hpp"
#include "qsel/verify.hpp"
#include "qsel/youngbooks.hpp"

using nlohmann::json;

namespace {

void write_output(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text << "\n";
        return;
    }
    std::ofstream os(out_path);
    if (!os) throw qsel::error("cannot write " + out_path);
    os << text << "\n";
}

std::string report_table(const qsel::VerifyReport& r) {
    std::ostringstream os;
    os << "identity  " << r.identity_id << "\n";
    os << "params    ";
    for (size_t i = 0; i < r.params.size(); ++i) {
        if (i) os << "  ";
        os << r.params[i].first << "=" << r.params[i].second;
    }
    os << "\n";
    os << "trunc     t^" << r.trunc_twice << "\n";
    os << "result    " << (r.pass ? "PASS" : "FAIL") << " ("
       << r.elapsed_ms << " ms)";
    if (!r.pass) os << "\ndiff      " << r.diff.to_q_string();
    return os.str();
}

json book_json(const qsel::StaircasePoset& p, const qsel::YoungBook& b) {
    json cells = json::array();
    for (size_t ci = 0; ci < p.cells().size(); ++ci) {
        const qsel::Cell& c = p.cells()[ci];
        cells.push_back({{"page", c.page},
                         {"row", c.row},
                         {"col", c.col},
                         {"entry", b.labels[ci]}});
    }
    return json{{"cells", std::move(cells)}};
}

int scalar(const std::vector<int>& v, const char* name) {
    if (v.size() != 1)
        throw qsel::bad_shape(std::string("--") + name +
                              " must be a single integer here");
    return v[0];
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact verification of q-series integral identities"};
    app.require_subcommand(1);
    int guard = 25;
    app.add_option("--guard-n", guard,
                   "size cap for enumeration-backed computations");

    // common option storage
    int n = 1, m = 0, l = 0, K = 20, mpow = 1, N = 1, limit = 100;
    std::vector<int> rvec = {0}, svec = {0}, mu;
    std::string family, format, out, spec_path;
    int jobs = 1;

    auto* yb = app.add_subcommand("yb", "staircase Young books");
    yb->require_subcommand(1);
    auto* yb_enum = yb->add_subcommand("enumerate", "list Young books");
    auto* yb_majgf =
        yb->add_subcommand("majgf", "major-index generating function");
    for (auto* c : {yb_enum, yb_majgf}) {
        c->add_option("--n", n, "staircase width")->required();
        c->add_option("--r", rvec, "rows above the diagonal, per page")
            ->delimiter(',');
        c->add_option("--s", svec, "extra columns, per page")->delimiter(',');
        c->add_option("--format", format,
                      "json, or the default plain rendering");
        c->add_option("--out", out, "write the result to a file");
    }
    yb_enum->add_option("--limit", limit, "stop after this many books (0: all)");

    auto* integral = app.add_subcommand("integral", "Jackson integrals");
    integral->require_subcommand(1);
    auto* ieval = integral->add_subcommand("eval", "evaluate one integral");
    ieval->add_option("--family", family,
                      "qko, single, variant1..variant4, rational")
        ->required();
    ieval->add_option("--n", n, "variables in the first block")->required();
    ieval->add_option("--m", m, "variables in the second block");
    ieval->add_option("--r", rvec, "exponent(s) r")->delimiter(',');
    ieval->add_option("--s", svec, "pochhammer length(s) s")->delimiter(',');
    ieval->add_option("--l", l, "rational-family pochhammer length");
    ieval->add_option("--mpow", mpow, "difference-product exponent");
    ieval->add_option("--K", K, "truncation order (mod q^{K+1})");
    ieval->add_option("--out", out, "write the series to a file");

    auto* verify = app.add_subcommand("verify", "check one identity instance");
    std::string identity;
    verify->add_option("identity", identity,
                       "qko, schur-form, qselberg-single, ppar, ppar-profile, "
                       "eval1..3, variant1..4, rational, cauchy-{c,b,bs,d,ds,rat}")
        ->required();
    verify->add_option("--n", n, "first size parameter");
    verify->add_option("--m", m, "second size parameter");
    verify->add_option("--N", N, "number of specialization points");
    verify->add_option("--l", l, "page width (profile form) / pochhammer length");
    verify->add_option("--r", rvec, "r composition or scalar")->delimiter(',');
    verify->add_option("--s", svec, "s composition or scalar")->delimiter(',');
    verify->add_option("--mu", mu, "profile partition")->delimiter(',');
    verify->add_option("--mpow", mpow, "difference-product exponent");
    verify->add_option("--K", K, "truncation order");
    verify->add_option("--format", format, "json or table (default json)");
    verify->add_option("--out", out, "write the JSON report to a file");

    auto* vgrid = app.add_subcommand("verify-grid", "run a parameter grid");
    vgrid->add_option("--spec", spec_path, "grid spec JSON file")->required();
    vgrid->add_option("--out", out, "write the JSON report array to a file");
    vgrid->add_option("--jobs", jobs, "worker threads");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (yb_enum->parsed() || yb_majgf->parsed()) {
            qsel::StaircasePoset poset(n, rvec, svec);
            if (poset.size() > guard)
                throw qsel::too_large("poset has " +
                                      std::to_string(poset.size()) +
                                      " cells, over the --guard-n limit");
            if (yb_majgf->parsed()) {
                qsel::Laurent gf = qsel::maj_gf(poset, guard);
                if (format == "json")
                    write_output(qsel::series_to_json(gf), out);
                else
                    write_output(gf.to_q_string(), out);
                return 0;
            }
            json books = json::array();
            int count = 0;
            qsel::enumerate_young_books(
                poset,
                [&](const qsel::YoungBook& b) {
                    books.push_back(book_json(poset, b));
                    ++count;
                    return limit == 0 || count < limit;
                },
                guard);
            if (format == "table") {
                std::ostringstream os;
                for (const auto& b : books) {
                    for (const auto& c : b.at("cells"))
                        os << c.at("entry").get<int>() << " ";
                    os << "\n";
                }
                write_output(os.str(), out);
            } else {
                write_output(books.dump(2), out);
            }
            return 0;
        }

        if (ieval->parsed()) {
            qsel::Integrand f;
            bool two_block = false;
            if (family == "qko") {
                f = qsel::integrand_qko(n, rvec, svec);
            } else if (family == "single") {
                f = qsel::integrand_single(n, scalar(rvec, "r"),
                                           scalar(svec, "s"), mpow);
            } else if (family.rfind("variant", 0) == 0 &&
                       family.size() == 8) {
                f = qsel::integrand_variant(family[7] - '0', n,
                                            scalar(rvec, "r"),
                                            scalar(svec, "s"));
            } else if (family == "rational") {
                f = qsel::integrand_rational(n, m, l, scalar(rvec, "r"),
                                             scalar(svec, "s"));
                two_block = true;
            } else {
                throw qsel::bad_shape("unknown integrand family: " + family);
            }
            qsel::Laurent value =
                two_block ? qsel::jackson_two_block(f, n, m, K)
                : (f.symmetric && f.vanishing)
                    ? qsel::jackson_partition_sum(f, n, K)
                    : qsel::jackson_bruteforce(f, n, K);
            write_output(qsel::series_to_json(value), out);
            return 0;
        }

        if (verify->parsed()) {
            qsel::VerifyReport rep;
            if (identity == "qko") {
                rep = qsel::verify_qko(n, rvec, svec, K, guard);
            } else if (identity == "schur-form") {
                rep = qsel::verify_schur_form(n, rvec, svec, K);
            } else if (identity == "qselberg-single") {
                rep = qsel::verify_qselberg_single(n, scalar(rvec, "r"),
                                                   scalar(svec, "s"), mpow, K);
            } else if (identity == "ppar") {
                rep = qsel::verify_ppar(n, rvec, svec, K);
            } else if (identity == "ppar-profile") {
                rep = qsel::verify_ppar_profile(l, scalar(rvec, "r"), mu, K);
            } else if (identity.rfind("eval", 0) == 0 && identity.size() == 5) {
                rep = qsel::verify_eval(identity[4] - '0', n, scalar(rvec, "r"),
                                        scalar(svec, "s"), K);
            } else if (identity.rfind("variant", 0) == 0 &&
                       identity.size() == 8) {
                rep = qsel::verify_variant(identity[7] - '0', n,
                                           scalar(rvec, "r"),
                                           scalar(svec, "s"), K);
            } else if (identity == "rational") {
                rep = qsel::verify_rational(n, m, l, scalar(rvec, "r"),
                                            scalar(svec, "s"), K);
            } else if (identity.rfind("cauchy-", 0) == 0) {
                rep = qsel::verify_cauchy_classical(identity.substr(7), N, n,
                                                    m, K);
            } else {
                throw qsel::bad_shape("unknown identity id: " + identity);
            }
            if (format == "table") {
                std::cout << report_table(rep) << "\n";
                if (!out.empty()) write_output(qsel::report_to_json(rep), out);
            } else {
                write_output(qsel::report_to_json(rep), out);
            }
            return rep.pass ? 0 : 1;
        }

        if (vgrid->parsed()) {
            std::ifstream is(spec_path);
            if (!is) throw qsel::error("cannot read " + spec_path);
            std::stringstream buf;
            buf << is.rdbuf();
            qsel::GridSpec spec = qsel::grid_from_json(buf.str());
            spec.max_size = std::min(spec.max_size, guard);
            std::vector<qsel::VerifyReport> reports =
                qsel::run_grid(spec, jobs);
            size_t passed = 0;
            for (const auto& r : reports) passed += r.pass;
            write_output(qsel::reports_to_json(reports), out);
            std::cerr << "passed " << passed << "/" << reports.size() << "\n";
            return passed == reports.size() ? 0 : 1;
        }
    } catch (const qsel::error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const json::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
