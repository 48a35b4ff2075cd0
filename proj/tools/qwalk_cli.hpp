#ifndef QWALK_TOOLS_QWALK_CLI_HPP
#define QWALK_TOOLS_QWALK_CLI_HPP

// Command-line front end. Subcommands:
//
//   spectrum  spectrum of A, S+(U), S+(U^2) or S+(U^3) as a closed form,
//             an exact characteristic polynomial, or numeric values
//   verify    exact identity / spectrum checks over a corpus
//   compare   cospectrality of two graphs under all four invariants
//   batch     pairwise comparison over a graph6 corpus
//   generate  emit a named graph as graph6
//
// Exit codes: 0 success, 1 failed check (or a distinguished pair under
// --assert-isomorphic), 2 usage, input or hypothesis errors.

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "qwalk/json_io.hpp"
#include "qwalk/qwalk.hpp"

namespace qwalk::cli {

enum exit_code : int { ok = 0, check_failed = 1, usage = 2 };

/// Diagnostics on stderr, filtered by QWALK_LOG (error, warn, info, debug;
/// default warn).
class logger {
public:
    enum level { off = 0, error = 1, warn = 2, info = 3, debug = 4 };

    explicit logger(std::ostream& err) : err_(err) {
        const char* env = std::getenv("QWALK_LOG");
        const std::string v = env ? env : "";
        if (v == "off" || v == "0")
            level_ = off;
        else if (v == "error")
            level_ = error;
        else if (v == "info")
            level_ = info;
        else if (v == "debug")
            level_ = debug;
    }

    void log(level l, const std::string& msg) const {
        static const char* names[] = {"", "error", "warn", "info", "debug"};
        if (l <= level_)
            err_ << "qwalk " << names[l] << ": " << msg << '\n';
    }

private:
    std::ostream& err_;
    level level_ = warn;
};

namespace detail {

/// A file path (all graphs in it), "g6:<string>", or a generator spec.
inline std::vector<labelled_graph> resolve_source(const std::string& arg) {
    if (std::filesystem::is_regular_file(arg))
        return read_graph6_file(arg);
    if (arg.starts_with("g6:"))
        return {{arg, parse_graph6(std::string_view(arg).substr(3))}};
    return {{arg, generators::from_spec(arg)}};
}

inline std::vector<labelled_graph> gather(const std::vector<std::string>& inputs,
                                          const std::vector<std::string>& specs) {
    std::vector<labelled_graph> out;
    for (const auto& path : inputs) {
        auto gs = read_graph6_file(path);
        out.insert(out.end(), gs.begin(), gs.end());
    }
    for (const auto& s : specs)
        out.push_back({s, generators::from_spec(s)});
    if (out.empty())
        throw parameter_error("no input graphs: give --input <file.g6> or --generate <spec>");
    return out;
}

inline int_matrix matrix_for(const graph& g, const std::string& which) {
    if (which == "a")
        return adjacency_matrix(g);
    auto k = is_regular(g);
    if (!k)
        throw hypothesis_error("graph is not regular");
    const arc_space a(g);
    if (which == "s1")
        return support_u(a);
    return support_u_power(a, which == "s2" ? 2 : 3);
}

inline std::vector<std::complex<double>> sorted_desc(std::vector<std::complex<double>> v) {
    std::sort(v.begin(), v.end(), [](auto a, auto b) {
        const double ar = std::abs(a.real() - b.real()) < 1e-9 ? 0 : a.real() - b.real();
        return ar != 0 ? ar > 0 : a.imag() > b.imag();
    });
    return v;
}

inline std::string matrix_name(const std::string& which) {
    if (which == "a")
        return "A";
    if (which == "s1")
        return "S+(U)";
    return which == "s2" ? "S+(U^2)" : "S+(U^3)";
}

class sink {
public:
    sink(const std::string& path, std::ostream& fallback) {
        if (!path.empty()) {
            file_.open(path);
            if (!file_)
                throw parameter_error("cannot write " + path);
        }
        os_ = path.empty() ? &fallback : &file_;
    }
    std::ostream& operator*() { return *os_; }

private:
    std::ofstream file_;
    std::ostream* os_;
};

inline std::string text_closed_form(const closed_form_spectrum& s) {
    std::ostringstream os;
    for (const auto& r : s.rationals)
        os << "  " << r.value.str() << "  x" << r.multiplicity << '\n';
    for (const auto& p : s.pairs) {
        auto [a, b] = p.roots();
        os << "  " << (p.squared ? "theta^2+1 over " : "") << "(lambda +- sqrt(lambda^2 - " << 4 * (s.k - 1)
           << "))/2, lambda = " << (p.exact() ? p.lambda_exact->str() : format_number(p.lambda)) << ": "
           << format_complex(a) << ", " << format_complex(b) << "  x" << p.multiplicity;
        if (p.exact())
            os << "  [roots of " << p.quadratic().to_string() << "]";
        os << '\n';
    }
    os << "  total multiplicity " << s.total_multiplicity() << '\n';
    return os.str();
}

} // namespace detail

struct options {
    // shared
    std::vector<std::string> inputs;
    std::vector<std::string> generate;
    std::string format = "text";
    std::string output;
    // spectrum
    std::string which = "s1";
    std::string form = "closed";
    // verify
    std::string checks = "all";
    // compare
    std::vector<std::string> pair;
    bool assert_isomorphic = false;
    // batch
    std::size_t threads = 0;
    bool all_pairs = false;
    // generate
    std::string spec;
};

inline int cmd_spectrum(const options& o, std::ostream& out, const logger& log) {
    if ((o.which == "a" || o.which == "s3") && o.form == "closed")
        throw parameter_error("--form closed is available for --which s1 and s2 only");
    const auto graphs = detail::gather(o.inputs, o.generate);
    detail::sink dst(o.output, out);
    json all = json::array();
    if (o.format == "csv")
        *dst << (o.form == "charpoly" ? "graph,power,coefficient\n"
                 : o.form == "numeric" ? "graph,re,im\n"
                                       : "graph,type,value,lambda,multiplicity\n");

    for (const auto& [id, g] : graphs) {
        log.log(logger::info, "spectrum of " + detail::matrix_name(o.which) + " for " + id);
        json item{{"graph", id}, {"matrix", detail::matrix_name(o.which)}, {"form", o.form}};
        if (o.form == "closed") {
            const auto s = o.which == "s1" ? closed_form_spectrum_su(g) : closed_form_spectrum_su2(g);
            if (o.format == "json") {
                item["spectrum"] = to_json(s);
            } else if (o.format == "csv") {
                for (const auto& r : s.rationals)
                    *dst << csv_field(id) << ",rational," << r.value.str() << ",," << r.multiplicity << '\n';
                for (const auto& p : s.pairs)
                    *dst << csv_field(id) << ",quadratic-pair,,"
                         << (p.exact() ? p.lambda_exact->str() : format_number(p.lambda)) << ',' << p.multiplicity
                         << '\n';
            } else {
                *dst << detail::matrix_name(o.which) << " closed-form spectrum of " << id << " (n=" << s.n
                     << ", k=" << s.k << ")\n"
                     << detail::text_closed_form(s);
            }
        } else if (o.form == "charpoly") {
            const auto p = char_poly(detail::matrix_for(g, o.which));
            if (o.format == "json") {
                item["charpoly"] = to_json(p);
            } else if (o.format == "csv") {
                for (std::size_t i = 0; i < p.coefficients().size(); ++i)
                    *dst << csv_field(id) << ',' << i << ',' << p.coefficients()[i].str() << '\n';
            } else {
                *dst << "det(tI - " << detail::matrix_name(o.which) << ") for " << id << ":\n  " << p << '\n';
            }
        } else {
            std::vector<std::complex<double>> values;
            if (o.which == "a") {
                for (double x : symmetric_eigenvalues(adjacency_matrix(g)))
                    values.emplace_back(x, 0);
            } else {
                const auto k = is_regular(g);
                const bool closed = k && is_connected(g) && *k >= (o.which == "s1" ? 2u : 3u) && o.which != "s3";
                if (closed) {
                    values = (o.which == "s1" ? closed_form_spectrum_su(g) : closed_form_spectrum_su2(g)).eigenvalues();
                } else {
                    values = polynomial_roots(char_poly(detail::matrix_for(g, o.which)));
                }
            }
            values = detail::sorted_desc(std::move(values));
            if (o.format == "json") {
                json arr = json::array();
                for (auto z : values)
                    arr.push_back(complex_json(z));
                item["eigenvalues"] = std::move(arr);
            } else if (o.format == "csv") {
                for (auto z : values)
                    *dst << csv_field(id) << ',' << format_number(z.real()) << ',' << format_number(z.imag()) << '\n';
            } else {
                *dst << "eigenvalues of " << detail::matrix_name(o.which) << " for " << id << ":\n";
                for (auto z : values)
                    *dst << "  " << format_complex(z) << '\n';
            }
        }
        all.push_back(std::move(item));
    }
    if (o.format == "json")
        *dst << all.dump(2) << '\n';
    return ok;
}

inline std::vector<std::string> split_list(const std::string& s) {
    std::vector<std::string> out;
    std::stringstream ss(s);
    for (std::string item; std::getline(ss, item, ',');)
        if (!item.empty())
            out.push_back(item);
    return out;
}

inline int cmd_verify(const options& o, std::ostream& out, const logger& log) {
    const auto groups = split_list(o.checks);
    const auto graphs = detail::gather(o.inputs, o.generate);
    std::vector<check_result> results;
    for (const auto& [id, g] : graphs) {
        log.log(logger::info, "verifying " + id);
        auto r = run_checks(g, id, groups);
        results.insert(results.end(), r.begin(), r.end());
    }
    const bool all_pass = std::none_of(results.begin(), results.end(),
                                       [](const check_result& r) { return r.status == check_status::fail; });
    detail::sink dst(o.output, out);
    if (o.format == "json") {
        json arr = json::array();
        for (const auto& r : results)
            arr.push_back(to_json(r));
        *dst << json{{"results", std::move(arr)}, {"all_pass", all_pass}}.dump(2) << '\n';
    } else if (o.format == "csv") {
        *dst << "graph,check,status,detail\n";
        for (const auto& r : results)
            *dst << csv_field(r.graph_id) << ',' << csv_field(r.check) << ',' << to_string(r.status) << ','
                 << csv_field(r.detail) << '\n';
    } else {
        for (const auto& r : results) {
            *dst << r.graph_id << "  " << r.check << "  " << to_string(r.status);
            if (!r.detail.empty())
                *dst << ": " << r.detail;
            *dst << '\n';
        }
        *dst << (all_pass ? "all checks passed\n" : "some checks FAILED\n");
    }
    for (const auto& r : results)
        if (r.status == check_status::fail)
            log.log(logger::error, "check failed: " + r.graph_id + " " + r.check);
    return all_pass ? ok : check_failed;
}

inline int cmd_compare(const options& o, std::ostream& out, const logger& log) {
    std::vector<invariant_profile> profiles;
    for (const auto& src : o.pair) {
        auto gs = detail::resolve_source(src);
        if (gs.size() != 1)
            throw parameter_error(src + " holds " + std::to_string(gs.size()) +
                                  " graphs; compare takes exactly one per argument (use batch for corpora)");
        log.log(logger::info, "profiling " + gs[0].id);
        profiles.push_back(profile(gs[0].g, gs[0].id));
    }
    const compare_report r = compare(profiles[0], profiles[1]);
    detail::sink dst(o.output, out);
    if (o.format == "json") {
        json j = to_json(r);
        j["note"] = cospectrality_note;
        *dst << j.dump(2) << '\n';
    } else if (o.format == "csv") {
        batch_report b;
        b.pairs.push_back(r);
        *dst << to_csv(b);
    } else {
        *dst << r.ids.first << " vs " << r.ids.second << '\n';
        for (invariant i : all_invariants)
            *dst << "  " << to_string(i) << ": " << to_string(r[i]) << '\n';
        *dst << "  distinguishing invariant: "
             << (r.distinguishing ? std::string(to_string(*r.distinguishing)) : std::string("none")) << '\n'
             << "  (" << cospectrality_note << ")\n";
    }
    return (o.assert_isomorphic && !r.all_cospectral()) ? check_failed : ok;
}

inline int cmd_batch(const options& o, std::ostream& out, const logger& log) {
    const auto graphs = detail::gather(o.inputs, o.generate);
    log.log(logger::info, "batch over " + std::to_string(graphs.size()) + " graphs");
    const batch_report b = batch_compare(graphs, {o.threads, o.all_pairs});
    for (const auto& s : b.skipped)
        log.log(logger::warn, "skipped " + s.id + ": " + s.reason);
    detail::sink dst(o.output, out);
    if (o.format == "csv") {
        *dst << to_csv(b);
    } else if (o.format == "json") {
        *dst << to_json(b).dump(2) << '\n';
    } else {
        for (const auto& r : b.pairs)
            *dst << r.ids.first << " vs " << r.ids.second << ": "
                 << (r.distinguishing ? "distinguished by " + std::string(to_string(*r.distinguishing))
                                      : std::string("cospectral on all invariants"))
                 << '\n';
        for (const auto& s : b.skipped)
            *dst << "skipped " << s.id << ": " << s.reason << '\n';
        *dst << b.pairs.size() << " pair(s), " << b.skipped.size() << " skipped\n";
    }
    return (o.assert_isomorphic &&
            std::any_of(b.pairs.begin(), b.pairs.end(), [](const auto& r) { return !r.all_cospectral(); }))
               ? check_failed
               : ok;
}

inline int cmd_generate(const options& o, std::ostream& out) {
    const graph g = generators::from_spec(o.spec);
    detail::sink dst(o.output, out);
    if (o.format == "json") {
        json edges = json::array();
        for (auto [u, v] : g.edges())
            edges.push_back({u, v});
        json j{{"id", o.spec}, {"n", g.order()}, {"edges", std::move(edges)}, {"graph6", write_graph6(g)}};
        if (auto k = is_regular(g))
            j["k"] = *k;
        j["connected"] = is_connected(g);
        if (auto s = srg_parameters(g))
            j["srg"] = {s->n, s->k, s->lambda, s->mu};
        *dst << j.dump(2) << '\n';
    } else {
        *dst << write_graph6(g) << '\n';
    }
    return ok;
}

inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Positive-support spectra of the Grover walk and cospectrality experiments", "qwalk"};
    app.require_subcommand(1);
    options o;
    const std::vector<std::string> formats{"json", "csv", "text"};

    auto add_sources = [&](CLI::App* sub) {
        sub->add_option("--input", o.inputs, "graph6 corpus file (repeatable)")->check(CLI::ExistingFile);
        sub->add_option("--generate", o.generate, "generator spec such as petersen, cycle:6, rook:4 (repeatable)");
    };
    auto add_output = [&](CLI::App* sub) {
        sub->add_option("--format", o.format, "output format")->check(CLI::IsMember(formats));
        sub->add_option("--output", o.output, "write to this file instead of stdout");
    };

    auto* spectrum = app.add_subcommand("spectrum", "spectrum of A, S+(U), S+(U^2) or S+(U^3)");
    add_sources(spectrum);
    add_output(spectrum);
    spectrum->add_option("--which", o.which, "matrix")->check(CLI::IsMember({"a", "s1", "s2", "s3"}));
    spectrum->add_option("--form", o.form, "closed form, exact characteristic polynomial, or numeric values")
        ->check(CLI::IsMember({"closed", "charpoly", "numeric"}));

    auto* verify = app.add_subcommand("verify", "exact identity and spectrum checks");
    add_sources(verify);
    add_output(verify);
    verify->add_option("--checks", o.checks, "comma-separated: all, identities, su-spectrum, su2-identity, su2-spectrum, ihara");

    auto* cmp = app.add_subcommand("compare", "cospectrality of two graphs under A, S+(U), S+(U^2), S+(U^3)");
    cmp->add_option("graphs", o.pair, "two graphs: .g6 file, g6:<string>, or generator spec")->expected(2)->required();
    add_output(cmp);
    cmp->add_flag("--assert-isomorphic", o.assert_isomorphic, "exit 1 if any invariant distinguishes the pair");

    auto* batch = app.add_subcommand("batch", "pairwise comparison over a corpus");
    add_sources(batch);
    add_output(batch);
    batch->add_option("--threads", o.threads, "worker threads (default: available parallelism)");
    batch->add_flag("--all-pairs", o.all_pairs, "also report pairs with different (n, k)");
    batch->add_flag("--assert-isomorphic", o.assert_isomorphic, "exit 1 if any pair is distinguished");

    auto* gen = app.add_subcommand("generate", "print a named graph");
    gen->add_option("spec", o.spec, "generator spec")->required();
    gen->add_option("--format", o.format, "g6 or json")->check(CLI::IsMember({"g6", "json", "text"}));
    gen->add_option("--output", o.output, "write to this file instead of stdout");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? ok : usage;
    }

    const logger log(err);
    try {
        if (*spectrum)
            return cmd_spectrum(o, out, log);
        if (*verify)
            return cmd_verify(o, out, log);
        if (*cmp)
            return cmd_compare(o, out, log);
        if (*batch) {
            if (o.format == "text" && batch->count("--format") == 0)
                o.format = "json";
            return cmd_batch(o, out, log);
        }
        if (*gen)
            return cmd_generate(o, out);
    } catch (const hypothesis_error& e) {
        log.log(logger::error, std::string("hypothesis violated: ") + e.what());
        return usage;
    } catch (const valency_error& e) {
        log.log(logger::error, std::string("hypothesis violated: ") + e.what());
        return usage;
    } catch (const error& e) {
        log.log(logger::error, e.what());
        return usage;
    }
    return usage;
}

} // namespace qwalk::cli

#endif // QWALK_TOOLS_QWALK_CLI_HPP
