#pragma once

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "blockcert/decompose.hpp"
#include "blockcert/hilbert.hpp"
#include "blockcert/json_io.hpp"
#include "blockcert/poly_io.hpp"
#include "blockcert/suites.hpp"
#include "blockcert/verify.hpp"

namespace blockcert::cli {

enum ExitCode : int { ok = 0, is_false = 1, usage = 2, precondition = 3, internal = 4 };

/// "1,2,3" -> {1,2,3}
inline IndexSet parse_ground(const std::string& text) {
    std::vector<Label> labels;
    std::size_t pos = 0;
    while (true) {
        const std::size_t start = pos;
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
        const std::size_t digits_at = pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
        if (digits_at == pos) throw ParseError("expected a label in ground set '" + text + "'", start);
        const Integer v(text.substr(digits_at, pos - digits_at), 10);
        if (!v.fits_uint_p()) throw ParseError("label too large", digits_at);
        labels.push_back(static_cast<Label>(v.get_ui()));
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
        if (pos == text.size()) break;
        if (text[pos] != ',') throw ParseError("expected ',' in ground set", pos);
        ++pos;
    }
    try {
        return IndexSet(std::move(labels));
    } catch (const PreconditionError& e) {
        throw ParseError(e.what(), 0);
    }
}

namespace detail {

inline void print_suite(std::ostream& out, const std::string& name, const SuiteResult& r) {
    out << name << ": checked " << r.checked << ", failures " << r.failures;
    if (r.failures) out << " (first: " << r.first_failure << ")";
    out << '\n';
}

inline std::string read_all(std::istream& in) {
    return std::string(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
}

} // namespace detail

/// Runs one command line (args excludes the program name). Exit codes:
/// 0 success/true, 1 false, 2 usage or parse error, 3 precondition error.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err, std::istream& in) {
    CLI::App app{"Exact relation-ring normal forms and block-decomposition certificates", "blockcert"};
    app.require_subcommand(1);

    std::string ground_text;
    std::int64_t g = 2;
    bool json = false;
    std::string poly_a;
    std::string poly_b;
    std::string cert_path = "-";
    std::uint64_t samples = 0;
    std::uint64_t seed = 1;
    std::int64_t from = 0;
    std::int64_t to = -1;

    auto with_ground = [&](CLI::App* sub) {
        sub->add_option("--ground", ground_text, "Ground set, e.g. 1,2,3")->required();
    };
    auto with_g = [&](CLI::App* sub) { sub->add_option("--g", g, "Integer g >= 2")->required(); };
    auto with_json = [&](CLI::App* sub) { sub->add_flag("--json", json, "Emit JSON"); };

    auto* nf = app.add_subcommand("nf", "Print the normal form of a polynomial");
    with_ground(nf);
    with_json(nf);
    nf->add_option("poly", poly_a, "Polynomial")->required();

    auto* eq = app.add_subcommand("eq", "Decide equality modulo the relations");
    with_ground(eq);
    with_json(eq);
    eq->add_option("p", poly_a, "First polynomial")->required();
    eq->add_option("q", poly_b, "Second polynomial")->required();

    auto* dec = app.add_subcommand("decompose", "Emit a block certificate (JSON) for a monomial");
    with_ground(dec);
    with_g(dec);
    with_json(dec);
    dec->add_option("monomial", poly_a, "Monomial")->required();

    auto* ver = app.add_subcommand("verify", "Check a certificate JSON (file or - for stdin)");
    with_json(ver);
    ver->add_option("certificate", cert_path, "Certificate file");

    auto* bnd = app.add_subcommand("bound", "Print the vanishing bound n(n-1)g - n + 2");
    with_ground(bnd);
    with_g(bnd);
    with_json(bnd);

    auto* blk = app.add_subcommand("blocks", "List the oriented blocks of the ground set");
    with_ground(blk);
    with_json(blk);

    auto* lines = app.add_subcommand("lemma-lines", "Check pivot selection over all pair-count tables at the bound");
    with_ground(lines);
    with_g(lines);
    with_json(lines);
    lines->add_option("--samples", samples, "Sample this many tables instead of enumerating (0 = all)");
    lines->add_option("--seed", seed, "Sampling seed");

    auto* part = app.add_subcommand("lemma-partition", "Check the split dichotomy at the exact degree bound");
    with_ground(part);
    with_g(part);
    with_json(part);

    auto* hil = app.add_subcommand("hilbert", "Graded dimensions of R, J_g and R/J_g (CSV or JSON)");
    with_ground(hil);
    with_g(hil);
    with_json(hil);
    hil->add_option("--from", from, "First degree");
    hil->add_option("--to", to, "Last degree (default: bound + 1)");

    std::vector<std::string> argv_store{"blockcert"};
    argv_store.insert(argv_store.end(), args.begin(), args.end());
    std::vector<const char*> argv;
    for (const std::string& s : argv_store) argv.push_back(s.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? ok : usage;
    }

    auto suite_exit = [&](const std::string& name, const SuiteResult& r) {
        if (json)
            out << Json{{"suite", name}, {"checked", r.checked}, {"failures", r.failures}}.dump() << '\n';
        else
            detail::print_suite(out, name, r);
        return r.passed() ? ok : is_false;
    };

    try {
        if (*ver) {
            std::string text;
            if (cert_path == "-") {
                text = detail::read_all(in);
            } else {
                std::ifstream file(cert_path);
                if (!file) {
                    err << "cannot open " << cert_path << '\n';
                    return usage;
                }
                text = detail::read_all(file);
            }
            const bool good = verify_certificate(certificate_from_string(text));
            out << (good ? "true" : "false") << '\n';
            return good ? ok : is_false;
        }

        const IndexSet ground = parse_ground(ground_text);

        if (*nf) {
            const Polynomial p = normal_form(parse_poly(poly_a, ground));
            out << (json ? to_json(p).dump() : to_string(p)) << '\n';
            return ok;
        }
        if (*eq) {
            const bool same = eq_mod_I(parse_poly(poly_a, ground), parse_poly(poly_b, ground), ground);
            out << (same ? "true" : "false") << '\n';
            return same ? ok : is_false;
        }
        if (*dec) {
            const Polynomial p = parse_poly(poly_a, ground);
            if (!p.is_monomial()) throw PreconditionError("decompose expects a single nonzero monomial");
            out << to_json(decompose(p.terms().front(), ground, g)).dump() << '\n';
            return ok;
        }
        if (*bnd) {
            const auto b = vanishing_bound(static_cast<std::int64_t>(ground.size()), g);
            out << (json ? Json{{"bound", b}}.dump() : std::to_string(b)) << '\n';
            return ok;
        }
        if (*blk) {
            const auto blocks = enumerate_blocks(ground);
            if (json) {
                Json arr = Json::array();
                for (const Block& b : blocks) arr.push_back(Json{{"left", labels_to_json(b.left())}, {"right", labels_to_json(b.right())}});
                out << arr.dump() << '\n';
            } else {
                for (const Block& b : blocks) out << b.to_string() << '\n';
            }
            return ok;
        }
        if (*lines) {
            check_genus(g);
            if (ground.size() < 3) throw GroundTooSmall("lemma-lines needs at least three labels");
            const SuiteResult r = samples ? check_pivot_lemma_sampled(ground, g, samples, seed)
                                          : check_pivot_lemma_exhaustive(ground, g);
            return suite_exit("lemma-lines", r);
        }
        if (*part) {
            check_genus(g);
            return suite_exit("lemma-partition", check_partition_lemma(ground, g));
        }
        if (*hil) {
            const std::int64_t last = to >= 0 ? to : vanishing_bound(static_cast<std::int64_t>(ground.size()), g) + 1;
            if (from < 0 || last < from) throw PreconditionError("need 0 <= --from <= --to");
            const GradedReport report = graded_report(ground, g, from, last);
            out << (json ? to_json(report).dump() + "\n" : to_csv(report));
            return ok;
        }
    } catch (const ParseError& e) {
        err << "parse error: " << e.what() << '\n';
        return usage;
    } catch (const MalformedCertificate& e) {
        err << "malformed certificate: " << e.what() << '\n';
        return usage;
    } catch (const PreconditionError& e) {
        err << "precondition violated: " << e.what() << '\n';
        return precondition;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << '\n';
        return internal;
    }
    return usage;
}

} // namespace blockcert::cli
