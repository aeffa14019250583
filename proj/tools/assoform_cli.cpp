#include <chrono>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "assoform/assocform.hpp"
#include "assoform/catvar.hpp"
#include "assoform/suites.hpp"
#include "assoform/ternary.hpp"
#include "assoform/textio.hpp"

namespace {

using namespace assoform;

// exit codes: 0 pass, 1 verification failure, 2 precondition/domain error,
// 3 parse error

std::string read_source(const std::string& arg) {
    if (arg != "-") return arg;
    std::ostringstream buffer;
    buffer << std::cin.rdbuf();
    return buffer.str();
}

std::string verdict_line(const MembershipCertificate& cert) {
    const auto b = [](bool v) { return v ? "true" : "false"; };
    std::string out;
    out += std::string("V: ") + b(cert.in_V) + ", U: " + b(cert.in_U) + ", GorT: " + b(cert.in_GorT) +
           ", Z: " + b(cert.in_Z) + ", U_Res: " + b(cert.in_U_Res);
    return out;
}

void print_certificate_text(const MembershipCertificate& cert) {
    std::cout << verdict_line(cert) << "\n";
    std::cout << "rank_D: " << cert.rank_D << ", kernel_dim: " << cert.kernel_dim << "\n";
    if (cert.gorenstein_seq) {
        std::cout << "gorenstein_seq:";
        for (int t : *cert.gorenstein_seq) std::cout << " " << t;
        std::cout << "\n";
    }
    if (cert.chart) {
        std::cout << "chart rows:";
        for (int r : cert.chart->row_subset) std::cout << " " << r;
        std::cout << "  cols:";
        for (int c : cert.chart->col_subset) std::cout << " " << c;
        std::cout << "\n";
    }
}

struct CommonOpts {
    int n = 0;
    int d = 0;
    std::string format = "text";
};

void add_common(CLI::App* cmd, CommonOpts& opts, bool need_nd) {
    auto* n = cmd->add_option("--n", opts.n, "number of variables");
    auto* d = cmd->add_option("--d", opts.d, "degree of the tuple entries");
    if (need_nd) {
        n->required();
        d->required();
    }
    cmd->add_option("--format", opts.format, "output format")
        ->check(CLI::IsMember({"text", "json"}))
        ->capture_default_str();
}

int run_assoc(const CommonOpts& opts, const std::string& input, const std::vector<std::string>& tuple_args) {
    AssociatedForm result = [&] {
        if (!tuple_args.empty()) {
            if (static_cast<int>(tuple_args.size()) != opts.n)
                throw std::invalid_argument("--tuple needs exactly n forms of degree d");
            std::vector<Form> forms;
            for (const std::string& text : tuple_args)
                forms.push_back(parse_form(read_source(text), Side::X, opts.n, opts.d));
            return associated_form_tuple(make_form_tuple(std::move(forms)));
        }
        return associated_form(parse_form(read_source(input), Side::X, opts.n, opts.d + 1));
    }();
    const MembershipCertificate cert = certify(result.form);
    if (opts.format == "json") {
        nlohmann::json j{{"schema", "assoform/1"},
                         {"command", "assoc"},
                         {"associated_form", render_form(result.form)},
                         {"form", form_to_json(result.form)},
                         {"certificate", certificate_to_json(cert)}};
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << render_form(result.form) << "\n";
        print_certificate_text(cert);
    }
    return 0;
}

int run_member(const CommonOpts& opts, const std::string& input) {
    const Form F = parse_form(read_source(input), Side::Y, opts.n, opts.n * (opts.d - 1));
    const MembershipCertificate cert = certify(F);
    if (opts.format == "json") {
        nlohmann::json j{{"schema", "assoform/1"}, {"command", "member"}, {"certificate", certificate_to_json(cert)}};
        std::cout << j.dump(2) << "\n";
    } else {
        print_certificate_text(cert);
    }
    return 0;
}

int run_aronhold(const CommonOpts& opts, const std::string& input) {
    const Form c = parse_form(read_source(input), Side::Y, 3, 3);
    const Rational s = aronhold_S(c);
    const bool in_image = in_image_ternary(c);
    if (opts.format == "json") {
        nlohmann::json j{{"schema", "assoform/1"},
                         {"command", "aronhold"},
                         {"S", s.str()},
                         {"in_image", in_image}};
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << "S = " << s.str() << "\n";
        std::cout << "in-image: " << (in_image ? "true" : "false") << "\n";
    }
    return 0;
}

int run_recover(const CommonOpts& opts, const std::string& input) {
    const Form F = parse_form(read_source(input), Side::Y, opts.n, opts.n * (opts.d - 1));
    const FormTuple tuple = recover_tuple(F);
    if (opts.format == "json") {
        nlohmann::json j{{"schema", "assoform/1"}, {"command", "recover"}, {"tuple", tuple_to_json(tuple)}};
        std::cout << j.dump(2) << "\n";
    } else {
        for (const Form& f : tuple.forms) std::cout << render_form(f) << "\n";
    }
    return 0;
}

int run_verify(const std::string& suite, const RunConfig& config) {
    const auto start = std::chrono::steady_clock::now();
    const std::vector<SuiteReport> reports = run_suite(suite, config);
    const auto elapsed =
        std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start);

    bool all_pass = true;
    for (const SuiteReport& r : reports) all_pass = all_pass && r.passed();
    if (config.format == OutputFormat::Json) {
        std::cout << suites_to_json(suite, config, reports).dump(2) << "\n";
    } else {
        for (const SuiteReport& r : reports) {
            std::cout << (r.passed() ? "PASS" : "FAIL") << " " << r.name << " (" << r.pass_count() << "/"
                      << r.cases.size() << " cases)\n";
            if (const SuiteCase* bad = r.first_failure())
                std::cout << "  first failure: " << bad->name << (bad->detail.empty() ? "" : " -- " + bad->detail)
                          << "\n";
        }
        std::cout << (all_pass ? "PASS" : "FAIL") << " " << suite << "\n";
    }
    // wall-clock goes to stderr so stdout stays byte-identical across runs
    std::cerr << "verify " << suite << " finished in " << elapsed.count() << " ms\n";
    return all_pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact computations with associated forms and catalecticant varieties"};
    app.require_subcommand(1);

    CommonOpts assoc_opts;
    std::string assoc_input;
    std::vector<std::string> assoc_tuple;
    CLI::App* assoc = app.add_subcommand("assoc", "associated form of a form (via its gradient) or of a tuple");
    add_common(assoc, assoc_opts, true);
    assoc->add_option("form", assoc_input, "x-side form of degree d+1 (or - for stdin)");
    assoc->add_option("--tuple", assoc_tuple, "n x-side forms of degree d")->expected(-1);

    CommonOpts member_opts;
    std::string member_input;
    CLI::App* member = app.add_subcommand("member", "catalecticant variety membership certificate");
    add_common(member, member_opts, true);
    member->add_option("form", member_input, "y-side form of degree n(d-1)")->required();

    CommonOpts aronhold_opts;
    std::string aronhold_input;
    CLI::App* aronhold = app.add_subcommand("aronhold", "Aronhold invariant of a ternary cubic");
    add_common(aronhold, aronhold_opts, false);
    aronhold->add_option("cubic", aronhold_input, "y-side ternary cubic")->required();

    CommonOpts recover_opts;
    std::string recover_input;
    CLI::App* recover = app.add_subcommand("recover", "invert the associated-form morphism on its image");
    add_common(recover, recover_opts, true);
    recover->add_option("form", recover_input, "y-side form of degree n(d-1)")->required();

    std::string verify_suite;
    std::string verify_format = "text";
    RunConfig config;
    config.format = OutputFormat::Text;
    CLI::App* verify = app.add_subcommand("verify", "run a seeded verification suite");
    verify->add_option("suite", verify_suite, "all | ternary | roundtrip | dimension | charts")
        ->required()
        ->check(CLI::IsMember({"all", "ternary", "roundtrip", "dimension", "charts"}));
    verify->add_option("--n", config.n, "restrict to this number of variables");
    verify->add_option("--d", config.d, "restrict to this degree");
    verify->add_option("--seed", config.seed, "64-bit seed")->capture_default_str();
    verify->add_option("--height", config.height, "coefficient height bound")->capture_default_str();
    verify->add_option("--cases", config.cases, "override the per-suite case count");
    verify->add_option("--format", verify_format, "output format")
        ->check(CLI::IsMember({"text", "json"}))
        ->capture_default_str();

    try {
        app.parse(argc, argv);
        if (assoc->parsed()) {
            if (assoc_input.empty() && assoc_tuple.empty())
                throw CLI::RequiredError("assoc needs a form argument or --tuple");
            return run_assoc(assoc_opts, assoc_input, assoc_tuple);
        }
        if (member->parsed()) return run_member(member_opts, member_input);
        if (aronhold->parsed()) return run_aronhold(aronhold_opts, aronhold_input);
        if (recover->parsed()) return run_recover(recover_opts, recover_input);
        if (verify->parsed()) {
            config.format = verify_format == "json" ? OutputFormat::Json : OutputFormat::Text;
            return run_verify(verify_suite, config);
        }
        return 2;
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 3;
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const DegreeError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const NotFiniteColength& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
