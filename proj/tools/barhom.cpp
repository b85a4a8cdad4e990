// Command-line front end: identity verification sweeps, cohomology of small
// finite groups, and homotopy evaluation on user-supplied cochains.

#include <iostream>

#include "CLI11.hpp"

#include "barhom/specs.hpp"

namespace {

using namespace barhom;

/// Specs ending in .json (or prefixed with @) are files; anything else is a
/// builtin spec string.
json resolve_spec(const std::string& s) {
    if (!s.empty() && s[0] == '@') return read_json_file(s.substr(1));
    if (s.size() > 5 && s.compare(s.size() - 5, 5, ".json") == 0) return read_json_file(s);
    return json(s);
}

SignConvention parse_convention(const std::string& s) {
    if (s == "(q+1)i" || s == "qi+i" || s == "default") return SignConvention::kQPlusOneI;
    if (s == "q(i+1)" || s == "qi+q") return SignConvention::kQIPlusOne;
    throw SpecError("convention", "unknown sign convention '" + s + "'");
}

HomotopyVariant parse_variant(const std::string& s) {
    if (s == "main") return HomotopyVariant::kMain;
    if (s == "alt") return HomotopyVariant::kAlt;
    throw SpecError("variant", "unknown variant '" + s + "'");
}

void print_reports(const std::vector<VerificationReport>& reports) {
    for (const auto& r : reports) {
        std::cout << (r.pass() ? "[PASS] " : "[FAIL] ") << r.identity << "  group=" << r.group;
        if (!r.modules.empty()) {
            std::cout << " modules=";
            for (size_t i = 0; i < r.modules.size(); ++i)
                std::cout << (i ? "," : "") << r.modules[i];
        }
        if (!r.params.empty()) std::cout << " " << r.params;
        std::cout << "  checks=" << r.passed << "/" << r.attempted << "\n";
        size_t shown = 0;
        for (const auto& w : r.failures) {
            if (++shown > 5) {
                std::cout << "    ... " << r.failures.size() - 5 << " more failures\n";
                break;
            }
            std::cout << "    witness: " << w.context << " " << w.basis;
            if (!w.input.empty()) std::cout << " at " << w.input;
            std::cout << "  lhs=" << w.lhs << " rhs=" << w.rhs << "\n";
        }
    }
}

int finish(const std::vector<VerificationReport>& reports, const std::string& out_path) {
    print_reports(reports);
    bool all = true;
    for (const auto& r : reports) all = all && r.pass();
    if (!out_path.empty()) write_json_file(out_path, reports_to_json(reports));
    std::cout << (all ? "all checks passed" : "FAILURES detected") << "\n";
    return all ? 0 : 1;
}

struct CommonFlags {
    std::string group;
    std::string out;
    int threads = 1;
    i64 guard = kDefaultSizeGuard;
};

void add_common(CLI::App* cmd, CommonFlags& f) {
    cmd->add_option("--group", f.group, "group spec (builtin or JSON file)")->required();
    cmd->add_option("--out", f.out, "write a JSON report to this path");
    cmd->add_option("--threads", f.threads, "verification fan-out width")
        ->check(CLI::Range(1, 256));
    cmd->add_option("--guard", f.guard, "basis-size guard (|G|^(n+1)*rank bound)");
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact chain-homotopy calculator and verifier for small finite groups"};
    app.require_subcommand(1);

    // verify
    auto* verify = app.add_subcommand("verify", "run an identity sweep");
    verify->require_subcommand(1);

    CommonFlags va;
    std::string va_module = "trivial-int";
    int va_max = 2;
    std::string va_variant = "main";
    auto* vaction = verify->add_subcommand("action", "conjugation-action homotopy identity");
    add_common(vaction, va);
    vaction->add_option("--module", va_module, "coefficient module spec")->required();
    vaction->add_option("--max-degree", va_max, "largest cochain degree swept")->required();
    vaction->add_option("--variant", va_variant, "main|alt");

    CommonFlags vc;
    std::string vc_m = "trivial-int", vc_n = "trivial-int";
    int vc_max = 2;
    std::string vc_variant = "main", vc_conv = "(q+1)i";
    auto* vcup = verify->add_subcommand("cup", "cup-commutativity homotopy identity");
    add_common(vcup, vc);
    vcup->add_option("--module-m", vc_m, "first coefficient module")->required();
    vcup->add_option("--module-n", vc_n, "second coefficient module")->required();
    vcup->add_option("--max-total", vc_max, "largest p+q swept")->required();
    vcup->add_option("--variant", vc_variant, "main|alt");
    vcup->add_option("--convention", vc_conv, "inner sign: (q+1)i | q(i+1)");

    CommonFlags vr;
    int vr_max = 3;
    std::string vr_conv = "(q+1)i";
    auto* vres = verify->add_subcommand("resolution", "chain-level identity suite");
    add_common(vres, vr);
    vres->add_option("--max-degree", vr_max, "largest chain degree swept")->required();
    vres->add_option("--convention", vr_conv, "inner sign: (q+1)i | q(i+1)");

    // oracle
    auto* oracle = app.add_subcommand("oracle", "inductive-lift oracle");
    oracle->require_subcommand(1);
    CommonFlags oc;
    int oc_max = 2;
    auto* ocompare = oracle->add_subcommand("compare", "closed forms against the oracle");
    add_common(ocompare, oc);
    ocompare->add_option("--max-degree", oc_max, "largest degree compared")->required();

    // cohomology
    CommonFlags ch;
    std::string ch_module = "trivial-int";
    int ch_degree = 0;
    auto* cohom = app.add_subcommand("cohomology", "H^n via the Smith pipeline");
    add_common(cohom, ch);
    cohom->add_option("--module", ch_module, "coefficient module spec")->required();
    cohom->add_option("--degree", ch_degree, "cohomological degree n")->required();

    // eval
    auto* eval = app.add_subcommand("eval", "apply a homotopy to cochains");
    eval->require_subcommand(1);

    CommonFlags eh;
    std::string eh_module = "trivial-int", eh_s, eh_cochain, eh_variant = "main";
    auto* ehs = eval->add_subcommand("hs", "action homotopy h_s of one cochain");
    add_common(ehs, eh);
    ehs->add_option("--module", eh_module, "coefficient module spec")->required();
    ehs->add_option("--s", eh_s, "group element (name or index)")->required();
    ehs->add_option("--cochain", eh_cochain, "input cochain JSON file")->required();
    ehs->add_option("--variant", eh_variant, "main|alt");

    CommonFlags ec;
    std::string ec_m = "trivial-int", ec_n = "trivial-int";
    std::string ec_a, ec_b, ec_variant = "main", ec_conv = "(q+1)i";
    auto* ehcup = eval->add_subcommand("hcup", "cup homotopy h(a(x)b) of two cochains");
    add_common(ehcup, ec);
    ehcup->add_option("--module-m", ec_m, "module of the first cochain")->required();
    ehcup->add_option("--module-n", ec_n, "module of the second cochain")->required();
    ehcup->add_option("--cochain-a", ec_a, "first cochain JSON file")->required();
    ehcup->add_option("--cochain-b", ec_b, "second cochain JSON file")->required();
    ehcup->add_option("--variant", ec_variant, "main|alt");
    ehcup->add_option("--convention", ec_conv, "inner sign: (q+1)i | q(i+1)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        auto notice_convention = [](SignConvention conv) {
            if (conv != SignConvention::kQPlusOneI)
                std::cout << "note: using non-default sign convention q(i+1); "
                             "the identity sweep validates (q+1)i\n";
        };

        if (vaction->parsed()) {
            const Group g = group_from_json(resolve_spec(va.group));
            const GModule m = module_from_json(resolve_spec(va_module), g);
            const auto rep = verify_action_identity(g, m, va_max, parse_variant(va_variant),
                                                    va.threads,
                                                    detail::default_action_homotopy, va.guard);
            return finish({rep}, va.out);
        }
        if (vcup->parsed()) {
            const Group g = group_from_json(resolve_spec(vc.group));
            const GModule m = module_from_json(resolve_spec(vc_m), g);
            const GModule n = module_from_json(resolve_spec(vc_n), g);
            const SignConvention conv = parse_convention(vc_conv);
            notice_convention(conv);
            std::vector<VerificationReport> reps;
            reps.push_back(verify_cup_identity(g, m, n, vc_max, parse_variant(vc_variant), conv,
                                               vc.threads, detail::default_cup_homotopy,
                                               vc.guard));
            for (auto& r : verify_dual_paths(g, m, n, vc_max, vc.threads, vc.guard))
                reps.push_back(std::move(r));
            return finish(reps, vc.out);
        }
        if (vres->parsed()) {
            const Group g = group_from_json(resolve_spec(vr.group));
            const SignConvention conv = parse_convention(vr_conv);
            notice_convention(conv);
            return finish(verify_resolution(g, vr_max, conv, vr.threads), vr.out);
        }
        if (ocompare->parsed()) {
            const Group g = group_from_json(resolve_spec(oc.group));
            return finish(verify_oracles(g, oc_max, oc.threads), oc.out);
        }
        if (cohom->parsed()) {
            const Group g = group_from_json(resolve_spec(ch.group));
            const GModule m = module_from_json(resolve_spec(ch_module), g);
            const AbelianInvariants inv = cohomology_group(g, m, ch_degree, ch.guard);
            std::cout << "H^" << ch_degree << "(" << g.label() << ", " << m.label()
                      << ") = " << inv.str() << "\n";
            if (!ch.out.empty())
                write_json_file(ch.out, json{{"schema", kReportSchema},
                                             {"group", g.label()},
                                             {"module", m.label()},
                                             {"degree", ch_degree},
                                             {"free_rank", inv.free_rank},
                                             {"torsion", inv.torsion},
                                             {"pretty", inv.str()}});
            return 0;
        }
        if (ehs->parsed()) {
            const Group g = group_from_json(resolve_spec(eh.group));
            const GModule m = module_from_json(resolve_spec(eh_module), g);
            const Elem s = g.find(eh_s);
            if (s < 0) throw SpecError("s", "unknown group element '" + eh_s + "'");
            const Cochain a = cochain_from_json(read_json_file(eh_cochain), g, m);
            if (a.degree() < 1)
                throw SpecError("cochain.degree", "h_s needs a cochain of degree >= 1");
            const Cochain out = homotopy_action(s, a, parse_variant(eh_variant));
            const json j = cochain_to_json(out, resolve_spec(eh_module));
            std::cout << "h_s(a): degree " << out.degree() << " cochain over " << g.label()
                      << ", " << m.label() << "\n"
                      << j.dump(2) << "\n";
            if (!eh.out.empty()) write_json_file(eh.out, j);
            return 0;
        }
        if (ehcup->parsed()) {
            const Group g = group_from_json(resolve_spec(ec.group));
            const GModule m = module_from_json(resolve_spec(ec_m), g);
            const GModule n = module_from_json(resolve_spec(ec_n), g);
            const GModule mn = tensor_modules(m, n);
            const SignConvention conv = parse_convention(ec_conv);
            notice_convention(conv);
            const Cochain a = cochain_from_json(read_json_file(ec_a), g, m);
            const Cochain b = cochain_from_json(read_json_file(ec_b), g, n);
            const Cochain out = homotopy_cup(a, b, mn, parse_variant(ec_variant), conv);
            const json mspec = json{{"kind", "tensor"},
                                    {"left", resolve_spec(ec_m)},
                                    {"right", resolve_spec(ec_n)}};
            const json j = cochain_to_json(out, mspec);
            std::cout << "h(a(x)b): degree " << out.degree() << " cochain over " << g.label()
                      << ", " << mn.label() << "\n"
                      << j.dump(2) << "\n";
            if (!ec.out.empty()) write_json_file(ec.out, j);
            return 0;
        }
        std::cerr << "error: no subcommand selected\n";
        return 2;
    } catch (const SpecError& e) {
        std::cerr << "error in '" << e.field << "': " << e.what() << "\n";
        return 2;
    } catch (const SizeGuardError& e) {
        std::cerr << "error: " << e.what() << " (raise --guard to override)\n";
        return 2;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
