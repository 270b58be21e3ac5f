// cobord: formal group law expansions, refined divisor classes,
// intersection operators and the verification suite over combinatorial
// SNC frames.
//
// Coefficients live in the rational model Q[m1, m2, ...] of the Lazard
// ring (logarithm u + m1 u^2 + m2 u^3 + ...). Verified identities are
// model-independent; printed coefficients are specific to this choice
// of generators.

#include "cobord/brute_oracle.hpp"
#include "cobord/config_io.hpp"
#include "cobord/render.hpp"
#include "cobord/sweep.hpp"

#include <CLI11.hpp>

#include <iostream>

namespace {

using namespace cobord;

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailure = 1;
constexpr int kExitUsage = 2;

std::vector<std::int64_t> parse_mults(const std::string& text)
{
    std::vector<std::int64_t> out;
    std::string cur;
    for (char ch : text + ",") {
        if (ch == ',') {
            if (cur.empty())
                throw parse_error("empty entry in multiplicity list '" + text + "'");
            out.push_back(std::stoll(cur));
            cur.clear();
        } else {
            cur += ch;
        }
    }
    if (out.empty())
        throw parse_error("empty multiplicity list");
    return out;
}

std::string jmask_str(std::uint32_t mask, std::uint32_t m)
{
    std::string s;
    for (std::uint32_t i = 0; i < m; ++i)
        s += (mask & (1u << i)) ? '1' : '0';
    return s;
}

struct CliOptions {
    std::uint32_t trunc = 6;
    std::string format = "table";
    std::string config_path;
    unsigned jobs = 0;
};

std::shared_ptr<const FaceModule> module_from(const ConfigFile& file, std::uint32_t cli_trunc)
{
    std::uint32_t trunc = file.trunc ? file.trunc : cli_trunc;
    trunc = std::max(trunc, file.cfg.dim + 1);
    auto ctx = std::make_shared<FglContext>(trunc);
    return make_module(file.cfg, ctx, file.symbols);
}

int emit_reports(const std::vector<Report>& reports)
{
    bool all_pass = true;
    for (const auto& r : reports) {
        std::cout << r.str() << "\n";
        all_pass = all_pass && r.pass;
    }
    std::cout << (all_pass ? "verification passed" : "verification FAILED") << "\n";
    return all_pass ? kExitOk : kExitVerifyFailure;
}

// Config-scoped verification: run every identity the file's declared
// divisors and default sequence can feed.
std::vector<Report> verify_config(const ConfigFile& file, std::uint32_t cli_trunc)
{
    auto mod = module_from(file, cli_trunc);
    const SncConfig& cfg = file.cfg;
    std::vector<Report> reports;

    std::vector<PseudoSeq> seqs;
    for (std::size_t keep = 0; keep <= file.default_seq.size(); ++keep)
        seqs.push_back(forget(file.default_seq, keep));

    auto prepend = [](const PseudoDiv& d, const PseudoSeq& s) {
        PseudoSeq out{d};
        out.insert(out.end(), s.begin(), s.end());
        return out;
    };

    for (const auto& [name, E] : file.divisors) {
        if (E.is_zero())
            continue;
        for (const auto& seq : seqs) {
            if (!face_map_admissible(cfg, 0, seq) || !divisor_admissible(cfg, E, seq))
                continue;
            reports.push_back(verify_lemma_1_14(mod, E, seq));
        }
    }

    for (const auto& [dname, D] : file.divisors) {
        if (D.is_zero())
            continue;
        PseudoDiv pD = PseudoDiv::divisorial(D);
        for (const auto& [cname, C] : file.divisors) {
            PseudoDiv pC = PseudoDiv::divisorial(C);
            if (!supported_in(pC, pD))
                continue;
            for (const auto& seq : seqs) {
                if (!face_map_admissible(cfg, 0, prepend(pD, seq)))
                    continue;
                for (const auto& [zname, Z] : file.divisors) {
                    if (Z.is_zero() || !is_smooth_divisor(cfg, Z))
                        continue;
                    if (!divisor_admissible(cfg, Z, prepend(pD, seq)) ||
                        !divisor_admissible(cfg, C, seq))
                        continue;
                    reports.push_back(verify_lemma_2_7(mod, Z, pC, pD, seq));
                }
            }
        }
    }

    for (const auto& [dname, D] : file.divisors) {
        for (const auto& [pname, Dp] : file.divisors) {
            PseudoDiv pD = PseudoDiv::divisorial(D);
            PseudoDiv pDp = PseudoDiv::divisorial(Dp);
            for (const auto& [cname, C] : file.divisors) {
                if (C.is_zero() || !supported_in(PseudoDiv::divisorial(C), pD))
                    continue;
                for (const auto& [qname, Cp] : file.divisors) {
                    if (Cp.is_zero() || !supported_in(PseudoDiv::divisorial(Cp), pDp))
                        continue;
                    reports.push_back(verify_prop_4_3(mod, D, Dp, C, Cp, {}));
                }
            }
        }
    }

    for (const auto& [name, D] : file.divisors) {
        if (D.is_zero())
            continue;
        PseudoDiv pdiv = PseudoDiv::divisorial(D);
        PseudoDiv pglob = PseudoDiv::global(bundle_of(D));
        reports.push_back(verify_prop_6_3_7(mod, pdiv, pglob, {}));
    }
    return reports;
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"exact universal-formal-group-law and SNC intersection calculus"};
    app.require_subcommand(1);

    CliOptions opt;

    // fgl subcommands
    auto* fgl = app.add_subcommand("fgl", "formal group law computations");
    fgl->require_subcommand(1);

    std::string mults_text;
    auto* expand = fgl->add_subcommand("expand", "print F(u, v)");
    expand->add_option("--trunc", opt.trunc, "total degree bound")->check(CLI::PositiveNumber);
    expand->add_option("--format", opt.format)->check(CLI::IsMember({"table", "rows"}));

    auto* nsum = fgl->add_subcommand("nsum", "print a formal sum");
    nsum->add_option("--mults", mults_text, "comma-separated multiplicities")->required();
    nsum->add_option("--trunc", opt.trunc)->check(CLI::PositiveNumber);
    nsum->add_option("--format", opt.format)->check(CLI::IsMember({"table", "rows"}));

    auto* jdec = fgl->add_subcommand("jdecompose", "print the J-decomposition of a formal sum");
    jdec->add_option("--mults", mults_text)->required();
    jdec->add_option("--trunc", opt.trunc)->check(CLI::PositiveNumber);
    jdec->add_option("--format", opt.format)->check(CLI::IsMember({"table", "rows"}));

    auto* finv = fgl->add_subcommand("inverse", "print the formal inverse");
    finv->add_option("--trunc", opt.trunc)->check(CLI::PositiveNumber);
    finv->add_option("--format", opt.format)->check(CLI::IsMember({"table", "rows"}));

    // divclass
    std::string divisor_name;
    std::vector<std::string> seq_names;
    bool seq_given = false;
    auto* divclass = app.add_subcommand("divclass", "refined divisor class per face");
    divclass->add_option("--config", opt.config_path)->required();
    divclass->add_option("--divisor", divisor_name)->required();
    auto* dseq = divclass->add_option("--seq", seq_names, "decoration sequence (names)");
    divclass->add_option("--trunc", opt.trunc)->check(CLI::PositiveNumber);
    divclass->add_option("--format", opt.format)->check(CLI::IsMember({"table", "rows"}));

    // intersect
    std::string c_name, d_name, class_spec = "unit";
    auto* inter = app.add_subcommand("intersect", "intersection with a pseudo-divisor");
    inter->add_option("--config", opt.config_path)->required();
    inter->add_option("-C,--with", c_name, "pseudo-divisor C")->required();
    inter->add_option("-D,--along", d_name, "pseudo-divisor D with C supported in D")
        ->required();
    auto* iseq = inter->add_option("--seq", seq_names);
    inter->add_option("--class", class_spec, "\"unit\" or a face like 1,2");
    inter->add_option("--trunc", opt.trunc)->check(CLI::PositiveNumber);
    inter->add_option("--format", opt.format)->check(CLI::IsMember({"table", "rows"}));

    // verify
    std::string scope;
    auto* verify = app.add_subcommand("verify", "run verification checks");
    verify->add_option("scope", scope, "axioms | suite | config path")->required();
    verify->add_option("--trunc", opt.trunc)->check(CLI::PositiveNumber);
    verify->add_option("--jobs", opt.jobs, "worker threads for the sweep");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (expand->parsed()) {
            FglContext ctx(opt.trunc);
            std::cout << render_table(series_table(ctx.fgl(), default_names(2)), opt.format);
            return kExitOk;
        }
        if (nsum->parsed() || jdec->parsed()) {
            auto mults = parse_mults(mults_text);
            FglContext ctx(opt.trunc);
            Series s = ctx.formal_sum(mults);
            auto names = default_names(static_cast<std::uint32_t>(mults.size()));
            if (nsum->parsed()) {
                std::cout << render_table(series_table(s, names), opt.format);
            } else {
                auto dec = j_decompose(s, static_cast<std::uint32_t>(mults.size()));
                for (const auto& [mask, part] : dec.parts) {
                    std::cout << "J=" << jmask_str(mask, dec.m) << "\n";
                    std::cout << render_table(series_table(part, names), opt.format);
                }
                if (dec.parts.empty())
                    std::cout << "(zero series)\n";
            }
            return kExitOk;
        }
        if (finv->parsed()) {
            FglContext ctx(opt.trunc);
            std::cout << render_table(series_table(ctx.formal_inverse(), default_names(1)),
                                      opt.format);
            return kExitOk;
        }
        if (divclass->parsed()) {
            ConfigFile file = load_config(opt.config_path);
            auto mod = module_from(file, opt.trunc);
            auto it = file.divisors.find(divisor_name);
            if (it == file.divisors.end())
                throw parse_error("unknown divisor '" + divisor_name + "'");
            seq_given = dseq->count() > 0;
            PseudoSeq seq = seq_given ? file.resolve_seq(seq_names) : file.default_seq;
            auto dc = divisor_class(mod, it->second, seq);
            std::cout << render_class(dc.cls, opt.format);
            return kExitOk;
        }
        if (inter->parsed()) {
            ConfigFile file = load_config(opt.config_path);
            auto mod = module_from(file, opt.trunc);
            PseudoDiv C = file.resolve(c_name);
            PseudoDiv D = file.resolve(d_name);
            seq_given = iseq->count() > 0;
            PseudoSeq seq = seq_given ? file.resolve_seq(seq_names) : file.default_seq;
            FaceClass x = unit(mod);
            if (class_spec != "unit") {
                Face J = 0;
                for (auto i : parse_mults(class_spec)) {
                    if (i < 1 || i > mod->cfg().m())
                        throw parse_error("face index out of range in --class");
                    J |= 1u << (i - 1);
                }
                if (!mod->cfg().has_face(J))
                    throw parse_error("--class names a face not in the frame");
                x = FaceClass::single(mod, J, Series::constant(mod->shape(), Rational(1)));
            }
            auto res = intersect(C, D, seq, x);
            std::cout << render_class(res.cls, opt.format);
            return kExitOk;
        }
        if (verify->parsed()) {
            std::vector<Report> reports;
            if (scope == "axioms") {
                reports = axiom_suite(opt.trunc);
            } else if (scope == "suite") {
                SweepOptions sopt;
                sopt.jobs = opt.jobs;
                reports = axiom_suite(opt.trunc);
                auto ids = identity_sweep(sopt);
                reports.insert(reports.end(), ids.begin(), ids.end());
                auto contracts = contract_sweep(sopt);
                reports.insert(reports.end(), contracts.begin(), contracts.end());
                auto splits = split_suite();
                reports.insert(reports.end(), splits.begin(), splits.end());
                auto props = property_suite(200);
                reports.insert(reports.end(), props.begin(), props.end());
            } else {
                reports = verify_config(load_config(scope), opt.trunc);
            }
            return emit_reports(reports);
        }
    } catch (const parse_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const precondition_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const shape_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitVerifyFailure;
    }
    return kExitUsage;
}
