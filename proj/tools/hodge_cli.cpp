#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "hodge/blockdata_io.hpp"
#include "hodge/localmodel.hpp"
#include "hodge/oracle.hpp"
#include "hodge/selftest.hpp"
#include "hodge/tempered.hpp"
#include "hodge/wallcross.hpp"

namespace {

using namespace hodge;

struct ParamOptions {
    std::string param_file;
    std::string group = "sl2r";
    std::string orbit = "open";
    std::vector<std::string> lambda;
    std::string gamma = "even";
};

void add_param_options(CLI::App* cmd, ParamOptions& opts) {
    cmd->add_option("--param-file", opts.param_file, "parameter JSON file");
    cmd->add_option("--group", opts.group, "catalog group name");
    cmd->add_option("--orbit", opts.orbit, "orbit id");
    cmd->add_option("--lambda", opts.lambda, "lambda coordinates, rationals like 1/2");
    cmd->add_option("--gamma", opts.gamma, "local system label");
}

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open file: " + path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

HCParameter parse_param(const ParamOptions& opts) {
    if (!opts.param_file.empty()) return HCParameter::from_json(slurp(opts.param_file));
    Weight lambda;
    for (const auto& c : opts.lambda) lambda.coords.push_back(parse_rational(c));
    return make_parameter(opts.group, opts.orbit, lambda, opts.gamma);
}

int usage_error(const std::string& message) {
    nlohmann::json j;
    j["error"] = message;
    std::cout << j.dump() << "\n";
    return 2;
}

int computation_error(const std::string& message) {
    nlohmann::json j;
    j["error"] = message;
    std::cout << j.dump() << "\n";
    return 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact Hodge and signature K-characters for the rank-one catalog"};
    app.require_subcommand(1);

    long window = 40;
    std::string block_file;
    std::string format = "json";
    bool kprime = false;

    app.add_option("--window", window, "K-weight window bound")->capture_default_str();
    app.add_option("--block-file", block_file, "external block data JSON");
    app.add_option("--format", format, "json or tsv")->check(CLI::IsMember({"json", "tsv"}));
    app.add_flag("--kprime", kprime, "extended-group grading");

    ParamOptions popts;

    auto* cmd_hodge = app.add_subcommand("hodge-char", "Hodge K-character of a parameter");
    add_param_options(cmd_hodge, popts);
    auto* cmd_sig = app.add_subcommand("sig-char", "signature K-character of a parameter");
    add_param_options(cmd_sig, popts);
    auto* cmd_verify = app.add_subcommand("verify", "check the signature/Hodge identity");
    add_param_options(cmd_verify, popts);
    auto* cmd_unitarity = app.add_subcommand("unitarity", "Hodge-theoretic unitarity test");
    add_param_options(cmd_unitarity, popts);
    auto* cmd_walls = app.add_subcommand("walls", "wall positions of the deformation ray");
    add_param_options(cmd_walls, popts);

    auto* cmd_local = app.add_subcommand("local-model", "rank-one germ tables");
    std::string local_input;
    cmd_local->add_option("--input", local_input, "local system JSON file")->required();

    auto* cmd_oracle = app.add_subcommand("oracle", "direct (g,K)-module computations");
    std::string o_group = "sl2r", o_family = "ps", o_nu = "0", o_op = "signature";
    int o_parity = 0;
    long o_k = 0;
    cmd_oracle->add_option("--group", o_group, "sl2r, sl2r_metaplectic or sl2c");
    cmd_oracle->add_option("--family", o_family, "ps, ds or fd");
    cmd_oracle->add_option("--nu", o_nu, "continuous parameter");
    cmd_oracle->add_option("--parity", o_parity, "parity or metaplectic residue class");
    cmd_oracle->add_option("--k", o_k, "ds lowest weight / fd dimension");
    cmd_oracle->add_option("--op", o_op, "signature, theta, hodge or form")
        ->check(CLI::IsMember({"signature", "theta", "hodge", "form"}));

    auto* cmd_selftest = app.add_subcommand("selftest", "run the acceptance suite");

    CLI11_PARSE(app, argc, argv);

    if (window < 4) return usage_error("window must be at least 4");

    try {
        if (cmd_selftest->parsed()) {
            bool ok = run_acceptance(std::cout);
            return ok ? 0 : 1;
        }

        if (cmd_local->parsed()) {
            auto j = nlohmann::json::parse(slurp(local_input));
            GermLocalSystem ls;
            ls.truncation = j.value("D", 12);
            for (const auto& js : j.at("summands")) {
                GermSummand s;
                s.mu = parse_rational(js.at("mu").get<std::string>());
                s.jordan = js.value("jordan", 1);
                s.hodge_offset = js.value("hodge_offset", 0);
                s.weight = js.value("weight", 1);
                ls.summands.push_back(s);
            }
            std::cout << extend(ls, ExtensionKind::shriek).table.to_tsv("shriek");
            std::cout << extend(ls, ExtensionKind::star).table.to_tsv("star");
            std::cout << extend(ls, ExtensionKind::intermediate).table.to_tsv("intermediate");
            for (const auto& layer : jantzen(ls)) {
                std::ostringstream tag;
                tag << "jantzen_" << layer.n << "\tweight=" << layer.weight
                    << "\tsign=" << (layer.form_sign > 0 ? "+" : "-");
                std::cout << tag.str() << "\n";
                std::cout << layer.graded_dims.to_tsv("jantzen_" + std::to_string(layer.n));
            }
            for (const auto& w : walls(ls, Rational(-1), Rational(1)))
                std::cout << "wall\t" << format_rational(w) << "\n";
            return 0;
        }

        if (cmd_oracle->parsed()) {
            Family fam = o_family == "ps" ? Family::ps : o_family == "ds" ? Family::ds : Family::fd;
            auto model = build_model(o_group, fam, parse_rational(o_nu), o_parity, o_k, 2 * window);
            if (o_op == "signature") {
                auto sig = signature_char_direct(model, window);
                std::cout << (format == "tsv" ? to_tsv(sig) : to_json(sig)) << "\n";
            } else if (o_op == "hodge") {
                auto chi = hodge_filtration_direct(model, window);
                std::cout << (format == "tsv" ? to_tsv(chi) : to_json(chi)) << "\n";
            } else if (o_op == "theta") {
                nlohmann::json out = nlohmann::json::array();
                for (const auto& [w, s] : theta_eigenvalues(model)) {
                    if (std::labs(w) > window) continue;
                    out.push_back({{"ktype", w}, {"theta", s > 0 ? "+" : "-"}});
                }
                std::cout << out.dump() << "\n";
            } else {
                nlohmann::json out;
                for (auto kind : {FormKind::u_r, FormKind::g_r}) {
                    nlohmann::json tab = nlohmann::json::array();
                    for (const auto& [w, v] : invariant_form(model, kind).values) {
                        if (std::labs(w) > window) continue;
                        tab.push_back({{"ktype", w}, {"value", format_rational(v)}});
                    }
                    out[kind == FormKind::u_r ? "u_r" : "g_r"] = tab;
                }
                std::cout << out.dump() << "\n";
            }
            return 0;
        }

        HCParameter p = parse_param(popts);
        Engine engine(window, kprime);
        if (!block_file.empty()) engine.set_external_block_data(block_data_from_json(slurp(block_file)));

        if (cmd_hodge->parsed()) {
            auto chi = engine.hodge_char(p);
            std::cout << (format == "tsv" ? to_tsv(chi) : to_json(chi)) << "\n";
            return 0;
        }
        if (cmd_sig->parsed()) {
            auto sig = engine.sig_char(p);
            std::cout << (format == "tsv" ? to_tsv(sig) : to_json(sig)) << "\n";
            return 0;
        }
        if (cmd_walls->parsed()) {
            nlohmann::json j;
            j["walls"] = nlohmann::json::array();
            for (const auto& s : find_walls(p)) j["walls"].push_back(format_rational(s));
            std::cout << j.dump() << "\n";
            return 0;
        }
        if (cmd_verify->parsed()) {
            auto report = engine.verify_identity(p);
            nlohmann::json j;
            j["ok"] = report.ok;
            j["failures"] = nlohmann::json::array();
            for (const auto& item : report.failures) {
                nlohmann::json f;
                f["ktype"] = item.ktype.weight;
                if (item.ktype.theta != 0) f["theta"] = item.ktype.theta > 0 ? "+" : "-";
                f["kind"] = item.kind;
                f["expected"] = {item.expected[0], item.expected[1]};
                f["got"] = {item.got[0], item.got[1]};
                j["failures"].push_back(f);
            }
            j["warnings"] = report.warnings;
            std::cout << j.dump() << "\n";
            return report.ok ? 0 : 1;
        }
        if (cmd_unitarity->parsed()) {
            std::string note;
            auto verdict = engine.unitarity_test(p, &note);
            nlohmann::json j;
            j["result"] = verdict == UnitarityVerdict::unitary       ? "unitary"
                          : verdict == UnitarityVerdict::nonunitary ? "nonunitary"
                                                                    : "not_hermitian";
            if (!note.empty()) j["note"] = note;
            std::cout << j.dump() << "\n";
            return 0;
        }
        return usage_error("no subcommand");
    } catch (const std::invalid_argument& e) {
        return usage_error(e.what());
    } catch (const nlohmann::json::exception& e) {
        return usage_error(e.what());
    } catch (const std::exception& e) {
        return computation_error(e.what());
    }
}
