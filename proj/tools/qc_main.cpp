#include <CLI11.hpp>
#include <fstream>
#include <iostream>

#include "qc/qobjects.hpp"
#include "qc/report.hpp"

namespace {

// Prints the one-line report and maps pass/fail onto the exit contract.
int emit_single(const std::string& check_id, const qc::Json& params,
                const std::string& detail_dir) {
    qc::CheckReport report = qc::run_single(check_id, params, detail_dir);
    std::cout << qc::format_report({report}, qc::OutputFormat::json_lines);
    return report.pass ? 0 : 1;
}

int run_suite_file(const std::string& config_path, bool unsafe_extended) {
    std::ifstream in(config_path);
    if (!in) throw qc::SuiteError("cannot open config file: " + config_path);
    qc::Json parsed = qc::Json::parse(in, nullptr, true, true);  // allow comments
    qc::SuiteConfig config = qc::suite_config_from_json(parsed);
    if (unsafe_extended) config.unsafe_extended = true;

    auto [reports, exit_code] = qc::run_suite(config);
    std::cout << qc::format_report(reports, config.output_format);
    return exit_code;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact verification suite for q-congruence identities"};
    app.require_subcommand(1);
    std::string detail_dir = "qc-details";
    app.add_option("--detail-dir", detail_dir,
                   "directory for failure witness files (default qc-details)");

    long n = 0, k = 0, m = 0, p = 0, r = 0;
    std::string id;

    CLI::App* cyclotomic = app.add_subcommand("cyclotomic", "print Phi_n as JSON");
    cyclotomic->add_option("--n", n, "index")->required();

    CLI::App* qbinom = app.add_subcommand("qbinom", "print a Gaussian binomial as JSON");
    qbinom->add_option("--n", n, "upper index")->required();
    qbinom->add_option("--k", k, "lower index")->required();

    CLI::App* verify = app.add_subcommand("verify", "run one symbolic check");
    verify->require_subcommand(1);
    CLI::App* v_lemma = verify->add_subcommand("lemma", "section-2 lemma congruences");
    v_lemma->add_option("--id", id)->required()
        ->check(CLI::IsMember({"fermat", "mod_n", "mod_n_new", "mod_n_identity",
                               "mod_n_2"}));
    v_lemma->add_option("--n", n)->required();
    CLI::App* v_wz = verify->add_subcommand("wz", "pair identity at one point");
    v_wz->add_option("--n", n)->required();
    v_wz->add_option("--k", k)->required();
    CLI::App* v_tel = verify->add_subcommand("telescope", "partial telescoping sum");
    v_tel->add_option("--m", m)->required();
    v_tel->add_option("--k", k)->required();
    CLI::App* v_thm = verify->add_subcommand("theorem", "main congruences");
    v_thm->add_option("--id", id)->required()
        ->check(CLI::IsMember({"thm_1_1", "thm_1_2", "qdiv", "thm_5_1", "thm_5_2"}));
    v_thm->add_option("--n", n)->required();
    CLI::App* v_bnd = verify->add_subcommand("boundary", "boundary-term congruences");
    v_bnd->add_option("--id", id)->required()
        ->check(CLI::IsMember({"g_m_1", "g_m_0", "g_m_2", "g_m_neg1"}));
    v_bnd->add_option("--m", m)->required();
    CLI::App* v_re = verify->add_subcommand("reindex", "factor-of-q bookkeeping");
    v_re->add_option("--id", id)->required()
        ->check(CLI::IsMember({"sum_F_n1", "sum_F_nneg1", "top_summand"}));
    v_re->add_option("--m", m)->required();

    CLI::App* check = app.add_subcommand("check", "run one numeric/structural check");
    check->require_subcommand(1);
    CLI::App* c_super = check->add_subcommand("super", "prime-power supercongruences");
    c_super->add_option("--id", id)->required()
        ->check(CLI::IsMember({"div1_half", "div1_full", "guo1", "wang", "guo1_pr",
                               "wang_pr"}));
    c_super->add_option("--p", p)->required();
    c_super->add_option("--r", r, "prime-power exponent (families *_pr only)");
    CLI::App* c_div = check->add_subcommand("divisibility", "weighted-sum divisibility");
    c_div->add_option("--id", id)->required()
        ->check(CLI::IsMember({"sun_3k1", "sunby", "strong"}));
    c_div->add_option("--n", n)->required();
    CLI::App* c_conj = check->add_subcommand("conjecture", "Laurent-polynomiality");
    c_conj->add_option("--n", n)->required();

    CLI::App* suite = app.add_subcommand("suite", "run a configured batch of checks");
    std::string config_path;
    bool unsafe_extended = false;
    suite->add_option("--config", config_path, "JSON file mirroring SuiteConfig")
        ->required();
    suite->add_flag("--unsafe-extended", unsafe_extended,
                    "allow ranges beyond the documented suite bounds");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;  // help is not an error; bad usage is exit 2
    }

    try {
        if (cyclotomic->parsed()) {
            if (n < 1) throw qc::SuiteError("cyclotomic: n must be positive");
            std::cout << qc::to_json(qc::cyclotomic(n)).dump() << '\n';
            return 0;
        }
        if (qbinom->parsed()) {
            if (n < 0 || k < 0 || k > n)
                throw qc::SuiteError("qbinom: needs 0 <= k <= n");
            std::cout << qc::to_json(qc::q_binomial(n, k)).dump() << '\n';
            return 0;
        }
        if (v_lemma->parsed())
            return emit_single("lemmas", {{"id", id}, {"n", n}}, detail_dir);
        if (v_wz->parsed())
            return emit_single("wz_pair", {{"n", n}, {"k", k}}, detail_dir);
        if (v_tel->parsed())
            return emit_single("telescope", {{"m", m}, {"k", k}}, detail_dir);
        if (v_thm->parsed()) return emit_single(id, {{"n", n}}, detail_dir);
        if (v_bnd->parsed())
            return emit_single("boundary", {{"id", id}, {"m", m}}, detail_dir);
        if (v_re->parsed())
            return emit_single("reindex", {{"id", id}, {"m", m}}, detail_dir);
        if (c_super->parsed()) {
            qc::Json params = {{"id", id}, {"p", p}};
            if (c_super->count("--r") > 0) params["r"] = r;
            return emit_single("super", params, detail_dir);
        }
        if (c_div->parsed())
            return emit_single("divisibility", {{"id", id}, {"n", n}}, detail_dir);
        if (c_conj->parsed()) return emit_single("conjecture", {{"n", n}}, detail_dir);
        if (suite->parsed()) return run_suite_file(config_path, unsafe_extended);
    } catch (const qc::SuiteError& e) {
        std::cerr << "config error: " << e.what() << '\n';
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "config error: " << e.what() << '\n';
        return 2;
    } catch (const qc::Json::parse_error& e) {
        std::cerr << "config error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 2;
}
