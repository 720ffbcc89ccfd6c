#ifndef QC_REPORT_HPP
#define QC_REPORT_HPP

#include <string>
#include <utility>
#include <vector>

#include "qc/serialize.hpp"

namespace qc {

/// Configuration or usage problems (unknown check id, out-of-bounds override,
/// malformed JSON shape). Callers map these to exit code 2.
struct SuiteError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// One executed check instance. Witnesses can be large, so the report keeps
/// a stable digest inline; the full witness is written to detail_path only
/// when the check fails (pass == false implies detail_path is set).
struct CheckReport {
    std::string check_id;
    Json params;
    bool pass = false;
    std::string witness_digest;  // 64-bit FNV-1a of the witness serialization
    long elapsed_ms = 0;
    std::string detail_path;     // empty on pass
};

enum class OutputFormat { json_lines, text_table };

/// Grids default to the documented suite bounds. Raising any bound requires
/// unsafe_extended; shrinking is always allowed.
struct SuiteConfig {
    std::vector<std::string> selected_checks{"all"};

    long wz_n_max = 10;          // k spans wz_k_lo..wz_k_hi at every n
    long wz_k_lo = -3;
    long wz_k_hi = 3;
    long telescope_m_max = 8;
    long telescope_k_lo = -2;
    long telescope_k_hi = 2;
    std::vector<long> thm_1_1_n = {3, 5, 7, 9, 15};
    std::vector<long> thm_1_2_n = {3, 5, 7, 9, 15};
    std::vector<long> qdiv_n = {3, 5, 7, 9};
    std::vector<long> thm_5_1_n = {5, 7, 9};
    std::vector<long> thm_5_2_n = {5, 7, 9};
    long lemma_n_max = 21;       // all odd n in [3, lemma_n_max]
    long boundary_m_max = 9;     // admissible odd m per boundary id
    std::vector<long> reindex_m = {3, 5, 7};
    std::vector<long> third_power_primes = {3, 5, 7, 11, 13};
    std::vector<long> fourth_power_primes = {5, 7, 11, 13};
    std::vector<std::pair<long, long>> prime_power_pairs = {{5, 2}, {7, 2}};
    long divisibility_n_max = 64;
    long conjecture_n_max = 24;
    long bridge_n_max = 10;

    OutputFormat output_format = OutputFormat::json_lines;
    bool fail_fast = false;
    long parallelism = 0;        // 0 = auto; QC_PARALLELISM overrides
    bool unsafe_extended = false;
    std::string detail_dir = "qc-details";
};

/// Parses the JSON mirror of SuiteConfig. Unknown keys and malformed values
/// raise SuiteError.
SuiteConfig suite_config_from_json(const Json& j);

/// All check ids a config may select. "all" expands to every id here except
/// negative_control, the intentionally corrupted fixture used to exercise
/// the failure path.
const std::vector<std::string>& known_check_ids();

/// Runs one instance immediately (no grid expansion). `params` uses the same
/// keys the suite reports emit. Throws SuiteError on unknown id or invalid
/// parameters; writes a detail file under detail_dir on failure.
CheckReport run_single(const std::string& check_id, const Json& params,
                       const std::string& detail_dir = "qc-details");

/// Expands the config into its instance grid (validating every point up
/// front), runs the instances, and returns deterministically ordered reports
/// plus the contractual exit code: 0 all pass, 1 some check failed. Usage
/// errors surface as SuiteError, which callers report as exit 2.
std::pair<std::vector<CheckReport>, int> run_suite(const SuiteConfig& config);

/// json_lines: one CheckReport object per line, byte-stable across runs
/// except elapsed_ms. text_table: aligned rows, failures flagged, and a
/// trailing summary count line.
std::string format_report(const std::vector<CheckReport>& reports, OutputFormat format);

}  // namespace qc

#endif
