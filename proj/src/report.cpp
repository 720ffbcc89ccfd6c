#include "qc/report.hpp"

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "qc/congruence.hpp"
#include "qc/numeric.hpp"
#include "qc/qobjects.hpp"
#include "qc/wzengine.hpp"

namespace qc {

namespace {

std::string fnv1a_hex(const std::string& bytes) {
    std::uint64_t h = 14695981039346656037ULL;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

struct Outcome {
    bool pass;
    Json witness;
};

struct Instance {
    std::string check_id;
    Json params;
    std::function<Outcome()> run;
};

void require(bool ok, const std::string& msg) {
    if (!ok) throw SuiteError(msg);
}

long param_long(const Json& params, const char* key) {
    require(params.contains(key) && params[key].is_number_integer(),
            std::string("missing or non-integer parameter '") + key + "'");
    return params[key].get<long>();
}

std::string param_str(const Json& params, const char* key) {
    require(params.contains(key) && params[key].is_string(),
            std::string("missing or non-string parameter '") + key + "'");
    return params[key].get<std::string>();
}

void require_odd_min(long n, long min, const std::string& who) {
    require(n % 2 != 0 && n >= min,
            who + ": needs odd argument >= " + std::to_string(min) +
                ", got " + std::to_string(n));
}

Json congruence_witness(const CongruenceResult& r) {
    Json w;
    w["witness"] = to_json(r.witness);
    w["modulus"] = to_json(r.modulus);
    w["denominator_shares_modulus_factor"] = r.denominator_shares_modulus_factor;
    return w;
}

Outcome from_congruence(const CongruenceResult& r) {
    return {r.pass, congruence_witness(r)};
}

// The pair identity F(n,k-1) - F(n,k) == G(n+1,k) - G(n,k), with the reduced
// difference as witness.
Outcome run_wz_pair(long n, long k) {
    RatFunc diff = (wz_F({n, k - 1}) - wz_F({n, k})) - (wz_G({n + 1, k}) - wz_G({n, k}));
    Json w;
    w["difference"] = to_json(diff);
    return {diff.is_zero(), std::move(w)};
}

Outcome run_telescope(long m, long k) {
    RatFunc sum;
    for (long n = 0; n < m; ++n) sum += wz_F({n, k - 1}) - wz_F({n, k});
    RatFunc diff = sum - wz_G({m, k});
    Json w;
    w["difference"] = to_json(diff);
    return {diff.is_zero(), std::move(w)};
}

TheoremId theorem_id_from(const std::string& name) {
    if (name == "thm_1_1") return TheoremId::thm_1_1;
    if (name == "thm_1_2") return TheoremId::thm_1_2;
    if (name == "qdiv") return TheoremId::qdiv;
    if (name == "thm_5_1") return TheoremId::thm_5_1;
    if (name == "thm_5_2") return TheoremId::thm_5_2;
    throw SuiteError("unknown theorem id: " + name);
}

LemmaId lemma_id_from(const std::string& name) {
    if (name == "fermat") return LemmaId::fermat;
    if (name == "mod_n") return LemmaId::mod_n;
    if (name == "mod_n_new") return LemmaId::mod_n_new;
    if (name == "mod_n_identity") return LemmaId::mod_n_identity;
    throw SuiteError("unknown lemma id: " + name);
}

BoundaryId boundary_id_from(const std::string& name) {
    if (name == "g_m_1") return BoundaryId::g_m_1;
    if (name == "g_m_0") return BoundaryId::g_m_0;
    if (name == "g_m_2") return BoundaryId::g_m_2;
    if (name == "g_m_neg1") return BoundaryId::g_m_neg1;
    throw SuiteError("unknown boundary id: " + name);
}

SuperId super_id_from(const std::string& name) {
    if (name == "div1_half") return SuperId::div1_half;
    if (name == "div1_full") return SuperId::div1_full;
    if (name == "guo1") return SuperId::guo1;
    if (name == "wang") return SuperId::wang;
    if (name == "guo1_pr") return SuperId::guo1_pr;
    if (name == "wang_pr") return SuperId::wang_pr;
    throw SuiteError("unknown supercongruence id: " + name);
}

DivisibilityId divisibility_id_from(const std::string& name) {
    if (name == "sun_3k1") return DivisibilityId::sun_3k1;
    if (name == "sunby") return DivisibilityId::sunby;
    if (name == "strong") return DivisibilityId::strong;
    throw SuiteError("unknown divisibility id: " + name);
}

Outcome run_super(SuperId id, long p, long r) {
    SupercongruenceSpec spec{id, p, r};
    const Rational sum = supercongruence_sum(spec);

    long exp = 0;
    Int target;
    switch (id) {
        case SuperId::div1_half:
        case SuperId::div1_full: exp = 3; target = p; break;
        case SuperId::guo1: exp = 4; target = Int(p) + 2 * Int(p) * p * p; break;
        case SuperId::wang: exp = 4; target = Int(p) - 2 * Int(p) * p * p; break;
        case SuperId::guo1_pr:
        case SuperId::wang_pr: {
            exp = r + 3;
            mpz_ui_pow_ui(target.get_mpz_t(), static_cast<unsigned long>(p),
                          static_cast<unsigned long>(r));
            break;
        }
    }
    Int modulus;
    mpz_ui_pow_ui(modulus.get_mpz_t(), static_cast<unsigned long>(p),
                  static_cast<unsigned long>(exp));
    mpz_mod(target.get_mpz_t(), target.get_mpz_t(), modulus.get_mpz_t());
    Int residue = residue_mod(sum, modulus);

    Json w;
    w["residue"] = residue.get_str();
    w["target"] = target.get_str();
    w["modulus"] = modulus.get_str();
    return {residue == target, std::move(w)};
}

Outcome run_bridge(const std::string& form, long index) {
    Rational symbolic, classical;
    if (form == "even") {
        symbolic = eval_at_one(wz_F({index, 0}));
        classical = Int(3 * index + 1) *
                    Rational(central_binomial(index) * central_binomial(index) *
                             central_binomial(index)) /
                    Rational(pow_int(Int(16), static_cast<unsigned long>(index)));
    } else {
        symbolic = eval_at_one(theorem_summand(TheoremId::thm_1_2, index));
        Int factorial;
        mpz_fac_ui(factorial.get_mpz_t(), static_cast<unsigned long>(index));
        Rational neg_half = pochhammer(Rational(-1, 2), index);
        classical = Int(3 * index - 1) * pochhammer(Rational(1, 2), index) * neg_half *
                    neg_half *
                    Rational(pow_int(Int(4), static_cast<unsigned long>(index))) /
                    Rational(factorial * factorial * factorial);
    }
    Json w;
    w["symbolic"] = to_fraction_string(symbolic);
    w["classical"] = to_fraction_string(classical);
    return {symbolic == classical, std::move(w)};
}

// Deliberately corrupted congruence (left side shifted by 1); exists so the
// failure path, detail files, and exit code 1 stay exercised.
Outcome run_negative_control(long n) {
    Poly modulus = modulus_build(
        {{{ModulusKind::q_integer, n}, {ModulusKind::cyclotomic, n, 3}}});
    CongruenceResult r = congruent(theorem_lhs(TheoremId::qdiv, n) + RatFunc(Rational(1)),
                                   theorem_rhs(TheoremId::qdiv, n), modulus);
    return from_congruence(r);
}

Instance make_instance(const std::string& check_id, const Json& params) {
    if (check_id == "wz_pair") {
        long n = param_long(params, "n"), k = param_long(params, "k");
        require(n >= 0, "wz_pair: n must be nonnegative");
        return {check_id, params, [n, k] { return run_wz_pair(n, k); }};
    }
    if (check_id == "telescope") {
        long m = param_long(params, "m"), k = param_long(params, "k");
        require(m >= 1, "telescope: m must be positive");
        return {check_id, params, [m, k] { return run_telescope(m, k); }};
    }
    if (check_id == "thm_1_1" || check_id == "thm_1_2" || check_id == "qdiv" ||
        check_id == "thm_5_1" || check_id == "thm_5_2") {
        TheoremId id = theorem_id_from(check_id);
        long n = param_long(params, "n");
        bool five = id == TheoremId::thm_5_1 || id == TheoremId::thm_5_2;
        require_odd_min(n, five ? 5 : 3, check_id);
        return {check_id, params,
                [id, n] { return from_congruence(verify_theorem(id, n)); }};
    }
    if (check_id == "lemmas") {
        std::string name = param_str(params, "id");
        long n = param_long(params, "n");
        require_odd_min(n, 3, check_id);
        if (name == "mod_n_2")
            return {check_id, params, [n] { return from_congruence(check_mod_n_2(n)); }};
        LemmaId id = lemma_id_from(name);
        return {check_id, params,
                [id, n] { return from_congruence(verify_lemma(id, n)); }};
    }
    if (check_id == "boundary") {
        BoundaryId id = boundary_id_from(param_str(params, "id"));
        long m = param_long(params, "m");
        bool cube = id == BoundaryId::g_m_2 || id == BoundaryId::g_m_neg1;
        require_odd_min(m, cube ? 5 : 3, check_id);
        return {check_id, params,
                [id, m] { return from_congruence(verify_boundary(id, m)); }};
    }
    if (check_id == "reindex") {
        std::string name = param_str(params, "id");
        long m = param_long(params, "m");
        require_odd_min(m, 3, check_id);
        if (name == "top_summand")
            return {check_id, params,
                    [m] { return from_congruence(reindexed_top_summand_check(m)); }};
        ReindexId id = name == "sum_F_n1" ? ReindexId::sum_F_n1
                     : name == "sum_F_nneg1"
                         ? ReindexId::sum_F_nneg1
                         : throw SuiteError("unknown reindex id: " + name);
        return {check_id, params, [id, m] {
                    bool ok = reindex_identity_check(id, m);
                    Json w;
                    w["holds"] = ok;
                    return Outcome{ok, std::move(w)};
                }};
    }
    if (check_id == "super") {
        SuperId id = super_id_from(param_str(params, "id"));
        long p = param_long(params, "p");
        long r = params.contains("r") ? param_long(params, "r") : 1;
        bool pr = id == SuperId::guo1_pr || id == SuperId::wang_pr;
        bool half = id == SuperId::div1_half || id == SuperId::div1_full;
        require(is_prime(p), "super: p must be prime");
        require(p > (half ? 2 : 3), "super: p below the family's range");
        require(pr ? r >= 2 : r == 1, "super: invalid prime-power exponent");
        return {check_id, params, [id, p, r] { return run_super(id, p, r); }};
    }
    if (check_id == "divisibility") {
        DivisibilityId id = divisibility_id_from(param_str(params, "id"));
        long n = param_long(params, "n");
        require(n >= 2, "divisibility: n must be at least 2");
        return {check_id, params, [id, n] {
                    bool ok = check_divisibility({id, n});
                    Json w;
                    w["holds"] = ok;
                    return Outcome{ok, std::move(w)};
                }};
    }
    if (check_id == "conjecture") {
        long n = param_long(params, "n");
        require(n >= 1, "conjecture: n must be positive");
        return {check_id, params, [n] {
                    RatFunc expr = conjecture61_expression(n);
                    Json w;
                    w["expression"] = to_json(expr);
                    return Outcome{expr.is_laurent(), std::move(w)};
                }};
    }
    if (check_id == "bridge") {
        std::string form = param_str(params, "form");
        long index = param_long(params, "index");
        require(form == "even" || form == "odd", "bridge: form must be even or odd");
        require(index >= 0, "bridge: index must be nonnegative");
        return {check_id, params, [form, index] { return run_bridge(form, index); }};
    }
    if (check_id == "negative_control") {
        long n = param_long(params, "n");
        require_odd_min(n, 3, check_id);
        return {check_id, params, [n] { return run_negative_control(n); }};
    }
    throw SuiteError("unknown check id: " + check_id);
}

Json make_params(std::initializer_list<std::pair<const char*, Json>> kv) {
    Json j;
    for (const auto& [k, v] : kv) j[k] = v;
    return j;
}

void check_bound(bool within, const char* what, bool unsafe_extended) {
    if (!within && !unsafe_extended)
        throw SuiteError(std::string(what) +
                         " exceeds the documented suite bounds (pass unsafe_extended "
                         "to override)");
}

void bounds_check(const SuiteConfig& c) {
    const SuiteConfig d;  // defaults are the documented bounds
    auto all_leq = [](const std::vector<long>& v, long cap) {
        for (long x : v)
            if (x > cap) return false;
        return true;
    };
    const bool u = c.unsafe_extended;
    check_bound(c.wz_n_max <= d.wz_n_max && c.wz_k_lo >= d.wz_k_lo &&
                    c.wz_k_hi <= d.wz_k_hi, "wz_pair grid", u);
    check_bound(c.telescope_m_max <= d.telescope_m_max &&
                    c.telescope_k_lo >= d.telescope_k_lo &&
                    c.telescope_k_hi <= d.telescope_k_hi, "telescope grid", u);
    check_bound(all_leq(c.thm_1_1_n, 15) && all_leq(c.thm_1_2_n, 15), "theorem grid", u);
    check_bound(all_leq(c.qdiv_n, 9) && all_leq(c.thm_5_1_n, 9) && all_leq(c.thm_5_2_n, 9),
                "theorem grid", u);
    check_bound(c.lemma_n_max <= d.lemma_n_max, "lemma grid", u);
    check_bound(c.boundary_m_max <= d.boundary_m_max, "boundary grid", u);
    check_bound(all_leq(c.reindex_m, 7), "reindex grid", u);
    check_bound(all_leq(c.third_power_primes, 13) && all_leq(c.fourth_power_primes, 13),
                "prime list", u);
    for (auto [p, r] : c.prime_power_pairs)
        check_bound(p <= 7 && r <= 2, "prime-power list", u);
    check_bound(c.divisibility_n_max <= d.divisibility_n_max, "divisibility range", u);
    check_bound(c.conjecture_n_max <= d.conjecture_n_max, "conjecture range", u);
    check_bound(c.bridge_n_max <= d.bridge_n_max, "bridge range", u);
}

void expand_family(const std::string& id, const SuiteConfig& c,
                   std::vector<Instance>& out) {
    auto add = [&](const Json& params) { out.push_back(make_instance(id, params)); };

    if (id == "wz_pair") {
        for (long n = 0; n <= c.wz_n_max; ++n)
            for (long k = c.wz_k_lo; k <= c.wz_k_hi; ++k)
                add(make_params({{"n", n}, {"k", k}}));
    } else if (id == "telescope") {
        for (long m = 1; m <= c.telescope_m_max; ++m)
            for (long k = c.telescope_k_lo; k <= c.telescope_k_hi; ++k)
                add(make_params({{"m", m}, {"k", k}}));
    } else if (id == "thm_1_1" || id == "thm_1_2" || id == "qdiv" || id == "thm_5_1" ||
               id == "thm_5_2") {
        const std::vector<long>& ns = id == "thm_1_1"   ? c.thm_1_1_n
                                      : id == "thm_1_2" ? c.thm_1_2_n
                                      : id == "qdiv"    ? c.qdiv_n
                                      : id == "thm_5_1" ? c.thm_5_1_n
                                                        : c.thm_5_2_n;
        for (long n : ns) add(make_params({{"n", n}}));
    } else if (id == "lemmas") {
        for (const char* name :
             {"fermat", "mod_n", "mod_n_new", "mod_n_identity", "mod_n_2"})
            for (long n = 3; n <= c.lemma_n_max; n += 2)
                add(make_params({{"id", name}, {"n", n}}));
    } else if (id == "boundary") {
        for (const char* name : {"g_m_1", "g_m_0", "g_m_2", "g_m_neg1"}) {
            long lo = (std::string(name) == "g_m_2" || std::string(name) == "g_m_neg1")
                          ? 5 : 3;
            for (long m = lo; m <= c.boundary_m_max; m += 2)
                add(make_params({{"id", name}, {"m", m}}));
        }
    } else if (id == "reindex") {
        for (const char* name : {"sum_F_n1", "sum_F_nneg1", "top_summand"})
            for (long m : c.reindex_m) add(make_params({{"id", name}, {"m", m}}));
    } else if (id == "super") {
        for (const char* name : {"div1_half", "div1_full"})
            for (long p : c.third_power_primes)
                add(make_params({{"id", name}, {"p", p}}));
        for (const char* name : {"guo1", "wang"})
            for (long p : c.fourth_power_primes)
                add(make_params({{"id", name}, {"p", p}}));
        for (const char* name : {"guo1_pr", "wang_pr"})
            for (auto [p, r] : c.prime_power_pairs)
                add(make_params({{"id", name}, {"p", p}, {"r", r}}));
    } else if (id == "divisibility") {
        for (const char* name : {"sun_3k1", "sunby", "strong"})
            for (long n = 2; n <= c.divisibility_n_max; ++n)
                add(make_params({{"id", name}, {"n", n}}));
    } else if (id == "conjecture") {
        for (long n = 1; n <= c.conjecture_n_max; ++n) add(make_params({{"n", n}}));
    } else if (id == "bridge") {
        for (long n = 0; n <= c.bridge_n_max; ++n)
            add(make_params({{"form", "even"}, {"index", n}}));
        for (long k = 0; k <= c.bridge_n_max; ++k)
            add(make_params({{"form", "odd"}, {"index", k}}));
    } else if (id == "negative_control") {
        add(make_params({{"n", 3}}));
    } else {
        throw SuiteError("unknown check id: " + id);
    }
}

std::vector<Instance> expand(const SuiteConfig& c) {
    bounds_check(c);
    std::vector<std::string> ids = c.selected_checks;
    if (ids.size() == 1 && ids[0] == "all") ids = known_check_ids();
    require(!ids.empty(), "no checks selected");

    std::vector<Instance> out;
    for (const std::string& id : ids) {
        require(id != "all", "'all' cannot be combined with explicit check ids");
        expand_family(id, c, out);
    }
    return out;
}

std::string write_detail(const std::string& dir, const Instance& inst,
                         const Json& witness) {
    std::filesystem::create_directories(dir);
    std::string name = inst.check_id + "-" + fnv1a_hex(inst.params.dump()) + ".json";
    std::filesystem::path path = std::filesystem::path(dir) / name;
    Json detail;
    detail["check_id"] = inst.check_id;
    detail["params"] = inst.params;
    detail["witness"] = witness;
    std::ofstream f(path);
    f << detail.dump(2) << '\n';
    return path.string();
}

CheckReport run_instance(const Instance& inst, const std::string& detail_dir) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome outcome = inst.run();
    const auto t1 = std::chrono::steady_clock::now();

    CheckReport r;
    r.check_id = inst.check_id;
    r.params = inst.params;
    r.pass = outcome.pass;
    r.witness_digest = fnv1a_hex(outcome.witness.dump());
    r.elapsed_ms = static_cast<long>(
        std::chrono::duration_cast<std::chrono::milliseconds>(t1 - t0).count());
    if (!outcome.pass) r.detail_path = write_detail(detail_dir, inst, outcome.witness);
    return r;
}

long effective_parallelism(const SuiteConfig& c) {
    long par = c.parallelism;
    if (const char* env = std::getenv("QC_PARALLELISM")) {
        char* end = nullptr;
        par = std::strtol(env, &end, 10);
        require(end && *end == '\0' && par >= 0,
                "QC_PARALLELISM must be a nonnegative integer");
    }
    require(par >= 0, "parallelism must be nonnegative");
    return par;
}

Json report_json(const CheckReport& r) {
    Json j;
    j["check_id"] = r.check_id;
    j["params"] = r.params;
    j["pass"] = r.pass;
    j["witness_digest"] = r.witness_digest;
    j["elapsed_ms"] = r.elapsed_ms;
    if (!r.pass) j["detail_path"] = r.detail_path;
    return j;
}

}  // namespace

const std::vector<std::string>& known_check_ids() {
    // negative_control is selectable by name but never part of "all".
    static const std::vector<std::string> ids = {
        "wz_pair",  "telescope", "thm_1_1",      "thm_1_2", "qdiv",
        "thm_5_1",  "thm_5_2",   "lemmas",       "boundary", "reindex",
        "super",    "divisibility", "conjecture", "bridge"};
    return ids;
}

CheckReport run_single(const std::string& check_id, const Json& params,
                       const std::string& detail_dir) {
    return run_instance(make_instance(check_id, params), detail_dir);
}

SuiteConfig suite_config_from_json(const Json& j) {
    require(j.is_object(), "config must be a JSON object");
    SuiteConfig c;

    auto as_long = [](const Json& v, const std::string& key) {
        if (!v.is_number_integer()) throw SuiteError(key + " must be an integer");
        return v.get<long>();
    };
    auto as_long_list = [&](const Json& v, const std::string& key) {
        if (!v.is_array()) throw SuiteError(key + " must be an array of integers");
        std::vector<long> out;
        for (const Json& e : v) out.push_back(as_long(e, key));
        return out;
    };

    for (const auto& [key, value] : j.items()) {
        if (key == "selected_checks") {
            if (value.is_string()) {
                c.selected_checks = {value.get<std::string>()};
            } else if (value.is_array()) {
                c.selected_checks.clear();
                for (const Json& e : value) {
                    if (!e.is_string())
                        throw SuiteError("selected_checks entries must be strings");
                    c.selected_checks.push_back(e.get<std::string>());
                }
            } else {
                throw SuiteError("selected_checks must be a string or array");
            }
        } else if (key == "output_format") {
            std::string f = value.is_string() ? value.get<std::string>() : "";
            if (f == "json_lines") c.output_format = OutputFormat::json_lines;
            else if (f == "text_table") c.output_format = OutputFormat::text_table;
            else throw SuiteError("output_format must be json_lines or text_table");
        } else if (key == "fail_fast") {
            if (!value.is_boolean()) throw SuiteError("fail_fast must be a boolean");
            c.fail_fast = value.get<bool>();
        } else if (key == "unsafe_extended") {
            if (!value.is_boolean()) throw SuiteError("unsafe_extended must be a boolean");
            c.unsafe_extended = value.get<bool>();
        } else if (key == "parallelism") {
            c.parallelism = as_long(value, key);
        } else if (key == "detail_dir") {
            if (!value.is_string()) throw SuiteError("detail_dir must be a string");
            c.detail_dir = value.get<std::string>();
        } else if (key == "wz_n_max") { c.wz_n_max = as_long(value, key);
        } else if (key == "wz_k_lo") { c.wz_k_lo = as_long(value, key);
        } else if (key == "wz_k_hi") { c.wz_k_hi = as_long(value, key);
        } else if (key == "telescope_m_max") { c.telescope_m_max = as_long(value, key);
        } else if (key == "telescope_k_lo") { c.telescope_k_lo = as_long(value, key);
        } else if (key == "telescope_k_hi") { c.telescope_k_hi = as_long(value, key);
        } else if (key == "thm_1_1_n") { c.thm_1_1_n = as_long_list(value, key);
        } else if (key == "thm_1_2_n") { c.thm_1_2_n = as_long_list(value, key);
        } else if (key == "qdiv_n") { c.qdiv_n = as_long_list(value, key);
        } else if (key == "thm_5_1_n") { c.thm_5_1_n = as_long_list(value, key);
        } else if (key == "thm_5_2_n") { c.thm_5_2_n = as_long_list(value, key);
        } else if (key == "lemma_n_max") { c.lemma_n_max = as_long(value, key);
        } else if (key == "boundary_m_max") { c.boundary_m_max = as_long(value, key);
        } else if (key == "reindex_m") { c.reindex_m = as_long_list(value, key);
        } else if (key == "third_power_primes") {
            c.third_power_primes = as_long_list(value, key);
        } else if (key == "fourth_power_primes") {
            c.fourth_power_primes = as_long_list(value, key);
        } else if (key == "prime_power_pairs") {
            if (!value.is_array()) throw SuiteError("prime_power_pairs must be an array");
            c.prime_power_pairs.clear();
            for (const Json& e : value) {
                if (!e.is_array() || e.size() != 2)
                    throw SuiteError("prime_power_pairs entries must be [p, r] pairs");
                c.prime_power_pairs.emplace_back(as_long(e[0], key), as_long(e[1], key));
            }
        } else if (key == "divisibility_n_max") {
            c.divisibility_n_max = as_long(value, key);
        } else if (key == "conjecture_n_max") {
            c.conjecture_n_max = as_long(value, key);
        } else if (key == "bridge_n_max") {
            c.bridge_n_max = as_long(value, key);
        } else {
            throw SuiteError("unknown config key: " + key);
        }
    }
    return c;
}

std::pair<std::vector<CheckReport>, int> run_suite(const SuiteConfig& config) {
    std::vector<Instance> instances = expand(config);
    [[maybe_unused]] const long par = effective_parallelism(config);

    std::vector<CheckReport> reports;
    if (config.fail_fast) {
        for (const Instance& inst : instances) {
            reports.push_back(run_instance(inst, config.detail_dir));
            if (!reports.back().pass) break;
        }
    } else {
        reports.resize(instances.size());
#ifdef _OPENMP
        const int threads =
            par > 0 ? static_cast<int>(par) : omp_get_max_threads();
#pragma omp parallel for schedule(dynamic) num_threads(threads)
#endif
        for (std::size_t i = 0; i < instances.size(); ++i)
            reports[i] = run_instance(instances[i], config.detail_dir);
    }

    bool all_pass = true;
    for (const CheckReport& r : reports) all_pass = all_pass && r.pass;
    return {std::move(reports), all_pass ? 0 : 1};
}

std::string format_report(const std::vector<CheckReport>& reports, OutputFormat format) {
    std::string out;
    if (format == OutputFormat::json_lines) {
        for (const CheckReport& r : reports) {
            out += report_json(r).dump();
            out += '\n';
        }
        return out;
    }

    std::size_t id_w = 8, params_w = 6;
    for (const CheckReport& r : reports) {
        id_w = std::max(id_w, r.check_id.size());
        params_w = std::max(params_w, r.params.dump().size());
    }
    auto pad = [](std::string s, std::size_t w) {
        s.resize(std::max(s.size(), w), ' ');
        return s;
    };
    long failed = 0;
    for (const CheckReport& r : reports) {
        if (!r.pass) ++failed;
        out += (r.pass ? "ok   " : "FAIL ");
        out += pad(r.check_id, id_w) + "  " + pad(r.params.dump(), params_w) + "  " +
               r.witness_digest + "  " + std::to_string(r.elapsed_ms) + "ms";
        if (!r.pass) out += "  <- " + r.detail_path;
        out += '\n';
    }
    out += "checks: " + std::to_string(reports.size()) + "  passed: " +
           std::to_string(reports.size() - failed) + "  failed: " +
           std::to_string(failed) + '\n';
    return out;
}

}  // namespace qc
