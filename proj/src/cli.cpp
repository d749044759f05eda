#include "ramper/cli.hpp"

#include <cctype>
#include <cerrno>
#include <cstdlib>
#include <fstream>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "ramper/serialize.hpp"

namespace ramper::cli {

namespace {

// Empty string when equal; otherwise the dotted path of the first divergence,
// walking objects as maps (stored key order is not part of the claim).
std::string first_divergence(const json& expect, const json& got, const std::string& path) {
    if (expect.is_object() && got.is_object()) {
        for (const auto& [key, value] : expect.items()) {
            if (!got.contains(key)) return path + "." + key;
            std::string sub = first_divergence(value, got.at(key), path + "." + key);
            if (!sub.empty()) return sub;
        }
        for (auto it = got.begin(); it != got.end(); ++it)
            if (!expect.contains(it.key())) return path + "." + it.key();
        return {};
    }
    if (expect.is_array() && got.is_array()) {
        size_t n = std::min(expect.size(), got.size());
        for (size_t i = 0; i < n; ++i) {
            std::string sub =
                first_divergence(expect[i], got[i], path + "[" + std::to_string(i) + "]");
            if (!sub.empty()) return sub;
        }
        if (expect.size() != got.size()) return path + ".length";
        return {};
    }
    return expect == got ? std::string{} : path;
}

int check_config(const Config& cfg, std::ostream& err, const char* cmd) {
    if (cfg.precision < 4) {
        err << "ramper " << cmd << ": precision must be >= 4\n";
        return exit_invalid_input;
    }
    if (cfg.height_bound < 1) {
        err << "ramper " << cmd << ": height bound must be >= 1\n";
        return exit_invalid_input;
    }
    if (cfg.count < 1) {
        err << "ramper " << cmd << ": count must be >= 1\n";
        return exit_invalid_input;
    }
    return exit_ok;
}

// stdout or --out file; a path that cannot be opened is an input error.
int emit(const json& j, const Config& cfg, std::ostream& out, std::ostream& err,
         const char* cmd) {
    if (cfg.out_path.empty()) {
        out << dump_json(j);
        return exit_ok;
    }
    std::ofstream file(cfg.out_path, std::ios::binary);
    if (!file) {
        err << "ramper " << cmd << ": cannot open \"" << cfg.out_path << "\" for writing\n";
        return exit_invalid_input;
    }
    file << dump_json(j);
    file.flush();
    if (!file) {
        err << "ramper " << cmd << ": write to \"" << cfg.out_path << "\" failed\n";
        return exit_verification_failure;
    }
    return exit_ok;
}

long parse_long_field(const json& j, const char* key) {
    if (!j.contains(key) || !j.at(key).is_number_integer())
        throw std::invalid_argument(std::string("missing integer field \"") + key + "\"");
    return j.at(key).get<long>();
}

void note_genus_one(long g, const Config& cfg, std::ostream& err, const char* cmd) {
    if (g == 1 && cfg.verbosity > 0)
        err << "ramper " << cmd
            << ": note: genus 1, d = 1 and the minimal period is alpha itself\n";
}

}  // namespace

long default_precision(std::ostream& err) {
    const char* s = std::getenv("RAMPER_PRECISION");
    if (s == nullptr) return 50;
    errno = 0;
    char* end = nullptr;
    long v = std::strtol(s, &end, 10);
    if (errno != 0 || end == s || *end != '\0' || v < 4) {
        err << "ramper: ignoring RAMPER_PRECISION=\"" << s << "\" (want an integer >= 4)\n";
        return 50;
    }
    return v;
}

QuadElem parse_quad_literal(long p, const std::string& s) {
    auto fail = [&s]() -> void {
        throw std::invalid_argument("cannot parse \"" + s + "\" as x+y*sqrtP");
    };
    size_t sq = s.find("sqrt");
    if (sq == std::string::npos) return QuadElem(p, rational_from_string(s), 0);

    const std::string tail = s.substr(sq + 4);
    if (tail.empty()) fail();
    for (char ch : tail)
        if (!std::isdigit(static_cast<unsigned char>(ch))) fail();
    if (std::stol(tail) != p)
        throw std::invalid_argument("literal \"" + s + "\" lives in Q(sqrt" + tail +
                                    "), expected sqrt" + std::to_string(p));

    std::string head = s.substr(0, sq);
    // Split x from the y-coefficient at the last sign not in leading position;
    // rationals contain no inner signs, so that sign is the term separator.
    std::string xs = "0", ys;
    bool y_negative = false;
    size_t sep = std::string::npos;
    for (size_t i = head.size(); i-- > 1;)
        if (head[i] == '+' || head[i] == '-') {
            sep = i;
            break;
        }
    if (sep != std::string::npos) {
        xs = head.substr(0, sep);
        y_negative = head[sep] == '-';
        ys = head.substr(sep + 1);
    } else if (!head.empty() && head[0] == '-') {
        y_negative = true;
        ys = head.substr(1);
    } else {
        ys = head;
    }
    if (!ys.empty()) {
        if (ys.back() != '*') fail();
        ys.pop_back();
        if (ys.empty()) fail();  // "3+*sqrt5"
    }
    mpq_class y = ys.empty() ? mpq_class(1) : rational_from_string(ys);
    if (y_negative) y = -y;
    return QuadElem(p, rational_from_string(xs), y);
}

ObstructionReport generate_report(long p, long g, long k, const Config& cfg) {
    DescentExample ex = build_example(p, g, k);
    QuadElem target = ex.a / QuadElem(p, ex.c, 0);
    RamifiedElem alpha =
        hensel_root(RamifiedElem::embed(target, cfg.precision), 2 * g + 2, cfg.precision);
    MinimalPeriod period = minimal_period(alpha, g);
    Certificate cert = certify_nontrivial(ex, alpha);
    if (!cert.valid) throw std::runtime_error("generate_report: certificate checks failed");
    RefutationLog log =
        refute_witnesses(alpha, cert.d.get_si(), cfg.height_bound, cfg.precision);
    return assemble_report(ex, alpha, period, cert, log);
}

int cmd_generate(long p, long g, const Config& cfg, std::ostream& out, std::ostream& err) {
    if (int rc = check_config(cfg, err, "generate"); rc != exit_ok) return rc;
    try {
        check_hypotheses(p, g);
    } catch (const std::invalid_argument& e) {
        err << "ramper generate: " << e.what() << "\n";
        return exit_invalid_input;
    }
    note_genus_one(g, cfg, err, "generate");
    try {
        json reports = json::array();
        for (long k = 0; k < cfg.count; ++k)
            reports.push_back(report_to_json(generate_report(p, g, k, cfg)));
        return emit(reports, cfg, out, err, "generate");
    } catch (const std::exception& e) {
        err << "ramper generate: internal failure: " << e.what() << "\n";
        return exit_verification_failure;
    }
}

int cmd_verify(const std::string& path, const Config& cfg, std::ostream& out,
               std::ostream& err) {
    std::ifstream file(path, std::ios::binary);
    if (!file) {
        err << "ramper verify: cannot read \"" << path << "\"\n";
        return exit_invalid_input;
    }
    json stored = json::parse(file, nullptr, false);
    if (stored.is_discarded() || !stored.is_array()) {
        err << "ramper verify: \"" << path << "\" is not a JSON array of reports\n";
        return exit_invalid_input;
    }

    for (size_t i = 0; i < stored.size(); ++i) {
        const json& rec = stored[i];
        const std::string where = "report[" + std::to_string(i) + "]";
        Config recompute_cfg = cfg;
        long p = 0, g = 0, k = 0;
        try {
            p = parse_long_field(rec, "p");
            g = parse_long_field(rec, "g");
            k = parse_long_field(rec, "pell_index");
            recompute_cfg.precision = parse_long_field(rec, "precision");
            if (parse_long_field(rec, "schema_version") != 1)
                throw std::invalid_argument("unsupported schema_version");
            if (!rec.contains("witness_refutation"))
                throw std::invalid_argument("missing field \"witness_refutation\"");
            recompute_cfg.height_bound =
                parse_long_field(rec.at("witness_refutation"), "height_bound");
        } catch (const std::invalid_argument& e) {
            err << "ramper verify: " << where << ": " << e.what() << "\n";
            return exit_invalid_input;
        }

        json recomputed;
        try {
            recomputed = report_to_json(generate_report(p, g, k, recompute_cfg));
        } catch (const std::exception& e) {
            err << "ramper verify: " << where << " cannot be recomputed: " << e.what()
                << "\n";
            return exit_verification_failure;
        }
        std::string divergence = first_divergence(recomputed, rec, where);
        if (!divergence.empty()) {
            err << "ramper verify: stored and recomputed reports diverge at " << divergence
                << "\n";
            return exit_verification_failure;
        }
        if (cfg.verbosity > 0) err << "ramper verify: " << where << " matches\n";
    }
    out << "verified " << stored.size() << " report" << (stored.size() == 1 ? "" : "s")
        << "\n";
    return exit_ok;
}

int cmd_pell(long p, const Config& cfg, std::ostream& out, std::ostream& err) {
    if (int rc = check_config(cfg, err, "pell"); rc != exit_ok) return rc;
    try {
        json arr = json::array();
        for (const PellSolution& s : solutions(p, cfg.count)) arr.push_back(pell_to_json(s));
        return emit(arr, cfg, out, err, "pell");
    } catch (const std::exception& e) {
        err << "ramper pell: " << e.what() << "\n";
        return exit_invalid_input;
    }
}

int cmd_period(long p, long g, const std::string& a_literal, const Config& cfg,
               std::ostream& out, std::ostream& err) {
    if (int rc = check_config(cfg, err, "period"); rc != exit_ok) return rc;
    note_genus_one(g, cfg, err, "period");
    try {
        QuadElem a = parse_quad_literal(p, a_literal);
        long c = reduce_and_check(a, g);
        RamifiedElem alpha = hensel_root(
            RamifiedElem::embed(a / QuadElem(p, c, 0), cfg.precision), 2 * g + 2,
            cfg.precision);
        MinimalPeriod period = minimal_period(alpha, g);
        json j;
        j["p"] = p;
        j["g"] = g;
        j["a"] = quad_to_json(a);
        j["c"] = c;
        j["precision"] = cfg.precision;
        j["alpha"] = ramified_to_json(alpha);
        j["minimal_period"] = period_to_json(period, a, c);
        return emit(j, cfg, out, err, "period");
    } catch (const std::exception& e) {
        err << "ramper period: " << e.what() << "\n";
        return exit_invalid_input;
    }
}

}  // namespace ramper::cli
