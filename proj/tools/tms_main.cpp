// tms: verify topological mirror symmetry identities for the rank-2
// character variety mirror pairs, exactly, over a genus range.

#include <cstdlib>
#include <exception>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "tms/catalog.hpp"
#include "tms/gamma_group.hpp"
#include "tms/verifier.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace {

using namespace tms;

constexpr const char* kConfigEnvVar = "TMS_CONFIG";

struct CheckSpec {
    std::string name;
    bool per_side = false;            // runs once per configured side
    std::optional<Side> fixed_side;   // single-side checks ignore --sides
    bool expect_pass = true;          // rhl-kappa is an expected negative
};

const std::vector<CheckSpec>& check_registry() {
    static const std::vector<CheckSpec> registry = {
        {"tms-kappa", true, std::nullopt, true},
        {"tms-total", true, std::nullopt, true},
        {"ordinary-failure", false, Side::betti, true},
        {"perverse-kappa", false, Side::dolbeault, true},
        {"q1-specialization", false, Side::dolbeault, true},
        {"rhl-kappa", false, Side::dolbeault, false},
    };
    return registry;
}

std::vector<std::string> all_check_names() {
    std::vector<std::string> names;
    for (const auto& spec : check_registry()) names.push_back(spec.name);
    return names;
}

const CheckSpec& find_check(const std::string& name) {
    for (const auto& spec : check_registry()) {
        if (spec.name == name) return spec;
    }
    std::ostringstream os;
    os << "unknown check '" << name << "' (valid:";
    for (const auto& spec : check_registry()) os << " " << spec.name;
    os << ")";
    throw CLI::ValidationError("--checks", os.str());
}

struct RunConfig {
    int genus_min = 2;
    int genus_max = 8;
    std::vector<Side> sides = {Side::dolbeault, Side::betti};
    std::vector<std::string> checks = all_check_names();
    SumMode mode = SumMode::closed_form;
    std::string format = "table";
    bool show_provenance = false;
    bool no_timing = false;
    int enumerate_bound = kDefaultEnumerateBoundBits;
};

// One scheduled (genus, check, side) cell.
struct Cell {
    int genus;
    const CheckSpec* spec;
    std::optional<Side> side;
};

std::pair<int, int> parse_genus_range(const std::string& text) {
    auto dots = text.find("..");
    try {
        if (dots == std::string::npos) {
            int g = std::stoi(text);
            return {g, g};
        }
        int lo = std::stoi(text.substr(0, dots));
        int hi = std::stoi(text.substr(dots + 2));
        return {lo, hi};
    } catch (const std::exception&) {
        throw CLI::ValidationError("--genus", "expected G or A..B, got '" + text + "'");
    }
}

std::vector<std::string> split_csv(const std::string& text) {
    std::vector<std::string> out;
    std::string item;
    std::istringstream in(text);
    while (std::getline(in, item, ',')) {
        if (!item.empty()) out.push_back(item);
    }
    return out;
}

bool parse_bool(const std::string& value) {
    if (value == "true" || value == "1" || value == "yes") return true;
    if (value == "false" || value == "0" || value == "no") return false;
    throw std::invalid_argument("expected a boolean, got '" + value + "'");
}

// Key-value config file: `key = value` lines, '#' comments.
std::map<std::string, std::string> load_config_file(const std::string& path) {
    std::ifstream in(path);
    if (!in.good()) {
        throw CLI::ValidationError("--config", "cannot read config file '" + path + "'");
    }
    std::map<std::string, std::string> kv;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        auto strip = [](std::string s) {
            auto b = s.find_first_not_of(" \t\r");
            auto e = s.find_last_not_of(" \t\r");
            return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
        };
        line = strip(line);
        if (line.empty()) continue;
        auto eq = line.find('=');
        if (eq == std::string::npos) {
            throw CLI::ValidationError("--config", "malformed line " + std::to_string(lineno) +
                                                       " in '" + path + "': " + line);
        }
        kv[strip(line.substr(0, eq))] = strip(line.substr(eq + 1));
    }
    return kv;
}

void apply_config_file(RunConfig& cfg, const std::map<std::string, std::string>& kv,
                       const std::map<std::string, bool>& overridden) {
    auto want = [&](const char* key) {
        auto it = overridden.find(key);
        bool cli_set = it != overridden.end() && it->second;
        return kv.count(key) > 0 && !cli_set;
    };
    if (want("genus_min")) cfg.genus_min = std::stoi(kv.at("genus_min"));
    if (want("genus_max")) cfg.genus_max = std::stoi(kv.at("genus_max"));
    if (want("sides")) {
        cfg.sides.clear();
        for (const auto& s : split_csv(kv.at("sides"))) cfg.sides.push_back(side_from_string(s));
    }
    if (want("checks")) cfg.checks = split_csv(kv.at("checks"));
    if (want("mode")) cfg.mode = sum_mode_from_string(kv.at("mode"));
    if (want("format")) cfg.format = kv.at("format");
    if (want("show_provenance")) cfg.show_provenance = parse_bool(kv.at("show_provenance"));
    if (want("enumerate_bound")) cfg.enumerate_bound = std::stoi(kv.at("enumerate_bound"));
}

void validate(const RunConfig& cfg) {
    if (cfg.genus_min < 2) throw CLI::ValidationError("--genus", "genus must be >= 2");
    if (cfg.genus_min > cfg.genus_max) {
        throw CLI::ValidationError("--genus", "empty genus range");
    }
    if (cfg.checks.empty()) throw CLI::ValidationError("--checks", "no checks selected");
    if (cfg.sides.empty()) throw CLI::ValidationError("--sides", "no sides selected");
    if (cfg.format != "table" && cfg.format != "json") {
        throw CLI::ValidationError("--format", "expected table or json");
    }
    for (const auto& name : cfg.checks) find_check(name);
    if (cfg.mode == SumMode::enumerate && 2 * cfg.genus_max > cfg.enumerate_bound) {
        throw CLI::ValidationError(
            "--mode", "enumerating 2^" + std::to_string(2 * cfg.genus_max) +
                          " elements at genus " + std::to_string(cfg.genus_max) +
                          " exceeds the bound 2^" + std::to_string(cfg.enumerate_bound) +
                          "; use --mode closed_form or raise --enumerate-bound");
    }
}

std::vector<Cell> schedule(const RunConfig& cfg) {
    std::vector<Cell> cells;
    for (int g = cfg.genus_min; g <= cfg.genus_max; ++g) {
        // Registry order keeps the report stream deterministic.
        for (const auto& spec : check_registry()) {
            bool selected = false;
            for (const auto& name : cfg.checks) {
                if (name == spec.name) selected = true;
            }
            if (!selected) continue;
            if (spec.per_side) {
                for (Side side : {Side::dolbeault, Side::betti}) {
                    for (Side wanted : cfg.sides) {
                        if (side == wanted) cells.push_back({g, &spec, side});
                    }
                }
            } else {
                cells.push_back({g, &spec, spec.fixed_side});
            }
        }
    }
    return cells;
}

VerificationReport run_cell(const Cell& cell, const RunConfig& cfg) {
    const std::string& name = cell.spec->name;
    if (name == "tms-kappa") return check_tms_kappa(cell.genus, *cell.side);
    if (name == "tms-total") {
        return check_tms_total(cell.genus, *cell.side, cfg.mode, cfg.enumerate_bound);
    }
    if (name == "ordinary-failure") return check_ordinary_failure(cell.genus);
    if (name == "perverse-kappa") return check_perverse_kappa(cell.genus);
    if (name == "q1-specialization") return check_q1_specialization(cell.genus);
    if (name == "rhl-kappa") return check_rhl_kappa(cell.genus);
    throw std::logic_error("unhandled check " + name);
}

std::vector<VerificationReport> run_all(const std::vector<Cell>& cells, const RunConfig& cfg) {
    std::vector<VerificationReport> reports(cells.size());
    std::exception_ptr failure;
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic)
#endif
    for (std::int64_t i = 0; i < static_cast<std::int64_t>(cells.size()); ++i) {
        try {
            reports[static_cast<std::size_t>(i)] = run_cell(cells[static_cast<std::size_t>(i)], cfg);
        } catch (...) {
#ifdef _OPENMP
#pragma omp critical
#endif
            if (!failure) failure = std::current_exception();
        }
    }
    if (failure) std::rethrow_exception(failure);
    if (cfg.no_timing) {
        for (auto& r : reports) r.elapsed_ms = 0.0;
    }
    return reports;
}

std::string verdict_string(const VerificationReport& report, const CheckSpec& spec) {
    if (report.passed && spec.expect_pass) return "pass";
    if (!report.passed && !spec.expect_pass) return "fail (observed)";
    if (report.passed) return "PASS (unexpected)";
    return "FAIL";
}

bool as_expected(const VerificationReport& report, const CheckSpec& spec) {
    return report.passed == spec.expect_pass;
}

std::string format_ms(double ms) {
    std::ostringstream os;
    os << std::fixed << std::setprecision(3) << ms;
    return os.str();
}

void print_json_reports(const std::vector<VerificationReport>& reports, const RunConfig& cfg) {
    std::cout << "[";
    for (std::size_t i = 0; i < reports.size(); ++i) {
        if (i) std::cout << ",";
        std::cout << "\n  " << reports[i].to_json_string(!cfg.no_timing);
    }
    std::cout << "\n]\n";
}

int finish_run(const std::vector<Cell>& cells, const std::vector<VerificationReport>& reports) {
    int unexpected = 0;
    for (std::size_t i = 0; i < reports.size(); ++i) {
        if (!as_expected(reports[i], *cells[i].spec)) ++unexpected;
    }
    return unexpected == 0 ? 0 : 1;
}

int cmd_verify(const RunConfig& cfg) {
    validate(cfg);
    std::vector<Cell> cells = schedule(cfg);
    std::vector<VerificationReport> reports = run_all(cells, cfg);

    if (cfg.format == "json") {
        print_json_reports(reports, cfg);
        return finish_run(cells, reports);
    }

    std::ostringstream header;
    header << "# verify genus=" << cfg.genus_min << ".." << cfg.genus_max << " mode="
           << to_string(cfg.mode) << " reports=" << reports.size();
    std::cout << header.str() << "\n";
    std::cout << std::left << std::setw(7) << "genus" << std::setw(19) << "identity"
              << std::setw(11) << "side" << std::setw(18) << "verdict" << "elapsed_ms\n";
    for (std::size_t i = 0; i < reports.size(); ++i) {
        const auto& r = reports[i];
        std::cout << std::left << std::setw(7) << r.genus << std::setw(19) << r.identity
                  << std::setw(11) << (r.side ? to_string(*r.side) : "-") << std::setw(18)
                  << verdict_string(r, *cells[i].spec) << format_ms(r.elapsed_ms) << "\n";
        if (!r.passed && cells[i].spec->expect_pass) {
            std::cout << "    difference: " << r.difference.to_canonical_string() << "\n";
        }
        if (r.gap) {
            std::cout << "    gap: " << r.gap->to_canonical_string() << "\n";
        }
        if (cfg.show_provenance) {
            std::cout << "    provenance: " << r.provenance << "\n";
        }
    }
    int status = finish_run(cells, reports);
    std::cout << (status == 0 ? "# all verdicts as expected\n" : "# UNEXPECTED VERDICTS\n");
    return status;
}

int cmd_sweep(const RunConfig& cfg) {
    validate(cfg);
    std::vector<Cell> cells = schedule(cfg);
    std::vector<VerificationReport> reports = run_all(cells, cfg);

    if (cfg.format == "json") {
        print_json_reports(reports, cfg);
        return finish_run(cells, reports);
    }

    std::cout << "# sweep genus=" << cfg.genus_min << ".." << cfg.genus_max
              << " mode=" << to_string(cfg.mode) << " rows=" << reports.size() << "\n";
    std::cout << std::left << std::setw(7) << "genus" << std::setw(19) << "identity"
              << std::setw(11) << "side" << std::setw(18) << "verdict" << std::setw(7) << "terms"
              << std::setw(8) << "maxdeg" << "elapsed_ms\n";
    for (std::size_t i = 0; i < reports.size(); ++i) {
        const auto& r = reports[i];
        std::cout << std::left << std::setw(7) << r.genus << std::setw(19) << r.identity
                  << std::setw(11) << (r.side ? to_string(*r.side) : "-") << std::setw(18)
                  << verdict_string(r, *cells[i].spec) << std::setw(7) << r.lhs_terms
                  << std::setw(8) << r.lhs_max_degree << format_ms(r.elapsed_ms) << "\n";
        if (cfg.show_provenance) {
            std::cout << "    provenance: " << r.provenance << "\n";
        }
    }
    int status = finish_run(cells, reports);
    std::cout << (status == 0 ? "# all verdicts as expected\n" : "# UNEXPECTED VERDICTS\n");
    return status;
}

struct ShowOptions {
    std::string formula;
    int genus = 2;
    int rank = 2;
    bool trivial_element = false;
    std::string format = "pretty";
    bool show_provenance = false;
};

int cmd_show(const ShowOptions& opt) {
    FormulaId id = formula_from_string(opt.formula);
    std::optional<LaurentPoly> poly;
    std::optional<long> scalar;
    switch (id) {
        case FormulaId::ie_dol_sl2_kappa: poly = ie_dol_sl2_kappa(opt.genus); break;
        case FormulaId::ie_betti_sl2_kappa: poly = ie_betti_sl2_kappa(opt.genus); break;
        case FormulaId::e_betti_sl2_kappa_ordinary:
            poly = e_betti_sl2_kappa_ordinary(opt.genus);
            break;
        case FormulaId::ie_dol_fixed_quotient:
            poly = ie_fixed_quotient(opt.genus, Side::dolbeault);
            break;
        case FormulaId::ie_betti_fixed_quotient:
            poly = ie_fixed_quotient(opt.genus, Side::betti);
            break;
        case FormulaId::pie_dol_sl2_kappa: poly = pie_dol_sl2_kappa(opt.genus); break;
        case FormulaId::pie_fixed_quotient: poly = pie_fixed_quotient(opt.genus); break;
        case FormulaId::fermionic_shift:
            scalar = fermionic_shift(opt.genus, opt.trivial_element);
            break;
        case FormulaId::total_dimension: scalar = total_dimension(opt.rank, opt.genus); break;
    }

    if (opt.format == "json") {
        nlohmann::ordered_json j;
        j["formula"] = opt.formula;
        j["genus"] = opt.genus;
        if (id == FormulaId::total_dimension) j["r"] = opt.rank;
        if (id == FormulaId::fermionic_shift) j["trivial"] = opt.trivial_element;
        j["value"] = poly ? poly->to_canonical_string() : std::to_string(*scalar);
        if (opt.show_provenance) j["provenance"] = provenance(id);
        std::cout << j.dump() << "\n";
        return 0;
    }

    if (poly) {
        std::cout << (opt.format == "canonical" ? poly->to_canonical_string()
                                                : poly->to_pretty_string())
                  << "\n";
    } else {
        std::cout << *scalar << "\n";
    }
    if (opt.show_provenance) {
        std::cout << "provenance: " << provenance(id) << "\n";
    }
    return 0;
}

void add_run_options(CLI::App* sub, RunConfig& cfg, std::string& genus_text,
                     std::string& sides_text, std::string& checks_text, std::string& mode_text,
                     std::string& config_path) {
    sub->add_option("--genus", genus_text, "genus range, G or A..B (default 2..8)");
    sub->add_option("--sides", sides_text, "comma list of dolbeault,betti");
    sub->add_option("--checks", checks_text, "comma list of checks (default all)");
    sub->add_option("--mode", mode_text, "closed_form or enumerate");
    sub->add_option("--format", cfg.format, "table or json");
    sub->add_flag("--show-provenance", cfg.show_provenance, "print derivation notes");
    sub->add_flag("--no-timing", cfg.no_timing, "zero elapsed fields for reproducible output");
    sub->add_option("--enumerate-bound", cfg.enumerate_bound,
                    "largest 2g enumerated in enumerate mode (default 24)");
    sub->add_option("--config", config_path,
                    "key-value config file (default: $" + std::string(kConfigEnvVar) + ")");
}

void resolve_run_config(CLI::App* sub, RunConfig& cfg, const std::string& genus_text,
                        const std::string& sides_text, const std::string& checks_text,
                        const std::string& mode_text, const std::string& config_path) {
    if (!genus_text.empty()) {
        std::tie(cfg.genus_min, cfg.genus_max) = parse_genus_range(genus_text);
    }
    if (!sides_text.empty()) {
        cfg.sides.clear();
        for (const auto& s : split_csv(sides_text)) cfg.sides.push_back(side_from_string(s));
    }
    if (!checks_text.empty()) cfg.checks = split_csv(checks_text);
    if (!mode_text.empty()) cfg.mode = sum_mode_from_string(mode_text);

    std::string path = config_path;
    if (path.empty()) {
        if (const char* env = std::getenv(kConfigEnvVar)) path = env;
    }
    if (!path.empty()) {
        std::map<std::string, bool> overridden = {
            {"genus_min", !genus_text.empty()},   {"genus_max", !genus_text.empty()},
            {"sides", !sides_text.empty()},       {"checks", !checks_text.empty()},
            {"mode", !mode_text.empty()},         {"format", sub->count("--format") > 0},
            {"show_provenance", sub->count("--show-provenance") > 0},
            {"enumerate_bound", sub->count("--enumerate-bound") > 0},
        };
        apply_config_file(cfg, load_config_file(path), overridden);
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact verification of SL2/PGL2 mirror symmetry E-polynomial identities"};
    app.require_subcommand(1);

    RunConfig verify_cfg, sweep_cfg;
    std::string v_genus, v_sides, v_checks, v_mode, v_config;
    std::string s_genus, s_sides, s_checks, s_mode, s_config;

    CLI::App* verify = app.add_subcommand("verify", "run identity checks over a genus range");
    add_run_options(verify, verify_cfg, v_genus, v_sides, v_checks, v_mode, v_config);

    CLI::App* sweep = app.add_subcommand("sweep", "summary table of all checks");
    add_run_options(sweep, sweep_cfg, s_genus, s_sides, s_checks, s_mode, s_config);

    ShowOptions show_opt;
    CLI::App* show = app.add_subcommand("show", "print one catalog formula");
    show->add_option("formula", show_opt.formula, "formula identifier (see docs/formulas.md)")
        ->required();
    show->add_option("--genus", show_opt.genus, "genus (default 2)");
    show->add_option("--r", show_opt.rank, "rank for total_dimension (default 2)");
    show->add_flag("--trivial", show_opt.trivial_element,
                   "evaluate fermionic_shift at the trivial element");
    show->add_option("--format", show_opt.format, "pretty, canonical or json");
    show->add_flag("--show-provenance", show_opt.show_provenance, "print the derivation note");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (app.got_subcommand(verify)) {
            resolve_run_config(verify, verify_cfg, v_genus, v_sides, v_checks, v_mode, v_config);
            return cmd_verify(verify_cfg);
        }
        if (app.got_subcommand(sweep)) {
            resolve_run_config(sweep, sweep_cfg, s_genus, s_sides, s_checks, s_mode, s_config);
            return cmd_sweep(sweep_cfg);
        }
        if (app.got_subcommand(show)) {
            if (show_opt.format != "pretty" && show_opt.format != "canonical" &&
                show_opt.format != "json") {
                std::cerr << "error: --format must be pretty, canonical or json\n";
                return 2;
            }
            return cmd_show(show_opt);
        }
    } catch (const CLI::ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const EnumerationBoundError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
