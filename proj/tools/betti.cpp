// betti: Betti tables of determinantal thickening ideals, by closed formula
// and by an exact Koszul-homology oracle.

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <filesystem>
#include <functional>
#include <iostream>
#include <limits>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <tuple>
#include <vector>

#include "rectsyz/betti_formula.hpp"
#include "rectsyz/koszul.hpp"
#include "rectsyz/result_cache.hpp"
#include "rectsyz/serialize.hpp"

using namespace rectsyz;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitMismatch = 1;
constexpr int kExitInvalid = 2;
constexpr int kExitBudget = 3;

struct JobSpec {
    int a = 0, b = 0, m = 0, n = 0;
    std::optional<int> max_i;
    std::optional<int> max_j;
    std::string format = "pretty";
    bool equivariant = false;
    std::string cache_dir;
    long long cell_budget = 50'000'000;
    int threads = 0;

    KoszulOptions koszul_options() const { return {cell_budget, threads}; }

    // The formula and the oracle both assume m >= n; transposing the matrix
    // transposes every label and leaves dimensions unchanged.
    void normalize() {
        if (m < n) {
            std::swap(m, n);
            std::cerr << "note: normalized to m >= n by transposing (labels swap factors)\n";
        }
        if (a < 1 || b < 1 || n < 1) throw std::invalid_argument("a, b, m, n must be positive");
        if (a > n) throw std::invalid_argument("a must be at most min(m,n)");
        if ((max_i && *max_i < 1) || (max_j && *max_j < 1))
            throw std::invalid_argument("window bounds must be positive");
        if (cell_budget < 1) throw std::invalid_argument("cell budget must be positive");
    }

    int window_max_j() const { return max_j.value_or(a * b + 6); }
    int window_max_i() const { return max_i.value_or(std::max(0, window_max_j() - a * b)); }

    std::optional<std::filesystem::path> cache_path() const {
        if (!cache_dir.empty()) return std::filesystem::path(cache_dir);
        if (const char* env = std::getenv("BETTI_CACHE_DIR"); env && *env)
            return std::filesystem::path(env);
        return std::nullopt;
    }
};

std::string format_label(const SchurLabel& label) {
    auto one = [](const Partition& p) {
        std::string out;
        for (int i = 0; i < p.length(); ++i) {
            if (i) out += ',';
            out += std::to_string(p.part(i));
        }
        return "(" + out + ")";
    };
    return one(label.row) + "x" + one(label.col);
}

std::string csv_parts(const Partition& p) {
    std::string out;
    for (int i = 0; i < p.length(); ++i) {
        if (i) out += ';';
        out += std::to_string(p.part(i));
    }
    return out;
}

// Betti-table grid: rows indexed by j-i, columns by i, "-" for zeros.
void print_grid(std::ostream& os, int max_i, int min_strand, int max_strand,
                const std::function<std::string(int, int)>& cell) {
    std::vector<std::vector<std::string>> grid;
    std::vector<std::size_t> widths(static_cast<std::size_t>(max_i) + 2, 1);
    for (int strand = min_strand; strand <= max_strand; ++strand) {
        std::vector<std::string> row;
        row.push_back(std::to_string(strand) + ":");
        for (int i = 0; i <= max_i; ++i) {
            std::string text = cell(i, strand + i);
            row.push_back(text.empty() ? "-" : text);
        }
        for (std::size_t c = 0; c < row.size(); ++c) widths[c] = std::max(widths[c], row[c].size());
        grid.push_back(std::move(row));
    }
    std::vector<std::string> header{""};
    for (int i = 0; i <= max_i; ++i) header.push_back(std::to_string(i));
    for (std::size_t c = 0; c < header.size(); ++c) widths[c] = std::max(widths[c], header[c].size());

    auto emit = [&](const std::vector<std::string>& row) {
        for (std::size_t c = 0; c < row.size(); ++c) {
            os << (c ? "  " : "") << std::string(widths[c] - row[c].size(), ' ') << row[c];
        }
        os << '\n';
    };
    emit(header);
    for (const auto& row : grid) emit(row);
}

void print_betti_table(std::ostream& os, const BettiTable& table) {
    if (table.empty()) {
        os << "(empty table)\n";
        return;
    }
    int min_strand = std::numeric_limits<int>::max(), max_strand = 0, max_i = 0;
    for (const auto& [key, value] : table.entries()) {
        min_strand = std::min(min_strand, key.second - key.first);
        max_strand = std::max(max_strand, key.second - key.first);
        max_i = std::max(max_i, key.first);
    }
    print_grid(os, max_i, min_strand, max_strand, [&](int i, int j) {
        const long long v = table.entry(i, j);
        return v == 0 ? std::string{} : std::to_string(v);
    });
}

void print_equivariant_table(std::ostream& os, const EquivariantPolynomial& poly) {
    if (poly.is_zero()) {
        os << "(zero polynomial)\n";
        return;
    }
    int min_strand = std::numeric_limits<int>::max(), max_strand = 0, max_i = 0;
    for (const auto& term : poly.terms()) {
        min_strand = std::min(min_strand, term.zdeg - term.wdeg);
        max_strand = std::max(max_strand, term.zdeg - term.wdeg);
        max_i = std::max(max_i, term.wdeg);
    }
    print_grid(os, max_i, min_strand, max_strand, [&](int i, int j) {
        std::string text;
        for (const auto& term : poly.terms()) {
            if (term.wdeg != i || term.zdeg != j) continue;
            if (!text.empty()) text += " + ";
            if (term.mult != 1) text += std::to_string(term.mult) + "*";
            text += format_label(term.label);
        }
        return text;
    });
}

void emit_table(const JobSpec& spec, const BettiTable& table) {
    if (spec.format == "json") {
        std::cout << to_json(table).dump(2) << '\n';
    } else if (spec.format == "csv") {
        std::cout << "i,j,value\n";
        for (const auto& [key, value] : table.entries())
            std::cout << key.first << ',' << key.second << ',' << value << '\n';
    } else {
        print_betti_table(std::cout, table);
    }
}

void emit_equivariant(const JobSpec& spec, const EquivariantPolynomial& poly) {
    if (spec.format == "json") {
        std::cout << to_json(poly).dump(2) << '\n';
    } else if (spec.format == "csv") {
        std::cout << "i,j,row,col,mult\n";
        for (const auto& term : poly.terms())
            std::cout << term.wdeg << ',' << term.zdeg << ',' << csv_parts(term.label.row) << ','
                      << csv_parts(term.label.col) << ',' << term.mult << '\n';
    } else {
        print_equivariant_table(std::cout, poly);
    }
}

BettiTable clip_to_window(const BettiTable& table, int max_i, int max_j) {
    BettiTable out;
    for (const auto& [key, value] : table.entries())
        if (key.first <= max_i && key.second <= max_j) out.add(key.first, key.second, value);
    return out;
}

BettiTable formula_table(const JobSpec& spec) {
    return evaluate_dimensions(betti_polynomial(spec.a, spec.b, spec.m, spec.n), spec.m, spec.n);
}

BettiTable oracle_table(const JobSpec& spec) {
    const int max_i = spec.window_max_i();
    const int max_j = spec.window_max_j();

    std::optional<ResultCache> cache;
    if (auto dir = spec.cache_path()) cache.emplace(*dir, spec.a, spec.b, spec.m, spec.n);

    BettiTable table;
    bool all_cached = cache.has_value();
    if (cache) {
        for (int j = 0; j <= max_j && all_cached; ++j)
            for (int i = 0; i <= max_i && all_cached; ++i) {
                if (auto hit = cache->betti(i, j))
                    table.add(i, j, *hit);
                else
                    all_cached = false;
            }
    }
    if (!cache || !all_cached) {
        ThickeningIdeal ideal(spec.a, spec.b, spec.m, spec.n);
        table = koszul_betti_table(ideal, max_i, max_j, spec.koszul_options());
        if (cache) {
            for (int j = 0; j <= max_j; ++j) {
                for (int i = 0; i <= max_i; ++i) cache->store_betti(i, j, table.entry(i, j));
                cache->store_hilbert(j, ideal.hilbert_function(j));
            }
        }
    }
    if (cache && !cache->save())
        std::cerr << "warning: could not write the result cache at " << cache->file_path() << '\n';
    return table;
}

int cmd_formula(JobSpec& spec) {
    spec.normalize();
    const EquivariantPolynomial poly = betti_polynomial(spec.a, spec.b, spec.m, spec.n);
    if (spec.equivariant) {
        emit_equivariant(spec, poly);
        return kExitOk;
    }
    BettiTable table = evaluate_dimensions(poly, spec.m, spec.n);
    if (spec.max_i || spec.max_j)
        table = clip_to_window(table, spec.max_i.value_or(table.max_i()),
                               spec.max_j.value_or(table.max_j()));
    emit_table(spec, table);
    return kExitOk;
}

int cmd_oracle(JobSpec& spec) {
    spec.normalize();
    if (spec.equivariant)
        throw std::invalid_argument("the oracle computes dimensions only; --equivariant needs formula mode");
    emit_table(spec, oracle_table(spec));
    return kExitOk;
}

int cmd_compare(JobSpec& spec) {
    spec.normalize();
    if (spec.equivariant)
        throw std::invalid_argument("compare prints numeric tables; --equivariant needs formula mode");
    const int max_i = spec.window_max_i();
    const int max_j = spec.window_max_j();
    const BettiTable formula = clip_to_window(formula_table(spec), max_i, max_j);
    const BettiTable oracle = oracle_table(spec);

    std::vector<std::tuple<int, int, long long, long long>> diffs;
    for (int j = 0; j <= max_j; ++j)
        for (int i = 0; i <= max_i; ++i)
            if (formula.entry(i, j) != oracle.entry(i, j))
                diffs.emplace_back(i, j, formula.entry(i, j), oracle.entry(i, j));

    if (spec.format == "json") {
        nlohmann::json out;
        out["formula"] = to_json(formula);
        out["oracle"] = to_json(oracle);
        out["match"] = diffs.empty();
        out["diffs"] = nlohmann::json::array();
        for (const auto& [i, j, f, o] : diffs)
            out["diffs"].push_back({{"i", i}, {"j", j}, {"formula", f}, {"oracle", o}});
        std::cout << out.dump(2) << '\n';
    } else if (spec.format == "csv") {
        std::cout << "engine,i,j,value\n";
        for (const auto& [key, value] : formula.entries())
            std::cout << "formula," << key.first << ',' << key.second << ',' << value << '\n';
        for (const auto& [key, value] : oracle.entries())
            std::cout << "oracle," << key.first << ',' << key.second << ',' << value << '\n';
    } else {
        std::cout << "formula (window i <= " << max_i << ", j <= " << max_j << "):\n";
        print_betti_table(std::cout, formula);
        std::cout << "oracle:\n";
        print_betti_table(std::cout, oracle);
        if (diffs.empty()) {
            std::cout << "MATCH\n";
        } else {
            std::cout << "MISMATCH at " << diffs.size() << " entries:\n";
            for (const auto& [i, j, f, o] : diffs)
                std::cout << "  (i=" << i << ", j=" << j << ") formula=" << f << " oracle=" << o
                          << '\n';
        }
    }
    return diffs.empty() ? kExitOk : kExitMismatch;
}

Partition parse_partition(const std::string& text) {
    if (text.empty() || text == "-" || text == "()" || text == "[]") return Partition{};
    std::vector<int> parts;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) parts.push_back(std::stoi(item));
    return Partition(parts);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Betti tables of determinantal thickening ideals"};
    app.require_subcommand(1);

    JobSpec spec;
    auto add_job_flags = [&](CLI::App* cmd, bool oracle_flags) {
        cmd->add_option("-a", spec.a, "rows of the thickened rectangle")->required();
        cmd->add_option("-b", spec.b, "columns of the thickened rectangle")->required();
        cmd->add_option("-m", spec.m, "rows of the matrix of variables")->required();
        cmd->add_option("-n", spec.n, "columns of the matrix of variables")->required();
        cmd->add_option("--max-i", spec.max_i, "largest homological degree");
        cmd->add_option("--max-j", spec.max_j, "largest internal degree");
        cmd->add_option("--format", spec.format, "pretty, json or csv")
            ->check(CLI::IsMember({"pretty", "json", "csv"}));
        cmd->add_flag("--equivariant", spec.equivariant, "print partition-labelled entries");
        if (oracle_flags) {
            cmd->add_option("--cache-dir", spec.cache_dir,
                            "result cache directory (default: $BETTI_CACHE_DIR)");
            cmd->add_option("--cell-budget", spec.cell_budget,
                            "largest matrix (rows x cols) the oracle may eliminate");
            cmd->add_option("--threads", spec.threads, "worker threads (0 = auto)");
        }
    };

    CLI::App* formula = app.add_subcommand("formula", "closed-form Betti table");
    add_job_flags(formula, false);
    CLI::App* oracle = app.add_subcommand("oracle", "Koszul-homology Betti table");
    add_job_flags(oracle, true);
    CLI::App* compare = app.add_subcommand("compare", "run both engines and diff");
    add_job_flags(compare, true);

    std::string gauss_format = "pretty";
    int gauss_r = 0, gauss_s = 0;
    CLI::App* gauss = app.add_subcommand("gauss", "Gauss polynomial of an r x s box");
    gauss->add_option("r", gauss_r, "rows")->required();
    gauss->add_option("s", gauss_s, "columns")->required();
    gauss->add_option("--format", gauss_format)->check(CLI::IsMember({"pretty", "json"}));

    std::string dim_lambda;
    int dim_rank = 0;
    CLI::App* dim = app.add_subcommand("dim", "dimension of an irreducible GL representation");
    dim->add_option("lambda", dim_lambda, "partition, e.g. 3,3")->required();
    dim->add_option("n", dim_rank, "rank of the group")->required();

    int hr_r = 0, hr_s = 0, hr_m = 0, hr_n = 0;
    std::string hrect_format = "pretty";
    CLI::App* hrect = app.add_subcommand("hrect", "strand polynomial of an r x s rectangle");
    hrect->add_option("r", hr_r)->required();
    hrect->add_option("s", hr_s)->required();
    hrect->add_option("m", hr_m)->required();
    hrect->add_option("n", hr_n)->required();
    hrect->add_option("--format", hrect_format)->check(CLI::IsMember({"pretty", "json"}));

    int xh_r = 0, xh_s = 0, xh_m = 0, xh_n = 0, xh_k = 0;
    std::string xhom_format = "pretty";
    CLI::App* xhom = app.add_subcommand("xhom", "homology summands of a strand complex");
    xhom->add_option("r", xh_r)->required();
    xhom->add_option("s", xh_s)->required();
    xhom->add_option("m", xh_m)->required();
    xhom->add_option("n", xh_n)->required();
    xhom->add_option("k", xh_k)->required();
    xhom->add_option("--format", xhom_format)->check(CLI::IsMember({"pretty", "json"}));

    int hil_dmax = -1;
    std::string hil_format = "pretty";
    CLI::App* hilbert = app.add_subcommand("hilbert", "Hilbert function of the ideal");
    hilbert->add_option("-a", spec.a)->required();
    hilbert->add_option("-b", spec.b)->required();
    hilbert->add_option("-m", spec.m)->required();
    hilbert->add_option("-n", spec.n)->required();
    hilbert->add_option("--dmax", hil_dmax, "largest degree")->required();
    hilbert->add_option("--format", hil_format)->check(CLI::IsMember({"pretty", "json"}));
    hilbert->add_option("--cache-dir", spec.cache_dir);

    CLI::App* pdreg = app.add_subcommand("pdreg", "projective dimension and regularity");
    pdreg->add_option("-a", spec.a)->required();
    pdreg->add_option("-b", spec.b)->required();
    pdreg->add_option("-m", spec.m)->required();
    pdreg->add_option("-n", spec.n)->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitInvalid;
    }

    try {
        if (formula->parsed()) return cmd_formula(spec);
        if (oracle->parsed()) return cmd_oracle(spec);
        if (compare->parsed()) return cmd_compare(spec);
        if (gauss->parsed()) {
            if (gauss_r < 0 || gauss_s < 0) throw std::invalid_argument("box sides must be nonnegative");
            const IntPolynomial p = gauss_polynomial(gauss_r, gauss_s);
            if (gauss_format == "json") {
                nlohmann::json out = nlohmann::json::object();
                for (auto [e, c] : p.coeffs()) out[std::to_string(e)] = c;
                std::cout << out.dump() << '\n';
            } else {
                std::cout << p.to_string() << '\n';
            }
            return kExitOk;
        }
        if (dim->parsed()) {
            if (dim_rank < 0) throw std::invalid_argument("rank must be nonnegative");
            std::cout << schur_dim(parse_partition(dim_lambda), dim_rank) << '\n';
            return kExitOk;
        }
        if (hrect->parsed()) {
            if (hr_m < hr_n) {
                std::swap(hr_m, hr_n);
                std::cerr << "note: normalized to m >= n by transposing (labels swap factors)\n";
            }
            const EquivariantPolynomial h = h_rect(hr_r, hr_s, hr_m, hr_n);
            if (hrect_format == "json") {
                std::cout << to_json(h).dump(2) << '\n';
            } else if (h.is_zero()) {
                std::cout << "0\n";
            } else {
                for (const auto& term : h.terms()) {
                    std::cout << format_label(term.label) << " z^" << term.zdeg << " w^" << term.wdeg;
                    if (term.mult != 1) std::cout << " mult=" << term.mult;
                    std::cout << '\n';
                }
            }
            return kExitOk;
        }
        if (xhom->parsed()) {
            const auto summands = x_homology(xh_r, xh_s, xh_m, xh_n, xh_k);
            if (xhom_format == "json") {
                nlohmann::json out = nlohmann::json::array();
                for (const auto& s : summands)
                    out.push_back({{"r", s.rect_r}, {"s", s.rect_s}, {"mult", s.multiplicity}});
                std::cout << out.dump() << '\n';
            } else if (summands.empty()) {
                std::cout << "0\n";
            } else {
                for (const auto& s : summands)
                    std::cout << "I_" << s.rect_r << "x" << s.rect_s << " multiplicity "
                              << s.multiplicity << '\n';
            }
            return kExitOk;
        }
        if (hilbert->parsed()) {
            spec.normalize();
            if (hil_dmax < 0) throw std::invalid_argument("dmax must be nonnegative");
            std::optional<ResultCache> cache;
            if (auto dir = spec.cache_path()) cache.emplace(*dir, spec.a, spec.b, spec.m, spec.n);
            std::optional<ThickeningIdeal> ideal;
            std::map<int, long long> values;
            for (int d = 0; d <= hil_dmax; ++d) {
                if (cache)
                    if (auto hit = cache->hilbert(d)) {
                        values[d] = *hit;
                        continue;
                    }
                if (!ideal) ideal.emplace(spec.a, spec.b, spec.m, spec.n);
                values[d] = ideal->hilbert_function(d);
                if (cache) cache->store_hilbert(d, values[d]);
            }
            if (cache && !cache->save())
                std::cerr << "warning: could not write the result cache at "
                          << cache->file_path() << '\n';
            if (hil_format == "json") {
                nlohmann::json out = nlohmann::json::object();
                for (auto [d, v] : values) out[std::to_string(d)] = v;
                std::cout << out.dump() << '\n';
            } else {
                for (auto [d, v] : values) std::cout << d << ' ' << v << '\n';
            }
            return kExitOk;
        }
        if (pdreg->parsed()) {
            spec.normalize();
            const auto [pd, reg] = proj_dim_and_reg(spec.a, spec.b, spec.m, spec.n);
            std::cout << "pd=" << pd << " reg=" << reg << '\n';
            return kExitOk;
        }
    } catch (const BudgetExceeded& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitBudget;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitInvalid;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitInvalid;
    }
    return kExitInvalid;
}
