#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "soficheck/builtin.hpp"
#include "soficheck/coded.hpp"
#include "soficheck/core.hpp"
#include "soficheck/criteria.hpp"
#include "soficheck/probe.hpp"
#include "soficheck/report.hpp"
#include "soficheck/sofic.hpp"
#include "soficheck/updown.hpp"

namespace {

using namespace soficheck;

struct Output {
    std::string format = "csv"; // csv | json
    std::string path;           // empty = stdout

    void emit(const std::string& text) const {
        if (path.empty()) {
            std::cout << text;
        } else {
            std::ofstream out(path, std::ios::binary);
            if (!out) throw ValidationError("cannot write output file: " + path);
            out << text;
        }
    }

    void emit_rows(const std::vector<report::CountRow>& rows) const {
        if (format == "json") {
            emit(report::to_json(rows).dump(2) + "\n");
        } else {
            emit(report::to_csv(rows));
        }
    }

    void emit_criteria(const std::vector<criteria::CriterionReport>& reports) const {
        if (format == "json") {
            nlohmann::ordered_json arr = nlohmann::ordered_json::array();
            for (const auto& r : reports) arr.push_back(r.to_json());
            emit(arr.dump(2) + "\n");
        } else {
            std::string out = "criterion,n,verdict,citation,quantities\n";
            for (const auto& r : reports) {
                out += r.criterion + "," + std::to_string(r.n) + "," +
                       criteria::to_string(r.verdict) + ",\"" + r.citation + "\",\"";
                std::string q = r.quantities.dump();
                for (char c : q) {
                    if (c == '"') out += '"';
                    out += c;
                }
                out += "\"\n";
            }
            emit(out);
        }
    }
};

std::string file_basename(const std::string& path) {
    auto slash = path.find_last_of('/');
    return slash == std::string::npos ? path : path.substr(slash + 1);
}

LabeledGraph load_graph(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ValidationError("cannot open graph file: " + path);
    std::stringstream buf;
    buf << in.rdbuf();
    return essentialize(parse_presentation(buf.str()));
}

probe::ProfileSide to_probe_side(const std::string& side) {
    if (side == "followers") return probe::ProfileSide::follower;
    if (side == "predecessors") return probe::ProfileSide::predecessor;
    return probe::ProfileSide::extender;
}

std::string row_side(const std::string& report) {
    if (report == "followers") return "follower";
    if (report == "predecessors") return "predecessor";
    if (report == "extenders") return "extender";
    return report;
}

// Depth-limited tables for any oracle-backed system.
std::vector<report::CountRow> oracle_rows(const LanguageOracle& o, const std::string& system,
                                          const std::string& rep, std::size_t max_n,
                                          std::size_t depth, std::size_t budget) {
    std::vector<report::CountRow> rows;
    for (std::size_t n = 1; n <= max_n; ++n) {
        report::CountRow row;
        row.system = system;
        row.n = n;
        row.side = row_side(rep);
        if (rep == "complexity") {
            row.exact = true;
            row.count = enumerate_language(o, n).size();
        } else {
            row.exact = false;
            row.count = probe::classify(o, n, to_probe_side(rep), depth, budget).count;
            row.bound_note = "depth-" + std::to_string(depth) + " lower bound";
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

std::vector<criteria::CriterionReport> criteria_reports(const criteria::ExactClassView& view,
                                                        const LanguageOracle& o,
                                                        std::size_t max_n,
                                                        std::optional<bool> sofic_known) {
    std::vector<criteria::CriterionReport> reports;
    std::vector<std::size_t> counts;
    for (std::size_t n = 1; n <= max_n; ++n) {
        counts.push_back(view.count_at(n));
        reports.push_back(criteria::check_unions(view, n));
        reports.push_back(criteria::check_cumulative(view, n));
        reports.push_back(criteria::check_log(view.count_at(n), n));
        reports.push_back(criteria::check_full_shift(o, view.count_at(n), n));
    }
    reports.push_back(criteria::word_complexity_check(o, max_n));
    reports.push_back(criteria::conjecture_probe(counts, sofic_known));
    return reports;
}

int run_graph(const std::string& file, std::size_t max_n, std::size_t depth,
              const std::string& rep, const Output& out, std::size_t budget) {
    LabeledGraph g = load_graph(file);
    std::string system = file_basename(file);
    LanguageOracle o = graph_oracle(g);

    if (rep == "criteria") {
        auto view = criteria::view_from_graph(g, max_n, system);
        out.emit_criteria(criteria_reports(view, o, max_n, true));
        return 0;
    }
    std::vector<report::CountRow> rows;
    for (std::size_t n = 1; n <= max_n; ++n) {
        report::CountRow row;
        row.system = system;
        row.n = n;
        row.side = row_side(rep);
        if (rep == "followers" || rep == "predecessors") {
            row.exact = true;
            row.count = class_table(g, n, rep == "followers" ? Side::follower
                                                             : Side::predecessor).count();
        } else if (rep == "complexity") {
            row.exact = true;
            row.count = enumerate_language(o, n).size();
        } else { // extenders: no exact engine, depth-limited lower bound
            row.exact = false;
            row.count = probe::classify(o, n, probe::ProfileSide::extender, depth, budget).count;
            row.bound_note = "depth-" + std::to_string(depth) + " lower bound";
        }
        rows.push_back(std::move(row));
    }
    out.emit_rows(rows);
    return 0;
}

int run_updown(std::size_t max_n, std::size_t cap, std::size_t depth, const std::string& rep,
               bool witnesses, bool closed_form_check, const Output& out, std::size_t budget) {
    updown::TableOptions opts;
    opts.cap = cap;

    if (rep == "criteria") {
        auto view = criteria::view_from_updown(max_n, cap);
        out.emit_criteria(criteria_reports(view, updown::oracle(), max_n, std::nullopt));
        return 0;
    }
    if (witnesses) {
        std::string text = "n,word,initial_set\n";
        for (std::size_t n = 7; n <= max_n; ++n) {
            for (const auto& w : updown::witness_set(n)) {
                text += std::to_string(n) + "," + w.str() + "," +
                        updown::initial_set(w).str() + "\n";
            }
        }
        out.emit(text);
        return 0;
    }
    if (closed_form_check) {
        std::string text = "n,word,iterated,closed_form,agree\n";
        for (std::size_t n = 7; n <= max_n; ++n) {
            std::size_t v_len = n / 2;
            for (const auto& w : updown::witness_set(n)) {
                Word v = w.prefix(v_len);
                auto seed = updown::initial_set(w.suffix(w.size() - v_len));
                auto iterated = updown::initial_set(w);
                auto closed = updown::closed_form(v, seed.lo, seed.hi);
                text += std::to_string(n) + "," + w.str() + "," + iterated.str() + "," +
                        closed.str() + "," + (iterated == closed ? "true" : "false") + "\n";
            }
        }
        out.emit(text);
        return 0;
    }

    std::vector<report::CountRow> rows;
    for (std::size_t n = 1; n <= max_n; ++n) {
        report::CountRow row;
        row.system = "updown";
        row.n = n;
        row.side = row_side(rep);
        if (rep == "followers") {
            row.exact = true;
            row.count = updown::follower_table(n, opts).count;
        } else if (rep == "predecessors") {
            row.exact = true;
            row.count = updown::predecessor_table(n, opts).count;
        } else if (rep == "complexity") {
            row.exact = true;
            row.count = updown::language(n).size();
        } else {
            row.exact = false;
            row.count = probe::classify(updown::oracle(), n, probe::ProfileSide::extender,
                                        depth, budget).count;
            row.bound_note = "depth-" + std::to_string(depth) + " lower bound";
        }
        rows.push_back(std::move(row));
    }
    out.emit_rows(rows);
    return 0;
}

int run_oracle_check(const std::string& file, std::size_t max_n, std::size_t depth,
                     const Output& out, std::size_t budget) {
    LabeledGraph g = load_graph(file);
    std::string system = file_basename(file);
    LanguageOracle o = graph_oracle(g);

    bool all_match = true;
    std::vector<report::CountRow> rows;
    for (std::size_t n = 1; n <= max_n; ++n) {
        for (Side side : {Side::follower, Side::predecessor}) {
            std::size_t exact = class_table(g, n, side).count();
            auto pside = side == Side::follower ? probe::ProfileSide::follower
                                                : probe::ProfileSide::predecessor;
            std::size_t bound = probe::classify(o, n, pside, depth, budget).count;
            bool match = exact == bound;
            all_match = all_match && match;

            report::CountRow row;
            row.system = system;
            row.n = n;
            row.side = side == Side::follower ? "follower" : "predecessor";
            row.exact = true;
            row.count = exact;
            row.bound_note = match ? "depth-" + std::to_string(depth) + " agrees"
                                   : "MISMATCH: depth-" + std::to_string(depth) +
                                         " bound " + std::to_string(bound);
            rows.push_back(std::move(row));
        }
    }
    out.emit_rows(rows);
    return all_match ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact follower/predecessor/extender-set analysis for subshifts"};
    app.require_subcommand(1);

    std::string file, rep = "followers", gaps, gap_rule, separator = "c";
    std::size_t max_n = 6, depth = 4, cap = 12, budget = probe::kDefaultBudget;
    long long cutoff = 64;
    bool criteria_flag = false, witnesses = false, closed_form_check = false;
    Output out;

    auto add_common = [&](CLI::App* cmd, bool with_depth) {
        cmd->add_option("--max-n", max_n, "largest word length analyzed");
        if (with_depth) cmd->add_option("--depth", depth, "extension-profile depth");
        cmd->add_option("--format", out.format, "csv or json")
            ->check(CLI::IsMember({"csv", "json"}));
        cmd->add_option("--out", out.path, "output file (default stdout)");
        cmd->add_option("--budget", budget, "membership-call budget per profile batch");
    };
    auto add_report = [&](CLI::App* cmd, std::vector<std::string> choices) {
        cmd->add_option("--report", rep, "table to produce")
            ->check(CLI::IsMember(choices));
    };

    auto* graph_cmd = app.add_subcommand("graph", "exact tables and criteria for a labeled-graph file");
    graph_cmd->add_option("--file", file, "graph file")->required();
    add_common(graph_cmd, true);
    add_report(graph_cmd, {"followers", "predecessors", "extenders", "complexity", "criteria"});
    graph_cmd->add_flag("--criteria", criteria_flag, "shorthand for --report criteria");

    auto* updown_cmd = app.add_subcommand("updown", "exact tables and witnesses for the up/down example");
    add_common(updown_cmd, true);
    add_report(updown_cmd, {"followers", "predecessors", "extenders", "complexity", "criteria"});
    updown_cmd->add_option("--cap", cap, "exhaustive-enumeration length cap");
    updown_cmd->add_flag("--witnesses", witnesses, "emit the predecessor witness words");
    updown_cmd->add_flag("--closed-form-check", closed_form_check,
                         "verify the interval closed form against backward iteration");

    auto* sgap_cmd = app.add_subcommand("sgap", "depth-limited tables for an S-gap shift");
    sgap_cmd->add_option("--gaps", gaps, "explicit gap list, e.g. 1,2,5");
    sgap_cmd->add_option("--gap-rule", gap_rule, "named gap rule, e.g. powers-of-2");
    sgap_cmd->add_option("--cutoff", cutoff, "search cutoff for gap predicates");
    add_common(sgap_cmd, true);
    add_report(sgap_cmd, {"followers", "predecessors", "extenders", "complexity"});

    auto* coded_cmd = app.add_subcommand("coded", "depth-limited tables for a coded system over a sofic base");
    coded_cmd->add_option("--file", file, "base graph file")->required();
    coded_cmd->add_option("--separator", separator, "fresh separator letter");
    add_common(coded_cmd, true);
    add_report(coded_cmd, {"followers", "predecessors", "extenders", "complexity"});

    auto* check_cmd = app.add_subcommand("oracle-check", "cross-validate exact tables against depth-d profiles");
    check_cmd->add_option("--file", file, "graph file")->required();
    add_common(check_cmd, true);

    CLI11_PARSE(app, argc, argv);

    try {
        if (criteria_flag) rep = "criteria";
        if (graph_cmd->parsed()) {
            return run_graph(file, max_n, depth, rep, out, budget);
        }
        if (updown_cmd->parsed()) {
            return run_updown(max_n, cap, depth, rep, witnesses, closed_form_check, out, budget);
        }
        if (sgap_cmd->parsed()) {
            if (gaps.empty() == gap_rule.empty()) {
                std::cerr << "error: exactly one of --gaps and --gap-rule is required\n";
                return 1;
            }
            coded::SGapSpec spec;
            std::string system;
            if (!gaps.empty()) {
                std::vector<long long> values;
                std::stringstream ss(gaps);
                std::string tok;
                while (std::getline(ss, tok, ',')) values.push_back(std::stoll(tok));
                spec = coded::sgap_from_list(values);
                system = "sgap{" + gaps + "}";
            } else {
                spec = coded::sgap_rule(gap_rule, cutoff);
                system = "sgap:" + gap_rule;
            }
            out.emit_rows(oracle_rows(coded::oracle(coded::sgap(spec)), system, rep,
                                      max_n, depth, budget));
            return 0;
        }
        if (coded_cmd->parsed()) {
            auto sys = coded::from_sofic(load_graph(file), separator);
            out.emit_rows(oracle_rows(coded::oracle(sys),
                                      "coded:" + file_basename(file) + "+" + separator,
                                      rep, max_n, depth, budget));
            return 0;
        }
        if (check_cmd->parsed()) {
            return run_oracle_check(file, max_n, depth, out, budget);
        }
    } catch (const BudgetError& e) {
        std::cerr << "budget error: " << e.what() << "\n";
        return 2;
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 1;
    } catch (const ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
