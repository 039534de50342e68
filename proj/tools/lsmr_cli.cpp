// lsmr: model reduction and simulation for continuous-time linear switched
// systems. Subcommands: gen, reduce, simulate, compare, markov, verify.

#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "lsmr/generate.hpp"
#include "lsmr/reduce_nice.hpp"
#include "lsmr/simulate.hpp"

namespace {

using namespace lsmr;

std::vector<double> parse_dwell(const std::string& text, int d) {
    // Accepts "0.4,0.1" or "1=0.4,2=0.1".
    std::vector<double> dwell(static_cast<size_t>(d), 0.1);
    std::vector<bool> set(static_cast<size_t>(d), false);
    std::stringstream ss(text);
    std::string item;
    int pos = 0;
    while (std::getline(ss, item, ',')) {
        auto eq = item.find('=');
        if (eq != std::string::npos) {
            const int q = std::stoi(item.substr(0, eq));
            if (q < 1 || q > d) throw CLI::ValidationError("--min-dwell: mode out of range");
            dwell[static_cast<size_t>(q - 1)] = std::stod(item.substr(eq + 1));
            set[static_cast<size_t>(q - 1)] = true;
        } else {
            if (pos >= d) throw CLI::ValidationError("--min-dwell: too many values");
            dwell[static_cast<size_t>(pos)] = std::stod(item);
            set[static_cast<size_t>(pos)] = true;
            ++pos;
        }
    }
    for (size_t q = 0; q < set.size(); ++q)
        if (!set[q]) dwell[q] = dwell[0];
    return dwell;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_json(const nlohmann::json& j, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << j.dump(2) << "\n";
}

// Finite selections sampled from a language family, for verification of
// automaton-driven reductions. Depth cap: n * |S| (rank stabilization).
NiceColumnSelection enumerate_columns(const Lss& sys, const ColumnLanguages& langs) {
    NiceColumnSelection sel;
    if (langs.has_x0) {
        const int cap = sys.n * langs.x0_language.state_count;
        for (const Word& w : accepted_words(langs.x0_language, sys.D, std::min(cap, 8)))
            sel.x0_words.insert(w);
    }
    for (const auto& [idx, a] : langs.per_index) {
        const int cap = std::min(sys.n * a.state_count, 8);
        for (const Word& w : accepted_words(a, sys.D, cap))
            sel.column_entries.insert({w, idx.first, idx.second});
    }
    return sel;
}

NiceRowSelection enumerate_rows(const Lss& sys, const RowLanguages& langs) {
    NiceRowSelection sel;
    for (const auto& [idx, a] : langs.per_index) {
        const int cap = std::min(sys.n * a.state_count, 8);
        for (const Word& v : accepted_words(a, sys.D, cap))
            sel.row_entries.insert({v, idx.first, idx.second});
    }
    return sel;
}

int cmd_gen(int n, int d, int m, int p, const std::string& rho_text, std::uint64_t seed,
            const std::string& out) {
    std::vector<double> rho;
    std::stringstream ss(rho_text);
    std::string item;
    while (std::getline(ss, item, ',')) rho.push_back(std::stod(item));
    if (rho.empty()) rho.push_back(1.0);
    const Lss sys = random_lss(n, d, m, p, rho, seed);
    save_lss(sys, out);
    std::cout << "wrote " << out << " (n=" << n << ", D=" << d << ")\n";
    return 0;
}

int cmd_reduce(const std::string& model, const std::string& method, int n_depth,
               const std::string& mode_str, const std::string& selection_path,
               const std::string& upsilon_str, const std::string& side_str, const std::string& out,
               const std::string& report_path) {
    const Lss sys = load_lss(model);
    nlohmann::json rep_json;
    rep_json["method"] = method;
    ReductionReport rep;
    double markov_err = -1;

    try {
        if (method == "n-match") {
            rep = reduce(sys, n_depth, mode_from_string(mode_str));
            rep_json["N"] = n_depth;
            rep_json["mode"] = mode_str;
            rep_json["matched_depth"] = rep.matched_depth;
            markov_err = check_partial_realization(sys, rep.reduced, rep.matched_depth);
        } else if (method == "nice") {
            const std::string text = read_file(selection_path);
            const auto j = nlohmann::json::parse(text);
            rep_json["selection"] = selection_path;
            if (j.contains("rows")) {
                const auto sel = row_selection_from_json(text);
                auto errs = validate_nice(sel);
                if (!errs.empty()) throw std::invalid_argument("selection is not nice: " + errs[0]);
                rep = reduce_alpha(sys, extract_languages(sel));
                markov_err = check_selection(sys, rep.reduced, sel);
            } else {
                const auto sel = column_selection_from_json(text);
                auto errs = validate_nice(sel);
                if (!errs.empty()) throw std::invalid_argument("selection is not nice: " + errs[0]);
                rep = reduce_beta(sys, extract_languages(sel));
                markov_err = check_selection(sys, rep.reduced, sel);
            }
        } else if (method == "sequence") {
            const Word upsilon = word_from_string(upsilon_str);
            const SelectionSide side =
                side_str == "row" ? SelectionSide::Row : SelectionSide::Column;
            rep = match_sequence(sys, upsilon, side);
            rep_json["upsilon"] = upsilon_str;
            rep_json["side"] = side_str;
            if (side == SelectionSide::Column)
                markov_err = check_selection(sys, rep.reduced,
                                             enumerate_columns(sys, sequence_column_languages(sys, upsilon)));
            else
                markov_err = check_selection(sys, rep.reduced,
                                             enumerate_rows(sys, sequence_row_languages(sys, upsilon)));
        } else {
            std::cerr << "unknown method '" << method << "'\n";
            return 1;
        }
    } catch (const RankFailure& rf) {
        std::cerr << "rank guard failed: rank(V)=" << rf.rank_v << " rank(W)=" << rf.rank_w
                  << " rank(WV)=" << rf.rank_wv << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }

    save_lss(rep.reduced, out);
    rep_json["dim_original"] = sys.n;
    rep_json["dim_reduced"] = rep.reduced.n;
    rep_json["rank_v"] = rep.rank_v;
    rep_json["rank_w"] = rep.rank_w;
    rep_json["rank_wv"] = rep.rank_wv;
    rep_json["max_markov_error"] = markov_err;
    if (!report_path.empty()) write_json(rep_json, report_path);
    std::cout << std::setprecision(17) << "reduced to dim " << rep.reduced.n
              << ", max matched-parameter error " << markov_err << "\n";
    return 0;
}

int cmd_simulate(const std::string& model, double horizon, double dt, const std::string& dwell_text,
                 std::uint64_t seed, const std::string& input_kind, const std::string& out,
                 const std::string& switching_out) {
    const Lss sys = load_lss(model);
    const auto dwell = parse_dwell(dwell_text, sys.D);
    const SwitchingSequence mu = random_switching(sys.D, horizon, dwell, seed);
    const SampledSignal u = input_kind == "zero" ? zero_input(sys.m, horizon, dt)
                                                 : white_noise_input(sys.m, horizon, dt, seed + 1);
    const SampledSignal y = simulate(sys, mu, u);
    save_signal_csv(y, out);
    if (!switching_out.empty()) {
        std::ofstream sw(switching_out);
        sw << "mode,duration\n" << std::setprecision(17);
        for (const auto& seg : mu.segments) sw << seg.mode << "," << seg.duration << "\n";
    }
    std::cout << "wrote " << out << " (" << y.size() << " samples)\n";
    return 0;
}

int cmd_compare(const std::string& model, const std::string& reduced_path, int seeds, double horizon,
                double dt, const std::string& dwell_text, std::uint64_t seed0,
                const std::string& out_prefix, int first_mode) {
    const Lss sys = load_lss(model);
    const Lss red = load_lss(reduced_path);
    if (sys.m != red.m || sys.p != red.p || sys.D != red.D)
        throw std::runtime_error("compare: model signatures differ");
    const auto dwell = parse_dwell(dwell_text, sys.D);

    std::ofstream runs(out_prefix + "_bfr.csv");
    runs << "seed,bfr\n" << std::setprecision(17);
    double sum = 0, best = 0, worst = 100;
    int done = 0;
    for (int k = 0; k < seeds; ++k) {
        const std::uint64_t seed = seed0 + static_cast<std::uint64_t>(k);
        SwitchingSequence mu = random_switching(sys.D, horizon, dwell, seed);
        if (first_mode >= 1) {
            // Re-draw until the requested first operating mode comes up.
            std::uint64_t bump = 1000003;
            while (mu.segments.front().mode != first_mode)
                mu = random_switching(sys.D, horizon, dwell, seed + (bump += 1000003));
        }
        const SampledSignal u = white_noise_input(sys.m, horizon, dt, seed * 2 + 1);
        const SampledSignal y = simulate(sys, mu, u);
        const SampledSignal ybar = simulate(red, mu, u);
        const double fit = bfr(y, ybar);
        runs << seed << "," << fit << "\n";
        sum += fit;
        best = std::max(best, fit);
        worst = std::min(worst, fit);
        ++done;
        if (k == 0) {
            save_signal_csv(y, out_prefix + "_y.csv");
            save_signal_csv(ybar, out_prefix + "_ybar.csv");
        }
    }
    const double mean = done > 0 ? sum / done : 0;
    nlohmann::json metrics;
    metrics["runs"] = done;
    metrics["mean_bfr"] = mean;
    metrics["best_bfr"] = best;
    metrics["worst_bfr"] = worst;
    write_json(metrics, out_prefix + "_metrics.json");
    std::cout << std::fixed << std::setprecision(4) << "BFR over " << done << " runs: mean " << mean
              << "%, best " << best << "%, worst " << worst << "%\n";
    return 0;
}

int cmd_markov(const std::string& model, int n_depth, const std::string& out) {
    const Lss sys = load_lss(model);
    const auto params = markov_parameters_up_to(sys, n_depth);
    nlohmann::json j;
    for (const auto& [w, mat] : params) {
        nlohmann::json rows = nlohmann::json::array();
        for (Eigen::Index i = 0; i < mat.rows(); ++i) {
            nlohmann::json row = nlohmann::json::array();
            for (Eigen::Index c = 0; c < mat.cols(); ++c) row.push_back(mat(i, c));
            rows.push_back(std::move(row));
        }
        j[word_to_string(w).empty() ? "eps" : word_to_string(w)] = std::move(rows);
    }
    if (out.empty())
        std::cout << j.dump(2) << "\n";
    else
        write_json(j, out);
    return 0;
}

int cmd_verify(const std::string& model, const std::string& reduced_path, int n_depth,
               const std::string& selection_path, const std::string& report_path) {
    const Lss sys = load_lss(model);
    const Lss red = load_lss(reduced_path);
    nlohmann::json j;
    j["dim_original"] = sys.n;
    j["dim_reduced"] = red.n;
    j["dim_reach_full"] = reach_space(sys, sys.n > 0 ? sys.n - 1 : 0).V.dim();
    j["rank_obs_full"] = static_cast<int>(unobs_space(sys, sys.n > 0 ? sys.n - 1 : 0).W.rows());
    if (!selection_path.empty()) {
        const std::string text = read_file(selection_path);
        const auto sel_json = nlohmann::json::parse(text);
        if (sel_json.contains("rows"))
            j["max_selection_error"] = check_selection(sys, red, row_selection_from_json(text));
        else
            j["max_selection_error"] = check_selection(sys, red, column_selection_from_json(text));
    } else {
        j["N"] = n_depth;
        j["max_markov_error"] = check_partial_realization(sys, red, n_depth);
    }
    if (!report_path.empty()) write_json(j, report_path);
    std::cout << j.dump(2) << "\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Moment-matching model reduction for linear switched systems"};
    app.require_subcommand(1);

    // gen
    auto* gen = app.add_subcommand("gen", "Generate a random test system");
    int g_n = 8, g_d = 2, g_m = 1, g_p = 1;
    std::string g_rho = "1.0", g_out = "model.json";
    std::uint64_t g_seed = 0;
    gen->add_option("--n", g_n, "state dimension");
    gen->add_option("--D", g_d, "number of modes");
    gen->add_option("--m", g_m, "input dimension");
    gen->add_option("--p", g_p, "output dimension");
    gen->add_option("--rho", g_rho, "spectral radius per mode (comma list; negative = stable)");
    gen->add_option("--seed", g_seed, "RNG seed");
    gen->add_option("--out", g_out, "output model JSON");

    // reduce
    auto* red = app.add_subcommand("reduce", "Reduce a model");
    std::string r_model, r_method = "n-match", r_mode = "R", r_sel, r_ups, r_side = "column";
    std::string r_out = "reduced.json", r_report;
    int r_n = 1;
    red->add_option("--model", r_model, "input model JSON")->required();
    red->add_option("--method", r_method, "n-match | nice | sequence");
    red->add_option("--N", r_n, "matching depth (n-match)");
    red->add_option("--mode", r_mode, "R | O | T (n-match)");
    red->add_option("--selection", r_sel, "selection JSON (nice)");
    red->add_option("--upsilon", r_ups, "mode word to match (sequence)");
    red->add_option("--side", r_side, "column | row (sequence)");
    red->add_option("--out", r_out, "output model JSON");
    red->add_option("--report", r_report, "report JSON");

    // simulate
    auto* sim = app.add_subcommand("simulate", "Simulate along a random switching sequence");
    std::string s_model, s_dwell = "0.1", s_input = "white", s_out = "y.csv", s_sw;
    double s_horizon = 1.0, s_dt = 1e-3;
    std::uint64_t s_seed = 0;
    sim->add_option("--model", s_model)->required();
    sim->add_option("--horizon", s_horizon, "simulation horizon (s)");
    sim->add_option("--dt", s_dt, "sampling step");
    sim->add_option("--min-dwell", s_dwell, "per-mode dwell times, e.g. 1=0.4,2=0.1");
    sim->add_option("--seed", s_seed);
    sim->add_option("--input", s_input, "white | zero");
    sim->add_option("--out", s_out, "output CSV");
    sim->add_option("--switching-out", s_sw, "switching sequence CSV");

    // compare
    auto* cmp = app.add_subcommand("compare", "Multi-seed BFR comparison of two models");
    std::string c_model, c_red, c_dwell = "0.1", c_prefix = "compare";
    double c_horizon = 1.0, c_dt = 1e-3;
    int c_seeds = 10, c_first = 0;
    std::uint64_t c_seed = 0;
    cmp->add_option("--model", c_model)->required();
    cmp->add_option("--reduced", c_red)->required();
    cmp->add_option("--seeds", c_seeds, "number of random runs");
    cmp->add_option("--horizon", c_horizon);
    cmp->add_option("--dt", c_dt);
    cmp->add_option("--min-dwell", c_dwell);
    cmp->add_option("--seed", c_seed, "base seed");
    cmp->add_option("--first-mode", c_first, "require this first operating mode (0 = any)");
    cmp->add_option("--out", c_prefix, "output file prefix");

    // markov
    auto* mar = app.add_subcommand("markov", "Print Markov parameters up to depth N");
    std::string m_model, m_out;
    int m_n = 2;
    mar->add_option("--model", m_model)->required();
    mar->add_option("--N", m_n);
    mar->add_option("--out", m_out);

    // verify
    auto* ver = app.add_subcommand("verify", "Check a reduced model against the original");
    std::string v_model, v_red, v_sel, v_report;
    int v_n = 2;
    ver->add_option("--model", v_model)->required();
    ver->add_option("--reduced", v_red)->required();
    ver->add_option("--N", v_n);
    ver->add_option("--selection", v_sel);
    ver->add_option("--report", v_report);

    CLI11_PARSE(app, argc, argv);

    try {
        if (*gen) return cmd_gen(g_n, g_d, g_m, g_p, g_rho, g_seed, g_out);
        if (*red)
            return cmd_reduce(r_model, r_method, r_n, r_mode, r_sel, r_ups, r_side, r_out, r_report);
        if (*sim) return cmd_simulate(s_model, s_horizon, s_dt, s_dwell, s_seed, s_input, s_out, s_sw);
        if (*cmp)
            return cmd_compare(c_model, c_red, c_seeds, c_horizon, c_dt, c_dwell, c_seed, c_prefix,
                               c_first);
        if (*mar) return cmd_markov(m_model, m_n, m_out);
        if (*ver) return cmd_verify(v_model, v_red, v_n, v_sel, v_report);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
