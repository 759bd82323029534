#include <CLI11.hpp>
#include <future>
#include <iostream>
#include <json.hpp>
#include <string>
#include <vector>

#include "sqp/baskets.hpp"
#include "sqp/invariants.hpp"
#include "sqp/lattice.hpp"
#include "sqp/seifert.hpp"
#include "sqp/tables.hpp"
#include "sqp/three_braids.hpp"

using nlohmann::ordered_json;
using namespace sqp;

namespace {

SymmetricForm form_of(const BraidWord& w) {
    try {
        return symmetrize(qp_seifert_matrix(w));
    } catch (const std::exception&) {
        return symmetrize(generic_seifert_matrix(w));
    }
}

std::vector<int> obstructed_covers(const IntPoly& delta, int max_n) {
    std::vector<int> out;
    for (int n = 2; n <= max_n; ++n)
        if (lspace_obstructed(delta, n).obstructed) out.push_back(n);
    return out;
}

int cmd_analyze(const std::string& text, int strands, int max_n, bool as_json) {
    BraidWord w = parse_braid(text, strands);
    SurfaceData sd = surface_data(w);
    IntPoly delta = alexander(w);

    std::string conway_str = "n/a";
    try {
        conway_str = conway(w).str("z");
    } catch (const std::exception&) {
    }

    std::string sig_str = "n/a (degenerate form)";
    int sig = 0;
    bool has_sig = false;
    try {
        sig = signature(w);
        has_sig = true;
        sig_str = std::to_string(sig);
    } catch (const std::exception&) {
    }

    std::string def_str, lattice_str;
    if (sd.betti == 0) {
        def_str = "trivial (betti 0)";
    } else {
        try {
            def_str = is_definite_link(w) ? "definite" : "not definite";
        } catch (const std::exception& ex) {
            def_str = std::string("n/a (") + ex.what() + ")";
        }
        if (def_str == "definite") {
            try {
                SymmetricForm f = symmetrize(qp_seifert_matrix(w));
                if (definiteness(f) == Definiteness::negative_definite && is_even(f))
                    lattice_str = classify_root_lattice(f).str();
            } catch (const std::exception&) {
                // No band-basis matrix for this word; skip the class.
            }
        }
    }

    std::vector<int> covers = obstructed_covers(delta, max_n);

    if (as_json) {
        ordered_json j;
        j["word"] = render(w);
        j["strands"] = sd.strands;
        j["letters"] = sd.letter_count;
        j["components"] = sd.components;
        j["betti"] = sd.betti;
        j["boundary_components"] = sd.boundary_components;
        j["alexander"] = delta.str();
        j["conway"] = conway_str;
        if (has_sig)
            j["signature"] = sig;
        else
            j["signature"] = nullptr;
        j["definiteness"] = def_str;
        j["lattice_class"] = lattice_str;
        j["obstructed_covers"] = covers;
        j["max_cover"] = max_n;
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << "word: " << render(w) << "\n"
                  << "strands: " << sd.strands << "  letters: " << sd.letter_count
                  << "  components: " << sd.components << "  betti: " << sd.betti
                  << "  boundary components: " << sd.boundary_components << "\n"
                  << "alexander: " << delta.str() << "\n"
                  << "conway: " << conway_str << "\n"
                  << "signature: " << sig_str << "\n"
                  << "definiteness: " << def_str << "\n";
        if (!lattice_str.empty()) std::cout << "lattice class: " << lattice_str << "\n";
        std::cout << "obstructed covers (n <= " << max_n << "):";
        if (covers.empty())
            std::cout << " none";
        else
            for (int n : covers) std::cout << " " << n;
        std::cout << "\n";
    }
    return 0;
}

// Each table is rebuilt from the library and diffed against the stored copy.
// Rows are computed in a worker pool and printed in input order.
struct TableRow {
    std::string line;
    bool ok;
};

int report_table(const std::string& name, std::vector<std::future<TableRow>> jobs, bool as_json) {
    int diffs = 0;
    std::vector<std::string> lines;
    for (auto& job : jobs) {
        TableRow row = job.get();
        diffs += !row.ok;
        lines.push_back(row.line + (row.ok ? "" : "  DIFF"));
    }
    if (as_json) {
        ordered_json j;
        j["table"] = name;
        j["rows"] = lines;
        j["diffs"] = diffs;
        std::cout << j.dump(2) << "\n";
    } else {
        for (const auto& l : lines) std::cout << l << "\n";
        std::cout << name << ": " << lines.size() << " rows, " << diffs << " diffs\n";
    }
    return diffs ? 1 : 0;
}

int cmd_tables(const std::string& name, int max_pqr, int max_n, bool as_json) {
    std::vector<std::future<TableRow>> jobs;
    if (name == "forms") {
        for (const auto& row : golden_forms_rows())
            jobs.push_back(std::async(std::launch::async, [row] {
                std::string got = classify_root_lattice(form_of(parse_braid(row.word, row.strands))).str();
                return TableRow{row.cls + "  " + std::to_string(row.strands) + "  " + row.word +
                                    "  -> " + got,
                                got == row.cls};
            }));
    } else if (name == "f") {
        const auto& golden = golden_f_rows();
        for (size_t k = 0; k < golden.size(); ++k)
            jobs.push_back(std::async(std::launch::async, [k, &golden] {
                IntPoly got = f_poly(static_cast<int>(k));
                return TableRow{"f_" + std::to_string(k) + " = " + got.str("z"), got == golden[k]};
            }));
    } else if (name == "nabla") {
        for (const auto& row : golden_pqr_rows())
            jobs.push_back(std::async(std::launch::async, [row] {
                IntPoly got = nabla_pqr(row.p, row.q, row.r);
                return TableRow{"(" + std::to_string(row.p) + "," + std::to_string(row.q) + "," +
                                    std::to_string(row.r) + ")  " + got.str("z"),
                                got == row.nabla};
            }));
    } else if (name == "alexander") {
        for (const auto& row : golden_pqr_rows())
            jobs.push_back(std::async(std::launch::async, [row] {
                IntPoly got = alexander(b_pqr(row.p, row.q, row.r));
                return TableRow{"(" + std::to_string(row.p) + "," + std::to_string(row.q) + "," +
                                    std::to_string(row.r) + ")  " + got.str(),
                                got == row.delta};
            }));
    } else if (name == "thresholds") {
        auto rows = lspace_table(max_pqr, max_n);
        for (const auto& row : rows)
            jobs.push_back(std::async(std::launch::async, [row] {
                bool ok = true;
                for (const auto& g : golden_pqr_rows())
                    if (g.p == row.p && g.q == row.q && g.r == row.r)
                        ok = row.least_obstructed_n == g.threshold;
                std::string val = row.least_obstructed_n
                                      ? "obstructed from n = " + std::to_string(row.least_obstructed_n)
                                      : "never obstructed";
                return TableRow{"(" + std::to_string(row.p) + "," + std::to_string(row.q) + "," +
                                    std::to_string(row.r) + ")  " + val,
                                ok};
            }));
    } else if (name == "baader") {
        for (int n = 2; n <= 6; ++n)
            for (int k = 2; k <= 6; ++k)
                jobs.push_back(std::async(std::launch::async, [n, k] {
                    BraidWord w = word_pow(delta_word(n), k);
                    bool got = definiteness(form_of(w)) == Definiteness::negative_definite;
                    return TableRow{"delta_" + std::to_string(n) + "^" + std::to_string(k) +
                                        "  " + (got ? "definite" : "not definite"),
                                    got == baader_definite(n, k)};
                }));
    } else {
        throw CLI::ValidationError("tables", "unknown table name: " + name);
    }
    return report_table(name, std::move(jobs), as_json);
}

int cmd_cyclic(int m, int p, const std::string& eps, bool as_json) {
    if (!eps.empty()) {
        CyclicBasket cb{static_cast<int>(eps.size()), {}};
        for (char c : eps) {
            if (c != '+' && c != '-')
                throw CLI::ValidationError("cyclic", "--eps must be a string of + and -");
            cb.eps.push_back(c == '+' ? 1 : -1);
        }
        m = cb.m;
        p = basket_p(cb);
    }
    CyclicReport rep = cyclic_report(m, p);
    if (as_json) {
        std::string text = rep.json();
        ordered_json::parse(text);  // every report round-trips as JSON
        std::cout << text << "\n";
    } else {
        std::cout << "m: " << rep.m << "  p: " << rep.p << "  lk: " << rep.lk << "\n";
        if (rep.definite)
            std::cout << "definite: yes  lattice class: " << rep.lattice_class << "\n";
        else
            std::cout << "definite: no (symmetrized form degenerate)\n";
        std::cout << "alexander: " << rep.alexander.str() << "\n";
        if (rep.obstructed_from_n)
            std::cout << "obstructed from n = " << rep.obstructed_from_n << "\n";
        else
            std::cout << "not obstructed for n <= 50\n";
    }
    return 0;
}

int cmd_obstruct(const std::string& text, int strands, int cover, bool as_json) {
    BraidWord w = parse_braid(text, strands);
    ObstructionResult res = lspace_obstructed(w, cover);
    if (as_json) {
        ordered_json j;
        j["word"] = render(w);
        j["cover"] = cover;
        j["obstructed"] = res.obstructed;
        j["witness"] = res.witness;
        std::cout << j.dump(2) << "\n";
    } else if (res.obstructed) {
        std::cout << "obstructed at n = " << cover << ": " << res.witness << "\n";
    } else {
        std::cout << "not obstructed at n = " << cover << "\n";
    }
    return res.obstructed ? 1 : 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"strongly quasipositive braid and basket link analyzer"};
    app.require_subcommand(1);
    bool as_json = false;
    app.add_flag("--json", as_json, "JSON output");

    std::string word, table_name, eps;
    int strands = 3, cover = 2, max_n = 12, m = 0, p = 0, max_pqr = 5, table_max_n = 50;

    auto* analyze = app.add_subcommand("analyze", "invariants of a braid closure");
    analyze->add_option("word", word, "braid word")->required();
    analyze->add_option("--strands", strands, "strand count")->required();
    analyze->add_option("--max-n", max_n, "largest cover degree to test")->capture_default_str();

    auto* tables = app.add_subcommand("tables", "rebuild a table and diff it");
    tables->add_option("name", table_name, "forms|f|nabla|alexander|thresholds|baader")->required();
    tables->add_option("--max-pqr", max_pqr, "exponent bound for thresholds")->capture_default_str();
    tables->add_option("--max-n", table_max_n, "cover bound for thresholds")->capture_default_str();

    auto* cyclic = app.add_subcommand("cyclic", "cyclic basket link report");
    auto* opt_m = cyclic->add_option("--m", m, "band count");
    auto* opt_p = cyclic->add_option("--p", p, "positive band count");
    auto* opt_eps = cyclic->add_option("--eps", eps, "sign string, e.g. \"+--\"");
    opt_m->needs(opt_p);
    opt_eps->excludes(opt_m);

    auto* obstruct = app.add_subcommand("obstruct", "branched cover obstruction test");
    obstruct->add_option("word", word, "braid word")->required();
    obstruct->add_option("--strands", strands, "strand count")->required();
    obstruct->add_option("--cover", cover, "cover degree")->required();

    try {
        app.parse(argc, argv);
        if (analyze->parsed()) return cmd_analyze(word, strands, max_n, as_json);
        if (tables->parsed()) return cmd_tables(table_name, max_pqr, table_max_n, as_json);
        if (cyclic->parsed()) {
            if (eps.empty() && !opt_m->count())
                throw CLI::RequiredError("cyclic: --m/--p or --eps");
            return cmd_cyclic(m, p, eps, as_json);
        }
        if (obstruct->parsed()) return cmd_obstruct(word, strands, cover, as_json);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
