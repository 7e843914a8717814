#include "recon/cli.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>

#include "CLI11.hpp"
#include "json.hpp"
#include "recon/census.hpp"
#include "recon/deck.hpp"
#include "recon/errors.hpp"
#include "recon/graph6.hpp"
#include "recon/oracle.hpp"
#include "recon/reconstruct.hpp"

namespace recon {

namespace {

void report_error(std::ostream& err, const std::string& kind, const std::string& message, int code) {
    nlohmann::json j{{"error", kind}, {"message", message}, {"exit_code", code}};
    err << j.dump() << '\n';
}

void write_text(const std::string& path, const std::string& text) {
    std::ofstream file(path, std::ios::binary);
    if (!file) fail(ErrorKind::ParseError, "cannot write " + path);
    file << text;
}

Deck vertex_deck(const DeckFile& f) {
    if (f.kind != DeckFile::Kind::Vertex) fail(ErrorKind::KindMismatch, "expected a vertex deck (n=), got an edge-deck");
    return f.deck;
}

EdgeDeck edge_deck(const DeckFile& f) {
    if (f.kind != DeckFile::Kind::Edge) fail(ErrorKind::KindMismatch, "expected an edge-deck (en=), got a vertex deck");
    return f.edge_deck;
}

// Writes one deck per input graph: to `out_dir/<index>.deck` when given,
// otherwise to `out` separated by blank lines.
template <class Compute, class Write>
void emit_decks(const std::string& g6file, const std::string& out_dir, const std::string& suffix, std::ostream& out,
                Compute compute, Write write) {
    const std::vector<Graph> graphs = read_graph6_file(g6file);
    if (!out_dir.empty()) std::filesystem::create_directories(out_dir);
    for (std::size_t i = 0; i < graphs.size(); ++i) {
        if (out_dir.empty()) {
            if (i > 0) out << '\n';
            write(out, compute(graphs[i]));
        } else {
            std::ofstream file(std::filesystem::path(out_dir) / (std::to_string(i) + suffix));
            write(file, compute(graphs[i]));
        }
    }
}

ReconstructionResult reconstruct_auto(const Deck& d, const ReconstructOptions& options) {
    if (d.n > 10) fail(ErrorKind::CapExceeded, "--class auto needs n <= 10; pass an explicit class");
    const std::vector<Graph> found = oracle_reconstruct(d, {std::max(options.oracle_cap, d.n), false});
    if (found.size() != 1) {
        fail(ErrorKind::HypothesisViolation, std::to_string(found.size()) + " graphs have this deck");
    }
    const Graph& g = found.front();
    ReconstructOptions trusted = options;
    trusted.trusted = true;
    if (in_class_g2_tf_k3(g)) return reconstruct_g2_tf_k3(d, trusted);
    if (in_class_g3_tf_k1(g)) return reconstruct_g3_tf_k1(d, trusted);
    if (in_class_g3_tf_k3plus(g)) return reconstruct_g3_tf_k3plus(d, trusted);
    fail(ErrorKind::HypothesisViolation, "deck belongs to no supported class");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Graph reconstruction toolkit: decks, reconstruction procedures, census"};
    app.require_subcommand(1);

    std::string input;
    std::string out_dir;
    ReconstructOptions ropts;

    auto* deck_cmd = app.add_subcommand("deck", "Write the deck of every graph in a graph6 file");
    deck_cmd->add_option("g6file", input, "graph6 input")->required();
    deck_cmd->add_option("--out-dir", out_dir, "Write <index>.deck files here instead of stdout");

    auto* edeck_cmd = app.add_subcommand("edgedeck", "Write the edge-deck of every graph in a graph6 file");
    edeck_cmd->add_option("g6file", input, "graph6 input")->required();
    edeck_cmd->add_option("--out-dir", out_dir, "Write <index>.edeck files here instead of stdout");

    std::string vclass = "auto";
    auto* rec_cmd = app.add_subcommand("reconstruct", "Reconstruct a graph from its deck");
    rec_cmd->add_option("deckfile", input, "deck file")->required();
    rec_cmd->add_option("--class", vclass, "Hypothesis class")
        ->check(CLI::IsMember({"g2tf3", "g3tf1", "g3tf3", "auto"}));
    rec_cmd->add_flag("--trusted", ropts.trusted, "Skip oracle pre-validation");
    rec_cmd->add_option("--oracle-cap", ropts.oracle_cap, "Largest n for oracle searches");

    std::string eclass;
    std::optional<std::size_t> start_card;
    auto* erec_cmd = app.add_subcommand("edge-reconstruct", "Reconstruct a graph from its edge-deck");
    erec_cmd->add_option("edeckfile", input, "edge-deck file")->required();
    erec_cmd->add_option("--class", eclass, "Hypothesis class")->required()->check(CLI::IsMember({"g2tf", "g3tf"}));
    erec_cmd->add_flag("--trusted", ropts.trusted, "Skip oracle pre-validation");
    erec_cmd->add_option("--oracle-cap", ropts.oracle_cap, "Largest n for oracle searches");
    erec_cmd->add_option("--start-card", start_card, "Index of the first edge-card examined (g2tf)");

    OracleOptions oopts;
    auto* oracle_cmd = app.add_subcommand("oracle", "All graphs with the given deck or edge-deck");
    oracle_cmd->add_option("deckfile", input, "deck or edge-deck file")->required();
    oracle_cmd->add_option("--cap", oopts.cap, "Largest n searched");
    oracle_cmd->add_flag("--bipartite", oopts.bipartite_only, "Keep bipartite candidates only");

    CensusOptions copts;
    std::string theorem;
    std::string report_path;
    std::string csv_path;
    std::string corpus;
    bool timing = false;
    auto* census_cmd = app.add_subcommand("census", "Exhaustive deck-uniqueness and theorem campaigns");
    census_cmd->add_option("--n", copts.n, "Number of vertices (n_max for --theorem)")->required();
    census_cmd->add_flag("--edge", copts.edge, "Check edge-decks and the deck/edge-deck relation");
    census_cmd->add_option("--theorem", theorem, "Theorem campaign")
        ->check(CLI::IsMember({"T4", "T5", "T8", "T10", "T11"}));
    census_cmd->add_option("--jobs", copts.jobs, "Worker threads")->check(CLI::PositiveNumber);
    census_cmd->add_option("--out", report_path, "JSON report path (default stdout)");
    census_cmd->add_option("--csv", csv_path, "CSV summary path");
    census_cmd->add_flag("--allow-n10", copts.allow_n10, "Permit the n = 10 vertex census");
    census_cmd->add_option("--corpus", corpus, "graph6 corpus to compare with the enumerator");
    census_cmd->add_flag("--timing", timing, "Include wall_time in the JSON report");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        report_error(err, "UsageError", e.what(), 4);
        return 4;
    }

    try {
        if (*deck_cmd) {
            emit_decks(input, out_dir, ".deck", out, compute_deck,
                       [](std::ostream& o, const Deck& d) { write_deck(o, d); });
        } else if (*edeck_cmd) {
            emit_decks(input, out_dir, ".edeck", out, compute_edge_deck,
                       [](std::ostream& o, const EdgeDeck& d) { write_edge_deck(o, d); });
        } else if (*rec_cmd) {
            const Deck d = vertex_deck(read_deck_file(input));
            ReconstructionResult r;
            if (vclass == "g2tf3") r = reconstruct_g2_tf_k3(d, ropts);
            else if (vclass == "g3tf1") r = reconstruct_g3_tf_k1(d, ropts);
            else if (vclass == "g3tf3") r = reconstruct_g3_tf_k3plus(d, ropts);
            else r = reconstruct_auto(d, ropts);
            out << to_json(r).dump() << '\n';
        } else if (*erec_cmd) {
            const EdgeDeck ed = edge_deck(read_deck_file(input));
            const ReconstructionResult r =
                eclass == "g2tf" ? edge_reconstruct_g2_tf(ed, ropts, start_card) : edge_reconstruct_g3_tf(ed, ropts);
            out << to_json(r).dump() << '\n';
        } else if (*oracle_cmd) {
            const DeckFile f = read_deck_file(input);
            const std::vector<Graph> found = f.kind == DeckFile::Kind::Vertex ? oracle_reconstruct(f.deck, oopts)
                                                                              : oracle_edge_reconstruct(f.edge_deck, oopts);
            nlohmann::json graphs = nlohmann::json::array();
            for (const Graph& g : found) graphs.push_back(emit_graph6(g));
            nlohmann::json j{{"kind", f.kind == DeckFile::Kind::Vertex ? "vertex" : "edge"},
                             {"count", found.size()},
                             {"graphs_g6", graphs}};
            out << j.dump() << '\n';
        } else if (*census_cmd) {
            if (!theorem.empty()) copts.theorem = theorem;
            if (!corpus.empty()) copts.corpus = corpus;
            const CensusReport report = run_census(copts);
            const std::string json = to_json(report, timing).dump(2) + '\n';
            if (report_path.empty()) out << json;
            else write_text(report_path, json);
            if (!csv_path.empty()) write_text(csv_path, to_csv(report));
            err << "census n=" << report.n << " mode=" << report.mode << " wall_time=" << report.wall_time
                << "s ok=" << (report.ok() ? "true" : "false") << '\n';
            return report.ok() ? 0 : 1;
        }
    } catch (const Error& e) {
        const int code = exit_code_for(e.kind());
        report_error(err, std::string(error_kind_name(e.kind())), e.what(), code);
        return code;
    } catch (const std::exception& e) {
        report_error(err, "InternalError", e.what(), 1);
        return 1;
    }
    return 0;
}

}  // namespace recon
