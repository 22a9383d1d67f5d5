#include "rit/cli.hpp"

#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "rit/report_io.hpp"
#include "rit/service.hpp"
#include "rit/verify.hpp"

namespace rit::cli {

namespace {

std::string pair_text(const ConwayPair& p) {
    return "(" + std::to_string(p.normal) + "," + std::to_string(p.misere) + ")";
}

std::string move_text(const RitMove& m) {
    return "k=" + std::to_string(m.k) + " (row " + std::to_string(m.row) + ", remove " +
           std::to_string(m.removed) + ")";
}

void show(const Partition& p, std::ostream& out) {
    out << '\n' << render_diagram(p);
    out << to_string(p) << "  rem " << decomposition_json(p)["rem"].dump() << "  pair "
        << pair_text(conway_pair(p)) << '\n';
}

}  // namespace

PlayWinner play(Partition start, Convention convention, bool engine_first, std::istream& in,
                std::ostream& out) {
    enum class Side { human, engine };
    Partition position = std::move(start);
    Side to_move = engine_first ? Side::engine : Side::human;
    std::optional<std::pair<Partition, RitMove>> last_human;

    out << "RIT, " << to_string(convention) << " play. "
        << (convention == Convention::normal ? "Whoever takes the last box wins."
                                             : "Whoever takes the last box loses.")
        << '\n';

    while (!is_terminal(position)) {
        show(position, out);
        if (to_move == Side::engine) {
            std::optional<RitMove> m = last_human ? respond(last_human->first, last_human->second, convention)
                                                  : best_move(position, convention);
            out << "engine plays " << move_text(*m) << '\n';
            position = apply_move(position, *m);
            to_move = Side::human;
            continue;
        }
        out << "your move, column k in 1.." << position.first() << " (q to quit)> " << std::flush;
        std::string line;
        if (!std::getline(in, line)) {
            out << "\ninput closed, game abandoned\n";
            return PlayWinner::none;
        }
        if (line == "q" || line == "quit") {
            out << "game abandoned\n";
            return PlayWinner::none;
        }
        int k = 0;
        std::istringstream parse(line);
        if (!(parse >> k) || !(parse >> std::ws).eof() || k < 1 || k > position.first()) {
            out << "not a legal column: \"" << line << "\"\n";
            continue;
        }
        RitMove m = move_for_column(position, k);
        out << "you play " << move_text(m) << '\n';
        last_human.emplace(position, m);
        position = apply_move(position, m);
        to_move = Side::engine;
    }

    show(position, out);
    // The side to move at the empty diagram is stuck: it loses under normal
    // play and wins under misère play.
    bool stuck_wins = convention == Convention::misere;
    Side winner = (to_move == Side::human) == stuck_wins ? Side::human : Side::engine;
    out << "game over: " << (stuck_wins ? "next" : "previous") << " player wins, "
        << (winner == Side::human ? "you win" : "engine wins") << '\n';
    return winner == Side::human ? PlayWinner::human : PlayWinner::engine;
}

namespace {

std::optional<int> env_rows(int value) { return value > 0 ? std::optional<int>(value) : std::nullopt; }

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
    CLI::App app{"Row Impartial Terminus: analysis, verification and play", "rit"};
    app.require_subcommand(1);

    std::string convention = "normal";
    std::string format = "human";
    int max_rows = 0;

    auto* analyze_cmd = app.add_subcommand("analyze", "analyze one position");
    std::string partition_text;
    analyze_cmd->add_option("partition", partition_text, "partition, e.g. \"[5,4,2,1]\"")->required();
    analyze_cmd->add_option("--convention", convention)->check(CLI::IsMember({"normal", "misere"}));
    analyze_cmd->add_flag_callback("--misere", [&] { convention = "misere"; }, "shorthand for --convention misere");
    analyze_cmd->add_option("--format", format)->check(CLI::IsMember({"human", "json"}));

    auto* enumerate_cmd = app.add_subcommand("enumerate", "list the partitions of n with their Conway pairs");
    int n = 0;
    enumerate_cmd->add_option("--n", n)->required()->check(CLI::NonNegativeNumber);
    enumerate_cmd->add_option("--max-rows", max_rows)->check(CLI::PositiveNumber);
    enumerate_cmd->add_option("--format", format)->check(CLI::IsMember({"human", "csv", "json"}));

    auto* verify_cmd = app.add_subcommand("verify", "check oracle values against the remnant formula");
    int max_n = 0;
    int jobs = 1;
    verify_cmd->add_option("--max-n", max_n)->required()->check(CLI::NonNegativeNumber);
    verify_cmd->add_option("--convention", convention)->check(CLI::IsMember({"normal", "misere", "both"}));
    verify_cmd->add_option("--max-rows", max_rows)->check(CLI::PositiveNumber);
    verify_cmd->add_option("--jobs", jobs)->check(CLI::PositiveNumber);
    verify_cmd->add_option("--format", format)->check(CLI::IsMember({"human", "csv", "json"}));

    auto* cgh_cmd = app.add_subcommand("cgh", "check the forced / miserable / pet conditions");
    cgh_cmd->add_option("--max-n", max_n)->required()->check(CLI::NonNegativeNumber);
    cgh_cmd->add_option("--max-rows", max_rows)->check(CLI::PositiveNumber);
    cgh_cmd->add_option("--format", format)->check(CLI::IsMember({"human", "csv", "json"}));

    auto* play_cmd = app.add_subcommand("play", "play against the engine in the terminal");
    bool engine_first = false;
    std::string start_text = "[5,4,2,1]";
    play_cmd->add_option("--convention", convention)->check(CLI::IsMember({"normal", "misere"}));
    play_cmd->add_flag_callback("--misere", [&] { convention = "misere"; }, "shorthand for --convention misere");
    play_cmd->add_flag("--engine-first", engine_first);
    play_cmd->add_option("--start", start_text, "starting partition")->capture_default_str();

    auto* serve_cmd = app.add_subcommand("serve", "run the HTTP service and web board");
    int port = 8080;
    std::string host = "127.0.0.1";
    std::string static_dir;
    std::string snapshot;
    serve_cmd->add_option("--port", port)->check(CLI::Range(1, 65535))->capture_default_str();
    serve_cmd->add_option("--host", host)->capture_default_str();
    serve_cmd->add_option("--static", static_dir, "directory with the web board bundle");
    serve_cmd->add_option("--snapshot", snapshot, "JSON-lines file for session snapshots");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        return app.exit(e, out, err) == 0 ? success : usage_error;
    }

    try {
        if (analyze_cmd->parsed()) {
            Partition p = parse_partition(partition_text);
            auto report = analyze(p, parse_convention(convention));
            if (format == "json")
                out << analysis_text_json(report) << '\n';
            else
                out << render_analysis(report);
            return success;
        }

        if (enumerate_cmd->parsed()) {
            auto rows = env_rows(max_rows);
            auto stream = enumerate_partitions(n, rows);
            json list = json::array();
            if (format == "csv")
                out << "partition,weight,rows,core,rem,normal,misere\n";
            while (auto p = stream.next()) {
                auto pair = conway_pair(*p);
                auto dec = decomposition_json(*p);
                if (format == "csv") {
                    out << '"' << to_string(*p) << "\"," << p->weight() << ',' << p->rows() << ",\""
                        << dec["core"].dump() << "\",\"" << dec["rem"].dump() << "\"," << pair.normal
                        << ',' << pair.misere << '\n';
                } else if (format == "json") {
                    dec["position"] = partition_json(*p);
                    dec["pair"] = pair_json(pair);
                    list.push_back(dec);
                } else {
                    out << to_string(*p) << "  core " << dec["core"].dump() << "  rem "
                        << dec["rem"].dump() << "  pair " << pair_text(pair) << '\n';
                }
            }
            if (format == "json")
                out << list.dump() << '\n';
            return success;
        }

        if (verify_cmd->parsed()) {
            VerificationOptions opts;
            opts.max_n = max_n;
            opts.conventions = parse_convention_choice(convention);
            opts.max_rows = env_rows(max_rows);
            opts.jobs = jobs;
            auto report = verify_theorems(opts);
            if (format == "json")
                out << verification_json(report).dump(2) << '\n';
            else if (format == "csv")
                out << verification_csv(report);
            else
                out << render_verification(report);
            return report.total_mismatches == 0 ? success : verification_failed;
        }

        if (cgh_cmd->parsed()) {
            auto report = cgh_check(max_n, env_rows(max_rows));
            if (format == "json")
                out << cgh_json(report).dump(2) << '\n';
            else if (format == "csv")
                out << cgh_csv(report);
            else
                out << render_cgh(report);
            return cgh_confirms_expected(report) ? success : verification_failed;
        }

        if (play_cmd->parsed()) {
            Partition start = parse_partition(start_text);
            play(start, parse_convention(convention), engine_first, in, out);
            return success;
        }

        if (serve_cmd->parsed()) {
            std::optional<std::filesystem::path> dir;
            if (!static_dir.empty())
                dir = static_dir;
            std::optional<std::filesystem::path> snap;
            if (!snapshot.empty())
                snap = snapshot;
            return service::serve(host, port, dir, snap);
        }
    } catch (const ParseError& e) {
        err << "rit: " << e.what() << '\n';
        return usage_error;
    } catch (const OracleBoundExceeded& e) {
        err << "rit: " << e.what() << '\n';
        return usage_error;
    }
    return usage_error;
}

}  // namespace rit::cli
