#include "rit/service.hpp"

#include <cstdio>
#include <fstream>
#include <iostream>

#include "httplib.h"

namespace rit::service {

std::string_view to_string(Mover m) noexcept { return m == Mover::human ? "human" : "engine"; }

namespace {

Mover other(Mover m) { return m == Mover::human ? Mover::engine : Mover::human; }

Mover first_mover(const GameSession& s) { return s.engine_first ? Mover::engine : Mover::human; }

}  // namespace

Mover GameSession::to_move() const noexcept {
    return history.size() % 2 == 0 ? first_mover(*this) : other(first_mover(*this));
}

std::optional<Mover> GameSession::winner() const noexcept {
    if (status() != Status::finished)
        return std::nullopt;
    Mover stuck = to_move();
    return convention == Convention::normal ? other(stuck) : stuck;
}

void play_move(GameSession& session, Mover mover, const RitMove& move) {
    Partition next = apply_move(session.position, move);
    session.history.push_back({mover, move, session.position});
    session.position = std::move(next);
}

GameSession create_game(std::string id, Partition start, Convention c, bool engine_first) {
    GameSession s;
    s.id = std::move(id);
    s.start = start;
    s.position = std::move(start);
    s.convention = c;
    s.engine_first = engine_first;
    if (engine_first)
        if (auto m = best_move(s.position, c))
            play_move(s, Mover::engine, *m);
    return s;
}

bool replay_consistent(const GameSession& session) {
    Partition p = session.start;
    Mover expected = first_mover(session);
    for (const auto& h : session.history) {
        if (h.mover != expected || h.before != p)
            return false;
        try {
            p = apply_move(p, h.move);
        } catch (const IllegalMove&) {
            return false;
        }
        expected = other(expected);
    }
    return p == session.position;
}

json session_json(const GameSession& s) {
    json history = json::array();
    for (const auto& h : s.history)
        history.push_back(json{{"mover", std::string(to_string(h.mover))},
                               {"move", move_json(h.before, h.move)}});
    json display = decomposition_json(s.position);
    display["pair"] = pair_json(conway_pair(s.position));
    auto winner = s.winner();
    return json{{"id", s.id},
                {"start", partition_json(s.start)},
                {"position", partition_json(s.position)},
                {"convention", std::string(rit::to_string(s.convention))},
                {"engine_first", s.engine_first},
                {"seq", s.seq()},
                {"to_move", std::string(to_string(s.to_move()))},
                {"status", s.status() == Status::finished ? "finished" : "in_progress"},
                {"winner", winner ? json(std::string(to_string(*winner))) : json(nullptr)},
                {"history", history},
                {"legal_moves", moves_json(s.position, legal_moves(s.position))},
                {"display", display}};
}

ApiResponse error_response(int status, std::string_view code, std::string_view message, json extra) {
    json err{{"code", code}, {"message", message}};
    for (auto& [k, v] : extra.items())
        err[k] = v;
    return {status, json{{"error", err}}.dump()};
}

namespace {

ApiResponse ok(int status, const json& body) { return {status, body.dump()}; }

std::optional<json> parse_body(const std::string& body) {
    json j = json::parse(body, nullptr, false);
    if (j.is_discarded() || !j.is_object())
        return std::nullopt;
    return j;
}

}  // namespace

GameService::GameService(std::filesystem::path snapshot) : snapshot_(std::move(snapshot)) {
    load_snapshot();
}

std::shared_ptr<GameService::Slot> GameService::slot(const std::string& id) const {
    std::lock_guard lock(store_mutex_);
    auto it = sessions_.find(id);
    return it == sessions_.end() ? nullptr : it->second;
}

std::optional<GameSession> GameService::find(const std::string& id) const {
    auto s = slot(id);
    if (!s)
        return std::nullopt;
    std::lock_guard lock(s->mutex);
    return s->session;
}

std::size_t GameService::session_count() const {
    std::lock_guard lock(store_mutex_);
    return sessions_.size();
}

ApiResponse GameService::create_game(const std::string& body) {
    auto req = parse_body(body);
    if (!req)
        return error_response(400, "bad_request", "request body must be a JSON object");
    if (!req->contains("start"))
        return error_response(400, "bad_request", "missing field \"start\"");

    Partition start;
    try {
        start = partition_from_json(req->at("start"));
    } catch (const ParseError& e) {
        return error_response(400, "invalid_partition", e.what());
    }
    Convention convention = Convention::normal;
    if (auto it = req->find("convention"); it != req->end()) {
        if (!it->is_string())
            return error_response(400, "bad_request", "\"convention\" must be a string");
        try {
            convention = parse_convention(it->get<std::string>());
        } catch (const std::invalid_argument& e) {
            return error_response(400, "bad_request", e.what());
        }
    }
    bool engine_first = false;
    if (auto it = req->find("engine_first"); it != req->end()) {
        if (!it->is_boolean())
            return error_response(400, "bad_request", "\"engine_first\" must be a boolean");
        engine_first = it->get<bool>();
    }

    auto s = std::make_shared<Slot>();
    {
        std::lock_guard lock(store_mutex_);
        char id[32];
        std::snprintf(id, sizeof id, "g%06llu", static_cast<unsigned long long>(next_id_++));
        s->session = rit::service::create_game(id, std::move(start), convention, engine_first);
        sessions_.emplace(s->session.id, s);
    }
    std::lock_guard lock(s->mutex);
    persist(s->session);
    return ok(201, session_json(s->session));
}

ApiResponse GameService::get_game(const std::string& id) const {
    auto s = slot(id);
    if (!s)
        return error_response(404, "not_found", "no game with id \"" + id + "\"");
    std::lock_guard lock(s->mutex);
    return ok(200, session_json(s->session));
}

ApiResponse GameService::submit_move(const std::string& id, const std::string& body) {
    auto s = slot(id);
    if (!s)
        return error_response(404, "not_found", "no game with id \"" + id + "\"");
    auto req = parse_body(body);
    if (!req)
        return error_response(400, "bad_request", "request body must be a JSON object");
    auto k_it = req->find("k");
    if (k_it == req->end() || !k_it->is_number_integer())
        return error_response(400, "bad_request", "field \"k\" must be an integer");
    std::optional<long long> seq;
    if (auto it = req->find("seq"); it != req->end()) {
        if (!it->is_number_integer())
            return error_response(400, "bad_request", "field \"seq\" must be an integer");
        seq = it->get<long long>();
    }

    std::lock_guard lock(s->mutex);
    GameSession& game = s->session;
    if (seq && *seq != static_cast<long long>(game.seq()))
        return error_response(409, "stale_sequence",
                              "move is based on seq " + std::to_string(*seq) + ", current seq is " +
                                  std::to_string(game.seq()),
                              json{{"seq", game.seq()}});
    if (game.status() == Status::finished)
        return error_response(409, "game_finished", "the game is already over");

    const long long k = k_it->get<long long>();
    if (k < 1 || k > game.position.first())
        return error_response(422, "illegal_move",
                              "column " + std::to_string(k) + " is not in 1.." +
                                  std::to_string(game.position.first()),
                              json{{"legal_range", {1, game.position.first()}}});

    const Partition before = game.position;
    const RitMove human = move_for_column(before, static_cast<int>(k));
    play_move(game, Mover::human, human);
    if (auto reply = respond(before, human, game.convention))
        play_move(game, Mover::engine, *reply);
    persist(game);
    return ok(200, session_json(game));
}

ApiResponse GameService::get_analysis(const std::optional<std::string>& partition,
                                      const std::optional<std::string>& convention) const {
    if (!partition)
        return error_response(400, "bad_request", "missing query parameter \"partition\"");
    Partition p;
    try {
        p = parse_partition(*partition);
    } catch (const ParseError& e) {
        return error_response(400, "invalid_partition", e.what());
    }
    Convention c = Convention::normal;
    if (convention) {
        try {
            c = parse_convention(*convention);
        } catch (const std::invalid_argument& e) {
            return error_response(400, "bad_request", e.what());
        }
    }
    return {200, analysis_text_json(analyze(p, c))};
}

namespace {

json snapshot_record(const GameSession& s) {
    json moves = json::array();
    for (const auto& h : s.history)
        moves.push_back(json{{"mover", std::string(to_string(h.mover))}, {"k", h.move.k}});
    return json{{"id", s.id},
                {"start", partition_json(s.start)},
                {"convention", std::string(rit::to_string(s.convention))},
                {"engine_first", s.engine_first},
                {"moves", moves}};
}

}  // namespace

void GameService::persist(const GameSession& session) {
    if (!snapshot_)
        return;
    std::lock_guard lock(snapshot_mutex_);
    std::ofstream out(*snapshot_, std::ios::app);
    out << snapshot_record(session).dump() << '\n';
}

// Later lines supersede earlier ones for the same id.
void GameService::load_snapshot() {
    std::ifstream in(*snapshot_);
    std::string line;
    while (std::getline(in, line)) {
        json j = json::parse(line, nullptr, false);
        if (j.is_discarded())
            continue;
        try {
            GameSession s;
            s.id = j.at("id").get<std::string>();
            s.start = partition_from_json(j.at("start"));
            s.position = s.start;
            s.convention = parse_convention(j.at("convention").get<std::string>());
            s.engine_first = j.at("engine_first").get<bool>();
            for (const auto& m : j.at("moves")) {
                Mover mover = m.at("mover") == "engine" ? Mover::engine : Mover::human;
                play_move(s, mover, move_for_column(s.position, m.at("k").get<int>()));
            }
            if (s.id.size() > 1 && s.id[0] == 'g')
                next_id_ = std::max<std::uint64_t>(next_id_, std::stoull(s.id.substr(1)) + 1);
            auto slot = std::make_shared<Slot>();
            slot->session = std::move(s);
            sessions_[slot->session.id] = std::move(slot);
        } catch (const std::exception& e) {
            std::cerr << "skipping unreadable snapshot line: " << e.what() << '\n';
        }
    }
}

namespace {

void send(httplib::Response& res, const ApiResponse& r) {
    res.status = r.status;
    res.set_content(r.body, "application/json");
}

std::optional<std::string> param(const httplib::Request& req, const char* name) {
    if (!req.has_param(name))
        return std::nullopt;
    return req.get_param_value(name);
}

}  // namespace

void bind_routes(httplib::Server& server, GameService& service,
                 const std::optional<std::filesystem::path>& static_dir) {
    server.Post("/api/v1/games", [&service](const httplib::Request& req, httplib::Response& res) {
        send(res, service.create_game(req.body));
    });
    server.Get(R"(/api/v1/games/([^/]+))", [&service](const httplib::Request& req, httplib::Response& res) {
        send(res, service.get_game(req.matches[1]));
    });
    server.Post(R"(/api/v1/games/([^/]+)/moves)",
                [&service](const httplib::Request& req, httplib::Response& res) {
                    send(res, service.submit_move(req.matches[1], req.body));
                });
    server.Get("/api/v1/analysis", [&service](const httplib::Request& req, httplib::Response& res) {
        send(res, service.get_analysis(param(req, "partition"), param(req, "convention")));
    });

    bool mounted = false;
    if (static_dir && std::filesystem::is_directory(*static_dir))
        mounted = server.set_mount_point("/", static_dir->string());
    if (!mounted) {
        server.Get("/", [](const httplib::Request&, httplib::Response& res) {
            res.set_content("<!doctype html><title>rit</title><p>RIT service is running. "
                            "The web board is not installed; the JSON API is under /api/v1.</p>",
                            "text/html");
        });
    }

    server.set_error_handler([](const httplib::Request& req, httplib::Response& res) {
        if (res.status == 404 && req.path.rfind("/api/", 0) == 0)
            send(res, error_response(404, "not_found", "no route for " + req.method + " " + req.path));
    });
    server.set_exception_handler([](const httplib::Request&, httplib::Response& res, std::exception_ptr ep) {
        std::string msg = "internal error";
        try {
            std::rethrow_exception(ep);
        } catch (const std::exception& e) {
            msg = e.what();
        } catch (...) {
        }
        send(res, error_response(500, "internal", msg));
    });
}

int serve(const std::string& host, int port, const std::optional<std::filesystem::path>& static_dir,
          const std::optional<std::filesystem::path>& snapshot) {
    auto service = snapshot ? std::make_unique<GameService>(*snapshot) : std::make_unique<GameService>();
    httplib::Server server;
    bind_routes(server, *service, static_dir);
    std::cerr << "rit: serving on http://" << host << ":" << port << "/\n";
    if (!server.listen(host, port)) {
        std::cerr << "rit: cannot listen on " << host << ":" << port << '\n';
        return 1;
    }
    return 0;
}

}  // namespace rit::service
