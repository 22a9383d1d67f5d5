#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "rit/report_io.hpp"
#include "rit/solver.hpp"

namespace httplib {
class Server;
}

namespace rit::service {

enum class Mover { human, engine };
std::string_view to_string(Mover m) noexcept;

struct HistoryEntry {
    Mover mover = Mover::human;
    RitMove move;
    Partition before;
};

enum class Status { in_progress, finished };

struct GameSession {
    std::string id;
    Partition start;
    Partition position;
    Convention convention = Convention::normal;
    bool engine_first = false;
    std::vector<HistoryEntry> history;

    Status status() const noexcept { return is_terminal(position) ? Status::finished : Status::in_progress; }
    /// Whose turn it is; at a finished game, the player who cannot move.
    Mover to_move() const noexcept;
    /// Set once the game is over: the player who made the last move wins
    /// under normal play and loses under misère play.
    std::optional<Mover> winner() const noexcept;
    std::size_t seq() const noexcept { return history.size(); }
};

/// Starts a session; if engine_first, the engine's opening move is applied.
GameSession create_game(std::string id, Partition start, Convention c, bool engine_first);

/// Applies a move for `mover` and records it. Throws IllegalMove.
void play_move(GameSession& session, Mover mover, const RitMove& move);

/// Replays the history from the start position and checks it lands on the
/// stored position with the expected alternation of movers.
bool replay_consistent(const GameSession& session);

json session_json(const GameSession& session);

struct ApiResponse {
    int status = 200;
    std::string body;
};

/// Error body: {"error": {"code", "message", ...extra}}.
ApiResponse error_response(int status, std::string_view code, std::string_view message,
                           json extra = json::object());

/// Session store and the /api/v1 handlers, independent of the HTTP layer.
/// Handlers may be called concurrently; mutations of one session are
/// serialized by a per-session mutex.
class GameService {
public:
    GameService() = default;
    /// Sessions are appended as JSON lines to `snapshot` after every mutation,
    /// and reloaded from it if the file exists.
    explicit GameService(std::filesystem::path snapshot);

    ApiResponse create_game(const std::string& body);
    ApiResponse get_game(const std::string& id) const;
    ApiResponse submit_move(const std::string& id, const std::string& body);
    ApiResponse get_analysis(const std::optional<std::string>& partition,
                             const std::optional<std::string>& convention) const;

    std::optional<GameSession> find(const std::string& id) const;
    std::size_t session_count() const;

private:
    struct Slot {
        mutable std::mutex mutex;
        GameSession session;
    };

    std::shared_ptr<Slot> slot(const std::string& id) const;
    void persist(const GameSession& session);
    void load_snapshot();

    mutable std::mutex store_mutex_;
    std::map<std::string, std::shared_ptr<Slot>> sessions_;
    std::uint64_t next_id_ = 1;
    std::optional<std::filesystem::path> snapshot_;
    std::mutex snapshot_mutex_;
};

/// Registers the /api/v1 routes on `server`, plus static files from
/// `static_dir` at "/" when the directory exists.
void bind_routes(httplib::Server& server, GameService& service,
                 const std::optional<std::filesystem::path>& static_dir);

/// Blocks serving HTTP until the server is stopped.
int serve(const std::string& host, int port, const std::optional<std::filesystem::path>& static_dir,
          const std::optional<std::filesystem::path>& snapshot);

}  // namespace rit::service
