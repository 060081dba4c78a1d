#pragma once

#include <chrono>
#include <cstdint>
#include <filesystem>
#include <functional>
#include <mutex>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

namespace iqa {

enum class AuditAction { CaseLoaded, ScoreSet, ScoreChanged, GateApplied, ReportEmitted };

std::string_view to_string(AuditAction action) noexcept;
std::optional<AuditAction> parse_audit_action(std::string_view text) noexcept;

// Actions that may not be recorded without a justification.
bool requires_justification(AuditAction action) noexcept;

struct AuditEvent {
  std::uint64_t sequence = 0;
  std::string timestamp;  // UTC, "YYYY-MM-DDTHH:MM:SSZ"
  std::string actor;
  AuditAction action = AuditAction::CaseLoaded;
  nlohmann::json detail = nlohmann::json::object();
  std::string justification;

  bool operator==(const AuditEvent&) const = default;
};

// One JSON object per line; keys sorted.
std::string to_json_line(const AuditEvent& event);
AuditEvent audit_event_from_json(const nlohmann::json& j);

std::string format_utc_timestamp(std::chrono::system_clock::time_point tp);

// Append-only JSON-Lines audit log. Sequence numbers are assigned here and
// increase by one per event; existing lines are never touched. A file-backed
// log fsyncs after every append. Appends are serialized by an internal
// mutex; one process should own a given file at a time.
class AuditLog {
 public:
  using Clock = std::function<std::chrono::system_clock::time_point()>;

  // Opens (creating if necessary) the log at `path` and resumes numbering
  // after its last event. Throws Error(SinkUnavailable) if the file cannot
  // be created or an existing line is not a valid event.
  explicit AuditLog(std::filesystem::path path, Clock clock = {});

  static AuditLog in_memory(Clock clock = {});

  AuditLog(AuditLog&& other) noexcept;
  AuditLog& operator=(AuditLog&&) = delete;
  AuditLog(const AuditLog&) = delete;
  AuditLog& operator=(const AuditLog&) = delete;

  // Throws Error(JustificationRequired) for ScoreChanged / GateApplied with
  // blank justification and Error(SinkUnavailable) if the write fails.
  AuditEvent append(AuditAction action, std::string actor, nlohmann::json detail,
                    std::string justification = {});

  std::uint64_t last_sequence() const;
  std::size_t size() const;
  std::vector<AuditEvent> events() const;
  const std::optional<std::filesystem::path>& path() const noexcept { return path_; }

 private:
  AuditLog(std::optional<std::filesystem::path> path, Clock clock);

  std::optional<std::filesystem::path> path_;
  Clock clock_;
  mutable std::mutex mu_;
  std::vector<AuditEvent> events_;
};

// Reads every event from a log file. Throws Error(SinkUnavailable) on I/O
// failure and Error(SyntaxError) on a malformed line.
std::vector<AuditEvent> read_audit_log(const std::filesystem::path& path);

}  // namespace iqa
