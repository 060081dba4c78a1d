#include "iqa/audit_log.hpp"

#include <fcntl.h>
#include <unistd.h>

#include <cerrno>
#include <cstring>
#include <ctime>
#include <fstream>
#include <utility>

#include "iqa/errors.hpp"
#include "iqa/score.hpp"

namespace iqa {
namespace {

std::vector<AuditEvent> load_events(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) {
    throw Error(ErrorCode::SinkUnavailable, "cannot read audit log " + path.string());
  }
  std::vector<AuditEvent> events;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    try {
      events.push_back(audit_event_from_json(nlohmann::json::parse(line)));
    } catch (const std::exception& e) {
      throw Error(ErrorCode::SyntaxError, "malformed audit log line",
                  {{path.string() + ":" + std::to_string(line_no), e.what()}});
    }
    if (events.size() > 1 && events.back().sequence <= events[events.size() - 2].sequence) {
      throw Error(ErrorCode::SyntaxError, "audit log sequence not increasing",
                  {{path.string() + ":" + std::to_string(line_no), "sequence out of order"}});
    }
  }
  return events;
}

void write_all(int fd, const std::string& data, const std::filesystem::path& path) {
  const char* p = data.data();
  std::size_t left = data.size();
  while (left > 0) {
    const ssize_t n = ::write(fd, p, left);
    if (n < 0) {
      if (errno == EINTR) continue;
      throw Error(ErrorCode::SinkUnavailable,
                  "write to " + path.string() + " failed: " + std::strerror(errno));
    }
    p += n;
    left -= static_cast<std::size_t>(n);
  }
}

}  // namespace

std::string_view to_string(AuditAction action) noexcept {
  switch (action) {
    case AuditAction::CaseLoaded: return "CaseLoaded";
    case AuditAction::ScoreSet: return "ScoreSet";
    case AuditAction::ScoreChanged: return "ScoreChanged";
    case AuditAction::GateApplied: return "GateApplied";
    case AuditAction::ReportEmitted: return "ReportEmitted";
  }
  return "?";
}

std::optional<AuditAction> parse_audit_action(std::string_view text) noexcept {
  for (auto a : {AuditAction::CaseLoaded, AuditAction::ScoreSet, AuditAction::ScoreChanged,
                 AuditAction::GateApplied, AuditAction::ReportEmitted}) {
    if (to_string(a) == text) return a;
  }
  return std::nullopt;
}

bool requires_justification(AuditAction action) noexcept {
  return action == AuditAction::ScoreChanged || action == AuditAction::GateApplied;
}

std::string to_json_line(const AuditEvent& event) {
  nlohmann::json j = {
      {"sequence", event.sequence},
      {"timestamp", event.timestamp},
      {"actor", event.actor},
      {"action", std::string(to_string(event.action))},
      {"detail", event.detail},
      {"justification", event.justification},
  };
  return j.dump();
}

AuditEvent audit_event_from_json(const nlohmann::json& j) {
  AuditEvent e;
  e.sequence = j.at("sequence").get<std::uint64_t>();
  e.timestamp = j.at("timestamp").get<std::string>();
  e.actor = j.at("actor").get<std::string>();
  const auto action = parse_audit_action(j.at("action").get<std::string>());
  if (!action) throw std::invalid_argument("unknown audit action");
  e.action = *action;
  e.detail = j.value("detail", nlohmann::json::object());
  e.justification = j.value("justification", std::string{});
  return e;
}

std::string format_utc_timestamp(std::chrono::system_clock::time_point tp) {
  const std::time_t t = std::chrono::system_clock::to_time_t(tp);
  std::tm tm{};
  gmtime_r(&t, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

AuditLog::AuditLog(std::optional<std::filesystem::path> path, Clock clock)
    : path_(std::move(path)), clock_(std::move(clock)) {
  if (!clock_) clock_ = [] { return std::chrono::system_clock::now(); };
}

AuditLog::AuditLog(std::filesystem::path path, Clock clock)
    : AuditLog(std::optional<std::filesystem::path>(std::move(path)), std::move(clock)) {
  std::error_code ec;
  if (std::filesystem::exists(*path_, ec)) {
    try {
      events_ = load_events(*path_);
    } catch (const Error& e) {
      throw Error(ErrorCode::SinkUnavailable, std::string("audit log unusable: ") + e.what(),
                  e.findings());
    }
    return;
  }
  const int fd = ::open(path_->c_str(), O_WRONLY | O_CREAT | O_APPEND | O_CLOEXEC, 0644);
  if (fd < 0) {
    throw Error(ErrorCode::SinkUnavailable,
                "cannot create audit log " + path_->string() + ": " + std::strerror(errno));
  }
  ::close(fd);
}

AuditLog AuditLog::in_memory(Clock clock) { return AuditLog(std::nullopt, std::move(clock)); }

AuditLog::AuditLog(AuditLog&& other) noexcept
    : path_(std::move(other.path_)), clock_(std::move(other.clock_)) {
  std::lock_guard lock(other.mu_);
  events_ = std::move(other.events_);
}

AuditEvent AuditLog::append(AuditAction action, std::string actor, nlohmann::json detail,
                            std::string justification) {
  if (requires_justification(action) && !has_content(justification)) {
    throw Error(ErrorCode::JustificationRequired,
                std::string(to_string(action)) + " requires a justification");
  }
  std::lock_guard lock(mu_);
  AuditEvent event;
  event.sequence = events_.empty() ? 1 : events_.back().sequence + 1;
  event.timestamp = format_utc_timestamp(clock_());
  event.actor = std::move(actor);
  event.action = action;
  event.detail = detail.is_null() ? nlohmann::json::object() : std::move(detail);
  event.justification = std::move(justification);

  if (path_) {
    const int fd = ::open(path_->c_str(), O_WRONLY | O_CREAT | O_APPEND | O_CLOEXEC, 0644);
    if (fd < 0) {
      throw Error(ErrorCode::SinkUnavailable,
                  "cannot open audit log " + path_->string() + ": " + std::strerror(errno));
    }
    try {
      write_all(fd, to_json_line(event) + "\n", *path_);
      if (::fsync(fd) != 0) {
        throw Error(ErrorCode::SinkUnavailable, "fsync of " + path_->string() + " failed");
      }
    } catch (...) {
      ::close(fd);
      throw;
    }
    ::close(fd);
  }
  events_.push_back(event);
  return event;
}

std::uint64_t AuditLog::last_sequence() const {
  std::lock_guard lock(mu_);
  return events_.empty() ? 0 : events_.back().sequence;
}

std::size_t AuditLog::size() const {
  std::lock_guard lock(mu_);
  return events_.size();
}

std::vector<AuditEvent> AuditLog::events() const {
  std::lock_guard lock(mu_);
  return events_;
}

std::vector<AuditEvent> read_audit_log(const std::filesystem::path& path) {
  return load_events(path);
}

}  // namespace iqa
