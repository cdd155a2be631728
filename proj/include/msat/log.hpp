#pragma once

namespace msat {

enum class LogLevel { off = 0, error = 1, info = 2, debug = 3 };

void set_log_level(LogLevel level);
// Parses "off" | "error" | "info" | "debug"; anything else is ignored.
void set_log_level(const char* name);
// Reads MODP_SATAKE_LOG once at startup unless set_log_level was called.
LogLevel log_level();

void log_message(LogLevel level, const char* fmt, ...)
    __attribute__((format(printf, 2, 3)));

#define MSAT_LOG_INFO(...) ::msat::log_message(::msat::LogLevel::info, __VA_ARGS__)
#define MSAT_LOG_DEBUG(...) ::msat::log_message(::msat::LogLevel::debug, __VA_ARGS__)
#define MSAT_LOG_ERROR(...) ::msat::log_message(::msat::LogLevel::error, __VA_ARGS__)

}  // namespace msat
