#include "msat/log.hpp"

#include <atomic>
#include <cstdarg>
#include <cstdio>
#include <cstdlib>
#include <cstring>

namespace msat {

namespace {

std::atomic<int> g_level{-1};  // -1: not initialized yet

int parse_level(const char* name) {
  if (!name) return -1;
  if (std::strcmp(name, "off") == 0) return 0;
  if (std::strcmp(name, "error") == 0) return 1;
  if (std::strcmp(name, "info") == 0) return 2;
  if (std::strcmp(name, "debug") == 0) return 3;
  return -1;
}

int effective_level() {
  int lv = g_level.load(std::memory_order_relaxed);
  if (lv >= 0) return lv;
  int env = parse_level(std::getenv("MODP_SATAKE_LOG"));
  if (env < 0) env = 1;  // default: errors only
  g_level.store(env, std::memory_order_relaxed);
  return env;
}

}  // namespace

void set_log_level(LogLevel level) {
  g_level.store(static_cast<int>(level), std::memory_order_relaxed);
}

void set_log_level(const char* name) {
  int lv = parse_level(name);
  if (lv >= 0) g_level.store(lv, std::memory_order_relaxed);
}

LogLevel log_level() { return static_cast<LogLevel>(effective_level()); }

void log_message(LogLevel level, const char* fmt, ...) {
  if (static_cast<int>(level) > effective_level()) return;
  const char* tag = level == LogLevel::error  ? "error"
                    : level == LogLevel::info ? "info"
                                              : "debug";
  std::fprintf(stderr, "[msat %s] ", tag);
  va_list args;
  va_start(args, fmt);
  std::vfprintf(stderr, fmt, args);
  va_end(args);
  std::fputc('\n', stderr);
}

}  // namespace msat
