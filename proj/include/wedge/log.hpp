#pragma once

#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <string>

// Tiny leveled logger driven by WEDGE_LOG (error, info, debug); writes
// to stderr, defaults to error.
namespace wedge::log
{
enum class Level
{
  error = 0,
  info = 1,
  debug = 2,
};

inline Level level()
{
  static Level const cached = [] {
    char const * env = std::getenv("WEDGE_LOG");
    if (env == nullptr) return Level::error;
    if (std::strcmp(env, "debug") == 0) return Level::debug;
    if (std::strcmp(env, "info") == 0) return Level::info;
    return Level::error;
  }();
  return cached;
}

inline void emit(Level lv, char const * tag, std::string const & message)
{
  if (int(lv) <= int(level()))
    std::fprintf(stderr, "[%s] %s\n", tag, message.c_str());
}

inline void error(std::string const & message) { emit(Level::error, "error", message); }
inline void info(std::string const & message) { emit(Level::info, "info", message); }
inline void debug(std::string const & message) { emit(Level::debug, "debug", message); }
}  // namespace wedge::log
