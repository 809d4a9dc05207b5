#pragma once

#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <string>

namespace ems::log {

enum class Level { error = 0, warn = 1, info = 2, debug = 3 };

// Diagnostics go to stderr; level comes from EMS_LOG (error|warn|info|debug).
inline Level level() {
    static Level lvl = [] {
        const char* e = std::getenv("EMS_LOG");
        if (!e) return Level::warn;
        if (std::strcmp(e, "error") == 0) return Level::error;
        if (std::strcmp(e, "warn") == 0) return Level::warn;
        if (std::strcmp(e, "info") == 0) return Level::info;
        if (std::strcmp(e, "debug") == 0) return Level::debug;
        return Level::warn;
    }();
    return lvl;
}

inline void emit(Level lvl, const char* tag, const std::string& msg) {
    if (lvl <= level()) std::fprintf(stderr, "[%s] %s\n", tag, msg.c_str());
}

inline void error(const std::string& m) { emit(Level::error, "error", m); }
inline void warn(const std::string& m) { emit(Level::warn, "warn", m); }
inline void info(const std::string& m) { emit(Level::info, "info", m); }
inline void debug(const std::string& m) { emit(Level::debug, "debug", m); }

}  // namespace ems::log
