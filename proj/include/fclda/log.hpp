#pragma once

#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <string>

namespace fclda::log {

enum class Level { Error = 0, Info = 1, Debug = 2 };

/// Threshold from FCLDA_LOG ({error, info, debug}); errors only by default.
inline Level threshold() {
    static const Level level = [] {
        const char* env = std::getenv("FCLDA_LOG");
        if (env == nullptr) return Level::Error;
        if (std::strcmp(env, "debug") == 0) return Level::Debug;
        if (std::strcmp(env, "info") == 0) return Level::Info;
        return Level::Error;
    }();
    return level;
}

inline void write(Level level, const char* tag, const std::string& msg) {
    if (level <= threshold()) std::fprintf(stderr, "[fclda %s] %s\n", tag, msg.c_str());
}

inline void error(const std::string& msg) { write(Level::Error, "error", msg); }
inline void info(const std::string& msg) { write(Level::Info, "info", msg); }
inline void debug(const std::string& msg) { write(Level::Debug, "debug", msg); }

}  // namespace fclda::log
