#include "hns/log.hpp"

#include <cstdio>
#include <cstdlib>

namespace hns {

namespace {

LogLevel parse_level() {
    const char* env = std::getenv("HNS_LOG");
    if (!env) return LogLevel::warn;
    const std::string v(env);
    if (v == "debug") return LogLevel::debug;
    if (v == "info") return LogLevel::info;
    if (v == "warn") return LogLevel::warn;
    if (v == "error") return LogLevel::error;
    if (v == "off" || v == "silent") return LogLevel::off;
    return LogLevel::warn;
}

const char* level_name(LogLevel l) {
    switch (l) {
        case LogLevel::debug: return "debug";
        case LogLevel::info: return "info";
        case LogLevel::warn: return "warn";
        case LogLevel::error: return "error";
        default: return "?";
    }
}

}  // namespace

LogLevel log_level() {
    static const LogLevel level = parse_level();
    return level;
}

void log_message(LogLevel level, const std::string& msg) {
    if (level < log_level()) return;
    std::fprintf(stderr, "[hns %s] %s\n", level_name(level), msg.c_str());
    std::fflush(stderr);
}

}  // namespace hns
