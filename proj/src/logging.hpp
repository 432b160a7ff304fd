#pragma once

#include <sstream>
#include <string>

namespace ordseek {

// Trace verbosity, controlled by the ORDSEEK_LOG environment variable:
// unset/"" or "off" -> 0, "info" -> 1, "debug" -> 2. Off by default.
int log_level();

void log_line(int level, const std::string& msg);

#define ORDSEEK_LOG_AT(lvl, expr)                        \
    do {                                                 \
        if (::ordseek::log_level() >= (lvl)) {           \
            std::ostringstream oss_;                     \
            oss_ << expr;                                \
            ::ordseek::log_line((lvl), oss_.str());      \
        }                                                \
    } while (0)

#define ORDSEEK_INFO(expr) ORDSEEK_LOG_AT(1, expr)
#define ORDSEEK_DEBUG(expr) ORDSEEK_LOG_AT(2, expr)

}  // namespace ordseek
